import json
import logging
from functools import wraps

from django.http import JsonResponse
from django.views.decorators.csrf import csrf_exempt

from algebra.exceptions import LeavittError

logger = logging.getLogger(__name__)


# ----------------------------
# Endpoint del motor: POST con cuerpo JSON
# ----------------------------
def leavitt_endpoint(view_func):
    """
    Valida método y cuerpo y traduce errores: LeavittError -> 400, cualquier otro -> 500.
    La vista recibe el cuerpo ya decodificado.
    """
    @csrf_exempt
    @wraps(view_func)
    def wrapper(request, *args, **kwargs):
        if request.method != "POST":
            return JsonResponse({"error": "Método no permitido"}, status=405)
        try:
            body = json.loads(request.body)
        except (json.JSONDecodeError, UnicodeDecodeError):
            return JsonResponse({"error": "El cuerpo de la petición no es JSON válido"}, status=400)
        if not isinstance(body, dict):
            return JsonResponse({"error": "El cuerpo de la petición debe ser un objeto JSON"}, status=400)
        try:
            return view_func(request, body, *args, **kwargs)
        except LeavittError as exc:
            return JsonResponse({"error": str(exc)}, status=400)
        except Exception as exc:
            logger.exception("unexpected error in %s", view_func.__name__)
            return JsonResponse({"error": f"Error interno: {exc}"}, status=500)
    return wrapper
