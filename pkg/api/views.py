from django.conf import settings
from django.http import JsonResponse

from algebra.cli import RunConfig, dispatch
from algebra.exceptions import LeavittError
from algebra.graph_core import build_graph
from algebra.scalars import make_field

from .decorators import leavitt_endpoint


class MissingFieldError(LeavittError):
    def __init__(self, name):
        super().__init__(f"Falta el campo requerido: {name}")
        self.name = name


# ----------------------------
# Grafo, cuerpo y opciones a partir del cuerpo de la petición
# ----------------------------
def _run(body, subcommand, *required):
    if "graph" not in body:
        raise MissingFieldError("graph")
    for name in required:
        if not isinstance(body.get(name), str):
            raise MissingFieldError(name)
    config = RunConfig(
        graph_path="<request>",
        subcommand=subcommand,
        field=str(body.get("field", settings.LEAVITT_FIELD)),
        output_format="json",
        options={name: body[name] for name in required},
    )
    g = build_graph(body["graph"])
    outcome = dispatch(config, g, make_field(config.field))
    return JsonResponse(outcome.payload, status=200, json_dumps_params={"ensure_ascii": False})


# ============================
# Criterios de simplicidad
# ============================
@leavitt_endpoint
def analyze(request, body):
    return _run(body, "analyze")


# ============================
# Imagen φ de una expresión
# ============================
@leavitt_endpoint
def phi(request, body):
    return _run(body, "phi", "expr")


# ============================
# Certificado de proyección de vértice
# ============================
@leavitt_endpoint
def reduce(request, body):
    return _run(body, "reduce", "expr")


# ============================
# Dimensión (solo grafos acíclicos)
# ============================
@leavitt_endpoint
def dimension(request, body):
    return _run(body, "dimension")
