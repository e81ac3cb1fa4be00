import json
from unittest import mock

from django.test import SimpleTestCase

from algebra.sampling import CATALOG


class EndpointTests(SimpleTestCase):
    def post(self, url, body):
        return self.client.post(url, data=json.dumps(body), content_type="application/json")

    def test_phi(self):
        response = self.post("/api/phi/", {"graph": CATALOG["R2"], "expr": "e* e"})
        self.assertEqual(response.status_code, 200)
        self.assertEqual(response.json(), {"expr": "e* e", "element": "[1*[v]]·δ(0)"})

    def test_phi_over_prime_field(self):
        body = {"graph": CATALOG["R2"], "expr": "3 e e* + 4 f f*", "field": 3}
        self.assertEqual(self.post("/api/phi/", body).json()["element"], "[1*[f]]·δ(0)")

    def test_analyze(self):
        data = self.post("/api/analyze/", {"graph": CATALOG["T"]}).json()
        self.assertTrue(data["condition_L"])
        self.assertFalse(data["criteria_met"])
        self.assertEqual(data["hs_witness"], ["w"])

    def test_reduce(self):
        data = self.post("/api/reduce/", {"graph": CATALOG["A2"], "expr": "e"}).json()
        self.assertEqual(data["vertex"], "v2")
        self.assertIn("steps", data["certificate"])

    def test_dimension(self):
        self.assertEqual(self.post("/api/dimension/", {"graph": CATALOG["A3"]}).json(), {"dimension": 9})
        response = self.post("/api/dimension/", {"graph": CATALOG["R2"]})
        self.assertEqual(response.status_code, 400)
        self.assertEqual(response.json()["error"], "graph has a cycle")


class RequestErrorTests(SimpleTestCase):
    def test_method_not_allowed(self):
        response = self.client.get("/api/phi/")
        self.assertEqual(response.status_code, 405)
        self.assertEqual(response.json()["error"], "Método no permitido")

    def test_invalid_json(self):
        response = self.client.post("/api/phi/", data="{not json", content_type="application/json")
        self.assertEqual(response.status_code, 400)
        self.assertEqual(response.json()["error"], "El cuerpo de la petición no es JSON válido")
        response = self.client.post("/api/phi/", data="[1, 2]", content_type="application/json")
        self.assertEqual(response.status_code, 400)

    def test_missing_fields(self):
        response = self.client.post("/api/phi/", data=json.dumps({"graph": CATALOG["R2"]}), content_type="application/json")
        self.assertEqual(response.status_code, 400)
        self.assertEqual(response.json()["error"], "Falta el campo requerido: expr")
        response = self.client.post("/api/analyze/", data="{}", content_type="application/json")
        self.assertEqual(response.json()["error"], "Falta el campo requerido: graph")

    def test_domain_errors_are_bad_requests(self):
        body = {"graph": CATALOG["R2"], "expr": "e +"}
        response = self.client.post("/api/phi/", data=json.dumps(body), content_type="application/json")
        self.assertEqual(response.status_code, 400)
        body = {"graph": {"vertices": ["v"], "edges": [{"id": "e", "src": "v", "dst": "x"}]}}
        response = self.client.post("/api/analyze/", data=json.dumps(body), content_type="application/json")
        self.assertEqual(response.status_code, 400)

    def test_unexpected_error_is_logged(self):
        body = json.dumps({"graph": CATALOG["R2"]})
        with mock.patch("api.views.dispatch", side_effect=RuntimeError("boom")):
            with self.assertLogs("api.decorators", level="ERROR"):
                response = self.client.post("/api/analyze/", data=body, content_type="application/json")
        self.assertEqual(response.status_code, 500)
