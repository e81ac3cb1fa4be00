# algebra/cli.py
"""
Subcomandos de `python manage.py leavitt`. Cada subcomando produce un Outcome con la carga JSON
y el texto para humanos; ambos llevan la misma información.
"""
import argparse
import dataclasses
import json
import logging
from dataclasses import dataclass

from sympy import isprime

from .exceptions import CertificateFormatError
from .graph_core import load_graph
from .group_words import format_word
from .ideal_tools import (
    acyclic_dimension,
    certificate_from_json,
    certificate_to_json,
    demonstrate_simplicity,
    extract_vertex_projection,
    projection_scalar,
    simplicity_report,
    verify_certificate,
)
from .leavitt_front import parse_expression, phi_embed
from .scalars import format_scalar, make_field
from .skew_ring import grade_decompose, mul_skew
from .suites import run_all

logger = logging.getLogger(__name__)


@dataclass
class RunConfig:
    graph_path: str
    subcommand: str
    field: str = "rationals"
    output_format: str = "text"
    seed: int = 1729
    options: dict = dataclasses.field(default_factory=dict)


@dataclass
class Outcome:
    payload: dict
    text: str
    ok: bool = True
    failure: str = ""


def field_selector(text):
    """Tipo argparse de --field: 'rationals' o un primo."""
    if text == "rationals":
        return text
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'rationals' or a prime, got {text!r}") from None
    if not isprime(p):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return str(p)


def _subsets_text(subsets):
    return ", ".join("{" + ", ".join(sorted(h)) + "}" for h in subsets)


def _element(config, g, K, key="expr"):
    return phi_embed(parse_expression(config.options[key], g), g, K)


# ----------------------------
# Subcomandos
# ----------------------------
def run_analyze(config, g, K):
    report = simplicity_report(g)
    payload = report.to_json(g)
    verdict = "holds" if report.condition_L else f"fails (cycle {report.witness} has no exit)"
    lines = [
        f"condition (L): {verdict}",
        f"hereditary saturated subsets: {_subsets_text(report.hs_subsets)}",
    ]
    if payload["hs_witness"] is not None:
        lines.append(f"proper hereditary saturated subset: {_subsets_text([payload['hs_witness']])}")
    lines.append(f"criteria met: {str(report.criteria_met).lower()}")
    return Outcome(payload, "\n".join(lines))


def run_phi(config, g, K):
    x = _element(config, g, K)
    return Outcome({"expr": config.options["expr"], "element": str(x)}, str(x))


def run_mul(config, g, K):
    x = mul_skew(_element(config, g, K, "lhs"), _element(config, g, K, "rhs"))
    return Outcome({"lhs": config.options["lhs"], "rhs": config.options["rhs"], "element": str(x)}, str(x))


def run_normal_form(config, g, K):
    x = _element(config, g, K)
    grades = grade_decompose(x)
    lines = [str(x)] + [f"grade {z}: {component}" for z, component in grades.items()]
    payload = {"element": str(x), "grades": {str(z): str(component) for z, component in grades.items()}}
    return Outcome(payload, "\n".join(lines))


def _steps_text(cert):
    return [f"{step.side} {step.multiplier}" for step in cert.steps]


def run_reduce(config, g, K):
    v, cert = extract_vertex_projection(_element(config, g, K))
    scalar = format_scalar(K, projection_scalar(cert.claimed_result, v))
    payload = {"vertex": v, "scalar": scalar, "certificate": certificate_to_json(cert)}
    lines = [f"vertex: {v}", f"scalar: {scalar}", f"source: {cert.source}"]
    lines += _steps_text(cert)
    lines.append(f"result: {cert.claimed_result}")
    return Outcome(payload, "\n".join(lines))


def run_dimension(config, g, K):
    n = acyclic_dimension(g, K)
    return Outcome({"dimension": n}, str(n))


def run_check(config, g, K):
    trials = config.options.get("trials")
    results = run_all(g, K, config.seed, trials)
    lines = []
    for result in results:
        lines.append(str(result))
        lines += [f"  {message}" for message in result.failures[:5]]
    failed = [r.name for r in results if not r.passed]
    payload = {"seed": config.seed, "suites": [r.to_json() for r in results], "passed": not failed}
    return Outcome(payload, "\n".join(lines), ok=not failed, failure=f"failing suites: {', '.join(failed)}")


def run_demo_simplicity(config, g, K):
    demo = demonstrate_simplicity(g, _element(config, g, K))
    payload = {
        "seed_vertex": demo.seed_vertex,
        "certificates": {v: certificate_to_json(c) for v, c in sorted(demo.certificates.items())},
        "provenance": dict(sorted(demo.provenance.items())),
        "spanning": [
            {"p": format_word(e.p), "q": format_word(e.q), "element": str(e.element), "vertices": list(e.vertices)}
            for e in demo.spanning
        ],
    }
    lines = [f"seed vertex: {demo.seed_vertex}"]
    for v, origin in sorted(demo.provenance.items()):
        source = f" from {', '.join(origin['from'])}" if origin["from"] else ""
        lines.append(f"{v}: {origin['move']}{source}, result {demo.certificates[v].claimed_result}")
    lines.append(f"spanning: {len(demo.spanning)} monomials recomposed from vertex projections")
    return Outcome(payload, "\n".join(lines))


def _stored_certificates(data):
    """Acepta un certificado suelto o la salida JSON de reduce / demo-simplicity."""
    if not isinstance(data, dict):
        raise CertificateFormatError("certificate file must hold a JSON object")
    if "certificates" in data:
        return dict(data["certificates"])
    if "certificate" in data:
        return {data.get("vertex", "certificate"): data["certificate"]}
    return {"certificate": data}


def run_verify(config, g, K):
    path = config.options["certificate"]
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except OSError as exc:
        raise CertificateFormatError(f"cannot read certificate file {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise CertificateFormatError(f"invalid JSON in {path}: {exc}") from None
    verdicts = {
        name: verify_certificate(certificate_from_json(raw, g, K))
        for name, raw in sorted(_stored_certificates(data).items())
    }
    invalid = [name for name, ok in verdicts.items() if not ok]
    lines = [f"{name}: {'valid' if ok else 'invalid'}" for name, ok in verdicts.items()]
    payload = {"valid": not invalid, "certificates": verdicts}
    return Outcome(payload, "\n".join(lines), ok=not invalid, failure=f"invalid certificates: {', '.join(invalid)}")


HANDLERS = {
    "analyze": run_analyze,
    "phi": run_phi,
    "mul": run_mul,
    "normal-form": run_normal_form,
    "reduce": run_reduce,
    "dimension": run_dimension,
    "check": run_check,
    "demo-simplicity": run_demo_simplicity,
    "verify": run_verify,
}


def dispatch(config, g, K):
    logger.info("%s on %s over %s", config.subcommand, config.graph_path, config.field)
    return HANDLERS[config.subcommand](config, g, K)


def execute(config):
    return dispatch(config, load_graph(config.graph_path), make_field(config.field))


def render(outcome, output_format):
    if output_format == "json":
        return json.dumps(outcome.payload, sort_keys=True, ensure_ascii=False, indent=2)
    return outcome.text


def cli_run(argv, stdout=None, stderr=None):
    """Ejecuta `leavitt` en el proceso actual; devuelve el código de salida (0, 1 o 2)."""
    from .management.commands.leavitt import Command

    command = Command(stdout=stdout, stderr=stderr)
    try:
        command.run_from_argv(["manage.py", "leavitt", *argv])
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    return 0
