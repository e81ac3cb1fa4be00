# algebra/ideal_tools.py
"""
Reducción constructiva de ideales: búsqueda de desviaciones de un ciclo, reducción de un
elemento no nulo a la fibra neutra, extracción de una proyección de vértice, propagación por
conjuntos hereditarios y saturados, y los criterios de simplicidad.

Toda operación devuelve certificados: cadenas de multiplicadores por izquierda (L) o derecha (R)
que se pueden reproducir con mul_skew.
"""
import logging
import math
from dataclasses import dataclass, field

from django.conf import settings
from sympy.polys.matrices import DomainMatrix

from .diagonal_algebra import indicator, mul_diag, path_indicator, refine_to_depth, vertex_indicator
from .exceptions import (
    CertificateFormatError,
    ConditionLViolated,
    CriteriaNotMet,
    GraphHasCycleError,
    LeavittError,
    PreconditionError,
    ReductionInvariantError,
    ZeroInputError,
)
from .graph_core import condition_L, enumerate_hs_subsets, is_acyclic, partition_basis, paths_from, trivial
from .group_words import NEUTRAL, FormKind, enumerate_forms, format_word, neg, pos, unified
from .leavitt_front import path_monomial, phi_embed
from .notation import parse_skew
from .scalars import make_field
from .skew_ring import add_scale, monomial, mul_skew, projection, scale_skew, skew

logger = logging.getLogger(__name__)


# ----------------------------
# Certificados
# ----------------------------
@dataclass(frozen=True)
class Step:
    side: str  # "L" | "R"
    multiplier: object


@dataclass(frozen=True)
class Certificate:
    source: object
    steps: tuple
    claimed_result: object


@dataclass(frozen=True)
class CombinedCertificate:
    """Suma de varias cadenas; el resultado declarado es la suma de los resultados de las partes."""

    parts: tuple
    claimed_result: object


def replay(source, steps):
    current = source
    for step in steps:
        if step.side == "L":
            current = mul_skew(step.multiplier, current)
        elif step.side == "R":
            current = mul_skew(current, step.multiplier)
        else:
            raise PreconditionError(f"unknown side {step.side!r}")
    return current


def verify_certificate(cert):
    """Reproduce la cadena y compara exactamente; False si algo no cuadra."""
    try:
        if isinstance(cert, CombinedCertificate):
            if not cert.parts or not all(verify_certificate(part) for part in cert.parts):
                return False
            total = cert.parts[0].claimed_result
            for part in cert.parts[1:]:
                total = total + part.claimed_result
            return total == cert.claimed_result and not cert.claimed_result.is_zero
        return not cert.claimed_result.is_zero and replay(cert.source, cert.steps) == cert.claimed_result
    except LeavittError as exc:
        logger.info("certificate replay failed: %s", exc)
        return False


class _Chain:
    """Acumula multiplicadores sobre un elemento en curso."""

    def __init__(self, source, stage=""):
        self.source = source
        self.current = source
        self.steps = []
        self.stage = stage

    def left(self, multiplier, note=""):
        self.current = mul_skew(multiplier, self.current)
        self.steps.append(Step("L", multiplier))
        logger.debug("%s %s: L %s -> %s", self.stage, note, multiplier, self.current)
        return self.current

    def right(self, multiplier, note=""):
        self.current = mul_skew(self.current, multiplier)
        self.steps.append(Step("R", multiplier))
        logger.debug("%s %s: R %s -> %s", self.stage, note, multiplier, self.current)
        return self.current

    def certificate(self):
        return Certificate(self.source, tuple(self.steps), self.current)

    @classmethod
    def resume(cls, cert, stage=""):
        chain = cls(cert.source, stage)
        chain.current = cert.claimed_result
        chain.steps = list(cert.steps)
        return chain


def certificate_to_json(cert):
    if isinstance(cert, CombinedCertificate):
        return {"parts": [certificate_to_json(p) for p in cert.parts], "result": str(cert.claimed_result)}
    return {
        "source": str(cert.source),
        "steps": [{"side": s.side, "mul": str(s.multiplier)} for s in cert.steps],
        "result": str(cert.claimed_result),
    }


def certificate_from_json(data, g, K):
    try:
        if "parts" in data:
            parts = tuple(certificate_from_json(p, g, K) for p in data["parts"])
            return CombinedCertificate(parts, parse_skew(data["result"], g, K))
        steps = tuple(Step(s["side"], parse_skew(s["mul"], g, K)) for s in data["steps"])
        return Certificate(parse_skew(data["source"], g, K), steps, parse_skew(data["result"], g, K))
    except (KeyError, TypeError) as exc:
        raise CertificateFormatError(f"malformed certificate: missing or invalid {exc}") from None


# ----------------------------
# Desviación de un ciclo
# ----------------------------
@dataclass(frozen=True)
class CycleDeviation:
    m: int
    t: object  # extensión desde r(b), |t| <= |b|, t != b
    index: object  # b^m t
    right_index: object  # b^{m-1} t


def cycle_exit_search(g, b, x_b):
    """
    Para un ciclo b y 0 != x_b ∈ D_b, busca m >= 1 y t con x_b·1_{b^m t} != 0 y t != b.

    Se toma el m más grande en [1, M] con x_b·1_{b^m} != 0, M = max(1, ceil(D/|b|)) y D la
    profundidad de x_b, y se recorre la partición de X_{b^m} por extensiones de longitud |b|.
    """
    if not b.is_closed:
        raise PreconditionError(f"{b} is not a closed path")
    if x_b.is_zero:
        raise ZeroInputError()
    K = x_b.field
    if mul_diag(x_b, path_indicator(g, K, b)) != x_b:
        raise PreconditionError(f"{x_b} is not in D_{b}")

    ceiling = max(1, math.ceil(x_b.max_depth / len(b)))
    m = max(k for k in range(1, ceiling + 1) if not mul_diag(x_b, path_indicator(g, K, b.power(k))).is_zero)
    base = b.power(m)
    for index in partition_basis(g, base, len(b)):
        t = index.drop(len(base))
        if t.edges == b.edges:
            continue
        if not mul_diag(x_b, path_indicator(g, K, index)).is_zero:
            right_index = b.power(m - 1).concat(t)
            return CycleDeviation(m, t, index, right_index)
    raise ConditionLViolated(b)


# ----------------------------
# Reducción a la fibra neutra
# ----------------------------
def _require_condition_L(g):
    verdict = condition_L(g)
    if not verdict.holds:
        raise ConditionLViolated(verdict.witness)


def _non_neutral(x):
    return [p for p in x.keys() if not p.is_neutral]


def _pull(chain, g, K, stage):
    """Lleva a la fibra neutra la clave de menor longitud (desempate lexicográfico)."""
    c = min((unified(p)[0] for p in _non_neutral(chain.current)), key=lambda a: (len(a), a.edges))
    return chain.left(monomial(vertex_indicator(g, K, c.target), neg(c)), f"pull {c}")


def _check_chain_shape(x):
    """Claves no neutras: ciclos en un mismo vértice, cada uno comienzo del siguiente."""
    if x.fiber(NEUTRAL).is_zero:
        raise ReductionInvariantError(f"neutral fiber vanished in {x}")
    paths = sorted((unified(p)[0] for p in _non_neutral(x)), key=lambda a: (len(a), a.edges))
    for p in _non_neutral(x):
        if p.kind is not FormKind.POS:
            raise ReductionInvariantError(f"key {format_word(p)} is not a path")
    if not paths:
        return
    base = paths[0].source
    for prev, nxt in zip(paths, paths[1:]):
        if not nxt.startswith(prev):
            raise ReductionInvariantError(f"{prev} is not the beginning of {nxt}")
    for a in paths:
        if a.source != base or a.target != base:
            raise ReductionInvariantError(f"key {a} is not a closed path at {base}")


def ideal_reduce(x):
    """Certificado cuyo resultado es no nulo y vive sólo en la fibra neutra."""
    if x.is_zero:
        raise ZeroInputError()
    g, K = x.graph, x.field
    _require_condition_L(g)
    chain = _Chain(x, "reduce")
    if x.keys() == [NEUTRAL]:
        return chain.certificate()

    # Paso 1: multiplicar a derecha por 1_{b_m}δ_{b_m} con |b_m| máxima
    negatives = [unified(p)[1] for p in x.keys() if not p.is_neutral and not unified(p)[1].is_trivial]
    if negatives:
        b_m = min(negatives, key=lambda b: (-len(b), b.edges))
        chain.right(monomial(path_indicator(g, K, b_m), pos(b_m)), "step 1")
        for p in chain.current.keys():
            if p.kind not in (FormKind.POS, FormKind.NEUTRAL):
                raise ReductionInvariantError(f"step 1 left key {format_word(p)}")
        if chain.current.is_zero:
            raise ReductionInvariantError("step 1 produced zero")

    # Paso 2: aislar los comienzos de la clave más larga y cerrarlos en un vértice
    keys = _non_neutral(chain.current)
    if keys:
        c_n = min((p.a for p in keys), key=lambda a: (-len(a), a.edges))
        chain.left(projection(g, K, c_n), "step 2")
        chain.right(projection(g, K, trivial(c_n.target)), "step 2")
        chain.left(projection(g, K, trivial(c_n.source)), "step 2")
        if chain.current.is_zero:
            raise ReductionInvariantError("step 2 produced zero")
        if chain.current.fiber(NEUTRAL).is_zero:
            _pull(chain, g, K, "step 2")
        _check_chain_shape(chain.current)

    # Paso 3: cada ronda elimina al menos una fibra no neutra
    while _non_neutral(chain.current):
        before = len(_non_neutral(chain.current))
        b = min((p.a for p in _non_neutral(chain.current)), key=lambda a: (-len(a), a.edges))
        x_b = chain.current.fiber(pos(b))
        found = cycle_exit_search(g, b, x_b)
        chain.left(projection(g, K, b.power(found.m)), "step 3")
        chain.right(projection(g, K, found.right_index), "step 3")
        if chain.current.is_zero:
            raise ReductionInvariantError("step 3 produced zero")
        _pull(chain, g, K, "step 3")
        _check_chain_shape(chain.current)
        if len(_non_neutral(chain.current)) >= before:
            raise ReductionInvariantError("step 3 did not reduce the number of fibers")

    return chain.certificate()


# ----------------------------
# Proyección de vértice
# ----------------------------
def _collapse_scalar(d, path):
    """λ si d = λ·1_path (forma normal de un solo término), None en otro caso."""
    expected = path_indicator(d.graph, d.field, path)
    if len(d.terms) != 1 or d.terms[0][0] != expected.terms[0][0]:
        return None
    return d.terms[0][1]


def projection_scalar(x, v):
    """λ si x = λ·1_vδ_0 con λ != 0; None en otro caso."""
    if x.keys() != [NEUTRAL]:
        return None
    return _collapse_scalar(x.fiber(NEUTRAL), trivial(v))


def extract_vertex_projection(x):
    """Devuelve (v, certificado) con resultado λ·1_vδ_0, λ != 0."""
    g, K = x.graph, x.field
    chain = _Chain.resume(ideal_reduce(x), "extract")
    x0 = chain.current.fiber(NEUTRAL)

    v = next(v for v in g.vertices if not mul_diag(vertex_indicator(g, K, v), x0).is_zero)
    if g.is_sink(v):
        chain.left(projection(g, K, trivial(v)), f"sink {v}")
        vertex = v
    else:
        depth = max(1, x0.max_depth)
        c = next(
            (c for c in partition_basis(g, v, depth) if not mul_diag(path_indicator(g, K, c), x0).is_zero),
            None,
        )
        if c is None:
            raise ReductionInvariantError(f"no piece of the partition of X_{v} meets {x0}")
        chain.left(projection(g, K, c), f"collapse on {c}")
        if _collapse_scalar(chain.current.fiber(NEUTRAL), c) is None:
            raise ReductionInvariantError(f"1_{c} times {x0} is not a multiple of 1_{c}")
        chain.left(monomial(vertex_indicator(g, K, c.target), neg(c)), "conjugate")
        chain.right(monomial(path_indicator(g, K, c), pos(c)), "conjugate")
        vertex = c.target

    if projection_scalar(chain.current, vertex) is None:
        raise ReductionInvariantError(f"result {chain.current} is not a multiple of 1_{vertex}δ_0")
    logger.info("extracted vertex projection at %s", vertex)
    return vertex, chain.certificate()


# ----------------------------
# Propagación por conjuntos hereditarios y saturados
# ----------------------------
@dataclass(frozen=True)
class Hereditary:
    edge: str


@dataclass(frozen=True)
class Saturation:
    pass


def propagate_projection(g, K, v, direction):
    """
    Hereditary(e): 1_{s(e)}δ_0 -> 1_{r(e)}δ_0 por (1_{e⁻¹}δ_{e⁻¹})·(1_vδ_0)·(1_eδ_e).
    Saturation: 1_vδ_0 = Σ_{s(e)=v} (1_eδ_e)·(1_{r(e)}δ_0)·(1_{e⁻¹}δ_{e⁻¹}).
    """
    g.check_vertex(v)
    if isinstance(direction, Hereditary):
        e = g.edge(direction.edge)
        if e.src != v:
            raise PreconditionError(f"edge {e.id} does not start at {v}")
        path = g.path([e.id])
        chain = _Chain(projection(g, K, trivial(v)), "hereditary")
        chain.right(monomial(path_indicator(g, K, path), pos(path)), e.id)
        chain.left(monomial(vertex_indicator(g, K, e.dst), neg(path)), e.id)
        return chain.certificate()

    if g.is_sink(v):
        raise PreconditionError(f"{v} is a sink; saturation needs an emitter")
    parts = []
    for edge_id in g.out_edges[v]:
        path = g.path([edge_id])
        chain = _Chain(projection(g, K, trivial(path.target)), "saturation")
        chain.left(monomial(path_indicator(g, K, path), pos(path)), edge_id)
        chain.right(monomial(vertex_indicator(g, K, path.target), neg(path)), edge_id)
        parts.append(chain.certificate())
    total = parts[0].claimed_result
    for part in parts[1:]:
        total = total + part.claimed_result
    return CombinedCertificate(tuple(parts), total)


# ----------------------------
# Criterios de simplicidad
# ----------------------------
@dataclass(frozen=True)
class SimplicityReport:
    condition_L: bool
    witness: object
    hs_subsets: tuple
    criteria_met: bool

    def hs_witness(self, g):
        """Primer subconjunto hereditario y saturado propio y no vacío, si existe."""
        for h in self.hs_subsets:
            if h and len(h) < len(g.vertices):
                return h
        return None

    def to_json(self, g):
        hs_witness = self.hs_witness(g)
        return {
            "condition_L": self.condition_L,
            "witness": str(self.witness) if self.witness is not None else None,
            "hs_subsets": [sorted(h) for h in self.hs_subsets],
            "hs_witness": sorted(hs_witness) if hs_witness is not None else None,
            "criteria_met": self.criteria_met,
            "vertices": list(g.vertices),
        }


def simplicity_report(g, cap=None):
    verdict = condition_L(g)
    subsets = tuple(enumerate_hs_subsets(g, cap))
    trivial_only = subsets == (frozenset(), frozenset(g.vertices))
    return SimplicityReport(verdict.holds, verdict.witness, subsets, verdict.holds and trivial_only)


@dataclass(frozen=True)
class SpanEntry:
    """1_p·1_q δ_q = Σ_v (1_vδ_0)·(1_p·1_q δ_q) sobre los vértices v de su soporte."""

    p: object
    q: object
    element: object
    vertices: tuple


@dataclass
class SimplicityDemonstration:
    seed_vertex: str
    certificates: dict = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)
    spanning: list = field(default_factory=list)


def _span_record(g, K, depth):
    entries = []
    forms = enumerate_forms(g, depth)
    for p in forms:
        for q in forms:
            coeff = mul_diag(indicator(g, K, p), indicator(g, K, q))
            if coeff.is_zero:
                continue
            element = monomial(coeff, q)
            vertices = tuple(
                v for v in g.vertices if not mul_diag(vertex_indicator(g, K, v), coeff).is_zero
            )
            recomposed = skew(g, K, [])
            for v in vertices:
                recomposed = add_scale(K.one, recomposed, K.one, mul_skew(projection(g, K, trivial(v)), element))
            if recomposed != element:
                raise ReductionInvariantError(f"vertex projections do not recompose {element}")
            entries.append(SpanEntry(p, q, element, vertices))
    return entries


def demonstrate_simplicity(g, x, depth=None, cap=None):
    """Certifica 1_vδ_0 ∈ I(x) para todo vértice v y registra cómo los 1_vδ_0 generan todo."""
    depth = settings.LEAVITT_SPAN_DEPTH if depth is None else depth
    report = simplicity_report(g, cap)
    if not report.criteria_met:
        raise CriteriaNotMet(f"simplicity criteria fail: condition (L) {report.condition_L}, "
                             f"{len(report.hs_subsets)} hereditary saturated subsets")
    if x.is_zero:
        raise ZeroInputError()
    K = x.field

    seed, cert = extract_vertex_projection(x)
    lam = projection_scalar(cert.claimed_result, seed)
    chain = _Chain.resume(cert, "rescale")
    chain.left(scale_skew(K.one / lam, projection(g, K, trivial(seed))), "rescale")

    demo = SimplicityDemonstration(seed)
    demo.certificates[seed] = chain.certificate()
    demo.provenance[seed] = {"from": None, "move": "extract"}

    changed = True
    while changed:
        changed = False
        for u in sorted(demo.certificates):
            for edge_id in g.out_edges[u]:
                dst = g.edge(edge_id).dst
                if dst not in demo.certificates:
                    demo.certificates[dst] = propagate_projection(g, K, u, Hereditary(edge_id))
                    demo.provenance[dst] = {"from": [u], "move": f"hereditary {edge_id}"}
                    changed = True
        for w in g.vertices:
            if w in demo.certificates or g.is_sink(w):
                continue
            targets = sorted({g.edge(e).dst for e in g.out_edges[w]})
            if all(t in demo.certificates for t in targets):
                demo.certificates[w] = propagate_projection(g, K, w, Saturation())
                demo.provenance[w] = {"from": targets, "move": "saturation"}
                changed = True

    missing = [v for v in g.vertices if v not in demo.certificates]
    if missing:
        raise ReductionInvariantError(f"propagation did not reach {', '.join(missing)}")
    demo.spanning = _span_record(g, K, depth)
    return demo


# ----------------------------
# Oráculo de dimensión para grafos acíclicos
# ----------------------------
def acyclic_dimension(g, K=None):
    """Rango del span de φ(ab*) con r(a) = r(b), en coordenadas (fibra, índice refinado)."""
    if not is_acyclic(g):
        raise GraphHasCycleError()
    K = make_field(settings.LEAVITT_FIELD) if K is None else K
    paths = [p for v in g.vertices for n in range(len(g.vertices)) for p in paths_from(g, v, n)]
    depth = max(len(p) for p in paths)
    images = [
        phi_embed(path_monomial(a, b), g, K) for a in paths for b in paths if a.target == b.target
    ]
    columns = {}
    rows = []
    for image in images:
        row = {}
        for p, coeff in image.fibers:
            for index, c in refine_to_depth(coeff, depth).items():
                key = (format_word(p), index.sort_key())
                row[columns.setdefault(key, len(columns))] = c
        rows.append(row)
    dense = [[row.get(j, K.zero) for j in range(len(columns))] for row in rows]
    return DomainMatrix(dense, (len(dense), len(columns)), K).rank()
