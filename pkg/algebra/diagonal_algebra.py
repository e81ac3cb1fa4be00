# algebra/diagonal_algebra.py
"""
El álgebra conmutativa D(X) generada por las funciones características 1_μ, μ ∈ W ∪ E⁰.

Forma normal: se refina todo a la profundidad L = máxima longitud de índice (las particiones
de profundidad L tienen soportes disjuntos y no vacíos), se combinan coeficientes, se descartan
ceros y se vuelven a fusionar los hermanos completos con coeficiente común en su padre.
"""
import dataclasses
from dataclasses import dataclass

from .exceptions import NullFormError, PointNotInDomain
from .graph_core import Path, point_drop, point_prepend, point_starts_with, refine_path, trivial
from .group_words import FormKind, format_word, unified
from .scalars import format_scalar, is_negative


@dataclass(frozen=True)
class DiagElement:
    graph: object = dataclasses.field(compare=False, repr=False)
    field: object
    terms: tuple = ()

    @property
    def is_zero(self):
        return not self.terms

    def as_dict(self):
        return dict(self.terms)

    @property
    def max_depth(self):
        return max((len(p) for p, _ in self.terms), default=0)

    def __add__(self, other):
        return add_diag(self, other)

    def __sub__(self, other):
        return add_diag(self, scale_diag(-self.field.one, other))

    def __mul__(self, other):
        return mul_diag(self, other)

    def __neg__(self):
        return scale_diag(-self.field.one, self)

    def __str__(self):
        return format_diag(self)


def _merge_siblings(g, coeffs):
    if not coeffs:
        return coeffs
    for depth in range(max(len(p) for p in coeffs), 0, -1):
        parents = {p.take(depth - 1) for p in coeffs if len(p) == depth}
        for parent in sorted(parents, key=Path.sort_key):
            children = g.children(parent)
            values = [coeffs.get(c) for c in children]
            if values[0] is not None and all(v == values[0] for v in values):
                for c in children:
                    del coeffs[c]
                coeffs[parent] = values[0]
    return coeffs


def diag(g, K, pairs):
    """Construye la forma normal a partir de pares (índice, coeficiente) arbitrarios."""
    pairs = [(p, c) for p, c in pairs if not K.is_zero(c)]
    if not pairs:
        return DiagElement(g, K)
    depth = max(len(p) for p, _ in pairs)
    coeffs = {}
    for p, c in pairs:
        for q in refine_path(g, p, depth):
            coeffs[q] = coeffs.get(q, K.zero) + c
    coeffs = {q: c for q, c in coeffs.items() if not K.is_zero(c)}
    coeffs = _merge_siblings(g, coeffs)
    return DiagElement(g, K, tuple(sorted(coeffs.items(), key=lambda item: item[0].sort_key())))


def zero_diag(g, K):
    return DiagElement(g, K)


def path_indicator(g, K, path):
    return diag(g, K, [(path, K.one)])


def vertex_indicator(g, K, v):
    return path_indicator(g, K, trivial(g.check_vertex(v)))


def unit(g, K):
    return diag(g, K, [(trivial(v), K.one) for v in g.vertices])


def indicator(g, K, c):
    """1_c: Neutral -> unidad; Pos(a), Mixed(a, b) -> 1_a; Neg(b) -> 1_{r(b)}; vértice v -> 1_v."""
    if isinstance(c, str):
        return vertex_indicator(g, K, c)
    if c.is_null:
        raise NullFormError(format_word(c))
    if c.is_neutral:
        return unit(g, K)
    a, _ = unified(c)
    return path_indicator(g, K, a)


def add_diag(x, y):
    return diag(x.graph, x.field, list(x.terms) + list(y.terms))


def scale_diag(c, x):
    return diag(x.graph, x.field, [(p, c * v) for p, v in x.terms])


def _meet(mu, nu):
    """1_μ·1_ν = 1_{el más largo} si uno es comienzo del otro; None si los soportes son disjuntos."""
    if nu.startswith(mu):
        return nu
    if mu.startswith(nu):
        return mu
    return None


def mul_diag(x, y):
    K = x.field
    pairs = []
    for mu, c in x.terms:
        for nu, d in y.terms:
            meet = _meet(mu, nu)
            if meet is not None:
                pairs.append((meet, c * d))
    return diag(x.graph, K, pairs)


def refine_to_depth(x, depth):
    """La misma función escrita sobre la base de profundidad `depth` (dict índice -> coeficiente)."""
    if depth < x.max_depth:
        raise ValueError(f"depth {depth} is below the element depth {x.max_depth}")
    K = x.field
    coeffs = {}
    for p, c in x.terms:
        for q in refine_path(x.graph, p, depth):
            coeffs[q] = coeffs.get(q, K.zero) + c
    return {q: coeffs[q] for q in sorted(coeffs, key=Path.sort_key) if not K.is_zero(coeffs[q])}


def is_zero(x):
    return x.is_zero


def in_domain(x, p):
    """x ∈ D_p = 1_p·D_0."""
    if p.kind is FormKind.NEUTRAL:
        return True
    return mul_diag(indicator(x.graph, x.field, p), x) == x


def evaluate_at_point(x, point):
    K = x.field
    total = K.zero
    for mu, c in x.terms:
        if point_starts_with(point, mu):
            total += c
    return total


def theta_apply(g, p, point):
    """θ_p: X_{p⁻¹} -> X_p; borra b y antepone a, con p = ab⁻¹ en forma unificada."""
    if p.is_null:
        raise NullFormError(format_word(p))
    if p.is_neutral:
        return point
    a, b = unified(p)
    if not point_starts_with(point, b):
        raise PointNotInDomain(f"point {point} is not in the domain of θ_{format_word(p)}")
    return point_prepend(a, point_drop(g, point, len(b)))


# ----------------------------
# Impresión canónica
# ----------------------------
def format_index(path):
    return f"[{path}]"


def format_diag(x):
    if x.is_zero:
        return "0"
    K = x.field
    chunks = []
    for i, (p, c) in enumerate(x.terms):
        negative = is_negative(K, c)
        magnitude = format_scalar(K, -c if negative else c)
        term = f"{magnitude}*{format_index(p)}"
        if i == 0:
            chunks.append(f"-{term}" if negative else term)
        else:
            chunks.append(f"- {term}" if negative else f"+ {term}")
    return " ".join(chunks)
