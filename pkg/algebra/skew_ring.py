# algebra/skew_ring.py
"""
El anillo de grupo torcido parcial D(X) ⋊_α 𝔽: sumas finitas Σ a_p δ_p con a_p ∈ D_p.

Regla de fibras: (a_pδ_p)(b_qδ_q) = α_p(α_{p⁻¹}(a_p)·b_q)δ_{pq}.
"""
import dataclasses
from dataclasses import dataclass

from .diagonal_algebra import (
    DiagElement,
    add_diag,
    diag,
    in_domain,
    mul_diag,
    path_indicator,
    refine_to_depth,
    scale_diag,
    unit,
)
from .exceptions import DomainViolation, NullFormError, ReductionInvariantError
from .group_words import NEUTRAL, compose, display_key, format_word, grade, invert, unified


@dataclass(frozen=True)
class SkewElement:
    graph: object = dataclasses.field(compare=False, repr=False)
    field: object
    fibers: tuple = ()

    @property
    def is_zero(self):
        return not self.fibers

    def keys(self):
        return [p for p, _ in self.fibers]

    def fiber(self, p):
        for key, coeff in self.fibers:
            if key == p:
                return coeff
        return DiagElement(self.graph, self.field)

    def __add__(self, other):
        return add_scale(self.field.one, self, self.field.one, other)

    def __sub__(self, other):
        return add_scale(self.field.one, self, -self.field.one, other)

    def __neg__(self):
        return scale_skew(-self.field.one, self)

    def __mul__(self, other):
        return mul_skew(self, other)

    def __str__(self):
        return format_skew(self)


def skew(g, K, pairs, check=False):
    """Suma fibras con la misma clave y descarta las nulas; `check` valida a_p ∈ D_p."""
    acc = {}
    for p, coeff in pairs:
        if coeff.is_zero:
            continue
        if p.is_null:
            raise NullFormError(format_word(p))
        if check and not in_domain(coeff, p):
            raise DomainViolation(f"coefficient {coeff} is not in D_{format_word(p)}")
        acc[p] = add_diag(acc[p], coeff) if p in acc else coeff
    fibers = sorted(((p, c) for p, c in acc.items() if not c.is_zero), key=lambda item: display_key(item[0]))
    return SkewElement(g, K, tuple(fibers))


def zero_skew(g, K):
    return SkewElement(g, K)


def monomial(coeff, p):
    """a δ_p para un solo coeficiente a ∈ D_p."""
    return skew(coeff.graph, coeff.field, [(p, coeff)])


def projection(g, K, path):
    """1_μ δ_0."""
    return monomial(path_indicator(g, K, path), NEUTRAL)


# ----------------------------
# Acción parcial α
# ----------------------------
def alpha_apply(p, f):
    """α_p: D_{p⁻¹} -> D_p; con p = (a, b), reemplaza el prefijo b por a en cada índice."""
    if p.is_null:
        raise NullFormError(format_word(p))
    if p.is_neutral or f.is_zero:
        return f
    g, K = f.graph, f.field
    a, b = unified(p)
    if mul_diag(f, path_indicator(g, K, b)) != f:
        raise DomainViolation(f"{f} is not in the domain of α_{format_word(p)}")
    refined = refine_to_depth(f, max(len(b), f.max_depth))
    pairs = []
    for mu, c in refined.items():
        if not mu.startswith(b):
            raise DomainViolation(f"index {mu} does not extend {b}")
        pairs.append((a.concat(mu.drop(len(b))), c))
    return diag(g, K, pairs)


# ----------------------------
# Operaciones de anillo
# ----------------------------
def mul_skew(x, y):
    g, K = x.graph, x.field
    pairs = []
    for p, ap in x.fibers:
        pulled = alpha_apply(invert(p), ap)
        for q, bq in y.fibers:
            coeff = alpha_apply(p, mul_diag(pulled, bq))
            pq = compose(g, p, q)
            if pq.is_null:
                if not coeff.is_zero:
                    raise ReductionInvariantError(
                        f"nonzero coefficient {coeff} on Null word {format_word(pq)}"
                    )
                continue
            pairs.append((pq, coeff))
    return skew(g, K, pairs)


def scale_skew(c, x):
    return skew(x.graph, x.field, [(p, scale_diag(c, a)) for p, a in x.fibers])


def add_scale(lam, x, mu, y):
    """λx + μy, fibra a fibra."""
    pairs = [(p, scale_diag(lam, a)) for p, a in x.fibers]
    pairs += [(q, scale_diag(mu, b)) for q, b in y.fibers]
    return skew(x.graph, x.field, pairs)


def star(x):
    """(a_pδ_p)* = α_{p⁻¹}(a_p)δ_{p⁻¹}."""
    return skew(x.graph, x.field, [(invert(p), alpha_apply(invert(p), a)) for p, a in x.fibers])


def grade_decompose(x):
    components = {}
    for p, a in x.fibers:
        components.setdefault(grade(p), []).append((p, a))
    return {z: skew(x.graph, x.field, pairs) for z, pairs in sorted(components.items())}


def is_homogeneous(x):
    return len({grade(p) for p in x.keys()}) <= 1


def product(factors, g, K):
    """Producto ordenado de una lista de elementos (la unidad Σ 1_vδ_0 si está vacía)."""
    result = monomial(unit(g, K), NEUTRAL)
    for factor in factors:
        result = mul_skew(result, factor)
    return result


# ----------------------------
# Impresión canónica
# ----------------------------
def format_skew(x):
    if x.is_zero:
        return "0"
    return " + ".join(f"[{a}]·δ({format_word(p)})" for p, a in x.fibers)
