# algebra/sampling.py
"""Catálogo de grafos de referencia y generadores aleatorios con semilla para las pruebas."""
from functools import lru_cache

from sympy import Rational

from .diagonal_algebra import diag, indicator, mul_diag
from .graph_core import build_graph, paths_from
from .group_words import enumerate_forms, grade
from .leavitt_front import Gen, Product, ScalarMul, Sum
from .scalars import from_ratio
from .skew_ring import skew

CATALOG = {
    "R2": {
        "vertices": ["v"],
        "edges": [{"id": "e", "src": "v", "dst": "v"}, {"id": "f", "src": "v", "dst": "v"}],
    },
    "A2": {
        "vertices": ["v1", "v2"],
        "edges": [{"id": "e", "src": "v1", "dst": "v2"}],
    },
    "A3": {
        "vertices": ["v1", "v2", "v3"],
        "edges": [{"id": "e", "src": "v1", "dst": "v2"}, {"id": "f", "src": "v2", "dst": "v3"}],
    },
    "T": {
        "vertices": ["u", "w"],
        "edges": [{"id": "g", "src": "u", "dst": "u"}, {"id": "h", "src": "u", "dst": "w"}],
    },
    "loop": {
        "vertices": ["v"],
        "edges": [{"id": "g", "src": "v", "dst": "v"}],
    },
}

CONDITION_L_CATALOG = ("R2", "A2", "A3", "T")


def catalog_graph(name):
    return build_graph(CATALOG[name])


def random_graph(rng, max_vertices=6, max_edges=10, acyclic=False):
    n = rng.randint(1, max_vertices)
    vertices = [f"v{i}" for i in range(1, n + 1)]
    edges = []
    for k in range(rng.randint(0, max_edges)):
        if acyclic:
            if n < 2:
                break
            i, j = sorted(rng.sample(range(n), 2))
        else:
            i, j = rng.randrange(n), rng.randrange(n)
        edges.append({"id": f"e{k + 1}", "src": vertices[i], "dst": vertices[j]})
    return build_graph({"vertices": vertices, "edges": edges})


def random_scalar(rng, K, allow_zero=False):
    while True:
        num, den = rng.randint(-3, 3), rng.choice((1, 1, 2, 3))
        if num == 0 and not allow_zero:
            continue
        if K.is_FiniteField and den % K.mod == 0:
            continue
        value = from_ratio(K, num, den)
        if K.is_zero(value) and not allow_zero:
            continue
        return value


def random_path(rng, g, max_depth):
    v = rng.choice(g.vertices)
    length = rng.randint(0, max_depth)
    for n in range(length, -1, -1):
        candidates = paths_from(g, v, n)
        if candidates:
            return rng.choice(candidates)


def random_diag(rng, g, K, max_depth=3, max_terms=3):
    pairs = [(random_path(rng, g, max_depth), random_scalar(rng, K)) for _ in range(rng.randint(1, max_terms))]
    return diag(g, K, pairs)


@lru_cache(maxsize=64)
def forms_up_to(g, max_len):
    return tuple(enumerate_forms(g, max_len))


def random_fiber(rng, g, K, p, max_depth=2):
    """Coeficiente aleatorio en D_p (posiblemente cero)."""
    return mul_diag(indicator(g, K, p), random_diag(rng, g, K, max_depth))


def random_skew(rng, g, K, max_fibers=3, max_depth=2, forms=None):
    forms = forms or forms_up_to(g, max_depth)
    pairs = []
    for _ in range(rng.randint(1, max_fibers)):
        p = rng.choice(forms)
        pairs.append((p, random_fiber(rng, g, K, p, max_depth)))
    return skew(g, K, pairs)


def random_nonzero_skew(rng, g, K, max_fibers=3, max_depth=2):
    while True:
        x = random_skew(rng, g, K, max_fibers, max_depth)
        if not x.is_zero:
            return x


def random_homogeneous(rng, g, K, z, max_fibers=3, max_depth=2):
    """Elemento de A_z (puede ser cero si no hay formas de grado z)."""
    forms = [p for p in forms_up_to(g, max_depth) if grade(p) == z]
    if not forms:
        return skew(g, K, [])
    return random_skew(rng, g, K, max_fibers, max_depth, forms=forms)


def random_word(rng, g, max_len=6):
    if not g.edges:
        return ()
    return tuple(
        (rng.choice(g.edges).id, rng.choice((1, -1))) for _ in range(rng.randint(0, max_len))
    )


def random_expression(rng, g, depth=2):
    """Árbol de expresión de Leavitt aleatorio sobre los generadores de g."""
    if depth == 0 or rng.random() < 0.3:
        choices = [Gen(v, "vertex") for v in g.vertices]
        choices += [Gen(e.id, kind) for e in g.edges for kind in ("edge", "ghost")]
        return rng.choice(choices)
    shape = rng.choice(("sum", "product", "product", "scalar"))
    if shape == "scalar":
        return ScalarMul(Rational(rng.randint(-3, 3), rng.choice((1, 2))), random_expression(rng, g, depth - 1))
    parts = tuple(random_expression(rng, g, depth - 1) for _ in range(rng.randint(2, 3)))
    return Sum(parts) if shape == "sum" else Product(parts)
