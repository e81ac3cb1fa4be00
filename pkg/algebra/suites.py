# algebra/suites.py
"""
Baterías de invariantes sobre un grafo concreto. Cada batería devuelve un SuiteResult con el
número de pruebas y la lista de fallos; las pruebas aleatorias usan random.Random(seed + trial).
"""
import itertools
import logging
import random
from dataclasses import dataclass, field
from functools import lru_cache

from django.conf import settings

from .diagonal_algebra import (
    diag,
    evaluate_at_point,
    indicator,
    mul_diag,
    path_indicator,
    refine_to_depth,
    theta_apply,
    vertex_indicator,
    zero_diag,
)
from .exceptions import EnumerationCapError, LeavittError, PointNotInDomain
from .graph_core import (
    condition_L,
    enumerate_hs_subsets,
    enumerate_points,
    hs_closure,
    is_acyclic,
    is_hereditary,
    is_saturated,
    partition_basis,
    paths_from,
    point_starts_with,
    trivial,
)
from .group_words import classify, compose, enumerate_forms, grade, invert, unified
from .ideal_tools import (
    acyclic_dimension,
    demonstrate_simplicity,
    extract_vertex_projection,
    ideal_reduce,
    projection_scalar,
    simplicity_report,
    verify_certificate,
)
from .leavitt_front import Product, Sum, adjoint, check_ck_relations, path_monomial, phi_embed, surjection_witness
from .sampling import (
    random_diag,
    random_expression,
    random_homogeneous,
    random_nonzero_skew,
    random_path,
    random_scalar,
    random_skew,
    random_word,
)
from .skew_ring import alpha_apply, grade_decompose, monomial, mul_skew, projection, skew, star

logger = logging.getLogger(__name__)

DEFAULT_TRIALS = {
    "graph": 20,
    "words": 100,
    "ring-axioms": 500,
    "grading": 200,
    "zero-test": 1000,
    "phi": 50,
    "reduction": 200,
}


@dataclass
class SuiteResult:
    name: str
    trials: int = 0
    failures: list = field(default_factory=list)
    skipped: str = None

    @property
    def passed(self):
        return not self.failures

    def to_json(self):
        return {"suite": self.name, "trials": self.trials, "failures": list(self.failures), "skipped": self.skipped}

    def __str__(self):
        if self.skipped:
            return f"{self.name}: skipped ({self.skipped})"
        status = "ok" if self.passed else f"{len(self.failures)} failures"
        return f"{self.name}: {self.trials} trials, {status}"


class _Recorder:
    def __init__(self, name):
        self.result = SuiteResult(name)

    def check(self, condition, message):
        self.result.trials += 1
        if not condition:
            self.result.failures.append(message)

    def run(self, label, fn):
        """Ejecuta una prueba; un error de dominio cuenta como fallo."""
        try:
            fn()
        except LeavittError as exc:
            self.result.trials += 1
            self.result.failures.append(f"{label}: {type(exc).__name__}: {exc}")


@lru_cache(maxsize=32)
def _points(g, size):
    return tuple(enumerate_points(g, size))


def _trials(name, trials):
    return DEFAULT_TRIALS[name] if trials is None else trials


# ----------------------------
# Grafo
# ----------------------------
def suite_graph(g, K, seed, trials=None):
    rec = _Recorder("graph")
    for trial in range(_trials("graph", trials)):
        rng = random.Random(seed + trial)
        S = frozenset(v for v in g.vertices if rng.random() < 0.4)
        T = S | frozenset(v for v in g.vertices if rng.random() < 0.4)
        H = hs_closure(g, S)
        rec.check(hs_closure(g, H) == H, f"hs_closure not idempotent on {sorted(S)}")
        rec.check(S <= H, f"hs_closure({sorted(S)}) does not contain its input")
        rec.check(H <= hs_closure(g, T), f"hs_closure not monotone on {sorted(S)} ⊆ {sorted(T)}")
        rec.check(is_hereditary(g, H) and is_saturated(g, H), f"hs_closure({sorted(S)}) not hereditary saturated")

    if len(g.vertices) <= 6:
        subsets = [
            frozenset(c) for n in range(len(g.vertices) + 1) for c in itertools.combinations(g.vertices, n)
        ]
        fixed = {s for s in subsets if hs_closure(g, s) == s}
        rec.check(set(enumerate_hs_subsets(g)) == fixed, "enumerate_hs_subsets differs from closure fixed points")

    for depth in (1, 2):
        points = _points(g, 2 * depth)
        for v in g.vertices:
            pieces = partition_basis(g, v, depth)
            for a, b in itertools.combinations(pieces, 2):
                rec.check(not a.startswith(b) and not b.startswith(a), f"pieces {a} and {b} overlap")
            for point in points:
                if point.source == v:
                    hits = [c for c in pieces if point_starts_with(point, c)]
                    rec.check(len(hits) == 1, f"point {point} lies in {len(hits)} pieces of X_{v} at depth {depth}")

    verdict = condition_L(g)
    if not verdict.holds:
        cycle = verdict.witness
        rec.check(all(len(g.out_edges[v]) == 1 for v in cycle.vertices), f"witness {cycle} has an exit")
    return rec.result


# ----------------------------
# Palabras
# ----------------------------
def suite_words(g, K, seed, trials=None):
    rec = _Recorder("words")
    if not g.edges:
        rec.result.skipped = "graph has no edges"
        return rec.result
    for trial in range(_trials("words", trials)):
        rng = random.Random(seed + trial)
        w1, w2 = random_word(rng, g), random_word(rng, g)
        p, q = classify(g, w1), classify(g, w2)
        rec.check(classify(g, p.letters) == p, f"classify not idempotent on {p}")
        if p.is_null or q.is_null:
            continue
        pq = compose(g, p, q)
        rec.check(pq == classify(g, w1 + w2), f"compose({p}, {q}) != classify of concatenation")
        rec.check(invert(invert(p)) == p, f"invert not an involution on {p}")
        rec.check(compose(g, p, invert(p)).is_neutral, f"{p} times its inverse is not neutral")
        if not pq.is_null:
            rec.check(grade(pq) == grade(p) + grade(q), f"grade not additive on {p}, {q}")
    return rec.result


# ----------------------------
# Transcripción de las tablas de intersección y de α
# ----------------------------
def _intersection_expected(g, K, p, q):
    """Valor de 1_p·1_q según la tabla de intersecciones; None si p o q es neutro."""
    if p.is_neutral or q.is_neutral:
        return None
    zero = zero_diag(g, K)
    a, b = unified(p)
    c, d = unified(q)
    if a.is_trivial and c.is_trivial:
        return indicator(g, K, p) if b.target == d.target else zero
    if a.is_trivial:
        return indicator(g, K, q) if b.target == c.source else zero
    if c.is_trivial:
        return indicator(g, K, p) if d.target == a.source else zero
    if a.startswith(c):
        return indicator(g, K, p)
    if c.startswith(a):
        return indicator(g, K, q)
    return zero


def suite_transcription(g, K, seed=None, trials=None, max_len=3):
    rec = _Recorder("transcription")
    forms = enumerate_forms(g, max_len)
    zero = zero_diag(g, K)
    for p in forms:
        one_p = indicator(g, K, p)
        for q in forms:
            product = mul_diag(one_p, indicator(g, K, q))
            expected = _intersection_expected(g, K, p, q)
            if expected is not None:
                rec.check(product == expected, f"1_{p}·1_{q} = {product}, table gives {expected}")
            pq = compose(g, p, q)
            rhs = zero if pq.is_null else mul_diag(one_p, indicator(g, K, pq))
            lhs = alpha_apply(p, mul_diag(indicator(g, K, invert(p)), indicator(g, K, q)))
            rec.check(lhs == rhs, f"α_{p}(1_{p}⁻¹·1_{q}) = {lhs}, expected {rhs}")
        for v in g.vertices:
            one_v = vertex_indicator(g, K, v)
            if p.is_neutral:
                continue
            a, b = unified(p)
            # vértice contra forma, y la acción sobre 1_{p⁻¹}·1_v
            if a.is_trivial:
                expected = one_v if b.target == v else zero
            else:
                expected = one_p if a.source == v else zero
            rec.check(mul_diag(one_v, one_p) == expected, f"1_{v}·1_{p} = {mul_diag(one_v, one_p)}")
            lhs = alpha_apply(p, mul_diag(indicator(g, K, invert(p)), one_v))
            expected = one_p if b.source == v else zero
            rec.check(lhs == expected, f"α_{p}(1_{p}⁻¹·1_{v}) = {lhs}, expected {expected}")

    for v in g.vertices:
        if g.is_sink(v):
            continue
        for depth in (1, 2):
            cover = diag(g, K, [(c, K.one) for c in partition_basis(g, v, depth)])
            rec.check(cover == vertex_indicator(g, K, v), f"X_{v} is not covered at depth {depth}")
    return rec.result


def suite_theta_alpha(g, K, seed=None, trials=None, max_len=3, max_depth=3, point_size=None):
    """α_p(f) coincide con f ∘ θ_{p⁻¹} punto a punto."""
    rec = _Recorder("theta-alpha")
    point_size = settings.LEAVITT_POINT_SIZE if point_size is None else point_size
    points = _points(g, point_size)
    basis = [p for v in g.vertices for n in range(max_depth + 1) for p in paths_from(g, v, n)]
    for p in enumerate_forms(g, max_len):
        inverse = invert(p)
        pulled = {}
        for point in points:
            try:
                pulled[point] = theta_apply(g, inverse, point)
            except PointNotInDomain:
                pulled[point] = None
        domain = indicator(g, K, inverse)
        for mu in basis:
            f = mul_diag(domain, path_indicator(g, K, mu))
            if f.is_zero:
                continue
            image = alpha_apply(p, f)
            for point, source in pulled.items():
                expected = K.zero if source is None else evaluate_at_point(f, source)
                if evaluate_at_point(image, point) != expected:
                    rec.check(False, f"α_{p}(1_{mu}) differs from θ at {point}")
                    break
            else:
                rec.check(True, "")
    return rec.result


# ----------------------------
# Anillo
# ----------------------------
def suite_ring_axioms(g, K, seed, trials=None, max_fibers=4, max_depth=3):
    rec = _Recorder("ring-axioms")
    for trial in range(_trials("ring-axioms", trials)):
        rng = random.Random(seed + trial)
        x, y, z = (random_skew(rng, g, K, max_fibers, max_depth) for _ in range(3))

        def axioms():
            xy, yz = mul_skew(x, y), mul_skew(y, z)
            rec.check(mul_skew(xy, z) == mul_skew(x, yz), f"associativity fails for {x} | {y} | {z}")
            rec.check(mul_skew(x, y + z) == xy + mul_skew(x, z), f"left distributivity fails for {x} | {y} | {z}")
            rec.check(mul_skew(x + y, z) == mul_skew(x, z) + yz, f"right distributivity fails for {x} | {y} | {z}")
            rec.check(star(xy) == mul_skew(star(y), star(x)), f"star not anti-multiplicative on {x} | {y}")
            rec.check(star(star(x)) == x, f"star not an involution on {x}")

        rec.run(f"trial {trial}", axioms)
    return rec.result


def suite_grading(g, K, seed, trials=None):
    rec = _Recorder("grading")
    for trial in range(_trials("grading", trials)):
        rng = random.Random(seed + trial)
        z, t = rng.randint(-2, 2), rng.randint(-2, 2)
        x = random_homogeneous(rng, g, K, z)
        y = random_homogeneous(rng, g, K, t)
        xy = mul_skew(x, y)
        rec.check(all(grade(p) == z + t for p in xy.keys()), f"A_{z}·A_{t} leaves degree {z + t}: {xy}")
        mixed = x + y
        total = skew(g, K, [])
        for component in grade_decompose(mixed).values():
            total = total + component
        rec.check(total == mixed, f"grade components do not sum back to {mixed}")
    return rec.result


def suite_zero_test(g, K, seed, trials=None, point_size=None):
    """is_zero coincide con la evaluación exhaustiva en puntos."""
    rec = _Recorder("zero-test")
    for trial in range(_trials("zero-test", trials)):
        rng = random.Random(seed + trial)
        x = random_diag(rng, g, K, max_depth=3, max_terms=4)
        if rng.random() < 0.5:
            # misma función escrita a más profundidad, restada
            finer = refine_to_depth(x, x.max_depth + 1)
            pairs = [(p, -v) for p, v in finer.items()]
            if rng.random() < 0.5:
                pairs.append((random_path(rng, g, 2), random_scalar(rng, K)))
            x = x + diag(g, K, pairs)
        depth = max(1, x.max_depth)
        size = 2 * depth if point_size is None else point_size
        values = [evaluate_at_point(x, point) for point in _points(g, size)]
        vanishes = all(K.is_zero(value) for value in values)
        rec.check(x.is_zero == vanishes, f"is_zero({x}) = {x.is_zero} but evaluation says {vanishes}")
    return rec.result


# ----------------------------
# Inmersión φ
# ----------------------------
def suite_phi(g, K, seed, trials=None, max_len=2):
    rec = _Recorder("phi")
    for trial in range(_trials("phi", trials)):
        rng = random.Random(seed + trial)
        a, b = random_expression(rng, g), random_expression(rng, g)
        phi_a, phi_b = phi_embed(a, g, K), phi_embed(b, g, K)
        rec.check(phi_embed(Product((a, b)), g, K) == mul_skew(phi_a, phi_b), f"φ not multiplicative on {a} | {b}")
        rec.check(phi_embed(Sum((a, b)), g, K) == phi_a + phi_b, f"φ not additive on {a} | {b}")
        rec.check(phi_embed(adjoint(a), g, K) == star(phi_a), f"φ does not intertwine the involution on {a}")

    for v in g.vertices:
        rec.check(not projection(g, K, trivial(v)).is_zero, f"φ({v}) vanishes")

    paths = [p for v in g.vertices for n in range(max_len + 2) for p in paths_from(g, v, n)]
    for a in paths:
        for b in paths:
            if a.target != b.target or (a.is_trivial and b.is_trivial):
                continue
            letters = tuple((e, 1) for e in a.edges) + tuple((e, -1) for e in reversed(b.edges))
            expected = monomial(path_indicator(g, K, a), classify(g, letters))
            got = phi_embed(path_monomial(a, b), g, K)
            rec.check(got == expected, f"φ({a} ({b})*) = {got}, expected {expected}")

    forms = enumerate_forms(g, max_len)
    for p in forms:
        for q in forms:
            coeff = mul_diag(indicator(g, K, p), indicator(g, K, q))
            target = monomial(coeff, q)
            got = phi_embed(surjection_witness(g, p, q), g, K)
            rec.check(got == target, f"1_{p}·1_{q}δ_{q} not attained: {got}")
    return rec.result


def suite_ck_relations(g, K, seed=None, trials=None):
    rec = _Recorder("ck-relations")
    violations = check_ck_relations(g, K)
    rec.check(not violations, "; ".join(f"{v.relation} {v.detail}" for v in violations))
    return rec.result


# ----------------------------
# Ideales
# ----------------------------
def suite_reduction(g, K, seed, trials=None):
    rec = _Recorder("reduction")
    verdict = condition_L(g)
    if not verdict.holds:
        rec.result.skipped = f"condition (L) fails: cycle {verdict.witness} has no exit"
        return rec.result
    for trial in range(_trials("reduction", trials)):
        rng = random.Random(seed + trial)
        x = random_nonzero_skew(rng, g, K, max_fibers=3, max_depth=2)

        def pipeline():
            reduced = ideal_reduce(x)
            rec.check(verify_certificate(reduced), f"reduction certificate of {x} does not verify")
            keys = reduced.claimed_result.keys()
            rec.check(len(keys) == 1 and keys[0].is_neutral, f"reduction of {x} left other fibers")
            v, cert = extract_vertex_projection(x)
            rec.check(verify_certificate(cert), f"projection certificate of {x} does not verify")
            rec.check(projection_scalar(cert.claimed_result, v) is not None, f"{cert.claimed_result} is not λ·1_{v}δ_0")

        rec.run(f"trial {trial}", pipeline)
    return rec.result


def sink_path_formula(g):
    """Σ sobre sumideros w de n_w², n_w = caminos (incluido el trivial) que terminan en w."""
    counts = {w: 0 for w in g.sinks}
    for v in g.vertices:
        for n in range(len(g.vertices)):
            for p in paths_from(g, v, n):
                if p.target in counts:
                    counts[p.target] += 1
    return sum(n * n for n in counts.values())


def suite_dimension(g, K, seed=None, trials=None):
    rec = _Recorder("dimension")
    if not is_acyclic(g):
        rec.result.skipped = "graph has a cycle"
        return rec.result
    rank, formula = acyclic_dimension(g, K), sink_path_formula(g)
    rec.check(rank == formula, f"rank {rank} differs from Σ n_w² = {formula}")
    return rec.result


def suite_simplicity(g, K, seed, trials=None):
    rec = _Recorder("simplicity")
    try:
        report = simplicity_report(g)
    except EnumerationCapError as exc:
        rec.result.skipped = str(exc)
        return rec.result
    if not report.criteria_met:
        if not report.condition_L:
            rec.result.skipped = f"condition (L) fails: cycle {report.witness} has no exit"
        else:
            witness = sorted(report.hs_witness(g))
            rec.result.skipped = f"proper hereditary saturated subset {{{', '.join(witness)}}}"
        return rec.result
    x = random_nonzero_skew(random.Random(seed), g, K)

    def demonstration():
        demo = demonstrate_simplicity(g, x)
        rec.check(set(demo.certificates) == set(g.vertices), f"demonstration from {x} misses vertices")
        for v, cert in sorted(demo.certificates.items()):
            rec.check(verify_certificate(cert), f"certificate for {v} does not verify")
            rec.check(cert.claimed_result == projection(g, K, trivial(v)), f"certificate for {v} does not end on 1_{v}δ_0")

    rec.run(f"demonstration from {x}", demonstration)
    return rec.result


SUITES = (
    suite_ck_relations,
    suite_graph,
    suite_words,
    suite_transcription,
    suite_theta_alpha,
    suite_ring_axioms,
    suite_grading,
    suite_zero_test,
    suite_phi,
    suite_reduction,
    suite_dimension,
    suite_simplicity,
)


def run_all(g, K, seed=None, trials=None):
    seed = settings.LEAVITT_SEED if seed is None else seed
    results = []
    for suite in SUITES:
        result = suite(g, K, seed, trials)
        logger.info("%s", result)
        results.append(result)
    return results
