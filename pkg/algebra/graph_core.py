# algebra/graph_core.py
"""
Grafos dirigidos finitos, caminos y puntos del espacio X de caminos de frontera.

Convenciones de orden canónico: ids de vértices y aristas ordenados
lexicográficamente; caminos ordenados por (longitud, secuencia de aristas).
"""
import itertools
import json
from dataclasses import dataclass
from functools import cached_property, lru_cache

import networkx as nx
from django.conf import settings

from .exceptions import (
    DanglingEndpointError,
    DuplicateIdError,
    EmptyVertexSetError,
    EnumerationCapError,
    GraphFormatError,
    InvalidPathError,
    UnknownEdgeError,
    UnknownVertexError,
)

GRAPH_FIELDS = {"vertices", "edges"}
EDGE_FIELDS = {"id", "src", "dst"}


@dataclass(frozen=True)
class Edge:
    id: str
    src: str
    dst: str


@dataclass(frozen=True)
class Path:
    """Camino finito. `vertices` tiene len(edges) + 1 entradas; trivial si no hay aristas."""

    vertices: tuple
    edges: tuple = ()

    @property
    def source(self):
        return self.vertices[0]

    @property
    def target(self):
        return self.vertices[-1]

    @property
    def is_trivial(self):
        return not self.edges

    @property
    def is_closed(self):
        return bool(self.edges) and self.source == self.target

    def __len__(self):
        return len(self.edges)

    def sort_key(self):
        return (len(self.edges), self.edges, self.vertices[0])

    def startswith(self, prefix):
        """Relación "es el comienzo de": un camino trivial v es comienzo de todo camino con s = v."""
        return (
            self.source == prefix.source
            and len(prefix.edges) <= len(self.edges)
            and self.edges[: len(prefix.edges)] == prefix.edges
        )

    def concat(self, other):
        if self.target != other.source:
            raise InvalidPathError(f"cannot compose {self} with {other}")
        return Path(self.vertices + other.vertices[1:], self.edges + other.edges)

    def take(self, n):
        return Path(self.vertices[: n + 1], self.edges[:n])

    def drop(self, n):
        return Path(self.vertices[n:], self.edges[n:])

    def power(self, m):
        if m == 0:
            return Path((self.source,))
        result = self
        for _ in range(m - 1):
            result = result.concat(self)
        return result

    def __str__(self):
        return " ".join(self.edges) if self.edges else self.source


def trivial(v):
    return Path((v,))


# ----------------------------
# Grafo
# ----------------------------
@dataclass(frozen=True)
class Graph:
    vertices: tuple
    edges: tuple

    def __hash__(self):
        return self._hash

    @cached_property
    def _hash(self):
        return hash((self.vertices, self.edges))

    @cached_property
    def edge_map(self):
        return {e.id: e for e in self.edges}

    @cached_property
    def out_edges(self):
        out = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.src].append(e.id)
        return {v: tuple(sorted(ids)) for v, ids in out.items()}

    @cached_property
    def sinks(self):
        return tuple(v for v in self.vertices if not self.out_edges[v])

    def is_sink(self, v):
        return not self.out_edges[v]

    def edge(self, edge_id):
        try:
            return self.edge_map[edge_id]
        except KeyError:
            raise UnknownEdgeError(edge_id) from None

    def check_vertex(self, v):
        if v not in self.out_edges:
            raise UnknownVertexError(v)
        return v

    def path(self, edge_ids):
        """Camino a partir de una secuencia no vacía de ids de aristas."""
        edge_ids = tuple(edge_ids)
        if not edge_ids:
            raise InvalidPathError("empty edge sequence; use a vertex for trivial paths")
        first = self.edge(edge_ids[0])
        vertices = [first.src, first.dst]
        for prev, nxt in zip(edge_ids, edge_ids[1:]):
            e = self.edge(nxt)
            if self.edge(prev).dst != e.src:
                raise InvalidPathError(f"edges {prev} and {nxt} do not compose")
            vertices.append(e.dst)
        return Path(tuple(vertices), edge_ids)

    def extend(self, path, edge_id):
        e = self.edge(edge_id)
        if e.src != path.target:
            raise InvalidPathError(f"edge {edge_id} does not leave {path.target}")
        return Path(path.vertices + (e.dst,), path.edges + (edge_id,))

    def children(self, path):
        return tuple(self.extend(path, e) for e in self.out_edges[path.target])

    def to_networkx(self):
        G = nx.MultiDiGraph()
        G.add_nodes_from(self.vertices)
        for e in self.edges:
            G.add_edge(e.src, e.dst, key=e.id)
        return G


def build_graph(data):
    """Valida un listado {"vertices": [...], "edges": [{"id", "src", "dst"}, ...]}."""
    if not isinstance(data, dict):
        raise GraphFormatError("graph must be a JSON object")
    unknown = set(data) - GRAPH_FIELDS
    if unknown:
        raise GraphFormatError(f"unknown graph fields: {', '.join(sorted(unknown))}")
    vertices = data.get("vertices")
    edges = data.get("edges", [])
    if not isinstance(vertices, list) or not isinstance(edges, list):
        raise GraphFormatError("'vertices' and 'edges' must be lists")
    if not vertices:
        raise EmptyVertexSetError()

    seen = set()
    for v in vertices:
        if not isinstance(v, str) or not v:
            raise GraphFormatError(f"vertex id must be a non-empty string: {v!r}")
        if v in seen:
            raise DuplicateIdError(v)
        seen.add(v)

    records = []
    for record in edges:
        if not isinstance(record, dict):
            raise GraphFormatError(f"edge record must be an object: {record!r}")
        fields = set(record)
        if fields != EDGE_FIELDS:
            extra = fields - EDGE_FIELDS
            missing = EDGE_FIELDS - fields
            problem = f"unknown edge fields: {sorted(extra)}" if extra else f"missing edge fields: {sorted(missing)}"
            raise GraphFormatError(problem)
        ident, src, dst = record["id"], record["src"], record["dst"]
        if not all(isinstance(x, str) and x for x in (ident, src, dst)):
            raise GraphFormatError(f"edge fields must be non-empty strings: {record!r}")
        # los ids de vértices y aristas comparten espacio de nombres (gramática de expresiones)
        if ident in seen:
            raise DuplicateIdError(ident)
        seen.add(ident)
        for endpoint in (src, dst):
            if endpoint not in vertices:
                raise DanglingEndpointError(ident, endpoint)
        records.append(Edge(ident, src, dst))

    return Graph(tuple(sorted(vertices)), tuple(sorted(records, key=lambda e: e.id)))


def load_graph(path):
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except OSError as exc:
        raise GraphFormatError(f"cannot read graph file {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON in {path}: {exc}") from None
    return build_graph(data)


def graph_to_json(g):
    return {
        "vertices": list(g.vertices),
        "edges": [{"id": e.id, "src": e.src, "dst": e.dst} for e in g.edges],
    }


# ----------------------------
# Enumeración de caminos
# ----------------------------
def paths_from(g, v, length):
    """Todos los caminos de longitud exacta `length` con origen v, en orden canónico."""
    frontier = [trivial(g.check_vertex(v))]
    for _ in range(length):
        frontier = [child for p in frontier for child in g.children(p)]
    return sorted(frontier, key=Path.sort_key)


def closed_paths(g, v, length):
    return [p for p in paths_from(g, v, length) if p.target == v]


def is_acyclic(g):
    return nx.is_directed_acyclic_graph(g.to_networkx())


@lru_cache(maxsize=4096)
def refine_path(g, path, depth):
    """Extensiones de `path` de longitud `depth`, o más cortas si terminan en un sumidero."""
    if len(path) >= depth or g.is_sink(path.target):
        return (path,)
    return tuple(q for child in g.children(path) for q in refine_path(g, child, depth))


def partition_basis(g, root, depth):
    """Partición de X_root por las extensiones de longitud `depth` (o hasta un sumidero)."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    if isinstance(root, str):
        root = trivial(g.check_vertex(root))
    return sorted(refine_path(g, root, len(root) + depth), key=Path.sort_key)


# ----------------------------
# Condición (L)
# ----------------------------
@dataclass(frozen=True)
class ConditionLVerdict:
    holds: bool
    witness: Path = None


def _cycle_path(g, nodes):
    """Ciclo simple dado por sus vértices; sólo se usa cuando cada vértice emite una arista."""
    edge_ids = [g.out_edges[v][0] for v in nodes]
    return g.path(edge_ids)


def _rotations(path):
    n = len(path)
    return [path.drop(i).concat(path.take(i)) for i in range(n)]


def condition_L(g):
    """Todo ciclo simple tiene una salida; si no, devuelve un ciclo sin salida como testigo."""
    G = nx.DiGraph()
    G.add_nodes_from(g.vertices)
    G.add_edges_from((e.src, e.dst) for e in g.edges)
    exitless = []
    for nodes in nx.simple_cycles(G):
        # sin salida <=> cada vértice del ciclo emite exactamente una arista
        if all(len(g.out_edges[v]) == 1 for v in nodes):
            cycle = _cycle_path(g, nodes)
            exitless.append(min(_rotations(cycle), key=lambda p: (p.source, p.edges)))
    if not exitless:
        return ConditionLVerdict(True)
    return ConditionLVerdict(False, min(exitless, key=Path.sort_key))


# ----------------------------
# Conjuntos hereditarios y saturados
# ----------------------------
def is_hereditary(g, H):
    return all(g.edge(e).dst in H for v in H for e in g.out_edges[v])


def is_saturated(g, H):
    for v in g.vertices:
        emitted = g.out_edges[v]
        if emitted and v not in H and all(g.edge(e).dst in H for e in emitted):
            return False
    return True


def hs_closure(g, S):
    """Menor conjunto hereditario y saturado que contiene S (punto fijo de ambas reglas)."""
    H = {g.check_vertex(v) for v in S}
    G = g.to_networkx()
    changed = True
    while changed:
        changed = False
        for v in list(H):
            missing = nx.descendants(G, v) - H
            if missing:
                H |= missing
                changed = True
        for v in g.vertices:
            emitted = g.out_edges[v]
            if v not in H and emitted and all(g.edge(e).dst in H for e in emitted):
                H.add(v)
                changed = True
    return frozenset(H)


def _subset_key(subset):
    return (len(subset), sorted(subset))


def enumerate_hs_subsets(g, cap=None):
    """Todos los subconjuntos hereditarios y saturados, en orden (tamaño, lexicográfico)."""
    cap = settings.LEAVITT_HS_CAP if cap is None else cap
    if len(g.vertices) > cap:
        raise EnumerationCapError(len(g.vertices), cap)
    found = []
    for size in range(len(g.vertices) + 1):
        for combo in itertools.combinations(g.vertices, size):
            H = frozenset(combo)
            if is_hereditary(g, H) and is_saturated(g, H):
                found.append(H)
    return sorted(found, key=_subset_key)


# ----------------------------
# Puntos de X
# ----------------------------
@dataclass(frozen=True)
class SinkVertex:
    vertex: str

    @property
    def source(self):
        return self.vertex

    @property
    def size(self):
        return 0

    def head(self, n):
        return ()

    def __str__(self):
        return self.vertex


@dataclass(frozen=True)
class FiniteToSink:
    path: Path

    @property
    def source(self):
        return self.path.source

    @property
    def size(self):
        return len(self.path)

    def head(self, n):
        return self.path.edges[:n]

    def __str__(self):
        return str(self.path)


@dataclass(frozen=True)
class EventuallyPeriodic:
    prefix: Path
    cycle: Path

    @property
    def source(self):
        return self.prefix.source

    @property
    def size(self):
        return len(self.prefix) + len(self.cycle)

    def head(self, n):
        edges = list(self.prefix.edges[:n])
        cycle = itertools.cycle(self.cycle.edges)
        while len(edges) < n:
            edges.append(next(cycle))
        return tuple(edges)

    def __str__(self):
        head = f"{self.prefix} " if self.prefix.edges else ""
        return f"{head}({self.cycle})^∞"


def _primitive(cycle):
    n = len(cycle)
    for d in range(1, n + 1):
        if n % d == 0 and cycle.edges == cycle.edges[:d] * (n // d):
            return cycle.take(d)
    return cycle


def _rotate_right(cycle):
    return Path((cycle.vertices[-2],) + cycle.vertices[:-1], (cycle.edges[-1],) + cycle.edges[:-1])


def periodic_point(prefix, cycle):
    """Forma canónica: período primitivo y prefijo más corto."""
    if not cycle.is_closed or cycle.source != prefix.target:
        raise InvalidPathError(f"{cycle} is not a cycle at the end of {prefix}")
    cycle = _primitive(cycle)
    while prefix.edges and prefix.edges[-1] == cycle.edges[-1]:
        prefix = prefix.take(len(prefix) - 1)
        cycle = _rotate_right(cycle)
    return EventuallyPeriodic(prefix, cycle)


def finite_point(g, path):
    if not g.is_sink(path.target):
        raise InvalidPathError(f"{path} does not end at a sink")
    return SinkVertex(path.source) if path.is_trivial else FiniteToSink(path)


def point_starts_with(point, path):
    """ξ ∈ X_path: un vértice coincide si s(ξ) = v; un camino si es prefijo de ξ."""
    if point.source != path.source:
        return False
    return point.head(len(path)) == path.edges


def point_drop(g, point, n):
    """Quita las primeras n aristas (el punto debe tener al menos n)."""
    if n == 0:
        return point
    if isinstance(point, FiniteToSink):
        return finite_point(g, point.path.drop(n))
    if isinstance(point, EventuallyPeriodic):
        prefix, cycle = point.prefix, point.cycle
        if n <= len(prefix):
            return periodic_point(prefix.drop(n), cycle)
        rest = (n - len(prefix)) % len(cycle)
        rotated = cycle.drop(rest).concat(cycle.take(rest))
        return periodic_point(trivial(rotated.source), rotated)
    raise InvalidPathError(f"cannot drop {n} edges from {point}")


def point_prepend(path, point):
    if path.target != point.source:
        raise InvalidPathError(f"{path} does not end where {point} starts")
    if path.is_trivial:
        return point
    if isinstance(point, SinkVertex):
        return FiniteToSink(path)
    if isinstance(point, FiniteToSink):
        return FiniteToSink(path.concat(point.path))
    return periodic_point(path.concat(point.prefix), point.cycle)


def _point_key(point):
    if isinstance(point, SinkVertex):
        return (0, point.size, (), point.vertex)
    if isinstance(point, FiniteToSink):
        return (1, point.size, point.path.edges, point.source)
    return (2, point.size, point.prefix.edges + ("|",) + point.cycle.edges, point.source)


def enumerate_points(g, max_size=None):
    """Todos los puntos representables con tamaño de descripción <= max_size."""
    max_size = settings.LEAVITT_POINT_SIZE if max_size is None else max_size
    points = set()
    for v in g.vertices:
        for n in range(max_size + 1):
            for p in paths_from(g, v, n):
                if g.is_sink(p.target):
                    points.add(finite_point(g, p))
                for k in range(1, max_size - n + 1):
                    for c in closed_paths(g, p.target, k):
                        points.add(periodic_point(p, c))
    return sorted(points, key=_point_key)
