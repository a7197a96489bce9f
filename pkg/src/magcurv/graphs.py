"""Magnetic graphs: weighted simple graphs carrying unit-modulus edge phases.

The phase of an oriented edge lives in the cyclic group of ell-th roots of
unity and is stored as an integer exponent, never as a floating-point complex
number, so group operations along paths and cycles stay exact. The complex
value exp(2*pi*1j*s/ell) is materialized only when matrices are assembled.

Vertices are 0-indexed integers; the edge order of the input document fixes
the summation / matrix-row order everywhere downstream. Graphs are immutable
after construction and all queries are pure.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

import numpy as np

from .errors import ParseError, ValidationError

__all__ = [
    "Edge",
    "MagneticGraph",
    "SignatureStatus",
    "load_graph",
    "hop_distances",
    "diameter",
    "is_connected",
    "connected_components",
    "signature_status",
    "random_magnetic_graph",
]


class Edge(NamedTuple):
    """One undirected edge; ``s`` is the phase exponent of orientation u -> v."""

    u: int
    v: int
    w: float
    s: int


class SignatureStatus(NamedTuple):
    balanced: bool
    entire: bool


@dataclass(frozen=True, eq=False)
class MagneticGraph:
    """Weighted simple graph with a signature into the cyclic group of order ``ell``.

    Invariants enforced at construction: no loops, no duplicate unordered
    pairs, strictly positive weights, exponents in [0, ell), no isolated
    vertices. Each undirected edge stores a single exponent; the reverse
    orientation carries the inverse phase, i.e. exponent (ell - s) % ell.
    """

    num_vertices: int
    ell: int
    edges: tuple[Edge, ...]
    degrees: np.ndarray = field(init=False, repr=False, compare=False)
    _adjacency: tuple[tuple[tuple[int, float, int], ...], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        n, ell = self.num_vertices, self.ell
        if not isinstance(n, int) or n < 1:
            raise ValidationError(f"num_vertices must be a positive integer, got {n!r}")
        if not isinstance(ell, int) or ell < 1:
            raise ValidationError(f"ell must be a positive integer, got {ell!r}")
        seen: set[tuple[int, int]] = set()
        adj: list[list[tuple[int, float, int]]] = [[] for _ in range(n)]
        deg = np.zeros(n)
        norm: list[Edge] = []
        for e in self.edges:
            try:
                u, v, w, s = int(e[0]), int(e[1]), float(e[2]), int(e[3])
            except (TypeError, ValueError) as exc:
                raise ValidationError(f"malformed edge tuple {e!r}") from exc
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge endpoint out of range: {e}")
            if u == v:
                raise ValidationError(f"loop edge not allowed: {e}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValidationError(f"duplicate edge on pair {key}")
            seen.add(key)
            if not (math.isfinite(w) and w > 0):
                raise ValidationError(f"edge weight must be positive and finite: {e}")
            if not 0 <= s < ell:
                raise ValidationError(f"exponent {s} out of range [0, {ell})")
            norm.append(Edge(u, v, w, s))
            adj[u].append((v, w, s))
            adj[v].append((u, w, (ell - s) % ell))
            deg[u] += w
            deg[v] += w
        if deg.min(initial=math.inf) <= 0:
            isolated = int(np.argmin(deg)) if len(deg) else 0
            raise ValidationError(f"isolated vertex {isolated} (zero degree)")
        deg.flags.writeable = False
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "degrees", deg)
        object.__setattr__(self, "_adjacency", tuple(tuple(a) for a in adj))

    def neighbors(self, x: int) -> tuple[tuple[int, float, int], ...]:
        """Oriented star at ``x``: tuples (y, weight, exponent of x -> y)."""
        return self._adjacency[x]

    @property
    def max_degree(self) -> float:
        return float(self.degrees.max())

    def phase(self, s: int) -> complex:
        """Complex value of a stored exponent."""
        return complex(np.exp(2j * np.pi * (s % self.ell) / self.ell))

    def to_document(self) -> dict:
        return {
            "ell": self.ell,
            "num_vertices": self.num_vertices,
            "edges": [{"u": e.u, "v": e.v, "w": e.w, "s": e.s} for e in self.edges],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_document())


def _require(cond: bool, msg: str):
    if not cond:
        raise ParseError(msg)


def load_graph(text: str) -> MagneticGraph:
    """Parse and validate a graph document (the canonical JSON format).

    Raises ParseError for structural problems and ValidationError for
    invariant violations (loops, duplicates, bad weights/exponents,
    isolated vertices).
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    _require(isinstance(doc, dict), "document must be a JSON object")
    _require(set(doc) == {"ell", "num_vertices", "edges"},
             "document keys must be exactly {ell, num_vertices, edges}")
    ell, n, edges = doc["ell"], doc["num_vertices"], doc["edges"]
    _require(isinstance(ell, int) and not isinstance(ell, bool), "ell must be an integer")
    _require(isinstance(n, int) and not isinstance(n, bool), "num_vertices must be an integer")
    _require(isinstance(edges, list), "edges must be a list")
    parsed = []
    for item in edges:
        _require(isinstance(item, dict) and set(item) == {"u", "v", "w", "s"},
                 f"edge entries must be objects with keys u, v, w, s: {item!r}")
        u, v, w, s = item["u"], item["v"], item["w"], item["s"]
        for name, val in (("u", u), ("v", v), ("s", s)):
            _require(isinstance(val, int) and not isinstance(val, bool),
                     f"edge field {name} must be an integer: {item!r}")
        _require(isinstance(w, (int, float)) and not isinstance(w, bool),
                 f"edge weight must be a number: {item!r}")
        parsed.append(Edge(u, v, float(w), s))
    return MagneticGraph(num_vertices=n, ell=ell, edges=tuple(parsed))


def from_edge_list(num_vertices: int, ell: int,
                   edges: Iterable[tuple[int, int, float, int]]) -> MagneticGraph:
    """Build a validated graph from (u, v, w, s) tuples."""
    return MagneticGraph(num_vertices=num_vertices, ell=ell,
                         edges=tuple(Edge(u, v, float(w), s) for u, v, w, s in edges))


def hop_distances(g: MagneticGraph, source: int) -> np.ndarray:
    """Unweighted BFS hop counts from ``source``; -1 marks unreachable vertices.

    Distances are edge counts, not weight sums: the path arguments behind the
    diameter bounds count edges.
    """
    dist = np.full(g.num_vertices, -1, dtype=np.int64)
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y, _, _ in g.neighbors(x):
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def diameter(g: MagneticGraph) -> int | float:
    """Maximum hop distance over vertex pairs; math.inf if disconnected."""
    worst = 0
    for x in range(g.num_vertices):
        dist = hop_distances(g, x)
        if dist.min() < 0:
            return math.inf
        worst = max(worst, int(dist.max()))
    return worst


def connected_components(g: MagneticGraph) -> list[list[int]]:
    comps = []
    seen = [False] * g.num_vertices
    for root in range(g.num_vertices):
        if seen[root]:
            continue
        comp = []
        queue = deque([root])
        seen[root] = True
        while queue:
            x = queue.popleft()
            comp.append(x)
            for y, _, _ in g.neighbors(x):
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g: MagneticGraph) -> bool:
    return len(connected_components(g)) == 1


def signature_status(g: MagneticGraph) -> SignatureStatus:
    """Decide balancedness and entirety of the signature.

    Balanced: every cycle's phase product is 1. Checked per component with a
    spanning-tree potential: assign each vertex a group exponent along a BFS
    tree, then test every non-tree edge for consistency. Entire: the edge
    exponents generate the full cyclic group, i.e. gcd(ell, all exponents) = 1.
    """
    ell = g.ell
    pot = [None] * g.num_vertices
    balanced = True
    for root in range(g.num_vertices):
        if pot[root] is not None:
            continue
        pot[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, _, s in g.neighbors(x):
                if pot[y] is None:
                    pot[y] = (pot[x] + s) % ell
                    queue.append(y)
    for u, v, _, s in g.edges:
        if (pot[u] + s - pot[v]) % ell != 0:
            balanced = False
            break
    gen = ell
    for e in g.edges:
        gen = math.gcd(gen, e.s)
    entire = gen == 1
    return SignatureStatus(balanced=balanced, entire=entire)


def random_magnetic_graph(num_vertices: int, edge_prob: float, ell: int,
                          seed: int | None = None,
                          rng: np.random.Generator | None = None,
                          weight_range: tuple[float, float] = (0.5, 2.0)) -> MagneticGraph:
    """Sample a connected random magnetic graph (fuzz corpora, CLI `generate`).

    Pairs are kept independently with probability ``edge_prob``; components are
    then stitched together with extra edges so the result is connected.
    Deterministic for a fixed seed.
    """
    if rng is None:
        rng = np.random.default_rng(seed)
    n = int(num_vertices)
    ell = int(ell)
    if n < 2:
        raise ValidationError("random graph needs at least 2 vertices")
    if ell < 1:
        raise ValidationError(f"ell must be a positive integer, got {ell!r}")
    if not 0.0 <= edge_prob <= 1.0:
        raise ValidationError("edge_prob must lie in [0, 1]")

    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    kept = [p for p in pairs if rng.random() < edge_prob]

    # Union-find over the sampled pairs, then link components in index order.
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    present = set(kept)
    for u, v in kept:
        union(u, v)
    comps: dict[int, list[int]] = {}
    for x in range(n):
        comps.setdefault(find(x), []).append(x)
    roots = sorted(comps)
    base = comps[roots[0]]
    for r in roots[1:]:
        other = comps[r]
        while True:
            a = base[int(rng.integers(0, len(base)))]
            b = other[int(rng.integers(0, len(other)))]
            key = (min(a, b), max(a, b))
            if key not in present:
                break
        present.add(key)
        kept.append(key)
        base = sorted(base + other)

    lo, hi = weight_range
    edges = []
    for u, v in kept:
        w = float(rng.uniform(lo, hi))
        s = int(rng.integers(0, ell))
        edges.append(Edge(u, v, w, s))
    return MagneticGraph(num_vertices=n, ell=ell, edges=tuple(edges))
