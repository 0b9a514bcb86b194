"""Mixed graphs: undirected edges plus directed arcs on vertices ``0..n-1``.

Includes BFS distances (edges both ways, arcs head-ward only), the maximal
Moore tree, the Kautz mixed graphs that attain the diameter-2 bound for
``r = 1``, and a line-oriented text format::

    # comment
    mixed 6
    e 0 5
    a 0 1
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from itertools import permutations
from math import inf
from typing import Iterable

from .bounds import MixedParams, moore_bound

__all__ = [
    "INF",
    "GraphError",
    "GraphParseError",
    "MixedGraph",
    "DegreeProfile",
    "Reach",
    "MooreTree",
    "CheckReport",
    "degree_profile",
    "bfs_distances",
    "eccentricity",
    "diameter",
    "distance_profile",
    "moore_tree",
    "kautz_mixed",
    "kautz_digraph",
    "check_moore",
    "digons_to_undirected",
    "parse_mixed",
    "format_mixed",
    "read_mixed",
    "write_mixed",
    "to_dot",
]

INF = inf


class GraphError(ValueError):
    pass


class GraphParseError(GraphError):
    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class MixedGraph:
    """Immutable mixed graph.

    ``undirected`` holds pairs ``(u, v)`` with ``u < v``; ``arcs`` holds
    ordered pairs ``(tail, head)``.  A vertex pair may carry an undirected
    edge or arcs, never both.  Two opposite arcs (a digon) are kept as
    arcs; see :func:`digons_to_undirected`.
    """

    __slots__ = ("_n", "_undirected", "_arcs", "_out")

    def __init__(self, n: int, undirected: Iterable = (), arcs: Iterable = ()) -> None:
        if not isinstance(n, int) or n < 0:
            raise GraphError(f"vertex count must be a nonnegative integer, got {n!r}")
        und: set[tuple[int, int]] = set()
        for u, v in undirected:
            self._check_pair(n, u, v)
            key = _edge_key(u, v)
            if key in und:
                raise GraphError(f"duplicate undirected edge {key}")
            und.add(key)
        arc_set: set[tuple[int, int]] = set()
        for u, v in arcs:
            self._check_pair(n, u, v)
            if (u, v) in arc_set:
                raise GraphError(f"duplicate arc {(u, v)}")
            if _edge_key(u, v) in und:
                raise GraphError(f"pair {_edge_key(u, v)} is both an edge and an arc")
            arc_set.add((u, v))

        self._n = n
        self._undirected = frozenset(und)
        self._arcs = frozenset(arc_set)
        out: list[list[int]] = [[] for _ in range(n)]
        for u, v in sorted(und):
            out[u].append(v)
            out[v].append(u)
        for u, v in sorted(arc_set):
            out[u].append(v)
        self._out = tuple(tuple(sorted(nb)) for nb in out)

    @staticmethod
    def _check_pair(n: int, u: int, v: int) -> None:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"vertex out of range in {(u, v)} for n={n}")
        if u == v:
            raise GraphError(f"self-loop at {u}")

    @property
    def n(self) -> int:
        return self._n

    @property
    def undirected(self) -> frozenset[tuple[int, int]]:
        return self._undirected

    @property
    def arcs(self) -> frozenset[tuple[int, int]]:
        return self._arcs

    def successors(self, u: int) -> tuple[int, ...]:
        """Vertices reachable from ``u`` in one step."""
        return self._out[u]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return (self._n, self._undirected, self._arcs) == (other._n, other._undirected, other._arcs)

    def __hash__(self) -> int:
        return hash((self._n, self._undirected, self._arcs))

    def __repr__(self) -> str:
        return f"MixedGraph(n={self._n}, edges={len(self._undirected)}, arcs={len(self._arcs)})"


@dataclass(frozen=True)
class DegreeProfile:
    max_undirected: int
    max_out: int
    undirected_degrees: tuple[int, ...]
    out_degrees: tuple[int, ...]
    in_degrees: tuple[int, ...]


def degree_profile(g: MixedGraph) -> DegreeProfile:
    und = [0] * g.n
    out = [0] * g.n
    ind = [0] * g.n
    for u, v in g.undirected:
        und[u] += 1
        und[v] += 1
    for u, v in g.arcs:
        out[u] += 1
        ind[v] += 1
    return DegreeProfile(
        max_undirected=max(und, default=0),
        max_out=max(out, default=0),
        undirected_degrees=tuple(und),
        out_degrees=tuple(out),
        in_degrees=tuple(ind),
    )


def bfs_distances(g: MixedGraph, source: int) -> list:
    """Shortest path lengths from ``source``; unreachable vertices get ``INF``."""
    if not 0 <= source < g.n:
        raise GraphError(f"source {source} out of range for n={g.n}")
    dist: list = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.successors(u):
            if dist[w] is INF:
                dist[w] = du
                queue.append(w)
    return dist


def eccentricity(g: MixedGraph, source: int):
    return max(bfs_distances(g, source))


def diameter(g: MixedGraph):
    """Largest distance over ordered pairs, or ``INF`` if some pair is unreachable."""
    if g.n < 1:
        raise GraphError("diameter of the empty graph is undefined")
    best = 0
    for s in range(g.n):
        ecc = eccentricity(g, s)
        if ecc is INF:
            return INF
        best = max(best, ecc)
    return best


def distance_profile(g: MixedGraph, source: int) -> list[int]:
    counts: list[int] = []
    for d in bfs_distances(g, source):
        if d is INF:
            continue
        while len(counts) <= d:
            counts.append(0)
        counts[d] += 1
    return counts


class Reach(str, enum.Enum):
    ROOT = "root"
    DIRECTED = "directed"
    UNDIRECTED = "undirected"


@dataclass(frozen=True)
class MooreTree:
    graph: MixedGraph
    level_of: tuple[int, ...]
    reached_by: tuple[Reach, ...]
    root: int = 0

    def level_counts(self) -> list[int]:
        counts = [0] * (max(self.level_of) + 1)
        for lvl in self.level_of:
            counts[lvl] += 1
        return counts


def moore_tree(p: MixedParams) -> MooreTree:
    """Build the maximal spanning tree of depth ``k`` in BFS label order.

    Each parent, in ascending label order, receives ``z`` arc-children and
    then its undirected children: ``r`` for the root and for vertices
    reached by an arc, ``r - 1`` for vertices reached by an edge.
    """
    z, r = p.z, p.r
    level_of = [0]
    reached = [Reach.ROOT]
    edges: list[tuple[int, int]] = []
    arcs: list[tuple[int, int]] = []
    frontier = [0]
    for depth in range(1, p.k + 1):
        nxt = []
        for parent in frontier:
            n_und = r - 1 if reached[parent] is Reach.UNDIRECTED else r
            for kind, count in ((Reach.DIRECTED, z), (Reach.UNDIRECTED, n_und)):
                for _ in range(count):
                    child = len(level_of)
                    level_of.append(depth)
                    reached.append(kind)
                    (arcs if kind is Reach.DIRECTED else edges).append((parent, child))
                    nxt.append(child)
        frontier = nxt
    graph = MixedGraph(len(level_of), edges, arcs)
    return MooreTree(graph, tuple(level_of), tuple(reached))


def _kautz_words(z: int) -> list[tuple[int, int]]:
    if not isinstance(z, int) or z < 1:
        raise ValueError(f"z must be a positive integer, got {z!r}")
    return sorted(permutations(range(z + 2), 2))


def kautz_digraph(z: int) -> MixedGraph:
    """Kautz digraph on 2-letter words over ``z + 2`` letters, arcs only (digons kept)."""
    words = _kautz_words(z)
    index = {w: i for i, w in enumerate(words)}
    arcs = [
        (index[(a, b)], index[(b, c)])
        for a, b in words
        for c in range(z + 2)
        if c != b
    ]
    return MixedGraph(len(words), (), arcs)


def kautz_mixed(z: int) -> MixedGraph:
    """Kautz mixed graph: the digon ``(a,b) <-> (b,a)`` becomes one undirected edge.

    Vertices are numbered in lexicographic order of the words ``(a, b)``.
    """
    words = _kautz_words(z)
    index = {w: i for i, w in enumerate(words)}
    edges = []
    arcs = []
    for a, b in words:
        u = index[(a, b)]
        for c in range(z + 2):
            if c == b:
                continue
            w = index[(b, c)]
            if c == a:
                if u < w:
                    edges.append((u, w))
            else:
                arcs.append((u, w))
    return MixedGraph(len(words), edges, arcs)


def digons_to_undirected(g: MixedGraph) -> MixedGraph:
    digons = {(u, v) for u, v in g.arcs if (v, u) in g.arcs}
    edges = set(g.undirected) | {_edge_key(u, v) for u, v in digons}
    return MixedGraph(g.n, edges, g.arcs - digons)


@dataclass(frozen=True)
class CheckReport:
    """Measured parameters of a graph against the corrected bound.

    ``bound`` and ``slack`` are None when the diameter is infinite.
    """

    degrees: DegreeProfile
    diameter: object
    order: int
    bound: int | None
    attains_bound: bool
    slack: int | None

    @property
    def z(self) -> int:
        return self.degrees.max_out

    @property
    def r(self) -> int:
        return self.degrees.max_undirected

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "z": self.z,
            "r": self.r,
            "diameter": "infinite" if self.diameter is INF else self.diameter,
            "bound": None if self.bound is None else str(self.bound),
            "slack": None if self.slack is None else str(self.slack),
            "attains_bound": self.attains_bound,
        }


def check_moore(g: MixedGraph) -> CheckReport:
    prof = degree_profile(g)
    diam = diameter(g)
    if diam is INF:
        return CheckReport(prof, INF, g.n, None, False, None)
    # diameter 0 means a single vertex, which is the whole bound for any k
    bound = 1 if diam == 0 else moore_bound(MixedParams(prof.max_out, prof.max_undirected, diam))
    slack = bound - g.n
    return CheckReport(prof, diam, g.n, bound, slack == 0, slack)


def parse_mixed(text: str) -> MixedGraph:
    n = None
    edges: list[tuple[int, int]] = []
    arcs: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], tuple[str, int]] = {}
    arc_seen: dict[tuple[int, int], int] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "mixed":
            if n is not None:
                raise GraphParseError(lineno, "repeated header")
            if len(parts) != 2 or not _is_int(parts[1]) or int(parts[1]) < 1:
                raise GraphParseError(lineno, "header must be 'mixed <n>' with n >= 1")
            n = int(parts[1])
            continue
        if parts[0] not in ("e", "a"):
            raise GraphParseError(lineno, f"unknown line type {parts[0]!r}")
        if n is None:
            raise GraphParseError(lineno, "edge before 'mixed <n>' header")
        if len(parts) != 3 or not (_is_int(parts[1]) and _is_int(parts[2])):
            raise GraphParseError(lineno, f"expected '{parts[0]} <u> <v>'")
        u, v = int(parts[1]), int(parts[2])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(lineno, f"vertex out of range 0..{n - 1}")
        if u == v:
            raise GraphParseError(lineno, f"self-loop at {u}")
        key = _edge_key(u, v)
        if parts[0] == "e":
            if key in seen:
                kind, first = seen[key]
                what = "duplicate edge" if kind == "e" else "edge conflicts with arc"
                raise GraphParseError(lineno, f"{what} (first seen on line {first})")
            seen[key] = ("e", lineno)
            edges.append((u, v))
        else:
            if (u, v) in arc_seen:
                raise GraphParseError(lineno, f"duplicate arc (first seen on line {arc_seen[(u, v)]})")
            if key in seen and seen[key][0] == "e":
                raise GraphParseError(lineno, f"arc conflicts with edge (line {seen[key][1]})")
            seen.setdefault(key, ("a", lineno))
            arc_seen[(u, v)] = lineno
            arcs.append((u, v))
    if n is None:
        raise GraphParseError(0, "missing 'mixed <n>' header")
    return MixedGraph(n, edges, arcs)


def _is_int(tok: str) -> bool:
    return tok.isdigit() or (tok.startswith("-") and tok[1:].isdigit())


def format_mixed(g: MixedGraph) -> str:
    lines = [f"mixed {g.n}"]
    lines += [f"e {u} {v}" for u, v in sorted(g.undirected)]
    lines += [f"a {u} {v}" for u, v in sorted(g.arcs)]
    return "\n".join(lines) + "\n"


def read_mixed(path) -> MixedGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_mixed(fh.read())


def write_mixed(g: MixedGraph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_mixed(g))


def to_dot(g: MixedGraph, name: str = "G") -> str:
    lines = [f"digraph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -> {v} [dir=none];" for u, v in sorted(g.undirected)]
    lines += [f"  {u} -> {v};" for u, v in sorted(g.arcs)]
    lines.append("}")
    return "\n".join(lines) + "\n"
