"""Finite simple graphs: construction, parsing, and neighborhood structure.

Vertices are the integers 0..n-1. Edges are unordered pairs stored as sorted
tuples. All classification routines are exhaustive scans; the package targets
desk-scale graphs where the downstream verifiers dominate runtime anyway.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import DegenerateDegreeError, GraphFormatError


class Graph:
    """Immutable simple graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "adj", "parse_warnings")

    def __init__(self, n: int, edges, parse_warnings: tuple[str, ...] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            norm.add((u, v) if u < v else (v, u))
        adj = [set() for _ in range(n)]
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in adj))
        object.__setattr__(self, "parse_warnings", tuple(parse_warnings))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def max_degree(self) -> int:
        if self.n == 0:
            return 0
        return max(len(s) for s in self.adj)

    def induced(self, vertices) -> "Graph":
        """Induced subgraph, relabeled to 0..k-1 in increasing vertex order."""
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        keep = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph(len(vs), keep)

    def without_vertex(self, v: int) -> "Graph":
        return self.induced(set(range(self.n)) - {v})

    def relabel(self, perm) -> "Graph":
        """Apply a permutation given as a sequence: new label of v is perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def __eq__(self, other) -> bool:
        if isinstance(other, Graph):
            return self.n == other.n and self.edges == other.edges
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def parse_graph(text: str) -> Graph:
    """Parse the plain edge-list format.

    The first significant line is "n m"; the next m significant lines are
    "u v" with 0-based endpoints. Lines starting with '#' and blank lines are
    skipped. Duplicate edges collapse to one and leave a warning on the
    returned graph's ``parse_warnings``. Anything else raises
    GraphFormatError naming the offending line.
    """
    header = None
    n = m = 0
    edges = []
    seen = {}
    warnings = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise GraphFormatError("header must be 'n m'", line_no)
            try:
                n, m = int(fields[0]), int(fields[1])
            except ValueError:
                raise GraphFormatError("header must contain two integers", line_no)
            if n < 0 or m < 0:
                raise GraphFormatError("counts must be nonnegative", line_no)
            header = line_no
            continue
        if len(edges) + len(warnings) >= m:
            raise GraphFormatError(f"more than the declared {m} edges", line_no)
        if len(fields) != 2:
            raise GraphFormatError("edge line must be 'u v'", line_no)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError("edge endpoints must be integers", line_no)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", line_no)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range 0..{n - 1}", line_no)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            warnings.append(
                f"line {line_no}: duplicate edge {key[0]} {key[1]}"
                f" (first seen on line {seen[key]})"
            )
        else:
            seen[key] = line_no
            edges.append(key)
    if header is None:
        raise GraphFormatError("empty document, expected an 'n m' header")
    found = len(edges) + len(warnings)
    if found != m:
        raise GraphFormatError(f"declared {m} edges but found {found}")
    return Graph(n, edges, parse_warnings=tuple(warnings))


def format_graph(g: Graph) -> str:
    """Inverse of parse_graph, edges in sorted order."""
    lines = [f"{g.n} {g.m}"]
    for u, v in sorted(g.edges):
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ClassMembership:
    """Hereditary-class flags plus the bound family index they select.

    class_index is 0 for claw-free graphs, 1 for claw-free graphs that are
    also square-free and diamond-free, and None when a claw is present.
    """

    claw_free: bool
    square_free: bool
    diamond_free: bool
    class_index: int | None


def is_claw_free(g: Graph) -> bool:
    """True when no vertex has three pairwise non-adjacent neighbors."""
    for v in range(g.n):
        ns = sorted(g.adj[v])
        if len(ns) < 3:
            continue
        for a, b, c in combinations(ns, 3):
            if b not in g.adj[a] and c not in g.adj[a] and c not in g.adj[b]:
                return False
    return True


def _induced_edge_count(g: Graph, quad) -> int:
    return sum(1 for u, v in combinations(quad, 2) if v in g.adj[u])


def is_square_free(g: Graph) -> bool:
    """True when no 4 vertices induce a chordless cycle.

    On 4 vertices, exactly 4 induced edges with minimum degree 2 pins down
    the 4-cycle, so a scan over quadruples suffices.
    """
    for quad in combinations(range(g.n), 4):
        if _induced_edge_count(g, quad) != 4:
            continue
        degs = [sum(1 for w in quad if w != u and w in g.adj[u]) for u in quad]
        if min(degs) == 2:
            return False
    return True


def is_diamond_free(g: Graph) -> bool:
    """True when no 4 vertices induce a complete graph minus one edge."""
    for quad in combinations(range(g.n), 4):
        if _induced_edge_count(g, quad) == 5:
            return False
    return True


def classify(g: Graph) -> ClassMembership:
    cf = is_claw_free(g)
    sf = is_square_free(g)
    df = is_diamond_free(g)
    if not cf:
        idx = None
    elif sf and df:
        idx = 1
    else:
        idx = 0
    return ClassMembership(claw_free=cf, square_free=sf, diamond_free=df, class_index=idx)


def non_edges_in_neighborhood(g: Graph, v: int) -> frozenset:
    """Unordered pairs of neighbors of v that are not adjacent to each other."""
    ns = sorted(g.adj[v])
    return frozenset((a, b) for a, b in combinations(ns, 2) if b not in g.adj[a])


@dataclass(frozen=True)
class NeighborhoodStats:
    """Per-vertex non-edge counts inside neighborhoods and their normalized max.

    kappa = max_v |I_v| / floor(delta^2 / 4) as an exact rational, where I_v is
    the set of non-edges among the neighbors of v. The value is not clamped;
    it exceeds 1 only for graphs with a claw.
    """

    delta: int
    i_v: tuple[int, ...]
    kappa: Fraction


def neighborhood_stats(g: Graph) -> NeighborhoodStats:
    delta = g.max_degree()
    if delta <= 1:
        raise DegenerateDegreeError(
            f"max degree {delta} gives a zero denominator floor(delta^2/4)"
        )
    counts = tuple(len(non_edges_in_neighborhood(g, v)) for v in range(g.n))
    denom = (delta * delta) // 4
    kappa = Fraction(max(counts), denom)
    return NeighborhoodStats(delta=delta, i_v=counts, kappa=kappa)


def pair_independence_ratio(g: Graph) -> Fraction:
    """Exact kappa; raises DegenerateDegreeError when max degree <= 1."""
    return neighborhood_stats(g).kappa
