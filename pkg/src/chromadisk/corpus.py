"""Graph generators and the fixed families the verification suites run over.

Everything here is deterministic: random graphs take explicit seeds, and the
named corpora are built the same way on every call.
"""

import random
from itertools import combinations

from .chromatic import _isomorphic, _refined_labels
from .graphs import Graph, classify, is_claw_free


def empty_graph(n: int) -> Graph:
    return Graph(n, [])


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def claw_graph() -> Graph:
    return star_graph(3)


def diamond_graph() -> Graph:
    return Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def square_graph() -> Graph:
    return cycle_graph(4)


def chorded_cycle(n: int, chord=(0, 2)) -> Graph:
    g = cycle_graph(n)
    return Graph(n, set(g.edges) | {tuple(sorted(chord))})


def prism_graph() -> Graph:
    """Two triangles joined by a perfect matching."""
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def wheel_graph(rim: int) -> Graph:
    """Cycle of ``rim`` vertices plus a hub adjacent to all of them."""
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, rim) for i in range(rim)]
    return Graph(rim + 1, edges)


def antiprism_graph(k: int) -> Graph:
    """Two k-cycles, each outer vertex joined to two consecutive inner ones."""
    if k < 3:
        raise ValueError("antiprism needs k >= 3")
    edges = []
    for i in range(k):
        edges.append((i, (i + 1) % k))
        edges.append((k + i, k + (i + 1) % k))
        edges.append((i, k + i))
        edges.append((i, k + (i + 1) % k))
    return Graph(2 * k, edges)


def octahedron() -> Graph:
    return antiprism_graph(3)


def icosahedron() -> Graph:
    """The 5-regular triangulation on 12 vertices."""
    a = [1, 2, 3, 4, 5]
    b = [6, 7, 8, 9, 10]
    edges = [(0, v) for v in a] + [(11, v) for v in b]
    for j in range(5):
        edges.append((a[j], a[(j + 1) % 5]))
        edges.append((b[j], b[(j + 1) % 5]))
        edges.append((a[j], b[j]))
        edges.append((a[j], b[(j - 1) % 5]))
    return Graph(12, edges)


def line_graph(g: Graph) -> Graph:
    """Vertex per edge of g, adjacent when the edges share an endpoint."""
    es = sorted(g.edges)
    idx = {e: i for i, e in enumerate(es)}
    out = []
    for e, f in combinations(es, 2):
        if set(e) & set(f):
            out.append((idx[e], idx[f]))
    return Graph(len(es), out)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    edges = list(g.edges) + [(u + g.n, v + g.n) for u, v in h.edges]
    return Graph(g.n + h.n, edges)


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges)


def random_connected_graph(n: int, extra_edges: int, seed: int) -> Graph:
    """Random spanning tree plus ``extra_edges`` distinct random chords."""
    rng = random.Random(seed)
    edges = set()
    verts = list(range(1, n))
    rng.shuffle(verts)
    reached = [0]
    for v in verts:
        u = rng.choice(reached)
        edges.add((min(u, v), max(u, v)))
        reached.append(v)
    pool = [e for e in combinations(range(n), 2) if e not in edges]
    rng.shuffle(pool)
    edges.update(pool[: min(extra_edges, len(pool))])
    return Graph(n, edges)


def random_ordering(n: int, seed: int) -> list[int]:
    order = list(range(n))
    random.Random(seed).shuffle(order)
    return order


def iso_distinct(graphs) -> list[Graph]:
    """Filter a graph list down to one representative per isomorphism class."""
    buckets: dict[tuple, list] = {}
    out = []
    for g in graphs:
        labels = _refined_labels(g.n, g.adj)
        key = (g.n, g.m, tuple(sorted(labels)))
        known = buckets.setdefault(key, [])
        dup = False
        for h, h_labels in known:
            if _isomorphic(g.n, g.adj, labels, h.adj, h_labels):
                dup = True
                break
        if not dup:
            known.append((g, labels))
            out.append(g)
    return out


_ALL_GRAPHS_CACHE: dict[int, list[Graph]] = {}


def all_graphs_up_to_iso(n: int) -> list[Graph]:
    """Every isomorphism class on exactly n vertices; intended for n <= 6."""
    if n in _ALL_GRAPHS_CACHE:
        return _ALL_GRAPHS_CACHE[n]
    pairs = list(combinations(range(n), 2))
    graphs = []
    for mask in range(1 << len(pairs)):
        edges = [e for i, e in enumerate(pairs) if mask >> i & 1]
        graphs.append(Graph(n, edges))
    result = iso_distinct(graphs)
    _ALL_GRAPHS_CACHE[n] = result
    return result


def connected_graphs_with_edges(m_max: int) -> list[Graph]:
    """Connected graphs with 1..m_max edges, one per isomorphism class.

    A connected graph with m edges has at most m + 1 vertices, so scanning
    vertex counts up to m_max + 1 is exhaustive.
    """
    from .chromatic import _components

    out = []
    for n in range(2, m_max + 2):
        for g in all_graphs_up_to_iso(n):
            if not 1 <= g.m <= m_max:
                continue
            _, c = _components(g.n, g.adj)
            if c == 1:
                out.append(g)
    return out


def scheme_corpus() -> list[Graph]:
    """Mixed small graphs (not claw-free only) for the partition checks."""
    return [
        complete_graph(3),
        path_graph(4),
        square_graph(),
        claw_graph(),
        diamond_graph(),
        complete_graph(4),
        cycle_graph(5),
        star_graph(4),
        disjoint_union(complete_graph(3), path_graph(2)),
        complete_graph(5),
        prism_graph(),
        random_graph(7, 0.5, seed=11),
        random_graph(8, 0.4, seed=7),
        random_connected_graph(8, 5, seed=23),
    ]


def claw_free_corpus(max_vertices: int = 8) -> list[Graph]:
    """Claw-free graphs for the merge-obstruction checks."""
    cands = [
        complete_graph(3),
        complete_graph(4),
        complete_graph(5),
        diamond_graph(),
        path_graph(4),
        path_graph(6),
        cycle_graph(4),
        cycle_graph(5),
        cycle_graph(6),
        cycle_graph(7),
        cycle_graph(8),
        chorded_cycle(7),
        octahedron(),
        prism_graph(),
    ]
    cands += connected_line_graph_family(max_line_vertices=max_vertices)
    out = [g for g in cands if g.n <= max_vertices and is_claw_free(g)]
    return iso_distinct(out)


def connected_line_graph_family(max_line_vertices: int = 8) -> list[Graph]:
    """Line graphs of all connected graphs with up to 5 edges, plus two
    seeded 6-edge ones."""
    hs = connected_graphs_with_edges(5)
    hs.append(random_connected_graph(5, 2, seed=3))
    hs.append(random_connected_graph(6, 1, seed=5))
    out = [line_graph(h) for h in hs]
    return [g for g in out if 1 <= g.n <= max_line_vertices]


def g1_corpus(max_vertices: int = 8) -> list[Graph]:
    """Claw-free, square-free, diamond-free graphs."""
    cands = [
        complete_graph(2),
        complete_graph(3),
        complete_graph(4),
        complete_graph(5),
        complete_graph(6),
        path_graph(3),
        path_graph(5),
        path_graph(7),
        cycle_graph(5),
        cycle_graph(6),
        cycle_graph(7),
        cycle_graph(8),
        chorded_cycle(7),
        chorded_cycle(8, chord=(0, 2)),
    ]
    out = [
        g
        for g in cands
        if g.n <= max_vertices and classify(g).class_index == 1
    ]
    return iso_distinct(out)


def certificate_corpus(max_vertices: int = 12, include_largest: bool = True) -> list[Graph]:
    """Claw-free graphs with max degree >= 3 for the zero-free disk checks."""
    cands = [
        complete_graph(4),
        complete_graph(5),
        complete_graph(6),
        complete_graph(7),
        diamond_graph(),
        chorded_cycle(7),
        chorded_cycle(9),
        octahedron(),
        prism_graph(),
        wheel_graph(5),
        antiprism_graph(4),
        line_graph(complete_graph(5)),
        line_graph(random_connected_graph(6, 2, seed=17)),
        line_graph(random_connected_graph(7, 1, seed=29)),
    ]
    cands += connected_line_graph_family(max_line_vertices=max_vertices)
    if include_largest:
        cands.append(icosahedron())
    out = [
        g
        for g in cands
        if g.n <= max_vertices and g.max_degree() >= 3 and is_claw_free(g)
    ]
    return iso_distinct(out)


def random_graph_batch(count: int = 200, sizes=(6, 7, 8), base_seed: int = 1000) -> list[Graph]:
    """Seeded random graphs cycling through the given sizes and densities."""
    densities = (0.3, 0.5, 0.7)
    out = []
    for i in range(count):
        n = sizes[i % len(sizes)]
        p = densities[(i // len(sizes)) % len(densities)]
        out.append(random_graph(n, p, seed=base_seed + i))
    return out
