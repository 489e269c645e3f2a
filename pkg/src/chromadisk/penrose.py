"""Penrose trees and forests under a total vertex order.

A subtree of the graph is rooted at its order-least vertex. Its closure adds
back every omitted graph edge between tree vertices that joins two vertices at
equal depth, or a vertex x to a vertex y one level above x such that y comes
after x's father in the order. A tree equal to its closure is called Penrose
here; a forest is Penrose when each component tree is and the closure glues no
two components together (no graph edge between components qualifies, which for
vertex-disjoint trees is automatic since closure edges stay inside one tree's
vertex set).

Forests are collected by edge count into a generating polynomial whose
alternating evaluation reproduces the chromatic polynomial.
"""

from dataclasses import dataclass

from .errors import ConditioningError, ContractViolationError, EnumerationCapError
from .graphs import Graph
from .intpoly import IntPolynomial

DEFAULT_FOREST_CAP = 12


@dataclass(frozen=True)
class VertexOrdering:
    """Total order on 0..n-1 with both direction maps.

    order[p] is the vertex at position p; rank[v] is the position of v.
    """

    order: tuple[int, ...]
    rank: tuple[int, ...]

    @classmethod
    def from_order(cls, seq) -> "VertexOrdering":
        order = tuple(seq)
        n = len(order)
        if sorted(order) != list(range(n)):
            raise ContractViolationError("ordering must be a permutation of 0..n-1")
        rank = [0] * n
        for p, v in enumerate(order):
            rank[v] = p
        return cls(order=order, rank=tuple(rank))

    @classmethod
    def natural(cls, n: int) -> "VertexOrdering":
        idx = tuple(range(n))
        return cls(order=idx, rank=idx)

    @classmethod
    def anchored_at(cls, g: Graph, u: int) -> "VertexOrdering":
        """u first, then its neighbors ascending, then the rest ascending."""
        ns = sorted(g.adj[u])
        rest = sorted(set(range(g.n)) - {u} - set(ns))
        return cls.from_order([u, *ns, *rest])

    @classmethod
    def anchored_at_pair(cls, g: Graph, u: int, v1: int, v2: int) -> "VertexOrdering":
        """u, then v1, v2 from its neighborhood, then remaining neighbors, then rest."""
        if v1 == v2 or v1 not in g.adj[u] or v2 not in g.adj[u]:
            raise ContractViolationError("v1, v2 must be distinct neighbors of u")
        ns = sorted(g.adj[u] - {v1, v2})
        rest = sorted(set(range(g.n)) - {u, v1, v2} - set(ns))
        return cls.from_order([u, v1, v2, *ns, *rest])

    def least(self, vertices) -> int:
        return min(vertices, key=self.rank.__getitem__)


class RootedTreeView:
    """A tree-shaped edge subset with root, depth, and father maps.

    The root is always the order-least vertex of the edge set's support.
    """

    __slots__ = ("edges", "vertices", "root", "depth", "father")

    def __init__(self, g: Graph, ordering: VertexOrdering, edges):
        es = {(u, v) if u < v else (v, u) for u, v in edges}
        for e in es:
            if e not in g.edges:
                raise ContractViolationError(f"edge {e} is not in the graph")
        verts = {x for e in es for x in e}
        if not es:
            raise ContractViolationError("tree view needs at least one edge")
        if len(verts) != len(es) + 1:
            raise ContractViolationError("edge set is not a tree")
        root = ordering.least(verts)
        depth = {root: 0}
        father: dict[int, int] = {}
        adj: dict[int, list[int]] = {v: [] for v in verts}
        for u, v in es:
            adj[u].append(v)
            adj[v].append(u)
        frontier = [root]
        while frontier:
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if y not in depth:
                        depth[y] = depth[x] + 1
                        father[y] = x
                        nxt.append(y)
            frontier = nxt
        if len(depth) != len(verts):
            raise ContractViolationError("edge set is not connected")
        self.edges = frozenset(es)
        self.vertices = frozenset(verts)
        self.root = root
        self.depth = depth
        self.father = father


def penrose_closure(g: Graph, ordering: VertexOrdering, tree) -> frozenset:
    """Edge set of the closure of a tree: the tree plus its qualifying chords.

    A chord {x, y} (a graph edge inside the tree's vertex set, not in the
    tree) qualifies when depth(x) == depth(y), or when, with x the deeper
    endpoint by one level, y comes after x's father in the order.
    """
    t = tree if isinstance(tree, RootedTreeView) else RootedTreeView(g, ordering, tree)
    rank = ordering.rank
    out = set(t.edges)
    verts = sorted(t.vertices)
    for i, x in enumerate(verts):
        for y in verts[i + 1 :]:
            if y not in g.adj[x]:
                continue
            e = (x, y)
            if e in t.edges:
                continue
            dx, dy = t.depth[x], t.depth[y]
            if dx == dy:
                out.add(e)
            elif dx == dy + 1 and rank[y] > rank[t.father[x]]:
                out.add(e)
            elif dy == dx + 1 and rank[x] > rank[t.father[y]]:
                out.add(e)
    return frozenset(out)


def is_penrose_tree(g: Graph, ordering: VertexOrdering, tree) -> bool:
    """True when the tree equals its own closure."""
    t = tree if isinstance(tree, RootedTreeView) else RootedTreeView(g, ordering, tree)
    return penrose_closure(g, ordering, t) == t.edges


@dataclass(frozen=True)
class Forest:
    """Vertex-disjoint union of trees, stored with its component split."""

    edges: frozenset
    components: tuple[frozenset, ...]

    @classmethod
    def from_edges(cls, edges) -> "Forest":
        es = {(u, v) if u < v else (v, u) for u, v in edges}
        parent: dict[int, int] = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in es:
            parent.setdefault(u, u)
            parent.setdefault(v, v)
            ru, rv = find(u), find(v)
            if ru == rv:
                raise ContractViolationError("edge set contains a cycle")
            parent[ru] = rv
        groups: dict[int, set] = {}
        for u, v in sorted(es):
            groups.setdefault(find(u), set()).add((u, v))
        comps = tuple(
            frozenset(c) for c in sorted(groups.values(), key=lambda c: min(c))
        )
        return cls(edges=frozenset(es), components=comps)

    @property
    def n_trees(self) -> int:
        return len(self.components)

    @property
    def vertices(self) -> frozenset:
        return frozenset(x for e in self.edges for x in e)


def is_penrose_forest(g: Graph, ordering: VertexOrdering, forest) -> bool:
    """True when every component tree equals its closure.

    Closure acts componentwise, so no cross-component gluing can occur and
    the componentwise check is the whole condition.
    """
    f = forest if isinstance(forest, Forest) else Forest.from_edges(forest)
    return all(is_penrose_tree(g, ordering, comp) for comp in f.components)


def _sorted_adj(g: Graph) -> list[tuple[int, ...]]:
    return [tuple(sorted(s)) for s in g.adj]


def _grow_penrose_trees(g, rank, adj, v, allowed):
    """Yield edge-tuples of Penrose trees rooted at v inside ``allowed``.

    Requires v to be the rank-least member of allowed so the root never
    changes as the tree grows. The empty tree (v alone) is yielded first.
    A vertex is only attached when none of its graph edges back into the
    current tree would qualify for the closure; such a chord can never be
    removed by later growth, which makes the pruning safe.
    """
    depth = {v: 0}
    father: dict[int, int] = {}
    tree: list[tuple[int, int]] = []

    def chord_free(w, x):
        dw = depth[x] + 1
        for y in adj[w]:
            if y == x or y not in depth:
                continue
            dy = depth[y]
            if dy == dw:
                return False
            if dy == dw - 1 and rank[y] > rank[x]:
                return False
            if dy == dw + 1 and rank[w] > rank[father[y]]:
                return False
        return True

    def rec(cands):
        yield tuple(tree)
        for i in range(len(cands)):
            x, w = cands[i]
            if w in depth:
                continue
            if not chord_free(w, x):
                continue
            depth[w] = depth[x] + 1
            father[w] = x
            tree.append((x, w) if x < w else (w, x))
            nxt = cands[i + 1 :] + [
                (w, y) for y in adj[w] if y not in depth and y in allowed
            ]
            yield from rec(nxt)
            tree.pop()
            del depth[w]
            del father[w]

    yield from rec([(v, y) for y in adj[v] if y in allowed])


def _grow_all_trees(g, adj, v, allowed):
    """Yield edge-tuples of all subtrees containing v inside ``allowed``."""
    inside = {v}
    tree: list[tuple[int, int]] = []

    def rec(cands):
        yield tuple(tree)
        for i in range(len(cands)):
            x, w = cands[i]
            if w in inside:
                continue
            inside.add(w)
            tree.append((x, w) if x < w else (w, x))
            nxt = cands[i + 1 :] + [
                (w, y) for y in adj[w] if y not in inside and y in allowed
            ]
            yield from rec(nxt)
            tree.pop()
            inside.discard(w)

    yield from rec([(v, y) for y in adj[v] if y in allowed])


def penrose_trees_containing(g: Graph, ordering: VertexOrdering, v: int, allowed=None):
    """Yield the edge sets of Penrose trees whose vertex set contains v.

    ``allowed`` restricts the usable vertices (v must belong to it). The empty
    tree, v alone, is included. When v is the order-least allowed vertex the
    enumeration prunes closure violations as it grows; otherwise trees are
    grown freely and filtered, because attaching an earlier vertex re-roots
    the tree and can change every depth.
    """
    if allowed is None:
        allowed = frozenset(range(g.n))
    else:
        allowed = frozenset(allowed)
    if v not in allowed:
        raise ContractViolationError("v must be in the allowed set")
    adj = _sorted_adj(g)
    rank = ordering.rank
    if all(rank[w] >= rank[v] for w in allowed):
        return (frozenset(t) for t in _grow_penrose_trees(g, rank, adj, v, allowed))
    return (
        frozenset(t)
        for t in _grow_all_trees(g, adj, v, allowed)
        if not t or is_penrose_tree(g, ordering, t)
    )


def enumerate_penrose_forests(
    g: Graph, ordering: VertexOrdering | None = None, max_vertices: int = DEFAULT_FOREST_CAP
):
    """Yield every Penrose forest of the graph, the empty forest included.

    Components are chosen root by root in increasing order, so each forest
    appears exactly once. Graphs above ``max_vertices`` are refused.
    """
    if g.n > max_vertices:
        raise EnumerationCapError("penrose forest enumeration", g.n, max_vertices)
    if ordering is None:
        ordering = VertexOrdering.natural(g.n)
    adj = _sorted_adj(g)
    rank = ordering.rank

    def rec(avail, acc):
        if not avail:
            yield Forest(
                edges=frozenset(e for c in acc for e in c), components=tuple(acc)
            )
            return
        v = min(avail, key=rank.__getitem__)
        yield from rec(avail - {v}, acc)
        for tree in _grow_penrose_trees(g, rank, adj, v, avail):
            if not tree:
                continue
            used = {x for e in tree for x in e}
            yield from rec(avail - used, acc + [frozenset(tree)])

    return rec(frozenset(range(g.n)), [])


def penrose_polynomial(
    g: Graph, ordering: VertexOrdering | None = None, max_vertices: int = DEFAULT_FOREST_CAP
) -> IntPolynomial:
    """Count Penrose forests by edge count.

    Same recursion as the enumerator, but memoized on the set of still
    available vertices: the count below such a set is the forest polynomial
    of the induced subgraph, independent of how the set was reached.
    """
    if g.n > max_vertices:
        raise EnumerationCapError("penrose forest count", g.n, max_vertices)
    if ordering is None:
        ordering = VertexOrdering.natural(g.n)
    adj = _sorted_adj(g)
    rank = ordering.rank
    memo: dict[frozenset, list[int]] = {}

    def count(avail: frozenset) -> list[int]:
        if not avail:
            return [1]
        hit = memo.get(avail)
        if hit is not None:
            return hit
        v = min(avail, key=rank.__getitem__)
        acc = list(count(avail - {v}))
        for tree in _grow_penrose_trees(g, rank, adj, v, avail):
            k = len(tree)
            if k == 0:
                continue
            used = {x for e in tree for x in e}
            sub = count(avail - used)
            if len(acc) < len(sub) + k:
                acc.extend([0] * (len(sub) + k - len(acc)))
            for j, c in enumerate(sub):
                acc[j + k] += c
        memo[avail] = acc
        return acc

    return IntPolynomial(count(frozenset(range(g.n))))


def forest_to_chromatic(fpoly: IntPolynomial, n: int) -> IntPolynomial:
    """P(q) = q^n F(-1/q): coefficient of q^(n-k) is (-1)^k times the k-th count."""
    out = [0] * (n + 1)
    for k in range(fpoly.degree + 1):
        out[n - k] = (-1) ** k * fpoly.coeff(k)
    return IntPolynomial(out)


def chromatic_to_forest(p: IntPolynomial) -> IntPolynomial:
    """Inverse transform; the chromatic polynomial is monic of degree n."""
    n = p.degree
    if n < 0 or p.coeff(n) != 1:
        raise ValueError("expected a monic chromatic polynomial")
    return IntPolynomial([(-1) ** k * p.coeff(n - k) for k in range(n + 1)])


def chromatic_via_penrose(
    g: Graph, ordering: VertexOrdering | None = None, max_vertices: int = DEFAULT_FOREST_CAP
) -> IntPolynomial:
    """Chromatic polynomial through the signed forest count."""
    return forest_to_chromatic(penrose_polynomial(g, ordering, max_vertices), g.n)


def forest_polynomial(
    g: Graph,
    *,
    method: str = "chromatic",
    ordering: VertexOrdering | None = None,
    cache=None,
    max_vertices: int | None = None,
) -> IntPolynomial:
    """Forest-count polynomial by either route.

    method "chromatic" converts the deletion–contraction polynomial, which is
    fast and ordering-free (the counts do not depend on the order). Method
    "enumeration" counts Penrose forests directly under ``ordering``.
    """
    if method == "chromatic":
        from .chromatic import chromatic_deletion_contraction

        kw = {} if max_vertices is None else {"max_vertices": max_vertices}
        p = chromatic_deletion_contraction(g, cache=cache, **kw)
        return chromatic_to_forest(p)
    if method == "enumeration":
        cap = DEFAULT_FOREST_CAP if max_vertices is None else max_vertices
        return penrose_polynomial(g, ordering, cap)
    raise ValueError(f"unknown method {method!r}")


RATIO_DENOMINATOR_RTOL = 1e-9


def ratio_R(g: Graph, u: int, z: complex, *, cache=None) -> complex:
    """F_V(z) / F_(V-u)(z) - 1 for the forest polynomials of g and g - u.

    Raises ConditioningError when the denominator is within 1e-9 of zero
    relative to the coefficient mass at |z|.
    """
    if not (0 <= u < g.n):
        raise ValueError(f"vertex {u} out of range")
    f_all = forest_polynomial(g, cache=cache)
    f_del = forest_polynomial(g.without_vertex(u), cache=cache)
    denom = f_del(complex(z))
    threshold = RATIO_DENOMINATOR_RTOL * f_del.eval_abs(abs(z))
    if abs(denom) <= threshold:
        raise ConditioningError(abs(denom), threshold)
    return f_all(complex(z)) / denom - 1


@dataclass(frozen=True)
class SchemeCounterexample:
    subset: frozenset
    edge_set: frozenset
    containing_trees: int


@dataclass(frozen=True)
class SchemeReport:
    passed: bool
    subsets_checked: int
    edge_sets_checked: int
    counterexample: SchemeCounterexample | None


def verify_partition_scheme(
    g: Graph, ordering: VertexOrdering | None = None, r_max: int = 6
) -> SchemeReport:
    """Check the interval partition of connected edge sets, subset by subset.

    For every vertex subset R with at most r_max vertices, every connected
    spanning subset of the induced edge set must lie in the closure interval
    of exactly one spanning tree. Spanning means covering the vertices that
    the induced edge set touches.
    """
    from itertools import combinations

    if ordering is None:
        ordering = VertexOrdering.natural(g.n)
    subsets = 0
    edge_sets = 0
    for r in range(2, min(r_max, g.n) + 1):
        for rset in combinations(range(g.n), r):
            rs = set(rset)
            er = sorted(e for e in g.edges if e[0] in rs and e[1] in rs)
            subsets += 1
            if not er:
                continue
            support = sorted({x for e in er for x in e})
            k = len(support)
            trees = []
            for cand in combinations(er, k - 1):
                try:
                    view = RootedTreeView(g, ordering, cand)
                except ContractViolationError:
                    continue
                if view.vertices == frozenset(support):
                    closure = penrose_closure(g, ordering, view)
                    trees.append((frozenset(cand), closure))
            pos = {v: i for i, v in enumerate(support)}
            bit_adj = [[] for _ in range(k)]
            for idx, (a, b) in enumerate(er):
                bit_adj[pos[a]].append((pos[b], idx))
                bit_adj[pos[b]].append((pos[a], idx))
            full = (1 << k) - 1
            for mask in range(1, 1 << len(er)):
                chosen = [e for i, e in enumerate(er) if mask >> i & 1]
                verts = 0
                for a, b in chosen:
                    verts |= 1 << pos[a]
                    verts |= 1 << pos[b]
                if verts != full:
                    continue
                in_mask = [False] * len(er)
                for i in range(len(er)):
                    if mask >> i & 1:
                        in_mask[i] = True
                stack = [0]
                seen_count = 1
                visited = [False] * k
                visited[0] = True
                while stack:
                    x = stack.pop()
                    for y, idx in bit_adj[x]:
                        if in_mask[idx] and not visited[y]:
                            visited[y] = True
                            seen_count += 1
                            stack.append(y)
                if seen_count != k:
                    continue
                edge_sets += 1
                cset = frozenset(chosen)
                hits = sum(1 for t, clo in trees if t <= cset <= clo)
                if hits != 1:
                    return SchemeReport(
                        passed=False,
                        subsets_checked=subsets,
                        edge_sets_checked=edge_sets,
                        counterexample=SchemeCounterexample(
                            subset=frozenset(rs),
                            edge_set=cset,
                            containing_trees=hits,
                        ),
                    )
    return SchemeReport(
        passed=True,
        subsets_checked=subsets,
        edge_sets_checked=edge_sets,
        counterexample=None,
    )


@dataclass(frozen=True)
class ObstructionResult:
    """Outcome of the two-anchor merge test.

    penrose is True when attaching the two anchor edges to the forest gives a
    Penrose tree; otherwise violated_by names the first failing condition:
    'a' for a cross edge at equal depth, 'b' for a cross edge one level apart
    whose shallow end comes after the deep end's father, 'c' for an edge from
    the second anchor to a child of the first.
    """

    penrose: bool
    violated_by: str | None


def obstruction_check(
    g: Graph, ordering: VertexOrdering, u: int, pair, forest
) -> ObstructionResult:
    """Classify whether u joined to both anchors keeps the forest Penrose.

    ``pair`` is (v1, v2): two non-adjacent neighbors of u, placed immediately
    after u in the ordering. ``forest`` is a Penrose forest of g - u with at
    most two components, one rooted at each anchor (either may be absent, not
    both). The verdict comes from the three structural conditions alone; it
    matches the direct closure computation on the merged tree.
    """
    v1, v2 = pair
    rank = ordering.rank
    if rank[u] != 0 or rank[v1] != 1 or rank[v2] != 2:
        raise ContractViolationError("ordering must place u, v1, v2 first, in order")
    if v1 not in g.adj[u] or v2 not in g.adj[u]:
        raise ContractViolationError("anchors must be neighbors of u")
    if v2 in g.adj[v1]:
        raise ContractViolationError("anchors must be non-adjacent")
    f = forest if isinstance(forest, Forest) else Forest.from_edges(forest)
    if not f.components:
        raise ContractViolationError("forest must have at least one edge")
    if u in f.vertices:
        raise ContractViolationError("forest must avoid u")
    if not is_penrose_forest(g, ordering, f):
        raise ContractViolationError("forest must be Penrose")
    tau1 = tau2 = frozenset()
    for comp in f.components:
        verts = {x for e in comp for x in e}
        if v1 in verts and v2 in verts:
            raise ContractViolationError("anchors must lie in different components")
        if v1 in verts:
            tau1 = comp
        elif v2 in verts:
            tau2 = comp
        else:
            raise ContractViolationError("every component must contain an anchor")

    def levels(comp, root):
        if not comp:
            return {}, {}
        view = RootedTreeView(g, ordering, comp)
        if view.root != root:
            raise ContractViolationError("component not rooted at its anchor")
        depth = {x: d + 1 for x, d in view.depth.items()}
        father = dict(view.father)
        father[root] = u
        return depth, father

    d1, f1 = levels(tau1, v1)
    d2, f2 = levels(tau2, v2)

    violated = None
    for x in sorted(d1):
        for y in sorted(d2):
            if y not in g.adj[x]:
                continue
            if d1[x] == d2[y]:
                violated = "a"
                break
            if d1[x] == d2[y] + 1 and rank[y] > rank[f1[x]]:
                violated = "b"
                break
            if d2[y] == d1[x] + 1 and rank[x] > rank[f2[y]]:
                violated = "b"
                break
        if violated:
            break
    if violated is None:
        for x, d in d1.items():
            if d == 2 and v2 in g.adj[x]:
                violated = "c"
                break
    return ObstructionResult(penrose=violated is None, violated_by=violated)
