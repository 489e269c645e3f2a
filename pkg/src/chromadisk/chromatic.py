"""Chromatic polynomials by deletion and contraction, and their roots.

The recursion memoizes on an isomorphism-invariant key (iterated neighbor
label refinement), with an exact isomorphism test inside each bucket so hash
collisions can never return a wrong polynomial. Components multiply, and
trees, cycles, and complete graphs short-circuit to closed forms.
"""

from dataclasses import dataclass

import numpy as np

from .errors import EnumerationCapError
from .graphs import Graph
from .intpoly import IntPolynomial

DEFAULT_ORACLE_CAP = 16


def _refined_labels(n: int, adj, rounds: int = 3) -> tuple[int, ...]:
    labels = [len(adj[v]) for v in range(n)]
    for _ in range(rounds):
        sig = [(labels[v], tuple(sorted(labels[w] for w in adj[v]))) for v in range(n)]
        table = {s: i for i, s in enumerate(sorted(set(sig)))}
        nxt = [table[s] for s in sig]
        if nxt == labels:
            break
        labels = nxt
    return tuple(labels)


def _isomorphic(n, adj1, labels1, adj2, labels2) -> bool:
    """Backtracking vertex match, candidates restricted by refined label."""
    if sorted(labels1) != sorted(labels2):
        return False
    by_label: dict[int, list[int]] = {}
    for v in range(n):
        by_label.setdefault(labels2[v], []).append(v)
    order = sorted(range(n), key=lambda v: (len(by_label[labels1[v]]), -len(adj1[v])))
    mapping = [-1] * n
    inverse = [-1] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in by_label[labels1[v]]:
            if inverse[w] != -1 or len(adj1[v]) != len(adj2[w]):
                continue
            ok = True
            for x in adj1[v]:
                mx = mapping[x]
                if mx != -1 and mx not in adj2[w]:
                    ok = False
                    break
            if ok:
                for y in adj2[w]:
                    iy = inverse[y]
                    if iy != -1 and iy not in adj1[v]:
                        ok = False
                        break
            if not ok:
                continue
            mapping[v] = w
            inverse[w] = v
            if extend(i + 1):
                return True
            mapping[v] = -1
            inverse[w] = -1
        return False

    return extend(0)


class ChromaticCache:
    """Bucketed store of solved minors keyed by the refinement invariant."""

    def __init__(self):
        self._buckets: dict[tuple, list] = {}
        self.hits = 0
        self.misses = 0

    def lookup(self, key, n, adj, labels):
        for stored_adj, stored_labels, poly in self._buckets.get(key, ()):
            if _isomorphic(n, adj, labels, stored_adj, stored_labels):
                self.hits += 1
                return poly
        self.misses += 1
        return None

    def store(self, key, adj, labels, poly):
        self._buckets.setdefault(key, []).append((adj, labels, poly))

    def clear(self):
        self._buckets.clear()
        self.hits = 0
        self.misses = 0


_default_cache = ChromaticCache()


def _edges_to_adj(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return [frozenset(s) for s in adj]


def _components(n, adj):
    comp = [-1] * n
    c = 0
    for s in range(n):
        if comp[s] != -1:
            continue
        stack = [s]
        comp[s] = c
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if comp[y] == -1:
                    comp[y] = c
                    stack.append(y)
        c += 1
    return comp, c


def _compact(vertices, edges):
    vs = sorted(vertices)
    pos = {v: i for i, v in enumerate(vs)}
    return len(vs), frozenset(
        (min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in edges
    )


def _tree_poly(n: int) -> IntPolynomial:
    return IntPolynomial((0, 1)) * (IntPolynomial((-1, 1)) ** (n - 1))


def _cycle_poly(n: int) -> IntPolynomial:
    qm1 = IntPolynomial((-1, 1))
    return qm1 ** n + qm1.scale((-1) ** n)


def _solve(n, edges, cache):
    if not edges:
        return IntPolynomial.monomial(n)
    adj = _edges_to_adj(n, edges)
    touched = {x for e in edges for x in e}
    if len(touched) < n:
        nn, ee = _compact(touched, edges)
        return IntPolynomial.monomial(n - len(touched)) * _solve(nn, ee, cache)
    comp, c = _components(n, adj)
    if c > 1:
        poly = IntPolynomial.one()
        for ci in range(c):
            verts = [v for v in range(n) if comp[v] == ci]
            sub = [e for e in edges if comp[e[0]] == ci]
            nn, ee = _compact(verts, sub)
            poly = poly * _solve(nn, ee, cache)
        return poly
    m = len(edges)
    if m == n - 1:
        return _tree_poly(n)
    if m == n * (n - 1) // 2:
        return IntPolynomial.falling_factorial(n)
    if all(len(adj[v]) == 2 for v in range(n)):
        return _cycle_poly(n)
    labels = _refined_labels(n, adj)
    key = (n, m, tuple(sorted(labels)))
    hit = cache.lookup(key, n, adj, labels)
    if hit is not None:
        return hit
    # contract the edge with the most common neighbors; collapses triangles fast
    u, v = max(edges, key=lambda e: (len(adj[e[0]] & adj[e[1]]), -e[0], -e[1]))
    deleted = edges - {(u, v)}
    merged = set()
    for a, b in deleted:
        x = u if a == v else a
        y = u if b == v else b
        if x != y:
            merged.add((x, y) if x < y else (y, x))
    nn, ee = _compact(sorted(set(range(n)) - {v}), merged)
    poly = _solve(n, deleted, cache) - _solve(nn, ee, cache)
    cache.store(key, adj, labels, poly)
    return poly


def chromatic_deletion_contraction(
    g: Graph, *, cache: ChromaticCache | None = None, max_vertices: int = DEFAULT_ORACLE_CAP
) -> IntPolynomial:
    """Exact chromatic polynomial of g.

    Refuses graphs above ``max_vertices`` (default 16); the recursion is
    exponential and this package targets desk-scale instances. Passing a
    shared ChromaticCache makes repeated induced-subgraph calls cheap.
    """
    if g.n > max_vertices:
        raise EnumerationCapError("deletion-contraction", g.n, max_vertices)
    if cache is None:
        cache = _default_cache
    return _solve(g.n, frozenset(g.edges), cache)


def count_proper_colorings(g: Graph, q: int) -> int:
    """Direct backtracking count of proper q-colorings; cross-check oracle."""
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    color = [-1] * g.n

    def rec(i: int) -> int:
        if i == g.n:
            return 1
        v = order[i]
        total = 0
        for c in range(q):
            if all(color[w] != c for w in g.adj[v]):
                color[v] = c
                total += rec(i + 1)
                color[v] = -1
        return total

    return rec(0)


@dataclass(frozen=True)
class PolynomialRoot:
    value: complex
    residual: float


def polynomial_roots(p: IntPolynomial) -> list[PolynomialRoot]:
    """All complex roots via the companion matrix, with a relative residual.

    The residual is |p(r)| / (sum_k |c_k| max(1, |r|)^deg), small when the
    root is numerically trustworthy. Roots are sorted by real part, then
    imaginary part.
    """
    if p.degree < 1:
        return []
    coeffs = [float(c) for c in reversed(p.coeffs)]
    roots = np.roots(coeffs)
    out = []
    csum = sum(abs(c) for c in p.coeffs)
    for r in roots:
        r = complex(r)
        val = abs(p(r))
        scale = csum * max(1.0, abs(r)) ** p.degree
        out.append(PolynomialRoot(value=r, residual=val / scale))
    out.sort(key=lambda pr: (pr.value.real, pr.value.imag))
    return out
