"""Hypergraph representation, structural predicates and exact structural quantities.

Vertices are 0-based integers below ``n``; edges are stored as sorted,
duplicate-free tuples.  All objects here are immutable and safe to share.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations


@dataclass(frozen=True)
class Hypergraph:
    """A k-uniform hypergraph on vertices 0..n-1.

    Invariants: every edge has exactly k distinct vertices below n, each edge
    tuple is sorted, and the edge list is sorted and duplicate-free.
    Construct through :func:`new_hypergraph`, which normalizes input.
    """

    n: int
    k: int
    edges: tuple

    def degree(self, v):
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range 0..{self.n - 1}")
        return sum(1 for e in self.edges if v in e)

    def edges_at(self, v):
        return tuple(e for e in self.edges if v in e)

    def max_degree(self):
        degs = [0] * self.n
        for e in self.edges:
            for v in e:
                degs[v] += 1
        return max(degs, default=0)

    def degrees(self):
        degs = [0] * self.n
        for e in self.edges:
            for v in e:
                degs[v] += 1
        return degs

    def edge_set(self):
        return set(self.edges)

    def __contains__(self, edge):
        return tuple(sorted(edge)) in self.edge_set()


def new_hypergraph(n, k, edges):
    """Validate and normalize (n, k, edges) into a Hypergraph.

    Edges may be given in any order and orientation; duplicates collapse.
    Raises ValueError for a repeated vertex inside an edge, a vertex index
    outside 0..n-1, or an edge whose size differs from k.
    """
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if k < 2:
        raise ValueError("uniformity must be at least 2")
    normalized = set()
    for e in edges:
        t = tuple(sorted(e))
        if len(t) != k:
            raise ValueError(f"edge {t} has size {len(t)}, expected {k}")
        if len(set(t)) != k:
            raise ValueError(f"edge {t} repeats a vertex")
        if t[0] < 0 or t[-1] >= n:
            raise ValueError(f"edge {t} uses a vertex outside 0..{n - 1}")
        normalized.add(t)
    return Hypergraph(n, k, tuple(sorted(normalized)))


def degree(G, v):
    """Number of stored edges containing v."""
    return G.degree(v)


def induced(G, S):
    """Induced subgraph on the vertex set S, relabeled to 0..|S|-1.

    Returns (H, vertices) where vertices is the sorted tuple of original
    vertex ids; new label i corresponds to vertices[i].
    """
    verts = tuple(sorted(set(S)))
    for v in verts:
        if not (0 <= v < G.n):
            raise ValueError(f"vertex {v} not in graph")
    index = {v: i for i, v in enumerate(verts)}
    vset = set(verts)
    kept = [tuple(sorted(index[v] for v in e)) for e in G.edges
            if all(v in vset for v in e)]
    return Hypergraph(len(verts), G.k, tuple(sorted(set(kept)))), verts


@dataclass(frozen=True)
class Coloring:
    """A total map vertex -> color index (0-based) with a fixed palette size."""

    colors: tuple
    palette: int

    def __post_init__(self):
        if self.palette < 0:
            raise ValueError("palette must be nonnegative")
        for c in self.colors:
            if not (0 <= c < self.palette):
                raise ValueError(f"color {c} outside palette of {self.palette}")

    def color_classes(self):
        classes = [[] for _ in range(self.palette)]
        for v, c in enumerate(self.colors):
            classes[c].append(v)
        return [tuple(cl) for cl in classes]

    def used(self):
        return len(set(self.colors))


def is_proper(G, coloring):
    """(flag, witness): True iff no edge is monochromatic.

    On False the witness is the first (sorted order) monochromatic edge.
    """
    if len(coloring.colors) != G.n:
        raise ValueError("coloring is not total on V(G)")
    cols = coloring.colors
    for e in G.edges:
        c0 = cols[e[0]]
        if all(cols[v] == c0 for v in e[1:]):
            return False, e
    return True, None


@dataclass(frozen=True)
class VertexOrder:
    """A linear order on 0..n-1: order[i] = vertex at position i, position = inverse."""

    order: tuple
    position: tuple = field(default=None)

    def __post_init__(self):
        n = len(self.order)
        if sorted(self.order) != list(range(n)):
            raise ValueError("order is not a permutation of 0..n-1")
        if self.position is None:
            pos = [0] * n
            for i, v in enumerate(self.order):
                pos[v] = i
            object.__setattr__(self, "position", tuple(pos))
        else:
            for i, v in enumerate(self.order):
                if self.position[v] != i:
                    raise ValueError("position is not the inverse of order")

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)))

    @classmethod
    def from_seq(cls, seq):
        return cls(tuple(seq))

    @property
    def n(self):
        return len(self.order)


@dataclass(frozen=True)
class OrderedChain:
    """Edges g_1..g_r with |g_i ∩ g_j| = 1 for |i-j| = 1 and 0 otherwise,
    monotone under an associated vertex order."""

    chain: tuple

    def __len__(self):
        return len(self.chain)


def is_ordered_chain(G, chain, ord):
    """Check the chain/ordering constraints of an OrderedChain against G.

    chain may be an OrderedChain or a plain sequence of edges.  All edges
    must belong to G; consecutive edges share exactly one vertex, others are
    disjoint, and max position of g_i <= min position of g_{i+1}.
    """
    edges = chain.chain if isinstance(chain, OrderedChain) else tuple(
        tuple(sorted(e)) for e in chain)
    if len(edges) == 0:
        return False
    eset = G.edge_set()
    if any(e not in eset for e in edges):
        return False
    sets = [set(e) for e in edges]
    r = len(edges)
    for i in range(r):
        for j in range(i + 1, r):
            want = 1 if j == i + 1 else 0
            if len(sets[i] & sets[j]) != want:
                return False
    pos = ord.position
    for i in range(r - 1):
        if max(pos[v] for v in edges[i]) > min(pos[v] for v in edges[i + 1]):
            return False
    return True


def is_linear(G):
    """True iff every pair of edges shares at most one vertex."""
    pair_seen = set()
    for e in G.edges:
        for p in combinations(e, 2):
            if p in pair_seen:
                return False
            pair_seen.add(p)
    return True


def is_hyperforest(G):
    """True iff the bipartite vertex-edge incidence graph is acyclic.

    This is Berge-acyclicity; it implies linearity (two edges sharing two
    vertices create an incidence 4-cycle).
    """
    # union-find over vertex nodes (0..n-1) and edge nodes (n..n+m-1)
    parent = list(range(G.n + len(G.edges)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, e in enumerate(G.edges):
        enode = G.n + i
        for v in e:
            rv, re = find(v), find(enode)
            if rv == re:
                return False
            parent[rv] = re
    return True


@dataclass(frozen=True)
class Balance:
    """Exact maximum of (e'-1)/(v'-3) over edge subsets with >= 2 edges."""

    value: Fraction
    witness: tuple
    is_balanced: bool


def balance(H):
    """Balance of a 3-graph: brute force over all edge subsets with >= 2 edges.

    v' counts the vertices covered by the subset (isolated vertices only
    lower the ratio, so the maximum over subgraphs is attained there).
    Exact rationals throughout.  Raises ValueError below 2 edges.
    """
    if H.k != 3:
        raise ValueError("balance is defined for 3-graphs")
    m = len(H.edges)
    if m < 2:
        raise ValueError("balance needs at least 2 edges")
    best = None
    best_sub = None
    for size in range(2, m + 1):
        for sub in combinations(H.edges, size):
            covered = set()
            for e in sub:
                covered.update(e)
            val = Fraction(size - 1, len(covered) - 3)
            if best is None or val > best:
                best, best_sub = val, sub
    whole_covered = set()
    for e in H.edges:
        whole_covered.update(e)
    whole = Fraction(m - 1, len(whole_covered) - 3)
    return Balance(best, best_sub, whole == best)


def canonical_form(G):
    """Canonical byte encoding: equal encodings iff isomorphic hypergraphs.

    Backtracks over vertex relabelings, assigning new labels 0..n-1 one at a
    time and minimizing the sequence of completed edges, where edges are
    ordered by (largest label, full sorted tuple).  Degree-based candidate
    ordering steers the search; prefix comparison prunes it.  The winning
    edge set is emitted sorted, prefixed with n and k.
    """
    n, k = G.n, G.k
    edges = [tuple(sorted(e)) for e in G.edges]
    m = len(edges)
    if m == 0:
        return f"{n}:{k}|".encode()

    incident = [[] for _ in range(n)]
    for idx, e in enumerate(edges):
        for v in e:
            incident[v].append(idx)
    degs = [len(incident[v]) for v in range(n)]

    best = [None]  # best complete code: list of edge tuples

    def extend(new_label_of, remaining, code):
        if len(code) == m:
            if best[0] is None or code < best[0]:
                best[0] = list(code)
            return
        # candidates for the next label, most-connected first
        j = n - len(remaining)
        scored = sorted(
            remaining,
            key=lambda v: (-sum(1 for idx in incident[v]
                                if all(u in new_label_of or u == v
                                       for u in edges[idx])),
                           -degs[v], v))
        for v in scored:
            new_label_of[v] = j
            done = []
            for idx in incident[v]:
                e = edges[idx]
                if all(u in new_label_of for u in e):
                    done.append(tuple(sorted(new_label_of[u] for u in e)))
            done.sort(key=lambda t: (t[-1], t))
            new_code = code + done
            # prune only a strictly worse prefix; compare against the current
            # best every time since best may move while we recurse
            if best[0] is None or new_code <= best[0][:len(new_code)]:
                remaining.remove(v)
                extend(new_label_of, remaining, new_code)
                remaining.add(v)
            del new_label_of[v]

    extend({}, set(range(n)), [])
    final = sorted(best[0])
    body = "/".join(",".join(str(v) for v in e) for e in final)
    return f"{n}:{k}|{body}".encode()
