"""Constructive coloring machinery: greedy coloring with chain certificates,
constructive local-lemma coloring, degree splits, layered peeling, dyadic
independent-set removal, and the greedy-failure extraction.

Every operation is a pure function of (input, seed).  Operations that can
fail for structural reasons return a :class:`ColoringFailure` value; raising
is reserved for violated call contracts.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from time import monotonic

from . import exact
from .core import Coloring, OrderedChain, induced
from .constructions import mix_seed, named

# rational upper bound on Euler's number, error < 1e-18; thresholds compare
# degrees against r^2/(3e) and r^2/(12e), and using an upper bound for e keeps
# every acceptance conservative (flag true only when the true inequality holds)
E_UPPER = Fraction(2718281828459045236, 10 ** 18)

# c = (12e)^{-1}, the small/big degree split constant
SMALL_DEGREE_COEFF = Fraction(1, 12) / E_UPPER


@dataclass(frozen=True)
class GreedyTrace:
    """Greedy coloring plus, per vertex and per color below its own, one
    witness edge whose two other vertices are earlier and share that color."""

    coloring: Coloring
    witness: tuple  # witness[v] = tuple of edges, index c -> edge for color c

    def witness_for(self, v, c):
        return self.witness[v][c]


@dataclass(frozen=True)
class GreedyFailure:
    """Greedy hit the palette cap: `vertex` would need color >= cap, with one
    witness edge per blocked color 0..cap-1.  The prefix fields carry the
    colors and witnesses of the vertices placed before the failure, which the
    chain extraction walks through."""

    vertex: int
    cap: int
    witnesses: tuple
    prefix_colors: tuple
    prefix_witness: tuple


@dataclass(frozen=True)
class ColoringFailure:
    """Structured failure of a coloring procedure."""

    stage: str
    detail: dict


def greedy_pluhar(G, ord, palette_cap=None):
    """First-fit greedy coloring along `ord` with full witness structure.

    Each vertex takes the minimal color that does not complete a
    monochromatic edge.  With `palette_cap` set, returns a GreedyFailure at
    the first vertex that would need a color >= cap, carrying its cap-many
    witness edges.
    """
    if G.k != 3:
        raise ValueError("greedy coloring handles 3-graphs")
    n = G.n
    pairs_at = [[] for _ in range(n)]
    for e in G.edges:
        a, b, c = e
        pairs_at[a].append((b, c, e))
        pairs_at[b].append((a, c, e))
        pairs_at[c].append((a, b, e))
    colors = [-1] * n
    witness = [()] * n
    top = -1
    for v in ord.order:
        blocking = {}
        for a, b, e in pairs_at[v]:
            ca = colors[a]
            if ca >= 0 and ca == colors[b] and ca not in blocking:
                blocking[ca] = e
        c = 0
        while c in blocking:
            c += 1
        if palette_cap is not None and c >= palette_cap:
            return GreedyFailure(
                vertex=v,
                cap=palette_cap,
                witnesses=tuple(blocking[i] for i in range(palette_cap)),
                prefix_colors=tuple(colors),
                prefix_witness=tuple(witness),
            )
        colors[v] = c
        witness[v] = tuple(blocking[i] for i in range(c))
        top = max(top, c)
    palette = max(top + 1, 1) if n else 1
    return GreedyTrace(Coloring(tuple(colors), palette), tuple(witness))


def _descend(G, ord, witness_at, start_vertex, start_color):
    # walk down the witness structure: at (v, c) take the witness edge for
    # color c-1 and continue from its minimum-position vertex
    pos = ord.position
    chain = []
    v = start_vertex
    c = start_color
    while c > 0:
        e = witness_at(v, c - 1)
        chain.append(e)
        v = min(e, key=lambda u: pos[u])
        c -= 1
    chain.reverse()
    return OrderedChain(tuple(chain))


def extract_chain(G, ord, trace):
    """An ordered (C-1)-chain certifying a C-color greedy trace, C >= 2.

    Starts from the earliest vertex of the top color and repeatedly descends
    through witness edges to their minimum-position vertex.
    """
    coloring = trace.coloring
    if len(coloring.colors) != G.n or len(trace.witness) != G.n:
        raise ValueError("trace does not match graph")
    eset = G.edge_set()
    for ws in trace.witness:
        for e in ws:
            if e not in eset:
                raise ValueError("trace witness edge not in graph")
    top = max(coloring.colors, default=0)
    if top < 1:
        raise ValueError("chain extraction needs at least 2 colors")
    pos = ord.position
    start = min((v for v in range(G.n) if coloring.colors[v] == top),
                key=lambda v: pos[v])
    return _descend(G, ord, lambda v, c: trace.witness[v][c], start, top)


def chain_from_failure(G, ord, failure):
    """An ordered cap-chain from a greedy palette-cap failure: the failing
    vertex descends through its own witnesses and then through those of the
    earlier vertices it lands on."""

    def witness_at(v, c):
        if v == failure.vertex:
            return failure.witnesses[c]
        return failure.prefix_witness[v][c]

    return _descend(G, ord, witness_at, failure.vertex, failure.cap)


def chain_or_independent(G, ord, r, t):
    """Either an ordered r-chain or an independent set of size >= t.

    Requires at least (t-1)r + 1 vertices.  Greedy with palette cap r either
    fails (chain via extraction) or colors everything, in which case the
    largest color class has size >= ceil(n/r) >= t and is independent.
    """
    if G.n < (t - 1) * r + 1:
        raise ValueError("need at least (t-1)r + 1 vertices")
    res = greedy_pluhar(G, ord, palette_cap=r)
    if isinstance(res, GreedyFailure):
        return chain_from_failure(G, ord, res)
    classes = res.coloring.color_classes()
    best = max(range(len(classes)), key=lambda c: (len(classes[c]), -c))
    return frozenset(classes[best])


@dataclass(frozen=True)
class LllReport:
    """Bookkeeping for the symmetric local lemma on monochromatic-edge events."""

    ok: bool
    max_degree: int
    p: Fraction     # 1/r^2, probability one edge goes monochromatic
    d: int          # dependency count 3*(max_degree - 1) + 1
    ep_bound: float  # e * p * (d + 1)


def lll_check(G, r):
    """True iff max degree <= r^2 / (3e), compared as exact rationals."""
    if G.k != 3:
        raise ValueError("lll_check handles 3-graphs")
    if r < 1:
        raise ValueError("palette must be at least 1")
    delta = G.max_degree()
    ok = Fraction(3 * delta) * E_UPPER <= r * r
    p = Fraction(1, r * r)
    d = max(3 * (delta - 1) + 1, 0)
    return LllReport(ok, delta, p, d, float(E_UPPER) * float(p) * (d + 1))


def lll_color(G, r, seed, max_resamples=None, check=True):
    """Moser-Tardos coloring: random assignment, then repeatedly re-randomize
    the lowest-index monochromatic edge until the coloring is proper.

    Deterministic per seed.  Default resample cap is 1000 * |E|; exceeding it
    returns a ColoringFailure("resample-cap").  With check=True (default) a
    failing lll_check raises ValueError; pass check=False to override.
    """
    if check and not lll_check(G, r).ok:
        raise ValueError("lll_check fails for this graph and palette; "
                         "pass check=False to override")
    if max_resamples is None:
        max_resamples = 1000 * len(G.edges)
    rng = random.Random(seed)
    colors = [rng.randrange(r) for _ in range(G.n)]
    resamples = 0
    while True:
        mono = None
        for e in G.edges:
            c0 = colors[e[0]]
            if colors[e[1]] == c0 and colors[e[2]] == c0:
                mono = e
                break
        if mono is None:
            return Coloring(tuple(colors), r)
        if resamples >= max_resamples:
            return ColoringFailure("resample-cap",
                                   {"resamples": resamples, "edge": mono})
        for v in mono:
            colors[v] = rng.randrange(r)
        resamples += 1


def small_big_split(G, r):
    """(V_small, V_big): vertices of degree <= c*r^2 with c = (12e)^{-1}, and
    the rest.  The small side always passes lll_check at ceil(r/2) colors."""
    threshold = SMALL_DEGREE_COEFF * r * r
    degs = G.degrees()
    small = tuple(v for v in range(G.n) if degs[v] <= threshold)
    big = tuple(v for v in range(G.n) if degs[v] > threshold)
    return small, big


@dataclass(frozen=True)
class LayerDecomposition:
    """Layers L_i = V_i \\ V_{i+1} of the iterated high-degree peeling, plus
    the residual core when peeling reaches a nonempty fixpoint."""

    layers: tuple
    threshold: object
    core: frozenset


def peel_layers(G, theta):
    """Iterate V_{i+1} = {v in V_i : deg in G[V_i] >= theta} to exhaustion.

    When every vertex of some nonempty V_i keeps degree >= theta, iteration
    stops and V_i is reported as the residual core.
    """
    if theta <= 0:
        raise ValueError("theta must be positive")
    layers = []
    current = frozenset(range(G.n))
    while current:
        sub, verts = induced(G, current)
        degs = sub.degrees()
        nxt = frozenset(verts[i] for i in range(len(verts)) if degs[i] >= theta)
        if nxt == current:
            return LayerDecomposition(tuple(layers), theta, current)
        layers.append(current - nxt)
        current = nxt
    return LayerDecomposition(tuple(layers), theta, frozenset())


def layered_color(G, theta, per_layer, seed, check=True):
    """Color each peeling layer with its own palette block via lll_color.

    An edge lies inside G[V_i] for i = the least layer among its vertices; if
    it is not inside G[L_i] it spans two palette blocks and cannot go
    monochromatic, so per-layer proper colorings compose to a proper coloring
    of G.  Total palette is (#layers) * per_layer.  Returns a
    ColoringFailure for a nonempty residual core, a layer failing lll_check
    (unless check=False), or a resample cap.
    """
    decomp = peel_layers(G, theta)
    if decomp.core:
        return ColoringFailure("residual-core", {"core": tuple(sorted(decomp.core))})
    colors = [0] * G.n
    for i, layer in enumerate(decomp.layers):
        sub, verts = induced(G, layer)
        if check and not lll_check(sub, per_layer).ok:
            return ColoringFailure("layer-lll-check",
                                   {"layer": i, "max_degree": sub.max_degree()})
        res = lll_color(sub, per_layer, mix_seed(seed, i), check=False)
        if isinstance(res, ColoringFailure):
            return ColoringFailure("resample-cap", {"layer": i, **res.detail})
        for local, v in enumerate(verts):
            colors[v] = i * per_layer + res.colors[local]
    palette = max(len(decomp.layers) * per_layer, 1)
    return Coloring(tuple(colors), palette)


@dataclass(frozen=True)
class DyadicClasses:
    """Dyadic degree classes over V_big: v in class k iff
    2^k * c * r^2 <= deg(v) < 2^(k+1) * c * r^2."""

    classes: tuple  # ((k, frozenset), ...) sorted by k, empty classes omitted
    base_threshold: Fraction

    def as_dict(self):
        return dict(self.classes)


def dyadic_classes(G, r):
    """Partition V_big by dyadic degree bands above c*r^2, exact rationals."""
    if r < 1:
        raise ValueError("palette must be at least 1")
    base = SMALL_DEGREE_COEFF * r * r
    degs = G.degrees()
    buckets = {}
    for v in range(G.n):
        if degs[v] <= base:
            continue
        k = 0
        while not ((2 ** k) * base <= degs[v] < (2 ** (k + 1)) * base):
            k += 1
        buckets.setdefault(k, []).append(v)
    classes = tuple((k, frozenset(buckets[k])) for k in sorted(buckets))
    return DyadicClasses(classes, base)


def _greedy_independent(sub):
    # min-degree-first greedy independent set on an induced subgraph
    degs = sub.degrees()
    order = sorted(range(sub.n), key=lambda v: (degs[v], v))
    chosen = set()
    for v in order:
        ok = True
        for e in sub.edges:
            if v in e and all(u in chosen or u == v for u in e):
                ok = False
                break
        if ok:
            chosen.add(v)
    return chosen


def independent_removal_color(G, r, seed, budget=exact.UNLIMITED):
    """Heuristic coloring along the dyadic independent-set removal argument.

    While the current graph has high-degree vertices, take the dyadic class
    with the most incident edges, color a large independent set of it (exact
    search when the class has <= 24 vertices and the budget allows, greedy
    min-degree-first otherwise) with one fresh color, remove it and decrement
    the palette.  The remaining low-degree graph goes to lll_color with the
    palette that is left.
    """
    if G.k != 3:
        raise ValueError("handles 3-graphs")
    deadline = budget.deadline()
    total = r
    colors = [-1] * G.n
    alive = set(range(G.n))
    removals = 0
    r_now = r
    while True:
        if deadline and monotonic() > deadline:
            return ColoringFailure("budget-exhausted", {"stage": "removal"})
        cur, verts = induced(G, alive)
        if r_now <= 0:
            if cur.n == 0:
                break
            return ColoringFailure("palette-exhausted",
                                   {"remaining_vertices": cur.n})
        _, big = small_big_split(cur, r_now)
        if not big:
            # everything left is low degree: deg <= r^2/(12e) <= r^2/(3e),
            # so the lemma's condition holds by construction
            res = lll_color(cur, r_now, mix_seed(seed, 1 + removals), check=False)
            if isinstance(res, ColoringFailure):
                return ColoringFailure("resample-cap", res.detail)
            for local, v in enumerate(verts):
                colors[v] = res.colors[local]
            break
        dc = dyadic_classes(cur, r_now)

        def incident(entry):
            _, members = entry
            return sum(1 for e in cur.edges if any(v in members for v in e))

        k, members = max(dc.classes, key=lambda kv: (incident(kv), -kv[0]))
        cls_sub, cls_verts = induced(cur, members)
        chosen_local = None
        if cls_sub.n <= 24:
            res = exact.max_independent_set(cls_sub, budget)
            if res is not exact.EXHAUSTED:
                chosen_local = set(res)
        if chosen_local is None:
            chosen_local = _greedy_independent(cls_sub)
        fresh = total - 1 - removals
        for local in chosen_local:
            colors[verts[cls_verts[local]]] = fresh
        alive -= {verts[cls_verts[local]] for local in chosen_local}
        removals += 1
        r_now -= 1
    return Coloring(tuple(colors), total)


class SunflowerViolation(ValueError):
    """Raised when the greedy-failure extraction finds an edge: the picked
    vertices plus their witness edges certify a sunflower7 copy."""

    def __init__(self, edge, certificate):
        super().__init__(f"extraction found edge {edge}: input was not sunflower7-free")
        self.edge = edge
        self.certificate = certificate


def e288_extract(G, ord, r_prime):
    """Greedy at cap r'; on failure, one minimum-position vertex from each
    witness edge forms an independent set of size r' when G is sunflower7-free.

    Success returns the Coloring.  The returned set is revalidated; an edge
    inside it is a sunflower7 certificate and raises SunflowerViolation.
    """
    if G.k != 3:
        raise ValueError("handles 3-graphs")
    res = greedy_pluhar(G, ord, palette_cap=r_prime)
    if isinstance(res, GreedyTrace):
        return res.coloring
    pos = ord.position
    v = res.vertex
    picked = []
    for e in res.witnesses:
        others = [u for u in e if u != v]
        picked.append(min(others, key=lambda u: pos[u]))
    chosen = frozenset(picked)
    if len(chosen) != r_prime:
        raise SunflowerViolation(None, {"vertex": v, "witnesses": res.witnesses})
    for e in G.edges:
        if all(u in chosen for u in e):
            raise SunflowerViolation(e, {
                "vertex": v,
                "witnesses": res.witnesses,
                "pattern": named("sunflower7"),
            })
    return chosen
