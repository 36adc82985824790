"""Exact chromatic number, colorability and independence number.

These exhaustive searches are the ground-truth oracles for everything else.
A search either completes (definitive answer) or reports EXHAUSTED when the
budget runs out; exhaustion is a result, never an exception.
"""

from dataclasses import dataclass
from time import monotonic

from . import _kernels
from .core import Coloring


@dataclass(frozen=True)
class SearchBudget:
    """Caps for exhaustive searches; 0 means unlimited."""

    max_nodes: int = 0
    max_millis: int = 0

    def __post_init__(self):
        if self.max_nodes < 0 or self.max_millis < 0:
            raise ValueError("budget caps must be nonnegative")

    def deadline(self):
        return monotonic() + self.max_millis / 1000.0 if self.max_millis else 0.0


UNLIMITED = SearchBudget()


class _Exhausted:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "EXHAUSTED"


EXHAUSTED = _Exhausted()


def _search_order(G):
    # descending degree, ties by index: the standard first-fail heuristic
    degs = G.degrees()
    return sorted(range(G.n), key=lambda v: (-degs[v], v))


def k_colorable(G, k, budget=UNLIMITED, _deadline=None):
    """A proper k-coloring if one exists, None if definitively not, or EXHAUSTED.

    Backtracks over vertices in descending-degree order with symmetry
    breaking (the i-th processed vertex uses only colors 0..i while i < k)
    and the rule that an edge with two vertices of one color forbids that
    color on the third.
    """
    if k < 1:
        raise ValueError("palette must be at least 1")
    if G.k != 3:
        raise ValueError("k_colorable handles 3-graphs")
    deadline = budget.deadline() if _deadline is None else _deadline
    status, colors = _kernels.kcolor_search(
        G.n, G.edges, k, _search_order(G), budget.max_nodes, deadline)
    if status == _kernels.FOUND:
        return Coloring(tuple(colors), k)
    if status == _kernels.NONE:
        return None
    return EXHAUSTED


def chromatic_number(G, budget=UNLIMITED):
    """Least k admitting a proper k-coloring, trying k = 1, 2, ...

    The node cap applies per colorability call; the wall-clock cap spans the
    whole computation.  Any 3-graph is n-colorable, so this terminates.
    """
    deadline = budget.deadline()
    k = 1
    while True:
        res = k_colorable(G, k, budget, _deadline=deadline)
        if res is EXHAUSTED:
            return EXHAUSTED
        if res is not None:
            return k
        k += 1


def max_independent_set(G, budget=UNLIMITED):
    """A maximum vertex set containing no full edge, or EXHAUSTED.

    Branch and bound on include/exclude with the bound |current| + |remaining|.
    """
    status, best = _kernels.mis_search(
        G.n, G.edges, budget.max_nodes, budget.deadline())
    if status == _kernels.EXHAUSTED:
        return EXHAUSTED
    return frozenset(best)


def independence_number(G, budget=UNLIMITED):
    res = max_independent_set(G, budget)
    return res if res is EXHAUSTED else len(res)
