"""Kernel backend selection.

The compiled extension is used when it imported cleanly, the instance is
small enough for its fixed-width bitsets (n <= 64), and HYPERCHROME_PURE is
unset.  Otherwise the pure-Python twins run; both produce identical results.
"""

import os

from . import pure
from .pure import FOUND, NONE, EXHAUSTED

try:
    from . import _native
except ImportError:
    _native = None

_FORCE_PURE = os.environ.get("HYPERCHROME_PURE", "") not in ("", "0")

_NATIVE_MAX_N = 64


def have_native():
    return _native is not None and not _FORCE_PURE


def backend_name(n=0):
    if have_native() and n <= _NATIVE_MAX_N:
        return "native"
    return "pure"


def _mod(n):
    return _native if (have_native() and n <= _NATIVE_MAX_N) else pure


def greedy_color_count(n, edges, order):
    return _mod(n).greedy_color_count(n, list(edges), list(order))


def longest_ordered_chain(n, edges, position):
    return _mod(n).longest_ordered_chain(n, list(edges), list(position))


def kcolor_search(n, edges, k, order, max_nodes=0, deadline=0.0):
    return _mod(n).kcolor_search(n, list(edges), k, list(order), max_nodes, deadline)


def mis_search(n, edges, max_nodes=0, deadline=0.0):
    return _mod(n).mis_search(n, list(edges), max_nodes, deadline)
