"""Independent oracles for the test suite.

These recompute optima and bound ceilings by the most literal method
available (full enumeration with itertools.product, rational square-root
bracketing) and deliberately share no code with the package's bitset
enumeration, branch-and-bound, or parity-based ceiling tricks.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from signdom import Graph, Mode


def naive_closed_sums(graph: Graph, values: tuple[int, ...]) -> list[int]:
    return [
        values[v] + sum(values[u] for u in graph.neighbors(v))
        for v in graph.vertices()
    ]


def naive_minimum(graph: Graph, k: int, mode: Mode) -> tuple[int, tuple[int, ...]]:
    """Exact optimum and lexicographically smallest witness (+1 < -1),
    by trying all 2^n sign vectors in lexicographic order."""
    n = graph.vertex_count
    assert 1 <= k <= n
    tau = mode.threshold
    best_weight: int | None = None
    best_values: tuple[int, ...] | None = None
    for values in itertools.product((1, -1), repeat=n):
        sums = naive_closed_sums(graph, values)
        if sum(1 for s in sums if s >= tau) >= k:
            weight = sum(values)
            if best_weight is None or weight < best_weight:
                best_weight = weight
                best_values = values
    assert best_weight is not None and best_values is not None
    return best_weight, best_values


def ceil_sqrt_affine(offset: Fraction, coeff: Fraction, x: int) -> int:
    """ceil(offset + coeff * sqrt(x)) for integer x >= 0 and coeff > 0,
    by refining a rational bracket of sqrt(x) until the ceiling is pinned."""
    root = math.isqrt(x)
    if root * root == x:
        return math.ceil(offset + coeff * root)
    scale = 1 << 10
    while True:
        s = math.isqrt(x * scale * scale)
        lo = offset + coeff * Fraction(s, scale)
        hi = offset + coeff * Fraction(s + 1, scale)
        if math.ceil(lo) == math.ceil(hi):
            return math.ceil(lo)
        scale <<= 10


def oracle_nn4(n: int, delta: int, n_e: int) -> int:
    a = delta + 1
    x = a * a + 8 * (n * delta + n + n_e)
    return ceil_sqrt_affine(Fraction(-a, 2) - n, Fraction(1, 2), x)


def oracle_nn5(n: int, m: int, n_e: int) -> int:
    return ceil_sqrt_affine(Fraction(-n), Fraction(1), 2 * m + n + n_e)
