"""Exact minimum-weight solvers for signed k-subdomination problems.

An assignment f maps every vertex to -1 or +1; vertex v is *satisfied*
when the sum of f over the closed neighborhood N[v] clears the mode's
threshold (0 in nonneg mode, 1 in signed mode). The optimum for
parameter k is the minimum total weight over assignments that satisfy
at least k vertices.

Two independent engines compute it: exhaustive enumeration
(:func:`solve_bruteforce`, the oracle) and depth-first branch-and-bound
(:func:`solve_bnb`). Both return the same canonical witness: the
lexicographically smallest optimal sign vector under the ordering
+1 < -1, vertex 0 most significant.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .bounds import bound_report
from .graph import Graph

__all__ = [
    "Mode",
    "SignAssignment",
    "EvalResult",
    "SearchStats",
    "SolveResult",
    "evaluate",
    "greedy_upper",
    "solve_bruteforce",
    "solve_bnb",
    "solve",
    "result_record",
    "BRUTE_FORCE_CAP",
    "AUTO_BRUTE_MAX",
]

BRUTE_FORCE_CAP = 20
AUTO_BRUTE_MAX = 14


class Mode(enum.Enum):
    """Satisfaction threshold for closed-neighborhood sums."""

    NONNEG = "nonneg"  # f(N[v]) >= 0
    SIGNED = "signed"  # f(N[v]) >= 1

    @property
    def threshold(self) -> int:
        return 0 if self is Mode.NONNEG else 1

    @classmethod
    def parse(cls, name: "str | Mode") -> "Mode":
        if isinstance(name, Mode):
            return name
        try:
            return cls(name)
        except ValueError:
            raise ValueError(f"mode must be 'nonneg' or 'signed', got {name!r}") from None


@dataclass(frozen=True)
class SignAssignment:
    """Total function V -> {-1, +1}, stored as a tuple indexed by vertex."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        for x in self.values:
            if x not in (-1, 1):
                raise ValueError(f"signs must be -1 or +1, got {x!r}")

    @classmethod
    def all_plus(cls, n: int) -> "SignAssignment":
        return cls((1,) * n)

    @classmethod
    def from_string(cls, text: str) -> "SignAssignment":
        return cls(tuple(1 if ch == "+" else -1 for ch in text))

    def to_string(self) -> str:
        return "".join("+" if x > 0 else "-" for x in self.values)

    @property
    def weight(self) -> int:
        return sum(self.values)

    def positives(self) -> frozenset[int]:
        return frozenset(v for v, x in enumerate(self.values) if x > 0)

    def negatives(self) -> frozenset[int]:
        return frozenset(v for v, x in enumerate(self.values) if x < 0)


@dataclass(frozen=True)
class EvalResult:
    """Assignment evaluation: per-vertex closed-neighborhood sums, the
    satisfied set and its split by sign (p1 = positives satisfied,
    m1 = negatives satisfied), and the number of edges with endpoints
    of opposite sign."""

    weight: int
    closed_sums: tuple[int, ...]
    satisfied: frozenset[int]
    satisfied_count: int
    p1: frozenset[int]
    m1: frozenset[int]
    crossing_edges: int


def evaluate(graph: Graph, f: SignAssignment, mode: Mode) -> EvalResult:
    n = graph.vertex_count
    if len(f.values) != n:
        raise ValueError(f"assignment covers {len(f.values)} vertices, graph has {n}")
    vals = f.values
    sums = tuple(vals[v] + sum(vals[u] for u in graph.adjacency[v]) for v in range(n))
    tau = mode.threshold
    satisfied = frozenset(v for v in range(n) if sums[v] >= tau)
    return EvalResult(
        weight=sum(vals),
        closed_sums=sums,
        satisfied=satisfied,
        satisfied_count=len(satisfied),
        p1=frozenset(v for v in satisfied if vals[v] > 0),
        m1=frozenset(v for v in satisfied if vals[v] < 0),
        crossing_edges=sum(1 for u, v in graph.edges() if vals[u] != vals[v]),
    )


@dataclass(frozen=True)
class SearchStats:
    nodes: int = 0
    prunes_weight: int = 0
    prunes_satisfiability: int = 0
    prunes_global_lb: int = 0


@dataclass(frozen=True)
class SolveResult:
    optimum: int
    witness: SignAssignment
    satisfied_count: int
    stats: SearchStats


def _check_k(n: int, k: int) -> None:
    if n < 1:
        raise ValueError("solving requires a graph with n >= 1")
    if not 1 <= k <= n:
        raise ValueError(f"k must satisfy 1 <= k <= {n}, got {k}")


def greedy_upper(graph: Graph, k: int, mode: Mode) -> SignAssignment:
    """Feasible assignment found by greedy sign flips.

    Starts from all-(+1), which satisfies every vertex in both modes, and
    repeatedly flips vertices to -1 (ascending degree, ties by id) while
    at least k vertices stay satisfied. The result is feasible by
    construction but carries no optimality guarantee.
    """
    n = graph.vertex_count
    _check_k(n, k)
    tau = mode.threshold
    signs = [1] * n
    sums = [graph.degree(v) + 1 for v in range(n)]
    closed = [sorted(graph.closed_neighborhood(v)) for v in range(n)]
    satisfied = n
    order = sorted(range(n), key=lambda v: (graph.degree(v), v))
    improved = True
    while improved:
        improved = False
        for v in order:
            if signs[v] < 0:
                continue
            lost = sum(1 for u in closed[v] if tau <= sums[u] < tau + 2)
            if satisfied - lost >= k:
                signs[v] = -1
                for u in closed[v]:
                    sums[u] -= 2
                satisfied -= lost
                improved = True
    return SignAssignment(tuple(signs))


def solve_bruteforce(graph: Graph, k: int, mode: Mode, cap: int = BRUTE_FORCE_CAP) -> SolveResult:
    """Exact optimum by enumerating all 2^n assignments.

    Refuses graphs with more than ``cap`` vertices (default 20) unless the
    cap is raised explicitly. The witness is the lexicographically
    smallest optimal sign vector.
    """
    n = graph.vertex_count
    _check_k(n, k)
    if n > cap:
        raise ValueError(f"brute force capped at {cap} vertices (graph has {n}); raise cap to override")
    tau = mode.threshold
    # Bit n-1-v holds vertex v (1 = sign -1), so ascending mask order is
    # lexicographic order on sign vectors with +1 < -1.
    cmasks = [
        sum(1 << (n - 1 - u) for u in graph.closed_neighborhood(v)) for v in range(n)
    ]
    need = [graph.degree(v) + 1 - tau for v in range(n)]  # max negatives in N[v]
    best_weight: int | None = None
    best_mask = 0
    rng = range(n)
    for mask in range(1 << n):
        weight = n - 2 * mask.bit_count()
        if best_weight is not None and weight >= best_weight:
            continue
        count = 0
        for v in rng:
            # closed sum = deg+1 - 2*(# -1s in N[v]) >= tau, rearranged
            if 2 * (mask & cmasks[v]).bit_count() <= need[v]:
                count += 1
        if count >= k:
            best_weight = weight
            best_mask = mask
    assert best_weight is not None  # all-(+1) (mask 0) is always feasible
    witness = SignAssignment(
        tuple(-1 if (best_mask >> (n - 1 - v)) & 1 else 1 for v in range(n))
    )
    ev = evaluate(graph, witness, mode)
    return SolveResult(best_weight, witness, ev.satisfied_count, SearchStats(nodes=1 << n))


class _PartialState:
    """Incremental closed-sum bookkeeping for partial assignments.

    For each vertex: ``sums`` is the signed sum of assigned vertices in
    N[v], ``slack`` the number of unassigned ones. A vertex is dead when
    sums + slack < threshold: no completion can satisfy it.
    """

    __slots__ = ("closed", "sums", "slack", "alive", "alive_count", "tau")

    def __init__(self, graph: Graph, tau: int):
        n = graph.vertex_count
        self.closed = [sorted(graph.closed_neighborhood(v)) for v in range(n)]
        self.sums = [0] * n
        self.slack = [graph.degree(v) + 1 for v in range(n)]
        self.alive = [True] * n
        self.alive_count = n
        self.tau = tau

    def assign(self, v: int, sign: int) -> list[int]:
        killed = []
        for u in self.closed[v]:
            self.slack[u] -= 1
            self.sums[u] += sign
            if self.alive[u] and self.sums[u] + self.slack[u] < self.tau:
                self.alive[u] = False
                killed.append(u)
        self.alive_count -= len(killed)
        return killed

    def unassign(self, v: int, sign: int, killed: list[int]) -> None:
        for u in killed:
            self.alive[u] = True
        self.alive_count += len(killed)
        for u in self.closed[v]:
            self.slack[u] += 1
            self.sums[u] -= sign


def _lexmin_witness(graph: Graph, k: int, tau: int, target: int) -> SignAssignment:
    """Lexicographically smallest assignment with weight == target that
    satisfies at least k vertices. ``target`` must be achievable."""
    n = graph.vertex_count
    state = _PartialState(graph, tau)
    signs = [0] * n

    def rec(idx: int, weight: int) -> bool:
        if idx == n:
            return weight == target and state.alive_count >= k
        rem = n - idx - 1
        for sign in (1, -1):
            w = weight + sign
            if w - rem > target or w + rem < target:
                continue
            killed = state.assign(idx, sign)
            signs[idx] = sign
            if state.alive_count >= k and rec(idx + 1, w):
                return True
            state.unassign(idx, sign, killed)
        return False

    if not rec(0, 0):
        raise RuntimeError(f"no assignment of weight {target} satisfies {k} vertices")
    return SignAssignment(tuple(signs))


def solve_bnb(graph: Graph, k: int, mode: Mode) -> SolveResult:
    """Exact optimum by depth-first branch-and-bound.

    Vertices are branched in descending-degree order (ties by ascending
    id), +1 before -1. Pruning: (a) a subtree whose best possible weight
    (all remaining -1) cannot beat the incumbent; (b) a partial
    assignment leaving fewer than k satisfiable vertices; (c) full stop
    once the incumbent reaches the strongest applicable parity-lifted
    lower bound. The incumbent is seeded with :func:`greedy_upper`, and
    the witness is canonicalized to the lexicographic minimum afterwards.
    """
    n = graph.vertex_count
    _check_k(n, k)
    tau = mode.threshold
    global_lb = bound_report(graph, k).best_applicable_lifted()

    seed = greedy_upper(graph, k, mode)
    best = seed.weight

    nodes = prunes_w = prunes_s = prunes_lb = 0
    if best == global_lb:
        prunes_lb += 1
    else:
        order = sorted(range(n), key=lambda v: (-graph.degree(v), v))
        state = _PartialState(graph, tau)
        stop = False

        def dfs(depth: int, weight: int) -> None:
            nonlocal best, stop, nodes, prunes_w, prunes_s, prunes_lb
            nodes += 1
            if depth == n:
                if state.alive_count >= k and weight < best:
                    best = weight
                    if best == global_lb:
                        stop = True
                        prunes_lb += 1
                return
            if weight - (n - depth) >= best:
                prunes_w += 1
                return
            if state.alive_count < k:
                prunes_s += 1
                return
            v = order[depth]
            for sign in (1, -1):
                killed = state.assign(v, sign)
                dfs(depth + 1, weight + sign)
                state.unassign(v, sign, killed)
                if stop:
                    return

        dfs(0, 0)

    witness = _lexmin_witness(graph, k, tau, best)
    ev = evaluate(graph, witness, mode)
    if ev.weight != best or ev.satisfied_count < k:
        raise RuntimeError("internal error: reconstructed witness is inconsistent")
    return SolveResult(
        optimum=best,
        witness=witness,
        satisfied_count=ev.satisfied_count,
        stats=SearchStats(nodes, prunes_w, prunes_s, prunes_lb),
    )


def solve(
    graph: Graph,
    k: int,
    mode: Mode,
    algorithm: str = "auto",
    brute_cap: int = BRUTE_FORCE_CAP,
) -> SolveResult:
    """Dispatch to an exact engine; ``auto`` uses brute force up to
    AUTO_BRUTE_MAX (14) vertices and branch-and-bound above."""
    if algorithm == "auto":
        algorithm = "brute" if graph.vertex_count <= AUTO_BRUTE_MAX else "bnb"
    if algorithm == "brute":
        return solve_bruteforce(graph, k, mode, cap=brute_cap)
    if algorithm == "bnb":
        return solve_bnb(graph, k, mode)
    raise ValueError(f"algorithm must be 'auto', 'brute' or 'bnb', got {algorithm!r}")


def result_record(graph: Graph, k: int, mode: Mode, result: SolveResult) -> dict[str, object]:
    """Flat record of a solve, for JSON-lines output."""
    return {
        "graph": graph.canonical_id(),
        "n": graph.vertex_count,
        "m": graph.edge_count,
        "k": k,
        "mode": mode.value,
        "optimum": result.optimum,
        "satisfied_count": result.satisfied_count,
        "witness": result.witness.to_string(),
        "stats.nodes": result.stats.nodes,
        "stats.prunes_weight": result.stats.prunes_weight,
        "stats.prunes_satisfiability": result.stats.prunes_satisfiability,
        "stats.prunes_global_lb": result.stats.prunes_global_lb,
    }
