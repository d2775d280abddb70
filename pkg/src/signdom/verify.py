"""Verification campaigns: run every cross-module invariant over a
reproducible graph ensemble and report failures with replayable
counterexamples.

A campaign is deterministic given its ensemble description and seed;
graphs are processed independently (optionally in parallel) and results
are aggregated in a fixed order, so reports are byte-identical across
runs and worker counts, up to the timestamp field.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import bounds as bounds_mod
from .graph import (
    Graph,
    degree_profile,
    gen_circulant,
    gen_complete,
    gen_cycle,
    gen_gnp,
    gen_hajos,
    gen_path,
    gen_sun,
    is_connected,
    to_dimacs,
)
from .solver import (
    Mode,
    SignAssignment,
    SolveResult,
    evaluate,
    greedy_upper,
    solve_bnb,
    solve_bruteforce,
)

__all__ = [
    "ALL_FAMILIES",
    "CHECK_NAMES",
    "EnsembleSpec",
    "Counterexample",
    "CheckResult",
    "CampaignReport",
    "build_ensemble",
    "run_campaign",
]

ALL_FAMILIES = ("complete", "cycle", "path", "sun", "hajos", "circulant", "gnp")

CHECK_NAMES = (
    "degree-identity",
    "ksub-reduction",
    "oracle-equivalence",
    "witness-validity",
    "parity",
    "bound-dominance",
    "degree-inequalities",
    "monotonicity",
    "mode-dominance",
    "even-graph-equality",
)

_SOLVE_CHECKS = frozenset(CHECK_NAMES) - {"degree-identity", "ksub-reduction"}


@dataclass(frozen=True)
class EnsembleSpec:
    """Which graphs a campaign runs on.

    The n range and p values parameterize the seeded G(n, p) cells
    (``seeds_per_cell`` seeds each, numbered from ``base_seed``;
    disconnected draws are discarded). Named families are bounded by
    ``n_max`` only.
    """

    families: tuple[str, ...] = ALL_FAMILIES
    n_min: int = 4
    n_max: int = 9
    p_values: tuple[float, ...] = (0.2, 0.5, 0.8)
    seeds_per_cell: int = 50
    base_seed: int = 0

    def describe(self) -> dict[str, object]:
        return {
            "families": list(self.families),
            "n_min": self.n_min,
            "n_max": self.n_max,
            "p_values": [repr(p) for p in self.p_values],
            "seeds_per_cell": self.seeds_per_cell,
            "base_seed": self.base_seed,
        }


def build_ensemble(spec: EnsembleSpec) -> list[tuple[str, Graph]]:
    """Deterministic (label, graph) list: named families first, then the
    connected G(n, p) draws ordered by (n, p, seed)."""
    for family in spec.families:
        if family not in ALL_FAMILIES:
            raise ValueError(f"unknown family {family!r}")
    out: list[tuple[str, Graph]] = []
    if "complete" in spec.families:
        out.extend((f"complete(n={n})", gen_complete(n)) for n in range(1, spec.n_max + 1))
    if "cycle" in spec.families:
        out.extend((f"cycle(n={n})", gen_cycle(n)) for n in range(3, spec.n_max + 1))
    if "path" in spec.families:
        out.extend((f"path(n={n})", gen_path(n)) for n in range(1, spec.n_max + 1))
    if "sun" in spec.families:
        out.extend((f"sun(t={t})", gen_sun(t)) for t in range(2, spec.n_max // 4 + 1))
    if "hajos" in spec.families and spec.n_max >= 6:
        out.append(("hajos()", gen_hajos()))
    if "circulant" in spec.families:
        out.extend(
            (f"circulant(n={n},offsets=1:2)", gen_circulant(n, (1, 2)))
            for n in range(5, spec.n_max + 1)
        )
    if "gnp" in spec.families:
        for n in range(spec.n_min, spec.n_max + 1):
            for p in spec.p_values:
                for i in range(spec.seeds_per_cell):
                    seed = spec.base_seed + i
                    graph = gen_gnp(n, p, seed)
                    if is_connected(graph):
                        out.append((f"gnp(n={n},p={p!r},seed={seed})", graph))
    return out


@dataclass(frozen=True)
class Counterexample:
    """A single failed assertion, with enough context to replay it."""

    check: str
    graph_label: str
    graph_dimacs: str
    k: int | None
    mode: str | None
    observed: str
    expected: str
    detail: str

    def to_dict(self) -> dict[str, object]:
        return {
            "check": self.check,
            "graph_label": self.graph_label,
            "graph_dimacs": self.graph_dimacs,
            "k": self.k,
            "mode": self.mode,
            "observed": self.observed,
            "expected": self.expected,
            "detail": self.detail,
        }


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failed: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)

    def to_dict(self, max_counterexamples: int) -> dict[str, object]:
        return {
            "name": self.name,
            "passed": self.passed,
            "failed": self.failed,
            "counterexamples": [
                ce.to_dict() for ce in self.counterexamples[:max_counterexamples]
            ],
        }


@dataclass
class CampaignReport:
    ensemble: dict[str, object]
    k_policy: str
    graph_count: int
    checks: list[CheckResult]
    all_passed: bool
    generated_at: str

    def to_dict(self, max_counterexamples: int = 20) -> dict[str, object]:
        return {
            "ensemble": self.ensemble,
            "k_policy": self.k_policy,
            "graph_count": self.graph_count,
            "checks": [c.to_dict(max_counterexamples) for c in self.checks],
            "all_passed": self.all_passed,
            "generated_at": self.generated_at,
        }

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def _k_values(n: int, k_policy: str) -> tuple[int, ...]:
    if k_policy == "all":
        return tuple(range(1, n + 1))
    if k_policy == "default":
        return tuple(sorted({1, math.ceil(n / 2), n}))
    raise ValueError(f"k_policy must be 'default' or 'all', got {k_policy!r}")


class _Tally:
    """Per-graph pass/fail accumulator shared by all checks."""

    def __init__(self, label: str, graph: Graph, active: frozenset[str]):
        self.label = label
        self.dimacs = to_dimacs(graph)
        self.active = active
        self.results: dict[str, CheckResult] = {name: CheckResult(name) for name in active}

    def record(
        self,
        check: str,
        ok: bool,
        observed: object,
        expected: object,
        detail: str,
        k: int | None = None,
        mode: Mode | None = None,
    ) -> None:
        if check not in self.active:
            return
        result = self.results[check]
        if ok:
            result.passed += 1
        else:
            result.failed += 1
            result.counterexamples.append(
                Counterexample(
                    check=check,
                    graph_label=self.label,
                    graph_dimacs=self.dimacs,
                    k=k,
                    mode=mode.value if mode is not None else None,
                    observed=str(observed),
                    expected=str(expected),
                    detail=detail,
                )
            )


def _degree_inequalities_full_domination(graph: Graph, f: SignAssignment, tally: _Tally) -> None:
    """Degree inequalities that every fully-satisfying nonneg assignment on
    a connected graph must obey."""
    n = graph.vertex_count
    profile = degree_profile(graph)
    pos = f.positives()
    neg = f.negatives()
    deg = graph.degree
    lhs1 = sum(deg(v) for v in pos)
    rhs1 = n + profile.n_e - 2 * len(pos) + sum(deg(v) for v in neg)
    tally.record(
        "degree-inequalities",
        lhs1 >= rhs1,
        lhs1,
        f">= {rhs1}",
        "sum of P-degrees vs n + n_e - 2|P| + sum of M-degrees",
        k=n,
        mode=Mode.NONNEG,
    )
    lhs2 = sum(len(graph.adjacency[v] & pos) for v in pos)
    rhs2 = sum(deg(v) // 2 for v in pos)  # ceil((d-1)/2) == d//2
    tally.record(
        "degree-inequalities",
        lhs2 >= rhs2,
        lhs2,
        f">= {rhs2}",
        "induced P-degrees vs sum of ceil((deg-1)/2) over P",
        k=n,
        mode=Mode.NONNEG,
    )


def _degree_inequality_subdomination(
    graph: Graph, f: SignAssignment, k: int, tally: _Tally
) -> None:
    """Degree inequality every optimal nonneg k-subdominating assignment
    must obey, in terms of the satisfied positive/negative split."""
    ev = evaluate(graph, f, Mode.NONNEG)
    pos = f.positives()
    deg = graph.degree
    lhs = sum(deg(v) for v in pos) + len(ev.p1)
    rhs = sum((deg(v) + 2) // 2 for v in ev.p1 | ev.m1)
    tally.record(
        "degree-inequalities",
        lhs >= rhs,
        lhs,
        f">= {rhs}",
        "sum of P-degrees + |P1| vs sum of ceil((deg+1)/2) over P1 u M1",
        k=k,
        mode=Mode.NONNEG,
    )


def _graph_battery(
    args: tuple[str, Graph, tuple[int, ...], frozenset[str], int]
) -> list[CheckResult]:
    label, graph, ks, active, brute_threshold = args
    tally = _Tally(label, graph, active)
    profile = degree_profile(graph)
    n = graph.vertex_count
    connected = is_connected(graph)

    if "degree-identity" in active:
        lhs = 2 * profile.ceil_half_sum(n)
        rhs = 2 * profile.m + n + profile.n_e
        tally.record(
            "degree-identity", lhs == rhs, lhs, rhs, "2*sum ceil((d_i+1)/2) vs 2m+n+n_e"
        )

    if "ksub-reduction" in active:
        left1 = bounds_mod.bound_ksub_1(profile, n)
        right1 = bounds_mod.bound_nn_2(profile)
        tally.record("ksub-reduction", left1 == right1, left1, right1, "ksub1 at k=n vs nn2", k=n)
        left2 = bounds_mod.bound_ksub_2(profile, n)
        right2 = bounds_mod.bound_nn_3(profile)
        tally.record("ksub-reduction", left2 == right2, left2, right2, "ksub2 at k=n vs nn3", k=n)

    if not (_SOLVE_CHECKS & active):
        return sorted(tally.results.values(), key=lambda r: r.name)

    use_brute = n <= brute_threshold
    exact: dict[tuple[Mode, int], SolveResult] = {}
    for mode in (Mode.NONNEG, Mode.SIGNED):
        for k in ks:
            bnb = solve_bnb(graph, k, mode)
            brute = solve_bruteforce(graph, k, mode) if use_brute else None
            exact[(mode, k)] = brute if brute is not None else bnb

            if brute is not None:
                tally.record(
                    "oracle-equivalence",
                    bnb.optimum == brute.optimum,
                    bnb.optimum,
                    brute.optimum,
                    "branch-and-bound optimum vs exhaustive optimum",
                    k=k,
                    mode=mode,
                )
                tally.record(
                    "oracle-equivalence",
                    bnb.witness == brute.witness,
                    bnb.witness.to_string(),
                    brute.witness.to_string(),
                    "canonical witness agreement",
                    k=k,
                    mode=mode,
                )
            ev = evaluate(graph, bnb.witness, mode)
            tally.record(
                "witness-validity",
                ev.weight == bnb.optimum and ev.satisfied_count >= k,
                f"weight={ev.weight}, satisfied={ev.satisfied_count}",
                f"weight={bnb.optimum}, satisfied>={k}",
                "witness evaluates to the reported optimum and feasibility",
                k=k,
                mode=mode,
            )
            tally.record(
                "parity",
                (bnb.optimum - n) % 2 == 0,
                bnb.optimum,
                f"congruent to {n} mod 2",
                "optimum weight parity",
                k=k,
                mode=mode,
            )
            parity_ok = all(
                (ev.closed_sums[v] - (graph.degree(v) + 1)) % 2 == 0 for v in range(n)
            )
            tally.record(
                "parity",
                parity_ok,
                tuple(ev.closed_sums),
                "each sum congruent to deg+1 mod 2",
                "closed-sum parity",
                k=k,
                mode=mode,
            )

    if "bound-dominance" in active:
        for k in ks:
            report = bounds_mod.bound_report(graph, k)
            opt = exact[(Mode.NONNEG, k)].optimum
            for name in bounds_mod.BOUND_NAMES:
                b = report[name]
                if not b.applicable:
                    continue
                tally.record(
                    "bound-dominance",
                    b.raw <= opt,
                    opt,
                    f">= {b.raw}",
                    f"exact optimum vs {name} raw",
                    k=k,
                    mode=Mode.NONNEG,
                )
                tally.record(
                    "bound-dominance",
                    b.parity_lifted <= opt,
                    opt,
                    f">= {b.parity_lifted}",
                    f"exact optimum vs {name} parity-lifted",
                    k=k,
                    mode=Mode.NONNEG,
                )

    if "degree-inequalities" in active:
        if n in ks and connected:
            full = [exact[(Mode.NONNEG, n)].witness, greedy_upper(graph, n, Mode.NONNEG)]
            full.append(SignAssignment.all_plus(n))
            for f in full:
                _degree_inequalities_full_domination(graph, f, tally)
        for k in ks:
            _degree_inequality_subdomination(graph, exact[(Mode.NONNEG, k)].witness, k, tally)

    if "monotonicity" in active:
        for mode in (Mode.NONNEG, Mode.SIGNED):
            optima = [exact[(mode, k)].optimum for k in ks]
            ok = all(a <= b for a, b in zip(optima, optima[1:]))
            tally.record(
                "monotonicity",
                ok,
                dict(zip(ks, optima)),
                "nondecreasing in k",
                "optimum as a function of k",
                mode=mode,
            )

    if "mode-dominance" in active:
        for k in ks:
            lo = exact[(Mode.NONNEG, k)].optimum
            hi = exact[(Mode.SIGNED, k)].optimum
            tally.record(
                "mode-dominance",
                lo <= hi,
                f"nonneg={lo}, signed={hi}",
                "nonneg <= signed",
                "threshold relaxation can only lower the optimum",
                k=k,
            )

    if "even-graph-equality" in active and profile.n_o == 0 and n > 0:
        for k in ks:
            lo = exact[(Mode.NONNEG, k)].optimum
            hi = exact[(Mode.SIGNED, k)].optimum
            tally.record(
                "even-graph-equality",
                lo == hi,
                f"nonneg={lo}, signed={hi}",
                "equal on even graphs",
                "all degrees even forces both modes to coincide",
                k=k,
            )

    return sorted(tally.results.values(), key=lambda r: r.name)


def run_campaign(
    spec: EnsembleSpec | None = None,
    k_policy: str = "default",
    checks: tuple[str, ...] | None = None,
    workers: int = 1,
    brute_threshold: int = 14,
) -> CampaignReport:
    """Run the selected checks over the ensemble and aggregate a report.

    ``workers`` > 1 distributes graphs over a process pool; aggregation
    order is fixed by the ensemble order either way.
    """
    spec = spec or EnsembleSpec()
    names = checks if checks is not None else CHECK_NAMES
    for name in names:
        if name not in CHECK_NAMES:
            raise ValueError(f"unknown check {name!r}; known: {', '.join(CHECK_NAMES)}")
    active = frozenset(names)

    ensemble = build_ensemble(spec)
    tasks = [
        (label, graph, _k_values(graph.vertex_count, k_policy), active, brute_threshold)
        for label, graph in ensemble
    ]

    merged: dict[str, CheckResult] = {name: CheckResult(name) for name in sorted(active)}
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(_graph_battery, tasks, chunksize=16))
    else:
        batches = [_graph_battery(task) for task in tasks]
    for batch in batches:
        for result in batch:
            target = merged[result.name]
            target.passed += result.passed
            target.failed += result.failed
            target.counterexamples.extend(result.counterexamples)

    checks_out = [merged[name] for name in sorted(merged)]
    return CampaignReport(
        ensemble=spec.describe(),
        k_policy=k_policy,
        graph_count=len(ensemble),
        checks=checks_out,
        all_passed=all(c.failed == 0 for c in checks_out),
        generated_at=time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
    )
