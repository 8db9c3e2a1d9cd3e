"""Exhaustive cross-checks: characterizations, formulas, scheme invariants.

Every suite here compares an independent route against plain simulation over
a complete small search space and reports the first few discrepancies, if
any.  These back the ``check`` CLI command and the acceptance tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import lace, periodic, shuffle
from .enumeration import DEFAULT_BUDGET, brute_count, check_monotone_conjecture, count
from .errors import InputError
from .parksim import (
    FAIL,
    ParkingInstance,
    is_mpf,
    is_pf_by_rearrangement,
    simulate_metered,
    window_condition,
)

_MAX_REPORTED = 5


@dataclass
class SuiteOutcome:
    """Result of one verification suite."""

    name: str
    passed: bool
    checked: int
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)


def _all_prefs(m: int, n: int):
    return itertools.product(range(1, n + 1), repeat=m)


def suite_lace_characterization(n_max: int = 5) -> SuiteOutcome:
    """Lace membership test against simulation for all m <= n <= n_max."""
    checked = 0
    failures = []
    for n in range(1, n_max + 1):
        for m in range(1, n + 1):
            inst = ParkingInstance(m, n, 1)
            for prefs in _all_prefs(m, n):
                checked += 1
                if lace.is_t1_by_lace(n, prefs) != is_mpf(inst, prefs):
                    if len(failures) < _MAX_REPORTED:
                        failures.append(f"lace mismatch at n={n}, prefs={prefs}")
    return SuiteOutcome("characterizations/lace", not failures, checked, failures)


def suite_shuffle_characterization(n_max: int = 6) -> SuiteOutcome:
    """Threshold membership test against simulation, 2 < m <= n+1 <= n_max+1."""
    checked = 0
    failures = []
    for n in range(2, n_max + 1):
        for m in range(3, n + 2):
            inst = ParkingInstance(m, n, m - 2)
            for prefs in _all_prefs(m, n):
                checked += 1
                if shuffle.is_m2_metered(n, prefs) != is_mpf(inst, prefs):
                    if len(failures) < _MAX_REPORTED:
                        failures.append(
                            f"shuffle mismatch at m={m}, n={n}, prefs={prefs}"
                        )
    return SuiteOutcome("characterizations/shuffle", not failures, checked, failures)


def suite_periodic_characterization(n_max: int = 4, extra_cars: int = 4) -> SuiteOutcome:
    """Periodic-outcome membership test against simulation."""
    checked = 0
    failures = []
    for n in range(1, n_max + 1):
        for m in range(1, n + extra_cars + 1):
            inst = ParkingInstance(m, n, n - 1)
            for prefs in _all_prefs(m, n):
                checked += 1
                if periodic.is_n1_metered(n, prefs) != is_mpf(inst, prefs):
                    if len(failures) < _MAX_REPORTED:
                        failures.append(
                            f"periodic mismatch at m={m}, n={n}, prefs={prefs}"
                        )
    return SuiteOutcome("characterizations/periodic", not failures, checked, failures)


def suite_characterizations(n_max: int = 5) -> list:
    return [
        suite_lace_characterization(n_max),
        suite_shuffle_characterization(n_max),
        suite_periodic_characterization(min(n_max, 4)),
    ]


def suite_formulas(
    m_max: int = 7,
    n_max: int = 7,
    t_max: int = 7,
    *,
    budget: int = DEFAULT_BUDGET,
) -> list:
    """Every dispatched formula count must equal the brute-force oracle."""
    checked = 0
    failures = []
    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            for t in range(t_max + 1):
                res = count(m, n, t, budget=budget)
                if res.method == "brute":
                    continue
                checked += 1
                oracle = brute_count(m, n, t, budget=budget)
                if res.value != oracle:
                    if len(failures) < _MAX_REPORTED:
                        failures.append(
                            f"({m},{n},t={t}): {res.method} gives {res.value}, "
                            f"brute gives {oracle}"
                        )
    return [SuiteOutcome("formulas/dispatch-vs-oracle", not failures, checked, failures)]


def _classical_member(m: int, n: int, prefs) -> bool:
    srt = sorted(prefs)
    return all(srt[i] <= n - m + i + 1 for i in range(m))


def suite_invariants(
    m_max: int = 6,
    n_max: int = 6,
    t_max: int = 6,
) -> list:
    """Scheme-level properties, grid-checked by full enumeration.

    Per list: displacement never exceeds t, only cars preferring a spot
    above n - t can fail, classical members are members for every t, and
    membership implies the window condition.  Per member: every prefix is a
    member (re-simulated from scratch).  Per cell: the (n-t)^m lower bound,
    the zero law for m > n with t >= n, and count stability once t passes
    m - 1 on streets with n >= m.
    """
    checked = 0
    failures = []

    def note(msg: str) -> None:
        if len(failures) < _MAX_REPORTED:
            failures.append(msg)

    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            members_by_t = []
            for t in range(t_max + 1):
                inst = ParkingInstance(m, n, t)
                members = 0
                for prefs in _all_prefs(m, n):
                    checked += 1
                    out = simulate_metered(inst, prefs)
                    member = True
                    for a, p in zip(prefs, out):
                        if p is FAIL:
                            member = False
                            if a < n - t + 1:
                                note(
                                    f"({m},{n},t={t}) {prefs}: car with preference "
                                    f"{a} failed below n - t + 1"
                                )
                        elif p - a > t:
                            note(
                                f"({m},{n},t={t}) {prefs}: displacement {p - a} "
                                f"exceeds t"
                            )
                    if member:
                        members += 1
                        if not window_condition(inst, prefs):
                            note(f"({m},{n},t={t}) {prefs}: member fails window condition")
                        for ell in range(1, m):
                            head = prefs[:ell]
                            if FAIL in simulate_metered(ParkingInstance(ell, n, t), head):
                                note(
                                    f"({m},{n},t={t}) {prefs}: prefix {head} is "
                                    f"not a member"
                                )
                                break
                    if m <= n and _classical_member(m, n, prefs) and not member:
                        note(
                            f"({m},{n},t={t}) {prefs}: classical member rejected "
                            f"by the metered scheme"
                        )
                members_by_t.append(members)
                if n > t and members < (n - t) ** m:
                    note(f"({m},{n},t={t}): count {members} below (n-t)^m")
                if m > n and t >= n and members != 0:
                    note(f"({m},{n},t={t}): count {members} violates the zero law")
            if n >= m:
                for t1 in range(max(m - 1, 0), t_max):
                    if members_by_t[t1] != members_by_t[t1 + 1]:
                        note(
                            f"({m},{n}): counts differ between t={t1} and t={t1 + 1} "
                            f"above the meter horizon"
                        )
    return [SuiteOutcome("invariants/scheme-properties", not failures, checked, failures)]


def suite_conjecture(
    m_max: int = 6,
    n_max: int = 6,
    t_max: int = 6,
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> list:
    """Monotonicity-in-t evidence: reported prominently, never a failure."""
    report = check_monotone_conjecture(
        m_max, n_max, t_max, budget=budget, workers=workers
    )
    notes = [
        f"mpf({m},{n}) rises from {v1} at t={t1} to {v2} at t={t2}"
        for (m, n, t1, t2, v1, v2) in report.violations
    ]
    if not notes:
        notes = [f"no violations on m <= {m_max}, n <= {n_max}, t <= {t_max}"]
    outcome = SuiteOutcome(
        "conjecture/monotone-in-t",
        True,
        len(report.counts) * (t_max + 1),
        notes=notes,
    )
    return [outcome]


def run_suites(
    names,
    *,
    m_max: int = 5,
    n_max: int = 5,
    t_max: int = 5,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> list:
    """Run the named suites and return their outcomes in order."""
    outcomes = []
    for name in names:
        if name == "characterizations":
            outcomes.extend(suite_characterizations(n_max))
        elif name == "formulas":
            outcomes.extend(suite_formulas(m_max, n_max, t_max, budget=budget))
        elif name == "invariants":
            outcomes.extend(suite_invariants(m_max, n_max, t_max))
        elif name == "conjecture":
            outcomes.extend(
                suite_conjecture(m_max, n_max, t_max, budget=budget, workers=workers)
            )
        else:
            raise InputError(f"unknown suite {name!r}")
    return outcomes
