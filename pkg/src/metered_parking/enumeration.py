"""Brute-force oracle, formula dispatch, lucky-car counts and table grids.

The oracle walks all n^m preference lists in lexicographic order with an
in-place odometer, simulating the t-metered scheme incrementally along the
shared prefix.  Once a car fails, no extension of that prefix can be a
member, so the odometer carries at that position; the count is unchanged by
the skip.  The search space splits into disjoint first-entry ranges whose
partial counts add up, which is how multi-worker runs stay deterministic.

Counts are exact Python integers throughout: some closed-form terms exceed
64-bit range well inside the supported parameter grid even though the table
cells themselves stay small.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Callable, Optional

from .errors import BudgetError, DomainError, InputError, VerificationError
from .lace import count_t1_recursive
from .parksim import FAIL, ParkingInstance, simulate_metered
from .periodic import count_n1
from .shuffle import count_m2

#: Default search budget in simulated car-steps (n^m * m).
DEFAULT_BUDGET = 10 ** 9

#: Names a count's provenance.
METHODS = frozenset(
    {
        "brute",
        "t0",
        "classical",
        "zero",
        "m2cars",
        "t1-recursion",
        "t1-closed",
        "m-minus-2",
        "n-minus-1",
        "lucky-one",
        "lucky-all",
    }
)


@dataclass(frozen=True)
class CountResult:
    """An exact count plus the method that produced it."""

    value: int
    method: str

    def __post_init__(self) -> None:
        if self.value < 0:
            raise InputError(f"counts are nonnegative, got {self.value}")
        if self.method not in METHODS:
            raise InputError(f"unknown counting method {self.method!r}")


def _check_sizes(m: int, n: int, t: int) -> None:
    if m < 1 or n < 1 or t < 0:
        raise InputError(f"need m >= 1, n >= 1, t >= 0; got m={m}, n={n}, t={t}")


def _require_budget(m: int, n: int, t: int, budget: int) -> None:
    steps = n ** m * m
    if steps > budget:
        raise BudgetError(
            f"enumerating ({m},{n},t={t}) needs {steps} car-steps, "
            f"budget is {budget}"
        )


def _count_lex_range(m: int, n: int, t: int, first_lo: int, first_hi: int) -> int:
    """Members among lists with first entry in [first_lo, first_hi].

    Odometer walk in lexicographic order; simulation state is kept per
    depth so only the changed suffix is re-simulated.  A failed car makes
    every completion fail, so its subtree is skipped without being counted.
    """
    masks = [0] * m   # occupied-spot bitmask seen by the car at each depth
    wins = [()] * m   # spots of the cars still parked, oldest first
    vals = [0] * m
    vals[0] = first_lo - 1
    count = 0
    top = m - 1
    d = 0
    while d >= 0:
        v = vals[d] + 1
        if v > (first_hi if d == 0 else n):
            d -= 1
            continue
        vals[d] = v
        mask = masks[d]
        s = v
        while (mask >> (s - 1)) & 1:
            s += 1
        if s > n:
            continue
        if d == top:
            count += 1
            continue
        w = wins[d] + (s,)
        mask |= 1 << (s - 1)
        if len(w) > t:
            mask ^= 1 << (w[0] - 1)
            w = w[1:]
        d += 1
        masks[d] = mask
        wins[d] = w
        vals[d] = 0
    return count


def _split_first_ranges(n: int, workers: int) -> list:
    chunks = min(workers, n)
    bounds = [round(i * n / chunks) for i in range(chunks + 1)]
    return [(lo + 1, hi) for lo, hi in zip(bounds, bounds[1:]) if hi > lo]


def brute_count(
    m: int,
    n: int,
    t: int,
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> int:
    """Number of t-metered (m,n)-parking functions by exhaustive simulation.

    The independent oracle behind every formula check.  Refuses loudly when
    n^m * m exceeds ``budget``; splits the first-entry range across
    ``workers`` processes when asked, with identical results.
    """
    _check_sizes(m, n, t)
    _require_budget(m, n, t, budget)
    if workers <= 1 or n == 1:
        return _count_lex_range(m, n, t, 1, n)
    with ProcessPoolExecutor(max_workers=min(workers, n)) as pool:
        futures = [
            pool.submit(_count_lex_range, m, n, t, lo, hi)
            for lo, hi in _split_first_ranges(n, workers)
        ]
        return sum(f.result() for f in futures)


def count(
    m: int,
    n: int,
    t: int,
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> CountResult:
    """Count t-metered (m,n)-parking functions by the first applicable rule.

    Rule order: empty-street t=0; the zero regime (m > n, t >= n); the
    classical regime (t >= m-1, n >= m); two cars; the t=1 recursion; the
    t = m-2 closed sum; the t = n-1 permutation sum; otherwise brute force.
    """
    _check_sizes(m, n, t)
    if t == 0:
        return CountResult(n ** m, "t0")
    if m > n and t >= n:
        return CountResult(0, "zero")
    if t >= m - 1 and n >= m:
        return CountResult((n - m + 1) * (n + 1) ** (m - 1), "classical")
    if m == 2 and t >= 1:
        return CountResult(n * n - 1, "m2cars")
    if t == 1 and m <= n + 1:
        return CountResult(count_t1_recursive(m, n), "t1-recursion")
    if t == m - 2 and 2 < m <= n + 1:
        return CountResult(count_m2(m, n), "m-minus-2")
    if t == n - 1 and m > n:
        return CountResult(count_n1(n, m - n), "n-minus-1")
    return CountResult(brute_count(m, n, t, budget=budget, workers=workers), "brute")


@lru_cache(maxsize=None)
def _lucky_histogram(m: int, n: int, t: int) -> tuple:
    inst = ParkingInstance(m, n, t)
    hist = [0] * (m + 1)
    for prefs in itertools.product(range(1, n + 1), repeat=m):
        out = simulate_metered(inst, prefs)
        if FAIL in out:
            continue
        hist[sum(1 for p, a in zip(out, prefs) if p == a)] += 1
    return tuple(hist)


def count_lucky_exact(
    m: int, n: int, t: int, k: int, *, budget: int = DEFAULT_BUDGET
) -> int:
    """Members whose simulation parks exactly k cars at their preference."""
    _check_sizes(m, n, t)
    if not 0 <= k <= m:
        raise DomainError(f"lucky count {k} not in 0..{m}")
    _require_budget(m, n, t, budget)
    return _lucky_histogram(m, n, t)[k]


def formula_one_lucky(m: int, n: int, t: int) -> int:
    """Members with exactly one lucky car: (t-1)! * (n-m+1) * t^(m-t).

    Zero whenever m > n: the single lucky car would have to park low enough
    to leave room for the whole unlucky chain behind it.
    """
    if m < 2 or n < 2 or not 1 <= t <= m - 1:
        raise DomainError(
            f"one-lucky formula needs m, n >= 2 and 1 <= t <= m - 1, "
            f"got m={m}, n={n}, t={t}"
        )
    if n - m + 1 <= 0:
        return 0
    return factorial(t - 1) * (n - m + 1) * t ** (m - t)


def formula_all_lucky(m: int, n: int, t: int) -> int:
    """Members with every car lucky: n(n-1)...(n-t+1) * (n-t)^(m-t).

    The falling factorial hits zero once t reaches n, matching the empty
    membership set in that regime.
    """
    if m < 2 or n < 2 or not 1 <= t <= m - 1:
        raise DomainError(
            f"all-lucky formula needs m, n >= 2 and 1 <= t <= m - 1, "
            f"got m={m}, n={n}, t={t}"
        )
    falling = 1
    for i in range(t):
        falling *= n - i
    if falling <= 0:
        return 0
    return falling * (n - t) ** (m - t)


@dataclass(frozen=True)
class TableCell:
    """One grid cell: its count, provenance, and whether the rule applies."""

    value: int
    method: str
    defined: bool = True


@dataclass(frozen=True)
class TableGrid:
    """A grid of counts with rows of cars (or meters) and columns of spots."""

    t_rule: str
    row_label: str
    rows: tuple
    cols: tuple
    cells: tuple  # tuple of row tuples of TableCell

    def value_at(self, row: int, col: int) -> int:
        return self.cells[self.rows.index(row)][self.cols.index(col)].value


_T_RULES = ("m-2", "n-1", "diag-t")


def _resolve_rule(t_rule: str, row: int, col: int) -> Optional[tuple]:
    """Map a grid position to the (m, n, t) it stands for, or None."""
    if t_rule.startswith("fixed:"):
        return (row, col, int(t_rule.split(":", 1)[1]))
    if t_rule == "m-2":
        return (row, col, row - 2) if row >= 2 else None
    if t_rule == "n-1":
        return (row, col, col - 1)
    if t_rule == "diag-t":
        return (col, col, row)
    raise InputError(f"unknown t-rule {t_rule!r}; use fixed:<t>, m-2, n-1 or diag-t")


def parse_t_rule(t_rule: str) -> str:
    """Validate and normalize a t-rule string."""
    if t_rule in _T_RULES:
        return t_rule
    if t_rule.startswith("fixed:"):
        try:
            t = int(t_rule.split(":", 1)[1])
        except ValueError:
            raise InputError(f"bad fixed t-rule {t_rule!r}") from None
        if t < 0:
            raise InputError(f"fixed t must be >= 0, got {t}")
        return f"fixed:{t}"
    raise InputError(f"unknown t-rule {t_rule!r}; use fixed:<t>, m-2, n-1 or diag-t")


def build_table(
    t_rule: str,
    m_range,
    n_range,
    method: str = "brute",
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> TableGrid:
    """Grid of counts under a t-rule; ``method`` is brute, formula or both.

    Under ``both`` every cell whose dispatched method is a genuine formula
    is checked against the oracle, and any mismatch raises naming the cell.
    Grid positions where the rule yields a negative t are flagged undefined
    and shown as 0.
    """
    t_rule = parse_t_rule(t_rule)
    if method not in ("brute", "formula", "both"):
        raise InputError(f"method must be brute, formula or both, got {method!r}")
    rows = tuple(m_range)
    cols = tuple(n_range)
    grid = []
    for row in rows:
        line = []
        for col in cols:
            resolved = _resolve_rule(t_rule, row, col)
            if resolved is None:
                line.append(TableCell(0, "undefined", defined=False))
                continue
            m, n, t = resolved
            if method == "brute":
                cell = TableCell(brute_count(m, n, t, budget=budget, workers=workers), "brute")
            elif method == "formula":
                res = count(m, n, t, budget=budget, workers=workers)
                cell = TableCell(res.value, res.method)
            else:
                res = count(m, n, t, budget=budget, workers=workers)
                oracle = brute_count(m, n, t, budget=budget, workers=workers)
                if res.value != oracle:
                    raise VerificationError(
                        f"cell (m={m}, n={n}, t={t}): method {res.method} gives "
                        f"{res.value}, brute force gives {oracle}"
                    )
                label = "brute" if res.method == "brute" else f"{res.method}+brute"
                cell = TableCell(oracle, label)
            line.append(cell)
        grid.append(tuple(line))
    return TableGrid(
        t_rule=t_rule,
        row_label="t" if t_rule == "diag-t" else "m",
        rows=rows,
        cols=cols,
        cells=tuple(grid),
    )


@dataclass(frozen=True)
class ConjectureReport:
    """Brute counts across a (m, n, t) grid and any monotonicity violations.

    The conjecture that counts never increase with t is open; this report is
    evidence only, never an assertion.
    """

    m_max: int
    n_max: int
    t_max: int
    counts: dict  # (m, n) -> tuple of counts for t = 0..t_max
    violations: tuple  # (m, n, t1, t2, value1, value2)


def check_monotone_conjecture(
    m_max: int,
    n_max: int,
    t_max: int,
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> ConjectureReport:
    """Brute-force the whole grid and report every adjacent t increase."""
    counts = {}
    violations = []
    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            row = tuple(
                brute_count(m, n, t, budget=budget, workers=workers)
                for t in range(t_max + 1)
            )
            counts[(m, n)] = row
            for t in range(t_max):
                if row[t + 1] > row[t]:
                    violations.append((m, n, t, t + 1, row[t], row[t + 1]))
    return ConjectureReport(
        m_max=m_max,
        n_max=n_max,
        t_max=t_max,
        counts=counts,
        violations=tuple(violations),
    )
