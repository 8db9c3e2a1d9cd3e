"""Simulation of the classical and t-metered parking schemes.

There are ``m`` cars in line for a one-way street with spots ``1..n``.  Cars
enter in order; car ``i`` drives to its preferred spot ``a_i``, takes it if
free, otherwise rolls forward and takes the first free spot.  A car that
reaches the end of the street without parking exits and is gone for good.

Under the *t-metered* scheme each car additionally has a meter of length
``t``: immediately after car ``j`` parks, car ``j - t`` (if it parked)
vacates its spot.  Equivalently, when car ``j`` arrives, the only cars still
on the street are the parked cars among ``j-t .. j-1``.  A preference list
under which every car parks is a t-metered (m,n)-parking function.

All functions here are pure; preference lists are plain sequences of ints in
``1..n`` and outcomes are tuples whose entries are spot numbers or ``FAIL``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence


from .errors import DomainError, InputError


class _FailMarker:
    """Outcome entry for a car that exits the street without parking."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "X"

    def __reduce__(self):
        return (_get_fail_marker, ())


def _get_fail_marker() -> "_FailMarker":
    return FAIL


#: Singleton marker used in outcomes for cars that could not park.
FAIL = _FailMarker()

Prefs = Sequence[int]
Outcome = tuple  # entries are int spots or FAIL


@dataclass(frozen=True)
class ParkingInstance:
    """Problem size: m cars, n spots, meter length t."""

    m: int
    n: int
    t: int = 0

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1 or self.t < 0:
            raise InputError(
                f"need m >= 1, n >= 1, t >= 0; got m={self.m}, n={self.n}, t={self.t}"
            )


@dataclass(frozen=True)
class CarStatistics:
    """Per-car luck and displacement data extracted from an outcome.

    ``displacements[i]`` is ``spot - preference`` for a parked car and None
    for a car that failed to park; such cars carry no displacement.
    """

    lucky_count: int
    displacements: tuple
    total_displacement: int


def _check_prefs(m: int, n: int, prefs: Prefs) -> None:
    if len(prefs) != m:
        raise InputError(f"preference list has length {len(prefs)}, expected {m}")
    for a in prefs:
        if not isinstance(a, int) or isinstance(a, bool) or not 1 <= a <= n:
            raise InputError(f"preference {a!r} is not an integer in 1..{n}")


def simulate_classical(inst: ParkingInstance, prefs: Prefs) -> Outcome:
    """Park all cars under the classical scheme (nobody ever leaves).

    The meter length of ``inst`` is ignored.  A car that cannot park is
    recorded as FAIL and the remaining cars continue.
    """
    _check_prefs(inst.m, inst.n, prefs)
    n = inst.n
    occupied = set()
    out = []
    for a in prefs:
        s = a
        while s <= n and s in occupied:
            s += 1
        if s > n:
            out.append(FAIL)
        else:
            occupied.add(s)
            out.append(s)
    return tuple(out)


def simulate_metered(inst: ParkingInstance, prefs: Prefs) -> Outcome:
    """Park all cars under the t-metered scheme.

    When car ``i`` (0-based here) arrives, every car with index at most
    ``i - t - 1`` has already vacated.  A car that fails to park exits
    immediately: it never occupies a spot and never holds a place in any
    later car's meter window.
    """
    _check_prefs(inst.m, inst.n, prefs)
    t, n = inst.t, inst.n
    occupied = set()
    street = deque()  # (car index, spot) of parked cars, oldest first
    out = []
    for i, a in enumerate(prefs):
        while street and street[0][0] < i - t:
            occupied.discard(street.popleft()[1])
        s = a
        while s <= n and s in occupied:
            s += 1
        if s > n:
            out.append(FAIL)
        else:
            occupied.add(s)
            street.append((i, s))
            out.append(s)
    return tuple(out)


def is_mpf(inst: ParkingInstance, prefs: Prefs) -> bool:
    """True iff every car parks under the t-metered scheme."""
    return FAIL not in simulate_metered(inst, prefs)


def is_pf_by_rearrangement(m: int, n: int, prefs: Prefs) -> bool:
    """Classical (m,n)-parking-function test via the sorted-entry criterion.

    A list is a classical (m,n)-parking function exactly when its
    non-decreasing rearrangement a' satisfies ``a'_i <= n - m + i`` for every
    position i.  Only defined for m <= n.
    """
    if m > n:
        raise DomainError(f"classical membership needs m <= n, got m={m}, n={n}")
    _check_prefs(m, n, prefs)
    srt = sorted(prefs)
    return all(srt[i] <= n - m + i + 1 for i in range(m))


def statistics(outcome: Outcome, prefs: Prefs) -> CarStatistics:
    """Lucky-car count and displacement vector for an outcome of ``prefs``."""
    if len(outcome) != len(prefs):
        raise InputError(
            f"outcome length {len(outcome)} != preference length {len(prefs)}"
        )
    disp = tuple(
        (p - a) if p is not FAIL else None for p, a in zip(outcome, prefs)
    )
    lucky = sum(1 for d in disp if d == 0)
    total = sum(d for d in disp if d is not None)
    return CarStatistics(lucky_count=lucky, displacements=disp, total_displacement=total)


def window_condition(inst: ParkingInstance, prefs: Prefs) -> bool:
    """Necessary counting condition over every block of t+1 consecutive cars.

    For each spot threshold ``i`` and each window of t+1 consecutive cars, at
    least ``t + 1 - n + i`` of the window's preferences must be <= i.  Every
    t-metered parking function satisfies this; the converse fails.  Windows
    only exist when m >= t + 1, so shorter instances pass vacuously.
    """
    m, n, t = inst.m, inst.n, inst.t
    _check_prefs(m, n, prefs)
    if m < t + 1:
        return True
    for j in range(m - t):
        window = prefs[j : j + t + 1]
        # t + 1 - n + i is a real constraint only for i > n - t - 1
        for i in range(max(1, n - t), n + 1):
            need = t + 1 - n + i
            if sum(1 for a in window if a <= i) < need:
                return False
    return True
