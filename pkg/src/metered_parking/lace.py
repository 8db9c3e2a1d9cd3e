"""Lace machinery for the 1-metered scheme, and every t=1 counting formula.

A *lace* is a run of the form ``(p, p, p+1, p+2, ..., p+L-2)`` for some
length ``L >= 2``, or a singleton ``(p)``.  Decomposing a preference list
greedily from the left into maximal laces identifies exactly the cars that
get bumped by one spot under the 1-metered scheme: the non-first entries of
each lace.  A list is a 1-metered (m,n)-parking function (for m <= n) iff
every entry equal to n sits at the start of its lace.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, InputError, PrecisionError
from .parksim import FAIL, ParkingInstance, simulate_metered


@dataclass(frozen=True)
class Lace:
    """A lace with starting value ``start`` and ``length`` entries."""

    start: int
    length: int

    def expand(self) -> tuple:
        """The entry sequence this lace denotes."""
        if self.length == 1:
            return (self.start,)
        return (self.start,) + tuple(self.start + i for i in range(self.length - 1))


def lace_decompose(prefs: Sequence[int]) -> tuple:
    """Greedy left-to-right partition of ``prefs`` into maximal laces."""
    if not prefs:
        raise InputError("cannot decompose an empty preference list")
    m = len(prefs)
    laces = []
    i = 0
    while i < m:
        p = prefs[i]
        length = 1
        if i + 1 < m and prefs[i + 1] == p:
            length = 2
            expected = p + 1
            while i + length < m and prefs[i + length] == expected:
                length += 1
                expected += 1
        laces.append(Lace(p, length))
        i += length
    return tuple(laces)


def displaced_indices(prefs: Sequence[int]) -> set:
    """1-based positions that are not the first entry of their lace.

    For m <= n these are exactly the cars displaced by one spot under the
    1-metered scheme.
    """
    displaced = set()
    pos = 1
    for lace in lace_decompose(prefs):
        displaced.update(range(pos + 1, pos + lace.length))
        pos += lace.length
    return displaced


def is_t1_by_lace(n: int, prefs: Sequence[int]) -> bool:
    """Lace-based 1-metered membership test: no entry n may be displaced."""
    pos = 0
    for lace in lace_decompose(prefs):
        for off, v in enumerate(lace.expand()):
            if off > 0 and v == n:
                return False
        pos += lace.length
    return True


def count_t1_recursive(m: int, n: int) -> int:
    """Number of 1-metered (m,n)-parking functions via the linear recursion.

    f(0) = 1, f(1) = n, and f(m+1) = n*f(m) - f(m-1), valid up to m = n + 1.
    Above that the recursion breaks down and only brute force answers.
    """
    if n < 1:
        raise DomainError(f"need n >= 1, got n={n}")
    if not 0 <= m <= n + 1:
        raise DomainError(f"recursion only valid for 0 <= m <= n + 1, got m={m}, n={n}")
    prev, cur = 1, n
    if m == 0:
        return prev
    for _ in range(m - 1):
        prev, cur = cur, n * cur - prev
    return cur


def count_t1_diag_closed(n: int) -> int:
    """Closed form for the diagonal count of 1-metered (n,n)-parking functions."""
    if n <= 2:
        raise DomainError(f"closed form needs n > 2, got n={n}")
    return sum((n - 2) ** (n - k) * math.comb(2 * n + 1 - k, k) for k in range(n + 1))


def count_t1_binet(m: int, n: int) -> int:
    """Two-root closed form for the t=1 count, evaluated in floating point.

    The recursion's characteristic roots are (n +- sqrt(n^2 - 4)) / 2; the
    result is rounded to the nearest integer with a 0.25 guard band.
    """
    if n <= 2:
        raise DomainError(f"closed form needs n > 2, got n={n}")
    if not 0 <= m <= n + 1:
        raise DomainError(f"closed form only valid for 0 <= m <= n + 1, got m={m}")
    s = math.sqrt(n * n - 4)
    try:
        hi = (n * (n + s) - 2) / (n * (n + s) - 4) * ((n + s) / 2) ** m
        lo = (n * (n - s) - 2) / (n * (n - s) - 4) * ((n - s) / 2) ** m
        val = hi + lo
    except OverflowError as exc:
        raise PrecisionError(f"float overflow evaluating closed form at m={m}, n={n}") from exc
    nearest = round(val)
    if abs(val - nearest) > 0.25:
        raise PrecisionError(
            f"closed form at m={m}, n={n} gave {val}, too far from an integer"
        )
    return int(nearest)


def count_t1_n2(m: int) -> int:
    """Count of 1-metered (m,2)-parking functions for m > 2."""
    if m <= 2:
        raise DomainError(f"two-spot formula needs m > 2, got m={m}")
    if m % 2 == 1:
        return 2 ** ((m + 1) // 2)
    return 3 * 2 ** (m // 2 - 1)


def count_t1_row3(n: int) -> int:
    """Count of 1-metered (3,n)-parking functions: n^3 - 2n."""
    if n < 2:
        raise DomainError(f"three-car formula needs n >= 2, got n={n}")
    return n ** 3 - 2 * n


def count_last_parks_at(m: int, n: int, spot: int) -> int:
    """Brute-force count of 1-metered (m,n)-parking functions whose last car
    parks in ``spot``.

    Exhausts all n^m preference lists; intended for desk-scale parameters.
    Each spot >= m receives the same count, and spot n receives exactly the
    (m-1)-car count.
    """
    if not 1 <= m <= n:
        raise DomainError(f"need 1 <= m <= n, got m={m}, n={n}")
    if not 1 <= spot <= n:
        raise DomainError(f"spot {spot} not in 1..{n}")
    inst = ParkingInstance(m, n, 1)
    total = 0
    for prefs in itertools.product(range(1, n + 1), repeat=m):
        out = simulate_metered(inst, prefs)
        if FAIL not in out and out[-1] == spot:
            total += 1
    return total
