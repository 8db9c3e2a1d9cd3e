"""Parking-function shuffles and the t = m-2 characterization and counts.

For a suffix (pi_2, ..., pi_m) over [n], the set of first entries j whose
prepending yields a classical (m,n)-parking function is always an initial
segment [k].  When k >= 1 the suffix splits by the value threshold k into a
small classical parking function (entries below k) interleaved with a
shifted one (entries above k); the class of all such interleavings has a
closed product count.  Under the (m-2)-metered scheme exactly one car (the
first) leaves during parking, and membership reduces to two threshold tests
against k and against the analogous second-level value j.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DomainError, InputError
from .parksim import is_pf_by_rearrangement


def _upow(base: int, exp: int) -> int:
    # exponent < 0 only ever occurs with base 1 at boundary terms (1^-1 := 1)
    if exp < 0:
        if base != 1:
            raise DomainError(f"negative exponent {exp} with non-unit base {base}")
        return 1
    return base ** exp


@dataclass(frozen=True)
class ShuffleClassification:
    """Threshold value k with the below-k / at-or-above-k split of a suffix."""

    k: int
    alpha_part: tuple
    beta_part: tuple


def a_set_max(n: int, suffix: Sequence[int]) -> int:
    """Largest first entry whose prepending parks classically, or 0 if none.

    Prepend-and-test: the set of workable first entries is downward closed,
    so scanning from n down and returning the first success is exact.
    """
    m = len(suffix) + 1
    if m > n:
        raise DomainError(
            f"prepending needs m <= n for classical membership, got m={m}, n={n}"
        )
    for j in range(n, 0, -1):
        if is_pf_by_rearrangement(m, n, (j, *suffix)):
            return j
    return 0


def classify_shuffle(m: int, n: int, suffix: Sequence[int]) -> Optional[ShuffleClassification]:
    """Split ``suffix`` as a shuffle witness for its threshold k.

    Returns None when no first entry can be prepended (k = 0).  Otherwise
    alpha_part collects the entries below k and beta_part those at or above
    k; alpha_part is a classical (m-n+k-1, k-1)-parking function and
    beta_part shifted down by k is a classical (n-k, n-k)-parking function.
    """
    if m > n:
        raise DomainError(f"shuffle classification needs m <= n, got m={m}, n={n}")
    if len(suffix) != m - 1:
        raise InputError(f"suffix has length {len(suffix)}, expected {m - 1}")
    k = a_set_max(n, suffix)
    if k == 0:
        return None
    alpha = tuple(a for a in suffix if a < k)
    beta = tuple(a for a in suffix if a >= k)
    return ShuffleClassification(k=k, alpha_part=alpha, beta_part=beta)


def in_shuffle_class(m: int, n: int, suffix: Sequence[int], k: int) -> bool:
    """Direct membership test for the interleaving class at threshold k.

    A suffix belongs to the class iff no entry equals k, exactly n-k entries
    exceed k and form (after shifting down by k) a classical (n-k, n-k)-
    parking function, and the entries below k form a classical
    (m-n+k-1, k-1)-parking function.
    """
    if m > n:
        raise DomainError(f"shuffle classes need m <= n, got m={m}, n={n}")
    if not 1 <= k <= n:
        raise DomainError(f"threshold {k} not in 1..{n}")
    if any(a == k for a in suffix):
        return False
    high = tuple(a - k for a in suffix if a > k)
    low = tuple(a for a in suffix if a < k)
    if len(high) != n - k:
        return False
    return is_pf_by_rearrangement(len(low), k - 1, low) and is_pf_by_rearrangement(
        len(high), n - k, high
    )


def shuffle_count(m: int, n: int, k: int) -> int:
    """Size of the interleaving class at threshold k.

    Product of the two classical parking-function counts and a binomial for
    the interleavings; collapses to m^(m-2) at the lowest feasible threshold
    and to 0 below it.
    """
    if m > n:
        raise DomainError(f"shuffle counts need m <= n, got m={m}, n={n}")
    if not 1 <= k <= n:
        raise DomainError(f"threshold {k} not in 1..{n}")
    if k < n - m + 1:
        return 0
    if k == n - m + 1:
        return _upow(m, m - 2)
    return (
        math.comb(m - 1, n - k)
        * (n - m + 1)
        * _upow(k, m - n + k - 2)
        * _upow(n - k + 1, n - k - 1)
    )


def count_pf_first_entry(m: int, n: int, j: int) -> int:
    """Number of classical (m,n)-parking functions whose first entry is j.

    A first entry of j works exactly when the suffix's threshold is at least
    j, so the count is the sum of class sizes over thresholds j..n.  The
    class-size coefficient here is (n - m + 1); exhaustive first-entry
    histograms confirm it (an (n - m - 1) variant yields wrong counts).
    """
    if m > n:
        raise DomainError(f"first-entry counts need m <= n, got m={m}, n={n}")
    if not 1 <= j <= n:
        raise DomainError(f"first entry {j} not in 1..{n}")
    return sum(shuffle_count(m, n, i) for i in range(j, n + 1))


def is_m2_metered(n: int, prefs: Sequence[int]) -> bool:
    """Membership test for the (m-2)-metered scheme via threshold values.

    With k the largest value prependable to the middle entries (cars 2..m-1)
    and j the analogous second-level threshold for the below-k subsequence
    (j = 0 when m = n + 1, where the street is full), the list parks iff
    either a_1 <= j and a_m <= k, or j < a_1 <= k and a_m <= a_1.
    """
    m = len(prefs)
    if not 2 < m <= n + 1:
        raise DomainError(f"need 2 < m <= n + 1, got m={m}, n={n}")
    middle = tuple(prefs[1 : m - 1])
    k = a_set_max(n, middle)
    if k == 0:
        return False
    if m == n + 1:
        j = 0
    else:
        below = tuple(a for a in middle if a < k)
        j = a_set_max(k - 1, below)
    a1, am = prefs[0], prefs[-1]
    return (a1 <= j and am <= k) or (j < a1 <= k and am <= a1)


def count_m2(m: int, n: int) -> int:
    """Exact count of (m-2)-metered (m,n)-parking functions, 2 < m <= n + 1.

    Closed triple sum over the threshold pair (k, j) in integer arithmetic.
    """
    if not 2 < m <= n + 1:
        raise DomainError(f"need 2 < m <= n + 1, got m={m}, n={n}")
    total = (n - m + 2) ** 2 * _upow(m - 1, m - 3)
    for k in range(n - m + 3, n + 1):
        bracket = math.comb(k + 1, 2) * (n - m + 2) * _upow(k, m - n + k - 3)
        bracket += (k * (n - m + 1) - math.comb(n - m + 2, 2)) * _upow(
            k - n + m - 1, k - n + m - 3
        )
        for j in range(n - m + 2, k):
            bracket += (
                (j * k - math.comb(j + 1, 2))
                * math.comb(m - 2 - n + k, k - 1 - j)
                * (n - m + 1)
                * _upow(j, j + m - 2 - n)
                * _upow(k - j, k - j - 2)
            )
        total += math.comb(m - 2, n - k) * _upow(n - k + 1, n - k - 1) * bracket
    return total


def count_m2_street_minus_one(m: int) -> int:
    """Count of (m-2)-metered (m, m-1)-parking functions.

    Equals the sum of first entries over all classical parking functions of
    length m - 1.
    """
    if m < 2:
        raise DomainError(f"need m >= 2, got m={m}")
    total = 0
    for i in range(1, m):
        for s in range(0, m - i):
            total += (
                math.comb(m - 2, s)
                * i
                * _upow(s + 1, s - 1)
                * _upow(m - s - 1, m - s - 3)
            )
    return total
