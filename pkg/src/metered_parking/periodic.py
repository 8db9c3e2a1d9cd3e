"""The t = n-1 scheme: periodic outcomes and the permutation-product count.

With a meter of length n-1 on a street of n spots, the first n cars park
classically; from then on exactly one spot is free at each arrival, namely
the spot the oldest car just vacated.  The outcome therefore repeats the
first n spots cyclically, and membership for the later cars is a simple
upper bound against that periodic pattern.
"""

from __future__ import annotations

import itertools
import math
from typing import Sequence

from .errors import BudgetError, InputError
from .parksim import ParkingInstance, is_pf_by_rearrangement, simulate_classical

# beyond 10! permutations the summation is no longer a desk-scale computation
_MAX_PERMUTATION_N = 10


def _check_perm(pi: Sequence[int]) -> None:
    if sorted(pi) != list(range(1, len(pi) + 1)):
        raise InputError(f"{tuple(pi)!r} is not a permutation of 1..{len(pi)}")


def is_n1_metered(n: int, prefs: Sequence[int]) -> bool:
    """Membership test for the (n-1)-metered scheme.

    For m < n the meter never expires before the last car parks, so this
    defers to classical membership.  Otherwise the first n entries must form
    a classical parking function with outcome pi, and each later entry
    ``a_{n+i}`` must be at most the cyclically repeated ``pi`` value that is
    free on its arrival.
    """
    m = len(prefs)
    if m < n:
        return is_pf_by_rearrangement(m, n, prefs)
    head = tuple(prefs[:n])
    if not is_pf_by_rearrangement(n, n, head):
        return False
    pi = simulate_classical(ParkingInstance(n, n), head)
    for i in range(1, m - n + 1):
        if prefs[n + i - 1] > pi[(i - 1) % n]:
            return False
    return True


def l_stat(pi: Sequence[int], i: int) -> int:
    """Length of the longest window ending at position i (1-based) on which
    ``pi_i`` is a running maximum."""
    _check_perm(pi)
    if not 1 <= i <= len(pi):
        raise InputError(f"position {i} not in 1..{len(pi)}")
    top = pi[i - 1]
    j = 1
    while j < i and pi[i - 1 - j] <= top:
        j += 1
    return j


def _l_product(pi: Sequence[int]) -> int:
    total = 1
    for i in range(1, len(pi) + 1):
        top = pi[i - 1]
        j = 1
        while j < i and pi[i - 1 - j] <= top:
            j += 1
        total *= j
    return total


def outcome_pf_count(pi: Sequence[int]) -> int:
    """Number of classical parking functions of length n whose outcome is pi."""
    _check_perm(pi)
    return _l_product(pi)


def count_n1(n: int, k: int) -> int:
    """Count of (n-1)-metered (n+k, n)-parking functions.

    Sums, over all permutations pi of 1..n, the number of classical parking
    functions with outcome pi times the product of the cyclic bounds for the
    k extra cars.  k = 0 short-circuits to the classical count (n+1)^(n-1).
    """
    if n < 1 or k < 0:
        raise InputError(f"need n >= 1 and k >= 0, got n={n}, k={k}")
    if n > _MAX_PERMUTATION_N:
        raise BudgetError(
            f"summing over {n}! permutations exceeds the supported range "
            f"(n <= {_MAX_PERMUTATION_N})"
        )
    if k == 0:
        return (n + 1) ** (n - 1)
    q, r = divmod(k, n)
    full_cycle = math.factorial(n) ** q
    total = 0
    for pi in itertools.permutations(range(1, n + 1)):
        weight = full_cycle
        for j in range(r):
            weight *= pi[j]
        total += _l_product(pi) * weight
    return total
