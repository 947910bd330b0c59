"""Young-tableau counting: f^lambda and Littlewood-Richardson coefficients."""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Sequence

from .perm import conjugate, partition

__all__ = ["f_lambda", "count_syt", "lr_coefficient"]


def f_lambda(lam: Sequence[int]) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook-length formula)."""
    lam = partition(lam)
    cols = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (cols[j] - i - 1) + 1
    return factorial(sum(lam)) // hooks


@lru_cache(maxsize=None)
def count_syt(lam: tuple[int, ...]) -> int:
    """SYT count by removing the largest entry from each corner in turn."""
    lam = partition(lam)
    if not lam:
        return 1
    total = 0
    for i, row in enumerate(lam):
        if i + 1 == len(lam) or lam[i + 1] < row:
            total += count_syt(lam[:i] + (row - 1,) + lam[i + 1:])
    return total


def lr_coefficient(nu: Sequence[int], mu: Sequence[int], lam: Sequence[int]) -> int:
    """
    c^lam_{nu,mu} by brute force: semistandard fillings of ``lam/nu`` with
    content ``mu`` whose reverse reading word is a lattice word.
    """
    nu, mu, lam = partition(nu), partition(mu), partition(lam)
    if sum(nu) + sum(mu) != sum(lam) or len(nu) > len(lam):
        return 0
    nu_p = list(nu) + [0] * (len(lam) - len(nu))
    if any(n > l for n, l in zip(nu_p, lam)):
        return 0
    # cells in reverse reading order: rows top to bottom, each right to left
    cells = [(i, j) for i in range(len(lam)) for j in range(lam[i] - 1, nu_p[i] - 1, -1)]
    fill: dict[tuple[int, int], int] = {}
    used = [0] * (len(mu) + 1)

    def rec(pos: int) -> int:
        if pos == len(cells):
            return 1
        i, j = cells[pos]
        total = 0
        for v in range(1, len(mu) + 1):
            if used[v] == mu[v - 1]:
                continue
            # lattice: after reading v, count(v) <= count(v-1)
            if v > 1 and used[v] + 1 > used[v - 1]:
                continue
            right = fill.get((i, j + 1))
            if right is not None and v > right:
                continue
            above = fill.get((i - 1, j))
            if above is not None and v <= above:
                continue
            fill[i, j] = v
            used[v] += 1
            total += rec(pos + 1)
            used[v] -= 1
            del fill[i, j]
        return total

    return rec(0)
