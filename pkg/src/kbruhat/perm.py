"""
Finitely supported permutations of {1, 2, ...} in one-line (window) notation,
plus partitions and the handful of constructions built on top of them.

A permutation is stored by its window ``(w(1), ..., w(m))`` with trailing
fixed points trimmed, so every element of S_infinity has exactly one
representation and equality is tuple equality.

>>> a = Permutation((2, 5, 4, 1, 6, 3))
>>> a * Permutation((3, 1, 2, 5, 6, 4))
Permutation((4, 2, 5, 6, 3, 1))
>>> length(a), sign(a)
(7, -1)
"""

from __future__ import annotations

from itertools import permutations as _iter_perms
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Permutation", "IDENTITY", "compose", "inverse", "length", "sign",
    "up_dw_fix", "grassmannian", "omega_conjugate", "phi_star", "transposition",
    "all_permutations", "partition", "conjugate", "partitions",
    "parse_permutation", "parse_partition", "format_permutation",
]


def _trim(window: Sequence[int]) -> tuple[int, ...]:
    m = len(window)
    while m and window[m - 1] == m:
        m -= 1
    return tuple(window[:m])


class Permutation:
    """An element of S_infinity, immutable and hashable."""

    __slots__ = ("window",)

    def __init__(self, window: Iterable[int] = ()):
        w = tuple(int(x) for x in window)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"{w} is not a rearrangement of 1..{len(w)}")
        object.__setattr__(self, "window", _trim(w))

    @classmethod
    def _raw(cls, window: Sequence[int]) -> Permutation:
        # trusted constructor: window is already a valid bijection
        p = object.__new__(cls)
        object.__setattr__(p, "window", _trim(window))
        return p

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def size(self) -> int:
        """Smallest m with the permutation in S_m."""
        return len(self.window)

    def __call__(self, i: int) -> int:
        if 1 <= i <= len(self.window):
            return self.window[i - 1]
        return i

    def padded(self, m: int) -> tuple[int, ...]:
        """Window extended (or kept) to length ``max(m, size)``."""
        w = self.window
        if m <= len(w):
            return w
        return w + tuple(range(len(w) + 1, m + 1))

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.window == other.window

    def __lt__(self, other: Permutation):
        m = max(self.size, other.size)
        return self.padded(m) < other.padded(m)

    def __hash__(self):
        return hash(self.window)

    def __repr__(self):
        return f"Permutation({self.window!r})"

    def __str__(self):
        return format_permutation(self)

    def __reduce__(self):
        return (Permutation, (self.window,))

    def is_identity(self) -> bool:
        return not self.window


IDENTITY = Permutation()


def transposition(a: int, b: int) -> Permutation:
    """The transposition exchanging ``a`` and ``b``."""
    m = max(a, b)
    w = list(range(1, m + 1))
    w[a - 1], w[b - 1] = w[b - 1], w[a - 1]
    return Permutation._raw(w)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """``(a*b)(i) = a(b(i))``."""
    m = max(a.size, b.size)
    aw = a.padded(m)
    return Permutation._raw([aw[x - 1] for x in b.padded(m)])


def inverse(a: Permutation) -> Permutation:
    w = a.window
    inv = [0] * len(w)
    for i, x in enumerate(w, 1):
        inv[x - 1] = i
    return Permutation._raw(inv)


def _inversions(w: Sequence[int]) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def length(a: Permutation) -> int:
    """Number of inversions, i.e. the Coxeter length."""
    return _inversions(a.window)


def sign(a: Permutation) -> int:
    return -1 if length(a) % 2 else 1


def up_dw_fix(z: Permutation) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """
    Split ``{1..size}`` into ``up = {j : z^-1(j) < j}``, ``dw = {j : z^-1(j) > j}``
    and the fixed points.  Every integer above ``size`` is also fixed.
    """
    zi = inverse(z)
    up, dw, fix = set(), set(), set()
    for j in range(1, z.size + 1):
        s = zi(j)
        (up if s < j else dw if s > j else fix).add(j)
    return frozenset(up), frozenset(dw), frozenset(fix)


def grassmannian(lam: Sequence[int], k: int) -> Permutation:
    """
    The Grassmannian permutation v(lam, k), whose only descent is at k.

    Positions ``i <= k`` get ``lam[k-i] + i`` (parts past the end of ``lam``
    count as 0), the remaining values follow in increasing order.
    """
    lam = partition(lam)
    if len(lam) > k:
        raise ValueError(f"partition {lam} has more than k={k} parts")
    parts = list(lam) + [0] * (k - len(lam))
    head = [parts[k - i] + i for i in range(1, k + 1)]
    m = head[-1] if head else 0
    used = set(head)
    tail = [v for v in range(1, m + 1) if v not in used]
    return Permutation._raw(head + tail)


def omega_conjugate(a: Permutation, m: int) -> Permutation:
    """``w0 a w0`` with ``w0 = (m, m-1, ..., 1)``; an involution on S_m."""
    if a.size > m:
        raise ValueError(f"{a} is not in S_{m}")
    w = a.padded(m)
    return Permutation._raw([m + 1 - w[m - i] for i in range(1, m + 1)])


def phi_star(a: Permutation, pos: int) -> Permutation:
    """
    Insert a new fixed point at ``pos``: the result ``z'`` fixes ``pos`` and
    satisfies ``z'(phi(i)) = phi(a(i))`` where ``phi`` skips ``pos``.
    """
    if pos < 1:
        raise ValueError("pos must be positive")

    def phi(i: int) -> int:
        return i if i < pos else i + 1

    m = max(a.size, pos - 1) + 1
    out = list(range(1, m + 1))
    for i in range(1, m):
        out[phi(i) - 1] = phi(a(i))
    return Permutation._raw(out)


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic window order."""
    for w in _iter_perms(range(1, n + 1)):
        yield Permutation._raw(w)


# -- partitions ---------------------------------------------------------------

def partition(parts: Iterable[int]) -> tuple[int, ...]:
    """Validate a partition and drop trailing zeros."""
    p = tuple(int(x) for x in parts)
    if any(x < 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"{p} is not a partition")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def conjugate(lam: Sequence[int]) -> tuple[int, ...]:
    lam = partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` in reverse lexicographic order, ``(n)`` first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


# -- text formats -------------------------------------------------------------

def _ints(text: str) -> list[int]:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    if not text:
        return []
    return [int(x) for x in text.split(",")]


def parse_permutation(text: str) -> Permutation:
    """Parse ``2,5,4,1,6,3``; the identity may be written ``1`` or left empty."""
    return Permutation(_ints(text))


def parse_partition(text: str) -> tuple[int, ...]:
    return partition(_ints(text))


def format_permutation(a: Permutation, m: int = 0) -> str:
    w = a.padded(m) if m else a.window
    return ",".join(map(str, w)) if w else "1"
