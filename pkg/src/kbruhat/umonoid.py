"""
The monoid M on generators u[a,b] (0 < a < b) and the universal k-Bruhat
order it describes.

Words act on S_infinity + {0} from the identity: ``u[a,b]`` sends ``h`` to
``(a b) h`` when that covers ``h`` in the universal order and to :data:`ZERO`
otherwise.  A nonzero word therefore *is* a maximal chain from the identity
to its value, and its value is a complete invariant of its class in M.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import lru_cache, partial
from itertools import permutations
from typing import Iterable, Sequence

from .errors import DomainError, InvariantError, ResourceLimitError
from .parallel import parallel_map
from .korder import (DEFAULT_MAX_CHAINS, MarkedInterval, _covers, _leq,
                     chain_words, count_chains)
from .perm import IDENTITY, Permutation, compose, inverse
from .words import Generator

__all__ = [
    "ZERO", "universal_length", "universal_length_closed", "standard_interval",
    "apply_generator", "evaluate_word", "leq_universal", "leq_universal_conditions",
    "reduced_words", "count_reduced_words", "rewrite_neighbors", "rewrite_closure",
    "zero_relation_sites", "HasseGraph", "hasse_interval", "mobius",
    "rank_polynomial", "format_polynomial", "DEFAULT_MAX_N",
]

DEFAULT_MAX_N = 9


class _Zero:
    __slots__ = ()

    def __repr__(self):
        return "ZERO"

    def __str__(self):
        return "0"

    def __reduce__(self):
        return (_zero, ())


def _zero():
    return ZERO


ZERO = _Zero()


# -- universal length ---------------------------------------------------------

def _closed_form(z: tuple[int, ...]) -> int:
    m = len(z)
    zi = [0] * m
    for i, x in enumerate(z, 1):
        zi[x - 1] = i
    up = [j for j in range(1, m + 1) if zi[j - 1] < j]
    dw = [j for j in range(1, m + 1) if zi[j - 1] > j]
    pre_up = [zi[j - 1] for j in up]
    pre_dw = [zi[j - 1] for j in dw]
    t1 = sum(1 for i in up for j in dw if i > j)
    t2 = sum(1 for i in pre_up for j in pre_dw if i > j)

    def inv(pos: list[int]) -> int:
        pos = sorted(pos)
        return sum(1 for x in range(len(pos)) for y in range(x + 1, len(pos))
                   if z[pos[x] - 1] > z[pos[y] - 1])

    return t1 - t2 - inv(pre_up) - inv(pre_dw)


def _standard(z: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    m = len(z)
    zi = [0] * m
    for i, x in enumerate(z, 1):
        zi[x - 1] = i
    up = [j for j in range(1, m + 1) if zi[j - 1] < j]
    upset = set(up)
    w = tuple(up + [j for j in range(1, m + 1) if j not in upset])
    u = tuple(zi[x - 1] for x in w)
    return u, w, len(up)


def _inv_count(w: Sequence[int]) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


@lru_cache(maxsize=1 << 16)
def _ulength(z: tuple[int, ...]) -> int:
    closed = _closed_form(z)
    u, w, _ = _standard(z)
    direct = _inv_count(w) - _inv_count(u)
    if closed != direct:
        raise InvariantError(f"universal length of {z}: closed form {closed} != {direct}")
    return closed


def universal_length(z: Permutation) -> int:
    """Rank of ``z`` in the universal order; both routes are computed and compared."""
    return _ulength(z.window)


def universal_length_closed(z: Permutation) -> int:
    """The four-term inversion count on its own."""
    return _closed_form(z.window)


def standard_interval(z: Permutation) -> MarkedInterval:
    """
    The interval ``[z^-1 w, w]_k`` where ``w`` lists ``up(z)`` first and the
    rest in increasing order, and ``k = |up(z)|``.
    """
    u, w, k = _standard(z.window)
    return MarkedInterval(Permutation._raw(u), Permutation._raw(w), k)


# -- operator representation --------------------------------------------------

def _swap_values(h: tuple[int, ...], a: int, b: int) -> tuple[int, ...]:
    m = max(len(h), b)
    v = list(h) + list(range(len(h) + 1, m + 1))
    ia, ib = v.index(a), v.index(b)
    v[ia], v[ib] = b, a
    while v and v[-1] == len(v):
        v.pop()
    return tuple(v)


@lru_cache(maxsize=1 << 16)
def _below(e: tuple[int, ...], z: tuple[int, ...]) -> bool:
    u, w, k = _standard(z)
    m = max(len(u), len(e))
    u = u + tuple(range(len(u) + 1, m + 1))
    w = w + tuple(range(len(w) + 1, m + 1))
    ep = e + tuple(range(len(e) + 1, m + 1))
    eu = tuple(ep[x - 1] for x in u)
    return _leq(u, eu, k) and _leq(eu, w, k)


def apply_generator(g: Generator, h):
    """
    ``(a b) h`` if it covers ``h`` in the universal order, else ZERO.

    The rank must go up by one *and* ``h`` must lie below the result; the rank
    test alone accepts e.g. u[1,3] u[1,2], which relation (4) kills.
    """
    if h is ZERO:
        return ZERO
    t = _swap_values(h.window, g.alpha, g.beta)
    if _ulength(t) == _ulength(h.window) + 1 and _below(h.window, t):
        return Permutation._raw(t)
    return ZERO


def evaluate_word(x: Iterable[Generator]):
    h = IDENTITY
    for g in x:
        h = apply_generator(g, h)
        if h is ZERO:
            return ZERO
    return h


def leq_universal(e: Permutation, z: Permutation) -> bool:
    """``e <= z`` in the universal order, decided on the standard interval of ``z``."""
    return _below(e.window, z.window)


def leq_universal_conditions(e: Permutation, z: Permutation, order: bool = True) -> bool:
    """
    Experimental: pointwise conditions on ``z^-1(up z)`` and ``z^-1(dw z)``.

    The bounds ``a <= e(a) <= z(a)`` (resp. ``>=``) are necessary for
    ``e <= z``.  The relative-order clause (``order=True``) as stated compares
    letters by value and rejects ``id <= (3,4,2,1)``, and nothing constrains the
    fixed points of ``z``; this is not a substitute for :func:`leq_universal`.
    """
    m = max(e.size, z.size)
    zi = inverse(z)
    ups = [zi(j) for j in range(1, m + 1) if zi(j) < j]
    dws = [zi(j) for j in range(1, m + 1) if zi(j) > j]
    for a in ups:
        if not a <= e(a) <= z(a):
            return False
    for a in dws:
        if not a >= e(a) >= z(a):
            return False
    if not order:
        return True
    for block in (sorted(ups), sorted(dws)):
        for i in range(len(block)):
            for j in range(i + 1, len(block)):
                a, b = block[i], block[j]
                if e(a) < e(b) and not z(a) < z(b):
                    return False
    return True


# -- reduced words ------------------------------------------------------------

def reduced_words(z: Permutation, max_chains: int = DEFAULT_MAX_CHAINS) -> list[tuple[Generator, ...]]:
    """All u-reduced words with value ``z``, lexicographic in application order."""
    return chain_words(standard_interval(z), max_chains)


def count_reduced_words(z: Permutation) -> int:
    return count_chains(standard_interval(z))


# -- relations ----------------------------------------------------------------

def _commute(p: Generator, q: Generator) -> bool:
    # relation (3): separated or strictly nested supports
    if p.beta < q.alpha or q.beta < p.alpha:
        return True
    return (p.alpha < q.alpha < q.beta < p.beta) or (q.alpha < p.alpha < p.beta < q.beta)


def _triple_moves(t: tuple[Generator, Generator, Generator]) -> list[tuple[Generator, ...]]:
    # relations (1) and (2), both directions, on an application-order triple
    (p1, p2), (q1, q2), (r1, r2) = t
    out = []
    # (1) app (ag)(gd)(bg) <-> (bg)(ab)(bd)
    a, g, d, b = p1, p2, q2, r1
    if q1 == g and r2 == g and a < b < g < d:
        out.append((Generator(b, g), Generator(a, b), Generator(b, d)))
    b, g, a, d = p1, p2, q1, r2
    if q2 == b and r1 == b and a < b < g < d:
        out.append((Generator(a, g), Generator(g, d), Generator(b, g)))
    # (2) app (bg)(gd)(ag) <-> (bd)(ab)(bg)
    b, g, d, a = p1, p2, q2, r1
    if q1 == g and r2 == g and a < b < g < d:
        out.append((Generator(b, d), Generator(a, b), Generator(b, g)))
    b, d, a, g = p1, p2, q1, r2
    if q2 == b and r1 == b and a < b < g < d:
        out.append((Generator(b, g), Generator(g, d), Generator(a, g)))
    return out


def zero_relation_sites(x: Sequence[Generator]) -> list[tuple[int, int]]:
    """
    Places where relation (4) or (5) matches, as ``(relation, index)`` with a
    0-based application-order index of the first factor involved.
    """
    out = []
    for i in range(len(x) - 1):
        p, q = x[i], x[i + 1]
        for s, t in ((p, q), (q, p)):
            if s.alpha <= t.alpha < s.beta <= t.beta:
                out.append((4, i))
                break
    for i in range(len(x) - 2):
        p, q, r = x[i], x[i + 1], x[i + 2]
        if p == r and p != q and (q.beta == p.alpha or q.alpha == p.beta):
            out.append((5, i))
    return out


def _relation_neighbors(x: tuple[Generator, ...]) -> set[tuple[Generator, ...]]:
    out = set()
    for i in range(len(x) - 1):
        if x[i] != x[i + 1] and _commute(x[i], x[i + 1]):
            out.add(x[:i] + (x[i + 1], x[i]) + x[i + 2:])
    for i in range(len(x) - 2):
        for t in _triple_moves(x[i:i + 3]):
            out.add(x[:i] + t + x[i + 3:])
    return out


def rewrite_neighbors(x: Sequence[Generator]) -> set[tuple[Generator, ...]]:
    """Words one application of relations (1)-(3) away from a nonzero word ``x``."""
    x = tuple(x)
    z = evaluate_word(x)
    if z is ZERO:
        raise DomainError("rewriting is only defined for u-reduced words")
    if zero_relation_sites(x):
        raise InvariantError(f"relation (4)/(5) applies inside the reduced word {x}")
    return _relation_neighbors(x)


def rewrite_closure(x: Sequence[Generator], max_words: int = DEFAULT_MAX_CHAINS) -> set[tuple[Generator, ...]]:
    """Breadth-first closure of ``x`` under relations (1)-(3)."""
    x = tuple(x)
    seen = {x}
    todo = deque([x])
    while todo:
        y = todo.popleft()
        for nb in sorted(rewrite_neighbors(y)):
            if nb not in seen:
                seen.add(nb)
                if len(seen) > max_words:
                    raise ResourceLimitError(f"closure exceeds {max_words} words")
                todo.append(nb)
    return seen


# -- interval structure -------------------------------------------------------

@dataclass
class HasseGraph:
    """Cover graph of ``[1, z]`` in the universal order."""

    top: Permutation
    nodes: list[Permutation]
    edges: list[tuple[Permutation, Permutation, Generator]] = field(default_factory=list)

    def up_degrees(self) -> Counter:
        c = Counter({n: 0 for n in self.nodes})
        c.update(a for a, _, _ in self.edges)
        return c

    def degree_profile(self) -> tuple:
        """Sorted (rank, up-degree, down-degree) triples; an isomorphism invariant."""
        up = Counter(a for a, _, _ in self.edges)
        dn = Counter(b for _, b, _ in self.edges)
        return tuple(sorted((universal_length(n), up[n], dn[n]) for n in self.nodes))

    def to_dot(self) -> str:
        lines = ["digraph universal {", "  rankdir=BT;"]
        lines += [f'  "{n}";' for n in self.nodes]
        lines += [f'  "{a}" -> "{b}" [label="{g.alpha}"];' for a, b, g in self.edges]
        lines.append("}")
        return "\n".join(lines)


def hasse_interval(z: Permutation) -> HasseGraph:
    iv = standard_interval(z)
    m = iv.m
    uu, ww = iv.u.padded(m), iv.w.padded(m)
    uinv = inverse(iv.u)
    to_eta = lambda v: compose(Permutation._raw(v), uinv)
    seen = {uu}
    stack = [uu]
    edges = []
    while stack:
        v = stack.pop()
        for g, x in _covers(v, ww, iv.k):
            edges.append((to_eta(v), to_eta(x), g))
            if x not in seen:
                seen.add(x)
                stack.append(x)
    nodes = sorted((to_eta(v) for v in seen), key=lambda p: (universal_length(p), p.padded(m)))
    edges.sort(key=lambda e: (nodes.index(e[0]), nodes.index(e[1])))
    return HasseGraph(z, nodes, edges)


def mobius(z: Permutation) -> int:
    """``mu(1, z)`` on the universal order."""
    g = hasse_interval(z)
    below: dict[Permutation, set[Permutation]] = {n: set() for n in g.nodes}
    ups: dict[Permutation, list[Permutation]] = {n: [] for n in g.nodes}
    for a, b, _ in g.edges:
        ups[a].append(b)
    # nodes are sorted by rank, so predecessors are complete when visited
    for n in g.nodes:
        for b in ups[n]:
            below[b] |= below[n] | {n}
    mu = {}
    for n in g.nodes:
        mu[n] = 1 if n == IDENTITY else -sum(mu[x] for x in below[n])
    return mu[z]


# -- rank generating polynomial -----------------------------------------------

def _rank_slice(n: int, first: int) -> Counter:
    rest = [i for i in range(1, n + 1) if i != first]
    return Counter(_ulength(Permutation._raw((first,) + p).window) for p in permutations(rest))


def rank_polynomial(n: int, max_n: int = DEFAULT_MAX_N, workers: int = 1) -> list[int]:
    """
    Coefficients of ``sum over S_n of t^{universal length}``, constant term first.
    With ``workers > 1`` the sweep is split by the value of ``z(1)`` across
    processes; the result does not depend on the split.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_n:
        raise ResourceLimitError(f"n={n} exceeds the bound {max_n}")
    counts: Counter = Counter()
    for part in parallel_map(partial(_rank_slice, n), range(1, n + 1), workers):
        counts.update(part)
    return [counts.get(d, 0) for d in range(max(counts) + 1)]


def format_polynomial(coeffs: Sequence[int], var: str = "t") -> str:
    terms = []
    for d, c in enumerate(coeffs):
        if c == 0:
            continue
        if d == 0:
            terms.append(str(c))
        else:
            mono = var if d == 1 else f"{var}^{d}"
            terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms) if terms else "0"
