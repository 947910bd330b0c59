"""
The k-Bruhat order <=_k on S_infinity: comparison, covers, the two canonical
maximal chains (CM and DCM), chain inversions and exhaustive chain search.

Covers are ``u < u(a b)`` with ``a <= k < b`` and ``l(u(a b)) = l(u) + 1``.
A cover is labelled by the generator ``(u(a), u(b))``, the pair of *values*
exchanged, so that ``u(a b) = (alpha beta) u``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import DomainError, InvariantError, ResourceLimitError
from .perm import Permutation, omega_conjugate
from .words import Generator

__all__ = [
    "MarkedInterval", "Chain", "interval", "leq_k", "covers_k", "cm_chain",
    "dcm_chain", "dcm_chain_via_omega", "chain_inversions", "all_chains",
    "chain_words", "count_chains", "chain_to_word", "word_to_chain",
    "chain_to_json", "chain_from_json", "interval_dot", "DEFAULT_MAX_CHAINS",
]

DEFAULT_MAX_CHAINS = 10**6


# -- tuple-level kernels ------------------------------------------------------

def _leq(u: Sequence[int], w: Sequence[int], k: int) -> bool:
    m = len(u)
    for i in range(m):
        if i < k:
            if u[i] > w[i]:
                return False
        elif u[i] < w[i]:
            return False
    lo, hi = min(k, m), m
    for block in (range(0, lo), range(lo, hi)):
        idx = list(block)
        for x in range(len(idx)):
            for y in range(x + 1, len(idx)):
                i, j = idx[x], idx[y]
                if u[i] < u[j] and not w[i] < w[j]:
                    return False
    return True


def _is_cover(u: Sequence[int], a: int, b: int) -> bool:
    # 0-based positions a < b; length goes up by exactly one
    lo, hi = u[a], u[b]
    if lo > hi:
        return False
    return not any(lo < u[c] < hi for c in range(a + 1, b))


def _swap(u: Sequence[int], a: int, b: int) -> tuple[int, ...]:
    v = list(u)
    v[a], v[b] = v[b], v[a]
    return tuple(v)


def _covers(u: tuple[int, ...], w: tuple[int, ...], k: int) -> list[tuple[Generator, tuple[int, ...]]]:
    m = len(u)
    out = []
    for a in range(min(k, m)):
        for b in range(k, m):
            if _is_cover(u, a, b):
                v = _swap(u, a, b)
                if _leq(v, w, k):
                    out.append((Generator(u[a], u[b]), v))
    out.sort()
    return out


def _common(*perms: Permutation) -> tuple[tuple[int, ...], ...]:
    m = max(p.size for p in perms)
    return tuple(p.padded(m) for p in perms)


# -- public API ---------------------------------------------------------------

def leq_k(u: Permutation, w: Permutation, k: int) -> bool:
    """Whether ``u <=_k w``, tested through the three window conditions."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    uu, ww = _common(u, w)
    return _leq(uu, ww, k)


@dataclass(frozen=True)
class MarkedInterval:
    u: Permutation
    w: Permutation
    k: int

    @property
    def m(self) -> int:
        return max(self.u.size, self.w.size)

    @property
    def rank(self) -> int:
        from .perm import length
        return length(self.w) - length(self.u)


def interval(u: Permutation, w: Permutation, k: int) -> MarkedInterval:
    """Build ``[u, w]_k``, raising :class:`DomainError` when it is empty."""
    if not leq_k(u, w, k):
        raise DomainError(f"{u} is not <=_{k} {w}")
    return MarkedInterval(u, w, k)


@dataclass(frozen=True)
class Chain:
    """A maximal chain ``u = perms[0] < perms[1] < ... < perms[n] = w`` in ``<=_k``."""

    perms: tuple[Permutation, ...]
    k: int

    @property
    def u(self) -> Permutation:
        return self.perms[0]

    @property
    def w(self) -> Permutation:
        return self.perms[-1]

    def __len__(self):
        return len(self.perms) - 1

    def positions(self) -> list[tuple[int, int]]:
        """The 1-based position pairs ``(a_i, b_i)`` of each step."""
        out = []
        m = max(p.size for p in self.perms)
        for x, y in zip(self.perms, self.perms[1:]):
            xs, ys = x.padded(m), y.padded(m)
            diff = [i + 1 for i in range(m) if xs[i] != ys[i]]
            if len(diff) != 2:
                raise InvariantError(f"{x} -> {y} is not a transposition step")
            out.append((diff[0], diff[1]))
        return out

    @property
    def word(self) -> tuple[Generator, ...]:
        return chain_to_word(self)


def covers_k(u: Permutation, k: int, ceiling: Permutation) -> list[tuple[Permutation, Generator]]:
    """Covers of ``u`` in ``<=_k`` that stay below ``ceiling``, sorted by generator."""
    uu, ww = _common(u, ceiling)
    return [(Permutation._raw(v), g) for g, v in _covers(uu, ww, k)]


def _cm_step(u: tuple[int, ...], w: tuple[int, ...], k: int) -> tuple[int, int]:
    m = len(u)
    left = [j for j in range(min(k, m)) if u[j] < w[j]]
    a = max(left, key=lambda j: w[j])
    right = [j for j in range(k, m) if u[j] > u[a] >= w[j]]
    b = min(right, key=lambda j: w[j])
    return a, b


def _dcm_step(u: tuple[int, ...], w: tuple[int, ...], k: int) -> tuple[int, int]:
    m = len(u)
    right = [j for j in range(k, m) if u[j] > w[j]]
    b = min(right, key=lambda j: w[j])
    left = [j for j in range(min(k, m)) if u[j] < u[b] <= w[j]]
    a = max(left, key=lambda j: w[j])
    return a, b


def _canonical(iv: MarkedInterval, step) -> Chain:
    uu, ww = _common(iv.u, iv.w)
    k = iv.k
    if not _leq(uu, ww, k):
        raise DomainError(f"{iv.u} is not <=_{k} {iv.w}")
    perms = [iv.u]
    cur = uu
    while cur != ww:
        try:
            a, b = step(cur, ww, k)
        except ValueError:
            raise InvariantError(f"no canonical step from {cur} towards {ww} (k={k})") from None
        nxt = _swap(cur, a, b)
        if not (a < k <= b and _is_cover(cur, a, b) and _leq(nxt, ww, k)):
            raise InvariantError(f"canonical step ({a + 1},{b + 1}) from {cur} is not a cover below {ww}")
        cur = nxt
        perms.append(Permutation._raw(cur))
    return Chain(tuple(perms), k)


def cm_chain(iv: MarkedInterval) -> Chain:
    """The CM-chain: at each step take the largest ``w(a)`` and then the smallest ``w(b)``."""
    return _canonical(iv, _cm_step)


def dcm_chain(iv: MarkedInterval) -> Chain:
    """The DCM-chain, built directly with the mirrored selection rules."""
    return _canonical(iv, _dcm_step)


def dcm_chain_via_omega(iv: MarkedInterval, m: int | None = None) -> Chain:
    """The DCM-chain as the w0-conjugate of a CM-chain in the ``(m-k)``-order."""
    if m is None:
        m = max(iv.m, iv.k)
    mirrored = MarkedInterval(omega_conjugate(iv.u, m), omega_conjugate(iv.w, m), m - iv.k)
    c = cm_chain(mirrored)
    return Chain(tuple(omega_conjugate(p, m) for p in c.perms), iv.k)


def chain_inversions(c: Chain, w: Permutation | None = None) -> set[tuple[int, int]]:
    """1-based step pairs ``(i, j)`` ordered against the CM preference."""
    if w is None:
        w = c.w
    keys = [(w(a), w(b)) for a, b in c.positions()]
    out = set()
    for i in range(len(keys)):
        for j in range(i + 1, len(keys)):
            (ai, bi), (aj, bj) = keys[i], keys[j]
            if ai < aj or (ai == aj and bi > bj):
                out.add((i + 1, j + 1))
    return out


@lru_cache(maxsize=None)
def _words_from(u: tuple[int, ...], w: tuple[int, ...], k: int) -> tuple[tuple[Generator, ...], ...]:
    if u == w:
        return ((),)
    out = []
    for g, v in _covers(u, w, k):
        out.extend((g,) + rest for rest in _words_from(v, w, k))
    return tuple(out)


@lru_cache(maxsize=None)
def _count_from(u: tuple[int, ...], w: tuple[int, ...], k: int) -> int:
    if u == w:
        return 1
    return sum(_count_from(v, w, k) for _, v in _covers(u, w, k))


def count_chains(iv: MarkedInterval) -> int:
    """gamma(u, w, k): the number of maximal chains, without listing them."""
    uu, ww = _common(iv.u, iv.w)
    if not _leq(uu, ww, iv.k):
        return 0
    return _count_from(uu, ww, iv.k)


def chain_words(iv: MarkedInterval, max_chains: int = DEFAULT_MAX_CHAINS) -> list[tuple[Generator, ...]]:
    """Generator sequences of all maximal chains, in lexicographic order."""
    uu, ww = _common(iv.u, iv.w)
    if not _leq(uu, ww, iv.k):
        raise DomainError(f"{iv.u} is not <=_{iv.k} {iv.w}")
    n = _count_from(uu, ww, iv.k)
    if n > max_chains:
        raise ResourceLimitError(f"interval has {n} maximal chains, cap is {max_chains}")
    return list(_words_from(uu, ww, iv.k))


def all_chains(iv: MarkedInterval, max_chains: int = DEFAULT_MAX_CHAINS) -> list[Chain]:
    """Every maximal chain of ``[u, w]_k``, ordered lexicographically by generator sequence."""
    return [word_to_chain(x, iv.u, iv.k) for x in chain_words(iv, max_chains)]


def chain_to_word(c: Chain) -> tuple[Generator, ...]:
    out = []
    for p, (a, b) in zip(c.perms, c.positions()):
        out.append(Generator(p(a), p(b)))
    return tuple(out)


def word_to_chain(x: Sequence[Generator], u: Permutation, k: int) -> Chain:
    """Replay ``x`` from ``u``; every step must be a ``<=_k`` cover."""
    m = max([u.size] + [g.beta for g in x])
    cur = u.padded(m)
    perms = [u]
    for g in x:
        a, b = cur.index(g.alpha), cur.index(g.beta)
        if not (a < k <= b and _is_cover(cur, a, b)):
            raise DomainError(f"{g} is not a {k}-Bruhat cover of {Permutation._raw(cur)}")
        cur = _swap(cur, a, b)
        perms.append(Permutation._raw(cur))
    return Chain(tuple(perms), k)


# -- serialisation ------------------------------------------------------------

def chain_to_json(c: Chain) -> dict:
    steps = [{"perm": list(p.window), "gen": [g.alpha, g.beta]}
             for p, g in zip(c.perms[1:], chain_to_word(c))]
    return {"u": list(c.u.window), "w": list(c.w.window), "k": c.k, "steps": steps}


def chain_from_json(data) -> Chain:
    if isinstance(data, str):
        data = json.loads(data)
    u = Permutation(data["u"])
    c = word_to_chain([Generator(*s["gen"]) for s in data["steps"]], u, int(data["k"]))
    for p, s in zip(c.perms[1:], data["steps"]):
        if p != Permutation(s["perm"]):
            raise ValueError(f"step permutation {s['perm']} disagrees with generator {s['gen']}")
    if c.w != Permutation(data["w"]):
        raise ValueError("chain does not end at w")
    return c


def _hasse_edges(iv: MarkedInterval) -> Iterator[tuple[tuple[int, ...], tuple[int, ...], Generator]]:
    uu, ww = _common(iv.u, iv.w)
    seen = {uu}
    stack = [uu]
    while stack:
        v = stack.pop()
        for g, x in _covers(v, ww, iv.k):
            yield v, x, g
            if x not in seen:
                seen.add(x)
                stack.append(x)


def interval_dot(iv: MarkedInterval) -> str:
    """Graphviz source for the Hasse diagram, edges labelled by ``alpha``."""
    edges = sorted(set(_hasse_edges(iv)))
    nodes = sorted({e[0] for e in edges} | {e[1] for e in edges} | {iv.u.padded(iv.m)})
    name = lambda t: "".join(map(str, t)) if max(t, default=0) < 10 else ",".join(map(str, t))
    lines = ["digraph interval {", "  rankdir=BT;"]
    lines += [f'  "{name(n)}";' for n in nodes]
    lines += [f'  "{name(a)}" -> "{name(b)}" [label="{g.alpha}"];' for a, b, g in edges]
    lines.append("}")
    return "\n".join(lines)
