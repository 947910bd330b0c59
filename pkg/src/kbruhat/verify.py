"""
Reproduction checks for the published numbers and the exhaustive identities.

Each ``criterion_*`` function returns ``(ok, detail)``.  :func:`run_all`
evaluates them in order and is what ``kbruhat verify-paper`` prints.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import product
from typing import Callable

from .constants import (all_constants, c_constant, c_constant_dual, check_cyclic,
                        check_disjoint, cyclic_shift, d_lambda, e_prime_set, e_set,
                        f_lambda, h_set, psi_h, psi_v, sigma_terms, u_disjoint)
from .errors import NonTerminationError
from .insertion import insert
from .korder import (MarkedInterval, _leq, all_chains, chain_inversions, cm_chain,
                     dcm_chain, dcm_chain_via_omega, interval)
from .perm import (Permutation, all_permutations, conjugate, inverse, length,
                   omega_conjugate, partitions, phi_star)
from .umonoid import (ZERO, _closed_form, _relation_neighbors, count_reduced_words,
                      evaluate_word, rank_polynomial, reduced_words, rewrite_closure,
                      standard_interval, universal_length, zero_relation_sites)
from .words import Generator, parse_word

__all__ = ["CriterionResult", "CRITERIA", "run_all", "RANK_POLYNOMIALS"]

P = Permutation

RANK_POLYNOMIALS = {
    1: [1],
    2: [1, 1],
    3: [1, 3, 2],
    4: [1, 6, 10, 6, 1],
    5: [1, 10, 30, 40, 27, 10, 2],
    6: [1, 15, 70, 155, 195, 156, 86, 33, 8, 1],
    7: [1, 21, 140, 455, 875, 1120, 1038, 735, 406, 175, 58, 14, 2],
    8: [1, 28, 252, 1120, 2996, 5432, 7252, 7562, 6398, 4492, 2652, 1324, 556,
        192, 52, 10, 1],
}


def criterion_1() -> tuple[bool, str]:
    bad = [n for n, want in RANK_POLYNOMIALS.items() if rank_polynomial(n) != want]
    return not bad, "P_1..P_8 match" if not bad else f"mismatch at n={bad}"


def criterion_2() -> tuple[bool, str]:
    iv = interval(P((2, 1, 4, 3, 5)), P((4, 5, 1, 2, 3)), 2)
    chains = all_chains(iv)
    cm, dcm = cm_chain(iv).word, dcm_chain(iv).word
    words = {c.word for c in chains}
    closure = rewrite_closure(cm)
    listed = {parse_word(s) for s in (
        "u[3,4] u[2,3] u[4,5] u[1,4]", "u[3,4] u[4,5] u[2,3] u[1,4]",
        "u[3,4] u[4,5] u[1,4] u[2,3]", "u[3,5] u[1,3] u[3,4] u[2,3]",
        "u[3,5] u[2,3] u[1,2] u[2,4]")}
    ok = (len(chains) == 5
          and cm == parse_word("u[3,4] u[2,3] u[4,5] u[1,4]")
          and dcm == parse_word("u[3,4] u[4,5] u[2,3] u[1,4]")
          and closure == words == listed
          and evaluate_word(cm) == P((5, 4, 2, 1, 3)))
    return ok, f"{len(chains)} chains, closure size {len(closure)}"


def criterion_3() -> tuple[bool, str]:
    iv = interval(P((2, 1, 6, 4, 3, 5)), P((4, 5, 6, 1, 2, 3)), 3)
    cm_col = [(2, 1, 6, 4, 3, 5), (2, 4, 6, 1, 3, 5), (2, 5, 6, 1, 3, 4),
              (3, 5, 6, 1, 2, 4), (4, 5, 6, 1, 2, 3)]
    mid_col = [(2, 1, 6, 4, 3, 5), (3, 1, 6, 4, 2, 5), (4, 1, 6, 3, 2, 5),
               (4, 3, 6, 1, 2, 5), (4, 5, 6, 1, 2, 3)]
    dcm_col = [(2, 1, 6, 4, 3, 5), (2, 4, 6, 1, 3, 5), (3, 4, 6, 1, 2, 5),
               (3, 5, 6, 1, 2, 4), (4, 5, 6, 1, 2, 3)]
    cm, dcm = cm_chain(iv), dcm_chain(iv)
    mid = next(c for c in all_chains(iv) if [p.padded(6) for p in c.perms] == mid_col)
    inv = chain_inversions(mid)
    ok = ([p.padded(6) for p in cm.perms] == cm_col
          and [p.padded(6) for p in dcm.perms] == dcm_col
          and inv == {(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)}
          and cm.positions()[0] == (2, 4)
          and not chain_inversions(cm))
    return ok, f"middle chain inversions {sorted(inv)}"


def criterion_4() -> tuple[bool, str]:
    z = P((2, 5, 4, 1, 6, 3))
    listed = {parse_word("u[1,2] u[3,5] u[2,3] u[5,6] u[3,4]"),
              parse_word("u[3,4] u[4,5] u[1,2] u[5,6] u[2,4]")}
    sizes = {p: len(h_set(z, p)) for p in
             [(1, 3, 1), (2, 0, 3), (2, 1, 1, 1), (2, 1, 0, 2), (2, 0, 2, 1)]}
    consts = all_constants(z)
    nonzero = {lam: c for lam, c in consts.items() if c}
    d = d_lambda(z, (2, 1, 1, 1))
    total = len(reduced_words(z))
    ok = (total == 14
          and set(h_set(z, (2, 2, 1))) == listed
          and sizes == {(1, 3, 1): 0, (2, 0, 3): 0, (2, 1, 1, 1): 5,
                        (2, 1, 0, 2): 2, (2, 0, 2, 1): 2}
          and nonzero == {(2, 2, 1): 2, (2, 1, 1, 1): 1}
          and total == f_lambda((2, 2, 1)) * 2 + f_lambda((2, 1, 1, 1)) * 1
          and len(d) == 9 and sum(o.sign for o in d) == 1)
    return ok, f"|R|={total}, nonzero c={nonzero}, |D|={len(d)}"


def criterion_5() -> tuple[bool, str]:
    got = {p for _, _, p in sigma_terms((2, 1, 1, 1))}
    want = {(2, 1, 1, 1), (2, 1, 0, 2), (2, 0, 2, 1), (2, 0, 0, 3),
            (0, 3, 1, 1), (0, 3, 0, 2), (0, 0, 4, 1), (0, 0, 0, 5)}
    return got == want, f"{len(got)} nonnegative compositions"


def _random_word(rng: random.Random, n_max: int, letters: int) -> tuple[Generator, ...]:
    gens = [Generator(a, b) for a in range(1, letters + 1) for b in range(a + 1, letters + 1)]
    return tuple(rng.choice(gens) for _ in range(rng.randint(0, n_max)))


def _reaches_zero_site(x: tuple[Generator, ...]) -> bool:
    seen, todo = {x}, [x]
    while todo:
        y = todo.pop()
        if zero_relation_sites(y):
            return True
        for nb in _relation_neighbors(y):
            if nb not in seen:
                seen.add(nb)
                todo.append(nb)
    return False


def criterion_6(samples: int = 10_000, seed: int = 20260) -> tuple[bool, str]:
    all_reduced: set[tuple[Generator, ...]] = set()
    for z in all_permutations(5):
        words = reduced_words(z)
        if rewrite_closure(cm_chain(standard_interval(z)).word) != set(words):
            return False, f"closure of the CM word differs from R_u({z})"
        all_reduced.update(words)
    rng = random.Random(seed)
    zeros = 0
    for _ in range(samples):
        x = _random_word(rng, 5, 5)
        if evaluate_word(x) is ZERO:
            zeros += 1
            if x in all_reduced or not _reaches_zero_site(x):
                return False, f"zero word {x} behaves like a reduced word"
        elif x not in all_reduced or any(zero_relation_sites(y) for y in rewrite_closure(x)):
            return False, f"reduced word {x} meets a zero relation"
    return True, f"S_5 closures ok; {samples} random words, {zeros} zero"


def criterion_7() -> tuple[bool, str]:
    checked = 0
    for z in all_permutations(5):
        zi, zo = inverse(z), omega_conjugate(z, 5)
        for lam in partitions(universal_length(z)):
            c = c_constant(z, lam)
            lt = conjugate(lam)
            if c != c_constant(zi, lt) or c != c_constant(zo, lt) or c != c_constant_dual(z, lam):
                return False, f"SymA/SymB fails at {z}, {lam}"
            checked += 1
    for z in all_permutations(4):
        base = all_constants(z)
        for a in range(1, 7):
            if all_constants(phi_star(z, a)) != base:
                return False, f"SymC fails at {z}, a={a}"
    for z in all_permutations(4):
        n = universal_length(z)
        zi, zo = inverse(z), omega_conjugate(z, 4)
        for p in _compositions(n):
            hs = h_set(z, p)
            if {psi_h(x) for x in hs} != set(e_set(zi, p[::-1])):
                return False, f"psi_h fails at {z}, {p}"
            if {psi_v(x, 4) for x in hs} != set(e_prime_set(zo, p)):
                return False, f"psi_v fails at {z}, {p}"
    return True, f"{checked} (z, lambda) pairs; SymC over a=1..6; psi maps on S_4"


def _compositions(n: int):
    """Compositions of ``n`` with positive parts, plus those with one interior zero."""
    def rec(rem):
        if rem == 0:
            yield ()
            return
        for first in range(1, rem + 1):
            for rest in rec(rem - first):
                yield (first,) + rest
    for p in rec(n):
        yield p
        for i in range(1, len(p)):
            yield p[:i] + (0,) + p[i:]


def criterion_8() -> tuple[bool, str]:
    for z in all_permutations(5):
        if not check_cyclic(z, 5):
            return False, f"constants differ for {z}"
    for z in all_permutations(6):
        if count_reduced_words(z) != count_reduced_words(cyclic_shift(z, 6)):
            return False, f"|R_u| differs for {z}"
    return True, "S_5 constants and S_6 counts agree"


def criterion_9() -> tuple[bool, str]:
    small = [z for z in all_permutations(6) if 0 < universal_length(z) <= 3]
    pairs = 0
    for e, z in product(small, repeat=2):
        if not u_disjoint(e, z):
            continue
        pairs += 1
        if not check_disjoint(e, z):
            return False, f"identity fails for ({e}, {z})"
    return pairs > 0, f"{pairs} u-disjoint pairs"


def criterion_10() -> tuple[bool, str]:
    checked = 0
    for z in all_permutations(5):
        n = universal_length(z) - 1
        if n < 0 or n > 3:
            continue
        src, dst = h_set(z, (1, n)), set(h_set(z, (n, 1)))
        try:
            images = [insert(x) for x in src]
        except NonTerminationError as exc:
            return False, str(exc)
        if len(set(images)) != len(src) or set(images) != dst:
            return False, f"not a bijection for {z}"
        if any(evaluate_word(y) != z for y in images):
            return False, f"value changed for {z}"
        checked += len(src)
    return True, f"{checked} words inserted"


def criterion_11() -> tuple[bool, str]:
    for z in all_permutations(6):
        iv = standard_interval(z)
        if _closed_form(z.padded(6)) != length(iv.w) - length(iv.u):
            return False, f"length formulas differ at {z}"
    perms = [p.padded(5) for p in all_permutations(5)]
    intervals = chains = 0
    for k in range(1, 5):
        for u in perms:
            for w in perms:
                if not _leq(u, w, k):
                    continue
                iv = MarkedInterval(P(u), P(w), k)
                intervals += 1
                cm = cm_chain(iv)
                if dcm_chain(iv) != dcm_chain_via_omega(iv, 5):
                    return False, f"DCM routes differ on {iv}"
                for c in all_chains(iv):
                    chains += 1
                    if (not chain_inversions(c)) != (c == cm):
                        return False, f"inversion test fails on {iv}"
    return True, f"{intervals} intervals, {chains} chains"


@dataclass(frozen=True)
class CriterionResult:
    number: int
    ok: bool
    detail: str
    seconds: float


CRITERIA: dict[int, Callable[[], tuple[bool, str]]] = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4,
    5: criterion_5, 6: criterion_6, 7: criterion_7, 8: criterion_8,
    9: criterion_9, 10: criterion_10, 11: criterion_11,
}


def run_all(only: list[int] | None = None) -> list[CriterionResult]:
    out = []
    for num, fn in CRITERIA.items():
        if only and num not in only:
            continue
        t0 = time.perf_counter()
        ok, detail = fn()
        out.append(CriterionResult(num, ok, detail, time.perf_counter() - t0))
    return out
