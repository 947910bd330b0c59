"""
Schubert-times-Schur structure constants as signed counts of reduced words.

For a composition ``p`` the set ``H_p(z)`` holds the u-reduced words of ``z``
whose first letters increase strictly inside consecutive blocks of sizes
``p_1, p_2, ...`` (application order).  Expanding the Jacobi-Trudi
determinant gives

    c_lam^z = sum over sigma in S_r of sign(sigma) * |H_{lam_sigma}(z)|,
    lam_sigma(i) = lam_{sigma(i)} + i - sigma(i).

Everything here reduces to counting words, so the module never touches
polynomials.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Callable, Sequence

from .errors import DomainError, InvariantError
from .korder import leq_k
from .perm import (Permutation, compose, conjugate, inverse, partition,
                   partitions)
from .tableaux import f_lambda, lr_coefficient
from .umonoid import ZERO, count_reduced_words, evaluate_word, reduced_words, universal_length
from .words import Generator, letters

__all__ = [
    "weakly_fits", "fits_decreasing_alpha", "fits_decreasing_beta",
    "h_set", "e_set", "e_prime_set", "lambda_sigma", "sigma_terms",
    "c_constant", "c_constant_dual", "schubert_coeff", "f_lambda",
    "ConstantsReport", "verify_identity", "all_constants",
    "psi_v", "psi_h", "phi_star_word", "cyclic_shift", "check_cyclic",
    "lr_coefficient", "u_disjoint", "check_disjoint", "disjoint_sides",
    "SignedWordOccurrence", "d_lambda",
]


# -- block conditions ---------------------------------------------------------

def _fits(values: Sequence[int], p: Sequence[int], ok: Callable[[int, int], bool]) -> bool:
    if any(x < 0 for x in p) or sum(p) != len(values):
        return False
    start = 0
    for size in p:
        for i in range(start, start + size - 1):
            if not ok(values[i], values[i + 1]):
                return False
        start += size
    return True


def _lt(a, b):
    return a < b


def _gt(a, b):
    return a > b


def weakly_fits(x: Sequence[Generator], p: Sequence[int]) -> bool:
    """First letters strictly increase inside each block of ``p``."""
    return _fits([g.alpha for g in x], p, _lt)


def fits_decreasing_alpha(x: Sequence[Generator], p: Sequence[int]) -> bool:
    return _fits([g.alpha for g in x], p, _gt)


def fits_decreasing_beta(x: Sequence[Generator], p: Sequence[int]) -> bool:
    return _fits([g.beta for g in x], p, _gt)


@lru_cache(maxsize=4096)
def _words(z: Permutation) -> tuple[tuple[Generator, ...], ...]:
    return tuple(reduced_words(z))


@lru_cache(maxsize=1 << 16)
def _count(z: Permutation, p: tuple[int, ...], kind: str) -> int:
    if any(x < 0 for x in p):
        return 0
    fit = _FITS[kind]
    return sum(1 for x in _words(z) if fit(x, p))


def h_set(z: Permutation, p: Sequence[int]) -> list[tuple[Generator, ...]]:
    return [x for x in _words(z) if weakly_fits(x, p)]


def e_set(z: Permutation, p: Sequence[int]) -> list[tuple[Generator, ...]]:
    return [x for x in _words(z) if fits_decreasing_alpha(x, p)]


def e_prime_set(z: Permutation, p: Sequence[int]) -> list[tuple[Generator, ...]]:
    return [x for x in _words(z) if fits_decreasing_beta(x, p)]


_FITS = {"H": weakly_fits, "E": fits_decreasing_alpha, "E'": fits_decreasing_beta}


# -- alternating sums ---------------------------------------------------------

def lambda_sigma(lam: Sequence[int], sigma: Sequence[int] | Permutation) -> tuple[int, ...]:
    """``lam_sigma(i) = lam_{sigma(i)} + i - sigma(i)``; may have negative parts."""
    lam = tuple(lam)
    if isinstance(sigma, Permutation):
        sigma = sigma.padded(len(lam))
    r = len(sigma)
    if r < len(lam) or sorted(sigma) != list(range(1, r + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{max(r, len(lam))}")
    parts = list(lam) + [0] * (r - len(lam))
    return tuple(parts[s - 1] + i - s for i, s in enumerate(sigma, 1))


def _sign(sigma: Sequence[int]) -> int:
    n = len(sigma)
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j])
    return -1 if inv % 2 else 1


def sigma_terms(lam: Sequence[int], r: int | None = None) -> list[tuple[tuple[int, ...], int, tuple[int, ...]]]:
    """``(sigma, sign, lam_sigma)`` for every sigma whose composition has no negative part."""
    lam = partition(lam)
    if r is None:
        r = len(lam)
    if r < len(lam):
        raise ValueError(f"r={r} is smaller than the number of parts of {lam}")
    out = []
    for sigma in permutations(range(1, r + 1)):
        p = lambda_sigma(lam, sigma)
        if min(p, default=0) >= 0:
            out.append((sigma, _sign(sigma), p))
    return out


def _alternating(z: Permutation, lam: Sequence[int], kind: str, r: int | None, reverse: bool) -> int:
    total = 0
    for _, s, p in sigma_terms(lam, r):
        total += s * _count(z, p[::-1] if reverse else p, kind)
    return total


def c_constant(z: Permutation, lam: Sequence[int], r: int | None = None) -> int:
    """
    c_lam^z through the H-sets.  ``r`` pads ``lam`` with zero parts; the value
    does not depend on it.
    """
    lam = partition(lam)
    if sum(lam) != universal_length(z):
        return 0
    c = _alternating(z, lam, "H", r, False)
    if c < 0:
        raise InvariantError(f"negative structure constant c_{lam}^{z} = {c}")
    return c


def c_constant_dual(z: Permutation, lam: Sequence[int], route: str = "both") -> int:
    """
    c_lam^z through the transpose expansion: ``E`` sums over reversed
    compositions with decreasing first letters, ``E'`` over compositions with
    decreasing second letters.  With ``route="both"`` the two must agree.
    """
    lam = partition(lam)
    if sum(lam) != universal_length(z):
        return 0
    mu = conjugate(lam)
    vals = {}
    if route in ("E", "both"):
        vals["E"] = _alternating(z, mu, "E", None, True)
    if route in ("E'", "both"):
        vals["E'"] = _alternating(z, mu, "E'", None, False)
    if not vals:
        raise ValueError(f"unknown route {route!r}")
    if len(set(vals.values())) != 1:
        raise InvariantError(f"dual routes disagree for c_{lam}^{z}: {vals}")
    c = next(iter(vals.values()))
    if c < 0:
        raise InvariantError(f"negative structure constant c_{lam}^{z} = {c}")
    return c


def schubert_coeff(u: Permutation, lam: Sequence[int], k: int, w: Permutation) -> int:
    """Coefficient of S_w in S_u * S_{v(lam,k)}, zero unless ``u <=_k w``."""
    if not leq_k(u, w, k):
        return 0
    return c_constant(compose(w, inverse(u)), lam)


def all_constants(z: Permutation) -> dict[tuple[int, ...], int]:
    n = universal_length(z)
    return {lam: c_constant(z, lam) for lam in partitions(n)}


@dataclass
class ConstantsReport:
    zeta: Permutation
    lu: int
    entries: dict[tuple[int, ...], int]
    total_chains: int
    identity_ok: bool

    def weighted_sum(self) -> int:
        return sum(f_lambda(lam) * c for lam, c in self.entries.items())

    def to_json(self) -> dict:
        return {
            "zeta": list(self.zeta.window),
            "lu": self.lu,
            "chains": self.total_chains,
            "c": [{"lambda": list(lam), "value": v} for lam, v in self.entries.items()],
            "identity_ok": self.identity_ok,
        }

    @classmethod
    def from_json(cls, data) -> ConstantsReport:
        if isinstance(data, str):
            data = json.loads(data)
        entries = {tuple(e["lambda"]): int(e["value"]) for e in data["c"]}
        return cls(Permutation(data["zeta"]), int(data["lu"]), entries,
                   int(data["chains"]), bool(data["identity_ok"]))


def verify_identity(z: Permutation, strict: bool = True) -> ConstantsReport:
    """Check ``|R(z)| = sum f^lam c_lam^z`` over all ``lam`` of the right size."""
    entries = all_constants(z)
    total = count_reduced_words(z)
    rep = ConstantsReport(z, universal_length(z), entries, total, False)
    rep.identity_ok = rep.weighted_sum() == total
    if strict and not rep.identity_ok:
        raise InvariantError(f"|R({z})| = {total} but sum f*c = {rep.weighted_sum()}")
    return rep


# -- symmetries of word sets --------------------------------------------------

def psi_v(x: Sequence[Generator], m: int) -> tuple[Generator, ...]:
    """Vertical symmetry: ``u[a,b] -> u[w0(b), w0(a)]`` in S_m, factor order kept."""
    if any(g.beta > m for g in x):
        raise ValueError(f"letters of {x} exceed m={m}")
    return tuple(Generator(m + 1 - g.beta, m + 1 - g.alpha) for g in x)


def psi_h(x: Sequence[Generator]) -> tuple[Generator, ...]:
    """Horizontal symmetry: reverse the factor order."""
    return tuple(reversed(x))


def phi_star_word(x: Sequence[Generator], pos: int) -> tuple[Generator, ...]:
    shift = lambda i: i if i < pos else i + 1
    return tuple(Generator(shift(g.alpha), shift(g.beta)) for g in x)


def cyclic_shift(z: Permutation, n: int) -> Permutation:
    """``g z g^-1`` for the n-cycle ``g: i -> i+1 (mod n)``."""
    if z.size > n:
        raise ValueError(f"{z} is not in S_{n}")
    g = Permutation(tuple(range(2, n + 1)) + (1,))
    return compose(compose(g, z), inverse(g))


def check_cyclic(z: Permutation, n: int) -> bool:
    y = cyclic_shift(z, n)
    if universal_length(y) != universal_length(z):
        return False
    return all_constants(z) == all_constants(y)


# -- disjoint products --------------------------------------------------------

def u_disjoint(e: Permutation, z: Permutation) -> bool:
    """One reduced word each: disjoint letters and a nonzero product."""
    xe, xz = _words(e)[0], _words(z)[0]
    if letters(xe) & letters(xz):
        return False
    return evaluate_word(xe + xz) is not ZERO


def disjoint_sides(e: Permutation, z: Permutation) -> dict[tuple[int, ...], tuple[int, int]]:
    """For each ``lam``: (c_lam^{z e}, sum of c^lam_{nu mu} c_nu^z c_mu^e)."""
    if not u_disjoint(e, z):
        raise DomainError(f"{e} and {z} are not u-disjoint")
    ze = compose(z, e)
    cz, ce = all_constants(z), all_constants(e)
    out = {}
    for lam in partitions(universal_length(ze)):
        rhs = sum(lr_coefficient(nu, mu, lam) * a * b
                  for nu, a in cz.items() if a
                  for mu, b in ce.items() if b)
        out[lam] = (c_constant(ze, lam), rhs)
    return out


def check_disjoint(e: Permutation, z: Permutation) -> bool:
    return all(a == b for a, b in disjoint_sides(e, z).values())


# -- signed occurrences -------------------------------------------------------

@dataclass(frozen=True)
class SignedWordOccurrence:
    word: tuple[Generator, ...]
    sigma: Permutation
    sign: int = field(default=1)


def d_lambda(z: Permutation, lam: Sequence[int]) -> list[SignedWordOccurrence]:
    """The disjoint union of ``H_{lam_sigma}(z)`` over sigma, each tagged with its sign."""
    lam = partition(lam)
    out = []
    for sigma, s, p in sigma_terms(lam):
        for x in h_set(z, p):
            out.append(SignedWordOccurrence(x, Permutation(sigma), s))
    return out
