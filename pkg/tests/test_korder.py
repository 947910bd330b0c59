import json

import pytest
from hypothesis import given, settings, strategies as st

from kbruhat.errors import DomainError, ResourceLimitError
from kbruhat.korder import (Chain, MarkedInterval, all_chains, chain_from_json,
                            chain_inversions, chain_to_json, chain_to_word, chain_words,
                            cm_chain, count_chains, covers_k, dcm_chain, dcm_chain_via_omega,
                            interval, interval_dot, leq_k, word_to_chain)
from kbruhat.perm import IDENTITY, Permutation, all_permutations, compose, omega_conjugate
from kbruhat.umonoid import count_reduced_words
from kbruhat.words import Generator, parse_word, word

P = Permutation

FIG1 = (P((2, 1, 4, 3, 5)), P((4, 5, 1, 2, 3)), 2)
SEC3 = (P((2, 1, 6, 4, 3, 5)), P((4, 5, 6, 1, 2, 3)), 3)


def cols(chain, m=6):
    return [p.padded(m) for p in chain.perms]


class TestLeqK:
    def test_examples(self):
        assert leq_k(P((3, 1, 2)), P((3, 1, 2)), 2)
        assert leq_k(*FIG1)
        assert not leq_k(FIG1[0], FIG1[1], 3)

    def test_k_zero_only_reflexive(self):
        for u in all_permutations(3):
            for w in all_permutations(3):
                assert leq_k(u, w, 0) == (u == w)

    @pytest.mark.parametrize("k", range(0, 6))
    def test_vertical_symmetry(self, k):
        perms = list(all_permutations(5))
        om = {p: omega_conjugate(p, 5) for p in perms}
        for u in perms:
            for w in perms:
                assert leq_k(u, w, k) == leq_k(om[u], om[w], 5 - k)

    def test_interval_rejects_empty(self):
        with pytest.raises(DomainError):
            interval(FIG1[1], FIG1[0], 2)


class TestCovers:
    def test_top_has_no_covers(self):
        assert covers_k(FIG1[1], 2, FIG1[1]) == []

    def test_figure_one_atoms(self):
        got = {p for p, _ in covers_k(FIG1[0], 2, FIG1[1])}
        assert got == _atoms_by_reachability(FIG1[0].padded(5), FIG1[1].padded(5), 2)
        # one atom per distinct first letter of the five chain words
        assert got == {P((2, 4, 1, 3, 5)), P((3, 1, 4, 2, 5)), P((4, 1, 2, 3, 5))}
        assert not leq_k(P((2, 3, 4, 1, 5)), FIG1[1], 2)

    def test_covers_carry_generator_labels(self):
        for p, g in covers_k(FIG1[0], 2, FIG1[1]):
            assert P(_swap_values(FIG1[0].padded(5), g)) == p

    def test_first_cm_step_is_a_cover(self):
        u, w, k = SEC3
        assert (P((2, 4, 6, 1, 3, 5)), Generator(1, 4)) in covers_k(u, k, w)


class TestCanonicalChains:
    def test_trivial(self):
        iv = interval(P((2, 1)), P((2, 1)), 1)
        assert cm_chain(iv).perms == (P((2, 1)),)
        assert dcm_chain(iv).perms == (P((2, 1)),)
        assert len(cm_chain(iv)) == 0

    def test_section_three_columns(self):
        iv = interval(*SEC3)
        assert cols(cm_chain(iv)) == [(2, 1, 6, 4, 3, 5), (2, 4, 6, 1, 3, 5), (2, 5, 6, 1, 3, 4),
                                      (3, 5, 6, 1, 2, 4), (4, 5, 6, 1, 2, 3)]
        assert cols(dcm_chain(iv)) == [(2, 1, 6, 4, 3, 5), (2, 4, 6, 1, 3, 5), (3, 4, 6, 1, 2, 5),
                                       (3, 5, 6, 1, 2, 4), (4, 5, 6, 1, 2, 3)]
        assert cm_chain(iv).positions()[0] == (2, 4)

    def test_figure_one_words(self):
        iv = interval(*FIG1)
        assert cm_chain(iv).word == word((1, 4), (4, 5), (2, 3), (3, 4))
        assert dcm_chain(iv).word == parse_word("u[3,4] u[4,5] u[2,3] u[1,4]")

    def test_dcm_routes_agree_on_section_three(self):
        iv = interval(*SEC3)
        assert dcm_chain(iv) == dcm_chain_via_omega(iv, 6) == dcm_chain_via_omega(iv)

    def test_canonical_chains_are_maximal_chains(self):
        for u in all_permutations(4):
            for w in all_permutations(4):
                for k in range(1, 4):
                    if leq_k(u, w, k):
                        iv = MarkedInterval(u, w, k)
                        chains = all_chains(iv)
                        assert cm_chain(iv) in chains and dcm_chain(iv) in chains


class TestInversions:
    def test_middle_chain(self):
        iv = interval(*SEC3)
        mid = word_to_chain(chain_to_word(Chain(tuple(P(c) for c in [
            (2, 1, 6, 4, 3, 5), (3, 1, 6, 4, 2, 5), (4, 1, 6, 3, 2, 5),
            (4, 3, 6, 1, 2, 5), (4, 5, 6, 1, 2, 3)]), 3)), iv.u, 3)
        assert chain_inversions(mid) == {(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)}
        assert chain_inversions(mid, iv.w) == chain_inversions(mid)

    def test_cm_chain_has_none(self):
        assert chain_inversions(cm_chain(interval(*SEC3))) == set()

    def test_single_step(self):
        c = cm_chain(interval(IDENTITY, P((2, 1)), 1))
        assert len(c) == 1 and chain_inversions(c) == set()

    @pytest.mark.parametrize("k", range(1, 5))
    def test_inversion_free_iff_canonical(self, k):
        perms = [p for p in all_permutations(5)]
        for u in perms:
            for w in perms:
                if not leq_k(u, w, k):
                    continue
                iv = MarkedInterval(u, w, k)
                cm = cm_chain(iv)
                assert dcm_chain(iv) == dcm_chain_via_omega(iv, 5)
                for c in all_chains(iv):
                    assert (not chain_inversions(c)) == (c == cm)


class TestEnumeration:
    def test_counts(self):
        assert len(all_chains(interval(P((3, 1, 2)), P((3, 1, 2)), 1))) == 1
        assert len(all_chains(interval(*FIG1))) == 5
        iv = interval(P((1, 3, 2, 5, 4, 6)), P((2, 4, 5, 6, 1, 3)), 4)
        assert len(all_chains(iv)) == count_chains(iv) == 14

    def test_lexicographic_and_distinct(self):
        words = chain_words(interval(*SEC3))
        assert words == sorted(words)
        assert len(set(words)) == len(words)

    def test_chain_cap(self):
        with pytest.raises(ResourceLimitError):
            chain_words(interval(*FIG1), max_chains=4)

    def test_chain_word_round_trip(self):
        iv = interval(*FIG1)
        for c in all_chains(iv):
            x = chain_to_word(c)
            assert all(g.alpha < g.beta for g in x)
            assert word_to_chain(x, iv.u, iv.k) == c
        assert word_to_chain((), iv.u, 2).perms == (iv.u,)

    def test_word_to_chain_rejects_non_covers(self):
        with pytest.raises(DomainError):
            word_to_chain(word((1, 2)), P((2, 1)), 1)

    def test_independence_of_representative(self):
        # every (u, k) realising z inside S_6 gives the same number of chains
        for z in [P((2, 3, 1)), P((3, 1, 2)), P((2, 4, 1, 3)), P((5, 4, 2, 1, 3)),
                  P((2, 1, 4, 3)), P((3, 4, 1, 2))]:
            want = count_reduced_words(z)
            seen = 0
            for u in all_permutations(6):
                w = compose(z, u)
                for k in range(7):
                    if leq_k(u, w, k):
                        seen += 1
                        assert count_chains(MarkedInterval(u, w, k)) == want
            assert seen > 0


class TestSerialisation:
    def test_json_round_trip(self):
        for c in all_chains(interval(*SEC3)):
            data = chain_to_json(c)
            assert chain_from_json(json.dumps(data)) == c
            assert set(data) == {"u", "w", "k", "steps"}

    def test_json_rejects_tampering(self):
        data = chain_to_json(cm_chain(interval(*FIG1)))
        data["steps"][0]["perm"] = [1, 2, 3, 4, 5]
        with pytest.raises(ValueError):
            chain_from_json(data)

    def test_dot(self):
        dot = interval_dot(interval(*FIG1))
        assert dot.startswith("digraph")
        assert dot.count("->") == len({(a, b) for a, b in _edges(dot)})
        assert '"21435" -> "24135" [label="1"];' in dot
        assert '"21435" -> "41235" [label="2"];' in dot


def _swap_values(t, g):
    return tuple(g.beta if x == g.alpha else g.alpha if x == g.beta else x for x in t)


def _atoms_by_reachability(u, w, k):
    """Atoms of [u, w]_k with the order taken as the closure of k-covers; no bound tests."""
    n = len(u)
    inv = lambda p: sum(p[i] > p[j] for i in range(n) for j in range(i + 1, n))

    def covers(p):
        for a in range(k):
            for b in range(k, n):
                q = list(p)
                q[a], q[b] = q[b], q[a]
                if inv(q) == inv(p) + 1:
                    yield tuple(q)

    memo = {}

    def reaches(p):
        if p == w:
            return True
        if p not in memo:
            memo[p] = any(reaches(q) for q in covers(p))
        return memo[p]

    return {P(q) for q in covers(u) if reaches(q)}


def _edges(dot):
    for line in dot.splitlines():
        if "->" in line:
            a, rest = line.split("->")
            yield a.strip(), rest.split("[")[0].strip()


@settings(max_examples=60, deadline=None)
@given(st.permutations(range(1, 6)), st.permutations(range(1, 6)), st.integers(1, 4))
def test_chains_are_well_formed(u, w, k):
    u, w = P(u), P(w)
    if not leq_k(u, w, k):
        return
    for c in all_chains(interval(u, w, k)):
        assert c.u == u and c.w == w
        for (a, b) in c.positions():
            assert a <= k < b
