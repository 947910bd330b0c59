import pickle

import pytest
from hypothesis import given, strategies as st

from kbruhat.perm import (IDENTITY, Permutation, all_permutations, compose, conjugate,
                          format_permutation, grassmannian, inverse, length, omega_conjugate,
                          parse_partition, parse_permutation, partition, partitions, phi_star,
                          sign, transposition, up_dw_fix)

P = Permutation


def perms(max_n=6):
    return st.integers(0, max_n).flatmap(lambda n: st.permutations(range(1, n + 1))).map(P)


class TestConstruction:
    def test_trailing_fixed_points_are_trimmed(self):
        assert P((2, 1, 3, 4)).window == (2, 1)
        assert P((1, 2, 3)) == IDENTITY
        assert P((1, 2, 3)).size == 0

    @pytest.mark.parametrize("bad", [(1, 1), (0, 1), (2, 3), (1, 3)])
    def test_rejects_non_bijections(self, bad):
        with pytest.raises(ValueError):
            P(bad)

    def test_immutable(self):
        with pytest.raises(AttributeError):
            P((2, 1)).window = (1,)

    def test_call_extends_by_fixed_points(self):
        p = P((2, 1))
        assert [p(i) for i in range(1, 5)] == [2, 1, 3, 4]

    def test_pickle_round_trip(self):
        p = P((2, 5, 4, 1, 6, 3))
        assert pickle.loads(pickle.dumps(p)) == p


class TestGroup:
    def test_compose_examples(self):
        assert compose(IDENTITY, IDENTITY) == IDENTITY
        assert compose(P((2, 1)), P((2, 1))) == IDENTITY
        assert compose(P((2, 5, 4, 1, 6, 3)), P((3, 1, 2, 5, 6, 4))) == P((4, 2, 5, 6, 3, 1))

    def test_inverse_examples(self):
        assert inverse(IDENTITY) == IDENTITY
        assert inverse(P((2, 3, 1))) == P((3, 1, 2))
        assert inverse(P((2, 5, 4, 1, 6, 3))) == P((4, 1, 6, 3, 2, 5))

    def test_length_and_sign(self):
        assert length(IDENTITY) == 0
        assert length(P((2, 1))) == 1
        assert length(P((4, 5, 6, 1, 2, 3))) == 9
        assert sign(IDENTITY) == 1
        assert sign(P((2, 1))) == -1
        assert sign(P((2, 3, 1))) == 1

    @given(perms(), perms(), perms())
    def test_associative(self, a, b, c):
        assert compose(compose(a, b), c) == compose(a, compose(b, c))

    @given(perms())
    def test_inverse_is_two_sided(self, a):
        assert compose(a, inverse(a)) == IDENTITY == compose(inverse(a), a)
        assert length(a) == length(inverse(a))

    @given(perms(), st.integers(1, 6))
    def test_adjacent_transposition_changes_length_by_one(self, a, i):
        assert abs(length(compose(a, transposition(i, i + 1))) - length(a)) == 1

    def test_mul_operator(self):
        a, b = P((2, 3, 1)), P((2, 1))
        assert a * b == compose(a, b)


class TestConstructions:
    def test_up_dw_fix(self):
        assert up_dw_fix(IDENTITY) == (frozenset(), frozenset(), frozenset())
        up, dw, fix = up_dw_fix(P((2, 5, 4, 1, 6, 3)))
        assert (up, dw, fix) == ({2, 4, 5, 6}, {1, 3}, frozenset())
        assert up_dw_fix(P((2, 1)))[:2] == ({2}, {1})
        # |up| and |dw| differ in general
        up, dw, _ = up_dw_fix(P((2, 3, 1)))
        assert up == {2, 3} and dw == {1}

    @given(perms())
    def test_up_dw_fix_partitions_the_window(self, z):
        up, dw, fix = up_dw_fix(z)
        assert not (up & dw) and not (up & fix) and not (dw & fix)
        assert up | dw | fix == set(range(1, z.size + 1))

    def test_grassmannian_examples(self):
        assert grassmannian((), 3) == IDENTITY
        assert grassmannian((1,), 1) == P((2, 1))
        assert grassmannian((2, 1), 2) == P((2, 4, 1, 3))
        with pytest.raises(ValueError):
            grassmannian((1, 1, 1), 2)

    @pytest.mark.parametrize("lam", [lam for n in range(10) for lam in partitions(n)
                                     if len(lam) <= 3 and (not lam or lam[0] <= 3)])
    def test_grassmannian_code_oracle(self, lam):
        v = grassmannian(lam, 3).padded(7)
        descents = [i + 1 for i in range(len(v) - 1) if v[i] > v[i + 1]]
        assert descents in ([], [3])
        code = [sum(1 for j in range(i + 1, len(v)) if v[j] < v[i]) for i in range(3)]
        assert partition(reversed(code)) == lam

    def test_omega_conjugate(self):
        assert omega_conjugate(IDENTITY, 4) == IDENTITY
        assert omega_conjugate(P((2, 1, 6, 4, 3, 5)), 6) == P((2, 4, 3, 1, 6, 5))
        with pytest.raises(ValueError):
            omega_conjugate(P((3, 2, 1)), 2)

    @given(perms(6))
    def test_omega_is_involution(self, a):
        assert omega_conjugate(omega_conjugate(a, 6), 6) == a

    def test_phi_star_examples(self):
        assert phi_star(IDENTITY, 2) == IDENTITY
        assert phi_star(P((2, 1)), 1) == P((1, 3, 2))
        assert phi_star(P((2, 1)), 3) == P((2, 1))

    @given(perms(5), perms(5), st.integers(1, 6))
    def test_phi_star_is_a_homomorphism(self, a, b, pos):
        assert phi_star(compose(a, b), pos) == compose(phi_star(a, pos), phi_star(b, pos))

    @given(perms(5), st.integers(1, 6))
    def test_phi_star_intertwines(self, z, pos):
        phi = lambda i: i if i < pos else i + 1
        zp = phi_star(z, pos)
        assert zp(pos) == pos
        assert all(zp(phi(i)) == phi(z(i)) for i in range(1, 8))


class TestPartitions:
    def test_partition_trims_and_validates(self):
        assert partition((2, 1, 0, 0)) == (2, 1)
        with pytest.raises(ValueError):
            partition((1, 2))
        with pytest.raises(ValueError):
            partition((2, -1))

    def test_conjugate(self):
        assert conjugate((2, 2, 1)) == (3, 2)
        assert conjugate((4,)) == (1, 1, 1, 1)
        assert conjugate(()) == ()

    def test_partition_counts(self):
        assert [sum(1 for _ in partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
        assert next(partitions(4)) == (4,)

    @given(st.integers(0, 9))
    def test_conjugation_is_an_involution(self, n):
        for lam in partitions(n):
            assert conjugate(conjugate(lam)) == lam


class TestText:
    def test_parse(self):
        assert parse_permutation("2,5,4,1,6,3") == P((2, 5, 4, 1, 6, 3))
        assert parse_permutation("1") == IDENTITY
        assert parse_permutation("") == IDENTITY
        assert parse_permutation("(2,1)") == P((2, 1))
        assert parse_partition("2,2,1") == (2, 2, 1)

    def test_format(self):
        assert format_permutation(IDENTITY) == "1"
        assert format_permutation(P((2, 1)), 4) == "2,1,3,4"

    @given(perms())
    def test_round_trip(self, a):
        assert parse_permutation(format_permutation(a)) == a

    def test_all_permutations(self):
        assert sum(1 for _ in all_permutations(4)) == 24
        assert len(set(all_permutations(4))) == 24
