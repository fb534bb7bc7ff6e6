import pytest

from kfib.closed_forms import (
    CharRelation,
    conjugate_fixture,
    generic_power,
    r_matrix,
    r_power_closed,
    s_matrix,
    s_power_closed,
)
from kfib.errors import NotUnimodular, RelationViolated
from kfib.exact import Mat2, Params, mat_inv, mat_mul, mat_pow, neg_one_pow
from kfib.identities import CONJUGATORS

GRID = [(k, a) for k in range(1, 5) for a in range(1, 6)]


def direct_power(t: Mat2, n: int) -> Mat2:
    return mat_pow(t, n) if n >= 0 else mat_pow(mat_inv(t), -n)


class TestConstructors:
    def test_r_matrix(self):
        assert r_matrix(Params(k=1, a=1)) == Mat2(1, 1, 1, 0)
        assert r_matrix(Params(k=1, a=2)) == Mat2(3, -1, 1, 0)

    def test_s_matrix(self):
        assert s_matrix(Params(k=1, a=1)) == Mat2(1, 5, 1, 1, scale=1)

    @pytest.mark.parametrize("k,a", GRID)
    def test_both_satisfy_relation(self, k, a):
        p = Params(k=k, a=a)
        rel = CharRelation.for_params(p)
        assert rel.holds(r_matrix(p))
        assert rel.holds(s_matrix(p))


class TestClosedPowers:
    def test_r_example(self):
        assert r_power_closed(Params(k=1, a=2), 2) == Mat2(8, -3, 3, -1)

    def test_s_example(self):
        assert s_power_closed(Params(k=1, a=1), 2) == Mat2(3, 5, 1, 3, scale=1)

    def test_zero_is_identity(self):
        p = Params(k=3, a=2)
        assert r_power_closed(p, 0) == Mat2.identity()
        assert s_power_closed(p, 0) == Mat2.identity()

    @pytest.mark.parametrize("closed", [r_power_closed, s_power_closed])
    def test_negative_rejected(self, closed):
        with pytest.raises(ValueError):
            closed(Params(k=1, a=1), -1)

    @pytest.mark.parametrize("k,a", GRID)
    def test_match_binary_powering(self, k, a):
        p = Params(k=k, a=a)
        for n in range(1, 26):
            assert r_power_closed(p, n) == mat_pow(r_matrix(p), n)
            s_n = s_power_closed(p, n)
            assert s_n == mat_pow(s_matrix(p), n)
            assert s_n.det() == neg_one_pow(a * n)


class TestGenericPower:
    def fixtures(self, p: Params) -> list[Mat2]:
        return [r_matrix(p), s_matrix(p)] + [conjugate_fixture(p, c) for c in CONJUGATORS]

    @pytest.mark.parametrize("k,a", [(1, 1), (1, 2), (2, 3), (3, 1), (4, 5)])
    def test_agrees_with_direct_powering(self, k, a):
        p = Params(k=k, a=a)
        rel = CharRelation.for_params(p)
        for t in self.fixtures(p):
            for n in range(-10, 11):
                assert generic_power(t, rel, n) == direct_power(t, n)

    @pytest.mark.parametrize("k,a", [(1, 1), (2, 2), (3, 5)])
    def test_opposite_exponents_cancel(self, k, a):
        p = Params(k=k, a=a)
        rel = CharRelation.for_params(p)
        fixtures = self.fixtures(p)
        assert len(fixtures) == 5
        for t in fixtures:
            for n in range(11):
                product = mat_mul(generic_power(t, rel, n), generic_power(t, rel, -n))
                assert product == Mat2.identity()

    def test_relation_violated(self):
        rel = CharRelation.for_params(Params(k=1, a=1))
        with pytest.raises(RelationViolated):
            generic_power(Mat2(1, 0, 0, 2), rel, 3)


class TestConjugateFixture:
    def test_example(self):
        assert conjugate_fixture(Params(k=1, a=1), Mat2(1, 1, 0, 1)) == Mat2(2, -1, 1, -1)

    @pytest.mark.parametrize("conj", CONJUGATORS)
    def test_result_is_integral_and_satisfies_relation(self, conj):
        p = Params(k=2, a=3)
        t = conjugate_fixture(p, conj)
        assert t.is_integral()
        assert CharRelation.for_params(p).holds(t)

    @pytest.mark.parametrize("conj", [Mat2(2, 0, 0, 1), Mat2(1, 1, 0, 1, scale=1), Mat2.zero()])
    def test_not_unimodular(self, conj):
        with pytest.raises(NotUnimodular):
            conjugate_fixture(Params(k=1, a=1), conj)
