import random
from fractions import Fraction

from schurkit import Partition, SchurExpansion, all_partitions, schur_product, sxp_plethysm
from schurkit.oracle import (
    _p_mult,
    _p_stretch,
    _schur_in_p,
    oracle_plethysm,
    oracle_power_plethysm,
    oracle_product,
)

P = Partition


def single(lam):
    return SchurExpansion(lam.size, {lam: 1})


class TestOracleProduct:
    def test_square_of_box(self):
        assert oracle_product(P([1]), P([1])) == SchurExpansion(
            2, {P([2]): 1, P([1, 1]): 1}
        )

    def test_identity(self):
        assert oracle_product(P([4, 2]), P()) == single(P([4, 2]))

    def test_single_coefficient_cross_path(self, char_cache):
        from schurkit import lr_coefficient

        got = oracle_product(P([3, 2]), P([1, 1]), char_cache)
        assert got.coefficient(P([4, 3])) == lr_coefficient(
            P([4, 3]), P([3, 2]), P([1, 1])
        )

    def test_matches_main_path_small(self, char_cache):
        for a in range(4):
            for mu in all_partitions(a):
                for b in range(4):
                    for nu in all_partitions(b):
                        assert oracle_product(mu, nu, char_cache) == schur_product(
                            single(mu), single(nu)
                        )


class TestOraclePlethysm:
    def test_identity(self):
        for nu in all_partitions(4):
            assert oracle_plethysm(P([1]), nu) == single(nu)

    def test_h2_of_e2(self):
        assert oracle_plethysm(P([2]), P([1, 1])) == SchurExpansion(
            4, {P([2, 2]): 1, P([1, 1, 1, 1]): 1}
        )

    def test_final_remarks_support(self, char_cache):
        e = oracle_plethysm(P([1, 1]), P([4, 2, 2]), char_cache)
        assert len(e) == 40

    def test_power_route_matches_sxp(self, char_cache):
        for n in (1, 2, 3):
            for size in range(5):
                for lam in all_partitions(size):
                    assert oracle_power_plethysm(n, lam, char_cache) == sxp_plethysm(
                        n, lam
                    )


class TestPowerBasisAlgebra:
    def _random_pdict(self, rng, degree):
        terms = {}
        for rho in all_partitions(degree):
            if rng.random() < 0.4:
                terms[rho] = Fraction(rng.randint(-3, 3))
        return {k: v for k, v in terms.items() if v}

    def test_stretch_is_multiplicative(self, char_cache):
        # p_n o (f * g) == (p_n o f) * (p_n o g)
        rng = random.Random(3)
        for _ in range(20):
            f = self._random_pdict(rng, rng.randint(1, 4))
            g = self._random_pdict(rng, rng.randint(1, 4))
            for n in (2, 3):
                lhs = _p_stretch(_p_mult(f, g), n)
                rhs = _p_mult(_p_stretch(f, n), _p_stretch(g, n))
                assert lhs == rhs

    def test_stretch_of_schur_image(self):
        f = _schur_in_p(P([2]), None)
        doubled = _p_stretch(f, 2)
        assert doubled == {
            P([2, 2]): Fraction(1, 2),
            P([4]): Fraction(1, 2),
        }

    def test_p_mult_is_union(self):
        f = {P([2]): Fraction(1)}
        g = {P([3, 1]): Fraction(2)}
        assert _p_mult(f, g) == {P([3, 2, 1]): Fraction(2)}
