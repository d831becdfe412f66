import random

import pytest

from helpers import brute_partitions, prefix_leq, random_weight
from jansum.lattice import (
    LiftError,
    Partition,
    Root,
    Weight,
    dominance_leq,
    fundamental_weight,
    lambda_f_weight,
    lambda_i_weight,
    mu_weight,
    pairing,
    partition_to_weight,
    partitions_below,
    pi_weight,
    positive_roots,
    rho,
    weight_to_partition,
)


class TestPartition:
    def test_strips_trailing_zeros(self):
        assert Partition((2, 1, 0, 0)).parts == (2, 1)
        assert Partition((0, 0)).parts == ()

    def test_empty_is_valid(self):
        empty = Partition()
        assert empty.size == 0
        assert empty.length == 0

    def test_size_and_length(self):
        p = Partition((3, 3, 1))
        assert p.size == 7
        assert p.length == 3

    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            Partition((1, 2))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            Partition((2, -1))

    def test_rejects_interior_zero(self):
        with pytest.raises(ValueError):
            Partition((2, 0, 1))

    def test_hash_and_eq(self):
        assert Partition((2, 1)) == Partition([2, 1, 0])
        assert hash(Partition((2, 1))) == hash(Partition((2, 1)))
        assert Partition((2, 1)) != Partition((3,))


class TestWeight:
    def test_rank_and_arithmetic(self):
        w = Weight((1, 2))
        v = Weight((0, -1))
        assert w.rank == 2
        assert (w + v).coords == (1, 1)
        assert (w - v).coords == (1, 3)
        assert (3 * v).coords == (0, -3)
        assert (-w).coords == (-1, -2)

    def test_rank_mismatch(self):
        with pytest.raises(ValueError):
            Weight((1, 2)) + Weight((1, 2, 3))

    def test_rejects_rank_below_two(self):
        with pytest.raises(ValueError):
            Weight((1,))

    def test_rejects_non_integers(self):
        with pytest.raises(TypeError):
            Weight((1.0, 2))

    def test_dominance_flag(self):
        assert Weight((0, 3)).is_dominant()
        assert not Weight((0, -1)).is_dominant()


class TestPairing:
    def test_lambda0_shifted_against_alpha22(self):
        lam0 = lambda_i_weight(3, 4, 0)
        assert (lam0 + rho(4)).coords == (1, 2, 2, 1)
        assert pairing(lam0 + rho(4), Root(2, 2)) == 2  # p - 1 at p = 3

    def test_rho_against_long_root(self):
        # (rho, alpha_{j,k}^vee) = k - j + 1
        assert pairing(rho(4), Root(1, 4)) == 4

    def test_plain_coordinate_sum(self):
        lam0 = lambda_i_weight(3, 4, 0)
        assert pairing(lam0 + rho(4), Root(1, 3)) == 1 + 2 + 2

    def test_root_out_of_range(self):
        with pytest.raises(ValueError):
            pairing(rho(3), Root(2, 4))

    def test_linearity(self):
        rng = random.Random(101)
        for _ in range(200):
            d = rng.randint(2, 6)
            w = random_weight(rng, d)
            v = random_weight(rng, d)
            lo = rng.randint(1, d)
            r = Root(lo, rng.randint(lo, d))
            assert pairing(w + v, r) == pairing(w, r) + pairing(v, r)


class TestDominance:
    def test_examples(self):
        assert dominance_leq(Partition((2, 1, 1, 1)), Partition((2, 2, 1)))
        assert dominance_leq(Partition((3, 1)), Partition((3, 1)))
        assert not dominance_leq(Partition((3, 1)), Partition((2, 2)))

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            dominance_leq(Partition((2,)), Partition((2, 1)))

    def test_partial_order_up_to_size_8(self):
        for n in range(0, 9):
            ps = [Partition(t) for t in brute_partitions(n)]
            for a in ps:
                assert dominance_leq(a, a)
            for a in ps:
                for b in ps:
                    le_ab = dominance_leq(a, b)
                    assert le_ab == prefix_leq(a.parts, b.parts)
                    if le_ab and dominance_leq(b, a):
                        assert a == b
            if n <= 7:  # transitivity on the smaller sizes keeps this quick
                for a in ps:
                    below_a = [b for b in ps if dominance_leq(b, a)]
                    for b in below_a:
                        for c in ps:
                            if dominance_leq(c, b):
                                assert dominance_leq(c, a)


class TestPartitionsBelow:
    def test_examples(self):
        assert [p.parts for p in partitions_below(Partition((1, 1, 1)))] == [(1, 1, 1)]
        assert [p.parts for p in partitions_below(Partition((2, 2, 1)))] == [
            (2, 2, 1),
            (2, 1, 1, 1),
            (1, 1, 1, 1, 1),
        ]
        assert [p.parts for p in partitions_below(Partition((3, 1)))] == [
            (3, 1),
            (2, 2),
            (2, 1, 1),
            (1, 1, 1, 1),
        ]

    def test_against_brute_filter(self):
        for top in [(4, 4, 1), (5, 2), (3, 3, 3), (6,), (2, 2, 2, 1)]:
            b = Partition(top)
            expected = [t for t in brute_partitions(b.size) if prefix_leq(t, top)]
            assert [p.parts for p in partitions_below(b)] == expected

    def test_contains_extremes_and_all_dominated(self):
        for top in [(3, 1), (4, 2, 1), (2, 2, 2)]:
            b = Partition(top)
            below = partitions_below(b)
            assert below[0] == b
            assert below[-1] == Partition((1,) * b.size)
            for lam in below:
                assert dominance_leq(lam, b)

    def test_empty_partition(self):
        assert partitions_below(Partition()) == [Partition()]


class TestWeightPartitionConversion:
    def test_lambda0_lift(self):
        assert weight_to_partition(lambda_i_weight(3, 4, 0)) == Partition((2, 2, 1))

    def test_lambda2_lift(self):
        assert weight_to_partition(lambda_i_weight(5, 5, 2)) == Partition((4, 2, 1, 1, 1))

    def test_rho_lift(self):
        assert weight_to_partition(rho(2)) == Partition((2, 1))

    def test_not_dominant_rejected(self):
        # suffix sums are all nonnegative here, so this probes the
        # dominance check rather than the lift check
        with pytest.raises(ValueError):
            weight_to_partition(Weight((0, 2, -1, 1)))

    def test_negative_suffix_is_lift_error(self):
        with pytest.raises(LiftError):
            weight_to_partition(Weight((0, -1)))

    def test_lambda_i_identification(self):
        # minimal lift of lambda_i is (p-1, p-1-i, 1^(i+1))
        for p in (2, 3, 5, 7):
            d = max(3, 2 * p - 2)
            for i in range(min(d, p) - 1):
                expected = Partition([p - 1, p - 1 - i] + [1] * (i + 1))
                assert weight_to_partition(lambda_i_weight(p, d, i)) == expected

    def test_partition_to_weight_examples(self):
        assert partition_to_weight(Partition((2, 2, 1)), 4).coords == (0, 1, 1, 0)
        assert partition_to_weight(Partition((4, 1)), 5).coords == (3, 1, 0, 0, 0)
        assert partition_to_weight(Partition(), 3).coords == (0, 0, 0)

    def test_partition_to_weight_too_long(self):
        with pytest.raises(ValueError):
            partition_to_weight(Partition((1, 1, 1, 1)), 2)

    def test_round_trip(self):
        rng = random.Random(7)
        for _ in range(100):
            d = rng.randint(2, 7)
            parts = sorted((rng.randint(1, 6) for _ in range(rng.randint(0, d))), reverse=True)
            a = Partition(parts)
            assert weight_to_partition(partition_to_weight(a, d)) == a


class TestNamedWeights:
    def test_mu(self):
        assert mu_weight(4, 5, 5).coords == (5, 0, 0, -9)

    def test_pi(self):
        assert pi_weight(4, 7, 2).coords == (4, 2, 0, 0)

    def test_mu_pi_reject_negative(self):
        with pytest.raises(ValueError):
            mu_weight(4, -1, 0)
        with pytest.raises(ValueError):
            pi_weight(4, 0, -2)

    def test_lambda_f_generic(self):
        assert lambda_f_weight(5, 4, 0).coords == (0, 3, 1, 0)

    def test_lambda_f_boundary_case(self):
        # f = p-1 uses omega_4, which vanishes at d = 3
        assert lambda_f_weight(5, 5, 4).coords == (4, 0, 3, 1, 0)
        assert lambda_f_weight(5, 3, 4).coords == (4, 0, 3)

    def test_lambda_f_range(self):
        with pytest.raises(ValueError):
            lambda_f_weight(5, 4, 5)
        with pytest.raises(ValueError):
            lambda_f_weight(5, 4, -1)

    def test_lambda_i_omega_convention(self):
        assert lambda_i_weight(5, 5, 3).coords == (3, 0, 0, 0, 0)  # omega_6 = 0

    def test_lambda_i_range(self):
        with pytest.raises(ValueError):
            lambda_i_weight(5, 5, 4)
        with pytest.raises(ValueError):
            lambda_i_weight(2, 4, 1)

    def test_fundamental_weight_convention(self):
        assert fundamental_weight(3, 3).coords == (0, 0, 1)
        assert fundamental_weight(4, 3).coords == (0, 0, 0)
        with pytest.raises(ValueError):
            fundamental_weight(5, 3)

    def test_positive_roots_count(self):
        assert sum(1 for _ in positive_roots(4)) == 10
