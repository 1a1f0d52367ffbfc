import random

import pytest

from fatpointlab.exact import ExactMatrix, ScalarField
from fatpointlab.generators import random_vector_matroid, rng_from_seed
from fatpointlab.matroid import (
    RankOracle,
    VectorMatroid,
    check_rank_axioms,
    circuits,
    fat_point_vector_matroid,
    flats_spanned_by_subsets,
    independent_sets,
)
from fatpointlab.schemes import FatPointScheme

QQ = ScalarField.rational()
FP = ScalarField.prime(10007)


def vm(field, cols):
    return VectorMatroid(ExactMatrix.from_columns(field, cols))


class TestIndependenceAndClosure:
    def test_standard_basis_independent(self):
        m = vm(QQ, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
        assert m.is_independent({0, 1, 2})

    def test_dependent_sum(self):
        m = vm(QQ, [(1, 0), (0, 1), (1, 1)])
        assert not m.is_independent({0, 1, 2})
        assert m.is_independent({0, 2})

    def test_closure_of_plane(self):
        # e1, e2, e1+e2, e3: the closure of {e1, e2} picks up e1+e2 only
        m = vm(QQ, [(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)])
        assert m.closure({0, 1}) == frozenset({0, 1, 2})
        assert m.closure({0, 1, 2, 3}) == frozenset({0, 1, 2, 3})

    def test_closure_extensive_idempotent_monotone(self):
        rng = rng_from_seed(11)
        for _ in range(20):
            m = random_vector_matroid(rng, 3, 6)
            sub = frozenset(e for e in m.elements if rng.random() < 0.5)
            cl = m.closure(sub)
            assert sub <= cl
            assert m.closure(cl) == cl
            assert m.rank(cl) == m.rank(sub)
            bigger = sub | {rng.choice(m.elements)}
            assert m.closure(sub) <= m.closure(bigger) or not sub <= bigger

    def test_subset_outside_ground_rejected(self):
        m = vm(QQ, [(1, 0)])
        with pytest.raises(ValueError):
            m.rank({5})


class TestCircuits:
    def test_free_matroid_no_circuits(self):
        assert circuits(vm(QQ, [(1, 0), (0, 1)])) == []

    def test_parallel_pair(self):
        m = vm(QQ, [(1, 2), (2, 4), (0, 1)])
        assert circuits(m) == [frozenset({0, 1})]

    def test_four_generic_in_rank_three(self):
        m = vm(QQ, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])
        assert circuits(m) == [frozenset({0, 1, 2, 3})]

    def test_loop_is_a_circuit(self):
        m = vm(QQ, [(0, 0), (1, 0)])
        assert circuits(m) == [frozenset({0})]

    def test_guard(self):
        m = RankOracle(range(25), lambda fs: min(len(fs), 3))
        with pytest.raises(ValueError):
            circuits(m)


class TestFlats:
    def test_three_independent_columns_min_rank_two(self):
        m = vm(QQ, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
        flats = flats_spanned_by_subsets(m, min_rank=2)
        assert flats == [
            frozenset({0, 1}),
            frozenset({0, 2}),
            frozenset({1, 2}),
            frozenset({0, 1, 2}),
        ]

    def test_rank_one_matroid_has_no_rank_two_flats(self):
        m = vm(QQ, [(1, 1)] * 5)
        assert flats_spanned_by_subsets(m, min_rank=2) == []

    def test_min_rank_zero_includes_loops_closure(self):
        m = vm(QQ, [(1, 0), (0, 1)])
        flats = flats_spanned_by_subsets(m)
        assert frozenset() in flats and frozenset({0, 1}) in flats

    def test_guard(self):
        m = RankOracle(range(25), lambda fs: min(len(fs), 2))
        with pytest.raises(ValueError):
            flats_spanned_by_subsets(m)


class TestIndependentSets:
    def test_counts_uniform(self):
        # U_{2,3}: 1 empty + 3 singletons + 3 pairs
        m = vm(QQ, [(1, 0), (0, 1), (1, 1)])
        assert len(independent_sets(m)) == 7


class TestFatPointMatroid:
    def scheme(self):
        return FatPointScheme(QQ, 2, [((1, 0, 0), 2), ((0, 1, 0), 1), ((1, 1, 1), 3)])

    def test_ground_size_and_rank(self):
        m = fat_point_vector_matroid(self.scheme())
        assert len(m) == 6
        assert m.full_rank() == 3

    def test_labels_and_parallel_copies(self):
        m = fat_point_vector_matroid(self.scheme())
        assert m.labels[0] == (0, 0) and m.labels[1] == (0, 1)
        assert m.rank({0, 1}) == 1  # copies of the same point are parallel
        assert m.rank({0, 2}) == 2

    def test_rank_vs_projective_span(self):
        # rank of a subset = 1 + projective dimension of the span
        x = self.scheme()
        m = fat_point_vector_matroid(x)
        matrix = ExactMatrix.from_columns(QQ, [c for c, _ in x.points])
        for sub, pts in [({0, 3}, [0, 2]), ({0, 2, 3}, [0, 1, 2]), ({0, 1}, [0])]:
            assert m.rank(sub) == matrix.rank_of_column_subset(pts)


class TestAxioms:
    @pytest.mark.parametrize("field", [QQ, FP])
    def test_random_vector_matroids(self, field):
        rng = rng_from_seed(12)
        for _ in range(15):
            m = random_vector_matroid(rng, rng.randint(2, 4), rng.randint(2, 8), field=field)
            ok, why = check_rank_axioms(m)
            assert ok, why

    def test_detects_broken_oracle(self):
        bad = RankOracle(range(3), lambda fs: len(fs) % 2)  # not monotone
        ok, why = check_rank_axioms(bad)
        assert not ok

    def test_guard(self):
        m = RankOracle(range(11), len)
        with pytest.raises(ValueError):
            check_rank_axioms(m)


def test_rescaled_representatives_same_matroid():
    rng = random.Random(13)
    for _ in range(10):
        cols = [tuple(rng.randint(-4, 4) for _ in range(3)) for _ in range(5)]
        cols = [c if any(c) else (1, 0, 0) for c in cols]
        scales = [rng.choice([1, 2, -5]) for _ in cols]
        scaled = [tuple(s * x for x in c) for s, c in zip(scales, cols)]
        m1, m2 = vm(QQ, cols), vm(QQ, scaled)
        for mask in range(1 << 5):
            sub = {i for i in range(5) if mask >> i & 1}
            assert m1.rank(sub) == m2.rank(sub)


def test_max_independent_subset_is_a_basis():
    rng = rng_from_seed(14)
    for _ in range(15):
        m = random_vector_matroid(rng, 3, 7)
        basis = m.max_independent_subset()
        assert m.is_independent(basis)
        assert len(basis) == m.full_rank()
