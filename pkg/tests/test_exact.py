import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fatpointlab.exact import ExactMatrix, ScalarField, is_prime

QQ = ScalarField.rational()
FP = ScalarField.prime(10007)


def naive_det(rows):
    if len(rows) == 1:
        return rows[0][0]
    total = Fraction(0)
    for j in range(len(rows)):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        sign = -1 if j % 2 else 1
        total += sign * rows[0][j] * naive_det(minor)
    return total


def minor_rank(m):
    """Independent oracle: largest size of a nonzero square minor."""
    entries = [[Fraction(x) for x in row] for row in m.entries]
    best = 0
    for size in range(1, min(m.nrows, m.ncols) + 1):
        for rsel in combinations(range(m.nrows), size):
            for csel in combinations(range(m.ncols), size):
                sub = [[entries[i][j] for j in csel] for i in rsel]
                if naive_det(sub) != 0:
                    best = size
                    break
            else:
                continue
            break
    return best


class TestScalarField:
    def test_prime_rejects_composite(self):
        with pytest.raises(ValueError):
            ScalarField.prime(10)

    def test_is_prime(self):
        assert is_prime(2) and is_prime(10007) and is_prime(2**31 - 1)
        assert not is_prime(1) and not is_prime(561)

    def test_parse_fraction_string(self):
        assert QQ.elem("2/3") == Fraction(2, 3)
        assert FP.elem("2/3") == 2 * pow(3, -1, 10007) % 10007

    def test_prime_arithmetic(self):
        f = ScalarField.prime(7)
        assert f.add(5, 4) == 2
        assert f.mul(3, 5) == 1
        assert f.inv(3) == 5


class TestRank:
    def test_identity(self):
        assert ExactMatrix(QQ, [[1, 0], [0, 1]]).rank() == 2

    def test_zero(self):
        assert ExactMatrix(QQ, [[0] * 4 for _ in range(3)]).rank() == 0

    def test_hand_eliminated(self):
        assert ExactMatrix(QQ, [[1, 0, 1], [0, 1, 1]]).rank() == 2

    def test_rational_entries(self):
        m = ExactMatrix(QQ, [["1/2", "1/3"], ["1", "1"]])
        assert m.rank() == 2
        singular = ExactMatrix(QQ, [["1/2", "1/3"], ["3/2", "1"]])
        assert singular.rank() == 1

    @pytest.mark.parametrize("field", [QQ, FP])
    def test_agrees_with_minor_search(self, field):
        rng = random.Random(5)
        for _ in range(30):
            nr, nc = rng.randint(1, 4), rng.randint(1, 4)
            raw = [[rng.randint(-3, 3) for _ in range(nc)] for _ in range(nr)]
            m = ExactMatrix(field, raw)
            assert m.rank() == minor_rank(ExactMatrix(QQ, raw))

    def test_transpose_invariance(self):
        rng = random.Random(6)
        for _ in range(20):
            raw = [[rng.randint(-4, 4) for _ in range(rng.randint(1, 5))]]
            raw = [[rng.randint(-4, 4) for _ in range(5)] for _ in range(3)]
            m = ExactMatrix(QQ, raw)
            assert m.rank() == m.transpose().rank()

    def test_row_permutation_and_scaling_invariance(self):
        rng = random.Random(7)
        for _ in range(20):
            raw = [[rng.randint(-5, 5) for _ in range(4)] for _ in range(4)]
            m = ExactMatrix(QQ, raw)
            perm = list(range(4))
            rng.shuffle(perm)
            factors = [Fraction(rng.choice([1, 2, -3])) for _ in perm]
            scaled = [[factors[i] * x for x in raw[i]] for i in perm]
            assert ExactMatrix(QQ, scaled).rank() == m.rank()


class TestKernel:
    def test_identity_trivial_kernel(self):
        assert ExactMatrix(QQ, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]).kernel_basis() == []

    def test_zero_row(self):
        basis = ExactMatrix(QQ, [[0, 0]]).kernel_basis()
        assert len(basis) == 2

    def test_proportional(self):
        (v,) = ExactMatrix(QQ, [[1, 1]]).kernel_basis()
        assert v[0] * -1 == v[1] * 1 and v != (0, 0)

    @given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=1, max_size=4))
    @settings(max_examples=60, deadline=None)
    def test_kernel_vectors_annihilate(self, raw):
        m = ExactMatrix(QQ, raw)
        basis = m.kernel_basis()
        assert len(basis) == m.ncols - m.rank()
        for v in basis:
            assert all(x == 0 for x in m.mul_vector(v))

    def test_prime_field_kernel(self):
        m = ExactMatrix(FP, [[1, 1, 0], [0, 1, 1]])
        basis = m.kernel_basis()
        assert len(basis) == 1
        assert all(x == 0 for x in m.mul_vector(basis[0]))


class TestColumnSubset:
    def test_empty(self):
        assert ExactMatrix(QQ, [[1, 2], [3, 4]]).rank_of_column_subset([]) == 0

    def test_parallel_columns(self):
        m = ExactMatrix.from_columns(QQ, [(1, 2), (2, 4), (3, 6)])
        assert m.rank_of_column_subset([0, 1, 2]) == 1

    def test_standard_basis_pair(self):
        m = ExactMatrix(QQ, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        assert m.rank_of_column_subset([0, 2]) == 2

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            ExactMatrix(QQ, [[1]]).rank_of_column_subset([3])


def test_rank_plus_kernel_dimension():
    rng = random.Random(8)
    for _ in range(25):
        nr, nc = rng.randint(1, 5), rng.randint(1, 5)
        m = ExactMatrix(QQ, [[rng.randint(-3, 3) for _ in range(nc)] for _ in range(nr)])
        assert m.rank() + len(m.kernel_basis()) == nc
