"""Seeded, reproducible instance generators.

All randomness flows through ``random.Random(seed)``; genericity is never
assumed, it is certified post hoc by exact rank checks, with a bounded
number of resampling attempts.
"""

from __future__ import annotations

import random
from itertools import combinations

from .exact import ExactMatrix, ScalarField
from .matroid import VectorMatroid
from .schemes import FatPointScheme, monomials

MAX_RESAMPLE_ATTEMPTS = 200


def rng_from_seed(seed):
    return random.Random(seed)


def _proportional(field, a, b):
    n = len(a)
    for i in range(n):
        for j in range(i + 1, n):
            if field.mul(a[i], b[j]) != field.mul(a[j], b[i]):
                return False
    return True


def random_points(rng, n, s, coord_range=9, field=None):
    """s pairwise distinct projective points with small integer coordinates."""
    field = field or ScalarField.rational()
    points = []
    attempts = 0
    while len(points) < s:
        attempts += 1
        if attempts > 100 * s + MAX_RESAMPLE_ATTEMPTS:
            raise RuntimeError("failed to sample distinct points")
        cand = tuple(field.elem(rng.randint(0, coord_range)) for _ in range(n + 1))
        if all(c == field.zero() for c in cand):
            continue
        if any(_proportional(field, cand, q) for q in points):
            continue
        points.append(cand)
    return points


def generic_points(rng, n, s, coord_range=9, field=None):
    """Points certified to be in linearly general position: every subset of
    at most n+1 points spans a subspace of maximal dimension."""
    field = field or ScalarField.rational()
    for _ in range(MAX_RESAMPLE_ATTEMPTS):
        pts = random_points(rng, n, s, coord_range=coord_range, field=field)
        matrix = ExactMatrix.from_columns(field, pts)
        ok = True
        for size in range(2, min(s, n + 1) + 1):
            for combo in combinations(range(s), size):
                if matrix.rank_of_column_subset(combo) != size:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return pts
    raise RuntimeError("could not certify linearly general position after retries")


def random_scheme(rng, n, max_points, max_mult, field=None):
    """A random fat point scheme with 1..max_points points, mults 1..max_mult."""
    field = field or ScalarField.rational()
    s = rng.randint(1, max_points)
    pts = random_points(rng, n, s, field=field)
    return FatPointScheme(field, n, [(p, rng.randint(1, max_mult)) for p in pts])


def collinear_points(n, s, field=None):
    """s simple points (1 : t : 0 : ... : 0), t = 0..s-1, on a line."""
    field = field or ScalarField.rational()
    pts = []
    for t in range(s):
        coords = [field.elem(1), field.elem(t)] + [field.zero()] * (n - 1)
        pts.append(tuple(coords))
    return pts


def rational_normal_curve_points(n, s, field=None):
    """s points (1 : t : ... : t^n), t = 0..s-1, on the rational normal curve."""
    field = field or ScalarField.rational()
    pts = []
    for t in range(s):
        te = field.elem(t)
        coords = [field.one()]
        for _ in range(n):
            coords.append(field.mul(coords[-1], te))
        pts.append(tuple(coords))
    return pts


def rational_normal_curve_scheme(n, mults, field=None):
    field = field or ScalarField.rational()
    pts = rational_normal_curve_points(n, len(mults), field=field)
    return FatPointScheme(field, n, list(zip(pts, mults)))


def generic_line_configuration(t, copies_per_line, seed=0, field=None):
    """t generic one-dimensional subspaces of a rank t-1 space, each carrying
    copies_per_line parallel vectors; returns the vector matroid.

    Genericity is certified: every subset of at most t-1 of the line
    directions is linearly independent.
    """
    field = field or ScalarField.rational()
    rng = rng_from_seed(seed)
    dim = t - 1
    for _ in range(MAX_RESAMPLE_ATTEMPTS):
        dirs = [tuple(field.elem(rng.randint(1, 50)) for _ in range(dim)) for _ in range(t)]
        matrix = ExactMatrix.from_columns(field, dirs)
        if all(
            matrix.rank_of_column_subset(c) == size
            for size in range(1, min(t, dim) + 1)
            for c in combinations(range(t), size)
        ):
            break
    else:
        raise RuntimeError("could not certify generic line directions after retries")
    columns = []
    labels = {}
    for i, v in enumerate(dirs):
        for j in range(copies_per_line):
            scale = field.elem(j + 1)
            labels[len(columns)] = ("line %d" % i, j)
            columns.append(tuple(field.mul(scale, c) for c in v))
    return VectorMatroid(ExactMatrix.from_columns(field, columns), labels=labels)


def generic_vectors_matroid(rng, dim, count, field=None, coord_range=50):
    """count vectors in rank dim, certified that every subset of at most dim
    vectors is independent."""
    field = field or ScalarField.rational()
    for _ in range(MAX_RESAMPLE_ATTEMPTS):
        cols = [tuple(field.elem(rng.randint(1, coord_range)) for _ in range(dim)) for _ in range(count)]
        matrix = ExactMatrix.from_columns(field, cols)
        if all(
            matrix.rank_of_column_subset(c) == size
            for size in range(1, dim + 1)
            for c in combinations(range(count), size)
        ):
            return VectorMatroid(matrix)
    raise RuntimeError("could not certify generic vectors after retries")


def random_vector_matroid(rng, dim, count, field=None, coord_range=4):
    """An arbitrary (possibly degenerate) vector matroid for stress tests.
    Zero columns are allowed; they become loops."""
    field = field or ScalarField.rational()
    cols = [tuple(field.elem(rng.randint(0, coord_range)) for _ in range(dim)) for _ in range(count)]
    if all(all(c == field.zero() for c in col) for col in cols):
        cols[0] = tuple([field.one()] + [field.zero()] * (dim - 1))
    return VectorMatroid(ExactMatrix.from_columns(field, cols))


def five_plus_generic_scheme(rng, n, d, m, field=None):
    """Support = five fixed points plus binom(d+n, n) certified-generic
    points, every point with multiplicity m."""
    field = field or ScalarField.rational()
    fixed = [
        (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3),
    ]
    if n != 2:
        fixed = [tuple(list(p) + [0] * (n - 2)) for p in fixed]
    fixed = [tuple(field.elem(c) for c in p) for p in fixed]
    extra = len(monomials(n, d))
    for _ in range(MAX_RESAMPLE_ATTEMPTS):
        gen = generic_points(rng, n, extra, field=field)
        all_pts = fixed + gen
        if all(
            not _proportional(field, a, b)
            for i, a in enumerate(all_pts)
            for b in all_pts[i + 1:]
        ):
            return FatPointScheme(field, n, [(p, m) for p in all_pts])
    raise RuntimeError("could not place generic points distinct from the fixed five")
