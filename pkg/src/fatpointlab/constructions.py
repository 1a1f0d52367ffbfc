"""Derived matroids: count matroids, elementary quotients, parallel extensions.

The count matroid M(f) attached to a base matroid and integers k > p >= 0
has as circuits the minimal nonempty sets C with |C| > k*rk(C) - p.  A set
J is therefore independent iff |A| <= k*rk(A) - p for EVERY nonempty
A subseteq J (checking J alone is not sufficient in general: J can satisfy
the inequality while containing a violating subset).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .matroid import RankOracle

HYPOTHESIS_CHECK_GUARD = 16


class CountMatroid(RankOracle):
    """The matroid M(f) with f(A) = k*rk_base(A) - p, for k > p >= 0."""

    def __init__(self, base, k, p):
        if k <= p:
            raise ValueError("count matroid undefined: requires k > p")
        self.base = base
        self.k = k
        self.p = p
        self._indep_cache = {frozenset(): True}
        super().__init__(base.elements, self._rank_greedy, labels=base.labels)

    def _is_f_independent(self, fs):
        cached = self._indep_cache.get(fs)
        if cached is not None:
            return cached
        k, p = self.k, self.p
        ok = True
        elems = sorted(fs)
        for size in range(1, len(elems) + 1):
            for combo in combinations(elems, size):
                if size > k * self.base.rank(frozenset(combo)) - p:
                    ok = False
                    break
            if not ok:
                break
        self._indep_cache[fs] = ok
        return ok

    def _rank_greedy(self, fs):
        # greedy is valid by the matroid exchange property
        current = frozenset()
        for e in sorted(fs):
            cand = current | {e}
            if self._is_f_independent(cand):
                current = cand
        return len(current)

    def is_independent(self, subset):
        fs = self._check(subset)
        return self._is_f_independent(fs)


def count_matroid(base, k, p):
    return CountMatroid(base, k, p)


@dataclass
class RankBoundVerdict:
    holds: bool
    count_rank: int
    bound: int
    witness: frozenset


def verify_count_hypothesis(base, k_plus, p_plus, ground=None):
    """Check |A| <= k_plus*rk(A) - p_plus for every nonempty A; returns a
    violating subset or None.  Exhaustive, so guarded."""
    elems = sorted(ground) if ground is not None else list(base.elements)
    if len(elems) > HYPOTHESIS_CHECK_GUARD:
        raise ValueError("ground set too large for exhaustive hypothesis check")
    for size in range(1, len(elems) + 1):
        for combo in combinations(elems, size):
            fs = frozenset(combo)
            if size > k_plus * base.rank(fs) - p_plus:
                return fs
    return None


def count_matroid_rank_lower_bound_check(base, k, p):
    """Verify rk_{M(f)}(E) >= |E| - rk(E) + 1 under the strengthened
    hypothesis |A| <= (k+1)*rk(A) - (p+1)."""
    bad = verify_count_hypothesis(base, k + 1, p + 1)
    if bad is not None:
        raise ValueError("hypothesis |A| <= (k+1)rk(A)-(p+1) fails on %r" % (sorted(bad),))
    cm = count_matroid(base, k, p)
    witness = cm.max_independent_subset()
    count_rank = len(witness)
    bound = len(base.elements) - base.full_rank() + 1
    return RankBoundVerdict(count_rank >= bound, count_rank, bound, witness)


def elementary_quotient(ambient, ground, pivot):
    """The matroid M/e on `ground` with rk(A) = rk_ambient(A + pivot) - 1."""
    ground = frozenset(ground)
    if pivot not in ambient._element_set:
        raise ValueError("pivot not in ambient ground set")
    if pivot in ground:
        raise ValueError("pivot must lie outside the restricted ground set")
    if not ground <= ambient._element_set:
        raise ValueError("ground not contained in ambient ground set")

    def rank_fn(fs):
        return ambient.rank(fs | {pivot}) - 1

    return RankOracle(ground, rank_fn, labels={e: ambient.labels[e] for e in ground if e in ambient.labels})


def parallel_extension(base, duplicated):
    """The parallel extension M_{+S}: tagged copies of S added in parallel.

    Copies get fresh ids above max(base ids); `copy_of` maps each copy id
    back to the duplicated base element.
    """
    duplicated = sorted(frozenset(duplicated))
    if not frozenset(duplicated) <= base._element_set:
        raise ValueError("duplicated set not contained in ground set")
    offset = (max(base.elements) + 1) if base.elements else 0
    copy_of = {offset + i: e for i, e in enumerate(duplicated)}
    elements = list(base.elements) + list(copy_of)

    def rank_fn(fs):
        projected = frozenset(copy_of.get(e, e) for e in fs)
        return base.rank(projected)

    oracle = RankOracle(elements, rank_fn, labels=dict(base.labels))
    oracle.copy_of = dict(copy_of)
    return oracle


def parallel_extension_quotient(base, e):
    """The composite M_{+e}/e on the base ground: rk(A) = rk_base(A + e) - 1.

    Used when the avoided element already lies in the ground set; elements
    parallel to e (including e itself) become loops.
    """
    if e not in base._element_set:
        raise ValueError("element not in ground set")

    def rank_fn(fs):
        return base.rank(fs | {e}) - 1

    return RankOracle(base.elements, rank_fn, labels=dict(base.labels))
