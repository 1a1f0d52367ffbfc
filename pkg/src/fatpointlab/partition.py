"""Matroid partition algorithms and certificates.

The Edmonds-Fulkerson criterion (a ground set partitions into sets
independent in matroids M_1..M_k iff |A| <= sum_j rk_j(A) for all A) is
made constructive by the classical augmenting-path algorithm: elements are
inserted one at a time, searching breadth-first through exchange moves.
If the search is exhausted, the set of reached elements is a violating
subset, returned as an explicit infeasibility witness.

Determinism: elements are inserted in ascending id order; the BFS explores
blocks and eviction candidates in ascending order, so augmenting paths are
shortest and lexicographically smallest.  This makes the prefix-stability
contract of avoidance partitions testable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .constructions import (
    count_matroid,
    elementary_quotient,
    parallel_extension_quotient,
    verify_count_hypothesis,
    HYPOTHESIS_CHECK_GUARD,
)
from .matroid import independent_sets

BRUTE_FORCE_GROUND_GUARD = 12
BRUTE_FORCE_BLOCK_GUARD = 4


@dataclass
class PartitionCertificate:
    """A partition E = I_1 | ... | I_k plus everything needed to re-check it."""

    blocks: tuple
    matroids: list
    ground: frozenset
    ambient: object = None
    avoidance: tuple = ()

    def verify(self):
        seen = set()
        for block in self.blocks:
            if block & seen:
                return False
            seen |= block
        if frozenset(seen) != self.ground:
            return False
        for block, oracle in zip(self.blocks, self.matroids):
            if not oracle.is_independent(block):
                return False
        ambient = self.ambient
        for elem, j in self.avoidance:
            block = self.blocks[j]
            if ambient.rank(block | {elem}) != ambient.rank(block) + 1:
                return False
        return True

    def to_dict(self):
        return {
            "blocks": [sorted(b) for b in self.blocks],
            "avoidance": [{"element": e, "block": j} for e, j in self.avoidance],
        }


@dataclass
class InfeasibilityWitness:
    """A subset A with |A| > sum_j rk_j(A), certifying no partition exists."""

    subset: frozenset
    size: int
    rank_sum: int

    def verify(self, matroids):
        return self.size == len(self.subset) and self.size > sum(
            m.rank(self.subset) for m in matroids
        )

    def to_dict(self):
        return {"subset": sorted(self.subset), "size": self.size, "rank_sum": self.rank_sum}


def _augment(matroids, blocks, assignment, new_elem):
    """Try to place new_elem via a shortest augmenting path of exchanges.

    Returns True on success (blocks/assignment updated); on failure the
    reached set A satisfies |A| = 1 + sum_j |I_j  cap A| with each I_j cap A
    spanning A in M_j, so A violates the partition criterion.
    """
    k = len(matroids)
    parent = {new_elem: None}
    queue = [new_elem]
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        for j in range(k):
            if assignment.get(x) == j:
                continue
            block = blocks[j]
            if matroids[j].is_independent(block | {x}):
                # free insertion: unwind the exchange chain back to the root
                cur, jcur = x, j
                while True:
                    old = assignment.get(cur)
                    blocks[jcur] = blocks[jcur] | {cur}
                    assignment[cur] = jcur
                    link = parent[cur]
                    if link is None:
                        break
                    prev, jprev = link
                    assert jprev == old
                    blocks[jprev] = blocks[jprev] - {cur}
                    cur, jcur = prev, jprev
                return True
            for y in sorted(block):
                if y in parent:
                    continue
                if matroids[j].is_independent((block | {x}) - {y}):
                    parent[y] = (x, j)
                    queue.append(y)
    return False


def edmonds_fulkerson_partition(matroids, ambient=None):
    """Partition the common ground set into blocks independent per matroid,
    or return an InfeasibilityWitness."""
    if not matroids:
        raise ValueError("need at least one matroid")
    ground = frozenset(matroids[0].elements)
    for m in matroids[1:]:
        if frozenset(m.elements) != ground:
            raise ValueError("matroids must share a ground set")
    blocks = [frozenset() for _ in matroids]
    assignment = {}
    for e in sorted(ground):
        if not _augment(matroids, blocks, assignment, e):
            reached = frozenset(_reached(matroids, blocks, assignment, e))
            witness = InfeasibilityWitness(
                reached, len(reached), sum(m.rank(reached) for m in matroids)
            )
            assert witness.verify(matroids), "internal error: bad infeasibility witness"
            return witness
    cert = PartitionCertificate(tuple(blocks), list(matroids), ground, ambient=ambient)
    assert cert.verify(), "internal error: augmenting path produced an invalid partition"
    return cert


def _reached(matroids, blocks, assignment, new_elem):
    parent = {new_elem: None}
    queue = [new_elem]
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        for j, m in enumerate(matroids):
            if assignment.get(x) == j:
                continue
            for y in sorted(blocks[j]):
                if y not in parent and m.is_independent((blocks[j] | {x}) - {y}):
                    parent[y] = (x, j)
                    queue.append(y)
    return parent.keys()


def edmonds_partition(m, k, ambient=None):
    """Partition into k sets independent in a single matroid."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return edmonds_fulkerson_partition([m] * k, ambient=ambient)


def inductive_split(ambient, ground, pivot, k, p, check_hypothesis=True):
    """Split ground = I | J with I independent, pivot outside cl(I), and
    |B| <= k*rk(B) - p for every nonempty B of J.

    Precondition: |A| <= (k+1)*rk(A) - (p+1) for all nonempty A of ground.
    Implemented per the two-matroid route: the quotient by the pivot
    (elementary if the pivot is outside ground, through a parallel
    extension otherwise) paired with the count matroid M_{k,p}.
    """
    ground = frozenset(ground)
    if not ground:
        raise ValueError("ground must be nonempty")
    if check_hypothesis and len(ground) <= HYPOTHESIS_CHECK_GUARD:
        bad = verify_count_hypothesis(ambient, k + 1, p + 1, ground=ground)
        if bad is not None:
            raise ValueError(
                "hypothesis |A| <= (k+1)rk(A)-(p+1) fails on %r" % (sorted(bad),)
            )
    base = ambient.restrict(ground)
    if pivot in ground:
        quotient = parallel_extension_quotient(base, pivot)
    else:
        quotient = elementary_quotient(ambient, ground, pivot)
    counting = count_matroid(base, k, p)
    result = edmonds_fulkerson_partition([quotient, counting])
    if isinstance(result, InfeasibilityWitness):
        raise AssertionError(
            "internal error: two-matroid partition infeasible despite hypothesis; "
            "witness %r" % (sorted(result.subset),)
        )
    return result.blocks[0], result.blocks[1]


@dataclass
class AvoidanceProblem:
    ambient: object
    ground: frozenset
    k: int
    p: int
    pinned: tuple = ()
    tail: tuple = ()
    trust_hypothesis: bool = False

    def __post_init__(self):
        self.ground = frozenset(self.ground)
        self.pinned = tuple(self.pinned)
        self.tail = tuple(self.tail)
        if len(self.pinned) + len(self.tail) != self.p:
            raise ValueError("pinned prefix plus tail must have length p")


def avoidance_partition(problem):
    """The main avoidance partition: E = I_1 | ... | I_k, all blocks
    independent, a_j outside cl(I_j) for j <= p.

    The first q = len(pinned) blocks depend only on the pinned prefix
    (prefix stability), because each block is produced by a deterministic
    inductive split that never looks at later tuple entries.
    """
    ambient, ground, k, p = problem.ambient, problem.ground, problem.k, problem.p
    targets = problem.pinned + problem.tail
    if not problem.trust_hypothesis:
        if len(ground) > HYPOTHESIS_CHECK_GUARD:
            raise ValueError(
                "ground set too large for exhaustive hypothesis check; "
                "set trust_hypothesis to accept it on faith"
            )
        bad = verify_count_hypothesis(ambient, k, p, ground=ground)
        if bad is not None:
            raise ValueError("hypothesis |A| <= k*rk(A)-p fails on %r" % (sorted(bad),))
    blocks = []
    remaining = ground
    for j in range(p):
        if not remaining:
            blocks.append(frozenset())
            continue
        block, remaining = inductive_split(
            ambient, remaining, targets[j], k - 1 - j, p - 1 - j, check_hypothesis=False
        )
        blocks.append(block)
    if remaining:
        tail_part = edmonds_partition(ambient.restrict(remaining), k - p)
        if isinstance(tail_part, InfeasibilityWitness):
            raise AssertionError("internal error: residual partition infeasible")
        blocks.extend(tail_part.blocks)
    else:
        blocks.extend(frozenset() for _ in range(k - p))
    cert = PartitionCertificate(
        tuple(blocks),
        [ambient] * k,
        ground,
        ambient=ambient,
        avoidance=tuple((targets[j], j) for j in range(p)),
    )
    assert cert.verify(), "internal error: avoidance partition failed verification"
    return cert


def brute_force_partition_oracle(matroids):
    """Exhaustive test oracle: does an assignment into independent blocks
    exist?  Exponential; guarded to desk scale."""
    ground = sorted(matroids[0].elements)
    k = len(matroids)
    if len(ground) > BRUTE_FORCE_GROUND_GUARD or k > BRUTE_FORCE_BLOCK_GUARD:
        raise ValueError("instance too large for brute-force enumeration")

    def place(i, blocks):
        if i == len(ground):
            return True
        e = ground[i]
        for j in range(k):
            cand = blocks[j] | {e}
            if matroids[j].is_independent(cand):
                blocks[j] = cand
                if place(i + 1, blocks):
                    return True
                blocks[j] = cand - {e}
        return False

    return place(0, [frozenset() for _ in range(k)])


@dataclass
class OptimalityExampleVerdict:
    hypothesis_holds: bool
    qualifying_set: frozenset = None
    ground_size: int = 0
    rank: int = 0

    @property
    def confirmed(self):
        return self.hypothesis_holds and self.qualifying_set is None


def verify_partition_optimality_example(t, k, p, seed=0):
    """Concrete family showing the avoidance theorem's conclusion cannot be
    strengthened to a single universal independent set.

    Builds t generic lines through the origin of a rank t-1 space with
    k-p (parallel) vectors on each, checks |A| <= k*rk(A)-p exhaustively,
    and confirms by exhaustive search that no independent I with at most
    t-2 elements leaves a remainder with |B| <= (k-1)*rk(B)-p throughout.
    """
    from .generators import generic_line_configuration

    if not (k > p > 0):
        raise ValueError("requires k > p > 0")
    if t > 5:
        raise ValueError("t too large for exhaustive verification")
    if t * p < k + p:  # t >= k/p + 1 without rational arithmetic
        raise ValueError("t too small for example hypothesis")
    m = generic_line_configuration(t, k - p, seed=seed)
    bad = verify_count_hypothesis(m, k, p)
    if bad is not None:
        return OptimalityExampleVerdict(False, ground_size=len(m), rank=m.full_rank())
    elems = frozenset(m.elements)
    for indep in independent_sets(m):
        if not indep or len(indep) > t - 2:
            continue
        rest = sorted(elems - indep)
        ok = True
        for size in range(1, len(rest) + 1):
            for combo in combinations(rest, size):
                if size > (k - 1) * m.rank(frozenset(combo)) - p:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return OptimalityExampleVerdict(True, qualifying_set=indep,
                                            ground_size=len(m), rank=m.full_rank())
    return OptimalityExampleVerdict(True, ground_size=len(m), rank=m.full_rank())
