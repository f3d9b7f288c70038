"""End-to-end detection of super-spanned subspaces.

enumerate_exceptional walks every strictly increasing (r+1)-tuple of
iterate indices up to a bound M, discards tuples whose iterate matrix is
certified full-rank by the modular filter, confirms the survivors with
exact super-rank checks, groups the confirmed tuples by the canonical
form of their span, and counts how many orbit points up to M each
resulting subspace contains.

Finiteness of the set of such subspaces comes with no effective bound
on the largest iterate index involved, so results are always reported
relative to the explicit bound M; tuples skipped because exact
materialization would blow the exponent budget are listed in the
diagnostics rather than silently dropped.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import List, Optional, Sequence

from . import subsum
from .errors import ExponentBudgetExceeded, Unsupported, ZeroCoordinate
from .field import is_prime
from .linalg import Subspace, modular_rank_filter, span_canonical, super_rank
from .orbit import ProjPoint, iterate, iterate_matrix, subspace_membership

DEFAULT_FILTER_PRIME_COUNT = 3
DEFAULT_SEED = 0


def filter_primes(count: int = DEFAULT_FILTER_PRIME_COUNT,
                  seed: int = DEFAULT_SEED) -> List[int]:
    """Deterministic pseudo-random 30-bit primes for the modular filter."""
    rng = random.Random(seed)
    primes = []
    while len(primes) < count:
        candidate = rng.randrange(1 << 29, 1 << 30) | 1
        if is_prime(candidate) and candidate not in primes:
            primes.append(candidate)
    return primes


@dataclass(frozen=True)
class SubspaceRecord:
    subspace: Subspace
    preimage: tuple            # the tuples m with span L_m equal to this subspace
    intersection_count: int    # orbit points among iterates 0..M lying on it


@dataclass(frozen=True)
class ExceptionalReport:
    point: ProjPoint
    d: int
    r: int
    max_iter: int
    tuples: tuple              # all confirmed tuples, lexicographic
    subspaces: tuple           # SubspaceRecord, ordered by least preimage tuple
    diagnostics: dict = dc_field(default_factory=dict)

    def semantic_content(self):
        """Everything except run diagnostics; used to compare filtered
        and unfiltered runs."""
        return (self.tuples,
                tuple((rec.subspace.key(), rec.preimage, rec.intersection_count)
                      for rec in self.subspaces))


def intersection_count(P: ProjPoint, d: int, L: Subspace, max_iter: int,
                       budget: Optional[int] = None) -> int:
    """Number of iterate indices 0 <= m <= max_iter with the iterate on L."""
    count = 0
    for m in range(max_iter + 1):
        if subspace_membership(iterate(P, d, m, budget), L):
            count += 1
    return count


def enumerate_exceptional(P: ProjPoint, d: int, r: int, max_iter: int,
                          use_filter: bool = True,
                          primes: Optional[Sequence[int]] = None,
                          prime_count: int = DEFAULT_FILTER_PRIME_COUNT,
                          seed: int = DEFAULT_SEED,
                          budget: Optional[int] = None) -> ExceptionalReport:
    """Detect every subspace super-spanned by iterates with indices <= M."""
    n = P.dim
    if r == 0:
        raise Unsupported("r = 0 is not defined for super-spanning")
    if not 1 <= r <= n:
        raise Unsupported(f"r = {r} outside 1..{n}")
    if P.has_zero_coordinate():
        raise ZeroCoordinate("detection needs all coordinates nonzero")
    if max_iter < r:
        raise ValueError(f"iterate bound {max_iter} cannot host an (r+1)-tuple")
    if use_filter and primes is None:
        primes = filter_primes(prime_count, seed)

    confirmed: List[tuple] = []
    matrices = {}
    skipped = []
    filtered_out = 0
    exact_checked = 0
    for m in combinations(range(max_iter + 1), r + 1):
        if use_filter:
            verdict = modular_rank_filter(P, d, m, r, primes)
            if verdict.certified:
                filtered_out += 1
                continue
        exact_checked += 1
        try:
            A = iterate_matrix(P, d, m, budget)
            if super_rank(A.rows()):
                confirmed.append(m)
                matrices[m] = A
        except ExponentBudgetExceeded as exc:
            skipped.append({"tuple": list(m), "reason": str(exc)})

    groups = {}
    order = []
    for m in confirmed:
        L = span_canonical(matrices[m].rows())
        key = L.key()
        if key not in groups:
            groups[key] = (L, [])
            order.append(key)
        groups[key][1].append(m)

    records = []
    for key in order:
        L, preimage = groups[key]
        try:
            hits = intersection_count(P, d, L, max_iter, budget)
        except ExponentBudgetExceeded as exc:
            hits = -1
            skipped.append({"subspace": [list(map(str, row)) for row in key],
                            "reason": str(exc)})
        records.append(SubspaceRecord(L, tuple(preimage), hits))
    records.sort(key=lambda rec: rec.preimage[0])

    diagnostics = {
        "tuples_total": len(list(combinations(range(max_iter + 1), r + 1))),
        "filtered": filtered_out,
        "exact_checked": exact_checked,
        "confirmed": len(confirmed),
        "skipped": skipped,
        "filter_enabled": use_filter,
        "primes": list(primes) if use_filter else [],
        # the heuristic count of subspaces a generic point can be made to
        # produce; informational only
        "generic_expectation": n // (n - r + 1),
        "partition_analyses": [_analyze_tuple(P, d, m, r, n, budget)
                               for m in confirmed],
    }
    if r == 1 and confirmed:
        # two iterates super-spanning a single point means they coincide
        diagnostics["preperiodicity_witness"] = True
    return ExceptionalReport(P, d, r, max_iter, tuple(confirmed),
                             tuple(records), diagnostics)


def _analyze_tuple(P, d, m, r, n, budget) -> dict:
    """Subsum diagnostics for one confirmed tuple: which bullet
    partitions have all block sums vanishing, per column selection, plus
    the finest zero partition when the exhaustive search is cheap."""
    per_p = {}
    for p in subsum.column_selections(r, n):
        tv = subsum.det_terms(P, d, m, p, budget)
        vanishing_t = [t for t in range(r + 1)
                       if all(not tv.block_sum(block)
                              for block in subsum.bullet_partition(r, t).blocks)]
        entry = {"bullet_vanishing_t": vanishing_t}
        if r <= 2:
            result = subsum.finest_zero_partition(tv)
            entry["finest_blocks"] = [[list(s) for s in block]
                                      for block in result.partition.blocks]
            entry["non_unique"] = result.non_unique
            entry["exceptional_for"] = sorted(
                subsum.classify_exceptional(result.partition))
        per_p[",".join(str(x) for x in p)] = entry
    return {"tuple": list(m), "per_p": per_p}
