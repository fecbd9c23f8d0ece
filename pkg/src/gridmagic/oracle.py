"""Desk-scale ground truth by brute force.

The oracle enumerates every labeling of a tiny grid (all |V|! or |E|!
bijections, or all |V|!*|E|! pairs in supermagic mode), checks the
constant-cube-sum condition candidate by candidate, and tallies a
histogram of magic sums. It shares no arithmetic with the closed-form
predictions or the constructive labelings; membership of the constructed
labeling in the found set is therefore independent evidence that the
construction lands inside the feasible set.

Search spaces explode fast, so `SearchBudget.max_assignments` refuses
anything beyond desk scale up front. Supplying a target sum switches to
branch-and-prune enumeration, complete for that sum; the default full
scan is deliberately unpruned so the ground truth inherits nothing from
the thing it checks.
"""

from __future__ import annotations

import hashlib
import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import BudgetExceeded, GridMagicError
from .grid_core import GridSpec, cube_edges, cube_vertices, edge_rank, enumerate_cubes, vertex_rank
from .labeling_2d import edge_labeling_from_flat, vertex_labeling_from_flat
from .labeling_nd import build_labelings, combine_supermagic, total_labeling_from_flats
from .verifier import verify_edge_magic, verify_supermagic, verify_vertex_magic

MODES = ("vertex", "edge", "supermagic")
DEFAULT_MAX_ASSIGNMENTS = 10**8

# `found` keeps at most this many (digest, sum) pairs; the histogram always
# counts everything.
FOUND_CAP = 1000

# Precompute per-permutation edge sums in supermagic mode only below this
# count, to bound memory.
_PRECOMPUTE_CAP = 10**6


@dataclass(frozen=True)
class SearchBudget:
    """What to search for and how many candidate assignments to allow."""

    mode: str
    max_assignments: int = DEFAULT_MAX_ASSIGNMENTS

    def __post_init__(self):
        if self.mode not in MODES:
            raise GridMagicError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.max_assignments < 1:
            raise GridMagicError("max_assignments must be >= 1")


@dataclass(frozen=True)
class SearchResult:
    """Tally of one exhaustive scan."""

    examined: int
    found: tuple[tuple[str, int], ...]  # (labeling digest, magic sum), capped
    sum_histogram: dict[int, int]

    @property
    def found_count(self) -> int:
        """Total number of magic labelings, including ones beyond the cap."""
        return sum(self.sum_histogram.values())


def labeling_digest(labels: Sequence[int]) -> str:
    """Stable digest of a label sequence in rank order."""
    data = ",".join(str(int(v)) for v in labels).encode()
    return hashlib.blake2b(data, digest_size=16).hexdigest()


def required_assignments(spec: GridSpec, mode: str) -> int:
    """Size of the search space for a spec and mode."""
    if mode == "vertex":
        return math.factorial(spec.vertex_count)
    if mode == "edge":
        return math.factorial(spec.edge_count)
    return math.factorial(spec.vertex_count) * math.factorial(spec.edge_count)


def _cube_vertex_ranks(spec: GridSpec) -> list[tuple[int, ...]]:
    return [
        tuple(vertex_rank(spec, v) for v in cube_vertices(c)) for c in enumerate_cubes(spec)
    ]


def _cube_edge_ranks(spec: GridSpec) -> list[tuple[int, ...]]:
    return [tuple(edge_rank(spec, e) for e in cube_edges(c)) for c in enumerate_cubes(spec)]


def _reverify(spec: GridSpec, mode: str, labels: tuple[int, ...], magic_sum: int) -> None:
    # Independent re-check of a labeling the scan found magic; a mismatch
    # would mean the oracle and the verifier disagree.
    nv = spec.vertex_count
    if mode == "vertex":
        report = verify_vertex_magic(spec, vertex_labeling_from_flat(spec, labels))
    elif mode == "edge":
        report = verify_edge_magic(spec, edge_labeling_from_flat(spec, labels))
    else:
        report = verify_supermagic(
            spec, total_labeling_from_flats(spec, labels[:nv], labels[nv:])
        )
    if not report.magic or report.magic_sum != magic_sum:
        raise GridMagicError(
            f"oracle/verifier disagreement on a {mode} labeling: "
            f"scan sum {magic_sum}, verifier {report}"
        )


class _Tally:
    """Histogram plus capped found list, with verifier re-checks."""

    def __init__(self, spec: GridSpec, mode: str):
        self.spec = spec
        self.mode = mode
        self.histogram: dict[int, int] = {}
        self.found: list[tuple[str, int]] = []
        self.target_seen = False

    def record(self, labels: tuple[int, ...], magic_sum: int) -> None:
        self.histogram[magic_sum] = self.histogram.get(magic_sum, 0) + 1
        if len(self.found) < FOUND_CAP:
            _reverify(self.spec, self.mode, labels, magic_sum)
            self.found.append((labeling_digest(labels), magic_sum))


def _constant_sum(perm: tuple[int, ...], cubes: list[tuple[int, ...]]) -> int | None:
    first = sum(perm[r] for r in cubes[0])
    for members in cubes[1:]:
        if sum(perm[r] for r in members) != first:
            return None
    return first


def _scan_single(
    spec: GridSpec,
    mode: str,
    pool: range,
    cubes: list[tuple[int, ...]],
    tally: _Tally,
    member_target: tuple[int, ...] | None,
) -> int:
    examined = 0
    for perm in itertools.permutations(pool):
        examined += 1
        magic_sum = _constant_sum(perm, cubes)
        if magic_sum is not None:
            tally.record(perm, magic_sum)
            if member_target is not None and perm == member_target:
                tally.target_seen = True
    return examined


def _scan_supermagic(
    spec: GridSpec,
    tally: _Tally,
    member_target: tuple[int, ...] | None,
) -> int:
    nv, ne = spec.vertex_count, spec.edge_count
    vertex_cubes = _cube_vertex_ranks(spec)
    edge_cubes = _cube_edge_ranks(spec)
    vtarget = member_target[:nv] if member_target is not None else None
    etarget = member_target[nv:] if member_target is not None else None

    # edge labels are enumerated directly in their shifted range, so cube
    # totals and digests need no correction afterwards
    edge_pool = range(nv + 1, nv + ne + 1)
    precompute = math.factorial(ne) <= _PRECOMPUTE_CAP
    if precompute:
        edge_sums = [
            (eperm, tuple(sum(eperm[r] for r in members) for members in edge_cubes))
            for eperm in itertools.permutations(edge_pool)
        ]

    examined = 0
    for vperm in itertools.permutations(range(1, nv + 1)):
        vsums = tuple(sum(vperm[r] for r in members) for members in vertex_cubes)
        eperms = (
            edge_sums
            if precompute
            else (
                (eperm, tuple(sum(eperm[r] for r in members) for members in edge_cubes))
                for eperm in itertools.permutations(edge_pool)
            )
        )
        for eperm, esums in eperms:
            examined += 1
            total = vsums[0] + esums[0]
            if all(v + e == total for v, e in zip(vsums[1:], esums[1:])):
                tally.record(vperm + eperm, total)
                if vtarget is not None and vperm == vtarget and eperm == etarget:
                    tally.target_seen = True
    return examined


def _pruned_scan(
    spec: GridSpec,
    mode: str,
    target_sum: int,
    tally: _Tally,
    member_target: tuple[int, ...] | None,
) -> int:
    nv, ne = spec.vertex_count, spec.edge_count
    if mode == "vertex":
        slot_count, pools = nv, [(0, list(range(1, nv + 1)))] * nv
        member_lists = [_cube_vertex_ranks(spec)]
    elif mode == "edge":
        slot_count, pools = ne, [(0, list(range(1, ne + 1)))] * ne
        member_lists = [_cube_edge_ranks(spec)]
    else:
        slot_count = nv + ne
        pools = [(0, list(range(1, nv + 1)))] * nv + [
            (1, list(range(nv + 1, nv + ne + 1)))
        ] * ne
        member_lists = [_cube_vertex_ranks(spec), _cube_edge_ranks(spec)]

    # slot -> cubes containing it (cube indices shared across both classes)
    slot_cubes: list[list[int]] = [[] for _ in range(slot_count)]
    cube_size = [0] * spec.cube_count
    for group, cubes in enumerate(member_lists):
        base = 0 if group == 0 else nv
        for c, members in enumerate(cubes):
            cube_size[c] += len(members)
            for r in members:
                slot_cubes[base + r].append(c)

    used: list[set[int]] = [set(), set()]
    partial = [0] * spec.cube_count
    filled = [0] * spec.cube_count
    assignment = [0] * slot_count
    examined = 0

    def descend(slot: int) -> None:
        nonlocal examined
        if slot == slot_count:
            examined += 1
            labels = tuple(assignment)
            tally.record(labels, target_sum)
            if member_target is not None and labels == member_target:
                tally.target_seen = True
            return
        group, pool = pools[slot]
        taken = used[group]
        for value in pool:
            if value in taken:
                continue
            ok = True
            for c in slot_cubes[slot]:
                total = partial[c] + value
                remaining = cube_size[c] - filled[c] - 1
                if remaining == 0:
                    if total != target_sum:
                        ok = False
                        break
                elif total + remaining > target_sum:  # labels are >= 1 each
                    ok = False
                    break
            if not ok:
                continue
            taken.add(value)
            assignment[slot] = value
            for c in slot_cubes[slot]:
                partial[c] += value
                filled[c] += 1
            descend(slot + 1)
            for c in slot_cubes[slot]:
                partial[c] -= value
                filled[c] -= 1
            taken.discard(value)

    descend(0)
    return examined


def _run(
    spec: GridSpec,
    budget: SearchBudget,
    target_sum: int | None,
    member_target: tuple[int, ...] | None,
) -> tuple[SearchResult, bool]:
    required = required_assignments(spec, budget.mode)
    if required > budget.max_assignments:
        raise BudgetExceeded(required, budget.max_assignments)
    tally = _Tally(spec, budget.mode)
    if target_sum is not None:
        examined = _pruned_scan(spec, budget.mode, target_sum, tally, member_target)
    elif budget.mode == "supermagic":
        examined = _scan_supermagic(spec, tally, member_target)
    elif budget.mode == "vertex":
        examined = _scan_single(
            spec,
            "vertex",
            range(1, spec.vertex_count + 1),
            _cube_vertex_ranks(spec),
            tally,
            member_target,
        )
    else:
        examined = _scan_single(
            spec,
            "edge",
            range(1, spec.edge_count + 1),
            _cube_edge_ranks(spec),
            tally,
            member_target,
        )
    result = SearchResult(
        examined=examined,
        found=tuple(tally.found),
        sum_histogram=tally.histogram,
    )
    return result, tally.target_seen


def exhaustive_search(
    spec: GridSpec, budget: SearchBudget, target_sum: int | None = None
) -> SearchResult:
    """Scan every candidate labeling of the given mode.

    With `target_sum` the scan prunes branches whose partial cube sums
    already rule the target out (complete for that sum, and typically far
    fewer assignments reached); without it, every assignment is examined.

    Raises BudgetExceeded up front when the search space is larger than
    `budget.max_assignments`.
    """
    result, _ = _run(spec, budget, target_sum, None)
    return result


def construction_sequence(spec: GridSpec, mode: str) -> tuple[int, ...]:
    """The constructed labeling as the flat label sequence the oracle uses."""
    f, g = build_labelings(spec)
    if mode == "vertex":
        return tuple(int(v) for v in f.flat)
    if mode == "edge":
        return tuple(int(v) for v in g.flat)
    total = combine_supermagic(f, g)
    return tuple(int(v) for v in total.vertex_flat) + tuple(int(v) for v in total.edge_flat)


def confirm_construction(spec: GridSpec, budget: SearchBudget) -> bool:
    """Whether the constructed labeling appears among the oracle's magic set."""
    target = construction_sequence(spec, budget.mode)
    _, seen = _run(spec, budget, None, target)
    return seen
