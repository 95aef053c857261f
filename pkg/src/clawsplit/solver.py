"""Claw-bounded 2-partition of a vertebrate representation, with witness.

The decision runs as a forward dynamic program over backbone anchors
0 <= s <= m.  A state at anchor s describes everything later segments need
to know about a feasible split of the members inside (0, s): the two profiles
(MonotonicSeq) of its parts, plus which side each member crossing s has been
committed to.  The part holding the unit (s - 1, s) is always stored first;
because consecutive unit runs alternate sides, a transition reads its
predecessor with the coordinates swapped.

A transition from s_prev to s commits the segment members: the short ones
(length <= v, the backbone run included) join the first part, the long ones
join the second part, and predecessor-crossing members that stop before s are
settled on the side they were committed to.  The checks are exactly:

  * the candidate sides of the s-crossing members agree with the predecessor
    on members crossing both anchors,
  * neither side's new members can center an induced star with v + 1 leaves
    among the members visible to them,
  * members settled this hop obey the split star count: leaves left of s_prev
    are counted through the predecessor profile, leaves right of it directly,

after which the profiles advance by extend.  Members are grouped by chains of
significant overlap (intersection length >= 2v + 1); a feasible split never
separates a group, so crossing members are assigned group-wise, which keeps
every stage's state count within (s + 2)^(2(v+1)) * 2^(2v^2+v).

The accepting condition is reaching any state at s = m.  Witnesses are read
back through stored back-pointers, expanded to the input vertices through the
representation's duplicity map, and re-verified before being returned.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from clawsplit.encoding import MonotonicSeq, alpha_seq, extend, zero_seq
from clawsplit.intervals import (
    Interval,
    IntervalFamily,
    PartitionAssignment,
    Side,
    _max_disjoint_meeting,
    dedup,
    mid_relation,
)
from clawsplit.recognition import VertebrateRep


@dataclass(frozen=True)
class GroupingInfo:
    """Connected components of the significant-overlap relation.

    Two members are linked when their intersection has length >= 2v + 1.
    group_of maps a member index to its group id; groups lists each group's
    member indices, ordered by first member.
    """

    v: int
    group_of: tuple[int, ...]
    groups: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CrossingFamily:
    """Member indices whose interval properly contains the anchor point s."""

    s: int
    indices: tuple[int, ...]


@dataclass(frozen=True)
class DPState:
    """One reachable profile-and-commitment combination at anchor s.

    first_crossing / second_crossing split the s-crossing member indices by
    committed side, with the first side being the part that holds the unit
    (s - 1, s) when s > 0.  prev/to_first/to_second record how the state was
    first reached, for witness reconstruction; they do not affect identity.
    """

    s: int
    p: MonotonicSeq
    q: MonotonicSeq
    first_crossing: frozenset[int]
    second_crossing: frozenset[int]
    prev: Optional["DPState"] = field(default=None, compare=False, repr=False)
    to_first: tuple[int, ...] = field(default=(), compare=False, repr=False)
    to_second: tuple[int, ...] = field(default=(), compare=False, repr=False)

    def key(self) -> tuple:
        return (self.p.r, self.q.r, self.first_crossing)


@dataclass
class DPTable:
    """Per-anchor maps from state key to the first DPState reaching it."""

    stages: list[dict[tuple, DPState]]

    def state_counts(self) -> tuple[int, ...]:
        return tuple(len(stage) for stage in self.stages)


@dataclass
class SolveResult:
    """Decision plus witness and solver telemetry.

    assignment is over the input family's vertices (duplicates expanded);
    rep_assignment is over the representation's members.  Both are None for
    infeasible instances.
    """

    feasible: bool
    assignment: PartitionAssignment | None
    rep_assignment: PartitionAssignment | None
    stage_state_counts: tuple[int, ...]
    elapsed_s: float
    table: DPTable = field(repr=False, default=None)


def compute_groups(S: IntervalFamily, v: int) -> GroupingInfo:
    """Group a duplicate-free family by chains of significant overlap.

    Args:
        S: duplicate-free interval family.
        v: claw bound, v >= 1.

    Returns:
        GroupingInfo for the relation "intersection length >= 2v + 1".

    Raises:
        AssertionError: if some integer point meets members of more than
            2v^2 + v distinct groups, which is impossible for duplicate-free
            integer families and would signal a grouping bug.
    """
    if v < 1:
        raise ValueError(f"claw bound v={v}: need v >= 1")
    ivs = S.intervals
    n = len(ivs)
    if len(set(ivs)) != n:
        raise ValueError("grouping needs a duplicate-free family (dedup first)")
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    threshold = 2 * v + 1
    for i in range(n):
        for j in range(i + 1, n):
            if min(ivs[i].hi, ivs[j].hi) - max(ivs[i].lo, ivs[j].lo) >= threshold:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)

    root_to_gid: dict[int, int] = {}
    group_of: list[int] = []
    members: list[list[int]] = []
    for i in range(n):
        root = find(i)
        gid = root_to_gid.get(root)
        if gid is None:
            gid = len(members)
            root_to_gid[root] = gid
            members.append([])
        group_of.append(gid)
        members[gid].append(i)

    if n:
        bound = 2 * v * v + v
        lo = min(iv.lo for iv in ivs)
        hi = max(iv.hi for iv in ivs)
        for x in range(lo + 1, hi):
            present = {group_of[i] for i in range(n) if ivs[i].lo < x < ivs[i].hi}
            if len(present) > bound:
                raise AssertionError(
                    f"point {x} meets {len(present)} overlap groups, bound is {bound}"
                )
    return GroupingInfo(v, tuple(group_of), tuple(tuple(g) for g in members))


def crossing_family(rep: VertebrateRep, s: int) -> CrossingFamily:
    """Representation members properly containing the anchor point s."""
    if not 0 <= s <= rep.m:
        raise ValueError(f"anchor {s} outside [0, {rep.m}]")
    indices = tuple(i for i, iv in enumerate(rep.family) if iv.lo < s < iv.hi)
    return CrossingFamily(s, indices)


def verify_partition(J: IntervalFamily, assignment: PartitionAssignment, v: int) -> bool:
    """True iff both parts of the assignment have claw number at most v.

    Each part is dedup'd before the star check; duplicate intervals are
    adjacent twins, which for v >= 1 never change whether a part passes.
    """
    if len(assignment) != len(J):
        raise ValueError(
            f"assignment covers {len(assignment)} vertices, family has {len(J)}"
        )
    for side in (Side.FIRST, Side.SECOND):
        part = J.subfamily(assignment.part(side))
        distinct, _ = dedup(part)
        if not mid_relation(distinct, distinct, v):
            return False
    return True


def _segment_split(
    ivs: Sequence[Interval], s_prev: int, s: int, v: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Indices of members inside (s_prev, s), split into short and long."""
    short: list[int] = []
    long: list[int] = []
    for i, iv in enumerate(ivs):
        if iv.lo >= s_prev and iv.hi <= s:
            (short if iv.length <= v else long).append(i)
    return tuple(short), tuple(long)


def _agrees_on_shared(
    A: frozenset[int], A_prime: frozenset[int], shared: frozenset[int]
) -> bool:
    """Members crossing both anchors must keep the side already committed."""
    return all((i in A) == (i in A_prime) for i in shared)


def _star_bound_ok(
    ivs: Sequence[Interval],
    center_indices: Sequence[int],
    visible: Iterable[int],
    v: int,
) -> bool:
    """mid_relation of the centers against the visible members, by index."""
    centers = IntervalFamily(tuple(ivs[i] for i in center_indices))
    fam = IntervalFamily(tuple(ivs[i] for i in sorted(set(visible))))
    return mid_relation(centers, fam, v)


def _settled_ok(
    ivs: Sequence[Interval],
    settled: Sequence[int],
    profile: MonotonicSeq,
    right_pool: Sequence[Interval],
    s_prev: int,
    v: int,
) -> bool:
    """Split star count for members settled on a side at this hop.

    A settled member (a, b) crosses s_prev; disjoint same-side leaves meeting
    it split at s_prev into ones counted by the predecessor profile at a and
    ones meeting (s_prev, b) among the side's new members.
    """
    for i in settled:
        a, b = ivs[i]
        if alpha_seq(profile, a) + _max_disjoint_meeting(right_pool, s_prev, b) > v:
            return False
    return True


def check_transition(
    state_prev: DPState,
    candidate: tuple[int, frozenset[int], frozenset[int]],
    rep: VertebrateRep,
    v: int,
    grouping: GroupingInfo,
) -> tuple[MonotonicSeq, MonotonicSeq] | None:
    """Try to advance a state across one segment.

    Args:
        state_prev: stored state at some anchor s_prev.
        candidate: (s, A, B) where A and B partition the indices crossing s
            into first-part and second-part sides.
        rep: the representation being partitioned.
        v: claw bound.
        grouping: significant-overlap groups of rep.family.

    Returns:
        The extended profile pair for the new state at s, or None when the
        candidate fails a feasibility condition (a normal outcome).  The
        predecessor is read with its coordinates swapped, since the backbone
        run (s_prev, s] puts the unit (s - 1, s) on the opposite part from
        (s_prev - 1, s_prev).
    """
    s, A, B = candidate
    A = frozenset(A)
    B = frozenset(B)
    s_prev = state_prev.s
    if not s_prev < s <= rep.m:
        raise ValueError(f"segment ({s_prev}, {s}] invalid for m={rep.m}")
    ivs = rep.family.intervals
    K_s = frozenset(crossing_family(rep, s).indices)
    if A | B != K_s or A & B:
        raise ValueError("candidate sides do not partition the crossing members")

    # A feasible split never separates a significant-overlap group, so
    # group-splitting candidates are rejected outright.
    side_of_group: dict[int, bool] = {}
    for i in K_s:
        g = grouping.group_of[i]
        want = i in A
        if side_of_group.setdefault(g, want) != want:
            return None

    p_prime, q_prime = state_prev.q, state_prev.p
    A_prime, B_prime = state_prev.second_crossing, state_prev.first_crossing

    K_prev = frozenset(crossing_family(rep, s_prev).indices)
    shared = K_prev & K_s
    if not _agrees_on_shared(A, A_prime, shared):
        return None

    short_idx, long_idx = _segment_split(ivs, s_prev, s, v)
    settled_first = tuple(sorted(A_prime - K_s))
    settled_second = tuple(sorted(B_prime - K_s))

    if not _star_bound_ok(ivs, short_idx, set(short_idx) | A_prime | A, v):
        return None
    if not _star_bound_ok(ivs, long_idx, set(long_idx) | B_prime | B, v):
        return None

    first_new = [ivs[i] for i in short_idx] + [ivs[i] for i in sorted(A - shared)]
    second_new = [ivs[i] for i in long_idx] + [ivs[i] for i in sorted(B - shared)]
    if not _settled_ok(ivs, settled_first, p_prime, first_new, s_prev, v):
        return None
    if not _settled_ok(ivs, settled_second, q_prime, second_new, s_prev, v):
        return None

    return extend(
        p_prime,
        q_prime,
        IntervalFamily(tuple(ivs[i] for i in settled_second)),
        IntervalFamily(tuple(ivs[i] for i in short_idx)),
        IntervalFamily(tuple(ivs[i] for i in long_idx)),
        s_prev,
        s,
        v,
    )


def _scan_key(st: DPState) -> tuple:
    """Deterministic scan order: swapped profiles, then committed sides."""
    return (st.q.r, st.p.r, tuple(sorted(st.first_crossing)))


def solve(rep: VertebrateRep, v: int) -> SolveResult:
    """Decide whether the represented graph splits into two claw-<= v parts.

    Args:
        rep: vertebrate representation of the input family.
        v: claw bound, v >= 1.

    Returns:
        SolveResult; on feasible instances the assignment covers the input
        family's vertices and has been re-verified with verify_partition.
    """
    start = time.perf_counter()
    if v < 1:
        raise ValueError(f"claw bound v={v}: need v >= 1")
    fam = rep.family
    ivs = fam.intervals
    m = rep.m
    grouping = compute_groups(fam, v)
    group_of = grouping.group_of
    crossing_sets = [frozenset(crossing_family(rep, s).indices) for s in range(m + 1)]

    zero = zero_seq(v)
    base = DPState(0, zero, zero, frozenset(), frozenset())
    table = DPTable([{} for _ in range(m + 1)])
    table.stages[0][base.key()] = base
    state_cap_exp = 2 * (v + 1)
    group_cap = 1 << (2 * v * v + v)

    for s in range(1, m + 1):
        K_set = crossing_sets[s]
        gids = sorted({group_of[i] for i in K_set})
        members_of = {g: tuple(sorted(i for i in K_set if group_of[i] == g)) for g in gids}
        stage = table.stages[s]
        for s_prev in range(s):
            if not table.stages[s_prev]:
                continue
            short_idx, long_idx = _segment_split(ivs, s_prev, s, v)
            short_ivs = [ivs[i] for i in short_idx]
            long_ivs = [ivs[i] for i in long_idx]
            long_fam = IntervalFamily(tuple(long_ivs))
            # No candidate can pass if the long segment members already
            # center an overfull star among themselves.
            if not mid_relation(long_fam, long_fam, v):
                continue
            short_fam = IntervalFamily(tuple(short_ivs))
            K_prev = crossing_sets[s_prev]
            shared = K_prev & K_set
            pool = K_prev - K_set
            long_meet_cache: dict[int, int] = {}

            for st in sorted(table.stages[s_prev].values(), key=_scan_key):
                p_prime, q_prime = st.q, st.p
                A_prime, B_prime = st.second_crossing, st.first_crossing
                settled_first = tuple(sorted(A_prime & pool))
                settled_second = tuple(sorted(B_prime & pool))

                # Candidate-independent lower bounds: the backbone units give
                # the first side at least b - s_prev leaves right of s_prev,
                # the long members give the second side at least their own
                # disjoint count there.
                dead = False
                for i in settled_first:
                    a, b = ivs[i]
                    if alpha_seq(p_prime, a) + (b - s_prev) > v:
                        dead = True
                        break
                if dead:
                    continue
                for i in settled_second:
                    a, b = ivs[i]
                    floor = long_meet_cache.get(b)
                    if floor is None:
                        floor = _max_disjoint_meeting(long_ivs, s_prev, b)
                        long_meet_cache[b] = floor
                    if alpha_seq(q_prime, a) + floor > v:
                        dead = True
                        break
                if dead:
                    continue

                p_new, q_new = extend(
                    p_prime,
                    q_prime,
                    IntervalFamily(tuple(ivs[i] for i in settled_second)),
                    short_fam,
                    long_fam,
                    s_prev,
                    s,
                    v,
                )

                forced: dict[int, bool] = {}
                conflict = False
                for i in shared:
                    want_first = i in A_prime
                    if forced.setdefault(group_of[i], want_first) != want_first:
                        conflict = True
                        break
                if conflict:
                    continue
                free = [g for g in gids if g not in forced]
                forced_first = [
                    i for g, to_first in forced.items() if to_first for i in members_of[g]
                ]

                for mask in range(1 << len(free)):
                    first_idx = list(forced_first)
                    for bit, g in enumerate(free):
                        if not (mask >> bit) & 1:
                            first_idx.extend(members_of[g])
                    A = frozenset(first_idx)
                    key = (p_new.r, q_new.r, A)
                    if key in stage:
                        continue
                    B = K_set - A
                    first_new = short_ivs + [ivs[i] for i in sorted(A - shared)]
                    second_new = long_ivs + [ivs[i] for i in sorted(B - shared)]
                    if not _settled_ok(ivs, settled_first, p_prime, first_new, s_prev, v):
                        continue
                    if not _settled_ok(ivs, settled_second, q_prime, second_new, s_prev, v):
                        continue
                    if not _star_bound_ok(ivs, long_idx, set(long_idx) | B_prime | B, v):
                        continue
                    if not _star_bound_ok(ivs, short_idx, set(short_idx) | A_prime | A, v):
                        continue
                    stage[key] = DPState(
                        s,
                        p_new,
                        q_new,
                        A,
                        B,
                        prev=st,
                        to_first=short_idx + settled_first,
                        to_second=long_idx + settled_second,
                    )

        cap = (s + 2) ** state_cap_exp * group_cap
        if len(stage) > cap:
            raise AssertionError(f"stage {s} holds {len(stage)} states, cap {cap}")

    counts = table.state_counts()
    accepting: DPState | None = None
    if m == 0:
        accepting = base
    elif table.stages[m]:
        accepting = next(iter(table.stages[m].values()))
    if accepting is None:
        return SolveResult(False, None, None, counts, time.perf_counter() - start, table)

    sides: list[Side | None] = [None] * len(ivs)
    st: DPState | None = accepting
    first_label = Side.FIRST
    while st is not None and st.prev is not None:
        for i in st.to_first:
            sides[i] = first_label
        for i in st.to_second:
            sides[i] = first_label.other()
        first_label = first_label.other()
        st = st.prev
    assert all(side is not None for side in sides), "witness walk missed a member"

    rep_assignment = PartitionAssignment(tuple(sides))
    assignment = rep.expand(rep_assignment)
    if not verify_partition(rep.source, assignment, v):
        raise AssertionError("reconstructed witness failed re-verification")
    return SolveResult(True, assignment, rep_assignment, counts, time.perf_counter() - start, table)
