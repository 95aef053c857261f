"""Compressed profiles of windowed independence numbers.

For a family R of intervals inside (0, s), the solver never needs the whole
map i -> alpha_window(R, i, s); values above v + 1 are indistinguishable for
a claw bound of v.  The profile kept instead is, for each target value u, the
largest window start i at which alpha_window(R, i, s) equals u (it equals
rather than merely reaches u because shrinking the window by one integer step
drops the answer by at most one).  Written as a sequence r_0..r_{v+2} with
r_0 = s and r_{v+2} = -1, the entries strictly decrease until they bottom out
at -1, which is what MonotonicSeq enforces.

encode builds the profile of a family, alpha_seq reads the independence
number back off a profile (exactly when it is at most v, saturating above),
and extend advances the two profiles of a 2-partition across a segment
(s_prev, s] given only the new members, without revisiting the old ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from clawsplit.intervals import Interval, IntervalFamily, _max_disjoint_meeting


@dataclass(frozen=True)
class MonotonicSeq:
    """Profile sequence r_0..r_{v+2}: r_0 = s, r_{v+2} = -1, and each later
    entry is either strictly smaller or already bottomed out at -1."""

    r: tuple[int, ...]
    s: int
    v: int

    def __post_init__(self) -> None:
        if self.v < 1:
            raise ValueError(f"claw bound v={self.v}: need v >= 1")
        if self.s < 0:
            raise ValueError(f"anchor s={self.s}: need s >= 0")
        if len(self.r) != self.v + 3:
            raise ValueError(f"profile has {len(self.r)} entries, expected v+3={self.v + 3}")
        if self.r[0] != self.s:
            raise ValueError(f"profile starts at {self.r[0]}, expected s={self.s}")
        if self.r[-1] != -1:
            raise ValueError(f"profile ends at {self.r[-1]}, expected -1")
        for u in range(self.v + 2):
            nxt, cur = self.r[u + 1], self.r[u]
            if not (nxt == cur == -1 or -1 <= nxt < cur):
                raise ValueError(f"profile {self.r} not monotonic at position {u}")


def zero_seq(v: int) -> MonotonicSeq:
    """The unique profile at s = 0: <0, -1, ..., -1>."""
    return MonotonicSeq((0,) + (-1,) * (v + 2), 0, v)


def _profile(intervals: Sequence[Interval], s: int, v: int) -> list[int]:
    """Raw profile entries for a family inside (0, s).

    Scans window starts i = s down to 0; alpha_window grows by at most one per
    step, and the scan stops once it exceeds v + 1 since it can never shrink
    again.  Entry u records the largest i where the value u was reached.
    """
    r = [-1] * (v + 3)
    r[0] = s
    prev = 0
    for i in range(s - 1, -1, -1):
        alpha = _max_disjoint_meeting(intervals, i, s)
        assert prev <= alpha <= prev + 1, "windowed independence moved by more than one"
        if alpha > v + 1:
            break
        if alpha == prev + 1:
            r[alpha] = i
            prev = alpha
    return r


def encode(R: IntervalFamily, s: int, v: int) -> MonotonicSeq:
    """Profile of a family whose members all lie inside (0, s).

    Args:
        R: family with every member satisfying 0 <= lo and hi <= s.
        s: right anchor, s >= 0.
        v: claw bound, v >= 1.

    Returns:
        The MonotonicSeq with entry u equal to the largest window start i such
        that u <= alpha_window(R, i, s) <= v + 1, or -1 if no such i exists.
    """
    for iv in R:
        if iv.lo < 0 or iv.hi > s:
            raise ValueError(f"interval {iv} not inside (0, {s})")
    return MonotonicSeq(tuple(_profile(R.intervals, s, v)), s, v)


def alpha_seq(r: MonotonicSeq, i: int) -> int:
    """Windowed independence number read off a profile, capped at v + 1.

    Args:
        r: a profile for some family R inside (0, r.s).
        i: window start, 0 <= i <= r.s.

    Returns:
        The largest u <= v + 1 with i <= r_u.  Equals alpha_window(R, i, r.s)
        whenever that is at most v; otherwise the true value is >= v + 1.
    """
    if not 0 <= i <= r.s:
        raise ValueError(f"window start {i} outside [0, {r.s}]")
    for u in range(r.v + 1, -1, -1):
        if r.r[u] >= i:
            return u
    raise AssertionError("profile lost its anchor entry")


def extend(
    p_prev: MonotonicSeq,
    q_prev: MonotonicSeq,
    F: IntervalFamily,
    C: IntervalFamily,
    D: IntervalFamily,
    s_prev: int,
    s: int,
    v: int,
) -> tuple[MonotonicSeq, MonotonicSeq]:
    """Advance a 2-partition's profiles across the segment (s_prev, s].

    The first part picks up C, the full set of segment members with length at
    most v (backbone units included); the second part picks up D, the segment
    members longer than v, together with F, the members that reach back across
    s_prev and were already committed to the second part.

    Args:
        p_prev: profile of the first part's predecessor at s_prev.
        q_prev: profile of the second part's predecessor at s_prev.
        F: second-part members with lo < s_prev < hi <= s.
        C: segment members inside (s_prev, s) with length <= v.
        D: segment members inside (s_prev, s) with length > v.
        s_prev, s: segment anchors, 0 <= s_prev < s.
        v: claw bound, v >= 1.

    Returns:
        The pair of profiles at s.  The first part's new profile starts with
        the unit-backbone ramp s - u and falls back to shifted p_prev entries;
        the second part's starts with the profile of F + D and falls back to
        q_prev entries shifted by the segment independence of D.
    """
    if not 0 <= s_prev < s:
        raise ValueError(f"segment ({s_prev}, {s}] is not ordered")
    if p_prev.s != s_prev or q_prev.s != s_prev:
        raise ValueError("predecessor profiles not anchored at s_prev")
    if p_prev.v != v or q_prev.v != v:
        raise ValueError("predecessor profiles built for a different claw bound")
    for iv in C:
        if iv.lo < s_prev or iv.hi > s or iv.length > v:
            raise ValueError(f"{iv} is not a short segment member of ({s_prev}, {s})")
    for iv in D:
        if iv.lo < s_prev or iv.hi > s or iv.length <= v:
            raise ValueError(f"{iv} is not a long segment member of ({s_prev}, {s})")
    for iv in F:
        if not (0 <= iv.lo < s_prev < iv.hi <= s):
            raise ValueError(f"{iv} does not cross s_prev={s_prev} within (0, {s})")

    fd = F.intervals + D.intervals
    w = _max_disjoint_meeting(D.intervals, s_prev, s)
    w_full = _max_disjoint_meeting(fd, s_prev, s)

    p = [-1] * (v + 3)
    p[0] = s
    for u in range(1, v + 2):
        if u <= s - s_prev:
            p[u] = s - u
        else:
            p[u] = p_prev.r[u - (s - s_prev)]

    prof = _profile(fd, s, v)
    q = [-1] * (v + 3)
    q[0] = s
    for u in range(1, v + 2):
        if u <= w_full:
            q[u] = prof[u]
        else:
            q[u] = q_prev.r[u - w]

    return MonotonicSeq(tuple(p), s, v), MonotonicSeq(tuple(q), s, v)
