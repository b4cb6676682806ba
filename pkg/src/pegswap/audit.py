"""Lower-bound bookkeeping on concrete solutions.

Given a replayed move sequence with peg identities, this module records
every crossing (one peg jumping another), the per-peg event histories, and
partitions the moves into groups whose weight gains add up to the final
weight.  The audit then checks, numerically for that one solution, each link
of the counting argument that forces at least ``N**2 + 2N`` moves:

* every red/blue pair crosses an odd number of times, so there are ``N**2``
  first crossings worth ``+2`` each;
* each peg's events alternate between the "hole now on my right" class
  (A, B) and the "hole now on my left" class (C, D);
* every other group gains at most one unit of weight per move.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping, Optional, Sequence, Union

from .board import Board, Color, Move, MoveKind, PegId, initial_board
from .notation import MoveScript, SolutionTrace, replay, trace_moves


class AuditError(ValueError):
    """The trace cannot be audited (for example it carries no peg ids)."""


class EventKind(str, enum.Enum):
    A = "A"  # someone jumped over the peg, heading left
    B = "B"  # the peg itself moved left
    C = "C"  # someone jumped over the peg, heading right
    D = "D"  # the peg itself moved right

    @property
    def leaves_hole_right(self) -> bool:
        return self in (EventKind.A, EventKind.B)


class GroupKind(str, enum.Enum):
    FIRST_CROSS = "FirstCross"
    REPEAT_CROSS_PAIR = "RepeatCrossPair"
    PRODUCTIVE_STEP = "ProductiveStep"
    SAME_COLOR_JUMP_PAIR = "SameColorJumpPair"
    RESIDUAL = "Residual"


@dataclass(frozen=True)
class CrossingEvent:
    move_index: int
    jumper: PegId
    jumped: PegId
    direction: int  # +1 right, -1 left (direction of the jumper)

    @property
    def red_blue(self) -> bool:
        return self.jumper.color is not self.jumped.color

    @property
    def pair(self) -> Optional[tuple[PegId, PegId]]:
        """``(red, blue)`` for a red/blue crossing, else None."""
        if not self.red_blue:
            return None
        if self.jumper.color is Color.RED:
            return (self.jumper, self.jumped)
        return (self.jumped, self.jumper)

    @property
    def weight_delta(self) -> int:
        return 2 * self.direction * self.jumper.color.forward


@dataclass
class CrossingLog:
    n: int
    events: list[CrossingEvent]
    pair_counts: dict[tuple[PegId, PegId], int]
    first_cross: dict[tuple[PegId, PegId], int]
    same_color_counts: dict[tuple[PegId, PegId], int]

    @property
    def first_cross_moves(self) -> frozenset[int]:
        return frozenset(self.first_cross.values())

    @property
    def even_pairs(self) -> list[tuple[PegId, PegId]]:
        return [p for p, c in self.pair_counts.items() if c % 2 == 0]

    @property
    def parity_ok(self) -> bool:
        return not self.even_pairs


@dataclass(frozen=True)
class PegEvent:
    peg: PegId
    move_index: int
    kind: EventKind


@dataclass
class AlternationResult:
    """First violating log position per peg (None when the log alternates)."""

    per_peg: dict[Hashable, Optional[int]]
    mechanism: list[tuple[Hashable, int, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(v is None for v in self.per_peg.values()) and not self.mechanism


@dataclass(frozen=True)
class MoveGroup:
    kind: GroupKind
    members: tuple[int, ...]
    gain: int
    rule: str = ""  # for same-color pairs: "next" or "previous"

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass
class Grouping:
    groups: list[MoveGroup]
    conflicts: list[tuple[int, int]] = field(default_factory=list)
    missing: list[int] = field(default_factory=list)
    unexpected: list[tuple[int, int]] = field(default_factory=list)
    uneven_repeats: list[tuple[PegId, PegId]] = field(default_factory=list)
    bad_residuals: list[int] = field(default_factory=list)
    overruns: list[MoveGroup] = field(default_factory=list)
    partition_ok: bool = True
    # groups joined because a pairing claimed a move another group owns
    blocks: list[tuple[int, ...]] = field(default_factory=list)
    block_overruns: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def pairing_ok(self) -> bool:
        return not (self.conflicts or self.missing or self.unexpected)


def _require_ids(trace: SolutionTrace) -> None:
    if trace.boards[0].peg_ids is None:
        raise AuditError("trace does not track peg identities")


def _all_pegs(n: int) -> list[PegId]:
    return [PegId(Color.BLUE, i) for i in range(1, n + 1)] + [
        PegId(Color.RED, i) for i in range(1, n + 1)
    ]


def track_crossings(trace: SolutionTrace) -> CrossingLog:
    _require_ids(trace)
    n = trace.n
    reds = [PegId(Color.RED, i) for i in range(1, n + 1)]
    blues = [PegId(Color.BLUE, i) for i in range(1, n + 1)]
    pair_counts = {(r, b): 0 for r in reds for b in blues}
    first: dict[tuple[PegId, PegId], int] = {}
    same: dict[tuple[PegId, PegId], int] = defaultdict(int)
    events = []
    for k, m in enumerate(trace.moves):
        if m.kind is not MoveKind.JUMP:
            continue
        ids = trace.boards[k].peg_ids
        ev = CrossingEvent(k, ids[m.from_index], ids[m.jumped_index], m.direction)
        events.append(ev)
        pair = ev.pair
        if pair is None:
            same[tuple(sorted((ev.jumper, ev.jumped), key=lambda p: p.ordinal))] += 1
        else:
            pair_counts[pair] += 1
            first.setdefault(pair, k)
    return CrossingLog(n, events, pair_counts, first, dict(same))


def peg_event_log(trace: SolutionTrace) -> dict[PegId, list[PegEvent]]:
    """What each peg notices, in move order; quiet turns are omitted."""
    _require_ids(trace)
    logs: dict[PegId, list[PegEvent]] = {p: [] for p in _all_pegs(trace.n)}
    for k, m in enumerate(trace.moves):
        ids = trace.boards[k].peg_ids
        mover = ids[m.from_index]
        logs[mover].append(PegEvent(mover, k, EventKind.D if m.direction > 0 else EventKind.B))
        if m.kind is MoveKind.JUMP:
            over = ids[m.jumped_index]
            logs[over].append(PegEvent(over, k, EventKind.C if m.direction > 0 else EventKind.A))
    return logs


def _kind(event) -> EventKind:
    return event.kind if isinstance(event, PegEvent) else EventKind(event)


def check_alternation(
    logs: Mapping[Hashable, Sequence[Union[PegEvent, str]]],
    trace: Optional[SolutionTrace] = None,
) -> AlternationResult:
    """Check that {A, B} events alternate with {C, D} events in every log.

    With a trace, also check the reason: after an {A, B} event the empty
    hole lies to the peg's right and stays there until the peg's next
    event (mirror image for {C, D}); the first event is checked against the
    side the hole starts on.
    """
    per_peg: dict[Hashable, Optional[int]] = {}
    for peg, log in logs.items():
        per_peg[peg] = None
        for i in range(1, len(log)):
            if _kind(log[i]).leaves_hole_right == _kind(log[i - 1]).leaves_hole_right:
                per_peg[peg] = i
                break
    result = AlternationResult(per_peg)
    if trace is None:
        return result

    _require_ids(trace)
    start = trace.boards[0]
    side = {pid: (1 if start.empty_index > pos else -1)
            for pos, pid in enumerate(start.peg_ids) if pid is not None}
    event_at = defaultdict(dict)
    for peg, log in logs.items():
        for ev in log:
            event_at[ev.move_index][peg] = _kind(ev)
    for k in range(len(trace.moves)):
        for peg, kind in event_at.get(k, {}).items():
            needed = -1 if kind.leaves_hole_right else 1
            if side[peg] != needed:
                result.mechanism.append((peg, k, f"{kind.value} with hole on the wrong side"))
            side[peg] = -needed
        after = trace.boards[k + 1]
        e = after.empty_index
        for pos, pid in enumerate(after.peg_ids):
            if pid is not None and (1 if e > pos else -1) != side[pid]:
                result.mechanism.append((pid, k, "hole changed side without an event"))
                side[pid] = 1 if e > pos else -1
    return result


def _opposite_crossers(crossings: CrossingLog) -> dict[PegId, list[tuple[int, PegId]]]:
    """For each peg, (move index, opposite-colored peg) of every red/blue crossing it took part in."""
    out: dict[PegId, list[tuple[int, PegId]]] = defaultdict(list)
    for ev in crossings.events:
        if ev.red_blue:
            out[ev.jumped].append((ev.move_index, ev.jumper))
            out[ev.jumper].append((ev.move_index, ev.jumped))
    return out


def build_groups(
    trace: SolutionTrace,
    crossings: Optional[CrossingLog] = None,
    logs: Optional[dict[PegId, list[PegEvent]]] = None,
) -> Grouping:
    """Partition the moves of ``trace`` into weight-accounting groups.

    First crossings are singletons.  All later crossings of one red/blue pair
    form one group.  Weight +1 steps are singletons.  A weight-increasing
    jump of one peg over a peg ``R`` of its own color is paired with the
    next event ``R`` notices, or with the previous one when every peg of the
    opposite color has already crossed ``R``.  Whatever is left must lower
    the weight and stays alone.  Pairing problems are recorded, not raised.
    """
    _require_ids(trace)
    crossings = crossings or track_crossings(trace)
    logs = logs or peg_event_log(trace)
    n = trace.n
    deltas = [m.weight_delta for m in trace.moves]
    owner: dict[int, int] = {}
    groups: list[MoveGroup] = []
    result = Grouping(groups)

    def add(kind: GroupKind, members: Iterable[int], rule: str = "") -> None:
        members = tuple(members)
        gid = len(groups)
        for k in members:
            if k in owner:
                result.partition_ok = False
            owner[k] = gid
        groups.append(MoveGroup(kind, members, sum(deltas[k] for k in members), rule))

    for k in sorted(crossings.first_cross_moves):
        add(GroupKind.FIRST_CROSS, [k])

    repeats: dict[tuple[PegId, PegId], list[CrossingEvent]] = defaultdict(list)
    first_moves = crossings.first_cross_moves
    for ev in crossings.events:
        if ev.red_blue and ev.move_index not in first_moves:
            repeats[ev.pair].append(ev)
    for pair, evs in sorted(repeats.items(), key=lambda kv: kv[1][0].move_index):
        add(GroupKind.REPEAT_CROSS_PAIR, [ev.move_index for ev in evs])
        ups = sum(ev.weight_delta > 0 for ev in evs)
        if trace.solved and 2 * ups != len(evs):
            result.uneven_repeats.append(pair)

    for k, m in enumerate(trace.moves):
        if m.kind is MoveKind.STEP and deltas[k] > 0:
            add(GroupKind.PRODUCTIVE_STEP, [k])

    links: list[tuple[int, int]] = []
    crossed_by = _opposite_crossers(crossings)
    index_in_log = {
        (peg, ev.move_index): i for peg, log in logs.items() for i, ev in enumerate(log)
    }
    for ev in crossings.events:
        k = ev.move_index
        if ev.red_blue or deltas[k] <= 0:
            continue
        R, S = ev.jumped, ev.jumper
        seen = {other for when, other in crossed_by[R] if when < k}
        rule = "previous" if len(seen) == n else "next"
        i = index_in_log[(R, k)] + (-1 if rule == "previous" else 1)
        if not 0 <= i < len(logs[R]):
            result.missing.append(k)
            add(GroupKind.SAME_COLOR_JUMP_PAIR, [k], rule)
            continue
        p = logs[R][i].move_index
        pm = trace.moves[p]
        ids = trace.boards[p].peg_ids
        reverse_jump = (
            pm.kind is MoveKind.JUMP
            and ids[pm.from_index] == S
            and ids[pm.jumped_index] == R
            and pm.direction == -ev.direction
        )
        own_backward = ids[pm.from_index] == R and deltas[p] <= -1
        if not (reverse_jump or own_backward):
            result.unexpected.append((k, p))
        if p in owner:
            result.conflicts.append((k, p))
            add(GroupKind.SAME_COLOR_JUMP_PAIR, [k], rule)
            links.append((len(groups) - 1, owner[p]))
        else:
            add(GroupKind.SAME_COLOR_JUMP_PAIR, [k, p], rule)

    for k in range(len(trace.moves)):
        if k not in owner:
            add(GroupKind.RESIDUAL, [k])
            if deltas[k] > -1:
                result.bad_residuals.append(k)

    if len(owner) != len(trace.moves):
        result.partition_ok = False
    result.blocks = _merge(len(groups), links)
    merged = {g for block in result.blocks for g in block}
    result.overruns = [
        g
        for i, g in enumerate(groups)
        if g.kind is not GroupKind.FIRST_CROSS and i not in merged and g.gain > g.size
    ]
    result.block_overruns = [
        block
        for block in result.blocks
        if sum(groups[g].gain for g in block) > sum(groups[g].size for g in block)
    ]
    return result


def _merge(count: int, links: list[tuple[int, int]]) -> list[tuple[int, ...]]:
    """Connected components of groups under ``links``; singletons omitted."""
    parent = list(range(count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in links:
        parent[find(a)] = find(b)
    comps: dict[int, list[int]] = defaultdict(list)
    for g in range(count):
        comps[find(g)].append(g)
    return sorted(tuple(c) for c in comps.values() if len(c) > 1)


@dataclass
class AuditReport:
    n: int
    move_count: int
    solved: bool
    final_weight: int
    first_cross_count: int
    pair_crossings: dict[str, int]
    parity_ok: Optional[bool]
    alternation: AlternationResult
    grouping: Grouping
    first_cross_weight: int
    other_moves: int
    other_gain: int
    implied_minimum: int
    checks: dict[str, Optional[bool]]

    @property
    def groups(self) -> list[MoveGroup]:
        return self.grouping.groups

    @property
    def passed(self) -> bool:
        return all(v is not False for v in self.checks.values()) and self.solved

    @property
    def failures(self) -> list[str]:
        return [name for name, ok in self.checks.items() if ok is False]

    def group_counts(self) -> dict[str, int]:
        counts = {kind.value: 0 for kind in GroupKind}
        for g in self.groups:
            counts[g.kind.value] += 1
        return counts


MovesLike = Union[str, MoveScript, Sequence[Move], SolutionTrace]


def _to_trace(n: int, moves: MovesLike, start: Optional[Board]) -> SolutionTrace:
    if isinstance(moves, SolutionTrace):
        return moves
    if isinstance(moves, (str, MoveScript)):
        return replay(n, moves, start)
    return trace_moves(n, moves, start)


def audit_solution(n: int, moves: MovesLike, *, start: Optional[Board] = None) -> AuditReport:
    """Run every bookkeeping check on one solution.

    ``start`` may supply an initial board with a different (but valid)
    labelling of same-colored pegs.  Replay errors propagate.
    """
    trace = _to_trace(n, moves, start)
    _require_ids(trace)
    crossings = track_crossings(trace)
    logs = peg_event_log(trace)
    alternation = check_alternation(logs, trace)
    grouping = build_groups(trace, crossings, logs)

    solved = trace.solved
    final_weight = trace.weight_trace[-1] if trace.moves else 0
    fc = len(crossings.first_cross)
    fc_weight = sum(trace.moves[k].weight_delta for k in crossings.first_cross_moves)
    other_moves = len(trace.moves) - fc
    other_gain = final_weight - fc_weight
    group_gain = sum(g.gain for g in grouping.groups if g.kind is not GroupKind.FIRST_CROSS)
    applicable = None if not solved else True
    checks: dict[str, Optional[bool]] = {
        "solved": solved,
        "final_weight": (final_weight == 2 * n * (n + 1)) if solved else None,
        "crossing_parity": crossings.parity_ok if solved else None,
        "first_cross_count": (fc == n * n) if solved else None,
        "first_cross_weight": fc_weight == 2 * fc,
        "alternation": alternation.passed,
        "partition": grouping.partition_ok,
        "pairing": grouping.pairing_ok,
        "repeat_cross_split": (not grouping.uneven_repeats) if applicable else None,
        "residuals_decrease": not grouping.bad_residuals,
        "group_average": not grouping.overruns,
        "merged_block_average": not grouping.block_overruns,
        "gain_accounting": group_gain == other_gain,
        "average_gain": other_gain <= other_moves,
        "move_bound": (n * n + 2 * n <= len(trace.moves)) if solved else None,
    }
    return AuditReport(
        n=n,
        move_count=len(trace.moves),
        solved=solved,
        final_weight=final_weight,
        first_cross_count=fc,
        pair_crossings={f"{r}-{b}": c for (r, b), c in crossings.pair_counts.items()},
        parity_ok=crossings.parity_ok if solved else None,
        alternation=alternation,
        grouping=grouping,
        first_cross_weight=fc_weight,
        other_moves=other_moves,
        other_gain=other_gain,
        implied_minimum=fc + other_gain,
        checks=checks,
    )


def relabelled_start(n: int, color: Color, a: int, b: int) -> Board:
    """Initial board with the identities of two same-colored pegs swapped."""
    base = initial_board(n)
    swap = {PegId(color, a): PegId(color, b), PegId(color, b): PegId(color, a)}
    ids = tuple(swap.get(p, p) if p is not None else None for p in base.peg_ids)
    return Board(n, base.cells, ids)
