"""Chord removal, reduction of descending diagrams and unknotting bounds."""
import itertools
import logging
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Tuple, Union

from .errors import BoundViolation, EmptyDiagram, LimitsExceeded, NotRemovable, WeldedError
from .gauss import (C1_REMOVE, W, Direction, GaussDiagram, GaussMove, apply_gauss_move,
                    apply_with_inverse, basepoints, canonical_code, crossing_changes,
                    reading_order)
from .pdmoves import PDMove, apply_pd_move
from .planar import PlanarDiagram, pd_to_gauss

logger = logging.getLogger(__name__)

Move = Union[GaussMove, PDMove]
State = Union[GaussDiagram, PlanarDiagram]


def state_code(state: State) -> str:
    if isinstance(state, PlanarDiagram):
        return canonical_code(pd_to_gauss(state))
    return canonical_code(state)


@dataclass(frozen=True)
class TraceStep:
    move: Move
    pre: str
    post: str

    def __str__(self):
        return '{} | {}'.format(self.move, self.post).rstrip()


@dataclass
class ReductionTrace:
    """Moves applied one after another to ``start``."""
    start: State
    steps: List[TraceStep] = field(default_factory=list)

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def record(self, move: Move, pre: str, post: str):
        self.steps.append(TraceStep(move, pre, post))

    def extend(self, other: 'ReductionTrace'):
        self.steps.extend(other.steps)

    @property
    def final_code(self) -> str:
        return self.steps[-1].post if self.steps else state_code(self.start)


def format_trace(trace: ReductionTrace) -> str:
    return '\n'.join(str(step) for step in trace)


def replay_trace(trace: ReductionTrace) -> Optional[State]:
    """Apply the recorded moves again; None as soon as a recorded code disagrees."""
    state = trace.start
    for step in trace:
        if state_code(state) != step.pre:
            return None
        try:
            if isinstance(step.move, PDMove):
                state = apply_pd_move(state, step.move)
            else:
                state = apply_gauss_move(state, step.move)
        except WeldedError:
            logger.warning("replay failed at %s", step.move)
            return None
        if state_code(state) != step.post:
            return None
    return state


def _apply(G: GaussDiagram, move: GaussMove, trace: ReductionTrace) -> GaussDiagram:
    pre = canonical_code(G)
    result, _ = apply_with_inverse(G, move)
    trace.record(move, pre, canonical_code(result))
    return result


# -- descending diagrams -------------------------------------------------------

def descending_change_set(G: GaussDiagram, basepoint: int = 0,
                          direction: Direction = Direction.FORWARD) -> FrozenSet[int]:
    """Chords met head first when reading from ``basepoint`` in ``direction``."""
    if G.n == 0:
        return frozenset()
    rank = {p: i for i, p in enumerate(reading_order(G, basepoint, direction))}
    return frozenset(c.id for c in G.chords if rank[c.head] < rank[c.tail])


@dataclass(frozen=True)
class Arc:
    """Open arc walked forward from endpoint ``start`` to endpoint ``end``."""
    start: int
    end: int
    positions: Tuple[int, ...]


def _arc(G: GaussDiagram, start: int, end: int) -> Arc:
    size = G.size
    length = (end - start - 1) % size
    return Arc(start, end, tuple((start + 1 + i) % size for i in range(length)))


def removable_arc(G: GaussDiagram, chord_id: int) -> Optional[Arc]:
    chord = G.chord(chord_id)
    candidates = []
    for arc in (_arc(G, chord.tail, chord.head), _arc(G, chord.head, chord.tail)):
        if all(G.sequence[p][1] for p in arc.positions):
            candidates.append(arc)
    if not candidates:
        return None
    return min(candidates, key=lambda arc: (len(arc.positions), arc.start))


def remove_chord(G: GaussDiagram, chord_id: int) -> Tuple[GaussDiagram, ReductionTrace]:
    """Slide the tail of the chord over the tails of its free arc, then drop the kink."""
    arc = removable_arc(G, chord_id)
    if arc is None:
        raise NotRemovable(chord_id)
    trace = ReductionTrace(G)
    size = G.size
    tail = G.chord(chord_id).tail
    forward = arc.start == tail
    for _ in arc.positions:
        if forward:
            G = _apply(G, GaussMove(W, (tail, (tail + 1) % size)), trace)
            tail = (tail + 1) % size
        else:
            G = _apply(G, GaussMove(W, ((tail - 1) % size, tail)), trace)
            tail = (tail - 1) % size
    start = tail if forward else (tail - 1) % size
    G = _apply(G, GaussMove(C1_REMOVE, (start if size > 2 else 0,)), trace)
    return G, trace


def weld_chord(G: GaussDiagram, chord_id: int) -> Tuple[GaussDiagram, Optional[ReductionTrace]]:
    """Replace a crossing by a welded one.

    The trace shows that the result is the same welded knot; it is None when
    the chord has a head on both of its arcs.
    """
    G.chord(chord_id)
    try:
        return remove_chord(G, chord_id)
    except NotRemovable:
        signs = {k: v for k, v in G.signs.items() if k != chord_id}
        rest = [e for e in G.sequence if e[0] != chord_id]
        return GaussDiagram.from_sequence(rest, signs), None


def reduce(G: GaussDiagram) -> Tuple[GaussDiagram, ReductionTrace]:
    trace = ReductionTrace(G)
    while True:
        removable = [c for c in G.chord_ids() if removable_arc(G, c) is not None]
        if not removable:
            return G, trace
        G, steps = remove_chord(G, removable[0])
        trace.extend(steps)


def best_basepoint(G: GaussDiagram) -> Tuple[int, Direction, FrozenSet[int]]:
    """Basepoint and direction needing the fewest crossing changes."""
    choices = []
    for b in basepoints(G):
        for order, d in enumerate((Direction.FORWARD, Direction.BACKWARD)):
            changes = descending_change_set(G, b, d)
            choices.append(((len(changes), b, order), b, d, changes))
    _, b, d, changes = min(choices, key=lambda choice: choice[0])
    return b, d, changes


def unknot_descending(G: GaussDiagram) -> Tuple[FrozenSet[int], ReductionTrace]:
    _, _, changes = best_basepoint(G)
    result, trace = reduce(crossing_changes(G, sorted(changes)))
    if result.n:
        raise WeldedError("descending diagram {} did not reduce".format(canonical_code(result)))
    return changes, trace


# -- bounds ------------------------------------------------------------------

@dataclass(frozen=True)
class BoundCertificate:
    """Two complementary crossing-change sets around the tail of one chord."""
    chord: int
    p1: int
    p2: int
    s1: FrozenSet[int]
    s2: FrozenSet[int]
    n: int

    @property
    def bound(self) -> int:
        return min(len(self.s1), len(self.s2))

    @property
    def holds(self) -> bool:
        return 2 * self.bound <= self.n - 1

    def check_text(self) -> str:
        return '{} ≤ {}: {}'.format(self.bound, (self.n - 1) // 2, 'OK' if self.holds else 'FAILED')

    def verify(self) -> "BoundCertificate":
        if self.s1 & self.s2:
            raise BoundViolation(self.chord, "S1 and S2 share {}".format(sorted(self.s1 & self.s2)))
        if self.chord in self.s1 | self.s2:
            raise BoundViolation(self.chord, "the chord itself is changed")
        if len(self.s1) + len(self.s2) != self.n - 1:
            raise BoundViolation(self.chord, "{} + {} changes for {} chords".format(
                len(self.s1), len(self.s2), self.n))
        return self


def chord_certificate(G: GaussDiagram, chord_id: int) -> BoundCertificate:
    tail = G.chord(chord_id).tail
    p1, p2 = tail, (tail + 1) % G.size
    s1 = descending_change_set(G, p1, Direction.FORWARD)
    s2 = descending_change_set(G, p2, Direction.BACKWARD)
    return BoundCertificate(chord_id, p1, p2, s1, s2, G.n).verify()


def complementary_bound(G: GaussDiagram) -> BoundCertificate:
    if G.n == 0:
        raise EmptyDiagram()
    certificates = [chord_certificate(G, c) for c in G.chord_ids()]
    return min(certificates, key=lambda cert: (cert.bound, cert.chord))


prop24_bound = complementary_bound


@dataclass(frozen=True)
class UBound:
    value: int
    witness: FrozenSet[int]
    exhaustive_below: bool


def unknotting_upper(G: GaussDiagram, limits=None) -> UBound:
    """Smallest chord set, by size then id order, whose flip is certified trivial."""
    from .search import SearchLimits, is_trivial_bounded

    limits = limits or SearchLimits()
    ids = G.chord_ids()
    for size in range(len(ids) + 1):
        for subset in itertools.combinations(ids, size):
            verdict = is_trivial_bounded(crossing_changes(G, subset), limits)
            if verdict.certified:
                logger.debug("flipping %s certified trivial", subset)
                result = UBound(size, frozenset(subset), True)
                if G.n:
                    certificate = complementary_bound(G)
                    if result.value > certificate.bound:
                        raise BoundViolation(certificate.chord, "{} changes needed, bound is {}".format(
                            result.value, certificate.bound))
                return result
    raise LimitsExceeded(None, limits)
