"""Gauss diagrams of welded knots and the Gauss-level moves.

A Gauss diagram is stored as the cyclic sequence of its 2n chord endpoints.
Position ``p`` holds the endpoint ``(chord_id, is_tail)``; the tail is the
over-passage, the head the under-passage. Chords keep their ids across every
move that does not delete them.
"""
import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import (InapplicableMove, LabelCountMismatch, MalformedToken,
                     SignMismatch, UnknownChord)

TOKEN_RE = re.compile(r'^([OU])([1-9][0-9]*)([+\-−])$')

C1_ADD = 'C1_add'
C1_REMOVE = 'C1_remove'
C2_ADD = 'C2_add'
C2_REMOVE = 'C2_remove'
C3 = 'C3'
W = 'W'

MOVE_KINDS = (C1_ADD, C1_REMOVE, C2_ADD, C2_REMOVE, C3, W)

Endpoint = Tuple[int, bool]


class Direction(Enum):
    FORWARD = 'forward'
    BACKWARD = 'backward'


@dataclass(frozen=True)
class Chord:
    id: int
    tail: int
    head: int
    sign: int


@dataclass(frozen=True)
class GaussDiagram:
    chords: Tuple[Chord, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'chords', tuple(sorted(self.chords, key=lambda c: c.id)))
        ids = [c.id for c in self.chords]
        if len(set(ids)) != len(ids):
            raise ValueError("chord ids must be unique")
        used = sorted(p for c in self.chords for p in (c.tail, c.head))
        if used != list(range(2 * len(self.chords))):
            raise ValueError("chord endpoints must occupy positions 0..2n-1 exactly once")
        for c in self.chords:
            if c.sign not in (1, -1):
                raise ValueError("chord {} has sign {}, expected +1 or -1".format(c.id, c.sign))

    @classmethod
    def from_sequence(cls, sequence: Sequence[Endpoint], signs: Dict[int, int]) -> 'GaussDiagram':
        tails, heads = {}, {}
        for position, (chord_id, is_tail) in enumerate(sequence):
            (tails if is_tail else heads)[chord_id] = position
        return cls(tuple(Chord(i, tails[i], heads[i], signs[i]) for i in tails))

    @property
    def n(self) -> int:
        return len(self.chords)

    @property
    def size(self) -> int:
        return 2 * len(self.chords)

    @cached_property
    def sequence(self) -> Tuple[Endpoint, ...]:
        seq = [None] * self.size
        for c in self.chords:
            seq[c.tail] = (c.id, True)
            seq[c.head] = (c.id, False)
        return tuple(seq)

    @cached_property
    def signs(self) -> Dict[int, int]:
        return {c.id: c.sign for c in self.chords}

    @cached_property
    def _by_id(self) -> Dict[int, Chord]:
        return {c.id: c for c in self.chords}

    def chord(self, chord_id: int) -> Chord:
        try:
            return self._by_id[chord_id]
        except KeyError:
            raise UnknownChord(chord_id) from None

    def chord_ids(self) -> List[int]:
        return [c.id for c in self.chords]

    def fresh_id(self) -> int:
        return max(self._by_id, default=0) + 1

    def __str__(self):
        return serialize(self)


EMPTY = GaussDiagram()


@dataclass(frozen=True)
class GaussMove:
    """A located, invertible rewrite of a Gauss diagram.

    ``site`` holds positions only (gaps for insertions, run starts for pattern
    moves), ``params`` the sign/orientation variant or the move-table index.
    """
    kind: str
    site: Tuple[int, ...]
    params: Tuple[int, ...] = ()

    def sort_key(self):
        return MOVE_KINDS.index(self.kind), self.site, self.params

    def __str__(self):
        text = ' '.join([self.kind] + [str(p) for p in self.site])
        if self.params:
            text += ' / ' + ' '.join(str(p) for p in self.params)
        return text


def _sign_char(sign: int) -> str:
    return '+' if sign > 0 else '-'


def parse_gauss_code(text: str) -> GaussDiagram:
    """Parse whitespace separated ``O<k><s>`` / ``U<k><s>`` tokens.

    The label of a token becomes the chord id, positions follow token order.
    """
    tails, heads, signs = {}, {}, {}
    counts = {}
    for index, token in enumerate(text.split()):
        match = TOKEN_RE.match(token)
        if match is None:
            raise MalformedToken(token, index)
        letter, label, sign_char = match.groups()
        label = int(label)
        sign = 1 if sign_char == '+' else -1
        overs, unders = counts.get(label, (0, 0))
        if letter == 'O':
            counts[label] = (overs + 1, unders)
            tails[label] = index
        else:
            counts[label] = (overs, unders + 1)
            heads[label] = index
        if signs.setdefault(label, sign) != sign:
            raise SignMismatch(label)
    for label, (overs, unders) in sorted(counts.items()):
        if overs != 1 or unders != 1:
            raise LabelCountMismatch(label, overs, unders)
    return GaussDiagram(tuple(Chord(label, tails[label], heads[label], signs[label]) for label in counts))


def serialize(G: GaussDiagram) -> str:
    labels = {}
    tokens = []
    for chord_id, is_tail in G.sequence:
        label = labels.setdefault(chord_id, len(labels) + 1)
        tokens.append('{}{}{}'.format('O' if is_tail else 'U', label, _sign_char(G.signs[chord_id])))
    return ' '.join(tokens)


def rotate(G: GaussDiagram, k: int) -> GaussDiagram:
    """Move the basepoint so that old position ``k`` becomes position 0."""
    if G.n == 0:
        return G
    size = G.size
    return GaussDiagram(tuple(Chord(c.id, (c.tail - k) % size, (c.head - k) % size, c.sign) for c in G.chords))


def canonical_code(G: GaussDiagram) -> str:
    if G.n == 0:
        return ''
    return min(serialize(rotate(G, k)) for k in range(G.size))


def alignment(source: GaussDiagram, target: GaussDiagram) -> Optional[int]:
    """Return k with serialize(rotate(source, k)) == serialize(target), if any."""
    if source.n != target.n:
        return None
    if source.n == 0:
        return 0
    wanted = serialize(target)
    for k in range(source.size):
        if serialize(rotate(source, k)) == wanted:
            return k
    return None


def crossing_change(G: GaussDiagram, chord_id: int) -> GaussDiagram:
    chord = G.chord(chord_id)
    flipped = Chord(chord.id, chord.head, chord.tail, -chord.sign)
    return GaussDiagram(tuple(flipped if c.id == chord_id else c for c in G.chords))


def crossing_changes(G: GaussDiagram, chord_ids: Iterable[int]) -> GaussDiagram:
    for chord_id in chord_ids:
        G = crossing_change(G, chord_id)
    return G


def trivial_chords(G: GaussDiagram) -> List[int]:
    """Chords whose two endpoints are adjacent on the circle."""
    size = G.size
    return [c.id for c in G.chords if (c.tail - c.head) % size in (1, size - 1)]


# -- basepoints and descending diagrams --------------------------------------

def basepoints(G: GaussDiagram) -> range:
    """Basepoint slots; slot ``b`` is the gap just before position ``b``."""
    return range(max(1, G.size))


def reading_order(G: GaussDiagram, basepoint: int, direction: Direction) -> List[int]:
    size = G.size
    if direction is Direction.FORWARD:
        return [(basepoint + i) % size for i in range(size)]
    return [(basepoint - 1 - i) % size for i in range(size)]


def is_descending(G: GaussDiagram, basepoint: int = 0, direction: Direction = Direction.FORWARD) -> bool:
    rank = {p: i for i, p in enumerate(reading_order(G, basepoint, direction))}
    return all(rank[c.tail] < rank[c.head] for c in G.chords)


def is_descending_anywhere(G: GaussDiagram) -> bool:
    return any(is_descending(G, b, d) for b in basepoints(G) for d in Direction)


# -- move application --------------------------------------------------------

def _insert(sequence: Sequence[Endpoint], insertions: Dict[int, List[Endpoint]]) -> List[Endpoint]:
    """Insert endpoint runs before the given positions; gap 0 goes to the end."""
    result = []
    for position, endpoint in enumerate(sequence):
        if position:
            result.extend(insertions.get(position, ()))
        result.append(endpoint)
    result.extend(insertions.get(0, ()))
    return result


def _run(start: int, length: int, size: int) -> List[int]:
    return [(start + i) % size for i in range(length)]


def _gap_after_removal(size: int, removed: Iterable[int], position: int) -> int:
    """Gap index, in the compacted numbering, where ``position`` used to be."""
    removed = set(removed)
    remaining = [p for p in range(size) if p not in removed]
    for index, p in enumerate(remaining):
        if p > position:
            return index
    return 0


def _table():
    from . import movetable
    return movetable.gauss_move_table()


def _match(G: GaussDiagram, segments, starts) -> Optional[Dict[int, int]]:
    size = G.size
    labels, used = {}, set()
    for segment, start in zip(segments, starts):
        if len(segment) > size:
            return None
        for position, (label, is_tail, sign) in zip(_run(start, len(segment), size), segment):
            if position in used:
                return None
            used.add(position)
            chord_id, tail = G.sequence[position]
            if tail != is_tail or G.signs[chord_id] != sign:
                return None
            if labels.setdefault(label, chord_id) != chord_id:
                return None
    if len(set(labels.values())) != len(labels):
        return None
    return labels


def _matches(G: GaussDiagram, segments) -> List[Tuple[int, ...]]:
    """All start tuples at which the endpoint segments occur."""
    size = G.size
    found = []

    def extend(index, starts, labels):
        if index == len(segments):
            if _match(G, segments, starts) is not None:
                found.append(tuple(starts))
            return
        segment = segments[index]
        candidates = range(size)
        for offset, (label, is_tail, _) in enumerate(segment):
            if label in labels:
                chord = G.chord(labels[label])
                candidates = [((chord.tail if is_tail else chord.head) - offset) % size]
                break
        for start in candidates:
            partial = _match(G, segments[:index + 1], starts + [start])
            if partial is not None:
                extend(index + 1, starts + [start], partial)

    if size:
        extend(0, [], {})
    return found


def _rewrite(G: GaussDiagram, m: GaussMove) -> Tuple[GaussDiagram, GaussMove]:
    size = G.size
    seq = list(G.sequence)
    signs = dict(G.signs)

    if m.kind == W:
        if len(m.site) != 2 or size < 4:
            raise InapplicableMove(m, "W needs two adjacent endpoints")
        p, q = (s % size for s in m.site)
        if q != (p + 1) % size:
            raise InapplicableMove(m, "positions are not adjacent")
        if not (seq[p][1] and seq[q][1]):
            raise InapplicableMove(m, "W swaps two adjacent tails only")
        seq[p], seq[q] = seq[q], seq[p]
        return GaussDiagram.from_sequence(seq, signs), m

    if m.kind == C1_REMOVE:
        if size == 0:
            raise InapplicableMove(m, "the diagram is empty")
        p = m.site[0] % size
        q = (p + 1) % size
        if seq[p][0] != seq[q][0]:
            raise InapplicableMove(m, "positions {} and {} are not the ends of one chord".format(p, q))
        chord_id = seq[p][0]
        gap = _gap_after_removal(size, (p, q), q)
        inverse = GaussMove(C1_ADD, (gap,), (signs[chord_id], int(seq[p][1])))
        del signs[chord_id]
        rest = [e for e in seq if e[0] != chord_id]
        return GaussDiagram.from_sequence(rest, signs), inverse

    if m.kind == C1_ADD:
        gap = m.site[0]
        sign, tail_first = m.params
        if not 0 <= gap < max(1, size) or sign not in (1, -1):
            raise InapplicableMove(m, "no such insertion slot or sign")
        new_id = G.fresh_id()
        run = [(new_id, bool(tail_first)), (new_id, not tail_first)]
        signs[new_id] = sign
        result = _insert(seq, {gap: run})
        start = result.index(run[0])
        return GaussDiagram.from_sequence(result, signs), GaussMove(C1_REMOVE, (start,))

    table = _table()

    if m.kind == C2_ADD:
        rewrites = table['C2']
        index, order = m.params
        if not 0 <= index < len(rewrites) or len(m.site) != 2:
            raise InapplicableMove(m, "unknown C2 pattern")
        g0, g1 = m.site
        if not (0 <= g0 < max(1, size) and 0 <= g1 < max(1, size)):
            raise InapplicableMove(m, "no such insertion slot")
        after = rewrites[index].after
        ids = {}
        for segment in after:
            for label, _, sign in segment:
                if label not in ids:
                    ids[label] = G.fresh_id() + len(ids)
                    signs[ids[label]] = sign
        runs = [[(ids[label], is_tail) for label, is_tail, _ in segment] for segment in after]
        if g0 == g1:
            first, second = (runs[1], runs[0]) if order else (runs[0], runs[1])
            insertions = {g0: first + second}
        else:
            insertions = {g0: runs[0], g1: runs[1]}
        result = _insert(seq, insertions)
        starts = tuple(result.index(run[0]) for run in runs)
        return GaussDiagram.from_sequence(result, signs), GaussMove(C2_REMOVE, starts, (index,))

    if m.kind == C2_REMOVE:
        rewrites = table['C2']
        index = m.params[0] if m.params else -1
        if not 0 <= index < len(rewrites) or len(m.site) != 2:
            raise InapplicableMove(m, "unknown C2 pattern")
        after = rewrites[index].after
        labels = _match(G, after, m.site)
        if labels is None:
            raise InapplicableMove(m, "sites do not match C2 pattern {}".format(index))
        runs = [_run(s, len(seg), size) for seg, s in zip(after, m.site)]
        removed = set(runs[0]) | set(runs[1])
        gaps = [_gap_after_removal(size, removed, run[-1]) for run in runs]
        order = 0
        if gaps[0] == gaps[1]:
            order = 0 if (runs[0][-1] + 1) % size == runs[1][0] else 1
        for chord_id in labels.values():
            del signs[chord_id]
        rest = [e for p, e in enumerate(seq) if p not in removed]
        return GaussDiagram.from_sequence(rest, signs), GaussMove(C2_ADD, tuple(gaps), (index, order))

    if m.kind == C3:
        rewrites = table['C3']
        index = m.params[0] if m.params else -1
        if not 0 <= index < len(rewrites):
            raise InapplicableMove(m, "unknown C3 pattern")
        rewrite = rewrites[index]
        if len(m.site) != len(rewrite.before):
            raise InapplicableMove(m, "C3 needs {} segment starts".format(len(rewrite.before)))
        labels = _match(G, rewrite.before, m.site)
        if labels is None:
            raise InapplicableMove(m, "sites do not match C3 pattern {}".format(index))
        for segment, start in zip(rewrite.after, m.site):
            for position, (label, is_tail, _) in zip(_run(start, len(segment), size), segment):
                seq[position] = (labels[label], is_tail)
        return GaussDiagram.from_sequence(seq, signs), GaussMove(C3, m.site, (rewrite.inverse,))

    raise InapplicableMove(m, "unknown move kind")


def apply_gauss_move(G: GaussDiagram, m: GaussMove) -> GaussDiagram:
    return _rewrite(G, m)[0]


def apply_with_inverse(G: GaussDiagram, m: GaussMove) -> Tuple[GaussDiagram, GaussMove]:
    return _rewrite(G, m)


def inverse_move(G: GaussDiagram, m: GaussMove) -> GaussMove:
    return _rewrite(G, m)[1]


def shift_move(m: GaussMove, k: int, size: int) -> GaussMove:
    """Re-express ``m`` after the basepoint moved to old position ``k``."""
    if size == 0:
        return m
    return GaussMove(m.kind, tuple((s - k) % size for s in m.site), m.params)


def enumerate_moves(G: GaussDiagram, kinds: Iterable[str] = MOVE_KINDS) -> List[GaussMove]:
    kinds = set(kinds)
    size = G.size
    seq = G.sequence
    moves = []
    if W in kinds and size >= 4:
        for p in range(size):
            q = (p + 1) % size
            if seq[p][1] and seq[q][1]:
                moves.append(GaussMove(W, (p, q)))
    if C1_REMOVE in kinds:
        for chord_id in trivial_chords(G):
            chord = G.chord(chord_id)
            if size == 2:
                start = 0
            else:
                start = min(chord.tail, chord.head) if abs(chord.tail - chord.head) == 1 else size - 1
            moves.append(GaussMove(C1_REMOVE, (start,)))
    if C1_ADD in kinds:
        for gap in basepoints(G):
            for sign in (1, -1):
                for tail_first in (1, 0):
                    moves.append(GaussMove(C1_ADD, (gap,), (sign, tail_first)))
    if kinds & {C2_ADD, C2_REMOVE, C3}:
        table = _table()
        if C2_ADD in kinds:
            for index in range(len(table['C2'])):
                for g0 in basepoints(G):
                    for g1 in basepoints(G):
                        for order in ((0, 1) if g0 == g1 else (0,)):
                            moves.append(GaussMove(C2_ADD, (g0, g1), (index, order)))
        if C2_REMOVE in kinds:
            for index, rewrite in enumerate(table['C2']):
                for starts in _matches(G, rewrite.after):
                    moves.append(GaussMove(C2_REMOVE, starts, (index,)))
        if C3 in kinds:
            for index, rewrite in enumerate(table['C3']):
                for starts in _matches(G, rewrite.before):
                    moves.append(GaussMove(C3, starts, (index,)))
    return sorted(set(moves), key=GaussMove.sort_key)
