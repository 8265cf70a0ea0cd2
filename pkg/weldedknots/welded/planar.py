"""Planar diagram codes for welded knot diagrams.

Every crossing lists its four edge ids counterclockwise. A classical crossing
starts at the incoming under-edge, so slots 0 and 2 carry the under-strand and
the over-strand runs 3 -> 1 for a positive and 1 -> 3 for a negative crossing.
A welded crossing starts at a marked incoming edge; slots 0 and 2 carry one
strand, slots 1 and 3 the other. Crossing ids are stable labels and double as
chord ids of the Gauss image.
"""
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import InvalidPD, NotClassical
from .gauss import Chord, GaussDiagram

CLASSICAL = 'classical'
WELDED = 'welded'

CIRCLE_EDGE = 1

Dart = Tuple[int, int]


@dataclass(frozen=True)
class Crossing:
    id: int
    kind: str
    edges: Tuple[int, int, int, int]
    sign: int = 0

    @property
    def is_classical(self) -> bool:
        return self.kind == CLASSICAL

    def to_dict(self) -> dict:
        data = {'id': self.id, 'kind': self.kind, 'edges': list(self.edges)}
        if self.is_classical:
            data['sign'] = self.sign
        return data


@dataclass(frozen=True)
class PlanarDiagram:
    crossings: Tuple[Crossing, ...] = ()

    @property
    def m(self) -> int:
        return len(self.crossings)

    def crossing(self, crossing_id: int) -> Crossing:
        for c in self.crossings:
            if c.id == crossing_id:
                return c
        raise KeyError(crossing_id)

    def index_of(self, crossing_id: int) -> int:
        for index, c in enumerate(self.crossings):
            if c.id == crossing_id:
                return index
        raise KeyError(crossing_id)

    def edge_ids(self) -> List[int]:
        return sorted({e for c in self.crossings for e in c.edges})

    def fresh_edge(self) -> int:
        return max(self.edge_ids(), default=CIRCLE_EDGE) + 1

    def fresh_crossing(self) -> int:
        return max((c.id for c in self.crossings), default=0) + 1

    def classical_count(self) -> int:
        return sum(1 for c in self.crossings if c.is_classical)

    def to_dict(self) -> dict:
        return {'crossings': [c.to_dict() for c in self.crossings]}


CIRCLE = PlanarDiagram()


@dataclass(frozen=True)
class PDViolation:
    kind: str
    detail: str

    def __str__(self):
        return '{}: {}'.format(self.kind, self.detail)


@dataclass(frozen=True)
class Passage:
    """One visit of the circuit to a crossing."""
    index: int
    in_slot: int
    in_edge: int
    out_edge: int

    @property
    def out_slot(self) -> int:
        return (self.in_slot + 2) % 4


def pd_from_json(data: dict) -> PlanarDiagram:
    """Build a diagram from the JSON layout; structure only, see validate_pd."""
    if not isinstance(data, dict) or not isinstance(data.get('crossings'), list):
        raise InvalidPD([PDViolation('BadSlots', "expected an object with a 'crossings' list")])
    crossings = []
    for index, entry in enumerate(data['crossings']):
        try:
            kind = entry['kind']
            edges = tuple(int(e) for e in entry['edges'])
            sign = int(entry.get('sign', 0)) if kind == CLASSICAL else 0
            crossing_id = int(entry.get('id', index + 1))
        except (KeyError, TypeError, ValueError, AttributeError):
            raise InvalidPD([PDViolation('BadSlots', 'crossing {} is malformed'.format(index + 1))]) from None
        crossings.append(Crossing(crossing_id, kind, edges, sign))
    return PlanarDiagram(tuple(crossings))


def pd_to_json(P: PlanarDiagram) -> dict:
    return P.to_dict()


def _darts(slots: Sequence[Sequence[int]]) -> Dict[int, List[Dart]]:
    darts = {}
    for c, edges in enumerate(slots):
        for s, e in enumerate(edges):
            darts.setdefault(e, []).append((c, s))
    return darts


def _other(darts: Dict[int, List[Dart]], edge: int, dart: Dart) -> Dart:
    first, second = darts[edge]
    return second if first == dart else first


def _walk(slots: Sequence[Sequence[int]], start: Dart) -> List[Passage]:
    """Follow the circuit from the outgoing dart ``start`` until it closes."""
    darts = _darts(slots)
    passages = []
    seen = set()
    dart = start
    while dart not in seen:
        seen.add(dart)
        c, s = dart
        edge = slots[c][s]
        if len(darts.get(edge, ())) != 2:
            break
        head = _other(darts, edge, dart)
        out = (head[0], (head[1] + 2) % 4)
        seen.add(head)
        passages.append(Passage(head[0], head[1], edge, slots[head[0]][out[1]]))
        dart = out
    return passages


def validate_pd(P: PlanarDiagram) -> List[PDViolation]:
    violations = []
    ids = [c.id for c in P.crossings]
    if len(set(ids)) != len(ids):
        violations.append(PDViolation('BadSlots', 'crossing ids are not unique'))
    for c in P.crossings:
        if c.kind not in (CLASSICAL, WELDED):
            violations.append(PDViolation('BadSlots', 'crossing {} has unknown kind {!r}'.format(c.id, c.kind)))
        if len(c.edges) != 4 or any(e <= 0 for e in c.edges):
            violations.append(PDViolation('BadSlots', 'crossing {} needs four positive edge ids'.format(c.id)))
        if c.kind == CLASSICAL and c.sign not in (1, -1):
            violations.append(PDViolation('BadOverUnder', 'crossing {} has sign {}'.format(c.id, c.sign)))
    if violations:
        return violations
    counts = {}
    for c in P.crossings:
        for e in c.edges:
            counts[e] = counts.get(e, 0) + 1
    for e, count in sorted(counts.items()):
        if count != 2:
            violations.append(PDViolation('DanglingEdge', 'edge {} is used {} time(s)'.format(e, count)))
    if violations or not P.crossings:
        return violations
    slots = [c.edges for c in P.crossings]
    passages = _walk(slots, (0, 2))
    entered = {}
    for p in passages:
        entered.setdefault(p.index, set()).add(p.in_slot)
    for index, c in enumerate(P.crossings):
        slots_in = entered.get(index, set())
        if 2 in slots_in:
            kind = 'BadOverUnder' if c.is_classical else 'BadSlots'
            violations.append(PDViolation(kind, 'crossing {} is not listed from an incoming edge'.format(c.id)))
        elif c.is_classical and slots_in and (3 if c.sign > 0 else 1) not in slots_in and len(slots_in) == 2:
            violations.append(PDViolation('BadOverUnder', 'crossing {} sign disagrees with its over-strand'.format(c.id)))
    if len(passages) != 2 * P.m:
        violations.append(PDViolation('MultipleComponents', 'the circuit visits {} of {} passages'.format(
            len(passages), 2 * P.m)))
    if not violations and len(faces(P)) != P.m + 2:
        violations.append(PDViolation('NonPlanar', 'the rotation system does not describe a planar diagram'))
    return violations


def check_pd(P: PlanarDiagram) -> PlanarDiagram:
    violations = validate_pd(P)
    if violations:
        raise InvalidPD(violations)
    return P


def passages(P: PlanarDiagram) -> List[Passage]:
    """The circuit, starting at the tail of the smallest edge id."""
    if not P.crossings:
        return []
    slots = [c.edges for c in P.crossings]
    oriented = _orientation(slots, (0, 2))
    return _walk(slots, oriented[min(oriented)][0])


def _orientation(slots: Sequence[Sequence[int]], start: Dart) -> Dict[int, Tuple[Dart, Dart]]:
    """Map every edge to its (tail dart, head dart)."""
    result = {}
    darts = _darts(slots)
    for p in _walk(slots, start):
        head = (p.index, p.in_slot)
        result[p.in_edge] = (_other(darts, p.in_edge, head), head)
    return result


def orientation(P: PlanarDiagram) -> Dict[int, Tuple[Dart, Dart]]:
    if not P.crossings:
        return {}
    return _orientation([c.edges for c in P.crossings], (0, 2))


@dataclass(frozen=True)
class FaceStep:
    edge: int
    start: Dart
    end: Dart
    agrees: bool


def faces(P: PlanarDiagram) -> List[Tuple[FaceStep, ...]]:
    """Faces as boundary walks keeping the face on the right-hand side."""
    if not P.crossings:
        return []
    slots = [c.edges for c in P.crossings]
    darts = _darts(slots)
    oriented = _orientation(slots, (0, 2))
    seen = set()
    result = []
    for c in range(len(slots)):
        for s in range(4):
            if (c, s) in seen:
                continue
            boundary = []
            dart = (c, s)
            while dart not in seen:
                seen.add(dart)
                edge = slots[dart[0]][dart[1]]
                end = _other(darts, edge, dart)
                tail = oriented.get(edge, (None,))[0]
                boundary.append(FaceStep(edge, dart, end, tail == dart))
                dart = (end[0], (end[1] + 1) % 4)
            result.append(tuple(boundary))
    return result


def pd_to_gauss(P: PlanarDiagram) -> GaussDiagram:
    check_pd(P)
    return _gauss_image(P)


def _gauss_image(P: PlanarDiagram) -> GaussDiagram:
    tails, heads = {}, {}
    position = 0
    for p in passages(P):
        c = P.crossings[p.index]
        if not c.is_classical:
            continue
        if p.in_slot == 0:
            heads[c.id] = position
        else:
            tails[c.id] = position
        position += 1
    return GaussDiagram(tuple(Chord(c.id, tails[c.id], heads[c.id], c.sign)
                              for c in P.crossings if c.is_classical))


# -- rebuilding after local rewrites -----------------------------------------

class Net:
    """Mutable working copy of a diagram: slot lists plus under-axes."""

    def __init__(self, P: PlanarDiagram):
        self.ids = [c.id for c in P.crossings]
        self.kinds = [c.kind for c in P.crossings]
        self.slots = [list(c.edges) for c in P.crossings]
        self.under = [0 if c.is_classical else None for c in P.crossings]

    def add(self, crossing_id: int, kind: str, edges: Sequence[int], under: Optional[int]) -> int:
        self.ids.append(crossing_id)
        self.kinds.append(kind)
        self.slots.append(list(edges))
        self.under.append(under if kind == CLASSICAL else None)
        return len(self.ids) - 1

    def replace(self, dart: Dart, edge: int):
        self.slots[dart[0]][dart[1]] = edge

    def finish(self, tail: Dart) -> PlanarDiagram:
        """Orient by walking from the outgoing dart ``tail`` and normalize slots."""
        passages_ = _walk(self.slots, tail)
        if len(passages_) != 2 * len(self.slots):
            raise InvalidPD([PDViolation('MultipleComponents', 'rewrite split the circuit')])
        incoming = {(p.index, p.in_slot) for p in passages_}
        crossings = []
        for c, edges in enumerate(self.slots):
            if self.kinds[c] == CLASSICAL:
                axis = self.under[c]
                start = axis if (c, axis) in incoming else axis + 2
                rotated = edges[start:] + edges[:start]
                sign = 1 if (c, (start + 3) % 4) in incoming else -1
                crossings.append(Crossing(self.ids[c], CLASSICAL, tuple(rotated), sign))
            else:
                candidates = [s for s in range(4) if (c, s) in incoming]
                start = min(candidates, key=lambda s: edges[s])
                crossings.append(Crossing(self.ids[c], WELDED, tuple(edges[start:] + edges[:start]), 0))
        return PlanarDiagram(tuple(crossings))


def pd_crossing_change(P: PlanarDiagram, crossing_id: int) -> PlanarDiagram:
    index = P.index_of(crossing_id)
    c = P.crossings[index]
    if not c.is_classical:
        raise NotClassical(crossing_id)
    start = 3 if c.sign > 0 else 1
    edges = c.edges[start:] + c.edges[:start]
    changed = Crossing(c.id, CLASSICAL, edges, -c.sign)
    return PlanarDiagram(P.crossings[:index] + (changed,) + P.crossings[index + 1:])


def set_crossing(P: PlanarDiagram, crossing_id: int, kind: str, over_first_axis: bool = True) -> PlanarDiagram:
    """Relabel one crossing as welded or as classical with a chosen over-strand.

    ``over_first_axis`` puts the strand through slots 0/2 of the current listing
    on top.
    """
    if not P.crossings:
        return P
    net = Net(P)
    index = P.index_of(crossing_id)
    net.kinds[index] = kind
    net.under[index] = (1 if over_first_axis else 0) if kind == CLASSICAL else None
    return net.finish(_orientation_tail(P))


def virtualize(P: PlanarDiagram, crossing_id: int) -> PlanarDiagram:
    """Replace a classical crossing with a welded one."""
    if not P.crossing(crossing_id).is_classical:
        raise NotClassical(crossing_id)
    return set_crossing(P, crossing_id, WELDED)


def _orientation_tail(P: PlanarDiagram) -> Dart:
    oriented = orientation(P)
    edge = P.crossings[0].edges[2]
    return oriented[edge][0]


def reverse(P: PlanarDiagram) -> PlanarDiagram:
    """Reverse the orientation of the knot."""
    if not P.crossings:
        return P
    net = Net(P)
    oriented = orientation(P)
    edge = P.crossings[0].edges[2]
    return net.finish(oriented[edge][1])


def mirror(P: PlanarDiagram) -> PlanarDiagram:
    """Reflect the diagram in the plane; classical signs flip."""
    if not P.crossings:
        return P
    net = Net(P)
    net.slots = [[e[0], e[3], e[2], e[1]] for e in net.slots]
    c, s = _orientation_tail(P)
    return net.finish((c, (0, 3, 2, 1)[s]))


def pd_canonical_key(P: PlanarDiagram) -> tuple:
    """Isomorphism key up to edge renaming and crossing relabelling."""
    if not P.crossings:
        return ()
    slots = [c.edges for c in P.crossings]
    circuit = _walk(slots, _orientation_tail(P))
    best = None
    for shift in range(len(circuit)):
        order = circuit[shift:] + circuit[:shift]
        edge_label = {p.in_edge: i + 1 for i, p in enumerate(order)}
        crossing_label = {}
        for p in order:
            crossing_label.setdefault(p.index, len(crossing_label))
        entries = [None] * len(crossing_label)
        for index, label in crossing_label.items():
            c = P.crossings[index]
            relabelled = [edge_label[e] for e in c.edges]
            if c.is_classical:
                entries[label] = (c.sign, tuple(relabelled))
            else:
                rotations = [tuple(relabelled[s:] + relabelled[:s]) for s in (0, 1, 2, 3)]
                incoming = {edge_label[p.in_edge] for p in circuit if p.index == index}
                entries[label] = (0, min(r for r in rotations if r[0] in incoming))
        key = tuple(entries)
        if best is None or key < best:
            best = key
    return best


TREFOIL = PlanarDiagram((
    Crossing(1, CLASSICAL, (1, 5, 2, 4), 1),
    Crossing(2, CLASSICAL, (3, 1, 4, 6), 1),
    Crossing(3, CLASSICAL, (5, 3, 6, 2), 1),
))


def shadow(P: PlanarDiagram) -> PlanarDiagram:
    """The same diagram with every crossing welded."""
    for c in P.crossings:
        if c.is_classical:
            P = virtualize(P, c.id)
    return P
