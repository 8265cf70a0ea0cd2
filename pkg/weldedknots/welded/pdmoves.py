"""Local rewrites of planar diagrams.

Sites are named by edge ids, which stay stable outside the rewritten tangle.
Insertions take their new edge and crossing ids from ``fresh_edge`` and
``fresh_crossing``; removals keep the id of the edge entering the removed
tangle.
"""
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, List, Optional, Tuple

from .errors import ForbiddenMove, InapplicableMove
from .planar import (CIRCLE, CIRCLE_EDGE, CLASSICAL, WELDED, Dart, Net, PlanarDiagram,
                     _darts, _other, faces, orientation, passages,
                     pd_canonical_key, pd_crossing_change)

logger = logging.getLogger(__name__)

FORWARD = 'forward'
BACKWARD = 'backward'

PD_MOVE_KINDS = ('C1', 'C2', 'C3', 'V1', 'V2', 'V3', 'V4', 'W', 'Delta', 'Sharp', 'Pass', 'T4', 'T4bar', 'Gamma')
TRIANGLE_KINDS = ('C3', 'V3', 'V4', 'W', 'Delta', 'Gamma')
SQUARE_KINDS = ('Sharp', 'Pass')
SELF_INVERSE = frozenset(TRIANGLE_KINDS + SQUARE_KINDS)


@dataclass(frozen=True)
class PDMove:
    kind: str
    direction: str
    site: Tuple[int, ...]
    variant: str = ''

    def __str__(self):
        text = '{} {} {}'.format(self.kind, self.direction, ' '.join(str(s) for s in self.site))
        return text + (' ' + self.variant if self.variant else '')


@dataclass(frozen=True)
class Applied:
    pd: PlanarDiagram
    inverse: Optional[PDMove]
    before_interior: FrozenSet[int] = field(default_factory=frozenset)
    after_interior: FrozenSet[int] = field(default_factory=frozenset)


class _Context:
    def __init__(self, P: PlanarDiagram):
        self.P = P
        self.slots = [c.edges for c in P.crossings]
        self.darts = _darts(self.slots)
        self.oriented = orientation(P)
        self.faces = faces(P)

    def over(self, dart: Dart) -> Optional[bool]:
        """Whether the strand through ``dart`` is on top; None at welded crossings."""
        c = self.P.crossings[dart[0]]
        if not c.is_classical:
            return None
        return dart[1] % 2 == 1


def _side(step) -> int:
    return 1 if step.agrees else 0


# -- insertions ----------------------------------------------------------------

def _kink(P: PlanarDiagram, ctx: _Context, kind: str, edge: int, variant: str) -> Applied:
    side = variant[-1]
    loop = P.fresh_edge()
    crossing_id = P.fresh_crossing()
    net = Net(P)
    if not P.crossings:
        if side == 'L':
            edges, tail = [loop, loop, CIRCLE_EDGE, CIRCLE_EDGE], (0, 3)
        else:
            edges, tail = [loop, CIRCLE_EDGE, CIRCLE_EDGE, loop], (0, 1)
    else:
        te, he = ctx.oriented[edge]
        out = loop + 1
        edges = [loop, loop, edge, out] if side == 'L' else [loop, out, edge, loop]
        net.replace(he, out)
        tail = te
    crossing_kind = CLASSICAL if kind == 'C1' else WELDED
    index = net.add(crossing_id, crossing_kind, edges, 1)
    result = net.finish(tail)
    if kind == 'C1':
        wanted = 1 if variant[0] == '+' else -1
        if result.crossings[index].sign != wanted:
            net.under[index] = 0
            result = net.finish(tail)
    return Applied(result, PDMove(kind, BACKWARD, (loop,)), frozenset(), frozenset({loop}))


def _twist(P: PlanarDiagram, ctx: _Context, kind: str, site, over_pattern) -> Applied:
    """Insert a chain of crossings between two edges of a common face.

    ``over_pattern`` says, per new crossing, whether the first strand is on
    top; None entries make welded crossings.
    """
    e, se, f, sf = site
    k = len(over_pattern)
    mirrored = se == 1
    f_left_to_right = (sf == 1) != mirrored
    te, he = ctx.oriented[e]
    tf, hf = ctx.oriented[f]
    fresh = iter(range(P.fresh_edge(), P.fresh_edge() + 2 * k + 2))
    right_bottom = next(fresh)
    if f_left_to_right:
        left_top, right_top = f, next(fresh)
    else:
        left_top, right_top = next(fresh), f
    middle_bottom = [next(fresh) for _ in range(k - 1)]
    middle_top = [next(fresh) for _ in range(k - 1)]
    net = Net(P)
    net.replace(he, right_bottom)
    net.replace(hf, right_top if f_left_to_right else left_top)
    first_id = P.fresh_crossing()
    for i in range(k):
        lb = e if i == 0 else middle_bottom[i - 1]
        lt = left_top if i == 0 else middle_top[i - 1]
        rb = right_bottom if i == k - 1 else middle_bottom[i]
        rt = right_top if i == k - 1 else middle_top[i]
        edges = [lb, lt, rt, rb] if mirrored else [lb, rb, rt, lt]
        first_axis = i % 2
        if over_pattern[i] is None:
            net.add(first_id + i, WELDED, edges, None)
        else:
            net.add(first_id + i, CLASSICAL, edges, 1 - first_axis if over_pattern[i] else first_axis)
    interior = tuple(sorted(middle_bottom + middle_top))
    return Applied(net.finish(te), PDMove(kind, BACKWARD, interior), frozenset(), frozenset(interior))


def _face_pairs(ctx: _Context):
    pairs = set()
    for face in ctx.faces:
        for i, a in enumerate(face):
            for b in face[i + 1:]:
                if a.edge == b.edge:
                    continue
                first, second = sorted([(a.edge, _side(a)), (b.edge, _side(b))])
                pairs.add(first + second)
    return sorted(pairs)


# -- removals -----------------------------------------------------------------

def _splice(P: PlanarDiagram, remove: FrozenSet[int]) -> PlanarDiagram:
    circuit = passages(P)
    remaining = [p for p in circuit if P.crossings[p.index].id not in remove]
    if not remaining:
        return CIRCLE
    net = Net(P)
    for i, p in enumerate(remaining):
        following = remaining[(i + 1) % len(remaining)]
        net.replace((following.index, following.in_slot), p.out_edge)
    keep = [i for i, c in enumerate(P.crossings) if c.id not in remove]
    position = {old: new for new, old in enumerate(keep)}
    net.ids = [net.ids[i] for i in keep]
    net.kinds = [net.kinds[i] for i in keep]
    net.slots = [net.slots[i] for i in keep]
    net.under = [net.under[i] for i in keep]
    start = remaining[0]
    return net.finish((position[start.index], start.out_slot))


def _inverse_by_search(before: PlanarDiagram, after: PlanarDiagram, kind: str) -> Optional[PDMove]:
    wanted = pd_canonical_key(before)
    for move in find_sites(after, kind, FORWARD):
        if pd_canonical_key(apply_pd_move(after, move)) == wanted:
            return move
    logger.debug("no inverse %s move found after removal", kind)
    return None


def _removal(P: PlanarDiagram, kind: str, crossing_ids, interior) -> Callable[[], Applied]:
    def run():
        result = _splice(P, frozenset(crossing_ids))
        return Applied(result, _inverse_by_search(P, result, kind), frozenset(interior), frozenset())
    return run


def _bigons(ctx: _Context):
    result = []
    for face in ctx.faces:
        if len(face) != 2:
            continue
        a, b = face
        if a.start[0] == b.start[0] or a.edge == b.edge:
            continue
        result.append(face)
    return result


def _is_clasp(ctx: _Context, face) -> bool:
    a = face[0]
    first, second = ctx.over(a.start), ctx.over(a.end)
    return first is not None and second is not None and first != second


def _twist_chains(ctx: _Context):
    """Chains of four crossings joined by three consecutive clasp bigons."""
    bigons = [face for face in _bigons(ctx) if _is_clasp(ctx, face)]
    at = {}
    for face in bigons:
        for step in face:
            at.setdefault(step.start[0], []).append((face, {step.start[1], (step.start[1] + 3) % 4}))
    chains = {}
    for middle in bigons:
        x2, x3 = middle[0].start[0], middle[1].start[0]
        ends = []
        for crossing in (x2, x3):
            used = next(slots for face, slots in at[crossing] if face is middle)
            ends.append([(face, next(s.start[0] for s in face if s.start[0] != crossing))
                         for face, slots in at[crossing] if face is not middle and not slots & used])
        for first, x1 in ends[0]:
            for last, x4 in ends[1]:
                crossings = {x1, x2, x3, x4}
                if len(crossings) != 4:
                    continue
                edges = tuple(sorted(step.edge for face in (first, middle, last) for step in face))
                parallel = middle[0].agrees != middle[1].agrees
                chains[edges] = (crossings, parallel)
    return chains


# -- triangles and squares ----------------------------------------------------

def _triangle_kind(ctx: _Context, face) -> Tuple[Optional[str], bool]:
    """Classify a triangle face; the flag marks the forbidden configuration."""
    welded = [i for i, step in enumerate(face) if ctx.over(step.end) is None]
    if len(welded) == 3:
        return 'V3', False
    if len(welded) == 2:
        return 'V4', False
    if len(welded) == 1:
        mover = face[(welded[0] + 2) % 3]
        first, second = ctx.over(mover.start), ctx.over(mover.end)
        if first and second:
            return 'W', False
        if not first and not second:
            return None, True
        return None, False
    tops = [int(bool(ctx.over(step.start))) + int(bool(ctx.over(step.end))) for step in face]
    return ('Delta' if tops == [1, 1, 1] else 'C3'), False


def _flip(P: PlanarDiagram, ctx: _Context, kind: str, face) -> Applied:
    net = Net(P)
    outer = []
    for step in face:
        a = (step.start[0], (step.start[1] + 2) % 4)
        b = (step.end[0], (step.end[1] + 2) % 4)
        outer.append((a, b, ctx.slots[a[0]][a[1]], ctx.slots[b[0]][b[1]]))
    for a, b, edge_a, edge_b in outer:
        net.replace(a, edge_b)
        net.replace(b, edge_a)
    a, b, edge_a, edge_b = outer[0]
    edge, head = (edge_a, b) if face[0].agrees else (edge_b, a)
    tail = _other(_darts(net.slots), edge, head)
    site = tuple(sorted(step.edge for step in face))
    interior = frozenset(site)
    return Applied(net.finish(tail), PDMove(kind, FORWARD, site), interior, interior)


def _change_all(P: PlanarDiagram, kind: str, face) -> Applied:
    result = P
    for step in face:
        result = pd_crossing_change(result, P.crossings[step.start[0]].id)
    site = tuple(sorted(step.edge for step in face))
    return Applied(result, PDMove(kind, FORWARD, site), frozenset(site), frozenset(site))


def _square_kind(ctx: _Context, face) -> Optional[str]:
    if any(ctx.over(step.start) is None for step in face):
        return None
    if all(ctx.over(step.start) != ctx.over(step.end) for step in face):
        return 'Sharp'
    antiparallel = face[0].agrees == face[2].agrees and face[1].agrees == face[3].agrees
    even = [ctx.over(face[i].start) and ctx.over(face[i].end) for i in (0, 2)]
    odd = [ctx.over(face[i].start) and ctx.over(face[i].end) for i in (1, 3)]
    if antiparallel and (all(even) or all(odd)):
        return 'Pass'
    return None


def simple_face(face, length: int) -> bool:
    return (len(face) == length and len({s.start[0] for s in face}) == length
            and len({s.edge for s in face}) == length)


def face_kinds(P: PlanarDiagram, site: Tuple[int, ...]) -> List[str]:
    """Triangle and square move kinds applicable at the face bounded by ``site``."""
    ctx = _Context(P)
    for face in ctx.faces:
        if tuple(sorted(step.edge for step in face)) != tuple(site):
            continue
        if simple_face(face, 3):
            kinds = []
            triangle, _ = _triangle_kind(ctx, face)
            if triangle is not None:
                kinds.append(triangle)
            if all(ctx.over(step.start) is not None for step in face):
                kinds.append('Gamma')
            return kinds
        if simple_face(face, 4):
            square = _square_kind(ctx, face)
            return [square] if square is not None else []
    return []


# -- site tables ---------------------------------------------------------------

KINK_VARIANTS = {'C1': ('+L', '+R', '-L', '-R'), 'V1': ('L', 'R')}
CIRCLE_KINK_VARIANTS = {'C1': ('+L', '-L'), 'V1': ('L',)}
TWIST_PATTERNS = {
    'C2': {'first-over': (True, True), 'second-over': (False, False)},
    'V2': {'': (None, None)},
    'T4': {'first-over': (True, False, True, False), 'second-over': (False, True, False, True)},
    'T4bar': {'first-over': (True, False, True, False), 'second-over': (False, True, False, True)},
}


def _candidates(P: PlanarDiagram, kind: str, direction: str) -> Dict[Tuple[Tuple[int, ...], str], Callable[[], Applied]]:
    ctx = _Context(P)
    found = {}
    if kind in SELF_INVERSE:
        direction = FORWARD
    if kind in ('C1', 'V1') and direction == FORWARD:
        if not P.crossings:
            for variant in CIRCLE_KINK_VARIANTS[kind]:
                found[((CIRCLE_EDGE,), variant)] = (lambda v=variant: _kink(P, ctx, kind, CIRCLE_EDGE, v))
        else:
            for edge in P.edge_ids():
                for variant in KINK_VARIANTS[kind]:
                    found[((edge,), variant)] = (lambda e=edge, v=variant: _kink(P, ctx, kind, e, v))
    elif kind in ('C1', 'V1'):
        wanted = CLASSICAL if kind == 'C1' else WELDED
        for c in P.crossings:
            if c.kind != wanted:
                continue
            for s in range(4):
                if c.edges[s] == c.edges[(s + 1) % 4]:
                    found[((c.edges[s],), '')] = _removal(P, kind, {c.id}, {c.edges[s]})
    elif kind in TWIST_PATTERNS and direction == FORWARD:
        for site in _face_pairs(ctx):
            parallel = site[1] != site[3]
            if (kind == 'T4' and not parallel) or (kind == 'T4bar' and parallel):
                continue
            for variant, pattern in TWIST_PATTERNS[kind].items():
                found[(site, variant)] = (lambda s=site, p=pattern: _twist(P, ctx, kind, s, p))
    elif kind in ('C2', 'V2'):
        for face in _bigons(ctx):
            first, second = ctx.over(face[0].start), ctx.over(face[0].end)
            if kind == 'V2' and (first, second) != (None, None):
                continue
            if kind == 'C2' and (first is None or second is None or first != second):
                continue
            ids = {P.crossings[step.start[0]].id for step in face}
            edges = tuple(sorted(step.edge for step in face))
            found[(edges, '')] = _removal(P, kind, ids, edges)
    elif kind in ('T4', 'T4bar'):
        for edges, (crossings, parallel) in _twist_chains(ctx).items():
            if parallel != (kind == 'T4'):
                continue
            ids = {P.crossings[i].id for i in crossings}
            found[(edges, '')] = _removal(P, kind, ids, edges)
    elif kind in TRIANGLE_KINDS:
        for face in ctx.faces:
            if not simple_face(face, 3):
                continue
            site = tuple(sorted(step.edge for step in face))
            if kind == 'Gamma':
                if all(ctx.over(step.start) is not None for step in face):
                    found[(site, '')] = (lambda f=face: _change_all(P, 'Gamma', f))
                continue
            triangle, _ = _triangle_kind(ctx, face)
            if triangle == kind:
                found[(site, '')] = (lambda f=face: _flip(P, ctx, kind, f))
    elif kind in SQUARE_KINDS:
        for face in ctx.faces:
            if simple_face(face, 4) and _square_kind(ctx, face) == kind:
                site = tuple(sorted(step.edge for step in face))
                found[(site, '')] = (lambda f=face: _change_all(P, kind, f))
    return found


def find_sites(P: PlanarDiagram, kind: str, direction: str = FORWARD) -> List[PDMove]:
    if kind not in PD_MOVE_KINDS:
        raise ValueError('unknown move kind {!r}'.format(kind))
    if kind in SELF_INVERSE:
        direction = FORWARD
    return sorted((PDMove(kind, direction, site, variant) for site, variant in _candidates(P, kind, direction)),
                  key=lambda m: (m.site, m.variant))


def _forbidden_sites(P: PlanarDiagram) -> List[Tuple[int, ...]]:
    ctx = _Context(P)
    sites = []
    for face in ctx.faces:
        if simple_face(face, 3) and _triangle_kind(ctx, face)[1]:
            sites.append(tuple(sorted(step.edge for step in face)))
    return sites


def apply_pd_move_with_inverse(P: PlanarDiagram, m: PDMove) -> Applied:
    if m.kind not in PD_MOVE_KINDS or m.direction not in (FORWARD, BACKWARD):
        raise InapplicableMove(m, 'unknown move kind or direction')
    candidates = _candidates(P, m.kind, m.direction)
    action = candidates.get((tuple(m.site), m.variant))
    if action is None:
        if m.kind == 'W' and tuple(m.site) in _forbidden_sites(P):
            raise ForbiddenMove(m, 'the doubly classical arc passes under the welded crossing')
        raise InapplicableMove(m, 'the site does not match the local pattern')
    return action()


def apply_pd_move(P: PlanarDiagram, m: PDMove) -> PlanarDiagram:
    return apply_pd_move_with_inverse(P, m).pd


def interior_segments(P: PlanarDiagram, interior) -> List[List[int]]:
    """Runs of consecutive passages joined by ``interior`` edges, as passage indices."""
    circuit = passages(P)
    if not circuit:
        return []
    count = len(circuit)
    links = [circuit[i].out_edge in interior for i in range(count)]
    if all(links):
        return [list(range(count))]
    start = next(i for i in range(count) if not links[(i - 1) % count])
    runs = []
    current = []
    for offset in range(count):
        i = (start + offset) % count
        if current and links[(i - 1) % count]:
            current.append(i)
        else:
            if len(current) > 1:
                runs.append(current)
            current = [i]
    if len(current) > 1:
        runs.append(current)
    return runs
