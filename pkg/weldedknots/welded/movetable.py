"""Gauss-level patterns of the local moves, read off planar realizations.

Every move is applied to small welded shadows whose site crossings are made
classical in all possible ways. The Gauss images before and after the move,
restricted to the strands running through the site, give the pattern. The
table is derived once per process and cached.
"""
import itertools
import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from .errors import OracleInconsistency
from .pdmoves import (FORWARD, SELF_INVERSE, Applied, PDMove, apply_pd_move, apply_pd_move_with_inverse,
                      face_kinds, find_sites, interior_segments, simple_face)
from .planar import (CIRCLE, CLASSICAL, TREFOIL, PlanarDiagram, faces, mirror,
                     passages, pd_canonical_key, reverse, set_crossing, shadow)

logger = logging.getLogger(__name__)

MOVE_TABLE_VERSION = 2

INSERTION_CROSSINGS = 2
TRIANGLE_CROSSINGS = 5
SQUARE_CROSSINGS = 4

PATTERN_KINDS = ('C1', 'C2', 'C3', 'W', 'Delta', 'Sharp', 'Pass', 'T4', 'T4bar', 'Gamma')

Token = Tuple[int, bool, int]
Segment = Tuple[Token, ...]
Pattern = Tuple[Tuple[Segment, ...], Tuple[Segment, ...]]


@dataclass(frozen=True)
class Rewrite:
    """Segments to find, what replaces them, and the index of the inverse rewrite."""
    before: Tuple[Segment, ...]
    after: Tuple[Segment, ...]
    inverse: int = -1


IDENTITY = Rewrite((), (), 0)


def shadow_layers(max_crossings: int) -> Iterator[List[PlanarDiagram]]:
    """All-welded diagrams grouped by crossing count, grown by V1, V2 and V3.

    The circle and the trefoil shadow seed the growth; each layer is closed
    under reversal and mirror images.
    """
    layers: Dict[int, Dict[tuple, PlanarDiagram]] = {}
    seeds = {0: [CIRCLE], TREFOIL.m: [shadow(TREFOIL)]}
    for m in range(max_crossings + 1):
        layer = {}
        queue = deque(seeds.get(m, []))
        for P in layers.get(m - 1, {}).values():
            queue.extend(apply_pd_move(P, move) for move in find_sites(P, 'V1', FORWARD))
        for P in layers.get(m - 2, {}).values():
            queue.extend(apply_pd_move(P, move) for move in find_sites(P, 'V2', FORWARD))
        while queue:
            P = queue.popleft()
            for variant in (P, reverse(P), mirror(P)):
                key = pd_canonical_key(variant)
                if key not in layer:
                    layer[key] = variant
                    queue.extend(apply_pd_move(variant, move) for move in find_sites(variant, 'V3', FORWARD))
        layers[m] = layer
        logger.debug("%d shadows with %d crossings", len(layer), m)
        yield [layer[key] for key in sorted(layer)]


def shadows(max_crossings: int) -> List[PlanarDiagram]:
    return [P for layer in shadow_layers(max_crossings) for P in layer]


def _labelings(P: PlanarDiagram, crossing_ids, with_welded: bool):
    choices = [(CLASSICAL, True), (CLASSICAL, False)]
    if with_welded:
        choices.append((None, None))
    for combo in itertools.product(choices, repeat=len(crossing_ids)):
        Q = P
        for crossing_id, (kind, over) in zip(crossing_ids, combo):
            if kind == CLASSICAL:
                Q = set_crossing(Q, crossing_id, CLASSICAL, over)
        yield Q


def _runs(P: PlanarDiagram, interior) -> List[Tuple[int, Segment]]:
    """Classical tokens along each strand through the site, keyed by entering edge."""
    circuit = passages(P)
    runs = []
    for run in interior_segments(P, interior):
        tokens = []
        for i in run:
            p = circuit[i]
            c = P.crossings[p.index]
            if c.is_classical:
                tokens.append((c.id, p.in_slot != 0, c.sign))
        runs.append((circuit[run[0]].in_edge, tuple(tokens)))
    return runs


def _raw_pairs(P: PlanarDiagram, applied: Applied) -> List[Tuple[Segment, Segment]]:
    after = _runs(applied.pd, applied.after_interior)
    before = _runs(P, applied.before_interior)
    if not before:
        pairs = [((), tokens) for _, tokens in after]
    else:
        by_entry = dict(after)
        pairs = [(tokens, by_entry.get(entry, ())) for entry, tokens in before]
    return [(b, a) for b, a in pairs if not (b == a and len(b) <= 1)]


def _relabel(pairs) -> Pattern:
    labels = {}
    before = tuple(tuple((labels.setdefault(l, len(labels) + 1), t, s) for l, t, s in b) for b, _ in pairs)
    after = tuple(tuple((labels.setdefault(l, len(labels) + 1), t, s) for l, t, s in a) for _, a in pairs)
    return before, after


def canonical_pattern(pairs) -> Pattern:
    """Least relabelled form over all orderings of the segments."""
    return min(_relabel(order) for order in itertools.permutations(pairs))


class _Collector:
    def __init__(self):
        self.patterns: Dict[str, Dict[tuple, Pattern]] = {}

    def record(self, kind: str, P: PlanarDiagram, applied: Applied):
        pairs = _raw_pairs(P, applied)
        if not pairs:
            return
        pattern = canonical_pattern(pairs)
        found = self.patterns.setdefault(kind, {})
        signature = pattern[0] if kind in SELF_INVERSE else pattern
        known = found.setdefault(signature, pattern)
        if known != pattern:
            logger.error("%s: conflicting patterns for %s", kind, signature)
            raise OracleInconsistency(kind, signature, known, pattern)

    def table(self) -> Dict[str, Tuple[Rewrite, ...]]:
        table = {}
        for kind, found in sorted(self.patterns.items()):
            if kind not in SELF_INVERSE:
                patterns = sorted(set(found.values()))
                table[kind] = tuple(Rewrite(tuple(() for _ in after), after) for _, after in patterns)
                continue
            patterns = set(found.values())
            patterns |= {_relabel(list(zip(after, before))) for before, after in found.values()}
            ordered = sorted(patterns)
            index = {pattern: i for i, pattern in enumerate(ordered)}
            table[kind] = tuple(Rewrite(before, after, index[_relabel(list(zip(after, before)))])
                                for before, after in ordered)
        return table


def _site_faces(P: PlanarDiagram, length: int):
    for face in faces(P):
        if simple_face(face, length):
            yield tuple(sorted(step.edge for step in face)), sorted({P.crossings[s.start[0]].id for s in face})


def derive_gauss_move_table() -> Dict[str, Tuple[Rewrite, ...]]:
    collector = _Collector()
    corpus = shadows(max(TRIANGLE_CROSSINGS, SQUARE_CROSSINGS))

    for P in corpus:
        if P.m > INSERTION_CROSSINGS:
            break
        for kind in ('C1', 'C2', 'T4', 'T4bar'):
            for move in find_sites(P, kind, FORWARD):
                collector.record(kind, P, apply_pd_move_with_inverse(P, move))

    passes = ((3, ('C3', 'Delta', 'Gamma', 'W'), True, TRIANGLE_CROSSINGS),
              (4, ('Sharp', 'Pass'), False, SQUARE_CROSSINGS))
    for P in corpus:
        for length, kinds, with_welded, limit in passes:
            if P.m > limit:
                continue
            for site, crossing_ids in _site_faces(P, length):
                for Q in _labelings(P, crossing_ids, with_welded):
                    for kind in face_kinds(Q, site):
                        if kind in kinds:
                            collector.record(kind, Q, apply_pd_move_with_inverse(Q, PDMove(kind, FORWARD, site)))

    table = collector.table()
    for kind in PATTERN_KINDS:
        table.setdefault(kind, ())
    for kind in ('V1', 'V2', 'V3', 'V4'):
        table[kind] = (IDENTITY,)
    logger.info("derived Gauss move table v%d from %d shadows: %s", MOVE_TABLE_VERSION, len(corpus),
                ', '.join('{}={}'.format(kind, len(rewrites)) for kind, rewrites in sorted(table.items())))
    return table


@lru_cache(maxsize=None)
def gauss_move_table() -> Dict[str, Tuple[Rewrite, ...]]:
    return derive_gauss_move_table()
