"""Bounded breadth-first search over the Gauss move graph."""
import itertools
import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from .errors import InapplicableMove
from .gauss import (MOVE_KINDS, Chord, GaussDiagram, GaussMove, alignment, apply_gauss_move,
                    apply_with_inverse, canonical_code, enumerate_moves, shift_move)
from .movetable import shadow_layers
from .pdmoves import FORWARD, PDMove, apply_pd_move, find_sites
from .planar import CLASSICAL, PlanarDiagram, pd_to_gauss, set_crossing
from .unknotting import ReductionTrace, format_trace, reduce, replay_trace

logger = logging.getLogger(__name__)

CERTIFIED = 'certified'
UNKNOWN = 'unknown'

CHORD_MARGIN = 2


@dataclass(frozen=True)
class SearchLimits:
    """``max_chords`` None means the input chord count plus ``chord_margin``."""
    max_chords: Optional[int] = None
    max_states: int = 1000000
    max_depth: int = 64
    chord_margin: int = CHORD_MARGIN

    def __post_init__(self):
        for name in ('max_states', 'max_depth'):
            if getattr(self, name) < 1:
                raise ValueError('{} must be positive'.format(name))
        if self.max_chords is not None and self.max_chords < 1:
            raise ValueError('max_chords must be positive')

    def chord_cap(self, *diagrams: GaussDiagram) -> int:
        if self.max_chords is not None:
            return self.max_chords
        return max(G.n for G in diagrams) + self.chord_margin

    def __str__(self):
        return 'max_chords={} max_states={} max_depth={}'.format(
            'n+{}'.format(self.chord_margin) if self.max_chords is None else self.max_chords,
            self.max_states, self.max_depth)


@dataclass(frozen=True)
class SearchVerdict:
    status: str
    trace: Optional[ReductionTrace] = None
    states: int = 0
    exhausted: bool = False

    @property
    def certified(self) -> bool:
        return self.status == CERTIFIED

    @property
    def depth(self) -> int:
        return len(self.trace) if self.trace is not None else 0


def _certified(trace: ReductionTrace, states: int) -> SearchVerdict:
    return SearchVerdict(CERTIFIED, trace, states, False)


def verdict_text(verdict: SearchVerdict) -> str:
    if verdict.certified:
        lines = ['CERTIFIED depth={}'.format(verdict.depth)]
        if verdict.depth:
            lines.append(format_trace(verdict.trace))
        return '\n'.join(lines)
    return 'UNKNOWN states={} exhausted={}'.format(verdict.states, 'true' if verdict.exhausted else 'false')


def replay_verdict(verdict: SearchVerdict, target: str = '') -> bool:
    """Check that a certified trace replays and ends at the ``target`` code."""
    if not verdict.certified:
        return False
    final = replay_trace(verdict.trace)
    if final is None:
        return False
    return canonical_code(final) == target


class _Tree:
    """One BFS tree: stored diagram per code plus the move reaching it."""

    def __init__(self, root: GaussDiagram):
        self.root = canonical_code(root)
        self.diagrams: Dict[str, GaussDiagram] = {self.root: root}
        self.parents: Dict[str, Tuple[Optional[str], Optional[GaussMove], Optional[GaussMove]]] = {
            self.root: (None, None, None)}
        self.frontier: List[str] = [self.root]
        self.depth = 0

    def children(self, code: str, kinds, max_chords: int) -> Iterator[Tuple[str, GaussDiagram]]:
        D = self.diagrams[code]
        for move in enumerate_moves(D, kinds):
            try:
                E, inverse = apply_with_inverse(D, move)
            except InapplicableMove:
                continue
            if E.n > max_chords:
                continue
            child = canonical_code(E)
            if child in self.parents:
                continue
            self.parents[child] = (code, move, inverse)
            self.diagrams[child] = E
            yield child, E

    def path(self, code: str) -> List[str]:
        codes = [code]
        while self.parents[codes[-1]][0] is not None:
            codes.append(self.parents[codes[-1]][0])
        return codes[::-1]

    def trace_to(self, code: str) -> ReductionTrace:
        codes = self.path(code)
        trace = ReductionTrace(self.diagrams[self.root])
        for pre, post in zip(codes, codes[1:]):
            trace.record(self.parents[post][1], pre, post)
        return trace


def is_trivial_bounded(G: GaussDiagram, limits: SearchLimits = SearchLimits(),
                       kinds=MOVE_KINDS) -> SearchVerdict:
    reduced, trace = reduce(G)
    if reduced.n == 0:
        return _certified(trace, 1)
    max_chords = limits.chord_cap(G)
    tree = _Tree(reduced)
    queue = deque([(tree.root, 0)])
    truncated = False
    while queue:
        code, depth = queue.popleft()
        if depth >= limits.max_depth:
            truncated = True
            continue
        for child, E in tree.children(code, kinds, max_chords):
            if len(tree.parents) > limits.max_states:
                logger.debug("state limit hit at depth %d", depth + 1)
                return SearchVerdict(UNKNOWN, None, len(tree.parents), False)
            rest, tail = reduce(E)
            if rest.n == 0:
                trace.extend(tree.trace_to(child))
                trace.extend(tail)
                logger.debug("certified trivial after %d states", len(tree.parents))
                return _certified(trace, len(tree.parents))
            queue.append((child, depth + 1))
    return SearchVerdict(UNKNOWN, None, len(tree.parents), not truncated)


def equivalent_bounded(G1: GaussDiagram, G2: GaussDiagram, limits: SearchLimits = SearchLimits(),
                       kinds=MOVE_KINDS) -> SearchVerdict:
    """Grow BFS trees from both ends until they share a canonical code."""
    max_chords = limits.chord_cap(G1, G2)
    trees = (_Tree(G1), _Tree(G2))
    meet = trees[0].root if trees[0].root == trees[1].root else None
    truncated = False
    while meet is None and trees[0].frontier and trees[1].frontier:
        if trees[0].depth + trees[1].depth >= limits.max_depth:
            truncated = True
            break
        side = 0 if len(trees[0].frontier) <= len(trees[1].frontier) else 1
        tree, other = trees[side], trees[1 - side]
        layer, tree.frontier = tree.frontier, []
        tree.depth += 1
        for code in layer:
            for child, _ in tree.children(code, kinds, max_chords):
                if child in other.parents:
                    meet = child
                    break
                tree.frontier.append(child)
            if meet is not None:
                break
        states = len(trees[0].parents) + len(trees[1].parents)
        if meet is None and states > limits.max_states:
            return SearchVerdict(UNKNOWN, None, states, False)
    states = len(trees[0].parents) + len(trees[1].parents)
    if meet is None:
        return SearchVerdict(UNKNOWN, None, states, not truncated)
    return _certified(_join(trees, meet), states)


def _join(trees, meet: str) -> ReductionTrace:
    forward, backward = trees
    trace = forward.trace_to(meet)
    current = forward.diagrams[meet]
    codes = backward.path(meet)
    for post, pre in zip(codes[-2::-1], codes[:0:-1]):
        source = backward.diagrams[pre]
        inverse = backward.parents[pre][2]
        shift = alignment(source, current)
        move = shift_move(inverse, shift, source.size)
        current = apply_gauss_move(current, move)
        trace.record(move, pre, post)
    return trace


# -- enumeration ---------------------------------------------------------------

def _pairings(points: List[int]) -> Iterator[List[Tuple[int, int]]]:
    if not points:
        yield []
        return
    first = points[0]
    for i in range(1, len(points)):
        rest = points[1:i] + points[i + 1:]
        for pairing in _pairings(rest):
            yield [(first, points[i])] + pairing


def enumerate_gauss(n: int, dedup: bool = False) -> Iterator[GaussDiagram]:
    """Every labelled diagram with ``n`` chords: pairings, orientations, signs."""
    seen = set()
    for pairing in _pairings(list(range(2 * n))):
        for orientations in itertools.product((True, False), repeat=n):
            for signs in itertools.product((1, -1), repeat=n):
                chords = []
                for chord_id, ((a, b), tail_first, sign) in enumerate(zip(pairing, orientations, signs), 1):
                    tail, head = (a, b) if tail_first else (b, a)
                    chords.append(Chord(chord_id, tail, head, sign))
                G = GaussDiagram(tuple(chords))
                if dedup:
                    code = canonical_code(G)
                    if code in seen:
                        continue
                    seen.add(code)
                yield G


# -- single-move trivial pairs ---------------------------------------------------

@dataclass(frozen=True)
class TrivialPair:
    before: PlanarDiagram
    after: PlanarDiagram
    move: PDMove
    before_verdict: SearchVerdict
    after_verdict: SearchVerdict


def labelings(P: PlanarDiagram) -> Iterator[PlanarDiagram]:
    """Every way to make crossings of a shadow classical, fewest classical first."""
    ids = [c.id for c in P.crossings]
    for count in range(len(ids) + 1):
        for chosen in itertools.combinations(ids, count):
            for overs in itertools.product((True, False), repeat=count):
                Q = P
                for crossing_id, over in zip(chosen, overs):
                    Q = set_crossing(Q, crossing_id, CLASSICAL, over)
                yield Q


def find_single_move_trivial_pair(kind: str, limits: SearchLimits = SearchLimits(), max_crossings: int = 8,
                                  trivial_limits: Optional[SearchLimits] = None) -> Optional[TrivialPair]:
    """Smallest pair of trivial diagrams related by one ``kind`` move that changes the Gauss code."""
    trivial_limits = trivial_limits or SearchLimits(max_states=2000, max_depth=6)
    states = 0
    verdicts: Dict[str, SearchVerdict] = {}

    def verdict(G):
        code = canonical_code(G)
        if code not in verdicts:
            verdicts[code] = is_trivial_bounded(G, trivial_limits)
        return verdicts[code]

    for layer in shadow_layers(max_crossings):
        for P in layer:
            for Q in labelings(P):
                states += 1
                if states > limits.max_states:
                    logger.info("pair search for %s stopped after %d diagrams", kind, states - 1)
                    return None
                for move in find_sites(Q, kind, FORWARD):
                    R = apply_pd_move(Q, move)
                    before, after = pd_to_gauss(Q), pd_to_gauss(R)
                    if canonical_code(before) == canonical_code(after):
                        continue
                    first = verdict(before)
                    if not first.certified:
                        break
                    second = verdict(after)
                    if second.certified:
                        logger.info("found %s pair after %d diagrams", kind, states)
                        return TrivialPair(Q, R, move, first, second)
    return None
