"""Deterministic text reports shared by the management commands and the API."""
from dataclasses import dataclass
from typing import Iterable, Optional

from .gauss import GaussDiagram, canonical_code
from .search import SearchLimits, is_trivial_bounded, verdict_text
from .unknotting import best_basepoint, format_trace, complementary_bound, reduce, unknot_descending, unknotting_upper

OK = 'ok'
CERTIFIED = 'certified'
UNKNOWN = 'unknown'

KINDS = ('reduce', 'unknot', 'bound', 'trivial', 'u')


@dataclass(frozen=True)
class Report:
    kind: str
    status: str
    value: Optional[int]
    text: str

    @property
    def success(self) -> bool:
        return self.status != UNKNOWN


def chord_set(ids: Iterable[int]) -> str:
    return '{' + ', '.join(str(i) for i in sorted(ids)) + '}'


def reduce_report(G: GaussDiagram, emit_trace: bool = False) -> Report:
    result, trace = reduce(G)
    lines = [canonical_code(result), 'n={}'.format(result.n)]
    if emit_trace and len(trace):
        lines.append(format_trace(trace))
    return Report('reduce', OK, result.n, '\n'.join(lines))


def unknot_report(G: GaussDiagram) -> Report:
    basepoint, direction, _ = best_basepoint(G)
    changes, trace = unknot_descending(G)
    lines = ['basepoint={} direction={}'.format(basepoint, direction.value),
             'changes={}'.format(chord_set(changes)),
             'count={}'.format(len(changes))]
    if len(trace):
        lines.append(format_trace(trace))
    return Report('unknot', OK, len(changes), '\n'.join(lines))


def bound_report(G: GaussDiagram) -> Report:
    certificate = complementary_bound(G)
    lines = ['chord={} p1={} p2={}'.format(certificate.chord, certificate.p1, certificate.p2),
             'S1={}'.format(chord_set(certificate.s1)),
             'S2={}'.format(chord_set(certificate.s2)),
             'bound={}'.format(certificate.bound),
             certificate.check_text()]
    return Report('bound', OK, certificate.bound, '\n'.join(lines))


def trivial_report(G: GaussDiagram, limits: SearchLimits) -> Report:
    verdict = is_trivial_bounded(G, limits)
    text = verdict_text(verdict)
    if not verdict.certified:
        return Report('trivial', UNKNOWN, None, '{}\nlimits: {}'.format(text, limits))
    return Report('trivial', CERTIFIED, verdict.depth, text)


def u_report(G: GaussDiagram, limits: SearchLimits) -> Report:
    bound = unknotting_upper(G, limits)
    text = 'u<={} witness={} exhaustive_below={}'.format(
        bound.value, chord_set(bound.witness), 'true' if bound.exhaustive_below else 'false')
    return Report('u', CERTIFIED, bound.value, text)


def build_report(kind: str, G: GaussDiagram, limits: SearchLimits) -> Report:
    if kind == 'reduce':
        return reduce_report(G, emit_trace=True)
    if kind == 'unknot':
        return unknot_report(G)
    if kind == 'bound':
        return bound_report(G)
    if kind == 'trivial':
        return trivial_report(G, limits)
    if kind == 'u':
        return u_report(G, limits)
    raise ValueError('unknown report kind {!r}'.format(kind))
