import random
import unittest
from unittest import mock

from tests.gauss_tests import random_diagram
from weldedknots.welded.errors import BoundViolation, EmptyDiagram, NotRemovable, UnknownChord
from weldedknots.welded.gauss import (C1_REMOVE, EMPTY, W, Direction, GaussMove, canonical_code,
                                      crossing_changes, is_descending, parse_gauss_code)
from weldedknots.welded.search import SearchLimits, enumerate_gauss
from weldedknots.welded.unknotting import (BoundCertificate, best_basepoint, chord_certificate, complementary_bound,
                                           descending_change_set, format_trace, reduce, removable_arc, remove_chord,
                                           prop24_bound, replay_trace, unknot_descending, unknotting_upper,
                                           weld_chord)

TREFOIL = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+")
DESCENDING = parse_gauss_code("O1+ O2+ U1+ U2+")
KINK = parse_gauss_code("O1+ U1+")


class ChangeSetTests(unittest.TestCase):
    def test_empty(self):
        self.assertEqual(frozenset(), descending_change_set(EMPTY))

    def test_trefoil(self):
        self.assertEqual({2}, descending_change_set(TREFOIL, 0, Direction.FORWARD))

    def test_descending(self):
        self.assertEqual(frozenset(), descending_change_set(DESCENDING))

    def test_changes_make_descending(self):
        for G in enumerate_gauss(3):
            for b in (0, 3):
                for d in Direction:
                    changes = descending_change_set(G, b, d)
                    self.assertTrue(is_descending(crossing_changes(G, changes), b, d))


class RemovalTests(unittest.TestCase):
    def test_arcs(self):
        self.assertEqual((), removable_arc(KINK, 1).positions)
        self.assertEqual((1,), removable_arc(DESCENDING, 1).positions)
        self.assertIsNone(removable_arc(TREFOIL, 1))

    def test_remove_kink(self):
        result, trace = remove_chord(KINK, 1)
        self.assertEqual(EMPTY, result)
        self.assertEqual([GaussMove(C1_REMOVE, (0,))], [step.move for step in trace])

    def test_remove_with_slide(self):
        result, trace = remove_chord(DESCENDING, 1)
        self.assertEqual("O1+ U1+", canonical_code(result))
        self.assertEqual([GaussMove(W, (0, 1)), GaussMove(C1_REMOVE, (1,))], [step.move for step in trace])
        self.assertEqual(result, replay_trace(trace))

    def test_not_removable(self):
        with self.assertRaises(NotRemovable):
            remove_chord(TREFOIL, 1)

    def test_unknown_chord(self):
        with self.assertRaises(UnknownChord):
            remove_chord(TREFOIL, 7)

    def test_weld_chord(self):
        result, trace = weld_chord(DESCENDING, 2)
        self.assertEqual(1, result.n)
        self.assertIsNotNone(trace)
        result, trace = weld_chord(TREFOIL, 1)
        self.assertEqual(2, result.n)
        self.assertIsNone(trace)


class ReduceTests(unittest.TestCase):
    def test_empty(self):
        result, trace = reduce(EMPTY)
        self.assertEqual(EMPTY, result)
        self.assertEqual(0, len(trace))

    def test_descending(self):
        result, trace = reduce(DESCENDING)
        self.assertEqual(EMPTY, result)
        self.assertEqual('', trace.final_code)
        self.assertEqual(EMPTY, replay_trace(trace))

    def test_trefoil_is_fixpoint(self):
        result, trace = reduce(TREFOIL)
        self.assertEqual(TREFOIL, result)
        self.assertEqual(0, len(trace))

    def test_trace_text(self):
        _, trace = reduce(KINK)
        self.assertEqual("C1_remove 0 |", format_trace(trace))

    def test_replay_detects_tampering(self):
        _, trace = reduce(DESCENDING)
        trace.start = TREFOIL
        self.assertIsNone(replay_trace(trace))


class UnknotTests(unittest.TestCase):
    def test_trefoil(self):
        self.assertEqual((0, Direction.FORWARD, frozenset({2})), best_basepoint(TREFOIL))
        changes, trace = unknot_descending(TREFOIL)
        self.assertEqual({2}, changes)
        self.assertEqual('', trace.final_code)

    def test_empty(self):
        changes, trace = unknot_descending(EMPTY)
        self.assertEqual(frozenset(), changes)
        self.assertEqual(0, len(trace))

    def test_every_small_diagram_unknots(self):
        for n in (1, 2, 3):
            for G in enumerate_gauss(n):
                changes, trace = unknot_descending(G)
                self.assertLessEqual(len(changes), (n - 1) // 2)
                self.assertEqual(EMPTY, replay_trace(trace))

    def test_random_diagrams_unknot(self):
        rng = random.Random(11)
        for _ in range(60):
            n = rng.randint(4, 8)
            G = random_diagram(rng, n)
            changes, trace = unknot_descending(G)
            self.assertLessEqual(len(changes), complementary_bound(G).bound)
            self.assertEqual(EMPTY, replay_trace(trace))


class BoundTests(unittest.TestCase):
    def test_kink(self):
        certificate = complementary_bound(KINK)
        self.assertEqual(frozenset(), certificate.s1)
        self.assertEqual(frozenset(), certificate.s2)
        self.assertEqual(0, certificate.bound)

    def test_trefoil(self):
        certificate = complementary_bound(TREFOIL)
        self.assertEqual((1, 0, 1), (certificate.chord, certificate.p1, certificate.p2))
        self.assertEqual(1, certificate.bound)
        self.assertEqual("1 ≤ 1: OK", certificate.check_text())

    def test_empty(self):
        with self.assertRaises(EmptyDiagram):
            complementary_bound(EMPTY)

    def test_operation_alias(self):
        self.assertEqual(complementary_bound(TREFOIL), prop24_bound(TREFOIL))

    def test_sets_split_the_other_chords(self):
        for n in (1, 2, 3):
            for G in enumerate_gauss(n):
                for chord_id in G.chord_ids():
                    certificate = chord_certificate(G, chord_id)
                    self.assertEqual(n - 1, len(certificate.s1) + len(certificate.s2))
                    self.assertTrue(certificate.holds)

    def test_overlapping_sets_are_rejected(self):
        with self.assertRaises(BoundViolation) as context:
            BoundCertificate(1, 0, 1, frozenset({2}), frozenset({2, 3}), 3).verify()
        self.assertIn("share [2]", str(context.exception))
        with self.assertRaises(BoundViolation):
            BoundCertificate(1, 0, 1, frozenset({1}), frozenset({2}), 3).verify()
        with self.assertRaises(BoundViolation):
            BoundCertificate(1, 0, 1, frozenset(), frozenset({2}), 3).verify()

    def test_inconsistent_change_sets(self):
        with mock.patch('weldedknots.welded.unknotting.descending_change_set', return_value=frozenset({2})):
            with self.assertRaises(BoundViolation):
                chord_certificate(TREFOIL, 1)


class UpperBoundTests(unittest.TestCase):
    limits = SearchLimits(max_states=200, max_depth=3)

    def test_empty(self):
        bound = unknotting_upper(EMPTY, self.limits)
        self.assertEqual((0, frozenset()), (bound.value, bound.witness))

    def test_descending(self):
        self.assertEqual(0, unknotting_upper(DESCENDING, self.limits).value)

    def test_trefoil(self):
        bound = unknotting_upper(TREFOIL, self.limits)
        self.assertEqual(1, bound.value)
        self.assertEqual(frozenset({1}), bound.witness)
        self.assertTrue(bound.exhaustive_below)
