import unittest

from weldedknots.welded.gauss import C1_REMOVE, EMPTY, W, canonical_code, parse_gauss_code
from weldedknots.welded.planar import TREFOIL as TREFOIL_PD
from weldedknots.welded.pdmoves import apply_pd_move
from weldedknots.welded.planar import pd_to_gauss, shadow
from weldedknots.welded.search import (SearchLimits, SearchVerdict, UNKNOWN, enumerate_gauss, equivalent_bounded,
                                       find_single_move_trivial_pair, is_trivial_bounded, labelings,
                                       replay_verdict, verdict_text)

TREFOIL = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+")
DESCENDING = parse_gauss_code("O1+ O2+ U1+ U2+")
KINK = parse_gauss_code("O1+ U1+")

SMALL = SearchLimits(max_states=200, max_depth=3)


class LimitsTests(unittest.TestCase):
    def test_defaults(self):
        limits = SearchLimits()
        self.assertEqual(5, limits.chord_cap(TREFOIL))
        self.assertEqual("max_chords=n+2 max_states=1000000 max_depth=64", str(limits))

    def test_explicit_chords(self):
        self.assertEqual(4, SearchLimits(max_chords=4).chord_cap(TREFOIL, DESCENDING))

    def test_rejects_non_positive(self):
        for kwargs in ({'max_states': 0}, {'max_depth': 0}, {'max_chords': 0}):
            with self.subTest(**kwargs):
                with self.assertRaises(ValueError):
                    SearchLimits(**kwargs)


class TrivialityTests(unittest.TestCase):
    def test_empty(self):
        verdict = is_trivial_bounded(EMPTY, SMALL)
        self.assertTrue(verdict.certified)
        self.assertEqual("CERTIFIED depth=0", verdict_text(verdict))

    def test_descending(self):
        verdict = is_trivial_bounded(DESCENDING, SMALL)
        self.assertTrue(verdict.certified)
        self.assertEqual(3, verdict.depth)
        self.assertTrue(replay_verdict(verdict))
        self.assertTrue(verdict_text(verdict).startswith("CERTIFIED depth=3\nW 0 1 |"))

    def test_two_chords_need_only_slides(self):
        for n in (1, 2):
            for G in enumerate_gauss(n):
                verdict = is_trivial_bounded(G, SMALL, kinds=(W, C1_REMOVE))
                self.assertTrue(verdict.certified, canonical_code(G))
                self.assertTrue(replay_verdict(verdict))

    def test_state_limit(self):
        verdict = is_trivial_bounded(TREFOIL, SMALL)
        self.assertEqual(UNKNOWN, verdict.status)
        self.assertFalse(verdict.exhausted)
        self.assertGreater(verdict.states, SMALL.max_states)

    def test_exhausted(self):
        verdict = is_trivial_bounded(TREFOIL, SMALL, kinds=(W, C1_REMOVE))
        self.assertEqual("UNKNOWN states=1 exhausted=true", verdict_text(verdict))

    def test_unknown_does_not_replay(self):
        self.assertFalse(replay_verdict(SearchVerdict(UNKNOWN)))


class EquivalenceTests(unittest.TestCase):
    def test_same_diagram(self):
        verdict = equivalent_bounded(TREFOIL, parse_gauss_code("O2+ U3+ O1+ U2+ O3+ U1+"), SMALL)
        self.assertTrue(verdict.certified)
        self.assertEqual(0, verdict.depth)

    def test_slide_and_kink(self):
        verdict = equivalent_bounded(DESCENDING, KINK, SMALL)
        self.assertTrue(verdict.certified)
        self.assertTrue(replay_verdict(verdict, canonical_code(KINK)))
        self.assertFalse(replay_verdict(verdict, canonical_code(DESCENDING)))


class EnumerationTests(unittest.TestCase):
    def test_counts(self):
        self.assertEqual(1, len(list(enumerate_gauss(0))))
        self.assertEqual(4, len(list(enumerate_gauss(1))))
        self.assertEqual(48, len(list(enumerate_gauss(2))))

    def test_dedup(self):
        codes = [canonical_code(G) for G in enumerate_gauss(1, dedup=True)]
        self.assertEqual(["O1+ U1+", "O1- U1-"], codes)

    def test_labelings(self):
        found = list(labelings(shadow(TREFOIL_PD)))
        self.assertEqual(27, len(found))
        self.assertEqual(0, found[0].classical_count())
        self.assertEqual(3, found[-1].classical_count())


class PairSearchTests(unittest.TestCase):
    def test_state_limit(self):
        self.assertIsNone(find_single_move_trivial_pair('Delta', SearchLimits(max_states=1)))

    def assertTrivialPair(self, kind):
        pair = find_single_move_trivial_pair(kind)
        self.assertIsNotNone(pair)
        self.assertEqual(kind, pair.move.kind)
        self.assertEqual(pair.after, apply_pd_move(pair.before, pair.move))
        self.assertNotEqual(canonical_code(pd_to_gauss(pair.before)), canonical_code(pd_to_gauss(pair.after)))
        self.assertTrue(replay_verdict(pair.before_verdict))
        self.assertTrue(replay_verdict(pair.after_verdict))
        return pair

    def test_sharp_pair(self):
        self.assertTrivialPair('Sharp')

    def test_delta_pair(self):
        pair = self.assertTrivialPair('Delta')
        self.assertGreaterEqual(pair.before.classical_count(), 3)
