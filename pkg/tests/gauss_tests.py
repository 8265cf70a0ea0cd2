import random
import unittest

from weldedknots.welded.errors import (InapplicableMove, LabelCountMismatch, MalformedToken,
                                       SignMismatch, UnknownChord)
from weldedknots.welded.gauss import (C1_ADD, C1_REMOVE, C3, EMPTY, W, Chord, Direction, GaussDiagram, GaussMove,
                                      alignment, apply_gauss_move, apply_with_inverse, canonical_code,
                                      crossing_change, enumerate_moves, is_descending, is_descending_anywhere,
                                      parse_gauss_code, rotate, serialize, shift_move, trivial_chords)
from weldedknots.welded.movetable import gauss_move_table

TREFOIL = "O1+ U2+ O3+ U1+ O2+ U3+"
DESCENDING = "O1+ O2+ U1+ U2+"


def random_diagram(rng, n):
    positions = list(range(2 * n))
    rng.shuffle(positions)
    chords = []
    for i in range(n):
        tail, head = positions[2 * i], positions[2 * i + 1]
        chords.append(Chord(i + 1, tail, head, rng.choice((1, -1))))
    return GaussDiagram(tuple(chords))


class ParseTests(unittest.TestCase):
    def test_trefoil(self):
        G = parse_gauss_code(TREFOIL)
        self.assertEqual(3, G.n)
        self.assertEqual(TREFOIL, serialize(G))
        self.assertEqual(TREFOIL, canonical_code(G))

    def test_rotated_trefoil_is_canonical(self):
        self.assertEqual(TREFOIL, canonical_code(parse_gauss_code("U1+ O3+ U2+ O1+ U3+ O2+")))

    def test_empty(self):
        self.assertEqual(EMPTY, parse_gauss_code(""))
        self.assertEqual("", canonical_code(EMPTY))

    def test_malformed(self):
        with self.assertRaises(MalformedToken) as ctx:
            parse_gauss_code("O1+ X1+")
        self.assertEqual(1, ctx.exception.index)

    def test_label_count(self):
        with self.assertRaises(LabelCountMismatch):
            parse_gauss_code("O1+")
        with self.assertRaises(LabelCountMismatch):
            parse_gauss_code("O1+ O1+")

    def test_sign_mismatch(self):
        with self.assertRaises(SignMismatch):
            parse_gauss_code("O1+ U1-")

    def test_unknown_chord(self):
        with self.assertRaises(UnknownChord):
            parse_gauss_code(TREFOIL).chord(7)


class RotationTests(unittest.TestCase):
    def test_rotate_keeps_canonical_code(self):
        G = parse_gauss_code(DESCENDING)
        for k in range(G.size):
            with self.subTest(k=k):
                self.assertEqual(canonical_code(G), canonical_code(rotate(G, k)))

    def test_alignment(self):
        G = parse_gauss_code(DESCENDING)
        self.assertEqual(1, alignment(G, rotate(G, 1)))
        self.assertIsNone(alignment(G, parse_gauss_code("O1+ U1+")))

    def test_shift_move_follows_rotation(self):
        G = parse_gauss_code(DESCENDING)
        move = GaussMove(W, (0, 1))
        rotated = rotate(G, 3)
        shifted = shift_move(move, 3, G.size)
        self.assertEqual(canonical_code(apply_gauss_move(G, move)), canonical_code(apply_gauss_move(rotated, shifted)))


class CrossingChangeTests(unittest.TestCase):
    def test_involution(self):
        rng = random.Random(3)
        for _ in range(200):
            G = random_diagram(rng, rng.randint(1, 6))
            chord_id = rng.choice(G.chord_ids())
            with self.subTest(code=serialize(G), chord=chord_id):
                self.assertEqual(G, crossing_change(crossing_change(G, chord_id), chord_id))

    def test_flips_sign_and_orientation(self):
        G = crossing_change(parse_gauss_code("O1+ U1+"), 1)
        self.assertEqual("U1- O1-", serialize(G))


class DescendingTests(unittest.TestCase):
    def test_descending(self):
        G = parse_gauss_code(DESCENDING)
        self.assertTrue(is_descending(G, 0, Direction.FORWARD))
        self.assertFalse(is_descending(G, 0, Direction.BACKWARD))

    def test_trefoil_nowhere_descending(self):
        self.assertFalse(is_descending_anywhere(parse_gauss_code(TREFOIL)))

    def test_empty_is_descending(self):
        self.assertTrue(is_descending(EMPTY))


class MoveTests(unittest.TestCase):
    def test_trivial_chords(self):
        self.assertEqual([1], trivial_chords(parse_gauss_code("O1+ U1+")))
        self.assertEqual([], trivial_chords(parse_gauss_code(TREFOIL)))

    def test_w_swaps_tails(self):
        G, inverse = apply_with_inverse(parse_gauss_code(DESCENDING), GaussMove(W, (0, 1)))
        self.assertEqual("O1+ O2+ U2+ U1+", serialize(G))
        self.assertEqual(GaussMove(W, (0, 1)), inverse)

    def test_w_needs_tails(self):
        with self.assertRaises(InapplicableMove):
            apply_gauss_move(parse_gauss_code(DESCENDING), GaussMove(W, (1, 2)))

    def test_c1_round_trip(self):
        G = parse_gauss_code("O1+ U1+")
        empty, inverse = apply_with_inverse(G, GaussMove(C1_REMOVE, (0,)))
        self.assertEqual(EMPTY, empty)
        self.assertEqual(C1_ADD, inverse.kind)
        self.assertEqual("O1+ U1+", serialize(apply_gauss_move(empty, inverse)))

    def test_c1_remove_needs_adjacent_endpoints(self):
        with self.assertRaises(InapplicableMove):
            apply_gauss_move(parse_gauss_code(DESCENDING), GaussMove(C1_REMOVE, (0,)))

    def test_inverse_restores_code(self):
        rng = random.Random(11)
        for _ in range(20):
            G = random_diagram(rng, rng.randint(1, 3))
            moves = enumerate_moves(G)
            for move in rng.sample(moves, min(5, len(moves))):
                with self.subTest(code=serialize(G), move=str(move)):
                    H, inverse = apply_with_inverse(G, move)
                    self.assertEqual(canonical_code(G), canonical_code(apply_gauss_move(H, inverse)))

    def test_moves_are_sorted_and_unique(self):
        moves = enumerate_moves(parse_gauss_code(TREFOIL))
        self.assertEqual(len(moves), len(set(moves)))
        self.assertEqual(moves, sorted(moves, key=GaussMove.sort_key))


class MoveTableTests(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.table = gauss_move_table()

    def test_kinds(self):
        for kind in ('C1', 'C2', 'C3', 'W', 'Delta', 'Sharp', 'Pass', 'T4', 'T4bar', 'Gamma',
                     'V1', 'V2', 'V3', 'V4'):
            with self.subTest(kind=kind):
                self.assertIn(kind, self.table)

    def test_c2_patterns(self):
        self.assertTrue(self.table['C2'])
        for rewrite in self.table['C2']:
            with self.subTest(rewrite=rewrite):
                self.assertEqual(2, len(rewrite.after))
                first, second = rewrite.after
                self.assertEqual(2, len(first))
                self.assertEqual(len({token[0] for token in first}), 2)
                self.assertTrue(all(token[1] == first[0][1] for token in first))

    def test_c3_inverses(self):
        rewrites = self.table['C3']
        self.assertTrue(rewrites)
        for index, rewrite in enumerate(rewrites):
            with self.subTest(index=index):
                self.assertEqual(3, len(rewrite.before))
                self.assertEqual(index, rewrites[rewrite.inverse].inverse)

    def test_w_pattern_swaps_two_tails(self):
        for rewrite in self.table['W']:
            with self.subTest(rewrite=rewrite):
                (before,), (after,) = rewrite.before, rewrite.after
                self.assertEqual(before[::-1], tuple(after))
                self.assertTrue(all(token[1] for token in before))

    def test_v_moves_are_invisible(self):
        for kind in ('V1', 'V2', 'V3', 'V4'):
            self.assertEqual(((), ()), (self.table[kind][0].before, self.table[kind][0].after))

    def test_c3_covers_braid_like_triangles(self):
        for sign in (1, -1):
            with self.subTest(sign=sign):
                self.assertTrue(any({token[2] for segment in rewrite.before for token in segment} == {sign}
                                    for rewrite in self.table['C3']))

    def test_same_sign_c3(self):
        G = parse_gauss_code("O1- O2- O3- U2- U3- U1-")
        target = canonical_code(parse_gauss_code("O1- O2- U1- O3- U2- U3-"))
        moves = enumerate_moves(G, (C3,))
        self.assertTrue(moves)
        self.assertIn(target, {canonical_code(apply_gauss_move(G, m)) for m in moves})
