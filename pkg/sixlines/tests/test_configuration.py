"""
Six-line configurations: DO coordinates, relations, strata and group actions.

Run from sixlines/:
    uv run python -m unittest tests.test_configuration
"""

import random
import sys
import unittest
from itertools import permutations
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from sympy import Rational

import configuration
import invariants
import verify
from constants import PASS
from errors import InputError, PreconditionError

GOLDEN_T = (8, 1, 1, 8, 9, 5, 2, 2, -2, -2)
GOLDEN_J = (63, -243, 729, -8748, -32076)


class TestGoldenCoordinates(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.config = configuration.from_moduli(2, 3, 4, 5)
        cls.coords = configuration.do_coordinates(cls.config)

    def test_minors(self):
        """t and R from Plücker minors."""
        self.assertEqual(self.coords.t, GOLDEN_T)
        self.assertEqual(self.coords.r, -12)

    def test_closed_forms_agree(self):
        """The closed forms in (a, b, c, d) give the same t and R."""
        self.assertEqual(configuration.closed_form_t(2, 3, 4, 5), self.coords)

    def test_relations_pass(self):
        entries = configuration.verify_relations(self.coords)
        self.assertEqual(len(entries), 16)
        for c in entries:
            with self.subTest(check=c.name):
                self.assertEqual(c.status, PASS)

    def test_r_squared(self):
        self.assertEqual(configuration.r_squared_identity(self.coords.t), 144)

    def test_disc_s_components(self):
        """t1 = t4, t7 = −t10, t8 = −t9 and t2 = t3, t7 = t8, t9 = t10 both hold."""
        self.assertEqual(configuration.discriminant_components(self.coords), [3, 10])

    def test_generic_stratum(self):
        s = configuration.classify(self.config)
        self.assertEqual((s.case, s.name, s.vanishing, s.r_is_zero), ('0', 'Generic', (), False))

    def test_plucker_sign(self):
        """Swapping two columns negates a minor."""
        self.assertEqual(configuration.plucker(self.config, 1, 2, 3), 1)
        self.assertEqual(configuration.plucker(self.config, 2, 1, 3), -1)
        with self.assertRaises(PreconditionError):
            configuration.plucker(self.config, 1, 1, 3)


class TestStrata(unittest.TestCase):

    def test_three_concurrent(self):
        """Lines 1, 4, 5 of (2, 2, 4, 5) meet in a point: one t vanishes, R ≠ 0."""
        s = configuration.classify(configuration.from_moduli(2, 2, 4, 5))
        self.assertEqual(s.case, '2')
        self.assertEqual(s.vanishing, (2,))
        self.assertFalse(s.r_is_zero)

    def test_tangent_configuration(self):
        """Rosenhain lines touch the conic, so R = 0 with no t vanishing."""
        c = configuration.from_rosenhain(2, 3, 5)
        self.assertTrue(all(configuration.tangent_to_conic(ln) for ln in c.lines))
        s = configuration.classify(c)
        self.assertEqual(s.case, '1')
        self.assertEqual(s.name, 'TangentConic')

    def test_generic_lines_are_not_tangent(self):
        c = configuration.from_moduli(2, 3, 4, 5)
        self.assertFalse(configuration.tangent_to_conic(c.lines[4]))

    def test_double_line(self):
        """A repeated line separates (6b) from (6a)."""
        rows = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (2, 2, 2), (1, 2, 3)]
        c = configuration.from_lines(rows)
        self.assertTrue(configuration.has_double_line(c))
        self.assertEqual(configuration.classify(c).case, '6b')


class TestConstruction(unittest.TestCase):

    def test_lines_need_six_triples(self):
        with self.assertRaises(InputError):
            configuration.from_lines([(1, 0, 0)] * 5)

    def test_zero_line_rejected(self):
        rows = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (0, 0, 0), (1, 2, 3)]
        with self.assertRaises(InputError):
            configuration.from_lines(rows)

    def test_rosenhain_distinct(self):
        for bad in ((0, 2, 3), (1, 2, 3), (2, 2, 3)):
            with self.subTest(lams=bad):
                with self.assertRaises(PreconditionError) as ctx:
                    configuration.from_rosenhain(*bad)
                self.assertEqual(ctx.exception.rule, 'rosenhain-distinct')


# ── Group actions ─────────────────────────────────────────────────────────────

class TestActions(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.config = configuration.from_moduli(2, 3, 4, 5)
        cls.m = [[1, 2, 0], [0, 1, 3], [1, 0, 1]]      # det 7

    def test_rescale_line(self):
        """t scales by k and R by k²."""
        d = configuration.do_coordinates(configuration.rescale_line(self.config, 5, 3))
        self.assertEqual(d.t, tuple(3 * v for v in GOLDEN_T))
        self.assertEqual(d.r, -12 * 9)

    def test_gl3_action(self):
        """t scales by det², R by det⁴."""
        d = configuration.do_coordinates(configuration.gl3_action(self.config, self.m))
        self.assertEqual(d.t, tuple(49 * v for v in GOLDEN_T))
        self.assertEqual(d.r, -12 * 7 ** 4)

    def test_singular_matrix_rejected(self):
        with self.assertRaises(PreconditionError):
            configuration.gl3_action(self.config, [[1, 2, 3], [2, 4, 6], [0, 0, 1]])

    def test_to_moduli_recovers_normal_form(self):
        moved = configuration.rescale_line(configuration.gl3_action(self.config, self.m), 1, Rational(-2, 3))
        self.assertEqual(configuration.to_moduli(moved), (2, 3, 4, 5))

    def test_to_moduli_needs_a_frame(self):
        with self.assertRaises(PreconditionError) as ctx:
            configuration.to_moduli(configuration.permute(configuration.from_moduli(2, 2, 4, 5),
                                                          (1, 4, 5, 2, 3, 6)))
        self.assertEqual(ctx.exception.rule, 'frame')

    def test_permutations_keep_j(self):
        for sigma in ((2, 1, 3, 4, 5, 6), (6, 5, 4, 3, 2, 1), (3, 6, 1, 5, 2, 4)):
            with self.subTest(sigma=sigma):
                rec = invariants.invariants_from_configuration(configuration.permute(self.config, sigma))
                self.assertEqual(tuple(rec.J), GOLDEN_J)

    def test_every_permutation_keeps_the_stratum(self):
        """The concurrent and tangent strata survive all 720 orderings."""
        for c, case in ((configuration.from_moduli(2, 2, 4, 5), '2'),
                        (configuration.from_rosenhain(2, 3, 5), '1')):
            seen = {configuration.classify(configuration.permute(c, sigma)).case
                    for sigma in permutations(range(1, 7))}
            with self.subTest(origin=c.origin):
                self.assertEqual(seen, {case})

    def test_permutation_section(self):
        entries = verify.permutation_checks(random.Random(4), samples=1)
        self.assertEqual({c.name for c in entries}, {'s6-invariance', 's6-stratum'})
        self.assertEqual(len(entries), 6)
        for c in entries:
            with self.subTest(check=c.name, anchor=c.anchor):
                self.assertEqual(c.status, PASS, c.detail)

    def test_bad_permutation(self):
        with self.assertRaises(PreconditionError):
            configuration.permute(self.config, (1, 1, 3, 4, 5, 6))

    def test_associate_negates_r(self):
        d = configuration.do_coordinates(self.config)
        self.assertEqual(configuration.associate(d).r, 12)
        self.assertEqual(configuration.associate(d).t, d.t)


if __name__ == '__main__':
    unittest.main()
