"""
Two-isogeny point maps, the symbolic suite, and the quartic parameter family.

Run from sixlines/:
    uv run python -m unittest tests.test_isogeny_quartic
"""

import random
import sys
import unittest
from pathlib import Path

from sympy import Rational, sqrt

sys.path.insert(0, str(Path(__file__).parent.parent))

import fibration
import field
import isogeny
import quartic
import unipoly
import verify
from constants import PASS
from errors import PreconditionError
from invariants import JInvariants
from isogeny import FiberPoint
from weighted import weighted_equal

# y² = x(x² + 3) on one fibre, through (1, 2).
A = unipoly.make_poly([3])
B = unipoly.make_poly([0])
P = FiberPoint(0, 1, 2)


class TestPointMaps(unittest.TestCase):

    def test_duplicate(self):
        self.assertEqual(isogeny.duplicate(A, B, P), FiberPoint(0, Rational(1, 4), Rational(-7, 8)))

    def test_phi_after_phi_hat(self):
        image = isogeny.isogeny_phi_hat(A, B, P)
        self.assertEqual(image, FiberPoint(0, 4, -4))
        self.assertTrue(isogeny.on_y_model(A, B, image))
        self.assertEqual(isogeny.isogeny_phi(A, B, image), isogeny.duplicate(A, B, P))

    def test_involution(self):
        image = isogeny.vgs_involution_x(A, B, P)
        self.assertEqual(image, FiberPoint(0, 3, -6))
        self.assertEqual(isogeny.vgs_involution_x(A, B, image), P)
        self.assertEqual(isogeny.isogeny_phi_hat(A, B, image), isogeny.isogeny_phi_hat(A, B, P))

    def test_sections_swap(self):
        inf = isogeny.infinity(0)
        self.assertEqual(isogeny.vgs_involution_x(A, B, inf), FiberPoint(0, 0, 0))
        self.assertTrue(isogeny.vgs_involution_x(A, B, FiberPoint(0, 0, 0)).at_infinity)
        self.assertTrue(isogeny.isogeny_phi_hat(A, B, FiberPoint(0, 0, 0)).at_infinity)
        self.assertTrue(isogeny.duplicate(A, B, FiberPoint(0, 0, 0)).at_infinity)

    def test_off_curve(self):
        with self.assertRaises(PreconditionError) as ctx:
            isogeny.vgs_involution_x(A, B, FiberPoint(0, 1, 1))
        self.assertEqual(ctx.exception.rule, 'on-curve')


class TestSymbolicSuite(unittest.TestCase):

    def test_all_identities(self):
        entries = isogeny.symbolic_suite()
        self.assertEqual(len(entries), 9)
        for c in entries:
            with self.subTest(check=c.name):
                self.assertEqual(c.status, PASS)

    def test_push_forward(self):
        """Φ̂ carries the X-alternate model onto the Y-alternate model of the same J."""
        p = quartic.make_params((1, 2, 3, 4, 5, 6))
        pushed = isogeny.push_forward_model(p)
        direct = fibration.y_alternate(quartic.moduli_j(p))
        self.assertTrue((pushed.a2 - direct.a2).is_zero)
        self.assertTrue((pushed.a4 - direct.a4).is_zero)


# ── Quartic family ────────────────────────────────────────────────────────────

class TestSolveParams(unittest.TestCase):

    def test_golden_needs_sqrt5(self):
        J = JInvariants(63, -243, 729, -8748, -32076)
        p = quartic.solve_params(J)
        self.assertEqual(p.radicand(), 5)
        self.assertEqual(field.parts(p.zeta), (-6, 4, 5))
        self.assertEqual(field.parts(p.delta), (-4374, -2916, 5))
        self.assertTrue(weighted_equal(quartic.moduli_match(p), J.point()))

    def test_tangent_branches(self):
        rows = [
            (JInvariants(1, 2, 0, 3, 5), (1, 2, 0, 3, 1, Rational(5, 3))),
            (JInvariants(1, 2, 0, 0, 7), (1, 2, 0, 1, 0, 7)),
        ]
        for J, params in rows:
            with self.subTest(J=J):
                p = quartic.solve_params(J)
                self.assertEqual(tuple(p), params)
                self.assertTrue(weighted_equal(quartic.moduli_match(p), J.point()))

    def test_plain_int_invariants_stay_exact(self):
        for J in (JInvariants(1, 2, 0, 3, 5), JInvariants(1, 2, 0, 0, 7), JInvariants(1, 2, 3, 4, 1)):
            with self.subTest(J=J):
                p = quartic.solve_params(J)
                for v in p:
                    self.assertNotIsInstance(v, float)
                if J.j4 == 0:
                    self.assertTrue(all(isinstance(v, Rational) for v in p))
        self.assertEqual(quartic.solve_params(JInvariants(1, 2, 0, 3, 5)).zeta, Rational(5, 3))

    def test_errors(self):
        rows = [
            (JInvariants(1, 2, 0, 0, 0), 'polarization'),
            (JInvariants(1, 0, 0, 0, 7), 'invalid-j'),
            (JInvariants(1, 2, sqrt(2), 0, 1), 'rational-j'),
        ]
        for J, rule in rows:
            with self.subTest(rule=rule):
                with self.assertRaises(PreconditionError) as ctx:
                    quartic.solve_params(J)
                self.assertEqual(ctx.exception.rule, rule)


class TestFamily(unittest.TestCase):

    def setUp(self):
        self.p = quartic.make_params((1, 2, 3, 4, 5, 6))

    def test_moduli_j(self):
        self.assertEqual(list(quartic.moduli_j(self.p)), [1, 2, 15, 38, 24])

    def test_scale_and_swap(self):
        self.assertEqual(tuple(quartic.scale_params(self.p, 2)), (4, 16, 96, 256, Rational(5, 2), 6))
        self.assertEqual(tuple(quartic.swap_params(self.p)), (1, 2, 5, 6, 3, 4))

    def test_symmetries(self):
        for c in quartic.verify_symmetries(self.p, Rational(3, 2)):
            with self.subTest(check=c.name):
                self.assertEqual(c.status, PASS, c.detail)

    def test_projections(self):
        for c in quartic.verify_projections(self.p):
            with self.subTest(check=c.name):
                self.assertEqual(c.status, PASS, c.detail)

    def test_projections_over_sqrt5(self):
        p = quartic.solve_params(JInvariants(63, -243, 729, -8748, -32076))
        for c in quartic.verify_projections(p):
            with self.subTest(check=c.name):
                self.assertEqual(c.status, PASS, c.detail)

    def test_preconditions(self):
        with self.assertRaises(PreconditionError) as ctx:
            quartic.scale_params(self.p, 0)
        self.assertEqual(ctx.exception.rule, 'nonzero')
        with self.assertRaises(PreconditionError) as ctx:
            quartic.verify_projections(quartic.make_params((1, 2, 0, 0, 5, 6)))
        self.assertEqual(ctx.exception.rule, 'polarization')
        with self.assertRaises(PreconditionError) as ctx:
            quartic.make_params((1, 2, 3))
        self.assertEqual(ctx.exception.rule, 'params')

    def test_unpolarized_symmetries_skip_moduli(self):
        p = quartic.make_params((1, 2, 0, 0, 5, 6))
        names = [c.name for c in quartic.verify_symmetries(p, 2)]
        self.assertEqual(names, ['quartic-scaling', 'quartic-swap'])


class TestSampled(unittest.TestCase):

    def _all_pass(self, entries):
        self.assertTrue(entries)
        for c in entries:
            with self.subTest(check=c.name, anchor=c.anchor):
                self.assertEqual(c.status, PASS, c.detail)

    def test_quartic_checks(self):
        self._all_pass(verify.quartic_checks(random.Random(11), samples=3))

    def test_moduli_round_trip(self):
        self._all_pass(verify.moduli_checks(random.Random(11), samples=2))


if __name__ == '__main__':
    unittest.main()
