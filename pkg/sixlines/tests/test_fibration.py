"""
Weierstrass models, Kodaira fibres, Euler audits and confluence patterns.

Run from sixlines/:
    uv run python -m unittest tests.test_fibration
"""

import random
import sys
import unittest
from collections import Counter
from functools import reduce
from operator import mul
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

import configuration
import fibration
import invariants
import kodaira
import unipoly
import verify
from constants import PASS
from errors import PreconditionError
from invariants import JInvariants, StratumFlags

GOLDEN_J = JInvariants(63, -243, 729, -8748, -32076)


def _flags(**on):
    base = dict(valid=True, tangent=False, concurrent=False, cases_3_4=False, case_5=False,
                disc_s_zero=False, res_ab_zero=False, s_repeats=0)
    base.update(on)
    return StratumFlags(**base)


def _pattern(model):
    return kodaira.fiber_multiset(kodaira.kodaira_classify(model).fibers)


# ── Kodaira table ─────────────────────────────────────────────────────────────

class TestKodairaType(unittest.TestCase):

    def test_table(self):
        rows = [
            ((0, 0, 0), None), ((0, 0, 1), 'I1'), ((0, 5, 7), 'I7'),
            ((1, 1, 2), 'II'), ((1, 2, 3), 'III'), ((2, 2, 4), 'IV'),
            ((2, 3, 6), 'I0*'), ((2, 3, 8), 'I2*'), ((3, 4, 8), 'IV*'),
            ((3, 5, 9), 'III*'), ((4, 5, 10), 'II*'),
        ]
        for orders, kind in rows:
            with self.subTest(orders=orders):
                self.assertEqual(kodaira.kodaira_type(*orders), kind)

    def test_non_minimal(self):
        with self.assertRaises(PreconditionError) as ctx:
            kodaira.kodaira_type(4, 6, 12)
        self.assertEqual(ctx.exception.rule, 'non-minimal')

    def test_euler_numbers(self):
        for kind, e in (('I1', 1), ('I10', 10), ('I0*', 6), ('I10*', 16),
                        ('II', 2), ('III*', 9), ('II*', 10)):
            with self.subTest(kind=kind):
                self.assertEqual(kodaira.euler_number(kind), e)

    def test_multiset_text(self):
        ms = Counter({'I1': 6, 'I2': 2, 'I8*': 1})
        self.assertEqual(kodaira.format_multiset(ms), 'I8* + 2I2 + 6I1')
        self.assertEqual(fibration.parse_multiset('I8* + 2I2 + 6I1'), ms)
        self.assertEqual(fibration.parse_multiset('10I1 + II*'), Counter({'I1': 10, 'II*': 1}))
        self.assertEqual(kodaira.format_multiset(Counter({'III*': 1, 'II*': 1, 'I1': 5})),
                         'II* + III* + 5I1')


# ── Models at fixed points ────────────────────────────────────────────────────

class TestNatural(unittest.TestCase):

    def test_golden(self):
        """P2 − Q2 = 2(u + 1)² at (2, 3, 4, 5) merges two I2 into an I4."""
        model = fibration.natural_fibration(2, 3, 4, 5)
        report = kodaira.kodaira_classify(model)
        self.assertEqual(kodaira.fiber_multiset(report.fibers), Counter({'I0*': 2, 'I2': 4, 'I4': 1}))
        self.assertEqual(report.euler_sum, 24)
        self.assertEqual(report.two_torsion_order, 4)
        self.assertTrue(fibration.closed_form_matches(model))

    def test_shared_root(self):
        """At (2, 2, 4, 5) P2 and Q2 share u = −1, giving a third I0*."""
        self.assertEqual(_pattern(fibration.natural_fibration(2, 2, 4, 5)),
                         Counter({'I0*': 3, 'I2': 3}))

    def test_non_minimal_stratum(self):
        """a = b = 1 doubles line 4 onto line 5."""
        with self.assertRaises(PreconditionError) as ctx:
            fibration.natural_fibration(1, 1, 2, 3)
        self.assertEqual(ctx.exception.rule, 'non-minimal')

    def test_dual_has_no_closed_form(self):
        model = fibration.natural_bfdual(2, 2, 4, 5)
        self.assertIsNone(fibration.closed_form_matches(model))
        self.assertEqual(_pattern(model), fibration.parse_multiset('I8 + I6 + 10I1'))


class TestYAlternate(unittest.TestCase):

    def test_golden(self):
        """Two double roots of S at the golden point turn four I2 into two I4."""
        model = fibration.y_alternate(GOLDEN_J)
        report = kodaira.kodaira_classify(model)
        self.assertEqual(kodaira.fiber_multiset(report.fibers),
                         Counter({'I4*': 1, 'I4': 2, 'I2': 2, 'I1': 2}))
        self.assertEqual(report.two_torsion_order, 2)
        self.assertTrue(fibration.closed_form_matches(model))

    def test_generic_places(self):
        """I2 fibres sit exactly over the roots of S, I1 fibres over the roots of A."""
        rng = random.Random(17)
        while True:
            m = verify._random_moduli(rng)
            J = invariants.j_invariants(
                invariants.satake_from_t(configuration.closed_form_t(*m).t).x)
            if fibration.stratum_event(invariants.flags_for(J), 'y-alt') == 'generic':
                break
        sextic = invariants.satake_sextic(J)
        fibers = kodaira.kodaira_classify(fibration.y_alternate(J)).fibers
        for kind, want in (('I2', sextic.S), ('I1', sextic.A)):
            places = [fb.place for fb in fibers if fb.kind == kind]
            with self.subTest(kind=kind, moduli=m):
                self.assertTrue(places)
                self.assertTrue((reduce(mul, places) - want.monic()).is_zero)

    def test_invalid_j(self):
        with self.assertRaises(PreconditionError) as ctx:
            fibration.y_alternate(JInvariants(1, 0, 0, 0, 7))
        self.assertEqual(ctx.exception.rule, 'invalid-j')


class TestXModels(unittest.TestCase):

    def test_alternate_pieces(self):
        """B = t³ − 3t − 4 and A = (−3)(t − 5) at (1, 2, 0, 3, 1, 5)."""
        model = fibration.x_alternate(1, 2, 0, 3, 1, 5)
        self.assertEqual(unipoly.coeffs_low(model.a2), [-4, -3, 0, 1])
        self.assertEqual(unipoly.coeffs_low(model.a4), [15, -3])
        self.assertTrue(model.a6.is_zero)

    def test_closed_discriminants(self):
        p = (1, 2, 3, 4, 5, 6)
        for build in (fibration.x_standard, fibration.x_alternate):
            with self.subTest(model=build.__name__):
                self.assertTrue(fibration.closed_form_matches(build(*p)))

    def test_tangent_patterns(self):
        """γ = 0 puts the parameters on J4 = 0."""
        p = (1, 2, 0, 3, 1, 5)
        self.assertEqual(_pattern(fibration.x_alternate(*p)), fibration.parse_multiset('I10* + I2 + 6I1'))
        self.assertEqual(_pattern(fibration.x_standard(*p)), fibration.parse_multiset('II* + III* + 5I1'))

    def test_polarization_required(self):
        for build in (fibration.x_standard, fibration.x_alternate, fibration.x_alternate_bfdual):
            with self.subTest(model=build.__name__):
                with self.assertRaises(PreconditionError) as ctx:
                    build(1, 2, 0, 0, 1, 5)
                self.assertEqual(ctx.exception.rule, 'polarization')

    def test_own_resultant_flag(self):
        """Res(f s⁻³, g s⁻⁵) only exists for x-std and x-alt-dual."""
        self.assertIsNone(fibration.res_fg_flag(fibration.x_alternate(1, 2, 3, 4, 5, 6)))
        self.assertFalse(fibration.res_fg_flag(fibration.x_standard(1, 2, 3, 4, 5, 6)))

    def test_own_resultant_ignores_zeta_zero(self):
        """With s³ stripped, ζ = 0 alone is no shared root; s = 1 shared by both quadratics is."""
        self.assertFalse(fibration.res_fg_flag(fibration.x_standard(1, 2, 3, 4, 5, 0)))
        self.assertTrue(fibration.res_fg_flag(fibration.x_standard(1, 1, 1, 1, 2, -3)))


# ── Dispatch and predictions ──────────────────────────────────────────────────

class TestBuildModel(unittest.TestCase):

    def test_unknown_label(self):
        with self.assertRaises(PreconditionError) as ctx:
            fibration.build_model('x-weird', params=(1, 2, 3, 4, 5, 6))
        self.assertEqual(ctx.exception.rule, 'model')

    def test_missing_source(self):
        for label, kwargs in (('natural', {'j': GOLDEN_J}), ('y-alt', {'moduli': (2, 3, 4, 5)}),
                              ('x-alt', {'j': GOLDEN_J})):
            with self.subTest(label=label):
                with self.assertRaises(PreconditionError) as ctx:
                    fibration.build_model(label, **kwargs)
                self.assertEqual(ctx.exception.rule, 'source')

    def test_labels(self):
        model = fibration.build_model('x-alt-dual', params=(1, 2, 3, 4, 5, 6))
        self.assertEqual(model.label, 'x-alt-dual')
        self.assertEqual(str(model.gen), 'T')


class TestExpected(unittest.TestCase):

    def test_generic(self):
        self.assertEqual(fibration.expected_fibers(_flags(), 'x-alt'),
                         fibration.parse_multiset('I8* + 2I2 + 6I1'))
        self.assertEqual(fibration.expected_fibers(_flags(), 'natural-dual'),
                         fibration.parse_multiset('I8 + I4 + 12I1'))

    def test_case_5_wins(self):
        flags = _flags(tangent=True, case_5=True)
        self.assertEqual(fibration.stratum_event(flags, 'x-alt'), 'case-5')

    def test_coinciding_events_have_no_prediction(self):
        flags = _flags(tangent=True, concurrent=True)
        self.assertIsNone(fibration.expected_fibers(flags, 'x-alt'))

    def test_disc_s_needs_one_repeat(self):
        self.assertEqual(fibration.stratum_event(_flags(disc_s_zero=True, s_repeats=1), 'x-alt'), 'disc-s')
        self.assertIsNone(fibration.stratum_event(_flags(disc_s_zero=True, s_repeats=2), 'x-alt'))

    def test_own_0b_event(self):
        """x-std reads (0b) from its own resultant, not from Res(A, B)."""
        self.assertEqual(fibration.stratum_event(_flags(res_ab_zero=True), 'x-std'), 'generic')
        self.assertEqual(fibration.stratum_event(_flags(), 'x-std', own_0b=True), 'res-ab')
        self.assertEqual(fibration.stratum_event(_flags(res_ab_zero=True), 'x-alt'), 'res-ab')

    def test_unpredicted_pair(self):
        self.assertIsNone(fibration.expected_fibers(_flags(concurrent=True), 'x-std'))


# ── Two-torsion ───────────────────────────────────────────────────────────────

class TestTwoTorsion(unittest.TestCase):

    def _order(self, model):
        return kodaira.two_torsion_order(*model.long_coefficients())

    def test_concurrent_y_alternate_has_full_torsion(self):
        """On the concurrent stratum A(t) is a square, so x² − 2Bx + S splits."""
        J = invariants.invariants_from_configuration(configuration.from_moduli(2, 2, 4, 5)).J
        flags = invariants.flags_for(J)
        self.assertTrue(flags.concurrent)
        self.assertTrue(unipoly.is_square_poly(invariants.satake_sextic(J).A))
        model = fibration.y_alternate(J)
        self.assertEqual(fibration.expected_two_torsion(model, flags), 4)
        self.assertEqual(self._order(model), 4)

    def test_generic_y_alternate(self):
        model = fibration.y_alternate(GOLDEN_J)
        self.assertEqual(fibration.expected_two_torsion(model, invariants.flags_for(GOLDEN_J)), 2)

    def test_tangent_natural_dual_gains_a_section(self):
        """A rational two-torsion section appears on the tangent stratum; no fixed order is asserted."""
        c = configuration.from_rosenhain(2, 3, 5)
        flags = invariants.invariants_from_configuration(c).flags
        self.assertTrue(flags.tangent)
        model = fibration.natural_bfdual(*configuration.to_moduli(c))
        self.assertIsNone(fibration.expected_two_torsion(model, flags))
        self.assertEqual(self._order(model), 2)
        for entry in verify.audit_model(model, flags, 'I8 + I4 + 2I2 + 8I1'):
            self.assertEqual(entry.status, PASS, entry.name)

    def test_generic_table_applies_off_the_strata(self):
        model = fibration.x_standard(1, 2, 3, 4, 5, 6)
        self.assertEqual(fibration.expected_two_torsion(model, _flags()), 1)
        self.assertIsNone(fibration.expected_two_torsion(model, _flags(tangent=True)))

    def test_natural_always_full(self):
        model = fibration.natural_fibration(2, 3, 4, 5)
        self.assertEqual(fibration.expected_two_torsion(model, _flags(disc_s_zero=True)), 4)


# ── Audits ────────────────────────────────────────────────────────────────────

class TestAudits(unittest.TestCase):

    def _all_pass(self, entries):
        self.assertTrue(entries)
        for c in entries:
            with self.subTest(check=c.name, anchor=c.anchor):
                self.assertEqual(c.status, PASS, c.detail)

    def test_random_families(self):
        """Euler sum 24, torsion and generic pattern of every family at random points."""
        self._all_pass(verify.fibration_checks(random.Random(5), samples=2))

    def test_confluence_instances(self):
        self._all_pass(verify.confluence_checks())

    def test_golden_flags_make_no_prediction(self):
        """Disc(S) vanishes twice at the golden point, so no pattern is predicted."""
        flags = invariants.flags_for(GOLDEN_J)
        self.assertIsNone(fibration.expected_fibers(flags, 'y-alt'))


if __name__ == '__main__':
    unittest.main()
