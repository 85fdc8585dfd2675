"""
Request parsing, Session delegation to snapshot.py, and the JSON scalar forms.

Run from sixlines/:
    uv run python -m unittest tests.test_session_snapshot
"""

import math
import sys
import tempfile
import unittest
from pathlib import Path

from sympy import Rational

sys.path.insert(0, str(Path(__file__).parent.parent))

import field
import snapshot as snap
import unipoly
from checks import check
from constants import SEED
from engine import Session, parse_request
from errors import InputError, PreconditionError, SixLinesError
from loader import load_json5, loads_json5


class TestParseRequest(unittest.TestCase):

    def test_moduli(self):
        req = parse_request({'moduli': [2, '3', '-4', '5/2']})
        self.assertEqual(req.source.kind, 'moduli')
        self.assertEqual(req.source.values, (2, 3, -4, Rational(5, 2)))
        self.assertEqual(req.seed, SEED)
        self.assertIsNone(req.samples)

    def test_empty(self):
        self.assertIsNone(parse_request({}).source)
        self.assertIsNone(parse_request(None).source)

    def test_quadratic_params(self):
        req = parse_request({'params': [1, 2, 3, '1:1', {'base': 0, 'coeff': 1, 'D': 5}, 6],
                             'radicand': 5})
        self.assertEqual(field.parts(req.source.values[3]), (1, 1, 5))
        self.assertEqual(field.parts(req.source.values[4]), (0, 1, 5))
        self.assertEqual(req.source.radicand, 5)

    def test_rejected(self):
        rows = [
            ('unknown key',     {'moduli': [2, 3, 4, 5], 'colour': 1}),
            ('two sources',     {'moduli': [2, 3, 4, 5], 'rosenhain': [2, 3, 5]}),
            ('short moduli',    {'moduli': [2, 3, 4]}),
            ('five lines',      {'lines': [[1, 0, 0]] * 5}),
            ('float',           {'rosenhain': [2, 3, 0.5]}),
            ('square radicand', {'params': [1, 2, 3, 4, 5, 6], 'radicand': 4}),
            ('radicand one',    {'params': [1, 2, 3, 4, 5, 6], 'radicand': 1}),
            ('stray radicand',  {'moduli': [2, 3, 4, 5], 'radicand': 5}),
            ('no radicand',     {'params': [1, 2, 3, '1:1', 5, 6]}),
            ('mixed radicand',  {'params': [1, 2, 3, {'base': 0, 'coeff': 1, 'D': 3}, 5, 6],
                                 'radicand': 5}),
            ('unknown model',   {'moduli': [2, 3, 4, 5], 'model': 'x-weird'}),
            ('zero samples',    {'samples': 0}),
            ('not an object',   [2, 3, 4, 5]),
        ]
        for name, obj in rows:
            with self.subTest(case=name):
                with self.assertRaises(InputError):
                    parse_request(obj)


class TestSession(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.session = Session(parse_request({'moduli': [2, 3, 4, 5]}))

    def test_invariants_delegates(self):
        """Session.invariants() must equal snapshot.invariants_dict(record)."""
        self.assertEqual(self.session.invariants(), snap.invariants_dict(self.session.record))

    def test_classify_components(self):
        out = self.session.classify()
        self.assertEqual(out['components'], [3, 10])
        self.assertEqual(out['flags'], snap.flags_dict(self.session.record.flags))

    def test_labels(self):
        self.assertEqual(len(self.session.labels()), 6)
        params = Session(parse_request({'params': [1, 2, 3, 4, 5, 6]}))
        self.assertEqual(params.labels(), ['y-alt', 'x-std', 'x-alt', 'x-alt-dual'])
        one = Session(parse_request({'moduli': [2, 3, 4, 5], 'model': 'x-alt'}))
        self.assertEqual(one.labels(), ['x-alt'])

    def test_params_have_no_configuration(self):
        s = Session(parse_request({'params': [1, 2, 3, 4, 5, 6]}))
        with self.assertRaises(PreconditionError) as ctx:
            s.configuration
        self.assertEqual(ctx.exception.rule, 'source')

    def test_missing_source(self):
        with self.assertRaises(InputError):
            Session(parse_request({})).invariants()

    def test_params_from_config(self):
        out, ok = self.session.quartic_params(from_config=True)
        self.assertTrue(ok)
        self.assertEqual(out['radicand'], 5)
        self.assertEqual(out['J'], snap.j_dict(self.session.J))
        with self.assertRaises(PreconditionError) as ctx:
            self.session.quartic_params()
        self.assertEqual(ctx.exception.rule, 'source')

    def test_isogeny_verify_adds_the_suite(self):
        plain, ok = self.session.isogeny()
        self.assertTrue(ok)
        self.assertEqual([c['check'] for c in plain['checks']], ['push-forward'])
        full, ok = self.session.isogeny(verify=True)
        self.assertTrue(ok)
        self.assertEqual(len(full['checks']), 10)


class TestLoader(unittest.TestCase):

    def test_request_text(self):
        """Comments and trailing commas are accepted in requests."""
        self.assertEqual(loads_json5('{moduli: [2, 3, 4, 5], // golden\n}'), {'moduli': [2, 3, 4, 5]})

    def test_malformed_request(self):
        with self.assertRaises(InputError):
            loads_json5('{"moduli": [2, 3,')

    def test_broken_data_table(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'defaults.json5'
            path.write_text('{SEED: }', encoding='utf-8')
            with self.assertRaises(SixLinesError) as ctx:
                load_json5(path)
        self.assertIn('defaults.json5', str(ctx.exception))


class TestScalarJson(unittest.TestCase):

    def test_scalars(self):
        rows = [
            (None, None),
            (True, True),
            (7, '7'),
            (Rational(-3, 4), '-3/4'),
            (math.inf, 'inf'),
            (field.quad(1, 2, 5), {'base': '1', 'coeff': '2', 'D': 5}),
            ([1, Rational(1, 2)], ['1', '1/2']),
        ]
        for value, expected in rows:
            with self.subTest(value=value):
                self.assertEqual(snap.scalar_json(value), expected)

    def test_poly_lowest_first(self):
        self.assertEqual(snap.poly_json(unipoly.make_poly([1, 0, 2])), ['1', '0', '2'])

    def test_check_dict(self):
        c = check('demo', 'x = y', True, t=Rational(1, 2))
        self.assertEqual(snap.check_dict(c),
                         {'check': 'demo', 'anchor': 'x = y', 'status': 'pass', 't': '1/2'})

    def test_report_envelope(self):
        out = snap.report('classify', {'moduli': [2, 3, 4, 5]}, {})
        self.assertEqual(set(out), {'schema', 'command', 'input', 'results'})


if __name__ == '__main__':
    unittest.main()
