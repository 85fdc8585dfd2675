"""
verify.py – The verify-all suite.

Each section returns a list of Checks.  Polynomial identities in the
moduli are decided in Q[a, b, c, d]; the rest are decided at random
rational points drawn from one seeded random.Random, so a seed and a
sample count reproduce a run exactly.
"""
from __future__ import annotations

import logging
import random
from itertools import permutations

from sympy import Rational

import configuration
import fibration
import field
import genus2
import invariants
import isogeny
import kodaira
import multipoly
import quartic
import unipoly
from checks import Check, check, guarded
from constants import (CLOSED_FORM_SAMPLES, DISC_S_SAMPLES, HEIGHT, MODEL_LABELS, MODULI_MODELS, MODULI_SAMPLES,
                       PERMUTATION_CONFIGS, QUARTIC_SAMPLES, RELATION_SAMPLES,
                       RES_AB_SAMPLES, RESTRICTION_SAMPLES, SAMPLES)
from errors import PreconditionError
from weighted import weighted_equal

GOLDEN_MODULI = (2, 3, 4, 5)

# Verified fibre patterns on fixed members of each confluence stratum:
# (model, source kind, source values, pattern).
CONFLUENCE = (
    ('x-alt',      'params', (1, 2, 0, 3, 1, 5),     'I10* + I2 + 6I1'),
    ('x-std',      'params', (1, 2, 0, 3, 1, 5),     'II* + III* + 5I1'),
    ('x-alt-dual', 'params', (1, 2, 0, 3, 1, 5),     'II* + III* + 5I1'),
    ('y-alt',      'params', (1, 2, 0, 3, 1, 5),     'I5* + 6I2 + I1'),
    ('x-alt',      'params', (1, 2, 0, 3, 0, 5),     'I12* + 6I1'),
    ('x-std',      'params', (1, 2, 0, 3, 0, 5),     '2II* + 4I1'),
    ('x-alt-dual', 'params', (1, 2, 0, 3, 0, 5),     '2II* + 4I1'),
    ('y-alt',      'params', (1, 2, 0, 3, 0, 5),     'I6* + 6I2'),
    ('x-alt',      'params', (1, 1, 1, 2, 3, -1),    'I8* + III + I2 + 5I1'),
    ('y-alt',      'params', (1, 1, 1, 2, 3, -1),    'I4* + III + 5I2 + I1'),
    ('x-alt',      'params', (0, 1, -3, 0, -3, 0),   'I8* + I4 + 6I1'),
    ('x-alt-dual', 'params', (0, 1, -3, 0, -3, 0),   'II* + I3* + 5I1'),
    ('x-alt-dual', 'params', (0, 1, -3, 0, -3, 3),   'II* + I2* + II + 4I1'),
    ('x-std',      'params', (0, 1, -3, 0, 3, -2),   '2III* + II + 4I1'),
    ('x-alt',      'params', (1, 0, -2, -3, 2, 1),   'I8* + 3I2 + 4I1'),
    ('x-alt-dual', 'params', (1, 0, -2, -3, 2, 1),   'II* + I2* + I2 + 4I1'),
    ('x-std',      'params', (1, 0, -2, -3, 2, 1),   '2III* + I2 + 4I1'),
    ('y-alt',      'moduli', (2, 2, 4, 5),           'I4* + 7I2'),
    ('x-alt',      'moduli', (2, 2, 4, 5),           'I8* + I4 + 6I1'),
    ('x-alt-dual', 'moduli', (2, 2, 4, 5),           'II* + I3* + 5I1'),
    ('natural',    'moduli', (2, 2, 4, 5),           '3I0* + 3I2'),
    ('natural-dual', 'moduli', (2, 2, 4, 5),         'I8 + I6 + 10I1'),
    ('natural-dual', 'rosenhain', (2, 3, 5),         'I8 + I4 + 2I2 + 8I1'),
    ('y-alt',      'rosenhain', (2, 3, 5),           'I5* + 6I2 + I1'),
    ('x-alt',      'rosenhain', (2, 3, 7),           'I10* + I2 + 6I1'),
)


def _cap(default, samples):
    return default if samples is None else min(default, samples)


def _random_moduli(rng):
    """Random rational moduli off the degenerate strata."""
    while True:
        m = tuple(field.random_rational(rng, HEIGHT) for _ in range(4))
        d = configuration.closed_form_t(*m)
        if not any(field.is_zero(v) for v in d.t) and not field.is_zero(d.r):
            return m


def _random_params(rng, family='generic'):
    while True:
        p = [field.random_rational(rng, HEIGHT) for _ in range(6)]
        if family == 'epsilon-zero':
            p[4] = 0
        elif family == 'gamma-zero':
            p[2] = 0
        params = quartic.make_params(p)
        if params.polarized:
            return params


def _random_j(rng):
    while True:
        J = invariants.JInvariants(*(field.random_rational(rng, HEIGHT) for _ in range(5)))
        if not all(field.is_zero(v) for v in J[2:]) and not all(field.is_zero(v) for v in J[1:4]):
            return J


# ── Identities in Q[a, b, c, d] ───────────────────────────────────────────────

def _symbolic_records():
    a, b, c, d = multipoly.A, multipoly.B, multipoly.C, multipoly.D
    by_minors = configuration.do_coordinates(configuration.from_moduli(a, b, c, d))
    closed = configuration.closed_form_t(a, b, c, d)
    J = invariants.j_invariants(invariants.satake_from_t(closed.t).x)
    return (a, b, c, d), by_minors, closed, J


def relation_checks(rng, samples=None) -> list[Check]:
    moduli, by_minors, closed, J = _symbolic_records()
    out = configuration.verify_relations(closed)
    out.append(check('t-closed-form', 't and R from Plücker minors equal their closed forms',
                     by_minors == closed))
    for _ in range(_cap(RELATION_SAMPLES, samples)):
        m = _random_moduli(rng)
        d = configuration.do_coordinates(configuration.from_moduli(*m))
        out.append(check('relations-at-point', 'fifteen linear relations at random moduli',
                         all(field.is_zero(v) for v in configuration.relation_values(d.t)),
                         moduli=list(m)))
    return out


def identity_checks(rng, samples=None) -> list[Check]:
    """Closed forms, Disc(A) and the R² identities."""
    moduli, _, closed, J = _symbolic_records()
    closed_j = invariants.j_invariants_closed_form(*moduli)
    out = []
    for k, name in enumerate(('J2', 'J3', 'J4')):
        out.append(check(f'closed-form-{name}', f'{name} via t equals the closed form in a, b, c, d',
                         J[k] == closed_j[k]))
    for _ in range(_cap(CLOSED_FORM_SAMPLES, samples)):
        m = _random_moduli(rng)
        Jt = invariants.j_invariants(invariants.satake_from_t(configuration.closed_form_t(*m).t).x)
        Ja = invariants.j_invariants_closed_form(*m)
        out.append(check('closed-form-J5-J6', 'J5 and J6 via t equal the closed forms',
                         Jt.j5 == Ja.j5 and Jt.j6 == Ja.j6, moduli=list(m)))
    disc_a = J.j5 ** 2 - 4 * J.j4 * J.j6
    out.append(check('disc-a-product', 'J5² − 4J4J6 = 2⁻⁴·3¹⁰·Π t_i',
                     disc_a == invariants.disc_a_product(closed.t)))
    out.append(check('r-squared-j4', 'R² = 2⁴·3⁻⁴·J4', closed.r ** 2 == J.j4 * Rational(16, 81)))
    s = invariants.power_sums(invariants.satake_from_t(closed.t).x)
    out.append(check('eighteen-r', '4s4 − s2² = (18R)²', 4 * s.s4 - s.s2 ** 2 == (closed.r * 18) ** 2))
    return out


# ── Identities at random points ───────────────────────────────────────────────

def disc_s_checks(rng, samples=None) -> list[Check]:
    out = []
    for _ in range(_cap(DISC_S_SAMPLES, samples)):
        m = _random_moduli(rng)
        d = configuration.closed_form_t(*m)
        J = invariants.j_invariants(invariants.satake_from_t(d.t).x)
        disc_s = invariants.derived_invariants(J).disc_s
        out.append(check('disc-s-product', 'Disc(S) = 3³⁰ Π(t1 − tj)² × six further squares',
                         disc_s == invariants.disc_s_product(d.t), moduli=list(m)))
    return out


def res_ab_checks(rng, samples=None) -> list[Check]:
    out = []
    for _ in range(_cap(RES_AB_SAMPLES, samples)):
        J = _random_j(rng)
        got = invariants.derived_invariants(J).res_ab
        out.append(check('res-ab-closed-form', 'Res(A, B) equals its closed form in J',
                         got == invariants.res_ab_closed_form(J), j=list(J)))
    return out


def permutation_checks(rng, samples=None) -> list[Check]:
    """J and the stratum are unchanged by all 720 orderings of the six lines."""
    configs = [configuration.from_moduli(*GOLDEN_MODULI),
               configuration.from_moduli(2, 2, 4, 5),
               configuration.from_rosenhain(2, 3, 5)]
    for _ in range(_cap(PERMUTATION_CONFIGS, samples) - 1):
        configs.append(configuration.from_moduli(*_random_moduli(rng)))
    out = []
    for c in configs:
        record = invariants.invariants_from_configuration(c)
        moved = restratified = 0
        for sigma in permutations(range(1, 7)):
            pc = configuration.permute(c, sigma)
            d = configuration.do_coordinates(pc)
            if invariants.j_invariants(invariants.satake_from_t(d.t).x) != record.J:
                moved += 1
            stratum = configuration.classify_coordinates(d, configuration.has_double_line(pc))
            if stratum.case != record.stratum.case:
                restratified += 1
        source = {c.origin[0]: list(c.origin[1])}
        out.append(check('s6-invariance', 'J is invariant under every permutation of the lines',
                         moved == 0, moved=moved, **source))
        out.append(check('s6-stratum', f'stratum ({record.stratum.case}) is kept by every permutation',
                         restratified == 0, restratified=restratified, **source))
    return out


# ── Fibrations ────────────────────────────────────────────────────────────────

def audit_model(model, flags, expected_pattern=None) -> list[Check]:
    """Euler sum, closed-form discriminant, torsion and fibre pattern of one model."""
    report = kodaira.kodaira_classify(model)
    found = kodaira.fiber_multiset(report.fibers)
    label = model.label
    own_0b = fibration.res_fg_flag(model)
    out = [check('euler-sum', f'{label}: Euler numbers of the singular fibres add to 24',
                 report.euler_sum == 24, euler_sum=report.euler_sum)]
    torsion = fibration.expected_two_torsion(model, flags, own_0b)
    if torsion is not None:
        out.append(check('two-torsion', f'{label}: two-torsion order is {torsion}',
                         report.two_torsion_order == torsion, order=report.two_torsion_order))
    closed = fibration.closed_form_matches(model)
    if closed is not None:
        out.append(check('closed-discriminant', f'{label}: discriminant equals its closed form', closed))
    predicted = fibration.expected_fibers(flags, label, own_0b)
    if expected_pattern is not None:
        want = fibration.parse_multiset(expected_pattern)
        out.append(check('fibre-pattern', f'{label}: {expected_pattern}', found == want,
                         found=kodaira.format_multiset(found)))
    elif predicted is not None:
        out.append(check('fibre-pattern', f'{label}: {kodaira.format_multiset(predicted)}',
                         found == predicted, found=kodaira.format_multiset(found)))
    return out


def models_for_moduli(m):
    """All six models of one configuration, with the flags of its J-point."""
    J = invariants.j_invariants(invariants.satake_from_t(configuration.closed_form_t(*m).t).x)
    params = quartic.solve_params(J)
    flags = invariants.flags_for(J)
    models = [fibration.build_model(label, moduli=m, j=J, params=params)
              for label in MODEL_LABELS]
    return models, flags


def models_for_params(p):
    J = quartic.moduli_j(p)
    flags = invariants.flags_for(J)
    models = [fibration.build_model(label, j=J, params=p)
              for label in MODEL_LABELS if label not in MODULI_MODELS]
    return models, flags


def _audit_all(models, flags, anchor):
    out = []
    for model in models:
        out.append(_audit_guarded(model, flags, None, anchor))
    return [c for group in out for c in group]


def _audit_guarded(model, flags, pattern, anchor):
    try:
        return audit_model(model, flags, pattern)
    except PreconditionError as exc:
        logging.warning('audit of %s at %s failed: %s', model.label, anchor, exc)
        return [Check('classification', f'{model.label} at {anchor}', 'error', {'error': str(exc)})]


def fibration_checks(rng, samples=None) -> list[Check]:
    """All six families at random generic points."""
    out = []
    n = _cap(SAMPLES, samples)
    for _ in range(n):
        m = _random_moduli(rng)
        models, flags = models_for_moduli(m)
        out += _audit_all(models, flags, f'moduli {list(m)}')
    for _ in range(n):
        p = _random_params(rng)
        models, flags = models_for_params(p)
        out += _audit_all(models, flags, f'params {list(p)}')
    return out


def _source_models(kind, values):
    if kind == 'params':
        p = quartic.make_params([Rational(v) for v in values])
        return models_for_params(p)
    if kind == 'rosenhain':
        c = configuration.from_rosenhain(*values)
        return models_for_moduli(configuration.to_moduli(c))
    return models_for_moduli(tuple(Rational(v) for v in values))


def confluence_checks(rng=None, samples=None) -> list[Check]:
    """Fixed members of the confluence strata against their verified patterns."""
    out = []
    for label, kind, values, pattern in CONFLUENCE:
        models, flags = _source_models(kind, values)
        model = next(m for m in models if m.label == label)
        out += _audit_guarded(model, flags, pattern, f'{kind} {list(values)}')
    return out


# ── Isogeny, quartic, moduli, tangent ─────────────────────────────────────────

def isogeny_checks(rng=None, samples=None) -> list[Check]:
    return isogeny.symbolic_suite()


def quartic_checks(rng, samples=None) -> list[Check]:
    out = []
    families = ('generic', 'epsilon-zero', 'gamma-zero')
    for k in range(_cap(QUARTIC_SAMPLES, samples)):
        p = _random_params(rng, families[k % 3])
        t = field.random_rational(rng, HEIGHT, nonzero=True)
        out += quartic.verify_symmetries(p, t)
        out += quartic.verify_projections(p)
    return out


def _round_trip(J):
    p = quartic.solve_params(J)
    pushed = isogeny.push_forward_model(p)
    direct = fibration.y_alternate(J)
    same = (pushed.a2 - direct.a2).is_zero and (pushed.a4 - direct.a4).is_zero
    return weighted_equal(quartic.moduli_match(p), J.point()) and same, {
        'j': list(J), 'radicand': p.radicand()}


def moduli_checks(rng, samples=None) -> list[Check]:
    out = [guarded('moduli-round-trip', 'moduli_match(solve_params(J)) = J; Φ̂ pushes X-alt onto Y-alt',
                   _round_trip, invariants.j_invariants(
                       invariants.satake_from_t(configuration.closed_form_t(*GOLDEN_MODULI).t).x))]
    for _ in range(_cap(MODULI_SAMPLES, samples)):
        J = _random_j(rng)
        out.append(guarded('moduli-round-trip',
                           'moduli_match(solve_params(J)) = J; Φ̂ pushes X-alt onto Y-alt',
                           _round_trip, J))
    return out


def tangent_checks(rng, samples=None) -> list[Check]:
    out = []
    for _ in range(_cap(RESTRICTION_SAMPLES, samples)):
        out += genus2.restriction_check(genus2.random_rosenhain(rng, HEIGHT))
    return out


SECTIONS = (
    ('golden',      lambda rng, samples: golden_checks() + unipoly_sanity()),
    ('relations',   relation_checks),
    ('identities',  identity_checks),
    ('disc-s',      disc_s_checks),
    ('res-ab',      res_ab_checks),
    ('permutations', permutation_checks),
    ('fibrations',  fibration_checks),
    ('confluence',  confluence_checks),
    ('isogeny',     isogeny_checks),
    ('quartic',     quartic_checks),
    ('moduli',      moduli_checks),
    ('tangent',     tangent_checks),
)


def verify_all(seed, samples=None, extra=None) -> dict:
    """{section: [Check]} for every section, plus the input-specific section when given."""
    rng = random.Random(seed)
    out = {}
    for name, fn in SECTIONS:
        logging.info('verify-all: %s', name)
        out[name] = fn(rng, samples)
    if extra:
        out['input'] = extra
    return out


def golden_checks() -> list[Check]:
    """The (2, 3, 4, 5) example through both code paths."""
    c = configuration.from_moduli(*GOLDEN_MODULI)
    record = invariants.invariants_from_configuration(c)
    closed = configuration.closed_form_t(*GOLDEN_MODULI)
    J = record.J
    return [
        check('golden-t', 't = (8, 1, 1, 8, 9, 5, 2, 2, −2, −2), R = −12',
              record.coordinates == closed
              and list(closed.t) == [8, 1, 1, 8, 9, 5, 2, 2, -2, -2] and closed.r == -12),
        check('golden-j', 'J = (63, −243, 729, −8748, −32076)',
              list(J) == [63, -243, 729, -8748, -32076]),
        check('golden-disc-a', 'Disc(A) = 170061120 both ways',
              record.derived.disc_a == 170061120
              and invariants.disc_a_product(closed.t) == 170061120),
    ]


def source_checks(kind, values) -> list[Check]:
    """Checks specific to the request's own configuration source."""
    if kind == 'rosenhain':
        return genus2.restriction_check(genus2.make_curve(*values))
    if kind == 'params':
        p = quartic.make_params(values)
        out = quartic.verify_symmetries(p, Rational(2)) + quartic.verify_projections(p)
        models, flags = models_for_params(p)
        return out + _audit_all(models, flags, 'input')
    if kind == 'moduli':
        c = configuration.from_moduli(*values)
    else:
        c = configuration.from_lines(values)
    record = invariants.invariants_from_configuration(c)
    out = configuration.verify_relations(record.coordinates)
    out.append(check('disc-a-product', 'J5² − 4J4J6 = 2⁻⁴·3¹⁰·Π t_i',
                     field.equal(record.derived.disc_a, invariants.disc_a_product(record.coordinates.t))))
    if kind == 'moduli':
        models, flags = models_for_moduli(tuple(values))
        out += _audit_all(models, flags, 'input')
    return out


def unipoly_sanity() -> list[Check]:
    """Sylvester and subresultant resultants agree on the golden sextic pieces."""
    sextic = invariants.satake_sextic(invariants.JInvariants(63, -243, 729, -8748, -32076))
    return [check('sylvester-resultant', 'Res(A, B) by Sylvester determinant and by subresultants',
                  unipoly.sylvester_resultant(sextic.A, sextic.B) == unipoly.resultant(sextic.A, sextic.B))]
