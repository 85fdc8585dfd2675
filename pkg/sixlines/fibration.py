"""
fibration.py – The six Jacobian elliptic fibrations as Weierstrass models.

Moduli-driven models (natural, natural-dual) take (a, b, c, d); the
Y-alternate model takes J2..J6; the three X-models take the quartic
parameters (α, β, γ, δ, ε, ζ).  Every builder returns a WeierstrassModel
y² = x³ + a2 x² + a4 x + a6 with coefficients in one base variable, and
records the closed-form discriminant of its construction when there is one.
"""
from __future__ import annotations

import logging
from collections import Counter
from typing import NamedTuple

from sympy import Poly, Rational, Symbol, expand

import field
import invariants
import kodaira
import unipoly
from configuration import classify_coordinates, closed_form_t
from constants import MODEL_LABELS
from errors import PreconditionError

U  = Symbol('u')
XI = Symbol('xi')
S  = Symbol('s')
TT = Symbol('T')


class WeierstrassModel(NamedTuple):
    label:        str
    a2:           Poly
    a4:           Poly
    a6:           Poly
    closed_delta: Poly = None   # cubic discriminant from the construction's own formula

    @property
    def gen(self):
        return self.a2.gen

    def long_coefficients(self):
        return self.a2, self.a4, self.a6

    def short_form(self):
        """(f, g) after x ↦ x − a2/3."""
        a2, a4, a6 = self.a2, self.a4, self.a6
        f = a4 - a2 ** 2 * Rational(1, 3)
        g = a2 ** 3 * Rational(2, 27) - a2 * a4 * Rational(1, 3) + a6
        return f, g

    def discriminant(self) -> Poly:
        """4f³ + 27g² of the short form."""
        return kodaira.short_discriminant(*self.short_form())

    def cubic_discriminant(self) -> Poly:
        """Discriminant of x³ + a2 x² + a4 x + a6 read in the long form (= −(4f³ + 27g²))."""
        a2, a4, a6 = self.a2, self.a4, self.a6
        return (a2 ** 2 * a4 ** 2 - 4 * a4 ** 3 - 4 * a2 ** 3 * a6
                + 18 * a2 * a4 * a6 - 27 * a6 ** 2)


def _poly(coeffs, gen, dom):
    return unipoly.make_poly([expand(c) for c in coeffs], gen, dom)


def zero_poly(gen, dom):
    return Poly(0, gen, domain=dom)


def _padded(p: Poly, n: int) -> list:
    cs = unipoly.coeffs_low(p)
    return cs + [0] * (n - len(cs))


# ── Moduli-driven models ──────────────────────────────────────────────────────

def _reject_non_minimal(a, b, c, d):
    stratum = classify_coordinates(closed_form_t(a, b, c, d))
    if stratum.case in ('6a', '6b'):
        raise PreconditionError('non-minimal',
                                f'moduli {(a, b, c, d)} lie in stratum ({stratum.case}); '
                                'the model is not minimal there')


def natural_factors(a, b, c, d, gen=U):
    """P2 = 2(μ−ν) and Q2 = 2(μ+ν) as polynomials in u."""
    P2 = _poly([b, a], gen, None) * _poly([d - 1, c - 1], gen, None)
    Q2 = _poly([d, c], gen, None) * _poly([b - 1, a - 1], gen, None)
    return P2, Q2


def natural_fibration(a, b, c, d) -> WeierstrassModel:
    """Y² = X(X − 2u(μ−ν))(X − 2u(μ+ν)) over the u-line."""
    _reject_non_minimal(a, b, c, d)
    P2, Q2 = natural_factors(a, b, c, d)
    u = Poly(U, U, domain=P2.domain)
    a2 = -u * (P2 + Q2)
    a4 = u ** 2 * P2 * Q2
    mu = (P2 + Q2) * Rational(1, 4)
    nu = (Q2 - P2) * Rational(1, 4)
    closed = 2 ** 8 * u ** 6 * nu ** 2 * (mu ** 2 - nu ** 2) ** 2
    return WeierstrassModel('natural', a2, a4, zero_poly(U, a2.domain), closed)


def natural_quartic_coefficients(a, b, c, d):
    """A(ξ)..E(ξ): the u-quartic ν²ξ⁴u⁰..⁴ + 2uμξ² + u² read coefficient-wise."""
    P2, Q2 = natural_factors(a, b, c, d)
    mu = _padded((P2 + Q2) * Rational(1, 4), 3)
    nu = (Q2 - P2) * Rational(1, 4)
    nu2 = _padded(nu ** 2, 5)
    nu0 = _padded(nu, 1)[0]
    A = _poly([0, 0, 0, 0, nu2[4]], XI, None)
    B = _poly([0, 0, 2 * mu[2], 0, nu2[3]], XI, None)
    C = _poly([1, 0, 2 * mu[1], 0, nu2[2]], XI, None)
    D = _poly([0, 0, 2 * mu[0], 0, nu2[1]], XI, None)
    E = _poly([0, 0, nu0], XI, None)
    return A, B, C, D, E


def natural_bfdual(a, b, c, d) -> WeierstrassModel:
    """Jacobian of η² = A u⁴ + B u³ + C u² + D u + E² over the ξ-line."""
    _reject_non_minimal(a, b, c, d)
    A, B, C, D, E = natural_quartic_coefficients(a, b, c, d)
    g2 = C ** 2 * Rational(16, 3) + 64 * A * E ** 2 - 16 * B * D
    g3 = (C ** 3 * Rational(-64, 27) + A * C * E ** 2 * Rational(256, 3)
          + B * C * D * Rational(32, 3) - 32 * A * D ** 2 - 32 * B ** 2 * E ** 2)
    f = g2 * Rational(-1, 4)
    g = g3 * Rational(-1, 4)
    return WeierstrassModel('natural-dual', zero_poly(XI, f.domain), f, g)


# ── J-driven model ────────────────────────────────────────────────────────────

def y_alternate(J) -> WeierstrassModel:
    """Y² = X(X² − 2𝓑X + 𝓑² − 4𝓐) with the Satake pieces 𝓑, 𝓐."""
    if all(field.is_zero(v) for v in (J[1], J[2], J[3])):
        raise PreconditionError('invalid-j', 'J3, J4 and J5 all vanish')
    sextic = invariants.satake_sextic(J)
    a2 = -2 * sextic.B
    a4 = sextic.S
    closed = 16 * sextic.A * sextic.S ** 2
    return WeierstrassModel('y-alt', a2, a4, zero_poly(unipoly.T, a4.domain), closed)


# ── Parameter-driven models ───────────────────────────────────────────────────

def _check_polarized(alpha, beta, gamma, delta, epsilon, zeta):
    if field.is_zero(gamma) and field.is_zero(delta):
        raise PreconditionError('polarization', '(γ, δ) = (0, 0)')
    if field.is_zero(epsilon) and field.is_zero(zeta):
        raise PreconditionError('polarization', '(ε, ζ) = (0, 0)')
    return field.domain_for((alpha, beta, gamma, delta, epsilon, zeta))


def x_standard_pieces(alpha, beta, gamma, delta, epsilon, zeta, dom=None):
    """The two quadratics in s inside f = 4s³(γs² − 3αs + ε) and g = −8s⁵(δs² + 2βs + ζ)."""
    return (_poly([epsilon, -3 * alpha, gamma], S, dom),
            _poly([zeta, 2 * beta, delta], S, dom))


def x_standard(alpha, beta, gamma, delta, epsilon, zeta) -> WeierstrassModel:
    dom = _check_polarized(alpha, beta, gamma, delta, epsilon, zeta)
    fq, gq = x_standard_pieces(alpha, beta, gamma, delta, epsilon, zeta, dom)
    s = Poly(S, S, domain=dom)
    f = 4 * s ** 3 * fq
    g = -8 * s ** 5 * gq
    p_of_s = 4 * fq ** 3 + 27 * s * gq ** 2
    closed = -64 * s ** 9 * p_of_s
    return WeierstrassModel('x-std', zero_poly(S, dom), f, g, closed)


def x_alternate_pieces(alpha, beta, gamma, delta, epsilon, zeta, dom=None):
    """B(t) = t³ − 3αt − 2β and A(t) = (γt − δ)(εt − ζ)."""
    B = _poly([-2 * beta, -3 * alpha, 0, 1], unipoly.T, dom)
    A = _poly([-delta, gamma], unipoly.T, dom) * _poly([-zeta, epsilon], unipoly.T, dom)
    return B, A


def x_alternate(alpha, beta, gamma, delta, epsilon, zeta) -> WeierstrassModel:
    """y² = x(x² + B(t)x + A(t))."""
    dom = _check_polarized(alpha, beta, gamma, delta, epsilon, zeta)
    B, A = x_alternate_pieces(alpha, beta, gamma, delta, epsilon, zeta, dom)
    closed = A ** 2 * (B ** 2 - 4 * A)
    return WeierstrassModel('x-alt', B, A, zero_poly(unipoly.T, dom), closed)


def x_alternate_bfdual(alpha, beta, gamma, delta, epsilon, zeta) -> WeierstrassModel:
    """Base-fibre dual of the X-alternate fibration, already in short form over the T-line."""
    dom = _check_polarized(alpha, beta, gamma, delta, epsilon, zeta)
    ge = expand(gamma * epsilon)
    s5 = expand(gamma * zeta + delta * epsilon)
    dz = expand(delta * zeta)
    f = _poly([0, 0, -ge ** 2 * Rational(1, 3), -s5, -3 * alpha], TT, dom)
    g = _poly([0, 0, 0,
               ge ** 3 * Rational(2, 27),
               ge * s5 * Rational(1, 3),
               alpha * ge + dz,
               -2 * beta,
               1], TT, dom)
    return WeierstrassModel('x-alt-dual', zero_poly(TT, dom), f, g)


# ── Dispatch ──────────────────────────────────────────────────────────────────

_MODULI_BUILDERS = {'natural': natural_fibration, 'natural-dual': natural_bfdual}
_PARAM_BUILDERS = {'x-std': x_standard, 'x-alt': x_alternate, 'x-alt-dual': x_alternate_bfdual}


def build_model(label, moduli=None, j=None, params=None) -> WeierstrassModel:
    """Build the fibration named by label from whichever source it is driven by."""
    if label not in MODEL_LABELS:
        raise PreconditionError('model', f'unknown fibration {label!r}')
    if label in _MODULI_BUILDERS:
        if moduli is None:
            raise PreconditionError('source', f'{label} needs moduli (a, b, c, d)')
        model = _MODULI_BUILDERS[label](*moduli)
    elif label == 'y-alt':
        if j is None:
            raise PreconditionError('source', 'y-alt needs J-invariants')
        model = y_alternate(j)
    else:
        if params is None:
            raise PreconditionError('source', f'{label} needs quartic parameters')
        model = _PARAM_BUILDERS[label](*params)
    logging.debug('built %s over %s', label, model.a4.domain)
    return model


def closed_form_matches(model: WeierstrassModel):
    """None when the construction has no closed form, else whether it equals the cubic discriminant."""
    if model.closed_delta is None:
        return None
    return (model.cubic_discriminant() - model.closed_delta).is_zero


def res_fg_flag(model: WeierstrassModel):
    """Own (0b) event of x-std / x-alt-dual: f and g share a root off the base point 0.

    For x-std the whole s³ is stripped from f; Res(f s⁻², g s⁻⁵) keeps a
    root s = 0 in the first argument and so vanishes at every ζ = 0.
    """
    f, g = model.short_form()
    strip = {'x-std': (3, 5), 'x-alt-dual': (2, 3)}.get(model.label)
    if strip is None:
        return None
    base = Poly(model.gen, model.gen, domain=f.domain)
    fr = f.exquo(base ** strip[0]) if not f.is_zero else f
    gr = g.exquo(base ** strip[1]) if not g.is_zero else g
    return field.is_zero(unipoly.resultant(fr, gr))


# ── Predicted fibre patterns ──────────────────────────────────────────────────

EXPECTED = {
    ('natural',      'generic'):    '2I0* + 6I2',
    ('natural',      'tangent'):    '2I0* + 6I2',
    ('natural-dual', 'generic'):    'I8 + I4 + 12I1',
    ('natural-dual', 'tangent'):    'I8 + I4 + 2I2 + 8I1',
    ('y-alt',        'generic'):    'I4* + 6I2 + 2I1',
    ('y-alt',        'tangent'):    'I5* + 6I2 + I1',
    ('y-alt',        'concurrent'): 'I4* + 7I2',
    ('y-alt',        'res-ab'):     'I4* + III + 5I2 + I1',
    ('y-alt',        'case-5'):     'I6* + 6I2',
    ('x-std',        'generic'):    '2III* + 6I1',
    ('x-std',        'tangent'):    'II* + III* + 5I1',
    ('x-std',        'res-ab'):     '2III* + II + 4I1',
    ('x-std',        'disc-s'):     '2III* + I2 + 4I1',
    ('x-std',        'case-5'):     '2II* + 4I1',
    ('x-alt',        'generic'):    'I8* + 2I2 + 6I1',
    ('x-alt',        'tangent'):    'I10* + I2 + 6I1',
    ('x-alt',        'concurrent'): 'I8* + I4 + 6I1',
    ('x-alt',        'res-ab'):     'I8* + III + I2 + 5I1',
    ('x-alt',        'disc-s'):     'I8* + 3I2 + 4I1',
    ('x-alt',        'cases-3-4'):  'I8* + I0* + 4I1',
    ('x-alt',        'case-5'):     'I12* + 6I1',
    ('x-alt-dual',   'generic'):    'II* + I2* + 6I1',
    ('x-alt-dual',   'tangent'):    'II* + III* + 5I1',
    ('x-alt-dual',   'concurrent'): 'II* + I3* + 5I1',
    ('x-alt-dual',   'res-ab'):     'II* + I2* + II + 4I1',
    ('x-alt-dual',   'disc-s'):     'II* + I2* + I2 + 4I1',
    ('x-alt-dual',   'cases-3-4'):  'II* + I4* + 4I1',
    ('x-alt-dual',   'case-5'):     '2II* + 4I1',
}

# Models whose (0b) event is their own Res(f, g) rather than Res(A, B).
_OWN_0B = ('x-std', 'x-alt-dual')


def stratum_event(flags, label, own_0b=False):
    """The single confluence event the flags describe, or None when several coincide."""
    if flags.case_5:
        return 'case-5'
    if flags.cases_3_4:
        return 'cases-3-4'
    events = []
    if flags.tangent:
        events.append('tangent')
    if flags.concurrent:
        events.append('concurrent')
    if flags.disc_s_zero:
        if flags.s_repeats != 1:
            return None
        events.append('disc-s')
    if (own_0b if label in _OWN_0B else flags.res_ab_zero):
        events.append('res-ab')
    if not events:
        return 'generic'
    return events[0] if len(events) == 1 else None


def expected_fibers(flags, label, own_0b=False):
    """Predicted fibre multiset for the stratum, or None when no prediction is made."""
    event = stratum_event(flags, label, own_0b)
    if event is None:
        return None
    pattern = EXPECTED.get((label, event))
    if pattern is None:
        logging.debug('no prediction for %s in event %s', label, event)
        return None
    return parse_multiset(pattern)


def parse_multiset(text: str) -> Counter:
    """'I8* + 2I2 + 6I1' → Counter({'I8*': 1, 'I2': 2, 'I1': 6})."""
    out = Counter()
    for part in text.split('+'):
        part = part.strip()
        n = 0
        while part[n].isdigit():
            n += 1
        out[part[n:]] += int(part[:n]) if n else 1
    return out


# Two-torsion orders at generic points of each family.
TWO_TORSION = {
    'natural': 4, 'natural-dual': 1, 'y-alt': 2,
    'x-std': 1, 'x-alt': 2, 'x-alt-dual': 1,
}


def expected_two_torsion(model: WeierstrassModel, flags, own_0b=False):
    """Two-torsion order the model must have, or None when its stratum leaves it open.

    Models y² = x(x² + a2 x + a4) always carry (0, 0); the other two points
    are rational exactly when a2² − 4a4 is a square, which happens off the
    generic stratum (y-alt on the concurrent stratum, where 𝓐 is a square).
    The remaining families are only pinned down at generic points.
    """
    if model.a6.is_zero:
        return 4 if unipoly.is_square_poly(model.a2 ** 2 - 4 * model.a4) else 2
    if stratum_event(flags, model.label, own_0b) == 'generic':
        return TWO_TORSION[model.label]
    return None
