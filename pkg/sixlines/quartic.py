"""
quartic.py – The quartic surface family Q(α, β, γ, δ, ε, ζ) in P³.

    Q = Y²ZW − 4X³Z + 3αXZW² + βZW³ + γXZ²W − ½(δZ²W² + ζW⁴) + εXW³

Holds the parameter record, the moduli match with J2..J6, the inverse
(solving parameters from J, adjoining one square root when needed), and
the symbolic checks of the family's isomorphisms and of the two fibred
projections onto the X-standard and X-alternate models.  The square
roots q = √t and √2 in those substitutions only ever appear squared; they
are carried as a ring variable and reduced by q² ↦ value.
"""
from __future__ import annotations

import logging
from typing import NamedTuple

from sympy import Rational, expand, sympify

import field
import fibration
import multipoly
import unipoly
from checks import Check, check, guarded
from errors import PreconditionError
from invariants import JInvariants
from weighted import weighted_equal


class QuarticParams(NamedTuple):
    alpha:   object
    beta:    object
    gamma:   object
    delta:   object
    epsilon: object
    zeta:    object

    @property
    def polarized(self) -> bool:
        z = field.is_zero
        return not (z(self.gamma) and z(self.delta)) and not (z(self.epsilon) and z(self.zeta))

    def radicand(self):
        return field.radicand_of(self)


def make_params(values) -> QuarticParams:
    values = tuple(expand(v) for v in values)
    if len(values) != 6:
        raise PreconditionError('params', f'six quartic parameters needed, got {len(values)}')
    field.radicand_of(values)
    return QuarticParams(*values)


def quartic_poly(p: QuarticParams, ring=None):
    """Q(p) as an element of Q[X, Y, Z, W, q] (or over the parameters' quadratic field)."""
    R = ring or multipoly.quartic_ring(field.domain_for(p))[0]
    X, Y, Z, W = R.gens[:4]
    half = Rational(1, 2)
    return (Y ** 2 * Z * W - 4 * X ** 3 * Z
            + X * Z * W ** 2 * (3 * p.alpha)
            + Z * W ** 3 * p.beta
            + X * Z ** 2 * W * p.gamma
            - Z ** 2 * W ** 2 * (p.delta * half)
            - W ** 4 * (p.zeta * half)
            + X * W ** 3 * p.epsilon)


# ── Isomorphisms of the family ────────────────────────────────────────────────

def scale_params(p: QuarticParams, t) -> QuarticParams:
    """(t²α, t³β, t⁵γ, t⁶δ, ε/t, ζ): the parameters reached by [q⁸X : q⁹Y : Z : q⁶W], q² = t."""
    if field.is_zero(t):
        raise PreconditionError('nonzero', 'scaling parameter t must be nonzero')
    a, b, g, d, e, z = p
    return make_params((t ** 2 * a, t ** 3 * b, t ** 5 * g, t ** 6 * d, e / t, z))


def swap_params(p: QuarticParams) -> QuarticParams:
    """(α, β, ε, ζ, γ, δ): the parameters reached by [XZ : YZ : W² : ZW]."""
    a, b, g, d, e, z = p
    return QuarticParams(a, b, e, z, g, d)


def isom_params(p: QuarticParams, t) -> QuarticParams:
    """(α, β, tγ, tδ, ε/t, ζ/t); the quartic and its polarization are unchanged."""
    if field.is_zero(t):
        raise PreconditionError('nonzero', 'rescaling parameter t must be nonzero')
    a, b, g, d, e, z = p
    return make_params((a, b, t * g, t * d, e / t, z / t))


# ── Moduli ────────────────────────────────────────────────────────────────────

def moduli_j(p: QuarticParams) -> JInvariants:
    """[α : β : γε : γζ + δε : δζ] read as J2..J6."""
    a, b, g, d, e, z = p
    return JInvariants(a, b, expand(g * e), expand(g * z + d * e), expand(d * z))


def moduli_match(p: QuarticParams):
    return moduli_j(p).point()


def solve_params(J: JInvariants) -> QuarticParams:
    """Parameters whose moduli match J; ζ takes the +√Disc(A) root when J4 ≠ 0."""
    j2, j3, j4, j5, j6 = (sympify(v) for v in J)
    if not all(field.is_rational(v) for v in J):
        raise PreconditionError('rational-j', 'parameters are solved from rational J only')
    if j3 == 0 and j4 == 0 and j5 == 0:
        raise PreconditionError('invalid-j', 'J3, J4 and J5 all vanish')
    if j4 != 0:
        root = field.sqrt_scalar(j5 ** 2 - 4 * j4 * j6)
        zeta = expand((j5 + root) / (2 * j4))
        delta = expand(j5 - j4 * zeta)
        params = (j2, j3, j4, delta, 1, zeta)
    elif j5 != 0:
        params = (j2, j3, 0, j5, 1, j6 / j5)
    elif j6 != 0:
        params = (j2, j3, 0, 1, 0, j6)
    else:
        raise PreconditionError('polarization',
                                'J4 = J5 = J6 = 0 leaves no polarized splitting of A(t)')
    out = make_params(params)
    logging.debug('solved params over radicand %s', out.radicand())
    return out


# ── Symbolic checks ───────────────────────────────────────────────────────────

def _ring_for(p: QuarticParams, ring_of):
    return ring_of(field.domain_for(p))[0]


def _scaling_identity(p, t):
    R = _ring_for(p, multipoly.quartic_ring)
    X, Y, Z, W, q = R.gens
    lhs = quartic_poly(scale_params(p, t), R).compose(
        [(X, q ** 8 * X), (Y, q ** 9 * Y), (W, q ** 6 * W)])
    lhs = multipoly.reduce_square(lhs, q, R(t))
    rhs = quartic_poly(p, R) * t ** 12
    return lhs == rhs, {'t': t}


def _swap_identity(p):
    R = _ring_for(p, multipoly.quartic_ring)
    X, Y, Z, W, _ = R.gens
    lhs = quartic_poly(p, R).compose([(X, X * Z), (Y, Y * Z), (Z, W ** 2), (W, Z * W)])
    rhs = Z ** 2 * W ** 2 * quartic_poly(swap_params(p), R)
    return lhs == rhs, {}


def verify_symmetries(p: QuarticParams, t) -> list[Check]:
    """The scaling, swap and rescaling isomorphisms of the family at p, one Check each."""
    out = [
        guarded('quartic-scaling', 'Q(t²α, t³β, t⁵γ, t⁶δ, ε/t, ζ)(q⁸X, q⁹Y, Z, q⁶W) = t¹²·Q(p)',
                _scaling_identity, p, t),
        guarded('quartic-swap', 'Q(p)(XZ, YZ, W², ZW) = Z²W²·Q(α, β, ε, ζ, γ, δ)',
                _swap_identity, p),
    ]
    if p.polarized:
        here = moduli_match(p)
        out.append(check('isom-moduli', '(γ, δ, ε, ζ) ↦ (tγ, tδ, ε/t, ζ/t) fixes the moduli point',
                         weighted_equal(moduli_match(isom_params(p, t)), here), t=t))
        out.append(check('swap-moduli', 'swapping (γ, δ) and (ε, ζ) fixes the moduli point',
                         weighted_equal(moduli_match(swap_params(p)), here)))
    return out


def to_ring(poly, var):
    """A univariate sympy Poly rewritten in a ring generator."""
    out = var.ring.zero
    for k, c in enumerate(unipoly.coeffs_low(poly)):
        out += var ** k * c
    return out


def _standard_projection(p):
    R = _ring_for(p, multipoly.projection_ring)
    x, y, s, _, _ = R.gens
    Xq, Yq, Zq, Wq, _ = multipoly.quartic_ring(R.domain)[0].gens
    model = fibration.x_standard(*p)
    f, g = to_ring(model.a4, s), to_ring(model.a6, s)
    Q = quartic_poly(p, multipoly.quartic_ring(R.domain)[0])
    image = _substitute(Q, R, {Xq: -s * x, Yq: y, Zq: 4 * s ** 4, Wq: -4 * s ** 3})
    expected = -16 * s ** 7 * (y ** 2 - x ** 3 - f * x - g)
    return image == expected, {}


def _alternate_projection(p):
    R = _ring_for(p, multipoly.projection_ring)
    x, y, _, t, q = R.gens
    Xq, Yq, Zq, Wq, _ = multipoly.quartic_ring(R.domain)[0].gens
    model = fibration.x_alternate(*p)
    B, A = to_ring(model.a2, t), to_ring(model.a4, t)
    Q = quartic_poly(p, multipoly.quartic_ring(R.domain)[0])
    zeta_eps = R(p.zeta) - t * p.epsilon
    image = _substitute(Q, R, {Xq: t * x ** 3, Yq: q * x ** 2 * y,
                               Zq: 2 * x ** 2 * zeta_eps, Wq: 2 * x ** 3})
    image = multipoly.reduce_square(image, q, R(2))
    expected = 8 * x ** 9 * zeta_eps * (y ** 2 - x * (x ** 2 + B * x + A))
    return image == expected, {}


def _substitute(Q, R, images):
    """Evaluate a quartic-ring element at ring elements of R."""
    out = R.zero
    gens = Q.ring.gens
    for monom, coeff in Q.iterterms():
        term = R(coeff)
        for g, e in zip(gens, monom):
            if e:
                term *= images[g] ** e
        out += term
    return out


def verify_projections(p: QuarticParams) -> list[Check]:
    """Both fibred substitutions reproduce the X-standard and X-alternate equations."""
    if not p.polarized:
        raise PreconditionError('polarization', 'projections need polarized parameters')
    return [
        guarded('projection-standard',
                'Q(−sx, y, 4s⁴, −4s³) = −16s⁷·(y² − x³ − f(s)x − g(s))',
                _standard_projection, p),
        guarded('projection-alternate',
                'Q(tx³, √2x²y, 2x²(ζ − εt), 2x³) = 8x⁹(ζ − εt)·(y² − x(x² + Bx + A))',
                _alternate_projection, p),
    ]
