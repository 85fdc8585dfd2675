"""
isogeny.py – The van Geemen–Sarti involutions and the fibrewise two-isogeny.

X-model:  y² = x(x² + B x + A)
Y-model:  Y² = X(X² − 2B X + B² − 4A)

Φ̂ sends the X-model to the Y-model, Φ sends it back, and Φ∘Φ̂ = [2].
Both involutions are translation by the two-torsion section τ = (0, 0);
they swap τ with the zero section σ at infinity.  Point maps never
evaluate their formulas at σ or τ.

symbolic_suite() proves every identity with A and B indeterminate: each
rational function is reduced modulo the fibre relation, led by y².
"""
from __future__ import annotations

import logging
from typing import NamedTuple

from sympy import expand

import field
import multipoly
import unipoly
from checks import Check, check
from errors import PreconditionError
from fibration import WeierstrassModel, x_alternate_pieces, zero_poly

INF = 'inf'


class FiberPoint(NamedTuple):
    t: object      # base coordinate
    x: object      # scalar, or INF for the zero section
    y: object

    @property
    def at_infinity(self) -> bool:
        return isinstance(self.x, str) and self.x == INF

    @property
    def is_two_torsion(self) -> bool:
        return not self.at_infinity and field.is_zero(self.x) and field.is_zero(self.y)


def infinity(t) -> FiberPoint:
    return FiberPoint(t, INF, INF)


def _div(a, b):
    return expand(a * field.inverse(b))


def _values(A, B, t):
    return unipoly.evaluate(A, t), unipoly.evaluate(B, t)


def on_x_model(A, B, p: FiberPoint) -> bool:
    if p.at_infinity:
        return True
    a, b = _values(A, B, p.t)
    return field.is_zero(p.y ** 2 - p.x * (p.x ** 2 + b * p.x + a))


def on_y_model(A, B, p: FiberPoint) -> bool:
    if p.at_infinity:
        return True
    a, b = _values(A, B, p.t)
    return field.is_zero(p.y ** 2 - p.x * (p.x ** 2 - 2 * b * p.x + b ** 2 - 4 * a))


def _require(on_model, A, B, p, which):
    if not on_model(A, B, p):
        raise PreconditionError('on-curve', f'{p} is not on the {which}-model fibre')


# ── Point maps ────────────────────────────────────────────────────────────────

def vgs_involution_x(A, B, p: FiberPoint) -> FiberPoint:
    """(x, y) ↦ (A/x, −A·y/x²); σ ↔ τ."""
    _require(on_x_model, A, B, p, 'X')
    if p.at_infinity:
        return FiberPoint(p.t, 0, 0)
    if p.is_two_torsion:
        return infinity(p.t)
    a, _ = _values(A, B, p.t)
    return FiberPoint(p.t, _div(a, p.x), -_div(a * p.y, p.x ** 2))


def vgs_involution_y(A, B, p: FiberPoint) -> FiberPoint:
    """(X, Y) ↦ ((B² − 4A)/X, −(B² − 4A)·Y/X²); σ ↔ τ."""
    _require(on_y_model, A, B, p, 'Y')
    if p.at_infinity:
        return FiberPoint(p.t, 0, 0)
    if p.is_two_torsion:
        return infinity(p.t)
    a, b = _values(A, B, p.t)
    k = b ** 2 - 4 * a
    return FiberPoint(p.t, _div(k, p.x), -_div(k * p.y, p.x ** 2))


def isogeny_phi_hat(A, B, p: FiberPoint) -> FiberPoint:
    """X-model → Y-model: (x, y) ↦ (y²/x², (x² − A)·y/x²); σ and τ go to σ."""
    _require(on_x_model, A, B, p, 'X')
    if p.at_infinity or field.is_zero(p.x):
        return infinity(p.t)
    a, _ = _values(A, B, p.t)
    x2 = p.x ** 2
    return FiberPoint(p.t, _div(p.y ** 2, x2), _div((x2 - a) * p.y, x2))


def isogeny_phi(A, B, p: FiberPoint) -> FiberPoint:
    """Y-model → X-model: (X, Y) ↦ (Y²/4X², Y(X² − B² + 4A)/8X²); σ and τ go to σ."""
    _require(on_y_model, A, B, p, 'Y')
    if p.at_infinity or field.is_zero(p.x):
        return infinity(p.t)
    a, b = _values(A, B, p.t)
    x2 = p.x ** 2
    return FiberPoint(p.t, _div(p.y ** 2, 4 * x2), _div(p.y * (x2 - b ** 2 + 4 * a), 8 * x2))


def duplicate(A, B, p: FiberPoint) -> FiberPoint:
    """[2]p on the X-model by the tangent line."""
    _require(on_x_model, A, B, p, 'X')
    if p.at_infinity or field.is_zero(p.y):
        return infinity(p.t)
    a, b = _values(A, B, p.t)
    slope = _div(3 * p.x ** 2 + 2 * b * p.x + a, 2 * p.y)
    x2 = expand(slope ** 2 - b - 2 * p.x)
    return FiberPoint(p.t, x2, expand(slope * (p.x - x2) - p.y))


def push_forward_model(params) -> WeierstrassModel:
    """The Y-model reached from x_alternate(params) through Φ̂."""
    dom = field.domain_for(params)
    B, A = x_alternate_pieces(*params, dom)
    return WeierstrassModel('y-alt', -2 * B, B ** 2 - 4 * A, zero_poly(B.gen, dom))


# ── Symbolic identities ───────────────────────────────────────────────────────

def _generic():
    """Q(y, x, A, B) with the X- and Y-fibre relations as ring elements."""
    K, y, x, A, B = multipoly.fibre_field()
    rel_x = (y ** 2 - x * (x ** 2 + B * x + A)).numer
    rel_y = (y ** 2 - x * (x ** 2 - 2 * B * x + B ** 2 - 4 * A)).numer
    return y, x, A, B, rel_x, rel_y


def _vanishes(h, relation) -> bool:
    return multipoly.reduces_to_zero(h.numer, relation)


def _same(p, q, relation) -> bool:
    return all(_vanishes(u - v, relation) for u, v in zip(p, q))


def symbolic_suite() -> list[Check]:
    """Every isogeny and involution identity with A, B indeterminate."""
    y, x, A, B, rel_x, rel_y = _generic()
    K2 = B ** 2 - 4 * A

    def on_x(p):
        return p[1] ** 2 - p[0] * (p[0] ** 2 + B * p[0] + A)

    def on_y(p):
        return p[1] ** 2 - p[0] * (p[0] ** 2 - 2 * B * p[0] + K2)

    def iota_x(p):
        return A / p[0], -A * p[1] / p[0] ** 2

    def iota_y(p):
        return K2 / p[0], -K2 * p[1] / p[0] ** 2

    def phi_hat(p):
        return p[1] ** 2 / p[0] ** 2, (p[0] ** 2 - A) * p[1] / p[0] ** 2

    def phi(p):
        return p[1] ** 2 / (4 * p[0] ** 2), p[1] * (p[0] ** 2 - K2) / (8 * p[0] ** 2)

    def double(p):
        slope = (3 * p[0] ** 2 + 2 * B * p[0] + A) / (2 * p[1])
        x2 = slope ** 2 - B - 2 * p[0]
        return x2, slope * (p[0] - x2) - p[1]

    P = (x, y)
    out = [
        check('phi-hat-image', 'Φ̂(x, y) lies on Y² = X(X² − 2BX + B² − 4A)',
              _vanishes(on_y(phi_hat(P)), rel_x)),
        check('phi-image', 'Φ(X, Y) lies on y² = x(x² + Bx + A)',
              _vanishes(on_x(phi(P)), rel_y)),
        check('phi-after-phi-hat', 'Φ∘Φ̂ = [2] on the X-fibre',
              _same(phi(phi_hat(P)), double(P), rel_x)),
        check('involution-x-image', 'ι(x, y) = (A/x, −Ay/x²) stays on the X-fibre',
              _vanishes(on_x(iota_x(P)), rel_x)),
        check('involution-x-order', 'ι∘ι = id on the X-fibre',
              _same(iota_x(iota_x(P)), P, rel_x)),
        check('phi-hat-invariance', 'Φ̂∘ι = Φ̂',
              _same(phi_hat(iota_x(P)), phi_hat(P), rel_x)),
        check('involution-y-image', 'ι̂(X, Y) = ((B² − 4A)/X, −(B² − 4A)Y/X²) stays on the Y-fibre',
              _vanishes(on_y(iota_y(P)), rel_y)),
        check('involution-y-order', 'ι̂∘ι̂ = id on the Y-fibre',
              _same(iota_y(iota_y(P)), P, rel_y)),
        check('phi-invariance', 'Φ∘ι̂ = Φ',
              _same(phi(iota_y(P)), phi(P), rel_y)),
    ]
    logging.debug('symbolic suite: %d identities', len(out))
    return out
