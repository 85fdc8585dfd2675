"""
kodaira.py – Singular fibres of y² = x³ + f(t)x + g(t) over P¹.

The fibre type at a place is read off (ord f, ord g, ord Δ) with
Δ = 4f³ + 27g² (characteristic zero, so no Tate loop is needed).  Places
are the members of a gcd-free basis of the squarefree factors of f, g and
Δ; each member has uniform orders at all of its roots.  The place at
infinity is read after reciprocal homogenisation with the K3 bounds.
"""
from __future__ import annotations

import logging
from collections import Counter
from typing import NamedTuple

from sympy import Dummy, Poly

import unipoly
from constants import K3_BOUNDS
from errors import PreconditionError

INF = 'inf'
X = Dummy('x')

_EULER = {'II': 2, 'III': 3, 'IV': 4, 'IV*': 8, 'III*': 9, 'II*': 10}


class KodairaFiber(NamedTuple):
    kind:   str          # 'I3', 'I0*', 'II', 'III*', ...
    place:  object       # monic Poly in the base variable, or INF
    count:  int          # geometric points of the place
    orders: tuple        # (ord f, ord g, ord Δ)


class FiberReport(NamedTuple):
    fibers:            tuple
    euler_sum:         int
    two_torsion_order: int


def kodaira_type(of, og, od):
    """Fibre type for the given vanishing orders; None for a smooth fibre."""
    if od == 0:
        return None
    if of == 0 or og == 0:
        return f'I{od}'
    if og == 1:
        return 'II'
    if of == 1:
        return 'III'
    if og == 2:
        return 'IV'
    if not (of >= 3 and og >= 4):
        return f'I{od - 6}*'
    if og == 4:
        return 'IV*'
    if of == 3:
        return 'III*'
    if og == 5:
        return 'II*'
    raise PreconditionError('non-minimal', f'ord f = {of}, ord g = {og}')


def euler_number(kind: str) -> int:
    if kind in _EULER:
        return _EULER[kind]
    if kind.endswith('*'):
        return int(kind[1:-1]) + 6
    return int(kind[1:])


def short_discriminant(f: Poly, g: Poly) -> Poly:
    return 4 * f ** 3 + 27 * g ** 2


def _orders(polys, place):
    return tuple(unipoly.order_at(p, place) for p in polys)


def classify_fibres(f: Poly, g: Poly, bounds=K3_BOUNDS) -> list:
    """All singular fibres of y² = x³ + f x + g, finite places first, ∞ last."""
    delta = short_discriminant(f, g)
    if delta.is_zero:
        raise PreconditionError('singular', 'discriminant vanishes identically')
    pieces = []
    for p in (f, g, delta):
        if not p.is_zero and p.degree() > 0:
            pieces += [q for q, _ in unipoly.squarefree_decompose(p)]
    fibres = []
    for place in unipoly.gcd_free_basis(pieces):
        orders = _orders((f, g, delta), place)
        try:
            kind = kodaira_type(*orders)
        except PreconditionError as exc:
            raise PreconditionError('non-minimal', f'at {place.as_expr()} = 0: {exc.args[0]}')
        if kind:
            fibres.append(KodairaFiber(kind, place, place.degree(), orders))

    gen = delta.gen
    u = Poly(gen, gen, domain=delta.domain)
    at_inf = [unipoly.reciprocal_homogenize(p, n) for p, n in zip((f, g, delta), bounds)]
    orders = _orders(at_inf, u)
    try:
        kind = kodaira_type(*orders)
    except PreconditionError as exc:
        raise PreconditionError('non-minimal', f'at infinity: {exc.args[0]}')
    if kind:
        fibres.append(KodairaFiber(kind, INF, 1, orders))
    logging.debug('fibres: %s', [(fb.kind, fb.count) for fb in fibres])
    return fibres


def two_torsion_order(a2: Poly, a4: Poly, a6: Poly) -> int:
    """1 + number of base-rational roots of x³ + a2 x² + a4 x + a6 (so 1, 2 or 4)."""
    t = a2.gen
    cubic = X ** 3 + a2.as_expr() * X ** 2 + a4.as_expr() * X + a6.as_expr()
    dom = unipoly.unify_domains(a2, a4, a6)
    _, factors = Poly(cubic, X, t, domain=dom).factor_list()
    roots = sum(k for q, k in factors if q.degree(X) == 1)
    return 1 + roots


def euler_sum(fibres) -> int:
    return sum(euler_number(fb.kind) * fb.count for fb in fibres)


def fiber_multiset(fibres) -> Counter:
    """Counter of fibre types weighted by place degree, e.g. {'I1': 6, 'I2': 2, 'I8*': 1}."""
    out = Counter()
    for fb in fibres:
        out[fb.kind] += fb.count
    return out


def format_multiset(ms) -> str:
    """'I8* + 2I2 + 6I1' style, starred and additive types before I_n."""
    def key(kind):
        return (kind[1:].isdigit(), -euler_number(kind), kind)
    parts = []
    for kind in sorted(ms, key=key):
        n = ms[kind]
        parts.append(kind if n == 1 else f'{n}{kind}')
    return ' + '.join(parts)


def kodaira_classify(model) -> FiberReport:
    f, g = model.short_form()
    fibres = classify_fibres(f, g)
    torsion = two_torsion_order(*model.long_coefficients())
    return FiberReport(tuple(fibres), euler_sum(fibres), torsion)
