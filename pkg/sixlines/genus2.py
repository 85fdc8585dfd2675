"""
genus2.py – Rosenhain curves and Igusa–Clebsch invariants of binary sextics.

Roots are projective pairs (p, q) standing for p/q, so the branch point at
infinity is (1, 0) and needs no special case.  The invariants are sums of
products of squared brackets (ij) = p_i q_j − p_j q_i; each I_k is
homogeneous of degree k in every root, so rescaling a root representative
or moving all roots by a Möbius map changes (I2, I4, I6, I10) by a weighted
scaling with weights (1, 2, 3, 5).
"""
from __future__ import annotations

from itertools import combinations, permutations
from typing import NamedTuple

from sympy import Integer, Rational

import configuration
import field
import invariants
from checks import Check, check
from constants import IGUSA_WEIGHTS, J_WEIGHTS
from errors import PreconditionError
from weighted import make_point, weighted_equal


class RosenhainCurve(NamedTuple):
    l1: Rational
    l2: Rational
    l3: Rational


class IgusaInvariants(NamedTuple):
    i2:  object
    i4:  object
    i6:  object
    i10: object

    def point(self):
        return make_point(self, IGUSA_WEIGHTS)


def make_curve(l1, l2, l3) -> RosenhainCurve:
    lams = tuple(Rational(v) for v in (l1, l2, l3))
    if any(v in (0, 1) for v in lams) or len(set(lams)) != 3:
        raise PreconditionError('rosenhain-distinct',
                                f'λ must be pairwise distinct and avoid 0, 1; got {lams}')
    return RosenhainCurve(*lams)


def sextic_roots(c: RosenhainCurve) -> tuple:
    """Branch points 0, 1, λ1, λ2, λ3, ∞ of y² = x(x − 1)(x − λ1)(x − λ2)(x − λ3)."""
    one, zero = Integer(1), Integer(0)
    return ((zero, one), (one, one), (c.l1, one), (c.l2, one), (c.l3, one), (one, zero))


def _bracket(r, s):
    return r[0] * s[1] - s[0] * r[1]


def _matchings(items):
    """All perfect matchings of an even-length tuple."""
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for k, other in enumerate(rest):
        for m in _matchings(rest[:k] + rest[k + 1:]):
            yield ((first, other),) + m


def _splits():
    """The ten splits of {0..5} into two triples, each listed once."""
    for T in combinations(range(6), 3):
        if 0 in T:
            yield T, tuple(k for k in range(6) if k not in T)


def igusa_clebsch(roots) -> IgusaInvariants:
    roots = tuple(roots)
    if len(roots) != 6:
        raise PreconditionError('sextic', f'six roots needed, got {len(roots)}')
    sq = {}
    for i, j in combinations(range(6), 2):
        v = _bracket(roots[i], roots[j]) ** 2
        sq[i, j] = sq[j, i] = v
    i10 = 1
    for i, j in combinations(range(6), 2):
        i10 *= sq[i, j]
    if field.is_zero(i10):
        raise PreconditionError('repeated-root', 'the sextic has a repeated root')

    def tri(T):
        a, b, c = T
        return sq[a, b] * sq[b, c] * sq[a, c]

    i2 = sum(sq[a] * sq[b] * sq[c] for a, b, c in _matchings(tuple(range(6))))
    i4 = 0
    i6 = 0
    for T, U in _splits():
        core = tri(T) * tri(U)
        i4 += core
        for image in permutations(U):
            cross = 1
            for p, q in zip(T, image):
                cross *= sq[p, q]
            i6 += core * cross
    return IgusaInvariants(*(field.collapse(v) for v in (i2, i4, i6, i10)))


def mobius(roots, m) -> tuple:
    """Apply [[a, b], [c, d]] to every projective root."""
    (a, b), (c, d) = m
    if field.is_zero(a * d - b * c):
        raise PreconditionError('invertible', 'Möbius map needs ad − bc ≠ 0')
    return tuple((a * p + b * q, c * p + d * q) for p, q in roots)


def restriction_point(I: IgusaInvariants):
    """[I4/4 : (I2·I4 − 3·I6)/8 : 0 : −243/4·I10 : 243/32·I2·I10] in P(2, 3, 4, 5, 6)."""
    i2, i4, i6, i10 = I
    coords = (i4 * Rational(1, 4),
              (i2 * i4 - 3 * i6) * Rational(1, 8),
              Integer(0),
              i10 * Rational(-243, 4),
              i2 * i10 * Rational(243, 32))
    return make_point(coords, J_WEIGHTS)


def restriction_check(c: RosenhainCurve) -> list[Check]:
    """The tangent configuration of c against its Igusa–Clebsch point."""
    config = configuration.from_rosenhain(c.l1, c.l2, c.l3)
    record = invariants.invariants_from_configuration(config)
    I = igusa_clebsch(sextic_roots(c))
    here = record.J.point()
    lam = list(c)
    return [
        check('tangent-lines', 'all six lines touch z3² = 4·z1·z2',
              all(configuration.tangent_to_conic(ln) for ln in config.lines), rosenhain=lam),
        check('tangent-r', 'R = 0 on tangent configurations',
              field.is_zero(record.coordinates.r), rosenhain=lam, r=record.coordinates.r),
        check('tangent-j4', 'J4 = 0 on tangent configurations',
              field.is_zero(record.J.j4), rosenhain=lam, j4=record.J.j4),
        check('restriction', '[J2 : … : J6] = [I4/4 : (I2I4 − 3I6)/8 : 0 : −243I10/4 : 243I2I10/32]',
              weighted_equal(here, restriction_point(I)), rosenhain=lam),
    ]


def random_rosenhain(rng, height) -> RosenhainCurve:
    """λ-triple of random rationals avoiding 0, 1 and repeats."""
    while True:
        lams = [field.random_rational(rng, height) for _ in range(3)]
        if all(v not in (0, 1) for v in lams) and len(set(lams)) == 3:
            return RosenhainCurve(*lams)
