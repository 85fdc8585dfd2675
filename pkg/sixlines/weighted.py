"""
weighted.py – Points of weighted projective space.

Two points are equal when one is the other scaled coordinate-wise by λ**w_k
for a single λ over the algebraic closure.  λ itself need not be rational,
so equality is decided by the pairwise cross-power test.
"""
from itertools import combinations
from typing import NamedTuple

from sympy import expand

import field
from errors import PreconditionError


class WeightedPoint(NamedTuple):
    coords:  tuple
    weights: tuple


def make_point(coords, weights) -> WeightedPoint:
    coords, weights = tuple(coords), tuple(weights)
    if len(coords) != len(weights):
        raise PreconditionError('weights', 'coordinate and weight counts differ')
    if all(field.is_zero(c) for c in coords):
        raise PreconditionError('weighted-zero', 'all coordinates vanish')
    return WeightedPoint(coords, weights)


def scale(p: WeightedPoint, lam) -> WeightedPoint:
    return WeightedPoint(tuple(expand(c * lam ** w) for c, w in zip(p.coords, p.weights)), p.weights)


def weighted_equal(p: WeightedPoint, q: WeightedPoint) -> bool:
    if p.weights != q.weights:
        raise PreconditionError('weights', f'weights {p.weights} and {q.weights} differ')
    zp = [field.is_zero(c) for c in p.coords]
    zq = [field.is_zero(c) for c in q.coords]
    if zp != zq:
        return False
    live = [k for k, z in enumerate(zp) if not z]
    w = p.weights
    for i, j in combinations(live, 2):
        lhs = p.coords[i] ** w[j] * q.coords[j] ** w[i]
        rhs = q.coords[i] ** w[j] * p.coords[j] ** w[i]
        if not field.is_zero(expand(lhs - rhs)):
            return False
    return True
