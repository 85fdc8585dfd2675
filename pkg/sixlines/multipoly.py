"""
multipoly.py – Sparse multivariate rings used for the symbolic identities.

All rings are sympy PolyRings in lex order.  Identities modulo a fibre
relation are decided by one division: the relation is monic in its leading
variable, so it is a Gröbner basis of the ideal it generates.
"""
from functools import lru_cache

from sympy import QQ
from sympy.polys.fields import field
from sympy.polys.rings import ring

# Q[a, b, c, d]: the moduli of the normal-form configuration.
MODULI_RING, A, B, C, D = ring('a,b,c,d', QQ)


@lru_cache(maxsize=None)
def quartic_ring(domain=QQ):
    """Q[X, Y, Z, W, q] (or over Q(√D)); q is a square root tracked by reduction."""
    return ring('X,Y,Z,W,q', domain)


@lru_cache(maxsize=None)
def projection_ring(domain=QQ):
    """Coordinates of the two fibred charts: fibre (x, y), bases s and t, and q."""
    return ring('x,y,s,t,q', domain)


@lru_cache(maxsize=None)
def fibre_field():
    """Q(y, x, A, B) with y first, so the fibre relation leads with y²."""
    return field('y,x,A,B', QQ)


def total_degrees(p) -> set:
    return {sum(m) for m in p.itermonoms()}


def is_homogeneous(p, deg=None) -> bool:
    degs = total_degrees(p)
    if not degs:
        return True
    return len(degs) == 1 and (deg is None or degs == {deg})


def reduces_to_zero(p, relation) -> bool:
    """True iff p lies in the principal ideal generated by relation."""
    return not p.rem(relation)


def reduce_square(p, var, value):
    """Rewrite var² by value (a ring element) until var appears at most linearly."""
    return p.rem(var ** 2 - value)


def monomial_factor(p):
    """(m, rest) where m is the largest monomial dividing every term of p."""
    monoms = list(p.itermonoms())
    if not monoms:
        return p.ring.one, p
    common = tuple(min(e) for e in zip(*monoms))
    m = p.ring({common: p.ring.domain.one})
    return m, p.exquo(m)
