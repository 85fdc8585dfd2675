"""
configuration.py – Six lines in the projective plane and their DO coordinates.

A line a·z1 + b·z2 + c·z3 = 0 is stored as its coefficient triple; the
configuration is the 3×6 matrix whose columns are those triples.  Entries
may be sympy scalars or elements of a polynomial ring, so the same code
computes numbers and symbolic identities.
"""
from __future__ import annotations

import logging
from itertools import combinations
from typing import NamedTuple

from sympy import Rational

import field
import linalg
from checks import check
from errors import InputError, PreconditionError


class Line(NamedTuple):
    a: object
    b: object
    c: object


class Configuration(NamedTuple):
    lines:  tuple          # six Lines
    origin: tuple = None   # ('moduli', (a, b, c, d)) | ('rosenhain', (λ1, λ2, λ3)) | None


class DOCoordinates(NamedTuple):
    t: tuple               # t1..t10
    r: object              # R


class Stratum(NamedTuple):
    case:      str         # '0', '1', '2', '3', '4', '5', '6a', '6b' or 'other'
    name:      str
    vanishing: tuple       # 1-based indices of the vanishing t_i
    r_is_zero: bool


STRATUM_NAMES = {
    '0':     'Generic',
    '1':     'TangentConic',
    '2':     'ThreeConcurrent',
    '2b':    'DiscSComponent',
    '3':     'TwoVanish',
    '4':     'ThreeVanish',
    '5':     'Mixed',
    '6a':    'FourConcurrent',
    '6b':    'DoubleLine',
    'other': 'OtherDegenerate',
}

# t_k = D_{first} · D_{second}
T_MINORS = (
    ((1, 3, 5), (2, 4, 6)),
    ((1, 4, 5), (2, 3, 6)),
    ((1, 4, 6), (2, 3, 5)),
    ((1, 3, 6), (2, 4, 5)),
    ((1, 2, 5), (3, 4, 6)),
    ((1, 2, 6), (3, 4, 5)),
    ((1, 3, 4), (2, 5, 6)),
    ((1, 2, 4), (3, 5, 6)),
    ((1, 5, 6), (2, 3, 4)),
    ((1, 2, 3), (4, 5, 6)),
)

# Fifteen linear relations, as coefficient vectors over t1..t10.
RELATIONS = (
    (1, -1, 0, 0, -1, 0, 0, 0, -1, 0),
    (1, -1, 0, 0, 0, -1, -1, 0, 0, 0),
    (1, 0, -1, 0, -1, 0, 0, 0, 0, -1),
    (1, 0, -1, 0, 0, -1, 0, -1, 0, 0),
    (1, 0, 0, -1, 0, 0, -1, 0, 0, -1),
    (1, 0, 0, -1, 0, 0, 0, -1, -1, 0),
    (0, 1, -1, 0, 0, 0, 1, -1, 0, 0),
    (0, 1, -1, 0, 0, 0, 0, 0, 1, -1),
    (0, 1, 0, -1, 1, 0, 0, -1, 0, 0),
    (0, 1, 0, -1, 0, 1, 0, 0, 0, -1),
    (0, 0, 1, -1, 1, 0, -1, 0, 0, 0),
    (0, 0, 1, -1, 0, 1, 0, 0, -1, 0),
    (0, 0, 0, 0, 1, -1, -1, 0, 1, 0),
    (0, 0, 0, 0, 1, -1, 0, -1, 0, 1),
    (0, 0, 0, 0, 0, 0, 1, -1, -1, 1),
)

# Components of Disc(S) = 0: three equalities t_i = sign · t_j each.
COMPONENTS = {
    1:  ((1, 2, 1), (5, 9, -1), (6, 7, -1)),
    2:  ((1, 3, 1), (5, 10, -1), (6, 8, -1)),
    3:  ((1, 4, 1), (7, 10, -1), (8, 9, -1)),
    4:  ((1, 5, 1), (2, 9, -1), (3, 10, -1)),
    5:  ((1, 6, 1), (2, 7, -1), (3, 8, -1)),
    6:  ((1, 7, 1), (2, 6, -1), (4, 10, -1)),
    7:  ((1, 8, 1), (3, 6, -1), (4, 9, -1)),
    8:  ((1, 9, 1), (2, 5, -1), (4, 8, -1)),
    9:  ((1, 10, 1), (3, 5, -1), (4, 7, -1)),
    10: ((2, 3, 1), (7, 8, 1), (9, 10, 1)),
    11: ((2, 4, 1), (5, 8, 1), (6, 10, 1)),
    12: ((2, 8, 1), (3, 7, 1), (4, 5, 1)),
    13: ((2, 10, 1), (3, 9, 1), (4, 6, 1)),
    14: ((3, 4, 1), (5, 7, 1), (6, 9, 1)),
    15: ((5, 6, 1), (7, 9, 1), (8, 10, 1)),
}


# ── Construction ──────────────────────────────────────────────────────────────

def from_moduli(a, b, c, d) -> Configuration:
    """z1, z2, z3, z1+z2+z3, z1+a·z2+b·z3, z1+c·z2+d·z3 (in this order)."""
    lines = (Line(1, 0, 0), Line(0, 1, 0), Line(0, 0, 1),
             Line(1, 1, 1), Line(1, a, b), Line(1, c, d))
    return Configuration(lines, ('moduli', (a, b, c, d)))


def from_rosenhain(l1, l2, l3) -> Configuration:
    """Six lines tangent to z3² = 4·z1·z2, one per branch point 0, ∞, 1, λ1, λ2, λ3."""
    lams = [Rational(v) for v in (l1, l2, l3)]
    if any(v in (0, 1) for v in lams):
        raise PreconditionError('rosenhain-distinct', f'λ must avoid 0 and 1, got {lams}')
    if len(set(lams)) != 3:
        raise PreconditionError('rosenhain-distinct', f'λ must be pairwise distinct, got {lams}')
    lines = [Line(1, 0, 0), Line(0, 1, 0), Line(1, 1, -1)]
    lines += [Line(v ** 2, 1, -v) for v in lams]
    return Configuration(tuple(lines), ('rosenhain', tuple(lams)))


def from_lines(rows) -> Configuration:
    rows = list(rows)
    if len(rows) != 6 or any(len(r) != 3 for r in rows):
        raise InputError('a configuration needs six lines of three coefficients')
    lines = tuple(Line(*r) for r in rows)
    for i, ln in enumerate(lines, 1):
        if all(field.is_zero(v) for v in ln):
            raise InputError(f'line {i} has all coefficients zero')
    return Configuration(lines)


# ── Plücker and DO coordinates ────────────────────────────────────────────────

def plucker(c: Configuration, i, j, k):
    """D_ijk: determinant of columns i, j, k (1-based, distinct; order gives the sign)."""
    idx = (i, j, k)
    if len(set(idx)) != 3 or not all(1 <= n <= 6 for n in idx):
        raise PreconditionError('plucker-index', f'bad minor indices {idx}')
    cols = [c.lines[n - 1] for n in idx]
    return linalg.det3([[col[r] for col in cols] for r in range(3)])


def do_coordinates(c: Configuration) -> DOCoordinates:
    D = {ijk: plucker(c, *ijk) for ijk in combinations(range(1, 7), 3)}
    t = tuple(D[p] * D[q] for p, q in T_MINORS)
    r = (D[1, 2, 3] * D[1, 4, 5] * D[2, 4, 6] * D[3, 5, 6]
         - D[1, 2, 4] * D[1, 3, 5] * D[2, 3, 6] * D[4, 5, 6])
    return DOCoordinates(t, r)


def closed_form_t(a, b, c, d) -> DOCoordinates:
    """t and R of the normal-form configuration written directly in the moduli."""
    t = (a * (d - 1), b - a, d - c, c * (b - 1), b * (c - 1),
         d * (a - 1), d - b, c - a, a * d - b * c, a * d - b * c - a + b + c - d)
    r = -a * b * c + a * b * d + a * c * d - b * c * d - a * d + b * c
    return DOCoordinates(t, r)


def r_squared_identity(t):
    """((Σ t²)² − 4 Σ t⁴) / 12."""
    s2 = sum(v ** 2 for v in t)
    s4 = sum(v ** 4 for v in t)
    return (s2 ** 2 - 4 * s4) * Rational(1, 12)


def relation_values(t) -> list:
    return [sum(k * v for k, v in zip(row, t)) for row in RELATIONS]


def verify_relations(d: DOCoordinates) -> list:
    """Fifteen linear relations plus the R² identity, one Check each."""
    out = []
    for n, val in enumerate(relation_values(d.t), 1):
        ok = field.is_zero(val)
        out.append(check(f'relation-{n}', _relation_text(RELATIONS[n - 1]), ok,
                         **({} if ok else {'value': val})))
    rhs = r_squared_identity(d.t)
    ok = field.is_zero(d.r ** 2 - rhs)
    out.append(check('r-squared', 'R² = ((Σt²)² − 4Σt⁴)/12', ok,
                     **({} if ok else {'lhs': d.r ** 2, 'rhs': rhs})))
    return out


def _relation_text(row) -> str:
    terms = []
    for k, v in enumerate(row, 1):
        if v:
            terms.append(f"{'+' if v > 0 else '−'} t{k}")
    text = ' '.join(terms).lstrip('+ ')
    return f'{text} = 0'


# ── Strata ────────────────────────────────────────────────────────────────────

def lines_equal(p: Line, q: Line) -> bool:
    """Projective equality: the cross product of the coefficient triples vanishes."""
    cross = (p.b * q.c - p.c * q.b, p.c * q.a - p.a * q.c, p.a * q.b - p.b * q.a)
    return all(field.is_zero(v) for v in cross)


def has_double_line(c: Configuration) -> bool:
    return any(lines_equal(p, q) for p, q in combinations(c.lines, 2))


def classify_coordinates(d: DOCoordinates, double_line=False) -> Stratum:
    vanishing = tuple(k for k, v in enumerate(d.t, 1) if field.is_zero(v))
    r0 = field.is_zero(d.r)
    z = len(vanishing)
    if z == 0:
        case = '1' if r0 else '0'
    elif z <= 3 and r0:
        case = '5'
    elif z <= 3:
        case = str(z + 1)
    elif z == 4 and r0:
        case = '6b' if double_line else '6a'
    else:
        case = 'other'
    return Stratum(case, STRATUM_NAMES[case], vanishing, r0)


def classify(c: Configuration) -> Stratum:
    stratum = classify_coordinates(do_coordinates(c), has_double_line(c))
    logging.debug('stratum %s, vanishing t %s', stratum.case, stratum.vanishing)
    return stratum


def discriminant_components(d: DOCoordinates) -> list:
    """Indices j whose three equalities t_i = ±t_k all hold."""
    return [j for j, rows in COMPONENTS.items()
            if all(field.is_zero(d.t[i - 1] - s * d.t[k - 1]) for i, k, s in rows)]


# ── Group actions ─────────────────────────────────────────────────────────────

def permute(c: Configuration, sigma) -> Configuration:
    """New line i is old line sigma[i-1] (sigma lists the images of 1..6)."""
    sigma = tuple(sigma)
    if sorted(sigma) != [1, 2, 3, 4, 5, 6]:
        raise PreconditionError('permutation', f'{sigma} is not a permutation of 1..6')
    return Configuration(tuple(c.lines[s - 1] for s in sigma))


def associate(d: DOCoordinates) -> DOCoordinates:
    return DOCoordinates(d.t, -d.r)


def rescale_line(c: Configuration, i, k) -> Configuration:
    if field.is_zero(k):
        raise PreconditionError('nonzero', 'line rescaling by zero')
    lines = list(c.lines)
    lines[i - 1] = Line(*(k * v for v in lines[i - 1]))
    return Configuration(tuple(lines))


def gl3_action(c: Configuration, m) -> Configuration:
    """Left multiplication of the coefficient matrix by an invertible 3×3 matrix."""
    if field.is_zero(linalg.det(m)):
        raise PreconditionError('invertible', 'GL3 action needs det ≠ 0')
    return Configuration(tuple(Line(*linalg.mat_vec(m, list(ln))) for ln in c.lines))


def to_moduli(c: Configuration) -> tuple:
    """(a, b, c, d) of the normal form reached by GL3 and line rescalings."""
    frame = [[c.lines[j][r] for j in range(3)] for r in range(3)]
    if field.is_zero(linalg.det(frame)):
        raise PreconditionError('frame', 'lines 1, 2, 3 are concurrent')
    m = linalg.inverse3(frame)
    w4 = linalg.mat_vec(m, list(c.lines[3]))
    if any(field.is_zero(v) for v in w4):
        raise PreconditionError('frame', 'line 4 passes through a vertex of the frame triangle')
    scaled = []
    for ln in c.lines[4:]:
        w = linalg.mat_vec(m, list(ln))
        w = [w[r] / w4[r] for r in range(3)]
        if field.is_zero(w[0]):
            raise PreconditionError('frame', 'line 5 or 6 has no z1 term in normal form')
        scaled.append([Rational(v / w[0]) for v in w])
    (_, a, b), (_, cc, d) = scaled
    return a, b, cc, d


# ── Tangency to the conic z3² = 4·z1·z2 ───────────────────────────────────────

def _conic_form(p, q):
    """Polarisation of z3² − 4·z1·z2, so that the form of (p, p) is twice its value."""
    return 2 * p[2] * q[2] - 4 * (p[0] * q[1] + p[1] * q[0])


def _conic_value(p):
    return p[2] ** 2 - 4 * p[0] * p[1]


def tangent_to_conic(line: Line) -> bool:
    """True iff the conic meets the line in a double point."""
    a, b, c = line
    candidates = [(b, -a, 0), (c, 0, -a), (0, c, -b)]
    basis = []
    for v in candidates:
        if all(field.is_zero(x) for x in v):
            continue
        if basis and all(field.is_zero(x) for x in _cross(basis[0], v)):
            continue
        basis.append(v)
        if len(basis) == 2:
            break
    p, q = basis
    return field.is_zero(_conic_form(p, q) ** 2 - 4 * _conic_value(p) * _conic_value(q))


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])
