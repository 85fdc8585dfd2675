"""
invariants.py – Satake coordinates, power sums, J2..J6 and the Satake sextic.

Inputs may be sympy scalars or elements of a polynomial ring; only ring
operations with the scalar on the right are used, so the same formulas
serve numeric reports and symbolic identity checks.
"""
from __future__ import annotations

import logging
from typing import NamedTuple

from sympy import Rational

import configuration
import field
import linalg
import unipoly
from constants import CLOSED_FORMS, J_WEIGHTS
from errors import PreconditionError
from weighted import WeightedPoint, make_point


class SatakeCoordinates(NamedTuple):
    x: tuple


class PowerSums(NamedTuple):
    s2: object
    s3: object
    s4: object
    s5: object
    s6: object


class JInvariants(NamedTuple):
    j2: object
    j3: object
    j4: object
    j5: object
    j6: object

    def point(self) -> WeightedPoint:
        return make_point(self, J_WEIGHTS)


class SatakeSextic(NamedTuple):
    B: object          # t³ − 3·J2·t − 2·J3
    A: object          # J4·t² − J5·t + J6
    S: object          # B² − 4·A


class Derived(NamedTuple):
    disc_a: object
    res_ab: object
    disc_s: object


class StratumFlags(NamedTuple):
    valid:       bool     # (J3, J4, J5) ≠ 0
    tangent:     bool     # J4 = 0
    concurrent:  bool     # Disc(A) = 0
    cases_3_4:   bool     # Disc(A) = Res(A, B) = 0
    case_5:      bool     # J4 = J5 = 0
    disc_s_zero: bool     # Disc(S) = 0
    res_ab_zero: bool     # Res(A, B) = 0
    s_repeats:   int = 0  # deg S minus the degree of its squarefree part


def _third(v):
    return v * Rational(1, 3)


# ── Satake coordinates ────────────────────────────────────────────────────────

def satake_from_t(t) -> SatakeCoordinates:
    t1, t5, t6, t7, t8 = t[0], t[4], t[5], t[6], t[7]
    x = (2 * t1 + 2 * t5 - 3 * t6 - t7 - t8,
         -t1 - t5 - t7 + 2 * t8,
         -t1 + 2 * t5 - t7 - t8,
         -t1 - t5 + 3 * t6 + 2 * t7 + 2 * t8,
         -t1 - t5 + 2 * t7 - t8,
         2 * t1 - t5 - t7 - t8)
    return SatakeCoordinates(x)


def t_from_satake(x) -> tuple:
    """All ten t_i back from the Satake coordinates (each a sum of three x over ±3)."""
    x1, x2, x3, x4, x5, _ = x
    return (_third(-(x2 + x3 + x5)),
            _third(-(x3 + x4 + x5)),
            _third(-(x2 + x3 + x4)),
            _third(-(x2 + x4 + x5)),
            _third(x1 + x3 + x4),
            _third(-(x1 + x2 + x5)),
            _third(x1 + x4 + x5),
            _third(x1 + x2 + x4),
            _third(-(x1 + x2 + x3)),
            _third(-(x1 + x3 + x5)))


# ── Power sums and J ──────────────────────────────────────────────────────────

def power_sums(x) -> PowerSums:
    if not field.is_zero(sum(x)):
        raise PreconditionError('s1', 'Satake coordinates must sum to zero')
    return PowerSums(*(sum(v ** j for v in x) for j in range(2, 7)))


def j_from_power_sums(s: PowerSums) -> JInvariants:
    s2, s3, s4, s5, s6 = s
    return JInvariants(
        s2 * Rational(1, 12),
        s3 * Rational(1, 12),
        (4 * s4 - s2 ** 2) * Rational(1, 64),
        (5 * s2 * s3 - 12 * s5) * Rational(1, 240),
        (3 * s2 ** 3 - 4 * s3 ** 2 - 18 * s2 * s4 + 24 * s6) * Rational(1, 576),
    )


def power_sums_from_j(J: JInvariants) -> PowerSums:
    j2, j3, j4, j5, j6 = J
    return PowerSums(12 * j2,
                     12 * j3,
                     36 * j2 ** 2 + 16 * j4,
                     60 * j2 * j3 - 20 * j5,
                     108 * j2 ** 3 + 144 * j2 * j4 + 24 * j3 ** 2 + 24 * j6)


def j_invariants(x) -> JInvariants:
    return j_from_power_sums(power_sums(x))


def j_invariants_closed_form(a, b, c, d) -> JInvariants:
    """The closed-form J′2..J′6 in the moduli, read from data/closed_forms.json5."""
    out = []
    for name in ('J2', 'J3', 'J4', 'J5', 'J6'):
        entry = CLOSED_FORMS[name]
        total = 0
        for ea, eb, ec, ed, coeff in entry['terms']:
            total = total + coeff * a ** ea * b ** eb * c ** ec * d ** ed
        scale = field.parse_rational(entry['factor']) / field.parse_rational(entry['scale'])
        out.append(total ** entry['power'] * scale)
    return JInvariants(*out)


# ── Satake sextic and derived invariants ──────────────────────────────────────

def satake_sextic(J: JInvariants, gen=unipoly.T) -> SatakeSextic:
    j2, j3, j4, j5, j6 = J
    dom = field.domain_for(J)
    B = unipoly.make_poly([-2 * j3, -3 * j2, 0, 1], gen, dom)
    A = unipoly.make_poly([j6, -j5, j4], gen, dom)
    return SatakeSextic(B, A, B ** 2 - 4 * A)


def formal_resultant_ab(A, B):
    """Res(A, B) with A read as a quadratic even when J4 = 0 (5×5 Sylvester determinant)."""
    a = unipoly.coeffs_low(A) + [0] * (3 - len(unipoly.coeffs_low(A)))
    b = unipoly.coeffs_low(B)
    rows = []
    for shift in range(3):
        rows.append([0] * shift + a[::-1] + [0] * (2 - shift))
    for shift in range(2):
        rows.append([0] * shift + b[::-1] + [0] * (1 - shift))
    return linalg.det(rows)


def derived_invariants(J: JInvariants) -> Derived:
    sextic = satake_sextic(J)
    j2, j3, j4, j5, j6 = J
    disc_a = j5 ** 2 - 4 * j4 * j6
    if unipoly.degree(sextic.A) == 2:
        res_ab = unipoly.resultant(sextic.A, sextic.B)
    else:
        res_ab = formal_resultant_ab(sextic.A, sextic.B)
    disc_s = unipoly.discriminant(sextic.S)
    logging.debug('derived invariants: discA=%s resAB=%s discS=%s', disc_a, res_ab, disc_s)
    return Derived(field.collapse(disc_a), field.collapse(res_ab), field.collapse(disc_s))


def res_ab_closed_form(J: JInvariants):
    j2, j3, j4, j5, j6 = J
    return (9 * j2 ** 2 * j4 ** 2 * j6 + 6 * j2 * j3 * j4 ** 2 * j5 + 4 * j3 ** 2 * j4 ** 3
            + 6 * j2 * j4 * j6 ** 2 - 3 * j2 * j5 ** 2 * j6 + 6 * j3 * j4 * j5 * j6
            - 2 * j3 * j5 ** 3 + j6 ** 3)


def disc_a_product(t):
    """2⁻⁴·3¹⁰·Π t_i."""
    prod = 1
    for v in t:
        prod = prod * v
    return prod * Rational(3 ** 10, 2 ** 4)


def disc_s_product(t):
    """3³⁰ Π_{j≥2}(t1 − tj)² times the six further squared differences."""
    pairs = [(1, j) for j in range(2, 11)]
    pairs += [(2, 3), (3, 4), (4, 5), (5, 6), (2, 4), (4, 6)]
    prod = 1
    for i, j in pairs:
        prod = prod * (t[i - 1] - t[j - 1]) ** 2
    return prod * 3 ** 30


def stratum_from_invariants(J: JInvariants, disc_a, res_ab, disc_s, s_repeats=0) -> StratumFlags:
    z = field.is_zero
    return StratumFlags(
        valid=not (z(J.j3) and z(J.j4) and z(J.j5)),
        tangent=z(J.j4),
        concurrent=z(disc_a),
        cases_3_4=z(disc_a) and z(res_ab),
        case_5=z(J.j4) and z(J.j5),
        disc_s_zero=z(disc_s),
        res_ab_zero=z(res_ab),
        s_repeats=s_repeats,
    )


def flags_for(J: JInvariants) -> StratumFlags:
    d = derived_invariants(J)
    S = satake_sextic(J).S
    repeats = unipoly.degree(S) - unipoly.degree(unipoly.squarefree_part(S))
    return stratum_from_invariants(J, d.disc_a, d.res_ab, d.disc_s, repeats)


# ── Pipeline ──────────────────────────────────────────────────────────────────

class InvariantRecord(NamedTuple):
    coordinates: object      # DOCoordinates
    satake:      SatakeCoordinates
    J:           JInvariants
    sextic:      SatakeSextic
    derived:     Derived
    flags:       StratumFlags
    stratum:     object      # configuration.Stratum


def invariants_from_configuration(c) -> InvariantRecord:
    """Every intermediate record of t → x → J for one configuration."""
    d = configuration.do_coordinates(c)
    x = satake_from_t(d.t)
    J = j_invariants(x.x)
    return InvariantRecord(d, x, J, satake_sextic(J), derived_invariants(J), flags_for(J),
                           configuration.classify(c))
