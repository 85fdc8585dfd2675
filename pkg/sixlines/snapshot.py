"""
snapshot.py – JSON-ready views of sixlines records for clients (CLI, tests).

Pure functions; no computation beyond formatting.  Rationals become "p/q"
strings, quadratic-field scalars {"base", "coeff", "D"}, polynomials
lowest-first coefficient arrays and the place at infinity "inf".
"""

from __future__ import annotations

import math

from sympy import Basic, Poly
from sympy.polys.rings import PolyElement

import field
import kodaira
import unipoly
from constants import SCHEMA


def scalar_json(v):
    if v is None or isinstance(v, (bool, str)):
        return v
    if isinstance(v, float) and math.isinf(v):
        return 'inf'
    if isinstance(v, int):
        return str(v)
    if isinstance(v, PolyElement):
        return str(v.as_expr())
    if isinstance(v, Poly):
        return poly_json(v)
    if isinstance(v, (list, tuple)):
        return [scalar_json(x) for x in v]
    if isinstance(v, dict):
        return {str(k): scalar_json(x) for k, x in v.items()}
    if isinstance(v, Basic):
        base, coeff, radicand = field.parts(v)
        if radicand is None:
            return str(base)
        return {'base': str(base), 'coeff': str(coeff), 'D': radicand}
    return str(v)


def poly_json(p: Poly) -> list:
    return [scalar_json(c) for c in unipoly.coeffs_low(p)]


def check_dict(c) -> dict:
    out = {'check': c.name, 'anchor': c.anchor, 'status': c.status}
    for k, v in c.detail.items():
        out[k] = scalar_json(v)
    return out


def checks_summary(entries) -> dict:
    counts = {'pass': 0, 'fail': 0, 'error': 0}
    for c in entries:
        counts[c.status] += 1
    return counts


# ── Configurations and invariants ─────────────────────────────────────────────

def configuration_dict(c) -> dict:
    out = {'lines': [scalar_json(list(ln)) for ln in c.lines]}
    if c.origin:
        out[c.origin[0]] = scalar_json(list(c.origin[1]))
    return out


def stratum_dict(s) -> dict:
    return {
        'case':      s.case,
        'name':      s.name,
        'vanishing': list(s.vanishing),
        'r_is_zero': s.r_is_zero,
    }


def flags_dict(f) -> dict:
    return {
        'valid':       f.valid,
        'tangent':     f.tangent,
        'concurrent':  f.concurrent,
        'cases_3_4':   f.cases_3_4,
        'case_5':      f.case_5,
        'disc_s_zero': f.disc_s_zero,
        'res_ab_zero': f.res_ab_zero,
        's_repeats':   f.s_repeats,
    }


def j_dict(J) -> dict:
    return {'J2': scalar_json(J.j2), 'J3': scalar_json(J.j3), 'J4': scalar_json(J.j4),
            'J5': scalar_json(J.j5), 'J6': scalar_json(J.j6)}


def j_report_dict(J, sextic, derived, flags) -> dict:
    """J-point, Satake sextic pieces, derived quantities and stratum flags."""
    return {
        'J':       j_dict(J),
        'sextic':  {'B': poly_json(sextic.B), 'A': poly_json(sextic.A), 'S': poly_json(sextic.S)},
        'derived': {'disc_a': scalar_json(derived.disc_a),
                    'res_ab': scalar_json(derived.res_ab),
                    'disc_s': scalar_json(derived.disc_s)},
        'flags':   flags_dict(flags),
    }


def invariants_dict(record) -> dict:
    """The whole t → x → J pipeline of one configuration."""
    d = record.coordinates
    out = {
        't':       scalar_json(list(d.t)),
        'R':       scalar_json(d.r),
        'satake':  scalar_json(list(record.satake.x)),
        'stratum': stratum_dict(record.stratum),
    }
    out.update(j_report_dict(record.J, record.sextic, record.derived, record.flags))
    return out


# ── Fibrations ────────────────────────────────────────────────────────────────

def fiber_dict(fb) -> dict:
    place = fb.place if fb.place == kodaira.INF else poly_json(fb.place)
    return {
        'type':   fb.kind,
        'place':  place,
        'count':  fb.count,
        'orders': [scalar_json(o) for o in fb.orders],
    }


def model_dict(m) -> dict:
    f, g = m.short_form()
    return {
        'label':    m.label,
        'variable': str(m.gen),
        'a2':       poly_json(m.a2),
        'a4':       poly_json(m.a4),
        'a6':       poly_json(m.a6),
        'f':        poly_json(f),
        'g':        poly_json(g),
    }


def fiber_report_dict(report) -> dict:
    ms = kodaira.fiber_multiset(report.fibers)
    return {
        'fibers':            [fiber_dict(fb) for fb in report.fibers],
        'pattern':           kodaira.format_multiset(ms),
        'euler_sum':         report.euler_sum,
        'two_torsion_order': report.two_torsion_order,
    }


# ── Quartic, isogeny, genus two ───────────────────────────────────────────────

def params_dict(p) -> dict:
    return {
        'alpha':    scalar_json(p.alpha),
        'beta':     scalar_json(p.beta),
        'gamma':    scalar_json(p.gamma),
        'delta':    scalar_json(p.delta),
        'epsilon':  scalar_json(p.epsilon),
        'zeta':     scalar_json(p.zeta),
        'radicand': p.radicand(),
    }


def weighted_dict(w) -> dict:
    return {'coords': scalar_json(list(w.coords)), 'weights': list(w.weights)}


def igusa_dict(I) -> dict:
    return {'I2': scalar_json(I.i2), 'I4': scalar_json(I.i4),
            'I6': scalar_json(I.i6), 'I10': scalar_json(I.i10)}


def report(command, echo, results) -> dict:
    """The envelope every command writes."""
    return {'schema': SCHEMA, 'command': command, 'input': echo, 'results': results}
