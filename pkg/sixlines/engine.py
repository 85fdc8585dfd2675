"""
engine.py – Session boundary between the sixlines library and its clients.

A Request names exactly one configuration source (lines, moduli, rosenhain
or params) plus options.  The Session resolves whatever a command needs from
that source: the configuration, its J-point, the moduli (a, b, c, d) and the
quartic parameters, each computed once and only on demand.

Parsing is strict: unknown keys, two sources, or malformed rationals raise
InputError; a source that cannot drive the requested computation raises
PreconditionError('source').
"""

from __future__ import annotations

import logging
from functools import cached_property
from typing import Any, NamedTuple

import configuration
import field
import fibration
import genus2
import invariants
import isogeny
import kodaira
import quartic
import verify
from checks import all_passed, check
from constants import J_MODELS, MODEL_LABELS, MODULI_MODELS, PARAM_MODELS, SEED
from errors import InputError, PreconditionError
from snapshot import (check_dict, checks_summary, configuration_dict, fiber_report_dict,
                      flags_dict, igusa_dict, invariants_dict, j_dict, j_report_dict,
                      model_dict, params_dict, stratum_dict, weighted_dict)
from weighted import weighted_equal

SOURCES = {'lines': None, 'moduli': 4, 'rosenhain': 3, 'params': 6}
OPTIONS = ('radicand', 'model', 'seed', 'samples')


class Source(NamedTuple):
    kind:     str
    values:   tuple
    radicand: int = None


class Request(NamedTuple):
    source:  Source        # None when the command runs without input
    model:   str = None
    seed:    int = SEED
    samples: int = None
    echo:    dict = None


# ── Request parsing ───────────────────────────────────────────────────────────

def _scalar(v, radicand):
    """Rational literal, "base:coeff", or {"base", "coeff", "D"}."""
    if isinstance(v, dict):
        if set(v) != {'base', 'coeff', 'D'}:
            raise InputError(f'quadratic scalar needs exactly base, coeff, D: {v!r}')
        if radicand is not None and v['D'] != radicand:
            raise InputError(f'scalar radicand {v["D"]} differs from radicand {radicand}')
        return field.quad(field.parse_rational(v['base']), field.parse_rational(v['coeff']),
                          _int(v['D'], 'D'))
    return field.parse_scalar(v, radicand)


def _int(v, name):
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise InputError(f'{name} must be an integer, got {v!r}')
    try:
        return int(v)
    except ValueError:
        raise InputError(f'{name} must be an integer, got {v!r}') from None


def _source(kind, raw, radicand) -> Source:
    if not isinstance(raw, list):
        raise InputError(f'{kind} must be a list')
    if kind == 'lines':
        if len(raw) != 6 or any(not isinstance(row, list) or len(row) != 3 for row in raw):
            raise InputError('lines must be six rows of three coefficients')
        values = tuple(tuple(field.parse_rational(v) for v in row) for row in raw)
        configuration.from_lines(values)
        return Source(kind, values)
    if len(raw) != SOURCES[kind]:
        raise InputError(f'{kind} needs {SOURCES[kind]} values, got {len(raw)}')
    if kind == 'params':
        return Source(kind, tuple(_scalar(v, radicand) for v in raw), radicand)
    return Source(kind, tuple(field.parse_rational(v) for v in raw))


def parse_request(obj) -> Request:
    """Validate a decoded JSON request object."""
    if obj is None:
        obj = {}
    if not isinstance(obj, dict):
        raise InputError('request must be a JSON object')
    unknown = sorted(set(obj) - set(SOURCES) - set(OPTIONS))
    if unknown:
        raise InputError(f'unknown request fields: {", ".join(unknown)}')
    kinds = [k for k in SOURCES if k in obj]
    if len(kinds) > 1:
        raise InputError(f'exactly one input source allowed, got {", ".join(kinds)}')

    radicand = obj.get('radicand')
    if radicand is not None:
        radicand = _int(radicand, 'radicand')
        if radicand in (0, 1) or field.squarefree_core(radicand) != radicand:
            raise InputError(f'radicand must be a square-free integer ≠ 0, 1: {radicand}')
        if 'params' not in obj:
            raise InputError('radicand only applies to params')
    model = obj.get('model')
    if model is not None and model not in MODEL_LABELS:
        raise InputError(f'unknown model {model!r}; one of {", ".join(MODEL_LABELS)}')

    source = _source(kinds[0], obj[kinds[0]], radicand) if kinds else None
    seed = _int(obj['seed'], 'seed') if obj.get('seed') is not None else SEED
    samples = _int(obj['samples'], 'samples') if obj.get('samples') is not None else None
    if samples is not None and samples < 1:
        raise InputError('samples must be positive')
    return Request(source, model, seed, samples, obj)


# ── Session ───────────────────────────────────────────────────────────────────

class Session:
    """One request plus the records derived from its source, computed lazily."""

    def __init__(self, request: Request):
        self.request = request
        self.source = request.source

    def _require(self, *kinds):
        if self.source is None:
            raise InputError('no input source given')
        if kinds and self.source.kind not in kinds:
            raise PreconditionError('source', f'needs one of {", ".join(kinds)}, '
                                              f'got {self.source.kind}')

    @cached_property
    def configuration(self):
        self._require('lines', 'moduli', 'rosenhain')
        kind, values = self.source.kind, self.source.values
        if kind == 'moduli':
            return configuration.from_moduli(*values)
        if kind == 'rosenhain':
            return configuration.from_rosenhain(*values)
        return configuration.from_lines(values)

    @cached_property
    def record(self):
        return invariants.invariants_from_configuration(self.configuration)

    @cached_property
    def params(self):
        self._require()
        if self.source.kind == 'params':
            return quartic.make_params(self.source.values)
        return quartic.solve_params(self.J)

    @cached_property
    def J(self):
        self._require()
        if self.source.kind == 'params':
            return quartic.moduli_j(self.params)
        return self.record.J

    @cached_property
    def moduli(self):
        self._require('lines', 'moduli', 'rosenhain')
        if self.source.kind == 'moduli':
            return self.source.values
        return configuration.to_moduli(self.configuration)

    @cached_property
    def flags(self):
        if self.source.kind == 'params':
            return invariants.flags_for(self.J)
        return self.record.flags

    def labels(self) -> list[str]:
        """Models this source can drive, or the requested one."""
        if self.request.model:
            return [self.request.model]
        if self.source is not None and self.source.kind == 'params':
            return list(J_MODELS + PARAM_MODELS)
        return list(MODEL_LABELS)

    def model(self, label):
        if label in MODULI_MODELS:
            return fibration.build_model(label, moduli=self.moduli)
        if label in J_MODELS:
            return fibration.build_model(label, j=self.J)
        return fibration.build_model(label, params=self.params)

    # ── Commands ──────────────────────────────────────────────────────────────

    def invariants(self) -> dict[str, Any]:
        """t, R, Satake x, J, sextic, derived quantities, flags and stratum."""
        self._require()
        if self.source.kind != 'params':
            return invariants_dict(self.record)
        J = self.J
        return j_report_dict(J, invariants.satake_sextic(J), invariants.derived_invariants(J),
                             self.flags)

    def classify(self) -> dict[str, Any]:
        self._require()
        out = {'flags': flags_dict(self.flags), 'stratum': None, 'components': []}
        if self.source.kind != 'params':
            out['stratum'] = stratum_dict(self.record.stratum)
            out['components'] = configuration.discriminant_components(self.record.coordinates)
        return out

    def fibration(self, label) -> dict[str, Any]:
        """One model with its fibres, audits and the stratum prediction."""
        model = self.model(label)
        report = kodaira.kodaira_classify(model)
        predicted = fibration.expected_fibers(self.flags, label, fibration.res_fg_flag(model))
        found = kodaira.fiber_multiset(report.fibers)
        out = model_dict(model)
        out.update(fiber_report_dict(report))
        out['closed_discriminant'] = fibration.closed_form_matches(model)
        out['expected'] = kodaira.format_multiset(predicted) if predicted is not None else None
        out['matches_expected'] = None if predicted is None else found == predicted
        logging.debug('%s: %s', label, out['pattern'])
        return out

    def fibrations(self) -> dict[str, Any]:
        self._require()
        return {label: self.fibration(label) for label in self.labels()}

    def isogeny(self, verify=False):
        """Φ̂ push-forward of the source's X-alternate model; the symbolic suite with verify or without a source."""
        checks = isogeny.symbolic_suite() if verify or self.source is None else []
        out = {}
        if self.source is not None:
            p = self.params
            pushed = isogeny.push_forward_model(p)
            direct = fibration.y_alternate(quartic.moduli_j(p))
            same = (pushed.a2 - direct.a2).is_zero and (pushed.a4 - direct.a4).is_zero
            checks.append(check('push-forward', 'Φ̂ carries X-alternate onto Y-alternate', same))
            out['push_forward'] = model_dict(pushed)
        out['checks'] = [check_dict(c) for c in checks]
        return out, all_passed(checks)

    def quartic_params(self, from_config=False):
        """(α..ζ) with their radicand and the moduli match against J.

        With from_config the source is a configuration and the parameters are
        solved from its J-point; otherwise the source is the parameters themselves.
        """
        if from_config:
            self._require('lines', 'moduli', 'rosenhain')
        else:
            self._require('params')
        p = self.params
        match = quartic.moduli_match(p)
        entry = check('moduli-match', '[α : β : γε : γζ + δε : δζ] = [J2 : … : J6]',
                      weighted_equal(match, self.J.point()))
        out = params_dict(p)
        out['polarized'] = p.polarized
        out['moduli'] = weighted_dict(match)
        if from_config:
            out['J'] = j_dict(self.J)
        out['checks'] = [check_dict(entry)]
        return out, all_passed([entry])

    def tangent(self):
        """Configuration, J-point, Igusa point and the restriction identity of a Rosenhain triple."""
        self._require('rosenhain')
        curve = genus2.make_curve(*self.source.values)
        I = genus2.igusa_clebsch(genus2.sextic_roots(curve))
        checks = genus2.restriction_check(curve)
        out = {
            'configuration': configuration_dict(self.configuration),
            'J':             j_dict(self.J),
            'igusa':         igusa_dict(I),
            'restriction':   weighted_dict(genus2.restriction_point(I)),
            'checks':        [check_dict(c) for c in checks],
        }
        return out, all_passed(checks)

    def verify_all(self):
        """Every section of the suite, plus the source's own checks when a source is given."""
        extra = None
        if self.source is not None:
            extra = verify.source_checks(self.source.kind, self.source.values)
        sections = verify.verify_all(self.request.seed, self.request.samples, extra)
        entries = [c for group in sections.values() for c in group]
        out = {
            'seed':     self.request.seed,
            'sections': {name: [check_dict(c) for c in group] for name, group in sections.items()},
            'totals':   checks_summary(entries),
        }
        return out, all_passed(entries)
