"""
checks.py – Named verification results.

Every identity the library can verify is reported as a Check rather than
raised, so one failing identity never hides the others.
"""
import logging
from typing import NamedTuple

from constants import ERROR, FAIL, PASS
from errors import SixLinesError


class Check(NamedTuple):
    name:   str
    anchor: str          # the statement being verified
    status: str          # PASS | FAIL | ERROR
    detail: dict


def check(name, anchor, passed, **detail) -> Check:
    status = PASS if passed else FAIL
    if not passed:
        logging.info('check %s failed: %s', name, detail)
    return Check(name, anchor, status, detail)


def guarded(name, anchor, fn, *args, **kwargs) -> Check:
    """Run fn(*args) -> (passed, detail); library errors become an ERROR entry."""
    try:
        passed, detail = fn(*args, **kwargs)
    except (SixLinesError, ZeroDivisionError) as exc:
        logging.warning('check %s errored: %s', name, exc)
        return Check(name, anchor, ERROR, {'error': str(exc)})
    return check(name, anchor, passed, **detail)


def all_passed(entries) -> bool:
    return all(c.status == PASS for c in entries)
