"""
field.py – Scalars: exact rationals and elements of one quadratic field Q(√D).

A scalar is a sympy expression of the form  base + coeff*sqrt(D)  with
rational base/coeff and square-free D (negative D allowed, sqrt(-3) = √3·I),
or a plain sympy Rational.  Products and powers stay in that shape after
expand(); every helper here keeps it so.
"""
import re
from fractions import Fraction

from sympy import Add, Integer, Rational, QQ, expand, factorint, integer_nthroot, sqrt
from sympy.polys.rings import PolyElement

from errors import InputError, PreconditionError

_RATIONAL_RE = re.compile(r'^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$')


# ── Parsing ───────────────────────────────────────────────────────────────────

def parse_rational(text) -> Rational:
    """Parse "p", "p/q", "-p/q" or an int.  Floats and anything else are rejected."""
    if isinstance(text, bool):
        raise InputError(f'not a rational literal: {text!r}')
    if isinstance(text, int):
        return Integer(text)
    if isinstance(text, Fraction):
        return Rational(text.numerator, text.denominator)
    if not isinstance(text, str):
        raise InputError(f'not a rational literal: {text!r}')
    m = _RATIONAL_RE.match(text)
    if not m:
        raise InputError(f'not a rational literal: {text!r}')
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise InputError(f'zero denominator: {text!r}')
    return Rational(int(num), int(den) if den else 1)


def parse_scalar(text, radicand=None):
    """Rational literal, or "base:coeff" meaning base + coeff·√radicand."""
    if isinstance(text, str) and ':' in text:
        if radicand is None:
            raise InputError(f'{text!r} needs a radicand')
        base, coeff = text.split(':', 1)
        return quad(parse_rational(base), parse_rational(coeff), radicand)
    return parse_rational(text)


# ── Square roots ──────────────────────────────────────────────────────────────

def squarefree_core(n: int) -> int:
    """Square-free part of a nonzero integer, sign kept: 72 → 2, −12 → −3."""
    n = int(n)
    if n == 0:
        raise PreconditionError('nonzero', 'square-free core of 0')
    core = -1 if n < 0 else 1
    for p, e in factorint(abs(n)).items():
        if e % 2:
            core *= p
    return core


def sqrt_rational(q):
    """Return (k, D) with √q = k·√D, k rational and D square-free (D == 1 when q is a square)."""
    q = Rational(q)
    if q == 0:
        return Integer(0), 1
    num, den = int(q.p), int(q.q)
    core = squarefree_core(num * den)
    k, exact = integer_nthroot(num * den // core, 2)
    assert exact
    return Rational(k, den), core


def is_square(q) -> bool:
    """True iff the rational q has a rational square root."""
    q = Rational(q)
    return q == 0 or sqrt_rational(q)[1] == 1


def sqrt_scalar(q):
    """√q as a scalar (rational or in Q(√D))."""
    k, core = sqrt_rational(q)
    if core == 1:
        return k
    return k * sqrt(core)


# ── Quadratic-field scalars ───────────────────────────────────────────────────

def quad(base, coeff, radicand):
    """base + coeff·√radicand; the radicand is reduced to its square-free core."""
    base, coeff = Rational(base), Rational(coeff)
    k, core = sqrt_rational(radicand)
    if core == 1:
        return base + coeff * k
    return expand(base + coeff * k * sqrt(core))


def parts(v):
    """Split a scalar into (base, coeff, D); D is None for rationals."""
    base, coeff, radicand = Integer(0), Integer(0), None
    for term in Add.make_args(expand(v)):
        c, rest = term.as_coeff_Mul()
        if rest == 1:
            base += c
            continue
        r = rest ** 2
        if not r.is_Integer or sqrt(r) != rest:
            raise PreconditionError('quadratic', f'{v} is not in a quadratic field')
        r = int(r)
        if radicand is not None and r != radicand:
            raise PreconditionError('mixed-radicand', f'{v} mixes √{radicand} and √{r}')
        radicand = r
        coeff += c
    if coeff == 0:
        radicand = None
    return Rational(base), Rational(coeff), radicand


def radicand_of(values):
    """The common radicand of a collection of scalars, or None when all are rational."""
    found = None
    for v in values:
        _, _, r = parts(v)
        if r is None:
            continue
        if found is not None and r != found:
            raise PreconditionError('mixed-radicand', f'scalars mix √{found} and √{r}')
        found = r
    return found


def domain_for(values):
    """QQ, or QQ<√D> when some value is irrational."""
    r = radicand_of(values)
    return QQ if r is None else QQ.algebraic_field(sqrt(r))


def conj(v):
    base, coeff, r = parts(v)
    return base if r is None else expand(base - coeff * sqrt(r))


def norm(v):
    return Rational(expand(v * conj(v)))


def inverse(v):
    """1/v inside the field of v."""
    n = norm(v)
    if n == 0:
        raise ZeroDivisionError('inverse of zero scalar')
    return expand(conj(v) / n)


def is_zero(v) -> bool:
    if isinstance(v, PolyElement):
        return not v
    base, coeff, _ = parts(v)
    return base == 0 and coeff == 0


def is_rational(v) -> bool:
    return parts(v)[2] is None


def collapse(v):
    """Return v as a Rational when its irrational part vanishes, else v expanded."""
    base, coeff, r = parts(v)
    return base if r is None else expand(v)


def equal(u, v) -> bool:
    return is_zero(u - v)


# ── Sampling ──────────────────────────────────────────────────────────────────

def random_rational(rng, height, nonzero=False) -> Rational:
    """p/q with |p| ≤ height and 1 ≤ q ≤ height, drawn from rng (a random.Random)."""
    while True:
        v = Rational(rng.randint(-height, height), rng.randint(1, height))
        if not (nonzero and v == 0):
            return v
