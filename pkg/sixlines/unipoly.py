"""
unipoly.py – Univariate polynomial helpers on top of sympy.Poly.

Coefficient lists are lowest degree first, the order used in reports.
Polynomials live over QQ or QQ<√D>; sympy unifies the two on arithmetic.
"""
import math
import logging

from sympy import Dummy, Poly, Symbol, expand
from sympy.polys.subresultants_qq_zz import sylvester

import field
from errors import PreconditionError

T = Symbol('t')


# ── Construction ──────────────────────────────────────────────────────────────

def make_poly(coeffs, gen=T, domain=None) -> Poly:
    """Poly from lowest-first coefficients; the domain is inferred from the scalars."""
    coeffs = list(coeffs)
    if domain is None:
        domain = field.domain_for(coeffs)
    while coeffs and field.is_zero(coeffs[-1]):
        coeffs.pop()
    if not coeffs:
        return Poly(0, gen, domain=domain)
    return Poly.from_list(list(reversed(coeffs)), gen, domain=domain)


def coeffs_low(p: Poly) -> list:
    """Lowest-first sympy coefficients; [] for the zero polynomial."""
    if p.is_zero:
        return []
    return list(reversed(p.all_coeffs()))


def degree(p: Poly) -> int:
    """Degree with deg(0) = -1."""
    return -1 if p.is_zero else p.degree()


# ── Structural algorithms ─────────────────────────────────────────────────────

def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    g = p.gcd(q)
    return g if g.is_zero else g.monic()


def squarefree_decompose(p: Poly):
    """[(factor, multiplicity)] with monic, squarefree, pairwise coprime factors.

    Multiplicities are strictly increasing and p = lc(p) · Π factor**m.
    """
    if p.is_zero:
        raise PreconditionError('nonzero', 'squarefree decomposition of the zero polynomial')
    _, factors = p.sqf_list()
    out = [(f.monic(), k) for f, k in factors if f.degree() > 0]
    return sorted(out, key=lambda fk: fk[1])


def squarefree_part(p: Poly) -> Poly:
    out = Poly(1, p.gen, domain=p.domain)
    for f, _ in squarefree_decompose(p):
        out *= f
    return out


def gcd_free_basis(inputs) -> list:
    """Pairwise coprime monic polynomials multiplicatively spanning every input.

    Inputs of degree 0 contribute nothing.  Splitting is by repeated pairwise
    gcds, so no factorisation over the coefficient field is needed.
    """
    basis = [q.monic() for q in inputs if not q.is_zero and q.degree() > 0]
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                g = poly_gcd(basis[i], basis[j])
                if g.degree() == 0:
                    continue
                a, b = basis[i].quo(g), basis[j].quo(g)
                rest = [basis[k] for k in range(len(basis)) if k not in (i, j)]
                basis = rest + [q.monic() for q in (g, a, b) if q.degree() > 0]
                changed = True
                break
            if changed:
                break
    basis = _dedupe(basis)
    logging.debug('gcd-free basis of %d inputs: %d places', len(inputs), len(basis))
    return sorted(basis, key=lambda q: (q.degree(), str(q.as_expr())))


def _dedupe(polys):
    out = []
    for q in polys:
        if not any(q == r for r in out):
            out.append(q)
    return out


def order_at(p: Poly, place: Poly):
    """Multiplicity of the place polynomial in p; math.inf for p = 0."""
    if p.is_zero:
        return math.inf
    n = 0
    while True:
        q, r = p.div(place)
        if not r.is_zero:
            return n
        p, n = q, n + 1


def resultant(p: Poly, q: Poly):
    return p.resultant(q)


def discriminant(p: Poly):
    """Disc(p) = (−1)^{n(n−1)/2} Res(p, p′) / lc(p); rejected below degree 1."""
    if degree(p) < 1:
        raise PreconditionError('degree', 'discriminant needs degree ≥ 1')
    return p.discriminant()


def sylvester_resultant(p: Poly, q: Poly):
    """Determinant of the Sylvester matrix; cross-check for small degrees."""
    x = p.gen
    return sylvester(p.as_expr(), q.as_expr().subs(q.gen, x), x, method=1).det()


def reciprocal_homogenize(p: Poly, n: int) -> Poly:
    """u**n · p(1/u) in the same generator; order at 0 of the result is n − deg p."""
    if degree(p) > n:
        raise PreconditionError('degree', f'degree {degree(p)} exceeds bound {n}')
    if p.is_zero:
        return p
    cs = p.rep.to_list()[::-1]
    cs = cs + [p.domain.zero] * (n + 1 - len(cs))
    # read the padded low-first list highest-first
    return Poly.from_list(cs, p.gen, domain=p.domain)


def evaluate(p: Poly, value):
    """p(value) by Horner, kept expanded so quadratic-field values stay in shape."""
    out = 0
    for c in p.all_coeffs():
        out = expand(out * value + c)
    return out


def unify_domains(*polys):
    dom = polys[0].domain
    for p in polys[1:]:
        dom = dom.unify(p.domain)
    return dom


def is_square_poly(p: Poly) -> bool:
    """Whether p is a square in K[t], K the coefficient field of p."""
    if p.is_zero:
        return True
    lc, factors = p.sqf_list()
    if any(k % 2 for _, k in factors):
        return False
    z = Dummy('z')
    _, roots = Poly(z ** 2 - lc, z, domain=p.domain).factor_list()
    return any(q.degree() == 1 for q, _ in roots)
