"""
linalg.py – Small exact determinants and inverses.
"""
from sympy import Matrix, Rational


def det(rows):
    """Fraction-free Bareiss determinant of a square matrix of scalars."""
    return Matrix(rows).det(method='bareiss')


def det3(rows):
    """Cofactor expansion for 3×3 matrices over any commutative ring (ring elements welcome)."""
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def inverse3(rows):
    """Inverse of an invertible 3×3 rational matrix, as nested lists of Rationals."""
    m = Matrix(rows)
    if m.det() == 0:
        raise ZeroDivisionError('singular 3×3 matrix')
    inv = m.inv()
    return [[Rational(inv[r, c]) for c in range(3)] for r in range(3)]


def mat_vec(rows, v):
    return [sum(r[k] * v[k] for k in range(len(v))) for r in rows]


def columns(rows):
    return [list(col) for col in zip(*rows)]
