from fractions import Fraction
from typing import Sequence

Matrix = Sequence[Sequence[Fraction]]


def mat_mul(a: Matrix, b: Matrix) -> list[list[Fraction]]:
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    out = [[Fraction(0)] * p for _ in range(n)]
    for i in range(n):
        row = a[i]
        for k in range(m):
            aik = row[k]
            if aik == 0:
                continue
            bk = b[k]
            for j in range(p):
                if bk[j]:
                    out[i][j] += aik * bk[j]
    return out


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def charpoly(m: Matrix) -> list[Fraction]:
    """Coefficients (lowest degree first) of det(tI - M), via Faddeev–LeVerrier."""
    n = len(m)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = [[Fraction(0)] * n for _ in range(n)]
    c_prev = Fraction(1)
    for k in range(1, n + 1):
        mk = mat_mul(m, mk)
        for i in range(n):
            mk[i][i] += c_prev
        am = mat_mul(m, mk)
        c_prev = -sum((am[i][i] for i in range(n)), Fraction(0)) / k
        coeffs[n - k] = c_prev
    return coeffs
