from fractions import Fraction

from src.errors import StarUndefined
from src.seqexpr.ast import Arith, Cauchy, Fin, Geo, Hadamard, SeqExpr, Shift, Shuffle, Star, Sum


def evaluate(e: SeqExpr, n: int) -> list[Fraction]:
    """First n terms of the sequence denoted by e."""
    if n < 0:
        raise ValueError("term count must be non-negative")
    if n == 0:
        return []
    match e:
        case Arith(a, b):
            return [a + b * i for i in range(n)]
        case Geo(a, lam):
            out, term = [], Fraction(a)
            for _ in range(n):
                out.append(term)
                term *= lam
            return out
        case Fin(values):
            return [Fraction(values[i]) if i < len(values) else Fraction(0) for i in range(n)]
        case Sum(left, right):
            return [u + v for u, v in zip(evaluate(left, n), evaluate(right, n))]
        case Hadamard(left, right):
            return [u * v for u, v in zip(evaluate(left, n), evaluate(right, n))]
        case Cauchy(left, right):
            u, v = evaluate(left, n), evaluate(right, n)
            return [sum((u[p] * v[i - p] for p in range(i + 1)), Fraction(0)) for i in range(n)]
        case Star(child):
            u = evaluate(child, n)
            if u[0] != 0:
                raise StarUndefined(f"star of a sequence with term 0 = {u[0]}")
            s = [Fraction(1)]
            for i in range(1, n):
                s.append(sum((u[j] * s[i - j] for j in range(1, i + 1)), Fraction(0)))
            return s
        case Shift(a, child):
            return [Fraction(a)] + evaluate(child, n - 1)
        case Shuffle(parts):
            k = len(parts)
            columns = [evaluate(p, -(-(n - j) // k)) for j, p in enumerate(parts)]
            return [columns[i % k][i // k] for i in range(n)]
    raise TypeError(f"not a sequence expression: {e!r}")
