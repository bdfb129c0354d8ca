"""Seeded random inputs for the property tests."""

import random
from fractions import Fraction

from src.cra.machine import Cra
from src.cra.regexpr import Add, Const, Mul, RegisterExpr, Var
from src.ratmath.binomial import BinomialCertificate, BinomialFactor
from src.ratmath.polynomial import Polynomial, poly_gcd
from src.seqexpr.ast import Arith, Fin, Geo, Hadamard, SeqExpr, Shift, Shuffle, Sum
from src.wa.automaton import WeightedAutomaton

LAMBDAS = [Fraction(-2), Fraction(-1), Fraction(1, 2), Fraction(2), Fraction(3)]


def rational(rng: random.Random, bound: int = 5) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def nonzero_rational(rng: random.Random, bound: int = 5) -> Fraction:
    while True:
        value = rational(rng, bound)
        if value != 0:
            return value


def polyrat_expr(rng: random.Random, depth: int = 4) -> SeqExpr:
    if depth == 0 or rng.random() < 0.3:
        match rng.randrange(3):
            case 0:
                return Arith(rational(rng), rational(rng))
            case 1:
                return Geo(rational(rng), rational(rng))
            case _:
                return Fin(tuple(rational(rng) for _ in range(rng.randint(1, 3))))
    match rng.randrange(4):
        case 0:
            return Sum(polyrat_expr(rng, depth - 1), polyrat_expr(rng, depth - 1))
        case 1:
            return Hadamard(polyrat_expr(rng, depth - 1), polyrat_expr(rng, depth - 1))
        case 2:
            return Shift(rational(rng), polyrat_expr(rng, depth - 1))
        case _:
            return Shuffle(tuple(polyrat_expr(rng, depth - 1) for _ in range(rng.randint(2, 3))))


def polyrat_exprs(seed: int, count: int, depth: int = 4) -> list[SeqExpr]:
    rng = random.Random(seed)
    return [polyrat_expr(rng, depth) for _ in range(count)]


def det_expr(rng: random.Random, lam: Fraction) -> SeqExpr:
    """Shifted geometric atoms of ratio lam, shuffled once and shifted again."""

    def shifted_geo() -> SeqExpr:
        e: SeqExpr = Geo(rational(rng), lam)
        for _ in range(rng.randint(0, 2)):
            e = Shift(rational(rng), e)
        return e

    body = Shuffle(tuple(shifted_geo() for _ in range(rng.randint(2, 4))))
    for _ in range(rng.randint(0, 2)):
        body = Shift(rational(rng), body)
    return body


def automaton(rng: random.Random, max_states: int = 5, density: float = 0.35) -> WeightedAutomaton:
    n = rng.randint(1, max_states)
    transitions = [(p, q, nonzero_rational(rng)) for p in range(n) for q in range(n) if rng.random() < density]
    initial = [(q, nonzero_rational(rng)) for q in range(n) if rng.random() < 0.5] or [(0, 1)]
    final = [(q, nonzero_rational(rng)) for q in range(n) if rng.random() < 0.5] or [(n - 1, 1)]
    return WeightedAutomaton.build(n, transitions, initial, final)


def copyless_substitution(rng: random.Random, registers: tuple[str, ...]) -> dict[str, RegisterExpr]:
    """Every register is read by at most one image, at most once."""
    pool = list(registers)
    rng.shuffle(pool)
    out: dict[str, RegisterExpr] = {}
    for x in registers:
        image: RegisterExpr = Const(rational(rng))
        for _ in range(rng.randint(0, min(2, len(pool)))):
            term: RegisterExpr = Var(pool.pop())
            if rng.random() < 0.5:
                term = Mul(Const(nonzero_rational(rng)), term)
            image = Add(image, term) if rng.random() < 0.7 else Mul(image, term)
        out[x] = image
    return out


def copyless_cycle(rng: random.Random, registers: tuple[str, ...] = ("x", "y", "z")) -> Cra:
    """A cycle of 1 to 3 states, each with its own copyless update; outputs the first register."""
    n = rng.randint(1, 3)
    return Cra(
        registers=registers,
        n_states=n,
        delta=tuple(((q + 1) % n, copyless_substitution(rng, registers)) for q in range(n)),
        nu0={x: rational(rng) for x in registers},
        mu={q: Var(registers[0]) for q in range(n)},
    )


def coprime_certificate(rng: random.Random, max_factors: int = 3, max_degree: int = 10) -> BinomialCertificate:
    """Product of at most `max_factors` pairwise coprime binomial powers of total degree <= max_degree."""
    factors: list[BinomialFactor] = []
    degree = 0
    for _ in range(rng.randint(1, max_factors)):
        lam, ell, k = rng.choice(LAMBDAS), rng.randint(1, 3), rng.randint(1, 3)
        if degree + ell * k > max_degree:
            continue
        candidate = BinomialFactor(lam, ell, k)
        if any(poly_gcd(candidate.base, f.base).degree >= 1 for f in factors):
            continue
        factors.append(candidate)
        degree += ell * k
    if not factors:
        factors.append(BinomialFactor(Fraction(2), 1, 1))
    return BinomialCertificate(tuple(factors), Polynomial.one())


def polynomial(rng: random.Random, degree: int) -> Polynomial:
    return Polynomial(tuple(rational(rng) for _ in range(degree + 1)))
