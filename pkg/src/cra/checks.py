from collections import Counter
from dataclasses import dataclass

from src.cra.machine import Cra
from src.cra.regexpr import Var, is_linear, occurrences, variables
from src.errors import NoNormalFormOrder, NotCopyless


@dataclass(frozen=True, slots=True)
class CopylessCheck:
    ok: bool
    register: str | None = None
    state: int | None = None


@dataclass(frozen=True, slots=True)
class NormalFormCheck:
    order: tuple[str, ...] | None = None
    cycle: tuple[str, ...] | None = None

    @property
    def ok(self) -> bool:
        return self.order is not None


def check_copyless(c: Cra) -> CopylessCheck:
    """Each register is read at most once across all images of each substitution."""
    return _copyless(c, set())


def check_copyless_modulo_constants(c: Cra) -> CopylessCheck:
    """As `check_copyless`, except that registers no state ever updates may be read freely."""
    return _copyless(c, constant_registers(c))


def _copyless(c: Cra, exempt: set[str]) -> CopylessCheck:
    for q in range(c.n_states):
        sigma = c.substitution(q)
        counts = sum((occurrences(e) for x, e in sigma.items() if x not in exempt), start=Counter())
        for x in c.registers:
            if x not in exempt and counts[x] > 1:
                return CopylessCheck(False, x, q)
    return CopylessCheck(True)


def constant_registers(c: Cra) -> set[str]:
    return {x for x in c.registers if all(c.substitution(q)[x] == Var(x) for q in range(c.n_states))}


def check_linear(c: Cra) -> bool:
    images = [e for q in range(c.n_states) for e in c.substitution(q).values()]
    return all(is_linear(e) for e in images + list(c.mu.values()))


def check_normal_form(c: Cra) -> NormalFormCheck:
    """One register order such that every image of x reads only x and registers after x.

    Kahn's algorithm on x → y for y ∈ σ(x), y ≠ x; ties go to declaration order.
    """
    position = {x: i for i, x in enumerate(c.registers)}
    uses: dict[str, set[str]] = {x: set() for x in c.registers}
    for q in range(c.n_states):
        for x, image in c.substitution(q).items():
            uses[x] |= variables(image) - {x}
    indegree = {x: 0 for x in c.registers}
    for x in c.registers:
        for y in uses[x]:
            indegree[y] += 1
    ready = sorted((x for x in c.registers if indegree[x] == 0), key=position.get)
    order: list[str] = []
    while ready:
        x = ready.pop(0)
        order.append(x)
        for y in sorted(uses[x], key=position.get):
            indegree[y] -= 1
            if indegree[y] == 0:
                ready.append(y)
                ready.sort(key=position.get)
    if len(order) == len(c.registers):
        return NormalFormCheck(order=tuple(order))
    return NormalFormCheck(cycle=_find_cycle(uses, set(c.registers) - set(order), position))


def _find_cycle(uses: dict[str, set[str]], remaining: set[str], position) -> tuple[str, ...]:
    """Every register left over by Kahn has a left-over predecessor; walk back until one repeats."""
    users = {y: sorted((x for x in remaining if y in uses[x]), key=position.get) for y in remaining}
    x = min(remaining, key=position.get)
    back = [x]
    seen = {x: 0}
    while True:
        x = users[x][0]
        if x in seen:
            cycle = back[seen[x]:] + [x]
            return tuple(reversed(cycle))
        seen[x] = len(back)
        back.append(x)


def require_copyless(c: Cra, modulo_constants: bool = False) -> None:
    result = check_copyless_modulo_constants(c) if modulo_constants else check_copyless(c)
    if not result.ok:
        raise NotCopyless(result.register, result.state)


def require_normal_form(c: Cra) -> tuple[str, ...]:
    result = check_normal_form(c)
    if not result.ok:
        raise NoNormalFormOrder(result.cycle)
    return result.order
