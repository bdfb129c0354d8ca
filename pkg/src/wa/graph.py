"""Strongly connected components of the support graph."""

from dataclasses import dataclass
from math import lcm

from src.wa.automaton import WeightedAutomaton


@dataclass(frozen=True, slots=True)
class Component:
    states: tuple[int, ...]
    edge_count: int  # edges with both ends inside

    @property
    def has_cycle(self) -> bool:
        return self.edge_count > 0

    @property
    def is_simple_cycle(self) -> bool:
        return self.edge_count == len(self.states)

    @property
    def branches(self) -> bool:
        """Some state lies on two distinct cycles."""
        return self.edge_count > len(self.states)


def tarjan(successors: list[list[int]]) -> list[list[int]]:
    """SCCs in reverse topological order (sinks first); iterative."""
    n = len(successors)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    components: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            for j in range(i, len(successors[v])):
                w = successors[v][j]
                if index[w] == -1:
                    work.append((v, j + 1))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                component = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    component.append(w)
                    if w == v:
                        break
                components.append(sorted(component))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return components


class SupportGraph:
    def __init__(self, a: WeightedAutomaton):
        self.automaton = a
        self.successors = [a.successors(p) for p in range(a.n_states)]
        self.components: list[Component] = []
        self.component_of = [0] * a.n_states
        for states in tarjan(self.successors):
            cid = len(self.components)
            members = set(states)
            inner = sum(1 for p in states for q in self.successors[p] if q in members)
            self.components.append(Component(tuple(states), inner))
            for q in states:
                self.component_of[q] = cid

    def out_degree(self, p: int) -> int:
        return len(self.successors[p])

    def inner_out_degree(self, p: int) -> int:
        cid = self.component_of[p]
        return sum(1 for q in self.successors[p] if self.component_of[q] == cid)

    def cycle(self, start: int) -> list[int]:
        """States of the simple cycle through `start`, in traversal order."""
        cid = self.component_of[start]
        order = [start]
        p = start
        while True:
            p = next(q for q in self.successors[p] if self.component_of[q] == cid)
            if p == start:
                return order
            order.append(p)

    def cycle_lengths(self) -> list[int]:
        return [len(c.states) for c in self.components if c.has_cycle]

    def period(self) -> int:
        return lcm(*self.cycle_lengths()) if self.cycle_lengths() else 1

    def max_cycles_on_path(self) -> int:
        """Largest number of cyclic components met on an initial → final path."""
        a = self.automaton
        best: dict[int, int] = {}
        # tarjan emits sinks first, so walk components in reverse for a topological sweep
        reach = [-1] * len(self.components)
        for q in a.initial_states:
            c = self.component_of[q]
            reach[c] = max(reach[c], int(self.components[c].has_cycle))
        for cid in reversed(range(len(self.components))):
            if reach[cid] < 0:
                continue
            for p in self.components[cid].states:
                if a.final[p] != 0:
                    best[cid] = reach[cid]
                for q in self.successors[p]:
                    d = self.component_of[q]
                    if d != cid:
                        reach[d] = max(reach[d], reach[cid] + int(self.components[d].has_cycle))
        return max(best.values(), default=0)
