"""Small 2-SAT engine: implication graph plus strongly connected components.

Literals are (variable, polarity) pairs; clauses have one or two
literals.  The solver builds the usual implication graph, runs an
iterative Tarjan SCC pass and reads an assignment off the component
order.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class TwoSatInstance:
    num_vars: int
    clauses: list = field(default_factory=list)

    def add_clause(self, *literals) -> None:
        if not 1 <= len(literals) <= 2:
            raise ValueError("clauses carry one or two literals")
        for var, pol in literals:
            if not 0 <= var < self.num_vars:
                raise ValueError(f"variable {var} out of range")
            if not isinstance(pol, bool):
                raise ValueError("polarity must be a bool")
        self.clauses.append(tuple(literals))


def _tarjan_scc(adj) -> list:
    """Component id per node, numbered in completion order (sinks first)."""
    n = len(adj)
    index = [-1] * n
    low = [0] * n
    comp = [-1] * n
    on_stack = [False] * n
    stack = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, next_i = work[-1]
            if next_i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            descended = False
            edges = adj[v]
            for i in range(next_i, len(edges)):
                w = edges[i]
                if index[w] == -1:
                    work[-1] = (v, i + 1)
                    work.append((w, 0))
                    descended = True
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if descended:
                continue
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
    return comp


def solve_2sat(inst: TwoSatInstance):
    """Satisfying assignment as a list of bools, or None if unsatisfiable."""
    n = inst.num_vars
    adj = [[] for _ in range(2 * n)]

    def node(var: int, pol: bool) -> int:
        return 2 * var + (0 if pol else 1)

    for clause in inst.clauses:
        if len(clause) == 1:
            (lit,) = clause
            a = node(*lit)
            adj[a ^ 1].append(a)
        else:
            l1, l2 = clause
            a, b = node(*l1), node(*l2)
            adj[a ^ 1].append(b)
            adj[b ^ 1].append(a)
    comp = _tarjan_scc(adj)
    assignment = []
    for v in range(n):
        if comp[2 * v] == comp[2 * v + 1]:
            return None
        # completion order puts implied-last components first; take the
        # literal whose component is closer to the sinks
        assignment.append(comp[2 * v] < comp[2 * v + 1])
    return assignment
