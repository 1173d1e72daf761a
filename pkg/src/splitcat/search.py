"""Backtracking search over finite assignments, shared by the functor enumerators."""

from __future__ import annotations

from .errors import SizeBudgetExceeded

DEFAULT_BUDGET = 10 ** 6


class Budget:
    """Counts candidate assignments across one enumeration."""

    def __init__(self, limit=DEFAULT_BUDGET, context=""):
        self.limit = limit
        self.used = 0
        self.context = context

    def spend(self, n=1):
        self.used += n
        if self.limit is not None and self.used > self.limit:
            raise SizeBudgetExceeded(self.limit, self.used, self.context)


def solve(domains, constraints, budget: Budget):
    """Yield every assignment satisfying all constraints.

    ``domains[i]`` lists candidate values of variable ``i``; variables are
    assigned in index order.  A constraint is ``(vars, pred)`` and is checked
    as soon as its highest-indexed variable is assigned, with ``pred`` called
    on the tuple of values of ``vars``.
    """
    n = len(domains)
    trigger = [[] for _ in range(n)]
    for vars_, pred in constraints:
        if not vars_:
            if not pred(()):
                return
            continue
        trigger[max(vars_)].append((vars_, pred))
    values = [None] * n

    def rec(i):
        if i == n:
            yield tuple(values)
            return
        for v in domains[i]:
            budget.spend()
            values[i] = v
            if all(pred(tuple(values[j] for j in vs)) for vs, pred in trigger[i]):
                yield from rec(i + 1)
        values[i] = None

    yield from rec(0)
