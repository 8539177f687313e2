"""Seeded constraint search: resample-violated loop plus exhaustive oracle.

Encoders occasionally need a joint assignment of a few discrete variables
(random shifts, representative picks) subject to sparse local constraints
where a uniformly random assignment violates each constraint with small
probability.  :func:`resample_search` runs the classic loop -- draw an
assignment, repeatedly redraw the scope of a violated constraint -- under a
deterministic seed and a resample budget.  :func:`exhaustive_search` tries
every assignment in lexicographic order and doubles as the test oracle for
small instances.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

from .errors import InvalidParams, SearchExhausted

EXHAUSTIVE_LIMIT = 12


@dataclass(frozen=True)
class Variable:
    name: Hashable
    domain: Tuple[Hashable, ...]

    def __post_init__(self):
        if not self.domain:
            raise InvalidParams(f"variable {self.name!r} has an empty domain")


@dataclass(frozen=True)
class Constraint:
    name: str
    scope: Tuple[Hashable, ...]
    ok: Callable[[Dict[Hashable, Hashable]], bool]


def violated(constraints: Sequence[Constraint],
             assignment: Dict[Hashable, Hashable]) -> List[Constraint]:
    return [c for c in constraints if not c.ok(assignment)]


def _rng(seed: int, tag: str) -> random.Random:
    return random.Random(f"{seed}:{tag}")


def resample_search(variables: Sequence[Variable],
                    constraints: Sequence[Constraint],
                    seed: int,
                    tag: str = "resample",
                    budget: int = 1000,
                    ) -> Tuple[Dict[Hashable, Hashable], int]:
    """Find a satisfying assignment by resampling violated constraints.

    At most ``budget`` resampling steps are attempted; exceeding the budget
    raises :class:`SearchExhausted`.  Returns the assignment and the number
    of resampling steps used.
    """
    if not variables:
        return {}, 0
    names = [v.name for v in variables]
    if len(set(names)) != len(names):
        raise InvalidParams("duplicate variable names")
    by_name = {v.name: v for v in variables}
    for c in constraints:
        for x in c.scope:
            if x not in by_name:
                raise InvalidParams(f"constraint {c.name} mentions unknown variable {x!r}")
    rng = _rng(seed, tag)
    assignment = {v.name: rng.choice(v.domain) for v in variables}
    steps = 0
    while True:
        bad = next((c for c in constraints if not c.ok(assignment)), None)
        if bad is None:
            return assignment, steps
        if steps >= budget:
            raise SearchExhausted(
                f"{tag}: budget {budget} exhausted; still violated: {bad.name}")
        for x in bad.scope:
            assignment[x] = rng.choice(by_name[x].domain)
        steps += 1


def exhaustive_search(variables: Sequence[Variable],
                      constraints: Sequence[Constraint],
                      ) -> Dict[Hashable, Hashable]:
    """First satisfying assignment in lexicographic domain order."""
    if len(variables) > EXHAUSTIVE_LIMIT:
        raise InvalidParams(
            f"exhaustive search capped at {EXHAUSTIVE_LIMIT} variables, got {len(variables)}")
    names = [v.name for v in variables]
    for values in itertools.product(*(v.domain for v in variables)):
        assignment = dict(zip(names, values))
        if all(c.ok(assignment) for c in constraints):
            return assignment
    raise SearchExhausted("no satisfying assignment exists")


def solve(variables: Sequence[Variable],
          constraints: Sequence[Constraint],
          seed: int,
          tag: str = "solve",
          budget: int = 1000,
          ) -> Dict[Hashable, Hashable]:
    """Resample with the seeded loop; small instances fall back to the
    exhaustive oracle when the budget runs out."""
    try:
        assignment, _ = resample_search(variables, constraints, seed,
                                        tag=tag, budget=budget)
        return assignment
    except SearchExhausted:
        if len(variables) <= EXHAUSTIVE_LIMIT:
            return exhaustive_search(variables, constraints)
        raise
