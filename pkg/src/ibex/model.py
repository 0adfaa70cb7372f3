"""Abstract cost-list model and the synthetic budgeted-query oracle.

The search algorithms in this package talk to a problem only through
budgeted queries: "can all nodes of cost at most C be searched within b
expansions?".  This module gives that interaction a domain-free form --
a sorted multiset of costs, the counting function n(C), the critical
cost at which a budget b becomes insufficient, and a synthetic oracle
implementing the three feedback modes (limited / integer / extended).
The synthetic oracle is the ground truth that the randomized bound
suites in :mod:`ibex.bench` measure the algorithms against.

All costs are plain 64-bit floats; +inf is a legal cost and compares
greater than every finite cost.  Values are immutable after
construction and safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Tuple, Union
from bisect import bisect_right

INF = math.inf

HALTED = "halted"
RUNNING = "running"


def check_cost(x: float) -> float:
    """Validate a cost: non-negative, not NaN.  +inf is allowed."""
    x = float(x)
    if math.isnan(x) or x < 0.0:
        raise ValueError(f"not a valid cost: {x!r}")
    return x


@dataclass(frozen=True)
class CostInterval:
    """Closed interval [low, high] bracketing a critical cost."""

    low: float
    high: float

    def __post_init__(self):
        if self.low > self.high:
            raise ValueError(f"bad interval [{self.low}, {self.high}]")

    def intersect(self, other: "CostInterval") -> "CostInterval":
        return CostInterval(max(self.low, other.low), min(self.high, other.high))

    def contains(self, x: float) -> bool:
        return self.low <= x <= self.high

    @property
    def determined(self) -> bool:
        return self.low == self.high


class FeedbackMode(Enum):
    LIMITED = "limited"
    INTEGER = "integer"
    EXTENDED = "extended"


@dataclass(frozen=True)
class Solution:
    """A certified-optimal solution: its cost and (optionally) the path."""

    cost: float
    path: tuple = ()


@dataclass(frozen=True)
class Pruned:
    """Query outcome: no solution yet; `interval` contains the critical cost."""

    interval: CostInterval
    n_used: int


@dataclass(frozen=True)
class SolutionFound:
    solution: Solution
    n_used: int


@dataclass(frozen=True)
class NoSolution:
    """Terminal outcome: the whole space was exhausted without a goal."""

    n_used: int


QueryOutcome = Union[Pruned, SolutionFound, NoSolution]


class ValueList:
    """Sorted multiset of costs >= 1; the backing list of the abstract model.

    Serializes as one decimal cost per line (see :meth:`to_text`) so that
    failing randomized trials can be replayed verbatim.
    """

    __slots__ = ("values",)

    def __init__(self, values: Iterable[float]):
        vs = tuple(check_cost(v) for v in values)
        for a, b in zip(vs, vs[1:]):
            if a > b:
                raise ValueError("values must be non-decreasing")
        if vs and vs[0] < 1.0:
            raise ValueError("all values must be >= 1")
        object.__setattr__(self, "values", vs) if False else None
        self.values = vs

    @classmethod
    def from_values(cls, values: Iterable[float]) -> "ValueList":
        return cls(sorted(float(v) for v in values))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other) -> bool:
        return isinstance(other, ValueList) and self.values == other.values

    def __repr__(self) -> str:
        return f"ValueList({list(self.values)!r})"

    def min(self) -> float:
        return self.values[0]

    def max(self) -> float:
        return self.values[-1]

    def to_text(self) -> str:
        return "".join(f"{v!r}\n" for v in self.values)

    @classmethod
    def from_text(cls, text: str) -> "ValueList":
        return cls([float(line) for line in text.split() if line.strip()])


def count_leq(A: ValueList, C: float) -> int:
    """n(C): how many values of A are <= C, counting multiplicity."""
    if math.isnan(C):
        raise ValueError("NaN cost")
    return bisect_right(A.values, C)


def c_crit(A: ValueList, b: int) -> float:
    """Smallest value in A whose prefix count exceeds budget b; +inf if none.

    The (b+1)-th smallest element v has n(v) >= b+1 > b, and every smaller
    element has n <= b, so this is just an index lookup.
    """
    if b < 0:
        raise ValueError("budget must be >= 0")
    if b < len(A.values):
        return A.values[b]
    return INF


def gap_bounds(A: ValueList, C: float) -> Tuple[float, float]:
    """(floor_A(C), ceil_A(C)): largest value <= C and smallest value > C.

    floor is the 0.0 sentinel when C is below every value; ceil is +inf
    when C is at or above the maximum.
    """
    if not A.values:
        raise ValueError("gap_bounds on empty list")
    i = bisect_right(A.values, C)
    lo = A.values[i - 1] if i > 0 else 0.0
    hi = A.values[i] if i < len(A.values) else INF
    return lo, hi


def delta(A: ValueList, C: float) -> float:
    """Width of the value gap straddling C: ceil_A(C) - floor_A(C)."""
    lo, hi = gap_bounds(A, C)
    return hi - lo


def delta_min(A: ValueList, C_star: float) -> float:
    """Smallest gap delta(C) over C in A with C <= C_star and finite ceil.

    The maximal element (no successor) contributes nothing; if no element
    qualifies the result is +inf.
    """
    best = INF
    prev = None
    for v in A.values:
        if v > C_star:
            break
        if prev is not None and v != prev:
            best = min(best, v - prev)
        prev = v
    # gap from the last qualifying element to its successor, if any
    if prev is not None:
        i = bisect_right(A.values, prev)
        if i < len(A.values):
            best = min(best, A.values[i] - prev)
    return best


def n_exp(eps: float, x: float, delta_: float) -> int:
    """Query-count budget for bracketing from eps up to x at resolution delta_.

    1 + ceil(log2(x/eps)) clamped to >= 1, plus floor(log2(x/delta_))
    clamped to >= 0.  delta_ = +inf is allowed (the floor term is 0).
    """
    if not (eps > 0.0):
        raise ValueError("eps must be > 0")
    if not (x >= eps):
        raise ValueError("x must be >= eps")
    if not (delta_ > 0.0):
        raise ValueError("delta must be > 0")
    up = max(1, math.ceil(math.log2(x / eps)))
    down = 0 if delta_ == INF else max(0, math.floor(math.log2(x / delta_)))
    return 1 + up + down


def synthetic_query(mode: FeedbackMode, A: ValueList, C_star: float,
                    C: float, b: int) -> QueryOutcome:
    """Reference query oracle over an explicit value list.

    Terminates the interaction (returns the optimal solution C_star) iff
    n(C_star) <= n(C) <= b.  Otherwise returns the mode's pruning
    interval, which always contains c_crit(A, b), and reports
    n_used = min(b, n(C)) expansions.

    Deterministic choices: the extended-mode insufficient-budget endpoint
    is floor_A(C); the integer-mode insufficient interval is
    [1, floor(C)], which coincides with [1, C] at the integer limits the
    mode is meant for and keeps the bracket search convergent at
    fractional probes.
    """
    if count_leq(A, C_star) == 0 or C_star not in A.values:
        raise ValueError("C_star must be an element of A")
    if C < 1.0:
        raise ValueError("query cost limit must be >= 1")
    n_c = count_leq(A, C)
    n_star = count_leq(A, C_star)
    if n_star <= n_c <= b:
        return SolutionFound(Solution(C_star), n_used=n_c)
    n_used = min(b, n_c)
    crit = c_crit(A, b)
    sufficient = C < crit
    lo, hi = gap_bounds(A, C)
    if mode is FeedbackMode.LIMITED:
        iv = CostInterval(C, INF) if sufficient else CostInterval(1.0, C)
    elif mode is FeedbackMode.INTEGER:
        iv = (CostInterval(math.floor(C) + 1.0, INF) if sufficient
              else CostInterval(1.0, float(math.floor(C))))
    elif mode is FeedbackMode.EXTENDED:
        iv = CostInterval(hi, INF) if sufficient else CostInterval(1.0, lo)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return Pruned(iv, n_used)


def random_value_list(rng, max_size: int = 500) -> ValueList:
    """Random test list: uniform, geometric-gap, or heavy-duplicate law."""
    n = rng.randint(1, max_size)
    law = rng.below(3)
    vals = []
    if law == 0:  # uniform reals in [1, 1000]
        vals = [rng.uniform(1.0, 1000.0) for _ in range(n)]
    elif law == 1:  # geometric gaps: multiplicative steps
        v = rng.uniform(1.0, 4.0)
        for _ in range(n):
            vals.append(v)
            v *= 1.0 + rng.uniform(0.0, 1.0)
            if v > 1e12:
                v = rng.uniform(1.0, 4.0)
    else:  # heavy duplicates over a small integer support
        support = [float(rng.randint(1, 50)) for _ in range(max(1, n // 10))]
        vals = [rng.choice(support) for _ in range(n)]
    return ValueList.from_values(vals)
