"""Regularity and saturation-degree functions of powers of a presented monomial ideal.

A presented ideal is a pair (Q, P) of monomial ideals in S: the ambient
quotient ring is R = S/Q and the ideal of interest is I = (P+Q)/Q.  All
four power functions are computed over S; local cohomology at the
maximal ideal does not see the presentation, so the values agree with
the intrinsic ones over R.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .betti import regularity
from .modules import NEG_INF, Subquotient, top_degree
from .monomials import MonomialIdeal, RingMismatchError, unit_ideal


class InputError(ValueError):
    """Structurally invalid input (bad range, malformed family parameters, ...)."""


class StandingHypothesisError(ValueError):
    """The input violates a standing hypothesis (I = 0, I the unit ideal, or I^n = 0)."""


FUNCTION_NAMES = ("reg_power", "reg_quotient", "reg_diff", "sdeg", "gen_degree")

# Offset o such that the defect of function value v at power n is v - d*n + o.
_DEFECT_OFFSET = {
    "reg_power": 0,
    "reg_quotient": 1,
    "reg_diff": 1,
    "sdeg": 0,
    "gen_degree": 0,
}


@dataclass(frozen=True)
class PresentedIdeal:
    """R = S/quot and I = (lift + quot)/quot, with I proper and nonzero."""

    quot: MonomialIdeal
    lift: MonomialIdeal

    def __post_init__(self):
        if self.quot.ring != self.lift.ring:
            raise RingMismatchError("quot and lift live in different rings")
        total = self.lift + self.quot
        if total == self.quot:
            raise StandingHypothesisError("the presented ideal is zero")
        if total.is_unit():
            raise StandingHypothesisError("the presented ideal is the unit ideal")

    @property
    def ring(self):
        return self.quot.ring

    @property
    def total(self) -> MonomialIdeal:
        return self.lift + self.quot

    def minimal_gen_degrees(self) -> tuple:
        """Degrees of the minimal generators of I: generators of lift+quot outside quot."""
        return tuple(
            sorted(g.degree for g in self.total.gens if not self.quot.contains(g))
        )

    @property
    def d(self) -> int:
        """Generation degree of I: maximal minimal-generator degree."""
        return max(self.minimal_gen_degrees())

    @property
    def equigenerated(self) -> bool:
        degrees = self.minimal_gen_degrees()
        return len(set(degrees)) == 1

    def dim_quotient_by_ideal(self) -> int:
        """dim R/I."""
        return self.total.krull_dim_quotient()

    def dim_ring(self) -> int:
        """dim R."""
        return self.quot.krull_dim_quotient()

    @lru_cache(maxsize=None)
    def _lifted_power(self, n: int) -> MonomialIdeal:
        """lift^n + quot, the presentation of I^n."""
        return self.lift.power(n) + self.quot

    def module_of(self, kind: str, n: int) -> Subquotient:
        """The module whose regularity is the requested power function at n."""
        if n < 1:
            raise InputError("power index must be >= 1")
        power_n = self._lifted_power(n)
        if power_n == self.quot:
            raise StandingHypothesisError(f"I^{n} = 0 in R")
        if kind == "power":
            return Subquotient(power_n, self.quot)
        if kind == "quotient":
            return Subquotient(unit_ideal(self.ring), power_n)
        if kind == "diff":
            prev = unit_ideal(self.ring) if n == 1 else self._lifted_power(n - 1)
            return Subquotient(prev, power_n)
        raise InputError(f"unknown module kind {kind!r}")

    def reg_power(self, n: int) -> int:
        return regularity(self.module_of("power", n))

    def reg_quotient(self, n: int) -> int:
        return regularity(self.module_of("quotient", n))

    def reg_diff(self, n: int) -> int:
        return regularity(self.module_of("diff", n))

    def reg_ring(self) -> int:
        """reg R = reg S/quot."""
        return regularity(Subquotient(unit_ideal(self.ring), self.quot))

    def sdeg(self, n: int):
        """Saturation degree of I^n; NEG_INF when I^n is already saturated."""
        if n < 1:
            raise InputError("power index must be >= 1")
        power_n = self._lifted_power(n)
        if power_n == self.quot:
            raise StandingHypothesisError(f"I^{n} = 0 in R")
        saturated = power_n.saturate()
        if saturated == power_n:
            return NEG_INF
        return top_degree(Subquotient(saturated, power_n)) + 1

    def gen_degree(self, n: int) -> int:
        """Maximal degree of the minimal generators of I^n."""
        if n < 1:
            raise InputError("power index must be >= 1")
        power_n = self._lifted_power(n)
        outside = [g.degree for g in power_n.gens if not self.quot.contains(g)]
        if not outside:
            raise StandingHypothesisError(f"I^{n} = 0 in R")
        return max(outside)

    def function(self, name: str):
        if name not in FUNCTION_NAMES:
            raise InputError(f"unknown function {name!r}")
        return getattr(self, name)


@dataclass
class DefectReport:
    """Window of values of one power function with its defect sequence and stability diagnostics."""

    function: str
    n_from: int
    n_to: int
    slope: int | None
    values: list
    defects: list | None
    stable_suffix_length: int
    stabilized_in_window: bool


def _stable_suffix(values, slope) -> int:
    """Length of the longest suffix whose consecutive differences all equal the slope."""
    if slope is None or not values:
        return 0
    length = 1
    for prev, cur in zip(reversed(values[:-1]), reversed(values[1:])):
        if prev == NEG_INF or cur == NEG_INF or cur - prev != slope:
            break
        length += 1
    return length


def defect_report(
    presented: PresentedIdeal,
    function: str,
    n_from: int,
    n_to: int,
    stability_k: int = 3,
) -> DefectReport:
    if function not in FUNCTION_NAMES:
        raise InputError(f"unknown function {function!r}")
    if n_from < 1 or n_to < n_from:
        raise InputError("empty or invalid power range")
    fn = getattr(presented, function)
    values = [fn(n) for n in range(n_from, n_to + 1)]
    if presented.equigenerated:
        slope = presented.d
        offset = _DEFECT_OFFSET[function]
        defects = [
            None if v == NEG_INF else v - slope * n + offset
            for n, v in zip(range(n_from, n_to + 1), values)
        ]
    else:
        slope = None
        defects = None
    suffix = _stable_suffix(values, slope)
    return DefectReport(
        function=function,
        n_from=n_from,
        n_to=n_to,
        slope=slope,
        values=values,
        defects=defects,
        stable_suffix_length=suffix,
        stabilized_in_window=suffix >= stability_k,
    )
