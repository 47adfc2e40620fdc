"""Exact arithmetic on monomials and monomial ideals in a standard graded polynomial ring.

All values are immutable; ideals always store their unique minimal
monomial generating set.  The zero ideal is the empty generating set,
the unit ideal is generated by 1.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass


class RingMismatchError(ValueError):
    """Operands belong to different polynomial rings."""


class MonomialSyntaxError(ValueError):
    """A monomial string does not follow the `var^k*...` syntax."""


@dataclass(frozen=True)
class RingSpec:
    """Polynomial ring k[x_1,...,x_r] over the rationals with the standard grading."""

    variables: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(self.variables) < 1:
            raise ValueError("a ring needs at least one variable")
        if any(not isinstance(v, str) or not v for v in self.variables):
            raise ValueError("variable names must be nonempty strings")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names must be unique")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def one(self) -> "Monomial":
        return Monomial(self, (0,) * self.nvars)

    def var(self, name: str) -> "Monomial":
        exps = [0] * self.nvars
        exps[self.variables.index(name)] = 1
        return Monomial(self, tuple(exps))

    def monomial(self, exponents) -> "Monomial":
        return Monomial(self, tuple(exponents))

    def maximal_ideal(self) -> "MonomialIdeal":
        return ideal(self, [self.var(v) for v in self.variables])

    def parse_monomial(self, text: str) -> "Monomial":
        return parse_monomial(self, text)


@dataclass(frozen=True)
class Monomial:
    """A monomial given by its exponent vector in a fixed ring."""

    ring: RingSpec
    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(self.exponents))
        if len(self.exponents) != self.ring.nvars:
            raise ValueError("exponent vector length does not match the ring")
        if any(not isinstance(e, int) or e < 0 for e in self.exponents):
            raise ValueError("exponents must be non-negative integers")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> frozenset:
        return frozenset(i for i, e in enumerate(self.exponents) if e > 0)

    def is_one(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def _check(self, other: "Monomial"):
        if self.ring != other.ring:
            raise RingMismatchError("monomials from different rings")

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(self.ring, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(self.ring, tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(self.ring, tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def colon_factor(self, u: "Monomial") -> "Monomial":
        """self / gcd(self, u), the generator contributed to a colon ideal."""
        self._check(u)
        return Monomial(self.ring, tuple(max(a - b, 0) for a, b in zip(self.exponents, u.exponents)))

    def times_var(self, i: int) -> "Monomial":
        exps = list(self.exponents)
        exps[i] += 1
        return Monomial(self.ring, tuple(exps))

    def __str__(self) -> str:
        if self.is_one():
            return "1"
        parts = []
        for name, e in zip(self.ring.variables, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)


def parse_monomial(ring: RingSpec, text: str) -> Monomial:
    """Parse the bit-exact monomial syntax: `1`, or `*`-separated `var` / `var^k` factors."""
    text = text.strip()
    if text == "1":
        return ring.one()
    if not text:
        raise MonomialSyntaxError("empty monomial")
    exps = [0] * ring.nvars
    seen = set()
    for factor in text.split("*"):
        if not factor:
            raise MonomialSyntaxError(f"empty factor in {text!r}")
        if "^" in factor:
            name, _, power = factor.partition("^")
            if not power.isdigit():
                raise MonomialSyntaxError(f"bad exponent in factor {factor!r}")
            k = int(power)
            if k < 1:
                raise MonomialSyntaxError(f"exponent must be >= 1 in factor {factor!r}")
        else:
            name, k = factor, 1
        if name not in ring.variables:
            raise MonomialSyntaxError(f"unknown variable {name!r}")
        if name in seen:
            raise MonomialSyntaxError(f"repeated variable {name!r} in {text!r}")
        seen.add(name)
        exps[ring.variables.index(name)] = k
    return Monomial(ring, tuple(exps))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal stored by its minimal generating set (sorted, deduplicated).

    Build instances through `ideal`, `minimalize`, or the arithmetic
    operations below, which all minimalize their output.
    """

    ring: RingSpec
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(self.gens))
        for g in self.gens:
            if g.ring != self.ring:
                raise RingMismatchError("generator from a different ring")

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_one()

    def contains(self, u: Monomial) -> bool:
        if u.ring != self.ring:
            raise RingMismatchError("monomial from a different ring")
        return any(g.divides(u) for g in self.gens)

    def is_subset_of(self, other: "MonomialIdeal") -> bool:
        return all(other.contains(g) for g in self.gens)

    def __le__(self, other: "MonomialIdeal") -> bool:
        return self.is_subset_of(other)

    def _check(self, other: "MonomialIdeal"):
        if self.ring != other.ring:
            raise RingMismatchError("ideals from different rings")

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return ideal(self.ring, [g * h for g in self.gens for h in other.gens])

    def scale(self, u: Monomial) -> "MonomialIdeal":
        """The ideal u * self."""
        return ideal(self.ring, [u * g for g in self.gens])

    def power(self, n: int) -> "MonomialIdeal":
        if n < 0:
            raise ValueError("power exponent must be >= 0")
        if n == 0:
            return ideal(self.ring, [self.ring.one()])
        result = self
        for _ in range(n - 1):
            result = result * self
        return result

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return ideal(self.ring, [g.lcm(h) for g in self.gens for h in other.gens])

    def colon(self, u: Monomial) -> "MonomialIdeal":
        """The colon ideal self : (u)."""
        if u.ring != self.ring:
            raise RingMismatchError("monomial from a different ring")
        return ideal(self.ring, [g.colon_factor(u) for g in self.gens])

    def colon_ideal(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """The colon ideal self : other, intersected over the generators of other."""
        self._check(other)
        if other.is_zero():
            raise ValueError("colon by the zero ideal")
        result = self.colon(other.gens[0])
        for u in other.gens[1:]:
            result = result.intersect(self.colon(u))
        return result

    def saturate(self, other: "MonomialIdeal" = None) -> "MonomialIdeal":
        """Saturation with respect to `other` (default: the maximal ideal)."""
        if other is None:
            other = self.ring.maximal_ideal()
        if self.is_zero():
            return self
        current = self
        while True:
            nxt = current.colon_ideal(other)
            if nxt == current:
                return current
            current = nxt

    def krull_dim_quotient(self) -> int:
        """Krull dimension of S/self; -1 for the unit ideal (zero ring)."""
        if self.is_unit():
            return -1
        indices = range(self.ring.nvars)
        supports = [g.support for g in self.gens]
        for size in range(self.ring.nvars, -1, -1):
            for subset in itertools.combinations(indices, size):
                fset = frozenset(subset)
                if not any(s <= fset for s in supports):
                    return size
        return -1

    def max_gen_degree(self) -> int:
        """Maximal degree of a minimal generator; 0 for the zero and unit ideals."""
        if self.is_zero():
            return 0
        return max(g.degree for g in self.gens)

    def lcm_degree(self) -> int:
        """Degree of the lcm of all minimal generators; 0 for the zero and unit ideals."""
        if self.is_zero():
            return 0
        acc = self.gens[0]
        for g in self.gens[1:]:
            acc = acc.lcm(g)
        return acc.degree

    def lcm_exponents(self) -> tuple:
        """Componentwise maximum of the generator exponents (the zero vector if no generators)."""
        exps = [0] * self.ring.nvars
        for g in self.gens:
            exps = [max(a, b) for a, b in zip(exps, g.exponents)]
        return tuple(exps)

    def __str__(self) -> str:
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


def minimalize(ring: RingSpec, gens) -> MonomialIdeal:
    """The unique minimal generating set: drop every monomial divisible by another one."""
    gens = list(gens)
    for g in gens:
        if g.ring != ring:
            raise RingMismatchError("generator from a different ring")
    unique = sorted(set(gens), key=lambda m: (m.degree, m.exponents))
    minimal = []
    for g in unique:
        if not any(h.divides(g) for h in minimal):
            minimal.append(g)
    minimal.sort(key=lambda m: m.exponents)
    return MonomialIdeal(ring, tuple(minimal))


def ideal(ring: RingSpec, gens) -> MonomialIdeal:
    """Build a minimalized MonomialIdeal from monomials or monomial strings."""
    parsed = [g if isinstance(g, Monomial) else parse_monomial(ring, g) for g in gens]
    return minimalize(ring, parsed)


def zero_ideal(ring: RingSpec) -> MonomialIdeal:
    return MonomialIdeal(ring, ())


def unit_ideal(ring: RingSpec) -> MonomialIdeal:
    return MonomialIdeal(ring, (ring.one(),))
