"""Shared helpers for the test suite: ring builders and brute-force oracles."""
from __future__ import annotations

import itertools

from regpow import Monomial, MonomialIdeal, RingSpec, ideal


def ring(*names: str) -> RingSpec:
    return RingSpec(tuple(names))


def mk_ideal(rng: RingSpec, *gens: str) -> MonomialIdeal:
    return ideal(rng, gens)


def all_monomials(rng: RingSpec, degree: int):
    """Every monomial of the given total degree, by direct composition enumeration."""
    nv = rng.nvars
    for cuts in itertools.combinations(range(degree + nv - 1), nv - 1):
        exps = []
        prev = -1
        for c in cuts:
            exps.append(c - prev - 1)
            prev = c
        exps.append(degree + nv - 2 - prev)
        yield Monomial(rng, tuple(exps))


def monomials_up_to(rng: RingSpec, max_degree: int):
    for a in range(max_degree + 1):
        yield from all_monomials(rng, a)


def random_ideal(rnd, rng: RingSpec, max_gens: int = 3, max_exp: int = 3) -> MonomialIdeal:
    """A random nonzero proper-or-unit monomial ideal with bounded exponents."""
    gens = []
    for _ in range(rnd.randint(1, max_gens)):
        exps = tuple(rnd.randint(0, max_exp) for _ in range(rng.nvars))
        if all(e == 0 for e in exps):
            exps = tuple(1 if i == 0 else 0 for i in range(rng.nvars))
        gens.append(Monomial(rng, exps))
    return ideal(rng, gens)
