"""Seeded randomized corpus of equigenerated presented ideals, shared by the
property suite and the acceptance gate.  Values are computed once per session."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from regpow import (
    Monomial,
    PresentedIdeal,
    RingSpec,
    StandingHypothesisError,
    ideal,
    zero_ideal,
)

SEED = 20260823
CORPUS_SIZE = 50
_BLOCK_BUDGET = 40_000  # cap on lcm-box volume before shrinking the power window


@dataclass
class CorpusCase:
    presented: PresentedIdeal
    n_max: int
    ht_positive: bool  # proxy: dim S/(P+Q) < dim S/Q, or dim R/I = 0
    dim_zero: bool  # dim R/I = 0
    reg_quotient: list = field(default_factory=list)
    reg_diff: list = field(default_factory=list)
    sdeg: list = field(default_factory=list)

    @property
    def d(self) -> int:
        return self.presented.d


def _random_degree_d_monomials(rnd, ring: RingSpec, d: int, count: int):
    out = set()
    for _ in range(count * 4):
        exps = [0] * ring.nvars
        for _ in range(d):
            exps[rnd.randrange(ring.nvars)] += 1
        out.add(Monomial(ring, tuple(exps)))
        if len(out) >= count:
            break
    return list(out)


def _box_volume(presented: PresentedIdeal, n: int) -> int:
    p = presented.lift.lcm_exponents()
    q = presented.quot.lcm_exponents()
    vol = 1
    for a, b in zip(p, q):
        vol *= max(n * a, b) + 1
    return vol


def _window(presented: PresentedIdeal) -> int:
    for n in (5, 4):
        if _box_volume(presented, n) <= _BLOCK_BUDGET:
            return n
    return 3


def _generate(rnd) -> PresentedIdeal | None:
    nvars = rnd.randint(2, 4)
    ring = RingSpec(tuple(f"x{i}" for i in range(nvars)))
    d = rnd.randint(1, 4)
    lift = ideal(ring, _random_degree_d_monomials(rnd, ring, d, rnd.randint(1, 3)))
    if rnd.random() < 0.5:
        quot = zero_ideal(ring)
    else:
        quot = ideal(
            ring,
            _random_degree_d_monomials(rnd, ring, rnd.randint(1, 4), rnd.randint(1, 2)),
        )
    try:
        presented = PresentedIdeal(quot, lift)
    except StandingHypothesisError:
        return None
    if not presented.equigenerated:
        return None
    return presented


_cases: list | None = None


def corpus() -> list:
    """The deterministic corpus with all power-function values filled in."""
    global _cases
    if _cases is not None:
        return _cases
    rnd = random.Random(SEED)
    cases = []
    while len(cases) < CORPUS_SIZE:
        presented = _generate(rnd)
        if presented is None:
            continue
        dim_i = presented.dim_quotient_by_ideal()
        case = CorpusCase(
            presented=presented,
            n_max=_window(presented),
            ht_positive=dim_i < presented.dim_ring() or dim_i == 0,
            dim_zero=dim_i == 0,
        )
        try:
            for n in range(1, case.n_max + 1):
                case.reg_quotient.append(presented.reg_quotient(n))
                case.reg_diff.append(presented.reg_diff(n))
                case.sdeg.append(presented.sdeg(n))
        except StandingHypothesisError:
            continue  # a power vanished in R; drop the case
        cases.append(case)
    _cases = cases
    return cases
