"""Cyclicity and irreducibility criteria for tensor products of
fundamental modules.

For an ordered chain V_{a_1}(w_{b_1}) x ... x V_{a_k}(w_{b_k}) the product
is guaranteed to be a highest weight module when no difference a_j - a_i
(i < j) lands in the finite positive-rational criterion set of the node
pair (b_i, b_j); it is guaranteed irreducible when the same holds for all
ordered pairs i != j.  Membership is exact: a difference belongs to a set
only when its imaginary part is zero and its real part equals a member.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import FrozenSet, Tuple

from .drinfeld import FactorChain
from .exact import GaussianRational
from .rootsys import LieType, duality_shift, node_involution
from .weylpath import parameter_ledger


@dataclass(frozen=True)
class CriterionSet:
    lie_type: LieType
    b_m: int
    b_n: int
    values: FrozenSet[Fraction]


@dataclass(frozen=True)
class Verdict:
    guaranteed: bool
    exact: bool
    witnesses: Tuple[Tuple[int, int, GaussianRational], ...]


def _check_nodes(t: LieType, b_m: int, b_n: int):
    for b in (b_m, b_n):
        if not 1 <= b <= t.rank:
            raise ValueError(f"node {b} out of range for {t}")


def _set_a(l: int, b_m: int, b_n: int):
    lo = 1 if b_m <= b_n else b_m - b_n + 1
    hi = min(b_m, l - b_n + 1)
    return {Fraction(b_n - b_m, 2) + k for k in range(lo, hi + 1)}


def _set_d(l: int, b_m: int, b_n: int):
    parity = l % 2  # 0 for even rank, 1 for odd
    spin = {l - 1, l}
    if b_m in spin and b_n in spin:
        if b_m == b_n:
            top = l - 1 - parity
        else:
            top = l - 2 + parity
        start = 1 if b_m == b_n else 2
        return {Fraction(v) for v in range(start, top + 1, 2)}
    if b_m in spin or b_n in spin:
        other = b_n if b_m in spin else b_m
        return {Fraction(l - 1 - other, 2) + 1 + r for r in range(other)}
    out = set()
    for r in range(min(b_m, b_n)):
        out.add(Fraction(abs(b_m - b_n), 2) + 1 + r)
        out.add(Fraction(l + r) - Fraction(b_m + b_n, 2))
    return out


def _set_c(l: int, b_m: int, b_n: int):
    if b_m == l and b_n == l:
        return {Fraction(v) for v in range(2, l + 2)}
    if b_m == l:
        out = set()
        for r in range(b_n):
            out.add(Fraction(l - b_n + 1, 2) + 1 + r)
            out.add(Fraction(l - b_n - 1, 2) + 1 + r)
        return out
    if b_n == l:
        return {Fraction(l - b_m + 1, 2) + 2 + r for r in range(b_m)}
    out = set()
    for r in range(min(b_m, b_n)):
        out.add(Fraction(abs(b_m - b_n), 2) + 1 + r)
        out.add(Fraction(l + 2 + r) - Fraction(b_m + b_n, 2))
    return out


def _set_b(l: int, b_m: int, b_n: int):
    if b_m == l and b_n == l:
        return {Fraction(v) for v in range(1, 2 * l, 2)}
    if b_m == l:
        return {Fraction(l - b_n + 2 + 2 * r) for r in range(b_n)}
    if b_n == l:
        # Both polynomial roots of each spin-node chain step obstruct, and
        # consecutive blocks sit two apart, so the range runs to l + b_m - 1;
        # the shorter variant fails the ledger cross-check.
        out = set()
        for r in range(b_m):
            out.add(Fraction(l - b_m + 2 * r))
            out.add(Fraction(l - b_m + 1 + 2 * r))
        return out
    out = set()
    for r in range(min(b_m, b_n)):
        out.add(Fraction(abs(b_m - b_n) + 2 + 2 * r))
        out.add(Fraction(2 * l - (b_m + b_n) + 1 + 2 * r))
    return out


_G2_SETS = {
    (1, 1): (3, 4, 5, 6),
    (1, 2): (Fraction(1, 2), Fraction(3, 2), Fraction(5, 2), Fraction(7, 2), Fraction(9, 2)),
    (2, 1): (Fraction(9, 2), Fraction(13, 2)),
    (2, 2): (1, 3, 4, 6),
}


@lru_cache(maxsize=None)
def _criterion_set(family: str, rank: int, b_m: int, b_n: int) -> CriterionSet:
    t = LieType(family, rank)
    _check_nodes(t, b_m, b_n)
    if family == "A":
        values = _set_a(rank, b_m, b_n)
    elif family == "B":
        values = _set_b(rank, b_m, b_n)
    elif family == "C":
        values = _set_c(rank, b_m, b_n)
    elif family == "D":
        values = _set_d(rank, b_m, b_n)
    else:
        values = {Fraction(v) for v in _G2_SETS[(b_m, b_n)]}
    if any(v <= 0 for v in values):
        raise RuntimeError(f"criterion set for {t} ({b_m},{b_n}) not positive")
    return CriterionSet(t, b_m, b_n, frozenset(values))


def criterion_set(t: LieType, b_m: int, b_n: int) -> CriterionSet:
    """Closed-form criterion set for the node pair (b_m, b_n)."""
    return _criterion_set(t.family, t.rank, b_m, b_n)


class CriterionSetMismatch(RuntimeError):
    """Ledger-derived and closed-form criterion sets disagree."""


@lru_cache(maxsize=None)
def _criterion_set_from_ledger(family: str, rank: int, b_m: int, b_n: int) -> CriterionSet:
    t = LieType(family, rank)
    _check_nodes(t, b_m, b_n)
    values = set()
    for entry in parameter_ledger(t, b_m).entries:
        if entry.node != b_n:
            continue
        for offset in entry.offsets:
            values.add(offset + entry.divisor)
    closed = criterion_set(t, b_m, b_n).values
    if frozenset(values) != closed:
        raise CriterionSetMismatch(
            f"{t} pair ({b_m},{b_n}): ledger-derived set "
            f"{sorted(values)} != closed form {sorted(closed)}"
        )
    return CriterionSet(t, b_m, b_n, frozenset(values))


def criterion_set_from_ledger(t: LieType, b_m: int, b_n: int) -> CriterionSet:
    """Criterion set rederived from the parameter ledger of node b_m.

    At a chain step landing on node b_n with rescaling divisor d, a second
    factor parameter a_n obstructs exactly when (a_n - root)/d = 1 for some
    root of the step polynomial, i.e. a_n - a_m = offset + d.  This is a
    test oracle: a disagreement with criterion_set means a transcription
    bug, and the call fails loudly with both sets rather than returning
    either one.
    """
    return _criterion_set_from_ledger(t.family, t.rank, b_m, b_n)


def _difference_in(diff: GaussianRational, values: FrozenSet[Fraction]) -> bool:
    return diff.im == 0 and diff.re in values


def cyclicity_guaranteed(chain: FactorChain) -> Verdict:
    """Sufficient condition: no pair i < j with a_j - a_i in the pair set.

    A chain with weakly decreasing real parts passes automatically, since
    every criterion value is a positive real number.
    """
    t = chain.lie_type
    witnesses = []
    factors = chain.factors
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            diff = factors[j][1] - factors[i][1]
            values = criterion_set(t, factors[i][0], factors[j][0]).values
            if _difference_in(diff, values):
                witnesses.append((i + 1, j + 1, diff))
    return Verdict(guaranteed=not witnesses, exact=False, witnesses=tuple(witnesses))


def dual_chain(chain: FactorChain) -> FactorChain:
    """Left dual: reverse factors, twist nodes, shift parameters."""
    t = chain.lie_type
    nu = node_involution(t)
    shift = GaussianRational(duality_shift(t))
    return FactorChain(
        t,
        tuple((nu[node - 1], a - shift) for node, a in reversed(chain.factors)),
    )


def irreducibility_guaranteed(chain: FactorChain) -> Verdict:
    """Sufficient (for type A: exact) irreducibility condition.

    Checks a_j - a_i against the pair set for every ordered pair i != j.
    The verdict is recomputed as cyclicity of the chain and of its dual,
    and the two computations must agree.
    """
    t = chain.lie_type
    factors = chain.factors
    witnesses = []
    for i in range(len(factors)):
        for j in range(len(factors)):
            if i == j:
                continue
            diff = factors[j][1] - factors[i][1]
            values = criterion_set(t, factors[i][0], factors[j][0]).values
            if _difference_in(diff, values):
                witnesses.append((i + 1, j + 1, diff))
    guaranteed = not witnesses
    via_duality = (
        cyclicity_guaranteed(chain).guaranteed
        and cyclicity_guaranteed(dual_chain(chain)).guaranteed
    )
    if guaranteed != via_duality:
        raise RuntimeError(
            "direct irreducibility check disagrees with the duality route; "
            f"chain {chain.factors!r}"
        )
    return Verdict(
        guaranteed=guaranteed,
        exact=t.family == "A",
        witnesses=tuple(witnesses),
    )
