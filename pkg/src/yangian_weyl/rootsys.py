"""Cartan data for the classical families A, B, C, D and for G2.

Weights are integer vectors in fundamental-weight coordinates throughout;
roots are integer vectors in the simple-root basis.  The ambient
("mu") coordinates used by the classical realizations are kept as
conversion tables for documentation and tests only.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

Weight = Tuple[int, ...]
Root = Tuple[int, ...]

FAMILIES = ("A", "B", "C", "D", "G2")


@dataclass(frozen=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        minimum = {"A": 1, "B": 2, "C": 2, "D": 3, "G2": 2}[self.family]
        if self.rank < minimum:
            raise ValueError(f"{self.family} requires rank >= {minimum}")
        if self.family == "G2" and self.rank != 2:
            raise ValueError("G2 has rank 2")
        if self.family == "D" and self.rank == 3:
            warnings.warn(
                "D with rank 3 is accepted (it is A3 relabelled) but the "
                "series formulas assume rank >= 4",
                stacklevel=2,
            )

    def __str__(self):
        return self.family if self.family == "G2" else f"{self.family}{self.rank}"


def lie_type(family: str, rank: int | None = None) -> LieType:
    if family == "G2" and rank is None:
        rank = 2
    if rank is None:
        raise ValueError("rank required")
    return LieType(family, rank)


@dataclass(frozen=True)
class CartanDatum:
    lie_type: LieType
    cartan: Tuple[Tuple[int, ...], ...]
    d: Tuple[int, ...]
    # Ambient-coordinate tables (documentation/tests): simple roots and
    # fundamental weights as vectors of Fractions, plus the Gram matrix of
    # the ambient form (None means the standard dot product).
    simple_roots_mu: Tuple[Tuple[Fraction, ...], ...]
    fundamental_weights_mu: Tuple[Tuple[Fraction, ...], ...]
    mu_gram: Tuple[Tuple[Fraction, ...], ...] | None


def _tridiagonal(l: int) -> list[list[int]]:
    m = [[0] * l for _ in range(l)]
    for i in range(l):
        m[i][i] = 2
        if i + 1 < l:
            m[i][i + 1] = -1
            m[i + 1][i] = -1
    return m


def _partial_sums(l: int, dim: int):
    out = []
    for i in range(1, l + 1):
        out.append(tuple(Fraction(1) if j < i else Fraction(0) for j in range(dim)))
    return out


@lru_cache(maxsize=None)
def _cartan_datum(family: str, rank: int) -> CartanDatum:
    t = LieType(family, rank)
    l = rank
    F = Fraction
    if family == "A":
        cartan = _tridiagonal(l)
        d = (1,) * l
        dim = l + 1
        roots = [
            tuple(F(1) if j == i else F(-1) if j == i + 1 else F(0) for j in range(dim))
            for i in range(l)
        ]
        weights = _partial_sums(l, dim)
        gram = None
    elif family == "B":
        cartan = _tridiagonal(l)
        cartan[l - 1][l - 2] = -2
        # Symmetrizer convention for the odd orthogonal family; deliberately
        # not the coprime-minimal choice.
        d = (2,) * (l - 1) + (1,)
        roots = [
            tuple(F(1) if j == i else F(-1) if j == i + 1 else F(0) for j in range(l))
            for i in range(l - 1)
        ]
        roots.append(tuple(F(1) if j == l - 1 else F(0) for j in range(l)))
        weights = _partial_sums(l - 1, l) + [tuple(F(1, 2) for _ in range(l))]
        gram = None
    elif family == "C":
        cartan = _tridiagonal(l)
        cartan[l - 2][l - 1] = -2
        d = (1,) * (l - 1) + (2,)
        roots = [
            tuple(F(1) if j == i else F(-1) if j == i + 1 else F(0) for j in range(l))
            for i in range(l - 1)
        ]
        roots.append(tuple(F(2) if j == l - 1 else F(0) for j in range(l)))
        weights = _partial_sums(l, l)
        gram = None
    elif family == "D":
        cartan = _tridiagonal(l)
        cartan[l - 2][l - 1] = 0
        cartan[l - 1][l - 2] = 0
        cartan[l - 3][l - 1] = -1
        cartan[l - 1][l - 3] = -1
        d = (1,) * l
        roots = [
            tuple(F(1) if j == i else F(-1) if j == i + 1 else F(0) for j in range(l))
            for i in range(l - 1)
        ]
        roots.append(
            tuple(F(1) if j in (l - 2, l - 1) else F(0) for j in range(l))
        )
        weights = _partial_sums(l - 2, l)
        weights.append(
            tuple(F(1, 2) if j < l - 1 else F(-1, 2) for j in range(l))
        )
        weights.append(tuple(F(1, 2) for _ in range(l)))
        gram = None
    else:  # G2; node 1 is the long root, node 2 the short one
        cartan = [[2, -1], [-3, 2]]
        d = (3, 1)
        roots = [(F(1), F(0)), (F(0), F(1))]
        weights = [(F(2), F(3)), (F(1), F(2))]
        gram = ((F(6), F(-3)), (F(-3), F(2)))
    return CartanDatum(
        lie_type=t,
        cartan=tuple(tuple(row) for row in cartan),
        d=tuple(d),
        simple_roots_mu=tuple(roots),
        fundamental_weights_mu=tuple(weights),
        mu_gram=gram,
    )


def cartan_datum(t: LieType) -> CartanDatum:
    return _cartan_datum(t.family, t.rank)


def fundamental_weight(t: LieType, i: int) -> Weight:
    _check_node(t, i)
    return tuple(1 if j == i - 1 else 0 for j in range(t.rank))


def _check_node(t: LieType, i: int):
    if not 1 <= i <= t.rank:
        raise ValueError(f"node {i} out of range for {t}")


def simple_root_in_weights(t: LieType, i: int) -> Weight:
    """alpha_i in fundamental-weight coordinates: the i-th Cartan column."""
    _check_node(t, i)
    cartan = cartan_datum(t).cartan
    return tuple(cartan[j][i - 1] for j in range(t.rank))


def reflect(t: LieType, w: Weight, i: int) -> Weight:
    """Simple reflection s_i(w) = w - w_i * alpha_i."""
    _check_node(t, i)
    c = w[i - 1]
    if c == 0:
        return tuple(w)
    alpha = simple_root_in_weights(t, i)
    return tuple(wj - c * aj for wj, aj in zip(w, alpha))


def reflect_root(t: LieType, root: Root, i: int) -> Root:
    """s_i acting on a vector in the simple-root basis."""
    _check_node(t, i)
    row = cartan_datum(t).cartan[i - 1]
    pairing = sum(a * c for a, c in zip(row, root))
    return tuple(
        c - pairing if j == i - 1 else c for j, c in enumerate(root)
    )


@lru_cache(maxsize=None)
def _longest_word(family: str, rank: int) -> Tuple[int, ...]:
    l = rank
    word: list[int] = []
    if family == "A":
        for k in range(l):
            word.extend(range(l - k, l + 1))
    elif family in ("B", "C"):
        for k in range(l):
            word.extend(range(l - k, l))
            word.append(l)
            word.extend(range(l - 1, l - k - 1, -1))
    elif family == "D":
        word = [l, l - 1]
        for k in range(2, l):
            word.extend(range(l - k, l - 1))
            word.extend([l, l - 1])
            word.extend(range(l - 2, l - k - 1, -1))
    else:
        word = [1, 2, 1, 2, 1, 2]
    return tuple(word)


def longest_word(t: LieType) -> Tuple[int, ...]:
    """A reduced expression for the longest Weyl group element.

    The sequence is read as a product of simple reflections; apply_word
    applies the rightmost factor first.
    """
    return _longest_word(t.family, t.rank)


def apply_word(t: LieType, word, w: Weight) -> Weight:
    for i in reversed(tuple(word)):
        w = reflect(t, w, i)
    return w


@lru_cache(maxsize=None)
def _node_involution(family: str, rank: int) -> Tuple[int, ...]:
    t = LieType(family, rank)
    word = longest_word(t)
    nu = []
    for i in range(1, rank + 1):
        image = apply_word(t, word, fundamental_weight(t, i))
        negative = tuple(-c for c in image)
        matches = [j for j in range(1, rank + 1) if fundamental_weight(t, j) == negative]
        if len(matches) != 1:
            raise RuntimeError(
                f"longest word of {t} does not send node {i} to minus a "
                "fundamental weight; word table is broken"
            )
        nu.append(matches[0])
    return tuple(nu)


def node_involution(t: LieType) -> Tuple[int, ...]:
    """The permutation i -> -w0(i), as a tuple indexed by node-1."""
    return _node_involution(t.family, t.rank)


def duality_shift(t: LieType) -> Fraction:
    """Half the dual Coxeter number; the parameter shift of the left dual."""
    l = t.rank
    return {
        "A": Fraction(l + 1, 2),
        "B": Fraction(2 * l - 1, 2),
        "C": Fraction(l + 1, 2),
        "D": Fraction(l - 1),
        "G2": Fraction(2),
    }[t.family]


def _mu_to_alpha(t: LieType, mu_vec) -> Root:
    """Express an ambient-coordinate vector in the simple-root basis."""
    datum = cartan_datum(t)
    cols = datum.simple_roots_mu
    dim = len(mu_vec)
    l = t.rank
    # Gaussian elimination on the (dim x l | rhs) system.
    m = [[cols[j][i] for j in range(l)] + [Fraction(mu_vec[i])] for i in range(dim)]
    coeffs = [Fraction(0)] * l
    pivot_cols = []
    r = 0
    for c in range(l):
        pivot = next((i for i in range(r, dim) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [inv * e for e in m[r]]
        for i in range(dim):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivot_cols.append(c)
        r += 1
    for i in range(r, dim):
        if m[i][l]:
            raise ValueError("vector not in the root lattice span")
    for row, c in enumerate(pivot_cols):
        coeffs[c] = m[row][l]
    out = []
    for value in coeffs:
        if value.denominator != 1:
            raise ValueError("non-integer root coordinates")
        out.append(int(value))
    return tuple(out)


@lru_cache(maxsize=None)
def _positive_roots(family: str, rank: int) -> Tuple[Root, ...]:
    t = LieType(family, rank)
    l = rank
    if family == "G2":
        return ((1, 0), (0, 1), (1, 1), (1, 2), (1, 3), (2, 3))
    F = Fraction
    mu_roots = []
    if family == "A":
        dim = l + 1
        for i in range(dim):
            for j in range(i + 1, dim):
                vec = [F(0)] * dim
                vec[i], vec[j] = F(1), F(-1)
                mu_roots.append(tuple(vec))
    else:
        for i in range(l):
            for j in range(i + 1, l):
                plus = [F(0)] * l
                plus[i], plus[j] = F(1), F(1)
                minus = [F(0)] * l
                minus[i], minus[j] = F(1), F(-1)
                mu_roots.extend([tuple(minus), tuple(plus)])
        if family == "B":
            for i in range(l):
                vec = [F(0)] * l
                vec[i] = F(1)
                mu_roots.append(tuple(vec))
        elif family == "C":
            for i in range(l):
                vec = [F(0)] * l
                vec[i] = F(2)
                mu_roots.append(tuple(vec))
    return tuple(_mu_to_alpha(t, vec) for vec in mu_roots)


def positive_roots(t: LieType) -> Tuple[Root, ...]:
    return _positive_roots(t.family, t.rank)


def is_positive_root_vector(root: Root) -> bool:
    return all(c >= 0 for c in root) and any(c > 0 for c in root)


def highest_root(t: LieType) -> Root:
    return max(positive_roots(t), key=sum)


def all_nodes(t: LieType) -> range:
    return range(1, t.rank + 1)
