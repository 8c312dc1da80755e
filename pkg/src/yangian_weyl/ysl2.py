"""Exact rank-one Yangian engine: evaluation modules, tensor products,
generator ladders, and brute-force cyclicity oracles.

Evaluation modules carry the closed-form action; tensor products are built
from the coproduct of the level-0 and level-1 generators, and all higher
generators come from the defining-relation recursion, which is exact on
any module.  Submodule spinning turns these matrices into a brute-force
check of highest-weightness and irreducibility used to validate the
criterion machinery elsewhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .exact import (
    GaussianRational,
    Matrix,
    ONE,
    ZERO,
    as_scalar,
    commutator,
    kron,
    row_space_closure,
    unit_vector,
)

HALF = GaussianRational(Fraction(1, 2))


@dataclass(frozen=True)
class SL2Module:
    """Matrices of the six level-0/1 generators on a finite-dimensional space."""

    factor_spec: Tuple[Tuple[int, GaussianRational], ...]
    basis_labels: Tuple[Tuple[int, ...], ...]
    x0p: Matrix
    x0m: Matrix
    x1p: Matrix
    x1m: Matrix
    h0: Matrix
    h1: Matrix

    @property
    def dim(self) -> int:
        return len(self.basis_labels)

    @property
    def highest_index(self) -> int:
        top = tuple(m for m, _ in self.factor_spec)
        return self.basis_labels.index(top)

    def generators(self) -> Tuple[Matrix, ...]:
        return (self.x0p, self.x0m, self.x1p, self.x1m, self.h0, self.h1)

    def basis_index(self, label: Tuple[int, ...]) -> int:
        return self.basis_labels.index(label)


def evaluation_module(m: int, a) -> SL2Module:
    """The (m+1)-dimensional evaluation module with parameter a.

    Basis w_0 .. w_m; the highest weight vector is w_m.  Closed-form action:
    x_k^+ w_s = (s+a)^k (s+1) w_{s+1}
    x_k^- w_s = (s+a-1)^k (m-s+1) w_{s-1}
    h_k  w_s = ((s+a-1)^k s (m-s+1) - (s+a)^k (s+1)(m-s)) w_s
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    a = as_scalar(a)
    n = m + 1

    def xp(k: int) -> Matrix:
        rows = [[ZERO] * n for _ in range(n)]
        for s in range(m):
            rows[s + 1][s] = (s + a) ** k * (s + 1) if k else GaussianRational(s + 1)
        return Matrix(rows)

    def xm(k: int) -> Matrix:
        rows = [[ZERO] * n for _ in range(n)]
        for s in range(1, n):
            coef = GaussianRational(m - s + 1)
            if k:
                coef = (s + a - 1) ** k * coef
            rows[s - 1][s] = coef
        return Matrix(rows)

    def h(k: int) -> Matrix:
        rows = [[ZERO] * n for _ in range(n)]
        for s in range(n):
            lower = (s + a - 1) ** k * (s * (m - s + 1)) if k else GaussianRational(s * (m - s + 1))
            upper = (s + a) ** k * ((s + 1) * (m - s)) if k else GaussianRational((s + 1) * (m - s))
            rows[s][s] = lower - upper
        return Matrix(rows)

    return SL2Module(
        factor_spec=((m, a),),
        basis_labels=tuple((s,) for s in range(n)),
        x0p=xp(0),
        x0m=xm(0),
        x1p=xp(1),
        x1m=xm(1),
        h0=h(0),
        h1=h(1),
    )


def _next_xm(h0: Matrix, h1: Matrix, xkm: Matrix) -> Matrix:
    return (commutator(h1, xkm) + h0 @ xkm + xkm @ h0).scale(-HALF)


def _next_xp(h0: Matrix, h1: Matrix, xkp: Matrix) -> Matrix:
    return (commutator(h1, xkp) - h0 @ xkp - xkp @ h0).scale(HALF)


def _tensor_pair(left: SL2Module, right: SL2Module) -> SL2Module:
    il = Matrix.identity(left.dim)
    ir = Matrix.identity(right.dim)
    x0p = kron(left.x0p, ir) + kron(il, right.x0p)
    x0m = kron(left.x0m, ir) + kron(il, right.x0m)
    h0 = kron(left.h0, ir) + kron(il, right.h0)
    h1 = (
        kron(left.h1, ir)
        + kron(il, right.h1)
        + kron(left.h0, right.h0)
        - kron(left.x0m, right.x0p).scale(2)
    )
    x1m = _next_xm(h0, h1, x0m)
    x1p = _next_xp(h0, h1, x0p)
    labels = tuple(
        ll + rl for ll in left.basis_labels for rl in right.basis_labels
    )
    return SL2Module(
        factor_spec=left.factor_spec + right.factor_spec,
        basis_labels=labels,
        x0p=x0p,
        x0m=x0m,
        x1p=x1p,
        x1m=x1m,
        h0=h0,
        h1=h1,
    )


def tensor_module(spec: Sequence[Tuple[int, object]]) -> SL2Module:
    """Left-associated tensor product of evaluation modules."""
    if not spec:
        raise ValueError("empty factor list")
    module = evaluation_module(*spec[0])
    for m, a in spec[1:]:
        module = _tensor_pair(module, evaluation_module(m, a))
    return module


@dataclass(frozen=True)
class GeneratorLadder:
    """Matrices of x_k^+/-, h_k for k = 0..K on a fixed module."""

    module: SL2Module
    xp: Tuple[Matrix, ...]
    xm: Tuple[Matrix, ...]
    h: Tuple[Matrix, ...]

    @property
    def order(self) -> int:
        return len(self.h) - 1


def extend_generators(module: SL2Module, K: int) -> GeneratorLadder:
    """Generators up to level K from the defining-relation recursion:
    x_{k+1}^- = -1/2([h_1, x_k^-] + h_0 x_k^- + x_k^- h_0),
    x_{k+1}^+ = +1/2([h_1, x_k^+] - h_0 x_k^+ - x_k^+ h_0),
    h_k = [x_k^+, x_0^-].
    """
    if K < 1:
        raise ValueError("K must be at least 1")
    xp = [module.x0p, module.x1p]
    xm = [module.x0m, module.x1m]
    for _ in range(K - 1):
        xm.append(_next_xm(module.h0, module.h1, xm[-1]))
        xp.append(_next_xp(module.h0, module.h1, xp[-1]))
    h = [module.h0, module.h1]
    h.extend(commutator(xp[k], module.x0m) for k in range(2, K + 1))
    return GeneratorLadder(module, tuple(xp), tuple(xm), tuple(h))


def submodule_dimension(module: SL2Module, seed) -> int:
    dim, _ = row_space_closure(module.generators(), seed)
    return dim


def is_highest_weight(spec: Sequence[Tuple[int, object]]) -> bool:
    """True iff the ordered tensor product is generated by its top vector."""
    module = tensor_module(spec)
    seed = unit_vector(module.dim, module.highest_index)
    return submodule_dimension(module, seed) == module.dim


def is_irreducible(spec: Sequence[Tuple[int, object]]) -> bool:
    """Brute-force irreducibility for chains of two-dimensional factors.

    The product is irreducible iff both it and its left dual are highest
    weight; dualizing reverses the order and shifts every parameter by the
    same constant, which cancels in all differences, so the reversed spec
    is spun directly.
    """
    if any(m != 1 for m, _ in spec):
        raise ValueError("irreducibility oracle supports two-dimensional factors only")
    return is_highest_weight(spec) and is_highest_weight(tuple(reversed(tuple(spec))))


def verify_drinfeld_series(spec: Sequence[Tuple[int, object]], order: int) -> bool:
    """Check that h_k acts on the top tensor vector by the coefficients of
    the product eigenvalue series, for all k <= order."""
    from .drinfeld import eigenvalue_series

    module = tensor_module(spec)
    ladder = extend_generators(module, max(order, 1))
    roots = []
    for m, a in spec:
        a = as_scalar(a)
        roots.extend(a + s for s in range(m))
    series = eigenvalue_series(roots, 1, order + 1)
    top = unit_vector(module.dim, module.highest_index)
    for k in range(order + 1):
        expected = tuple(series.coeffs[k + 1] * e for e in top)
        if ladder.h[k].matvec(top) != expected:
            return False
    return True


def trivial_submodule_check(a) -> bool:
    """In W_1(a+1) (x) W_1(a), the vector v+ (x) w- - v- (x) w+ is killed by
    all six generators."""
    a = as_scalar(a)
    module = tensor_module([(1, a + 1), (1, a)])
    v0 = [ZERO] * module.dim
    v0[module.basis_index((1, 0))] = ONE
    v0[module.basis_index((0, 1))] = -ONE
    v0 = tuple(v0)
    return all(
        all(not e for e in g.matvec(v0)) for g in module.generators()
    )


def defining_relation_failures(module: SL2Module, K: int = 2) -> list:
    """Names of defining relations that fail as exact matrix identities."""
    ladder = extend_generators(module, K)
    xp, xm, h = ladder.xp, ladder.xm, ladder.h
    failures = []

    def check(name, matrix):
        if not matrix.is_zero():
            failures.append(name)

    for r in range(len(h)):
        for s in range(r, len(h)):
            check(f"[h{r},h{s}]", commutator(h[r], h[s]))
    for k in range(K + 1):
        check(f"[h0,x{k}+] - 2 x{k}+", commutator(h[0], xp[k]) - xp[k].scale(2))
        check(f"[h0,x{k}-] + 2 x{k}-", commutator(h[0], xm[k]) + xm[k].scale(2))
    for r in range(K + 1):
        for s in range(K + 1 - r):
            check(f"[x{r}+,x{s}-] - h{r+s}", commutator(xp[r], xm[s]) - h[r + s])
    for r in range(K):
        for s in range(K):
            check(
                f"[x{r+1}+,x{s}+] - [x{r}+,x{s+1}+] - (x{r}+x{s}+ + x{s}+x{r}+)",
                commutator(xp[r + 1], xp[s])
                - commutator(xp[r], xp[s + 1])
                - (xp[r] @ xp[s] + xp[s] @ xp[r]),
            )
            check(
                f"[x{r+1}-,x{s}-] - [x{r}-,x{s+1}-] + (x{r}-x{s}- + x{s}-x{r}-)",
                commutator(xm[r + 1], xm[s])
                - commutator(xm[r], xm[s + 1])
                + (xm[r] @ xm[s] + xm[s] @ xm[r]),
            )
    for r in range(K):
        for s in range(K):
            check(
                f"[h{r+1},x{s}+] - [h{r},x{s+1}+] - (h{r}x{s}+ + x{s}+h{r})",
                commutator(h[r + 1], xp[s])
                - commutator(h[r], xp[s + 1])
                - (h[r] @ xp[s] + xp[s] @ h[r]),
            )
            check(
                f"[h{r+1},x{s}-] - [h{r},x{s+1}-] + (h{r}x{s}- + x{s}-h{r})",
                commutator(h[r + 1], xm[s])
                - commutator(h[r], xm[s + 1])
                + (h[r] @ xm[s] + xm[s] @ h[r]),
            )
    return failures
