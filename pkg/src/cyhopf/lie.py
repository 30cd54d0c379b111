"""The cocommutative case: enveloping algebras with finite abelian group actions.

A Lie algebra is given by exact-rational structure constants, a group action
by one matrix per group generator.  The CY criteria reduce to linear algebra:
the enveloping algebra is CY iff tr(ad x) = 0 for every basis element, and
the smash product is CY iff additionally every action matrix has determinant
one.  The automorphism twisting the dualizing complex is the identity here
(the coaction is trivial), so it is recorded as such.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import one
from .datum import CriterionResult, CyReport
from .errors import InputError
from .groups import AbelianGroup, Character, GroupElement

Matrix = tuple[tuple[Fraction, ...], ...]


def _as_matrix(rows, d: int) -> Matrix:
    out = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if len(out) != d or any(len(row) != d for row in out):
        raise InputError(f"expected a {d}x{d} matrix")
    return out


def mat_identity(d: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(d)) for i in range(d))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    d = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(d)) for j in range(d)) for i in range(d)
    )


def mat_pow(a: Matrix, n: int) -> Matrix:
    result = mat_identity(len(a))
    base = a
    while n:
        if n & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base) if n > 1 else base
        n >>= 1
    return result


def mat_det(a: Matrix) -> Fraction:
    d = len(a)
    rows = [list(row) for row in a]
    det = Fraction(1)
    for col in range(d):
        pivot = next((r for r in range(col, d) if rows[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, d):
            if rows[r][col]:
                factor = rows[r][col] * inv
                for c in range(col, d):
                    rows[r][c] -= factor * rows[col][c]
    return det


@dataclass(frozen=True, eq=False)
class LieAlgebraData:
    """Structure constants c_{ij}^k with [x_i, x_j] = sum_k c_{ij}^k x_k."""

    dimension: int
    brackets: tuple[tuple[tuple[Fraction, ...], ...], ...]  # brackets[i][j] = coords of [x_i, x_j]

    def __post_init__(self):
        d = self.dimension
        table = tuple(
            tuple(tuple(Fraction(x) for x in self.brackets[i][j]) for j in range(d))
            for i in range(d)
        )
        object.__setattr__(self, "brackets", table)
        for i in range(d):
            for j in range(d):
                if len(table[i][j]) != d:
                    raise InputError("each bracket needs one coordinate per basis element")
                for k in range(d):
                    if table[i][j][k] != -table[j][i][k]:
                        raise InputError(f"brackets not antisymmetric at ({i + 1},{j + 1})")
        for i in range(d):
            for j in range(i + 1, d):
                for k in range(j + 1, d):
                    if any(self._jacobi(i, j, k)):
                        raise InputError(f"Jacobi identity fails on ({i + 1},{j + 1},{k + 1})")

    def _jacobi(self, i: int, j: int, k: int) -> tuple[Fraction, ...]:
        d = self.dimension

        def bracket_vec(a: int, vec) -> list[Fraction]:
            out = [Fraction(0)] * d
            for b, coeff in enumerate(vec):
                if coeff:
                    for c in range(d):
                        out[c] += coeff * self.brackets[a][b][c]
            return out

        total = [Fraction(0)] * d
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            term = bracket_vec(a, self.brackets[b][c])
            for idx in range(d):
                total[idx] += term[idx]
        return tuple(total)

    def ad_matrix(self, i: int) -> Matrix:
        """(ad x_i) in the chosen basis: column j holds the coords of [x_i, x_j]."""
        d = self.dimension
        return tuple(tuple(self.brackets[i][j][k] for j in range(d)) for k in range(d))


def adjoint_trace(algebra: LieAlgebraData, i: int) -> Fraction:
    """tr(ad x_i) = sum_j c_{ij}^j."""
    return sum(algebra.brackets[i][j][j] for j in range(algebra.dimension))


@dataclass(frozen=True, eq=False)
class GroupActionData:
    """Action of a finite abelian group by Lie algebra automorphisms.

    Given on group generators only and extended multiplicatively; the
    generator-order relations and pairwise commutation are verified here,
    the automorphism property against a specific algebra in validate()."""

    group: AbelianGroup
    matrices: tuple[Matrix, ...]  # one matrix per group generator

    def __post_init__(self):
        if len(self.matrices) != self.group.rank:
            raise InputError("one action matrix per group generator required")
        d = len(self.matrices[0]) if self.matrices else 0
        mats = tuple(_as_matrix(m, d) for m in self.matrices)
        object.__setattr__(self, "matrices", mats)
        ident = mat_identity(d)
        for idx, (m, n) in enumerate(zip(mats, self.group.invariant_factors)):
            if mat_pow(m, n) != ident:
                raise InputError(f"action matrix {idx + 1} does not have order dividing {n}")
        for a in range(len(mats)):
            for b in range(a + 1, len(mats)):
                if mat_mul(mats[a], mats[b]) != mat_mul(mats[b], mats[a]):
                    raise InputError("action matrices of an abelian group must commute")

    @property
    def dimension(self) -> int:
        return len(self.matrices[0]) if self.matrices else 0

    def matrix_of(self, g: GroupElement) -> Matrix:
        if g.group != self.group:
            raise InputError("element outside the action's group")
        out = mat_identity(self.dimension)
        for m, e in zip(self.matrices, g.exp):
            if e:
                out = mat_mul(out, mat_pow(m, e))
        return out

    def validate(self, algebra: LieAlgebraData) -> None:
        d = algebra.dimension
        if self.matrices and self.dimension != d:
            raise InputError(
                f"action matrices are {self.dimension}x{self.dimension}, algebra has dimension {d}"
            )
        for m in self.matrices:
            for i in range(d):
                for j in range(d):
                    lhs = [
                        sum(m[k][c] * algebra.brackets[i][j][c] for c in range(d))
                        for k in range(d)
                    ]
                    rhs = [Fraction(0)] * d
                    for a in range(d):
                        if m[a][i]:
                            for b in range(d):
                                if m[b][j]:
                                    for k in range(d):
                                        rhs[k] += m[a][i] * m[b][j] * algebra.brackets[a][b][k]
                    if lhs != rhs:
                        raise InputError(
                            f"matrix is not a Lie algebra automorphism at ({i + 1},{j + 1})"
                        )


def hdet_lie(action: GroupActionData, g: GroupElement) -> Fraction:
    """Homological determinant of the action at g: det of the acting matrix."""
    return mat_det(action.matrix_of(g))


def _det_character(action: GroupActionData) -> Character:
    """The determinant homomorphism Gamma -> {1, -1} as a Character.

    Determinants of finite-order rational matrices are rational roots of
    unity, hence +-1; -1 on a generator of order n forces n even and maps to
    the exponent n/2."""
    exps = []
    for m, n in zip(action.matrices, action.group.invariant_factors):
        det = mat_det(m)
        if det == 1:
            exps.append(0)
        elif det == -1:
            if n % 2:
                raise InputError(f"determinant -1 on a generator of odd order {n}")
            exps.append(n // 2)
        else:
            raise InputError(f"action matrix determinant {det} is not a root of unity")
    return Character(action.group, tuple(exps))


def check_cy_lie_smash(algebra: LieAlgebraData, action: GroupActionData) -> CyReport:
    """CY verdicts for the enveloping algebra and its smash product."""
    action.validate(algebra)
    d = algebra.dimension
    traces = [adjoint_trace(algebra, i) for i in range(d)]
    unimodular = all(t == 0 for t in traces)
    dets = [mat_det(m) for m in action.matrices]
    special = all(det == 1 for det in dets)
    det_char = _det_character(action)
    m = action.group.exponent
    criteria = (
        CriterionResult(
            "adjoint-traces-vanish",
            unimodular,
            "tr(ad x_i) = (" + ", ".join(str(t) for t in traces) + ")",
        ),
        CriterionResult(
            "action-in-special-linear-group",
            special,
            "det nu(gamma_i) = (" + ", ".join(str(x) for x in dets) + ")",
        ),
    )
    return CyReport(
        cy_R=unimodular,
        cy_smash=unimodular and special,
        cy_dimension=d,
        integral_character=det_char,
        hdet=det_char,
        nakayama_diag=tuple(one(m) for _ in range(d)),
        inner_witness=(one(m), action.group.identity()),
        criteria=criteria,
        notes=(
            "twisting automorphism is the identity (trivial coaction), "
            "inner with the identity group-like as witness",
        ),
    )
