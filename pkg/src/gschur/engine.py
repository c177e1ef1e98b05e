"""Core engine: generalized Schur polynomials by three determinantal routes.

A `GschurContext` fixes the number of variables n and a coefficient sequence
(a, b).  The recurrence family phi_i feeds the bialternant

    S_lam(x | a, b) = det[ phi_{lam_j + n - j}(x_i) ] / prod_{i<j} (x_i - x_j),

which is the defining route.  The same polynomials come out of a Jacobi-Trudi
determinant over shifted one-row families h_i^{(r)} and out of a Giambelli
determinant over hooks; keeping all three live is the point of the package,
since their agreement is the principal correctness check.

Contexts memoise phi values, one-row polynomials, shifted families and hooks.
They are cheap to create and are meant to be used by a single thread; the
polynomials they hand out are immutable and can be shared freely.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Callable

from .coeffseq import CoeffSeq, UniPolySeq
from .exactalg import (
    MultiPoly,
    PolyMatrix,
    determinant,
    exact_divide,
    vandermonde,
)
from .partitions import (
    Partition,
    check_partition,
    diagonal_rank,
    frobenius_coordinates,
    pad,
)


def shifted_family(
    base: Callable[[int], MultiPoly],
    a_of: Callable,
    b_of: Callable,
    offset,
    i: int,
    r: int,
    memo: dict,
) -> MultiPoly:
    """Generic driver for the shifted-family recursion.

    Computes the r-th shift of the family `base` under

        f_i^{(r+1)} = f_{i+1}^{(r)} + a(i + offset - 1) f_i^{(r)}
                                    + b(i + offset - 1) f_{i-1}^{(r)},

    with f^{(0)} = base.  `offset` is the variable count in the finite case
    and may be a rational parameter in the stable case; `a_of` / `b_of` just
    have to accept whatever `i + offset - 1` evaluates to.  Entries with
    i + r < 0 are identically zero for any base that vanishes below index 0,
    so they short-circuit without touching the coefficients.
    """
    if r < 0:
        raise ValueError("shift order must be nonnegative")
    if i + r < 0:
        zero = memo.get("_zero")
        if zero is None:
            zero = memo["_zero"] = _zero_like(base)
        return zero
    key = (i, r)
    got = memo.get(key)
    if got is not None:
        return got
    if r == 0:
        value = base(i)
    else:
        def prev(j: int) -> MultiPoly:
            return shifted_family(base, a_of, b_of, offset, j, r - 1, memo)

        arg = i + offset - 1
        value = prev(i + 1) + a_of(arg) * prev(i) + b_of(arg) * prev(i - 1)
    memo[key] = value
    return value


def _zero_like(base: Callable[[int], MultiPoly]) -> MultiPoly:
    return base(0) * 0


def monomial_symmetric(n: int, mu: Partition) -> MultiPoly:
    """The monomial symmetric polynomial m_mu in n variables.

    Sum of all distinct monomials whose exponent multiset is mu; zero when mu
    has more parts than variables.
    """
    mu = check_partition(mu)
    if len(mu) > n:
        return MultiPoly.zero(n)
    exps = pad(mu, n)
    terms = {e: Fraction(1) for e in set(permutations(exps))}
    return MultiPoly(n, terms)


def permutation_sign(perm) -> int:
    """Sign of a permutation given as a sequence of distinct indices."""
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


class GschurContext:
    """All determinantal routes for one (n, coefficient sequence) pair."""

    def __init__(self, n: int, seq: CoeffSeq):
        if n < 1:
            raise ValueError("need at least one variable")
        self.n = n
        self.seq = seq
        self.phi_seq = UniPolySeq(seq)
        self._phi_injected: dict[tuple[int, int], MultiPoly] = {}
        self._bialternant: dict[Partition, MultiPoly] = {}
        self._h_memo: dict[int, MultiPoly] = {}
        self._shift_memo: dict = {}
        self._hook_memo: dict[tuple[int, int], MultiPoly] = {}
        self._vdm: MultiPoly | None = None
        self._sub_context: "GschurContext | None" = None

    # -- building blocks ---------------------------------------------------

    def vandermonde(self) -> MultiPoly:
        if self._vdm is None:
            self._vdm = vandermonde(self.n)
        return self._vdm

    def phi_at_var(self, degree_index: int, var: int) -> MultiPoly:
        """phi_{degree_index}(x_var) as an n-variable polynomial."""
        key = (degree_index, var)
        got = self._phi_injected.get(key)
        if got is None:
            uni = self.phi_seq.phi(degree_index)
            terms = {}
            for (e,), c in uni.items():
                exps = tuple(e if i == var else 0 for i in range(self.n))
                terms[exps] = c
            got = MultiPoly(self.n, terms)
            self._phi_injected[key] = got
        return got

    # -- route 1: bialternant ---------------------------------------------

    def bialternant(self, lam) -> MultiPoly:
        """Quotient of the phi-alternant by the Vandermonde determinant.

        The partition is padded with zeros to n rows; row k carries
        phi_{lam_k + n - k} evaluated at each variable.  The division is
        exact because the numerator is alternating.
        """
        lam = check_partition(lam)
        if len(lam) > self.n:
            raise ValueError(f"partition {lam} needs more than {self.n} variables")
        got = self._bialternant.get(lam)
        if got is not None:
            return got
        padded = pad(lam, self.n)
        rows = [
            [self.phi_at_var(padded[k] + self.n - 1 - k, i) for i in range(self.n)]
            for k in range(self.n)
        ]
        num = determinant(PolyMatrix.from_rows(rows))
        value = exact_divide(num, self.vandermonde()) if self.n > 1 else num
        self._bialternant[lam] = value
        return value

    # -- route 2: Jacobi-Trudi --------------------------------------------

    def h(self, i: int) -> MultiPoly:
        """One-row polynomial S_(i); identically zero for negative i."""
        if i < 0:
            return MultiPoly.zero(self.n)
        got = self._h_memo.get(i)
        if got is None:
            got = self.bialternant((i,) if i else ())
            self._h_memo[i] = got
        return got

    def h_shift(self, i: int, r: int) -> MultiPoly:
        """The r-times shifted one-row family h_i^{(r)}.

        h^{(0)} is `h`; each shift applies the coefficient recursion with
        arguments offset by n - 1.  Values with i + r < 0 vanish identically,
        whatever negative-index extension the sequence carries.
        """
        return shifted_family(
            self.h, self.seq.a, self.seq.b, self.n, i, r, self._shift_memo
        )

    def _first_column_det(self, indices: list[int]) -> MultiPoly:
        """det[ h^{(c)}_{i_j} ] for given first-column subscripts i_j."""
        size = len(indices)
        if size == 0:
            return MultiPoly.one(self.n)
        rows = [
            [self.h_shift(i, c) for c in range(size)]
            for i in indices
        ]
        return determinant(PolyMatrix.from_rows(rows))

    def jacobi_trudi(self, lam) -> MultiPoly:
        """The l x l determinant det[ h^{(k-1)}_{lam_j - j + 1} ]."""
        lam = check_partition(lam)
        if len(lam) > self.n:
            raise ValueError(f"partition {lam} needs more than {self.n} variables")
        return self._first_column_det([lam[j] - j for j in range(len(lam))])

    # -- route 3: hooks and Giambelli -------------------------------------

    def hook(self, u: int, v: int) -> MultiPoly:
        """Hook-indexed polynomial S_(u|v) for arm u and leg v.

        For u >= 0 this is the polynomial of the hook partition
        (u+1, 1, ..., 1) with v ones, computed by its own first-column
        determinant.  For u < 0 the determinant collapses to a constant:
        (-1)^v when u + v = -1 and zero otherwise.
        """
        if v < 0:
            raise ValueError("leg length must be nonnegative")
        if u < 0:
            value = Fraction(-1) ** v if u + v == -1 else Fraction(0)
            return MultiPoly.constant(self.n, value)
        if v + 1 > self.n:
            raise ValueError(f"hook ({u}|{v}) needs more than {self.n} variables")
        key = (u, v)
        got = self._hook_memo.get(key)
        if got is None:
            got = self.jacobi_trudi((u + 1,) + (1,) * v)
            self._hook_memo[key] = got
        return got

    def delta_minor(self, i: int, j: int) -> MultiPoly:
        """Signed maximal minor of the j x (j+1) array of shifted values.

        Row t (for t = 1..j) of the array carries h^{(c)}_{1-t} across
        columns c = 0..j; the minor omits the i-th column (1-based) and
        carries the sign (-1)^(i-1).  For i > j + 1 the value is zero, and
        the j = 0 edge case is the empty determinant 1.
        """
        if i < 1 or j < 0:
            raise ValueError("need i >= 1 and j >= 0")
        if i > j + 1:
            return MultiPoly.zero(self.n)
        sign = Fraction(-1) ** (i - 1)
        if j == 0:
            return MultiPoly.constant(self.n, sign)
        cols = [c for c in range(j + 1) if c != i - 1]
        rows = [[self.h_shift(1 - t, c) for c in cols] for t in range(1, j + 1)]
        return sign * determinant(PolyMatrix.from_rows(rows))

    def giambelli(self, lam) -> MultiPoly:
        """Determinant of hooks over the Frobenius coordinates of lam."""
        lam = check_partition(lam)
        if len(lam) > self.n:
            raise ValueError(f"partition {lam} needs more than {self.n} variables")
        arms, legs = frobenius_coordinates(lam)
        r = diagonal_rank(lam)
        if r == 0:
            return MultiPoly.one(self.n)
        rows = [[self.hook(arms[i], legs[j]) for j in range(r)] for i in range(r)]
        return determinant(PolyMatrix.from_rows(rows))

    # -- expansions and identities ----------------------------------------

    def monomial_expansion(self, lam) -> dict[Partition, Fraction]:
        """Coefficients of the bialternant on monomial symmetric polynomials.

        Peels the graded-lex leading term repeatedly; for a symmetric
        polynomial every leading exponent is weakly decreasing, so each step
        removes one m_mu.  Termination is guaranteed because the leading
        monomial strictly decreases.
        """
        lam = check_partition(lam)
        work = self.bialternant(lam)
        out: dict[Partition, Fraction] = {}
        while not work.is_zero:
            e, c = work.leading_term()
            mu = check_partition(e)
            if pad(mu, self.n) != e:
                raise AssertionError(f"non-symmetric remainder with leading {e}")
            out[mu] = c
            work = work - c * monomial_symmetric(self.n, mu)
        return out

    def alternation(self, g: MultiPoly) -> MultiPoly:
        """Signed sum of g over all permutations of the variables."""
        if g.arity != self.n:
            raise ValueError("polynomial does not live in this context's ring")
        out = MultiPoly.zero(self.n)
        for perm in permutations(range(self.n)):
            image = g.apply_permutation(perm)
            if permutation_sign(perm) == 1:
                out = out + image
            else:
                out = out - image
        return out

    def lemma_residual(self, i: int, r: int) -> MultiPoly:
        """Defect of the variable-splitting identity for shifted families.

        Returns h_i^{(r)}(x_1..x_n) - x_1 h_i^{(r-1)}(x_1..x_n)
        - h_{i+1}^{(r-1)}(x_2..x_n), the last term computed in an (n-1)-variable
        context over the same sequence and then re-embedded.  Must vanish
        whenever r <= i + 2n - 2.
        """
        if r < 1:
            raise ValueError("the identity needs a positive shift order")
        if self.n < 2:
            raise ValueError("the identity needs at least two variables")
        if r > i + 2 * self.n - 2:
            raise ValueError("shift order exceeds the extension-independence bound")
        if self._sub_context is None:
            self._sub_context = GschurContext(self.n - 1, self.seq)
        x1 = MultiPoly.variable(self.n, 0)
        tail = self._sub_context.h_shift(i + 1, r - 1).prepend_variable()
        return self.h_shift(i, r) - x1 * self.h_shift(i, r - 1) - tail
