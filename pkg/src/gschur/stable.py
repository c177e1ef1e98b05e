"""Stable layer: expansions on the classical Schur basis and their dependence
on the number of variables.

For a fixed partition and coefficient sequence, the coefficients of the
generalized polynomial on the classical Schur basis are rational functions of
the variable count.  This module computes those coefficients exactly at
integer counts (`schur_expand_at`), reconstructs the rational functions by
exact interpolation with surplus validation points (`interpolate_c`), and
evaluates the resulting "any-d" object at arbitrary rational parameter values
(`gschur_function`).  On top of that sit the parameterised Jacobi-Trudi
consistency check (`jt_infinite_check`) and the super-symmetric realisation
(`super_schur`).

The expensive step, expanding at a single integer count n, is done without
ever building n-variable polynomials: setting all but the first l variables
to zero turns each one-row polynomial into a confluent divided difference of
a shifted recurrence polynomial, which lives in l variables only.  Nothing in
the Schur expansion is lost because every partition in its support has at
most l rows.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Mapping, NamedTuple, Sequence

from .coeffseq import CoeffSeq, PoleError, UniPolySeq
from .engine import GschurContext, shifted_family
from .exactalg import MultiPoly, PolyMatrix, determinant, exact_divide
from .partitions import Partition, check_partition, pad

_F = Fraction


class InterpolationInconsistentError(Exception):
    """Samples cannot be explained by a rational function within the bound."""


class SuperAlphabet(NamedTuple):
    """Sizes of the two variable families of a super-symmetric realisation."""

    n: int
    m: int

    @property
    def superdimension(self) -> int:
        return self.n - self.m


# -- univariate helpers over Fraction coefficient lists ---------------------


def _trimmed(cs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in cs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _eval_coeffs(cs: Sequence[Fraction], x: Fraction) -> Fraction:
    total = _F(0)
    for c in reversed(cs):
        total = total * x + c
    return total


def _divmod_coeffs(num, den):
    num = list(num)
    den = list(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    q = [_F(0)] * max(0, len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(num) - len(den), -1, -1):
        factor = num[k + len(den) - 1] / lead
        if factor:
            q[k] = factor
            for j, d in enumerate(den):
                num[k + j] -= factor * d
    return _trimmed(q), _trimmed(num)


def _gcd_coeffs(a, b) -> tuple[Fraction, ...]:
    a = _trimmed(a)
    b = _trimmed(b)
    while b:
        _, r = _divmod_coeffs(a, b)
        a, b = b, r
    if not a:
        return ()
    lead = a[-1]
    return tuple(c / lead for c in a)


class RationalFunctionOfD:
    """Reduced rational function of one parameter, monic denominator.

    The constructor normalises: common factors are divided out and the
    denominator is scaled monic, so equal functions have equal coefficient
    tuples and `==` is semantic equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Sequence[Fraction], den: Sequence[Fraction]):
        num = _trimmed(num)
        den = _trimmed(den)
        if not den:
            raise ZeroDivisionError("denominator is the zero polynomial")
        if num:
            g = _gcd_coeffs(num, den)
            if len(g) > 1:
                num, _ = _divmod_coeffs(num, g)
                den, _ = _divmod_coeffs(den, g)
        else:
            den = (_F(1),)
        lead = den[-1]
        self.num = tuple(c / lead for c in num)
        self.den = tuple(c / lead for c in den)

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        bottom = _eval_coeffs(self.den, x)
        if bottom == 0:
            raise PoleError(x, f"rational function has a pole at d = {x}")
        return _eval_coeffs(self.num, x) / bottom

    @property
    def num_degree(self) -> int:
        return len(self.num) - 1

    @property
    def den_degree(self) -> int:
        return len(self.den) - 1

    @property
    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFunctionOfD):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.den == (_F(1),) and (
                self.num == (Fraction(other),) or (not self.num and other == 0)
            )
        return NotImplemented

    __hash__ = None

    def __repr__(self) -> str:
        from .exactalg import format_poly_text

        def fmt(cs):
            if not cs:
                return "0"
            poly = MultiPoly(1, {(i,): c for i, c in enumerate(cs)})
            return format_poly_text(poly, names=["d"])

        if self.den == (_F(1),):
            return fmt(self.num)
        return f"({fmt(self.num)})/({fmt(self.den)})"


# -- classical Schur polynomials (self-hosted, a = b = 0) -------------------

_classical_contexts: dict[int, GschurContext] = {}
_classical_schur_cache: dict[tuple[int, Partition], MultiPoly] = {}


def classical_schur(k: int, mu) -> MultiPoly:
    """Ordinary Schur polynomial in k variables; zero when mu has > k rows."""
    mu = check_partition(mu)
    if k == 0:
        return MultiPoly.one(0) if not mu else MultiPoly.zero(0)
    if len(mu) > k:
        return MultiPoly.zero(k)
    key = (k, mu)
    got = _classical_schur_cache.get(key)
    if got is None:
        ctx = _classical_contexts.get(k)
        if ctx is None:
            from .presets import schur as _schur_preset

            ctx = GschurContext(k, _schur_preset())
            _classical_contexts[k] = ctx
        got = ctx.bialternant(mu)
        _classical_schur_cache[key] = got
    return got


def expand_in_classical_schur(poly: MultiPoly) -> dict[Partition, Fraction]:
    """Triangular solve of a symmetric polynomial against classical Schurs.

    Repeatedly subtracts the classical Schur polynomial matching the current
    graded-lex leading term; since each Schur polynomial is its own leading
    monomial plus dominated terms, the loop is a back-substitution and always
    terminates.
    """
    out: dict[Partition, Fraction] = {}
    work = poly
    while not work.is_zero:
        e, c = work.leading_term()
        try:
            mu = check_partition(e)
        except ValueError as exc:
            raise ValueError("polynomial is not symmetric") from exc
        if pad(mu, poly.arity) != e:
            raise ValueError("polynomial is not symmetric")
        out[mu] = c
        work = work - c * classical_schur(poly.arity, mu)
    return out


# -- restriction by confluent divided differences ---------------------------


def _shift_univariate(f: MultiPoly, m: int) -> MultiPoly:
    """Drop the m lowest coefficients of a univariate polynomial.

    Sends sum_j c_j z^j to sum_{j >= m} c_j z^{j-m}, which is exactly the
    divided difference of f at m copies of the node 0.
    """
    if m == 0:
        return f
    return MultiPoly(1, {(e - m,): c for (e,), c in f.items() if e >= m})


def _divided_difference(f: MultiPoly, k: int) -> MultiPoly:
    """Divided difference of a univariate polynomial at k symbolic nodes."""
    if k < 1:
        raise ValueError("need at least one node")
    table = []
    for j in range(k):
        terms = {}
        for (e,), c in f.items():
            terms[tuple(e if i == j else 0 for i in range(k))] = c
        table.append(MultiPoly(k, terms))
    for t in range(1, k):
        nxt = []
        for j in range(k - t):
            denom = MultiPoly.variable(k, j) - MultiPoly.variable(k, j + t)
            nxt.append(exact_divide(table[j] - table[j + 1], denom))
        table = nxt
    return table[0]


def _restricted_h_base(seq: CoeffSeq, n: int, k: int) -> Callable[[int], MultiPoly]:
    """One-row polynomials of the n-variable ring with the last n-k variables
    set to zero, built directly in k variables."""
    phi_seq = UniPolySeq(seq)
    memo: dict[int, MultiPoly] = {}

    def base(i: int) -> MultiPoly:
        if i < 0:
            return MultiPoly.zero(k)
        got = memo.get(i)
        if got is None:
            shifted = _shift_univariate(phi_seq.phi(i + n - 1), n - k)
            got = _divided_difference(shifted, k)
            memo[i] = got
        return got

    return base


def schur_expand_at(lam, seq: CoeffSeq, n: int) -> dict[Partition, Fraction]:
    """Coefficients of S_lam(x | a, b) in n variables on classical Schurs.

    Requires n >= l(lam).  The answer is exact and its support is contained
    in the diagrams inside lam.
    """
    lam = check_partition(lam)
    l = len(lam)
    if n < l:
        raise ValueError(f"need at least {l} variables for {lam}")
    if l == 0:
        return {(): _F(1)}
    base = _restricted_h_base(seq, n, l)
    memo: dict = {}
    rows = [
        [
            shifted_family(base, seq.a, seq.b, n, lam[j] - j, c, memo)
            for c in range(l)
        ]
        for j in range(l)
    ]
    restricted = determinant(PolyMatrix.from_rows(rows))
    return expand_in_classical_schur(restricted)


# -- exact rational interpolation in the variable count ---------------------


def _kernel_vector(rows: list[list[Fraction]]) -> list[Fraction]:
    """One nonzero kernel vector of an underdetermined homogeneous system.

    Requires strictly more columns than the rank, which the callers guarantee
    by construction; the first free column is set to 1.
    """
    ncols = len(rows[0])
    m = [list(row) for row in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        sel = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if sel is None:
            continue
        m[rank], m[sel] = m[sel], m[rank]
        pv = m[rank][col]
        m[rank] = [v / pv for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(m):
            break
    free = next(c for c in range(ncols) if c not in pivots)
    vec = [_F(0)] * ncols
    vec[free] = _F(1)
    for row_idx, col in enumerate(pivots):
        vec[col] = -m[row_idx][free]
    return vec


def _fit_and_validate(
    xs: list[Fraction], ys: list[Fraction], degree_bound: int
) -> RationalFunctionOfD:
    """Fit P/Q with deg P, deg Q <= bound, then check everywhere.

    The fit solves the homogenised conditions P(x) - y Q(x) = 0 at the first
    2*bound + 1 points; with 2*bound + 2 unknown coefficients the kernel is
    never trivial, and any nonzero solution has Q not identically zero (a
    zero Q would force P to vanish at more points than its degree allows).
    The remaining points are pure validation.  A pole at a sample or a
    mismatched value raises InterpolationInconsistentError.
    """
    g = degree_bound
    node_count = 2 * g + 1
    rows = []
    for x, y in zip(xs[:node_count], ys[:node_count]):
        powers = [x ** j for j in range(g + 1)]
        rows.append(powers + [-y * x ** j for j in range(g + 1)])
    sol = _kernel_vector(rows)
    num = sol[: g + 1]
    den = sol[g + 1 :]
    if not _trimmed(den):
        raise InterpolationInconsistentError(
            f"no rational function of degree <= {g} fits the samples"
        )
    fit = RationalFunctionOfD(num, den)
    for x, y in zip(xs, ys):
        try:
            value = fit(x)
        except PoleError as exc:
            raise InterpolationInconsistentError(
                f"fitted function has a pole at sample {x}"
            ) from exc
        if value != y:
            raise InterpolationInconsistentError(
                f"fitted function disagrees with the sample at {x}"
            )
    return fit


def interpolate_c(
    lam, mu, seq: CoeffSeq, sample_ns: Sequence[int], degree_bound: int = 4
) -> RationalFunctionOfD:
    """Reconstruct one Schur-basis coefficient as a rational function of d.

    `sample_ns` must be distinct integers, each at least l(lam), and long
    enough for the degree bound plus at least two surplus validation points.
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    ns = [int(n) for n in sample_ns]
    if len(set(ns)) != len(ns):
        raise ValueError("sample points must be distinct")
    if any(n < len(lam) for n in ns):
        raise ValueError(f"every sample must be at least {len(lam)}")
    needed = 2 * degree_bound + 1
    if len(ns) < needed + 2:
        raise ValueError(
            f"need {needed} fitting samples plus two validation points, got {len(ns)}"
        )
    xs = [_F(n) for n in ns]
    ys = [schur_expand_at(lam, seq, n).get(mu, _F(0)) for n in ns]
    return _fit_and_validate(xs, ys, degree_bound)


def _sample_range(lam: Partition, degree_bound: int) -> list[int]:
    start = max(len(lam), 1)
    return list(range(start, start + 2 * degree_bound + 3))


def _interpolate_all(
    lam: Partition, seq: CoeffSeq, degree_bound: int
) -> dict[Partition, RationalFunctionOfD]:
    ns = _sample_range(lam, degree_bound)
    xs = [_F(n) for n in ns]
    expansions = [schur_expand_at(lam, seq, n) for n in ns]
    support = sorted(
        {mu for exp in expansions for mu in exp}, key=lambda p: (sum(p), p)
    )
    out: dict[Partition, RationalFunctionOfD] = {}
    for mu in support:
        ys = [exp.get(mu, _F(0)) for exp in expansions]
        out[mu] = _fit_and_validate(xs, ys, degree_bound)
    return out


_DEGREE_BOUND_CAP = 32


def interpolate_c_family(
    lam, seq: CoeffSeq, degree_bound: int = 4
) -> dict[Partition, RationalFunctionOfD]:
    """All Schur-basis coefficients of lam as rational functions of d.

    Starts at the given degree bound and doubles it (re-sampling at more
    integer counts) whenever the samples cannot be explained, up to a hard
    cap that turns runaway growth into an error.
    """
    lam = check_partition(lam)
    bound = degree_bound
    while True:
        try:
            return _interpolate_all(lam, seq, bound)
        except InterpolationInconsistentError:
            if 2 * bound > _DEGREE_BOUND_CAP:
                raise
            bound *= 2


def gschur_function(
    lam, seq: CoeffSeq, d_value, degree_bound: int = 4
) -> dict[Partition, Fraction]:
    """Schur-basis coefficients of the any-d object evaluated at d_value.

    Raises PoleError when some coefficient has a pole at d_value.  Zero
    coefficients are dropped.

    An integer d >= l(lam) is served by the finite-count expansion directly:
    a rational coefficient function agrees with the finite values at every
    admissible integer, so the answers coincide whenever interpolation would
    succeed, and the direct route stays meaningful for table sequences whose
    coefficients have no rational interpolant at all.
    """
    lam = check_partition(lam)
    d = Fraction(d_value)
    if not lam:
        return {(): _F(1)}
    if d.denominator == 1 and d >= len(lam):
        return {mu: c for mu, c in schur_expand_at(lam, seq, int(d)).items() if c}
    family = interpolate_c_family(lam, seq, degree_bound)
    out: dict[Partition, Fraction] = {}
    for mu, func in family.items():
        value = func(d)
        if value:
            out[mu] = value
    return out


def realize_expansion(expansion: Mapping[Partition, Fraction], k: int) -> MultiPoly:
    """Concrete k-variable polynomial of a Schur-basis coefficient map.

    Partitions with more than k rows contribute nothing, implementing the
    truncation of a symmetric function to finitely many variables.
    """
    out = MultiPoly.zero(k)
    for mu, c in sorted(expansion.items(), key=lambda kv: (sum(kv[0]), kv[0])):
        if c:
            out = out + c * classical_schur(k, mu)
    return out


def jt_infinite_check(
    lam, seq: CoeffSeq, d_value, n_eval: int, degree_bound: int = 4
) -> bool:
    """Does the parameterised Jacobi-Trudi determinant reproduce lam's object?

    Entries are one-row any-d objects shifted by the recursion whose
    coefficient arguments are offset by d - 1 (so the sequence must be closed
    form, evaluable off the integers).  Both sides are compared after
    truncation to n_eval variables, which is faithful because truncation is a
    ring homomorphism.
    """
    if not seq.is_closed_form:
        raise ValueError("the parameterised recursion needs a closed-form sequence")
    if n_eval < 1:
        raise ValueError("need at least one evaluation variable")
    lam = check_partition(lam)
    d = Fraction(d_value)
    l = len(lam)
    rhs = realize_expansion(gschur_function(lam, seq, d, degree_bound), n_eval)
    if l == 0:
        return rhs == MultiPoly.one(n_eval)
    top = lam[0] + l - 1
    realized: dict[int, MultiPoly] = {}
    for i in range(top + 1):
        coeffs = gschur_function((i,) if i else (), seq, d, degree_bound)
        realized[i] = realize_expansion(coeffs, n_eval)

    def base(i: int) -> MultiPoly:
        if i < 0 or i > top:
            return MultiPoly.zero(n_eval)
        return realized[i]

    memo: dict = {}
    rows = [
        [
            shifted_family(base, seq.a_at, seq.b_at, d, lam[j] - j, c, memo)
            for c in range(l)
        ]
        for j in range(l)
    ]
    lhs = determinant(PolyMatrix.from_rows(rows))
    return lhs == rhs


# -- super-symmetric realisation -------------------------------------------


def super_power_sum(n: int, m: int, k: int) -> MultiPoly:
    """p_k on the super alphabet: sum of x powers minus sum of y powers."""
    if k < 1:
        raise ValueError("power sums are indexed from 1")
    arity = n + m
    terms = {}
    for i in range(n):
        e = [0] * arity
        e[i] = k
        terms[tuple(e)] = _F(1)
    for j in range(m):
        e = [0] * arity
        e[n + j] = k
        terms[tuple(e)] = _F(-1)
    return MultiPoly(arity, terms)


def super_complete_homogeneous(n: int, m: int, upto: int) -> list[MultiPoly]:
    """h_0..h_upto on the super alphabet, generated by Newton's identities."""
    arity = n + m
    hs = [MultiPoly.one(arity)]
    ps = [None] + [super_power_sum(n, m, k) for k in range(1, upto + 1)]
    for k in range(1, upto + 1):
        acc = MultiPoly.zero(arity)
        for i in range(1, k + 1):
            acc = acc + ps[i] * hs[k - i]
        hs.append(acc / k)
    return hs


def _jt_from_rows(h_of: Callable[[int], MultiPoly], mu: Partition, arity: int) -> MultiPoly:
    l = len(mu)
    if l == 0:
        return MultiPoly.one(arity)
    rows = [[h_of(mu[i] - i + j) for j in range(l)] for i in range(l)]
    return determinant(PolyMatrix.from_rows(rows))


def super_schur(
    lam, seq: CoeffSeq, alphabet: SuperAlphabet, degree_bound: int = 4
) -> MultiPoly:
    """Super-symmetric realisation at superdimension d = n - m.

    Expands the any-d object at d = n - m and realises each classical Schur
    function on the super alphabet through its Jacobi-Trudi determinant over
    super complete homogeneous functions.  The first n variables are the x
    family, the remaining m the y family.
    """
    lam = check_partition(lam)
    n, m = alphabet
    if n < 0 or m < 0:
        raise ValueError("alphabet sizes must be nonnegative")
    arity = n + m
    coeffs = gschur_function(lam, seq, Fraction(n - m), degree_bound)
    depth = 0
    for mu in coeffs:
        if mu:
            depth = max(depth, mu[0] + len(mu) - 1)
    hs = super_complete_homogeneous(n, m, depth)

    def h_of(k: int) -> MultiPoly:
        if k < 0:
            return MultiPoly.zero(arity)
        return hs[k]

    out = MultiPoly.zero(arity)
    for mu, c in sorted(coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0])):
        out = out + c * _jt_from_rows(h_of, mu, arity)
    return out
