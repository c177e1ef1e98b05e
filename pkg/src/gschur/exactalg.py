"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial is a finite map from exponent tuples (one entry per ring
variable) to nonzero rational coefficients.  Canonical form is enforced on
every construction: coefficients are `fractions.Fraction`, zero terms are
never stored, so structural equality of term maps is polynomial equality.

The global monomial order is graded lexicographic (total degree first, then
lexicographic on the exponent tuple).  Leading-term extraction, the exact
division loop, serialisation and printing all follow it, which keeps every
output of the library deterministic.

Polynomials are immutable by convention: no method mutates `self`, and all
arithmetic returns fresh objects, so values can be shared freely between
threads once constructed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping, Sequence, Union

Exponent = tuple[int, ...]
Scalar = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class DivisionNotExactError(ArithmeticError):
    """No polynomial quotient exists for the requested exact division."""


def _coerce_scalar(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an int or Fraction, got {type(value).__name__}")


def grlex_key(exponents: Exponent) -> tuple[int, Exponent]:
    """Sort key realising the graded lexicographic monomial order."""
    return (sum(exponents), exponents)


class MultiPoly:
    """Immutable sparse polynomial over Q in a fixed number of variables.

    Construct with an explicit arity and a mapping from exponent tuples to
    coefficients; use the classmethod helpers for common shapes.  Variables
    are indexed from 0, so `variable(3, 0)` is x1 of a three-variable ring.
    """

    __slots__ = ("arity", "_terms")

    def __init__(self, arity: int, terms: Mapping[Exponent, Scalar] | None = None):
        if arity < 0:
            raise ValueError("arity must be nonnegative")
        clean: dict[Exponent, Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                e = tuple(int(v) for v in exps)
                if len(e) != arity:
                    raise ValueError(f"exponent tuple {e} does not match arity {arity}")
                if any(v < 0 for v in e):
                    raise ValueError(f"negative exponent in {e}")
                c = _coerce_scalar(coeff)
                if c:
                    clean[e] = c
        self.arity = arity
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, arity: int) -> "MultiPoly":
        return cls(arity)

    @classmethod
    def constant(cls, arity: int, value: Scalar) -> "MultiPoly":
        return cls(arity, {(0,) * arity: value})

    @classmethod
    def one(cls, arity: int) -> "MultiPoly":
        return cls.constant(arity, 1)

    @classmethod
    def variable(cls, arity: int, index: int) -> "MultiPoly":
        if not 0 <= index < arity:
            raise ValueError(f"variable index {index} out of range for arity {arity}")
        exps = tuple(1 if i == index else 0 for i in range(arity))
        return cls(arity, {exps: 1})

    @classmethod
    def monomial(cls, arity: int, exponents: Sequence[int], coeff: Scalar = 1) -> "MultiPoly":
        return cls(arity, {tuple(exponents): coeff})

    # -- inspection --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def items(self) -> Iterator[tuple[Exponent, Fraction]]:
        """Iterate over (exponent, coefficient) pairs in unspecified order."""
        return iter(self._terms.items())

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms sorted by the global monomial order, leading term first."""
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def coefficient(self, exponents: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exponents), _ZERO)

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.arity, _ZERO)

    @property
    def total_degree(self) -> int:
        """Maximum total degree of a term, or -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def degree_in(self, index: int) -> int:
        """Largest exponent of the given variable, or -1 for zero."""
        if not self._terms:
            return -1
        return max(e[index] for e in self._terms)

    def leading_term(self) -> tuple[Exponent, Fraction]:
        """Greatest term in the graded lexicographic order."""
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        e = max(self._terms, key=grlex_key)
        return e, self._terms[e]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- arithmetic --------------------------------------------------------

    def _check_same_ring(self, other: "MultiPoly") -> None:
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other):
        if isinstance(other, MultiPoly):
            self._check_same_ring(other)
            out = dict(self._terms)
            for e, c in other._terms.items():
                s = out.get(e, _ZERO) + c
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
            return self._wrap(out)
        if isinstance(other, (int, Fraction)):
            return self + MultiPoly.constant(self.arity, other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return self._wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, MultiPoly):
            self._check_same_ring(other)
            out = dict(self._terms)
            for e, c in other._terms.items():
                s = out.get(e, _ZERO) - c
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
            return self._wrap(out)
        if isinstance(other, (int, Fraction)):
            return self - MultiPoly.constant(self.arity, other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.arity, other) - self
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            self._check_same_ring(other)
            a, b = self._terms, other._terms
            if len(a) > len(b):
                a, b = b, a
            out: dict[Exponent, Fraction] = {}
            for ea, ca in a.items():
                for eb, cb in b.items():
                    e = tuple(x + y for x, y in zip(ea, eb))
                    s = out.get(e, _ZERO) + ca * cb
                    if s:
                        out[e] = s
                    else:
                        out.pop(e, None)
            return self._wrap(out)
        if isinstance(other, (int, Fraction)):
            c = _coerce_scalar(other)
            if not c:
                return MultiPoly.zero(self.arity)
            return self._wrap({e: k * c for e, k in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _coerce_scalar(other)
            if not c:
                raise ZeroDivisionError("division of a polynomial by zero")
            return self._wrap({e: k / c for e, k in self._terms.items()})
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = MultiPoly.one(self.arity)
        for _ in range(exponent):
            result = result * self
        return result

    def _wrap(self, terms: dict[Exponent, Fraction]) -> "MultiPoly":
        # Internal fast path: `terms` is already canonical.
        obj = object.__new__(MultiPoly)
        obj.arity = self.arity
        obj._terms = terms
        return obj

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.arity == other.arity and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(self.arity, other)
        return NotImplemented

    __hash__ = None  # mutable-free but we do not promise hashability

    # -- substitution and reshaping ---------------------------------------

    def bind(self, index: int, value: Union[Scalar, "MultiPoly"]) -> "MultiPoly":
        """Substitute a scalar or same-ring polynomial for one variable.

        The arity is preserved; after a scalar binding the variable simply no
        longer occurs.
        """
        if not 0 <= index < self.arity:
            raise ValueError(f"variable index {index} out of range")
        if isinstance(value, MultiPoly):
            self._check_same_ring(value)
            powers: list[MultiPoly] = [MultiPoly.one(self.arity)]
            out = MultiPoly.zero(self.arity)
            for e, c in self._terms.items():
                k = e[index]
                while len(powers) <= k:
                    powers.append(powers[-1] * value)
                rest = tuple(0 if i == index else v for i, v in enumerate(e))
                out = out + MultiPoly.monomial(self.arity, rest, c) * powers[k]
            return out
        v = _coerce_scalar(value)
        out_terms: dict[Exponent, Fraction] = {}
        for e, c in self._terms.items():
            scaled = c * v ** e[index]
            if not scaled:
                continue
            rest = tuple(0 if i == index else x for i, x in enumerate(e))
            s = out_terms.get(rest, _ZERO) + scaled
            if s:
                out_terms[rest] = s
            else:
                out_terms.pop(rest, None)
        return self._wrap(out_terms)

    def compose(self, args: Sequence["MultiPoly"]) -> "MultiPoly":
        """Evaluate the polynomial at a tuple of polynomials.

        `args` must supply one polynomial per variable, all in a common
        (possibly different) ring; the result lives in that ring.
        """
        if len(args) != self.arity:
            raise ValueError(f"expected {self.arity} arguments, got {len(args)}")
        if self.arity == 0:
            target = 0
        else:
            target = args[0].arity
            for g in args:
                if g.arity != target:
                    raise ValueError("composition arguments must share one ring")
        power_cache: dict[tuple[int, int], MultiPoly] = {}

        def power(i: int, k: int) -> MultiPoly:
            if k == 0:
                return MultiPoly.one(target)
            got = power_cache.get((i, k))
            if got is None:
                got = power(i, k - 1) * args[i]
                power_cache[(i, k)] = got
            return got

        out = MultiPoly.zero(target)
        for e, c in self._terms.items():
            term = MultiPoly.constant(target, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        """Exact value of the polynomial at a rational point."""
        if len(point) != self.arity:
            raise ValueError("point has the wrong number of coordinates")
        vals = [_coerce_scalar(v) for v in point]
        total = _ZERO
        for e, c in self._terms.items():
            term = c
            for v, k in zip(vals, e):
                if k:
                    term *= v ** k
            total += term
        return total

    def drop_first(self) -> "MultiPoly":
        """Forget an unused first variable, reindexing the rest down by one."""
        if self.arity == 0:
            raise ValueError("cannot drop a variable from an arity-0 ring")
        if self.degree_in(0) > 0:
            raise DivisionNotExactError("first variable occurs; cannot drop it")
        return MultiPoly(self.arity - 1, {e[1:]: c for e, c in self._terms.items()})

    def prepend_variable(self) -> "MultiPoly":
        """Reinterpret in a ring with one extra leading variable (x_i -> x_{i+1})."""
        return MultiPoly(self.arity + 1, {(0,) + e: c for e, c in self._terms.items()})

    def apply_permutation(self, perm: Sequence[int]) -> "MultiPoly":
        """Rename variable i to perm[i] for a permutation of 0..arity-1."""
        if sorted(perm) != list(range(self.arity)):
            raise ValueError("perm must be a permutation of the variable indices")
        out: dict[Exponent, Fraction] = {}
        for e, c in self._terms.items():
            ne = [0] * self.arity
            for i, k in enumerate(e):
                ne[perm[i]] = k
            out[tuple(ne)] = c
        return self._wrap(out)

    def __repr__(self) -> str:
        return f"MultiPoly({self.arity}: {format_poly_text(self)})"


# -- exact division --------------------------------------------------------


def exact_divide(numerator: MultiPoly, divisor: MultiPoly) -> MultiPoly:
    """Return q with numerator == q * divisor, or raise DivisionNotExactError.

    Runs the single-divisor division loop under the graded lexicographic
    order: the leading term of the running remainder must always be divisible
    by the leading term of the divisor, otherwise no exact quotient exists.
    """
    if divisor.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if numerator.arity != divisor.arity:
        raise ValueError("polynomials live in different rings")
    if numerator.is_zero:
        return MultiPoly.zero(numerator.arity)
    lead_e, lead_c = divisor.leading_term()
    div_items = list(divisor.items())
    rem = dict(numerator._terms)
    quot: dict[Exponent, Fraction] = {}
    while rem:
        re = max(rem, key=grlex_key)
        rc = rem[re]
        qe = tuple(a - b for a, b in zip(re, lead_e))
        if any(v < 0 for v in qe):
            raise DivisionNotExactError(
                f"leading term x^{re} not divisible by divisor leading term x^{lead_e}"
            )
        qc = rc / lead_c
        quot[qe] = qc
        for de, dc in div_items:
            key = tuple(a + b for a, b in zip(qe, de))
            s = rem.get(key, _ZERO) - qc * dc
            if s:
                rem[key] = s
            else:
                rem.pop(key, None)
    return MultiPoly(numerator.arity, quot)


# -- matrices and determinants ---------------------------------------------


class PolyMatrix:
    """Rectangular matrix of polynomials drawn from one ring."""

    __slots__ = ("rows", "cols", "arity", "_entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[MultiPoly]):
        if rows < 1 or cols < 1:
            raise ValueError("matrix dimensions must be positive")
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        arity = entries[0].arity
        for p in entries:
            if p.arity != arity:
                raise ValueError("matrix entries must share one ring")
        self.rows = rows
        self.cols = cols
        self.arity = arity
        self._entries = tuple(entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[MultiPoly]]) -> "PolyMatrix":
        r = len(rows)
        if r == 0:
            raise ValueError("matrix needs at least one row")
        c = len(rows[0])
        flat: list[MultiPoly] = []
        for row in rows:
            if len(row) != c:
                raise ValueError("ragged rows")
            flat.extend(row)
        return cls(r, c, flat)

    def __getitem__(self, key: tuple[int, int]) -> MultiPoly:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError("matrix index out of range")
        return self._entries[i * self.cols + j]

    def row(self, i: int) -> list[MultiPoly]:
        return [self[i, j] for j in range(self.cols)]

    def row_list(self) -> list[list[MultiPoly]]:
        return [self.row(i) for i in range(self.rows)]


def determinant(matrix: PolyMatrix, method: str = "cofactor") -> MultiPoly:
    """Determinant of a square PolyMatrix.

    `method` selects cofactor expansion with memoised minors (the default,
    intended for small matrices) or fraction-free Bareiss elimination, whose
    interior divisions are exact by construction.  Both return identical
    values; keeping both live lets tests cross-check one against the other.
    """
    if matrix.rows != matrix.cols:
        raise ValueError("determinant of a non-square matrix")
    rows = matrix.row_list()
    if method == "cofactor":
        return _det_cofactor(rows, matrix.arity)
    if method == "bareiss":
        return _det_bareiss(rows, matrix.arity)
    raise ValueError(f"unknown determinant method: {method!r}")


def _det_cofactor(rows: list[list[MultiPoly]], arity: int) -> MultiPoly:
    n = len(rows)
    memo: dict[int, MultiPoly] = {}

    def minor(mask: int) -> MultiPoly:
        # Determinant of the lower rows on the columns still in `mask`; the
        # row index is implied by how many columns remain.
        if mask == 0:
            return MultiPoly.one(arity)
        got = memo.get(mask)
        if got is not None:
            return got
        row = rows[n - mask.bit_count()]
        acc = MultiPoly.zero(arity)
        sign = 1
        rest = mask
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            entry = row[j]
            if not entry.is_zero:
                term = entry * minor(mask ^ low)
                acc = acc + term if sign == 1 else acc - term
            sign = -sign
            rest ^= low
        memo[mask] = acc
        return acc

    return minor((1 << n) - 1)


def _det_bareiss(rows: list[list[MultiPoly]], arity: int) -> MultiPoly:
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = MultiPoly.one(arity)
    for k in range(n - 1):
        if m[k][k].is_zero:
            pivot = next((r for r in range(k + 1, n) if not m[r][k].is_zero), None)
            if pivot is None:
                return MultiPoly.zero(arity)
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = exact_divide(num, prev)
            m[i][k] = MultiPoly.zero(arity)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def vandermonde(n: int) -> MultiPoly:
    """The alternant prod_{i<j} (x_i - x_j); the empty product 1 for n <= 1."""
    out = MultiPoly.one(n)
    for i in range(n):
        for j in range(i + 1, n):
            out = out * (MultiPoly.variable(n, i) - MultiPoly.variable(n, j))
    return out


# -- serialisation and printing --------------------------------------------


def poly_to_json_terms(poly: MultiPoly) -> list[dict]:
    """JSON-ready term list, sorted by the global monomial order (leading first)."""
    return [{"e": list(e), "c": str(c)} for e, c in poly.sorted_terms()]


def poly_from_json_terms(arity: int, data: Sequence[Mapping]) -> MultiPoly:
    terms: dict[Exponent, Fraction] = {}
    for item in data:
        e = tuple(int(v) for v in item["e"])
        c = Fraction(item["c"])
        if e in terms:
            raise ValueError(f"duplicate exponent tuple {e} in serialized polynomial")
        terms[e] = c
    return MultiPoly(arity, terms)


def format_poly_text(poly: MultiPoly, names: Sequence[str] | None = None) -> str:
    """Plain-text rendering such as ``x1^2 - 1``, deterministic term order."""
    if poly.is_zero:
        return "0"
    if names is None:
        names = [f"x{i + 1}" for i in range(poly.arity)]
    pieces: list[str] = []
    for pos, (e, c) in enumerate(poly.sorted_terms()):
        mono = "*".join(
            f"{names[i]}^{k}" if k > 1 else names[i] for i, k in enumerate(e) if k
        )
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if pos == 0:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(pieces)
