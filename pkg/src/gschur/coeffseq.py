"""Recurrence coefficient pairs (a, b) and the polynomial family they generate.

A coefficient sequence drives the monic three-term recurrence

    phi_{i+1}(z) = (z - a(i)) * phi_i(z) - b(i) * phi_{i-1}(z),

with phi_0 = 1 and phi_{-1} = 0, so phi_i is monic of degree i.  Sequences
come in two kinds: finite lookup tables, and closed forms that can also be
evaluated at non-integer rational arguments (needed by the stable layer's
shifted recursion).  Negative integer indices are governed by an extension
policy; the default extends by zero, and a custom table can be supplied to
exercise the fact that downstream determinants never depend on the choice.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .exactalg import MultiPoly

_ZERO = Fraction(0)


class PoleError(ZeroDivisionError):
    """A closed-form coefficient was evaluated at a pole.

    Carries the offending argument in `index` so callers can report exactly
    which evaluation failed.
    """

    def __init__(self, index, message: str | None = None):
        self.index = index
        super().__init__(message or f"coefficient sequence has a pole at {index}")


def _to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


class CoeffSeq:
    """A pair of coefficient sequences with a negative-index extension policy.

    Use `from_tables` for finite data and `from_functions` for closed forms.
    `a(i)` / `b(i)` take integer indices; `a_at(x)` / `b_at(x)` evaluate a
    closed form at an arbitrary rational and are rejected for table kind.
    """

    def __init__(
        self,
        *,
        kind: str,
        a_table: Sequence[Fraction] | None = None,
        b_table: Sequence[Fraction] | None = None,
        a_func: Callable[[Fraction], Fraction] | None = None,
        b_func: Callable[[Fraction], Fraction] | None = None,
        pad_zero: bool = False,
        negative_a: Mapping[int, Fraction] | None = None,
        negative_b: Mapping[int, Fraction] | None = None,
        name: str | None = None,
    ):
        if kind not in ("table", "closed-form"):
            raise ValueError(f"unknown coefficient sequence kind: {kind!r}")
        self.kind = kind
        self.name = name
        self.pad_zero = pad_zero
        self._a_table = tuple(_to_fraction(v) for v in a_table) if a_table is not None else None
        self._b_table = tuple(_to_fraction(v) for v in b_table) if b_table is not None else None
        self._a_func = a_func
        self._b_func = b_func
        self._neg_a = {int(k): _to_fraction(v) for k, v in (negative_a or {}).items()}
        self._neg_b = {int(k): _to_fraction(v) for k, v in (negative_b or {}).items()}
        for k in list(self._neg_a) + list(self._neg_b):
            if k >= 0:
                raise ValueError("custom extension tables may only hold negative indices")
        if kind == "table" and (self._a_table is None or self._b_table is None):
            raise ValueError("table kind needs both a and b tables")
        if kind == "closed-form" and (a_func is None or b_func is None):
            raise ValueError("closed-form kind needs both a and b callables")

    @classmethod
    def from_tables(
        cls,
        a_table: Sequence,
        b_table: Sequence,
        *,
        pad_zero: bool = False,
        negative_a: Mapping[int, Fraction] | None = None,
        negative_b: Mapping[int, Fraction] | None = None,
        name: str | None = None,
    ) -> "CoeffSeq":
        return cls(
            kind="table",
            a_table=[_to_fraction(v) for v in a_table],
            b_table=[_to_fraction(v) for v in b_table],
            pad_zero=pad_zero,
            negative_a=negative_a,
            negative_b=negative_b,
            name=name,
        )

    @classmethod
    def from_functions(
        cls,
        a_func: Callable[[Fraction], Fraction],
        b_func: Callable[[Fraction], Fraction],
        *,
        negative_a: Mapping[int, Fraction] | None = None,
        negative_b: Mapping[int, Fraction] | None = None,
        name: str | None = None,
    ) -> "CoeffSeq":
        return cls(
            kind="closed-form",
            a_func=a_func,
            b_func=b_func,
            negative_a=negative_a,
            negative_b=negative_b,
            name=name,
        )

    @property
    def is_closed_form(self) -> bool:
        return self.kind == "closed-form"

    def _table_lookup(self, table: tuple[Fraction, ...], i: int, which: str) -> Fraction:
        if i < len(table):
            return table[i]
        if self.pad_zero:
            return _ZERO
        raise IndexError(
            f"{which}({i}) is beyond the stored table of length {len(table)}; "
            "construct with pad_zero=True to extend by zeros"
        )

    def a(self, i: int) -> Fraction:
        """a(i) at an integer index, applying the negative-index extension."""
        if i < 0:
            return self._neg_a.get(i, _ZERO)
        if self.kind == "table":
            return self._table_lookup(self._a_table, i, "a")
        return self._a_func(Fraction(i))

    def b(self, i: int) -> Fraction:
        """b(i) at an integer index, applying the negative-index extension."""
        if i < 0:
            return self._neg_b.get(i, _ZERO)
        if self.kind == "table":
            return self._table_lookup(self._b_table, i, "b")
        return self._b_func(Fraction(i))

    def a_at(self, x: Fraction) -> Fraction:
        """Closed-form evaluation of a at an arbitrary rational argument."""
        if not self.is_closed_form:
            raise ValueError("a_at requires a closed-form coefficient sequence")
        return self._a_func(_to_fraction(x))

    def b_at(self, x: Fraction) -> Fraction:
        if not self.is_closed_form:
            raise ValueError("b_at requires a closed-form coefficient sequence")
        return self._b_func(_to_fraction(x))

    def with_negative(
        self, negative_a: Mapping[int, Fraction], negative_b: Mapping[int, Fraction]
    ) -> "CoeffSeq":
        """Same nonnegative-index data, different negative-index extension."""
        return CoeffSeq(
            kind=self.kind,
            a_table=self._a_table,
            b_table=self._b_table,
            a_func=self._a_func,
            b_func=self._b_func,
            pad_zero=self.pad_zero,
            negative_a=negative_a,
            negative_b=negative_b,
            name=self.name,
        )

    def table_dump(self, upto: int) -> dict:
        """First `upto` coefficients as strings, for counterexample reports."""

        def grab(get):
            out = []
            for i in range(upto):
                try:
                    out.append(str(get(i)))
                except (IndexError, PoleError):
                    out.append(None)
            return out

        return {"a": grab(self.a), "b": grab(self.b)}

    def __repr__(self) -> str:
        tag = self.name or self.kind
        return f"CoeffSeq({tag})"


class UniPolySeq:
    """Memoised generator of the monic recurrence family phi_i.

    phi_{-1} = 0 and phi_0 = 1 seed the recurrence; phi_i for i >= 1 is monic
    of degree i.  All values are univariate MultiPoly instances.
    """

    def __init__(self, seq: CoeffSeq):
        self.seq = seq
        self._memo: dict[int, MultiPoly] = {
            -1: MultiPoly.zero(1),
            0: MultiPoly.one(1),
        }

    def phi(self, i: int) -> MultiPoly:
        if i < -1:
            raise ValueError(f"phi is defined for indices >= -1, got {i}")
        got = self._memo.get(i)
        if got is not None:
            return got
        z = MultiPoly.variable(1, 0)
        top = max(self._memo)
        prev, prev2 = self._memo[top], self._memo[top - 1]
        for j in range(top, i):
            nxt = (z - self.seq.a(j)) * prev - self.seq.b(j) * prev2
            self._memo[j + 1] = nxt
            prev2, prev = prev, nxt
        return self._memo[i]


# -- JSON sequence files ----------------------------------------------------


def coeffseq_to_json(seq: CoeffSeq, upto: int) -> dict:
    """Table-style JSON object for a sequence, truncated at `upto` entries."""
    body = seq.table_dump(upto)
    if any(v is None for v in body["a"] + body["b"]):
        raise ValueError("sequence has unavailable entries below the requested length")
    negative = "zero"
    if seq._neg_a or seq._neg_b:
        negative = {
            "a": {str(k): str(v) for k, v in sorted(seq._neg_a.items())},
            "b": {str(k): str(v) for k, v in sorted(seq._neg_b.items())},
        }
    return {"a": body["a"], "b": body["b"], "negative": negative}


def coeffseq_from_json(obj: Mapping) -> CoeffSeq:
    """Build a table-kind sequence from the JSON file format.

    The format is ``{"a": [...], "b": [...], "negative": "zero"}`` with
    entries written as decimal-free rational strings; `negative` may instead
    be an object with "a" and "b" maps from negative indices to values.
    """
    if "a" not in obj or "b" not in obj:
        raise ValueError("sequence object needs 'a' and 'b' arrays")
    negative = obj.get("negative", "zero")
    neg_a: dict[int, Fraction] = {}
    neg_b: dict[int, Fraction] = {}
    if negative != "zero":
        if not isinstance(negative, Mapping):
            raise ValueError("'negative' must be \"zero\" or an object with a/b maps")
        neg_a = {int(k): _to_fraction(v) for k, v in negative.get("a", {}).items()}
        neg_b = {int(k): _to_fraction(v) for k, v in negative.get("b", {}).items()}
    return CoeffSeq.from_tables(
        obj["a"], obj["b"], negative_a=neg_a, negative_b=neg_b, name=obj.get("name")
    )


def load_coeffseq(path) -> CoeffSeq:
    with open(path, "r", encoding="utf-8") as fh:
        return coeffseq_from_json(json.load(fh))


def random_coeffseq(rng, length: int = 64, name: str | None = None) -> CoeffSeq:
    """Seeded random table sequence used by the verification sweeps.

    Coefficients are small rationals p/q with |p| <= 9 and 1 <= q <= 4, which
    keeps Fraction arithmetic fast while still exercising non-integer values.
    """

    def draw() -> Fraction:
        return Fraction(rng.randint(-9, 9), rng.randint(1, 4))

    a = [draw() for _ in range(length)]
    b = [draw() for _ in range(length)]
    return CoeffSeq.from_tables(a, b, name=name)


def random_polynomial_coeffseq(
    rng, degree: int = 1, name: str | None = None
) -> CoeffSeq:
    """Seeded closed-form sequence with random polynomial a and b.

    Polynomial coefficients are the generic choice for which the stable-layer
    expansion coefficients really are rational in the variable count, so this
    is the right randomised input for interpolation checks; a plain lookup
    table carries no such structure.
    """

    def draw_poly():
        cs = tuple(
            Fraction(rng.randint(-4, 4), rng.randint(1, 3))
            for _ in range(degree + 1)
        )

        def evaluate(x, coeffs=cs) -> Fraction:
            total = Fraction(0)
            for c in reversed(coeffs):
                total = total * x + c
            return total

        return evaluate

    return CoeffSeq.from_functions(draw_poly(), draw_poly(), name=name)
