"""Exact rational linear algebra: sparse matrices, rank, kernel bases.

Every dimension computed by this package reduces to a rank or kernel of a
matrix over Q, so this module works only with exact arithmetic.  Scalars are
`fractions.Fraction` values (always in lowest terms, positive denominator);
elimination runs fraction-free over integers after clearing denominators
row by row.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Hashable, Iterable, Sequence

Rational = Fraction

# Below this many columns the elimination keeps rows as plain lists; sparse
# dict rows only pay off on wide matrices.
DENSE_COLUMN_LIMIT = 64


def _as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


@dataclass(frozen=True)
class RatMatrix:
    """Immutable sparse matrix over Q keyed by (row, col)."""

    rows: int
    cols: int
    entries: dict[tuple[int, int], Fraction]

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: dict) -> "RatMatrix":
        clean = {}
        for (r, c), v in entries.items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise ValueError(f"entry ({r}, {c}) outside a {rows}x{cols} matrix")
            q = _as_rational(v)
            if q:
                clean[(r, c)] = q
        return cls(rows, cols, clean)

    @classmethod
    def from_rows(cls, data: Sequence[Sequence]) -> "RatMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        entries = {}
        for r, row in enumerate(data):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for c, v in enumerate(row):
                q = _as_rational(v)
                if q:
                    entries[(r, c)] = q
        return cls(rows, cols, entries)

    def entry(self, r: int, c: int) -> Fraction:
        return self.entries.get((r, c), Fraction(0))

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self.cols, self.rows,
                         {(c, r): v for (r, c), v in self.entries.items()})

    def row_dict(self, r: int) -> dict[int, Fraction]:
        return {c: v for (rr, c), v in self.entries.items() if rr == r}


def mat_vec(m: RatMatrix, v: Sequence) -> tuple[Fraction, ...]:
    if len(v) != m.cols:
        raise ValueError("vector length does not match column count")
    out = [Fraction(0)] * m.rows
    for (r, c), a in m.entries.items():
        out[r] += a * _as_rational(v[c])
    return tuple(out)


def _integer_rows(m: RatMatrix) -> list[dict[int, int]]:
    # Row scaling changes neither rank nor kernel: clear denominators and
    # divide out the content so elimination stays in Z with small entries.
    rows: list[dict[int, Fraction]] = [{} for _ in range(m.rows)]
    for (r, c), v in m.entries.items():
        rows[r][c] = v
    out = []
    for row in rows:
        if not row:
            out.append({})
            continue
        mult = 1
        for v in row.values():
            mult = mult * v.denominator // gcd(mult, v.denominator)
        ints = {c: int(v * mult) for c, v in row.items()}
        content = 0
        for v in ints.values():
            content = gcd(content, v)
        out.append({c: v // content for c, v in ints.items()})
    return out


def _content_normalize(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def _echelon_sparse(rows: list[dict[int, int]], cols: int):
    pivots: list[tuple[int, dict[int, int]]] = []
    remaining = [r for r in rows if r]
    for col in range(cols):
        pivot_row = None
        for idx, row in enumerate(remaining):
            if row.get(col):
                pivot_row = remaining.pop(idx)
                break
        if pivot_row is None:
            continue
        p = pivot_row[col]
        updated = []
        for row in remaining:
            q = row.get(col)
            if q:
                new = dict(row)
                for c, v in pivot_row.items():
                    w = p * new.get(c, 0) - q * v
                    if w:
                        new[c] = w
                    else:
                        new.pop(c, None)
                if new:
                    updated.append(_content_normalize(new))
            else:
                updated.append(row)
        remaining = updated
        pivots.append((col, pivot_row))
        if not remaining:
            break
    return pivots


def _echelon_dense(rows: list[dict[int, int]], cols: int):
    dense = [[row.get(c, 0) for c in range(cols)] for row in rows if row]
    pivots: list[tuple[int, dict[int, int]]] = []
    for col in range(cols):
        pivot = None
        for idx, row in enumerate(dense):
            if row[col]:
                pivot = dense.pop(idx)
                break
        if pivot is None:
            continue
        p = pivot[col]
        nxt = []
        for row in dense:
            q = row[col]
            if q:
                new = [p * a - q * b for a, b in zip(row, pivot)]
                g = 0
                for v in new:
                    g = gcd(g, v)
                if g > 1:
                    new = [v // g for v in new]
                if any(new):
                    nxt.append(new)
            else:
                nxt.append(row)
        dense = nxt
        pivots.append((col, {c: v for c, v in enumerate(pivot) if v}))
        if not dense:
            break
    return pivots


def _eliminate(m: RatMatrix) -> list[tuple[int, dict[int, int]]]:
    rows = _integer_rows(m)
    if m.cols < DENSE_COLUMN_LIMIT:
        return _echelon_dense(rows, m.cols)
    return _echelon_sparse(rows, m.cols)


def rank(m: RatMatrix) -> int:
    return len(_eliminate(m))


def _primitive(vec: list[Fraction]) -> tuple[Fraction, ...]:
    # Integer entries, content 1, first nonzero entry positive.
    mult = 1
    for v in vec:
        mult = mult * v.denominator // gcd(mult, v.denominator)
    ints = [int(v * mult) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g:
        ints = [v // g for v in ints]
    for v in ints:
        if v:
            if v < 0:
                ints = [-w for w in ints]
            break
    return tuple(Fraction(v) for v in ints)


def kernel_basis(m: RatMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of {v : M v = 0}, one vector per free column, deterministic.

    Entries are integers in lowest terms (content 1, leading entry positive).
    """
    pivots = _eliminate(m)
    pivot_cols = [col for col, _ in pivots]
    pivot_set = set(pivot_cols)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for col, row in reversed(pivots):
            s = Fraction(0)
            for c, a in row.items():
                if c > col:
                    s += a * v[c]
            v[col] = -s / row[col]
        basis.append(_primitive(v))
    return basis


class RowReducer:
    """Online independence filter: feed rows, keep those that grow the rank.

    Rows are sparse mappings from hashable column labels to rationals.  The
    column order (and with it the whole run) is made deterministic by the
    sort key.
    """

    def __init__(self, sort_key: Callable[[Hashable], object] = lambda c: c):
        self._sort_key = sort_key
        self._pivots: dict[Hashable, dict[Hashable, Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def add(self, row: dict) -> bool:
        """Reduce `row` against accepted pivots; keep and report novelty."""
        work = {c: _as_rational(v) for c, v in row.items() if v}
        while work:
            lead = min(work, key=self._sort_key)
            pivot = self._pivots.get(lead)
            if pivot is None:
                coeff = work[lead]
                self._pivots[lead] = {c: v / coeff for c, v in work.items()}
                return True
            factor = work[lead]
            for c, v in pivot.items():
                w = work.get(c, Fraction(0)) - factor * v
                if w:
                    work[c] = w
                else:
                    work.pop(c, None)
        return False
