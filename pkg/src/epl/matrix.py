"""Sparse square matrices over evidence tuples.

Storage is row-major dict-of-dicts with every ``<0,0>`` entry dropped.
Matrices are values: every operation returns a new matrix.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Mapping, Tuple, Union

from epl.evidence import ONE, ZERO, EvidenceTuple

Index = Tuple[int, int]
TupleLike = Union[EvidenceTuple, Tuple[float, float]]


class DimensionError(ValueError):
    pass


class NotIndicatorError(ValueError):
    pass


def _as_tuple(v: TupleLike) -> EvidenceTuple:
    if isinstance(v, EvidenceTuple):
        return v
    return EvidenceTuple(*v)


class EvidenceMatrix:
    """An ``n x n`` sparse matrix of :class:`EvidenceTuple` entries."""

    __slots__ = ("_n", "_rows", "_nnz")

    def __init__(self, n: int, entries: Union[Mapping[Index, TupleLike], Iterable[Tuple[Index, TupleLike]]] = ()):
        if n < 0:
            raise DimensionError(f"dimension must be >= 0, got {n}")
        items = entries.items() if isinstance(entries, Mapping) else entries
        rows: dict[int, dict[int, EvidenceTuple]] = {}
        for (i, j), v in items:
            if not (0 <= i < n and 0 <= j < n):
                raise IndexError(f"entry ({i},{j}) outside {n}x{n}")
            t = _as_tuple(v)
            if t:
                rows.setdefault(i, {})[j] = t
            elif i in rows:
                rows[i].pop(j, None)
        self._init(n, rows)

    def _init(self, n: int, rows: dict[int, dict[int, EvidenceTuple]]) -> None:
        self._n = n
        self._rows = {i: r for i, r in rows.items() if r}
        self._nnz = sum(len(r) for r in self._rows.values())

    @classmethod
    def _from_rows(cls, n: int, rows: dict[int, dict[int, EvidenceTuple]]) -> EvidenceMatrix:
        # trusted path: caller guarantees indices in range and no zero tuples
        m = cls.__new__(cls)
        m._init(n, rows)
        return m

    @classmethod
    def zeros(cls, n: int) -> EvidenceMatrix:
        return cls._from_rows(n, {})

    @classmethod
    def from_dense(cls, rows: list[list[TupleLike]]) -> EvidenceMatrix:
        n = len(rows)
        return cls(n, (((i, j), v) for i, row in enumerate(rows) for j, v in enumerate(row)))

    @property
    def n(self) -> int:
        return self._n

    @property
    def nnz(self) -> int:
        return self._nnz

    def __len__(self) -> int:
        return self._nnz

    def __getitem__(self, ij: Index) -> EvidenceTuple:
        i, j = ij
        if not (0 <= i < self._n and 0 <= j < self._n):
            raise IndexError(f"entry ({i},{j}) outside {self._n}x{self._n}")
        return self._rows.get(i, {}).get(j, ZERO)

    def row(self, i: int) -> Mapping[int, EvidenceTuple]:
        return self._rows.get(i, {})

    def items(self) -> Iterator[Tuple[Index, EvidenceTuple]]:
        """Stored entries in ascending (row, col) order."""
        for i in sorted(self._rows):
            r = self._rows[i]
            for j in sorted(r):
                yield (i, j), r[j]

    def to_dict(self) -> dict[Index, EvidenceTuple]:
        return dict(self.items())

    def to_dense(self) -> list[list[EvidenceTuple]]:
        out = [[ZERO] * self._n for _ in range(self._n)]
        for (i, j), v in self.items():
            out[i][j] = v
        return out

    def resized(self, n: int) -> EvidenceMatrix:
        """Same entries embedded in a larger vertex space."""
        if n < self._n:
            raise DimensionError(f"cannot shrink {self._n}x{self._n} to {n}x{n}")
        return EvidenceMatrix._from_rows(n, {i: dict(r) for i, r in self._rows.items()})

    def is_indicator(self) -> bool:
        return all(v == ONE for r in self._rows.values() for v in r.values())

    def allclose(self, other: EvidenceMatrix, atol: float = 1e-9) -> bool:
        if self._n != other._n:
            return False
        keys = set(self.to_dict()) | set(other.to_dict())
        for i, j in keys:
            a, b = self[i, j], other[i, j]
            if not (math.isclose(a.w_pos, b.w_pos, rel_tol=0, abs_tol=atol)
                    and math.isclose(a.w_neg, b.w_neg, rel_tol=0, abs_tol=atol)):
                return False
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EvidenceMatrix):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._n, tuple(self.items())))

    def __add__(self, other: EvidenceMatrix) -> EvidenceMatrix:
        return entrywise_sum(self, other)

    def __matmul__(self, other: EvidenceMatrix) -> EvidenceMatrix:
        return matmul(self, other)

    @property
    def T(self) -> EvidenceMatrix:
        return transpose(self)

    def __repr__(self) -> str:
        body = ", ".join(f"({i},{j}):{v!r}" for (i, j), v in self.items())
        return f"EvidenceMatrix(n={self._n}, {{{body}}})"


def _check_same(a: EvidenceMatrix, b: EvidenceMatrix, op: str) -> None:
    if a.n != b.n:
        raise DimensionError(f"{op}: {a.n}x{a.n} vs {b.n}x{b.n}")


def matmul(a: EvidenceMatrix, b: EvidenceMatrix) -> EvidenceMatrix:
    """Evidential matrix product: ``(AB)[i,j] = sum_l A[i,l] * B[l,j]``.

    Each output entry is accumulated in ascending ``l`` so results are
    bit-reproducible.
    """
    _check_same(a, b, "matmul")
    out: dict[int, dict[int, EvidenceTuple]] = {}
    for i, arow in a._rows.items():
        acc: dict[int, list[float]] = {}
        for l in sorted(arow):
            ap, an = arow[l].w_pos, arow[l].w_neg
            brow = b._rows.get(l)
            if not brow:
                continue
            for j, blj in brow.items():
                bp, bn = blj.w_pos, blj.w_neg
                cell = acc.get(j)
                if cell is None:
                    cell = acc[j] = [0.0, 0.0]
                cell[0] += ap * bp
                cell[1] += ap * bn + an * bp + an * bn
        row = {j: EvidenceTuple(p, q) for j, (p, q) in acc.items() if p or q}
        if row:
            out[i] = row
    return EvidenceMatrix._from_rows(a.n, out)


def entrywise_sum(a: EvidenceMatrix, b: EvidenceMatrix) -> EvidenceMatrix:
    _check_same(a, b, "entrywise_sum")
    out = {i: dict(r) for i, r in a._rows.items()}
    for i, brow in b._rows.items():
        row = out.setdefault(i, {})
        for j, v in brow.items():
            row[j] = row[j] + v if j in row else v
    return EvidenceMatrix._from_rows(a.n, out)


def hadamard(a: EvidenceMatrix, b: EvidenceMatrix) -> EvidenceMatrix:
    """Entrywise product; used to filter a path matrix by a mask."""
    _check_same(a, b, "hadamard")
    out: dict[int, dict[int, EvidenceTuple]] = {}
    for i, arow in a._rows.items():
        brow = b._rows.get(i)
        if not brow:
            continue
        row = {}
        for j, v in arow.items():
            w = brow.get(j)
            if w is not None:
                p = v * w
                if p:
                    row[j] = p
        if row:
            out[i] = row
    return EvidenceMatrix._from_rows(a.n, out)


def transpose(a: EvidenceMatrix) -> EvidenceMatrix:
    """Plain transpose; negative evidence travels with the entry."""
    out: dict[int, dict[int, EvidenceTuple]] = {}
    for i, r in a._rows.items():
        for j, v in r.items():
            out.setdefault(j, {})[i] = v
    return EvidenceMatrix._from_rows(a.n, out)


def converse_transpose(a: EvidenceMatrix) -> EvidenceMatrix:
    """Transpose keeping only positive evidence: ``(i,j) <- <A[j,i].w+, 0>``."""
    out: dict[int, dict[int, EvidenceTuple]] = {}
    for i, r in a._rows.items():
        for j, v in r.items():
            if v.w_pos:
                out.setdefault(j, {})[i] = EvidenceTuple(v.w_pos, 0.0)
    return EvidenceMatrix._from_rows(a.n, out)


def identity(n: int) -> EvidenceMatrix:
    if n < 1:
        raise DimensionError(f"identity needs n >= 1, got {n}")
    return EvidenceMatrix._from_rows(n, {i: {i: ONE} for i in range(n)})


def clip(a: EvidenceMatrix) -> EvidenceMatrix:
    """Map every stored entry to ``<1,0>``, including purely negative ones."""
    return EvidenceMatrix._from_rows(a.n, {i: dict.fromkeys(r, ONE) for i, r in a._rows.items()})


def not_filter(a: EvidenceMatrix) -> EvidenceMatrix:
    """Complement of an indicator matrix."""
    for (i, j), v in a.items():
        if v != ONE:
            raise NotIndicatorError(f"not() needs an indicator matrix; entry ({i},{j}) is {v!r}")
    out = {}
    for i in range(a.n):
        present = a._rows.get(i, {})
        row = {j: ONE for j in range(a.n) if j not in present}
        if row:
            out[i] = row
    return EvidenceMatrix._from_rows(a.n, out)
