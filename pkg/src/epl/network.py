"""The evidence tensor: one sparse slice per predicate label over a shared vertex set."""

from __future__ import annotations

from typing import Iterator, Literal, Tuple, Union

from epl.evidence import EvidenceTuple
from epl.matrix import DimensionError, EvidenceMatrix

VertexRef = Union[int, str]


class UnknownVertexError(KeyError):
    pass


class EvidenceNetwork:
    """Vertices are interned to contiguous ids; every label shares them.

    Methods on this class mutate in place. ``get_slice`` hands out an
    immutable snapshot, so later mutations never leak into it.
    """

    def __init__(self) -> None:
        self._names: list[str] = []
        self._index: dict[str, int] = {}
        self._slices: dict[str, dict[Tuple[int, int], EvidenceTuple]] = {}

    @property
    def n(self) -> int:
        return len(self._names)

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(self._names)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(sorted(p for p, s in self._slices.items() if s))

    def name(self, index: int) -> str:
        return self._names[index]

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVertexError(name) from None

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def intern_vertex(self, name: str) -> int:
        if not isinstance(name, str) or not name:
            raise ValueError("vertex name must be a non-empty string")
        idx = self._index.get(name)
        if idx is None:
            idx = self._index[name] = len(self._names)
            self._names.append(name)
        return idx

    def _resolve(self, v: VertexRef) -> int:
        if isinstance(v, str):
            return self.index(v)
        if not 0 <= v < self.n:
            raise UnknownVertexError(v)
        return v

    def assert_evidence(self, s: VertexRef, p: str, o: VertexRef,
                        e: Union[EvidenceTuple, Tuple[float, float]]) -> EvidenceNetwork:
        """Revise edge ``(s, p, o)`` by adding ``e`` to whatever is stored."""
        if not p:
            raise ValueError("predicate label must be non-empty")
        i, j = self._resolve(s), self._resolve(o)
        if not isinstance(e, EvidenceTuple):
            e = EvidenceTuple(*e)
        sl = self._slices.setdefault(p, {})
        new = sl[(i, j)] + e if (i, j) in sl else e
        if new:
            sl[(i, j)] = new
        else:
            sl.pop((i, j), None)
        return self

    def add(self, s: str, p: str, o: str, w_pos: float = 1.0, w_neg: float = 0.0) -> EvidenceNetwork:
        """Intern both endpoints and assert evidence in one call."""
        i, j = self.intern_vertex(s), self.intern_vertex(o)
        return self.assert_evidence(i, p, j, EvidenceTuple(w_pos, w_neg))

    def get(self, s: VertexRef, p: str, o: VertexRef) -> EvidenceTuple:
        i, j = self._resolve(s), self._resolve(o)
        return self._slices.get(p, {}).get((i, j), EvidenceTuple())

    def get_slice(self, p: str) -> EvidenceMatrix:
        return EvidenceMatrix(self.n, self._slices.get(p, {}))

    def merge_slice(self, p: str, m: EvidenceMatrix,
                    mode: Literal["replace", "revise"] = "revise") -> EvidenceNetwork:
        if m.n != self.n:
            raise DimensionError(f"slice {p!r}: network has {self.n} vertices, matrix is {m.n}x{m.n}")
        if mode == "replace":
            self._slices[p] = m.to_dict()
        elif mode == "revise":
            self._slices[p] = (self.get_slice(p) + m).to_dict()
        else:
            raise ValueError(f"unknown merge mode {mode!r}")
        return self

    def triples(self) -> Iterator[Tuple[str, str, str, EvidenceTuple]]:
        """Stored entries as ``(s, p, o, tuple)`` sorted by (p, s, o) byte order."""
        rows = [
            (p, self._names[i], self._names[j], v)
            for p, sl in self._slices.items()
            for (i, j), v in sl.items()
        ]
        rows.sort(key=lambda r: (r[0].encode(), r[1].encode(), r[2].encode()))
        for p, s, o, v in rows:
            yield s, p, o, v

    def nnz(self, p: str | None = None) -> int:
        if p is not None:
            return len(self._slices.get(p, {}))
        return sum(len(s) for s in self._slices.values())

    def copy(self) -> EvidenceNetwork:
        net = EvidenceNetwork()
        net._names = list(self._names)
        net._index = dict(self._index)
        net._slices = {p: dict(s) for p, s in self._slices.items()}
        return net

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EvidenceNetwork):
            return NotImplemented
        return list(self.triples()) == list(other.triples())

    def __repr__(self) -> str:
        return f"EvidenceNetwork(n={self.n}, labels={list(self.labels)}, nnz={self.nnz()})"
