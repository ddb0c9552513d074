"""Evidence tuples and their (+, ·) algebra.

An evidence tuple ``<w+, w->`` counts positive and negative evidence for a
statement.  Weights are arbitrary nonnegative reals; normalization into
``[0, 1]`` happens only when a tuple is turned into a truth value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

DEFAULT_K = 1.0


@dataclass(frozen=True, slots=True)
class EvidenceTuple:
    w_pos: float = 0.0
    w_neg: float = 0.0

    def __post_init__(self) -> None:
        for name in ("w_pos", "w_neg"):
            v = getattr(self, name)
            if not math.isfinite(v) or v < 0:
                raise ValueError(f"{name} must be finite and >= 0, got {v!r}")
        # normalize ints and -0.0 so equal tuples hash and print identically
        object.__setattr__(self, "w_pos", float(self.w_pos) + 0.0)
        object.__setattr__(self, "w_neg", float(self.w_neg) + 0.0)

    def __add__(self, other: EvidenceTuple) -> EvidenceTuple:
        return evidence_sum(self, other)

    def __mul__(self, other: EvidenceTuple) -> EvidenceTuple:
        return evidence_product(self, other)

    def __bool__(self) -> bool:
        return self.w_pos != 0.0 or self.w_neg != 0.0

    @property
    def total(self) -> float:
        return self.w_pos + self.w_neg

    def __repr__(self) -> str:
        return f"<{self.w_pos:g},{self.w_neg:g}>"


ZERO = EvidenceTuple(0.0, 0.0)
ONE = EvidenceTuple(1.0, 0.0)


def evidence_sum(a: EvidenceTuple, b: EvidenceTuple) -> EvidenceTuple:
    """Revise: independent evidence is added componentwise."""
    return EvidenceTuple(a.w_pos + b.w_pos, a.w_neg + b.w_neg)


def evidence_product(a: EvidenceTuple, b: EvidenceTuple) -> EvidenceTuple:
    """Chain two pieces of evidence.

    Only positive x positive stays positive; any pairing that involves a
    negative component contributes negative evidence.
    """
    return EvidenceTuple(
        a.w_pos * b.w_pos,
        a.w_pos * b.w_neg + a.w_neg * b.w_pos + a.w_neg * b.w_neg,
    )


@dataclass(frozen=True, slots=True)
class TruthValue:
    """Frequency/confidence pair. ``f`` is None when there is no evidence."""

    f: Optional[float]
    c: float

    @property
    def defined(self) -> bool:
        return self.f is not None


def truth_value(a: EvidenceTuple, k: float = DEFAULT_K) -> TruthValue:
    if not (k >= 0 and math.isfinite(k)):
        raise ValueError(f"k must be finite and >= 0, got {k!r}")
    total = a.w_pos + a.w_neg
    if total == 0:
        return TruthValue(None, 0.0)
    return TruthValue(a.w_pos / total, total / (total + k))
