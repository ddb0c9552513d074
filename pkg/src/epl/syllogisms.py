"""The four inheritance syllogisms as products of a slice and its converse.

    deduction        A A    (i,j),(j,k) -> (i,k)
    induction        A Â    (j,i),(k,i) -> (j,k)   shared object
    abduction        Â A    (i,j),(i,k) -> (j,k)   shared subject
    exemplification  Â Â    (i,j),(j,k) -> (k,i)

Induction and abduction would put every vertex's self-evidence on the
diagonal, so those two drop it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from epl.matrix import EvidenceMatrix, converse_transpose, matmul
from epl.network import EvidenceNetwork


class SyllogismKind(enum.Enum):
    DEDUCTION = "deduce"
    INDUCTION = "induce"
    ABDUCTION = "abduce"
    EXEMPLIFICATION = "exemplify"


@dataclass(frozen=True)
class InferenceResult:
    inferred: EvidenceMatrix
    kind: SyllogismKind
    label: str
    drop_diagonal_applied: bool = False


def _drop_diagonal(m: EvidenceMatrix) -> EvidenceMatrix:
    return EvidenceMatrix(m.n, ((ij, v) for ij, v in m.items() if ij[0] != ij[1]))


def deduce(net: EvidenceNetwork, p: str) -> InferenceResult:
    a = net.get_slice(p)
    return InferenceResult(matmul(a, a), SyllogismKind.DEDUCTION, p)


def induce(net: EvidenceNetwork, p: str) -> InferenceResult:
    a = net.get_slice(p)
    return InferenceResult(_drop_diagonal(matmul(a, converse_transpose(a))),
                           SyllogismKind.INDUCTION, p, True)


def abduce(net: EvidenceNetwork, p: str) -> InferenceResult:
    a = net.get_slice(p)
    return InferenceResult(_drop_diagonal(matmul(converse_transpose(a), a)),
                           SyllogismKind.ABDUCTION, p, True)


def exemplify(net: EvidenceNetwork, p: str) -> InferenceResult:
    c = converse_transpose(net.get_slice(p))
    return InferenceResult(matmul(c, c), SyllogismKind.EXEMPLIFICATION, p)


_DISPATCH = {
    SyllogismKind.DEDUCTION: deduce,
    SyllogismKind.INDUCTION: induce,
    SyllogismKind.ABDUCTION: abduce,
    SyllogismKind.EXEMPLIFICATION: exemplify,
}


def infer(net: EvidenceNetwork, kind: SyllogismKind | str, p: str) -> InferenceResult:
    return _DISPATCH[SyllogismKind(kind)](net, p)


def apply(net: EvidenceNetwork, r: InferenceResult) -> EvidenceNetwork:
    """Return a copy of ``net`` with ``r.inferred`` revised into its label."""
    return net.copy().merge_slice(r.label, r.inferred, "revise")
