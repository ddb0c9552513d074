"""Tab-separated evidence quads.

File layout::

    # epl-quads v1
    marko<TAB>wrote<TAB>this_article<TAB>4<TAB>4

Columns are subject, predicate, object, w+, w-. Saved files are canonical:
records sorted by (predicate, subject, object) bytes and weights written in
the shortest form that parses back to the same double.
"""

from __future__ import annotations

import math
import os
from typing import Union

from epl.evidence import DEFAULT_K, EvidenceTuple, truth_value
from epl.network import EvidenceNetwork

HEADER = "# epl-quads v1"
TRUTH_COLUMNS = ("subject", "predicate", "object", "w_pos", "w_neg", "f", "c")

PathLike = Union[str, "os.PathLike[str]"]


class QuadFormatError(ValueError):
    def __init__(self, msg: str, path: str = "", line: int = 0):
        where = f"{path}:{line}: " if line else (f"{path}: " if path else "")
        super().__init__(where + msg)
        self.line = line


def format_weight(w: float) -> str:
    if w.is_integer() and abs(w) < 1e15:
        return str(int(w))
    return repr(w)


def _parse_weight(text: str, what: str, path: str, lineno: int) -> float:
    try:
        w = float(text)
    except ValueError:
        raise QuadFormatError(f"cannot parse {what} {text!r}", path, lineno) from None
    if not math.isfinite(w) or w < 0:
        raise QuadFormatError(f"{what} must be finite and >= 0, got {text!r}", path, lineno)
    return w


def parse_quads(text: str, path: str = "<string>") -> EvidenceNetwork:
    lines = text.split("\n")
    if not lines or lines[0].rstrip("\r") != HEADER:
        raise QuadFormatError(f"missing header {HEADER!r}", path, 1)
    net = EvidenceNetwork()
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.rstrip("\r")
        if not line.strip():
            continue
        cols = line.split("\t")
        if len(cols) != 5:
            raise QuadFormatError(f"expected 5 tab-separated columns, got {len(cols)}", path, lineno)
        s, p, o, wp, wn = cols
        if not (s and p and o):
            raise QuadFormatError("subject, predicate and object must be non-empty", path, lineno)
        e = EvidenceTuple(_parse_weight(wp, "w_pos", path, lineno),
                          _parse_weight(wn, "w_neg", path, lineno))
        net.add(s, p, o, e.w_pos, e.w_neg)
    return net


def load_quads(path: PathLike) -> EvidenceNetwork:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_quads(fh.read(), os.fspath(path))


def dump_quads(net: EvidenceNetwork) -> str:
    out = [HEADER]
    for s, p, o, v in net.triples():
        for name in (s, p, o):
            if "\t" in name or "\n" in name or "\r" in name:
                raise QuadFormatError(f"name {name!r} contains a tab or newline")
        out.append(f"{s}\t{p}\t{o}\t{format_weight(v.w_pos)}\t{format_weight(v.w_neg)}")
    return "\n".join(out) + "\n"


def save_quads(net: EvidenceNetwork, path: PathLike) -> None:
    text = dump_quads(net)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def report_truth(net: EvidenceNetwork, k: float = DEFAULT_K) -> str:
    rows = ["\t".join(TRUTH_COLUMNS)]
    for s, p, o, v in net.triples():
        tv = truth_value(v, k)
        f = "undef" if tv.f is None else f"{tv.f:.6f}"
        rows.append(f"{s}\t{p}\t{o}\t{v.w_pos:.6f}\t{v.w_neg:.6f}\t{f}\t{tv.c:.6f}")
    return "\n".join(rows) + "\n"
