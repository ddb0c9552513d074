"""Rebuild the inheritance and authorship examples and print every inference.

    python scripts/reproduce_examples.py [--k 1.0] [--write-data DIR]
"""

import argparse
from pathlib import Path

from epl import EvidenceNetwork, evaluate, infer, parse, truth_value
from epl.quads import save_quads
from epl.syllogisms import SyllogismKind

INHERITANCE = [
    ("journalist", "writer"),
    ("scholar", "writer"),
    ("writer", "author"),
    ("writer", "person"),
]

# weights = number of listed evidence items (positive, negative)
AUTHORSHIP = [
    ("marko", "wrote", "this_article", 4, 4),
    ("joe", "wrote", "this_article", 5, 4),
    ("marko", "wrote", "path_article", 2, 2),
    ("this_article", "cites", "path_article", 2, 3),
    ("this_article", "cites", "nars_article", 3, 5),
]

RULES = {
    "self_citation": "wrote <- ((clip(wrote) . cites . T(wrote)) & I) + wrote",
    "coauthor": "coauthor <- ((wrote . T(wrote)) & not(I)) + coauthor",
}


def inheritance_network():
    net = EvidenceNetwork()
    for s, o in INHERITANCE:
        net.add(s, "isA", o)
    return net


def authorship_network():
    net = EvidenceNetwork()
    for row in AUTHORSHIP:
        net.add(*row)
    return net


def show(net, m, label, k):
    for (i, j), v in m.items():
        tv = truth_value(v, k)
        f = "undef" if tv.f is None else f"{tv.f:.3f}"
        print(f"    {net.name(i):>12} {label} {net.name(j):<12} {v!r:>10}  f={f} c={tv.c:.3f}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=float, default=1.0)
    ap.add_argument("--write-data", type=Path, help="also write the fixtures and rule files here")
    args = ap.parse_args()

    net = inheritance_network()
    print("inheritance network:")
    show(net, net.get_slice("isA"), "isA", args.k)
    for kind in SyllogismKind:
        r = infer(net, kind, "isA")
        print(f"\n{kind.name.lower()} ({r.inferred.nnz} new):")
        show(net, r.inferred, "isA", args.k)

    net = authorship_network()
    for name, src in RULES.items():
        (rule,) = parse(src).rules
        m = evaluate(rule.expr, net)
        print(f"\n{name}: {src}")
        show(net, m, rule.target, args.k)

    if args.write_data:
        args.write_data.mkdir(parents=True, exist_ok=True)
        save_quads(inheritance_network(), args.write_data / "inheritance.quads")
        save_quads(authorship_network(), args.write_data / "authorship.quads")
        for name, src in RULES.items():
            (args.write_data / f"{name}.rules").write_text(src + "\n")


if __name__ == "__main__":
    main()
