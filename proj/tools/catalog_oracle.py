#!/usr/bin/env python3
"""Offline cross-check for catalog link diagrams.

Reads a catalog link file (PD-style crossings, counterclockwise edge order,
position 0 = incoming under-strand) and, for each relative orientation,
prints the linking number and the signature of V+V^T where V is the Seifert
matrix produced by spherogram's Seifert-surface algorithm.

spherogram's Seifert matrices use the opposite pushoff sign to ours (its
positive trefoil has signature +2); the script negates V so the printed
values follow the convention where the positive Hopf link has signature -1.

Usage: catalog_oracle.py data/catalog/links/hopf.json [--emit-seifert]
"""
import json
import sys

import numpy as np
import spherogram


def traverse(crossings, start_crossing, start_pos):
    """Edges of one component in travel order, leaving start_crossing via start_pos."""
    ends = {}
    for ci, c in enumerate(crossings):
        for p, e in enumerate(c["edges"]):
            ends.setdefault(e, []).append((ci, p))
    order, ci, p = [], start_crossing, start_pos
    while True:
        e = crossings[ci]["edges"][p]
        if order and e == order[0]:
            return order
        order.append(e)
        a, b = ends[e]
        ci, q = b if a == (ci, p) else a
        p = (q + 2) % 4


def oriented_pd(crossings, flags):
    """PD tuples with components reoriented per flags (+1 keep, -1 reverse)."""
    crossings = [dict(c, edges=list(c["edges"][1:] + c["edges"][:1]) if c.get("over", 1) == 0
                      else list(c["edges"])) for c in crossings]
    comps = []
    covered = set()
    for ci, c in enumerate(crossings):
        if c["edges"][0] not in covered:
            comp = traverse(crossings, ci, 2)
            covered.update(comp)
            comps.append(comp)
    comps.sort(key=min)
    relabel, next_label = {}, 0
    for k, comp in enumerate(comps):
        seq = comp if flags[k] > 0 else list(reversed(comp))
        for e in seq:
            relabel[e] = next_label
            next_label += 1
    pd = []
    for c in crossings:
        edges = [relabel[e] for e in c["edges"]]
        comp_idx = next(k for k, comp in enumerate(comps) if c["edges"][0] in comp)
        if flags[comp_idx] < 0:
            edges = edges[2:] + edges[:2]
        pd.append(tuple(edges))
    return pd


def signature(v):
    v = np.array(v, dtype=float)
    if v.size == 0:
        return 0
    ev = np.linalg.eigvalsh(v + v.T)
    return int((ev > 1e-9).sum() - (ev < -1e-9).sum())


def main():
    entry = json.load(open(sys.argv[1]))
    diagram = entry["diagram"]
    crossings = diagram["crossings"]
    for label, flags in (("fwd", [1, 1]), ("rev", [1, -1])):
        link = spherogram.Link(oriented_pd(crossings, flags))
        lk = link.linking_matrix()[0][1]
        v = [[-x for x in row] for row in link.seifert_matrix()]
        out = {"orientation": label, "linking_number": lk, "signature": signature(v)}
        if "--emit-seifert" in sys.argv:
            out["seifert"] = v
        print(json.dumps(out))


if __name__ == "__main__":
    main()
