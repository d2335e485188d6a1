#!/usr/bin/env python3
"""Regenerates data/catalog/*.txt.

Knot and link PD codes come from the KnotInfo/LinkInfo tables
(`pip install database-knotinfo`); LinkInfo's orientation-{0} entries are the
Knot Atlas PD codes. Composite knots, the (4,2) torus link and the
Reidemeister fixtures are built here from braid words and connected sums.
"""
import os
import re
import sys

OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data", "catalog")


def braid_pd(strands, word):
    counter = [strands + 1]

    def fresh():
        v = counter[0]
        counter[0] += 1
        return v

    cur = list(range(1, strands + 1))
    start = cur[:]
    pd = []
    for g in word:
        i = abs(g) - 1
        left, right = cur[i], cur[i + 1]
        nl, nr = fresh(), fresh()
        if g > 0:
            pd.append([right, nr, nl, left])
        else:
            pd.append([left, right, nr, nl])
        cur[i], cur[i + 1] = nl, nr
    ren = {cur[j]: start[j] for j in range(strands)}
    pd = [[ren.get(e, e) for e in t] for t in pd]
    labels = sorted({e for t in pd for e in t})
    idx = {e: k + 1 for k, e in enumerate(labels)}
    return [[idx[e] for e in t] for t in pd]


def mirror(pd):
    return [[t[0], t[3], t[2], t[1]] for t in pd]


def connected_sum(pd1, pd2):
    n1 = 2 * len(pd1)
    n2 = 2 * len(pd2)
    shifted = [[e + n1 for e in t] for t in pd2]
    last2 = n1 + n2

    def swap_incoming(pd, edge, nxt, new):
        for t in pd:
            for s in range(4):
                if t[s] == edge and t[(s + 2) % 4] == nxt:
                    t[s] = new
                    return
        raise ValueError("no incoming slot")

    a = [t[:] for t in pd1]
    b = [t[:] for t in shifted]
    swap_incoming(a, n1, 1, last2)
    swap_incoming(b, last2, n1 + 1, n1)
    return a + b


def pd_text(pd):
    return " ".join("X(%s)" % ",".join(str(e) for e in t) for t in pd)


def write(name, pd, components, tags, source, group=None, orientation=None):
    lines = ["name: " + name, "pd: " + pd, "components: %d" % components,
             "tags: " + " ".join(tags), "source: " + source]
    if group:
        lines.append("group: " + group)
    if orientation:
        lines.append("orientation: " + orientation)
    with open(os.path.join(OUT, name + ".txt"), "w") as f:
        f.write("\n".join(lines) + "\n")


def main():
    from database_knotinfo import link_list

    os.makedirs(OUT, exist_ok=True)
    write("0_1", "U(1)", 1, ["knot"], "trivial")
    knots = {}
    for r in link_list()[1:]:
        m = re.match(r"(\d+)_(\d+)$", r["name"])
        if m and 3 <= int(m.group(1)) <= 8:
            pd = eval(r["pd_notation"])
            knots[r["name"]] = pd
            write(r["name"], pd_text(pd), 1, ["knot"], "KnotInfo")
    for r in link_list(proper_links=True)[1:]:
        if r["crossing_number"] and int(r["crossing_number"]) <= 7 and r["orientation"] in ("{0}", "{0,0}"):
            pd = eval(r["pd_notation_vector"].replace("{", "[").replace("}", "]"))
            comps = len(eval(r["linking_matrix"].replace("{", "[").replace("}", "]")))
            write(r["name_unoriented"], pd_text(pd), comps, ["link"], "LinkInfo/Knot Atlas")

    trefoil = knots["3_1"]
    write("SK", pd_text(connected_sum(trefoil, mirror(trefoil))), 1, ["composite"], "3_1 # mirror(3_1)")
    write("GK", pd_text(connected_sum(trefoil, trefoil)), 1, ["composite"], "3_1 # 3_1")
    write("T4_2", pd_text(braid_pd(2, [1, 1, 1, 1])), 2, ["torus"], "closure of s1^4")

    fixtures = [
        ("fix_trefoil_braid", 2, [1, 1, 1], "trefoil", "closure of s1^3"),
        ("fix_trefoil_kink_pos", 3, [1, 1, 1, 2], "trefoil", "s1^3 s2 (positive stabilisation)"),
        ("fix_trefoil_kink_neg", 3, [1, 1, 1, -2], "trefoil", "s1^3 s2^-1 (negative stabilisation)"),
        ("fix_trefoil_r2", 2, [1, 1, 1, 1, -1], "trefoil", "s1^4 s1^-1"),
        ("fix_figure8_braid", 3, [1, -2, 1, -2], "figure8", "closure of s1 s2^-1 s1 s2^-1"),
        ("fix_figure8_flip", 3, [2, -1, 2, -1], "figure8", "closure of s2 s1^-1 s2 s1^-1"),
        ("fix_hopf_braid", 2, [1, 1], "hopf", "closure of s1^2"),
        ("fix_hopf_kink_pos", 3, [1, 1, 2], "hopf", "s1^2 s2"),
        ("fix_hopf_kink_neg", 3, [1, 1, -2], "hopf", "s1^2 s2^-1"),
        ("fix_r3_pos_a", 3, [1, 2, 1, 1], "r3_pos", "s1 s2 s1 . s1"),
        ("fix_r3_pos_b", 3, [2, 1, 2, 1], "r3_pos", "s2 s1 s2 . s1"),
        ("fix_r3_mixed_a", 3, [1, 2, -1, 2], "r3_mixed", "s1 s2 s1^-1 . s2"),
        ("fix_r3_mixed_b", 3, [-2, 1, 2, 2], "r3_mixed", "s2^-1 s1 s2 . s2"),
        ("fix_r3_neg_a", 3, [-1, -2, -1, 2, 2], "r3_neg", "s1^-1 s2^-1 s1^-1 . s2^2"),
        ("fix_r3_neg_b", 3, [-2, -1, -2, 2, 2], "r3_neg", "s2^-1 s1^-1 s2^-1 . s2^2"),
    ]
    for name, strands, word, group, src in fixtures:
        pd = braid_pd(strands, word)
        comps = count_components(pd)
        write(name, pd_text(pd), comps, ["fixture"], src, group)
    write("fix_unknot_r2", "X(4,1,1,2) X(3,3,4,2)", 1, ["fixture"], "circle folded over itself", "unknot")
    write("fix_unknot_plain", "U(1)", 1, ["fixture"], "round circle", "unknot")
    write("fix_unlink_r2", "X(4,1,3,2) X(3,1,4,2)", 2, ["fixture"], "two overlapping circles", "unlink2")
    write("fix_unlink_split", "U(2)", 2, ["fixture"], "two disjoint circles", "unlink2")
    write("fix_figure8_table", pd_text(knots["4_1"]), 1, ["fixture"], "KnotInfo 4_1", "figure8")


def count_components(pd):
    parent = {}

    def find(e):
        parent.setdefault(e, e)
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for t in pd:
        for s in (0, 1):
            parent[find(t[s])] = find(t[s + 2])
    return len({find(e) for t in pd for e in t})


if __name__ == "__main__":
    sys.exit(main())
