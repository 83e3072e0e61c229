"""Brute-force oracle for the bundled character tables.

Builds each small group as explicit permutations or matrices, enumerates
conjugacy classes, and computes the character table with Burnside's
algorithm (common eigenvectors of the class-multiplication matrices, in
floating point). Kernels, normal subgroups and solvability are then read
off by enumerating group elements, never from class data alone.

This module shares no code with ``codegree.chartab``; it is the
independent side of the corpus checks.

    python tools/group_oracle.py src/codegree/data/tables
"""

from __future__ import annotations

import itertools
import json
import sys
from pathlib import Path

import numpy as np


class FiniteGroup:
    def __init__(self, name, elements, mul, identity):
        self.name = name
        self.elements = list(elements)
        self.mul = mul
        self.identity = identity
        self.index = {g: i for i, g in enumerate(self.elements)}
        n = len(self.elements)
        self.table = np.empty((n, n), dtype=np.int64)
        for i, a in enumerate(self.elements):
            for j, b in enumerate(self.elements):
                self.table[i, j] = self.index[mul(a, b)]
        self.e = self.index[identity]
        self.inv = [int(np.where(self.table[i] == self.e)[0][0]) for i in range(n)]

    @property
    def order(self):
        return len(self.elements)

    def element_order(self, i):
        k, x = 1, i
        while x != self.e:
            x = self.table[x, i]
            k += 1
        return k

    def classes(self):
        seen, out = set(), []
        for i in range(self.order):
            if i in seen:
                continue
            cls = sorted({int(self.table[self.table[self.inv[g], i], g]) for g in range(self.order)})
            seen.update(cls)
            out.append(cls)
        out.sort(key=lambda c: (c[0] != self.e, self.element_order(c[0]), len(c), c[0]))
        return out

    def closure(self, gens):
        elems = {self.e}
        frontier = [self.e]
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = int(self.table[x, g])
                    if y not in elems:
                        elems.add(y)
                        new.append(y)
            frontier = new
        return elems

    def is_subgroup(self, s):
        return self.e in s and all(int(self.table[a, b]) in s for a in s for b in s)

    def commutator_subgroup(self, sub):
        comms = {int(self.table[self.table[self.inv[a], self.inv[b]], self.table[a, b]]) for a in sub for b in sub}
        return self.closure(sorted(comms))

    def solvable(self):
        cur = set(range(self.order))
        while len(cur) > 1:
            nxt = self.commutator_subgroup(cur)
            if len(nxt) == len(cur):
                return False
            cur = nxt
        return True


def perm_group(name, gens):
    n = len(gens[0])
    ident = tuple(range(n))

    def mul(a, b):  # apply b first, then a
        return tuple(a[b[i]] for i in range(n))

    elems = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in elems:
                    elems.add(y)
                    new.append(y)
        frontier = new
    return FiniteGroup(name, sorted(elems), mul, ident)


def matrix_group(name, dim, p, det_filter):
    def det(m):
        a = np.array(m, dtype=np.int64).reshape(dim, dim)
        return int(round(np.linalg.det(a))) % p

    def mul(a, b):
        x = np.array(a).reshape(dim, dim)
        y = np.array(b).reshape(dim, dim)
        return tuple(int(v) for v in ((x @ y) % p).flatten())

    elems = [m for m in itertools.product(range(p), repeat=dim * dim) if det_filter(det(m))]
    ident = tuple(int(i == j) for i in range(dim) for j in range(dim))
    return FiniteGroup(name, elems, mul, ident)


def quaternion_group():
    g = matrix_group("SL(2,3)", 2, 3, lambda d: d == 1)
    i = g.index[(0, 2, 1, 0)]
    j = g.index[(1, 1, 1, 2)]
    sub = sorted(g.closure([i, j]))
    elems = [g.elements[x] for x in sub]
    return FiniteGroup("Q8", elems, g.mul, g.identity)


def groups():
    return [
        perm_group("S3", [(1, 0, 2), (1, 2, 0)]),
        perm_group("D4", [(1, 2, 3, 0), (2, 1, 0, 3)]),
        quaternion_group(),
        perm_group("A4", [(1, 2, 0, 3), (1, 0, 3, 2)]),
        perm_group("S4", [(1, 2, 3, 0), (1, 0, 2, 3)]),
        matrix_group("SL(2,3)", 2, 3, lambda d: d == 1),
        perm_group("A5", [(1, 2, 0, 3, 4), (0, 1, 3, 4, 2), (1, 2, 3, 4, 0)]),
        matrix_group("PSL(2,7)", 3, 2, lambda d: d == 1),
    ]


def character_table(g):
    """Burnside's algorithm; returns (classes, list of complex value vectors)."""
    classes = g.classes()
    r = len(classes)
    cls_of = {}
    for ci, c in enumerate(classes):
        for x in c:
            cls_of[x] = ci
    sizes = np.array([len(c) for c in classes], dtype=float)
    # M[i][j, k] = #{(x, y) in C_i x C_j : x y = z} for a fixed z in C_k
    mats = np.zeros((r, r, r))
    for i, ci in enumerate(classes):
        for j, cj in enumerate(classes):
            for x in ci:
                for y in cj:
                    mats[i, j, cls_of[int(g.table[x, y])]] += 1
    for k in range(r):
        mats[:, :, k] /= sizes[k]
    rng = np.random.default_rng(12345)
    combo = sum(rng.normal() * mats[i] for i in range(r))
    vals, vecs = np.linalg.eig(combo)
    if len(set(np.round(vals, 6))) != r:
        raise RuntimeError(f"{g.name}: eigenvalues not separated")
    chars = []
    for col in range(r):
        w = vecs[:, col] / vecs[0, col]
        deg = np.sqrt(g.order / np.sum(np.abs(w) ** 2 / sizes))
        chars.append(deg * w / sizes)
    return classes, chars


def analyse(g):
    classes, chars = character_table(g)
    sizes = [len(c) for c in classes]
    out = []
    for chi in chars:
        degree = int(round(chi[0].real))
        assert abs(chi[0] - degree) < 1e-6
        # kernel by element enumeration: g with chi(g) == chi(1)
        kernel_elems = [x for ci, c in enumerate(classes) for x in c if abs(chi[ci] - degree) < 1e-6]
        assert g.is_subgroup(set(kernel_elems))
        rational = all(abs(v.imag) < 1e-6 and abs(v.real - round(v.real)) < 1e-6 for v in chi)
        out.append(
            {
                "degree": degree,
                "values": [int(round(v.real)) for v in chi] if rational else None,
                "kernel_classes": [ci for ci in range(len(classes)) if abs(chi[ci] - degree) < 1e-6],
                "kernel_order": len(kernel_elems),
                "codegree": (g.order // len(kernel_elems)) // degree,
                "codegree_exact": (g.order // len(kernel_elems)) % degree == 0,
            }
        )
    out.sort(key=lambda c: (c["degree"], -c["kernel_order"], c["kernel_classes"], c["values"] or []))
    for i, c in enumerate(out, 1):
        c["label"] = f"chi{i}"
    return classes, sizes, out


def normal_subgroup_orders(g, classes):
    """Orders of all normal subgroups, by trying every union of classes."""
    orders = []
    rest = classes[1:]
    for mask in range(1 << len(rest)):
        elems = set(classes[0])
        for i, c in enumerate(rest):
            if mask >> i & 1:
                elems.update(c)
        if g.is_subgroup(elems):
            orders.append(len(elems))
    return sorted(orders)


def spectrum(g):
    _, _, chars = analyse(g)
    return [(c["label"], c["degree"], c["codegree"]) for c in chars]


def table_json(g):
    classes, sizes, chars = analyse(g)
    entries = []
    for c in chars:
        entry = {"label": c["label"], "degree": c["degree"]}
        if c["values"] is not None:
            entry["values"] = c["values"]
        else:
            entry["kernel_classes"] = c["kernel_classes"]
        entries.append(entry)
    return {
        "name": g.name,
        "order": g.order,
        "class_sizes": sizes,
        "characters": entries,
        "solvable": g.solvable(),
    }


FILE_NAMES = {
    "S3": "s3",
    "D4": "d4",
    "Q8": "q8",
    "A4": "a4",
    "S4": "s4",
    "SL(2,3)": "sl2_3",
    "A5": "a5",
    "PSL(2,7)": "psl2_7",
}


def main(argv):
    target = Path(argv[1] if len(argv) > 1 else "src/codegree/data/tables")
    target.mkdir(parents=True, exist_ok=True)
    for g in groups():
        path = target / f"{FILE_NAMES[g.name]}.json"
        path.write_text(json.dumps(table_json(g), indent=1) + "\n", encoding="utf-8")
        print(f"{path}: order {g.order}, {len(g.classes())} classes")


if __name__ == "__main__":
    main(sys.argv)
