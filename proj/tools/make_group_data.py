#!/usr/bin/env python3
"""Regenerate the bundled group data files under data/groups/.

Each group is enumerated from a faithful realization (permutations, integer
or complex matrices), the multiplication table is read off by lookup, and
irreducible representations are written as explicit unitary matrices.
Entries within 1e-14 of a small set of algebraic constants are snapped to the
exact double nearest that constant.
"""

import argparse
import cmath
import itertools
import json
import math
import pathlib

import numpy as np

_CONSTANTS = [0.0, 0.5, 1.0, math.sqrt(3.0) / 2.0, math.sqrt(2.0) / 2.0]


def _snap(x):
    for c in _CONSTANTS:
        for s in (1.0, -1.0):
            if abs(x - s * c) < 1e-14:
                return s * c if c != 0.0 else 0.0
    return float(x)


def _matrix(m):
    m = np.atleast_2d(np.asarray(m, dtype=complex))
    return [[[_snap(z.real), _snap(z.imag)] for z in row] for row in m]


def _table(elements, compose, key):
    index = {key(g): i for i, g in enumerate(elements)}
    n = len(elements)
    mul = [[index[key(compose(a, b))] for b in elements] for a in elements]
    identity = next(i for i in range(n) if all(mul[i][j] == j for j in range(n)))
    inverse = [next(j for j in range(n) if mul[i][j] == identity) for i in range(n)]
    return mul, identity, inverse


def _document(name, labels, mul, identity, inverse, irreps):
    return {
        "name": name,
        "order": len(labels),
        "identity": identity,
        "labels": labels,
        "mul": mul,
        "inverse": inverse,
        "irreps": [
            {"label": label, "dim": int(np.atleast_2d(mats[0]).shape[0]),
             "matrices": [_matrix(m) for m in mats]}
            for label, mats in irreps
        ],
    }


def cyclic(n):
    elements = list(range(n))
    mul, identity, inverse = _table(elements, lambda a, b: (a + b) % n, lambda g: g)
    irreps = []
    for j in range(n):
        label = "triv" if j == 0 else f"chi{j}"
        irreps.append((label, [cmath.exp(2j * math.pi * j * k / n) for k in elements]))
    return _document(f"z{n}", [f"g{k}" for k in elements], mul, identity, inverse, irreps)


def symmetric3():
    # Permutations of {0,1,2}; (p*q)(i) = p(q(i)).
    elements = sorted(itertools.permutations(range(3)))
    compose = lambda p, q: tuple(p[q[i]] for i in range(3))
    mul, identity, inverse = _table(elements, compose, lambda g: g)

    def perm_matrix(p):
        m = np.zeros((3, 3))
        for i in range(3):
            m[p[i], i] = 1.0
        return m

    basis = np.array([[1.0, -1.0, 0.0], [1.0, 1.0, -2.0]]).T
    basis /= np.linalg.norm(basis, axis=0)
    irreps = [
        ("triv", [1.0 for _ in elements]),
        ("sign", [np.linalg.det(perm_matrix(p)) for p in elements]),
        ("std", [basis.T @ perm_matrix(p) @ basis for p in elements]),
    ]
    labels = ["(" + "".join(str(i) for i in p) + ")" for p in elements]
    return _document("s3", labels, mul, identity, inverse, irreps)


def dihedral4():
    r = np.array([[0, -1], [1, 0]])
    s = np.array([[1, 0], [0, -1]])
    words = [(a, b) for b in range(2) for a in range(4)]
    elements = [np.linalg.matrix_power(r, a) @ np.linalg.matrix_power(s, b) for a, b in words]
    key = lambda m: tuple(int(x) for x in m.flatten())
    mul, identity, inverse = _table(elements, lambda x, y: x @ y, key)
    irreps = []
    for e_r, e_s, label in [(1, 1, "triv"), (1, -1, "a1"), (-1, 1, "a2"), (-1, -1, "a3")]:
        irreps.append((label, [float(e_r ** a * e_s ** b) for a, b in words]))
    irreps.append(("std", elements))
    labels = [("r%d" % a if a else "e") + ("s" if b else "") for a, b in words]
    labels = [l if l != "es" else "s" for l in labels]
    return _document("d4", labels, mul, identity, inverse, irreps)


def quaternion8():
    qi = np.array([[1j, 0], [0, -1j]])
    qj = np.array([[0, 1], [-1, 0]], dtype=complex)
    words = [(a, b) for b in range(2) for a in range(4)]
    elements = [np.linalg.matrix_power(qi, a) @ np.linalg.matrix_power(qj, b) for a, b in words]
    key = lambda m: tuple((round(z.real), round(z.imag)) for z in m.flatten())
    mul, identity, inverse = _table(elements, lambda x, y: x @ y, key)
    irreps = []
    for e_i, e_j, label in [(1, 1, "triv"), (1, -1, "a1"), (-1, 1, "a2"), (-1, -1, "a3")]:
        irreps.append((label, [float(e_i ** a * e_j ** b) for a, b in words]))
    irreps.append(("std", elements))
    names = {0: "1", 1: "i", 2: "-1", 3: "-i"}
    labels = []
    for a, b in words:
        if b == 0:
            labels.append(names[a])
        else:
            labels.append({0: "j", 1: "k", 2: "-j", 3: "-k"}[a])
    return _document("q8", labels, mul, identity, inverse, irreps)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data" / "groups"))
    args = parser.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    groups = [cyclic(n) for n in range(2, 7)] + [symmetric3(), dihedral4(), quaternion8()]
    for g in groups:
        path = out / f"{g['name']}.json"
        path.write_text(json.dumps(g, indent=1) + "\n", encoding="utf-8")
        print(path)


if __name__ == "__main__":
    main()
