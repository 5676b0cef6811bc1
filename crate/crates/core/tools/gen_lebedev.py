"""Emit octahedral orbit generators for the Lebedev rules in src/quad/lebedev_data.rs.

Orbit kinds (Lebedev-Laikov):
  A1 (1,0,0) 6pts, A2 (0,a,a) 12pts, A3 (a,a,a) 8pts,
  B (l,l,m) 24pts, C (p,q,0) 24pts, D (r,s,t) 48pts.
Weights are normalised to sum to 4*pi.
"""
import sys
import numpy as np
from scipy.integrate import lebedev_rule

SIZES = {6: 3, 14: 5, 26: 7, 38: 9, 50: 11, 74: 13, 86: 15, 110: 17, 146: 19, 170: 21,
         194: 23, 230: 25, 266: 27, 302: 29, 350: 31, 434: 35, 590: 41, 770: 47,
         974: 53, 1202: 59}


def classify(p, tol=1e-12):
    a = np.sort(np.abs(p))[::-1]  # descending
    zero = a < tol
    if zero[1] and zero[2]:
        return ("A1", 0.0, 0.0)
    if zero[2]:
        if abs(a[0] - a[1]) < tol:
            return ("A2", 0.0, 0.0)
        return ("C", a[0], a[1])
    if abs(a[0] - a[1]) < tol and abs(a[1] - a[2]) < tol:
        return ("A3", 0.0, 0.0)
    if abs(a[1] - a[2]) < tol:
        return ("B", a[1], a[0])  # (l,l,m) with l = repeated value
    if abs(a[0] - a[1]) < tol:
        return ("B", a[0], a[2])
    return ("D", a[0], a[1])


def main():
    out = []
    out.append("// Generated by tools/gen_lebedev.py; do not edit by hand.\n")
    out.append("use super::OrbitKind::{self, *};\n\n")
    out.append("/// Orbit kind and its generator parameters `(a, b, weight)`.\n")
    out.append("type Orbit = (OrbitKind, f64, f64, f64);\n\n")
    out.append("pub(super) static RULES: &[(usize, usize, &[Orbit])] = &[\n")
    for n, order in SIZES.items():
        x, w = lebedev_rule(order)
        assert x.shape[1] == n, (n, x.shape)
        w = w * (4 * np.pi / w.sum())
        seen = {}
        for i in range(n):
            kind, u, v = classify(x[:, i])
            key = (kind, round(u, 12), round(v, 12))
            if key not in seen:
                seen[key] = (kind, u, v, w[i])
        gens = sorted(seen.values(), key=lambda g: ("A1", "A2", "A3", "B", "C", "D").index(g[0]) * 10 + g[1])
        counts = {"A1": 6, "A2": 12, "A3": 8, "B": 24, "C": 24, "D": 48}
        assert sum(counts[g[0]] for g in gens) == n, n
        out.append(f"    ({n}, {order}, &[\n")
        for kind, u, v, wt in gens:
            out.append(f"        ({kind}, {float(u)!r}, {float(v)!r}, {float(wt)!r}),\n")
        out.append("    ]),\n")
    out.append("];\n")
    sys.stdout.write("".join(out))


if __name__ == "__main__":
    main()
