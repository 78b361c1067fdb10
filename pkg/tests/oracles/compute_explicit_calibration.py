"""Pre-build oracle: error calibration of the level-1 explicit formulas.

Cantor string, geometric and spectral level; 20 log-uniform candidates in
[2,100] snapped to the geometric midpoint of their enclosing jump interval.
The explicit side is pure pole arithmetic (plus zeta values for the spectral
level, via the reference EM evaluator); the direct side is atom enumeration.
Freeze the printed maxima into frozen.py.
"""

import numpy as np

import emzeta

LN3 = np.log(3.0)
D = np.log(2.0) / LN3
P = 2.0 * np.pi / LN3
RES = 1.0 / (2.0 * LN3)
ZETA0 = -0.5


def cantor_atoms(X):
    xs, ws = [], []
    x, w = 3.0, 1.0
    while x <= X:
        xs.append(x)
        ws.append(w)
        x, w = x * 3.0, w * 2.0
    return np.array(xs), np.array(ws)


def count_geometric(x):
    xs, ws = cantor_atoms(x + 1.0)
    return float(np.sum(ws[xs < x]) + 0.5 * np.sum(ws[xs == x]))


def count_spectral(x):
    total = 0.0
    for n in range(1, int(x / 3.0) + 1):
        total += count_geometric(x / n)
    return total


def explicit_geometric(x, k_max):
    total = -1.0  # zeta_CS(0)
    for k in range(k_max + 1):
        om = complex(D, k * P)
        term = RES * np.exp(om * np.log(x)) / om
        total += term.real if k == 0 else 2.0 * term.real
    return total


def explicit_spectral(x, k_max, zvals):
    total = 1.0 * x + (-1.0) * ZETA0  # zeta_CS(1)*x + zeta_CS(0)*zeta(0)
    for k in range(k_max + 1):
        om = complex(D, k * P)
        term = RES * zvals[k] * np.exp(om * np.log(x)) / om
        total += term.real if k == 0 else 2.0 * term.real
    return total


def snapped_midpoints(jumps, lo, hi, count):
    edges = np.concatenate(([lo], jumps[(jumps > lo) & (jumps < hi)], [hi]))
    cands = np.geomspace(lo, hi, count)
    out = []
    for y in cands:
        i = np.searchsorted(edges, y, side="right") - 1
        i = min(max(i, 0), edges.size - 2)
        out.append(float(np.sqrt(edges[i] * edges[i + 1])))
    return np.array(out)


def main():
    k_list = [10, 25, 50, 100]
    zvals = emzeta.hurwitz_block(np.array([complex(D, k * P) for k in range(101)]),
                                 np.array([0.0]), 1024)[0]

    gj, _ = cantor_atoms(100.0)
    gmid = snapped_midpoints(gj, 2.0, 100.0, 20)
    print("geometric midpoints:", sorted(set(np.round(gmid, 6))))
    for K in k_list:
        errs = [abs(explicit_geometric(x, K) - count_geometric(x)) for x in gmid]
        print(f"  geometric k_max={K:4d}: max err = {max(errs)!r}")

    sj = np.unique(np.concatenate([n * gj[gj <= 100.0 / n]
                                   for n in range(1, 34)]))
    smid = snapped_midpoints(sj, 2.0, 100.0, 20)
    print("spectral midpoints:", sorted(set(np.round(smid, 6))))
    for K in k_list:
        errs = [abs(explicit_spectral(x, K, zvals) - count_spectral(x)) for x in smid]
        print(f"  spectral  k_max={K:4d}: max err = {max(errs)!r}")

    # contour residue cross-check at omega_0 and omega_3, radius 0.01
    for k in (0, 3):
        om = complex(D, k * P)
        th = (np.arange(64) + 0.5) * (2.0 * np.pi / 64)
        z = om + 0.01 * np.exp(1j * th)
        f = 3.0 ** (-z) / (1.0 - 2.0 * 3.0 ** (-z))
        quad = np.mean(f * 0.01 * np.exp(1j * th))
        print(f"contour residue k={k}: {quad.real!r} vs {RES!r} "
              f"(dev {abs(quad - RES):.2e})")


if __name__ == "__main__":
    main()
