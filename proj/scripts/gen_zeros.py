#!/usr/bin/env python3
"""Generate zero fixture files for zeta and real primitive Dirichlet L-functions.

Zeros on the critical line are located as sign changes of the Hardy-type
function Z(t) = exp(i theta(t)) L(1/2 + it), evaluated in binary64 with an
Euler-Maclaurin tail, then refined with Brent's method. The grid is re-scanned
at half spacing to confirm no close pairs were missed, and the total count is
compared against the smooth main term theta(T)/pi.

Usage:
    gen_zeros.py --family zeta --height 10000 --out data/zeros/zeta.zeros
    gen_zeros.py --family chi_m4 --height 10000 --out data/zeros/chi_m4.zeros
"""

import argparse
import math
import sys

import numpy as np
from scipy.optimize import brentq
from scipy.special import loggamma, bernoulli

FAMILIES = {
    # name: (modulus, character values on residues 0..q-1, parity a)
    "zeta": (1, [1.0], 0),
    "chi_m4": (4, [0.0, 1.0, 0.0, -1.0], 1),
}

EM_TERMS = 12
_B = bernoulli(2 * EM_TERMS)


def theta(t, q, a):
    t = np.asarray(t, dtype=float)
    return 0.5 * t * math.log(q / math.pi) + np.imag(loggamma((0.5 + a + 1j * t) / 2.0))


def l_half_line(t, q, chi):
    """L(1/2 + it, chi) for a 1-d array t (all entries of similar size)."""
    t = np.asarray(t, dtype=float)
    s = 0.5 + 1j * t
    tmax = float(np.max(np.abs(t))) if t.size else 0.0
    n_blocks = int(math.ceil(0.5 * tmax)) + 20
    m = q * n_blocks
    n = np.arange(1, m + 1, dtype=float)
    weights = np.array([chi[int(k) % q] for k in range(1, m + 1)])
    keep = weights != 0.0
    n, weights = n[keep], weights[keep]
    logn = np.log(n)
    # direct part
    phase = np.outer(s, logn)
    total = np.exp(-phase) @ weights
    # Euler-Maclaurin tail for each residue class: (q w)^{-s} with w = N + a/q
    for r in range(1, q + 1):
        c = chi[r % q]
        if c == 0.0:
            continue
        w = n_blocks + r / q
        logw = math.log(w)
        wm = np.exp(-s * logw)
        tail = w * wm / (s - 1.0) + 0.5 * wm
        poch = s.copy()
        wpow = wm / w
        fact = 2.0
        for k in range(1, EM_TERMS + 1):
            tail = tail + _B[2 * k] / fact * poch * wpow
            poch = poch * (s + 2 * k - 1) * (s + 2 * k)
            wpow = wpow / (w * w)
            fact = fact * (2 * k + 1) * (2 * k + 2)
        total = total + c * np.exp(-s * math.log(q)) * tail
    return total


def hardy_z(t, q, chi, a):
    t = np.atleast_1d(np.asarray(t, dtype=float))
    vals = np.exp(1j * theta(t, q, a)) * l_half_line(t, q, chi)
    return vals


def scan(q, chi, a, lo, hi, h, chunk=256):
    grid = np.arange(lo, hi + h, h)
    vals = np.empty(grid.size)
    max_imag = 0.0
    for i in range(0, grid.size, chunk):
        z = hardy_z(grid[i:i + chunk], q, chi, a)
        vals[i:i + chunk] = z.real
        max_imag = max(max_imag, float(np.max(np.abs(z.imag) / (1.0 + np.abs(z.real)))))
    return grid, vals, max_imag


def sign_changes(grid, vals):
    idx = np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)[0]
    return [(grid[i], grid[i + 1]) for i in idx]


def refined_sign_changes(q, chi, a, grid, vals, threshold=1.0, fine=400):
    """Sign changes, plus close pairs hidden inside near-zero local extrema of |Z|."""
    brackets = sign_changes(grid, vals)
    mag = np.abs(vals)
    same = (np.sign(vals[:-2]) == np.sign(vals[1:-1])) & (np.sign(vals[1:-1]) == np.sign(vals[2:]))
    dip = (mag[1:-1] < mag[:-2]) & (mag[1:-1] < mag[2:]) & (mag[1:-1] < threshold) & same
    extra = []
    for i in np.nonzero(dip)[0] + 1:
        lo, hi = grid[i - 1], grid[i + 1]
        sub = np.linspace(lo, hi, fine)
        sv = hardy_z(sub, q, chi, a).real
        extra.extend(sign_changes(sub, sv))
    return sorted(brackets + extra)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--family", choices=sorted(FAMILIES), required=True)
    ap.add_argument("--height", type=float, required=True)
    ap.add_argument("--out", required=True)
    ap.add_argument("--spacing", type=float, default=None)
    args = ap.parse_args()

    q, chi, a = FAMILIES[args.family]
    height = args.height
    mean_gap = 2 * math.pi / max(1.0, math.log(q * height / (2 * math.pi)))
    h = args.spacing or mean_gap / 10.0

    grid, vals, imag1 = scan(q, chi, a, 0.0, height + 1.0, h)
    brackets = refined_sign_changes(q, chi, a, grid, vals)
    grid2, vals2, imag2 = scan(q, chi, a, h / 2, height + 1.0, h)
    brackets2 = refined_sign_changes(q, chi, a, grid2, vals2)
    if len(brackets) != len(brackets2):
        sys.exit(f"scan mismatch: {len(brackets)} vs {len(brackets2)} sign changes; reduce spacing")
    print(f"imag residue {max(imag1, imag2):.2e}; {len(brackets)} sign changes", file=sys.stderr)

    f = lambda t: float(hardy_z(t, q, chi, a).real[0])
    zeros = []
    for lo, hi in brackets:
        zeros.append(brentq(f, lo, hi, xtol=1e-13, rtol=1e-15, maxiter=200))
    zeros = [g for g in zeros if g <= height]

    # smooth count check: N(T) - theta(T)/pi stays bounded
    worst = 0.0
    offset = 1.0 if q == 1 else 0.0
    arr = np.array(zeros)
    for T in np.linspace(50.0, height, 200):
        cnt = np.searchsorted(arr, T, side="right")
        worst = max(worst, abs(cnt - (theta(T, q, a) / math.pi + offset)))
    print(f"{len(zeros)} zeros up to {height}; max |N(T) - smooth| = {worst:.3f}", file=sys.stderr)
    if worst > 3.0:
        sys.exit("count deviates from the smooth main term; dataset likely incomplete")

    with open(args.out, "w") as out:
        out.write(f"# source {args.family} zeros on the critical line, Euler-Maclaurin Z(t) sign changes, scripts/gen_zeros.py\n")
        out.write(f"# completeness {height:g}\n")
        out.write("# half\n")
        for g in zeros:
            out.write(f"{g:.12f}\n")


if __name__ == "__main__":
    main()
