#!/usr/bin/env python3
"""Write normalized Hecke eigenvalues of the discriminant form Delta.

tau(n) is read off exactly from q * prod (1 - q^n)^24, computed as (eta^3)^8
with Jacobi's identity eta^3 = sum (-1)^k (2k+1) q^{k(k+1)/2}. Output lines are
`p lambda_p` with lambda_p = tau(p) / p^{11/2} rounded to 17 significant digits.

Usage: gen_delta_hecke.py --limit 100000 --out data/lf/delta.hecke
"""

import argparse

import mpmath
import numpy as np


def tau_table(limit):
    n = limit  # coefficients of prod(1-q^k)^24 up to q^{limit-1}
    sparse = []
    k = 0
    while k * (k + 1) // 2 < n:
        sparse.append((k * (k + 1) // 2, (-1) ** k * (2 * k + 1)))
        k += 1
    cur = np.zeros(n, dtype=object)
    for e, c in sparse:
        cur[e] = c
    for _ in range(7):
        nxt = np.zeros(n, dtype=object)
        for e, c in sparse:
            nxt[e:] += c * cur[: n - e]
        cur = nxt
    # tau(m) = coefficient of q^{m-1}
    return cur


def primes_upto(n):
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(n ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.nonzero(sieve)[0]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--limit", type=int, default=100000)
    ap.add_argument("--out", required=True)
    args = ap.parse_args()
    coeffs = tau_table(args.limit + 1)
    assert coeffs[1] == -24 and coeffs[2] == 252 and coeffs[4] == 4830
    mpmath.mp.dps = 40
    with open(args.out, "w") as out:
        out.write("# Delta = q prod (1-q^n)^24, lambda_p = tau(p)/p^(11/2); scripts/gen_delta_hecke.py\n")
        for p in primes_upto(args.limit):
            tau = int(coeffs[p - 1])
            lam = mpmath.mpf(tau) / mpmath.power(p, mpmath.mpf(11) / 2)
            out.write(f"{p} {mpmath.nstr(lam, 17, min_fixed=-5, max_fixed=5)}\n")


if __name__ == "__main__":
    main()
