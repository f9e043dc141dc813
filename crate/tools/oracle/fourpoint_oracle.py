#!/usr/bin/env python3
"""Independent oracle for genus-zero one-variable (power singularity) correlators.

Computes the concave genus-0 three- and four-point values for W = x^r with
the full diagonal symmetry group, straight from the Bernoulli-polynomial
Chern-character expansion, and verifies the resulting numbers against the
WDVV associativity relations before freezing them into a golden file.

This script is deliberately independent of the Rust implementation: it is
run once, its output is committed under crates/core/tests/golden/, and the
acceptance suite compares the library against the frozen values.

Usage: python3 tools/oracle/fourpoint_oracle.py > crates/core/tests/golden/fourpoint_rspin.json
"""

import itertools
import json
import sys
from fractions import Fraction


def bernoulli_numbers(n):
    """B_0..B_n with the B_1 = -1/2 convention."""
    out = [Fraction(1)]
    for m in range(1, n + 1):
        acc = Fraction(0)
        c = 1  # C(m+1, j) built incrementally
        for j in range(m):
            acc += c * out[j]
            c = c * (m + 1 - j) // (j + 1)
        out.append(-acc / (m + 1))
    return out


BN = bernoulli_numbers(8)


def bernoulli_poly(n, x):
    """B_n(x) = sum C(n,k) B_k x^(n-k)."""
    acc = Fraction(0)
    c = 1
    for k in range(n + 1):
        acc += c * BN[k] * x ** (n - k)
        c = c * (n - k) // (k + 1)
    return acc


def three_point(r, m):
    """<e_{m1} e_{m2} e_{m3}> for W = x^r, all sectors narrow (m_i in 1..r-1)."""
    # selection rule: product of insertions must be j^(2g-2+n) = j
    if sum(m) % r != 1:
        return Fraction(0)
    deg = Fraction(1, r) - Fraction(sum(m), r)  # q*(2g-2+n) - sum Theta
    if deg != deg.numerator // deg.denominator or deg > -1:
        return Fraction(0)
    d = -Fraction(1 - Fraction(2, r)) + sum(Fraction(mi, r) - Fraction(1, r) for mi in m)
    if d == 0:
        return Fraction(1)
    return Fraction(0)


def four_point(r, m):
    """<e_{m1}..e_{m4}> for W = x^r via the degree-1 Chern character row.

    Narrow insertions m_i in 1..r-1.  Node multiplicities are solved from the
    branch-wise selection rule; Theta = 0 node entries use B_2(0) literally.
    """
    if sum(m) % r != (2 * 0 - 2 + 4) % r:
        return Fraction(0)
    deg = Fraction(2, r) - Fraction(sum(m), r)
    if deg.denominator != 1:
        return Fraction(0)
    d = -Fraction(r - 2, r) + sum(Fraction(mi - 1, r) for mi in m)
    if d != 1:
        return Fraction(0)  # rank 0 or rank > dim: top Chern class integral vanishes
    if deg > -1:
        raise ValueError("non-concave input %s" % (m,))

    q = Fraction(1, r)
    b2 = lambda x: bernoulli_poly(2, x)
    main = Fraction(1, 2) * (b2(q) - sum(b2(Fraction(mi, r)) for mi in m))
    # three boundary points of the four-pointed genus-0 space
    boundary = Fraction(0)
    for split in ((0, 1), (0, 2), (0, 3)):
        left = [m[i] for i in split]
        node = (1 - sum(left)) % r  # h1 h2 h_node = j on the left branch
        boundary += Fraction(1, 4) * (b2(Fraction(node, r)) + b2(Fraction((-node) % r, r)))
    return main + boundary


def wdvv_check(r, three, four):
    """Order-one WDVV: S(a,b,c,d,x) must be symmetric under b <-> c, where
    S = sum_e [F4(a,b,x,e) F3(e*,c,d) + F3(a,b,e) F4(e*,c,d,x)], e* = r - e."""
    labels = range(1, r)

    def s(a, b, c, d, x):
        acc = Fraction(0)
        for e in labels:
            ed = r - e
            if ed == r:
                continue
            acc += four[tuple(sorted((a, b, x, e)))] * three[tuple(sorted((ed, c, d)))]
            acc += three[tuple(sorted((a, b, e)))] * four[tuple(sorted((ed, c, d, x)))]
        return acc

    bad = 0
    for a, b, c, d, x in itertools.product(labels, repeat=5):
        if s(a, b, c, d, x) != s(a, c, b, d, x):
            bad += 1
    return bad


def main():
    out = {"description": "genus-0 concave correlators for power singularities x^r", "cases": []}
    for r in (3, 4, 5, 6, 7, 8):
        three = {}
        for m in itertools.combinations_with_replacement(range(1, r), 3):
            three[m] = three_point(r, list(m))
        four = {}
        for m in itertools.combinations_with_replacement(range(1, r), 4):
            four[m] = four_point(r, list(m))
        bad = wdvv_check(r, three, four)
        if bad:
            print(f"WDVV FAILED for r={r}: {bad} relations", file=sys.stderr)
            sys.exit(1)
        print(f"r={r}: WDVV ok over all quintuples", file=sys.stderr)
        for m, v in sorted(four.items()):
            if v != 0:
                out["cases"].append(
                    {"r": r, "genus": 0, "insertions": list(m), "value": f"{v.numerator}/{v.denominator}" if v.denominator != 1 else str(v.numerator)}
                )
    json.dump(out, sys.stdout, indent=1)
    print()


if __name__ == "__main__":
    main()
