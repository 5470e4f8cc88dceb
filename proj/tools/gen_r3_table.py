#!/usr/bin/env python3
"""Generate the oriented R3 compatibility table from explicit line arrangements.

Three directed lines meet pairwise near the origin. One line is moved across
the intersection point of the other two; reading each configuration off as
(order of passages along each strand, crossing signs) gives every pattern an
R3 move may be applied to. The move itself swaps each strand's two passages
and keeps all signs, which the script checks before writing the table.

Key bits (strands T over both, M in the middle, B under both):
  0  T meets M before B
  1  M meets T before B
  2  B meets T before M
  3  sign of the T/M crossing is +
  4  sign of the T/B crossing is +
  5  sign of the M/B crossing is +
"""
import itertools
import sys
from fractions import Fraction


def meet(p, d, q, e):
    # Parameter along line (p, d) where it meets line (q, e).
    det = d[0] * (-e[1]) - d[1] * (-e[0])
    rx, ry = q[0] - p[0], q[1] - p[1]
    return Fraction(rx * (-e[1]) - ry * (-e[0]), det)


def cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def key_of(lines, layer):
    # layer[k] is the index of the line playing role k (0 = T, 1 = M, 2 = B).
    T, M, B = (lines[i] for i in layer)
    bits = 0
    if meet(*T, *M) < meet(*T, *B): bits |= 1
    if meet(*M, *T) < meet(*M, *B): bits |= 2
    if meet(*B, *T) < meet(*B, *M): bits |= 4
    for bit, (over, under) in ((3, (T, M)), (4, (T, B)), (5, (M, B))):
        if cross(over[1], under[1]) > 0: bits |= 1 << bit
    return bits


def main():
    before, pairs = set(), set()
    for dirs in itertools.product((1, -1), repeat=3):
        for layer in itertools.permutations(range(3)):
            keys = []
            for c in (1, -1):
                lines = [((0, 0), (dirs[0], 0)),
                         ((0, 0), (0, dirs[1])),
                         ((c, 0), (-dirs[2], dirs[2]))]
                keys.append(key_of(lines, layer))
            a, b = keys
            if b != a ^ 0b111:
                sys.exit(f"unexpected R3 image: {a:06b} -> {b:06b}")
            before.update(keys)
            pairs.add(tuple(keys))
    out = ["// Generated by tools/gen_r3_table.py; do not edit.",
           "// Valid oriented R3 patterns, keyed as documented in the script.",
           f"inline constexpr unsigned char kR3Patterns[{len(before)}] = {{"]
    out.append("    " + ", ".join(str(k) for k in sorted(before)) + "};")
    text = "\n".join(out) + "\n"
    if len(sys.argv) > 1:
        with open(sys.argv[1], "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    main()
