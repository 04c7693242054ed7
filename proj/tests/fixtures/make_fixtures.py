#!/usr/bin/env python3
"""Regenerates the b-file style triangle fixtures from closed forms.

A092392: T(n,k) = C(2n-k, n).
A054445: partial row sums (from the right) of the Catalan triangle
         C(n,j) = C(2n-j, n-j) (j+1) / (n+1).

Each line is "index value", with the triangle read by rows.
"""
from math import comb

ROWS = 20


def write(name, entry):
    with open(f"{name}.txt", "w") as out:
        index = 0
        for n in range(ROWS + 1):
            for k in range(n + 1):
                out.write(f"{index} {entry(n, k)}\n")
                index += 1


def catalan_triangle(n, j):
    return comb(2 * n - j, n - j) * (j + 1) // (n + 1)


write("A092392", lambda n, k: comb(2 * n - k, n))
write("A054445", lambda n, k: sum(catalan_triangle(n, j) for j in range(k, n + 1)))
