#!/usr/bin/env python3
"""Regenerates the number-field fixtures under tests/data.

Field discriminants come from sympy's round-two integral basis and the
Galois groups from sympy.polys.numberfields.galoisgroups. The output is
committed; rerunning is only needed when the fixture set changes.
"""
import json
import math
import os
import sys

from sympy import Poly, symbols, discriminant
from sympy.polys.numberfields.basis import round_two
from sympy.polys.numberfields.galoisgroups import galois_group

x = symbols("x")
HERE = os.path.dirname(os.path.abspath(__file__))


def is_square(n):
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def poly_label(coeffs):
    terms = []
    deg = len(coeffs) - 1
    for k in range(deg, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if k == 0:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}{mono}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += sign + body
    return out


def field_data(coeffs):
    T = Poly(list(reversed(coeffs)), x)
    if not T.is_irreducible:
        return None
    _, dk = round_two(T)
    return int(discriminant(T)), int(dk)


def cubic_fields(limit, count):
    best = {}
    for a in (0, 1, -1):
        for b in range(-12, 13):
            for c in range(-24, 25):
                coeffs = [c, b, a, 1]
                T = Poly(list(reversed(coeffs)), x)
                pd = int(discriminant(T))
                if pd == 0 or is_square(pd):
                    continue
                if abs(pd) > limit * 400:
                    continue
                data = field_data(coeffs)
                if data is None:
                    continue
                pd, dk = data
                if abs(dk) > limit:
                    continue
                index2 = pd // dk
                key = dk
                cand = (index2, sum(abs(t) for t in coeffs), coeffs)
                if key not in best or cand < best[key]:
                    best[key] = cand
    keys = sorted(best, key=lambda d: (abs(d), d))[:count]
    return [(best[d][2], d) for d in keys]


def sn_fields(degree, count, coeff_range):
    import itertools
    out = {}
    group_names = {4: "S4", 5: "S5"}
    for tail in itertools.product(coeff_range, repeat=degree - 1):
        coeffs = list(tail) + [0, 1]
        if coeffs[0] == 0:
            continue
        T = Poly(list(reversed(coeffs)), x)
        if not T.is_irreducible:
            continue
        G, _ = galois_group(T, by_name=True)
        if G.name != group_names[degree]:
            continue
        pd, dk = field_data(coeffs)
        if dk in out:
            continue
        out[dk] = coeffs
        if len(out) >= count:
            break
    return sorted(((c, d) for d, c in out.items()), key=lambda t: abs(t[1]))


def write_jsonl(path, rows):
    with open(path, "w") as fh:
        for coeffs, dk in rows:
            fh.write(json.dumps({"coeffs": coeffs, "disc": dk,
                                 "label": poly_label(coeffs)}) + "\n")


def main():
    cubics = cubic_fields(5000, 100)
    assert len(cubics) == 100, len(cubics)
    write_jsonl(os.path.join(HERE, "cubic_fields_100.jsonl"), cubics)
    quartics = sn_fields(4, 25, range(-3, 4))
    write_jsonl(os.path.join(HERE, "quartic_fields.jsonl"), quartics)
    quintics = sn_fields(5, 15, range(-2, 3))
    write_jsonl(os.path.join(HERE, "quintic_fields.jsonl"), quintics)
    print(len(cubics), len(quartics), len(quintics), file=sys.stderr)


if __name__ == "__main__":
    main()
