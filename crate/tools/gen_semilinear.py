#!/usr/bin/env python3
"""Write generator files for subgroups of the semilinear affine group AGammaL(1, p^n).

Each group is {x -> a * x^(p^(f*j)) + b} with a ranging over the subgroup of
order m in the multiplicative group. Points are field elements encoded as
base-p digit strings (low digit first); the file uses 1-based points.

    python3 tools/gen_semilinear.py data/
"""
import sys
from pathlib import Path

# name, p, monic modulus (low degree first), m, f, comment
GROUPS = [
    ("agl1_8", 2, [1, 1, 0, 1], 7, 1, "AGammaL(1,8) = 2^3:7:3, order 168"),
    ("f16_5_2", 2, [1, 1, 0, 0, 1], 5, 2, "2^4:5:2, order 160"),
    ("f16_5_4", 2, [1, 1, 0, 0, 1], 5, 1, "2^4:5:4, order 320"),
    ("f27_13_3", 3, [1, 2, 0, 1], 13, 1, "3^3:13:3, order 1053"),
    ("f25_3_2", 5, [2, 1, 1], 3, 1, "5^2:3:2, order 150"),
    ("sg480_1188", 2, [1, 1, 0, 0, 1], 15, 2, "2^4:15:2 = 2^4:(C15:<x->x^4>), order 480"),
]


class Field:
    def __init__(self, p, modulus):
        self.p, self.mod, self.n = p, modulus, len(modulus) - 1
        self.q = p ** self.n

    def digits(self, x):
        return [(x // self.p ** i) % self.p for i in range(self.n)]

    def encode(self, d):
        return sum(c * self.p ** i for i, c in enumerate(d))

    def add(self, x, y):
        return self.encode([(a + b) % self.p for a, b in zip(self.digits(x), self.digits(y))])

    def mul(self, x, y):
        a, b = self.digits(x), self.digits(y)
        prod = [0] * (2 * self.n)
        for i, s in enumerate(a):
            for j, t in enumerate(b):
                prod[i + j] = (prod[i + j] + s * t) % self.p
        for top in range(2 * self.n - 1, self.n - 1, -1):
            c = prod[top]
            if c:
                for i, m in enumerate(self.mod):
                    prod[top - self.n + i] = (prod[top - self.n + i] - c * m) % self.p
        return self.encode(prod[: self.n])

    def pow(self, x, e):
        r = 1
        for _ in range(e):
            r = self.mul(r, x)
        return r

    def primitive(self):
        for w in range(2, self.q):
            if all(self.pow(w, e) != 1 for e in range(1, self.q - 1)):
                return w
        raise ValueError("no primitive element; modulus not primitive")


def cycles(images):
    seen, out = set(), []
    for start in range(len(images)):
        if start in seen or images[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x + 1)
            x = images[x]
        out.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def generators(p, modulus, m, f):
    F = Field(p, modulus)
    assert (F.q - 1) % m == 0
    w = F.pow(F.primitive(), (F.q - 1) // m)
    gens = [
        [F.add(x, 1) for x in range(F.q)],
        [F.mul(w, x) for x in range(F.q)],
    ]
    frob = [F.pow(x, p ** f) for x in range(F.q)]
    if frob != list(range(F.q)):
        gens.append(frob)
    return F.q, gens


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "data")
    out.mkdir(parents=True, exist_ok=True)
    for name, p, modulus, m, f, comment in GROUPS:
        degree, gens = generators(p, modulus, m, f)
        lines = [f"# {comment}", f"# x -> a*x^({p}^({f}j)) + b, |a| divides {m}", f"degree {degree}"]
        lines += [cycles(g) for g in gens]
        (out / f"{name}.gens").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
