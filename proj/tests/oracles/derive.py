"""Independent oracle for DERIVED test values.

Works with rational braidings only (set solutions, racks, flips), using plain
fractions. The Nichols algebra is B = sum Im QS_d, so dim B^d = rank QS_d, and in
a one-dimensional top degree N the class of a word K is alpha_K with
QS_N e_K = alpha_K QS_N e_vol. Then D = sum_K alpha_K t_vol^K.

Run: python3 derive.py
"""
from fractions import Fraction
from itertools import permutations, product
import json
import os

HERE = os.path.dirname(os.path.abspath(__file__))
CORPUS = os.path.join(HERE, "..", "..", "corpus")


def load(name):
    with open(os.path.join(CORPUS, name + ".json")) as f:
        return json.load(f)


def braiding(spec):
    """dict (i, j) -> list of (k, l, coeff), 0-based."""
    n = spec["n"]
    scale = Fraction(spec.get("scale", "1"))
    cst = Fraction(spec.get("cocycle", "1")) if isinstance(spec.get("cocycle", "1"), str) else None
    c = {}
    for i in range(n):
        for j in range(n):
            if spec["kind"] == "flip":
                c[(i, j)] = [(j, i, scale)]
            elif spec["kind"] == "set_solution":
                g, f = spec["solution"][i][j]
                c[(i, j)] = [(g - 1, f - 1, cst * scale)]
            elif spec["kind"] == "rack":
                c[(i, j)] = [(spec["rack"][i][j] - 1, i, cst * scale)]
            else:
                raise ValueError(spec["kind"])
    return c


def act(c, k, vec):
    """sigma_k (1-based) on a dict word -> coeff."""
    out = {}
    for w, a in vec.items():
        for (x, y, b) in c[(w[k - 1], w[k])]:
            nw = w[: k - 1] + (x, y) + w[k + 1 :]
            out[nw] = out.get(nw, 0) + a * b
    return {w: a for w, a in out.items() if a != 0}


def reduced_word(perm):
    # bubble sort: collect adjacent swaps, gives sigma = s_{a_1} ... s_{a_m}
    p = list(perm)
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                word.append(i + 1)
                changed = True
    return word


def qs_column(c, d, w):
    total = {}
    for perm in permutations(range(d)):
        vec = {tuple(w): Fraction(1)}
        for k in reversed(reduced_word(perm)):
            vec = act(c, k, vec)
        for x, a in vec.items():
            total[x] = total.get(x, 0) + a
    return {x: a for x, a in total.items() if a != 0}


def rank(cols):
    pivots = {}
    r = 0
    for col in cols:
        v = dict(col)
        for key in sorted(pivots):
            if key in v and v[key] != 0:
                base = pivots[key]
                f = v[key] / base[key]
                for x, a in base.items():
                    v[x] = v.get(x, 0) - f * a
                v = {x: a for x, a in v.items() if a != 0}
        if v:
            key = min(v)
            pivots[key] = v
            r += 1
    return r


def words(n, d):
    return [tuple(w) for w in product(range(n), repeat=d)]


def hilbert(spec, max_d):
    c = braiding(spec)
    n = spec["n"]
    h = [1]
    for d in range(1, max_d + 1):
        cols = [qs_column(c, d, w) for w in words(n, d)]
        h.append(rank(cols))
        if h[-1] == 0:
            break
    return h


def determinant(spec, top, volume=None):
    c = braiding(spec)
    n = spec["n"]
    cols = {w: qs_column(c, top, w) for w in words(n, top)}
    if volume is None:
        volume = min(w for w in cols if cols[w])
    base = cols[volume]
    key = min(base)
    alpha = {}
    for w, col in cols.items():
        if col:
            a = col[key] / base[key]
            assert all(col.get(x, 0) == a * b for x, b in base.items()) and len(col) == len(base)
            alpha[w] = a
    letters = "abcdefghi"
    terms = []
    for K in sorted(alpha, key=lambda K: [volume[p] * n + K[p] for p in range(top)]):
        mono = "".join(letters[volume[p] * n + K[p]] for p in range(top))
        terms.append((alpha[K], mono))
    return volume, terms


def fmt(terms):
    parts = []
    for a, m in terms:
        coef = "" if abs(a) == 1 else f"{abs(a)}*"
        parts.append(("- " if a < 0 else "+ ") + coef + m)
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]



def sympy_values():
    """Cyclotomic and linear-algebra oracle values (requires sympy)."""
    import sympy as sp

    x = sp.symbols("x")
    for m in (12, 15, 30):
        print("Phi", m, sp.Poly(sp.cyclotomic_poly(m, x), x).all_coeffs()[::-1])
    # 1 / (1 + 2 z5) in the power basis of Q(zeta_5)
    phi5 = sp.cyclotomic_poly(5, x)
    inv = sp.invert(1 + 2 * x, phi5, x)
    print("inv(1+2z5)", sp.Poly(sp.rem(inv, phi5), x).all_coeffs()[::-1])
    M = sp.Matrix([[2, -1, 0, 3], [1, 1, 1, 1], [3, 0, 1, 4], [0, 2, -1, 5]])
    print("det", M.det(), "rank", M.rank())
    print("rref", M.rref())
    N = sp.Matrix([[1, 2, 0], [0, 1, 3], [4, 0, 1]])
    print("det N", N.det(), "inv N", N.inv())


if __name__ == "__main__":
    for name, d in [("fk3", 5), ("involutive3", 4), ("nondiag2x2", 3), ("minus_flip3", 4), ("flip2", 4)]:
        print(name, "hilbert", hilbert(load(name), d))
    for name, top in [("involutive3", 3), ("involutive3_listed", 3), ("nondiag2x2", 2), ("fk3", 4)]:
        vol, terms = determinant(load(name), top, (0, 1, 2, 1) if name == "fk3" else None)
        print(name, "volume", [v + 1 for v in vol], "D =", fmt(terms))
    sympy_values()
