#!/usr/bin/env python3
"""Independent recomputation of every reconciliation verdict.

Works in sympy with sqrt(d) and I as symbols of their own, plain brute-force
evaluation for identities, and explicit 2x2 matrices for the spinor maps. It
shares no code with the C++ library. Output: JSON object
    name -> {"verdict": ..., "coords": [...]}
in report order.

usage: reconcile_oracle.py [output.json]
"""

import json
import sys

from sympy import I, Matrix, Rational, conjugate, expand, im, re, simplify, sqrt

PRESETS = {
    "fibonacci": (1, 1, 0, 1),
    "lucas": (1, 1, 2, 1),
    "pell": (2, 1, 0, 1),
    "pell_lucas": (2, 1, 2, 1),
    "jacobsthal": (1, 2, 0, 1),
    "jacobsthal_lucas": (1, 2, 2, 1),
    "pell_lucas_std": (2, 1, 2, 2),
}
TABLE = ["fibonacci", "lucas", "pell", "pell_lucas", "jacobsthal", "jacobsthal_lucas"]
CARTAN = ["s", "i", "j", "k"]
SPINOR = ["c1.re", "c1.im", "c2.re", "c2.im"]
half = Rational(1, 2)


def H(name, n):
    p, q, a, b = PRESETS[name]
    x, y = a, b
    for _ in range(n):
        x, y = y, p * y + q * x
    return x


def CW(name, n):
    return [H(name, n + c) for c in range(4)]


def eps(x):
    s, ci, cj, ck = x
    return [s + (cj + ck * half) * I, (cj - ck * half) + ci * I]


def zero(v):
    return simplify(expand(v)) == 0


def cartan_diff(x, y):
    return [CARTAN[c] for c in range(4) if not zero(x[c] - y[c])]


def spinor_parts(phi):
    out = []
    for z in phi:
        z = expand(z)
        out += [re(z), im(z)]
    return out


def spinor_diff(x, y):
    a, b = spinor_parts(x), spinor_parts(y)
    return [SPINOR[k] for k in range(4) if not zero(a[k] - b[k])]


RESULT = {}


def record(name, coords, verdict=None):
    if verdict is None:
        verdict = "match" if not coords else "mismatch"
    RESULT[name] = {"verdict": verdict, "coords": list(coords)}


# --- Examples ---------------------------------------------------------------

cartan_examples = [
    ("CP", "pell", [(0, 1, 2, 5), (1, 2, 5, 12), (2, 5, 12, 29), (5, 12, 29, 70)]),
    ("Cp", "pell_lucas", [(2, 1, 4, 9), (1, 4, 9, 22), (4, 9, 22, 53), (9, 22, 53, 128)]),
    ("CJ", "jacobsthal", [(0, 1, 1, 3), (1, 1, 3, 5), (1, 3, 5, 11), (3, 5, 11, 21)]),
    ("Cj", "jacobsthal_lucas", [(2, 1, 5, 7), (1, 5, 7, 17), (5, 7, 17, 31), (7, 31, 65, 127)]),
]
for label, name, values in cartan_examples:
    for n, v in enumerate(values):
        record(f"example.{label}_{n}", cartan_diff(list(v), CW(name, n)))

spinor_examples = [
    ("SCP_0", "pell", 0, [Rational(9, 2) * I, -half + I]),
    ("SCP_1", "pell", 1, [1 + 11 * I, -1 + 2 * I]),
    ("SCp_0", "pell_lucas", 0, [2 + Rational(17, 2) * I, -half + I]),
    ("SCp_1", "pell_lucas", 1, [1 + 20 * I, -2 + 4 * I]),
    ("SCJ_0", "jacobsthal", 0, [Rational(5, 2) * I, -half + I]),
    ("SCJ_1", "jacobsthal", 1, [1 + Rational(11, 2) * I, half + I]),
    ("SCj_0", "jacobsthal_lucas", 0, [2 + Rational(17, 2) * I, Rational(3, 2) + I]),
    ("SCj_1", "jacobsthal_lucas", 1, [1 + Rational(31, 2) * I, -Rational(3, 2) + 5 * I]),
]
for label, name, n, v in spinor_examples:
    record(f"example.{label}", spinor_diff(v, eps(CW(name, n))))

for name in TABLE:
    p, q, a, b = PRESETS[name]
    printed = [
        [a, b, p * b + q * a, p * p * b + p * q * a + p * b],
        [b, p * b + q * a, p * p * b + p * q * a + p * b, p**3 * b + p * p * q * a + 2 * p * b * q * a + q * q * a],
    ]
    for n in range(2):
        record(f"initial_condition.CW_{n}.{name}", cartan_diff(printed[n], CW(name, n)))

# --- Identities --------------------------------------------------------------
# Each side is a list of (sequence, shift, scale) or ("pow2", coords).

P, Q = "P", "Q"
identities = [
    ("CP_n+CP_{n+1}=Cp_{n+1}", "CP_n+CP_{n+1}=Cp_{n+1}", "pell", [(P, 0, 1), (P, 1, 1)], [(Q, 1, 1)], 0),
    ("CP_{n+1}-CP_n=Cp_n", "CP_{n+1}-CP_n=Cp_n", "pell", [(P, 1, 1), (P, 0, -1)], [(Q, 0, 1)], 0),
    ("CP_{n-1}+CP_{n+1}=Cp_n", "CP_{n-1}+CP_{n+1}=Cp_n", "pell", [(P, -1, 1), (P, 1, 1)], [(Q, 0, 1)], 1),
    ("2CP_n+Cp_n=Cp_{n+1}", "2CP_n+Cp_n=Cp_{n+1}", "pell", [(P, 0, 2), (Q, 0, 1)], [(Q, 1, 1)], 0),
    ("CJ_n+Cj_n=2CJ_n", "CJ_n+Cj_n=2CJ_n", "jacobsthal", [(P, 0, 1), (Q, 0, 1)], [(P, 0, 2)], 0),
    ("CJ_n+Cj_n=2CJ_{n+1}", "CJ_n+Cj_n=2CJ_n", "jacobsthal", [(P, 0, 1), (Q, 0, 1)], [(P, 1, 2)], 0),
    ("3CJ_{n+1}+Cj_n=2^{n+1}(1+2i+4j+8k)", "3CJ_{n+1}+Cj_n=2^{n+1}(1+2i+4j+8k)", "jacobsthal",
     [(P, 1, 3), (Q, 0, 1)], [("pow2",)], 0),
    ("3CJ_n+Cj_n=2^{n+1}(1+2i+4j+8k)", "3CJ_{n+1}+Cj_n=2^{n+1}(1+2i+4j+8k)", "jacobsthal",
     [(P, 0, 3), (Q, 0, 1)], [("pow2",)], 0),
    ("Cj_{n+1}+2Cj_{n-1}=9CJ_n", "Cj_{n+1}+2Cj_{n-1}=9CJ_n", "jacobsthal", [(Q, 1, 1), (Q, -1, 2)], [(P, 0, 9)], 1),
]
bindings = {"pell": [("pell", "pell_lucas"), ("pell", "pell_lucas_std")], "jacobsthal": [("jacobsthal", "jacobsthal_lucas")]}


def side(terms, roles, c, n):
    total = 0
    for t in terms:
        if t[0] == "pow2":
            total += 2 ** (n + 1) * [1, 2, 4, 8][c]
        else:
            seq = roles[0] if t[0] == P else roles[1]
            total += t[2] * H(seq, n + t[1] + c)
    return total


for name, printed, family, lhs, rhs, offset in identities:
    for roles in bindings[family]:
        bad = []
        for c in range(4):
            if any(side(lhs, roles, c, n) != side(rhs, roles, c, n) for n in range(offset, offset + 60)):
                bad.append(CARTAN[c])
        record(f"identity.{name}.{roles[0]}/{roles[1]}", bad)

# --- Binet constants ----------------------------------------------------------


def binet_xy(name):
    p, q, a, b = PRESETS[name]
    r = sqrt(p * p + 4 * q)
    w0, w1 = CW(name, 0), CW(name, 1)
    X = [(2 * w1[c] - p * w0[c] + r * w0[c]) / (2 * r) for c in range(4)]
    Y = [((r + p) * w0[c] - 2 * w1[c]) / (2 * r) for c in range(4)]
    return X, Y


s2 = sqrt(2)
pell_pref = 1 / (2 * s2)
binet_printed = [
    ("pell", "A", "B", [pell_pref * v for v in (1, 1 + s2, 4 + 2 * s2, 7 + 5 * s2)],
     [pell_pref * v for v in (-1, -1 + s2, -4 + 2 * s2, -7 + 5 * s2)]),
    ("jacobsthal", "C", "D", [1, 0, 2, 2], [-1, 1, -1, 1]),
    ("pell_lucas", "A*", "B*", [1, 1 + s2, 3 + 2 * s2, 7 + 5 * s2], [1, 1 - s2, 3 - 2 * s2, 7 - 5 * s2]),
    ("pell_lucas_std", "A*", "B*", [1, 1 + s2, 3 + 2 * s2, 7 + 5 * s2], [1, 1 - s2, 3 - 2 * s2, 7 - 5 * s2]),
    ("jacobsthal_lucas", "C*", "D*", [-1, 4, 2, 10], [3, -3, 3, -3]),
]
binet_entries = []
for name, first, second, pa, pb in binet_printed:
    X, Y = binet_xy(name)
    binet_entries.append((f"{name}.{first}", cartan_diff(pa, X)))
    binet_entries.append((f"{name}.{second}", cartan_diff(pb, Y)))

# --- Generating functions ---------------------------------------------------------


def den_diff(printed, name):
    p, q, _, _ = PRESETS[name]
    actual = [1, -p, -q]
    return [f"x^{k}" for k in range(3) if printed[k] != actual[k]]


def gf_numerator(name, lift):
    p = PRESETS[name][0]
    w0, w1 = lift(CW(name, 0)), lift(CW(name, 1))
    return w0, [w1[c] - p * w0[c] for c in range(len(w0))]


gf_entries = []
cartan_gfs = [
    ("pell", [1, -2, -1], (0, 1, 2, 5), (1, 1, 0, 2)),
    ("jacobsthal", [1, -2, -1], (0, 1, 1, 3), (1, 0, 2, 2)),
    ("pell_lucas", [1, -2, -1], (2, 1, 4, 9), (-3, 2, 1, 4)),
    ("jacobsthal_lucas", [1, -1, -2], (2, 1, 5, 7), (-1, 4, 2, 10)),
]
for name, den, c0, c1 in cartan_gfs:
    n0, n1 = gf_numerator(name, lambda x: x)
    gf_entries.append((f"cartan_gf.{name}.denominator", den_diff(den, name)))
    gf_entries.append((f"cartan_gf.{name}.numerator.x0", cartan_diff(list(c0), n0)))
    gf_entries.append((f"cartan_gf.{name}.numerator.x1", cartan_diff(list(c1), n1)))

spinor_gfs = [
    ("spinor_gf.pell", "pell", [1, -2, -1], [Rational(9, 2) * I, -half + I], [1 + 2 * I, 0]),
    ("spinor_gf.pell_lucas", "pell_lucas", [1, -2, -1], [2 + Rational(17, 2) * I, -half + I], [-3 + 3 * I, 2 * I]),
    ("spinor_gf.jacobsthal", "jacobsthal", [1, -1, -2], [Rational(5, 2) * I, -half + I], [1 + 3 * I, 1]),
    ("spinor_gf.jacobsthal_lucas", "jacobsthal_lucas", [1, -1, -2], [2 + Rational(17, 2) * I, Rational(3, 2) - I],
     [-1 + 7 * I, -3 - 4 * I]),
    ("spinor_gf.fibonacci_header", "fibonacci", [1, -1, -1], [1 + I, I], [1 + Rational(7, 2) * I, half + I]),
]
for label, name, den, c0, c1 in spinor_gfs:
    n0, n1 = gf_numerator(name, eps)
    gf_entries.append((f"{label}.denominator", den_diff(den, name)))
    gf_entries.append((f"{label}.numerator.x0", spinor_diff(c0, n0)))
    gf_entries.append((f"{label}.numerator.x1", spinor_diff(c1, n1)))

for name in TABLE:
    w0, w1 = CW(name, 0), CW(name, 1)
    n0, n1 = gf_numerator(name, lambda x: x)
    printed = [w0, [w1[c] - w0[c] for c in range(4)]]
    coords = [f"x^{k}.{c}" for k, (pp, cc) in enumerate(zip(printed, [n0, n1])) for c in cartan_diff(pp, cc)]
    gf_entries.append((f"cartan_gf_general.{name}", coords))
for name in TABLE:
    p = PRESETS[name][0]
    s0, s1 = eps(CW(name, 0)), eps(CW(name, 1))
    n0, n1 = gf_numerator(name, eps)
    printed = [[s0[k] + s1[k] for k in range(2)], [-p * s0[k] for k in range(2)]]
    coords = [f"x^{k}.{c}" for k, (pp, cc) in enumerate(zip(printed, [n0, n1])) for c in spinor_diff(pp, cc)]
    gf_entries.append((f"spinor_gf_general.{name}", coords))

# --- Spinor forms ---------------------------------------------------------------

Cm = Matrix([[0, 1], [-1, 0]])


def conj_vec(phi):
    return Matrix([conjugate(expand(z)) for z in phi])


def tilde(phi):
    return list(I * Cm * conj_vec(phi))


def mate(phi):
    return list(-Cm * conj_vec(phi))


def printed_displays(h):
    h0, h1, h2, h3 = [Rational(v) for v in h]
    return {
        "spinor_conjugate": [-h1 + (h2 - h3 / 2) * I, (h2 + h3 / 2) - h0 * I],
        "spinor_mate": [(-h2 + h3 / 2) + h1 * I, h0 - (h2 + h3 / 2) * I],
        "spinor_of_conjugate": [h0 - (h2 + h3 / 2) * I, (-h2 + h3 / 2) - h1 * I],
        "spinor_complex_conjugate": [h0 - I * (h2 + h3 / 2), (h2 - h3 / 2) - h1 * I],
    }


def computed_displays(h):
    phi = eps(h)
    return {
        "spinor_conjugate": tilde(phi),
        "spinor_mate": mate(phi),
        "spinor_of_conjugate": eps([h[0], -h[1], -h[2], -h[3]]),
        "spinor_complex_conjugate": list(conj_vec(phi)),
    }


spinor_entries = []
for name in TABLE:
    for key in ["spinor_conjugate", "spinor_mate", "spinor_of_conjugate", "spinor_complex_conjugate"]:
        coords = []
        for n in range(8):
            h = CW(name, n)
            for c in spinor_diff(printed_displays(h)[key], computed_displays(h)[key]):
                if c not in coords:
                    coords.append(c)
        spinor_entries.append((f"{key}.{name}", coords))

for name in TABLE:
    s0, s1, s2_ = (eps(CW(name, n)) for n in range(3))
    spinor_entries.append((f"spinor_recurrence.{name}", spinor_diff([s1[k] + s0[k] for k in range(2)], s2_)))

for name in TABLE:
    p, q, a, b = PRESETS[name]
    r = sqrt(p * p + 4 * q)
    w2 = p * b + q * a
    x0 = b - p * a + a * r + ((w2) * (p * q + r * (1 + p * p + p * q)) + b * q * (q + 1 + p * r)) / 2 * I
    y0 = -b + p * a + a * r + ((w2) * (-p * q + r * (1 + p * p + p * q)) + b * q * (-q - 1 + p * r)) / 2 * I
    rad = r * ((w2) * (2 - p) - b * q + 2 * b * I) / 2
    rat = ((w2) * (2 * p - p * p - 2 * p * q + 4 * I) + 3 * b * p * q - 2 * b * p * I) / 2
    x1, y1 = rad + rat, rad - rat
    X, Y = binet_xy(name)
    pref = 1 / (2 * r)
    spinor_entries.append((f"spinor_binet.{name}.X", spinor_diff([pref * x0, pref * x1], eps(X))))
    spinor_entries.append((f"spinor_binet.{name}.Y", spinor_diff([pref * y0, pref * y1], eps(Y))))

for label in ["SCP_n", "SCp_n", "SCJ_n", "SCj_n"]:
    spinor_entries.append((f"spinor_binet_display.{label}", None))

# --- Output, in report section order ----------------------------------------------

for name, coords in binet_entries + gf_entries + spinor_entries:
    if coords is None:
        record(name, [], "not_comparable")
    else:
        record(name, coords)

# Examples and identities were recorded first; move them into report order.
order = [k for k in RESULT if k.startswith(("example.", "initial_condition."))]
order += [k for k in RESULT if k.startswith("identity.")]
order += [k for k, _ in binet_entries] + [k for k, _ in gf_entries] + [k for k, _ in spinor_entries]
text = json.dumps({k: RESULT[k] for k in order}, indent=2) + "\n"

if len(sys.argv) > 1:
    with open(sys.argv[1], "w") as f:
        f.write(text)
else:
    sys.stdout.write(text)
