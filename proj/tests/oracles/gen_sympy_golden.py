"""Regenerates sympy_golden.inc: reduced Groebner bases and ideal intersections
computed by sympy, used as an independent reference by the C++ unit tests."""
import random
from itertools import combinations
from pathlib import Path

import sympy as sp

x = sp.symbols("x0:4")
t = sp.Symbol("t")


def fmt(p):
    poly = sp.Poly(sp.expand(p), *x)
    parts = []
    for exps, c in poly.terms():
        mono = "*".join(f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in enumerate(exps) if e)
        mag = abs(c)
        body = mono if mag == 1 and mono else (f"{mag}*{mono}" if mono else f"{mag}")
        parts.append(("- " if c < 0 else "+ ") + body)
    text = " ".join(parts) if parts else "0"
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def grevlex_gb(gens, nv):
    return list(sp.groebner(gens, *x[:nv], order="grevlex", domain="QQ").exprs)


def intersect(I, J, nv):
    gens = [t * f for f in I] + [(1 - t) * g for g in J]
    G = sp.groebner(gens, t, *x[:nv], order="lex", domain="QQ")
    kept = [g for g in G.exprs if not g.has(t)]
    return grevlex_gb(kept, nv)


def random_poly(rng, nv, deg):
    terms = []
    for _ in range(rng.randint(2, 3)):
        e = [0] * nv
        for _ in range(rng.randint(1, deg)):
            e[rng.randrange(nv)] += 1
        c = rng.choice([-3, -2, -1, 1, 2, 3, sp.Rational(1, 2)])
        terms.append(c * sp.Mul(*[x[i] ** e[i] for i in range(nv)]))
    return sp.Add(*terms)


def vandermonde_style(nv):
    gens = []
    for s in range(nv):
        g = 1
        for i, j in combinations([k for k in range(nv) if k != s], 2):
            g *= x[i] - x[j]
        gens.append(g)
    return gens


cases = []
rng = random.Random(20261014)
cases.append(("explicit A3", 4, vandermonde_style(4), None))
cases.append(("cubic triple", 3, [x[0] ** 3 - x[1] * x[2] ** 2, x[1] ** 3 - x[0] ** 2 * x[2], x[0] * x[1] - x[2] ** 2], None))
for k in range(6):
    nv = 3
    gens = [random_poly(rng, nv, 3) for _ in range(3)]
    cases.append((f"random {k}", nv, gens, None))
inter = []
inter.append(("coordinate lines", 3, [x[0], x[1]], [x[1], x[2]]))
inter.append(("line and conic", 3, [x[0] - x[1], x[2]], [x[0] * x[1] - x[2] ** 2]))
for k in range(4):
    nv = 3
    I = [random_poly(rng, nv, 2) for _ in range(2)]
    J = [random_poly(rng, nv, 2) for _ in range(2)]
    inter.append((f"random pair {k}", nv, I, J))

out = ["// Generated by gen_sympy_golden.py; do not edit."]
out.append("struct GoldenGb { const char* name; unsigned nvars; std::vector<const char*> gens; std::vector<const char*> basis; };")
out.append("struct GoldenIntersection { const char* name; unsigned nvars; std::vector<const char*> I; std::vector<const char*> J; std::vector<const char*> basis; };")
out.append("inline const std::vector<GoldenGb> kGoldenGb = {")
for name, nv, gens, _ in cases:
    basis = grevlex_gb(gens, nv)
    g = ", ".join(f'"{fmt(p)}"' for p in gens)
    b = ", ".join(f'"{fmt(p)}"' for p in basis)
    out.append(f'  {{"{name}", {nv}, {{{g}}}, {{{b}}}}},')
out.append("};")
out.append("inline const std::vector<GoldenIntersection> kGoldenIntersection = {")
for name, nv, I, J in inter:
    basis = intersect(I, J, nv)
    fi = ", ".join(f'"{fmt(p)}"' for p in I)
    fj = ", ".join(f'"{fmt(p)}"' for p in J)
    b = ", ".join(f'"{fmt(p)}"' for p in basis)
    out.append(f'  {{"{name}", {nv}, {{{fi}}}, {{{fj}}}, {{{b}}}}},')
out.append("};")
Path(__file__).with_name("sympy_golden.inc").write_text("\n".join(out) + "\n")
