#!/usr/bin/env python3
"""Recompute derivcalc CLI results with SymPy and compare them exactly.

Usage: tools/crosscheck.py [path/to/derivcalc]

Each check runs the CLI with --json, parses the printed expressions and
recomputes the same quantity directly from the definitions. Exit status is
nonzero when any check disagrees.
"""

import json
import re
import subprocess
import sys

import sympy as sp

T = sp.symbols("t1:5")
I = sp.symbols("i1:5")


def run(binary, *args):
    proc = subprocess.run([binary, *args, "--json"], capture_output=True, text=True)
    return proc.returncode, json.loads(proc.stdout)


def expr(text):
    names = {f"t{j + 1}": T[j] for j in range(len(T))}
    names.update({f"i{j + 1}": I[j] for j in range(len(I))})
    return sp.sympify(text.replace("^", "**"), locals=names, rational=True)


def operator(text, k):
    """Parses 'c * d[a,b] + ...' into {multi-index: coefficient}."""
    marks = {}

    def mark(m):
        alpha = tuple(int(v) for v in m.group(1).split(","))
        sym = sp.Symbol("D_" + "_".join(map(str, alpha)))
        marks[sym] = alpha
        return sym.name

    body = re.sub(r"d\[([0-9,]+)\]", mark, text)
    names = {f"t{j + 1}": T[j] for j in range(k)}
    names.update({s.name: s for s in marks})
    e = sp.expand(sp.sympify(body.replace("^", "**"), locals=names, rational=True))
    out = {}
    for sym, alpha in marks.items():
        out[alpha] = sp.together(e.coeff(sym))
    rest = sp.together(e.subs({s: 0 for s in marks}))
    if rest != 0:
        out[(0,) * k] = rest
    return out


def apply_op(op, f, k):
    total = 0
    for alpha, c in op.items():
        g = f
        for j, a in enumerate(alpha):
            if a:
                g = sp.diff(g, T[j], a)
        total += c * g
    return total


def derivation(images, k):
    return lambda f: sum(images[j] * sp.diff(f, T[j]) for j in range(k))


def same(a, b):
    return sp.simplify(sp.together(a - b)) == 0


def nested_defect(d, x, ys):
    if not ys:
        return d(x)
    y, inner = ys[-1], ys[:-1]
    return nested_defect(d, x * y, inner) - y * nested_defect(d, x, inner) - x * nested_defect(d, y, inner)


def checks(binary):
    k2 = T[:2]
    # Word application versus direct composition of the two derivations.
    d1 = derivation([1, 0], 2)
    d2 = derivation([k2[0], 1], 2)
    f = k2[0] ** 2 * k2[1]
    _, j = run(binary, "apply", "--k", "2", "--word", "(t1->1,t2->0) o (t1->t1,t2->1)", "--f", "t1^2*t2")
    yield "apply word", same(expr(j["result"]), d1(d2(f)))

    # Normal form agrees with the word on several test functions.
    _, j = run(binary, "normalize", "--k", "2", "--word", "(t1->1,t2->0) o (t1->t1,t2->1)")
    op = operator(j["operator"], 2)
    tests = [k2[0] ** 3 * k2[1] ** 2, 1 / (k2[0] + k2[1]), k2[0] / (1 + k2[1] ** 2)]
    yield "normalize", all(same(apply_op(op, g, 2), d1(d2(g))) for g in tests)

    # Composition: (t d) o d applied directly.
    _, j = run(binary, "compose", "--k", "1", "--left", "t1*d[1]", "--right", "d[1]")
    op = operator(j["operator"], 1)
    g = 1 / (T[0] ** 2 + 1)
    yield "compose", same(apply_op(op, g, 1), T[0] * sp.diff(sp.diff(g, T[0]), T[0]))

    # Exponent polynomial: E(t^i) / t^i with symbolic exponents.
    _, j = run(binary, "expoly", "--k", "2", "--op", "d[1,0] * (t1*d[1,0] + d[0,1])")
    mono = k2[0] ** I[0] * k2[1] ** I[1]
    inner = k2[0] * sp.diff(mono, k2[0]) + sp.diff(mono, k2[1])
    direct = sp.diff(inner, k2[0]) / mono
    yield "exponent polynomial", same(expr(j["exponent-polynomial"]), sp.powsimp(sp.expand(direct)))

    # Leibniz defect of d^2 at (t1, t1).
    _, j = run(binary, "defect", "--k", "1", "--op", "d[2]", "--x", "t1", "--y", "t1")
    second = lambda h: sp.diff(h, T[0], 2)
    yield "defect", same(expr(j["defect"]), nested_defect(second, T[0], [T[0]]))

    # Multiplicative difference of E/j for E = d at x = t1, g = t1 + 1.
    code, j = run(binary, "gpdeg", "--k", "1", "--op", "d[1]", "--n", "0", "--increments", "t1 + 1", "--points", "t1")
    fmap = lambda h: sp.diff(h, T[0]) / h
    x, g = [expr(s) for s in j["witness"]]
    yield "gp difference", code == 1 and same(expr(j["value"]), fmap(x * g) - fmap(x))

    # Composition demo: the reported lower witness is a genuine nonzero defect.
    _, j = run(binary, "demo", "composition-order", "--k", "2", "--derivs", "(t1 -> 1) o (t1 -> t1; t2 -> 1)")
    op = operator(j["operator"], 2)
    w = j["lower-witness"]
    value = nested_defect(lambda h: apply_op(op, h, 2), expr(w["x"]), [expr(y) for y in w["ys"]])
    yield "composition witness", same(expr(w["value"]), value) and value != 0
    ys = [k2[0] + 2 * k2[1], k2[0] * k2[1] - 1]
    top = nested_defect(lambda h: apply_op(op, h, 2), k2[0] ** 2 + k2[1], ys)
    yield "composition top defect", same(top, 0)

    # Reconstruction from monomial values and a fit on a small table.
    _, j = run(binary, "reconstruct", "--grid", '{"k":1,"n":2,"values":{"0":"0","1":"t1","2":"2*t1^2"}}')
    op = operator(j["operator"], 1)
    yield "reconstruct", all(same(apply_op(op, T[0] ** i, 1), i * T[0] ** i) for i in range(4))

    table = {"t1 + 1": "t1", "1/t1": "-1/t1", "t1^2": "2*t1^2"}
    _, j = run(binary, "fit", "--k", "1", "--n", "1", "--require-o0", "--table", json.dumps(table))
    op = operator(j["operator"], 1)
    yield "fit", all(same(apply_op(op, expr(a), 1), expr(v)) for a, v in table.items())

    # Recurrence: first index whose window breaks a(n+2) = a(n+1) + a(n).
    seq = [1, 1, 2, 3, 6, 9]
    _, j = run(binary, "recurrence", "--coeffs", "-1; -1; 1", "--seq", "; ".join(map(str, seq)))
    expected = next(n for n in range(2, len(seq)) if seq[n] != seq[n - 1] + seq[n - 2])
    yield "recurrence", j["first-failure"] == expected


def main():
    binary = sys.argv[1] if len(sys.argv) > 1 else "build/derivcalc"
    failures = 0
    for name, ok in checks(binary):
        print(f"[{'ok' if ok else 'MISMATCH'}] {name}")
        failures += not ok
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
