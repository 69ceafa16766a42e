"""Independent sympy oracle for the hand-derived example values frozen into
the C++ unit tests. Run with `python3 tests/oracles/derived_values.py`."""
import itertools
import sympy as sp

t, t1, t2, x = sp.symbols("t t1 t2 x")
i, j = sp.symbols("i j")


def show(label, value):
    print(f"{label}: {sp.simplify(value)}")


# exactnum
show("normalize(2t, 4t^2)", sp.cancel(2 * t / (4 * t**2)))
show("normalize(t^2-1, t-1)", sp.cancel((t**2 - 1) / (t - 1)))
show("gcd(t^2-1, t^2-2t+1)", sp.gcd(t**2 - 1, t**2 - 2 * t + 1))

# deriv
f = t**3
show("(d + t d^2)(t^3)", sp.diff(f, t) + t * sp.diff(f, t, 2))
g = sp.Function("g")(t)
show("d o (t d) applied to g", sp.expand(sp.diff(t * sp.diff(g, t), t)))
show("(t d) o d applied to g", sp.expand(t * sp.diff(sp.diff(g, t), t)))
for m in range(5):
    word = sp.diff(t * sp.diff(t**m, t), t)
    canon = sp.diff(t**m, t) + t * sp.diff(t**m, t, 2)
    assert sp.simplify(word - canon) == 0

# leibniz: defect of d^2
D2 = lambda e: sp.diff(e, t, 2)
B = lambda D, a, b: sp.expand(D(a * b) - D(a) * b - D(b) * a)
show("B_{d^2}(t, t)", B(D2, t, t))


def nested(D, ys):
    if not ys:
        return D
    inner = nested(D, ys[:-1])
    y = ys[-1]
    return lambda e: sp.expand(inner(e * y) - y * inner(e) - e * inner(y))


show("nested d^2 (t; t, t)", nested(D2, [t, t])(t))
show("nested d^2 (t; t)", nested(D2, [t])(t))

# genpoly
dj = lambda e: sp.diff(e, t) / e
gg = sp.Symbol("gg")
show("Delta_{t+1} (d/j)(t)", sp.cancel(dj((t + 1) * t) - dj(t)))
val = sum((-1) ** (6 - len(S)) * t ** len(S) for r in range(7) for S in itertools.combinations(range(6), r))
show("Delta_t^6 j(1)", sp.factor(val))


def expoly(op, k_vars, exps):
    mono = sp.Mul(*[v**e for v, e in zip(k_vars, exps)])
    return sp.expand(sp.simplify(op(mono) / mono))


op = lambda e: sp.diff(e, t) + t * sp.diff(e, t, 2)
show("expoly(d + t d^2)", expoly(op, [t], [i]))
op = lambda e: sp.diff(e, t, 2)
show("expoly(d^2)", expoly(op, [t], [i]))
op = lambda e: sp.diff(t1 * sp.diff(e, t1) + sp.diff(e, t2), t1)
show("expoly(d1 o (t1 d1 + d2))", expoly(op, [t1, t2], [i, j]))
show("bump (i^2-i)t^-2 * i/t", sp.expand((i**2 - i) * t**-2 * i / t))

# reconstruct: newton coefficients of p(i,j) = ij on {0,1}^2
p = {(a, b): a * b for a in range(2) for b in range(2)}
print("Delta1 Delta2 p(0,0):", p[1, 1] - p[1, 0] - p[0, 1] + p[0, 0])

# fit: t d tabulated on t, t^2, t^3 with n = 2 unknowns (c1, c2)
c1, c2 = sp.symbols("c1 c2")
eqs = [sp.Eq(c1 * sp.diff(e, t) + c2 * sp.diff(e, t, 2), t * sp.diff(e, t)) for e in (t, t**2, t**3)]
print("fit t d:", sp.solve(eqs, [c1, c2]))

# fixtures: char 2 D on x^3 and (d1 o d2)(x^k) right-hand sides with a = 1
print("C(3,2) mod 2:", sp.binomial(3, 2) % 2)
for k in range(9):
    print(f"k={k}: k*x^(k-1) mod 2 ->", (k % 2) and f"x^{k-1}" or 0)

# composition-order demo, second example
op = lambda e: sp.diff(t1 * sp.diff(e, t1) + sp.diff(e, t2), t1)
show("compose d1 o (t1 d1 + d2) on generic monomial", expoly(op, [t1, t2], [i, j]))
