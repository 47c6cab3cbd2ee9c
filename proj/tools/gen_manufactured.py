#!/usr/bin/env python3
"""Generates the manufactured-solution forcing tables.

Exact solution on the unit torus, with s = x (1D) or s = x + y (2D):
    rho = 1 + a sin(2 pi s)
    u   = (b, c) sin(2 pi s) exp(-t)
The forcing is d_t(exact) - rhs(exact) for the primitive-form equations
(momentum divided by rho). It is a polynomial in E = exp(-t) of degree <= 4
with coefficients periodic in s; each coefficient is stored as a Fourier
series. The System-C drag eps |u|^3 u is only C^3 in s and is left out of
the tables (the C++ side adds it in closed form).

Usage: python3 tools/gen_manufactured.py > include/degvisc/manufactured_tables.hpp
"""

import sys

import mpmath as mp
import sympy as sp

mp.mp.dps = 40
MODES = 40
SAMPLES = 256
POWERS = 5

x, y, E = sp.symbols("x y E", real=True)
A_RHO = sp.Rational(1, 10)
B_U = sp.Rational(1, 10)
C_U = sp.Rational(1, 20)
EPS = sp.Rational(1, 2)
P0 = 50

CASES = {
    "A2D": dict(alpha=sp.Rational(4, 5), gamma=sp.Rational(7, 5)),
    "B3D": dict(alpha=sp.Rational(4, 5), gamma=sp.Rational(7, 5)),
    "C3D": dict(alpha=sp.Integer(1), gamma=sp.Rational(7, 5)),
}


def fields(dim):
    coords = [x] if dim == 1 else [x, y]
    s = sum(coords)
    S = sp.sin(2 * sp.pi * s)
    rho = 1 + A_RHO * S
    amps = [B_U] if dim == 1 else [B_U, C_U]
    u = [amp * S * E for amp in amps]
    return coords, rho, u


def grad(f, coords):
    return [sp.diff(f, c) for c in coords]


def div(F, coords):
    return sum(sp.diff(F[i], coords[i]) for i in range(len(coords)))


def rhs(variant, dim, with_stress=True):
    """Continuous rhs (drho/dt, du/dt) of the variant, momentum divided by rho."""
    p = CASES[variant]
    al, ga = p["alpha"], p["gamma"]
    gt = ga + sp.Rational(1, 6)
    coords, rho, u = fields(dim)
    r = sp.Symbol("r", positive=True)
    e13 = EPS ** sp.Rational(1, 3)
    se = sp.sqrt(EPS)
    h_eps = r**al + e13 * (r ** sp.Rational(7, 8) + r**gt)
    hp = sp.diff(h_eps, r)
    g_eps = r * hp - h_eps
    H = h_eps.subs(r, rho)
    Hp = hp.subs(r, rho)
    Gc = g_eps.subs(r, rho)
    n = len(coords)
    grad_u = [[sp.diff(u[j], coords[i]) for j in range(n)] for i in range(n)]  # [i][j] = d_i u_j
    divu = sum(grad_u[i][i] for i in range(n))

    def div_w_grad(w):
        return [sum(sp.diff(w * grad_u[i][j], coords[i]) for i in range(n)) for j in range(n)]

    def div_w_sym(w):
        return [sum(sp.diff(w * (grad_u[i][j] + grad_u[j][i]) / 2, coords[i]) for i in range(n)) for j in range(n)]

    def grad_w_div(w):
        return [sp.diff(w * divu, coords[j]) for j in range(n)]

    flux = -div([rho * u[j] for j in range(n)], coords)
    adv = [-sum(u[i] * grad_u[i][j] for i in range(n)) for j in range(n)]
    pres = [-sp.diff(rho**ga, coords[j]) / rho for j in range(n)]

    if variant == "C3D":
        v = sp.sqrt(rho)
        gv = grad(v, coords)
        k = sum(q * q for q in gv)
        src = EPS * (v * div(gv, coords) + v * div([k * q for q in gv], coords) + rho ** (-P0))
        visc = [a + se * b for a, b in zip(div_w_sym(rho), div_w_grad(rho))]
        work = [EPS * v * k * sum(gv[i] * grad_u[i][j] for i in range(n)) for j in range(n)]
        extra = [(work[j] - EPS * rho ** (-P0) * u[j]) / rho for j in range(n)]
    else:
        src = EPS * sp.sqrt(rho) * div([Hp / sp.sqrt(rho) * q for q in grad(rho, coords)], coords)
        if variant == "A2D":
            visc = [a + se * b + (1 + se) * c for a, b, c in zip(div_w_sym(H), div_w_grad(H), grad_w_div(Gc))]
        else:
            visc = [a + c for a, c in zip(div_w_grad(H), grad_w_div(Gc))]
        damp = sp.exp(-EPS**-3) * (rho ** (EPS**-2) + rho ** (-(EPS**-2)))
        extra = [-damp * u[j] / rho for j in range(n)]

    if not with_stress:
        return visc, rho
    drho = flux + src
    du = [adv[j] + pres[j] + visc[j] / rho + extra[j] for j in range(n)]
    return drho, du


def on_line(expr, dim):
    return expr if dim == 1 else expr.subs(y, 0)


def fourier(expr):
    """Cosine/sine coefficients of a 1-periodic function of x."""
    f = sp.lambdify(x, expr, modules="mpmath")
    vals = [f(mp.mpf(m) / SAMPLES) for m in range(SAMPLES)]
    out = []
    for k in range(MODES):
        ck = mp.fsum(vals[m] * mp.cos(2 * mp.pi * k * m / SAMPLES) for m in range(SAMPLES)) / SAMPLES
        sk = mp.fsum(vals[m] * mp.sin(2 * mp.pi * k * m / SAMPLES) for m in range(SAMPLES)) / SAMPLES
        if k > 0:
            ck, sk = 2 * ck, 2 * sk
        out.append((ck, sk))
    tail = max(abs(c) + abs(s) for c, s in out[-4:])
    if tail > mp.mpf("1e-18"):
        raise SystemExit(f"Fourier series not converged (tail {mp.nstr(tail, 5)})")
    return out


def power_coeffs(expr):
    return [sp.diff(expr, E, p).subs(E, 0) / sp.factorial(p) for p in range(POWERS)]


def table(variant, dim):
    drho, du = rhs(variant, dim)
    _, _, u = fields(dim)
    # exact time derivatives: drho/dt = 0, du/dt = -u
    forcing = [-drho] + [-u[j] - du[j] for j in range(dim)]
    rows = []
    for comp in forcing:
        for coeff in power_coeffs(comp):
            rows.append(fourier(on_line(sp.simplify(coeff) if coeff.is_number else coeff, dim)))
    return rows


def stress_difference(dim):
    """(viscous rhs of A2D - viscous rhs of B3D) / rho, coefficient of E^1."""
    va, rho = rhs("A2D", dim, with_stress=False)
    vb, _ = rhs("B3D", dim, with_stress=False)
    rows = []
    for j in range(dim):
        diff = (va[j] - vb[j]) / rho
        rows.append(fourier(on_line(sp.diff(diff, E), dim)))
    return rows


def emit_rows(name, rows):
    lines = [f"inline constexpr double {name}[] = {{"]
    for row in rows:
        for c, s in row:
            lines.append(f"    {mp.nstr(c, 20, min_fixed=0, max_fixed=0)}, {mp.nstr(s, 20, min_fixed=0, max_fixed=0)},")
    lines.append("};")
    return "\n".join(lines)


def main():
    out = []
    out.append("// Generated by tools/gen_manufactured.py; do not edit.")
    out.append("#pragma once\n")
    out.append("namespace degvisc::manufactured_tables {\n")
    out.append(f"inline constexpr int kModes = {MODES};")
    out.append(f"inline constexpr int kPowers = {POWERS};")
    out.append(f"inline constexpr double kA = {float(A_RHO)!r};")
    out.append(f"inline constexpr double kB = {float(B_U)!r};")
    out.append(f"inline constexpr double kC = {float(C_U)!r};")
    out.append(f"inline constexpr double kEpsilon = {float(EPS)!r};")
    for v, p in CASES.items():
        out.append(f"inline constexpr double k{v}_alpha = {float(p['alpha'])!r};")
        out.append(f"inline constexpr double k{v}_gamma = {float(p['gamma'])!r};")
    out.append("")
    out.append("// Layout: [component (rho, u_1, ...)][power of exp(-t)][mode][cos, sin].")
    for v in CASES:
        for dim in (1, 2):
            print(f"{v} {dim}D", file=sys.stderr)
            out.append(emit_rows(f"k{v}_{dim}d", table(v, dim)))
            out.append("")
    for dim in (1, 2):
        out.append("// (A2D viscous rhs - B3D viscous rhs) / rho per unit exp(-t); [component][mode][cos, sin].")
        out.append(emit_rows(f"kStressDiff_{dim}d", stress_difference(dim)))
        out.append("")
    out.append("}  // namespace degvisc::manufactured_tables")
    print("\n".join(out))


if __name__ == "__main__":
    main()
