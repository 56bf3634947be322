#!/usr/bin/env python3
"""Smoke tests for the canprod python bindings."""

import math
import sys

import canprod

failures = []


def check(cond, what):
    if not cond:
        failures.append(what)


# special functions
check(canprod.zeta_neg(2.0) == 0.0, "zeta_neg trivial zero")
check(abs(canprod.zeta_pos(2.0).value - math.pi**2 / 6) < 1e-12, "zeta(2)")
check(abs(canprod.log_gamma(5.0) - math.lgamma(5.0)) < 1e-12, "log_gamma(5)")

# canonical products
w = canprod.eval_W(2.0, 1.0)
check(abs(float(w) - math.sinh(math.pi) / math.pi) < 1e-9, "W_2(1)")
check(w.converged, "W_2(1) convergence flag")
f1 = canprod.eval_F(2.0, 3.0)
f2 = canprod.eval_F(2.0, 6.0)
check(abs(f2.value - (1.0 + 3.0) * f1.value) < 1e-9 * f2.value, "F shift identity")
check(abs(f2.value / f1.value) > 1.0, "F monotone")

# closed-form expansion agrees with the product
x = 37.0
direct = math.log(canprod.eval_F(3.0, x).value)
closed = canprod.logF_littlewood(3.0, x).value
check(abs(direct - closed) < 1e-9 * max(1.0, abs(direct)), "littlewood closed form")

# group-membership probe
sched = [2.0**j for j in range(10, 41)]
r = canprod.sZ_probe(2.0, 8.0, sched)
check(r["membership"] == "member" and r["exponent"] == 3, "sZ probe 8 in 2^Z")

# decomposition: maincalc identity at one point
lhs = canprod.logderiv_W(5.0, 10.0).value
rhs = canprod.maincalc_rhs(5.0, 10.0).value
check(abs(lhs - rhs) < 1e-7, "maincalc identity")

# laplace pipeline reconstruction
want = canprod.dm_logW(1.5, 0, 4.0).value
got = canprod.logW_decomposed(1.5, 4.0).value
check(abs(want - got) < 1e-5, "logW reconstruction")

# tameness helpers
check(abs(canprod.ratio_extract([1.0, 2.0, 4.0, 8.0, 16.0], 3) - 2.0) < 1e-12, "ratio_extract")
est = canprod.assouad_zero_estimate([float(i) for i in range(1, 201)])
check(0.9 <= est <= 1.0, "assouad arithmetic family")
v = canprod.power_probe(lambda t: t**1.5, 2.0,
                        [10.0 * 10 ** (4 * i / 11.0) for i in range(12)])
check(v["kind"] == "converged" and abs(v["value"] - 1.5) < 1e-6, "power probe")

# verification batteries are importable and runnable
names = canprod.suite_names()
check("goldens" in names, "suite names")
g = canprod.run_suite("goldens")
check(g["pass"], "goldens suite")

if failures:
    print("python smoke failures:", file=sys.stderr)
    for f in failures:
        print(" -", f, file=sys.stderr)
    sys.exit(1)
print("python smoke: all checks passed")
