import json
import time

from hypercircles.generators import (
    adversarial_relations,
    cyclotomic_minpoly,
    gen_instance,
)
from hypercircles.instances import parse_instance
from hypercircles.hypercircle import standard_parametrization
from hypercircles.polynomials import UniPoly
from hypercircles.rationals import QQ

# --- criterion 9: verbatim relations for Phi_5, d = 4 ---
phi5 = cyclotomic_minpoly(5)
print("Phi_5:", phi5.render("x"))
field, g_vals, particular, homog = adversarial_relations(4, phi5)
print("g(1..3):", [str(v) for v in g_vals])
a = field.gen


def elem(c3, c2, c1, c0):
    return field.element([QQ(c0), QQ(c1), QQ(c2), QQ(c3)])


expected_const = [
    elem(1440, 1080, 1044, 1920),
    elem(-1740, -1440, -1380, -2700),
    elem(420, 360, 335, 780),
]
expected_slope = [QQ(-6), QQ(11), QQ(-6)]
print("free columns:", sorted(homog))
for j in range(3):
    const_ok = particular[j] == expected_const[j]
    slope_ok = homog[3][j] == field.coerce(expected_slope[j])
    print(f"a_{j}: const {'ok' if const_ok else 'MISMATCH: ' + str(particular[j])}, "
          f"slope {'ok' if slope_ok else 'MISMATCH: ' + str(homog[3][j])}")

# full adversarial instance -> pipeline
t0 = time.time()
doc = gen_instance("adversarial", 4, minpoly=phi5, seed=0)
f2, psi = parse_instance(json.dumps(doc))
res = standard_parametrization(psi, f2)
print("adversarial verdict:", res.verdict, "params:", res.parameters_tried,
      "(%.0f ms)" % (1000 * (time.time() - t0)))
if res.defined:
    tpoly = UniPoly.gen(f2)
    total = None
    p = f2.one
    for comp in res.phi:
        term = comp * p
        total = term if total is None else total + term
        p = p * f2.gen
    print("sum phi_i a^i == t:", total.num == tpoly * total.den.monic())

# --- defined + twisted over a couple of fields ---
for kind in ("defined", "twisted"):
    for n, d in ((2, 3), (3, 4)):
        t0 = time.time()
        doc = gen_instance(kind, d, ext_degree=n, seed=7)
        f3, psi3 = parse_instance(json.dumps(doc))
        res3 = standard_parametrization(psi3, f3)
        ok = res3.defined == (kind == "defined")
        print(f"{kind} n={n} d={d}: {res3.verdict} "
              f"{'ok' if ok else 'WRONG'} ({1000 * (time.time() - t0):.0f} ms)")

# determinism
d1 = gen_instance("defined", 3, ext_degree=2, seed=11)
d2 = gen_instance("defined", 3, ext_degree=2, seed=11)
d3 = gen_instance("defined", 3, ext_degree=2, seed=12)
print("deterministic:", d1 == d2, "; seed-sensitive:", d1 != d3)
