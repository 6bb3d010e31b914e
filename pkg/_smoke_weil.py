import time

from hypercircles.rationals import QQ
from hypercircles.polynomials import UniPoly
from hypercircles.numberfield import NumberField
from hypercircles.ratfunc import Parametrization, RatFunc
from hypercircles.hypercircle import standard_parametrization
from hypercircles.weil import weil_substitution, check_on_witness

# --- Q(i) ---
Qi = NumberField(QQ, UniPoly(QQ, [1, 0, 1]), "i")
i = Qi.gen
t = UniPoly.gen(Qi)

# trivial: psi = (t) -> lambda_0 = t0, lambda_1 = t1, D = 1
psi_id = Parametrization([RatFunc(t)])
sys_id = weil_substitution(psi_id)
print("trivial D:", sys_id.denominator)
for row in sys_id.coordinate_polys:
    for j, f in enumerate(row):
        print("  F_0%d:" % j, f)

# circle: psi = ((t^2+1)/(2t), (-i t^2 + i)/(2t)), phi = psi -> on witness
num0 = UniPoly(Qi, [1, 0, 1])
den0 = UniPoly(Qi, [0, 2])
num1 = UniPoly(Qi, [i, Qi.zero, -i])
psi_circle = Parametrization([RatFunc(num0, den0), RatFunc(num1, den0)])
t0 = time.time()
sys_circle = weil_substitution(psi_circle)
print("circle D:", sys_circle.denominator)
print("check(phi=psi):", check_on_witness(sys_circle, psi_circle))
print("check(line t,0):", check_on_witness(sys_circle, Parametrization([RatFunc(t), RatFunc(UniPoly.zero(Qi))])))
print("check(t,1):", check_on_witness(sys_circle, Parametrization([RatFunc(t), RatFunc(UniPoly(Qi, [1]))])))
print("circle oracle time: %.1f ms" % (1000 * (time.time() - t0)))

# a psi over Q: witness locus contains the line (t, 0)
psi_q = Parametrization([RatFunc(UniPoly(Qi, [1, 2, 3]), UniPoly(Qi, [5, 0, 1]))])
sys_q = weil_substitution(psi_q)
line = Parametrization([RatFunc(t), RatFunc(UniPoly.zero(Qi))])
print("Q-curve line check:", check_on_witness(sys_q, line))

# pipeline consistency: the computed phi of the circle's own standard
# parametrization lies on the witness variety
res = standard_parametrization(psi_circle)
print("circle verdict:", res.verdict)
print("phi on witness:", check_on_witness(sys_circle, res.phi))

# Example-3 field: Q(a), a^3 = 2, with its golden psi
Qa = NumberField(QQ, UniPoly(QQ, [-2, 0, 0, 1]), "a")
a = Qa.gen
ta = UniPoly.gen(Qa)
num_e3 = UniPoly(Qa, [-a * a - Qa.coerce(2) * a, Qa.one + a])
den_e3 = UniPoly(Qa, [-a, Qa.one])
psi_e3 = Parametrization([RatFunc(num_e3, den_e3)])
t1 = time.time()
sys_e3 = weil_substitution(psi_e3)
res3 = standard_parametrization(psi_e3)
print("e3 verdict:", res3.verdict)
print("e3 phi on witness:", check_on_witness(sys_e3, res3.phi))
print("e3 oracle time: %.1f ms" % (1000 * (time.time() - t1)))
