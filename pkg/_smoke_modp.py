import random

from hypercircles.rationals import QQ, Rational
from hypercircles.numberfield import NumberField
from hypercircles.polynomials import UniPoly, poly_gcd
from hypercircles.modp import fold_common_root, _rat_rec, _tower_disc

random.seed(5)

K = NumberField(QQ, UniPoly(QQ, [Rational(-2), Rational(0), Rational(0), Rational(0), Rational(1)]), "a")
# relative quadratic extension over K
y = UniPoly(K, [K.gen + K.one, K.zero, K.one])  # x^2 + (a+1)
L = NumberField(K, y, "b")


def rand_elem(f, bound=9):
    if f is QQ:
        return Rational(random.randint(-bound, bound), random.randint(1, 4))
    return f.element([rand_elem(f.base, bound) for _ in range(f.degree)])


def rand_poly(f, deg):
    cs = [rand_elem(f) for _ in range(deg)]
    lc = rand_elem(f)
    while not lc:
        lc = rand_elem(f)
    cs.append(lc)
    return UniPoly(f, cs)


def exact_fold(polys):
    g = polys[0]
    for p in polys[1:]:
        g = poly_gcd(g, p)
        if g.degree == 0:
            break
    return g


print("disc(L) bits:", _tower_disc(L).bit_length())

# rational reconstruction sanity
for _ in range(200):
    m = random.getrandbits(190) | (1 << 189) | 1
    num = random.randint(-10**20, 10**20)
    den = random.randint(1, 10**20)
    from math import gcd
    g = gcd(abs(num), den)
    num //= g
    den //= g
    if gcd(den, m) != 1:
        continue
    a = num * pow(den, -1, m) % m
    r = _rat_rec(a, m)
    assert r is not None and r == Rational(num, den), (num, den, r)
print("rat_rec ok")

for field in (K, L):
    label = "K" if field is K else "L"
    # coprime families
    for trial in range(12):
        polys = [rand_poly(field, random.randint(2, 5)) for _ in range(3)]
        ex = exact_fold(polys)
        kind, payload = fold_common_root(polys, field)
        if ex.degree == 0:
            assert kind == "empty", (label, trial, kind, ex.degree)
        elif ex.degree == 1:
            want = -ex.monic().coeff(0)
            assert kind == "root" and payload == want, (label, trial, kind)
        else:
            assert kind == "degree", (label, trial, kind, ex.degree)
    # families with a planted common root
    for trial in range(12):
        s = rand_elem(field)
        root = UniPoly(field, [-s, field.one])
        polys = [root * rand_poly(field, random.randint(1, 4)) for _ in range(3)]
        kind, payload = fold_common_root(polys, field)
        ex = exact_fold(polys)
        if ex.degree == 1:
            assert kind == "root", (label, trial, kind)
            assert payload == s, (label, trial, payload, s)
        else:
            assert kind == "degree", (label, trial, kind)
    # planted root with big coordinates
    for trial in range(4):
        s = rand_elem(field, bound=10**12)
        root = UniPoly(field, [-s, field.one])
        polys = [root * rand_poly(field, 2) for _ in range(2)]
        kind, payload = fold_common_root(polys, field)
        assert kind == "root" and payload == s, (label, trial, kind)
    print(f"fold over {label} ok")

print("all modp checks pass")
