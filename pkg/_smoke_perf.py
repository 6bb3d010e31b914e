import time

from hypercircles.generators import gen_instance, canonical_minpoly
from hypercircles.instances import parse_instance
from hypercircles.hypercircle import standard_parametrization
import json


def probe(n, d, seed=0):
    t0 = time.time()
    doc = gen_instance("defined", d, minpoly=canonical_minpoly(n), seed=seed)
    t1 = time.time()
    field, psi = parse_instance(json.dumps(doc))
    res = standard_parametrization(psi)
    t2 = time.time()
    print(
        f"n={n} d={d} gen={t1 - t0:7.2f}s solve={t2 - t1:7.2f}s "
        f"verdict={type(res).__name__}",
        flush=True,
    )


probe(2, 25)
probe(5, 5)
probe(5, 10)
probe(5, 25)
