import json

from hypercircles.errors import InstanceError
from hypercircles.instances import parse_instance, serialize_instance, instance_doc
from hypercircles.hypercircle import standard_parametrization

# Example-3-shaped instance: M = x^4 - 2, psi = ((a t - a^2 - 2a)... ) -- use
# the golden one-component cubic-field instance instead for brevity, then the
# full 4-degree field one.
doc = {
    "field": {"generator": "a", "minpoly": ["-2", "0", "0", "1"]},
    "parametrization": [
        {
            "num": [["0", "-2", "-1"], ["1", "1", "0"]],
            "den": [["0", "-1", "0"], ["1", "0", "0"]],
        }
    ],
}
text = json.dumps(doc)
field, psi = parse_instance(text)
print("parsed:", psi.render())
out = serialize_instance(field, psi)
field2, psi2 = parse_instance(out)
assert instance_doc(field2, psi2) == instance_doc(field, psi), "round trip failed"
print("round trip ok")
res = standard_parametrization(psi, field)
print("verdict:", res.verdict)

# error cases
bad = [
    ('{"field": {"generator": "a", "minpoly": ["-1", "0", "1"]}, "parametrization": []}',
     "reducible"),
    ('{"field": {"generator": "a", "minpoly": ["1", "1"]}, "parametrization": [{"num": [["1","2"]], "den": [["1"]]}]}',
     "length"),
    ('{"field": {"generator": "a", "minpoly": ["1", "0", "1"]}, "parametrization": [{"num": [["1","0"]], "den": [["0","0"]]}]}',
     "zero denominator"),
    ("{not json", "line 1"),
]
for text, frag in bad:
    try:
        parse_instance(text)
        print("FAIL: accepted", frag)
    except InstanceError as exc:
        ok = frag in str(exc)
        print(("ok  " if ok else "MISS"), frag, "->", exc)
