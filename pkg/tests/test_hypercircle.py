"""The definability pipeline: parameter classification, Moebius recovery,
trace assembly, and the final standard parametrization."""

import itertools

import pytest

from hypercircles import (
    MoebiusTransform,
    NumberField,
    Parametrization,
    QQ,
    RatFunc,
    Rational,
    UniPoly,
    classify_parameter,
    compute_u_for_class,
    conjugacy_classes,
    parameter_budget,
    standard_parametrization,
    verify_identity,
)
from hypercircles.errors import NonProperParametrization
from hypercircles.hypercircle import (
    BAD_DENOMINATOR,
    GOOD,
    NOT_ATTAINED,
    SINGULAR,
    parameter_schedule,
    probably_proper,
    verify_identity_by_evaluation,
)

from conftest import quartic_phi_expected


def test_parameter_budget():
    assert parameter_budget(3, 4) == 11
    assert parameter_budget(2, 2) == 6
    assert parameter_budget(25, 5) == 584


def test_parameter_schedule_prefix():
    assert list(itertools.islice(parameter_schedule(), 7)) == [0, 1, -1, 2, -2, 3, -3]


def test_conjugacy_classes_quartic(quartic_field):
    m_alpha, classes = conjugacy_classes(quartic_field)
    a = quartic_field.gen
    y = UniPoly.gen(quartic_field)
    assert m_alpha == (y + a) * (y**2 + a * a)
    assert sorted(c.size for c in classes) == [1, 2]
    factors = [c.factor for c in classes]
    assert (y + a) in factors and (y**2 + a * a) in factors


def test_conjugacy_classes_circle(circle):
    field, _ = circle
    m_alpha, classes = conjugacy_classes(field)
    i = field.gen
    y = UniPoly.gen(field)
    assert m_alpha == y + i
    assert len(classes) == 1 and classes[0].size == 1


def test_conjugacy_classes_rejects_degree_one():
    from hypercircles.errors import InstanceError

    triv = NumberField(QQ, UniPoly(QQ, [-1, 1]), "a")
    with pytest.raises(InstanceError):
        conjugacy_classes(triv)


def test_classify_parameter_circle(circle):
    field, psi = circle
    _, classes = conjugacy_classes(field)
    sigma = psi.conjugate(classes[0])
    rel = classes[0].relative_field

    assert classify_parameter(psi, sigma, 0).kind == BAD_DENOMINATOR
    v1 = classify_parameter(psi, sigma, 1)
    assert v1.kind == GOOD and v1.s == rel.coerce(1)
    v2 = classify_parameter(psi, sigma, 2)
    assert v2.kind == GOOD and v2.s == rel.coerce(Rational(1, 2))
    # str() stays usable for reporting
    assert "good" in str(v1)


def test_classify_parameter_not_attained():
    # (t, a^2 t^2) moves under alpha -> root of x^2 + alpha^2
    x = UniPoly.gen(QQ)
    field = NumberField(QQ, x**4 - 2, "a")
    a2 = field.gen * field.gen
    psi = Parametrization(
        [
            RatFunc(UniPoly(field, [field.zero, field.one])),
            RatFunc(UniPoly(field, [field.zero, field.zero, a2])),
        ]
    )
    _, classes = conjugacy_classes(field)
    quad = next(c for c in classes if c.size == 2)
    sigma = psi.conjugate(quad)
    assert classify_parameter(psi, sigma, 1).kind == NOT_ATTAINED
    assert classify_parameter(psi, sigma, -1).kind == NOT_ATTAINED
    # t = 0 is attained (s = 0), and is a genuine good sample
    assert classify_parameter(psi, sigma, 0).kind == GOOD
    # the linear class fixes it
    lin = next(c for c in classes if c.size == 1)
    sigma_lin = psi.conjugate(lin)
    v = classify_parameter(psi, sigma_lin, 3)
    assert v.kind == GOOD and v.s == sigma_lin.field.coerce(3)


def test_compute_u_circle(circle):
    field, psi = circle
    _, classes = conjugacy_classes(field)
    report = compute_u_for_class(psi, classes[0])
    assert report.fixes
    rel = classes[0].relative_field
    inv_t = MoebiusTransform(rel, 0, 1, 1, 0)
    assert report.u.proportional(inv_t)
    assert report.parameters_tried <= parameter_budget(psi.degree, field.degree)
    assert "fixes" in report.describe()


def test_verify_identity_agrees_with_evaluation(circle):
    field, psi = circle
    _, classes = conjugacy_classes(field)
    cls = classes[0]
    rel = cls.relative_field
    sigma = psi.conjugate(cls)
    good = MoebiusTransform(rel, 0, 1, 1, 0)
    bad = MoebiusTransform(rel, 1, 1, 0, 1)  # t + 1
    assert verify_identity(psi, sigma, good)
    assert verify_identity_by_evaluation(psi, sigma, good)
    assert not verify_identity(psi, sigma, bad)
    assert not verify_identity_by_evaluation(psi, sigma, bad)


def test_standard_parametrization_circle(circle):
    field, psi = circle
    res = standard_parametrization(psi)
    assert res.defined and res.verdict == "DefinedOverK"
    assert res.certificate is None
    # the curve is its own hypercircle here
    assert res.phi == psi


def test_standard_parametrization_quartic(quartic):
    field, psi = quartic
    res = standard_parametrization(psi)
    assert res.defined
    assert res.phi == quartic_phi_expected(field)
    # defining identity of the standard parametrization
    t = RatFunc.gen(field)
    acc = RatFunc.constant(field, field.zero)
    for k, comp in enumerate(res.phi):
        acc = acc + comp * (field.gen**k)
    assert acc == t
    assert res.parameters_tried <= parameter_budget(psi.degree, field.degree)


def test_standard_parametrization_negative():
    x = UniPoly.gen(QQ)
    field = NumberField(QQ, x**4 - 2, "a")
    a2 = field.gen * field.gen
    psi = Parametrization(
        [
            RatFunc(UniPoly(field, [field.zero, field.one])),
            RatFunc(UniPoly(field, [field.zero, field.zero, a2])),
        ]
    )
    res = standard_parametrization(psi)
    assert not res.defined and res.verdict == "NotDefinedOverK"
    assert res.phi is None
    cert = res.certificate
    assert cert is not None and cert.cls.size == 2
    assert cert.not_attained is not None
    assert "not attained" in cert.describe()
    fixing = [r for r in res.reports if r.fixes]
    assert len(fixing) == 1 and fixing[0].cls.size == 1


def test_non_proper_raises():
    x = UniPoly.gen(QQ)
    field = NumberField(QQ, x**2 + 1, "i")
    psi = Parametrization(
        [
            RatFunc(UniPoly(field, [field.zero, field.zero, field.one])),
            RatFunc(UniPoly(field, [field.zero] * 4 + [field.one])),
        ]
    )  # (t^2, t^4): factors through t -> t^2
    assert not probably_proper(psi)
    with pytest.raises(NonProperParametrization):
        standard_parametrization(psi)


def test_probably_proper_accepts_good_input(circle):
    _, psi = circle
    assert probably_proper(psi)


def test_good_samples_match_u(circle):
    # every good verdict must satisfy s = u(t) for the witnessing u
    field, psi = circle
    _, classes = conjugacy_classes(field)
    cls = classes[0]
    sigma = psi.conjugate(cls)
    rel = cls.relative_field
    u = MoebiusTransform(rel, 0, 1, 1, 0)
    for t in range(-5, 6):
        v = classify_parameter(psi, sigma, t)
        if v.kind == GOOD:
            assert v.s == u(rel.coerce(t))
