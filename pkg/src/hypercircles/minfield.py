"""Minimum field of definition for curves that fail K-definability.

When some conjugations move the curve, the curve is still defined over the
intersection L of the fixed fields of the conjugations that do fix it.  Over
the ground field Q this module computes L explicitly: a Q-basis, a primitive
element, and its minimal polynomial, by intersecting the kernels of the
linearized invariance conditions sigma(x) = x.

For the quadratic relative case [K(alpha) : L] = 2 there is also an explicit
tower model L(alpha), used to rerun the definability decision relative to L.
"""

import itertools
from dataclasses import dataclass

from .errors import InstanceError, InternalInvariantError
from .factoring import factor_rational
from .linalg import kernel_basis, rref
from .numberfield import NumberField
from .polynomials import UniPoly
from .rationals import RationalField


@dataclass
class FixedField:
    field: NumberField
    basis: tuple
    primitive: object
    primitive_minpoly: UniPoly

    @property
    def degree(self):
        return len(self.basis)

    @property
    def relative_degree(self):
        return self.field.degree // self.degree

    @property
    def is_rational(self):
        return self.degree == 1

    @property
    def is_whole_field(self):
        return self.degree == self.field.degree


def invariance_system(cls):
    """Q-linear conditions on alpha-power coordinates for sigma(x) = x.

    sigma sends alpha to the class's designated root; the returned rows are
    rational vectors of length n = deg K(alpha), one row per flattened
    coordinate of sigma(alpha^j) - alpha^j.
    """
    rel = cls.relative_field
    field = rel.base
    if not isinstance(field.base, RationalField):
        raise InstanceError("invariance systems require a ground field of Q")
    n = field.degree
    root = rel.gen
    cols = []
    p = rel.one
    for j in range(n):
        img = p  # sigma(alpha^j) = root^j
        orig = rel.coerce(field.gen ** j)
        diff = img - orig
        flat = []
        for kcoord in diff.coords:  # over K(alpha)
            flat.extend(kcoord.coords)  # over QQ
        cols.append(flat)
        p = p * root
    rows = []
    nrows = len(cols[0])
    for r in range(nrows):
        rows.append([cols[j][r] for j in range(n)])
    return rows


def _minimal_polynomial(x):
    """Minimal polynomial over Q of an element of a simple extension of Q."""
    cp = x.charpoly()
    _, factors = factor_rational(cp)
    for fac, _ in factors:
        if not fac(x):
            return fac
    raise InternalInvariantError("no charpoly factor annihilates the element")


def minimum_field(field, fixing_classes):
    """The fixed field L of the given conjugacy classes, as a FixedField.

    `fixing_classes` are the classes whose conjugation fixes the curve; the
    identity conjugation is implicit.  L = Q and L = K(alpha) are both
    possible outcomes (empty class list gives the whole field).
    """
    if not isinstance(field.base, RationalField):
        raise InstanceError("minimum fields are computed over the ground field Q")
    n = field.degree
    system = []
    for cls in fixing_classes:
        system.extend(invariance_system(cls))
    if not system:
        vectors = [
            [field.base.one if i == j else field.base.zero for i in range(n)]
            for j in range(n)
        ]
    else:
        vectors = kernel_basis(system, n, field.base)
    basis = tuple(field.element(v) for v in vectors)
    m = len(basis)
    if m == 0:
        raise InternalInvariantError("fixed field lost the rationals")
    # primitive element: basis elements first, then small integer combinations
    best = None
    for cand in _primitive_candidates(basis, field):
        mp = _minimal_polynomial(cand)
        if mp.degree == m:
            best = (cand, mp)
            break
    if best is None:
        raise InternalInvariantError("no primitive element found for the fixed field")
    primitive, mp = best
    return FixedField(field=field, basis=basis, primitive=primitive, primitive_minpoly=mp)


def _primitive_candidates(basis, field):
    for b in basis:
        yield b
    m = len(basis)
    if m <= 1:
        return
    for height in range(1, 9):
        for combo in itertools.product(range(-height, height + 1), repeat=m):
            if max(abs(c) for c in combo) != height:
                continue
            acc = field.zero
            for c, b in zip(combo, basis):
                if c:
                    acc = acc + b * field.base.coerce(c)
            if acc:
                yield acc


def quadratic_relative_model(field, fixed):
    """Tower model for [K(alpha) : L] = 2: returns (E, rewrite).

    E is L(alpha) with L = Q(primitive); `rewrite` maps elements of K(alpha)
    to E.  Only the quadratic relative case is supported.
    """
    if fixed.relative_degree != 2:
        raise InstanceError(
            "explicit tower models are only provided for quadratic descent"
        )
    qq = field.base
    n = field.degree
    m = fixed.degree
    lfield = NumberField(qq, fixed.primitive_minpoly, "g")
    # Q-basis of K(alpha): primitive^j * alpha^i, i in {0,1}, j in 0..m-1.
    cols = []
    for i in range(2):
        for j in range(m):
            e = fixed.primitive**j * field.gen**i
            cols.append(list(e.coords))
    # invert the basis matrix: solve B y = coords for many right-hand sides
    aug = []
    for r in range(n):
        row = [cols[c][r] for c in range(n)]
        row.extend(
            [qq.one if r == k else qq.zero for k in range(n)]
        )
        aug.append(row)
    rows, pivots = rref(aug, qq)
    if pivots != list(range(n)):
        raise InternalInvariantError("primitive-power basis is singular")
    binv = [row[n:] for row in rows]

    def to_tower_coords(x):
        coords = x.coords
        y = []
        for r in range(n):
            acc = qq.zero
            for c in range(n):
                if binv[r][c] and coords[c]:
                    acc = acc + binv[r][c] * coords[c]
            y.append(acc)
        lo = lfield.element(y[:m])
        hi = lfield.element(y[m:])
        return lo, hi

    a2lo, a2hi = to_tower_coords(field.gen * field.gen)
    relpoly = UniPoly(lfield, [-a2lo, -a2hi, lfield.one])
    tower = NumberField(lfield, relpoly, field.name)

    def rewrite(x):
        lo, hi = to_tower_coords(field.coerce(x))
        return tower.element([lo, hi])

    return tower, rewrite
