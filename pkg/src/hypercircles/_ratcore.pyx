# cython: language_level=3
"""Arbitrary-precision rational scalars, compiled kernel.

Mirror of ``_ratpure.py`` — same invariants (always reduced, denominator
positive), same operator semantics, same hash scheme.  The speedup comes from
C-level attribute access, dispatch, and allocation; the big-integer work
itself is CPython's.
"""

import sys
from math import gcd as _gcd

cdef object _HASH_MODULUS = sys.hash_info.modulus
cdef object _HASH_INF = sys.hash_info.inf


cdef inline Rational _make(object p, object q):
    cdef Rational r = Rational.__new__(Rational)
    r.p = p
    r.q = q
    return r


cdef class Rational:
    cdef readonly object p
    cdef readonly object q

    def __init__(self, p=0, q=1):
        if q == 0:
            raise ZeroDivisionError("rational with zero denominator")
        if q < 0:
            p = -p
            q = -q
        if q != 1:
            g = _gcd(p, q)
            if g > 1:
                p //= g
                q //= g
        self.p = p
        self.q = q

    @property
    def numerator(self):
        return self.p

    @property
    def denominator(self):
        return self.q

    def __add__(self, other):
        cdef object ap, aq, bp, bq, g, g2, t
        if isinstance(other, Rational):
            bp = (<Rational>other).p
            bq = (<Rational>other).q
        elif isinstance(other, int):
            bp = other
            bq = 1
        else:
            return NotImplemented
        ap = self.p
        aq = self.q
        if aq == 1 and bq == 1:
            return _make(ap + bp, 1)
        g = _gcd(aq, bq)
        if g == 1:
            return _make(ap * bq + bp * aq, aq * bq)
        aq2 = aq // g
        bq2 = bq // g
        t = ap * bq2 + bp * aq2
        g2 = _gcd(t, g)
        return _make(t // g2, aq2 * (bq // g2))

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        cdef object ap, aq, bp, bq, g, g2, t
        if isinstance(other, Rational):
            bp = (<Rational>other).p
            bq = (<Rational>other).q
        elif isinstance(other, int):
            bp = other
            bq = 1
        else:
            return NotImplemented
        ap = self.p
        aq = self.q
        if aq == 1 and bq == 1:
            return _make(ap - bp, 1)
        g = _gcd(aq, bq)
        if g == 1:
            return _make(ap * bq - bp * aq, aq * bq)
        aq2 = aq // g
        bq2 = bq // g
        t = ap * bq2 - bp * aq2
        g2 = _gcd(t, g)
        return _make(t // g2, aq2 * (bq // g2))

    def __rsub__(self, other):
        if isinstance(other, int):
            return _make(other, 1).__sub__(self)
        return NotImplemented

    def __mul__(self, other):
        cdef object ap, aq, bp, bq, g1, g2
        if isinstance(other, Rational):
            bp = (<Rational>other).p
            bq = (<Rational>other).q
        elif isinstance(other, int):
            bp = other
            bq = 1
        else:
            return NotImplemented
        ap = self.p
        aq = self.q
        if aq == 1 and bq == 1:
            return _make(ap * bp, 1)
        g1 = _gcd(ap, bq) if bq != 1 else 1
        g2 = _gcd(bp, aq) if aq != 1 else 1
        if g1 > 1:
            ap = ap // g1
            bq = bq // g1
        if g2 > 1:
            bp = bp // g2
            aq = aq // g2
        return _make(ap * bp, aq * bq)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        cdef object ap, aq, bp, bq, g1, g2, p, q
        if isinstance(other, Rational):
            bp = (<Rational>other).p
            bq = (<Rational>other).q
        elif isinstance(other, int):
            bp = other
            bq = 1
        else:
            return NotImplemented
        if bp == 0:
            raise ZeroDivisionError("division by zero rational")
        ap = self.p
        aq = self.q
        g1 = _gcd(ap, bp)
        g2 = _gcd(bq, aq)
        if g1 > 1:
            ap = ap // g1
            bp = bp // g1
        if g2 > 1:
            bq = bq // g2
            aq = aq // g2
        p = ap * bq
        q = aq * bp
        if q < 0:
            p = -p
            q = -q
        return _make(p, q)

    def __rtruediv__(self, other):
        if isinstance(other, int):
            return _make(other, 1).__truediv__(self)
        return NotImplemented

    def __pow__(self, k, mod):
        cdef object p, q
        if mod is not None or not isinstance(k, int):
            return NotImplemented
        if k >= 0:
            return _make(self.p**k, self.q**k)
        if self.p == 0:
            raise ZeroDivisionError("0 cannot be raised to a negative power")
        k = -k
        p = self.q**k
        q = self.p**k
        if q < 0:
            p = -p
            q = -q
        return _make(p, q)

    def __neg__(self):
        return _make(-self.p, self.q)

    def __pos__(self):
        return self

    def __abs__(self):
        return _make(abs(self.p), self.q)

    def __bool__(self):
        return self.p != 0

    def __richcmp__(self, other, int op):
        cdef object bp, bq
        if isinstance(other, Rational):
            bp = (<Rational>other).p
            bq = (<Rational>other).q
        elif isinstance(other, int):
            bp = other
            bq = 1
        else:
            return NotImplemented
        if op == 2:  # ==
            return self.p == bp and self.q == bq
        if op == 3:  # !=
            return self.p != bp or self.q != bq
        if op == 0:  # <
            return self.p * bq < bp * self.q
        if op == 1:  # <=
            return self.p * bq <= bp * self.q
        if op == 4:  # >
            return self.p * bq > bp * self.q
        return self.p * bq >= bp * self.q

    def __hash__(self):
        # Same scheme as fractions.Fraction, so hash(Rational(n)) == hash(n).
        try:
            dinv = pow(self.q, -1, _HASH_MODULUS)
        except ValueError:
            hash_ = _HASH_INF
        else:
            hash_ = hash(hash(abs(self.p)) * dinv)
        result = hash_ if self.p >= 0 else -hash_
        return -2 if result == -1 else result

    def __float__(self):
        return self.p / self.q

    def __reduce__(self):
        return (Rational, (self.p, self.q))

    def __str__(self):
        if self.q == 1:
            return str(self.p)
        return f"{self.p}/{self.q}"

    def __repr__(self):
        return f"Rational({self.p}, {self.q})"
