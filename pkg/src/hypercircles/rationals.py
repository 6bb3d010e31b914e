"""Rational scalars and the field object QQ.

The scalar implementation is chosen at import time: the compiled kernel
(`_ratcore`) when the extension built, otherwise the pure-Python mirror
(`_ratpure`).  Setting HYPERCIRCLES_BACKEND=pure (or =compiled) before
import forces the choice — the benchmark uses this to time both kernels on
identical workloads.  `RationalField` is parameterized by the scalar class,
so both backends can also coexist in one process.
"""

import os

from . import _ratpure

_forced = os.environ.get("HYPERCIRCLES_BACKEND", "").strip().lower()
if _forced not in ("", "pure", "compiled"):
    raise ImportError(
        f"HYPERCIRCLES_BACKEND must be 'pure' or 'compiled', not {_forced!r}"
    )

if _forced == "pure":
    _impl = _ratpure
    BACKEND = "pure"
else:
    try:
        from . import _ratcore as _impl

        BACKEND = "compiled"
    except ImportError:  # pragma: no cover - depends on the build environment
        if _forced == "compiled":
            raise
        _impl = _ratpure
        BACKEND = "pure"

Rational = _impl.Rational
PureRational = _ratpure.Rational


class RationalField:
    """The field of rational numbers over a concrete scalar class."""

    degree = 1

    def __init__(self, scalar=Rational):
        self.scalar = scalar
        self.zero = scalar(0)
        self.one = scalar(1)

    def __call__(self, p, q=1):
        return self.scalar(p, q)

    def coerce(self, x):
        """Return x as a scalar of this field, or raise TypeError."""
        if isinstance(x, self.scalar):
            return x
        if isinstance(x, int):
            return self.scalar(x)
        # Foreign rational-like value (e.g. the other backend's scalar,
        # fractions.Fraction): rebuild from its integer pair.
        num = getattr(x, "numerator", None)
        den = getattr(x, "denominator", None)
        if isinstance(num, int) and isinstance(den, int):
            return self.scalar(num, den)
        raise TypeError(f"cannot coerce {x!r} into {self!r}")

    def from_str(self, text):
        """Parse 'p' or 'p/q' (ints in base 10) into a scalar."""
        s = text.strip()
        if "/" in s:
            a, _, b = s.partition("/")
            return self.scalar(int(a), int(b))
        return self.scalar(int(s))

    def __eq__(self, other):
        return isinstance(other, RationalField) and other.scalar is self.scalar

    def __hash__(self):
        return hash((RationalField, self.scalar))

    def __repr__(self):
        return "QQ" if self.scalar is Rational else f"QQ[{self.scalar.__module__}]"


QQ = RationalField()
