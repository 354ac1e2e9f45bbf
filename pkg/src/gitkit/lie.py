"""Exact weight-lattice and symmetric-group primitives shared by every module.

Weights are plain tuples of exact rationals (ints where the value is integral,
fractions.Fraction otherwise).  Mixed int/Fraction tuples hash and compare
consistently, so weights can key dicts directly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

Weight = tuple


class GitkitError(Exception):
    """Domain error carrying a machine-readable code and context."""

    def __init__(self, code: str, message: str, context: dict | None = None):
        super().__init__(message)
        self.code = code
        self.message = message
        self.context = context or {}


def rat(x) -> int | Fraction:
    """Canonicalize a rational: Fraction with denominator 1 becomes int."""
    if isinstance(x, bool):
        raise GitkitError("bad_rational", "boolean is not a rational", {"value": repr(x)})
    if isinstance(x, int):
        return x
    f = Fraction(x)
    return int(f) if f.denominator == 1 else f


def parse_rat(s) -> int | Fraction:
    """Parse 'p/q', 'p', or a number into an exact rational."""
    try:
        if isinstance(s, str):
            return rat(Fraction(s.strip()))
        if isinstance(s, float):
            # floats arrive from CLI flags like --level -1.0; they must be exact
            return rat(Fraction(s))
        return rat(s)
    except (ValueError, ZeroDivisionError, TypeError):
        raise GitkitError("bad_rational", f"cannot parse a rational from {s!r}", {})


def fmt_rat(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def weight(coords) -> Weight:
    return tuple(rat(c) for c in coords)


def weight_from_json(arr) -> Weight:
    return tuple(parse_rat(c) for c in arr)


def weight_to_json(w: Weight) -> list:
    return [fmt_rat(c) for c in w]


def wadd(a: Weight, b: Weight) -> Weight:
    return tuple(rat(x + y) for x, y in zip(a, b, strict=True))


def wsub(a: Weight, b: Weight) -> Weight:
    return tuple(rat(x - y) for x, y in zip(a, b, strict=True))


def wneg(a: Weight) -> Weight:
    return tuple(rat(-x) for x in a)


def wscale(c, a: Weight) -> Weight:
    return tuple(rat(c * x) for x in a)


def wdot(a: Weight, b: Weight):
    return rat(sum(x * y for x, y in zip(a, b, strict=True)))


def wnorm_sq(a: Weight):
    return wdot(a, a)


def is_zero(a: Weight) -> bool:
    return all(x == 0 for x in a)


def is_integral(a: Weight) -> bool:
    return all(isinstance(x, int) or Fraction(x).denominator == 1 for x in a)


def as_int_weight(a: Weight) -> tuple[int, ...]:
    if not is_integral(a):
        raise GitkitError("not_integral", "integer weight required", {"weight": weight_to_json(a)})
    return tuple(int(x) for x in a)


def primitive_integer(a: Weight) -> tuple[int, ...]:
    """Scale a nonzero rational vector to a primitive integer vector (same ray)."""
    fr = [Fraction(x) for x in a]
    if all(f == 0 for f in fr):
        raise GitkitError("zero_vector", "primitive direction of the zero vector", {})
    den = 1
    for f in fr:
        den = den * f.denominator // gcd(den, f.denominator)
    ints = [int(f * den) for f in fr]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return tuple(v // g for v in ints)


@dataclass(frozen=True)
class WeylElement:
    """Permutation of coordinate slots; perm[i] is the image of slot i (0-based)."""

    perm: tuple[int, ...]

    @property
    def length(self) -> int:
        p = self.perm
        return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def apply(self, mu: Weight) -> Weight:
        # (w.mu) places mu_i at slot perm[i]
        out = [0] * len(self.perm)
        for i, pi in enumerate(self.perm):
            out[pi] = mu[i]
        return tuple(out)

    def compose(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(tuple(self.perm[other.perm[i]] for i in range(len(self.perm))))

    @staticmethod
    def identity(r: int) -> "WeylElement":
        return WeylElement(tuple(range(r)))


def weyl_orbit(lam: Weight, r: int) -> set[Weight]:
    """All coordinate permutations of lam, deduplicated."""
    if len(lam) != r:
        raise GitkitError("rank_mismatch", "weight length does not match rank",
                          {"rank": r, "weight": weight_to_json(lam)})
    return {tuple(p) for p in itertools.permutations(lam)}


def rho(r: int) -> Weight:
    """The fixed shift vector (r-1, r-2, ..., 0)."""
    if r < 1:
        raise GitkitError("bad_rank", "rank must be at least 1", {"rank": r})
    return tuple(range(r - 1, -1, -1))


def is_dominant(lam: Weight) -> bool:
    return all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def dominantize(mu: Weight):
    """Sort mu weakly decreasing; returns (w, dominant) with w.apply(mu) dominant,
    or None when two entries coincide (singular)."""
    r = len(mu)
    if len(set(mu)) != r:
        return None
    order = sorted(range(r), key=lambda i: mu[i], reverse=True)
    # slot order[j] of mu lands at sorted position j
    perm = [0] * r
    for j, i in enumerate(order):
        perm[i] = j
    w = WeylElement(tuple(perm))
    dom = w.apply(mu)
    assert is_dominant(dom)
    return w, dom
