"""Laurent polynomial characters for GL(r) torus representations.

Everything here is exact integer arithmetic on exponent dictionaries.  The
character of an irreducible is produced by alternating-sum division: build the
signed numerator, then divide out the product of (1 - t^(-alpha)) one positive
root at a time.  Division is long division on the lex-largest monomial; if a
division fails to terminate the input was not divisible and we abort rather
than return a rounded answer.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .lie import (
    GitkitError,
    Weight,
    is_dominant,
    rho,
    wadd,
    wsub,
    weight_from_json,
    weight_to_json,
)


class LaurentPoly:
    """Integer Laurent polynomial in r torus variables, keyed by exponent tuple."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: dict | None = None):
        self.rank = rank
        clean = {}
        for w, c in (terms or {}).items():
            if c == 0:
                continue
            if len(w) != rank:
                raise GitkitError("rank_mismatch", "exponent length does not match rank",
                                  {"rank": rank, "exponent": list(w)})
            key = tuple(int(x) for x in w)
            if any(key[i] != w[i] for i in range(rank)):
                raise GitkitError("not_integral", "Laurent exponents must be integers",
                                  {"exponent": [str(x) for x in w]})
            ci = int(c)
            if ci != c:
                raise GitkitError("not_integral", "Laurent coefficients must be integers",
                                  {"coefficient": str(c)})
            clean[key] = clean.get(key, 0) + ci
        self.terms = {k: v for k, v in clean.items() if v != 0}

    @staticmethod
    def zero(rank: int) -> "LaurentPoly":
        return LaurentPoly(rank, {})

    @staticmethod
    def monomial(w, coeff: int = 1) -> "LaurentPoly":
        return LaurentPoly(len(w), {tuple(w): coeff})

    @staticmethod
    def one(rank: int) -> "LaurentPoly":
        return LaurentPoly(rank, {(0,) * rank: 1})

    def coeff(self, w) -> int:
        return self.terms.get(tuple(w), 0)

    def support(self) -> set[tuple[int, ...]]:
        return set(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.rank == other.rank and self.terms == other.terms

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return LaurentPoly(self.rank, out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) - c
        return LaurentPoly(self.rank, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.rank, {w: -c for w, c in self.terms.items()})

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = wadd(w1, w2)
                out[w] = out.get(w, 0) + c1 * c2
        return LaurentPoly(self.rank, out)

    def scale(self, c: int) -> "LaurentPoly":
        return LaurentPoly(self.rank, {w: c * v for w, v in self.terms.items()})

    def evaluate(self, point) -> Fraction:
        """Exact evaluation at a tuple of nonzero rationals (zero allowed only
        when no negative exponent touches that coordinate)."""
        pt = [Fraction(x) for x in point]
        if len(pt) != self.rank:
            raise GitkitError("rank_mismatch", "evaluation point has wrong length",
                              {"rank": self.rank, "point": [str(x) for x in pt]})
        total = Fraction(0)
        for w, c in self.terms.items():
            val = Fraction(c)
            for x, e in zip(pt, w):
                if x == 0:
                    if e < 0:
                        raise GitkitError("pole", "zero coordinate raised to a negative power",
                                          {"point": [str(v) for v in pt]})
                    if e > 0:
                        val = Fraction(0)
                        break
                else:
                    val *= x ** e
            total += val
        return total

    def total_coeff_sum(self) -> int:
        return sum(self.terms.values())

    def _check(self, other: "LaurentPoly"):
        if self.rank != other.rank:
            raise GitkitError("rank_mismatch", "mixed ranks in Laurent arithmetic",
                              {"left": self.rank, "right": other.rank})

    def to_json(self) -> list:
        return [{"w": list(w), "c": c} for w, c in sorted(self.terms.items())]

    @staticmethod
    def from_json(arr, rank: int | None = None) -> "LaurentPoly":
        terms = {}
        for item in arr:
            w = tuple(int(x) for x in item["w"])
            terms[w] = terms.get(w, 0) + int(item["c"])
        if rank is None:
            if not terms:
                raise GitkitError("bad_input", "rank required for an empty polynomial", {})
            rank = len(next(iter(terms)))
        return LaurentPoly(rank, terms)

    def __repr__(self):
        if not self.terms:
            return "LaurentPoly(0)"
        bits = []
        for w, c in sorted(self.terms.items(), reverse=True):
            bits.append(f"{c}*t^{w}")
        return "LaurentPoly(" + " + ".join(bits) + ")"


def positive_roots(r: int) -> list[tuple[int, ...]]:
    """e_i - e_j for i < j, as integer exponent vectors."""
    out = []
    for i in range(r):
        for j in range(i + 1, r):
            v = [0] * r
            v[i], v[j] = 1, -1
            out.append(tuple(v))
    return out


def weyl_dim(lam: Weight) -> int:
    """Dimension by the product formula; exact."""
    r = len(lam)
    num = Fraction(1)
    for i in range(r):
        for j in range(i + 1, r):
            num *= Fraction(lam[i] - lam[j] + j - i, j - i)
    if num.denominator != 1:
        raise GitkitError("internal", "dimension formula gave a non-integer",
                          {"weight": weight_to_json(lam)})
    return int(num)


def _check_dominant_integral(lam: Weight):
    if not all(isinstance(x, int) for x in lam):
        raise GitkitError("not_integral", "highest weight must have integer entries",
                          {"weight": weight_to_json(lam)})
    if not is_dominant(lam):
        raise GitkitError("not_dominant", "weight entries must be weakly decreasing",
                          {"weight": weight_to_json(lam)})


def _divide_one_factor(terms: dict, beta: tuple[int, ...], step_cap: int) -> dict:
    # exact division by (1 - t^beta) with beta lex-negative, so the divisor's
    # leading monomial is 1 and long division peels the lex-max term
    quotient: dict = {}
    rem = dict(terms)
    steps = 0
    while rem:
        steps += 1
        if steps > step_cap:
            raise GitkitError("non_exact_division",
                              "alternating-sum numerator is not divisible by the root factor",
                              {"beta": list(beta)})
        m = max(rem)
        c = rem.pop(m)
        quotient[m] = quotient.get(m, 0) + c
        m2 = wadd(m, beta)
        nc = rem.get(m2, 0) + c
        if nc:
            rem[m2] = nc
        else:
            rem.pop(m2, None)
    return quotient


_WC_CACHE: dict = {}


def weyl_character(lam: Weight) -> LaurentPoly:
    """Character of the irreducible with highest weight lam (weakly decreasing ints).

    Signed numerator over all coordinate permutations of lam + rho, then exact
    division by each factor (1 - t^(e_j - e_i)), i < j.  All coefficients of the
    result are verified nonnegative and the dimension matches the product formula.
    """
    lam = tuple(lam)
    _check_dominant_integral(lam)
    r = len(lam)
    if r > 6:
        raise GitkitError("rank_too_large", "character expansion supported up to rank 6",
                          {"rank": r})
    cached = _WC_CACHE.get(lam)
    if cached is not None:
        return cached

    shift = rho(r)
    target = wadd(lam, shift)  # strictly decreasing, so all permutations distinct
    num: dict = {}
    for perm in itertools.permutations(range(r)):
        v = tuple(target[perm[i]] for i in range(r))
        inv = sum(1 for a in range(r) for b in range(a + 1, r) if perm[a] > perm[b])
        w = wsub(v, shift)
        num[w] = num.get(w, 0) + (-1 if inv % 2 else 1)

    dim = weyl_dim(lam)
    cap = 500 * max(dim, 1) + 20000
    terms = {k: v for k, v in num.items() if v}
    for i in range(r):
        for j in range(i + 1, r):
            beta = [0] * r
            beta[i], beta[j] = -1, 1  # -(e_i - e_j), lex-negative
            terms = _divide_one_factor(terms, tuple(beta), cap)

    poly = LaurentPoly(r, terms)
    if any(c < 0 for c in poly.terms.values()):
        raise GitkitError("internal", "negative multiplicity after division",
                          {"weight": weight_to_json(lam)})
    if poly.total_coeff_sum() != dim:
        raise GitkitError("internal", "character dimension mismatch",
                          {"weight": weight_to_json(lam), "expected": dim,
                           "got": poly.total_coeff_sum()})
    _WC_CACHE[lam] = poly
    return poly


def _decompose(poly: LaurentPoly) -> dict[Weight, int]:
    """Write a virtual character as an integer combination of irreducibles by
    repeatedly stripping the lex-max weight.  Aborts on negative multiplicity."""
    rem = poly
    out: dict[Weight, int] = {}
    while not rem.is_zero():
        top = max(rem.terms)
        if not is_dominant(top):
            raise GitkitError("internal", "lex-max support weight is not dominant",
                              {"weight": list(top)})
        mult = rem.terms[top]
        if mult < 0:
            raise GitkitError("not_a_character",
                              "negative multiplicity encountered during decomposition",
                              {"weight": list(top), "multiplicity": mult})
        out[top] = mult
        rem = rem - weyl_character(top).scale(mult)
    return out


def tensor_decompose(lam: Weight, mu: Weight) -> dict[Weight, int]:
    """Multiplicities of the irreducible pieces of V_lam (x) V_mu."""
    lam, mu = tuple(lam), tuple(mu)
    if len(lam) != len(mu):
        raise GitkitError("rank_mismatch", "tensor factors must share a rank",
                          {"left": len(lam), "right": len(mu)})
    prod = weyl_character(lam) * weyl_character(mu)
    out = _decompose(prod)
    assert sum(weyl_dim(nu) * m for nu, m in out.items()) == weyl_dim(lam) * weyl_dim(mu)
    return out


def invariant_dim(lams: list, group: str = "SL") -> int:
    """Dimension of the invariant subspace of a tensor product of irreducibles.

    'GL' counts the trivial character exactly; 'SL' also counts determinant
    twists, i.e. all weights with equal coordinates.
    """
    if group not in ("SL", "GL"):
        raise GitkitError("bad_group", "group must be 'SL' or 'GL'", {"group": group})
    lams = [tuple(l) for l in lams]
    if not lams:
        raise GitkitError("bad_input", "need at least one factor", {})
    r = len(lams[0])
    if any(len(l) != r for l in lams):
        raise GitkitError("rank_mismatch", "factors must share a rank", {})
    prod = LaurentPoly.one(r)
    for l in lams:
        prod = prod * weyl_character(l)
    decomp = _decompose(prod)
    if group == "GL":
        return decomp.get((0,) * r, 0)
    total = 0
    for nu, m in decomp.items():
        if len(set(nu)) == 1:
            total += m
    return total


_SU2_INV_CACHE: dict = {}


def su2_invariant_dim(labels, scale: int = 1) -> int:
    """Invariant dimension for a tensor product of su(2) irreducibles.

    `labels` are the doubled spins (integers, so spin 3/2 is label 3); `scale`
    multiplies every label first.  Realized through SL(2) weights (n, 0).
    """
    scaled = []
    for l in labels:
        v = Fraction(l) * scale
        if v.denominator != 1:
            raise GitkitError("not_integral", "scaled label is not an integer",
                              {"label": str(l), "scale": scale})
        scaled.append(int(v))
    ells = tuple(sorted(scaled))
    if any(l < 0 for l in ells):
        raise GitkitError("bad_input", "labels must be nonnegative", {"labels": list(ells)})
    cached = _SU2_INV_CACHE.get(ells)
    if cached is None:
        cached = invariant_dim([(l, 0) for l in ells], group="SL")
        _SU2_INV_CACHE[ells] = cached
    return cached


def bwb_cohomology(lam: Weight):
    """Sheaf cohomology degree for the line bundle of an arbitrary integral weight.

    Returns None when lam + rho has a repeated entry (all cohomology vanishes),
    otherwise (degree, dominant weight): degree is the number of inversions
    needed to sort lam + rho and the weight is the sorted result minus rho.
    """
    from .lie import dominantize

    lam = tuple(lam)
    if not all(isinstance(x, int) for x in lam):
        raise GitkitError("not_integral", "integral weight required", {"weight": weight_to_json(lam)})
    r = len(lam)
    shift = rho(r)
    mu = wadd(lam, shift)
    res = dominantize(mu)
    if res is None:
        return None
    w, dom = res
    return w.length, wsub(dom, shift)


def character_to_json(poly: LaurentPoly) -> list:
    return poly.to_json()


def decomposition_to_json(decomp: dict) -> list:
    return [{"weight": weight_to_json(w), "mult": m} for w, m in sorted(decomp.items(), reverse=True)]
