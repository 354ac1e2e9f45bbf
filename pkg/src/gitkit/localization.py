"""Fixed-point localization sums and their exact bookkeeping.

A ConeSeries is a finite sum of terms  num / prod_b (1 - t^b), each carrying
an expansion direction xi with <b, xi> < 0 for every denominator exponent b,
so the geometric expansion of each factor moves strictly down in the xi
pairing.  Two consistency notions coexist and must not be conflated:

 * rational equality: put everything over a common denominator and compare
   numerators exactly;
 * box expansion: expand each term as a power series in its own direction and
   compare coefficients inside a finite exponent box.

A sum can vanish rationally while its box expansions reproduce a delta-comb,
which is precisely what the circle-action identities exercise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .characters import LaurentPoly, positive_roots, weyl_character
from .lie import (
    GitkitError,
    Weight,
    fmt_rat,
    parse_rat,
    primitive_integer,
    rat,
    rho,
    wadd,
    wdot,
    weight,
    wsub,
)
from .polytopes import Polytope, _det, hull


@dataclass(frozen=True)
class Term:
    num: LaurentPoly
    den: tuple              # integer exponent tuples b, factor (1 - t^b) each
    dir: tuple              # rational direction with <b, dir> < 0 for all b

    def __post_init__(self):
        r = self.num.rank
        object.__setattr__(self, "den", tuple(tuple(int(x) for x in b) for b in self.den))
        object.__setattr__(self, "dir", tuple(parse_rat(x) for x in self.dir))
        if len(self.dir) != r:
            raise GitkitError("rank_mismatch", "direction length does not match rank",
                              {"rank": r, "dir": len(self.dir)})
        for b in self.den:
            if len(b) != r:
                raise GitkitError("rank_mismatch", "denominator exponent length mismatch",
                                  {"rank": r, "exponent": list(b)})
            if all(x == 0 for x in b):
                raise GitkitError("bad_term", "denominator exponent must be nonzero", {})
            if wdot(b, self.dir) >= 0:
                raise GitkitError("bad_direction",
                                  "expansion direction must pair negatively with every "
                                  "denominator exponent",
                                  {"exponent": list(b)})


@dataclass(frozen=True)
class ConeSeries:
    terms: tuple

    @property
    def rank(self) -> int:
        if not self.terms:
            raise GitkitError("bad_series", "empty series has no rank", {})
        return self.terms[0].num.rank

    def __add__(self, other: "ConeSeries") -> "ConeSeries":
        return ConeSeries(self.terms + other.terms)

    def scale(self, c: int) -> "ConeSeries":
        return ConeSeries(tuple(Term(t.num.scale(c), t.den, t.dir) for t in self.terms))

    def to_json(self) -> list:
        return [{"num": t.num.to_json(), "den": [list(b) for b in t.den],
                 "dir": [fmt_rat(x) for x in t.dir]} for t in self.terms]

    @staticmethod
    def from_json(arr) -> "ConeSeries":
        terms = []
        for item in arr:
            num = LaurentPoly.from_json(item["num"], rank=len(item["dir"]))
            terms.append(Term(num, tuple(tuple(int(x) for x in b) for b in item["den"]),
                              tuple(parse_rat(x) for x in item["dir"])))
        return ConeSeries(tuple(terms))


def evaluate(series: ConeSeries, point) -> Fraction:
    """Exact value at a rational point; hitting a denominator zero raises and
    asks for a different sample point."""
    pt = [Fraction(parse_rat(x)) for x in point]
    total = Fraction(0)
    for t in series.terms:
        val = t.num.evaluate(pt)
        for b in t.den:
            mono = Fraction(1)
            for x, e in zip(pt, b):
                if x == 0 and e < 0:
                    raise GitkitError("pole", "zero coordinate with negative exponent; "
                                      "pick another sample point", {})
                mono *= x ** e
            factor = 1 - mono
            if factor == 0:
                raise GitkitError("pole", "sample point lies on a denominator zero; "
                                  "pick another sample point",
                                  {"exponent": list(b)})
            val /= factor
        total += val
    return total


def _lex_positive(b: tuple) -> bool:
    for x in b:
        if x != 0:
            return x > 0
    return False


def rational_sum(series: ConeSeries) -> tuple[LaurentPoly, tuple]:
    """Common-denominator normal form (numerator, sorted denominator exponents).

    Every factor is flipped to a lex-positive exponent first, so mirrored
    denominators cancel structurally."""
    r = series.rank
    flipped = []
    den_count: dict = {}
    for t in series.terms:
        num = t.num
        count: dict = {}
        for b in t.den:
            if _lex_positive(b):
                bb = b
            else:
                bb = tuple(-x for x in b)
                # 1/(1 - t^b) = -t^bb / (1 - t^bb)
                num = num * LaurentPoly.monomial(bb, -1)
            count[bb] = count.get(bb, 0) + 1
        flipped.append((num, count))
        for bb, k in count.items():
            den_count[bb] = max(den_count.get(bb, 0), k)
    total = LaurentPoly.zero(r)
    for num, count in flipped:
        piece = num
        for bb, k in den_count.items():
            missing = k - count.get(bb, 0)
            if missing:
                factor = LaurentPoly(r, {(0,) * r: 1, bb: -1})
                for _ in range(missing):
                    piece = piece * factor
        total = total + piece
    den = tuple(sorted(itertools.chain.from_iterable([bb] * k for bb, k in den_count.items())))
    return total, den


def rational_eq(s1: ConeSeries, s2: ConeSeries) -> bool:
    """Equality as rational functions, exact."""
    diff = ConeSeries(s1.terms + s2.scale(-1).terms)
    num, _den = rational_sum(diff)
    return num.is_zero()


def expand_in_box(series: ConeSeries, box) -> LaurentPoly:
    """Sum of the per-term power-series expansions, truncated to an exponent box.

    Each term expands every factor 1/(1 - t^b) as a geometric series in its
    own direction; monomials whose pairing drops below the box minimum are
    pruned, which loses nothing inside the box because every further factor
    only decreases the pairing."""
    r = series.rank
    box = [(int(lo), int(hi)) for lo, hi in box]
    if len(box) != r:
        raise GitkitError("rank_mismatch", "box length does not match rank",
                          {"rank": r, "box": len(box)})
    if any(lo > hi for lo, hi in box):
        raise GitkitError("bad_box", "box bounds must satisfy lo <= hi", {})
    out: dict = {}
    for t in series.terms:
        xi = t.dir
        minval = sum(min(Fraction(xi[i]) * lo, Fraction(xi[i]) * hi)
                     for i, (lo, hi) in enumerate(box))
        cur = {w: c for w, c in t.num.terms.items() if wdot(w, xi) >= minval}
        for b in t.den:
            step = wdot(b, xi)   # strictly negative
            nxt: dict = {}
            for w, c in cur.items():
                v = w
                pv = wdot(v, xi)
                while pv >= minval:
                    nxt[v] = nxt.get(v, 0) + c
                    v = wadd(v, b)
                    pv += step
            cur = nxt
        for w, c in cur.items():
            if all(lo <= w[i] <= hi for i, (lo, hi) in enumerate(box)):
                out[w] = out.get(w, 0) + c
    return LaurentPoly(r, out)


def _edge_directions(p: Polytope) -> dict:
    dirs: dict = {v: [] for v in p.vertices}
    for u, v in p.edges():
        dirs[u].append(primitive_integer(wsub(v, u)))
        dirs[v].append(primitive_integer(wsub(u, v)))
    return dirs


def _minor_gcd(rows, r: int) -> int:
    from math import gcd

    d = len(rows)
    g = 0
    for cols in itertools.combinations(range(r), d):
        sub = [[Fraction(row[c]) for c in cols] for row in rows]
        g = gcd(g, abs(int(_det(sub))))
    return g


def _generic_direction(r: int, edge_dirs) -> tuple:
    for k in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        xi = tuple(Fraction(k ** i) for i in range(r))
        if all(wdot(e, xi) != 0 for e in edge_dirs):
            return xi
    raise GitkitError("no_direction", "could not find a generic direction", {})


def vertex_sum(p: Polytope) -> ConeSeries:
    """Lattice-point generating series of a smooth lattice polytope as a sum of
    vertex cone contributions, all normalized to one shared generic direction.

    Each vertex contributes t^v / prod_e (1 - t^e) over its primitive inward
    edge directions; factors pairing positively with the chosen direction are
    flipped, so every term expands in the same chamber and the box expansion
    of the sum is exactly the lattice-point indicator."""
    r = p.rank
    for v in p.vertices:
        if any(Fraction(x).denominator != 1 for x in v):
            raise GitkitError("not_lattice", "vertex sum needs integer vertices",
                              {"vertex": [fmt_rat(x) for x in v]})
    d = p.dim
    if r > 4:
        raise GitkitError("rank_too_large", "vertex sums supported up to rank 4", {"rank": r})
    if d == 0:
        v = p.vertices[0]
        xi = tuple(Fraction(1) for _ in range(r))
        return ConeSeries((Term(LaurentPoly.monomial(tuple(int(x) for x in v), 1), (), xi),))
    dirs = _edge_directions(p)
    for v, es in dirs.items():
        if len(es) != d:
            raise GitkitError("not_smooth", "vertex does not have dim-many edges",
                              {"vertex": [fmt_rat(x) for x in v], "edges": len(es)})
        if d == r:
            det = _det([[Fraction(x) for x in e] for e in es])
            if abs(det) != 1:
                raise GitkitError("not_smooth", "edge frame is not unimodular",
                                  {"vertex": [fmt_rat(x) for x in v]})
        else:
            if _minor_gcd(es, r) != 1:
                raise GitkitError("not_smooth", "edge frame is not unimodular in its span",
                                  {"vertex": [fmt_rat(x) for x in v]})
    all_dirs = sorted({e for es in dirs.values() for e in es})
    xi = _generic_direction(r, all_dirs)
    terms = []
    for v in p.vertices:
        vi = tuple(int(x) for x in v)
        num = LaurentPoly.monomial(vi, 1)
        den = []
        for e in dirs[v]:
            if wdot(e, xi) < 0:
                den.append(e)
            else:
                flip = tuple(-x for x in e)
                num = num * LaurentPoly.monomial(flip, -1)
                den.append(flip)
        terms.append(Term(num, tuple(sorted(den)), xi))
    return ConeSeries(tuple(terms))


def p1_chi(d: int) -> ConeSeries:
    """Equivariant Euler characteristic of O(d) on the projective line, in the
    symmetric convention: fixed-point terms z^d/(1 - z^-2) + z^-d/(1 - z^2)."""
    d = int(d)
    return ConeSeries((
        Term(LaurentPoly.monomial((d,), 1), ((-2,),), (Fraction(1),)),
        Term(LaurentPoly.monomial((-d,), 1), ((2,),), (Fraction(-1),)),
    ))


@dataclass(frozen=True)
class P1Report:
    d: int
    box: tuple
    passed: bool
    expansion: LaurentPoly


def p1_kn_identity(d: int) -> P1Report:
    """Paired-expansion identity on the projective line.

    The irreducible character sum_{k=0..d} z^{d-2k} equals the four-term
    localization sum  z^d/(1-z^2) + z^{d-2}/(1-z^-2) - z^{d+2}/(1-z^2)
    - z^{-d-2}/(1-z^-2)  in every finite box, even though the first two terms
    alone form a comb that vanishes rationally.  Checked by exact expansion."""
    d = int(d)
    if d < 0 or d > 50:
        raise GitkitError("bad_input", "degree must be between 0 and 50", {"d": d})
    lhs_poly = LaurentPoly(1, {(d - 2 * k,): 1 for k in range(d + 1)})
    lhs = ConeSeries((Term(lhs_poly, (), (Fraction(1),)),))
    up, down = (Fraction(-1),), (Fraction(1),)
    rhs = ConeSeries((
        Term(LaurentPoly.monomial((d,), 1), ((2,),), up),
        Term(LaurentPoly.monomial((d - 2,), 1), ((-2,),), down),
        Term(LaurentPoly.monomial((d + 2,), -1), ((2,),), up),
        Term(LaurentPoly.monomial((-d - 2,), -1), ((-2,),), down),
    ))
    box = ((-(d + 6), d + 6),)
    le = expand_in_box(lhs, box)
    re = expand_in_box(rhs, box)
    # the comb pair is rationally zero, so the rational content comes from the
    # last two terms alone
    comb = ConeSeries(rhs.terms[:2])
    comb_zero = rational_eq(comb, ConeSeries((Term(LaurentPoly.zero(1), (), down),)))
    passed = (le == re) and comb_zero and le == lhs_poly
    return P1Report(d, box, passed, le)


@dataclass(frozen=True)
class BlowupReport:
    d: int
    e: int
    chi: int
    h0: tuple
    h1: tuple


def blowup_chi(d: int, e: int) -> tuple[ConeSeries, BlowupReport]:
    """Four-fixed-point localization sum on the blown-up plane for the line
    bundle indexed by (d, e), plus the sign-split of its box expansion.

    Positive coefficients are section weights, negative ones obstruction
    weights; for d >= e >= 0 the positive part fills the lattice trapezoid
    e <= x + y <= d in the first quadrant."""
    d, e = int(d), int(e)
    xi = (Fraction(-1), Fraction(-2))
    terms = (
        Term(LaurentPoly.monomial((e, 0), 1), ((1, 0), (-1, 1)), xi),
        Term(LaurentPoly.monomial((-1, e + 1), -1), ((-1, 1), (0, 1)), xi),
        Term(LaurentPoly.monomial((d + 1, 0), -1), ((1, 0), (-1, 1)), xi),
        Term(LaurentPoly.monomial((-1, d + 2), 1), ((-1, 1), (0, 1)), xi),
    )
    series = ConeSeries(terms)
    m = max(d, e, 0)
    box = ((-2, m + 2), (-2, m + 3))
    poly = expand_in_box(series, box)
    h0 = tuple(sorted(w for w, c in poly.terms.items() if c > 0))
    h1 = tuple(sorted(w for w, c in poly.terms.items() if c < 0))
    chi = poly.total_coeff_sum()
    return series, BlowupReport(d, e, chi, h0, h1)


def weyl_via_localization(lam) -> tuple[ConeSeries, LaurentPoly]:
    """Character of an irreducible as a fixed-point sum over the symmetric
    group: term t^{w(lam+rho)-rho} times sgn(w), all sharing the denominator
    prod over positive roots of (1 - t^{-alpha}) and one decreasing direction.

    Returns the series and its box expansion over the weight hull, which the
    direct character construction must reproduce exactly."""
    lam = tuple(int(x) for x in lam)
    r = len(lam)
    if r > 4:
        raise GitkitError("rank_too_large", "localization characters capped at rank 4",
                          {"rank": r})
    if any(lam[i] < lam[i + 1] for i in range(r - 1)):
        raise GitkitError("not_dominant", "weight entries must be weakly decreasing",
                          {"weight": list(lam)})
    dens = tuple(sorted(tuple(-x for x in a) for a in positive_roots(r)))
    xi = tuple(Fraction(r - i) for i in range(r))
    shift = rho(r)
    target = wadd(lam, shift)
    terms = []
    for perm in itertools.permutations(range(r)):
        v = tuple(target[perm[i]] for i in range(r))
        inv = sum(1 for a in range(r) for b in range(a + 1, r) if perm[a] > perm[b])
        mono = LaurentPoly.monomial(wsub(v, shift), -1 if inv % 2 else 1)
        terms.append(Term(mono, dens, xi))
    series = ConeSeries(tuple(terms))
    lo, hi = min(lam), max(lam)
    box = tuple((lo, hi) for _ in range(r))
    expansion = expand_in_box(series, box)
    if expansion != weyl_character(lam):
        raise GitkitError("internal", "localization expansion disagrees with the "
                          "direct character", {"weight": list(lam)})
    return series, expansion
