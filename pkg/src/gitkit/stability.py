"""Torus actions on projective points: stability, destabilizers, descent.

A projective point is summarized by its support: the list of torus weights
carrying nonzero coordinates, each with a positive mass (squared coordinate
size).  Every exact question (classification, worst destabilizer, critical
types) reduces to rational convex geometry on those weights; the descent
solver is the one deliberately floating-point piece, and the tests play the
two routes against each other.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy

from .lie import (
    GitkitError,
    Weight,
    fmt_rat,
    parse_rat,
    rat,
    wadd,
    wdot,
    weight,
    weight_from_json,
    weight_to_json,
    wneg,
    wnorm_sq,
    wsub,
)
from .polytopes import Polytope, _rref, hull


@dataclass(frozen=True)
class ProjPoint:
    support: tuple          # ((weight, mass), ...), weights distinct, masses > 0

    @property
    def rank(self) -> int:
        return len(self.support[0][0])

    @property
    def weights(self) -> tuple:
        return tuple(w for w, _ in self.support)

    def to_json(self) -> dict:
        return {"weights": [weight_to_json(w) for w, _ in self.support],
                "masses": [fmt_rat(c) for _, c in self.support]}

    @staticmethod
    def from_json(obj) -> "ProjPoint":
        ws = [weight_from_json(w) for w in obj["weights"]]
        cs = [parse_rat(c) for c in obj.get("masses", [1] * len(ws))]
        return proj_point(ws, cs)


def proj_point(weights, masses=None) -> ProjPoint:
    """Build a projective point summary; equal weights pool their mass."""
    ws = [weight(w) for w in weights]
    if not ws:
        raise GitkitError("bad_input", "a projective point needs at least one weight", {})
    r = len(ws[0])
    if any(len(w) != r for w in ws):
        raise GitkitError("rank_mismatch", "weights have mixed lengths", {})
    if masses is None:
        masses = [1] * len(ws)
    cs = [parse_rat(c) for c in masses]
    if len(cs) != len(ws):
        raise GitkitError("bad_input", "one mass per weight required",
                          {"weights": len(ws), "masses": len(cs)})
    pooled: dict = {}
    for w, c in zip(ws, cs):
        if c <= 0:
            raise GitkitError("bad_input", "masses must be positive", {"mass": fmt_rat(c)})
        pooled[w] = pooled.get(w, 0) + c
    return ProjPoint(tuple(sorted((w, rat(c)) for w, c in pooled.items())))


def moment_map(x: ProjPoint, shift: Weight | None = None) -> Weight:
    """Mass-weighted average of the support weights, minus an optional shift."""
    total = sum(c for _, c in x.support)
    avg = [Fraction(0)] * x.rank
    for w, c in x.support:
        for k in range(x.rank):
            avg[k] += Fraction(c) * Fraction(w[k])
    out = tuple(rat(a / total) for a in avg)
    if shift is not None:
        out = wsub(out, weight(shift))
    return out


def orbit_moment_polytope(x: ProjPoint) -> Polytope:
    return hull(x.weights)


@dataclass(frozen=True)
class Stable:
    verdict: str = "Stable"


@dataclass(frozen=True)
class Polystable:
    stabilizer_dim: int
    verdict: str = "Polystable"


@dataclass(frozen=True)
class SemistableNotPolystable:
    jh_face: tuple          # vertices of the minimal hull face containing 0
    verdict: str = "SemistableNotPolystable"


@dataclass(frozen=True)
class Unstable:
    lam_star: tuple
    slope_sq: Fraction      # squared descent speed; the slope itself is -sqrt
    verdict: str = "Unstable"

    @property
    def slope(self) -> float:
        return -math.sqrt(float(self.slope_sq))


def verdict_to_json(v) -> dict:
    if isinstance(v, Stable):
        return {"verdict": "Stable"}
    if isinstance(v, Polystable):
        return {"verdict": "Polystable", "stabilizer_dim": v.stabilizer_dim}
    if isinstance(v, SemistableNotPolystable):
        return {"verdict": "SemistableNotPolystable",
                "jh_face": [weight_to_json(w) for w in v.jh_face]}
    if isinstance(v, Unstable):
        return {"verdict": "Unstable", "lam_star": weight_to_json(v.lam_star),
                "slope_sq": fmt_rat(v.slope_sq), "slope": v.slope}
    raise GitkitError("internal", "unknown verdict", {})


def _project_origin_affine(points):
    """Orthogonal projection of the origin onto the affine span of `points`.

    Returns (p, affine coefficients) or None when the points are affinely
    dependent.  Exact.
    """
    q0 = points[0]
    vecs = [wsub(q, q0) for q in points[1:]]
    m = len(vecs)
    if m == 0:
        return q0, (Fraction(1),)
    gram = [[Fraction(wdot(vecs[i], vecs[j])) for j in range(m)] for i in range(m)]
    rhs = [-Fraction(wdot(vecs[i], q0)) for i in range(m)]
    # solve gram . a = rhs; singular gram means dependent points
    aug = [gram[i] + [rhs[i]] for i in range(m)]
    red, pivots = _rref(aug)
    if len(pivots) != m or m in pivots:
        return None
    a = [red[i][m] for i in range(m)]
    p = q0
    for ai, v in zip(a, vecs):
        p = wadd(p, tuple(rat(ai * Fraction(c)) for c in v))
    coeffs = (Fraction(1) - sum(a),) + tuple(a)
    return p, coeffs


_NEAREST_CACHE: dict = {}


def nearest_point_of_hull(weights) -> tuple[Weight, Fraction]:
    """Exact closest point of conv(weights) to the origin, with its squared norm.

    Every affinely independent subset of at most rank+1 points is projected
    onto; candidates with nonnegative affine coefficients are convex
    combinations, and the true nearest point always shows up among them.
    """
    pts = tuple(sorted({weight(w) for w in weights}))
    key = pts
    cached = _NEAREST_CACHE.get(key)
    if cached is not None:
        return cached
    r = len(pts[0])
    best = None
    for size in range(1, min(len(pts), r + 1) + 1):
        for sub in itertools.combinations(pts, size):
            res = _project_origin_affine(sub)
            if res is None:
                continue
            p, coeffs = res
            if any(c < 0 for c in coeffs):
                continue
            ns = Fraction(wnorm_sq(p))
            if best is None or ns < best[1] or (ns == best[1] and p < best[0]):
                best = (p, ns)
    _NEAREST_CACHE[key] = best
    return best


def max_destabilizing(x: ProjPoint):
    """Worst one-parameter direction, or None when the point is semistable.

    The direction is the negative of the hull point nearest the origin; its
    normalized slope is -sqrt(slope_sq).
    """
    p, ns = nearest_point_of_hull(x.weights)
    if ns == 0:
        return None
    return Unstable(lam_star=wneg(p), slope_sq=ns)


def classify_stability(x: ProjPoint):
    """Exact verdict from the position of the origin in the weight hull."""
    h = hull(x.weights)
    zero = (0,) * x.rank
    if not h.contains(zero):
        return max_destabilizing(x)
    if h.contains_relint(zero):
        if h.dim == x.rank:
            return Stable()
        return Polystable(stabilizer_dim=x.rank - h.dim)
    active = h.active_facets(zero)
    verts = tuple(sorted(
        v for v in h.vertices
        if all(wdot(h.facets[i][0], v) == h.facets[i][1] for i in active)))
    return SemistableNotPolystable(jh_face=verts)


@dataclass(frozen=True)
class HMSlope:
    """Normalized worst pairing max_j <w_j, lam> / |lam|, kept exact as a
    (numerator, |lam|^2) pair."""
    num: Fraction
    lam_normsq: Fraction

    @property
    def value(self) -> float:
        return float(self.num) / math.sqrt(float(self.lam_normsq))

    def cmp(self, other: "HMSlope") -> int:
        s1 = (self.num > 0) - (self.num < 0)
        s2 = (other.num > 0) - (other.num < 0)
        if s1 != s2:
            return -1 if s1 < s2 else 1
        lhs = self.num * self.num * other.lam_normsq
        rhs = other.num * other.num * self.lam_normsq
        if lhs == rhs:
            return 0
        if s1 >= 0:
            return -1 if lhs < rhs else 1
        return -1 if lhs > rhs else 1


def hm_slope(x: ProjPoint, lam: Weight) -> HMSlope:
    lam = weight(lam)
    ns = Fraction(wnorm_sq(lam))
    if ns == 0:
        raise GitkitError("zero_direction", "slope of the zero direction", {})
    num = max(Fraction(wdot(w, lam)) for w in x.weights)
    return HMSlope(num, ns)


def associated_graded(x: ProjPoint, lam: Weight) -> ProjPoint:
    """Limit point along the direction lam: support drops to the weights with
    the maximal pairing."""
    lam = weight(lam)
    vals = [wdot(w, lam) for w, _ in x.support]
    m = max(vals)
    kept = [(w, c) for (w, c), v in zip(x.support, vals) if v == m]
    return ProjPoint(tuple(kept))


def jordan_holder_cone(x: ProjPoint) -> tuple:
    """Directions whose graded limit is polystable: the inward normals of the
    hull facets through the origin.  Empty tuple when already polystable;
    unstable points have no such cone."""
    verdict = classify_stability(x)
    if isinstance(verdict, Unstable):
        raise GitkitError("unstable", "unstable points have no polystable degeneration", {})
    if isinstance(verdict, (Stable, Polystable)):
        return ()
    h = hull(x.weights)
    zero = (0,) * x.rank
    return tuple(sorted(wneg(h.facets[i][0]) for i in h.active_facets(zero)))


def critical_types(weights) -> set:
    """Candidate critical values of the squared moment norm: for each subset
    of weights, the hull point nearest the origin, kept when it lies in the
    subset's relative interior."""
    pts = tuple(sorted({weight(w) for w in weights}))
    r = len(pts[0])
    if len(pts) > 12 or r > 4:
        raise GitkitError("too_large", "critical type scan capped at 12 weights, rank 4",
                          {"weights": len(pts), "rank": r})
    out = set()
    hull_cache: dict = {}
    for size in range(1, len(pts) + 1):
        for sub in itertools.combinations(pts, size):
            p, _ns = nearest_point_of_hull(sub)
            hs = hull_cache.get(sub)
            if hs is None:
                hs = hull(sub)
                hull_cache[sub] = hs
            if hs.contains_relint(p):
                out.add(p)
    return out


def product(x: ProjPoint, y: ProjPoint) -> ProjPoint:
    """Segre product: weights add pairwise, masses multiply, duplicates pool."""
    if x.rank != y.rank:
        raise GitkitError("rank_mismatch", "product factors must share a rank",
                          {"left": x.rank, "right": y.rank})
    ws, cs = [], []
    for w1, c1 in x.support:
        for w2, c2 in y.support:
            ws.append(wadd(w1, w2))
            cs.append(c1 * c2)
    return proj_point(ws, cs)


def _float_data(x: ProjPoint):
    ws = [[float(c) for c in w] for w, _ in x.support]
    cs = [float(c) for _, c in x.support]
    return ws, cs


def _soft_state(ws, cs, xi):
    r = len(xi)
    exps = [math.log(c) - 2.0 * sum(w[k] * xi[k] for k in range(r))
            for w, c in zip(ws, cs)]
    m = max(exps)
    raw = [math.exp(e - m) for e in exps]
    z = sum(raw)
    value = 0.5 * (m + math.log(z))
    masses = [v / z for v in raw]
    return value, masses


def kempf_ness(x: ProjPoint, xi) -> tuple[float, tuple]:
    """Value and gradient of the convexified norm functional
    psi(xi) = (1/2) log sum_j c_j exp(-2 <w_j, xi>).

    The gradient is minus the softmax-weighted average of the weights, i.e.
    minus the moment map of the flowed point."""
    ws, cs = _float_data(x)
    xi = [float(v) for v in xi]
    r = x.rank
    if len(xi) != r:
        raise GitkitError("rank_mismatch", "direction length does not match rank",
                          {"rank": r, "xi": len(xi)})
    value, masses = _soft_state(ws, cs, xi)
    grad = tuple(-sum(ws[j][k] * masses[j] for j in range(len(ws)))
                 for k in range(r))
    return value, grad


def _certified_nearest(ws, masses):
    """Float projection of the origin onto the destabilizing face.

    The candidate face is read off the softmax masses, the origin is
    projected onto its affine span by least squares, and weights whose
    barycentric coefficient comes out negative are pruned.  The result is
    accepted only when the optimality conditions for nearest-point
    projection onto the full weight hull pass with tight margins, so an
    accepted answer is within about 1e-6 of the true projection.  Returns
    the projection or None."""
    mtop = max(masses)
    live = [j for j, mj in enumerate(masses) if mj > 1e-6 * mtop]
    aw = numpy.array(ws, dtype=float)
    scale2 = max(1.0, float(numpy.max(numpy.sum(aw * aw, axis=1))))
    for _ in range(len(live)):
        base = aw[live[0]]
        span = aw[live[1:]] - base if len(live) > 1 else numpy.zeros((0, aw.shape[1]))
        if len(live) == 1:
            p, coeffs = base, numpy.array([1.0])
        else:
            b, *_ = numpy.linalg.lstsq(span.T, -base, rcond=None)
            p = base + span.T @ b
            coeffs = numpy.concatenate(([1.0 - b.sum()], b))
        neg = [live[i] for i, a in enumerate(coeffs) if a < -1e-9]
        if not neg:
            break
        live = [j for j in live if j not in neg]
        if not live:
            return None
    else:
        return None
    nsq = float(p @ p)
    if nsq < 1e-12 * scale2:
        return None
    if numpy.min(aw @ p) < nsq - 1e-12 * scale2:
        return None
    return tuple(float(v) for v in p)


@dataclass(frozen=True)
class DescentConfig:
    init_step: float = 1.0
    backtrack: float = 0.5
    armijo: float = 1e-4
    escape_radius: float = 50.0


@dataclass(frozen=True)
class Converged:
    xi: tuple
    value: float
    residual: float          # gradient norm = moment map size at the minimizer
    iterations: int
    outcome: str = "Converged"


@dataclass(frozen=True)
class Escaped:
    direction: tuple         # unit vector, matches the worst destabilizer lam*
    slope: float             # asymptotic decrease rate per unit length
    iterations: int
    outcome: str = "Escaped"


def minimize_kempf_ness(x: ProjPoint, xi0=None, tol: float = 1e-8,
                        max_iter: int = 100000,
                        config: DescentConfig | None = None):
    """Armijo-backtracking gradient descent on the norm functional.

    Converged: gradient norm under tol.  Escaped: once the iterate leaves the
    ball of radius escape_radius, the softmax masses single out the
    destabilizing face and the reported direction and slope come from the
    certified projection of the origin onto that face; if certification
    fails the flow continues to twice the radius, where the face separation
    is exponentially sharper, and tries again.  The direction matches the
    destabilizer convention (it points away from the weight hull).
    Exhausting max_iter raises.
    """
    cfg = config or DescentConfig()
    r = x.rank
    xi = tuple(float(v) for v in (xi0 if xi0 is not None else (0.0,) * r))
    ws, cs = _float_data(x)
    check_at = 2.0 * cfg.escape_radius
    val, grad = kempf_ness(x, xi)
    for it in range(1, max_iter + 1):
        gn = math.sqrt(sum(g * g for g in grad))
        if gn < tol:
            return Converged(xi=xi, value=val, residual=gn, iterations=it)
        radius = math.sqrt(sum(v * v for v in xi))
        if radius >= check_at:
            _, masses = _soft_state(ws, cs, xi)
            p = _certified_nearest(ws, masses)
            if p is not None:
                pn = math.sqrt(sum(v * v for v in p))
                direction = tuple(-v / pn + 0.0 for v in p)
                return Escaped(direction=direction, slope=-pn, iterations=it)
            check_at *= 2.0
        step = cfg.init_step
        while True:
            cand = tuple(a - step * g for a, g in zip(xi, grad))
            cval, cgrad = kempf_ness(x, cand)
            if cval <= val - cfg.armijo * step * gn * gn:
                xi, val, grad = cand, cval, cgrad
                break
            step *= cfg.backtrack
            if step < 1e-18:
                if gn < 10 * tol:
                    return Converged(xi=xi, value=val, residual=gn, iterations=it)
                raise GitkitError("line_search_stalled",
                                  "descent line search stalled above tolerance",
                                  {"residual": gn})
    raise GitkitError("descent_exhausted",
                      f"no verdict within {max_iter} iterations",
                      {"residual": math.sqrt(sum(g * g for g in grad))})
