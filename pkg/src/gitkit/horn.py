"""Eigenvalue inequalities for sums of Hermitian matrices.

The inequality system for spectra of A, B, and C = A + B is generated from
puzzle counts: for index sets (I, J, K) of equal size s with a positive
structure constant, sum_{I} a_i + sum_{J} b_j <= sum_{K} c_k, together with
the exact trace identity.  Spectra are weakly decreasing; checks are exact
over rationals.

The Monte Carlo validator draws Gaussian Hermitian matrices and computes
spectra with a hand-rolled cyclic Jacobi iteration on the real symmetric
doubling [[X, -Y], [Y, X]], keeping the check independent of library
eigensolvers.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .lie import GitkitError, fmt_rat, parse_rat
from .puzzles import count_puzzles_all_k


def spectrum(values) -> tuple:
    """A weakly decreasing tuple of exact rationals."""
    vals = tuple(parse_rat(v) for v in values)
    if any(vals[i] < vals[i + 1] for i in range(len(vals) - 1)):
        raise GitkitError("not_sorted", "spectrum entries must be weakly decreasing",
                          {"values": [fmt_rat(v) for v in vals]})
    return vals


@dataclass(frozen=True)
class HornSystem:
    r: int
    mode: str                      # 'all-positive' | 'irredundant'
    triples: tuple                 # ((I, J, K, count), ...) in (s, I, J, K) order

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "mode": self.mode,
            "trace_equality": True,
            "triples": [{"I": list(i), "J": list(j), "K": list(k), "count": n}
                        for i, j, k, n in self.triples],
        }


_SYSTEM_CACHE: dict = {}


def generate_horn_system(r: int, mode: str = "all-positive") -> HornSystem:
    """All inequality triples for r x r spectra, from scratch via puzzle counts.

    Subset size s runs over 1..r-1 (s = 0 and s = r carry no information
    beyond the trace identity).  'all-positive' keeps every triple with a
    positive count; 'irredundant' keeps those with count exactly 1.
    """
    if r < 2 or r > 6:
        raise GitkitError("bad_rank", "inequality systems supported for 2 <= r <= 6", {"r": r})
    if mode not in ("all-positive", "irredundant"):
        raise GitkitError("bad_mode", "mode must be 'all-positive' or 'irredundant'",
                          {"mode": mode})
    key = (r, mode)
    if key in _SYSTEM_CACHE:
        return _SYSTEM_CACHE[key]
    triples = []
    for s in range(1, r):
        subsets = list(itertools.combinations(range(1, r + 1), s))
        for i_set in subsets:
            for j_set in subsets:
                counts = count_puzzles_all_k(r, i_set, j_set)
                for k_set in subsets:
                    n = counts.get(k_set, 0)
                    if n >= 1 and (mode == "all-positive" or n == 1):
                        triples.append((i_set, j_set, k_set, n))
    triples.sort(key=lambda t: (len(t[0]), t[0], t[1], t[2]))
    sys = HornSystem(r, mode, tuple(triples))
    _SYSTEM_CACHE[key] = sys
    return sys


@dataclass(frozen=True)
class CheckResult:
    feasible: bool
    violated: tuple | None         # ('trace',) or (I, J, K)


def check_triple(a, b, c, system: HornSystem | None = None) -> CheckResult:
    """Exact membership test: can spectra a and b of Hermitian matrices add up
    to a matrix with spectrum c?  Reports the first violated constraint."""
    a, b, c = spectrum(a), spectrum(b), spectrum(c)
    r = len(a)
    if len(b) != r or len(c) != r:
        raise GitkitError("rank_mismatch", "spectra must share a length",
                          {"lengths": [len(a), len(b), len(c)]})
    if sum(a) + sum(b) != sum(c):
        return CheckResult(False, ("trace",))
    if system is None:
        system = generate_horn_system(r, "all-positive")
    elif system.r != r:
        raise GitkitError("rank_mismatch", "system rank does not match spectra",
                          {"system": system.r, "spectra": r})
    for i_set, j_set, k_set, _n in system.triples:
        lhs = sum(a[i - 1] for i in i_set) + sum(b[j - 1] for j in j_set)
        rhs = sum(c[k - 1] for k in k_set)
        if lhs > rhs:
            return CheckResult(False, (i_set, j_set, k_set))
    return CheckResult(True, None)


def zero_sum_spectra(a, b, c):
    """Rewrite (a, b, c = a + b) as three spectra summing to zero: negate and
    reverse the third."""
    a, b, c = spectrum(a), spectrum(b), spectrum(c)
    c3 = tuple(-x for x in reversed(c))
    return a, b, c3


def zero_sum_triples(system: HornSystem) -> list:
    """Index triples for the zero-sum form: sums over (I, J, K') are <= 0,
    where K' reflects K through k -> r + 1 - k."""
    out = []
    for i_set, j_set, k_set, n in system.triples:
        k_ref = tuple(sorted(system.r + 1 - k for k in k_set))
        out.append((i_set, j_set, k_ref, n))
    return out


def jacobi_eigenvalues(h, tol: float = 1e-12, max_sweeps: int = 100) -> list[float]:
    """Spectrum of a Hermitian matrix by cyclic Jacobi, descending.

    The complex matrix X + iY is embedded as the real symmetric doubling
    [[X, -Y], [Y, X]] whose spectrum repeats each eigenvalue twice.
    """
    a = np.asarray(h, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise GitkitError("bad_matrix", "square matrix required", {"shape": list(a.shape)})
    if not np.allclose(a, a.conj().T, atol=1e-10):
        raise GitkitError("not_hermitian", "matrix is not Hermitian", {})
    r = a.shape[0]
    x, y = a.real.copy(), a.imag.copy()
    s_mat = np.block([[x, -y], [y, x]])
    n = 2 * r
    scale = max(1.0, float(np.linalg.norm(s_mat)))
    for _sweep in range(max_sweeps):
        # summed directly over off-diagonal entries; the difference of the
        # full and diagonal Frobenius masses cancels catastrophically here
        off_part = s_mat - np.diag(np.diag(s_mat))
        off = math.sqrt(float(np.sum(off_part ** 2)))
        if off <= tol * scale:
            diag = sorted(np.diag(s_mat).tolist(), reverse=True)
            return diag[0::2]
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = s_mat[p, q]
                if abs(apq) <= 1e-30:
                    continue
                tau = (s_mat[q, q] - s_mat[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                cth = 1.0 / math.sqrt(1.0 + t * t)
                sth = t * cth
                cp = s_mat[:, p].copy()
                cq = s_mat[:, q].copy()
                s_mat[:, p] = cth * cp - sth * cq
                s_mat[:, q] = sth * cp + cth * cq
                rp = s_mat[p, :].copy()
                rq = s_mat[q, :].copy()
                s_mat[p, :] = cth * rp - sth * rq
                s_mat[q, :] = sth * rp + cth * rq
    raise GitkitError("jacobi_no_convergence",
                      f"Jacobi iteration did not converge in {max_sweeps} sweeps", {"n": n})


@dataclass(frozen=True)
class SampleReport:
    r: int
    trials: int
    violations: int
    max_slack_error: float
    max_trace_error: float


def sample_hermitian_validate(r: int, trials: int = 1000, seed: int = 0,
                              tol: float = 1e-8) -> SampleReport:
    """Draw Gaussian Hermitian pairs, diagonalize A, B, A + B with the Jacobi
    routine, and check every inequality of the system within tolerance."""
    system = generate_horn_system(r, "all-positive")
    rng = np.random.default_rng(seed)
    m = len(system.triples)
    mask_i = np.zeros((m, r))
    mask_j = np.zeros((m, r))
    mask_k = np.zeros((m, r))
    for row, (i_set, j_set, k_set, _n) in enumerate(system.triples):
        for i in i_set:
            mask_i[row, i - 1] = 1.0
        for j in j_set:
            mask_j[row, j - 1] = 1.0
        for k in k_set:
            mask_k[row, k - 1] = 1.0

    violations = 0
    max_slack = 0.0
    max_trace = 0.0
    for _ in range(trials):
        ma = rng.standard_normal((r, r)) + 1j * rng.standard_normal((r, r))
        mb = rng.standard_normal((r, r)) + 1j * rng.standard_normal((r, r))
        ha = (ma + ma.conj().T) / 2
        hb = (mb + mb.conj().T) / 2
        a = np.array(jacobi_eigenvalues(ha))
        b = np.array(jacobi_eigenvalues(hb))
        c = np.array(jacobi_eigenvalues(ha + hb))
        trace_err = abs(a.sum() + b.sum() - c.sum())
        max_trace = max(max_trace, trace_err)
        excess = mask_i @ a + mask_j @ b - mask_k @ c
        worst = float(excess.max()) if m else 0.0
        max_slack = max(max_slack, worst)
        if worst > tol or trace_err > tol:
            violations += 1
    return SampleReport(r, trials, violations, max(0.0, max_slack), max_trace)


def polygon_nonempty(lengths) -> bool:
    """Does a closed polygon with these (positive) side lengths exist?  True
    exactly when no side exceeds the sum of the others; degenerate flat
    polygons count as polygons."""
    vals = [parse_rat(v) for v in lengths]
    if len(vals) < 2:
        raise GitkitError("bad_input", "need at least two side lengths", {})
    if any(v <= 0 for v in vals):
        raise GitkitError("bad_input", "side lengths must be positive",
                          {"lengths": [fmt_rat(v) for v in vals]})
    total = sum(vals)
    return all(2 * v <= total for v in vals)


def sl2_config_semistable(masses, expected_total=None):
    """Weighted point configuration on the line: semistable when no single
    location carries more than half the total mass.

    `masses` is a list of (label, mass) pairs or bare masses; equal labels
    pool their mass.  Returns (semistable, offending label or None).
    """
    pooled: dict = {}
    for item in masses:
        if isinstance(item, (tuple, list)) and len(item) == 2:
            label, mass = item
        else:
            label, mass = len(pooled), item
        mass = parse_rat(mass)
        if mass <= 0:
            raise GitkitError("bad_input", "masses must be positive", {"label": str(label)})
        pooled[label] = pooled.get(label, 0) + mass
    if not pooled:
        raise GitkitError("bad_input", "empty configuration", {})
    total = sum(pooled.values())
    if expected_total is not None and parse_rat(expected_total) != total:
        raise GitkitError("mass_mismatch", "masses do not sum to the stated total",
                          {"total": fmt_rat(total), "expected": fmt_rat(parse_rat(expected_total))})
    for label, mass in pooled.items():
        if 2 * mass > total:
            return False, label
    return True, None
