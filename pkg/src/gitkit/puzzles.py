"""Triangular-grid puzzles computing Schubert structure constants.

The size-r triangle is split into rows i = 1..r; row i holds up-triangles
U(i,1..i) with edges (NW, NE, S) and down-triangles D(i,1..i-1) with edges
(N, SW, SE).  Gluing: U(i,j).NE = D(i,j).SW, D(i,j).SE = U(i,j+1).NW, and
U(i,j).S = D(i+1,j).N.  Edge labels are 0, 1, or an internal 2 that never
shows on the boundary; the legal triangles are listed below and a rhombus is
just a matched pair of halves sharing a 2-edge.

Boundary conventions: the NW side read bottom-to-top carries the indicator of
I (position k sits on row r+1-k), the NE side read top-to-bottom carries J
(position k on row k), the south side left-to-right carries K.

Counting runs row by row: the only state a row hands to the next one is its
vector of S-edge labels, so the search is a DP over those vectors.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .lie import GitkitError

UP_PIECES = {(0, 0, 0), (1, 1, 1), (1, 0, 2), (0, 2, 1), (2, 1, 0)}   # (NW, NE, S)
DOWN_PIECES = {(0, 0, 0), (1, 1, 1), (2, 0, 1), (1, 2, 0), (0, 1, 2)}  # (N, SW, SE)

_UP_BY_NW = {
    0: ((0, 0, 0), (0, 2, 1)),
    1: ((1, 1, 1), (1, 0, 2)),
    2: ((2, 1, 0),),
}
_DOWN_SE = {(n, sw): se for n, sw, se in DOWN_PIECES}


def _validate_subset(r: int, s, name: str) -> tuple[int, ...]:
    t = tuple(sorted(set(int(x) for x in s)))
    if len(t) != len(tuple(s)):
        raise GitkitError("bad_subset", f"{name} has repeated elements", {name: list(s)})
    if any(x < 1 or x > r for x in t):
        raise GitkitError("bad_subset", f"{name} must lie in 1..{r}", {name: list(t)})
    return t


def _boundary_labels(r: int, i_set, j_set):
    nw = [1 if (r + 1 - i) in i_set else 0 for i in range(1, r + 1)]   # label for row i
    ne = [1 if i in j_set else 0 for i in range(1, r + 1)]
    return nw, ne


def _row_fillings(i: int, nw_label: int, ne_target: int, s_prev: tuple):
    """Yield (s_vector, ups) for every legal completion of row i.

    `ups` is the tuple of chosen up-pieces, from which the down-pieces are
    reconstructed; s_prev supplies the N edges of this row's down-triangles.
    """
    stack = [(1, nw_label, (), ())]
    while stack:
        j, cur_nw, svec, ups = stack.pop()
        for piece in _UP_BY_NW.get(cur_nw, ()):
            _, ne, s = piece
            if j == i:
                if ne == ne_target:
                    yield svec + (s,), ups + (piece,)
                continue
            se = _DOWN_SE.get((s_prev[j - 1], ne))
            if se is None:
                continue
            stack.append((j + 1, se, svec + (s,), ups + (piece,)))


def _dp_rows(r: int, nw: list, ne: list, start_row: int, states: dict) -> dict:
    for i in range(start_row, r + 1):
        nxt: dict = {}
        for s_prev, cnt in states.items():
            for svec, _ in _row_fillings(i, nw[i - 1], ne[i - 1], s_prev):
                nxt[svec] = nxt.get(svec, 0) + cnt
        states = nxt
    return states


def _finish_dp(args):
    r, nw, ne, start_row, items = args
    return _dp_rows(r, nw, ne, start_row, dict(items))


def _final_states(r: int, i_set, j_set, jobs: int = 1) -> dict:
    nw, ne = _boundary_labels(r, i_set, j_set)
    if jobs <= 1 or r < 4:
        return _dp_rows(r, nw, ne, 1, {(): 1})
    # run the first rows once, then farm the remaining rows out per state chunk
    split = r // 2
    states = {(): 1}
    for i in range(1, split + 1):
        nxt: dict = {}
        for s_prev, cnt in states.items():
            for svec, _ in _row_fillings(i, nw[i - 1], ne[i - 1], s_prev):
                nxt[svec] = nxt.get(svec, 0) + cnt
        states = nxt
    items = sorted(states.items())
    chunks = [items[k::jobs] for k in range(jobs)]
    import multiprocessing

    with multiprocessing.Pool(jobs) as pool:
        parts = pool.map(_finish_dp, [(r, nw, ne, split + 1, ch) for ch in chunks if ch])
    out: dict = {}
    for part in parts:
        for k, v in part.items():
            out[k] = out.get(k, 0) + v
    return out


def count_puzzles(r: int, i_set, j_set, k_set, jobs: int = 1) -> int:
    """Number of legal fillings with the given boundary indicator sets."""
    if r < 1 or r > 8:
        raise GitkitError("bad_rank", "puzzle size must be between 1 and 8", {"r": r})
    i_set = _validate_subset(r, i_set, "I")
    j_set = _validate_subset(r, j_set, "J")
    k_set = _validate_subset(r, k_set, "K")
    target = tuple(1 if k in k_set else 0 for k in range(1, r + 1))
    return _final_states(r, i_set, j_set, jobs=jobs).get(target, 0)


def count_puzzles_all_k(r: int, i_set, j_set, jobs: int = 1) -> dict[tuple[int, ...], int]:
    """One DP pass with a free south boundary: counts for every K at once."""
    if r < 1 or r > 8:
        raise GitkitError("bad_rank", "puzzle size must be between 1 and 8", {"r": r})
    i_set = _validate_subset(r, i_set, "I")
    j_set = _validate_subset(r, j_set, "J")
    out = {}
    for svec, cnt in _final_states(r, i_set, j_set, jobs=jobs).items():
        if any(x == 2 for x in svec):
            continue  # a 2 may not reach the boundary
        k = tuple(pos for pos, x in enumerate(svec, start=1) if x == 1)
        out[k] = out.get(k, 0) + cnt
    return out


def enumerate_puzzles(r: int, i_set, j_set, k_set, limit: int | None = None) -> list[dict]:
    """Explicit fillings as edge-label dictionaries (keys 'U:i:j:NW' etc.)."""
    if r < 1 or r > 8:
        raise GitkitError("bad_rank", "puzzle size must be between 1 and 8", {"r": r})
    i_set = _validate_subset(r, i_set, "I")
    j_set = _validate_subset(r, j_set, "J")
    k_set = _validate_subset(r, k_set, "K")
    nw, ne = _boundary_labels(r, i_set, j_set)
    target = tuple(1 if k in k_set else 0 for k in range(1, r + 1))

    results = []

    def rec(i: int, s_prev: tuple, rows: tuple):
        if limit is not None and len(results) >= limit:
            return
        if i > r:
            if s_prev == target:
                results.append(_edges_from_rows(r, rows, s_prevs_from_rows(rows)))
            return
        for svec, ups in _row_fillings(i, nw[i - 1], ne[i - 1], s_prev):
            rec(i + 1, svec, rows + (ups,))

    def s_prevs_from_rows(rows):
        return [tuple(p[2] for p in row) for row in rows]

    rec(1, (), ())
    return results


def _edges_from_rows(r: int, rows, svecs) -> dict:
    edges = {}
    for i in range(1, r + 1):
        ups = rows[i - 1]
        for j in range(1, i + 1):
            nw_l, ne_l, s_l = ups[j - 1]
            edges[f"U:{i}:{j}:NW"] = nw_l
            edges[f"U:{i}:{j}:NE"] = ne_l
            edges[f"U:{i}:{j}:S"] = s_l
        for j in range(1, i):
            n_l = svecs[i - 2][j - 1]
            sw_l = ups[j - 1][1]
            se_l = ups[j][0]
            edges[f"D:{i}:{j}:N"] = n_l
            edges[f"D:{i}:{j}:SW"] = sw_l
            edges[f"D:{i}:{j}:SE"] = se_l
    return edges


def check_filling(r: int, i_set, j_set, k_set, edges: dict):
    """Validate a filling against the piece list, the gluing, and the boundary.

    Returns (ok, reason).  This walks the provided labels directly and shares
    no state with the search.
    """
    i_set = _validate_subset(r, i_set, "I")
    j_set = _validate_subset(r, j_set, "J")
    k_set = _validate_subset(r, k_set, "K")

    class _Missing(Exception):
        pass

    def get(key):
        if key not in edges:
            raise _Missing(key)
        return edges[key]

    try:
        return _check_edges(r, i_set, j_set, k_set, get)
    except _Missing as e:
        return False, f"missing edge {e.args[0]}"


def _check_edges(r, i_set, j_set, k_set, get):
    for i in range(1, r + 1):
        for j in range(1, i + 1):
            tri = (get(f"U:{i}:{j}:NW"), get(f"U:{i}:{j}:NE"), get(f"U:{i}:{j}:S"))
            if tri not in UP_PIECES:
                return False, f"illegal up piece {tri} at ({i},{j})"
        for j in range(1, i):
            tri = (get(f"D:{i}:{j}:N"), get(f"D:{i}:{j}:SW"), get(f"D:{i}:{j}:SE"))
            if tri not in DOWN_PIECES:
                return False, f"illegal down piece {tri} at ({i},{j})"
    for i in range(1, r + 1):
        for j in range(1, i):
            if get(f"U:{i}:{j}:NE") != get(f"D:{i}:{j}:SW"):
                return False, f"NE/SW mismatch at ({i},{j})"
            if get(f"D:{i}:{j}:SE") != get(f"U:{i}:{j + 1}:NW"):
                return False, f"SE/NW mismatch at ({i},{j})"
    for i in range(1, r):
        for j in range(1, i + 1):
            if get(f"U:{i}:{j}:S") != get(f"D:{i + 1}:{j}:N"):
                return False, f"S/N mismatch between rows {i} and {i + 1} at column {j}"
    for k in range(1, r + 1):
        if get(f"U:{r + 1 - k}:1:NW") != (1 if k in i_set else 0):
            return False, f"NW boundary mismatch at position {k}"
        if get(f"U:{k}:{k}:NE") != (1 if k in j_set else 0):
            return False, f"NE boundary mismatch at position {k}"
        if get(f"U:{r}:{k}:S") != (1 if k in k_set else 0):
            return False, f"S boundary mismatch at position {k}"
    return True, ""


def partition_to_subset(r: int, s: int, lam) -> tuple[int, ...]:
    """Cardinality-s subset of 1..r encoding a partition in the s x (r-s) box."""
    lam = tuple(int(x) for x in lam)
    if len(lam) > s or any(lam[a] < lam[a + 1] for a in range(len(lam) - 1)):
        raise GitkitError("bad_partition", "partition must be weakly decreasing of length <= s",
                          {"partition": list(lam), "s": s})
    lam = lam + (0,) * (s - len(lam))
    if any(x < 0 or x > r - s for x in lam):
        raise GitkitError("bad_partition", f"parts must fit the {s}x{r - s} box",
                          {"partition": list(lam)})
    return tuple((r - s) + k - lam[k - 1] for k in range(1, s + 1))


def subset_to_partition(r: int, subset) -> tuple[int, ...]:
    sub = tuple(sorted(subset))
    s = len(sub)
    return tuple((r - s) + k - sub[k - 1] for k in range(1, s + 1))


def lr_coefficient(r: int, s: int, lam, mu, nu, jobs: int = 1) -> int:
    """Littlewood-Richardson coefficient c_{lam,mu}^{nu} via puzzle counting.

    All three partitions must fit an s x (r-s) box.
    """
    if s < 0 or s > r:
        raise GitkitError("bad_input", "need 0 <= s <= r", {"r": r, "s": s})
    if s == 0:
        ok = all(not tuple(p) or max(p, default=0) == 0 for p in (lam, mu, nu))
        return 1 if ok else 0
    i_set = partition_to_subset(r, s, lam)
    j_set = partition_to_subset(r, s, mu)
    k_set = partition_to_subset(r, s, nu)
    return count_puzzles(r, i_set, j_set, k_set, jobs=jobs)


@dataclass(frozen=True)
class AssocReport:
    r: int
    s: int
    cases: int
    passed: bool
    counterexample: tuple | None


def associativity_check(r: int, s: int, seed: int = 0, max_cases: int | None = None) -> AssocReport:
    """Verify sum_K n_IJ^K n_KL^M = sum_K n_JL^K n_IK^M over boundary quadruples."""
    subsets = list(itertools.combinations(range(1, r + 1), s))
    table = {(a, b): count_puzzles_all_k(r, a, b) for a in subsets for b in subsets}

    quads = list(itertools.product(subsets, repeat=4))
    if max_cases is not None and len(quads) > max_cases:
        rng = random.Random(seed)
        quads = rng.sample(quads, max_cases)
    for i_s, j_s, l_s, m_s in quads:
        lhs = sum(cnt * table[(k, l_s)].get(m_s, 0) for k, cnt in table[(i_s, j_s)].items())
        rhs = sum(cnt * table[(i_s, k)].get(m_s, 0) for k, cnt in table[(j_s, l_s)].items())
        if lhs != rhs:
            return AssocReport(r, s, len(quads), False, (i_s, j_s, l_s, m_s))
    return AssocReport(r, s, len(quads), True, None)
