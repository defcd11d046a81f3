"""Exact reduced simplicial homology and the Cohen-Macaulay criterion.

Betti numbers are ranks over the rationals, obtained from integer
Smith normal forms of the boundary matrices (exact arithmetic, no
floating point); torsion invariant factors are reported alongside.

``is_cohen_macaulay`` applies Reisner's criterion over the rationals:
every face's link must have vanishing reduced homology strictly below
its dimension.  A fast sound filter bounds Betti numbers via ranks over
Z/32003 (a rank over a prime field never exceeds the rational rank, so
a zero bound is conclusive); only nonzero bounds escalate to exact
integer ranks.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass

import numpy as np

from .complexes import Complex, _tuple_of

DEFAULT_FACE_CAP = 5_000_000
ORACLE_PRIME = 32003


class FaceLimitError(RuntimeError):
    """Face enumeration exceeded the configured resource cap."""


class BudgetError(RuntimeError):
    """A budgeted homology computation ran out of wall-clock time."""


@dataclass(frozen=True)
class BoundaryMatrix:
    """Sparse signed boundary map from d-faces (columns) to (d-1)-faces."""

    rows: int
    cols: int
    entries: tuple[tuple[int, int, int], ...]  # (row, col, +-1)


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced Betti numbers and torsion invariant factors per dimension."""

    betti: dict[int, int]
    torsion: dict[int, tuple[int, ...]]

    def to_obj(self) -> dict:
        return {
            "betti": {str(i): b for i, b in sorted(self.betti.items())},
            "torsion": {str(i): list(t) for i, t in sorted(self.torsion.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_obj())


def all_faces(d: Complex, cap: int = DEFAULT_FACE_CAP) -> list[int]:
    """All faces of ``d`` as bitmasks (the empty face included).

    Raises :class:`FaceLimitError` once more than ``cap`` faces appear.
    """
    seen: set[int] = set()
    for fm in d.facet_masks:
        stack = [fm]
        while stack:
            m = stack.pop()
            if m in seen:
                continue
            seen.add(m)
            if len(seen) > cap:
                raise FaceLimitError(
                    f"complex has more than {cap} faces; raise the face cap "
                    f"to proceed"
                )
            mm = m
            while mm:
                stack.append(m & ~(mm & -mm))
                mm &= mm - 1
    return sorted(seen)


def faces_by_dim(d: Complex, cap: int = DEFAULT_FACE_CAP) -> dict[int, list[tuple[int, ...]]]:
    """Faces grouped by dimension, each group sorted lexicographically."""
    groups: dict[int, list[tuple[int, ...]]] = {}
    for m in all_faces(d, cap):
        groups.setdefault(m.bit_count() - 1, []).append(_tuple_of(m))
    for g in groups.values():
        g.sort()
    return groups


def boundary_matrices(
    d: Complex, cap: int = DEFAULT_FACE_CAP
) -> dict[int, BoundaryMatrix]:
    """Signed boundary matrices of the reduced chain complex.

    Key ``i`` maps i-faces to (i-1)-faces with alternating signs over
    ascending vertex order; ``i`` runs from 0 (vertices to the empty
    face) up to the dimension of the complex.
    """
    if d.is_void:
        return {}
    groups = faces_by_dim(d, cap)
    index = {
        dim: {f: pos for pos, f in enumerate(fs)} for dim, fs in groups.items()
    }
    mats: dict[int, BoundaryMatrix] = {}
    for dim in range(0, (d.dim or 0) + 1):
        cols = groups.get(dim, [])
        rows_index = index.get(dim - 1, {})
        entries = []
        for col, face in enumerate(cols):
            for t in range(len(face)):
                sub = face[:t] + face[t + 1:]
                entries.append((rows_index[sub], col, (-1) ** t))
        mats[dim] = BoundaryMatrix(len(rows_index), len(cols), tuple(entries))
    return mats


# ---------------------------------------------------------------------------
# integer Smith normal form (sparse, smallest-pivot)
# ---------------------------------------------------------------------------


def smith_invariant_factors(mat: BoundaryMatrix) -> list[int]:
    """Invariant factors of an integer matrix, in divisibility order.

    Sparse fraction-free elimination pivoting on the entry of smallest
    nonzero magnitude (containing coefficient growth), followed by a
    gcd/lcm normalisation pass that enforces d1 | d2 | ... .
    """
    rows: dict[int, dict[int, int]] = {}
    col_rows: dict[int, set[int]] = {}
    for r, c, v in mat.entries:
        if v:
            rows.setdefault(r, {})[c] = v
            col_rows.setdefault(c, set()).add(r)

    def addmul_row(dst: int, src: int, q: int) -> None:
        # row[dst] -= q * row[src]
        rd_dst = rows.setdefault(dst, {})
        for c, v in rows[src].items():
            nv = rd_dst.get(c, 0) - q * v
            if nv:
                rd_dst[c] = nv
                col_rows.setdefault(c, set()).add(dst)
            elif c in rd_dst:
                del rd_dst[c]
                col_rows[c].discard(dst)
        if not rd_dst:
            del rows[dst]

    def addmul_col(dst: int, src: int, q: int) -> None:
        # col[dst] -= q * col[src]
        for r in list(col_rows.get(src, ())):
            v = rows[r][src]
            nv = rows[r].get(dst, 0) - q * v
            if nv:
                rows[r][dst] = nv
                col_rows.setdefault(dst, set()).add(r)
            elif dst in rows[r]:
                del rows[r][dst]
                col_rows[dst].discard(r)

    diag: list[int] = []
    while rows:
        pr = pc = pv = None
        for r, rd in rows.items():
            for c, v in rd.items():
                if pv is None or abs(v) < abs(pv):
                    pr, pc, pv = r, c, v
                    if abs(v) == 1:
                        break
            if pv is not None and abs(pv) == 1:
                break
        while True:
            restart = False
            for r in [r for r in col_rows.get(pc, ()) if r != pr]:
                q = rows[r][pc] // pv
                if q:
                    addmul_row(r, pr, q)
                if pc in rows.get(r, {}):
                    # remainder is strictly smaller: take it as the pivot
                    pr, pv = r, rows[r][pc]
                    restart = True
                    break
            if restart:
                continue
            for c in [c for c in rows[pr] if c != pc]:
                q = rows[pr][c] // pv
                if q:
                    addmul_col(c, pc, q)
                if c in rows.get(pr, {}):
                    pc, pv = c, rows[pr][c]
                    restart = True
                    break
            if not restart:
                break
        diag.append(abs(pv))
        del rows[pr]
        col_rows[pc].discard(pr)
        if not col_rows[pc]:
            del col_rows[pc]

    # a diagonal form reached by row/column ops need not satisfy the
    # divisibility chain; pairwise gcd/lcm swaps converge to it
    changed = True
    while changed:
        changed = False
        for i in range(len(diag)):
            for j in range(i + 1, len(diag)):
                if diag[j] % diag[i]:
                    g = math.gcd(diag[i], diag[j])
                    diag[i], diag[j] = g, diag[i] * diag[j] // g
                    changed = True
    return sorted(diag)


def exact_rank(mat: BoundaryMatrix) -> int:
    """Rank over the rationals (count of nonzero invariant factors)."""
    return len(smith_invariant_factors(mat))


def rank_mod_p(mat: BoundaryMatrix, p: int = ORACLE_PRIME) -> int:
    """Rank over Z/p by dense elimination; never exceeds the exact rank."""
    if not mat.entries or mat.rows == 0 or mat.cols == 0:
        return 0
    a = np.zeros((mat.rows, mat.cols), dtype=np.int64)
    for r, c, v in mat.entries:
        a[r, c] = v % p
    rank = 0
    for c in range(mat.cols):
        if rank == mat.rows:
            break
        nz = np.nonzero(a[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, c]), p - 2, p)
        a[rank] = (a[rank] * inv) % p
        below = rank + 1 + np.nonzero(a[rank + 1:, c])[0]
        if below.size:
            a[below] = (a[below] - np.outer(a[below, c], a[rank])) % p
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# profiles and the Cohen-Macaulay test
# ---------------------------------------------------------------------------


def reduced_homology(d: Complex, cap: int = DEFAULT_FACE_CAP) -> HomologyProfile:
    """Exact reduced homology profile of a nonvoid complex."""
    if d.is_void:
        raise ValueError("the void complex has no homology profile")
    groups = faces_by_dim(d, cap)
    mats = boundary_matrices(d, cap)
    factors = {i: smith_invariant_factors(m) for i, m in mats.items()}
    rank = {i: len(f) for i, f in factors.items()}
    top = d.dim
    betti: dict[int, int] = {}
    for i in range(-1, top + 1):
        f_i = 1 if i == -1 else len(groups.get(i, []))
        betti[i] = f_i - rank.get(i, 0) - rank.get(i + 1, 0)
    torsion = {
        i: tuple(x for x in factors.get(i + 1, []) if x > 1)
        for i in range(-1, top + 1)
        if any(x > 1 for x in factors.get(i + 1, []))
    }
    return HomologyProfile(betti, torsion)


def _link_vanishes_below_top(
    facet_masks: tuple[int, ...], n: int, cap: int, deadline: float | None
) -> bool:
    """Reduced rational homology of the pure link is zero below its dim."""
    apex = ~0
    for m in facet_masks:
        apex &= m
    if apex:
        return True  # cone: acyclic in every dimension
    lc = Complex.from_facets(n, map(_tuple_of, facet_masks))
    ell = lc.dim
    groups = faces_by_dim(lc, cap)
    mats = boundary_matrices(lc, cap)
    bound_rank = {}
    for i, m in mats.items():
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetError("Cohen-Macaulay check ran out of budget")
        bound_rank[i] = rank_mod_p(m)
    exact: dict[int, int] = {}

    def rank_at(i: int, exactly: bool) -> int:
        if i < 0 or i > ell:
            return 0
        if not exactly:
            return bound_rank[i]
        if i not in exact:
            exact[i] = exact_rank(mats[i])
        return exact[i]

    for i in range(-1, ell):
        f_i = 1 if i == -1 else len(groups.get(i, []))
        if f_i - rank_at(i, False) - rank_at(i + 1, False) == 0:
            continue  # mod-p bound already forces the rational rank to 0
        if f_i - rank_at(i, True) - rank_at(i + 1, True) != 0:
            return False
    return True


def is_cohen_macaulay(
    d: Complex, cap: int = DEFAULT_FACE_CAP, budget_s: float | None = None
) -> bool:
    """Reisner's criterion over the rationals.

    True iff ``d`` is nonvoid and every face's link (the empty face
    included) has vanishing reduced rational homology strictly below
    the link's dimension.  Non-pure complexes are never Cohen-Macaulay
    here: facet size gaps already violate the criterion.  With
    ``budget_s`` set, raises :class:`BudgetError` when time runs out.
    """
    if d.is_void or not d.is_pure():
        return False
    top = d.dim
    if top <= 0:
        # links are at most points; nothing lies strictly below dim 0
        # except connectedness of a nonvoid vertex set, which holds
        return True
    deadline = time.monotonic() + budget_s if budget_s is not None else None
    k = top + 1
    seen_links: set[tuple[int, ...]] = set()
    # larger faces first: their links are smaller and fail faster
    for m in sorted(all_faces(d, cap), key=lambda x: -x.bit_count()):
        if m.bit_count() > k - 2:
            continue  # link has dimension <= 0, nothing to check
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetError("Cohen-Macaulay check ran out of budget")
        link_masks = tuple(
            sorted(fm & ~m for fm in d.facet_masks if (m | fm) == fm)
        )
        if link_masks in seen_links:
            continue
        seen_links.add(link_masks)
        if not _link_vanishes_below_top(link_masks, d.n, cap, deadline):
            return False
    return True
