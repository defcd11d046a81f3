"""Simplicial complexes presented by their facets, and independence complexes.

A complex on ambient vertex set ``0..n-1`` is stored as the canonical
tuple of its facets, each facet a sorted vertex tuple, ordered by
(size, lexicographic).  Two degenerate complexes are kept distinct:

* the void complex (no faces at all): ``facets == ()``
* the empty-face complex ``{()}``: ``facets == ((,),)``

Both count as pure.  The independence complex of any graph with at
least zero vertices is never void: the empty set is independent.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from . import kernels
from .graphs import Graph


def _mask_of(face: Iterable[int]) -> int:
    m = 0
    for v in face:
        m |= 1 << v
    return m


def _tuple_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return tuple(out)


@dataclass(frozen=True)
class Complex:
    """Immutable simplicial complex given by its facet list."""

    n: int
    facets: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_facets(
        n: int, faces: Iterable[Iterable[int]], *, maximalize: bool = False
    ) -> "Complex":
        """Build a complex from candidate facets.

        With ``maximalize`` the faces are filtered down to the maximal
        ones; otherwise strict containment or duplication is an error.
        """
        masks = []
        for f in faces:
            fs = sorted(set(f))
            if fs and not (0 <= fs[0] and fs[-1] < n):
                raise ValueError(f"face {fs} out of range for n={n}")
            if len(fs) != len(tuple(f)):
                raise ValueError(f"face {tuple(f)} has repeated vertices")
            masks.append(_mask_of(fs))
        if maximalize:
            masks = [
                m
                for i, m in enumerate(masks)
                if not any(
                    (m | o) == o and (m != o or j < i) for j, o in enumerate(masks)
                )
            ]
        else:
            for i, m in enumerate(masks):
                for j, o in enumerate(masks):
                    if i != j and (m | o) == o:
                        kind = "duplicates" if m == o else "is contained in"
                        raise ValueError(
                            f"facet {_tuple_of(m)} {kind} facet {_tuple_of(o)}"
                        )
        tuples = sorted((_tuple_of(m) for m in set(masks)), key=lambda t: (len(t), t))
        return Complex(n, tuple(tuples))

    @cached_property
    def facet_masks(self) -> tuple[int, ...]:
        return tuple(_mask_of(f) for f in self.facets)

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int | None:
        """Dimension, ``None`` for the void complex (-1 for ``{()}``)."""
        if self.is_void:
            return None
        return max(len(f) for f in self.facets) - 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def has_face(self, face: Iterable[int]) -> bool:
        m = _mask_of(face)
        return any((m | fm) == fm for fm in self.facet_masks)

    def vertices(self) -> tuple[int, ...]:
        """Vertices actually used by some face (not the ambient range)."""
        m = 0
        for fm in self.facet_masks:
            m |= fm
        return _tuple_of(m)

    def f_vector(self) -> dict[int, int]:
        """Face counts by dimension, including ``f[-1] = 1`` when nonvoid."""
        seen = set()
        for fm in self.facet_masks:
            stack = [fm]
            while stack:
                m = stack.pop()
                if m in seen:
                    continue
                seen.add(m)
                mm = m
                while mm:
                    stack.append(m & ~(mm & -mm))
                    mm &= mm - 1
        counts: dict[int, int] = {}
        for m in seen:
            d = m.bit_count() - 1
            counts[d] = counts.get(d, 0) + 1
        return counts

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "facets": [list(f) for f in self.facets]})

    @staticmethod
    def from_json(text: str) -> "Complex":
        obj = json.loads(text)
        return Complex.from_facets(obj["n"], obj["facets"])


def independence_complex(g: Graph) -> Complex:
    """Independence complex Ind(G): faces are the independent vertex sets.

    Facets (maximal independent sets) are enumerated with Bron-Kerbosch
    with pivoting on the complement graph.
    """
    full = (1 << g.n) - 1
    # neighbourhoods in the complement graph: maximal independent sets of g
    # are exactly the maximal cliques of its complement
    nadj = [full & ~(m | (1 << v)) for v, m in enumerate(g.adjacency_masks)]
    facets = []

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            facets.append(r)
            return
        # pivot: vertex of P|X with most complement-neighbours inside P
        pivot, best = -1, -1
        m = p | x
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            d = (nadj[u] & p).bit_count()
            if d > best:
                pivot, best = u, d
        cand = p & ~nadj[pivot]
        while cand:
            vbit = cand & -cand
            v = vbit.bit_length() - 1
            cand &= cand - 1
            expand(r | vbit, p & nadj[v], x & nadj[v])
            p &= ~vbit
            x |= vbit

    expand(0, full, 0)
    return Complex.from_facets(g.n, map(_tuple_of, facets))


def alpha(g: Graph) -> int:
    """Independence number of ``g`` (the dimension of Ind(g) plus one)."""
    return kernels.alpha(g.n, list(g.adjacency_masks))


def link(d: Complex, face: Iterable[int]) -> Complex:
    """Link of ``face``: facets are ``F - face`` over facets ``F`` containing it."""
    m = _mask_of(face)
    if not d.has_face(_tuple_of(m)):
        raise ValueError(f"{_tuple_of(m)} is not a face of the complex")
    trimmed = [fm & ~m for fm in d.facet_masks if (m | fm) == fm]
    # facets containing a common face have incomparable remainders
    return Complex.from_facets(d.n, map(_tuple_of, trimmed))


def deletion(d: Complex, v: int) -> Complex:
    """Deletion of vertex ``v``: all faces avoiding ``v``, re-maximalised.

    Facets that contained ``v`` shrink and may or may not stay maximal,
    so the facet family is recomputed rather than filtered.
    """
    if not (0 <= v < d.n):
        raise ValueError(f"vertex {v} out of range for n={d.n}")
    vbit = 1 << v
    kept = [fm & ~vbit for fm in d.facet_masks]
    return Complex.from_facets(d.n, map(_tuple_of, kept), maximalize=True)
