"""Squashed order, shadows, and the Kruskal-Katona lower bound.

The squashed (colex) order lists equal-size sets A < B whenever
max(A \\ B) < max(B \\ A).  The shadow of a family of k-sets is the set of
all (k-1)-subsets of its members.  Kruskal-Katona says the first n k-sets
in squashed order minimize the shadow among all n-member families, and the
minimum delta_{k-1}(n) has a closed form through the binomial cascade of n.

All counting goes through checked 64-bit arithmetic: a binomial or a sum
that leaves the signed 64-bit range raises :class:`Overflow` instead of
silently producing numbers the rest of the pipeline was never sized for.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .complexes import Face, FaceFamily, SimplicialComplex
from .errors import EmptyComplex, InvalidInput, NotPure, Overflow, SizeMismatch

_I64_MAX = 2**63 - 1


def _checked(value: int, what: str = "value") -> int:
    if value > _I64_MAX:
        raise Overflow(f"{what} {value} exceeds the checked 64-bit range")
    return value


def comb64(n: int, k: int) -> int:
    """Binomial coefficient, checked against the 64-bit range."""
    return _checked(math.comb(n, k), f"C({n},{k})")


def squashed_cmp(a: Face, b: Face) -> int:
    """-1, 0, or 1 as `a` precedes, equals, or follows `b` in squashed order."""
    if len(a) != len(b):
        raise SizeMismatch(f"cannot compare a {len(a)}-set with a {len(b)}-set")
    ra, rb = tuple(reversed(a.vertices)), tuple(reversed(b.vertices))
    if ra == rb:
        return 0
    return -1 if ra < rb else 1


def colex_rank(face: Face) -> int:
    """Position of the face in the squashed order of all same-size sets.

    rank({a_1 < ... < a_k}) = sum_j C(a_j - 1, j); the empty face has rank 0.
    """
    total = 0
    for j, a in enumerate(face.vertices, start=1):
        total = _checked(total + comb64(a - 1, j), "rank")
    return total


def colex_unrank(rank: int, k: int) -> Face:
    """The k-set at the given squashed-order position (inverse of colex_rank)."""
    if k < 1:
        raise InvalidInput(f"set size must be >= 1, got {k}")
    if rank < 0:
        raise InvalidInput(f"rank must be >= 0, got {rank}")
    _checked(rank, "rank")
    labels = []
    rem = rank
    for j in range(k, 0, -1):
        c = _largest_binomial_at_most(rem, j)
        labels.append(c + 1)
        rem -= math.comb(c, j)
    return Face(*labels)


def _largest_binomial_at_most(bound: int, j: int) -> int:
    """Largest c with C(c, j) <= bound (c >= j-1 always qualifies)."""
    lo, hi = j - 1, j
    while math.comb(hi, j) <= bound:
        lo, hi = hi, hi * 2
    # invariant: comb(lo, j) <= bound < comb(hi, j)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if math.comb(mid, j) <= bound:
            lo = mid
        else:
            hi = mid
    return lo


def segment(k: int, n: int) -> FaceFamily:
    """The first n k-sets in squashed order."""
    if k < 1:
        raise InvalidInput(f"set size must be >= 1, got {k}")
    if n < 0:
        raise InvalidInput(f"count must be >= 0, got {n}")
    return FaceFamily((colex_unrank(r, k) for r in range(n)), size=k)


def segment_avoiding(k: int, n: int, avoid: int) -> FaceFamily:
    """The first n squashed-order k-sets that do not contain `avoid`.

    Unranks in the relabeled universe with `avoid` deleted and maps the
    result back, so cost is O(n k log) rather than a scan of the full order.
    """
    if k < 1:
        raise InvalidInput(f"set size must be >= 1, got {k}")
    if n < 0:
        raise InvalidInput(f"count must be >= 0, got {n}")
    if avoid < 1:
        raise InvalidInput(f"vertex labels must be >= 1, got {avoid}")
    faces = []
    for r in range(n):
        base = colex_unrank(r, k)
        faces.append(Face(*(v if v < avoid else v + 1 for v in base.vertices)))
    return FaceFamily(faces, size=k)


def _family_masks(family: FaceFamily) -> tuple[tuple[int, ...], dict[int, int]]:
    support = family.support
    index = {v: i for i, v in enumerate(support)}
    masks = []
    for f in family:
        m = 0
        for v in f.vertices:
            m |= 1 << index[v]
        masks.append(m)
    return tuple(masks), index


def _shadow_masks(masks) -> set[int]:
    out: set[int] = set()
    for m in masks:
        rest = m
        while rest:
            low = rest & -rest
            out.add(m ^ low)
            rest ^= low
    return out


def shadow(family: FaceFamily) -> FaceFamily:
    """All (k-1)-subsets of the members; the empty family shadows to itself."""
    if not family:
        k = family.uniform_size
        return FaceFamily((), size=None if k is None else max(k - 1, 0))
    k = family.uniform_size
    if k == 0:
        return FaceFamily((), size=0)
    support = family.support
    masks, _ = _family_masks(family)
    faces = []
    for m in _shadow_masks(masks):
        labels = []
        rest = m
        while rest:
            low = rest & -rest
            labels.append(support[low.bit_length() - 1])
            rest ^= low
        faces.append(Face(*labels))
    return FaceFamily(faces, size=k - 1)


@dataclass(frozen=True)
class CascadeRep:
    """The binomial cascade n = C(a_k,k) + C(a_{k-1},k-1) + ... + C(a_t,t).

    Terms are (a_j, j) pairs with j descending from k to t, a_t < ... < a_k,
    and 1 <= t <= a_t; the representation is unique.
    """

    terms: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        return sum(math.comb(a, j) for a, j in self.terms)

    def shadow_count(self) -> int:
        """sum_j C(a_j, j-1): the matching lower bound for the shadow."""
        total = 0
        for a, j in self.terms:
            total = _checked(total + comb64(a, j - 1), "shadow bound")
        return total


def cascade_rep(n: int, k: int) -> CascadeRep:
    """Greedy construction of the unique binomial cascade of n at level k."""
    if n < 1:
        raise InvalidInput(f"cascade undefined for n={n}")
    if k < 1:
        raise InvalidInput(f"cascade undefined for k={k}")
    _checked(n, "n")
    terms = []
    rem = n
    for j in range(k, 0, -1):
        if rem == 0:
            break
        a = _largest_binomial_at_most(rem, j)
        # greedy keeps a_j >= j and strictly decreasing, which is exactly
        # the uniqueness condition
        terms.append((a, j))
        rem -= math.comb(a, j)
    return CascadeRep(tuple(terms))


def delta(n: int, k: int) -> int:
    """Minimum shadow size over families of n k-sets (delta_{k-1}(n))."""
    if k < 1:
        raise InvalidInput(f"set size must be >= 1, got {k}")
    if n < 0:
        raise InvalidInput(f"family size must be >= 0, got {n}")
    if n == 0:
        return 0
    return cascade_rep(n, k).shadow_count()


def is_extremal(c: SimplicialComplex) -> bool:
    """Whether the pure complex attains the Kruskal-Katona shadow bound.

    A pure complex of dimension d > 0 is extremal iff f_{d-1} = delta_d(f_d);
    in dimension <= 0 every complex is extremal.
    """
    if c.is_empty:
        raise EmptyComplex("extremality undefined for the empty complex")
    if not c.is_pure:
        raise NotPure(f"{c!r} is not pure")
    d = c.dimension
    assert d is not None
    if d <= 0:
        return True
    # the (d-1)-faces of a pure complex are exactly the facet shadow
    masks = c._facet_masks
    return len(_shadow_masks(masks)) == delta(len(masks), d + 1)


def split_by_vertex(family: FaceFamily, vertex: int) -> tuple[FaceFamily, FaceFamily]:
    """Partition by a vertex: (members avoiding it, members containing it minus it).

    The second family is empty exactly when the vertex misses every member.
    """
    k = family.uniform_size
    avoiding = []
    stripped = []
    for f in family:
        if vertex in f:
            stripped.append(f.without(vertex))
        else:
            avoiding.append(f)
    b = FaceFamily(avoiding, size=k)
    c = FaceFamily(stripped, size=None if k is None else max(k - 1, 0))
    return b, c


@dataclass(frozen=True)
class Witness:
    """A vertex whose avoiding-part shadow strictly beats its containing part."""

    vertex: int
    shadow_b_count: int
    c_count: int


@dataclass(frozen=True)
class CompleteOnSupport:
    """No witness exists: the family is all k-subsets of its support."""

    support: tuple[int, ...]


WitnessResult = Union[Witness, CompleteOnSupport]


def _witness_scan(masks, n_bits: int) -> tuple[int, int, int] | None:
    """(bit, |shadow(B)|, |C|) for the lowest qualifying bit, else None."""
    for b in range(n_bits):
        bit = 1 << b
        b_masks = [m for m in masks if not m & bit]
        c_count = len(masks) - len(b_masks)
        shadow_b = len(_shadow_masks(b_masks))
        if shadow_b > c_count:
            return b, shadow_b, c_count
    return None


def find_witness(family: FaceFamily) -> WitnessResult:
    """First vertex (ascending) whose avoiding-part shadow beats its stripped part.

    Splitting at a vertex as in :func:`split_by_vertex`, a witness is a
    vertex where the shadow of the avoiding members strictly outnumbers the
    stripped members.  When no vertex qualifies the family must consist of
    all k-subsets of its support, and that completeness is returned instead.
    """
    if not family:
        raise InvalidInput("witness search needs a nonempty family")
    masks, _ = _family_masks(family)
    support = family.support
    hit = _witness_scan(masks, len(support))
    if hit is None:
        return CompleteOnSupport(support=support)
    b, shadow_b, c_count = hit
    return Witness(vertex=support[b], shadow_b_count=shadow_b, c_count=c_count)
