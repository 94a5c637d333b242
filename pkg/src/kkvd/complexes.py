"""Faces, face families, and facet-generated simplicial complexes.

Vertices are arbitrary positive integer labels.  Inside a complex the
labels are compacted onto bit positions 0..v-1 of an integer mask (label
order preserved), so subset tests, links, and deletions are single-word
operations.  All public output is in terms of the original labels.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Union

from .errors import (
    EmptyComplex,
    FaceNotInComplex,
    InvalidInput,
    InvalidLabel,
    NotPure,
    OutOfRange,
    SizeMismatch,
    TooManyVertices,
    VertexNotInComplex,
)

#: Mask width; a complex may use at most this many distinct vertex labels.
MAX_VERTICES = 64

FaceLike = Union["Face", Iterable[int]]


def squashed_key(vertices: tuple[int, ...]) -> tuple[int, ...]:
    """Sort key realizing the squashed (colex) order on equal-size label tuples."""
    return tuple(reversed(vertices))


class Face:
    """An immutable set of positive integer vertex labels.

    ``Face()`` is the empty face (dimension -1).  Labels are stored
    strictly increasing; duplicates in the input collapse.
    """

    __slots__ = ("_vertices",)

    def __init__(self, *labels: int):
        seen = set()
        for v in labels:
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise InvalidLabel(f"vertex labels must be integers >= 1, got {v!r}")
            seen.add(v)
        self._vertices: tuple[int, ...] = tuple(sorted(seen))

    @classmethod
    def of(cls, labels: Iterable[int]) -> "Face":
        return cls(*labels)

    @classmethod
    def _unsafe(cls, vertices: tuple[int, ...]) -> "Face":
        # internal: caller guarantees a sorted tuple of valid labels
        f = object.__new__(cls)
        f._vertices = vertices
        return f

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def dimension(self) -> int:
        return len(self._vertices) - 1

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self._vertices)

    def __contains__(self, label: int) -> bool:
        return label in self._vertices

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Face) and self._vertices == other._vertices

    def __hash__(self) -> int:
        return hash(self._vertices)

    def __repr__(self) -> str:
        return f"Face({', '.join(map(str, self._vertices))})"

    def issubset(self, other: "Face") -> bool:
        return set(self._vertices) <= set(other._vertices)

    def union(self, other: "Face") -> "Face":
        return Face(*self._vertices, *other._vertices)

    def without(self, label: int) -> "Face":
        """The face with one vertex removed."""
        if label not in self._vertices:
            raise InvalidInput(f"vertex {label} not in {self!r}")
        return Face(*(v for v in self._vertices if v != label))

    def with_vertex(self, label: int) -> "Face":
        return Face(*self._vertices, label)


def as_face(obj: FaceLike) -> Face:
    if isinstance(obj, Face):
        return obj
    return Face(*obj)


class FaceFamily:
    """A deduplicated set of equal-cardinality faces in squashed order.

    An empty family may carry a declared member size (e.g. the first 0
    k-sets); equality and hashing ignore it.
    """

    __slots__ = ("_faces", "_size")

    def __init__(self, faces: Iterable[FaceLike] = (), size: int | None = None):
        unique = {as_face(f) for f in faces}
        sizes = {len(f) for f in unique}
        if len(sizes) > 1:
            raise SizeMismatch(f"family mixes face sizes {sorted(sizes)}")
        if sizes:
            member_size = sizes.pop()
            if size is not None and size != member_size:
                raise SizeMismatch(
                    f"declared size {size} but members have size {member_size}"
                )
            size = member_size
        self._faces: tuple[Face, ...] = tuple(
            sorted(unique, key=lambda f: squashed_key(f.vertices))
        )
        self._size = size

    @property
    def uniform_size(self) -> int | None:
        """Common cardinality of the members; None for an undeclared empty family."""
        return self._size

    @property
    def support(self) -> tuple[int, ...]:
        """Sorted union of all member labels."""
        out: set[int] = set()
        for f in self._faces:
            out.update(f.vertices)
        return tuple(sorted(out))

    def __len__(self) -> int:
        return len(self._faces)

    def __iter__(self) -> Iterator[Face]:
        return iter(self._faces)

    def __bool__(self) -> bool:
        return bool(self._faces)

    def __contains__(self, face: object) -> bool:
        return isinstance(face, Face) and face in set(self._faces)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FaceFamily) and self._faces == other._faces

    def __hash__(self) -> int:
        return hash(self._faces)

    def __repr__(self) -> str:
        inner = ", ".join(repr(f) for f in self._faces)
        return f"FaceFamily([{inner}])"


def _popcount(mask: int) -> int:
    return mask.bit_count()


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class SimplicialComplex:
    """A simplicial complex generated by its inclusion-maximal faces.

    Two distinguished small values: the *empty complex* (no faces) and the
    complex ``{∅}`` whose only facet is the empty face.  They behave
    differently under links and recursion and are never conflated.
    """

    __slots__ = ("_labels", "_index", "_facet_masks")

    def __init__(self, faces: Iterable[FaceLike] = ()):
        candidates = {as_face(f) for f in faces}
        labels: set[int] = set()
        for f in candidates:
            labels.update(f.vertices)
        if len(labels) > MAX_VERTICES:
            raise TooManyVertices(
                f"{len(labels)} distinct vertices exceed the {MAX_VERTICES}-bit mask"
            )
        self._labels: tuple[int, ...] = tuple(sorted(labels))
        self._index: dict[int, int] = {v: i for i, v in enumerate(self._labels)}
        masks = {self._mask(f) for f in candidates}
        # drop faces dominated by a strict superset
        maximal = [
            m for m in masks if not any(m != n and m & n == m for n in masks)
        ]
        self._facet_masks: tuple[int, ...] = tuple(
            sorted(maximal, key=lambda m: (_popcount(m), m))
        )

    # -- mask plumbing ---------------------------------------------------

    def _mask(self, face: Face) -> int:
        m = 0
        for v in face.vertices:
            m |= 1 << self._index[v]
        return m

    def _face(self, mask: int) -> Face:
        return Face._unsafe(tuple(self._labels[b] for b in _bits(mask)))

    @classmethod
    def _from_masks(cls, parent_labels, masks) -> "SimplicialComplex":
        """Build a subcomplex from facet masks in a parent's bit space."""
        unique = set(masks)
        maximal = [
            m for m in unique if not any(m != n and m & n == m for n in unique)
        ]
        union = 0
        for m in maximal:
            union |= m
        kept_bits = tuple(_bits(union))
        remap = {b: i for i, b in enumerate(kept_bits)}
        compacted = []
        for m in maximal:
            nm = 0
            rest = m
            while rest:
                low = rest & -rest
                nm |= 1 << remap[low.bit_length() - 1]
                rest ^= low
            compacted.append(nm)
        obj = object.__new__(cls)
        obj._labels = tuple(parent_labels[b] for b in kept_bits)
        obj._index = {v: i for i, v in enumerate(obj._labels)}
        obj._facet_masks = tuple(sorted(compacted, key=lambda m: (_popcount(m), m)))
        return obj

    # -- basic queries ---------------------------------------------------

    @property
    def vertex_set(self) -> tuple[int, ...]:
        return self._labels

    @property
    def facets(self) -> tuple[Face, ...]:
        return tuple(self._face(m) for m in self._facet_masks)

    @property
    def facet_count(self) -> int:
        return len(self._facet_masks)

    @property
    def is_empty(self) -> bool:
        """True for the complex with no faces (not for ``{∅}``)."""
        return not self._facet_masks

    @property
    def dimension(self) -> int | None:
        """Largest face dimension; None for the empty complex, -1 for ``{∅}``."""
        if not self._facet_masks:
            return None
        return _popcount(self._facet_masks[-1]) - 1

    @property
    def is_pure(self) -> bool:
        """True when all facets share one dimension (vacuously for no facets)."""
        if not self._facet_masks:
            return True
        return _popcount(self._facet_masks[0]) == _popcount(self._facet_masks[-1])

    def __contains__(self, face: object) -> bool:
        if not isinstance(face, Face):
            return False
        if any(v not in self._index for v in face.vertices):
            return False
        if not self._facet_masks:
            return False
        m = self._mask(face)
        return any(m & f == m for f in self._facet_masks)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SimplicialComplex)
            and self._labels == other._labels
            and self._facet_masks == other._facet_masks
        )

    def __hash__(self) -> int:
        return hash((self._labels, self._facet_masks))

    def __repr__(self) -> str:
        if self.is_empty:
            return "SimplicialComplex([])"
        inner = ", ".join(
            "{" + ",".join(map(str, f.vertices)) + "}" for f in self.facets
        )
        return f"SimplicialComplex([{inner}])"

    # -- face enumeration --------------------------------------------------

    def faces_of_dim(self, i: int) -> FaceFamily:
        """All i-dimensional faces; i = -1 gives the single empty face."""
        d = self.dimension
        if d is None or i > d or i < -1:
            raise OutOfRange(f"dimension {i} out of range for {self!r}")
        if i == -1:
            return FaceFamily([Face()])
        k = i + 1
        seen: set[int] = set()
        for fm in self._facet_masks:
            bits = list(_bits(fm))
            if len(bits) < k:
                continue
            for combo in itertools.combinations(bits, k):
                m = 0
                for b in combo:
                    m |= 1 << b
                seen.add(m)
        return FaceFamily([self._face(m) for m in seen], size=k)

    def all_faces(self) -> Iterator[Face]:
        """Every face including ∅, by dimension then squashed order."""
        d = self.dimension
        if d is None:
            return
        for i in range(-1, d + 1):
            yield from self.faces_of_dim(i)

    def face_count(self) -> int:
        """Total number of faces including the empty face."""
        d = self.dimension
        if d is None:
            return 0
        return sum(len(self.faces_of_dim(i)) for i in range(-1, d + 1))

    def f_vector(self) -> tuple[int, ...]:
        """(f_0, ..., f_d); empty tuple for ``{∅}``."""
        d = self.dimension
        if d is None:
            raise EmptyComplex("f-vector undefined for the empty complex")
        return tuple(len(self.faces_of_dim(i)) for i in range(d + 1))

    def facet_family(self) -> FaceFamily:
        """The facets as a uniform family; requires a pure complex."""
        if not self.is_pure:
            raise NotPure(f"facets of {self!r} are not equidimensional")
        return FaceFamily(self.facets)

    # -- derived complexes -------------------------------------------------

    def link(self, face: FaceLike) -> "SimplicialComplex":
        """Faces disjoint from the given one whose union with it lies in the complex."""
        face = as_face(face)
        if face not in self:
            raise FaceNotInComplex(f"{face!r} is not a face of {self!r}")
        m = self._mask(face)
        return SimplicialComplex._from_masks(
            self._labels, [f & ~m for f in self._facet_masks if f & m == m]
        )

    def delete_vertex(self, label: int) -> "SimplicialComplex":
        """All faces avoiding the vertex; may come out non-pure."""
        if label not in self._index:
            raise VertexNotInComplex(f"vertex {label} not in {self!r}")
        bit = 1 << self._index[label]
        return SimplicialComplex._from_masks(
            self._labels, [f & ~bit for f in self._facet_masks]
        )

    def canonical_facets(self) -> tuple[tuple[int, ...], ...]:
        """Facets after order-preserving relabeling onto 1..v, sorted.

        Equal for two complexes exactly when one is the image of the other
        under an order-preserving relabeling of vertices.
        """
        return tuple(tuple(b + 1 for b in _bits(fm)) for fm in self._facet_masks)


def make_complex(faces: Iterable[FaceLike]) -> SimplicialComplex:
    """The complex generated by the given faces (dominated faces absorbed)."""
    return SimplicialComplex(faces)
