"""Simplicial complexes on labeled vertices and the doubling construction.

A complex is stored by its maximal faces only (as bit masks over the
vertex set {1..m}); every other face is recovered by subset iteration.
The dual complex of a simple n-dimensional polytope with m facets lives
here as a `DualPolytope`: a pure (n-1)-dimensional complex on the facet
labels that passes weak sphere checks (pseudomanifold plus connectivity).

The doubling rule: on the doubled vertex set {1..m, 1'..m'} (label i'
stored as m+i), a subset s is a face iff {i : i in s and i' in s} is a
face of the input.  Equivalently each minimal non-face {v1..vk} of the
input turns into the minimal non-face {v1, v1', ..., vk, vk'}.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .bitsets import iter_bits, iter_submasks, mask_of, vertices_of
from .errors import (
    BudgetExceeded,
    Disconnected,
    NotAFace,
    NotPseudomanifold,
    NotPure,
    SizeMismatch,
    ValidationError,
)

MAX_VERTICES = 64

# Cap on the subset search performed by minimal_non_faces.
_NON_FACE_SEARCH_BUDGET = 4_000_000

# Cap on maximal faces produced by double_complex and join.
_MAXIMAL_FACE_BUDGET = 1 << 22


@dataclass(frozen=True)
class SimplicialComplex:
    """Immutable complex given by vertex count and maximal face masks.

    The point complex (m = 0, maximal_faces = {0}) is admitted: it is the
    dual of the point polytope, the unit of the join, and the fixed point
    of doubling.
    """

    vertex_count: int
    maximal_faces: frozenset[int]

    @staticmethod
    def from_masks(vertex_count: int, masks: Iterable[int]) -> "SimplicialComplex":
        """Build from face masks, dropping faces contained in others."""
        if not 0 <= vertex_count <= MAX_VERTICES:
            raise ValidationError(
                f"vertex count must be between 0 and {MAX_VERTICES}, got {vertex_count}"
            )
        full = (1 << vertex_count) - 1
        cleaned = set()
        for mask in masks:
            if mask & ~full:
                raise ValidationError(f"face mask {mask:#x} uses vertices above {vertex_count}")
            cleaned.add(mask)
        if not cleaned:
            raise ValidationError("a complex needs at least one face (the point complex is {∅})")
        maximal = {
            f for f in cleaned
            if not any(f != g and f & ~g == 0 for g in cleaned)
        }
        covered = 0
        for f in maximal:
            covered |= f
        if covered != full:
            missing = [v for v in range(1, vertex_count + 1) if not covered >> (v - 1) & 1]
            raise ValidationError(f"vertices {missing} appear in no maximal face")
        return SimplicialComplex(vertex_count, frozenset(maximal))

    @staticmethod
    def from_facets(vertex_count: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Build from iterables of 1-based vertex labels."""
        masks = []
        for facet in facets:
            facet = list(facet)
            if len(set(facet)) != len(facet):
                raise ValidationError(f"facet {facet} repeats a vertex")
            if any(not 1 <= v <= vertex_count for v in facet):
                raise ValidationError(f"facet {facet} out of range 1..{vertex_count}")
            masks.append(mask_of(facet))
        return SimplicialComplex.from_masks(vertex_count, masks)

    @staticmethod
    def point() -> "SimplicialComplex":
        return SimplicialComplex(0, frozenset({0}))

    @property
    def dim(self) -> int:
        """Dimension: -1 for the point complex {∅}."""
        return max(f.bit_count() for f in self.maximal_faces) - 1

    def is_face(self, mask: int) -> bool:
        return any(mask & ~f == 0 for f in self.maximal_faces)

    def sorted_maximal(self) -> list[int]:
        return sorted(self.maximal_faces)

    def all_faces(self) -> set[int]:
        """Every face mask, the empty face included."""
        faces: set[int] = set()
        for f in self.maximal_faces:
            for sub in iter_submasks(f):
                faces.add(sub)
        return faces

    def face_counts_by_size(self) -> list[int]:
        """Entry s = number of faces with s+1 vertices (s = dimension)."""
        counts = [0] * (self.dim + 1)
        for face in self.all_faces():
            if face:
                counts[face.bit_count() - 1] += 1
        return counts

    def facets_as_tuples(self) -> list[tuple[int, ...]]:
        return [vertices_of(f) for f in self.sorted_maximal()]


@dataclass(frozen=True)
class DualPolytope:
    """A complex validated as the dual of a simple n-polytope.

    `dim` is the polytope dimension n; the complex is pure of dimension
    n-1 on m = facet count vertices.  Face masks of the complex
    correspond to faces of the polytope of equal codimension; the empty
    mask corresponds to the polytope itself.
    """

    complex: SimplicialComplex
    dim: int

    @property
    def m(self) -> int:
        return self.complex.vertex_count

    @property
    def n(self) -> int:
        return self.dim


def validate_dual(complex: SimplicialComplex, n: int) -> DualPolytope:
    """Check purity, the pseudomanifold condition, and connectivity.

    These are the weak sphere proxies: full sphere recognition is not
    attempted.  n = 0 only admits the point complex.
    """
    if n < 0:
        raise ValidationError(f"dimension must be nonnegative, got {n}")
    if n == 0:
        if complex.vertex_count != 0:
            raise NotPure("only the point complex is a valid dual in dimension 0")
        return DualPolytope(complex, 0)
    maximal = complex.sorted_maximal()
    for f in maximal:
        if f.bit_count() != n:
            raise NotPure(
                f"maximal face {vertices_of(f)} has {f.bit_count()} vertices, expected {n}"
            )
    # Ridges: (n-2)-dimensional faces, i.e. n-1 vertices. Each must lie in
    # exactly two maximal faces. For n = 1 the single ridge is the empty face.
    ridge_count: dict[int, int] = {}
    for f in maximal:
        for v in iter_bits(f):
            ridge_count[f ^ (1 << v)] = ridge_count.get(f ^ (1 << v), 0) + 1
    if n == 1:
        if len(maximal) != 2:
            raise NotPseudomanifold(
                f"{len(maximal)} points cannot bound a segment, expected exactly 2"
            )
    else:
        for ridge, count in ridge_count.items():
            if count != 2:
                raise NotPseudomanifold(
                    f"ridge {vertices_of(ridge)} lies in {count} maximal faces, expected 2"
                )
    # Facet adjacency graph: maximal faces sharing a ridge.
    index = {f: i for i, f in enumerate(maximal)}
    adjacency: list[list[int]] = [[] for _ in maximal]
    by_ridge: dict[int, list[int]] = {}
    for f in maximal:
        for v in iter_bits(f):
            by_ridge.setdefault(f ^ (1 << v), []).append(index[f])
    for members in by_ridge.values():
        for a in members:
            for b in members:
                if a != b:
                    adjacency[a].append(b)
    seen = {0}
    stack = [0]
    while stack:
        for nb in adjacency[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    if len(seen) != len(maximal):
        raise Disconnected(
            f"facet adjacency graph has {len(maximal) - len(seen)} unreachable maximal faces"
        )
    return DualPolytope(complex, n)


def f_counts(P: DualPolytope) -> list[int]:
    """Counts of i-dimensional faces of the complex, i = 0..n-1.

    Entry i counts the codimension-(i+1) faces of the polytope.
    """
    return P.complex.face_counts_by_size()


def link(P: DualPolytope, sigma: int | Iterable[int]) -> tuple[DualPolytope, tuple[int, ...]]:
    """Link of a face, as the dual of the corresponding polytope face.

    Returns (link, labels): the link on consecutively relabeled vertices
    together with the original label of each new vertex, order
    preserving (new vertex i+1 had label labels[i]).
    """
    sigma_mask = sigma if isinstance(sigma, int) else mask_of(sigma)
    K = P.complex
    if not K.is_face(sigma_mask):
        raise NotAFace(f"{vertices_of(sigma_mask)} is not a face")
    raw = {f & ~sigma_mask for f in K.maximal_faces if sigma_mask & ~f == 0}
    ground = 0
    for f in raw:
        ground |= f
    labels = vertices_of(ground)
    position = {old: new for new, old in enumerate(labels)}
    relabeled = set()
    for f in raw:
        nf = 0
        for v in iter_bits(f):
            nf |= 1 << position[v + 1]
        relabeled.add(nf)
    sub = SimplicialComplex.from_masks(len(labels), relabeled)
    return validate_dual(sub, P.dim - sigma_mask.bit_count()), labels


def double_complex(K: SimplicialComplex) -> SimplicialComplex:
    """The doubled complex on 2m vertices (i stays i, i' becomes m+i).

    Maximal faces: for each maximal face T of K take both copies of every
    vertex of T and one copy (either one) of every other vertex.  The
    result is an antichain because the T's are.
    """
    m = K.vertex_count
    if 2 * m > MAX_VERTICES:
        raise BudgetExceeded(f"doubling a complex on {m} vertices exceeds {MAX_VERTICES}")
    produced = sum(1 << (m - T.bit_count()) for T in K.maximal_faces)
    if produced > _MAXIMAL_FACE_BUDGET:
        raise BudgetExceeded(
            f"double would have {produced} maximal faces, budget {_MAXIMAL_FACE_BUDGET}"
        )
    out = set()
    for T in K.maximal_faces:
        base = T | (T << m)
        rest = [v for v in range(m) if not T >> v & 1]
        for choice in range(1 << len(rest)):
            face = base
            for j, v in enumerate(rest):
                face |= 1 << (v if choice >> j & 1 else v + m)
            out.add(face)
    return SimplicialComplex(2 * m, frozenset(out))


def doubled_face_rule(K: SimplicialComplex, mask: int) -> bool:
    """Direct membership test for faces of the double of K."""
    m = K.vertex_count
    pairs = mask & (mask >> m) & ((1 << m) - 1)
    return K.is_face(pairs)


def join(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    """Join: faces are unions, with K2 vertices relabeled after K1's."""
    m1 = K1.vertex_count
    m = m1 + K2.vertex_count
    if m > MAX_VERTICES:
        raise BudgetExceeded(f"join on {m} vertices exceeds {MAX_VERTICES}")
    produced = len(K1.maximal_faces) * len(K2.maximal_faces)
    if produced > _MAXIMAL_FACE_BUDGET:
        raise BudgetExceeded(
            f"join would have {produced} maximal faces, budget {_MAXIMAL_FACE_BUDGET}"
        )
    faces = {f1 | (f2 << m1) for f1 in K1.maximal_faces for f2 in K2.maximal_faces}
    return SimplicialComplex(m, frozenset(faces))


def full_subcomplex(K: SimplicialComplex, J: int | Iterable[int]) -> SimplicialComplex:
    """Faces of K contained in J, relabeled consecutively along sorted J."""
    J_mask = J if isinstance(J, int) else mask_of(J)
    labels = vertices_of(J_mask)
    position = {old: new for new, old in enumerate(labels)}
    restricted = set()
    for f in K.maximal_faces:
        restricted.add(f & J_mask)
    maximal = {
        f for f in restricted
        if not any(f != g and f & ~g == 0 for g in restricted)
    }
    relabeled = set()
    for f in maximal:
        nf = 0
        for v in iter_bits(f):
            nf |= 1 << position[v + 1]
        relabeled.add(nf)
    return SimplicialComplex(len(labels), frozenset(relabeled))


def minimal_non_faces(K: SimplicialComplex) -> frozenset[int]:
    """Inclusion-minimal vertex sets that are not faces.

    Searches subsets by increasing size; any non-face free of smaller
    minimal non-faces is itself minimal.  Sizes above (top face size + 1)
    cannot occur, which bounds the search.
    """
    m = K.vertex_count
    top = max(f.bit_count() for f in K.maximal_faces)
    limit = min(m, top + 1)
    work = sum(comb(m, k) for k in range(1, limit + 1))
    if work > _NON_FACE_SEARCH_BUDGET:
        raise BudgetExceeded(
            f"non-face search needs {work} subset tests, budget {_NON_FACE_SEARCH_BUDGET}"
        )
    found: list[int] = []
    maximal = K.sorted_maximal()
    for size in range(1, limit + 1):
        for combo in combinations(range(m), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if any(s & ~mask == 0 for s in found):
                continue
            if not any(mask & ~f == 0 for f in maximal):
                found.append(mask)
    return frozenset(found)


def disjoint_facet_count(P: DualPolytope, i: int) -> int:
    """Number of facets of the polytope meeting facet i in nothing.

    In the dual complex: vertices j != i with {i, j} not an edge.
    """
    K = P.complex
    if not 1 <= i <= K.vertex_count:
        raise ValidationError(f"vertex {i} out of range 1..{K.vertex_count}")
    bit = 1 << (i - 1)
    count = 0
    for j in range(K.vertex_count):
        other = 1 << j
        if other != bit and not K.is_face(bit | other):
            count += 1
    return count


def equal_under_relabel(
    K1: SimplicialComplex, K2: SimplicialComplex, mapping: dict[int, int]
) -> bool:
    """True iff `mapping` carries the maximal faces of K1 exactly onto K2's."""
    m = K1.vertex_count
    if K2.vertex_count != m:
        raise SizeMismatch(f"vertex counts differ: {m} vs {K2.vertex_count}")
    if sorted(mapping) != list(range(1, m + 1)) or sorted(mapping.values()) != list(
        range(1, m + 1)
    ):
        raise SizeMismatch("mapping is not a bijection of {1..m}")
    image = set()
    for f in K1.maximal_faces:
        nf = 0
        for v in iter_bits(f):
            nf |= 1 << (mapping[v + 1] - 1)
        image.add(nf)
    return image == set(K2.maximal_faces)
