"""Cohomology ranks of moment-angle and real moment-angle complexes.

Both spaces attached to a complex K on m vertices decompose over the
full subcomplexes K_J, J running over all 2^m vertex subsets:

  * moment-angle (kind "Z"):   rank in degree k  +=  dim H~_(k-|J|-1)(K_J)
  * real moment-angle ("R"):   rank in degree k  +=  dim H~_(k-1)(K_J)

The J = {} term contributes 1 in degree 0 for both kinds (the empty
complex has reduced rank 1 in dimension -1).  Reduced homology of each
subcomplex is computed from boundary-matrix ranks by exact elimination:
fraction-free integer column reduction over the rationals, bit-packed
column reduction over the two-element field.

Total rank over all degrees is the same for both kinds, which is why the
homeomorphism checks (verify_lemma6) compare per degree as well.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .bitsets import iter_bits
from .complexes import DualPolytope, SimplicialComplex, disjoint_facet_count, double_complex, link
from .errors import BudgetExceeded, ValidationError

RATIONALS = "Q"
GF2 = "F2"
FIELDS = (RATIONALS, GF2)

SPACE_Z = "Z"
SPACE_R = "R"
SPACE_KINDS = (SPACE_Z, SPACE_R)

# hochster_betti enumerates 2^m subsets; above this it refuses outright.
HOCHSTER_VERTEX_BUDGET = 20
# verify_lemma6 and verify_trc_bound run the doubled complex, hence 2m.
DOUBLE_VERTEX_BUDGET = 10

# Below this vertex count the face->subset fan-out table is precomputed.
_PREBUILD_LIMIT = 14


def _check_field(field_tag: str) -> None:
    if field_tag not in FIELDS:
        raise ValidationError(f"unknown field {field_tag!r}, expected one of {FIELDS}")


@dataclass(frozen=True)
class BettiTable:
    """Per-degree cohomology ranks of one space over one field."""

    space_kind: str
    field: str
    ranks: dict[int, int]
    m: int
    complex: SimplicialComplex

    def __post_init__(self):
        if self.space_kind not in SPACE_KINDS:
            raise ValidationError(f"space kind must be one of {SPACE_KINDS}")
        _check_field(self.field)
        if self.ranks.get(0) != 1:
            raise ValidationError("degree 0 must have rank 1")

    def render(self) -> str:
        lines = [f"{k}: {self.ranks[k]}" for k in sorted(self.ranks)]
        lines.append(f"hrk: {hrk(self)}")
        return "\n".join(lines)

    def to_jsonable(self) -> dict:
        return {
            "space": self.space_kind,
            "field": self.field,
            "m": self.m,
            "ranks": {str(k): self.ranks[k] for k in sorted(self.ranks)},
            "hrk": hrk(self),
        }


def hrk(table: BettiTable) -> int:
    """Total cohomology rank: the sum of all per-degree ranks."""
    return sum(table.ranks.values())


# -- exact ranks of sparse columns --------------------------------------------


def _rank_gf2(columns: list[int]) -> int:
    """Rank over F2; each column is a bit mask of row indices."""
    pivots: dict[int, int] = {}
    rank = 0
    for col in columns:
        while col:
            p = col.bit_length() - 1
            other = pivots.get(p)
            if other is None:
                pivots[p] = col
                rank += 1
                break
            col ^= other
    return rank


def _rank_rational(columns: list[dict[int, int]]) -> int:
    """Rank over Q by fraction-free integer column reduction.

    Columns are sparse {row: coefficient} dicts; each reduction step
    cross-multiplies to stay in the integers and strips the gcd to keep
    entries small.
    """
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for col in columns:
        while col:
            p = max(col)
            other = pivots.get(p)
            if other is None:
                pivots[p] = col
                rank += 1
                break
            a, o = col[p], other[p]
            g = gcd(a, o)
            fo, fc = o // g, a // g
            merged: dict[int, int] = {}
            for r, v in col.items():
                w = fo * v - fc * other.get(r, 0)
                if w:
                    merged[r] = w
            for r, v in other.items():
                if r not in col:
                    merged[r] = -fc * v
            if merged:
                g2 = 0
                for v in merged.values():
                    g2 = gcd(g2, v)
                if g2 > 1:
                    merged = {r: v // g2 for r, v in merged.items()}
            col = merged
    return rank


def _ranks_from_faces(faces: list[int], field_tag: str) -> list[int]:
    """Reduced homology ranks (dims -1..top) of the complex with the given
    nonempty-face masks.  `faces` excludes the empty face."""
    if not faces:
        return [1]
    by_size: dict[int, list[int]] = {}
    for f in faces:
        by_size.setdefault(f.bit_count(), []).append(f)
    top = max(by_size)
    sizes = [sorted(by_size.get(s, [])) for s in range(top + 1)]
    index: list[dict[int, int]] = [
        {f: i for i, f in enumerate(level)} for level in sizes
    ]
    # boundary_rank[s] = rank of the map from faces of size s to size s-1;
    # size-1 faces map onto the empty face (augmentation).
    boundary_rank = [0] * (top + 2)
    for s in range(1, top + 1):
        level = sizes[s]
        if not level:
            continue
        if s == 1:
            boundary_rank[s] = 1 if level else 0
            continue
        lower = index[s - 1]
        if field_tag == GF2:
            cols_gf2 = []
            for f in level:
                mask = 0
                for v in iter_bits(f):
                    mask |= 1 << lower[f ^ (1 << v)]
                cols_gf2.append(mask)
            boundary_rank[s] = _rank_gf2(cols_gf2)
        else:
            cols_q = []
            for f in level:
                col: dict[int, int] = {}
                sign = 1
                for v in iter_bits(f):
                    col[lower[f ^ (1 << v)]] = sign
                    sign = -sign
                cols_q.append(col)
            boundary_rank[s] = _rank_rational(cols_q)
    ranks = []
    for s in range(top + 1):
        dim_chain = 1 if s == 0 else len(sizes[s])
        ranks.append(dim_chain - boundary_rank[s] - boundary_rank[s + 1])
    return ranks


def reduced_homology_ranks(K: SimplicialComplex, field_tag: str) -> list[int]:
    """Reduced homology ranks by dimension, starting at dimension -1.

    The empty complex {∅} yields [1]; any nonempty complex starts [0, ...].
    """
    _check_field(field_tag)
    faces = [f for f in K.all_faces() if f]
    return _ranks_from_faces(faces, field_tag)


# -- Hochster-type accumulation ------------------------------------------------


def _accumulate(
    table: dict[int, int], J: int, local_ranks: list[int], space_kind: str
) -> None:
    shift = J.bit_count() + 1 if space_kind == SPACE_Z else 1
    for d, r in enumerate(local_ranks, start=-1):
        if r:
            k = d + shift
            table[k] = table.get(k, 0) + r


def _subset_face_lists(faces: list[int], m: int) -> list[list[int]]:
    """faces_in[J] = all nonempty faces contained in J, for every J."""
    out: list[list[int]] = [[] for _ in range(1 << m)]
    full = (1 << m) - 1
    for f in faces:
        free = full & ~f
        sub = free
        while True:
            out[f | sub].append(f)
            if sub == 0:
                break
            sub = (sub - 1) & free
    return out


def _hochster_range(
    faces_in, J_range, space_kind: str, field_tag: str, faces: list[int], m: int
) -> dict[int, int]:
    table: dict[int, int] = {}
    for J in J_range:
        if faces_in is not None:
            local = faces_in[J]
        else:
            local = [f for f in faces if f & ~J == 0]
        _accumulate(table, J, _ranks_from_faces(local, field_tag), space_kind)
    return table


def hochster_betti(
    K: SimplicialComplex, space_kind: str, field_tag: str, threads: int = 1
) -> BettiTable:
    """Betti table of the (real) moment-angle complex of K.

    Enumerates all 2^m full subcomplexes in bit-mask order; per-degree
    sums are integers, so the aggregation over any partition of the J
    range gives the same table (threads only change the schedule).
    """
    _check_field(field_tag)
    if space_kind not in SPACE_KINDS:
        raise ValidationError(f"space kind must be one of {SPACE_KINDS}")
    m = K.vertex_count
    if m > HOCHSTER_VERTEX_BUDGET:
        raise BudgetExceeded(
            f"{m} vertices means 2^{m} subcomplexes, budget is {HOCHSTER_VERTEX_BUDGET}"
        )
    if threads <= 1:
        return _hochster_cached(K, space_kind, field_tag)
    return _hochster_run(K, space_kind, field_tag, threads)


@lru_cache(maxsize=4096)
def _hochster_cached(K: SimplicialComplex, space_kind: str, field_tag: str) -> BettiTable:
    return _hochster_run(K, space_kind, field_tag, 1)


def _hochster_run(
    K: SimplicialComplex, space_kind: str, field_tag: str, threads: int
) -> BettiTable:
    m = K.vertex_count
    faces = sorted(f for f in K.all_faces() if f)
    faces_in = _subset_face_lists(faces, m) if m <= _PREBUILD_LIMIT else None
    total = 1 << m
    table: dict[int, int] = {}
    if threads <= 1:
        table = _hochster_range(faces_in, range(total), space_kind, field_tag, faces, m)
    else:
        chunk = (total + threads - 1) // threads
        ranges = [range(i, min(i + chunk, total)) for i in range(0, total, chunk)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            partials = pool.map(
                lambda r: _hochster_range(faces_in, r, space_kind, field_tag, faces, m),
                ranges,
            )
            for part in partials:
                for k, v in part.items():
                    table[k] = table.get(k, 0) + v
    return BettiTable(
        space_kind=space_kind, field=field_tag, ranks=table, m=m, complex=K
    )


# -- verification reports -------------------------------------------------------


@dataclass(frozen=True)
class Lemma6Report:
    """Total and per-degree comparison of Z(K) against R(double of K)."""

    z_table: BettiTable
    r_table: BettiTable
    total_z: int
    total_r: int
    per_degree_equal: bool
    passed: bool


def verify_lemma6(K: SimplicialComplex, field_tag: str, threads: int = 1) -> Lemma6Report:
    """hrk of the moment-angle complex of K must equal hrk of the real
    moment-angle complex of the double, degree by degree."""
    if K.vertex_count > DOUBLE_VERTEX_BUDGET:
        raise BudgetExceeded(
            f"{K.vertex_count} vertices doubles to {2 * K.vertex_count}, "
            f"budget is {DOUBLE_VERTEX_BUDGET}"
        )
    z = hochster_betti(K, SPACE_Z, field_tag, threads)
    r = hochster_betti(double_complex(K), SPACE_R, field_tag, threads)
    per_degree = z.ranks == r.ranks
    total_z, total_r = hrk(z), hrk(r)
    return Lemma6Report(
        z_table=z,
        r_table=r,
        total_z=total_z,
        total_r=total_r,
        per_degree_equal=per_degree,
        passed=(total_z == total_r) and per_degree,
    )


@dataclass(frozen=True)
class TrcReport:
    """Lower bound 2^(m-n) against the total ranks of Z(K) and R(double)."""

    bound: int
    z_hrk: int
    r_double_hrk: int
    passed: bool
    z_margin: int = 0
    r_margin: int = 0


def verify_trc_bound(P: DualPolytope, field_tag: str, threads: int = 1) -> TrcReport:
    """Check hrk(Z) >= 2^(m-n) and hrk(R of the double) >= 2^(m-n)."""
    m, n = P.m, P.n
    if m > DOUBLE_VERTEX_BUDGET:
        raise BudgetExceeded(f"m = {m} exceeds budget {DOUBLE_VERTEX_BUDGET}")
    bound = 1 << (m - n)
    z = hrk(hochster_betti(P.complex, SPACE_Z, field_tag, threads))
    r = hrk(hochster_betti(double_complex(P.complex), SPACE_R, field_tag, threads))
    return TrcReport(
        bound=bound,
        z_hrk=z,
        r_double_hrk=r,
        passed=z >= bound and r >= bound,
        z_margin=z - bound,
        r_margin=r - bound,
    )


@dataclass(frozen=True)
class FacetSplitReport:
    """hrk(R of K) against 2^k * hrk(R of the link of one vertex)."""

    vertex: int
    disjoint_count: int
    lhs: int
    rhs: int
    passed: bool


def verify_facet_splitting(P: DualPolytope, v: int, field_tag: str) -> FacetSplitReport:
    """Splitting off one facet: the boundary of the halved manifold is the
    real moment-angle complex of the facet times a discrete factor of
    size 2^k, k the number of facets disjoint from facet v."""
    if P.m > HOCHSTER_VERTEX_BUDGET:
        raise BudgetExceeded(f"m = {P.m} exceeds budget {HOCHSTER_VERTEX_BUDGET}")
    k = disjoint_facet_count(P, v)
    lhs = hrk(hochster_betti(P.complex, SPACE_R, field_tag))
    facet, _ = link(P, (v,))
    rhs = (1 << k) * hrk(hochster_betti(facet.complex, SPACE_R, field_tag))
    return FacetSplitReport(
        vertex=v, disjoint_count=k, lhs=lhs, rhs=rhs, passed=lhs >= rhs
    )
