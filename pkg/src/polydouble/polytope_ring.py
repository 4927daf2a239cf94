"""Formal integer combinations of polytopes with product and boundary.

The boundary of a polytope is the formal sum of its facets; on dual
complexes a facet of P is the link of a vertex.  Products of polytopes
are joins of their dual complexes.  The h-polynomial extends linearly to
sums and turns the boundary into (d/da + d/dt).

Terms are merged by exact labeled-complex equality, not isomorphism:
all identities checked here are invariant under that coarser merge.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bipoly import BivariatePolynomial, h_polynomial
from .complexes import DualPolytope, join, link, validate_dual


def _term_key(P: DualPolytope) -> tuple:
    return (P.dim, P.complex.vertex_count, tuple(P.complex.sorted_maximal()))


@dataclass(frozen=True)
class FormalPolytopeSum:
    """Canonically sorted terms (coefficient, polytope), zero terms dropped."""

    terms: tuple[tuple[int, DualPolytope], ...]

    @staticmethod
    def from_terms(terms) -> "FormalPolytopeSum":
        merged: dict[tuple, tuple[int, DualPolytope]] = {}
        for coeff, P in terms:
            key = _term_key(P)
            if key in merged:
                merged[key] = (merged[key][0] + coeff, P)
            else:
                merged[key] = (coeff, P)
        kept = sorted(
            ((key, cp) for key, cp in merged.items() if cp[0]), key=lambda kv: kv[0]
        )
        return FormalPolytopeSum(tuple(cp for _, cp in kept))

    @staticmethod
    def zero() -> "FormalPolytopeSum":
        return FormalPolytopeSum(())

    def __add__(self, other: "FormalPolytopeSum") -> "FormalPolytopeSum":
        return FormalPolytopeSum.from_terms(self.terms + other.terms)

    def scale(self, c: int) -> "FormalPolytopeSum":
        return FormalPolytopeSum.from_terms((c * k, P) for k, P in self.terms)

    def times_polytope(self, Q: DualPolytope, on_left: bool = False) -> "FormalPolytopeSum":
        """Multiply every term by Q (term x Q, or Q x term when on_left)."""
        return FormalPolytopeSum.from_terms(
            (k, product(Q, P) if on_left else product(P, Q)) for k, P in self.terms
        )

    def render(self) -> str:
        """Render as "k1*name1 + k2*name2" with structural names.

        Terms are named m{M}n{N}; distinct complexes sharing those
        numbers get #2, #3, ... in canonical term order.
        """
        if not self.terms:
            return "0"
        seen: dict[str, int] = {}
        pieces = []
        for coeff, P in self.terms:
            base = f"m{P.complex.vertex_count}n{P.dim}"
            seen[base] = seen.get(base, 0) + 1
            name = base if seen[base] == 1 else f"{base}#{seen[base]}"
            pieces.append(f"{coeff}*{name}")
        return " + ".join(pieces)


def boundary_d(P: DualPolytope) -> FormalPolytopeSum:
    """Sum of the facets: one link per vertex of the dual complex.

    The point polytope has the empty sum as boundary, matching
    (d/da + d/dt) 1 = 0.
    """
    if P.dim == 0:
        return FormalPolytopeSum.zero()
    terms = []
    for v in range(1, P.complex.vertex_count + 1):
        facet, _ = link(P, (v,))
        terms.append((1, facet))
    return FormalPolytopeSum.from_terms(terms)


def product(P: DualPolytope, Q: DualPolytope) -> DualPolytope:
    """Product of polytopes: join of dual complexes, dimensions add."""
    return validate_dual(join(P.complex, Q.complex), P.dim + Q.dim)


def h_of_sum(s: FormalPolytopeSum) -> BivariatePolynomial:
    """Linear extension of the h-polynomial to formal sums."""
    total = BivariatePolynomial.zero()
    for coeff, P in s.terms:
        total = total + h_polynomial(P).scale(coeff)
    return total
