"""The exterior face ring of a complex, its Aomoto complexes, and quotients.

Degree-one classes act on the monomial basis ``t_sigma`` (one monomial per
face) by right multiplication; the cohomology of that action is computed two
independent ways: directly from multiplication matrices, and through the
combinatorial link-homology formula.  The two must agree everywhere; the test
suite enforces this.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exact.fields import Field
from .exact.matrices import rank, reduce_against_echelon, row_echelon
from .simplicial import SimplicialComplex, bits, reduced_dims


@dataclass(frozen=True)
class DegreeOneClass:
    """An element of the degree-one piece, one coefficient per vertex slot."""

    field: Field
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.field.of(c) for c in self.coeffs))

    @classmethod
    def zero(cls, field: Field, n: int) -> "DegreeOneClass":
        return cls(field, (0,) * n)

    @classmethod
    def from_support(cls, field: Field, w_mask: int, n: int) -> "DegreeOneClass":
        """The canonical class with coefficient 1 on each vertex of W."""
        return cls(field, tuple(1 if w_mask >> v & 1 else 0 for v in range(n)))

    @classmethod
    def from_weights(cls, field: Field, weights) -> "DegreeOneClass":
        """The class of an integer vertex weighting, reduced into the field."""
        return cls(field, tuple(weights))

    @property
    def support_mask(self) -> int:
        m = 0
        for v, c in enumerate(self.coeffs):
            if not self.field.is_zero(c):
                m |= 1 << v
        return m

    def is_zero(self) -> bool:
        return self.support_mask == 0


def insertion_sign(vertex: int, face_mask: int) -> int:
    """(-1)^j where j is the sorted position the vertex lands in."""
    below = face_mask & ((1 << vertex) - 1)
    return -1 if below.bit_count() % 2 else 1


def merge_sign(left_mask: int, right_mask: int) -> int:
    """Sign of sorting the concatenation of two disjoint ascending faces."""
    inversions = 0
    for v in bits(right_mask):
        inversions += (left_mask >> (v + 1)).bit_count()
    return -1 if inversions % 2 else 1


def multiplication_matrix(L: SimplicialComplex, z: DegreeOneClass, i: int):
    """Matrix of right multiplication by z from degree i to degree i+1.

    Rows are indexed by size-(i+1) faces, columns by size-i faces.
    """
    by_size = L.faces_by_size()
    cols = by_size[i] if i < len(by_size) else ()
    rows = by_size[i + 1] if i + 1 < len(by_size) else ()
    idx = {f: r for r, f in enumerate(rows)}
    field = z.field
    mat = [[field.zero] * len(cols) for _ in rows]
    for j, face in enumerate(cols):
        for v, c in enumerate(z.coeffs):
            if field.is_zero(c) or face >> v & 1:
                continue
            target = face | (1 << v)
            r = idx.get(target)
            if r is not None:
                sign = insertion_sign(v, face)
                mat[r][j] = c if sign > 0 else field.neg(c)
    return mat


def aomoto_betti_direct(L: SimplicialComplex, z: DegreeOneClass, i_max: int) -> list[int]:
    """Aomoto-Betti numbers from ranks of the multiplication matrices."""
    counts = L.face_counts()
    field = z.field
    ranks = []
    for i in range(i_max + 1):
        ranks.append(rank(multiplication_matrix(L, z, i), field))
    out = []
    for i in range(i_max + 1):
        d_i = counts[i] if i < len(counts) else 0
        out.append(d_i - ranks[i] - (ranks[i - 1] if i > 0 else 0))
    return out


@lru_cache(maxsize=None)
def _aah_table(L: SimplicialComplex, w_mask: int, field: Field) -> tuple[int, ...]:
    # beta_i for all i at once: each face sigma outside W contributes the
    # reduced homology of its link in L_W, shifted by 1 + |sigma|.
    top = len(L.face_counts())
    table = [0] * (top + 1)
    for sigma in L.faces:
        if sigma & w_mask:
            continue
        link = L.link(sigma, w_mask & L.full_mask)
        for deg, dim in reduced_dims(link, field).items():
            i = deg + 1 + sigma.bit_count()
            if dim and 0 <= i <= top:
                table[i] += dim
    return tuple(table)


def aomoto_betti_aah(L: SimplicialComplex, w_mask: int, field: Field,
                     i_max: int) -> list[int]:
    """Aomoto-Betti numbers by the combinatorial link-homology formula.

    The sum runs over faces of L outside W, including the empty face, with
    the convention that the empty complex has one unit of homology in
    degree -1.
    """
    table = _aah_table(L, w_mask & L.full_mask, field)
    return [table[i] if i < len(table) else 0 for i in range(i_max + 1)]


def beta1_closed_form(L: SimplicialComplex, w_mask: int) -> int:
    """Degree-one Aomoto-Betti number via the two-term closed formula."""
    w_mask &= L.full_mask
    induced = L.induced(w_mask)
    vertices = induced.vertex_mask
    if vertices == 0:
        b0_tilde = 0
    else:
        b0_tilde = induced.one_skeleton().component_count(vertices) - 1
    undominated = 0
    for v in range(L.n):
        if w_mask >> v & 1 or not L.has_face(1 << v):
            continue
        link = L.link(1 << v, w_mask)
        if link.faces == frozenset({0}):
            undominated += 1
    return b0_tilde + undominated


@dataclass(frozen=True)
class QuotientRing:
    """Truncated quotient of the face ring by a degree-one class.

    ``basis`` holds the coset-representative monomials per degree (chosen by
    Gaussian elimination over the monomial basis); ``products`` maps pairs of
    basis indices to coordinate vectors over the basis in the product degree.
    """

    field: Field
    truncation: int
    basis: tuple            # per degree 0..truncation: tuple of face masks
    products: dict          # (i, a, j, b) -> tuple of coordinates in degree i+j

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.basis)

    def product(self, i: int, a: int, j: int, b: int):
        if i == 0:
            coords = [self.field.zero] * len(self.basis[j])
            coords[b] = self.field.one
            return tuple(coords)
        if j == 0:
            coords = [self.field.zero] * len(self.basis[i])
            coords[a] = self.field.one
            return tuple(coords)
        return self.products[(i, a, j, b)]


def truncated_quotient(L: SimplicialComplex, z: DegreeOneClass, field: Field,
                       r: int) -> QuotientRing:
    """Graded basis and structure constants of the face ring modulo (z)."""
    if r < 0:
        raise ValueError("truncation degree must be nonnegative")
    by_size = L.faces_by_size()
    echelons = {}
    basis = [(0,)]  # degree 0: the unit monomial
    for i in range(1, r + 1):
        monomials = by_size[i] if i < len(by_size) else ()
        lower = by_size[i - 1] if i - 1 < len(by_size) else ()
        image = []
        if monomials and lower:
            mat = multiplication_matrix(L, z, i - 1)
            for col in range(len(lower)):
                vec = [mat[row][col] for row in range(len(monomials))]
                if any(not field.is_zero(e) for e in vec):
                    image.append(vec)
        echelon, pivots = row_echelon(image, field)
        echelons[i] = (echelon, pivots, monomials)
        basis.append(tuple(m for c, m in enumerate(monomials) if c not in set(pivots)))
    products = {}
    for i in range(1, r):
        for j in range(1, r + 1 - i):
            for a, ma in enumerate(basis[i]):
                for b, mb in enumerate(basis[j]):
                    products[(i, a, j, b)] = _reduced_product(
                        L, field, echelons, basis, i, ma, j, mb)
    return QuotientRing(field, r, tuple(basis), products)


def _reduced_product(L, field, echelons, basis, i, ma, j, mb):
    degree = i + j
    target_basis = basis[degree]
    coords = [field.zero] * len(target_basis)
    if ma & mb or not L.has_face(ma | mb):
        return tuple(coords)
    echelon, pivots, monomials = echelons[degree]
    vec = [field.zero] * len(monomials)
    vec[monomials.index(ma | mb)] = field.of(merge_sign(ma, mb))
    vec = reduce_against_echelon(vec, echelon, pivots, field)
    index_in_basis = {m: k for k, m in enumerate(target_basis)}
    for col, c in enumerate(vec):
        if not field.is_zero(c):
            coords[index_in_basis[monomials[col]]] = c
    return tuple(coords)
