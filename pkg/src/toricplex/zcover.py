"""Homology of the infinite cyclic covers of a toric complex, as modules over
the Laurent polynomial ring of the deck group.

Free ranks come from the combinatorial Aomoto-Betti formula at the support of
the character.  Torsion comes from a two-step algorithm: an arithmetic step
producing a valuation vector per irreducible class, then Smith normal form of
a monomial boundary matrix whose t-adic valuations are the block sizes.  An
independent oracle computes the same decomposition straight from the defining
chain complex over k[t] and is used to cross-check everything.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field as dc_field
from math import gcd

from .aomoto import aomoto_betti_aah
from .exact.fields import Field, is_prime, prime_factors
from .exact.matrices import snf_poly
from .exact.poly import Poly, cyclotomic, t_power_minus_one
from .simplicial import SimplicialComplex, bits, boundary_dim, reduced_dims


@dataclass(frozen=True)
class Character:
    """Integer weight per vertex, encoding a homomorphism onto Z."""

    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))

    @classmethod
    def diagonal(cls, n: int) -> "Character":
        return cls((1,) * n)

    @property
    def n(self) -> int:
        return len(self.weights)

    def content(self) -> int:
        g = 0
        for w in self.weights:
            g = gcd(g, abs(w))
        return g

    def normalized(self) -> "Character":
        """Divide out the gcd of the weights; the covers are equivalent.

        Raises on the zero character; warns when scaling was needed.
        """
        g = self.content()
        if g == 0:
            raise ValueError("the zero character defines no cover")
        if g == 1:
            return self
        warnings.warn(
            f"character weights have gcd {g}; normalizing to a surjection",
            stacklevel=3)
        return Character(tuple(w // g for w in self.weights))


def support(chi: Character, q: int) -> int:
    """Vertices whose weight is nonzero mod q (nonzero, for q = 0)."""
    if q != 0 and not is_prime(q):
        raise ValueError(f"support index must be 0 or prime, got {q}")
    m = 0
    for v, w in enumerate(chi.weights):
        if (w != 0) if q == 0 else (w % q != 0):
            m |= 1 << v
    return m


def prime_set(chi: Character) -> frozenset[int]:
    """Primes dividing some nonzero weight; exactly where the support drops."""
    out = set()
    for w in chi.weights:
        out.update(prime_factors(w))
    return frozenset(out)


def _euler_phi(d: int) -> int:
    out = d
    for p in prime_factors(d):
        out -= out // p
    return out


def _multiplicative_order(p: int, d: int) -> int:
    if d == 1:
        return 1
    if gcd(p, d) != 1:
        raise ValueError("order undefined: arguments not coprime")
    e, acc = 1, p % d
    while acc != 1:
        acc = acc * p % d
        e += 1
    return e


@dataclass(frozen=True)
class FClass:
    """A class of irreducible torsion polynomials, parametrized by order d.

    In characteristic 0 the class is the single d-th cyclotomic polynomial;
    in characteristic p (with p not dividing d) it consists of all
    irreducible factors of its image, which share one degree and, for the
    modules computed here, one multiplicity profile.
    """

    d: int
    char: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("class order must be >= 1")
        if self.char and self.d % self.char == 0:
            raise ValueError(
                f"class order {self.d} is not coprime to the characteristic {self.char}")

    @property
    def irreducible_degree(self) -> int:
        if self.char == 0:
            return _euler_phi(self.d)
        return _multiplicative_order(self.char, self.d)

    @property
    def count(self) -> int:
        if self.char == 0:
            return 1
        return _euler_phi(self.d) // self.irreducible_degree


NEG_INF = None  # valuation sentinel for zero weights: f^(-inf) = 0


def _split_p_part(m: int, p: int) -> tuple[int, int]:
    s = 0
    while m % p == 0:
        m //= p
        s += 1
    return s, m


def b_vector(chi: Character, fclass: FClass, field: Field):
    """Per-vertex valuation of t^(m_v) - 1 at the class's irreducibles.

    Closed form: in characteristic 0 the valuation is 1 when d divides the
    weight; in characteristic p it is p^s when d divides the prime-to-p part
    of the weight, where p^s is the p-part.  Zero weights give the -inf
    sentinel (a zero matrix entry downstream).
    """
    if field.char != fclass.char:
        raise ValueError("class characteristic does not match the field")
    out = []
    for w in chi.weights:
        if w == 0:
            out.append(NEG_INF)
            continue
        m = abs(w)
        if field.char == 0:
            out.append(1 if m % fclass.d == 0 else 0)
        else:
            s, q = _split_p_part(m, field.char)
            out.append(field.char ** s if q % fclass.d == 0 else 0)
    return tuple(out)


def weighted_boundary(L: SimplicialComplex, s: int, entries) -> list[list[Poly]]:
    """Boundary from size-s faces to size-(s-1) faces with per-vertex entries.

    ``entries[v]`` is the polynomial carried by dropping vertex v (the zero
    polynomial for deleted vertices); signs follow ascending vertex order.
    """
    by_size = L.faces_by_size()
    cols = by_size[s] if s < len(by_size) else ()
    rows = by_size[s - 1] if s - 1 < len(by_size) else ()
    idx = {f: i for i, f in enumerate(rows)}
    zero = entries[0].field if entries else None
    mat = [[Poly.zero(zero) for _ in cols] for _ in rows]
    for j, face in enumerate(cols):
        for r, v in enumerate(bits(face)):
            e = entries[v]
            if e.is_zero():
                continue
            mat[idx[face ^ (1 << v)]][j] = e if r % 2 == 0 else -e
    return mat


def free_ranks(L: SimplicialComplex, chi: Character, field: Field,
               i_max: int) -> list[int]:
    """Laurent-module ranks of the cover homology, degree by degree."""
    chi = chi.normalized()
    return aomoto_betti_aah(L, support(chi, 0), field, i_max)


def torsion_multiplicities(L: SimplicialComplex, chi: Character, fclass: FClass,
                           field: Field, i_max: int) -> list[tuple[int, ...]]:
    """Block multiplicities of the class's primary part, per degree.

    Entry j of the degree-i tuple counts blocks of size j+1.  The t-adic
    valuations of the polynomial Smith form equal the power-series Smith
    exponents, so no completed arithmetic is needed.
    """
    chi = chi.normalized()
    bvec = b_vector(chi, fclass, field)
    entries = [Poly.zero(field) if b is NEG_INF else Poly.monomial(field, b)
               for b in bvec]
    out = []
    for i in range(i_max + 1):
        sf = snf_poly(weighted_boundary(L, i + 1, entries), field)
        vals = [f.ord_t() for f in sf.invariant_factors]
        top = max(vals, default=0)
        counts = [0] * top
        for a in vals:
            if a >= 1:
                counts[a - 1] += 1
        out.append(_trim(counts))
    return out


def _trim(counts) -> tuple[int, ...]:
    counts = list(counts)
    while counts and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def relevant_orders(chi: Character, field: Field) -> tuple[int, ...]:
    """Class orders that can carry torsion: divisors of the reduced weights.

    Every other class has trivial primary part, because its irreducibles
    divide no t^(m_v) - 1.
    """
    orders = set()
    for w in chi.weights:
        if w == 0:
            continue
        m = abs(w)
        if field.char:
            m = _split_p_part(m, field.char)[1]
        orders.update(d for d in range(1, m + 1) if m % d == 0)
    return tuple(sorted(orders))


@dataclass
class DegreeDecomposition:
    free_rank: int
    torsion: dict[int, tuple[int, ...]] = dc_field(default_factory=dict)

    def normalized(self) -> "DegreeDecomposition":
        return DegreeDecomposition(
            self.free_rank,
            {d: _trim(m) for d, m in sorted(self.torsion.items()) if _trim(m)})

    def is_trivial_action(self) -> bool:
        """Only blocks of the class-1 identity type, of size 1, no free part."""
        return self.free_rank == 0 and all(
            d == 1 and len(m) == 1 for d, m in self.normalized().torsion.items())


@dataclass
class ZModuleDecomposition:
    """Per-degree free rank plus torsion multiplicities by class order."""

    char: int
    degrees: list[DegreeDecomposition]

    def normalized(self) -> "ZModuleDecomposition":
        return ZModuleDecomposition(self.char, [d.normalized() for d in self.degrees])

    def __eq__(self, other):
        if not isinstance(other, ZModuleDecomposition):
            return NotImplemented
        a, b = self.normalized(), other.normalized()
        return a.char == b.char and [
            (d.free_rank, d.torsion) for d in a.degrees] == [
            (d.free_rank, d.torsion) for d in b.degrees]

    def format_degree(self, i: int) -> str:
        dd = self.degrees[i].normalized()
        parts = []
        if dd.free_rank:
            parts.append(f"L^{dd.free_rank}" if dd.free_rank > 1 else "L")
        for d, mults in dd.torsion.items():
            inner = ",".join(f"e{j + 1}={m}" for j, m in enumerate(mults) if m)
            parts.append(f"[d={d}: {inner}]")
        return f"H_{i} = " + (" (+) ".join(parts) if parts else "0")


def full_decomposition(L: SimplicialComplex, chi: Character, field: Field,
                       i_max: int | None = None) -> ZModuleDecomposition:
    """Free ranks plus torsion over every class that can be nontrivial."""
    chi = chi.normalized()
    if chi.n != L.n:
        raise ValueError("character length does not match the vertex count")
    if i_max is None:
        i_max = max(L.dim + 1, 0)
    ranks = free_ranks(L, chi, field, i_max)
    per_class = {d: torsion_multiplicities(L, chi, FClass(d, field.char), field, i_max)
                 for d in relevant_orders(chi, field)}
    degrees = []
    for i in range(i_max + 1):
        torsion = {d: mults[i] for d, mults in per_class.items() if mults[i]}
        degrees.append(DegreeDecomposition(ranks[i], torsion))
    return ZModuleDecomposition(field.char, degrees)


def bb_decomposition(L: SimplicialComplex, field: Field,
                     i_max: int | None = None) -> ZModuleDecomposition:
    """Closed form for the diagonal character: free rank from the reduced
    homology of L, identity-class torsion of block size 1 from the simplicial
    boundaries."""
    if i_max is None:
        i_max = max(L.dim + 1, 0)
    dims = reduced_dims(L, field)
    degrees = [DegreeDecomposition(0, {1: (1,)})]
    for i in range(1, i_max + 1):
        free = dims.get(i - 1, 0)
        blocks = boundary_dim(L, i - 1, field)
        degrees.append(DegreeDecomposition(free, {1: (blocks,)} if blocks else {}))
    return ZModuleDecomposition(field.char, degrees)


def direct_oracle(L: SimplicialComplex, chi: Character, field: Field,
                  i_max: int | None = None) -> ZModuleDecomposition:
    """Decomposition straight from the defining chain complex over k[t].

    Entries t^(m_v) - 1 (negative weights cleared by unit powers of t), Smith
    form per boundary, powers of t in the invariant factors discarded, and
    the rest split into primary parts by exact division against cyclotomic
    images.  Intended as the independent test oracle for the two-step path.
    """
    chi = chi.normalized()
    if chi.n != L.n:
        raise ValueError("character length does not match the vertex count")
    if i_max is None:
        i_max = max(L.dim + 1, 0)
    entries = [Poly.zero(field) if w == 0 else t_power_minus_one(abs(w), field)
               for w in chi.weights]
    counts = L.face_counts()
    forms = [snf_poly(weighted_boundary(L, s, entries), field)
             for s in range(1, i_max + 2)]
    ranks = [0] + [sf.rank for sf in forms]
    orders = relevant_orders(chi, field)
    degrees = []
    for i in range(i_max + 1):
        d_i = counts[i] if i < len(counts) else 0
        free = d_i - ranks[i] - (ranks[i + 1] if i + 1 < len(ranks) else 0)
        torsion: dict[int, list[int]] = {}
        for factor in forms[i].invariant_factors:
            for d, j in _primary_profile(factor, field, orders).items():
                lst = torsion.setdefault(d, [])
                while len(lst) < j:
                    lst.append(0)
                lst[j - 1] += 1
        degrees.append(DegreeDecomposition(
            free, {d: _trim(m) for d, m in torsion.items() if _trim(m)}))
    return ZModuleDecomposition(field.char, degrees)


def _primary_profile(factor: Poly, field: Field, orders) -> dict[int, int]:
    """Multiplicity of each class in one invariant factor.

    Verifies that all irreducibles within a class occur with one common
    multiplicity, and that nothing outside the candidate classes remains
    after the unit power of t is removed.
    """
    h = factor.monic()
    h = h // Poly.monomial(field, h.ord_t())
    out = {}
    for d in orders:
        kappa = cyclotomic(d, field)
        j = 0
        while kappa.divides(h):
            h = h // kappa
            j += 1
        if not h.gcd(kappa).is_unit():
            raise ArithmeticError(
                f"class d={d} has uneven multiplicities in {factor}; "
                "the class-uniformity guarantee is violated")
        if j:
            out[d] = j
    if h.degree > 0:
        raise ArithmeticError(
            f"invariant factor {factor} has torsion outside the candidate "
            f"classes {orders}")
    return out


@dataclass(frozen=True)
class MonodromyReport:
    trivial: bool
    witness: tuple[int, int, int] | None = None  # (degree, support index q, beta)

    def __bool__(self) -> bool:
        return self.trivial


def monodromy_trivial(L: SimplicialComplex, chi: Character, field: Field,
                      r: int) -> MonodromyReport:
    """Whether the deck transformation acts trivially on homology up to r.

    Tests vanishing of the Aomoto-Betti numbers at the characteristic's own
    support and at the support mod q for every relevant prime q.
    """
    chi = chi.normalized()
    supports = [(field.char, support(chi, field.char))]
    for q in sorted(prime_set(chi)):
        if q != field.char:
            supports.append((q, support(chi, q)))
    for q, w in supports:
        betas = aomoto_betti_aah(L, w, field, r)
        for i in range(1, r + 1):
            if betas[i]:
                return MonodromyReport(False, (i, q, betas[i]))
    return MonodromyReport(True)


def finite_dim_test(L: SimplicialComplex, chi: Character, field: Field,
                    r: int) -> bool:
    """Whether the cover homology is finite-dimensional up to degree r."""
    chi = chi.normalized()
    betas = aomoto_betti_aah(L, support(chi, 0), field, r)
    return all(b == 0 for b in betas[1:r + 1])
