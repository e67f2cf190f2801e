"""Jump loci of toric complexes as coordinate-subspace families.

Both the resonance and characteristic stratifications are unions of
coordinate pieces indexed by the same vertex subsets W, so one antichain of
maximal qualifying subsets serves both; no points are ever materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .aomoto import DegreeOneClass, aomoto_betti_aah, aomoto_betti_direct
from .exact.fields import Field
from .simplicial import SimplicialComplex, bits

DEFAULT_VERTEX_CAP = 20


@dataclass(frozen=True)
class SubspaceFamily:
    """Maximal vertex subsets whose Aomoto-Betti number in degree i is >= d.

    The family is an antichain; the full stratum is the union of the
    coordinate subspaces k^W (resonance) or subtori (k^x)^W (characteristic)
    over all subsets of the members.
    """

    i: int
    d: int
    char: int
    members: tuple[int, ...]

    def contains_support(self, mask: int) -> bool:
        return any(mask & ~w == 0 for w in self.members)

    def labelled(self, labels) -> list[tuple[str, ...]]:
        named = [tuple(labels[v] for v in bits(w)) for w in self.members]
        return sorted(named)


def strata(L: SimplicialComplex, field: Field, i: int, d: int,
           cap: int = DEFAULT_VERTEX_CAP) -> SubspaceFamily:
    """Maximal W with beta_i(W) >= d, scanned from the full set downward.

    Once a set qualifies every subset also qualifies, so any set contained in
    a known maximal member is skipped without evaluation.
    """
    if i < 1 or d < 1:
        raise ValueError("strata are indexed by i >= 1, d >= 1")
    if L.n > cap:
        raise ValueError(
            f"vertex count {L.n} exceeds the enumeration cap {cap}; "
            "query membership of individual classes instead")
    maximal: list[int] = []
    verts = list(range(L.n))
    for size in range(L.n, -1, -1):
        for combo in combinations(verts, size):
            w = 0
            for v in combo:
                w |= 1 << v
            if any(w & ~m == 0 for m in maximal):
                continue
            if aomoto_betti_aah(L, w, field, i)[i] >= d:
                maximal.append(w)
    return SubspaceFamily(i, d, field.char, tuple(sorted(maximal)))


def resonance_membership(L: SimplicialComplex, z: DegreeOneClass, i: int,
                         d: int) -> bool:
    """Whether z lies in the depth-d degree-i resonance stratum.

    Membership only depends on the support of z.
    """
    return aomoto_betti_aah(L, z.support_mask, z.field, i)[i] >= d


def local_system_betti(L: SimplicialComplex, rho, field: Field,
                       i_max: int) -> list[int]:
    """Homology dimensions with coefficients in the rank-1 local system rho.

    ``rho`` assigns a nonzero field scalar to each vertex; the computation
    goes through the Aomoto complex of the shifted class sum (rho(v)-1) v*.
    """
    rho = [field.of(c) for c in rho]
    if len(rho) != L.n:
        raise ValueError("one unit per vertex required")
    if any(field.is_zero(c) for c in rho):
        raise ValueError("local system values must be nonzero")
    z = DegreeOneClass(field, tuple(field.sub(c, field.one) for c in rho))
    return aomoto_betti_direct(L, z, i_max)
