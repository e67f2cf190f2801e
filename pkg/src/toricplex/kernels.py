"""Decision procedures for Artin kernels: finite generation, finite
presentability, FP_r, and the truncated cohomology ring of the cover.

All tests run on the flag complex of the defining graph, which is the
classifying space situation they are stated for.  Homological certificates
are exact; only the simple-connectivity part of the finite-presentation test
is three-valued, since a bounded presentation simplification may fail to
certify a trivial fundamental group.
"""

from __future__ import annotations

from dataclasses import dataclass

from .aomoto import DegreeOneClass, truncated_quotient, QuotientRing
from .exact.fields import Field
from .jumploci import resonance_membership
from .simplicial import (
    Graph, SimplicialComplex, bits, reduced_dims, reduced_homology_integral,
)
from .zcover import Character, monodromy_trivial, finite_dim_test, support


@dataclass(frozen=True)
class FinitenessReport:
    query: str
    verdict: str          # YES | NO | UNKNOWN
    witness: str | None = None

    def __bool__(self):
        return self.verdict == "YES"


class HypothesisRefusal(Exception):
    """A stated hypothesis fails; carries the offending witness."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


def _flag(gamma: Graph) -> SimplicialComplex:
    return SimplicialComplex.flag_complex(gamma)


def _format_group(betti: int, torsion) -> str:
    parts = ["Z"] * betti + [f"Z_{c}" for c in torsion]
    return " + ".join(parts) if parts else "0"


def finitely_generated(gamma: Graph, chi: Character) -> FinitenessReport:
    """Connectivity plus domination of the supporting subgraph."""
    chi = chi.normalized()
    w = support(chi, 0)
    if not gamma.is_connected(w):
        return FinitenessReport("FG", "NO", "supporting subgraph is disconnected")
    for v in range(gamma.n):
        if not w >> v & 1 and not gamma.adj[v] & w:
            return FinitenessReport(
                "FG", "NO", f"vertex {gamma.labels[v]} has no neighbor in the support")
    return FinitenessReport("FG", "YES")


def _link_conditions(L: SimplicialComplex, w: int, r: int):
    """First failing (sigma, degree, group) with nonzero integral reduced
    homology of a link in the range forced by degree r, or None."""
    for sigma in sorted(L.faces, key=lambda f: f.bit_count()):
        if sigma & w:
            continue
        top = r - 1 - sigma.bit_count()
        if top < -1:
            continue
        integral = reduced_homology_integral(L.link(sigma, w))
        for deg in range(-1, top + 1):
            betti, torsion = integral.get(deg, (0, ()))
            if betti or torsion:
                return sigma, deg, _format_group(betti, torsion)
    return None


def fp_r(gamma: Graph, chi: Character, r: int) -> FinitenessReport:
    """Homological finiteness through degree r, certified integrally.

    Integral vanishing of the link homology in the tested range is
    equivalent to vanishing over every field at once.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    chi = chi.normalized()
    L = _flag(gamma)
    w = support(chi, 0)
    failure = _link_conditions(L, w, r)
    if failure is None:
        return FinitenessReport(f"FP_{r}", "YES")
    sigma, deg, group = failure
    where = "L_W" if sigma == 0 else f"lk({L.label_face(sigma)})"
    return FinitenessReport(f"FP_{r}", "NO", f"H~{deg}({where}; Z) = {group}")


def finitely_presented(gamma: Graph, chi: Character,
                       tietze_budget: int = 10_000) -> FinitenessReport:
    """Finite presentability: 1-connected support plus acyclic links.

    The homological requirements are decided exactly; simple connectivity is
    attempted via an edge-path presentation simplified by bounded Tietze
    moves, so the verdict may be UNKNOWN when homology allows a YES but the
    fundamental group resists certification.
    """
    chi = chi.normalized()
    L = _flag(gamma)
    w = support(chi, 0)
    if not gamma.is_connected(w):
        return FinitenessReport("FP", "NO", "supporting subgraph is disconnected")
    failure = _link_conditions(L, w, 2)
    if failure is not None:
        sigma, deg, group = failure
        where = "L_W" if sigma == 0 else f"lk({L.label_face(sigma)})"
        return FinitenessReport("FP", "NO", f"H~{deg}({where}; Z) = {group}")
    status = _pi1_trivial(L.induced(w), tietze_budget)
    if status is True:
        return FinitenessReport("FP", "YES")
    if status is False:
        return FinitenessReport("FP", "NO", "supporting subcomplex has pi_1 != 1")
    return FinitenessReport(
        "FP", "UNKNOWN",
        "H_1 vanishes but pi_1-triviality was not certified within the move budget")


# -- edge-path fundamental group --------------------------------------------


def _pi1_trivial(K: SimplicialComplex, budget: int):
    """True/False when decided, None when the budget runs out.

    Presentation: one generator per non-tree edge of the 1-skeleton, one
    relator per triangle, simplified by free reduction and generator
    elimination.
    """
    verts = K.vertices()
    if not verts:
        return True
    g = K.one_skeleton()
    root = verts[0]
    parent = {root: None}
    order = [root]
    frontier = [root]
    while frontier:
        u = frontier.pop()
        for v in bits(g.adj[u]):
            if v not in parent:
                parent[v] = u
                order.append(v)
                frontier.append(v)
    if len(order) != len(verts):
        return False  # disconnected: not even 0-connected
    tree = {(min(u, v), max(u, v)) for v, u in parent.items() if u is not None}
    gens = {}
    for u, v in g.edges():
        if (u, v) not in tree:
            gens[(u, v)] = len(gens) + 1
    if not gens:
        return True  # the 1-skeleton is a tree

    def edge_word(u, v):
        if (min(u, v), max(u, v)) in tree:
            return ()
        idx = gens[(min(u, v), max(u, v))]
        return (idx,) if u < v else (-idx,)

    relators = []
    for f in K.faces:
        if f.bit_count() == 3:
            a, b, c = bits(f)
            relators.append(_free_reduce(edge_word(a, b) + edge_word(b, c)
                                          + edge_word(c, a)))
    return _tietze_trivial(set(gens.values()), relators, budget)


def _free_reduce(word):
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _cyclic_reduce(word):
    while len(word) >= 2 and word[0] == -word[-1]:
        word = word[1:-1]
    return word


def _substitute(word, gen, replacement):
    out = []
    for x in word:
        if x == gen:
            out.extend(replacement)
        elif x == -gen:
            out.extend(-y for y in reversed(replacement))
        else:
            out.append(x)
    return _free_reduce(tuple(out))


def _tietze_trivial(generators: set[int], relators, budget: int):
    relators = [_cyclic_reduce(_free_reduce(r)) for r in relators]
    moves = 0
    while moves < budget:
        relators = [r for r in relators if r]
        if not generators:
            return True
        # A relator in which some generator appears exactly once lets us
        # eliminate that generator.
        target = None
        for r in relators:
            for pos, x in enumerate(r):
                if sum(1 for y in r if abs(y) == abs(x)) == 1:
                    target = (r, pos, x)
                    break
            if target:
                break
        if target is None:
            if not relators:
                return False  # free of positive rank
            return None
        r, pos, x = target
        # Cyclically, x * rest = 1, so x = rest^(-1).
        rest = r[pos + 1:] + r[:pos]
        replacement = tuple(-y for y in reversed(rest)) if x > 0 else tuple(rest)
        gen = abs(x)
        generators.discard(gen)
        relators = [_cyclic_reduce(_substitute(w, gen, replacement))
                    for w in relators if w is not r]
        moves += 1
    return None


# -- cover cohomology and the Bestvina-Brady dashboard -----------------------


def cover_cohomology_ring(L: SimplicialComplex, chi: Character, field: Field,
                          r: int) -> QuotientRing:
    """Truncated cohomology ring of the cover, valid under trivial monodromy.

    Refuses (with the monodromy witness) when the triviality hypothesis
    fails; in that case only a ring map, not an isomorphism, is available.
    """
    chi = chi.normalized()
    report = monodromy_trivial(L, chi, field, r)
    if not report.trivial:
        i, q, beta = report.witness
        raise HypothesisRefusal(
            f"monodromy is nontrivial: beta_{i} at the support mod {q} is {beta}",
            witness=report.witness)
    z = DegreeOneClass.from_weights(field, chi.weights)
    return truncated_quotient(L, z, field, r)


@dataclass(frozen=True)
class BBSummary:
    trivial_action: bool
    finite_dimensional: bool
    non_resonant: bool
    acyclic_below_r: bool
    fp_over_z: FinitenessReport

    @property
    def conditions(self) -> tuple[bool, bool, bool, bool]:
        return (self.trivial_action, self.finite_dimensional,
                self.non_resonant, self.acyclic_below_r)


def bb_summary(gamma: Graph, field: Field, r: int) -> BBSummary:
    """The four equivalent finiteness conditions for the diagonal character.

    Each condition is evaluated by its own route; their agreement is a
    theorem, so disagreement raises.  The FP_r verdict over the integers is
    cross-reported (it is the all-fields simultaneous version).
    """
    L = _flag(gamma)
    nu = Character.diagonal(gamma.n)
    trivial = monodromy_trivial(L, nu, field, r).trivial
    findim = finite_dim_test(L, nu, field, r)
    nu_class = DegreeOneClass.from_support(field, L.full_mask, L.n)
    nonres = not any(resonance_membership(L, nu_class, i, 1) for i in range(1, r + 1))
    dims = reduced_dims(L, field)
    acyclic = all(dims.get(i, 0) == 0 for i in range(0, r))
    if not (trivial == findim == nonres == acyclic):
        raise AssertionError(
            f"equivalent conditions disagree: {(trivial, findim, nonres, acyclic)}")
    return BBSummary(trivial, findim, nonres, acyclic, fp_r(gamma, nu, r))
