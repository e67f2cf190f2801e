"""Bundled example complexes, as named fixtures and as files for the CLI."""

from __future__ import annotations

from .simplicial import SimplicialComplex
from .zcover import Character

RP2_TRIANGLES = ((0, 1, 4), (0, 1, 5), (0, 2, 3), (0, 2, 4), (0, 3, 5),
                 (1, 2, 3), (1, 2, 5), (1, 3, 4), (2, 4, 5), (3, 4, 5))


def path3() -> SimplicialComplex:
    return SimplicialComplex.from_maximal_faces([[0, 1], [1, 2]], 3)


def cycle4() -> SimplicialComplex:
    return SimplicialComplex.from_maximal_faces([[0, 1], [1, 2], [2, 3], [0, 3]], 4)


def two_k2() -> SimplicialComplex:
    return SimplicialComplex.from_maximal_faces([[0, 1], [2, 3]], 4)


def simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex.simplex(n)


def triangle_boundary() -> SimplicialComplex:
    return SimplicialComplex.from_maximal_faces([[0, 1], [1, 2], [0, 2]], 3)


def rp2_six_vertex() -> SimplicialComplex:
    """The minimal 6-vertex triangulation of the projective plane."""
    return SimplicialComplex.from_maximal_faces(RP2_TRIANGLES, 6)


def rp2_flag() -> SimplicialComplex:
    """A flag triangulation of the projective plane (barycentric subdivision)."""
    return rp2_six_vertex().barycentric_subdivision()


def realization_cone(i: int, m: int) -> tuple[SimplicialComplex, Character]:
    """A cone complex and character whose degree-i cover homology carries a
    block of order m: cone over a flag sphere, weight 1 on the base and m on
    the apex.

    Supports i = 1 (two points) and i = 2 (a 4-cycle).
    """
    if i == 1:
        base = SimplicialComplex.from_maximal_faces([], 2)
    elif i == 2:
        base = cycle4()
    else:
        raise ValueError("realization cones are provided for i = 1 and 2 only")
    L = base.cone("z")
    return L, Character((1,) * base.n + (m,))


BUNDLED = {
    "path3": path3,
    "cycle4": cycle4,
    "2k2": two_k2,
    "triangle-boundary": triangle_boundary,
    "rp2-flag": rp2_flag,
}


def bundled(name: str, simplex_n: int = 3) -> SimplicialComplex:
    if name == "simplex":
        return simplex(simplex_n)
    try:
        return BUNDLED[name]()
    except KeyError:
        raise ValueError(f"unknown fixture {name!r}; "
                         f"available: {', '.join([*BUNDLED, 'simplex'])}") from None
