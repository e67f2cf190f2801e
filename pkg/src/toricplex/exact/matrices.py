"""Exact dense matrix routines: rank over a field, Smith normal form over Z
and over k[t].

Matrices are lists of rows; an empty matrix (no rows or no columns) is legal
everywhere and has rank 0.  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fields import Field
from .poly import Poly


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors in divisibility order; ``rank`` equals their count.

    Factors are positive ints (integer case) or monic ``Poly`` (polynomial
    case); unit factors are kept so the count always equals the rank.
    """

    invariant_factors: tuple
    rank: int


def _rank_gf2(rows, ncols):
    # Rows packed into ints; plain xor elimination.
    packed = []
    for row in rows:
        bits = 0
        for j, e in enumerate(row):
            if e % 2:
                bits |= 1 << j
        if bits:
            packed.append(bits)
    rank = 0
    while packed:
        pivot = packed.pop()
        rank += 1
        low = pivot & -pivot
        packed = [r ^ pivot if r & low else r for r in packed]
        packed = [r for r in packed if r]
    return rank


def _rank_mod_p(rows, p):
    work = [[e % p for e in row] for row in rows]
    m, n = len(work), len(work[0])
    rank = 0
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, m) if work[i][col]), None)
        if piv is None:
            continue
        work[row], work[piv] = work[piv], work[row]
        inv = pow(work[row][col], -1, p)
        prow = work[row]
        for i in range(row + 1, m):
            c = work[i][col]
            if c:
                f = (c * inv) % p
                wi = work[i]
                for j in range(col, n):
                    wi[j] = (wi[j] - f * prow[j]) % p
        row += 1
        rank += 1
        if row == m:
            break
    return rank


def _rank_int_bareiss(rows):
    # Fraction-free elimination; exact over Z, avoids Fraction overhead.
    work = [list(r) for r in rows]
    m, n = len(work), len(work[0])
    rank = 0
    row = 0
    prev = 1
    for col in range(n):
        piv = next((i for i in range(row, m) if work[i][col]), None)
        if piv is None:
            continue
        work[row], work[piv] = work[piv], work[row]
        p = work[row][col]
        for i in range(row + 1, m):
            wi = work[i]
            c = wi[col]
            for j in range(col, n):
                wi[j] = (p * wi[j] - c * work[row][j]) // prev
        prev = p
        row += 1
        rank += 1
        if row == m:
            break
    return rank


def _rank_fraction(rows, field):
    work = [[field.of(e) for e in row] for row in rows]
    m, n = len(work), len(work[0])
    rank = 0
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, m) if work[i][col] != 0), None)
        if piv is None:
            continue
        work[row], work[piv] = work[piv], work[row]
        prow = work[row]
        inv = 1 / prow[col]
        for i in range(row + 1, m):
            c = work[i][col]
            if c != 0:
                f = c * inv
                wi = work[i]
                for j in range(col, n):
                    wi[j] = wi[j] - f * prow[j]
        row += 1
        rank += 1
        if row == m:
            break
    return rank


def rank(rows, field: Field) -> int:
    """Rank of a matrix with entries in the given field."""
    if not rows or not rows[0]:
        return 0
    if field.char == 2:
        return _rank_gf2(rows, len(rows[0]))
    if field.char > 0:
        return _rank_mod_p(rows, field.char)
    if all(isinstance(e, int) or (isinstance(e, Fraction) and e.denominator == 1)
           for row in rows for e in row):
        return _rank_int_bareiss([[int(e) for e in row] for row in rows])
    return _rank_fraction(rows, field)


def row_echelon(rows, field: Field):
    """Reduced row echelon form.

    Returns (echelon_rows, pivot_columns); zero rows are dropped and pivot
    entries are normalized to 1.
    """
    if not rows or not rows[0]:
        return [], []
    work = [[field.of(e) for e in row] for row in rows]
    n = len(work[0])
    echelon = []
    pivots = []
    for col in range(n):
        piv = next((i for i, r in enumerate(work) if not field.is_zero(r[col])), None)
        if piv is None:
            continue
        prow = work.pop(piv)
        inv = field.inv(prow[col])
        prow = [field.mul(inv, e) for e in prow]
        for r in work:
            c = r[col]
            if not field.is_zero(c):
                for j in range(n):
                    r[j] = field.sub(r[j], field.mul(c, prow[j]))
        for r in echelon:
            c = r[col]
            if not field.is_zero(c):
                for j in range(n):
                    r[j] = field.sub(r[j], field.mul(c, prow[j]))
        echelon.append(prow)
        pivots.append(col)
        work = [r for r in work if any(not field.is_zero(e) for e in r)]
        if not work:
            break
    return echelon, pivots


def reduce_against_echelon(vec, echelon, pivots, field: Field):
    """Subtract echelon rows to zero out the pivot coordinates of ``vec``."""
    out = [field.of(e) for e in vec]
    for row, col in zip(echelon, pivots):
        c = out[col]
        if not field.is_zero(c):
            for j in range(len(out)):
                out[j] = field.sub(out[j], field.mul(c, row[j]))
    return out


def snf_int(rows) -> SmithForm:
    """Smith normal form over Z: positive invariant factors d1 | d2 | ..."""
    if not rows or not rows[0]:
        return SmithForm((), 0)
    a = [[int(e) for e in row] for row in rows]
    m, n = len(a), len(a[0])
    factors = []
    k = 0
    while k < min(m, n):
        # Pivot: nonzero entry of smallest absolute value in the submatrix.
        best = None
        for i in range(k, m):
            for j in range(k, n):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        a[k], a[bi] = a[bi], a[k]
        for row in a:
            row[k], row[bj] = row[bj], row[k]
        while True:
            # Clear column k by division; a smaller remainder becomes the pivot.
            restart = False
            for i in range(k + 1, m):
                if a[i][k] != 0:
                    q = a[i][k] // a[k][k]
                    for j in range(k, n):
                        a[i][j] -= q * a[k][j]
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        restart = True
                        break
            if restart:
                continue
            for j in range(k + 1, n):
                if a[k][j] != 0:
                    q = a[k][j] // a[k][k]
                    for row in a:
                        row[j] -= q * row[k]
                    if a[k][j] != 0:
                        for row in a:
                            row[k], row[j] = row[j], row[k]
                        restart = True
                        break
            if restart:
                continue
            # Pivot must divide every remaining entry for the chain to hold.
            offender = None
            for i in range(k + 1, m):
                for j in range(k + 1, n):
                    if a[i][j] % a[k][k] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(k, n):
                a[k][j] += a[offender][j]
        factors.append(abs(a[k][k]))
        k += 1
    for x, y in zip(factors, factors[1:]):
        assert y % x == 0
    return SmithForm(tuple(factors), len(factors))


def snf_poly(rows, field: Field) -> SmithForm:
    """Smith normal form over k[t], with monic invariant factors.

    Pivots on the entry of minimal degree, which bounds intermediate degree
    growth; division remainders strictly drop the pivot degree so the
    elimination terminates.
    """
    if not rows or not rows[0]:
        return SmithForm((), 0)
    a = [[e if isinstance(e, Poly) else Poly.constant(field, e) for e in row]
         for row in rows]
    m, n = len(a), len(a[0])
    factors = []
    k = 0
    while k < min(m, n):
        best = None
        for i in range(k, m):
            for j in range(k, n):
                if not a[i][j].is_zero() and (
                        best is None or a[i][j].degree < a[best[0]][best[1]].degree):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        a[k], a[bi] = a[bi], a[k]
        for row in a:
            row[k], row[bj] = row[bj], row[k]
        while True:
            restart = False
            for i in range(k + 1, m):
                if not a[i][k].is_zero():
                    q = a[i][k] // a[k][k]
                    for j in range(k, n):
                        a[i][j] = a[i][j] - q * a[k][j]
                    if not a[i][k].is_zero():
                        a[k], a[i] = a[i], a[k]
                        restart = True
                        break
            if restart:
                continue
            for j in range(k + 1, n):
                if not a[k][j].is_zero():
                    q = a[k][j] // a[k][k]
                    for row in a:
                        row[j] = row[j] - q * row[k]
                    if not a[k][j].is_zero():
                        for row in a:
                            row[k], row[j] = row[j], row[k]
                        restart = True
                        break
            if restart:
                continue
            offender = None
            for i in range(k + 1, m):
                for j in range(k + 1, n):
                    if not a[k][k].divides(a[i][j]):
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(k, n):
                a[k][j] = a[k][j] + a[offender][j]
        factors.append(a[k][k].monic())
        k += 1
    for x, y in zip(factors, factors[1:]):
        assert x.divides(y)
    return SmithForm(tuple(factors), len(factors))
