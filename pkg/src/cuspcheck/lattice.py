"""Gram lattices: finitely generated free Z-modules with an integer pairing.

A lattice is presented by its Gram matrix in a fixed basis; vectors are plain
integer tuples in that basis.  Sublattices are always saturated (the basis
spans the full intersection of its Q-span with the ambient lattice), which is
what makes orthogonal complements, radicals and quotients well behaved.

Signatures are computed by exact symmetric Gaussian elimination over Q, with
the usual rank-2 substitution step when the entire remaining diagonal
vanishes, so no floating point is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .errors import InputError
from .intlinalg import (
    IntMatrix,
    hnf_transform,
    identity_matrix,
    invert_unimodular,
    matvec,
    nonzero_rows,
    rank_int,
    right_kernel,
    row_hnf,
    saturation,
    snf_transform,
    solve_int,
    transpose,
)

Vector = tuple[int, ...]


class Signature(NamedTuple):
    positive: int
    negative: int
    null: int


@dataclass(frozen=True)
class GramLattice:
    """A free Z-module with basis e_1..e_rank and symmetric integer pairing."""

    gram: tuple[tuple[int, ...], ...]
    basis_labels: tuple[str, ...] | None = None

    def __post_init__(self):
        n = len(self.gram)
        for row in self.gram:
            if len(row) != n:
                raise InputError("gram matrix must be square")
        for i in range(n):
            for j in range(n):
                if self.gram[i][j] != self.gram[j][i]:
                    raise InputError("gram matrix must be symmetric")
        if self.basis_labels is not None and len(self.basis_labels) != n:
            raise InputError("basis_labels length must equal rank")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def check_vector(self, v: Sequence[int]) -> Vector:
        if len(v) != self.rank:
            raise InputError(
                f"vector has {len(v)} coordinates, lattice has rank {self.rank}"
            )
        return tuple(int(x) for x in v)

    def pair(self, u: Sequence[int], v: Sequence[int]) -> int:
        u = self.check_vector(u)
        v = self.check_vector(v)
        return sum(
            u[i] * self.gram[i][j] * v[j]
            for i in range(self.rank)
            for j in range(self.rank)
            if self.gram[i][j] != 0
        )

    def square(self, v: Sequence[int]) -> int:
        return self.pair(v, v)

    def pairing_row(self, v: Sequence[int]) -> list[int]:
        """The linear functional x -> x.v as a coordinate row."""
        v = self.check_vector(v)
        return matvec([list(r) for r in self.gram], list(v))


def gram_lattice(gram: Iterable[Iterable[int]], labels: Sequence[str] | None = None) -> GramLattice:
    g = tuple(tuple(int(x) for x in row) for row in gram)
    return GramLattice(g, tuple(labels) if labels is not None else None)


def diagonal_lattice(entries: Sequence[int]) -> GramLattice:
    n = len(entries)
    return gram_lattice(
        [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)]
    )


def hyperbolic_plane() -> GramLattice:
    return gram_lattice([[0, 1], [1, 0]])


def direct_sum(*lattices: GramLattice) -> GramLattice:
    n = sum(lat.rank for lat in lattices)
    g = [[0] * n for _ in range(n)]
    off = 0
    for lat in lattices:
        for i in range(lat.rank):
            for j in range(lat.rank):
                g[off + i][off + j] = lat.gram[i][j]
        off += lat.rank
    return gram_lattice(g)


def pair(lattice: GramLattice, u: Sequence[int], v: Sequence[int]) -> int:
    return lattice.pair(u, v)


def signature(lattice: GramLattice) -> Signature:
    """Exact (positive, negative, null) inertia of the pairing."""
    n = lattice.rank
    a = [[Fraction(x) for x in row] for row in lattice.gram]
    remaining = list(range(n))
    pos = neg = nul = 0
    while remaining:
        k = next((i for i in remaining if a[i][i] != 0), None)
        if k is None:
            pair_idx = None
            for i in remaining:
                for j in remaining:
                    if i < j and a[i][j] != 0:
                        pair_idx = (i, j)
                        break
                if pair_idx:
                    break
            if pair_idx is None:
                nul += len(remaining)
                break
            i, j = pair_idx
            # all remaining diagonal entries vanish: substitute e_i <- e_i + e_j,
            # which makes a[i][i] = 2 a[i][j] nonzero, then re-enter the loop
            for t in range(n):
                a[i][t] += a[j][t]
            for t in range(n):
                a[t][i] += a[t][j]
            continue
        if a[k][k] > 0:
            pos += 1
        else:
            neg += 1
        remaining.remove(k)
        pivot = a[k][k]
        # Schur complement: snapshot the pivot column first, because the
        # entries a[i][k] are cleared as we go and a[k][j] == a[j][k].
        col = {i: a[i][k] for i in remaining}
        for i in remaining:
            for j in remaining:
                a[i][j] -= col[i] * col[j] / pivot
            a[i][k] = Fraction(0)
            a[k][i] = Fraction(0)
    return Signature(pos, neg, nul)


DEFINITENESS_TAGS = (
    "zero",
    "positive_definite",
    "negative_definite",
    "positive_semidefinite_degenerate",
    "negative_semidefinite_degenerate",
    "indefinite",
)


def definiteness(lattice: GramLattice) -> str:
    sig = signature(lattice)
    if sig.positive == 0 and sig.negative == 0:
        return "zero"
    if sig.positive > 0 and sig.negative > 0:
        return "indefinite"
    if sig.null == 0:
        return "positive_definite" if sig.positive else "negative_definite"
    return (
        "positive_semidefinite_degenerate"
        if sig.positive
        else "negative_semidefinite_degenerate"
    )


def radical_basis(lattice: GramLattice) -> list[Vector]:
    """Canonical basis of {v : v.x = 0 for all x}, the kernel of the Gram."""
    rows = right_kernel([list(r) for r in lattice.gram])
    return [tuple(r) for r in rows]


@dataclass(frozen=True)
class Sublattice:
    """A saturated sublattice, stored as basis rows in ambient coordinates."""

    ambient: GramLattice
    basis: tuple[Vector, ...]

    def __post_init__(self):
        rows = [list(b) for b in self.basis]
        for b in self.basis:
            self.ambient.check_vector(b)
        if rows:
            if rank_int(rows) != len(rows):
                raise InputError("sublattice basis rows are linearly dependent")
            sat = saturation(rows, self.ambient.rank)
            if nonzero_rows(row_hnf(rows)) != nonzero_rows(sat):
                raise InputError("sublattice basis does not span a saturated sublattice")

    @property
    def rank(self) -> int:
        return len(self.basis)

    def induced_gram(self) -> IntMatrix:
        amb = self.ambient
        return [
            [amb.pair(u, v) for v in self.basis]
            for u in self.basis
        ]

    def as_lattice(self, labels: Sequence[str] | None = None) -> GramLattice:
        return gram_lattice(self.induced_gram(), labels)

    def embed(self, coords: Sequence[int]) -> Vector:
        if len(coords) != self.rank:
            raise InputError("coordinate vector length differs from sublattice rank")
        n = self.ambient.rank
        out = [0] * n
        for c, b in zip(coords, self.basis):
            for i in range(n):
                out[i] += c * b[i]
        return tuple(out)

    def coords_of(self, v: Sequence[int]) -> Vector:
        """Coordinates of an ambient vector in this basis; error if outside."""
        self.ambient.check_vector(v)
        if self.rank == 0:
            if any(x != 0 for x in v):
                raise InputError("vector does not lie in the sublattice")
            return ()
        bt = transpose([list(b) for b in self.basis])
        sol = solve_int(bt, list(v))
        if sol is None:
            raise InputError("vector does not lie in the sublattice")
        return tuple(sol)

    def contains(self, v: Sequence[int]) -> bool:
        try:
            self.coords_of(v)
            return True
        except InputError:
            return False

    def radical(self) -> list[Vector]:
        """Radical of the induced pairing, as ambient vectors (canonical basis)."""
        rows = right_kernel(self.induced_gram())
        return [self.embed(r) for r in rows]


def sublattice_from_rows(
    lattice: GramLattice, rows: Iterable[Sequence[int]], saturate: bool = False
) -> Sublattice:
    mat = [list(r) for r in rows]
    if saturate and mat:
        mat = saturation(mat, lattice.rank)
    return Sublattice(lattice, tuple(tuple(r) for r in mat))


def full_sublattice(lattice: GramLattice) -> Sublattice:
    return Sublattice(
        lattice, tuple(tuple(r) for r in identity_matrix(lattice.rank))
    )


def orthogonal_complement(
    lattice: GramLattice, vectors: Iterable[Sequence[int]]
) -> Sublattice:
    """Saturated sublattice {x : x.v = 0 for every given v}.

    Integer kernels are automatically saturated, so the basis is primitive.
    """
    rows = [lattice.pairing_row(v) for v in vectors]
    if not rows:
        return full_sublattice(lattice)
    ker = right_kernel(rows)
    return Sublattice(lattice, tuple(tuple(r) for r in ker))


class QuotientPresentation(NamedTuple):
    """Free quotient Z^n / span(relations) with a section.

    projection (q x n) and section (n x q) satisfy projection @ section = I;
    the kernel of the projection is exactly the saturated relation span.
    """

    projection: IntMatrix
    section: IntMatrix

    def project(self, v: Sequence[int]) -> Vector:
        return tuple(matvec(self.projection, list(v)))

    def lift(self, coords: Sequence[int]) -> Vector:
        return tuple(matvec(self.section, list(coords)))


def quotient_presentation(n: int, relations: list[list[int]]) -> QuotientPresentation:
    """Present Z^n / <relation rows> (the span must be saturated)."""
    if not relations:
        ident = identity_matrix(n)
        return QuotientPresentation(ident, ident)
    if not is_saturated_rows(relations, n):
        raise InputError("quotient relations must span a saturated sublattice")
    b = transpose(relations)  # columns span the relation lattice
    d, u, _v = snf_transform(b)
    k = len(relations)
    r = sum(1 for i in range(min(n, k)) if d[i][i] != 0)
    u_inv = invert_unimodular(u)
    projection = [u[i] for i in range(r, n)]
    section = [[u_inv[i][j] for j in range(r, n)] for i in range(n)]
    return QuotientPresentation(projection, section)


def is_saturated_rows(rows: list[list[int]], n: int) -> bool:
    if not rows:
        return True
    sat = saturation(rows, n)
    return nonzero_rows(row_hnf(rows)) == nonzero_rows(row_hnf(sat))


def complement_basis_within(
    within: list[list[int]], sub: list[list[int]], n: int
) -> list[list[int]]:
    """Basis of a canonical complement of span(sub) inside span(within).

    Both spans live in Z^n, sub inside within, both saturated in their spans.
    Rows are returned in ambient coordinates via the quotient section, so the
    choice is deterministic for fixed input.
    """
    if not within:
        return []
    w = [list(r) for r in within]
    if not sub:
        return w
    coords = []
    wt = transpose(w)
    for s in sub:
        c = solve_int(wt, list(s))
        if c is None:
            raise InputError("sub span does not lie inside the containing span")
        coords.append(c)
    pres = quotient_presentation(len(w), saturation(coords, len(w)))
    out = []
    for j in range(len(pres.section[0]) if pres.section else 0):
        col = [pres.section[i][j] for i in range(len(w))]
        amb = [0] * n
        for c, row in zip(col, w):
            for i in range(n):
                amb[i] += c * row[i]
        out.append(amb)
    return out
