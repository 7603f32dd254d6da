"""Rational surfaces carrying an anticanonical cycle of rational curves.

A surface is modeled entirely by lattice data: its Picard lattice (a Gram
lattice), the classes of the boundary cycle components, and the exceptional
classes of any interior blow-ups performed along the way.  Geometry enters
only through the operations:

* ``toric_from_sequence`` builds the smooth complete toric surface whose
  boundary cycle has prescribed self-intersections, presenting Pic as the
  quotient of Z^r by the two character relations of the fan.
* ``interior_blowup`` adds an exceptional class orthogonal to everything,
  replacing the chosen boundary component by its strict transform.
* ``blow_down`` contracts a (-1)-class meeting the cycle once, projecting
  Picard onto the saturated orthogonal complement.

The boundary cycle has self-intersection sum 12 - 3r on a toric seed (an
exact-winding certificate for the fan) and drops by one per interior blow-up.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import InputError
from .intlinalg import matvec, rank_int, right_kernel
from .lattice import (
    GramLattice,
    Signature,
    Sublattice,
    Vector,
    definiteness,
    gram_lattice,
    orthogonal_complement,
    quotient_presentation,
    signature,
    sublattice_from_rows,
)


@dataclass(frozen=True)
class LooijengaSurface:
    """Lattice model of a pair (surface, anticanonical cycle)."""

    picard: GramLattice
    boundary: tuple[Vector, ...]
    history: tuple[tuple[int, Vector], ...] = ()

    def __post_init__(self):
        for b in self.boundary:
            self.picard.check_vector(b)
        r = len(self.boundary)
        if r < 3:
            raise InputError("boundary cycle needs at least three components")
        for i in range(r):
            for j in range(i + 1, r):
                expected = 1 if (j - i == 1 or j - i == r - 1) else 0
                if self.picard.pair(self.boundary[i], self.boundary[j]) != expected:
                    raise InputError("boundary classes do not form a cycle")
        for comp, cls in self.history:
            if not (1 <= comp <= r):
                raise InputError("history component index out of range")
            if self.picard.square(cls) != -1:
                raise InputError("history class is not a (-1)-class")
            for j in range(r):
                expected = 1 if j == comp - 1 else 0
                if self.picard.pair(cls, self.boundary[j]) != expected:
                    raise InputError("history class does not meet its recorded component once")

    @property
    def r(self) -> int:
        return len(self.boundary)

    @property
    def picard_rank(self) -> int:
        return self.picard.rank

    def self_intersections(self) -> tuple[int, ...]:
        return tuple(self.picard.square(b) for b in self.boundary)

    def boundary_sum(self) -> Vector:
        n = self.picard.rank
        out = [0] * n
        for b in self.boundary:
            for i in range(n):
                out[i] += b[i]
        return tuple(out)

    def boundary_self_intersection(self) -> int:
        return self.picard.square(self.boundary_sum())


class ToricFan(NamedTuple):
    rays: tuple[tuple[int, int], ...]


def fan_from_sequence(self_ints: Sequence[int]) -> ToricFan:
    """Rays of the smooth complete fan with the given boundary squares.

    v_1 = (1,0), v_2 = (0,1), v_{i+1} = -a_i v_i - v_{i-1}; the sequence must
    close up cyclically (v_{r+1} = v_1, v_{r+2} = v_2) and wind exactly once,
    which for smooth complete fans is the identity sum(a_i) = 12 - 3r.
    """
    a = [int(x) for x in self_ints]
    r = len(a)
    if r < 3:
        raise InputError("need at least three boundary components")
    rays = [(1, 0), (0, 1)]
    for i in range(1, r + 1):
        vi = rays[i]
        vim1 = rays[i - 1]
        ai = a[i % r]  # a_{i+1} in 1-based terms
        rays.append((-ai * vi[0] - vim1[0], -ai * vi[1] - vim1[1]))
    if rays[r] != rays[0] or rays[r + 1] != rays[1]:
        raise InputError("self-intersection sequence does not close into a fan")
    if sum(a) != 12 - 3 * r:
        raise InputError(
            "sequence closes but winds more than once; not a complete fan"
        )
    return ToricFan(tuple(rays[:r]))


def _cycle_gram(a: Sequence[int]) -> list[list[int]]:
    r = len(a)
    g = [[0] * r for _ in range(r)]
    for i in range(r):
        g[i][i] = a[i]
        g[i][(i + 1) % r] += 1
        g[(i + 1) % r][i] += 1
    return g


def toric_from_sequence(self_ints: Sequence[int]) -> LooijengaSurface:
    """Toric surface with boundary the torus-invariant cycle.

    Pic is presented as Z^r modulo the two relations sum_i <m, v_i> D_i = 0
    (m the character basis); the quotient is free of rank r - 2 and carries
    the cycle pairing, which the relations annihilate.
    """
    a = [int(x) for x in self_ints]
    fan = fan_from_sequence(a)
    r = len(a)
    relations = [
        [fan.rays[i][0] for i in range(r)],
        [fan.rays[i][1] for i in range(r)],
    ]
    cycle = _cycle_gram(a)
    for rel in relations:
        if any(x != 0 for x in matvec(cycle, rel)):
            raise ArithmeticError("fan relations do not annihilate the cycle pairing")
    pres = quotient_presentation(r, relations)
    rho = r - 2
    section_cols = [
        [pres.section[i][j] for i in range(r)] for j in range(rho)
    ]
    gram = [
        [
            sum(
                section_cols[p][i] * cycle[i][j] * section_cols[q][j]
                for i in range(r)
                for j in range(r)
            )
            for q in range(rho)
        ]
        for p in range(rho)
    ]
    labels = tuple(f"T{k + 1}" for k in range(rho))
    picard = gram_lattice(gram, labels)
    boundary = tuple(pres.project([1 if t == i else 0 for t in range(r)]) for i in range(r))
    if signature(picard) != Signature(1, rho - 1, 0):
        raise ArithmeticError("toric Picard lattice has unexpected signature")
    return LooijengaSurface(picard=picard, boundary=boundary)


def interior_blowup(surface: LooijengaSurface, component: int) -> LooijengaSurface:
    """Blow up an interior point of the given boundary component (1-based).

    The Picard lattice gains an orthogonal (-1)-class E; the component's class
    becomes its strict transform (old class minus E), dropping its square by 1.
    """
    if not (1 <= component <= surface.r):
        raise InputError(f"component index must be in 1..{surface.r}")
    n = surface.picard.rank
    old = surface.picard
    gram = [list(row) + [0] for row in old.gram]
    gram.append([0] * n + [-1])
    k = len(surface.history) + 1
    labels = (
        tuple(old.basis_labels) + (f"E{k}",)
        if old.basis_labels is not None
        else tuple(f"B{i + 1}" for i in range(n)) + (f"E{k}",)
    )
    picard = gram_lattice(gram, labels)
    e_new = tuple([0] * n + [1])
    boundary = []
    for i, b in enumerate(surface.boundary):
        padded = list(b) + [0]
        if i == component - 1:
            padded[n] = -1
        boundary.append(tuple(padded))
    history = tuple(
        (comp, tuple(list(cls) + [0])) for comp, cls in surface.history
    ) + ((component, e_new),)
    return LooijengaSurface(picard=picard, boundary=tuple(boundary), history=history)


class BlowDownResult(NamedTuple):
    surface: LooijengaSurface
    embedding: tuple[Vector, ...]  # rows: new basis vectors in old coordinates


def blow_down(surface: LooijengaSurface, cls: Sequence[int]) -> LooijengaSurface:
    return blow_down_with_embedding(surface, cls).surface


def blow_down_with_embedding(
    surface: LooijengaSurface, cls: Sequence[int]
) -> BlowDownResult:
    """Contract a (-1)-class meeting the boundary cycle transversally once.

    Picard becomes the saturated orthogonal complement of the class; boundary
    components map to their orthogonal projections, so the met component gains
    +1 self-intersection.  When the class is the last recorded exceptional,
    this is the exact inverse of ``interior_blowup`` (history popped); for any
    other class the lattice cannot know the blow-up provenance of the result,
    so the history comes back empty.  The embedding rows express the new basis
    in old coordinates (pullback of classes under the contraction).
    """
    v = surface.picard.check_vector(cls)
    if surface.picard.square(v) != -1:
        raise InputError("blow-down class must have square -1")
    met = [i for i, b in enumerate(surface.boundary) if surface.picard.pair(v, b) != 0]
    if len(met) != 1 or surface.picard.pair(v, surface.boundary[met[0]]) != 1:
        raise InputError(
            "blow-down class must meet exactly one boundary component with multiplicity 1"
        )
    n = surface.picard.rank
    unit_last = tuple([0] * (n - 1) + [1])
    if surface.history and surface.history[-1][1] == v and v == unit_last:
        # exact inverse of the last interior blow-up: unwind in place
        gram = [list(row[: n - 1]) for row in surface.picard.gram[: n - 1]]
        labels = (
            tuple(surface.picard.basis_labels[: n - 1])
            if surface.picard.basis_labels is not None
            else None
        )
        picard = gram_lattice(gram, labels)
        boundary = tuple(tuple(b[: n - 1]) for b in surface.boundary)
        history = tuple(
            (comp, tuple(c[: n - 1])) for comp, c in surface.history[:-1]
        )
        embed = tuple(
            tuple(1 if j == i else 0 for j in range(n)) for i in range(n - 1)
        )
        return BlowDownResult(
            LooijengaSurface(picard=picard, boundary=boundary, history=history),
            embed,
        )
    pairing_row = surface.picard.pairing_row(v)
    basis = right_kernel([pairing_row])
    comp_sub = sublattice_from_rows(surface.picard, basis)
    boundary = []
    for b in surface.boundary:
        mult = surface.picard.pair(v, b)
        proj = tuple(x + mult * y for x, y in zip(b, v))
        boundary.append(comp_sub.coords_of(proj))
    gram = comp_sub.induced_gram()
    picard = gram_lattice(gram)
    return BlowDownResult(
        LooijengaSurface(picard=picard, boundary=tuple(boundary), history=()),
        tuple(tuple(r) for r in basis),
    )


class BoundaryComplement(NamedTuple):
    sublattice: Sublattice
    kernel_rank: int  # rank of the kernel of Z^r -> Pic sending e_i to D_i


def boundary_complement(surface: LooijengaSurface) -> BoundaryComplement:
    """Sublattice of Picard orthogonal to every boundary component.

    Also reports the kernel rank s of the span map; the complement rank always
    equals 10 - D.D - r + s for these surfaces, which is asserted.
    """
    sub = orthogonal_complement(surface.picard, surface.boundary)
    span_rank = rank_int([list(b) for b in surface.boundary])
    s = surface.r - span_rank
    d_sq = surface.boundary_self_intersection()
    expected = 10 - d_sq - surface.r + s
    if sub.rank != expected:
        raise ArithmeticError(
            f"boundary complement rank {sub.rank} != {expected} from the rank formula"
        )
    return BoundaryComplement(sub, s)


@dataclass(frozen=True)
class BoundaryClassification:
    classification: str
    radical_rank: int
    criterion_applicable: bool
    criterion_verdict: str | None
    criterion_agrees: bool | None


def boundary_definiteness(surface: LooijengaSurface) -> BoundaryClassification:
    """Definiteness of the boundary Gram, cross-checked combinatorially.

    The combinatorial rule (valid when no component is a (-1)-curve): the
    cycle Gram is negative definite iff every square is <= -2 with at least
    one <= -3, and negative semidefinite with radical iff every square is -2.
    """
    squares = surface.self_intersections()
    gram = [
        [surface.picard.pair(bi, bj) for bj in surface.boundary]
        for bi in surface.boundary
    ]
    lat = gram_lattice(gram)
    classification = definiteness(lat)
    radical_rank = signature(lat).null
    applicable = all(q != -1 for q in squares)
    verdict: str | None = None
    agrees: bool | None = None
    if applicable:
        if all(q <= -2 for q in squares) and any(q <= -3 for q in squares):
            verdict = "negative_definite"
        elif all(q == -2 for q in squares):
            verdict = "negative_semidefinite_degenerate"
        agrees = verdict == classification if verdict is not None else (
            classification not in ("negative_definite",)
        )
    return BoundaryClassification(
        classification=classification,
        radical_rank=radical_rank,
        criterion_applicable=applicable,
        criterion_verdict=verdict,
        criterion_agrees=agrees,
    )


def surface_invariants(surface: LooijengaSurface) -> dict:
    return {
        "picard_rank": surface.picard_rank,
        "components": surface.r,
        "self_intersections": list(surface.self_intersections()),
        "boundary_square": surface.boundary_self_intersection(),
        "blowups": len(surface.history),
    }
