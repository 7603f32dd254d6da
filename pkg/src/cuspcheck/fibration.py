"""Genus-one fibrations read off from the boundary cycle.

When every boundary component is a (-2)-class the cycle supports a fibration
whose fiber class is the smallest multiple of the cycle sum killed by the
period point.  This module classifies reducible fiber configurations by their
intersection graphs, computes Mordell-Weil rank through the rank bookkeeping
formula, and realizes the translation action of orthogonal classes as
transvections on the Picard lattice.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .enumeration import EnumerationResult, vectors_of_square
from .errors import InputError
from .intlinalg import rank_int, right_kernel, saturation
from .isometry import Isometry, classify_isometry, isometry_from_matrix
from .lattice import (
    GramLattice,
    Sublattice,
    Vector,
    complement_basis_within,
    gram_lattice,
    signature,
)
from .period import PeriodPoint
from .surface import LooijengaSurface, boundary_complement


@dataclass(frozen=True)
class FiberConfiguration:
    classes: tuple[Vector, ...]
    multiplicities: tuple[int, ...]
    kodaira_type: str

    @property
    def component_count(self) -> int:
        return len(self.classes)


def _kodaira_label(mults: Sequence[int]) -> str:
    n = len(mults)
    key = tuple(sorted(mults))
    if all(m == 1 for m in mults):
        return f"I{n}"
    ones = key.count(1)
    twos = key.count(2)
    if ones == 4 and twos == n - 4 and n >= 5:
        return f"I*{n - 5}"
    if key == (1, 1, 1, 2, 2, 2, 3):
        return "IV*"
    if key == (1, 1, 2, 2, 2, 3, 3, 4):
        return "III*"
    if key == (1, 2, 2, 3, 3, 4, 4, 5, 6):
        return "II*"
    raise ArithmeticError(f"unrecognized affine multiplicity pattern {key}")


def classify_configuration(
    lattice: GramLattice, classes: Sequence[Sequence[int]]
) -> FiberConfiguration:
    """Recognize a full reducible fiber from its component classes.

    The classes must be (-2)-classes pairing non-negatively with each other;
    the configuration must be connected and negative semidefinite with a
    one-dimensional radical.  Multiplicities are the primitive positive
    radical vector, and the type label follows the standard affine tables.
    """
    cls = [lattice.check_vector(c) for c in classes]
    n = len(cls)
    if n == 0:
        raise InputError("empty configuration")
    b = [[lattice.pair(u, v) for v in cls] for u in cls]
    for i in range(n):
        if b[i][i] != -2:
            raise InputError("fiber components must be (-2)-classes")
        for j in range(i + 1, n):
            if b[i][j] < 0:
                raise InputError("distinct fiber components must meet non-negatively")
    # connectivity of the dual graph
    seen = {0}
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for j in range(n):
            if j not in seen and b[i][j] > 0:
                seen.add(j)
                frontier.append(j)
    if len(seen) != n:
        raise InputError("fiber configuration is disconnected")
    sig = signature(gram_lattice(b))
    if sig.positive > 0:
        raise InputError("configuration pairing is not negative semidefinite")
    if sig.null == 0:
        raise InputError("not a full fiber: configuration is negative definite")
    if sig.null != 1:
        raise InputError("configuration radical has rank > 1")
    ker = right_kernel(b)
    mult = list(ker[0])
    if mult[0] < 0:
        mult = [-m for m in mult]
    if any(m <= 0 for m in mult):
        raise ArithmeticError("affine radical vector is not strictly positive")
    return FiberConfiguration(
        classes=tuple(cls),
        multiplicities=tuple(mult),
        kodaira_type=_kodaira_label(mult),
    )


@dataclass(frozen=True)
class EllipticFibration:
    """Fibration data at the lattice level.

    ``fiber_class`` is the class of a full (possibly multiple) fiber, equal to
    ``multiple`` times the boundary sum.  ``zero_section`` is set only when a
    section exists, in which case it is the most recent exceptional class.
    """

    fiber_class: Vector
    multiple: int
    has_section: bool
    zero_section: Vector | None
    reducible_fibers: tuple[FiberConfiguration, ...]
    mw_rank: int


def shioda_tate_rank(picard_rank: int, fibers: Sequence[FiberConfiguration]) -> int:
    """Rank of the translation group: rho - 2 - sum (components - 1)."""
    rank = picard_rank - 2 - sum(f.component_count - 1 for f in fibers)
    if rank < 0:
        raise ArithmeticError("fiber components exceed the available rank")
    return rank


def fiber_from_boundary(surface: LooijengaSurface, phi: PeriodPoint) -> EllipticFibration:
    """Base fibration whose reducible fibers are just the boundary cycle.

    Requires every boundary component to be a (-2)-class.  The fiber multiple
    is the order of the period value on the boundary sum; a section exists
    exactly when that value vanishes, and then the most recent exceptional
    class is the zero section.
    """
    if any(a != -2 for a in surface.self_intersections()):
        raise InputError("boundary is not of fiber type: a component is not a (-2)-class")
    d = surface.boundary_sum()
    val = phi.evaluate(d)
    m = phi.modulus // gcd(phi.modulus, val)
    f = tuple(m * x for x in d)
    has_section = m == 1
    zero_section: Vector | None = None
    if has_section:
        if not surface.history:
            raise InputError("no exceptional class recorded to serve as the zero section")
        zero_section = surface.history[-1][1]
        if surface.picard.square(zero_section) != -1:
            raise ArithmeticError("recorded section class is not a (-1)-class")
        if surface.picard.pair(zero_section, f) != 1:
            raise ArithmeticError("recorded section class does not meet the fiber once")
    boundary_fiber = classify_configuration(surface.picard, surface.boundary)
    mw = shioda_tate_rank(surface.picard_rank, [boundary_fiber])
    return EllipticFibration(
        fiber_class=f,
        multiple=m,
        has_section=has_section,
        zero_section=zero_section,
        reducible_fibers=(boundary_fiber,),
        mw_rank=mw,
    )


def _sign_normalized(v: Sequence[int]) -> tuple[int, ...]:
    for x in v:
        if x != 0:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


def extra_reducible_fibers(
    lam: Sublattice,
    fib: EllipticFibration,
    phi: PeriodPoint,
    roots: EnumerationResult,
) -> tuple[FiberConfiguration, ...]:
    """Reducible fibers beyond the boundary cycle, found from root cosets.

    Each +/- pair of root cosets mod the radical contributes a two-component
    fiber exactly when some representative is killed by the period point; the
    two components are that representative and its complement in the full
    fiber class.  Only the corank-one, single-pair shape is implemented,
    which is the shape these boundary complements actually have.
    """
    if not roots.representatives:
        return ()
    if len(roots.radical) != 1:
        raise InputError("only corank-one root radicals are supported")
    rad = list(roots.radical[0])
    reps = [list(r) for r in roots.representatives]
    if len(reps) != 2 or rank_int([rad, [x + y for x, y in zip(*reps)]]) > 1:
        raise InputError("unsupported root system: expected a single +/- coset pair")
    beta = list(_sign_normalized(reps[0]))
    m = phi.modulus
    r_val = phi.evaluate_coords(rad)
    beta_val = phi.evaluate_coords(beta)
    g = gcd(r_val, m)
    if g == 0:
        g = m
    if beta_val % g != 0:
        return ()
    shift = next(k for k in range(m) if (beta_val + k * r_val) % m == 0)
    c1 = lam.embed([x + shift * y for x, y in zip(beta, rad)])
    c2 = tuple(fx - cx for fx, cx in zip(fib.fiber_class, c1))
    if phi.evaluate(c2) != 0:
        raise ArithmeticError("complementary fiber component is not killed by the period")
    return (classify_configuration(lam.ambient, (c1, c2)),)


def eichler_transvection(
    lattice: GramLattice, f: Sequence[int], e: Sequence[int]
) -> Isometry:
    """Transvection x -> x + (x.f)e - (x.e)f - (e.e/2)(x.f)f.

    Needs f isotropic, e orthogonal to f, and e of even square; then the map
    is an isometry fixing f, and composing two transvections with the same f
    adds their e-vectors (exactly, with no correction term).
    """
    fv = lattice.check_vector(f)
    ev = lattice.check_vector(e)
    if lattice.square(fv) != 0:
        raise InputError("transvection axis must be isotropic")
    if lattice.pair(fv, ev) != 0:
        raise InputError("transvection vector must be orthogonal to the axis")
    e_sq = lattice.square(ev)
    if e_sq % 2 != 0:
        raise InputError("transvection vector must have even square")
    half = e_sq // 2
    n = lattice.rank
    cols = []
    for j in range(n):
        x = [0] * n
        x[j] = 1
        xf = lattice.pair(x, fv)
        xe = lattice.pair(x, ev)
        cols.append([x[i] + xf * ev[i] - xe * fv[i] - half * xf * fv[i] for i in range(n)])
    matrix = [[cols[j][i] for j in range(n)] for i in range(n)]
    return isometry_from_matrix(lattice, matrix)


def translation_vectors(surface: LooijengaSurface, fib: EllipticFibration) -> list[Vector]:
    """Classes generating the translation group, in ambient coordinates.

    Inside the boundary complement, take the part orthogonal to the fiber and
    strip everything that translates trivially: the radical, boundary combos,
    and the components of any extra reducible fibers.  A canonical complement
    of that degenerate part is returned; its size always matches the computed
    translation rank, which ``mw_translation_group`` asserts.
    """
    comp = boundary_complement(surface)
    lam = comp.sublattice
    n = lam.rank
    frow = [surface.picard.pair(fib.fiber_class, b) for b in lam.basis]
    if any(frow):
        w_rows = [list(r) for r in right_kernel([frow])]
    else:
        w_rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    bad: list[list[int]] = []
    lam_gram = lam.induced_gram()
    bad.extend(list(r) for r in right_kernel(lam_gram))
    cycle = [[surface.picard.pair(u, v) for v in surface.boundary] for u in surface.boundary]
    for combo in right_kernel(cycle):
        vec = [0] * surface.picard.rank
        for c, d in zip(combo, surface.boundary):
            vec = [x + c * y for x, y in zip(vec, d)]
        bad.append(list(lam.coords_of(vec)))
    for config in fib.reducible_fibers[1:]:
        for cls in config.classes:
            bad.append(list(lam.coords_of(cls)))
    bad = [r for r in bad if any(r)]
    if bad:
        bad = saturation(bad, n)
    free = complement_basis_within(w_rows, bad, n)
    return [lam.embed(r) for r in free]


def mw_translation_group(
    surface: LooijengaSurface, fib: EllipticFibration
) -> list[Isometry]:
    """One transvection per translation generator, acting on Picard."""
    vecs = translation_vectors(surface, fib)
    if len(vecs) != fib.mw_rank:
        raise ArithmeticError(
            f"translation generators ({len(vecs)}) disagree with the rank formula ({fib.mw_rank})"
        )
    group = [eichler_transvection(surface.picard, fib.fiber_class, e) for e in vecs]
    for g in group:
        for d in surface.boundary:
            if g.apply(d) != d:
                raise ArithmeticError("translation fails to fix a boundary component")
    return group


def isotropic_transvection_group(sub: Sublattice, f_ambient: Sequence[int]) -> list[Isometry]:
    """Transvection generators along an isotropic class, acting on a sublattice.

    The class must lie in the sublattice and be isotropic there.  One
    transvection is returned per basis vector of a canonical complement of the
    class inside its orthogonal in the sublattice; since transvections with a
    common axis compose by adding their vectors, these generate a free abelian
    group of that rank.
    """
    lat = sub.as_lattice()
    f = list(sub.coords_of(f_ambient))
    if lat.square(f) != 0:
        raise InputError("transvection axis must be isotropic")
    if not any(f):
        raise InputError("transvection axis must be nonzero")
    n = lat.rank
    row = lat.pairing_row(f)
    if any(row):
        w_rows = [list(r) for r in right_kernel([row])]
    else:
        w_rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    fsat = saturation([f], n)
    gens = complement_basis_within(w_rows, fsat, n)
    return [eichler_transvection(lat, f, e) for e in gens]


def fixed_isotropic_line(g: Isometry) -> Vector:
    """Primitive generator of the fixed isotropic line of a parabolic isometry."""
    kind = classify_isometry(g)
    if kind.tag != "parabolic":
        raise InputError(f"isometry is {kind.tag}, not parabolic")
    assert kind.fixed_isotropic is not None
    return kind.fixed_isotropic


def analyze_fibration(surface: LooijengaSurface, phi: PeriodPoint) -> EllipticFibration:
    """Full fibration: boundary fiber plus any root-coset fibers, with rank."""
    fib = fiber_from_boundary(surface, phi)
    comp = boundary_complement(surface)
    roots = vectors_of_square(comp.sublattice.as_lattice(), -2)
    extras = extra_reducible_fibers(comp.sublattice, fib, phi, roots)
    fibers = fib.reducible_fibers + extras
    mw = shioda_tate_rank(surface.picard_rank, fibers)
    return dataclasses.replace(fib, reducible_fibers=fibers, mw_rank=mw)
