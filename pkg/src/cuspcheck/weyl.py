"""Reflection groups, chamber walks, and the non-arithmeticity certificate.

The headline check is ``totaro_check``: given a hyperbolic lattice M of
signature (1, m) with m >= 3, a commuting family of m-1 independent parabolic
isometries, an infinite reflection group witnessed by two roots with pairing
at least 2 in absolute value, and a second parabolic whose fixed isotropic
line differs from the family's, the symmetry group certified by these
witnesses cannot be commensurable with an arithmetic group.  That criterion
is an axiom of the checker; everything this module does is verify its
hypotheses by exact integer computation and package the witnesses.

Infinitude of the reflection group is made finite-size checkable by a chamber
walk: words in two reflections applied to a base point of positive square,
whose sign vectors against the orbit's wall list are pairwise distinct.  Each
new sign vector is a chamber no shorter word reaches, so N distinct vectors
certify at least N distinct group elements.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import InputError
from .fibration import EllipticFibration, eichler_transvection
from .intlinalg import rank_int
from .isometry import Isometry, classify_isometry, identity_isometry, isometry_from_matrix
from .lattice import GramLattice, Sublattice, Vector, signature
from .period import PeriodPoint
from .surface import LooijengaSurface, boundary_complement


def reflect(lattice: GramLattice, alpha: Sequence[int], x: Sequence[int]) -> Vector:
    """Reflection in a (-2)-root: x -> x + (x.alpha) alpha."""
    a = lattice.check_vector(alpha)
    if lattice.square(a) != -2:
        raise InputError("reflection requires a root of square -2")
    xv = lattice.check_vector(x)
    c = lattice.pair(xv, a)
    return tuple(xi + c * ai for xi, ai in zip(xv, a))


def reflection_isometry(lattice: GramLattice, alpha: Sequence[int]) -> Isometry:
    n = lattice.rank
    cols = []
    for j in range(n):
        unit = [0] * n
        unit[j] = 1
        cols.append(reflect(lattice, alpha, unit))
    matrix = [[cols[j][i] for j in range(n)] for i in range(n)]
    return isometry_from_matrix(lattice, matrix)


def dihedral_order(
    lattice: GramLattice, alpha: Sequence[int], beta: Sequence[int]
) -> int | float:
    """Order of the composite of the two root reflections.

    Proportional roots give the identity (order 1).  Otherwise the composite
    acts on the rank-2 span with trace (alpha.beta)^2 - 2, so pairings 0 and 1
    give orders 2 and 3, and |pairing| >= 2 gives infinite order (trace >= 2
    means unipotent-or-hyperbolic on the span, and the unipotent part is
    nontrivial).
    """
    a = lattice.check_vector(alpha)
    b = lattice.check_vector(beta)
    for v in (a, b):
        if lattice.square(v) != -2:
            raise InputError("dihedral order requires roots of square -2")
    if b == a or b == tuple(-x for x in a):
        return 1
    p = abs(lattice.pair(a, b))
    if p == 0:
        return 2
    if p == 1:
        return 3
    return math.inf


def chamber_sign(
    lattice: GramLattice, x: Sequence[int], roots: Sequence[Sequence[int]]
) -> tuple[int, ...]:
    """Sign vector of a positive-square class against an ordered wall list."""
    xv = lattice.check_vector(x)
    if lattice.square(xv) <= 0:
        raise InputError("vector is not in the positive cone")
    out = []
    for r in roots:
        p = lattice.pair(xv, r)
        out.append(1 if p > 0 else (-1 if p < 0 else 0))
    return tuple(out)


@dataclass(frozen=True)
class ChamberCertificate:
    """A finite witness that two reflections generate an infinite group.

    ``roots`` are the walls crossed by the alternating word, ``points`` the
    orbit of the base point under its prefixes, and ``sign_vectors`` their
    pairwise-distinct chamber coordinates.
    """

    roots: tuple[Vector, ...]
    base_point: Vector
    points: tuple[Vector, ...]
    sign_vectors: tuple[tuple[int, ...], ...]
    requested: int


def _wedge_point(
    lattice: GramLattice, alpha: Vector, beta: Vector, bound: int
) -> Vector:
    """Positive-square point pairing strictly positively with both roots."""
    n = lattice.rank
    for radius in range(1, bound + 1):
        for cand in itertools.product(range(-radius, radius + 1), repeat=n):
            if max(abs(c) for c in cand) != radius:
                continue
            if lattice.square(cand) <= 0:
                continue
            if lattice.pair(cand, alpha) > 0 and lattice.pair(cand, beta) > 0:
                return tuple(cand)
    raise ArithmeticError(f"no fundamental-wedge base point found within radius {bound}")


def chamber_certificate(
    lattice: GramLattice,
    alpha: Sequence[int],
    beta: Sequence[int],
    witness_count: int = 100,
    base_bound: int = 12,
) -> ChamberCertificate:
    """Walk the alternating word in two reflections and log distinct chambers.

    The k-th wall is the k-th letter conjugated by the preceding prefix; the
    k-th point is the prefix applied to the base point.  Distinctness of all
    sign vectors is asserted, not assumed.  The lattice must be hyperbolic:
    with a radical present, an infinite dihedral pair can act by translations
    along it, which the pairing (and hence every sign vector) cannot see.
    """
    sig = signature(lattice)
    if sig.positive != 1 or sig.null != 0:
        raise InputError("chamber walks need a nondegenerate lattice of signature (1, n)")
    refl = (reflection_isometry(lattice, alpha), reflection_isometry(lattice, beta))
    letters = [alpha if k % 2 == 0 else beta for k in range(witness_count)]
    prefix = identity_isometry(lattice)
    walls: list[Vector] = []
    prefixes = [prefix]
    for k, letter in enumerate(letters):
        walls.append(prefix.apply(letter))
        prefix = prefix.compose(refl[k % 2])
        prefixes.append(prefix)
    # Orient the pair so its pairing is non-negative (the reflections cannot
    # tell) and take a base pairing strictly positively with both roots.
    # Every mirror of the generated group has a root that is, up to sign, a
    # non-negative combination of the oriented pair, so such a base meets no
    # mirror at all, and its gallery is the textbook one: the k-th point is
    # separated from the start by exactly the first k walls.  A base chosen
    # anywhere else can sit between mirrors of the SAME family, where points
    # far along the walk stop being distinguished by the finite wall list.
    oriented_beta = (
        tuple(beta)
        if lattice.pair(alpha, beta) >= 0
        else tuple(-b for b in beta)
    )
    base = _wedge_point(lattice, tuple(alpha), oriented_beta, base_bound)
    points = tuple(w.apply(base) for w in prefixes)
    signs = []
    for p in points:
        sv = chamber_sign(lattice, p, walls)
        if 0 in sv:
            raise ArithmeticError("orbit point landed on a wall; base point not interior")
        signs.append(sv)
    if len(set(signs)) != len(signs):
        raise ArithmeticError("chamber sign vectors are not pairwise distinct")
    return ChamberCertificate(
        roots=tuple(walls),
        base_point=base,
        points=points,
        sign_vectors=tuple(signs),
        requested=witness_count,
    )


@dataclass(frozen=True)
class WeylCertificate:
    """Two sections through one boundary point, turned into hyperbolic roots.

    ``section1``/``section2`` live in the smaller surface's coordinates;
    ``root1``/``root2`` are their strict transforms in the coordinates of the
    boundary complement of the blown-up surface.
    """

    root1: Vector
    root2: Vector
    pairing: int
    section1: Vector
    section2: Vector
    dihedral: int | float
    chamber: ChamberCertificate


def weyl_infiniteness_certificate(
    surface: LooijengaSurface,
    phi: PeriodPoint,
    fib: EllipticFibration,
    translations: Sequence[Sequence[int]],
    witness_count: int = 100,
    search_bound: int = 16,
) -> WeylCertificate:
    """Certify an infinite reflection group on the blown-up boundary complement.

    ``surface`` is the blow-up of the fibration's surface at the point where
    the zero section meets the boundary, with the exceptional class last in
    the history.  The second section is the image of the zero section under a
    translation combination e with residue phi(e) = 0 (so the moved section
    still passes through the blown-up point) and square at most -8 (so the two
    strict transforms pair to at least 2).  Search is by growing coefficient
    rings, lexicographic within each, so the witness is canonical.
    """
    if not surface.history:
        raise InputError("blown-up surface must record its exceptional class")
    n = surface.picard.rank
    e_p = surface.history[-1][1]
    if e_p != tuple([0] * (n - 1) + [1]):
        raise InputError("exceptional class must be the final basis vector")
    if not fib.has_section or fib.zero_section is None:
        raise InputError("certificate needs a fibration with a section")
    c0 = fib.zero_section
    if len(c0) != n - 1:
        raise InputError("fibration does not match the surface being blown up")
    if not translations:
        raise InputError("certificate needs at least one translation class")
    old = phi.domain.ambient
    f = fib.fiber_class

    chosen = None
    k = len(translations)
    for radius in range(1, search_bound + 1):
        for coeffs in itertools.product(range(-radius, radius + 1), repeat=k):
            if max(abs(c) for c in coeffs) != radius:
                continue
            e = [0] * (n - 1)
            for c, t in zip(coeffs, translations):
                e = [x + c * y for x, y in zip(e, t)]
            if old.square(e) > -8:
                continue
            if phi.evaluate(e) != 0:
                continue
            chosen = e
            break
        if chosen is not None:
            break
    if chosen is None:
        raise InputError(
            f"certificate search exhausted: no admissible translation within radius {search_bound}"
        )
    mover = eichler_transvection(old, f, chosen)
    c2 = mover.apply(c0)
    if old.square(c2) != -1 or phi.evaluate([a - b for a, b in zip(c2, c0)]) != 0:
        raise ArithmeticError("moved section is not a section through the blown-up point")

    m_sub = boundary_complement(surface).sublattice
    a1 = tuple(list(c0) + [-1])
    a2 = tuple(list(c2) + [-1])
    for a in (a1, a2):
        if surface.picard.square(a) != -2:
            raise ArithmeticError("strict transform of a section is not a root")
        if not m_sub.contains(a):
            raise InputError(
                "blown-up point does not lie on the zero section's boundary component"
            )
    m_lat = m_sub.as_lattice()
    r1 = m_sub.coords_of(a1)
    r2 = m_sub.coords_of(a2)
    pairing = m_lat.pair(r1, r2)
    if abs(pairing) < 2:
        raise ArithmeticError("certificate roots pair below the infinite-order threshold")
    dihedral = dihedral_order(m_lat, r1, r2)
    if dihedral != math.inf:
        raise ArithmeticError("certificate roots generate a finite dihedral group")
    chamber = chamber_certificate(m_lat, r1, r2, witness_count=witness_count)
    return WeylCertificate(
        root1=r1,
        root2=r2,
        pairing=pairing,
        section1=tuple(c0),
        section2=tuple(c2),
        dihedral=dihedral,
        chamber=chamber,
    )


@dataclass(frozen=True)
class CriterionReport:
    signature_ok: bool
    rank_ok: bool
    zmminus1_ok: bool
    weyl_infinite_ok: bool
    disjoint_parabolics_ok: bool
    verdict: bool
    witnesses: dict


ASSUMPTIONS = (
    "identifying the symmetry group with its image in the isometry group "
    "uses virtual torsion-freeness of the latter; recorded, not checked",
    "square -2 classes with trivial period residue are taken to be classes "
    "of actual curves; the lattice-level certificate is valid regardless",
)


def _as_lattice(m: Sublattice | GramLattice) -> GramLattice:
    if isinstance(m, Sublattice):
        return m.as_lattice()
    return m


def totaro_check(
    m: Sublattice | GramLattice,
    g_family: Sequence[Isometry],
    h_family: Sequence[Isometry],
    weyl_cert: WeylCertificate | None,
    chamber_cert: ChamberCertificate | None = None,
) -> CriterionReport:
    """Verify the hypotheses of the non-arithmeticity criterion on M.

    (a) M has signature (1, m) with m >= 3; (b) the G family consists of
    exactly m-1 commuting independent parabolics with a common fixed isotropic
    line (independence read off the rank of the combined (g - 1)-image);
    (c) the reflection group of the certificate is infinite and moves a
    chamber through >= N distinct sign vectors, so it meets the translation
    family's group in nothing but the identity; (d) the H family supplies a
    parabolic whose fixed line differs, so the G family has infinite index in
    the full symmetry group.  The verdict is the conjunction; every check
    records its witnesses.  Failures produce a false verdict, never an
    exception, so near-miss inputs can be reported.
    """
    lat = _as_lattice(m)
    witnesses: dict = {"assumptions": list(ASSUMPTIONS)}
    sig = signature(lat)
    witnesses["signature"] = [sig.positive, sig.negative, sig.null]
    signature_ok = sig.positive == 1 and sig.null == 0
    m_val = sig.negative
    rank_ok = signature_ok and m_val >= 3
    witnesses["m"] = m_val

    zmminus1_ok = False
    common_line: Vector | None = None
    if signature_ok and rank_ok:
        witnesses["generator_count"] = len(g_family)
        if len(g_family) == m_val - 1 and g_family:
            lines = []
            all_parabolic = True
            for g in g_family:
                if g.ambient.gram != lat.gram:
                    raise InputError("generator does not act on the criterion lattice")
                kind = classify_isometry(g)
                if kind.tag != "parabolic":
                    all_parabolic = False
                    break
                lines.append(kind.fixed_isotropic)
            commuting = all_parabolic and all(
                a.commutes_with(b) for a, b in itertools.combinations(g_family, 2)
            )
            if all_parabolic and commuting and len(set(lines)) == 1:
                common_line = lines[0]
                image_rows: list[list[int]] = []
                for g in g_family:
                    mat = g.matrix
                    for j in range(lat.rank):
                        col = [mat[i][j] - (1 if i == j else 0) for i in range(lat.rank)]
                        image_rows.append(col)
                image_rank = rank_int(image_rows)
                witnesses["image_rank"] = image_rank
                witnesses["fixed_line"] = list(common_line)
                zmminus1_ok = image_rank == m_val

    weyl_infinite_ok = False
    cert = chamber_cert if chamber_cert is not None else (
        weyl_cert.chamber if weyl_cert is not None else None
    )
    if weyl_cert is not None and cert is not None and signature_ok:
        r1, r2 = weyl_cert.root1, weyl_cert.root2
        roots_ok = (
            lat.square(r1) == -2
            and lat.square(r2) == -2
            and abs(lat.pair(r1, r2)) >= 2
            and dihedral_order(lat, r1, r2) == math.inf
        )
        walk_ok = False
        if roots_ok:
            recomputed = []
            walk_ok = True
            for p in cert.points:
                if lat.square(p) <= 0:
                    walk_ok = False
                    break
                sv = chamber_sign(lat, p, cert.roots)
                if 0 in sv:
                    walk_ok = False
                    break
                recomputed.append(sv)
            if walk_ok:
                walk_ok = (
                    tuple(recomputed) == cert.sign_vectors
                    and len(set(recomputed)) == len(recomputed)
                    and len(recomputed) >= cert.requested
                )
            witnesses["root_pairing"] = lat.pair(r1, r2)
            witnesses["distinct_chambers"] = len(set(cert.sign_vectors))
            witnesses["requested_chambers"] = cert.requested
        weyl_infinite_ok = roots_ok and walk_ok

    disjoint_parabolics_ok = False
    if signature_ok and h_family:
        h_lines = []
        all_parabolic = True
        for h in h_family:
            if h.ambient.gram != lat.gram:
                raise InputError("witness does not act on the criterion lattice")
            kind = classify_isometry(h)
            if kind.tag != "parabolic":
                all_parabolic = False
                break
            h_lines.append(kind.fixed_isotropic)
        if all_parabolic:
            witnesses["h_fixed_lines"] = [list(v) for v in h_lines]
            disjoint_parabolics_ok = common_line is not None and any(
                line != common_line for line in h_lines
            )

    verdict = (
        signature_ok
        and rank_ok
        and zmminus1_ok
        and weyl_infinite_ok
        and disjoint_parabolics_ok
    )
    return CriterionReport(
        signature_ok=signature_ok,
        rank_ok=rank_ok,
        zmminus1_ok=zmminus1_ok,
        weyl_infinite_ok=weyl_infinite_ok,
        disjoint_parabolics_ok=disjoint_parabolics_ok,
        verdict=verdict,
        witnesses=witnesses,
    )
