"""Reflection groups: involutions, dihedral orders, chambers, the criterion."""

import math

import pytest

from helpers import random_symmetric

from cuspcheck.errors import InputError
from cuspcheck.fibration import (
    analyze_fibration,
    isotropic_transvection_group,
    mw_translation_group,
    translation_vectors,
)
from cuspcheck.lattice import diagonal_lattice, direct_sum, gram_lattice, hyperbolic_plane
from cuspcheck.period import extend_over_blowup
from cuspcheck.surface import boundary_complement, interior_blowup
from cuspcheck.weyl import (
    chamber_certificate,
    chamber_sign,
    dihedral_order,
    reflect,
    reflection_isometry,
    totaro_check,
    weyl_infiniteness_certificate,
)


def _random_root_lattice(rng, n):
    """Random gram whose first basis vector is a (-2)-root."""
    g = random_symmetric(rng, n)
    g[0][0] = -2
    return gram_lattice(g)


def test_reflection_involution_and_isometry(rng):
    # acceptance suite property: 500 cases
    for _ in range(500):
        n = rng.randint(2, 5)
        lat = _random_root_lattice(rng, n)
        alpha = tuple(1 if i == 0 else 0 for i in range(n))
        x = tuple(rng.randint(-4, 4) for _ in range(n))
        y = tuple(rng.randint(-4, 4) for _ in range(n))
        rx = reflect(lat, alpha, x)
        # involution
        assert reflect(lat, alpha, rx) == x
        # pairing preserved
        assert lat.pair(rx, reflect(lat, alpha, y)) == lat.pair(x, y)
        # alpha itself is negated, its orthogonal complement is fixed
        assert reflect(lat, alpha, alpha) == tuple(-a for a in alpha)


def test_reflection_isometry_matches_pointwise(rng):
    for _ in range(50):
        n = rng.randint(2, 4)
        lat = _random_root_lattice(rng, n)
        alpha = tuple(1 if i == 0 else 0 for i in range(n))
        iso = reflection_isometry(lat, alpha)
        x = tuple(rng.randint(-3, 3) for _ in range(n))
        assert iso.apply(x) == reflect(lat, alpha, x)


def test_reflect_requires_root():
    lat = diagonal_lattice([-4, -2])
    with pytest.raises(InputError):
        reflect(lat, (1, 0), (0, 1))


def test_dihedral_order_against_matrix_powers():
    # pairings 0 and 1 give finite orders; the matrix-power oracle confirms
    cases = [
        (diagonal_lattice([-2, -2]), (1, 0), (0, 1), 2),
        (gram_lattice([[-2, 1], [1, -2]]), (1, 0), (0, 1), 3),
    ]
    for lat, a, b, want in cases:
        assert dihedral_order(lat, a, b) == want
        w = reflection_isometry(lat, a).compose(reflection_isometry(lat, b))
        assert w.power(want).is_identity()
        for k in range(1, want):
            assert not w.power(k).is_identity()


def test_dihedral_order_proportional_roots():
    lat = diagonal_lattice([-2, -2])
    assert dihedral_order(lat, (1, 0), (1, 0)) == 1
    assert dihedral_order(lat, (1, 0), (-1, 0)) == 1


def test_dihedral_order_infinite_with_power_oracle():
    lat = gram_lattice([[-2, 2], [2, -2]])
    assert dihedral_order(lat, (1, 0), (0, 1)) == math.inf
    w = reflection_isometry(lat, (1, 0)).compose(reflection_isometry(lat, (0, 1)))
    for k in range(1, 51):
        assert not w.power(k).is_identity()


def test_dihedral_order_rejects_non_roots():
    with pytest.raises(InputError):
        dihedral_order(diagonal_lattice([-4, -2]), (1, 0), (0, 1))


def test_chamber_sign_basics():
    lat = direct_sum(hyperbolic_plane(), diagonal_lattice([-2]))
    x = (1, 1, 0)  # square 2
    assert chamber_sign(lat, x, [(0, 0, 1)]) == (0,)
    assert chamber_sign(lat, x, [(1, 0, 0), (0, 0, 1)]) == (1, 0)
    with pytest.raises(InputError, match="positive cone"):
        chamber_sign(lat, (0, 0, 1), [(0, 0, 1)])


@pytest.mark.parametrize("witness_count", [1, 2, 12, 25, 40])
def test_chamber_certificate_produces_distinct_chambers(witness_count):
    # two roots pairing to 2 inside a nondegenerate (1, 2) lattice; even
    # witness counts once collided when the base sat outside the fundamental
    # wedge, so both parities stay pinned here
    lat = direct_sum(hyperbolic_plane(), diagonal_lattice([-2]))
    alpha = (0, 0, 1)
    beta = (1, 0, -1)
    assert lat.square(beta) == -2
    assert lat.pair(alpha, beta) == 2
    cert = chamber_certificate(lat, alpha, beta, witness_count=witness_count)
    assert len(cert.sign_vectors) == witness_count + 1
    assert len(set(cert.sign_vectors)) == witness_count + 1
    assert all(0 not in sv for sv in cert.sign_vectors)
    # the walk peels off one wall per step: sign vector k is negative on the
    # first k walls and positive on the rest
    for k, sv in enumerate(cert.sign_vectors):
        assert sv == tuple(-1 if i < k else 1 for i in range(witness_count))


def test_chamber_certificate_orientation_independent():
    # negating a root changes no reflection, so the walk still separates
    lat = direct_sum(hyperbolic_plane(), diagonal_lattice([-2]))
    cert = chamber_certificate(lat, (0, 0, 1), (-1, 0, 1), witness_count=14)
    assert len(set(cert.sign_vectors)) == 15


def test_chamber_certificate_rejects_degenerate_lattice():
    # with a radical, an infinite dihedral pair translates along it and the
    # sign vectors cannot separate chambers; the contract refuses the input
    lat = gram_lattice([[2, 0, 0], [0, -2, 2], [0, 2, -2]])
    with pytest.raises(InputError, match="signature"):
        chamber_certificate(lat, (0, 1, 0), (0, 0, 1), witness_count=5)


def test_weyl_certificate_on_the_main_surface(seed_surface, generic_phi):
    fib = analyze_fibration(seed_surface, generic_phi)
    tvecs = translation_vectors(seed_surface, fib)
    tilde = interior_blowup(seed_surface, 6)
    cert = weyl_infiniteness_certificate(
        tilde, generic_phi, fib, tvecs, witness_count=40
    )
    m_sub = boundary_complement(tilde).sublattice
    m_lat = m_sub.as_lattice()
    # both roots really are roots of M with the promised pairing
    assert m_lat.square(cert.root1) == -2
    assert m_lat.square(cert.root2) == -2
    assert abs(cert.pairing) >= 2
    assert m_lat.pair(cert.root1, cert.root2) == cert.pairing
    assert cert.dihedral == math.inf
    assert len(cert.chamber.sign_vectors) == 41
    assert len(set(cert.chamber.sign_vectors)) == 41


def _criterion_ingredients(seed_surface, generic_phi, witness_count=25):
    fib = analyze_fibration(seed_surface, generic_phi)
    tvecs = translation_vectors(seed_surface, fib)
    tilde = interior_blowup(seed_surface, 6)
    m_sub = boundary_complement(tilde).sublattice
    f_up = tuple(fib.fiber_class) + (0,)
    g_family = isotropic_transvection_group(m_sub, f_up)
    cert = weyl_infiniteness_certificate(
        tilde, generic_phi, fib, tvecs, witness_count=witness_count
    )
    # the H family: transvections along the second fibration's fiber class
    from cuspcheck.pipeline import second_fibration

    lam_tilde = boundary_complement(tilde).sublattice
    phi_tilde = extend_over_blowup(
        generic_phi, lam_tilde, seed_surface.history[-1][1]
    )
    second = second_fibration(
        seed_surface, tilde, generic_phi, phi_tilde, fib, tvecs
    )
    assert second is not None
    h_family = isotropic_transvection_group(m_sub, second.fiber_class_upstairs)
    return m_sub, g_family, h_family, cert


def test_totaro_check_verdict_true(seed_surface, generic_phi):
    m_sub, g_family, h_family, cert = _criterion_ingredients(
        seed_surface, generic_phi
    )
    report = totaro_check(m_sub, g_family, h_family, cert)
    assert report.signature_ok
    assert report.rank_ok
    assert report.zmminus1_ok
    assert report.weyl_infinite_ok
    assert report.disjoint_parabolics_ok
    assert report.verdict
    assert report.witnesses["signature"] == [1, 3, 0]
    assert report.witnesses["m"] == 3


def test_totaro_check_is_monotone_in_witnesses(seed_surface, generic_phi):
    # dropping any ingredient flips the verdict to false, never raises
    m_sub, g_family, h_family, cert = _criterion_ingredients(
        seed_surface, generic_phi
    )
    no_g = totaro_check(m_sub, g_family[:1], h_family, cert)
    assert not no_g.zmminus1_ok and not no_g.verdict
    no_h = totaro_check(m_sub, g_family, [], cert)
    assert not no_h.disjoint_parabolics_ok and not no_h.verdict
    no_cert = totaro_check(m_sub, g_family, h_family, None)
    assert not no_cert.weyl_infinite_ok and not no_cert.verdict
    # the fully equipped call still passes (inputs were not mutated)
    assert totaro_check(m_sub, g_family, h_family, cert).verdict


def test_totaro_check_rejects_wrong_signature(seed_surface, generic_phi):
    m_sub, g_family, h_family, cert = _criterion_ingredients(
        seed_surface, generic_phi
    )
    wrong = diagonal_lattice([-2, -2, -2, -2])
    report = totaro_check(wrong, [], [], None)
    assert not report.signature_ok
    assert not report.verdict
