"""Surface models: toric seeds, blow-ups, boundary invariants."""

import pytest

from cuspcheck.errors import InputError
from cuspcheck.lattice import Signature, signature
from cuspcheck.surface import (
    blow_down,
    blow_down_with_embedding,
    boundary_complement,
    boundary_definiteness,
    fan_from_sequence,
    interior_blowup,
    surface_invariants,
    toric_from_sequence,
)


def test_projective_plane_from_triangle():
    s = toric_from_sequence((1, 1, 1))
    assert s.picard_rank == 1
    assert s.boundary_self_intersection() == 9
    assert signature(s.picard) == Signature(1, 0, 0)


def test_quadric_from_square():
    s = toric_from_sequence((0, 0, 0, 0))
    assert s.picard_rank == 2
    assert s.boundary_self_intersection() == 8
    assert s.self_intersections() == (0, 0, 0, 0)


def test_seed_sequence_invariants(seed_surface):
    plain = toric_from_sequence((-1, -2, -1, -1, -1, -1, -2))
    assert plain.picard_rank == 5
    assert plain.boundary_self_intersection() == 5
    assert signature(plain.picard) == Signature(1, 4, 0)
    # rank always satisfies rho = 10 - D.D
    assert plain.picard_rank == 10 - plain.boundary_self_intersection()
    assert seed_surface.picard_rank == 10 - seed_surface.boundary_self_intersection()


def test_fan_rejects_non_closing_sequences():
    with pytest.raises(InputError):
        fan_from_sequence((0, 0, 0))
    with pytest.raises(InputError):
        toric_from_sequence((1, 1, 1, 1, 1, 1))


def test_fan_rejects_too_short_sequences():
    with pytest.raises(InputError):
        toric_from_sequence((7, 7))


def test_interior_blowup_bookkeeping():
    s = toric_from_sequence((-1, -2, -1, -1, -1, -1, -2))
    t = interior_blowup(s, 2)
    assert t.picard_rank == s.picard_rank + 1
    # only the chosen component drops by one
    before = s.self_intersections()
    after = t.self_intersections()
    assert after[1] == before[1] - 1
    assert after[:1] == before[:1] and after[2:] == before[2:]
    # exceptional class: square -1, meets only component 2
    comp, e = t.history[-1]
    assert comp == 2
    assert t.picard.square(e) == -1
    assert [t.picard.pair(e, b) for b in t.boundary] == [0, 1, 0, 0, 0, 0, 0]


def test_interior_blowup_rejects_bad_component():
    s = toric_from_sequence((1, 1, 1))
    with pytest.raises(InputError):
        interior_blowup(s, 0)
    with pytest.raises(InputError):
        interior_blowup(s, 4)


def test_blowup_blowdown_roundtrip():
    s = toric_from_sequence((-1, -2, -1, -1, -1, -1, -2))
    t = interior_blowup(s, 3)
    back = blow_down(t, t.history[-1][1])
    assert back.picard.gram == s.picard.gram
    assert back.boundary == s.boundary
    assert back.self_intersections() == s.self_intersections()


def test_blow_down_embedding_transports_pairings(seed_surface):
    t = interior_blowup(seed_surface, 6)
    res = blow_down_with_embedding(t, t.history[-1][1])
    emb = res.embedding
    small = res.surface
    # the embedding rows realize the small lattice inside the big one
    for i, u in enumerate(emb):
        for j, v in enumerate(emb):
            assert t.picard.pair(u, v) == small.picard.gram[i][j]


def test_blow_down_rejects_non_exceptional_class():
    s = toric_from_sequence((-1, -2, -1, -1, -1, -1, -2))
    t = interior_blowup(s, 3)
    with pytest.raises(InputError):
        blow_down(t, t.boundary[0])


def test_boundary_complement_of_plane_is_trivial():
    s = toric_from_sequence((1, 1, 1))
    comp = boundary_complement(s)
    assert comp.sublattice.rank == 0
    assert comp.kernel_rank == 2


def test_boundary_complement_of_seed(seed_surface):
    comp = boundary_complement(seed_surface)
    assert comp.sublattice.rank == 3
    assert comp.kernel_rank == 0
    assert comp.sublattice.contains(seed_surface.boundary_sum())


def test_boundary_definiteness_classifications(seed_surface):
    all_minus_two = boundary_definiteness(seed_surface)
    assert all_minus_two.classification == "negative_semidefinite_degenerate"
    assert all_minus_two.radical_rank == 1
    assert all_minus_two.criterion_agrees is True

    tilde = interior_blowup(seed_surface, 6)
    negdef = boundary_definiteness(tilde)
    assert negdef.classification == "negative_definite"
    assert negdef.criterion_agrees is True


def test_boundary_definiteness_skips_cross_check_on_minus_one():
    s = toric_from_sequence((-1, -2, -1, -1, -1, -1, -2))
    out = boundary_definiteness(s)
    assert out.criterion_applicable is False
    assert out.criterion_agrees is None


def test_surface_invariants_shape(seed_surface):
    inv = surface_invariants(seed_surface)
    assert inv["picard_rank"] == 10
    assert inv["boundary_square"] == 0
    assert inv["components"] == 7
    assert inv["blowups"] == 5
    assert inv["self_intersections"] == [-2] * 7
