"""Short-vector enumeration against independent brute-force oracles."""

import pytest

from helpers import (
    box_square_vectors,
    factored_square_vectors,
    negative_definite_from_factor,
    random_nonsingular,
)

from cuspcheck.enumeration import vectors_of_square
from cuspcheck.errors import InputError
from cuspcheck.lattice import diagonal_lattice, gram_lattice, hyperbolic_plane


def test_rank_one_root_lattice():
    res = vectors_of_square(gram_lattice([[-2]]), -2)
    assert res.complete
    assert res.representatives == ((-1,), (1,))


def test_a2_style_counts():
    a2 = gram_lattice([[-2, 1], [1, -2]])
    assert len(vectors_of_square(a2, -2).representatives) == 6
    assert len(vectors_of_square(a2, -4).representatives) == 0
    assert len(vectors_of_square(a2, -6).representatives) == 6


def test_rejects_indefinite_and_nonnegative_targets():
    with pytest.raises(InputError):
        vectors_of_square(hyperbolic_plane(), -2)
    with pytest.raises(InputError):
        vectors_of_square(gram_lattice([[-2]]), 2)
    with pytest.raises(InputError):
        vectors_of_square(gram_lattice([[2]]), -2)


def test_zero_lattice_has_radical_only():
    res = vectors_of_square(gram_lattice([[0, 0], [0, 0]]), -2)
    assert res.representatives == ()
    assert len(res.radical) == 2


def test_definite_enumeration_against_factored_oracle(rng):
    # acceptance suite property: 50 definite lattices of rank <= 4
    for _ in range(50):
        n = rng.randint(1, 4)
        b = random_nonsingular(rng, n)
        gram = negative_definite_from_factor(b)
        s = -2 * rng.randint(1, 4)
        got = sorted(vectors_of_square(gram_lattice(gram), s).representatives)
        want = factored_square_vectors(b, s)
        assert got == want


def test_definite_enumeration_against_box_oracle():
    # small diagonal cases where a safe box bound is immediate:
    # |s| >= min|d_i| v_i^2 for each i, so |v_i| <= sqrt(|s|/min|d|)
    for diag, s in [([-2, -4], -8), ([-2, -2, -2], -6), ([-6], -24)]:
        lat = diagonal_lattice(diag)
        box = int(abs(s) ** 0.5) + 1
        got = sorted(vectors_of_square(lat, s).representatives)
        assert got == box_square_vectors([list(r) for r in lat.gram], s, box)


def _is_radical_multiple(diff, rad):
    nz = [(d, r) for d, r in zip(diff, rad) if r != 0]
    if not nz:
        return all(d == 0 for d in diff)
    d0, r0 = nz[0]
    if d0 % r0 != 0:
        return False
    k = d0 // r0
    return all(d == k * r for d, r in zip(diff, rad))


def test_degenerate_enumeration_covers_all_cosets(seed_complement, seed_roots):
    # every actual square -2 vector in a box must land in rep + Z*radical
    lam = seed_complement.as_lattice()
    gram = [list(r) for r in lam.gram]
    rad = seed_roots.radical[0]
    reps = seed_roots.representatives
    found = box_square_vectors(gram, -2, 4)
    assert found  # the box really contains roots
    for v in found:
        diffs = ([x - y for x, y in zip(v, rep)] for rep in reps)
        assert any(_is_radical_multiple(d, rad) for d in diffs), v
