"""Build the running example surface step by step.

Start from the toric surface whose boundary cycle has self-intersections
(-1,-2,-1,-1,-1,-1,-2), then blow up one interior point on each of five
components.  Watch the rank climb and the boundary squares drop until the
cycle is seven (-2)-components with square zero.
"""

from cuspcheck.surface import (
    boundary_definiteness,
    interior_blowup,
    surface_invariants,
    toric_from_sequence,
)

y = toric_from_sequence((-1, -2, -1, -1, -1, -1, -2))
print("seed:", surface_invariants(y))

for comp in (1, 3, 4, 5, 6):
    y = interior_blowup(y, comp)
    print(
        f"after blowup at component {comp}:",
        list(y.self_intersections()),
        "rank", y.picard_rank,
    )

print()
print("boundary square:", y.boundary_self_intersection())
bd = boundary_definiteness(y)
print("definiteness:", bd.classification, "| radical rank:", bd.radical_rank)
print("last exceptional class:", y.history[-1][1])
