"""Subgeometries: closure checks, generated closure, normality, restriction."""
from itertools import product as cartesian
from typing import Iterable
from pasch_geometry.core.geometry import Geometry, SubsetHandle


def is_subgeometry(geometry: Geometry, subset: SubsetHandle) -> bool:
    """True iff e is in S and slice(s1, s2) stays inside S for all s1, s2 in S."""
    if not subset.contains_identity:
        return False
    members = set(subset.members)
    return all(
        members.issuperset(geometry.slice(s1, s2))
        for s1, s2 in cartesian(subset.members, repeat=2)
    )


def generated_subgeometry(geometry: Geometry, seed: Iterable[int]) -> SubsetHandle:
    """
    Smallest subgeometry containing seed, as a least fixed point.

    Closure under # comes for free: (e, s, s#) is in Δ.
    """
    members = set(seed) | {geometry.identity}
    frontier = set(members)
    while frontier:
        added: set[int] = set()
        for s1 in members:
            for s2 in frontier:
                added.update(geometry.slice(s1, s2))
                added.update(geometry.slice(s2, s1))
        frontier = added - members
        members |= frontier
    return SubsetHandle(geometry, tuple(members))


def is_normal(geometry: Geometry, subset: SubsetHandle) -> bool:
    """
    True iff (s, a, b) in Δ with s in S always has some s1 in S with (s1, b, a) in Δ.
    """
    members = set(subset.members)
    for s in subset.members:
        for a in range(geometry.size):
            for b in geometry.slice(s, a):
                if members.isdisjoint(geometry.delta.heads(b, a)):
                    return False
    return True


def subgeometry_as_geometry(subset: SubsetHandle, name: str | None = None) -> Geometry:
    """The relation restricted to S^3, with labels kept in parent order."""
    parent = subset.parent
    members = subset.members
    if not subset.contains_identity:
        raise ValueError("A subset without the identity does not carry a geometry")
    return Geometry(
        tuple(parent.label(i) for i in members),
        members.index(parent.identity),
        parent.delta.restrict(members),
        name,
    )
