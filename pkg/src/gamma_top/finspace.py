"""Finite ground sets, bitmask subsets, and topologies on them.

A subset of the ground set is a plain int used as a bitmask: bit ``i`` set
means the point at position ``i`` belongs to the subset.  Families of
subsets are always reported in ascending mask order so that every derived
listing is reproducible run to run.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

MAX_POINTS = 16

# Exhaustive enumeration is only supported on very small ground sets.
MAX_ENUMERATION_POINTS = 4

DEFAULT_LABELS = ("a", "b", "c", "d")


class FinSpaceError(ValueError):
    """Base class for ground-set and topology failures."""


class UnknownPoint(FinSpaceError):
    pass


class SizeTooLarge(FinSpaceError):
    pass


class TopologyError(FinSpaceError):
    """A family of subsets fails the topology axioms."""


class MissingEmptyOrWhole(TopologyError):
    pass


class NotClosedUnderUnion(TopologyError):
    def __init__(self, ground: "PointSet", a: int, b: int):
        self.pair = (a, b)
        super().__init__(
            f"union of {ground.format(a)} and {ground.format(b)} is not in the family"
        )


class NotClosedUnderIntersection(TopologyError):
    def __init__(self, ground: "PointSet", a: int, b: int):
        self.pair = (a, b)
        super().__init__(
            f"intersection of {ground.format(a)} and {ground.format(b)} is not in the family"
        )


def bits_of(mask: int):
    """Yield the set bit positions of *mask* in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def submasks(mask: int):
    """Yield every submask of *mask* (including 0 and mask itself)."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class PointSet:
    """An ordered ground set of distinctly labelled points."""

    labels: tuple[str, ...]

    def __post_init__(self):
        if not isinstance(self.labels, tuple):
            object.__setattr__(self, "labels", tuple(self.labels))
        n = len(self.labels)
        if not 1 <= n <= MAX_POINTS:
            raise SizeTooLarge(f"ground set must have 1..{MAX_POINTS} points, got {n}")
        if any(not isinstance(lab, str) or not lab for lab in self.labels):
            raise FinSpaceError("point labels must be non-empty strings")
        if len(set(self.labels)) != n:
            raise FinSpaceError("point labels must be pairwise distinct")

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def _positions(self) -> dict:
        return {lab: i for i, lab in enumerate(self.labels)}

    def index(self, label: str) -> int:
        try:
            return self._positions[label]
        except KeyError:
            raise UnknownPoint(f"unknown point {label!r}") from None

    def mask_of(self, labels) -> int:
        mask = 0
        for lab in labels:
            mask |= 1 << self.index(lab)
        return mask

    def labels_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in bits_of(mask))

    def format(self, mask: int) -> str:
        return "{" + ",".join(self.labels_of(mask)) + "}"

    def subsets(self) -> range:
        return range(1 << self.n)

    def check_mask(self, mask: int) -> int:
        if not 0 <= mask <= self.full_mask:
            raise FinSpaceError(f"mask {mask:#x} does not fit a {self.n}-point ground set")
        return mask


@dataclass(frozen=True)
class Topology:
    """A validated family of open subsets over a ground set."""

    ground: PointSet
    opens: frozenset[int]
    _memo: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    @cached_property
    def opens_sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.opens))

    @cached_property
    def closed_sorted(self) -> tuple[int, ...]:
        full = self.ground.full_mask
        return tuple(sorted(full ^ u for u in self.opens))

    def is_open(self, mask: int) -> bool:
        return mask in self.opens


def validate_topology(ground: PointSet, family) -> Topology:
    """Check the finite topology axioms and return the validated Topology.

    Pairwise closure under union and intersection suffices: on a finite
    family, arbitrary unions reduce to iterated pairwise ones.
    """
    opens = set()
    for mask in family:
        ground.check_mask(mask)
        opens.add(mask)
    if 0 not in opens or ground.full_mask not in opens:
        raise MissingEmptyOrWhole("topology must contain the empty set and the whole set")
    members = sorted(opens)
    for a, b in itertools.combinations(members, 2):
        if a | b not in opens:
            raise NotClosedUnderUnion(ground, a, b)
        if a & b not in opens:
            raise NotClosedUnderIntersection(ground, a, b)
    return Topology(ground, frozenset(opens))


def interior(top: Topology, a: int) -> int:
    """Largest open subset of *a*: the union of all opens inside it."""
    top.ground.check_mask(a)
    memo = top._memo
    key = ("int", a)
    if key not in memo:
        result = 0
        for u in top.opens_sorted:
            if u & ~a == 0:
                result |= u
        memo[key] = result
    return memo[key]


def closure(top: Topology, a: int) -> int:
    """Smallest closed superset of *a*: the intersection of closed supersets."""
    top.ground.check_mask(a)
    memo = top._memo
    key = ("cl", a)
    if key not in memo:
        result = top.ground.full_mask
        for c in top.closed_sorted:
            if a & ~c == 0:
                result &= c
        memo[key] = result
    return memo[key]


def open_nbds(top: Topology, x: str) -> list[int]:
    """All opens containing the point labelled *x*, in ascending mask order."""
    bit = 1 << top.ground.index(x)
    return [u for u in top.opens_sorted if u & bit]


def _directed_preorders(n: int):
    """Yield directed-graph row tables of all preorders on n points.

    Row i is the mask of points reachable from i (including i).  Finite
    topologies correspond one-to-one to preorders: the opens are exactly
    the up-closed sets, so this is an enumeration route that is independent
    of any brute force over subset families.
    """
    row_choices = [[m for m in range(1 << n) if m & (1 << i)] for i in range(n)]
    for rows in itertools.product(*row_choices):
        transitive = True
        for i in range(n):
            reach = rows[i]
            for j in bits_of(rows[i]):
                if rows[j] & ~reach:
                    transitive = False
                    break
            if not transitive:
                break
        if transitive:
            yield rows


def _upsets(rows, n: int):
    opens = []
    for m in range(1 << n):
        ok = True
        for i in bits_of(m):
            if rows[i] & ~m:
                ok = False
                break
        if ok:
            opens.append(m)
    return tuple(opens)


def enumerate_topologies(n: int, labels=None):
    """Yield every labelled topology on *n* points exactly once.

    Topologies are produced in ascending order of their sorted open-set
    tuples, so enumeration indices are stable across runs.
    """
    if not 1 <= n <= MAX_ENUMERATION_POINTS:
        raise SizeTooLarge(
            f"exhaustive topology enumeration supports 1..{MAX_ENUMERATION_POINTS} points"
        )
    ground = PointSet(tuple(labels) if labels is not None else DEFAULT_LABELS[:n])
    if ground.n != n:
        raise FinSpaceError("label count does not match n")
    families = sorted(_upsets(rows, n) for rows in _directed_preorders(n))
    for fam in families:
        yield Topology(ground, frozenset(fam))
