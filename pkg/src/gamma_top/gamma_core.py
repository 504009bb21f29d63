"""Expansive operations on the open sets of a topology and the two
operators they induce.

An operation assigns to every open set V a superset V^g (expansiveness is
the one axiom).  From it we derive:

* ``gamma_interior(A)`` -- points of A with an open neighbourhood whose
  value lies inside A;
* ``gamma_closure(A)``  -- points all of whose open neighbourhoods have
  values meeting A.

Both are computed literally from their point-by-point definitions; the
duality between them is a checked property, not an implementation shortcut.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from .finspace import PointSet, Topology, bits_of, closure, interior

KINDS = ("identity", "closure", "int_closure", "pivot", "table")
BRANCHES = ("id", "cl", "intcl")


class GammaError(ValueError):
    """Base class for operation failures."""


class NotAnOpenSet(GammaError):
    pass


class GammaNotExpansive(GammaError):
    def __init__(self, ground: PointSet, open_mask: int, value_mask: int):
        self.open_mask = open_mask
        self.value_mask = value_mask
        super().__init__(
            f"value {ground.format(value_mask)} does not contain the open set "
            f"{ground.format(open_mask)}"
        )


class InvalidOperation(GammaError):
    pass


class TableModeTooLarge(GammaError):
    pass


@dataclass(frozen=True)
class GammaOperation:
    """One of five operation kinds.

    ``pivot`` applies *in_branch* to opens containing the pivot point and
    *out_branch* to the rest; branches are id, cl (closure) or intcl
    (interior of closure).  ``table`` lists an explicit value per open set.
    """

    kind: str
    pivot: str | None = None
    in_branch: str | None = None
    out_branch: str | None = None
    table: tuple[tuple[int, int], ...] | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidOperation(f"unknown operation kind {self.kind!r}")
        if self.kind == "pivot":
            if self.pivot is None or self.in_branch not in BRANCHES or self.out_branch not in BRANCHES:
                raise InvalidOperation("pivot operations need a pivot point and two branches")
        elif self.kind == "table":
            if not self.table:
                raise InvalidOperation("table operations need at least the empty set entry")
            object.__setattr__(self, "table", tuple(sorted(self.table)))
        else:
            if self.pivot is not None or self.in_branch is not None or self.out_branch is not None:
                raise InvalidOperation(f"{self.kind} operations take no extra fields")

    def value_on(self, top: Topology, v: int) -> int:
        """Raw value at the open set *v* (no expansiveness check here)."""
        if self.kind == "identity":
            return v
        if self.kind == "closure":
            return closure(top, v)
        if self.kind == "int_closure":
            return interior(top, closure(top, v))
        if self.kind == "pivot":
            branch = self.in_branch if v & (1 << top.ground.index(self.pivot)) else self.out_branch
            if branch == "id":
                return v
            if branch == "cl":
                return closure(top, v)
            return interior(top, closure(top, v))
        for open_mask, value in self.table:
            if open_mask == v:
                return value
        raise NotAnOpenSet(f"table has no entry for {top.ground.format(v)}")


@dataclass(frozen=True)
class Space:
    """Ground set, topology and operation: the context of every classifier."""

    ground: PointSet
    top: Topology
    gamma: GammaOperation

    def __post_init__(self):
        if self.top.ground != self.ground:
            raise GammaError("topology is defined over a different ground set")
        if self.gamma.kind == "table":
            domain = tuple(sorted(m for m, _ in self.gamma.table))
            if domain != self.top.opens_sorted:
                raise InvalidOperation("table domain must be exactly the open sets")
        values = {}
        for v in self.top.opens_sorted:
            value = self.gamma.value_on(self.top, v)
            self.ground.check_mask(value)
            if v & ~value:
                raise GammaNotExpansive(self.ground, v, value)
            values[v] = value
        object.__setattr__(self, "_values", values)
        object.__setattr__(self, "_memo", {})
        # per-point neighbourhood tables drive the two operators
        nbds = []
        for i in range(self.ground.n):
            bit = 1 << i
            nbds.append(tuple(values[u] for u in self.top.opens_sorted if u & bit))
        object.__setattr__(self, "_nbd_values", tuple(nbds))

    @property
    def extension(self) -> tuple[int, ...]:
        """Values over the sorted opens; two operations are the same map iff
        their extensions agree."""
        return tuple(self._values[v] for v in self.top.opens_sorted)


def apply_gamma(sp: Space, v: int) -> int:
    """Value of the operation at the open set *v*."""
    try:
        return sp._values[v]
    except KeyError:
        raise NotAnOpenSet(f"{sp.ground.format(v)} is not an open set") from None


def gamma_interior(sp: Space, a: int) -> int:
    """Points of *a* owning an open neighbourhood whose value lies inside *a*."""
    sp.ground.check_mask(a)
    memo = sp._memo
    key = ("gint", a)
    if key not in memo:
        result = 0
        for i in bits_of(a):
            for value in sp._nbd_values[i]:
                if value & ~a == 0:
                    result |= 1 << i
                    break
        memo[key] = result
    return memo[key]


def gamma_closure(sp: Space, a: int) -> int:
    """Points all of whose open neighbourhoods have values meeting *a*."""
    sp.ground.check_mask(a)
    memo = sp._memo
    key = ("gcl", a)
    if key not in memo:
        result = 0
        for i in range(sp.ground.n):
            for value in sp._nbd_values[i]:
                if value & a == 0:
                    break
            else:
                result |= 1 << i
        memo[key] = result
    return memo[key]


def gamma_open_family(sp: Space) -> tuple[int, ...]:
    """All fixed points of gamma_interior, ascending."""
    memo = sp._memo
    if "gopen" not in memo:
        memo["gopen"] = tuple(
            m for m in sp.ground.subsets() if gamma_interior(sp, m) == m
        )
    return memo["gopen"]


def is_regular_operation(sp: Space) -> bool:
    """True iff any two neighbourhood values are refined by a third:
    for every x and opens U, V at x there is an open W at x with
    value(W) inside value(U) & value(V)."""
    memo = sp._memo
    if "regular" not in memo:
        opens = sp.top.opens_sorted
        values = sp._values
        result = True
        for i in range(sp.ground.n):
            bit = 1 << i
            at_x = [u for u in opens if u & bit]
            for u, v in itertools.product(at_x, repeat=2):
                cap = values[u] & values[v]
                if not any(values[w] & ~cap == 0 for w in at_x):
                    result = False
                    break
            if not result:
                break
        memo["regular"] = result
    return memo["regular"]


def is_open_operation(sp: Space) -> bool:
    """True iff every neighbourhood value contains a gamma-open
    neighbourhood of the point."""
    memo = sp._memo
    if "open_op" not in memo:
        family = gamma_open_family(sp)
        result = True
        for i in range(sp.ground.n):
            bit = 1 << i
            for u in sp.top.opens_sorted:
                if not u & bit:
                    continue
                value = sp._values[u]
                if not any(b & bit and b & ~value == 0 for b in family):
                    result = False
                    break
            if not result:
                break
        memo["open_op"] = result
    return memo["open_op"]


def _supersets(v: int, full: int) -> list[int]:
    extra = full & ~v
    subs = []
    s = extra
    while True:
        subs.append(v | s)
        if s == 0:
            break
        s = (s - 1) & extra
    return sorted(subs)


def enumerate_gamma_operations(top: Topology, mode: str):
    """Stream candidate operations over *top* in a fixed order.

    builtins    -> the three named operations, always all three;
    pivots      -> every pivot point x branch pair, deduplicated by extension;
    all_tables  -> every expansive table (ground sets of at most 3 points).
    """
    if mode == "builtins":
        yield GammaOperation("identity")
        yield GammaOperation("closure")
        yield GammaOperation("int_closure")
        return
    if mode == "pivots":
        seen = set()
        for label in top.ground.labels:
            for in_b, out_b in itertools.product(BRANCHES, repeat=2):
                op = GammaOperation("pivot", pivot=label, in_branch=in_b, out_branch=out_b)
                ext = tuple(op.value_on(top, v) for v in top.opens_sorted)
                if ext not in seen:
                    seen.add(ext)
                    yield op
        return
    if mode == "all_tables":
        if top.ground.n > 3:
            raise TableModeTooLarge("table enumeration is limited to 3-point ground sets")
        full = top.ground.full_mask
        opens = top.opens_sorted
        per_open = [_supersets(v, full) for v in opens]
        for values in itertools.product(*per_open):
            yield GammaOperation("table", table=tuple(zip(opens, values)))
        return
    raise GammaError(f"unknown enumeration mode {mode!r}")


def operations_for(top: Topology, modes) -> list[GammaOperation]:
    """Concatenate several enumeration modes, deduplicating by extension."""
    seen = set()
    ops = []
    for mode in modes:
        for op in enumerate_gamma_operations(top, mode):
            ext = tuple(op.value_on(top, v) for v in top.opens_sorted)
            if ext not in seen:
                seen.add(ext)
                ops.append(op)
    return ops
