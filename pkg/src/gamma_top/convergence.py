"""Filterbases, nets, their convergence notions, and the five
cover/accumulation conditions a space can be probed with.

Filterbase convergence and accumulation test against gamma-regular-open
neighbourhoods; net convergence and accumulation test against
gamma-closures of gamma-open neighbourhoods.  Both test families are kept
available behind a mode switch because the two do not coincide in general;
the claim layer compares all pairings.
"""

from __future__ import annotations

import itertools
from dataclasses import InitVar, dataclass, field
from functools import cached_property, lru_cache

from .finspace import PointSet, bits_of
from .gamma_core import Space
from .gamma_sets import _theta_env, gamma_interior, gamma_closure, gamma_open_family, regular_open_family


class FilterbaseError(ValueError):
    pass


class EmptyMember(FilterbaseError):
    pass


class NotDirected(FilterbaseError):
    def __init__(self, ground: PointSet, f1: int, f2: int):
        self.pair = (f1, f2)
        super().__init__(
            f"no member is contained in {ground.format(f1)} & {ground.format(f2)}"
        )


class NetError(ValueError):
    pass


@dataclass(frozen=True)
class Filterbase:
    """A non-empty, downward-directed family of non-empty subsets."""

    members: frozenset[int]

    @property
    def members_sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    @property
    def kernel(self) -> int:
        """Intersection of all members.  Directedness on a finite family
        forces the kernel to be a member, and the smallest one."""
        out = None
        for m in self.members:
            out = m if out is None else out & m
        return out


def validate_filterbase(ground: PointSet, members) -> Filterbase:
    mems = []
    for m in members:
        ground.check_mask(m)
        if m == 0:
            raise EmptyMember("filterbase members must be non-empty")
        mems.append(m)
    if not mems:
        raise FilterbaseError("a filterbase needs at least one member")
    mset = set(mems)
    for f1, f2 in itertools.combinations(sorted(mset), 2):
        cap = f1 & f2
        if not any(f3 & ~cap == 0 for f3 in mset):
            raise NotDirected(ground, f1, f2)
    return Filterbase(frozenset(mset))


def is_subordinate(fine: Filterbase, coarse: Filterbase) -> bool:
    """True iff every member of *coarse* contains some member of *fine*."""
    return all(
        any(f & ~c == 0 for f in fine.members) for c in coarse.members
    )


def is_maximal_filterbase(ground: PointSet, fb: Filterbase) -> bool:
    """True iff the generated filter is an ultrafilter.  On a finite ground
    set that means: some singleton is a member and every member contains it."""
    for m in fb.members:
        if m & (m - 1) == 0:  # singleton
            if all(other & m for other in fb.members):
                return True
    return False


# -- filterbase convergence -------------------------------------------------

def _fb_test_sets(sp: Space, xi: int, family: str) -> tuple[int, ...]:
    if family == "regular_open":
        bit = 1 << xi
        return tuple(a for a in regular_open_family(sp) if a & bit)
    if family == "gamma_open_cl":
        return _theta_env(sp, False)[xi]
    raise ValueError(f"unknown test family {family!r}")


def _fb_converges(sp: Space, members, xi: int, family: str) -> bool:
    for a in _fb_test_sets(sp, xi, family):
        if not any(f & ~a == 0 for f in members):
            return False
    return True


def _fb_accumulates(sp: Space, members, xi: int, family: str) -> bool:
    for a in _fb_test_sets(sp, xi, family):
        if any(f & a == 0 for f in members):
            return False
    return True


def fb_r_converges(sp: Space, fb: Filterbase, x: str) -> bool:
    """Every regular-open neighbourhood of *x* contains a member."""
    return _fb_converges(sp, fb.members, sp.ground.index(x), "regular_open")


def fb_r_accumulates(sp: Space, fb: Filterbase, x: str) -> bool:
    """Every member meets every regular-open neighbourhood of *x*."""
    return _fb_accumulates(sp, fb.members, sp.ground.index(x), "regular_open")


# -- nets --------------------------------------------------------------------

@dataclass(frozen=True)
class DirectedSet:
    """A finite preorder in which every pair has an upper bound.

    ``leq`` holds pairs (i, j) meaning i <= j, reflexive pairs included.
    """

    size: int
    leq: frozenset[tuple[int, int]]
    validate: InitVar[bool] = True

    def __post_init__(self, validate: bool = True):
        if not validate:  # construction sites that guarantee the laws
            return
        rng = range(self.size)
        for i, j in self.leq:
            if i not in rng or j not in rng:
                raise NetError("relation mentions an element outside the index range")
        for i in rng:
            if (i, i) not in self.leq:
                raise NetError(f"relation is not reflexive at {i}")
        for i, j in self.leq:
            for k in rng:
                if (j, k) in self.leq and (i, k) not in self.leq:
                    raise NetError("relation is not transitive")
        for i in rng:
            for j in rng:
                if not any((i, k) in self.leq and (j, k) in self.leq for k in rng):
                    raise NetError(f"elements {i} and {j} have no upper bound")

    @cached_property
    def geq_masks(self) -> tuple[int, ...]:
        """Per element i, the bitmask of elements j with i <= j."""
        masks = [0] * self.size
        for i, j in self.leq:
            masks[i] |= 1 << j
        return tuple(masks)


def chain(size: int) -> DirectedSet:
    """The strict total order 0 <= 1 <= ... <= size-1."""
    pairs = {(i, j) for i in range(size) for j in range(i, size)}
    return DirectedSet(size, frozenset(pairs))


@dataclass(frozen=True)
class Net:
    """A map from a directed index set into the ground set (point positions)."""

    dirset: DirectedSet
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.dirset.size:
            raise NetError("a net needs one value per index element")


def _net_value_mask(net: Net, point_set_mask: int) -> int:
    ok = 0
    for i, p in enumerate(net.values):
        if point_set_mask >> p & 1:
            ok |= 1 << i
    return ok


def net_r_converges(sp: Space, net: Net, x: str) -> bool:
    """For every gamma-open U at x the net is eventually inside cl_g(U)."""
    xi = sp.ground.index(x)
    geq = net.dirset.geq_masks
    for clu in _theta_env(sp, False)[xi]:
        ok = _net_value_mask(net, clu)
        if not any(row & ~ok == 0 for row in geq):
            return False
    return True


def net_r_accumulates(sp: Space, net: Net, x: str, literal: bool = False) -> bool:
    """Cofinal reading by default: for every gamma-open U at x and every
    index there is a later index landing in cl_g(U).  The literal reading
    demands every index land in cl_g(U)."""
    xi = sp.ground.index(x)
    geq = net.dirset.geq_masks
    everything = (1 << net.dirset.size) - 1
    for clu in _theta_env(sp, False)[xi]:
        ok = _net_value_mask(net, clu)
        if literal:
            if ok != everything:
                return False
        else:
            if any(row & ok == 0 for row in geq):
                return False
    return True


def net_to_filterbase(net: Net) -> Filterbase:
    """The family of net tails { values[i] : i >= j }, one per index j."""
    tails = set()
    for row in net.dirset.geq_masks:
        tail = 0
        for i in bits_of(row):
            tail |= 1 << net.values[i]
        tails.add(tail)
    fb = Filterbase(frozenset(tails))
    # tails of a directed set are always directed; guard the construction
    for f1, f2 in itertools.combinations(tails, 2):
        assert any(f3 & ~(f1 & f2) == 0 for f3 in tails), "tail family not directed"
    return fb


@lru_cache(maxsize=None)
def filterbase_to_net(fb: Filterbase) -> Net:
    """The canonical net of a filterbase: index elements are pairs
    (point, member) with point in member, ordered by reverse member
    inclusion; the net value is the point."""
    elems = []
    for member in fb.members_sorted:
        for p in bits_of(member):
            elems.append((p, member))
    elems.sort(key=lambda e: (e[1], e[0]))
    pairs = set()
    for i, (_, fi) in enumerate(elems):
        for j, (_, fj) in enumerate(elems):
            if fj & ~fi == 0:
                pairs.add((i, j))
    # reflexivity and transitivity hold by construction; directedness
    # comes from fb's own directedness, so skip the cubic recheck
    dirset = DirectedSet(len(elems), frozenset(pairs), validate=False)
    return Net(dirset, tuple(p for p, _ in elems))


def is_universal_net(ground: PointSet, net: Net) -> bool:
    """Universality via the finite-space bridge: the tail filterbase is
    maximal."""
    return is_maximal_filterbase(ground, net_to_filterbase(net))


# -- enumerations ------------------------------------------------------------

def enumerate_filters(ground: PointSet):
    """One principal representative per generated filter: the filterbase
    {M} for each non-empty M.  Convergence verdicts depend only on the
    generated filter, so these representatives cover all filterbases."""
    for m in range(1, ground.full_mask + 1):
        yield Filterbase(frozenset((m,)))


@lru_cache(maxsize=None)
def enumerate_filterbases(ground: PointSet) -> tuple[Filterbase, ...]:
    """Every filterbase on the ground set.  A family of non-empty sets is
    directed exactly when it contains its own intersection, so bases are
    generated kernel-first."""
    full = ground.full_mask
    out = []
    for kernel in range(1, full + 1):
        extra = full & ~kernel
        proper_supersets = sorted(
            kernel | s for s in range(1, extra + 1) if s & ~extra == 0
        )
        for r in range(len(proper_supersets) + 1):
            for combo in itertools.combinations(proper_supersets, r):
                out.append(Filterbase(frozenset((kernel,) + combo)))
    return tuple(out)


def _labeled_directed_preorders(k: int):
    row_choices = [[m for m in range(1 << k) if m & (1 << i)] for i in range(k)]
    for rows in itertools.product(*row_choices):
        ok = True
        for i in range(k):
            for j in bits_of(rows[i]):
                if rows[j] & ~rows[i]:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        if all(rows[i] & rows[j] for i in range(k) for j in range(k)):
            yield rows


def _canonical_rows(rows, k: int):
    best = None
    for perm in itertools.permutations(range(k)):
        relabeled = [0] * k
        for i in range(k):
            m = 0
            for j in bits_of(rows[i]):
                m |= 1 << perm[j]
            relabeled[perm[i]] = m
        key = tuple(relabeled)
        if best is None or key < best:
            best = key
    return best


@lru_cache(maxsize=None)
def enumerate_directed_sets(max_size: int) -> tuple[DirectedSet, ...]:
    """Directed preorders with at most *max_size* elements, one per
    isomorphism class.  Net quantifications are invariant under relabelling
    the index set, so class representatives suffice."""
    out = []
    for k in range(1, max_size + 1):
        canon = sorted({_canonical_rows(rows, k) for rows in _labeled_directed_preorders(k)})
        for rows in canon:
            pairs = frozenset((i, j) for i in range(k) for j in bits_of(rows[i]))
            out.append(DirectedSet(k, pairs))
    return tuple(out)


def enumerate_nets(ground: PointSet, max_size: int = 3):
    """All nets over directed sets of at most *max_size* elements."""
    for dirset in enumerate_directed_sets(max_size):
        for values in itertools.product(range(ground.n), repeat=dirset.size):
            yield Net(dirset, values)


# -- the five space conditions ------------------------------------------------

@dataclass(frozen=True)
class GammaClosedConditions:
    """Independent verdicts for the five cover/accumulation conditions."""

    gamma_open_covers: bool
    closed_families_shrink: bool
    closed_families_contrapositive: bool
    filterbases_accumulate: bool
    maximal_filterbases_converge: bool
    witnesses: dict = field(compare=False)

    def as_tuple(self):
        return (
            self.gamma_open_covers,
            self.closed_families_shrink,
            self.closed_families_contrapositive,
            self.filterbases_accumulate,
            self.maximal_filterbases_converge,
        )

    def all_hold(self) -> bool:
        return all(self.as_tuple())


def _reachable(members, seed, combine):
    """All values taken by folding *combine* over subfamilies, with enough
    parent links to rebuild a witness subfamily for any value."""
    seen = {seed: None}
    order = [seed]
    qi = 0
    while qi < len(order):
        cur = order[qi]
        qi += 1
        for idx, item in enumerate(members):
            new = combine(cur, item)
            if new not in seen:
                seen[new] = (cur, idx)
                order.append(new)
    return seen, order


def _rebuild_subfamily(seen, value):
    idxs = set()
    while seen[value] is not None:
        prev, idx = seen[value]
        idxs.add(idx)
        value = prev
    return sorted(idxs)


def _gamma_closed_family(sp: Space, closedness: str) -> tuple[int, ...]:
    full = sp.ground.full_mask
    if closedness == "dual":
        return tuple(sorted(full ^ g for g in gamma_open_family(sp)))
    if closedness == "cl":
        return tuple(m for m in sp.ground.subsets() if gamma_closure(sp, m) & ~m == 0)
    raise ValueError(f"unknown closedness mode {closedness!r}")


def gamma_closed_space_conditions(sp: Space, closedness: str = "dual") -> GammaClosedConditions:
    """Decide the five conditions independently.

    (1) every gamma-open cover has a subfamily whose gamma-closures cover;
    (2) every gamma-closed family with empty intersection has a subfamily
        with empty intersection of gamma-interiors;
    (3) the contrapositive of (2);
    (4) every filterbase accumulates somewhere (one representative per
        generated filter);
    (5) every maximal filterbase converges somewhere.

    Inner existentials over subfamilies collapse to the full subfamily by
    monotonicity, which is what the reachable-value scans exploit; outer
    universals range over all subfamilies via their folded values.
    """
    full = sp.ground.full_mask
    ground = sp.ground
    witnesses = {}

    fam = gamma_open_family(sp)
    cl_of = [gamma_closure(sp, v) for v in fam]
    seen, order = _reachable(
        list(zip(fam, cl_of)), (0, 0), lambda cur, it: (cur[0] | it[0], cur[1] | it[1])
    )
    cond1 = True
    for union, cl_union in order:
        if union == full and cl_union != full:
            cond1 = False
            idxs = _rebuild_subfamily(seen, (union, cl_union))
            witnesses["gamma_open_covers"] = {
                "cover": [ground.labels_of(fam[i]) for i in idxs]
            }
            break

    closed = _gamma_closed_family(sp, closedness)
    int_of = [gamma_interior(sp, a) for a in closed]
    seen2, order2 = _reachable(
        list(zip(closed, int_of)),
        (full, full),
        lambda cur, it: (cur[0] & it[0], cur[1] & it[1]),
    )
    cond2 = True
    cond3 = True
    for inter, int_inter in order2:
        if inter == 0 and int_inter != 0 and cond2:
            cond2 = False
            idxs = _rebuild_subfamily(seen2, (inter, int_inter))
            witnesses["closed_families_shrink"] = {
                "family": [ground.labels_of(closed[i]) for i in idxs]
            }
        if int_inter != 0 and inter == 0 and cond3:
            cond3 = False
            idxs = _rebuild_subfamily(seen2, (inter, int_inter))
            witnesses["closed_families_contrapositive"] = {
                "family": [ground.labels_of(closed[i]) for i in idxs]
            }

    cond4 = True
    for kernel in range(1, full + 1):
        if not any(
            _fb_accumulates(sp, (kernel,), x, "regular_open") for x in range(ground.n)
        ):
            cond4 = False
            witnesses["filterbases_accumulate"] = {"kernel": ground.labels_of(kernel)}
            break

    cond5 = True
    for p in range(ground.n):
        singleton = 1 << p
        if not any(
            _fb_converges(sp, (singleton,), x, "regular_open") for x in range(ground.n)
        ):
            cond5 = False
            witnesses["maximal_filterbases_converge"] = {"point": ground.labels[p]}
            break

    return GammaClosedConditions(cond1, cond2, cond3, cond4, cond5, witnesses)
