"""Subset classifiers: gamma-open/closed, regular-open/closed, clopen,
extremal disconnectedness, and the theta closure with its families."""

from __future__ import annotations

from dataclasses import dataclass

from .finspace import bits_of
from .gamma_core import Space, gamma_closure, gamma_interior
from .gamma_core import gamma_open_family as _core_gamma_open_family

FLAG_NAMES = (
    "open_tau",
    "gamma_open",
    "gamma_closed_dual",
    "gamma_closed_cl",
    "gamma_regular_open",
    "gamma_regular_closed",
    "gamma_clopen",
    "theta_open",
    "theta_closed",
)


def gamma_open_family(sp: Space) -> tuple[int, ...]:
    """The family of all gamma-open subsets, ascending."""
    return _core_gamma_open_family(sp)


def is_gamma_open(sp: Space, a: int) -> bool:
    return gamma_interior(sp, a) == a


def is_gamma_closed_dual(sp: Space, a: int) -> bool:
    """Closedness as openness of the complement."""
    sp.ground.check_mask(a)
    return is_gamma_open(sp, sp.ground.full_mask ^ a)


def is_gamma_closed_cl(sp: Space, a: int) -> bool:
    """Closedness as being a fixed point of gamma_closure."""
    return gamma_closure(sp, a) & ~a == 0


def is_gamma_regular_open(sp: Space, a: int) -> bool:
    return gamma_interior(sp, gamma_closure(sp, a)) == a


def is_gamma_regular_closed(sp: Space, a: int) -> bool:
    return gamma_closure(sp, gamma_interior(sp, a)) == a


def regular_open_family(sp: Space) -> tuple[int, ...]:
    memo = sp._memo
    if "regopen" not in memo:
        memo["regopen"] = tuple(
            m for m in sp.ground.subsets() if is_gamma_regular_open(sp, m)
        )
    return memo["regopen"]


def is_gamma_clopen(sp: Space, a: int) -> bool:
    """Simultaneously a fixed point of gamma_interior and gamma_closure."""
    return gamma_interior(sp, a) == a and gamma_closure(sp, a) == a


def is_extremally_disconnected(sp: Space) -> bool:
    """True iff the gamma-closure of every gamma-open set is gamma-open."""
    memo = sp._memo
    if "extdisc" not in memo:
        memo["extdisc"] = all(
            is_gamma_open(sp, gamma_closure(sp, u)) for u in gamma_open_family(sp)
        )
    return memo["extdisc"]


def _theta_env(sp: Space, use_tau_opens: bool):
    """Per point, the gamma-closures of its test-family neighbourhoods."""
    memo = sp._memo
    key = ("theta_env", use_tau_opens)
    if key not in memo:
        family = sp.top.opens_sorted if use_tau_opens else gamma_open_family(sp)
        env = []
        for i in range(sp.ground.n):
            bit = 1 << i
            env.append(tuple(gamma_closure(sp, u) for u in family if u & bit))
        memo[key] = tuple(env)
    return memo[key]


def gamma_theta_closure(sp: Space, a: int, *, use_tau_opens: bool = False) -> int:
    """Points x such that the gamma-closure of every gamma-open set at x
    meets *a*.  ``use_tau_opens`` swaps in plain opens as the test family,
    for discrepancy analysis only."""
    sp.ground.check_mask(a)
    memo = sp._memo
    key = ("thetacl", a, use_tau_opens)
    if key not in memo:
        env = _theta_env(sp, use_tau_opens)
        result = 0
        for i in range(sp.ground.n):
            for clu in env[i]:
                if clu & a == 0:
                    break
            else:
                result |= 1 << i
        memo[key] = result
    return memo[key]


def theta_families(sp: Space, *, use_tau_opens: bool = False):
    """(theta_closed, theta_open): fixed points of the theta closure and
    their complements, both ascending."""
    memo = sp._memo
    key = ("theta_families", use_tau_opens)
    if key not in memo:
        full = sp.ground.full_mask
        closed = tuple(
            m
            for m in sp.ground.subsets()
            if gamma_theta_closure(sp, m, use_tau_opens=use_tau_opens) == m
        )
        opened = tuple(sorted(full ^ m for m in closed))
        memo[key] = (closed, opened)
    return memo[key]


def is_theta_open(sp: Space, a: int) -> bool:
    full = sp.ground.full_mask
    return gamma_theta_closure(sp, full ^ a) == full ^ a


def is_theta_closed(sp: Space, a: int) -> bool:
    return gamma_theta_closure(sp, a) == a


@dataclass(frozen=True)
class SubsetClassification:
    subset: int
    flags: dict
    witnesses: dict


def _smallest_point(sp: Space, mask: int) -> str | None:
    for i in bits_of(mask):
        return sp.ground.labels[i]
    return None


def classify_subset(sp: Space, a: int) -> SubsetClassification:
    """All flags for one subset, with the smallest failing point recorded
    for every flag that comes out false."""
    sp.ground.check_mask(a)
    full = sp.ground.full_mask
    comp = full ^ a
    gi, gc = gamma_interior(sp, a), gamma_closure(sp, a)
    flags = {
        "open_tau": sp.top.is_open(a),
        "gamma_open": gi == a,
        "gamma_closed_dual": is_gamma_closed_dual(sp, a),
        "gamma_closed_cl": gc == a,
        "gamma_regular_open": is_gamma_regular_open(sp, a),
        "gamma_regular_closed": is_gamma_regular_closed(sp, a),
        "gamma_clopen": gi == a and gc == a,
        "theta_open": is_theta_open(sp, a),
        "theta_closed": is_theta_closed(sp, a),
    }
    from .finspace import interior as tau_interior

    fail_masks = {
        "open_tau": a ^ tau_interior(sp.top, a),
        "gamma_open": a ^ gi,
        "gamma_closed_dual": comp ^ gamma_interior(sp, comp),
        "gamma_closed_cl": gc ^ a,
        "gamma_regular_open": a ^ gamma_interior(sp, gc),
        "gamma_regular_closed": a ^ gamma_closure(sp, gi),
        "gamma_clopen": (a ^ gi) | (a ^ gc),
        "theta_open": comp ^ gamma_theta_closure(sp, comp),
        "theta_closed": a ^ gamma_theta_closure(sp, a),
    }
    witnesses = {}
    for name in FLAG_NAMES:
        if not flags[name]:
            point = _smallest_point(sp, fail_masks[name])
            if point is not None:
                witnesses[name] = point
    return SubsetClassification(subset=a, flags=flags, witnesses=witnesses)
