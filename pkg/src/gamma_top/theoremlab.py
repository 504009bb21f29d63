"""Claim catalog and exhaustive verification machinery.

Every claim is a decidable statement about one finite space.  A claim
checker quantifies over the space's subsets, subset families, filterbases
or small nets and returns holds / fails-with-witness, or reports that the
space does not meet the claim's hypotheses.  Sweeps run claims over full
enumerations of (topology, operation) pairs; the miner searches the same
enumerations for named separations; the audits rebuild the four bundled
example spaces and diff their published families against recomputation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import documents
from .finspace import PointSet, SizeTooLarge, bits_of, enumerate_topologies, validate_topology
from .gamma_core import (
    GammaOperation,
    Space,
    gamma_closure,
    gamma_interior,
    is_open_operation,
    is_regular_operation,
    operations_for,
)
from .gamma_sets import (
    gamma_open_family,
    gamma_theta_closure,
    is_gamma_clopen,
    is_gamma_closed_cl,
    is_gamma_closed_dual,
    is_gamma_open,
    is_gamma_regular_open,
    is_extremally_disconnected,
    is_theta_closed,
    is_theta_open,
    regular_open_family,
    theta_families,
)
from .convergence import (
    _fb_accumulates,
    _fb_converges,
    enumerate_filterbases,
    enumerate_nets,
    filterbase_to_net,
    gamma_closed_space_conditions,
    is_universal_net,
    net_r_accumulates,
    net_r_converges,
    net_to_filterbase,
)


class UnknownPredicate(ValueError):
    pass


class UnknownExample(ValueError):
    pass


class UnknownClaim(ValueError):
    pass


# -- catalog -------------------------------------------------------------

@dataclass(frozen=True)
class Claim:
    id: str
    hypotheses: tuple[str, ...]
    statement: str


_CATALOG = (
    Claim("C-RO-INCL", (), "regular-open sets are gamma-open; gamma-open sets are open"),
    Claim("C-P3.4-FWD", (), "gamma-clopen implies gamma-regular-open"),
    Claim("C-P3.4-CONV", ("extremally_disconnected",), "gamma-regular-open implies gamma-clopen"),
    Claim("C-T3.6", (), "clopen implies cl.int-fixed implies complement regular-open"),
    Claim("C-T3.7", ("extremally_disconnected",), "complement regular-open implies regular-open implies clopen"),
    Claim("C-T3.8", ("extremally_disconnected",), "clopen, cl.int-fixed, complement regular-open and regular-open coincide"),
    Claim("C-T3.9-FWD", ("open_operation",), "if cl_g(A) is regular-open then A is gamma-open"),
    Claim("C-T3.9-CONV", ("open_operation", "extremally_disconnected"), "if A is gamma-open then cl_g(A) is regular-open"),
    Claim("C-C3.10", ("extremally_disconnected",), "cl_g(int_g(A)) is regular-open for every A"),
    Claim("C-P3.13-1", (), "the theta closure is monotone"),
    Claim("C-P3.13-2", (), "intersections of theta-closed families are theta-closed"),
    Claim("C-T3.14", ("open_operation", "extremally_disconnected"), "theta closure equals the meet of theta-closed supersets and of regular-open supersets"),
    Claim("C-T3.15-A", ("open_operation", "extremally_disconnected"), "theta-closure membership tests against regular-open neighbourhoods"),
    Claim("C-T3.15-B", ("open_operation", "extremally_disconnected"), "theta-open means every point has a regular-open neighbourhood inside"),
    Claim("C-T3.15-C", ("open_operation", "extremally_disconnected"), "regular-open coincides with theta-clopen"),
    Claim("C-CHAIN-RO-TO", (), "regular-open implies theta-open"),
    Claim("C-CHAIN-TO-GO", (), "theta-open implies gamma-open"),
    Claim("C-T4.3", (), "filterbase convergence implies accumulation"),
    Claim("C-T4.4", (), "accumulation passes from a subordinate filterbase to the coarser one"),
    Claim("C-T4.5", (), "for maximal filterbases accumulation and convergence coincide"),
    Claim("C-P4.7-EQ", (), "the five cover/accumulation conditions all hold"),
    Claim("C-P4.10", (), "net verdicts match tail-filterbase verdicts"),
    Claim("C-P4.11", (), "filterbase verdicts match constructed-net verdicts"),
    Claim("C-T4.13", (), "cover condition, net accumulation and universal-net convergence agree"),
)

CLAIMS = {c.id: c for c in _CATALOG}
CLAIM_IDS = tuple(c.id for c in _CATALOG)

SAFE_CLAIMS = (
    "C-RO-INCL",
    "C-T3.6",
    "C-P3.13-1",
    "C-P3.13-2",
    "C-T4.3",
    "C-T4.4",
    "C-T4.5",
    "C-P4.7-EQ",
)

CONDITIONED_CLAIMS = (
    "C-P3.4-CONV",
    "C-T3.7",
    "C-T3.8",
    "C-T3.9-FWD",
    "C-T3.9-CONV",
    "C-C3.10",
    "C-T3.14",
    "C-T3.15-A",
    "C-T3.15-B",
    "C-T3.15-C",
)

NET_SIZE_CAP = 3
NET_RESTRICTION_NOTE = (
    "nets quantified over directed sets with at most "
    f"{NET_SIZE_CAP} elements; universality via tail-filterbase maximality"
)


# -- space identity -------------------------------------------------------

@dataclass(frozen=True)
class SpaceKey:
    """Enough data to rebuild a space bit-exactly (operation as a table)."""

    points: tuple[str, ...]
    opens: tuple[int, ...]
    gamma_kind: str
    gamma_values: tuple[int, ...]

    def to_dict(self) -> dict:
        ground = PointSet(self.points)
        return {
            "points": list(self.points),
            "opens": [list(ground.labels_of(m)) for m in self.opens],
            "gamma": {
                "kind": self.gamma_kind,
                "values": [list(ground.labels_of(m)) for m in self.gamma_values],
            },
        }


def space_key(sp: Space) -> SpaceKey:
    return SpaceKey(
        points=sp.ground.labels,
        opens=sp.top.opens_sorted,
        gamma_kind=sp.gamma.kind,
        gamma_values=sp.extension,
    )


def rebuild_space(key: SpaceKey) -> Space:
    ground = PointSet(key.points)
    top = validate_topology(ground, key.opens)
    op = GammaOperation("table", table=tuple(zip(key.opens, key.gamma_values)))
    return Space(ground, top, op)


# -- verdicts -------------------------------------------------------------

@dataclass
class Verdict:
    claim_id: str
    space: SpaceKey
    status: str  # "holds" | "fails" | "hypotheses_not_met"
    witness: dict | None = None
    notes: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "claim": self.claim_id,
            "status": self.status,
            "space": self.space.to_dict(),
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.notes:
            out["notes"] = self.notes
        return out


@dataclass
class VerificationReport:
    verdicts: list
    discrepancies: list
    counts: dict

    def to_dict(self) -> dict:
        return {
            "verdicts": [v.to_dict() for v in self.verdicts],
            "discrepancies": self.discrepancies,
            "counts": self.counts,
        }


def _labels(sp: Space, mask: int) -> list:
    return list(sp.ground.labels_of(mask))


# -- claim checkers -------------------------------------------------------

def _check_ro_incl(sp: Space):
    for a in regular_open_family(sp):
        if not is_gamma_open(sp, a):
            return "fails", {"subset": _labels(sp, a), "part": "regular_open_not_gamma_open"}, {}
    for a in gamma_open_family(sp):
        if not sp.top.is_open(a):
            return "fails", {"subset": _labels(sp, a), "part": "gamma_open_not_open"}, {}
    return "holds", None, {}


def _check_p34_fwd(sp: Space):
    for a in sp.ground.subsets():
        if is_gamma_clopen(sp, a) and not is_gamma_regular_open(sp, a):
            return "fails", {"subset": _labels(sp, a)}, {}
    return "holds", None, {}


def _check_p34_conv(sp: Space):
    for a in sp.ground.subsets():
        if is_gamma_regular_open(sp, a) and not is_gamma_clopen(sp, a):
            return "fails", {"subset": _labels(sp, a)}, {}
    return "holds", None, {}


def _check_t36(sp: Space):
    full = sp.ground.full_mask
    for a in sp.ground.subsets():
        fixed = gamma_closure(sp, gamma_interior(sp, a)) == a
        if is_gamma_clopen(sp, a) and not fixed:
            return "fails", {"subset": _labels(sp, a), "part": "clopen_to_fixed"}, {}
        if fixed and not is_gamma_regular_open(sp, full ^ a):
            return "fails", {"subset": _labels(sp, a), "part": "fixed_to_complement_regular_open"}, {}
    return "holds", None, {}


def _check_t37(sp: Space):
    full = sp.ground.full_mask
    for a in sp.ground.subsets():
        if is_gamma_regular_open(sp, full ^ a) and not is_gamma_regular_open(sp, a):
            return "fails", {"subset": _labels(sp, a), "part": "complement_to_self"}, {}
        if is_gamma_regular_open(sp, a) and not is_gamma_clopen(sp, a):
            return "fails", {"subset": _labels(sp, a), "part": "regular_open_to_clopen"}, {}
    return "holds", None, {}


def _check_t38(sp: Space):
    full = sp.ground.full_mask
    for a in sp.ground.subsets():
        bools = (
            is_gamma_clopen(sp, a),
            gamma_closure(sp, gamma_interior(sp, a)) == a,
            is_gamma_regular_open(sp, full ^ a),
            is_gamma_regular_open(sp, a),
        )
        if len(set(bools)) > 1:
            return "fails", {
                "subset": _labels(sp, a),
                "clopen": bools[0],
                "cl_int_fixed": bools[1],
                "complement_regular_open": bools[2],
                "regular_open": bools[3],
            }, {}
    return "holds", None, {}


def _cl_idempotence_notes(sp: Space) -> dict:
    for a in sp.ground.subsets():
        c = gamma_closure(sp, a)
        if gamma_closure(sp, c) != c:
            return {"cl_gamma_idempotent": False, "idempotence_witness": _labels(sp, a)}
    return {"cl_gamma_idempotent": True}


def _check_t39_fwd(sp: Space):
    notes = _cl_idempotence_notes(sp)
    for a in sp.ground.subsets():
        if is_gamma_regular_open(sp, gamma_closure(sp, a)) and not is_gamma_open(sp, a):
            return "fails", {"subset": _labels(sp, a)}, notes
    return "holds", None, notes


def _check_t39_conv(sp: Space):
    notes = _cl_idempotence_notes(sp)
    for a in gamma_open_family(sp):
        if not is_gamma_regular_open(sp, gamma_closure(sp, a)):
            return "fails", {"subset": _labels(sp, a)}, notes
    return "holds", None, notes


def _check_c310(sp: Space):
    for a in sp.ground.subsets():
        if not is_gamma_regular_open(sp, gamma_closure(sp, gamma_interior(sp, a))):
            return "fails", {"subset": _labels(sp, a)}, {}
    return "holds", None, {}


def _check_p313_1(sp: Space):
    for b in sp.ground.subsets():
        tb = gamma_theta_closure(sp, b)
        a = b
        while True:
            if gamma_theta_closure(sp, a) & ~tb:
                return "fails", {"subset": _labels(sp, a), "superset": _labels(sp, b)}, {}
            if a == 0:
                break
            a = (a - 1) & b
    return "holds", None, {}


def _check_p313_2(sp: Space):
    closed, _ = theta_families(sp)
    full = sp.ground.full_mask
    # every subfamily intersection arises by folding one member at a time
    seen = {full: ()}
    frontier = [full]
    while frontier:
        cur = frontier.pop()
        for idx, m in enumerate(closed):
            new = cur & m
            if new not in seen:
                seen[new] = seen[cur] + (idx,)
                frontier.append(new)
    for value in sorted(seen):
        if gamma_theta_closure(sp, value) != value:
            return "fails", {
                "intersection": _labels(sp, value),
                "subfamily": [_labels(sp, closed[i]) for i in sorted(set(seen[value]))],
            }, {}
    return "holds", None, {}


def _check_t314(sp: Space):
    full = sp.ground.full_mask
    closed, _ = theta_families(sp)
    ro = regular_open_family(sp)
    for a in sp.ground.subsets():
        t = gamma_theta_closure(sp, a)
        meet_closed = full
        for v in closed:
            if a & ~v == 0:
                meet_closed &= v
        if t != meet_closed:
            return "fails", {
                "subset": _labels(sp, a),
                "part": "theta_closed_supersets",
                "theta_closure": _labels(sp, t),
                "meet": _labels(sp, meet_closed),
            }, {}
        meet_ro = full
        for v in ro:
            if a & ~v == 0:
                meet_ro &= v
        if t != meet_ro:
            return "fails", {
                "subset": _labels(sp, a),
                "part": "regular_open_supersets",
                "theta_closure": _labels(sp, t),
                "meet": _labels(sp, meet_ro),
            }, {}
    return "holds", None, {}


def _check_t315a(sp: Space):
    ro = regular_open_family(sp)
    for a in sp.ground.subsets():
        t = gamma_theta_closure(sp, a)
        for i in range(sp.ground.n):
            bit = 1 << i
            rhs = all(v & a for v in ro if v & bit)
            if bool(t & bit) != rhs:
                return "fails", {"subset": _labels(sp, a), "point": sp.ground.labels[i]}, {}
    return "holds", None, {}


def _check_t315b(sp: Space):
    ro = regular_open_family(sp)
    for a in sp.ground.subsets():
        rhs = all(
            any(v & (1 << i) and v & ~a == 0 for v in ro) for i in bits_of(a)
        )
        if is_theta_open(sp, a) != rhs:
            return "fails", {"subset": _labels(sp, a)}, {}
    return "holds", None, {}


def _check_t315c(sp: Space):
    for a in sp.ground.subsets():
        lhs = is_gamma_regular_open(sp, a)
        rhs = is_theta_open(sp, a) and is_theta_closed(sp, a)
        if lhs != rhs:
            return "fails", {"subset": _labels(sp, a)}, {}
    return "holds", None, {}


def _check_chain_ro_to(sp: Space):
    for a in regular_open_family(sp):
        if not is_theta_open(sp, a):
            return "fails", {"subset": _labels(sp, a)}, {}
    return "holds", None, {}


def _check_chain_to_go(sp: Space):
    _, opened = theta_families(sp)
    for a in opened:
        if not is_gamma_open(sp, a):
            return "fails", {"subset": _labels(sp, a)}, {}
    return "holds", None, {}


def _check_t43(sp: Space):
    # one representative filterbase per generated filter: verdicts factor
    # through the kernel, so this quantifies over all filterbases
    for kernel in range(1, sp.ground.full_mask + 1):
        for x in range(sp.ground.n):
            if _fb_converges(sp, (kernel,), x, "regular_open") and not _fb_accumulates(
                sp, (kernel,), x, "regular_open"
            ):
                return "fails", {
                    "filterbase": [_labels(sp, kernel)],
                    "point": sp.ground.labels[x],
                }, {}
    return "holds", None, {}


def _check_t44(sp: Space):
    full = sp.ground.full_mask
    for coarse in range(1, full + 1):
        fine = coarse
        while True:  # subordinate representatives have kernels inside coarse
            if fine:
                for x in range(sp.ground.n):
                    if _fb_accumulates(sp, (fine,), x, "regular_open") and not _fb_accumulates(
                        sp, (coarse,), x, "regular_open"
                    ):
                        return "fails", {
                            "coarse": [_labels(sp, coarse)],
                            "fine": [_labels(sp, fine)],
                            "point": sp.ground.labels[x],
                        }, {}
            if fine == 0:
                break
            fine = (fine - 1) & coarse
    return "holds", None, {}


def _check_t45(sp: Space):
    for p in range(sp.ground.n):
        singleton = 1 << p
        for x in range(sp.ground.n):
            acc = _fb_accumulates(sp, (singleton,), x, "regular_open")
            conv = _fb_converges(sp, (singleton,), x, "regular_open")
            if acc != conv:
                return "fails", {
                    "filterbase": [_labels(sp, singleton)],
                    "point": sp.ground.labels[x],
                    "accumulates": acc,
                    "converges": conv,
                }, {}
    return "holds", None, {}


def _check_p47(sp: Space):
    conds = gamma_closed_space_conditions(sp, "dual")
    notes = {"cl_mode_conditions": gamma_closed_space_conditions(sp, "cl").as_tuple()}
    if conds.all_hold():
        return "holds", None, notes
    for name, value in zip(
        (
            "gamma_open_covers",
            "closed_families_shrink",
            "closed_families_contrapositive",
            "filterbases_accumulate",
            "maximal_filterbases_converge",
        ),
        conds.as_tuple(),
    ):
        if not value:
            witness = {"condition": name}
            witness.update(conds.witnesses.get(name, {}))
            return "fails", witness, notes
    return "holds", None, notes


PAIRINGS = (
    "regular_open+standard",
    "regular_open+literal",
    "gamma_open_cl+standard",
    "gamma_open_cl+literal",
)
DEFAULT_PAIRING = "regular_open+standard"


def _net_witness(sp: Space, net, x: int, part: str) -> dict:
    return {
        "directed_set": {
            "size": net.dirset.size,
            "leq": sorted(net.dirset.leq),
        },
        "values": [sp.ground.labels[p] for p in net.values],
        "point": sp.ground.labels[x],
        "part": part,
    }


def bridge_pairings(sp: Space, max_dir_size: int = NET_SIZE_CAP) -> dict:
    """First mismatch witness per (test family, accumulation reading)
    pairing, for the net/tail-filterbase bridge and for the
    filterbase/constructed-net bridge."""
    memo = sp._memo
    key = ("bridge", max_dir_size)
    if key in memo:
        return memo[key]
    result = {p: {"C-P4.10": None, "C-P4.11": None} for p in PAIRINGS}

    for net in enumerate_nets(sp.ground, max_dir_size):
        members = net_to_filterbase(net).members_sorted
        for x in range(sp.ground.n):
            label = sp.ground.labels[x]
            net_conv = net_r_converges(sp, net, label)
            net_acc = {
                "standard": net_r_accumulates(sp, net, label),
                "literal": net_r_accumulates(sp, net, label, literal=True),
            }
            fb_conv = {
                fam: _fb_converges(sp, members, x, fam)
                for fam in ("regular_open", "gamma_open_cl")
            }
            fb_acc = {
                fam: _fb_accumulates(sp, members, x, fam)
                for fam in ("regular_open", "gamma_open_cl")
            }
            for pairing in PAIRINGS:
                if result[pairing]["C-P4.10"] is not None:
                    continue
                fam, reading = pairing.split("+")
                if fb_conv[fam] != net_conv:
                    result[pairing]["C-P4.10"] = _net_witness(sp, net, x, "convergence")
                elif fb_acc[fam] != net_acc[reading]:
                    result[pairing]["C-P4.10"] = _net_witness(sp, net, x, "accumulation")

    for fb in enumerate_filterbases(sp.ground):
        net = filterbase_to_net(fb)
        members = fb.members_sorted
        for x in range(sp.ground.n):
            label = sp.ground.labels[x]
            net_conv = net_r_converges(sp, net, label)
            net_acc = {
                "standard": net_r_accumulates(sp, net, label),
                "literal": net_r_accumulates(sp, net, label, literal=True),
            }
            fb_conv = {
                fam: _fb_converges(sp, members, x, fam)
                for fam in ("regular_open", "gamma_open_cl")
            }
            fb_acc = {
                fam: _fb_accumulates(sp, members, x, fam)
                for fam in ("regular_open", "gamma_open_cl")
            }
            for pairing in PAIRINGS:
                if result[pairing]["C-P4.11"] is not None:
                    continue
                fam, reading = pairing.split("+")
                witness = None
                if fb_conv[fam] != net_conv:
                    witness = {"part": "convergence"}
                elif fb_acc[fam] != net_acc[reading]:
                    witness = {"part": "accumulation"}
                if witness is not None:
                    witness.update(
                        {
                            "filterbase": [_labels(sp, m) for m in members],
                            "point": label,
                        }
                    )
                    result[pairing]["C-P4.11"] = witness

    memo[key] = result
    return result


def _pairing_notes(pairings: dict, prop: str) -> dict:
    return {
        "default_pairing": DEFAULT_PAIRING,
        "pairings": {
            name: ("holds" if data[prop] is None else "fails")
            for name, data in pairings.items()
        },
    }


def _check_p410(sp: Space):
    pairings = bridge_pairings(sp)
    witness = pairings[DEFAULT_PAIRING]["C-P4.10"]
    notes = _pairing_notes(pairings, "C-P4.10")
    if witness is None:
        return "holds", None, notes
    return "fails", witness, notes


def _check_p411(sp: Space):
    pairings = bridge_pairings(sp)
    witness = pairings[DEFAULT_PAIRING]["C-P4.11"]
    notes = _pairing_notes(pairings, "C-P4.11")
    if witness is None:
        return "holds", None, notes
    return "fails", witness, notes


def _check_t413(sp: Space):
    notes = {"restriction": NET_RESTRICTION_NOTE}
    covers = gamma_closed_space_conditions(sp, "dual").gamma_open_covers
    nets_accumulate = True
    acc_witness = None
    universal_converge = True
    uni_witness = None
    for net in enumerate_nets(sp.ground, NET_SIZE_CAP):
        labels = sp.ground.labels
        if nets_accumulate and not any(
            net_r_accumulates(sp, net, labels[x]) for x in range(sp.ground.n)
        ):
            nets_accumulate = False
            acc_witness = _net_witness(sp, net, 0, "no_accumulation_point")
        if universal_converge and is_universal_net(sp.ground, net):
            if not any(net_r_converges(sp, net, labels[x]) for x in range(sp.ground.n)):
                universal_converge = False
                uni_witness = _net_witness(sp, net, 0, "universal_net_does_not_converge")
        if not nets_accumulate and not universal_converge:
            break
    if covers == nets_accumulate == universal_converge:
        return "holds", None, notes
    witness = {
        "cover_condition": covers,
        "every_net_accumulates": nets_accumulate,
        "every_universal_net_converges": universal_converge,
    }
    for extra in (acc_witness, uni_witness):
        if extra is not None:
            witness["net"] = extra
            break
    return "fails", witness, notes


_CHECKERS = {
    "C-RO-INCL": _check_ro_incl,
    "C-P3.4-FWD": _check_p34_fwd,
    "C-P3.4-CONV": _check_p34_conv,
    "C-T3.6": _check_t36,
    "C-T3.7": _check_t37,
    "C-T3.8": _check_t38,
    "C-T3.9-FWD": _check_t39_fwd,
    "C-T3.9-CONV": _check_t39_conv,
    "C-C3.10": _check_c310,
    "C-P3.13-1": _check_p313_1,
    "C-P3.13-2": _check_p313_2,
    "C-T3.14": _check_t314,
    "C-T3.15-A": _check_t315a,
    "C-T3.15-B": _check_t315b,
    "C-T3.15-C": _check_t315c,
    "C-CHAIN-RO-TO": _check_chain_ro_to,
    "C-CHAIN-TO-GO": _check_chain_to_go,
    "C-T4.3": _check_t43,
    "C-T4.4": _check_t44,
    "C-T4.5": _check_t45,
    "C-P4.7-EQ": _check_p47,
    "C-P4.10": _check_p410,
    "C-P4.11": _check_p411,
    "C-T4.13": _check_t413,
}

_HYPOTHESIS_TESTS = {
    "open_operation": is_open_operation,
    "extremally_disconnected": is_extremally_disconnected,
}


def check_claim(sp: Space, claim_id: str) -> Verdict:
    try:
        claim = CLAIMS[claim_id]
    except KeyError:
        raise UnknownClaim(f"unknown claim {claim_id!r}") from None
    key = space_key(sp)
    unmet = [h for h in claim.hypotheses if not _HYPOTHESIS_TESTS[h](sp)]
    if unmet:
        return Verdict(claim_id, key, "hypotheses_not_met", None, {"unmet": unmet})
    status, witness, notes = _CHECKERS[claim_id](sp)
    return Verdict(claim_id, key, status, witness, notes)


# -- per-space report ------------------------------------------------------

def _space_discrepancies(sp: Space) -> list:
    out = []
    full = sp.ground.full_mask
    disagree = [
        m
        for m in sp.ground.subsets()
        if is_gamma_closed_dual(sp, m) != is_gamma_closed_cl(sp, m)
    ]
    out.append(
        {
            "kind": "closedness_definitions",
            "agree": not disagree,
            "agreement_rate": 1.0 - len(disagree) / (full + 1),
            "witness": _labels(sp, disagree[0]) if disagree else None,
        }
    )
    idem = _cl_idempotence_notes(sp)
    out.append(
        {
            "kind": "cl_gamma_idempotent",
            "holds": idem["cl_gamma_idempotent"],
            "witness": idem.get("idempotence_witness"),
        }
    )
    bad = [
        m
        for m in sp.ground.subsets()
        if gamma_closure(sp, m) & ~gamma_theta_closure(sp, m)
    ]
    out.append(
        {
            "kind": "cl_gamma_within_theta_closure",
            "holds": not bad,
            "witness": _labels(sp, bad[0]) if bad else None,
        }
    )
    return out


def run_suite(sp: Space, claim_ids=None) -> VerificationReport:
    """Check claims in catalog order on one space."""
    ids = CLAIM_IDS if claim_ids is None else tuple(claim_ids)
    verdicts = [check_claim(sp, cid) for cid in ids]
    counts = {
        "claims": len(verdicts),
        "holds": sum(v.status == "holds" for v in verdicts),
        "fails": sum(v.status == "fails" for v in verdicts),
        "hypotheses_not_met": sum(v.status == "hypotheses_not_met" for v in verdicts),
        "spaces": 1,
    }
    return VerificationReport(verdicts, _space_discrepancies(sp), counts)


# -- enumeration sweeps ----------------------------------------------------

def parse_modes(modes) -> tuple[str, ...]:
    if isinstance(modes, str):
        modes = modes.split(",")
    out = tuple(m.strip() for m in modes if m.strip())
    for m in out:
        if m not in ("builtins", "pivots", "all_tables"):
            raise ValueError(f"unknown operation mode {m!r}")
    return out


def enumerate_spaces(n: int, modes, topo_range=None):
    """Yield (topology_index, operation_index, space) over the enumeration,
    operations deduplicated by extension within each topology."""
    modes = parse_modes(modes)
    for ti, top in enumerate(enumerate_topologies(n)):
        if topo_range is not None and not topo_range[0] <= ti < topo_range[1]:
            continue
        for oi, op in enumerate(operations_for(top, modes)):
            yield ti, oi, Space(top.ground, top, op)


INVARIANT_NAMES = (
    "int_cl_duality",
    "int_gamma_contractive",
    "cl_gamma_extensive",
    "thetacl_extensive",
    "int_gamma_monotone",
    "cl_gamma_monotone",
    "thetacl_monotone",
    "regular_open_in_gamma_open",
    "gamma_open_in_opens",
    "theta_open_implies_gamma_open",
)


def check_invariants(sp: Space) -> list:
    """Structural laws every space must satisfy; returns violations."""
    full = sp.ground.full_mask
    bad = []

    def hit(name, **witness):
        bad.append({"invariant": name, "witness": witness})

    for a in sp.ground.subsets():
        comp = full ^ a
        gi, gc = gamma_interior(sp, a), gamma_closure(sp, a)
        if gi != full ^ gamma_closure(sp, comp):
            hit("int_cl_duality", subset=_labels(sp, a))
        if gi & ~a:
            hit("int_gamma_contractive", subset=_labels(sp, a))
        if a & ~gc:
            hit("cl_gamma_extensive", subset=_labels(sp, a))
        if a & ~gamma_theta_closure(sp, a):
            hit("thetacl_extensive", subset=_labels(sp, a))
    for b in sp.ground.subsets():
        a = b
        while True:
            if gamma_interior(sp, a) & ~gamma_interior(sp, b):
                hit("int_gamma_monotone", subset=_labels(sp, a), superset=_labels(sp, b))
            if gamma_closure(sp, a) & ~gamma_closure(sp, b):
                hit("cl_gamma_monotone", subset=_labels(sp, a), superset=_labels(sp, b))
            if gamma_theta_closure(sp, a) & ~gamma_theta_closure(sp, b):
                hit("thetacl_monotone", subset=_labels(sp, a), superset=_labels(sp, b))
            if a == 0:
                break
            a = (a - 1) & b
    gopen = set(gamma_open_family(sp))
    for a in regular_open_family(sp):
        if a not in gopen:
            hit("regular_open_in_gamma_open", subset=_labels(sp, a))
    for a in sorted(gopen):
        if not sp.top.is_open(a):
            hit("gamma_open_in_opens", subset=_labels(sp, a))
    for a in theta_families(sp)[1]:
        if a not in gopen:
            hit("theta_open_implies_gamma_open", subset=_labels(sp, a))
    return bad


@dataclass
class SweepReport:
    n: int
    modes: tuple
    claim_ids: tuple
    topologies: int
    spaces: int
    tallies: dict
    failures: list

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "modes": list(self.modes),
            "claims": list(self.claim_ids),
            "counts": {"topologies": self.topologies, "spaces": self.spaces},
            "tallies": self.tallies,
            "failures": [v.to_dict() for v in self.failures],
        }


@dataclass
class InvariantReport:
    n: int
    modes: tuple
    spaces: int
    violations: list
    stats: dict

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "modes": list(self.modes),
            "spaces": self.spaces,
            "violations": self.violations,
            "stats": self.stats,
        }


def full_sweep(n: int, modes, claim_ids, invariants: bool = True, topo_range=None):
    """One pass over the enumeration: claims plus, optionally, the
    structural invariants and the measured-only statistics."""
    modes = parse_modes(modes)
    ids = tuple(claim_ids)
    for cid in ids:
        if cid not in CLAIMS:
            raise UnknownClaim(f"unknown claim {cid!r}")
    tallies = {cid: {"holds": 0, "fails": 0, "hypotheses_not_met": 0} for cid in ids}
    failures = []
    violations = []
    stats = {
        "spaces": 0,
        "cl_gamma_idempotent_everywhere": 0,
        "cl_gamma_within_theta_closure_everywhere": 0,
        "closedness_definitions_agree_everywhere": 0,
    }
    topologies = set()
    spaces = 0
    for ti, oi, sp in enumerate_spaces(n, modes, topo_range):
        topologies.add(ti)
        spaces += 1
        for cid in ids:
            verdict = check_claim(sp, cid)
            tallies[cid][verdict.status] += 1
            if verdict.status == "fails":
                verdict.notes = dict(verdict.notes)
                verdict.notes["topology_index"] = ti
                verdict.notes["operation_index"] = oi
                failures.append(verdict)
        if invariants:
            for item in check_invariants(sp):
                item["space"] = space_key(sp).to_dict()
                item["topology_index"] = ti
                item["operation_index"] = oi
                violations.append(item)
            disc = {d["kind"]: d for d in _space_discrepancies(sp)}
            stats["spaces"] += 1
            stats["cl_gamma_idempotent_everywhere"] += disc["cl_gamma_idempotent"]["holds"]
            stats["cl_gamma_within_theta_closure_everywhere"] += disc[
                "cl_gamma_within_theta_closure"
            ]["holds"]
            stats["closedness_definitions_agree_everywhere"] += disc[
                "closedness_definitions"
            ]["agree"]
    claim_report = SweepReport(n, modes, ids, len(topologies), spaces, tallies, failures)
    inv_report = InvariantReport(n, modes, spaces, violations, stats) if invariants else None
    return claim_report, inv_report


@dataclass
class BridgeReport:
    n: int
    modes: tuple
    max_dir_size: int
    spaces: int
    pairings: dict
    satisfying: list

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "modes": list(self.modes),
            "max_dir_size": self.max_dir_size,
            "spaces": self.spaces,
            "pairings": self.pairings,
            "satisfying_pairings": self.satisfying,
        }


def bridge_report(n: int, modes=("builtins", "pivots"), max_dir_size: int = NET_SIZE_CAP) -> BridgeReport:
    """Evaluate the two bridge propositions under all four definitional
    pairings over the enumeration, collecting failure counts and witnesses."""
    modes = parse_modes(modes)
    pairings = {
        name: {
            "C-P4.10": {"failures": 0, "witnesses": []},
            "C-P4.11": {"failures": 0, "witnesses": []},
        }
        for name in PAIRINGS
    }
    spaces = 0
    for ti, oi, sp in enumerate_spaces(n, modes):
        spaces += 1
        per_space = bridge_pairings(sp, max_dir_size)
        for name in PAIRINGS:
            for prop in ("C-P4.10", "C-P4.11"):
                witness = per_space[name][prop]
                if witness is not None:
                    entry = pairings[name][prop]
                    entry["failures"] += 1
                    if len(entry["witnesses"]) < 3:
                        record = dict(witness)
                        record["space"] = space_key(sp).to_dict()
                        record["topology_index"] = ti
                        record["operation_index"] = oi
                        entry["witnesses"].append(record)
    satisfying = [
        name
        for name in PAIRINGS
        if pairings[name]["C-P4.10"]["failures"] == 0
        and pairings[name]["C-P4.11"]["failures"] == 0
    ]
    return BridgeReport(n, modes, max_dir_size, spaces, pairings, satisfying)


# -- mining ----------------------------------------------------------------

SEPARATIONS = {
    "gamma_open_not_regular_open": (is_gamma_open, is_gamma_regular_open),
    "theta_open_not_regular_open": (is_theta_open, is_gamma_regular_open),
    "gamma_open_not_theta_open": (is_gamma_open, is_theta_open),
    "regular_open_not_clopen": (is_gamma_regular_open, is_gamma_clopen),
    "regular_open_not_gamma_open": (is_gamma_regular_open, is_gamma_open),
}

PREDICATE_NAMES = tuple(sorted(SEPARATIONS)) + tuple(f"fails:{cid}" for cid in CLAIM_IDS)


@dataclass
class MinedWitness:
    topology_index: int
    operation_index: int
    space: Space
    witness: dict

    def to_dict(self) -> dict:
        return {
            "topology_index": self.topology_index,
            "operation_index": self.operation_index,
            "space": space_key(self.space).to_dict(),
            "witness": self.witness,
        }


def mine(n: int, op_mode, predicate: str, topo_range=None) -> list:
    """Search the (topology, operation) enumeration for a named separation
    or for failures of one claim.  An empty result certifies absence over
    the whole enumeration."""
    modes = parse_modes(op_mode)
    if not 1 <= n <= 4:
        raise SizeTooLarge("mining supports ground sets of 1..4 points")
    if "all_tables" in modes and n > 3:
        raise SizeTooLarge("table enumeration is limited to 3-point ground sets")
    claim_id = None
    if predicate.startswith("fails:"):
        claim_id = predicate[len("fails:"):]
        if claim_id not in CLAIMS:
            raise UnknownPredicate(f"unknown claim in predicate {predicate!r}")
    elif predicate not in SEPARATIONS:
        raise UnknownPredicate(
            f"unknown predicate {predicate!r}; known: {', '.join(PREDICATE_NAMES)}"
        )
    out = []
    for ti, oi, sp in enumerate_spaces(n, modes, topo_range):
        if claim_id is not None:
            verdict = check_claim(sp, claim_id)
            if verdict.status == "fails":
                out.append(MinedWitness(ti, oi, sp, verdict.witness))
            continue
        has, lacks = SEPARATIONS[predicate]
        for a in sp.ground.subsets():
            if has(sp, a) and not lacks(sp, a):
                out.append(MinedWitness(ti, oi, sp, {"subset": _labels(sp, a)}))
    return out


# -- example audits ---------------------------------------------------------

_EXAMPLE_DOCS = {
    "3.2": "example3_2",
    "3.5": "example3_5",
    "3.16": "example3_16",
    "3.17": "example3_17",
}

# families as printed in the worked examples these documents encode
_PRINTED = {
    "3.2": {
        "gamma_open": ((), ("b",), ("a", "b"), ("a", "c"), ("a", "b", "c")),
        "regular_open": ((), ("b",), ("a", "c"), ("a", "b", "c")),
    },
    "3.5": {
        "gamma_open": ((), ("a",), ("b",), ("a", "b"), ("a", "b", "c")),
        "regular_open": ((), ("a",), ("b",), ("a", "b"), ("a", "b", "c")),
    },
    "3.16": {
        "gamma_open": ((), ("b",), ("a", "b"), ("a", "c"), ("a", "b", "c")),
        "theta_open": ((), ("b",), ("a", "b"), ("a", "c"), ("a", "b", "c")),
        "regular_open": ((), ("b",), ("a", "c"), ("a", "b", "c")),
    },
    "3.17": {
        "gamma_open": ((), ("a",), ("a", "c"), ("a", "b", "c")),
        "theta_open": ((), ("a", "c"), ("a", "b", "c")),
    },
}

_QUALITATIVE = {
    "3.2": ("gamma_open_not_regular_open", ("a", "b")),
    "3.5": ("regular_open_not_clopen", ("a",)),
    "3.16": ("theta_open_not_regular_open", ("a", "b")),
    "3.17": ("gamma_open_not_theta_open", ("a",)),
}

_FAMILY_FNS = {
    "gamma_open": gamma_open_family,
    "regular_open": regular_open_family,
    "theta_open": lambda sp: theta_families(sp)[1],
}


@dataclass
class FamilyDiff:
    name: str
    printed: list
    recomputed: list
    match: bool
    missing_from_printed: list
    spurious_in_printed: list

    def to_dict(self) -> dict:
        return {
            "family": self.name,
            "printed": self.printed,
            "recomputed": self.recomputed,
            "match": self.match,
            "missing_from_printed": self.missing_from_printed,
            "spurious_in_printed": self.spurious_in_printed,
        }


@dataclass
class ExampleAudit:
    example: str
    space: SpaceKey
    families: list
    qualitative: dict
    flags: dict

    def to_dict(self) -> dict:
        return {
            "example": self.example,
            "space": self.space.to_dict(),
            "families": [f.to_dict() for f in self.families],
            "qualitative": self.qualitative,
            "flags": self.flags,
        }


def audit_example(which: str) -> ExampleAudit:
    """Rebuild one bundled example space, recompute every family it prints,
    diff against the printed family, and re-evaluate its separation claim
    from the recomputed data."""
    if which not in _EXAMPLE_DOCS:
        raise UnknownExample(f"unknown example {which!r}; known: 3.2, 3.5, 3.16, 3.17")
    sp = documents.load_bundled(_EXAMPLE_DOCS[which])
    diffs = []
    for name, printed in _PRINTED[which].items():
        printed_masks = sorted(sp.ground.mask_of(t) for t in printed)
        recomputed = list(_FAMILY_FNS[name](sp))
        diffs.append(
            FamilyDiff(
                name=name,
                printed=[_labels(sp, m) for m in printed_masks],
                recomputed=[_labels(sp, m) for m in recomputed],
                match=printed_masks == recomputed,
                missing_from_printed=[
                    _labels(sp, m) for m in recomputed if m not in printed_masks
                ],
                spurious_in_printed=[
                    _labels(sp, m) for m in printed_masks if m not in recomputed
                ],
            )
        )
    sep_name, printed_witness = _QUALITATIVE[which]
    has, lacks = SEPARATIONS[sep_name]
    wmask = sp.ground.mask_of(printed_witness)
    witness_valid = has(sp, wmask) and not lacks(sp, wmask)
    recomputed_witnesses = [
        _labels(sp, a)
        for a in sp.ground.subsets()
        if has(sp, a) and not lacks(sp, a)
    ]
    qualitative = {
        "separation": sep_name,
        "printed_witness": list(printed_witness),
        "printed_witness_valid": witness_valid,
        "recomputed_witnesses": recomputed_witnesses,
        "supported_in_space": bool(recomputed_witnesses),
    }
    flags = {
        "extremally_disconnected": is_extremally_disconnected(sp),
        "regular_operation": is_regular_operation(sp),
        "open_operation": is_open_operation(sp),
    }
    return ExampleAudit(which, space_key(sp), diffs, qualitative, flags)
