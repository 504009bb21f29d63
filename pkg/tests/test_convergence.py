import pytest

from gamma_top.convergence import (
    DirectedSet,
    EmptyMember,
    Filterbase,
    Net,
    NetError,
    NotDirected,
    _fb_accumulates,
    _fb_converges,
    chain,
    enumerate_directed_sets,
    enumerate_filterbases,
    enumerate_filters,
    enumerate_nets,
    fb_r_accumulates,
    fb_r_converges,
    filterbase_to_net,
    gamma_closed_space_conditions,
    is_maximal_filterbase,
    is_subordinate,
    is_universal_net,
    net_r_accumulates,
    net_r_converges,
    net_to_filterbase,
    validate_filterbase,
)
from gamma_top.finspace import PointSet, validate_topology
from gamma_top.gamma_core import GammaOperation, Space

ABC = PointSet(("a", "b", "c"))


def m(s):
    return ABC.mask_of(s)


def fb(*sets):
    return Filterbase(frozenset(m(s) for s in sets))


def test_validate_filterbase():
    assert validate_filterbase(ABC, [m("a")]).members == {m("a")}
    good = validate_filterbase(ABC, [m("ab"), m("bc"), m("b")])
    assert good.kernel == m("b")
    with pytest.raises(NotDirected) as err:
        validate_filterbase(ABC, [m("a"), m("b")])
    assert err.value.pair == (m("a"), m("b"))
    with pytest.raises(EmptyMember):
        validate_filterbase(ABC, [0])


def test_kernel_is_a_member_for_every_filterbase():
    for base in enumerate_filterbases(ABC):
        assert base.kernel in base.members
        assert base.kernel != 0


def test_filterbase_counts():
    assert len(enumerate_filterbases(PointSet(("a", "b")))) == 5
    assert len(enumerate_filterbases(ABC)) == 31
    assert len(list(enumerate_filters(ABC))) == 7


def test_subordination():
    assert is_subordinate(fb("a"), fb("ab"))
    base = fb("ab", "b")
    assert is_subordinate(base, base)
    assert not is_subordinate(fb("ab"), fb("a"))


def test_maximality():
    assert is_maximal_filterbase(ABC, fb("a"))
    assert not is_maximal_filterbase(ABC, fb("ab"))
    assert is_maximal_filterbase(ABC, fb("a", "ab"))


def test_fb_convergence_examples(example3_2):
    # singleton base at x converges to x in every space
    for x in "abc":
        assert fb_r_converges(example3_2, fb(x), x)
    assert not fb_r_converges(example3_2, fb("a"), "b")  # {b} is regular-open
    assert fb_r_accumulates(example3_2, fb("a"), "a")
    assert not fb_r_accumulates(example3_2, fb("a"), "b")


def test_everything_converges_when_regular_opens_are_trivial():
    top = validate_topology(ABC, [0, 7])
    sp = Space(ABC, top, GammaOperation("identity"))
    for base in enumerate_filterbases(ABC):
        for x in "abc":
            assert fb_r_converges(sp, base, x)


def test_convergence_implies_accumulation_over_all_bases(example3_2, example3_5):
    for sp in (example3_2, example3_5):
        for base in enumerate_filterbases(ABC):
            for x in "abc":
                if fb_r_converges(sp, base, x):
                    assert fb_r_accumulates(sp, base, x)


def test_fb_verdicts_factor_through_the_kernel(example3_2, example3_5):
    for sp in (example3_2, example3_5):
        for base in enumerate_filterbases(ABC):
            kernel = (base.kernel,)
            for xi in range(3):
                for family in ("regular_open", "gamma_open_cl"):
                    assert _fb_converges(sp, base.members, xi, family) == _fb_converges(
                        sp, kernel, xi, family
                    )
                    assert _fb_accumulates(sp, base.members, xi, family) == _fb_accumulates(
                        sp, kernel, xi, family
                    )


def test_directed_set_validation():
    with pytest.raises(NetError):
        DirectedSet(2, frozenset({(0, 0), (1, 1)}))  # no upper bound for {0,1}
    with pytest.raises(NetError):
        DirectedSet(2, frozenset({(0, 1), (1, 1)}))  # not reflexive at 0
    with pytest.raises(NetError):
        DirectedSet(3, frozenset({(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)}))  # not transitive


def test_net_convergence_examples(example3_2):
    constant = Net(chain(3), (0, 0, 0))
    assert net_r_converges(example3_2, constant, "a")
    eventually = Net(chain(3), (1, 0, 0))
    assert net_r_converges(example3_2, eventually, "a")
    two_step = Net(chain(2), (0, 1))  # a then b
    assert net_r_converges(example3_2, two_step, "b")


def test_net_accumulation_readings():
    top = validate_topology(ABC, range(8))
    sp = Space(ABC, top, GammaOperation("identity"))
    tied_top = DirectedSet(2, frozenset({(0, 0), (1, 1), (0, 1), (1, 0)}))
    alternating = Net(tied_top, (0, 1))
    assert net_r_accumulates(sp, alternating, "a")
    assert not net_r_accumulates(sp, alternating, "a", literal=True)


def test_net_to_filterbase_tails():
    two_step = Net(chain(2), (0, 1))
    assert net_to_filterbase(two_step).members == {m("ab"), m("b")}
    constant = Net(chain(3), (2, 2, 2))
    assert net_to_filterbase(constant).members == {m("c")}


def test_net_tails_always_validate(example3_2):
    for net in enumerate_nets(ABC, 3):
        tails = net_to_filterbase(net)
        validate_filterbase(ABC, tails.members)


def test_filterbase_to_net_shapes():
    single = filterbase_to_net(fb("a"))
    assert single.dirset.size == 1 and single.values == (0,)
    three = filterbase_to_net(fb("ab", "b"))
    assert three.dirset.size == 3
    # tails of the constructed net recover exactly the original members
    assert net_to_filterbase(three).members == {m("ab"), m("b")}


def test_universal_nets():
    constant = Net(chain(2), (0, 0))
    assert is_universal_net(ABC, constant)
    eventually = Net(chain(3), (1, 0, 0))
    assert is_universal_net(ABC, eventually)
    # with a tied top the net never settles, so its tail base is not maximal
    tied_top = DirectedSet(2, frozenset({(0, 0), (1, 1), (0, 1), (1, 0)}))
    assert not is_universal_net(ABC, Net(tied_top, (0, 1)))
    # a strict chain always settles at its last value
    assert is_universal_net(ABC, Net(chain(4), (0, 1, 0, 1)))


def test_directed_set_enumeration_counts():
    sizes = [d.size for d in enumerate_directed_sets(3)]
    assert sizes.count(1) == 1
    assert sizes.count(2) == 2
    assert sizes.count(3) == 5
    assert len(list(enumerate_nets(ABC, 3))) == 1 * 3 + 2 * 9 + 5 * 27


def test_space_conditions_all_hold(example3_2, example3_5):
    top = validate_topology(ABC, [0, 7])
    indiscrete = Space(ABC, top, GammaOperation("identity"))
    for sp in (example3_2, example3_5, indiscrete):
        conds = gamma_closed_space_conditions(sp)
        assert conds.all_hold(), conds
        assert gamma_closed_space_conditions(sp, "cl").as_tuple() == conds.as_tuple()


def test_space_conditions_unknown_mode(example3_2):
    with pytest.raises(ValueError):
        gamma_closed_space_conditions(example3_2, "weird")
