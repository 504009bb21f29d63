import pytest

from gamma_top.finspace import PointSet, closure, interior, validate_topology
from gamma_top.gamma_core import (
    GammaError,
    GammaNotExpansive,
    GammaOperation,
    InvalidOperation,
    NotAnOpenSet,
    Space,
    TableModeTooLarge,
    apply_gamma,
    enumerate_gamma_operations,
    gamma_closure,
    gamma_interior,
    is_open_operation,
    is_regular_operation,
    operations_for,
)

ABC = PointSet(("a", "b", "c"))


def m(s):
    return ABC.mask_of(s)


# hand-checked operator tables for the pivot-at-b space over
# opens {}, {a}, {b}, {a,b}, {a,c}, X
EXPECTED_3_2_INT = {
    "": "", "a": "", "b": "b", "c": "", "ab": "ab", "ac": "ac", "bc": "b", "abc": "abc",
}
EXPECTED_3_2_CL = {
    "": "", "a": "ac", "b": "b", "c": "c", "ab": "abc", "ac": "ac", "bc": "abc", "abc": "abc",
}


def test_apply_gamma_on_pivot_space(example3_2):
    assert apply_gamma(example3_2, m("ab")) == m("ab")
    assert apply_gamma(example3_2, m("a")) == m("ac")
    with pytest.raises(NotAnOpenSet):
        apply_gamma(example3_2, m("c"))


def test_identity_operation_reduces_to_classical():
    for opens in ([0, 7], [0, 1, 3, 7], [0, 1, 2, 3, 7]):
        top = validate_topology(ABC, opens)
        sp = Space(ABC, top, GammaOperation("identity"))
        for a in ABC.subsets():
            assert gamma_interior(sp, a) == interior(top, a)
            assert gamma_closure(sp, a) == closure(top, a)


def test_gamma_interior_values(example3_2):
    for s, expect in EXPECTED_3_2_INT.items():
        assert gamma_interior(example3_2, m(s)) == m(expect), s


def test_gamma_closure_values(example3_2):
    for s, expect in EXPECTED_3_2_CL.items():
        assert gamma_closure(example3_2, m(s)) == m(expect), s


def test_expansiveness_is_enforced():
    top = validate_topology(ABC, [0, 1, 7])
    bad = GammaOperation("table", table=((0, 0), (1, 2), (7, 7)))  # value misses {a}
    with pytest.raises(GammaNotExpansive) as err:
        Space(ABC, top, bad)
    assert err.value.open_mask == 1


def test_table_domain_must_match_opens():
    top = validate_topology(ABC, [0, 1, 7])
    with pytest.raises(InvalidOperation):
        Space(ABC, top, GammaOperation("table", table=((0, 0), (7, 7))))


def test_regular_and_open_flags(example3_2, example3_5, example3_17):
    assert not is_regular_operation(example3_2)
    assert is_open_operation(example3_2)
    assert is_regular_operation(example3_5)
    assert is_open_operation(example3_5)
    assert is_regular_operation(example3_17)
    assert is_open_operation(example3_17)


def test_identity_is_regular_and_open_everywhere():
    for opens in ([0, 7], [0, 1, 3, 7], list(range(8))):
        top = validate_topology(ABC, opens)
        sp = Space(ABC, top, GammaOperation("identity"))
        assert is_regular_operation(sp)
        assert is_open_operation(sp)


def test_indiscrete_space_flags():
    top = validate_topology(ABC, [0, 7])
    for op in enumerate_gamma_operations(top, "builtins"):
        sp = Space(ABC, top, op)
        assert is_regular_operation(sp)  # the only neighbourhood is X
    sp = Space(ABC, top, GammaOperation("closure"))
    assert is_open_operation(sp)


def test_builtins_mode_always_yields_three():
    for opens in ([0, 7], list(range(8))):
        top = validate_topology(ABC, opens)
        ops = list(enumerate_gamma_operations(top, "builtins"))
        assert [op.kind for op in ops] == ["identity", "closure", "int_closure"]


def test_pivots_mode_deduplicates_by_extension(example3_2):
    top = example3_2.top
    ops = list(enumerate_gamma_operations(top, "pivots"))
    assert 1 <= len(ops) <= 27  # 3 pivots x 9 branch pairs before dedup
    exts = [tuple(op.value_on(top, v) for v in top.opens_sorted) for op in ops]
    assert len(set(exts)) == len(exts)
    # the pivot-at-b id/cl operation itself is enumerated
    assert example3_2.extension in exts


def test_all_tables_count_matches_product_formula(example3_2):
    top = example3_2.top
    ops = list(enumerate_gamma_operations(top, "all_tables"))
    expect = 1
    for v in top.opens_sorted:
        expect *= 1 << (3 - bin(v).count("1"))
    assert expect == 512
    assert len(ops) == expect
    for op in ops[:50]:
        Space(ABC, top, op)  # expansive by construction


def test_all_tables_size_guard():
    ground = PointSet(("a", "b", "c", "d"))
    top = validate_topology(ground, [0, ground.full_mask])
    with pytest.raises(TableModeTooLarge):
        list(enumerate_gamma_operations(top, "all_tables"))


def test_unknown_mode():
    top = validate_topology(ABC, [0, 7])
    with pytest.raises(GammaError):
        list(enumerate_gamma_operations(top, "everything"))


def test_operations_for_deduplicates_across_modes():
    top = validate_topology(ABC, list(range(8)))  # discrete: builtins coincide
    ops = operations_for(top, ("builtins", "pivots"))
    exts = [tuple(op.value_on(top, v) for v in top.opens_sorted) for op in ops]
    assert len(set(exts)) == len(exts)
    assert len(ops) == 1  # closure and int-closure equal identity here


def test_pivot_branches_follow_membership(example3_17):
    # pivot b with in=cl, out=id over the six-open topology
    assert apply_gamma(example3_17, m("ab")) == m("abc")  # b inside: closure
    assert apply_gamma(example3_17, m("ac")) == m("ac")  # b outside: identity
