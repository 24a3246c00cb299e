"""Group construction, the spec DSL, subgroups, cosets, and axiom checking."""

from __future__ import annotations

import numpy as np
import pytest

from finharm import (
    ClosureExceedsCap,
    FiniteGroup,
    IndexOutOfRange,
    InvalidPermutation,
    OrderTooLarge,
    ParseError,
    Subgroup,
    UnsupportedParameter,
    build_from_permutations,
    enumerate_subgroups,
    make_named_group,
    subgroup_closure,
    verify_group_axioms,
)
from oracle_helpers import brute_classes, compose, element_orders, perm_list

# a Latin square with identity and two-sided inverses that is NOT associative
LOOP5 = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]

# a Latin square with identity whose left and right inverses disagree
ONE_SIDED5 = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 3, 4, 0, 1],
    [3, 4, 1, 2, 0],
    [4, 2, 0, 1, 3],
]


def test_cyclic_table_is_addition_mod_n():
    G = make_named_group("cyclic:4")
    assert G.mul_table.tolist() == [[(i + j) % 4 for j in range(4)] for i in range(4)]
    assert G.inv_table.tolist() == [0, 3, 2, 1]
    assert G.label == "cyclic:4"
    assert G.generators == (1,)


def test_symmetric_group_is_lex_ordered_composition():
    G = make_named_group("symmetric:3")
    perms = perm_list(3)
    index = {p: i for i, p in enumerate(perms)}
    expected = [
        [index[compose(perms[i], perms[j])] for j in range(6)] for i in range(6)
    ]
    assert G.mul_table.tolist() == expected


def test_symmetric_generators_are_transposition_and_cycle():
    G = make_named_group("symmetric:4")
    perms = perm_list(4)
    index = {p: i for i, p in enumerate(perms)}
    assert G.generators == (index[(1, 0, 2, 3)], index[(1, 2, 3, 0)])


def test_dihedral_matches_permutation_model():
    built = make_named_group("dihedral:4")
    model = make_named_group("perm:4:(0 1 2 3);(1 3)")
    assert built.order == model.order == 8
    assert element_orders(built) == element_orders(model)
    assert sorted(len(c) for c in built.classes) == sorted(len(c) for c in model.classes)


def test_quaternion_element_orders():
    G = make_named_group("quaternion")
    assert element_orders(G) == [1, 2, 4, 4, 4, 4, 4, 4]
    assert len(G.classes) == 5


def test_heisenberg_has_exponent_p():
    G = make_named_group("heisenberg:3")
    assert G.order == 27
    assert element_orders(G) == [1] + [3] * 26
    assert len(G.classes) == 11
    assert sorted(G.class_sizes.tolist()) == [1, 1, 1] + [3] * 8


def test_product_group_is_componentwise():
    G = make_named_group("product:cyclic:2*cyclic:4")
    assert G.order == 8
    # abelian: all singleton classes, table symmetric
    assert all(len(c) == 1 for c in G.classes)
    assert np.array_equal(G.mul_table, G.mul_table.T)
    assert element_orders(G) == [1, 2, 2, 2, 4, 4, 4, 4]
    # index convention (a, b) -> a*|B| + b
    assert G.mul(4, 1) == 5


def test_nested_product_parses_right_associatively():
    G = make_named_group("product:cyclic:2*product:cyclic:2*cyclic:2")
    assert G.order == 8
    assert element_orders(G) == [1] + [2] * 7


def test_perm_spec_builds_the_closure():
    G = make_named_group("perm:3:(0 1);(0 1 2)")
    assert G.order == 6
    S3 = make_named_group("symmetric:3")
    assert element_orders(G) == element_orders(S3)
    assert make_named_group("perm:4:(0 1 2 3)").order == 4
    assert make_named_group("perm:5:(0 1)").order == 2


@pytest.mark.parametrize(
    "bad",
    [
        "",
        "frobnicate:7",
        "cyclic:",
        "cyclic:x",
        "product:cyclic:2",
        "product:cyclic:2+cyclic:2",
        "perm:3:(0 1",
        "perm:3:",
        "cyclic:3junk",
        "quaternion:8",
    ],
)
def test_bad_specs_raise_parse_error(bad):
    with pytest.raises(ParseError):
        make_named_group(bad)


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as err:
        make_named_group("product:cyclic:2!cyclic:2")
    assert "position 16" in str(err.value)


@pytest.mark.parametrize(
    "spec", ["cyclic:0", "dihedral:0", "symmetric:0", "heisenberg:4", "heisenberg:1"]
)
def test_unsupported_parameters(spec):
    with pytest.raises(UnsupportedParameter):
        make_named_group(spec)


@pytest.mark.parametrize("spec", ["cyclic:4097", "symmetric:7", "product:cyclic:70*cyclic:70"])
def test_named_order_cap(spec):
    with pytest.raises(OrderTooLarge):
        make_named_group(spec)


@pytest.mark.parametrize("spec", ["perm:3:(0 3)", "perm:3:(0 0)", "perm:3:(1 1 2)"])
def test_bad_cycles_raise_invalid_permutation(spec):
    with pytest.raises(InvalidPermutation):
        make_named_group(spec)


def test_build_from_permutations_closure_cap():
    five_cycle = (1, 2, 3, 4, 0)
    with pytest.raises(ClosureExceedsCap):
        build_from_permutations(5, [five_cycle], order_cap=3)
    assert build_from_permutations(5, [five_cycle]).order == 5
    assert build_from_permutations(3, []).order == 1


def test_build_from_permutations_rejects_non_permutation():
    with pytest.raises(InvalidPermutation):
        build_from_permutations(3, [(0, 0, 1)])
    with pytest.raises(InvalidPermutation):
        build_from_permutations(3, [(0, 1)])


def test_constructor_rejects_malformed_tables():
    with pytest.raises(ValueError):
        FiniteGroup(np.zeros((2, 3), dtype=np.int64))
    with pytest.raises(ValueError):
        FiniteGroup([[1, 0], [0, 1]])  # 0 is not the identity
    with pytest.raises(ValueError):
        FiniteGroup([[0, 1], [1, 1]])  # row 1 not a bijection
    with pytest.raises(ValueError):
        FiniteGroup(ONE_SIDED5)  # left inverse of 3 is 2, right inverse is 4


def test_axiom_checker_accepts_corpus(corpus_groups):
    for G in corpus_groups.values():
        assert verify_group_axioms(G) is True


def test_axiom_checker_rejects_nonassociative_loop():
    # passes every constructor check (Latin, identity, two-sided inverses)
    G = FiniteGroup(LOOP5)
    with pytest.raises(ValueError, match="associativity"):
        verify_group_axioms(G)


def test_axiom_checker_chunked_path():
    assert verify_group_axioms(make_named_group("cyclic:200")) is True


def test_classes_match_brute_force(corpus_groups):
    for spec in ("symmetric:3", "quaternion", "dihedral:4", "heisenberg:3"):
        G = corpus_groups[spec]
        assert G.classes == brute_classes(G)


def test_s3_classes_frozen(s3):
    assert s3.classes == ((0,), (3, 4), (1, 2, 5))
    assert s3.class_reps.tolist() == [0, 3, 1]
    assert s3.class_sizes.tolist() == [1, 2, 3]
    assert s3.class_of.tolist() == [0, 2, 2, 1, 1, 2]


def test_mul_inv_bounds_checked(s3):
    with pytest.raises(IndexOutOfRange):
        s3.mul(0, 99)
    with pytest.raises(IndexOutOfRange):
        s3.inv(-1)
    with pytest.raises(IndexOutOfRange):
        FiniteGroup([[0]], generators=(5,))


def test_s3_subgroup_lattice_frozen(s3):
    subs = enumerate_subgroups(s3)
    assert [U.members for U in subs] == [
        (0,),
        (0, 1),
        (0, 2),
        (0, 5),
        (0, 3, 4),
        (0, 1, 2, 3, 4, 5),
    ]


def test_q8_subgroup_lattice_frozen(q8):
    subs = enumerate_subgroups(q8)
    assert [U.members for U in subs] == [
        (0,),
        (0, 1),
        (0, 1, 2, 3),
        (0, 1, 4, 5),
        (0, 1, 6, 7),
        (0, 1, 2, 3, 4, 5, 6, 7),
    ]


def test_subgroup_count_s4(corpus_groups):
    assert len(enumerate_subgroups(corpus_groups["symmetric:4"])) == 30


def test_subgroup_list_closed_under_conjugation(corpus_groups, sweep_specs):
    for spec in sweep_specs:
        G = corpus_groups[spec]
        member_sets = {U.members for U in enumerate_subgroups(G)}
        for members in member_sets:
            for g in range(G.order):
                conj = tuple(
                    sorted(G.mul(G.mul(g, m), G.inv(g)) for m in members)
                )
                assert conj in member_sets


def test_cosets_tile_the_group(s3, q8):
    for G in (s3, q8):
        for U in enumerate_subgroups(G):
            assert U.num_cosets * U.order == G.order
            seen: set[int] = set()
            for j, rep in enumerate(U.left_coset_reps):
                coset = {G.mul(u, rep) for u in U.members}
                assert len(coset) == U.order
                assert not (coset & seen)
                assert min(coset) == rep
                assert all(U.coset_of[x] == j for x in coset)
                seen |= coset
            assert seen == set(range(G.order))


def test_coset_reps_frozen_s3(s3):
    U = subgroup_closure(s3, [1])
    assert U.members == (0, 1)
    assert U.left_coset_reps == (0, 2, 3)


def test_subgroup_closure(s3):
    assert subgroup_closure(s3, []).members == (0,)
    assert subgroup_closure(s3, [3]).members == (0, 3, 4)
    assert subgroup_closure(s3, [1, 2]).members == (0, 1, 2, 3, 4, 5)
    with pytest.raises(IndexOutOfRange):
        subgroup_closure(s3, [17])


def test_subgroup_rejects_bad_member_sets(s3):
    with pytest.raises(ValueError, match="closed"):
        Subgroup(s3, [0, 3])  # 3*3 = 4 is missing
    with pytest.raises(ValueError, match="identity"):
        Subgroup(s3, [1])
    with pytest.raises(ValueError):
        Subgroup(s3, [])
    with pytest.raises(IndexOutOfRange):
        Subgroup(s3, [0, 9])


def test_subgroup_enumeration_caps():
    big = make_named_group("cyclic:49")
    with pytest.raises(OrderTooLarge):
        enumerate_subgroups(big)


def test_group_function_of_generators(corpus_groups):
    # declared generators actually generate
    for spec, G in corpus_groups.items():
        if G.order == 1:
            continue
        assert subgroup_closure(G, G.generators).order == G.order, spec
