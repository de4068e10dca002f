import pytest

from rgcodes.arith import GroupSpec
from rgcodes.chain_ring import parse_ring
from rgcodes.codes import (
    BudgetExceeded,
    CodeComponent,
    analyze_code,
    check_components,
    code_size,
    code_size_formula,
    component_dimension,
    enumerate_codewords,
    min_weight_exact,
    min_weight_formula,
    min_weight_lower_bound,
    min_weight_upper_bound,
    weight_probes,
)
from rgcodes.group_algebra import GroupAlgebra
from rgcodes.idempotents import primitive_family

C15 = GroupSpec((3, 5), (1, 1))
Z4 = parse_ring("z4")


def _component(spec, ring, block, split, k):
    rec = next(
        r for r in primitive_family(spec, ring)
        if r.block == block and r.split == split
    )
    return CodeComponent(rec.element, rec.block, rec.split, k)


def test_component_dimension():
    assert component_dimension(C15, (0, 0)) == 1
    assert component_dimension(C15, (1, 0)) == 2
    assert component_dimension(C15, (0, 1)) == 4
    assert component_dimension(C15, (1, 1)) == 4  # (2*4)/2 per split member
    spec45 = GroupSpec((3, 5), (2, 1))
    assert component_dimension(spec45, (2, 0)) == 6
    assert component_dimension(spec45, (2, 1)) == 12


def test_code_size_formula():
    # sizes 2^{(t-k) d} over z4 (t = 2)
    assert code_size_formula(C15, Z4, (0, 0), 0) == 4
    assert code_size_formula(C15, Z4, (0, 0), 1) == 2
    assert code_size_formula(C15, Z4, (1, 0), 0) == 16
    assert code_size_formula(C15, Z4, (0, 1), 0) == 256
    assert code_size_formula(C15, Z4, (1, 1), 0) == 256
    assert code_size_formula(C15, Z4, (1, 1), 2) == 1  # k = t: zero code


def test_enumeration_matches_formula():
    alg = GroupAlgebra(Z4, C15)
    for block, split in [((0, 0), None), ((1, 0), None), ((0, 1), None),
                         ((1, 1), "(1)"), ((1, 1), "(2)")]:
        for k in (0, 1):
            comp = _component(C15, Z4, block, split, k)
            words = enumerate_codewords(alg, [comp])
            assert len(words) == code_size_formula(C15, Z4, block, k)


def test_min_weights_formula_blocks():
    alg = GroupAlgebra(Z4, C15)
    want = {(0, 0): 15, (1, 0): 10, (0, 1): 6}
    for block, expected in want.items():
        assert min_weight_formula(C15, block) == expected
        for k in (0, 1):
            comp = _component(C15, Z4, block, None, k)
            got = min_weight_exact(alg, [comp])
            assert got[0] == expected
    assert min_weight_formula(C15, (1, 1)) is None


def test_split_code_frozen_values():
    """Two-index split code at n = 15: |C| = 256, exact weight 8 in [4, 10]."""
    alg = GroupAlgebra(Z4, C15)
    comp = _component(C15, Z4, (1, 1), "(1)", 0)
    rep = analyze_code(alg, [comp])
    assert rep.size == 256 and rep.size_method == "both-agree"
    assert rep.min_weight == 8 and rep.weight_method == "enumeration"
    assert rep.lower_bound == 4 and rep.upper_bound == 10
    assert rep.lower_bound_attained is False
    assert rep.witness is not None and rep.witness.weight() == 8
    assert rep.witness * comp.element == rep.witness  # witness is a codeword


def test_split_code_k1():
    alg = GroupAlgebra(Z4, C15)
    comp = _component(C15, Z4, (1, 1), "(1)", 1)
    rep = analyze_code(alg, [comp])
    assert rep.size == 16
    assert rep.min_weight == 8
    assert rep.upper_bound == 8  # the weight-8 probe survives at k = 1
    assert rep.lower_bound_attained is False


def test_lower_bound_rules():
    assert min_weight_lower_bound(C15, (1, 1), "(1)") == 4
    spec165 = GroupSpec((3, 5, 11), (1, 1, 1))
    assert min_weight_lower_bound(spec165, (1, 1, 1), "(1)") == 4
    assert min_weight_lower_bound(spec165, (1, 1, 0), "(2)") == 4 * 11
    with pytest.raises(ValueError):
        min_weight_lower_bound(C15, (1, 0), None)


def test_weight_probes_are_codewords():
    alg = GroupAlgebra(Z4, C15)
    for block, split in [((1, 0), None), ((0, 1), None), ((1, 1), "(1)")]:
        for k in (0, 1):
            comp = _component(C15, Z4, block, split, k)
            probes = weight_probes(alg, comp)
            assert probes  # at least the generator itself
            for probe in probes:
                assert not probe.is_zero()
                assert probe * comp.element == probe


def test_upper_bound_dominates_exact():
    alg = GroupAlgebra(Z4, C15)
    comp = _component(C15, Z4, (1, 1), "(1)", 0)
    bound, witness = min_weight_upper_bound(alg, comp)
    assert bound == 10
    assert witness.weight() == 10
    assert min_weight_exact(alg, [comp])[0] <= bound


def test_direct_sum():
    alg = GroupAlgebra(Z4, C15)
    c1 = _component(C15, Z4, (0, 1), None, 0)
    c2 = _component(C15, Z4, (1, 0), None, 1)
    assert code_size(alg, [c1, c2]) == 256 * 4
    rep = analyze_code(alg, [c1, c2])
    assert rep.size == 1024
    assert rep.min_weight == 6
    assert rep.min_component_weight == 6
    assert rep.sum_matches_component_min is True


def test_budget_gate():
    alg = GroupAlgebra(Z4, C15)
    comp = _component(C15, Z4, (0, 1), None, 0)  # 256 words
    with pytest.raises(BudgetExceeded) as exc:
        enumerate_codewords(alg, [comp], budget=100)
    assert exc.value.predicted == 256
    assert exc.value.budget == 100
    # analyze_code degrades to formula size + bounds instead of raising
    rep = analyze_code(alg, [comp], budget=100)
    assert rep.size == 256 and rep.size_method == "formula"
    assert rep.min_weight == 6 and rep.weight_method == "formula"


def test_zero_code_at_k_equals_t():
    alg = GroupAlgebra(Z4, C15)
    comp = _component(C15, Z4, (1, 0), None, 2)
    rep = analyze_code(alg, [comp])
    assert rep.size == 1
    assert rep.min_weight is None
    assert rep.weight_method == "undefined"
    words = enumerate_codewords(alg, [comp])
    assert len(words) == 1 and words.min_nonzero() is None


def test_component_validation():
    alg = GroupAlgebra(Z4, C15)
    c1 = _component(C15, Z4, (1, 0), None, 0)
    with pytest.raises(ValueError):
        CodeComponent(c1.element, (1, 0), None, 3)  # k > t
    with pytest.raises(ValueError):
        check_components(alg, [c1, c1])  # not orthogonal to itself
    not_idem = CodeComponent(alg.generator_power(0), (1, 0), None, 0)
    with pytest.raises(ValueError):
        check_components(alg, [not_idem])


def test_report_json_shape():
    alg = GroupAlgebra(Z4, C15)
    rep = analyze_code(alg, [_component(C15, Z4, (0, 0), None, 0)])
    d = rep.to_json_dict()
    for key in ("ring", "group", "components", "size", "size_method",
                "min_weight", "weight_method", "lower_bound", "upper_bound",
                "lower_bound_attained", "witness", "min_component_weight",
                "sum_matches_component_min"):
        assert key in d
    assert d["ring"] == "z4" and d["group"] == "3^1,5^1"
    assert d["size"] == 4 and d["min_weight"] == 15
