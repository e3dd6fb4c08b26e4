from __future__ import annotations

import pytest

from recindex.axioms import (
    SATISFIED,
    VIOLATED,
    AxiomId,
    AxiomVerdict,
    CITATION_COUNT,
    CHI,
    H,
    REC,
    check_axiom,
    chi_increment_bound,
    counterexample_registry,
    expected_independence_pattern,
    independence_matrix,
    make_index,
    pattern_mismatches,
    replay_counterexample,
)
from recindex.core import TOLERANCE, citation_count, dominates, scale
from recindex.enumeration import DomainBudgetError, DomainSpec, enumerate_vectors

DOMAIN = (4, 4)


def _registry():
    return {index.name: index for index in counterexample_registry()}


def test_make_index_enforces_zero_baseline():
    with pytest.raises(ValueError, match="empty vector"):
        make_index("shifted", lambda v: len(v) + 1)
    ok = make_index("len", lambda v: len(v))
    assert ok.evaluate((5, 2)) == 2


def test_registry_names_and_order():
    assert [i.name for i in counterexample_registry()] == [
        "avg_rec_citation",
        "h_squared",
        "publication_count",
        "max_citation",
        "max_n_x1",
        "min_n_x1",
        "n_times_min",
        "rec",
    ]


def test_axiom_ids_are_closed_and_described():
    assert len(AxiomId) == 13
    assert {a.value for a in AxiomId} == {
        "M", "SM", "SI", "SC", "RC", "UC", "UE", "CI", "UM", "USC", "UI",
        "RANK_IND", "RANK_SI",
    }


def test_check_axiom_accepts_string_ids_and_tuple_domains():
    verdict = check_axiom(REC, "M", DOMAIN)
    assert verdict.ok
    assert verdict.status == SATISFIED
    assert (verdict.n_max, verdict.c_max, verdict.exhaustive) == (4, 4, True)


# ---------------------------------------------------------------------------
# pinned verdicts and first-in-order witnesses
# ---------------------------------------------------------------------------


def test_rec_verdicts_across_all_axioms():
    passing = {"M", "SI", "SC", "RC", "UC", "UE", "CI", "UM", "USC", "UI", "RANK_SI"}
    for axiom in AxiomId:
        verdict = check_axiom(REC, axiom, DOMAIN)
        assert verdict.ok == (axiom.value in passing), axiom


def test_rec_strict_monotonicity_witness():
    verdict = check_axiom(REC, "SM", DOMAIN)
    assert verdict.status == VIOLATED
    assert verdict.counterexample["x"] == (2,)
    assert verdict.counterexample["y"] == (2, 1)
    assert replay_counterexample(verdict, REC)


def test_avg_rec_citation_fails_uniform_equivalence_at_2_1():
    index = _registry()["avg_rec_citation"]
    verdict = check_axiom(index, "UE", DOMAIN)
    assert verdict.status == VIOLATED
    ce = verdict.counterexample
    assert ce["x"] == (2, 1)
    assert ce["f_x"] == pytest.approx(2.5)
    assert [tuple(u) for u, _ in ce["candidates"]] == [(), (1,), (2,), (1, 1)]
    assert [value for _, value in ce["candidates"]] == [0, 1, 2, 2]
    assert replay_counterexample(verdict, index)


def test_h_squared_fails_uniform_citation_at_2():
    index = _registry()["h_squared"]
    verdict = check_axiom(index, "UC", DOMAIN)
    assert verdict.status == VIOLATED
    assert verdict.counterexample == {"x": (2,), "f_x": 1, "citation_count": 2}
    assert replay_counterexample(verdict, index)


def test_max_citation_fails_uniform_citation_at_1_1():
    index = _registry()["max_citation"]
    verdict = check_axiom(index, "UC", DOMAIN)
    assert verdict.status == VIOLATED
    assert verdict.counterexample["x"] == (1, 1)


def test_max_n_x1_fails_uniform_citation_at_2_2():
    index = _registry()["max_n_x1"]
    verdict = check_axiom(index, "UC", DOMAIN)
    assert verdict.status == VIOLATED
    assert verdict.counterexample["x"] == (2, 2)


def test_n_times_min_fails_monotonicity_with_shrinking_minimum():
    index = _registry()["n_times_min"]
    verdict = check_axiom(index, "M", DOMAIN)
    assert verdict.status == VIOLATED
    ce = verdict.counterexample
    assert (ce["x"], ce["y"]) == ((3,), (3, 1))
    assert (ce["f_x"], ce["f_y"]) == (3, 2)
    assert replay_counterexample(verdict, index)


def test_min_n_x1_fails_uniform_equivalence_despite_passing_elsewhere():
    # min(n, x1) keeps monotonicity but <2,1> scores 2 while every
    # dominated uniform vector scores at most 1
    index = _registry()["min_n_x1"]
    verdict = check_axiom(index, "UE", DOMAIN)
    assert verdict.status == VIOLATED
    assert verdict.counterexample["x"] == (2, 1)
    assert replay_counterexample(verdict, index)
    assert check_axiom(index, "M", DOMAIN).ok
    assert not check_axiom(index, "UC", DOMAIN).ok


def test_citation_count_keeps_the_rank_properties():
    for axiom in ("SM", "RANK_IND", "RANK_SI"):
        assert check_axiom(CITATION_COUNT, axiom, DOMAIN).ok


def test_h_fails_rank_scale_invariance():
    verdict = check_axiom(H, "RANK_SI", DOMAIN)
    assert verdict.status == VIOLATED
    assert replay_counterexample(verdict, H)


def test_rec_and_chi_fail_rank_independence_and_replay():
    for index in (REC, CHI):
        verdict = check_axiom(index, "RANK_IND", DOMAIN)
        assert verdict.status == VIOLATED
        assert replay_counterexample(verdict, index)


def test_citation_count_uniform_increment_absence_witness():
    verdict = check_axiom(CITATION_COUNT, "UI", (3, 3))
    assert verdict.status == VIOLATED
    assert verdict.counterexample["target"] == (2, 1)
    assert replay_counterexample(verdict, CITATION_COUNT)


def test_replay_returns_false_for_clean_verdicts():
    verdict = check_axiom(REC, "M", DOMAIN)
    assert replay_counterexample(verdict, REC) is False


# ---------------------------------------------------------------------------
# independence matrix
# ---------------------------------------------------------------------------


def test_independence_matrix_shape_and_exhaustiveness():
    matrix = independence_matrix(DOMAIN)
    assert set(matrix) == set(expected_independence_pattern())
    for row in matrix.values():
        assert set(row) == {"M", "UC", "UE"}
        assert all(v.exhaustive for v in row.values())


def test_independence_matrix_matches_documented_pattern_except_one_cell():
    matrix = independence_matrix(DOMAIN)
    mismatches = pattern_mismatches(matrix)
    assert len(mismatches) == 1
    name, axiom, want, verdict = mismatches[0]
    assert (name, axiom) == ("min_n_x1", "UE")
    assert want == SATISFIED
    assert verdict.status == VIOLATED
    assert verdict.counterexample["x"] == (2, 1)


def test_registry_rows_isolate_the_three_core_properties():
    matrix = independence_matrix(DOMAIN)
    profiles = {
        name: tuple(row[a].status for a in ("M", "UC", "UE"))
        for name, row in matrix.items()
    }
    assert profiles["rec"] == (SATISFIED, SATISFIED, SATISFIED)
    assert profiles["avg_rec_citation"] == (SATISFIED, SATISFIED, VIOLATED)
    assert profiles["n_times_min"] == (VIOLATED, SATISFIED, SATISFIED)
    assert profiles["h_squared"] == (SATISFIED, VIOLATED, SATISFIED)


def test_monotone_uniform_equivalent_indices_gain_citation_increase():
    # any index passing M, UC and UE on the domain also passes CI there
    for index in counterexample_registry():
        core = [check_axiom(index, a, DOMAIN).ok for a in ("M", "UC", "UE")]
        if all(core):
            assert check_axiom(index, "CI", DOMAIN).ok, index.name


def test_rectangle_completion_pins_down_rec_on_the_domain():
    for index in counterexample_registry():
        verdict = check_axiom(index, "RC", DOMAIN)
        assert verdict.ok == (index.name == "rec"), index.name


# ---------------------------------------------------------------------------
# optimised checkers against naive scans
# ---------------------------------------------------------------------------


def _naive_monotone(index, vectors, strict):
    ev = index.evaluate
    for x in vectors:
        for y in vectors:
            if not dominates(x, y):
                continue
            if strict and x != y and ev(y) <= ev(x) + TOLERANCE:
                return False
            if not strict and ev(x) > ev(y) + TOLERANCE:
                return False
    return True


def test_edge_scan_monotonicity_agrees_with_pair_scan():
    vectors = list(enumerate_vectors(DomainSpec(3, 3)))
    for index in counterexample_registry():
        for axiom, strict in (("M", False), ("SM", True)):
            fast = check_axiom(index, axiom, (3, 3)).ok
            assert fast == _naive_monotone(index, vectors, strict), (index.name, axiom)


def _naive_rank(index, vectors, transform):
    ev = index.evaluate

    def sign(a, b):
        diff = ev(a) - ev(b)
        return 0 if abs(diff) <= TOLERANCE else (1 if diff > 0 else -1)

    for i, x in enumerate(vectors):
        for y in vectors[i + 1 :]:
            tx, ty = transform(x), transform(y)
            before = sign(x, y)
            diff = index.evaluate(tx) - index.evaluate(ty)
            after = 0 if abs(diff) <= TOLERANCE else (1 if diff > 0 else -1)
            if before != after:
                return False
    return True


def test_rank_checks_agree_with_naive_pair_scans():
    vectors = list(enumerate_vectors(DomainSpec(3, 3)))
    for index in counterexample_registry():
        si = all(
            _naive_rank(index, vectors, lambda v, c=c: scale(v, c)) for c in range(2, 4)
        )
        assert check_axiom(index, "RANK_SI", (3, 3)).ok == si, index.name
        ind = all(
            _naive_rank(
                index,
                vectors,
                lambda v, e=e: tuple(sorted(v + (e,), reverse=True)),
            )
            for e in range(1, 4)
        )
        assert check_axiom(index, "RANK_IND", (3, 3)).ok == ind, index.name


def test_uniform_increment_dp_agrees_with_search_for_rec():
    assert check_axiom(REC, "UI", (3, 3)).ok


# ---------------------------------------------------------------------------
# sampled domains and serialisation
# ---------------------------------------------------------------------------


def test_oversized_domain_requires_a_seed():
    with pytest.raises(DomainBudgetError, match="seed"):
        check_axiom(REC, "M", (40, 40))


def test_sampled_scan_is_labelled_and_deterministic():
    spec = DomainSpec(40, 40, seed=11)
    first = check_axiom(REC, "M", spec, sample_size=60)
    second = check_axiom(REC, "M", spec, sample_size=60)
    assert first == second
    assert first.exhaustive is False
    assert first.ok


def test_uniform_increment_refuses_sampled_domains():
    with pytest.raises(DomainBudgetError, match="exhaustive"):
        check_axiom(REC, "UI", DomainSpec(40, 40, seed=3))


def test_verdict_to_json_is_plain_data():
    verdict = check_axiom(_registry()["n_times_min"], "M", DOMAIN)
    payload = verdict.to_json()
    assert payload["status"] == VIOLATED
    assert payload["counterexample"]["x"] == [3]
    assert payload["counterexample"]["y"] == [3, 1]
    assert payload["exhaustive"] is True
    clean = check_axiom(REC, "UC", DOMAIN).to_json()
    assert clean["counterexample"] is None


def test_chi_increment_bound_holds_exhaustively():
    verdict = chi_increment_bound((5, 5))
    assert verdict.ok
    assert verdict.axiom == "CHI_STEP_BOUND"
    assert verdict.exhaustive
