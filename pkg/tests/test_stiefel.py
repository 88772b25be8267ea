import pytest

from looseness.stiefel import RULES, corollary_expectation, corollary_sweep, decide_stiefel
from looseness.stems import parse_table
from looseness.verdict import Outcome

LOOSE, NOT_LOOSE, UNKNOWN = Outcome.LOOSE, Outcome.NOT_LOOSE, Outcome.UNKNOWN


@pytest.mark.parametrize(
    "r, k, outcome, rule",
    [
        (13, 3, LOOSE, "R5"),
        (11, 5, NOT_LOOSE, "R5"),
        (9, 5, LOOSE, "R3"),
        (5, 1, NOT_LOOSE, "R1"),
        (6, 1, LOOSE, "R1"),
        (2, 1, LOOSE, "R1"),
        (7, 5, UNKNOWN, "R5"),
        (9, 3, NOT_LOOSE, "R5"),
        (3, 2, LOOSE, "R2"),
        (8, 5, LOOSE, "R2"),
    ],
)
def test_examples(r, k, outcome, rule):
    verdict = decide_stiefel(r, k)
    assert verdict.outcome is outcome
    assert verdict.deciding_rule == RULES[rule]


def test_r5_trace_values():
    computed = decide_stiefel(13, 3).trace[-1].computed
    assert computed["2chi"] == 12
    assert computed["order[SO(k)]"] == "Exact(12)"
    computed = decide_stiefel(11, 5).trace[-1].computed
    assert computed["2chi"] == 20
    assert computed["order[SO(k)]"] == "Exact(3)"


def test_rejects_invalid_pairs():
    for r, k in [(3, 3), (2, 5), (4, 0)]:
        with pytest.raises(ValueError, match="r > k >= 1"):
            decide_stiefel(r, k)


def test_special_pairs_case_two_not_special_rule():
    for r, k in [(3, 2), (4, 3), (6, 5), (8, 5)]:
        verdict = decide_stiefel(r, k)
        assert verdict.outcome is LOOSE
        assert verdict.deciding_rule == RULES["R2"]
    verdict = decide_stiefel(9, 5)
    assert verdict.deciding_rule == RULES["R3"]
    assert verdict.trace[-1].computed["2chi"] == 12


def test_case_two_parsing_recorded():
    step = decide_stiefel(10, 3).trace[-1]
    assert step.rule_id == RULES["R2"]
    assert "k odd and r even" in step.computed["parity_reading"]


def test_orientation_does_not_change_outcome():
    for r in range(2, 101):
        for k in range(1, r):
            assert decide_stiefel(r, k, True).outcome is decide_stiefel(r, k, False).outcome


def test_orientation_changes_wording():
    assert "G~" in decide_stiefel(13, 3, True).trace[0].computed["projection"]


def test_soundness_asymmetry():
    # NotLoose only from R1 or from a decidably nonzero weak obstruction
    for r in range(2, 101):
        for k in range(1, r):
            verdict = decide_stiefel(r, k)
            if verdict.outcome is NOT_LOOSE:
                step = verdict.trace[-1]
                assert step.rule_id in (RULES["R1"], RULES["R5"])
                if step.rule_id == RULES["R5"]:
                    assert step.computed["2chi*[SO(k)]=0"] == "false"


def test_unknown_only_when_nothing_decides():
    for r in range(2, 101):
        for k in range(1, r):
            verdict = decide_stiefel(r, k)
            if verdict.outcome is UNKNOWN:
                step = verdict.trace[-1]
                assert step.rule_id in (RULES["R4"], RULES["R5"])
                assert k > 1 and k != r - 1 and not (k % 2 == 1 and r % 2 == 0)
                assert "reason" in step.computed
                if step.rule_id == RULES["R5"]:
                    assert step.computed["2chi*[SO(k)]=0"] != "false"
                    assert step.computed["2chi*[SO(k)]=0"] == "unknown" or r < 2 * k


def test_unknown_reasons():
    # r < 2k with vanishing weak obstruction
    reason = decide_stiefel(7, 5).trace[-1].computed["reason"]
    assert reason.startswith("r < 2k")
    assert "V_{5,3}" in reason
    assert decide_stiefel(7, 5).trace[0].computed["ell"] == 3
    # k = 11 odd, r odd, r >= 2k: only Divides(24) known; 2chi = 2*C(11,5) = 924, 24 does not divide it
    verdict = decide_stiefel(23, 11)
    assert verdict.outcome is UNKNOWN
    assert verdict.trace[-1].computed["reason"].startswith("order knowledge insufficient")


def test_large_odd_k_decided_when_24_divides():
    # 2 chi(G_{r,11}) = 2 C((r-1)/2, 5); pick r with 24 | that
    hits = [r for r in range(23, 200, 2) if (2 * decide_stiefel(r, 11).trace[0].computed["chi"]) % 24 == 0]
    assert hits
    for r in hits:
        assert decide_stiefel(r, 11).outcome is LOOSE


def test_sufficiency_clauses():
    from looseness.grassmann import euler_grassmann

    for k in range(2, 13):
        for r in range(2 * k, 61):
            if k % 2 == 0 or k in (7, 9) or euler_grassmann(r, k) % 12 == 0:
                assert decide_stiefel(r, k).outcome is LOOSE, (r, k)


def test_corollary_sweeps_to_200():
    for k in (2, 3, 5):
        rows = corollary_sweep(k, 200)
        assert [row.r for row in rows] == list(range(k + 1, 201))
        bad = [(row.r, row.verdict.outcome, row.expected) for row in rows if not row.agrees]
        assert not bad, bad


def test_corollary_expectations():
    assert corollary_expectation(3, 9)[0] is NOT_LOOSE
    assert corollary_expectation(3, 13)[0] is LOOSE
    assert corollary_expectation(5, 7)[0] is UNKNOWN
    with pytest.raises(ValueError):
        corollary_sweep(4, 10)
    with pytest.raises(ValueError):
        corollary_sweep(3, 3)


def test_partial_table_gives_unknown_not_guess():
    table = parse_table('soclass all divides 24 "x"\n')
    verdict = decide_stiefel(13, 3, table=table)
    # 2chi = 12 and only Divides(24) known
    assert verdict.outcome is UNKNOWN
    assert decide_stiefel(25, 3, table=table).outcome is LOOSE  # 2chi = 24
