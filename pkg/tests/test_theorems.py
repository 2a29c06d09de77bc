import json
import random
from fractions import Fraction

import pytest

from conftest import mat
from ginv import theorems
from ginv.errors import UnknownTheorem
from ginv.fields import GF, Q, QI
from ginv.geninv import core_inverse
from ginv.matrix import Matrix
from ginv.orders import CoreCharacterization, OrderKind, core_leq_via, leq
from ginv.theorems import (
    Population,
    TheoremId,
    check_theorem,
    generate_core_pair,
    replay,
    reproduce_remarks,
    run_campaign,
)

GF2 = Population.exhaustive("GF(2)", 2)


def test_generate_core_pair_examples():
    a = mat([[1, 1], [0, 0]])
    assert generate_core_pair(a, mat([[0, 0], [0, 1]])) == (a, mat([[1, 1], [0, 1]]))
    assert generate_core_pair(a, Matrix.zeros(Q, 2)) == (a, a)
    assert generate_core_pair(mat([[0, 1], [0, 0]]), Matrix.identity(Q, 2)) is None


@pytest.mark.parametrize("fld", [Q, QI, GF(3), GF(5)])
def test_generated_pairs_satisfy_every_characterization(fld):
    pop = Population.constructed(fld, 3, 40, seed=7)
    for a, b in pop.pairs():
        assert leq(OrderKind.CORE, a, b)
        for which in CoreCharacterization:
            if which is CoreCharacterization.P28_MUTUAL and core_inverse(b) is None:
                continue
            assert core_leq_via(which, a, b).holds, which


def test_population_validation():
    with pytest.raises(ValueError):
        Population.exhaustive("Q", 2)
    with pytest.raises(ValueError):
        Population.exhaustive("GF(2)", 3)   # 512² pairs must be sampled
    assert sum(1 for _ in Population.exhaustive("GF(2)", 3, sample=50).pairs()) == 50
    with pytest.raises(ValueError):
        Population.random("Q", 2, -1)
    with pytest.raises(ValueError):
        Population.random("Q", 0, 3)


def test_exhaustive_enumerates_each_pair_once():
    pairs = list(GF2.pairs())
    assert len(pairs) == 256 == len(set(pairs))


def test_random_entries_are_bounded():
    rng = random.Random(1)
    for _ in range(200):
        x = theorems.random_entry(Q, rng)
        assert abs(x.numerator) <= 3 and 1 <= x.denominator <= 3


def test_t23_exhaustive_gf2():
    r = check_theorem(TheoremId.T23, GF2)
    assert r.tested == 256 and r.failed == 0
    assert r.passed > 0 and r.skipped > 0


def test_t29_constructed_rationals():
    r = check_theorem("T29", Population.constructed("Q", 3, 200, seed=3))
    assert r.tested == 200 and r.failed == 0 and r.skipped == 0


def test_report_invariant_and_json():
    for tid in TheoremId:
        r = check_theorem(tid, GF2)
        assert r.passed + r.failed + r.skipped == r.tested
        d = json.loads(json.dumps(r.to_dict()))
        assert set(d) >= {"theorem", "population", "tested", "skipped", "passed", "failed",
                          "counterexamples"}
        assert d["theorem"] == tid.value


def test_seeded_populations_are_reproducible():
    p1 = Population.random("Q", 3, 25, seed=11)
    p2 = Population.random("Q", 3, 25, seed=11)
    assert list(p1.pairs()) == list(p2.pairs())
    assert list(p1.pairs()) != list(Population.random("Q", 3, 25, seed=12).pairs())
    assert check_theorem("L22", p1).to_dict() == check_theorem("L22", p2).to_dict()


def test_remarks_reproduced():
    r25, r33 = reproduce_remarks()
    assert r25.ok and r33.ok
    # the fixture is the only refutation of the converse over GF(2)
    assert "converse_refuted" not in r25.observations
    r = check_theorem("R25", Population.exhaustive("GF(3)", 2))
    assert r.failed == 0 and r.observations["converse_refuted"] > 0
    fx = theorems.r25_fixture()
    half = Fraction(1, 2)
    assert fx["A†BA#"] == mat([[half, half], [half, half]])
    fx = theorems.r33_fixture()
    assert fx["AA*"] == mat([[2, 0], [0, 0]]) and fx["BA*"] == mat([[2, 0], [1, 0]])
    assert fx["B EP"] and fx["A≤⊕B"] and fx["claimed equivalence fails"]


def test_r33_counts_claim_refutations():
    r = check_theorem("R33", Population.exhaustive("GF(3)", 2))
    assert r.failed == 0 and r.observations.get("claim_refuted", 0) > 0


def test_replay_of_fixture_payload():
    assert replay("R25", {"case": "fixture"}).status == "pass"
    assert replay("R33", {"case": "fixture"}).status == "pass"


def test_failing_checker_payloads_replay(monkeypatch):
    def strict(ctx, a, b):
        return theorems._judge({"a is zero": a.is_zero()})

    monkeypatch.setitem(theorems.CHECKERS, TheoremId.L21, strict)
    r = check_theorem("L21", GF2)
    assert r.failed == 240 and r.passed == 16
    assert len(r.counterexamples) == theorems.MAX_COUNTEREXAMPLES
    for payload in r.counterexamples:
        again = replay("L21", payload)
        assert again.status == "fail" and again.failed == payload["failed"]


def test_library_errors_become_skips(monkeypatch):
    from ginv.errors import PreconditionUnmet

    def picky(ctx, a, b):
        raise PreconditionUnmet("nope")

    monkeypatch.setitem(theorems.CHECKERS, TheoremId.L22, picky)
    r = check_theorem("L22", GF2)
    assert r.skipped == 256 and r.failed == 0
    assert r.skip_reasons == {"PreconditionUnmet: nope": 256}


def test_unknown_theorem():
    with pytest.raises(UnknownTheorem):
        TheoremId.parse("T99")
    with pytest.raises(UnknownTheorem):
        check_theorem("X1", GF2)
    assert TheoremId.parse(" t23 ") is TheoremId.T23


def test_l28_relation_matches_definition_gf2():
    ctx = theorems.context_for(GF(2), 2)
    ms = ctx.all_matrices
    three = {(a, x) for a in ms for x in ms
             if (a @ x).star() == a @ x and x @ a @ a == a and a @ x @ x == x}
    defn = {(a, x) for a in ms for x in ms if theorems._definitional_core(a, x)}
    assert three == defn and len(three) == sum(core_inverse(a) is not None for a in ms)


def test_transitivity_survey():
    s = theorems.transitivity_survey("GF(2)")
    assert s.get("chains_core_middle_violations", 0) == 0
    assert s["chains_core_middle_transitive"] > 0


def test_campaign_empty():
    assert run_campaign([], [GF2]) == []


def test_campaign_all_ids_gf2():
    reports = run_campaign(list(TheoremId), [GF2])
    assert len(reports) == 15 and all(r.failed == 0 for r in reports)
    assert [r.theorem for r in reports] == list(TheoremId)


def test_campaign_p34_gf3():
    (r,) = run_campaign(["P34"], [Population.exhaustive("GF(3)", 2)])
    assert r.failed == 0 and r.passed > 0
    assert r.observations.get("commuting", 0) > 0


def test_campaign_parallel_matches_serial():
    ids = ["L21", "T23", "R33", "P36"]
    pops = [GF2, Population.random("Q", 2, 30, seed=5)]
    serial = [r.to_dict() for r in run_campaign(ids, pops)]
    parallel = [r.to_dict() for r in run_campaign(ids, pops, workers=3)]
    assert serial == parallel


def test_rationals_and_gaussian_smoke():
    for tid in TheoremId:
        for pop in (Population.random("Q", 2, 20, seed=1), Population.constructed("QI", 2, 10, seed=2)):
            r = check_theorem(tid, pop)
            assert r.failed == 0, (tid, r.counterexamples[:1])


@pytest.mark.slow
def test_gf2_dim3_sampled():
    pop = Population.exhaustive("GF(2)", 3, sample=300, seed=1)
    for tid in TheoremId:
        assert check_theorem(tid, pop).failed == 0
