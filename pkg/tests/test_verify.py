import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sylvsum.field import ModP, PrimeField
from sylvsum.sylvester import syl_double
from sylvsum.verify import (
    Instance,
    SuiteConfig,
    branch_conditions_agree,
    certification_grid,
    check_cofactors,
    check_exchange,
    check_misc,
    check_schur,
    check_section_props,
    check_single_sum_table,
    check_syminterp,
    check_theorem1,
    gen_instance,
    grid_axes,
    intro_identity_check,
    run_suite,
    single_sum_branch,
    suite_jobs,
    theorem1_branch,
    theorem1_expected,
    top_coefficient_poly,
)

from conftest import P


def fixture():
    return Instance(0, (Fraction(1), Fraction(2)), (Fraction(3), Fraction(4)))


def test_theorem1_expected_examples():
    inst = fixture()
    assert theorem1_expected(inst, 0, 1) == P(10, -4)
    assert theorem1_expected(inst, 2, 0) == inst.f
    zero = Instance(0, (Fraction(2),), tuple(map(Fraction, (1, 3, 5, 7))))
    assert theorem1_expected(zero, 1, 1) == P()
    fcase = Instance(0, (Fraction(2),), tuple(map(Fraction, (1, 3, 5))))
    assert theorem1_expected(fcase, 1, 1) == fcase.f
    assert theorem1_expected(inst, 2, 2) == inst.f * inst.g * 12


def test_theorem1_expected_range():
    with pytest.raises(ValueError):
        theorem1_expected(fixture(), 3, 0)


def test_branch_labels():
    assert theorem1_branch(2, 2, 0, 1) == "sres"
    assert theorem1_branch(2, 3, 0, 2) == "sres"  # d = m < n
    assert theorem1_branch(1, 4, 1, 1) == "zero"
    assert theorem1_branch(1, 3, 1, 1) == "f"
    assert theorem1_branch(2, 2, 2, 0) == "bezout"  # d = m = n goes to the cofactor branch
    assert theorem1_branch(2, 2, 2, 2) == "res_fg"
    assert single_sum_branch(2, 2, 2) == "g"
    assert single_sum_branch(1, 4, 3) == "f"


def test_branch_conditions_agree_everywhere():
    for m in range(1, 8):
        for n in range(m, 8):
            for d in range(n + 1):
                assert branch_conditions_agree(m, n, d)


def test_fixture_all_pairs_pass():
    reports = check_theorem1(fixture())
    assert len(reports) == 9
    assert all(r.passed and r.forms_agree and r.conditions_agree for r in reports)
    last = reports[-1]
    assert (last.p, last.q, last.branch) == (2, 2, "res_fg")
    obj = last.to_json_obj()
    assert obj["pass"] is True and obj["A"] == ["1", "2"]
    json.dumps(obj)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 4), st.integers(1, 4))
def test_theorem1_random_shapes(seed, m, n):
    inst = gen_instance(seed, m, n)
    for r in check_theorem1(inst):
        assert r.passed, r.to_json_obj()
        assert r.computed.degree <= r.d
        if m > n:
            assert r.branch.startswith("swap:")


def test_gen_instance_determinism():
    a = gen_instance(0, 2, 2, 10)
    assert a == gen_instance(0, 2, 2, 10)
    assert len(set(a.A)) == 2 and len(set(a.B)) == 2
    assert all(-10 <= v <= 10 for v in a.A + a.B)
    assert gen_instance(1, 2, 2, 10) != a


def test_gen_instance_tight_range():
    # three values for three distinct roots: every collision forces a resample
    inst = gen_instance(5, 3, 3, 1)
    assert sorted(inst.A) == sorted(inst.B) == [-1, 0, 1]
    disjoint = gen_instance(5, 2, 3, 2, disjoint=True)
    assert not set(disjoint.A) & set(disjoint.B)


def test_gen_instance_errors():
    with pytest.raises(ValueError):
        gen_instance(0, 4, 1, 1)
    with pytest.raises(ValueError):
        gen_instance(0, 2, 2, 1, disjoint=True)
    with pytest.raises(ValueError):
        gen_instance(0, 0, 2)


def test_gen_instance_prime_field():
    inst = gen_instance(3, 2, 3, field=PrimeField(2**31 - 1))
    assert all(isinstance(v, ModP) for v in inst.A + inst.B)
    assert all(r.passed for r in check_theorem1(inst))


def test_certification_grid():
    axes = grid_axes(2, 2, avoid=(0, 1, 5))
    assert all(len(ax) == 3 for ax in axes)
    flat = [v for ax in axes for v in ax]
    assert len(set(flat)) == 6 and not {0, 1, 5} & set(flat)
    assert len(list(certification_grid(2, 2))) == 9


def test_top_coefficient_poly():
    # h(x1, t) = 3 x1^2 t + x1 t^2 - 5: top x1^2 coefficient is 3t
    axes = [[Fraction(v) for v in (10, 11, 12)]]
    last = [Fraction(v) for v in (20, 21, 22)]
    out = top_coefficient_poly(lambda pt: 3 * pt[0] ** 2 * pt[1] + pt[0] * pt[1] ** 2 - 5, axes, last)
    assert out == P(0, 3)


def test_intro_identity():
    A = tuple(map(Fraction, (1, 4, 6, 9)))
    rng = random.Random(0)
    pts = [tuple(Fraction(rng.randint(-20, 20)) for _ in range(2)) for _ in range(5)]
    assert intro_identity_check(A, 2, pts)
    with pytest.raises(ValueError):
        intro_identity_check(A, 0, pts)


@pytest.mark.parametrize("m,n", [(1, 1), (1, 3), (2, 2), (2, 4), (3, 3), (4, 2), (3, 5)])
def test_all_section_checks(m, n):
    inst = gen_instance(11, m, n)
    rng = random.Random(1)
    checks = (
        check_section_props(inst)
        + check_single_sum_table(inst)
        + check_cofactors(inst)
        + check_exchange(inst)
        + check_misc(inst)
        + check_schur(inst, rng)
        + check_syminterp(inst.B, rng)
    )
    assert checks
    bad = [c.to_json_obj() for c in checks if not c.passed]
    assert not bad


def test_section_checks_on_fixture_cover_dsmall_and_dbig():
    names = {c.name for c in check_section_props(fixture())}
    assert {"dsmall_single", "dbig_decomposition", "syl_m_q_cofactor"} <= names


def test_suite_jobs_and_run():
    cfg = SuiteConfig(max_m=3, max_n=3, seeds=2)
    jobs = suite_jobs(cfg)
    assert len(jobs) == 6 * 2
    res = run_suite(cfg)
    assert res.ok and len(res.reports) == 2 * sum((m + 1) * (n + 1) for m in range(1, 4) for n in range(m, 4))


def test_suite_parallel_matches_serial():
    cfg = SuiteConfig(max_m=2, max_n=3, seeds=2, full=True)
    a = run_suite(cfg, workers=1)
    b = run_suite(cfg, workers=2)
    assert json.dumps(a.to_json_obj()) == json.dumps(b.to_json_obj())


def test_suite_prime_field():
    assert run_suite(SuiteConfig(max_m=3, max_n=3, seeds=1, prime=2**61 - 1, full=True)).ok


def test_failure_is_reported_not_raised(monkeypatch):
    import sylvsum.verify as V

    monkeypatch.setattr(V, "syl_double", lambda A, B, p, q: syl_double(A, B, p, q) + P(1))
    reports = V.check_theorem1(fixture())
    assert not any(r.passed for r in reports)
    assert reports[0].to_json_obj()["pass"] is False
