import pytest

from permsign.arith import primes_between, primitive_roots
from permsign.perms import make_sigma, make_tau, sign_cycles
from permsign.verify import (
    Case,
    CaseTag,
    classify,
    equidistribution_counts,
    scan,
    transported_tau_signs,
    verify_prime,
)


@pytest.mark.parametrize("p, tag", [
    (3, CaseTag(Case.DEGENERATE)),
    (17, CaseTag(Case.MOD8_EQ1)),
    (13, CaseTag(Case.MOD8_EQ5)),
    (163, CaseTag(Case.SPECIAL_FORM, 1)),
    (19, CaseTag(Case.SPECIAL_FORM, 0)),
    (7, CaseTag(Case.MOD4_EQ3_GENERAL)),
    (883, CaseTag(Case.SPECIAL_FORM, 3)),
])
def test_classify(p, tag):
    assert classify(p) == tag


def test_case_tag_str():
    assert str(CaseTag(Case.SPECIAL_FORM, 1)) == "SpecialForm(1)"
    assert str(CaseTag(Case.MOD8_EQ1)) == "Mod8Eq1"


def test_verify_13():
    rec = verify_prime(13)
    assert rec.case.kind is Case.MOD8_EQ5
    assert rec.class_number == 2 and rec.discriminant == -52
    assert rec.predicted == "-1"
    assert [g for g, _, _ in rec.per_root] == [2, 6, 7, 11]
    assert all(t == -1 for _, t, _ in rec.per_root)
    assert rec.passed


def test_verify_7():
    rec = verify_prime(7)
    assert rec.case.kind is Case.MOD4_EQ3_GENERAL
    assert (rec.roots_even, rec.roots_odd) == (1, 1)
    assert rec.per_root[0][:2] == (3, -1) and rec.per_root[1][:2] == (5, 1)
    assert rec.passed


def test_verify_163():
    rec = verify_prime(163)
    assert str(rec.case) == "SpecialForm(1)"
    assert rec.predicted == "+1"
    assert rec.roots_total == 54 and rec.roots_even == 54
    assert rec.passed


def test_verify_19_flags_outside_literal_statement():
    rec = verify_prime(19)
    assert rec.passed and rec.roots_odd == 6
    assert "outside" in rec.detail


def test_verify_3_degenerate():
    rec = verify_prime(3)
    assert rec.passed
    assert rec.per_root == [(2, 1, -1)]


def test_verify_5():
    rec = verify_prime(5)
    assert rec.case.kind is Case.MOD8_EQ5
    assert rec.class_number == 2 and rec.predicted == "-1" and rec.passed


def test_verify_17_relation():
    rec = verify_prime(17)
    assert rec.predicted == "-1*sigma"
    assert all(t == -s for _, t, s in rec.per_root)


@pytest.mark.parametrize("p, which, counts", [(7, "tau", (1, 1)), (13, "sigma", (2, 2)), (3, "tau", (1, 0))])
def test_equidistribution_counts(p, which, counts):
    assert equidistribution_counts(p, which) == counts


def test_equidistribution_counts_rejects_unknown():
    with pytest.raises(ValueError):
        equidistribution_counts(7, "nu")


def test_counts_match_direct_signs():
    for p in primes_between(3, 200):
        signs = [sign_cycles(make_tau(g, p)) for g in primitive_roots(p)]
        assert equidistribution_counts(p, "tau") == (signs.count(1), signs.count(-1))


def test_transport_matches_direct_enumeration():
    for p in primes_between(7, 700):
        if p % 4 != 3:
            continue
        roots_all = primitive_roots(p)
        base = sign_cycles(make_tau(roots_all[0], p))
        roots, signs = transported_tau_signs(p, roots_all[0], base)
        assert roots.tolist() == roots_all
        assert signs.tolist() == [sign_cycles(make_tau(g, p)) for g in roots_all]


def test_transport_needs_odd_h():
    with pytest.raises(ValueError):
        transported_tau_signs(13, 2, -1)


def test_sampled_mode_uses_smallest_roots():
    rec = verify_prime(1009, sample=3)
    assert [g for g, _, _ in rec.per_root] == primitive_roots(1009)[:3]
    assert rec.mode == "sampled(3)"


def test_sampled_equidistribution_via_transport():
    full = verify_prime(1031)
    sampled = verify_prime(1031, sample=4)
    assert sampled.case.kind is Case.MOD4_EQ3_GENERAL
    assert (sampled.roots_total, sampled.roots_even, sampled.roots_odd) == \
        (full.roots_total, full.roots_even, full.roots_odd)
    assert sampled.passed and "transport" in sampled.detail


def test_sampled_and_full_agree_on_cases_i_to_iii():
    for p in primes_between(3, 1500):
        if classify(p).kind is Case.MOD4_EQ3_GENERAL:
            continue
        assert verify_prime(p).passed == verify_prime(p, sample=2).passed


def test_sample_larger_than_root_set_is_full():
    assert verify_prime(7, sample=50).mode == "full"


def test_scan_examples():
    recs = scan(3, 30, mode="full")
    assert [r.p for r in recs] == [3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert all(r.passed for r in recs)
    assert scan(10, 10) == []
    (r163,) = scan(163, 163, mode="full")
    assert str(r163.case) == "SpecialForm(1)" and r163.passed
    (r5,) = scan(5, 5, mode="full")
    assert r5.class_number == 2 and r5.predicted == "-1"


@pytest.mark.parametrize("lo, hi", [(2, 10), (10, 5), (3, 2**31 + 1)])
def test_scan_rejects_ranges(lo, hi):
    with pytest.raises(ValueError):
        scan(lo, hi)


def test_scan_threshold_and_determinism(monkeypatch):
    recs = scan(1900, 2100, mode="sampled", sample=3, max_full=2000)
    for r in recs:
        if r.p <= 2000:
            assert r.mode == "full"
        elif r.case.kind is not Case.MOD4_EQ3_GENERAL:
            assert r.mode == "sampled(3)" and len(r.per_root) == 3
    again = scan(1900, 2100, mode="sampled", sample=3, max_full=2000)
    assert [r.to_json(True) for r in recs] == [r.to_json(True) for r in again]
    monkeypatch.setenv("PERMSIGN_MAX_FULL", "1950")
    env = scan(1940, 1960, mode="sampled", sample=2)
    assert [r.mode for r in env] == ["full", "sampled(2)"]  # 1949, 1951


def test_scan_parallel_order():
    serial = scan(3, 400, mode="full")
    parallel = scan(3, 400, mode="full", jobs=3)
    assert [r.p for r in parallel] == sorted(r.p for r in parallel)
    assert [r.to_json(True) for r in serial] == [r.to_json(True) for r in parallel]


def test_record_serialisation():
    rec = verify_prime(13)
    d = rec.to_dict(per_root=True)
    sigma = "+1" if sign_cycles(make_sigma(2, 13)) == 1 else "-1"
    assert d["per_root"][0] == {"g": 2, "sign_tau": "-1", "sign_sigma": sigma}
    assert rec.csv_row() == ["13", "Mod8Eq5", "", "-52", "2", "-1", "4", "0", "4", "true"]
    assert verify_prime(163).csv_row()[2] == "1"
