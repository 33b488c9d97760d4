"""One test per acceptance criterion, each printing a single PASS/FAIL line.

The suites live in ``coendcalc.suites`` so that ``coendcalc check`` and
this file run the same code; the assertions here add the counts and
timing bounds each criterion states.
"""

import time

import pytest

from coendcalc.suites import SUITES, run_all, run_suite

BY_CRITERION = {crit: name for name, (crit, _) in SUITES.items() if crit}


def report(capsys, n, ok, text):
    with capsys.disabled():
        print(f"\ncriterion {n:>2}: {'PASS' if ok else 'FAIL'}  {text}")


def sizes(rep, label):
    return next(c.sizes for c in rep.cases if c.label == label)


def test_criterion_1_nat_as_end(capsys):
    t0 = time.perf_counter()
    rep = run_suite("nat-as-end")
    dt = time.perf_counter() - t0
    seeded = [c for c in rep.cases if c.label.startswith("#")]
    ok = rep.ok and len(seeded) == 50 and dt < 5.0
    report(capsys, 1, ok, f"{sum(c.ok for c in seeded)}/50 seeded pairs agree, {dt:.2f} s")
    assert ok, rep.first_failure()


def test_criterion_2_pullback(capsys):
    rep = run_suite("pullback")
    s = sizes(rep, "Δ[1] fixture")
    ok = rep.ok and s["end"] == s["fibre product"]
    report(capsys, 2, ok, f"end {s['end']} = fibre product {s['fibre product']}")
    assert ok, rep.first_failure()


def test_criterion_3_center_and_classes(capsys):
    rep = run_suite("center")
    e = sizes(rep, "end of hom over BS3")["end"]
    k = sizes(rep, "coend of hom over BS3")["coend"]
    ok = rep.ok and (e, k) == (1, 3)
    report(capsys, 3, ok, f"end {e}, coend {k} over BS3")
    assert ok


def test_criterion_4_fubini(capsys):
    rep = run_suite("fubini")
    big = max(c.sizes["elements"] for c in rep.cases)
    ok = rep.ok and len(rep.cases) == 30 and big <= 40
    report(capsys, 4, ok, f"{sum(c.ok for c in rep.cases)}/30 bifunctors, ≤{big} elements")
    assert ok, rep.first_failure()


def test_criterion_5_ninja_yoneda(capsys):
    rep = run_suite("ninja")
    forms = {c.label.rsplit(" ", 1)[1] for c in rep.cases}
    ok = rep.ok and len(rep.cases) == 120 and forms == {"(i)", "(ii)", "(iii)", "(iv)"}
    report(capsys, 5, ok, f"{sum(c.ok for c in rep.cases)}/120 (30 instances × 4 forms)")
    assert ok, rep.first_failure()


def test_criterion_6_elmendorf(capsys):
    rep = run_suite("elmendorf")
    ok = rep.ok and len(rep.cases) == 3
    report(capsys, 6, ok, f"{sum(c.ok for c in rep.cases)}/3 Z/2-sets reconstructed")
    assert ok, rep.first_failure()


def test_criterion_7_relt_adjunction(capsys):
    rep = run_suite("relt-adjunction")
    report(capsys, 7, rep.ok, f"{sum(c.ok for c in rep.cases)}/{len(rep.cases)} corpus functors")
    assert rep.ok, rep.first_failure()


def test_criterion_8_fully_faithful(capsys):
    rep = run_suite("fully-faithful")
    q = sizes(rep, "sample quota")
    agree = [c for c in rep.cases if c.label.startswith("#")]
    ok = rep.ok and len(agree) == 20 and q["fully faithful"] >= 3 and q["not"] >= 3
    report(capsys, 8, ok, f"{sum(c.ok for c in agree)}/20 agree "
                          f"({q['fully faithful']} fully faithful, {q['not']} not)")
    assert ok, rep.first_failure()


def test_criterion_9_weighted(capsys):
    rep = run_suite("weighted")
    kp = sizes(rep, "kernel pair")["weighted limit"]
    ok = rep.ok and kp == 5 and len(rep.cases) == 31
    report(capsys, 9, ok, f"kernel pair {kp}, {sum(c.ok for c in rep.cases) - 1}/30 pairs")
    assert ok, rep.first_failure()


def test_criterion_10_day_parseval_and_check_all(capsys):
    rep = run_suite("parseval")
    labels = " ".join(c.label for c in rep.cases)
    cauchy = [c for c in rep.cases if c.label.startswith("Cauchy")]
    covered = all(s in labels for s in ("over Z/2", "associativity over {1,e}", "associativity over Z/2", "Parseval for hom",
                                        "Parseval for P^mod2"))
    t0 = time.perf_counter()
    everything = run_all()
    dt = time.perf_counter() - t0
    ok = rep.ok and covered and len(cauchy) == 20 and all(r.ok for r in everything) and dt < 60
    report(capsys, 10, ok, f"{sum(c.ok for c in rep.cases)}/{len(rep.cases)} checks, "
                           f"check all {dt:.1f} s")
    assert ok, rep.first_failure()


@pytest.mark.parametrize("n", range(1, 11))
def test_every_criterion_has_a_suite(n):
    assert n in BY_CRITERION
