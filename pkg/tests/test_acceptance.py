"""Acceptance suite: one test per criterion, each printing a summary line.

Criterion 7 pins externally recorded worked input/output pairs.  Two of the
recorded pairs are provably inconsistent with injectivity (a second domain
element maps to the quoted output; see tests/test_maps.py
TestCollisionPartners for the witnesses), so their subtests fail and are
expected to stay red.  The analysis lives in the decisions ledger.
"""

import json
import time

import pytest

from hookbias import (
    MapId,
    SetId,
    b_t_k,
    bt2_series,
    enumerate_set,
    hook_count_totals,
    set_cardinality,
    set_cardinality_vs_series,
    verify_conjecture,
    verify_decomposition,
    verify_image_disjointness,
    verify_map,
)
from hookbias.cli import main
from hookbias.maps import domain_of, zeta2, zeta2_inv


def _line(num, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {num}: {status} {detail}".rstrip())


def test_acceptance_1_closed_form_vs_oracle():
    """bt2 series equals independent hook-count oracles, t in 2..8, n <= 100."""
    start = time.monotonic()
    ok = True
    for t in range(2, 9):
        series = bt2_series(t, 100)
        dp = hook_count_totals(t, 2, 100)
        for n in range(101):
            if series.coeff(n) != dp[n]:
                ok = False
        for n in range(26):
            if series.coeff(n) != b_t_k(t, 2, n):
                ok = False
    elapsed = time.monotonic() - start
    _line(1, ok and elapsed < 60, f"(t=2..8, n<=100, {elapsed:.1f}s)")
    assert ok
    assert elapsed < 60


def test_acceptance_2_decomposition_identity():
    start = time.monotonic()
    reports = [verify_decomposition(t, 100, enumeration_budget=0) for t in range(3, 9)]
    elapsed = time.monotonic() - start
    ok = all(r.passed for r in reports)
    _line(2, ok and elapsed < 10, f"(t=3..8, N=100, {elapsed:.1f}s)")
    for r in reports:
        assert r.passed, r.counterexamples[:3]
    assert elapsed < 10


def test_acceptance_3_set_cardinalities():
    start = time.monotonic()
    ok = True
    for t in (3, 4, 5, 6):
        for sid in SetId:
            if t % 2 and sid in (SetId.AHAT3, SetId.AHAT4):
                continue
            r = set_cardinality_vs_series(sid, t, 40)
            if not r.passed:
                ok = False
            assert r.passed, (t, sid, r.counterexamples[:3])
    elapsed = time.monotonic() - start
    _line(3, ok and elapsed < 300, f"(ten sets, t=3..6, n<=40, {elapsed:.1f}s)")
    assert elapsed < 300


def test_acceptance_4_injection_suite():
    start = time.monotonic()
    runs = []
    for m in ("phi1", "phi2", "phi3"):
        for t in (3, 5, 7):
            runs.append((m, t, 40 if t == 3 else 30))
    for m in ("zeta1", "zeta2", "zeta3"):
        for t in (4, 6, 8):
            runs.append((m, t, 40 if t == 4 else 30))
    ok = True
    for m, t, n_max in runs:
        r = verify_map(MapId(m), t, n_max)
        if not r.passed:
            ok = False
        assert r.passed, (m, t, r.counterexamples[:3])
    for t in (3, 4, 5, 6, 7, 8):
        r = verify_image_disjointness(t, 25)
        if not r.passed:
            ok = False
        assert r.passed, (t, r.counterexamples[:3])
    elapsed = time.monotonic() - start
    _line(4, ok and elapsed < 600, f"(six maps, {elapsed:.1f}s)")
    assert elapsed < 600


def test_acceptance_5_zeta2_bijectivity():
    ok = True
    for t in (4, 6, 8):
        for n in range(26):
            domain = domain_of(MapId.ZETA2, t, n)
            for x in domain:
                if zeta2_inv(zeta2(x, t).output, t) != x:
                    ok = False
            image = enumerate_set(SetId.A1, t, n)
            for mu in image:
                if zeta2(zeta2_inv(mu, t), t).output != mu:
                    ok = False
            if len(domain) != len(image):
                ok = False
            assert len(domain) == set_cardinality(SetId.A1, t, n)
    _line(5, ok, "(zeta2 bijection, t=4/6/8, n<=25)")
    assert ok


def test_acceptance_6_conjecture():
    start = time.monotonic()
    report = verify_conjecture(2, 10, 150)
    elapsed = time.monotonic() - start
    ok = (
        report.passed
        and report.exceptions == [{"t": 2, "n": 3, "gap": -1}]
        and elapsed < 120
    )
    _line(6, ok, f"(t=2..10, n<=150, one exception at (2,3), {elapsed:.1f}s)")
    assert report.passed, report.counterexamples[:3]
    assert report.exceptions == [{"t": 2, "n": 3, "gap": -1}]
    assert elapsed < 120


FIXTURES = [
    ("phi1", 3, "10,~8,7,4,1", "10,7,~6,3,1,1,1,1"),
    ("phi1", 3, "10,8,7,~4,1", "10,8,7,~3,1,1"),
    ("phi2", 3, "10,8,7,~4,1", "10,7,6,~4,1,1,1"),
    ("phi2", 3, "~16,8,4,1,1", "~12,6,3,1,1,1,1,1,1,1,1,1"),
    ("phi2", 3, "10,~8,7,4,1", "10,7,~6,3,1,1,1,1"),
    ("phi3", 3, "8,~7,6,4,2,1", "8,~7,6,3,2,1,1"),
    ("phi3", 3, "8,6,~5,4,1,1,1,1,1", "~9,8,6,3,1,1"),
    ("phi3", 3, "7,6,~5,2", "7,6,3,~2,2"),
    ("zeta1", 4, "11,6,~5,2,1,1", "11,6,~4',2,1,1,1"),
    ("zeta1", 4, "11,~10,6,5,2,1", "11,~8',6,4,2,1,1,1,1"),
    ("zeta2", 6, "11,7,~6,5,3,2,1", "11,~6,6,5,3,2,1,1"),
    ("zeta3", 6, "~11,4,2,1,1,1,1,1", "~15,4,2,1"),
    ("zeta3", 6, "~11,5,2", "6,5,3,~2,2"),
    # the two recorded pairs below are inconsistent with injectivity: the
    # outputs quoted for them are already taken by other domain elements
    # (see tests/test_maps.py TestCollisionPartners); kept verbatim so the
    # discrepancy stays visible
    ("zeta2", 6, "14,11,7,6,5,~2,1", "12,11,6,6,5,~2,1,1,1,1"),
    ("zeta3", 6, "14,~13,12,4,2,1", "~13,12,12,4,2,1,1,1"),
]


@pytest.mark.parametrize("name,t,inp,expected", FIXTURES)
def test_acceptance_7_fixtures_via_cli(capsys, name, t, inp, expected):
    rc = main(["inject", "--map", name, "--t", str(t), "--lambda", inp])
    out = capsys.readouterr().out
    sound = (name, inp) not in {
        ("zeta2", "14,11,7,6,5,~2,1"),
        ("zeta3", "14,~13,12,4,2,1"),
    }
    got = json.loads(out)["output"] if rc == 0 else None
    if sound or got == expected:
        _line(7, rc == 0 and got == expected, f"({name} t={t} {inp})")
    else:
        _line(7, False, f"({name} t={t} {inp}: recorded example defect)")
    assert rc == 0, out
    assert got == expected


def test_acceptance_8_hook_inequalities():
    b21 = hook_count_totals(2, 1, 100)
    b22 = hook_count_totals(2, 2, 100)
    b23 = hook_count_totals(2, 3, 100)
    b31 = hook_count_totals(3, 1, 100)
    b32 = hook_count_totals(3, 2, 100)
    ok = (
        all(b22[n] >= b21[n] for n in range(5, 101))
        and all(b22[n] >= b23[n] for n in range(101))
        and all(b32[n] >= b31[n] for n in range(28, 101))
    )
    _line(8, ok, "(2-hooks dominate 1- and 3-hooks in stated ranges)")
    assert ok
