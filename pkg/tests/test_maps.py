import pytest

from hookbias import (
    DomainError,
    MapId,
    NotInImageError,
    SetId,
    apply_part_map,
    parse,
    set_cardinality,
    verify_conjecture,
    verify_image_disjointness,
    verify_map,
)
from hookbias.maps import _FORWARD, _INVERSE, domain_of, zeta2, zeta2_inv


def forward(name, t, text):
    return _FORWARD[MapId(name)](parse(text), t)


# worked input/output pairs that are consistent with injectivity; the two
# recorded pairs that are not live in test_acceptance.py
SOUND_FIXTURES = [
    ("phi1", 3, "10,~8,7,4,1", "10,7,~6,3,1,1,1,1", "A1"),
    ("phi1", 3, "10,8,7,~4,1", "10,8,7,~3,1,1", "C"),
    ("phi2", 3, "10,8,7,~4,1", "10,7,6,~4,1,1,1", "D"),
    ("phi2", 3, "~16,8,4,1,1", "~12,6,3,1,1,1,1,1,1,1,1,1", "D"),
    ("phi2", 3, "10,~8,7,4,1", "10,7,~6,3,1,1,1,1", "D"),
    ("phi3", 3, "8,~7,6,4,2,1", "8,~7,6,3,2,1,1", "E"),
    ("phi3", 3, "8,6,~5,4,1,1,1,1,1", "~9,8,6,3,1,1", "E"),
    ("phi3", 3, "7,6,~5,2", "7,6,3,~2,2", "A2"),
    ("zeta1", 4, "11,6,~5,2,1,1", "11,6,~4',2,1,1,1", "Ahat3"),
    ("zeta1", 4, "11,~10,6,5,2,1", "11,~8',6,4,2,1,1,1,1", "Ahat3"),
    ("zeta2", 6, "11,7,~6,5,3,2,1", "11,~6,6,5,3,2,1,1", "A1"),
    ("zeta3", 6, "~11,4,2,1,1,1,1,1", "~15,4,2,1", "E"),
    ("zeta3", 6, "~11,5,2", "6,5,3,~2,2", "A2"),
]


class TestFixtures:
    @pytest.mark.parametrize("name,t,inp,out,codomain", SOUND_FIXTURES)
    def test_forward(self, name, t, inp, out, codomain):
        tr = forward(name, t, inp)
        assert str(tr.output) == out
        assert tr.codomain.value == codomain

    @pytest.mark.parametrize("name,t,inp,out,codomain", SOUND_FIXTURES)
    def test_inverse(self, name, t, inp, out, codomain):
        back = _INVERSE[MapId(name)](parse(out), t)
        assert str(back) == inp

    def test_domain_rejected(self):
        with pytest.raises(DomainError):
            forward("phi1", 3, "10,~9,7,4,1")
        with pytest.raises(DomainError):
            forward("phi1", 4, "10,~8,7,4,1")

    def test_part_map_kinds(self):
        assert apply_part_map("shrink", 8, 3) == (6, 2)
        assert apply_part_map("shrink-keep-2t2", 8, 3) == (8, 0)
        assert apply_part_map("grow", 6, 3) == (8, -2)
        assert apply_part_map("grow-keep-2t", 6, 3) == (6, 0)
        with pytest.raises(DomainError):
            apply_part_map("swap", 6, 3)


class TestCollisionPartners:
    """Both recorded defective worked examples have a second domain element
    that provably maps to the quoted output, so the maps must send the quoted
    inputs elsewhere to stay injective."""

    def test_zeta2_overlap(self):
        quoted_output = parse("12,11,6,6,5,~2,1,1,1,1")
        partner = parse("14,11,7,7,5,~2")
        assert str(zeta2(partner, 6).output) == str(quoted_output)
        assert zeta2_inv(quoted_output, 6) == partner
        # the quoted input has a non-overlined part equal to t, outside D
        with pytest.raises(DomainError):
            zeta2(parse("14,11,7,6,5,~2,1"), 6)

    def test_zeta3_overlap(self):
        partner = parse("~13,12,12,4,2,1,1,1")
        tr = forward("zeta3", 6, "~13,12,12,4,2,1,1,1")
        assert tr.output == partner  # fixed by the map
        # so the quoted input must also be fixed, parts 14 = 2t+2 included
        tr = forward("zeta3", 6, "14,~13,12,4,2,1")
        assert str(tr.output) == "14,~13,12,4,2,1"

    def test_zeta3_t4_case4_branches(self):
        tr = forward("zeta3", 4, "~7,5")
        assert str(tr.output) == "~8',4" and tr.codomain is SetId.AHAT4
        assert _INVERSE[MapId.ZETA3](tr.output, 4) == parse("~7,5")
        tr = forward("zeta3", 4, "~7,3")
        assert str(tr.output) == "~4',3,3" and tr.codomain is SetId.AHAT4
        assert _INVERSE[MapId.ZETA3](tr.output, 4) == parse("~7,3")


class TestExhaustive:
    @pytest.mark.parametrize(
        "name,t,n_max",
        [
            ("phi1", 3, 20), ("phi2", 3, 20), ("phi3", 3, 24),
            ("phi1", 5, 18), ("phi2", 5, 18), ("phi3", 5, 20),
            ("zeta1", 4, 20), ("zeta2", 4, 20), ("zeta3", 4, 20),
            ("zeta1", 6, 18), ("zeta2", 6, 18), ("zeta3", 6, 22),
        ],
    )
    def test_verify_map(self, name, t, n_max):
        report = verify_map(MapId(name), t, n_max)
        assert report.passed, report.counterexamples[:3]
        assert report.checked > 0

    @pytest.mark.parametrize("t", [3, 4])
    def test_image_disjointness(self, t):
        report = verify_image_disjointness(t, 18)
        assert report.passed, report.counterexamples[:3]

    def test_inverse_rejects_non_image(self):
        # in A2 for t=3 but with no matching dispatch row
        candidates = [
            x for x in domain_of(MapId.PHI3, 3, 12)
        ]
        assert candidates  # sanity
        with pytest.raises((NotInImageError, DomainError)):
            _INVERSE[MapId.PHI1](parse("~3,2"), 3)


class TestZeta2Bijection:
    @pytest.mark.parametrize("t", [4, 6])
    def test_both_composites(self, t):
        for n in range(16):
            d = domain_of(MapId.ZETA2, t, n)
            seen = set()
            for x in d:
                mu = zeta2(x, t).output
                assert zeta2_inv(mu, t) == x
                seen.add(str(mu))
            from hookbias import enumerate_set

            a1 = enumerate_set(SetId.A1, t, n)
            for mu in a1:
                assert str(zeta2(zeta2_inv(mu, t), t).output) == str(mu)
            assert len(seen) == len(a1) == len(d)


class TestConjecture:
    def test_small_range(self):
        report = verify_conjecture(2, 4, 40, ledger_n_max=15)
        assert report.passed, report.counterexamples[:3]
        assert report.exceptions == [{"t": 2, "n": 3, "gap": -1}]

    def test_missing_expected_exception_fails(self):
        report = verify_conjecture(3, 3, 20, expected_exceptions=((3, 5),))
        assert not report.passed
        assert any(
            c["check"] == "expected-exception-absent" for c in report.counterexamples
        )

    def test_unexpected_violation_fails(self):
        report = verify_conjecture(2, 2, 10, expected_exceptions=())
        assert not report.passed
        assert any(c["check"] == "inequality" for c in report.counterexamples)
