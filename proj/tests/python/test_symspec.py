from fractions import Fraction

import pytest

import symspec


def test_measures_and_spectrum():
    assert symspec.measures("000111") == {"r0": 3, "r1": 0, "r": 3, "lambda": 1, "rho": 2}
    assert symspec.level_spectrum("001") == [Fraction(1, 4), Fraction(-1, 4), Fraction(1, 4)]
    stats = symspec.spectral_stats(symspec.named_function("parity", 6))
    assert stats["mon"] == 2 and stats["l1"] == 1 and stats["degree"] == 6
    assert symspec.spectral_stats("0000")["degree"] is None


def test_dense_transform_matches_naive_sum():
    table = [0, 1, 1, 0, 1, 0, 0, 0]
    n = 3
    naive = [
        Fraction(sum((-1) ** bin(s & x).count("1") for x in range(8) if table[x]), 2**n)
        for s in range(8)
    ]
    assert symspec.wht(table) == naive


def test_optimization_values():
    assert symspec.approx_l1(symspec.named_function("parity", 5), Fraction(1, 5))["value"] == Fraction(4, 5)
    assert symspec.approx_l1("0101", "0.2")["value"] == Fraction(4, 5)
    assert symspec.mon_eps(symspec.expand("010"), Fraction(1, 4))["value"] == 2
    and2 = symspec.signmon([0, 0, 0, 1])
    assert and2["value"] == 3 and and2["margin"] > 0


def test_sign_polynomial():
    p = symspec.sign_poly("000111")
    assert p["verified"]
    assert p["term_count"] <= 49
    table = symspec.expand("000111")
    for x, bit in enumerate(table):
        value = sum(c * (-1) ** bin(s & x).count("1") for s, c in p["terms"].items())
        assert (value > 0) == bool(bit)


def test_lifts_and_plan():
    assert symspec.lift("01", "xor") == [[0, 1], [1, 0]]
    assert symspec.lift("01", "and") == [[0, 0], [0, 1]]
    assert len(symspec.lift(symspec.named_function("maj", 9), "and", k=3)) == 84
    stats = symspec.matrix_stats(symspec.named_function("parity", 4))
    assert stats["rank"] == 2 and stats["trace_norm"] == pytest.approx(16)
    assert symspec.plan_reduction(symspec.named_function("parity", 9)) is None
    plan = symspec.plan_reduction(symspec.named_function("maj", 9))
    assert plan["k"] * 4 <= plan["n"] - plan["t"]


def test_bs92_is_seeded():
    a = symspec.bs92(symspec.named_function("maj", 7), Fraction(1, 4), trials=10, seed=3)
    b = symspec.bs92(symspec.named_function("maj", 7), Fraction(1, 4), trials=10, seed=3)
    assert a == b
    assert all(support <= a["samples"] for _, support, _ in a["trials"])


def test_sweep_and_errors():
    rows = symspec.sweep(1, 3, ["C1", "C2"], workers=1)
    assert rows and all(r["verdict"] == "pass" for r in rows)
    with pytest.raises(symspec.SymspecError):
        symspec.sweep(1, 3, ["C99"])
    with pytest.raises(ValueError):
        symspec.measures("01x")
    with pytest.raises(symspec.CapExceeded):
        symspec.lift("0" * 20, "xor")
