import pytest

import kingdom


def test_polynomial_small_boards():
    assert kingdom.polynomial("king:1x3") == [0, 1, 3, 1]
    coeffs = kingdom.polynomial("king:3x3")
    assert sum(coeffs) == 417
    assert coeffs[-1] == 1


def test_evaluate_matches_corner_sign():
    for m in range(1, 7):
        for n in range(1, 7):
            sign = -1 if ((m + 1) // 2 * ((n + 1) // 2)) % 2 else 1
            assert kingdom.evaluate(f"king:{m}x{n}") == sign


def test_big_values_are_python_ints():
    total = kingdom.evaluate("king:12x12", 1)
    assert isinstance(total, int)
    assert total > 2**64
    assert total % 2 == 1


def test_methods_agree():
    for board in ["wazir:4x4:torus", "king:3x5:cyl-x", "king:2x2x2"]:
        oracle = kingdom.polynomial(board, method="oracle")
        assert kingdom.polynomial(board, method="auto") == oracle
    assert kingdom.compare("wazir:4x5:cyl-y")["equal"]


def test_domination_number():
    assert kingdom.domination_number("king:8x8") == 9


def test_table():
    t = kingdom.table("king", "torus", m=(3, 6), n=(3, 6))
    assert t[(4, 4)] == 63
    assert t[(6, 6)] == 11
    w = kingdom.table("wazir", m=(1, 3), n=(2, 2))
    assert [w[(m, 2)] for m in (1, 2, 3)] == [-1, 3, -3]


def test_matching():
    t = kingdom.fixed_point("king:4x3")
    assert sorted(t) == [[1, 1], [1, 3], [3, 1], [3, 3]]
    assert kingdom.partner("king:4x3", t) is None
    s = t + [[2, 2]]
    p = kingdom.partner("king:4x3", s)
    assert len(p) == len(s) - 1
    assert sorted(kingdom.partner("king:4x3", p)) == sorted(s)

    report = kingdom.verify_matching("king:3x4")
    assert report["passed"]
    assert report["fixed_points"] == 1
    assert report["signed_count"] == 1

    sample = kingdom.sampled_check("king:9x9", 2000, seed=3)
    assert sample["passed"] and sample["trials"] == 2000


def test_errors():
    with pytest.raises(ValueError):
        kingdom.polynomial("rook:3x3")
    with pytest.raises(kingdom.GuardError):
        kingdom.polynomial("king:6x6x6")
    with pytest.raises(kingdom.UnsupportedError):
        kingdom.verify_matching("king:4x4:torus")
