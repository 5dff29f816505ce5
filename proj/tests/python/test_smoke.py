import pytest

import trinity


def test_snf():
    s, u, v = trinity.snf([[3, -1, -1], [-1, 3, -1], [-1, -1, 3]])
    assert [s[i][i] for i in range(3)] == [1, 4, 4]
    assert trinity.smith_diagonal([[2, -1], [-2, 3]]) == [1, 4]


def test_cokernel_and_groups():
    assert trinity.cokernel([[0, 0, 0], [0, 0, 0]]) == (3, ())
    assert trinity.cokernel([[3, -1, -1], [-1, 3, -1], [-1, -1, 3]]) == (0, (4, 4))
    assert trinity.group_text([4, 6]) == "Z/2 + Z/12"
    assert trinity.parse_group_spec("2^3+4") == (0, (2, 2, 2, 4))
    big = 10**30 + 7
    assert trinity.cokernel([[big]]) == (0, (big,))


def test_families():
    doc = trinity.build_family("abc", 1, 1, 1)
    assert len(doc["vertices"]) == 4
    assert len(doc["arcs"]) == 12
    assert trinity.sandpile_group(doc) == (0, (4, 4))
    assert trinity.sandpile_group(trinity.build_family("dipole", 5)) == (0, (5,))
    with pytest.raises(ValueError):
        trinity.build_family("abc", 0, 1, 1)


def test_plan():
    assert trinity.plan_group("2+2")["verdict"] == "NonExistent"
    assert trinity.plan_group("3+3")["verdict"] == "Unknown"
    plan = trinity.plan_group("4+4")
    assert plan["verdict"] == "Construct"
    assert plan["recipe"] == ("abc", [1, 1, 1])
    assert trinity.sandpile_group(plan["document"]) == (0, (4, 4))


def test_bitrades():
    w = [("r0", "c0", "s0"), ("r0", "c1", "s1"), ("r1", "c0", "s1"), ("r1", "c1", "s0")]
    assert trinity.canonical_group(w) == (2, (2,))
    found = trinity.enumerate_bitrades(8)
    assert len(found) == 11
    groups = {trinity.canonical_group(W) for W, B in found}
    assert (2, (2, 2)) not in groups


def test_suite():
    report = trinity.run_suite("trinity", 6)
    assert report["passed"]
    with pytest.raises(ValueError):
        trinity.run_suite("bogus")
