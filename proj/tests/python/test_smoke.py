import _dsolid as ds


def test_tables_row_counts():
    data = ds.tables(5)
    counts = {t["type"]: len(t["rows"]) for t in data["types"]}
    assert counts == {"A0": 1, "A1": 3, "A2": 8, "A3": 10}
    assert data["types"][0]["rows"][0]["sequence"] == "-4^1,-1^3,-2^2;-4^1,-1^3,-2^2"


def test_enumerate_count():
    assert ds.enumerate_count(4, "A2") == 2
    assert ds.enumerate_count(3, "A3") == 1


def test_analyze_invariants():
    rep = ds.analyze([1, 3, 8, 13, 5, 2], ridge1=True, ridge_k=False)
    assert rep["e"] == 14
    rep = ds.analyze([1, 2, 1, 1])
    assert rep["m"] == 2 and rep["m_exact"]


def test_fibonacci_reference_row():
    rows = {r["n"]: r for r in ds.fibonacci(11)["rows"]}
    assert rows[10]["e"] == 35 and not rows[10]["mismatch"]
    assert rows[11]["e"] == 56 and rows[11]["mismatch"]


def test_bitangents():
    data = ds.bitangents("A0")
    assert data["counts"] == {"classes": 56, "pairs": 28, "real_non_ridge": 3}
    assert ds.bitangents("A3")["counts"]["classes"] == 0


def test_quartic_verification():
    data = ds.quartic("A2", m=2, seed=1)
    assert data["ok"]
    assert all(p["at_q"] == "A2" for p in data["planes"])


def test_lattice_helpers():
    h1 = [1, 0, 0, 0, 0, 0, 0, 0]
    h2 = [0, 1, 0, 0, 0, 0, 0, 0]
    e3 = [0, 0, 0, 0, 1, 0, 0, 0]
    eb3 = [0, 0, 0, 0, 0, 0, 0, 1]
    assert ds.intersect(h1, h2) == 1
    assert ds.intersect(e3, e3) == -1
    assert ds.conjugate(e3) == eb3
    assert ds.h0(7, 7) == 10
    assert ds.riemann_roch(4, 1) == 2
