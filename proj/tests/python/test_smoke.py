import cubiclat


def test_version_and_families():
    assert cubiclat.version()
    fams = cubiclat.builtin_families()
    assert set(fams) == {"c18-c14", "c18-c26", "c18-c38", "c8-c26", "c8-c38"}


def test_det_exact():
    assert cubiclat.det_exact([[3, 4, 6], [4, 10, 8], [6, 8, 18]]) == 84
    assert cubiclat.det_exact([[1, 0], [0, 1]]) == 1


def test_admissible_ranges():
    assert cubiclat.admissible_tau_range("c18-c14") == list(range(3, 14))
    assert cubiclat.admissible_tau_range("c8-c38") == list(range(-2, 10))


def test_classify():
    empty = cubiclat.classify("c18-c14", 3)
    assert empty["status"] == "empty"
    assert empty["witness"] == [4, -1, -1]
    nonempty = cubiclat.classify("c18-c14", 10)
    assert nonempty["status"] == "nonempty"
    assert nonempty["discriminant"] == 72


def test_short_vectors_empty_slot():
    assert cubiclat.short_vectors("c18-c14", 8, 2) == []


def test_sieve_irreducible():
    v = cubiclat.sieve("c8-c26", -1)
    assert v["irreducible"]
    assert v["candidates_checked"] == 4 + 9 + 36
    assert all(not c["accepted"] for c in v["candidates"])


def test_brauer_reports():
    dp6 = cubiclat.brauer("c18-c14", 5)
    assert dp6["b2"] == "trivial" and dp6["b2_witness"] == (0, 4, -7)
    quad = cubiclat.brauer("c8-c26", 4)
    assert quad["beta"] == "trivial"
    assert quad["canonical_witness"] == (0, 3, 1)


def test_report_roundtrip():
    d = cubiclat.report_dict("c8-c38")
    assert d["family"] == "c8-c38"
    assert len(d["rows"]) == 12
    taus = [row["tau"] for row in d["rows"]]
    assert taus == sorted(taus)


def test_verify_all():
    res = cubiclat.verify()
    assert res["ok"], "\n".join(res["lines"])
    assert "65 component rows verified" in res["summary"]
