from psbe.classify import check_pseudo_be, check_pseudo_bck, classify


def names(alg, verdict):
    return tuple(alg.element_names[i] for i in verdict.witness)


def test_all_fixtures_are_pseudo_be(any_fixture):
    assert bool(check_pseudo_be(any_fixture))


def test_psbe4_not_bck_witness(psbe4):
    v = check_pseudo_bck(psbe4)
    assert not v
    assert names(psbe4, v) == ("a", "b")


def test_psbe5_not_bck_witness(psbe5):
    v = check_pseudo_bck(psbe5)
    assert not v
    assert names(psbe5, v) == ("b", "c")


def test_psbe5_flags(psbe5):
    report, _ = classify(psbe5)
    assert report.holds("distributive_i")
    assert report.holds("condition_M") and report.holds("condition_T")
    assert not report.holds("commutative")
    assert not report.holds("poset")          # a<=d<=a with a != d
    assert not report.holds("bounded")


def test_bc4_flags(bc4):
    report, _ = classify(bc4)
    for flag in ("pseudo_bck", "bounded", "commutative", "good",
                 "lattice", "has_pP", "pseudo_mv"):
        assert report.holds(flag), flag
    # both implications coincide: the algebra is its own "pseudo" twin
    assert bc4.arrow == bc4.squig


def test_inv6_flags(inv6):
    report, _ = classify(inv6)
    assert report.holds("pseudo_bck")
    assert report.holds("bounded") and report.holds("good")
    assert report.holds("involutive")
    assert not report.holds("commutative")
    assert report.holds("poset")
    assert not report.holds("meet_semilattice")  # some pairs have no infimum


def test_bc4_derived_tables(bc4):
    _, ops = classify(bc4)
    nm = bc4.element_names
    odot = [[nm[v] for v in row] for row in ops.odot]
    oplus = [[nm[v] for v in row] for row in ops.oplus]
    assert odot == [["1", "a", "b", "0"],
                    ["a", "a", "0", "0"],
                    ["b", "0", "b", "0"],
                    ["0", "0", "0", "0"]]
    assert oplus == [["1", "1", "1", "1"],
                     ["1", "a", "1", "a"],
                     ["1", "1", "b", "b"],
                     ["1", "a", "b", "0"]]


def test_negations_involutive(inv6):
    _, ops = classify(inv6)
    n = inv6.size
    for x in range(n):
        assert ops.neg_sim[ops.neg_minus[x]] == x
        assert ops.neg_minus[ops.neg_sim[x]] == x


def test_report_json_shape(any_fixture):
    report, _ = classify(any_fixture)
    doc = report.to_json(any_fixture)
    for verdict in doc.values():
        assert verdict["status"] in ("holds", "fails", "not_applicable")
