from tanglekit import corpus
from tanglekit.checks import (euler_jones_check, mirror_duality_check,
                              mirror_mark, normalized_jones,
                              reduced_euler_check, reduced_les_check,
                              shear_check, skein_les_check, smooth_at)
from tanglekit.diagrams import component_count, mirror
from tanglekit.kh_standard import h_kh_standard
from tanglekit.laurent import LaurentPoly

# known Khovanov homology over Q in the standard grading
KH_TREFOIL = {(0, -1): 1, (0, -3): 1, (-2, -5): 1, (-3, -9): 1}
KH_TREFOIL_MIRROR = {(0, 1): 1, (0, 3): 1, (2, 5): 1, (3, 9): 1}
KH_HOPF = {(0, 0): 1, (0, -2): 1, (-2, -4): 1, (-2, -6): 1}
KH_FIG8 = {(-2, -5): 1, (-1, -1): 1, (0, -1): 1, (0, 1): 1, (1, 1): 1, (2, 5): 1}


def test_standard_khovanov_textbook_values():
    assert h_kh_standard(corpus.UNKNOT) == {(0, 1): 1, (0, -1): 1}
    assert h_kh_standard(corpus.TREFOIL) == KH_TREFOIL
    assert h_kh_standard(corpus.TREFOIL_MIRROR) == KH_TREFOIL_MIRROR
    assert h_kh_standard(corpus.HOPF) == KH_HOPF
    assert h_kh_standard(corpus.FIGURE_EIGHT) == KH_FIG8


def test_shear_small_corpus():
    for name in ("unknot", "unknot-kink-t1", "trefoil", "hopf", "figure-eight"):
        assert shear_check(corpus.LINKS[name]), name


def test_euler_jones_small_corpus():
    for name in ("unknot", "unlink2", "hopf", "trefoil", "figure-eight"):
        ok, chi, expected = euler_jones_check(corpus.LINKS[name])
        assert ok, (name, str(chi), str(expected))


def test_mirror_duality():
    for name in ("unknot", "trefoil", "hopf", "figure-eight"):
        assert mirror_duality_check(corpus.LINKS[name]), name


def test_smooth_at():
    k0 = smooth_at(corpus.TREFOIL, 0, to_one=False)
    k1 = smooth_at(corpus.TREFOIL, 0, to_one=True)
    # smoothing one trefoil crossing leaves the unknot and the Hopf link:
    # a type-2 crossing has the turnback as its 0-smoothing
    assert len(k0.crossings()) == 2 and len(k1.crossings()) == 2
    assert component_count(k0) == 1
    assert component_count(k1) == 2


def test_skein_trefoil_every_crossing():
    for s in range(3):
        report = skein_les_check(corpus.TREFOIL, s)
        assert report.ok, (s, report.lines)


def test_skein_figure_eight():
    report = skein_les_check(corpus.FIGURE_EIGHT, 2)
    assert report.ok, report.lines


def test_skein_one_crossing_unknots():
    for k in (corpus.UNKNOT_KINK_T1, corpus.UNKNOT_KINK_T2):
        report = skein_les_check(k, 0)
        assert report.ok, report.lines


def test_normalized_jones():
    assert normalized_jones(corpus.UNKNOT) == LaurentPoly.one()
    assert normalized_jones(corpus.TREFOIL) == LaurentPoly({-2: 1, -6: 1, -8: -1})


def test_reduced_euler_corpus():
    for name in ("unknot", "trefoil", "trefoil-mirror", "figure-eight", "hopf"):
        ok, chi, expected = reduced_euler_check(corpus.LINKS[name], 1, 1)
        assert ok, (name, str(chi), str(expected))


def test_mirror_mark():
    ordinal, leg = mirror_mark(corpus.TREFOIL, 1, 1)
    m = mirror(corpus.TREFOIL)
    assert 1 <= ordinal <= len(m.cap_layers())
    assert leg in (1, 2)


def test_reduced_les():
    for name in ("unknot", "unknot-kink-t1", "trefoil", "figure-eight", "hopf"):
        report = reduced_les_check(corpus.LINKS[name], 1, 1)
        assert report.ok, (name, report.lines)
