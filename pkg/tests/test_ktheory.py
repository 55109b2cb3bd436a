import pytest

from tanglekit import corpus, ktheory as kt, rt
from tanglekit.diagrams import DiagramError
from tanglekit.laurent import CIRCLE, LaurentPoly

Q = LaurentPoly.q


def basis(width, mask=0):
    return kt.KVector.basis(width, mask)


def test_cap_op_examples():
    v = kt.cap_op(1, 2, basis(0))
    assert v.terms == {0b10: LaurentPoly.one(), 0b01: Q(2, -1)}
    v = kt.cap_op(1, 4, basis(2, 0b10))
    assert v.terms == {0b1010: Q(2), 0b0110: Q(4, -1)}


def test_cap_op_linearity():
    a, b = Q(2, 3), Q(-1, -5)
    va, vb = basis(2, 0b01), basis(2, 0b11)
    lhs = kt.cap_op(2, 4, va.scale(a) + vb.scale(b))
    rhs = kt.cap_op(2, 4, va).scale(a) + kt.cap_op(2, 4, vb).scale(b)
    assert lhs == rhs


def test_cup_op_cases():
    assert kt.cup_op(1, 2, basis(2, 0b01)).terms == {0: Q(-1)}
    assert kt.cup_op(1, 2, basis(2, 0b10)).terms == {0: Q(-1, -1)}
    assert kt.cup_op(1, 2, basis(2, 0b00)).terms == {}
    assert kt.cup_op(1, 2, basis(2, 0b11)).terms == {}
    with pytest.raises(DiagramError):
        kt.cup_op(2, 2, basis(2))


def test_r0_decategorified():
    for n in range(2, 6):
        for i in range(1, n - 1):
            for mask in range(1 << (n - 2)):
                b = basis(n - 2, mask)
                assert kt.cup_op(i + 1, n, kt.cap_op(i, n, b)) == b
                assert kt.cup_op(i, n, kt.cap_op(i + 1, n, b)) == b


def test_circle_value():
    for n in range(2, 6):
        for i in range(1, n):
            for mask in range(1 << (n - 2)):
                b = basis(n - 2, mask)
                assert kt.cup_op(i, n, kt.cap_op(i, n, b)) == b.scale(CIRCLE)


def test_alpha():
    assert kt.alpha(basis(3, 0)) == {0: LaurentPoly.one()}
    assert kt.alpha(basis(2, 0b11)) == {0b11: Q(-3)}
    for mask in range(8):
        v = basis(3, mask).scale(Q(2, 7))
        assert kt.alpha_inv(kt.alpha(v), 3) == v


def test_crossing_type2_kauffman():
    v = kt.crossing_op(1, 2, 2, basis(2, 0))
    assert v.terms == {0: Q(-1, -1)}


def test_crossing_r2():
    for n in (2, 3, 4):
        for i in range(1, n):
            for mask in range(1 << n):
                b = basis(n, mask)
                assert kt.crossing_op(i, n, 1, kt.crossing_op(i, n, 2, b)) == b
                assert kt.crossing_op(i, n, 2, kt.crossing_op(i, n, 1, b)) == b


def test_crossing_scalars():
    for mask in range(4):
        b = basis(2, mask)
        assert kt.crossing_op(1, 2, 3, b) == kt.crossing_op(1, 2, 1, b).scale(Q(-3))
        assert kt.crossing_op(1, 2, 4, b) == kt.crossing_op(1, 2, 2, b).scale(Q(3))


def test_apply():
    assert kt.apply(corpus.UNKNOT, basis(0)).terms == {0: CIRCLE}
    from tanglekit.diagrams import identity
    v = basis(3, 0b101).scale(Q(1, 4))
    assert kt.apply(identity(3), v) == v


def test_intertwining_suite():
    checked, failures = kt.intertwining_failures(4)
    assert failures == []
    assert checked > 300


def test_intertwining_on_composites():
    for k in (corpus.TREFOIL, corpus.HOPF, corpus.UNKNOT_KINK_T1,
              corpus.PITCHFORK_A1):
        lhs = kt.alpha(kt.apply(k, basis(0)))
        rhs = rt.psi(k).apply(kt.alpha(basis(0)))
        assert lhs == rhs


def test_shift_scalar_report():
    report = kt.shift_scalar_report()
    assert report["1"] == "agree"
    assert report["3"] == "agree"
    assert report["4"] == "agree"
    assert "kernel shifts" in report["note"]
