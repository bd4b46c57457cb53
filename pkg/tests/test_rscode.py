import pytest
from hypothesis import given, strategies as st

from treechase.galois import poly_eval
from treechase.rscode import codebook, encode, is_codeword, make_code, message_of


def test_code_parameters(code54, code16):
    assert (code54.d_min, code54.t_min) == (3, 1)
    assert (code16.d_min, code16.t_min) == (5, 2)
    assert code54.eval_points == (0, 1, 2, 3)
    assert len(set(code16.eval_points)) == 15
    assert all(x != 0 for x in code16.eval_points)


def test_encode_is_evaluation(code54):
    msg = [1, 2]
    cw = encode(code54, msg)
    assert cw == (1, 3, 0, 2)
    assert cw == tuple(poly_eval(code54.field, msg, x) for x in code54.eval_points)


def test_encode_rejects_overlong_message(code54):
    with pytest.raises(ValueError):
        encode(code54, [1, 2, 3])


@given(st.lists(st.integers(0, 4), min_size=2, max_size=2))
def test_message_roundtrip_gf5(msg):
    code = make_code(5, 1, 4, 2)
    cw = encode(code, msg)
    assert is_codeword(code, cw)
    got = message_of(code, cw)
    assert got + [0] * (2 - len(got)) == msg


@given(st.lists(st.integers(0, 15), min_size=11, max_size=11))
def test_message_roundtrip_gf16(msg):
    code = make_code(2, 4, 15, 11)
    cw = encode(code, msg)
    assert is_codeword(code, cw)
    got = message_of(code, cw)
    assert got + [0] * (11 - len(got)) == msg


def test_non_codeword_detected(code54):
    cw = list(encode(code54, [2, 3]))
    cw[0] = (cw[0] + 1) % 5
    assert not is_codeword(code54, cw)


def test_codebook_enumerates_all_messages(code54, code76):
    cb54 = codebook(code54)
    assert len(cb54) == 25
    assert len({cw for _, cw in cb54}) == 25
    cb76 = codebook(code76)
    assert len(cb76) == 49
    assert all(is_codeword(code76, cw) for _, cw in cb76)


def test_minimum_distance_exhaustive(code54):
    cws = [cw for _, cw in codebook(code54)]
    dists = [sum(a != b for a, b in zip(u, v))
             for i, u in enumerate(cws) for v in cws[i + 1:]]
    assert min(dists) == code54.d_min


def test_make_code_validation():
    with pytest.raises(ValueError):
        make_code(5, 1, 6, 2)    # n > q for a prime field
    with pytest.raises(ValueError):
        make_code(2, 4, 16, 2)   # n > q - 1 for an extension field
    with pytest.raises(ValueError):
        make_code(5, 1, 4, 5)    # k > n
    with pytest.raises(ValueError):
        make_code(5, 1, 4, 0)
