import random
from dataclasses import replace
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdesign import cipher, fixtures
from qdesign.errors import DecodeError, ParseError
from qdesign.scalars import QMatrix


def test_hand_example_values():
    key = fixtures.load_key("window3")
    cg = cipher.encode(key, 1, multipliers=[2, 5, Fraction(7, 2)])
    # the entry at the secret position is ignored
    assert cg.coefficients == (Fraction(1, 2), 5, Fraction(7, 6))
    assert cg.offset == 1


def test_windows_offset():
    rng = random.Random(1)
    rows = [[Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(6)] for _ in range(6)]
    key = cipher.PrivateKey(QMatrix.rational(rows), cipher.merge_chain(3), layer=2, offset=3, window=3)
    assert key.window_matrix.entries[0][0] == rows[2][2]
    for s in (3, 4, 5):
        assert cipher.decode(key, cipher.encode(key, s, seed=s)) == s
    with pytest.raises(ValueError):
        cipher.encode(key, 2)


def test_offset_may_stay_secret():
    key = replace(cipher.keygen(12, 4, seed=5), offset=6, send_offset=False)
    cg = cipher.encode(key, 8, seed=1)
    assert cg.offset is None
    assert cipher.decode(key, cg) == 8
    assert "p " not in cipher.serialize_cryptogram(cg)


def test_keygen_is_deterministic():
    a, b = cipher.keygen(20, seed=42), cipher.keygen(20, seed=42)
    assert cipher.serialize_key(a) == cipher.serialize_key(b)
    assert cipher.serialize_key(a) != cipher.serialize_key(cipher.keygen(20, seed=43))
    assert a.diagram.name == "figure6"
    assert cipher.keygen(5, 4, seed=1).diagram.name == "chain4"


def test_keygen_density():
    key = cipher.keygen(10, 3, seed=2, density=0.0)
    assert all(x == 1 for row in key.qmatrix.entries for x in row)
    with pytest.raises(ValueError):
        cipher.keygen(3, 4)


def test_key_validation():
    Q = QMatrix.constant(4, 2)
    with pytest.raises(ValueError):
        cipher.PrivateKey(Q, cipher.merge_chain(3), layer=2, offset=3, window=3)
    with pytest.raises(ValueError):
        cipher.PrivateKey(Q, cipher.merge_chain(3), layer=4, window=3)
    with pytest.raises(ValueError):
        cipher.PrivateKey(Q, cipher.merge_chain(3), layer=2, line=2, window=3)
    with pytest.raises(ValueError):
        cipher.PrivateKey(QMatrix.constant(4, -2), cipher.merge_chain(3), layer=2, window=3)


def test_tampering_is_detected():
    key = cipher.keygen(20, seed=7)
    cg = cipher.encode(key, 4, seed=7)
    d = cipher.unmask(key, cg)
    s = d.index(1)
    bad = list(cg.coefficients)
    bad[s] *= 3
    with pytest.raises(DecodeError):
        cipher.decode(key, cipher.Cryptogram(cg.offset, tuple(bad)))
    # forcing a second unit makes the answer ambiguous
    bad = list(cg.coefficients)
    other = (s + 1) % len(bad)
    bad[other] /= d[other]
    with pytest.raises(DecodeError, match="several"):
        cipher.decode(key, cipher.Cryptogram(cg.offset, tuple(bad)))
    with pytest.raises(DecodeError):
        cipher.decode(key, cipher.Cryptogram(1, cg.coefficients[:-1]))


def test_bad_multipliers():
    key = fixtures.load_key("window3")
    with pytest.raises(ValueError):
        cipher.encode(key, 1, multipliers=[1, 1, 2])
    with pytest.raises(ValueError):
        cipher.encode(key, 1, multipliers=[1, 2])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32), st.integers(2, 8), st.data())
def test_round_trip_any_line(seed, m, data):
    key = cipher.keygen(m + 3, m, seed=seed)
    layer = data.draw(st.integers(0, len(key.diagram.layers)))
    width = len(key._trace[layer])
    line = data.draw(st.integers(1, width))
    offset = data.draw(st.integers(1, 4))
    key = replace(key, layer=layer, line=line, offset=offset)
    s = data.draw(st.integers(offset, offset + m - 1))
    cg = cipher.encode(key, s, seed=seed)
    assert cipher.decode(key, cg) == s
    again = cipher.parse_key(cipher.serialize_key(key))
    assert again == key
    assert cipher.parse_cryptogram(cipher.serialize_cryptogram(cg)) == cg


def test_plaintext_words_and_offsets():
    key = replace(cipher.keygen(20, seed=3), offset=4, vocab_offset=2)
    vocab = fixtures.load_vocabulary("words")
    s = cipher.word_index(key, vocab, "kettle")
    assert s == 11 - 2
    assert cipher.plaintext(key, vocab, cipher.decode(key, cipher.encode(key, s, seed=0))) == "kettle"


def test_key_file_references(tmp_path):
    (tmp_path / "w.qm").write_text(fixtures.read("window3", "key").split("qmatrix inline\n")[1].split("end")[0])
    (tmp_path / "k.key").write_text("key v1\nqmatrix w.qm\ndiagram figure6\nlayer 14\n")
    with pytest.raises(ParseError):
        fixtures.load_key(tmp_path / "k.key")  # window 10 does not fit n = 3
    (tmp_path / "k.key").write_text("key v1\nqmatrix w.qm\ndiagram missing\nlayer 1\n")
    with pytest.raises(ParseError):
        fixtures.load_key(tmp_path / "k.key")
    (tmp_path / "k.key").write_text("key v1\nqmatrix car\ndiagram figure6\nlayer 14\n")
    key = fixtures.load_key(tmp_path / "k.key")
    assert key.window == 10 and key.word == (5, 6, 4, 7, 3, 8, 2, 9, 1, 10)


@pytest.mark.parametrize(
    "text",
    [
        "ct v1\nc 1 1/2\n",
        "ct v1\nm 2\nc 1 1/2\n",
        "ct v1\nm 1\nc 1 -1/2\n",
        "ct v1\nm 1\nc 1 0\n",
        "ct v1\nm 1\nc 1 1\nc 1 2\n",
        "ct v1\np 0\nm 1\nc 1 1\n",
        "ct v1\nm 1\nc 1 1\nz 2\n",
    ],
)
def test_cryptogram_parse_errors(text):
    with pytest.raises(ParseError):
        cipher.parse_cryptogram(text)


def test_key_parse_errors():
    with pytest.raises(ParseError):
        cipher.parse_key("key v1\nqmatrix inline\nqmatrix v1\n")
    with pytest.raises(ParseError, match="needs 'layer'"):
        cipher.parse_key("key v1\nqmatrix car\ndiagram figure6\n")
    with pytest.raises(ParseError):
        cipher.parse_key("key v1\nqmatrix car\ndiagram figure6\nlayer 1\nsend-offset maybe\n")


def test_window_word_by_layer():
    key = cipher.keygen(10, 10, seed=0)
    assert key.word == (5, 6, 4, 7, 3, 8, 2, 9, 1, 10)
    assert replace(key, layer=7).word == (5, 6)
    assert replace(key, layer=0, line=4).word == (4,)
    with pytest.raises(ValueError):
        cipher.keygen(5, 10)
