import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_diagram, typed_matrix

from qdesign import fixtures
from qdesign.diagram import (
    Box,
    Cross,
    CrossInv,
    Diagram,
    Id,
    Layer,
    Mul,
    TruncationError,
    dense_operator,
    dense_oracle,
    evaluate,
    parse_diagram,
    run,
    serialize_diagram,
    state_at,
    validate,
)
from qdesign.errors import EvaluationError, ParseError, ValidationError
from qdesign.scalars import CoeffMonomial, QMatrix, eval_monomial
from qdesign._text import canonical

FIG2 = fixtures.load_diagram("figure2")
COCA = fixtures.load_qmatrix("coca")


def test_figure2_structure():
    assert FIG2.name == "figure2"
    assert FIG2.inputs == (1, 2, 3, 4)
    assert len(FIG2.layers) == 6
    assert FIG2.boxes() == {Box("f", 1, 5).morphism, Box("f", 2, 6).morphism, Box("f", 3, 7).morphism, Box("f", 4, 8).morphism}


def test_figure2_coefficient():
    r = evaluate(FIG2, COCA)
    assert r.global_coeff == CoeffMonomial({(5, 6): 1, (5, 7): 1, (5, 8): 1, (6, 5): 1, (7, 5): 1, (8, 5): 1})
    # 2+3+4 twice over is 18, i.e. 4 mod 7
    assert sum(COCA.entry(*p) * e for p, e in r.global_coeff.items()) == 18


def test_figure6_reading():
    d = fixtures.load_diagram("figure6")
    Q = fixtures.load_qmatrix("car")
    assert d.inputs == tuple(range(1, 11))
    assert len(d.layers) == 14
    assert evaluate(d, Q).words == [(5, 6, 4, 7, 3, 8, 2, 9, 1, 10)]
    assert state_at(d, Q, 7)[0].word == (5, 6)
    assert state_at(d, Q, 0) == tuple(run(d).trace[0])
    with pytest.raises(IndexError):
        state_at(d, Q, 15)


def test_parse_tokens():
    d = parse_diagram("diagram v1\nname t\ninputs 1 2 3\nlayer bend x id\nlayer xi id\nlayer m id\nlayer g:1>1 id\n")
    assert d.layers[0].gates == (Id(), Cross(), Id())
    assert d.layers[1].gates == (CrossInv(), Id())
    assert d.layers[2].gates == (Mul(), Id())
    assert d.layers[3].gates == (Box("g", 1, 1), Id())


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("", 1, 1),
        ("name x\n", 1, 1),
        ("diagram v1\nname a\ninputs 1 2\nlayer x y\n", 4, 9),
        ("diagram v1\nname a\ninputs 1\nlayer f:1-2\n", 4, 7),
        ("diagram v1\nname a\ninputs 1\nlayer f:1>\n", 4, 7),
        ("diagram v1\nname a\ninputs 1 q\n", 3, 10),
        ("diagram v1\nname a\nweird 1\n", 3, 1),
    ],
)
def test_parse_errors(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_diagram(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert str(info.value).startswith(f"line {line}, column {column}:")


def test_bend_is_discarded_on_serialization():
    d = parse_diagram("diagram v1\nname a\ninputs 1 2\nlayer bend bend\nlayer x\n")
    assert "bend" not in serialize_diagram(d)
    assert run(d).words == [(2,), (1,)]


def test_fixture_round_trips():
    for name in fixtures.names("diagram"):
        d = fixtures.load_diagram(name)
        assert parse_diagram(serialize_diagram(d)) == d
        assert canonical(serialize_diagram(d)) == canonical(fixtures.read(name, "diagram"))


def test_validation_issues():
    Q = QMatrix.constant(3, 2)
    d = Diagram("bad", (1, 4), (Layer((Id(),)), Layer((Box("f", 1, 9),))))
    issues = [str(i) for i in validate(d, Q)]
    assert issues[0] == "input 2 uses generator 4 outside 1..3"
    assert any("layer 1" in s and "consume 1 wires but 2 enter" in s for s in issues)
    assert any("generator 9" in s for s in issues)
    with pytest.raises(ValidationError):
        evaluate(d, Q)


def test_undeclared_and_inadmissible_boxes():
    d = Diagram("b", (1,), (Layer((Box("f", 1, 2),)),))
    issues = [str(i) for i in validate(d, COCA, boxes=[])]
    assert any("not a declared rule" in s for s in issues)
    assert any("inadmissible" in s for s in issues)
    ok = Diagram("b", (1,), (Layer((Box("f", 1, 5),)),))
    assert validate(ok, COCA, boxes=[Box("f", 1, 5).morphism]) == []


def test_box_on_a_merged_wire_fails_at_runtime():
    d = Diagram("b", (1, 1), (Layer((Mul(),)), Layer((Box("f", 1, 5),))))
    assert validate(d, COCA) == []
    with pytest.raises(EvaluationError):
        run(d)


def test_empty_diagram():
    d = parse_diagram("diagram v1\nname empty\ninputs\n")
    r = evaluate(d, COCA)
    assert r.wires == () and r.global_coeff.is_identity


def _random_case(seed):
    rng = random.Random(seed)
    Q = typed_matrix(rng, rng.randint(2, 4))
    return Q, random_diagram(rng, Q)


@pytest.mark.parametrize("seed", range(40))
def test_oracle_sparse_and_dense_agree(seed):
    Q, d = _random_case(seed)
    r = evaluate(d, Q)
    o = dense_oracle(d, Q, truncation_length=4)
    assert o.words == tuple(r.words)
    assert o.value == r.value(Q)
    if Q.n**d.width <= 32:
        M = dense_operator(d, Q)
        src = sum((a - 1) * Q.n ** (d.width - 1 - k) for k, a in enumerate(d.inputs))
        flat = [a for w in r.words for a in w]
        dst = sum((a - 1) * Q.n ** (len(flat) - 1 - k) for k, a in enumerate(flat))
        column = M[:, src]
        assert column[dst] == r.value(Q)
        assert sum(1 for x in column if x != 0) == 1


def test_oracle_truncation():
    d = Diagram("t", (1, 1, 1), (Layer((Mul(), Id())), Layer((Mul(),))))
    with pytest.raises(TruncationError):
        dense_oracle(d, QMatrix.constant(2, 2), truncation_length=2)
    with pytest.raises(TruncationError):
        dense_operator(Diagram("w", (1,) * 6, ()), QMatrix.constant(5, 2), max_dim=100)


def test_cyclotomic_oracle_is_numeric():
    o = dense_oracle(FIG2, COCA, truncation_length=4)
    assert abs(o.value - np.exp(2j * np.pi * 4 / 7)) < 1e-12


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_crossing_then_inverse_is_identity(seed):
    Q, d = _random_case(seed)
    r = run(d)
    if len(r.wires) < 2:
        return
    k = random.Random(seed).randrange(len(r.wires) - 1)
    pad_l, pad_r = (Id(),) * k, (Id(),) * (len(r.wires) - k - 2)
    twisted = d.then(Layer(pad_l + (Cross(),) + pad_r), Layer(pad_l + (CrossInv(),) + pad_r))
    assert run(twisted).wires == r.wires
    untwisted = d.then(Layer(pad_l + (CrossInv(),) + pad_r), Layer(pad_l + (Cross(),) + pad_r))
    assert run(untwisted).wires == r.wires


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.data())
def test_identity_layers_change_nothing(seed, data):
    Q, d = _random_case(seed)
    i = data.draw(st.integers(0, len(d.layers)))
    width = run(d).trace[i]
    padded = d.insert(i, Layer.identity(len(width)))
    assert run(padded).wires == run(d).wires
    assert len(padded.layers) == len(d.layers) + 1


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_serialization_round_trip(seed):
    _, d = _random_case(seed)
    assert parse_diagram(serialize_diagram(d)) == d


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_letters_are_conserved_and_coefficients_multiply(seed):
    Q, d = _random_case(seed)
    r = run(d)
    letters = sorted(a for w in r.words for a in w)
    # boxes relabel letters but never create or destroy them
    assert len(letters) == d.width
    total = Fraction(1)
    for w in r.wires:
        total *= eval_monomial(w.coeff, Q)
    assert total == r.value(Q)
