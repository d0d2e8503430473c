"""Session-script parsing: grammar, error positions, round trips."""

import pytest

from arithdeg.errors import NameResolutionError, SessionSyntaxError
from arithdeg.fields import GF, QQ
from arithdeg.session import parse_session


GOOD = "ring S=Q[x,y]; ideal J=x^2,x*y; task adeg J;"


def test_parse_minimal():
    script = parse_session(GOOD)
    assert script.ring_name == "S"
    assert script.ring.names == ("x", "y")
    assert script.ring.field == QQ
    assert script.ideal_order == ["J"]
    assert len(script.ideals["J"]) == 2
    assert script.tasks == [("adeg", "J")]


def test_parse_prime_field():
    script = parse_session("ring S = Zp(32003)[x,y]; ideal J = x; task gb J;")
    assert script.ring.field == GF(32003)


def test_missing_semicolon_position():
    with pytest.raises(SessionSyntaxError) as err:
        parse_session("ring S = Q[x,y];\nideal J = x^2, x*y\ntask adeg J;")
    assert err.value.line >= 2


def test_unknown_task():
    with pytest.raises(SessionSyntaxError):
        parse_session("ring S=Q[x]; ideal J=x; task frobnicate J;")


def test_undeclared_name():
    with pytest.raises(NameResolutionError):
        parse_session("ring S=Q[x,y]; ideal J=x^2; task verify J I;")


def test_duplicate_names():
    with pytest.raises(SessionSyntaxError):
        parse_session("ring S=Q[x]; ideal J=x; ideal J=x^2; task gb J;")


def test_unknown_variable_in_ideal():
    with pytest.raises(SessionSyntaxError):
        parse_session("ring S=Q[x]; ideal J=z^2; task gb J;")


def test_comments_and_whitespace():
    text = """
    # comment line
    ring S = Q[x, y];   # trailing comment
    ideal J = x^2 ,
              x*y;
    task adeg J;
    """
    script = parse_session(text)
    assert script.tasks == [("adeg", "J")]


def test_meta_flags():
    script = parse_session(
        "ring S=Q[x,y]; ideal J=y^2-x^3; meta J prime; task verify J J;")
    assert script.metas["J"] == {"prime"}
    with pytest.raises(SessionSyntaxError):
        parse_session("ring S=Q[x]; ideal J=x; meta J sparkly;")


def test_options():
    script = parse_session(
        "ring S=Q[x]; ideal J=x; option order lex; option max_degree 20; task gb J;")
    assert script.options == {"order": "lex", "max_degree": "20"}
    with pytest.raises(SessionSyntaxError):
        parse_session("ring S=Q[x]; ideal J=x; option color blue;")


def test_round_trip():
    for text in (
        GOOD,
        "ring S=Q[x,y]; ideal J=y^2-x^3; ideal M=x,y; meta J prime; "
        "task verify J M; task gg J M;",
        "ring S=Zp(101)[a,b]; ideal K=a^2-b; option order lex; task gb K;",
        "ring S=Q[x]; ideal Z=0; task hilbert Z;",
    ):
        script = parse_session(text)
        again = parse_session(script.emit())
        assert script == again
        assert script.emit() == again.emit()


def test_zero_ideal_parses():
    script = parse_session("ring S=Q[x]; ideal Z=0; task hilbert Z;")
    assert script.ideals["Z"] == []
