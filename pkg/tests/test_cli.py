import json
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from hmbordism.cli import run
from hmbordism.cli.parser import (
    BinOp,
    Call,
    ExprSyntaxError,
    ExprTypeError,
    Generator,
    Lift,
    parse_expression,
    to_source,
)


def test_parse_examples():
    assert parse_expression("sig(CP2 * CP2)") == Call(
        "sig", (BinOp("*", Generator(2), Generator(2)),)
    )
    node = parse_expression("omega( H(CP2,i=1) * H(CP2,i=1) )")
    assert node.args[0] == BinOp("*", Lift(Generator(2), 1), Lift(Generator(2), 1))


def test_syntax_error_at_end_of_input():
    with pytest.raises(ExprSyntaxError) as info:
        parse_expression("sig(CP2 +")
    assert info.value.line == 1 and info.value.col == 10
    assert "end of input" in str(info.value)
    assert "number" in info.value.expected


def test_syntax_error_position_multiline():
    with pytest.raises(ExprSyntaxError) as info:
        parse_expression("sig(\n  CP2 ) )")
    assert (info.value.line, info.value.col) == (2, 9)


@pytest.mark.parametrize(
    "text",
    ["CP2 + CP4", "sig(Lpoly(2))", "H(H(CP2, i=1), i=2)", "CP3", "Lpoly(1/2)", "nosuch(1)",
     "itilde([1, 2])"],
)
def test_type_errors(text):
    with pytest.raises(ExprTypeError):
        parse_expression(text)


def test_precedence():
    node = parse_expression("CP4 + CP2 * CP2")
    assert node.op == "+" and node.right.op == "*"


@pytest.mark.parametrize(
    "text, expected",
    [
        ("omega(CP4)", "(0, 1)"),
        ("sig(CP2)", "1"),
        ("decide_transverse(9, itilde([(1, 2)]))", "ObstructedNever"),
        ("resolvable(0, 7)", "Resolvable"),
        ("star(1, 1)", "10"),
        ("sig(1/3·CP2 * CP2)", "1/3"),
        ("sig(H(CP2, i=1) * H(CP2, i=1))", "1"),
        ("omega(H(CP2, i=1) * H(CP2, i=1))", "(-1433/7, 1440/7)"),
        ("Lpoly(2)", "7/45*p[2] - 1/45*p[1.1]"),
        ("Linv(2)", "45/7*K[2] + 9/7*K[1.1]"),
        ("pnum(CP4)", "{p[2]: 10, p[1.1]: 25}"),
        ("lnum(CP4)", "{L[2]: 1, L[1.1]: 25/9}"),
        ("pclass(4, 0, 4, 0, 1)", "p[1](X) + p[1](Y)"),
        ("lgroup(2)", "Z2"),
        ("slh(4)", "Unknown"),
        ("itilde([(1, 3), (-1, 3)])", "0"),
    ],
)
def test_evaluate_text(text, expected):
    assert run(text) == (0, expected)


def test_exit_codes():
    assert run("sig(CP2 +")[0] == 1
    assert run("CP2 + CP4")[0] == 1
    assert run("omega(CP6)")[0] == 2
    assert run("CP30")[0] == 2
    assert run("CP30", max_dim=60)[0] == 0


def test_json_output_shape():
    code, out = run("omega(CP4)", fmt="json")
    assert code == 0
    assert json.loads(out) == {"expression": "omega(CP4)", "type": "omega", "value": ["0/1", "1/1"]}
    doc = json.loads(run("H(CP2, i=2)", fmt="json")[1])
    assert doc["value"]["coords"] == "psi"
    assert doc["value"]["terms"][0]["index"] == 2


names = st.sampled_from(["CP0", "CP2", "CP4", "H(CP2, i=1)", "H(CP4, i=-2)", "pt"])


@st.composite
def expressions(draw, depth=2):
    if depth == 0:
        return draw(names)
    kind = draw(st.sampled_from(["leaf", "mul", "add", "scale", "sig"]))
    if kind == "leaf":
        return draw(names)
    if kind == "mul":
        return f"{draw(expressions(depth - 1))} * {draw(expressions(depth - 1))}"
    if kind == "add":
        a = draw(expressions(depth - 1))
        return f"({a}) + ({a})"
    if kind == "scale":
        return f"{draw(st.integers(1, 9))}/{draw(st.integers(1, 9))}·({draw(expressions(depth - 1))})"
    return f"sig({draw(expressions(depth - 1))})"


@settings(max_examples=60, deadline=None)
@given(expressions(depth=3))
def test_parse_print_round_trip(text):
    try:
        node = parse_expression(text)
    except ExprTypeError:
        return
    assert parse_expression(to_source(node)) == node


def _cli(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "hmbordism", *args],
        input=stdin, capture_output=True, text=True, check=False,
    )


def test_console_entry_point(tmp_path):
    res = _cli("omega(CP2 * CP2)")
    assert res.returncode == 0 and res.stdout.strip() == "(1, 0)"
    res = _cli("--format=json", stdin="sig(CP4)\n")
    assert json.loads(res.stdout)["value"] == "1/1"
    out = tmp_path / "out.json"
    res = _cli("--format=json", f"--out={out}", "pnum(CP2)")
    assert res.returncode == 0 and json.loads(out.read_text())["type"] == "char_numbers"
    res = _cli("sig(CP2 +")
    assert res.returncode == 1 and "1:10" in res.stderr
    assert _cli("--version").stdout.startswith("hmbordism")
