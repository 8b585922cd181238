import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from euclid_kernel.errors import ContractError
from euclid_kernel.field.backend import CONSTRUCTIBLE, get_backend
from euclid_kernel.geometry.primitives import Line, Point
from euclid_kernel.script import (
    CORPUS_SCRIPTS,
    ArgsError,
    ParseError,
    evaluate,
    load_corpus,
    load_script,
    parse,
    parse_args,
    pretty_print,
)
from euclid_kernel.script.ast import Call, Name

from helpers import pt

F = CONSTRUCTIBLE


@pytest.mark.parametrize(
    "source,line,col,message",
    [
        ("Foo(a){ return b; }", 1, 16, "unbound identifier 'b'"),
        ("Foo(a,a){ return a; }", 1, 7, "duplicate parameter 'a'"),
        ("Foo(a){ x = Bogus(a); return x; }", 1, 13, "unknown construction 'Bogus'"),
        ("Foo(a){ x = Line(a); return x; }", 1, 13, "Line takes 2 arguments, got 1"),
        ("Foo(a,b){ x = Line(a,b)\n  x = Line(b,a); return x; }", 2, 3, "'x' is already bound"),
        ("Foo(a){ x = Circle(a,a) }", 1, 25, "missing return statement"),
        ("Line Foo(a){ return a; }", 1, 21, "script declares Line but returns Point"),
        ("Foo(Thing a){ return a; }", 1, 5, "unknown sort 'Thing'"),
        ("Foo(a){ return a; x = a; }", 1, 19, "statement after return"),
        ("Foo(a){ x = 2; return x;}", 1, 13, "only 0 and 1 may appear as constants, not 2"),
        ("Foo(Line L){ x = Line(L, L); return x; }", 1, 18, "no overload Line(Line, Line)"),
        ("Foo(a) { x = Line(a, b\n return x; }", 2, 2, "expected ',', found 'return'"),
    ],
)
def test_parse_errors_carry_positions(source, line, col, message):
    with pytest.raises(ParseError) as info:
        parse(source)
    err = info.value
    assert (err.line, err.col) == (line, col)
    assert str(err) == f"{line}:{col}: {message}"


def test_frame_constants_need_a_frame():
    src = "Foo(a){ y = Line(a,0); return y; }"
    assert parse(src).result == Name("y")
    with pytest.raises(ParseError, match="frame constant '0' used without a frame"):
        parse(src, frame_constants=False)


def test_binding_a_frame_name_shadows_the_constant():
    s = parse("Foo(a){ I = Midpoint(a,a,Line(a,0)); return I; }")
    r = evaluate(s, [pt(F, 3, 0)])
    assert r.result == pt(F, 3, 0)


@pytest.mark.parametrize("name", CORPUS_SCRIPTS)
def test_corpus_round_trip(name):
    s = load_script(name)
    text = pretty_print(s)
    assert parse(text) == s
    assert pretty_print(parse(text)) == text


def test_pretty_print_keeps_comments():
    s = load_script("midpoint")
    text = pretty_print(s)
    assert "// center at A, passing through B" in text
    assert text.splitlines()[1] == "Midpoint(Point a, Point b)"
    assert "  C = Circle(a, b);  // center at A, passing through B" in text


def test_untyped_parameters_default_to_points():
    s = load_script("midpoint")
    assert [p.sort for p in s.params] == ["Point", "Point"]


DOMAINS = {
    "midpoint": ("a=(0,0);b=(2,0)", Point),
    "perp": ("x=(1/2,0);a=(0,0);b=(1,0)", Line),
    "m": ("a=(1,0);b=(1,0);p=(0,0);q=(1,0)", Point),
    "reciprocal": ("a=(2,0)", Point),
    "squareroot": ("G=(2,0)", Point),
    "other": ("p=(1,0);L=Line((1,0),(0,1));C=Circle((0,0),(1,0))", Point),
    "other2": ("p=(1,0);C=Circle((0,0),(1,0));K=Circle((1,1),(1,0))", Point),
}


@pytest.mark.parametrize("name", CORPUS_SCRIPTS)
def test_corpus_defined_on_its_domain(name):
    args, sort = DOMAINS[name]
    r = evaluate(load_script(name), parse_args(args, F))
    assert r.defined and isinstance(r.result, sort)


def test_corpus_values():
    def run(name, args):
        return evaluate(load_script(name), parse_args(args, F)).result

    assert run("midpoint", "a=(0,0);b=(2,0)") == pt(F, 1, 0)
    assert run("m", "a=(1,0);b=(1,0);p=(0,0);q=(1,0)") == pt(F, 1, 0)
    assert run("reciprocal", "a=(2,0)") == pt(F, "1/2", 0)
    assert run("squareroot", "G=(2,0)") == pt(F, "sqrt(2)", 0)
    assert run("other", DOMAINS["other"][0]) == pt(F, 0, 1)
    assert run("other2", DOMAINS["other2"][0]) == pt(F, 0, 1)
    K = run("perp", "x=(1/2,0);a=(0,0);b=(1,0)")
    assert K.a.x == K.b.x == F.parse("1/2")


def test_squareroot_of_negative_is_traced_at_the_discriminant():
    r = evaluate(load_script("squareroot"), parse_args("G=(-1,0)", F))
    assert not r.defined
    step = r.first_undefined_step()
    assert step.name == "I" and step.step == 5
    assert step.reason == "no-intersection"
    later = [t for t in r.trace if t.step > step.step]
    assert all(not t.defined and t.origin == "I" for t in later if t.name in ("R", "N", "return"))


def test_runtime_precondition_becomes_undefined():
    s = parse("Oth(Point p, Line L, Circle C){ q = Other(p,L,C); return q; }")
    r = evaluate(s, parse_args("p=(2,0);L=Line((1,0),(0,1));C=Circle((0,0),(1,0))", F))
    assert r.result.reason == "precondition"
    assert r.result.origin == "q"


def test_inner_undefined_keeps_its_location():
    s = parse("Foo(a,b){ x = Midpoint(a,b); return x; }")
    r = evaluate(s, [pt(F, 1, 1), pt(F, 1, 1)])
    assert r.result.origin == "x"


def test_argument_checks():
    s = load_script("midpoint")
    with pytest.raises(ContractError, match="takes 2 arguments, got 1"):
        evaluate(s, [pt(F, 0, 0)])
    with pytest.raises(ContractError, match="must be a Point"):
        evaluate(s, {"a": pt(F, 0, 0), "b": parse_args("L=Line((0,0),(1,0))", F)["L"]})


@pytest.mark.parametrize("bad", ["a=(0,0", "a=(0,0,0)", "a=0", "a=(0,zz)", "2a=(0,0)", "a=(0,0);a=(1,1)",
                                 "L=Line((0,0),(0,0))"])
def test_malformed_arguments(bad):
    with pytest.raises(ArgsError):
        parse_args(bad, F)


def test_json_is_deterministic():
    s = load_script("squareroot")
    a = json.dumps(evaluate(s, parse_args("G=(3,0)", F)).to_dict())
    b = json.dumps(evaluate(s, parse_args("G=(3,0)", F)).to_dict())
    assert a == b
    d = json.loads(a)
    assert d["result"]["x"]["expr"] == "(sqrt 3)"
    assert d["result"]["x"]["approx"] == "1.7320508075688773"


def test_puiseux_evaluation_is_flagged_up_to_truncation():
    P = get_backend("puiseux", 6)
    r = evaluate(load_script("midpoint"), parse_args("a=(0,0);b=(2*t,0)", P), P)
    assert r.result == Point(P.t, P.zero)
    assert r.to_dict()["up_to_truncation"] is True


names = st.sampled_from(["a", "b", "c"])


@st.composite
def exprs(draw, depth=2):
    if depth == 0 or draw(st.booleans()):
        return Name(draw(names))
    op = draw(st.sampled_from(["Midpoint", "Extend"]))
    n = 2 if op == "Midpoint" else 4
    return Call(op, tuple(draw(exprs(depth - 1)) for _ in range(n)))


@given(st.lists(exprs(), min_size=1, max_size=4))
def test_generated_scripts_round_trip(body):
    lines = [f"  x{k} = {_text(e)};" for k, e in enumerate(body)]
    src = "Gen(a, b, c)\n{\n" + "\n".join(lines) + f"\n  return x{len(body) - 1};\n}}\n"
    s = parse(src)
    assert pretty_print(s).replace("Point ", "") == src
    assert parse(pretty_print(s)) == s


def _text(e):
    if isinstance(e, Name):
        return e.ident
    return f"{e.op}({', '.join(_text(a) for a in e.args)})"
