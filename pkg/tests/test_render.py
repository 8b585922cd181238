from euclid_kernel.field.backend import CONSTRUCTIBLE, get_backend
from euclid_kernel.render import render_svg
from euclid_kernel.script import evaluate, load_script, parse_args

F = CONSTRUCTIBLE


def svg_for(name, args, B=F):
    return render_svg(evaluate(load_script(name), parse_args(args, B), B))


def test_perp_diagram_structure():
    svg = svg_for("perp", "x=(1/2,1);a=(0,0);b=(1,0)")
    assert svg.startswith("<svg ") and svg.endswith("</svg>\n")
    # circles Q, C, K, R; lines L and the result; points x a b c p q d e
    assert svg.count('class="circle"') == 4
    assert svg.count('class="line"') == 2
    assert svg.count('class="point"') == 8
    for name in ["L", "Q", "C", "p", "q", "result"]:
        assert f'data-name="{name}"' in svg
    assert 'class="legend' not in svg


def test_undefined_steps_are_listed():
    svg = svg_for("squareroot", "G=(-1,0)")
    assert '<text class="legend-title"' in svg
    assert "I = IntersectLineCircle1(L, C): undefined(no-intersection)" in svg
    assert svg.count('class="legend"') == 1


def test_rendering_is_byte_identical():
    a = svg_for("squareroot", "G=(2,0)")
    b = svg_for("squareroot", "G=(2,0)")
    assert a == b


def test_numbers_have_at_most_12_significant_digits():
    import re

    svg = svg_for("midpoint", "a=(0,0);b=(sqrt(2),0)")
    for num in re.findall(r'(?:cx|cy|x1|y1|x2|y2|r)="([-0-9.e]+)"', svg):
        digits = num.lstrip("-").replace(".", "").lstrip("0").split("e")[0]
        assert len(digits) <= 12


def test_unbounded_values_become_notes():
    P = get_backend("puiseux", 8)
    svg = svg_for("reciprocal", "a=(t,0)", P)
    assert "not finitely bounded; not drawn" in svg
