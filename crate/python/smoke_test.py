"""Smoke test for the ybx extension module.

Build first, e.g. `pip install --no-build-isolation -e crates/python`, then
run `python3 python/smoke_test.py` from the repository root.
"""

import json
import pathlib

import ybx

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def passed(report_json):
    return json.loads(report_json)["status"] == "pass"


def main():
    assert ybx.simplify("(x^2 - 1)/(x - 1)") == "x + 1"
    assert ybx.substitute("a*b + 1", {"a": "2", "b": "1/2"}) == "2"

    quad = ybx.Algebra.from_json((FIXTURES / "quadratic.json").read_text())
    assert quad.dim == 2
    # x*x = m x + n
    assert quad.mul(["0", "1"], ["0", "1"]) == ["n", "m"]

    r = ybx.dn_operator(quad, "a", "b", "a")
    assert ybx.classify_dn("a", "b", "a") == "i"
    assert passed(ybx.check_constant(r))
    assert passed(ybx.check_inverse(r, ybx.dn_inverse(quad, "a", "b", "a")))
    assert not passed(ybx.check_constant(ybx.dn_operator(quad, "1", "2", "5")))

    sigma = ybx.Algebra.from_json((FIXTURES / "sigma.json").read_text())
    rows = ybx.colored_operator(sigma, "p", "q", "u", "v").rows()
    assert rows[3][3] == ybx.simplify("q*v - p*u")
    assert passed(ybx.check_colored(quad, "p", "q", samples=3, seed=1))
    assert passed(ybx.check_wxz(quad, "lambda", "mu"))

    gl = ybx.Superalgebra.gl11()
    assert len(gl.even_center()) == 1
    phi = ybx.super_phi(gl, "alpha")
    assert passed(ybx.check_constant(phi))
    assert phi.compose(ybx.super_phi_inverse(gl, "alpha")) == ybx.Operator.twist(4).compose(ybx.Operator.twist(4))

    assert ybx.Operator.from_rows([["1", "0", "0", "0"]] * 4).inverse() is None
    try:
        ybx.simplify("1/")
    except ValueError:
        pass
    else:
        raise AssertionError("parse error not raised")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
