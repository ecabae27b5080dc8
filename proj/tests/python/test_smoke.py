"""Python smoke tests over the pybind11 module."""

import json

import halphen as hp


def test_parse_poly_round_trip():
    coeffs = hp.parse_poly("4*x^3 - 5/2*x + 1")
    assert coeffs == ["1", "-5/2", "0", "4"]
    assert hp.parse_poly(hp.poly_str(coeffs)) == coeffs


def test_worked_halphen_example():
    op = hp.halphen_a("x*(x-1)*(x-81)", "-2/9", "-2")
    assert op["order"] == 2
    assert op["coeffs"][0] == ["-90", "35/9"]


def test_tables_verify():
    rep = hp.reproduce_tables()
    assert rep["pass"] is True
    assert len(rep["checks"]) == 13


def test_riemann_scheme_of_lame():
    op = hp.lame_operator("x*(x-1)*(x-81)", "-2/9", "-2")
    scheme = hp.riemann_scheme(op)
    inf = [p for p in scheme["points"] if p.get("point") == "inf"]
    assert inf and inf[0]["exponents"] == ["1/6", "1/3"]


def test_heun_to_lame_row9():
    out = hp.heun_to_lame("x*(x-1)*(x-81)", "35/36", "-45/2")
    assert out["nu"] == "-2/9"
    assert out["H"] == "-2"


def test_fricke_and_braid():
    data = ["2", "2", "2", "2", "-10", "-4", "-16"]
    assert hp.fricke_residual(data) == "0"
    assert hp.braid_fricke(data, ["b2"]) == ["2", "2", "2", "2", "-16", "-4", "-46"]


def test_enumerate_minimal_case_i():
    found = hp.enumerate_minimal("i", 30)
    assert [(f["N"], tuple(f["triple"])) for f in found] == [
        (5, (-1, -4, -5)),
        (6, (-1, -2, -3)),
        (8, (-1, -1, -2)),
        (9, (-1, -1, -1)),
    ]


def test_construct_and_pipeline():
    built = hp.construct_tuple(["2", "2", "2", "2", "-4", "-10", "-16"])
    assert built["exact_match"] is True
    tup = built["tuple"]
    assert hp.fricke_params(tup) == ["2", "2", "2", "2", "-4", "-10", "-16"]


def test_trace_map_pipeline_on_involutions():
    # trace-0 det-(-1) involutions (det checks: -1, -1, -1) with product identity
    def mat(entries):
        return {"rows": 2, "cols": 2, "entries": [str(v) for v in entries]}

    a1 = [[1, 1], [0, -1]]
    a2 = [[0, 1], [1, 0]]
    a3 = [[2, 1], [-3, -2]]

    def mul(x, y):
        return [
            [x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]],
            [x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]],
        ]

    from fractions import Fraction

    p = mul(mul(a1, a2), a3)
    det = p[0][0] * p[1][1] - p[0][1] * p[1][0]
    inv = [
        [Fraction(p[1][1], det), Fraction(-p[0][1], det)],
        [Fraction(-p[1][0], det), Fraction(p[0][0], det)],
    ]
    tup = {
        "matrices": [
            mat([a1[0][0], a1[0][1], a1[1][0], a1[1][1]]),
            mat([a2[0][0], a2[0][1], a2[1][0], a2[1][1]]),
            mat([a3[0][0], a3[0][1], a3[1][0], a3[1][1]]),
            mat([inv[0][0], inv[0][1], inv[1][0], inv[1][1]]),
        ]
    }
    got = hp.involution_pipeline(tup)
    expected = hp.trace_map(hp.fricke_params(tup))
    assert got == expected


def test_cli_parity():
    code, out, err = hp.run_cli(["tables", "verify", "--json"])
    assert code == 0
    rep = json.loads(out[out.index("{"):])
    assert rep["pass"] is True


def test_pullback_row_verification():
    rep = hp.verify_pullback_rows()
    assert rep["pass"] is True
