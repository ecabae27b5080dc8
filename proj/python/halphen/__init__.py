"""Exact Lame/Heun transform calculus, Belyi pullbacks and Fricke monodromy.

Thin wrapper over the C++ core; values travel as exact fraction strings
("p/q", "p/q+r/s*sqrt(d)") and JSON-shaped dicts.
"""

import json as _json
import os as _os

try:
    from halphen import _core as _c
except ImportError:  # in-tree layout: extension on sys.path next to the package
    import _core as _c

__all__ = [
    "halphen_a", "halphen_bc", "sym_square_2nd", "euler_third_order",
    "lame_operator", "riemann_scheme", "heun_to_lame", "inverse_halphen_c",
    "normalize_heun", "parse_poly", "poly_str",
    "ramification_data", "is_belyi", "pullback_operator",
    "fricke_residual", "braid_fricke", "trace_map", "unipotent_residual",
    "vieta_partner", "descend_minimal", "enumerate_minimal", "construct_tuple",
    "fricke_params", "sym_square_tuple", "middle_convolution",
    "involution_pipeline", "invariant_form", "inverse_trace_data",
    "reproduce_tables", "verify_pullback_rows", "verify_paper_tuples",
    "run_cli", "data_dir",
]


def _data_dir():
    env = _os.environ.get("HALPHEN_DATA_DIR")
    if env:
        return env
    here = _os.path.join(_os.path.dirname(__file__), "data")
    if _os.path.isdir(here):
        return here
    return _c.data_dir()


def _loads(s):
    return _json.loads(s)


def parse_poly(text):
    return _loads(_c.parse_poly(text))


def poly_str(coeffs):
    return _c.poly_str(_json.dumps(coeffs))


def halphen_a(p0, nu, H):
    return _loads(_c.halphen_a(p0, str(nu), str(H)))


def halphen_bc(p0, nu, H, n, case):
    return _loads(_c.halphen_bc(p0, str(nu), str(H), str(n), case))


def sym_square_2nd(op):
    return _loads(_c.sym_square_2nd(_json.dumps(op)))


def euler_third_order(p0, nu, H, mu):
    return _loads(_c.euler_third_order(p0, str(nu), str(H), str(mu)))


def lame_operator(p0, nu, H):
    return _loads(_c.lame_operator(p0, str(nu), str(H)))


def riemann_scheme(op):
    return _loads(_c.riemann_scheme(_json.dumps(op)))


def heun_to_lame(p0, ab, Ht):
    return _loads(_c.heun_to_lame(p0, str(ab), str(Ht)))


def inverse_halphen_c(p0, ab, Ht, lam):
    return _loads(_c.inverse_halphen_c(p0, str(ab), str(Ht), str(lam)))


def normalize_heun(op):
    return _loads(_c.normalize_heun(_json.dumps(op)))


def ramification_data(j1, j2):
    return _loads(_c.ramification_data(j1, j2))


def is_belyi(j1, j2):
    return _c.is_belyi(j1, j2)


def pullback_operator(a, b, c, j1, j2):
    return _loads(_c.pullback_operator(str(a), str(b), str(c), j1, j2))


def fricke_residual(data):
    return _c.fricke_residual([str(v) for v in data])


def braid_fricke(data, word):
    return _c.braid_fricke([str(v) for v in data], list(word))


def trace_map(data):
    return _c.trace_map([str(v) for v in data])


def unipotent_residual(triple, case, N=1):
    return _c.unipotent_residual(triple[0], triple[1], triple[2], case, N)


def vieta_partner(triple, i, case, N=1):
    return _c.vieta_partner(triple[0], triple[1], triple[2], i, case, N)


def descend_minimal(triple, case, N=1):
    return _c.descend_minimal(triple[0], triple[1], triple[2], case, N)


def enumerate_minimal(case, bound=30):
    return _loads(_c.enumerate_minimal(case, bound))


def construct_tuple(data):
    return _loads(_c.construct_tuple([str(v) for v in data]))


def fricke_params(tup):
    return _c.fricke_params(_json.dumps(tup))


def sym_square_tuple(tup):
    return _loads(_c.sym_square_tuple(_json.dumps(tup)))


def middle_convolution(tup, lam="-1"):
    return _loads(_c.middle_convolution(_json.dumps(tup), str(lam)))


def involution_pipeline(tup):
    return _c.involution_pipeline(_json.dumps(tup))


def invariant_form(tup):
    return _loads(_c.invariant_form(_json.dumps(tup)))


def inverse_trace_data(data):
    return _loads(_c.inverse_trace_data([str(v) for v in data]))


def reproduce_tables(data_dir=None):
    return _loads(_c.reproduce_tables(data_dir or _data_dir()))


def verify_pullback_rows(data_dir=None):
    return _loads(_c.verify_pullback_rows(data_dir or _data_dir()))


def verify_paper_tuples(data_dir=None):
    return _loads(_c.verify_paper_tuples(data_dir or _data_dir()))


def run_cli(args):
    return _c.run_cli(list(args))


def data_dir():
    return _data_dir()
