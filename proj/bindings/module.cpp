#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "halphen/io.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace py = pybind11;
using namespace halphen;
using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(); }

LameEquation lame_args(const std::string& p0, const std::string& nu, const std::string& H) {
    return LameEquation(parse_poly(p0).monic(), parse_scalar(nu), parse_scalar(H));
}

FrickeData fricke_args(const std::vector<std::string>& v) {
    if (v.size() != 7) throw std::invalid_argument("need 7 values a1,a2,a3,a4,x,y,z");
    return {parse_scalar(v[0]), parse_scalar(v[1]), parse_scalar(v[2]), parse_scalar(v[3]),
            parse_scalar(v[4]), parse_scalar(v[5]), parse_scalar(v[6])};
}

std::vector<std::string> fricke_out(const FrickeData& f) {
    return {f.a1.str(), f.a2.str(), f.a3.str(), f.a4.str(), f.x.str(), f.y.str(), f.z.str()};
}

TripleCase case_args(const std::string& cs, long long N) {
    if (cs == "i") return TripleCase::case_i(N);
    if (cs == "ii") return {TripleCase::ii, 1};
    if (cs == "iii") return {TripleCase::iii, 1};
    if (cs == "iv") return {TripleCase::iv, 1};
    throw std::invalid_argument("case must be i, ii, iii or iv");
}

std::vector<BraidGen> word_args(const std::vector<std::string>& word) {
    std::vector<BraidGen> w;
    for (const auto& t : word) {
        if (t == "b1") w.push_back(BraidGen::b1);
        else if (t == "b2") w.push_back(BraidGen::b2);
        else if (t == "B1") w.push_back(BraidGen::b1_inv);
        else if (t == "B2") w.push_back(BraidGen::b2_inv);
        else throw std::invalid_argument("braid tokens are b1, b2, B1, B2");
    }
    return w;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Lame/Heun transform calculus, Belyi pullbacks and Fricke monodromy";

    m.def("parse_poly", [](const std::string& s) { return dump(poly_json(parse_poly(s))); });
    m.def("poly_str", [](const std::string& j) { return poly_from_json(json::parse(j)).str(); });

    m.def("halphen_a", [](const std::string& p0, const std::string& nu, const std::string& H) {
        return dump(op_json(halphen_a(lame_args(p0, nu, H))));
    });
    m.def("halphen_bc", [](const std::string& p0, const std::string& nu, const std::string& H,
                           const std::string& n, const std::string& cs) {
        return dump(op_json(halphen_bc(lame_args(p0, nu, H), parse_scalar(n),
                                       cs == "b" ? HalphenCase::b : HalphenCase::c)));
    });
    m.def("sym_square_2nd", [](const std::string& opj) {
        return dump(op_json(sym_square_2nd(op_from_json(json::parse(opj)))));
    });
    m.def("euler_third_order", [](const std::string& p0, const std::string& nu,
                                  const std::string& H, const std::string& mu) {
        return dump(op_json(euler_third_order(lame_args(p0, nu, H), parse_scalar(mu))));
    });
    m.def("lame_operator", [](const std::string& p0, const std::string& nu, const std::string& H) {
        return dump(op_json(lame_args(p0, nu, H).as_operator()));
    });
    m.def("riemann_scheme", [](const std::string& opj) {
        return dump(scheme_json(riemann_scheme(op_from_json(json::parse(opj)))));
    });
    m.def("heun_to_lame", [](const std::string& p0, const std::string& ab, const std::string& Ht) {
        LameEquation l = heun_to_lame(HeunEquation(parse_poly(p0).monic(), parse_scalar(ab),
                                                   parse_scalar(Ht)));
        return dump(json{{"p0", poly_json(l.p0)}, {"nu", l.nu.str()}, {"H", l.H.str()}});
    });
    m.def("inverse_halphen_c", [](const std::string& p0, const std::string& ab,
                                  const std::string& Ht, const std::string& lambda) {
        LameEquation l = inverse_halphen_c(HeunEquation(parse_poly(p0).monic(), parse_scalar(ab),
                                                        parse_scalar(Ht), parse_scalar(lambda)));
        return dump(json{{"p0", poly_json(l.p0)}, {"nu", l.nu.str()}, {"H", l.H.str()}});
    });
    m.def("normalize_heun", [](const std::string& opj) {
        auto forms = normalize_heun(op_from_json(json::parse(opj)));
        json out = json::array();
        for (auto& [t, op] : forms) out.push_back(json{{"t", t.str()}, {"op", op_json(op)}});
        return dump(out);
    });

    m.def("ramification_data", [](const std::string& j1, const std::string& j2) {
        RamificationData r = ramification_data(BelyiMap(parse_poly(j1), parse_poly(j2)));
        return dump(json{{"over0", r.over0}, {"over1", r.over1}, {"overInf", r.overInf}});
    });
    m.def("is_belyi", [](const std::string& j1, const std::string& j2) {
        return is_belyi(BelyiMap(parse_poly(j1), parse_poly(j2)));
    });
    m.def("pullback_operator", [](const std::string& a, const std::string& b, const std::string& c,
                                  const std::string& j1, const std::string& j2) {
        HGParams h(parse_scalar(a), parse_scalar(b), parse_scalar(c));
        return dump(op_json(pullback_operator(h, BelyiMap(parse_poly(j1), parse_poly(j2)))));
    });

    m.def("fricke_residual", [](const std::vector<std::string>& v) {
        return fricke_args(v).residual().str();
    });
    m.def("braid_fricke", [](const std::vector<std::string>& v, const std::vector<std::string>& w) {
        return fricke_out(braid_fricke(fricke_args(v), word_args(w)));
    });
    m.def("trace_map", [](const std::vector<std::string>& v) {
        return fricke_out(trace_map(fricke_args(v)));
    });
    m.def("unipotent_residual", [](long long n1, long long n2, long long n3,
                                   const std::string& cs, long long N) {
        return unipotent_residual({n1, n2, n3}, case_args(cs, N)).str();
    });
    m.def("vieta_partner", [](long long n1, long long n2, long long n3, int i,
                              const std::string& cs, long long N) {
        Triple t = vieta_partner({n1, n2, n3}, i, case_args(cs, N));
        return std::vector<long long>{t[0], t[1], t[2]};
    });
    m.def("descend_minimal", [](long long n1, long long n2, long long n3,
                                const std::string& cs, long long N) {
        Triple t = descend_minimal({n1, n2, n3}, case_args(cs, N));
        return std::vector<long long>{t[0], t[1], t[2]};
    });
    m.def("enumerate_minimal", [](const std::string& cs, long long bound) {
        auto found = enumerate_minimal(case_args(cs, 1).tag, bound);
        json out = json::array();
        for (auto& [N, t] : found)
            out.push_back(json{{"N", N}, {"triple", {t[0], t[1], t[2]}}});
        return dump(out);
    });
    m.def("construct_tuple", [](const std::vector<std::string>& v) {
        ConstructedTuple c = construct_tuple(fricke_args(v));
        return dump(json{{"tuple", tuple_json(c.tuple)},
                         {"achieved", fricke_json(c.achieved)},
                         {"exact_match", c.exact_match}});
    });
    m.def("fricke_params", [](const std::string& tj) {
        return fricke_out(fricke_params(tuple_from_json(json::parse(tj))));
    });
    m.def("sym_square_tuple", [](const std::string& tj) {
        return dump(tuple_json(sym_square_tuple(tuple_from_json(json::parse(tj)))));
    });
    m.def("middle_convolution", [](const std::string& tj, const std::string& lambda) {
        return dump(tuple_json(middle_convolution(tuple_from_json(json::parse(tj)),
                                                  parse_scalar(lambda))));
    });
    m.def("involution_pipeline", [](const std::string& tj) {
        return fricke_out(involution_pipeline(tuple_from_json(json::parse(tj))));
    });
    m.def("invariant_form", [](const std::string& tj) {
        InvariantForm f = invariant_form(tuple_from_json(json::parse(tj)));
        const char* sig = f.signature == InvariantForm::definite ? "definite"
                        : f.signature == InvariantForm::indefinite ? "indefinite" : "degenerate";
        return dump(json{{"dimension", f.dimension}, {"signature", sig},
                         {"h11", rat_str(f.h11)}, {"h22", rat_str(f.h22)},
                         {"u", rat_str(f.u)}, {"v", rat_str(f.v)}, {"d", f.d}});
    });
    m.def("inverse_trace_data", [](const std::vector<std::string>& v) {
        InverseTraceData d = inverse_trace_data(fricke_args(v));
        return dump(json{{"xa2", d.xa2.str()}, {"ya2", d.ya2.str()}, {"za2", d.za2.str()},
                         {"form_exists", d.form_exists}, {"branch", d.branch}});
    });

    m.def("reproduce_tables", [](const std::string& dir) {
        return dump(report_json(reproduce_tables(load_tables(dir.empty() ? data_dir() : dir))));
    }, py::arg("dir") = "");
    m.def("verify_pullback_rows", [](const std::string& dir) {
        auto [rows, example] = load_belyi_rows(dir.empty() ? data_dir() : dir);
        Report rep;
        for (const auto& r : rows) rep.merge(verify_pullback_row(r));
        rep.merge(verify_example_row(example));
        return dump(report_json(rep));
    }, py::arg("dir") = "");
    m.def("verify_paper_tuples", [](const std::string& dir) {
        auto [tuples, samples] = load_tuples(dir.empty() ? data_dir() : dir);
        return dump(report_json(verify_paper_tuples(tuples, samples)));
    }, py::arg("dir") = "");

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
    m.def("data_dir", []() { return data_dir(); });
}
