#include "halphen/io.hpp"

#include <CLI11.hpp>

#include <functional>
#include <nlohmann/json.hpp>

#include <iostream>
#include <sstream>

namespace halphen {

using nlohmann::json;

namespace {

LameEquation lame_from_flags(const std::string& p0, const std::string& nu, const std::string& H) {
    return LameEquation(parse_poly(p0).monic(), Scalar(parse_rat(nu)), Scalar(parse_rat(H)));
}

std::vector<BraidGen> parse_word(const std::string& word) {
    std::vector<BraidGen> out;
    std::istringstream is(word);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
        while (!tok.empty() && tok.back() == ' ') tok.pop_back();
        if (tok == "b1") out.push_back(BraidGen::b1);
        else if (tok == "b2") out.push_back(BraidGen::b2);
        else if (tok == "B1" || tok == "b1'") out.push_back(BraidGen::b1_inv);
        else if (tok == "B2" || tok == "b2'") out.push_back(BraidGen::b2_inv);
        else throw std::invalid_argument("malformed braid word token '" + tok + "'");
    }
    if (out.empty()) throw std::invalid_argument("empty braid word");
    return out;
}

FrickeData fricke_from_list(const std::string& data) {
    std::vector<Scalar> vals;
    std::istringstream is(data);
    std::string tok;
    while (std::getline(is, tok, ',')) vals.push_back(parse_scalar(tok));
    if (vals.size() != 7) throw std::invalid_argument("need 7 comma-separated values a1,a2,a3,a4,x,y,z");
    return {vals[0], vals[1], vals[2], vals[3], vals[4], vals[5], vals[6]};
}

Triple triple_from_list(const std::string& data) {
    std::vector<long long> vals;
    std::istringstream is(data);
    std::string tok;
    while (std::getline(is, tok, ',')) vals.push_back(std::stoll(tok));
    if (vals.size() != 3) throw std::invalid_argument("need 3 comma-separated integers");
    return {vals[0], vals[1], vals[2]};
}

TripleCase case_from_flags(const std::string& cs, long long N) {
    if (cs == "i") return TripleCase::case_i(N);
    if (cs == "ii") return {TripleCase::ii, 1};
    if (cs == "iii") return {TripleCase::iii, 1};
    if (cs == "iv") return {TripleCase::iv, 1};
    throw std::invalid_argument("case must be one of i, ii, iii, iv");
}

int emit_report(const Report& rep, bool as_json, std::ostream& out) {
    if (as_json) out << report_json(rep).dump(2) << "\n";
    else out << rep.text();
    return rep.all_pass() ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Lame/Heun transform, Belyi pullback and Fricke monodromy calculus"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    std::string p0_text, nu_text, H_text, n_text, mu_text, ab_text, Ht_text, lambda_text = "1";
    std::string op_text, data_text, word_text, triple_text, case_text, tuple_text, lambda_mc = "-1";
    long long N_flag = 1, bound = 30;

    auto add_lame_flags = [&](CLI::App* cmd, bool required = true) {
        auto* o1 = cmd->add_option("--p0", p0_text, "monic cubic, e.g. \"x*(x-1)*(x-81)\"");
        auto* o2 = cmd->add_option("--nu", nu_text, "nu = n(n+1)");
        auto* o3 = cmd->add_option("--H", H_text, "accessory parameter");
        if (required) { o1->required(); o2->required(); o3->required(); }
    };

    auto* halphen_cmd = app.add_subcommand("halphen", "Halphen transforms of a Lame equation");
    halphen_cmd->require_subcommand(1);
    auto* ha = halphen_cmd->add_subcommand("a", "case a (mu = -1/2)");
    add_lame_flags(ha);
    auto* hb = halphen_cmd->add_subcommand("b", "case b (mu = n)");
    add_lame_flags(hb);
    hb->add_option("--n", n_text, "n with n(n+1) = nu")->required();
    auto* hc = halphen_cmd->add_subcommand("c", "case c (mu = -n-1, the Halphen transform)");
    add_lame_flags(hc);
    hc->add_option("--n", n_text, "n with n(n+1) = nu")->required();

    auto* sym2_cmd = app.add_subcommand("sym2", "symmetric square of a 2nd-order operator");
    sym2_cmd->add_option("--op", op_text, "operator as JSON {\"order\",\"coeffs\"}");
    add_lame_flags(sym2_cmd, false);

    auto* euler_cmd = app.add_subcommand("euler", "Euler transform of the symmetric square");
    euler_cmd->add_option("--mu", mu_text, "transform parameter")->required();
    add_lame_flags(euler_cmd);

    auto* riemann_cmd = app.add_subcommand("riemann", "Riemann scheme of an operator");
    riemann_cmd->add_option("--op", op_text, "operator as JSON");
    add_lame_flags(riemann_cmd, false);

    auto* h2l = app.add_subcommand("heun2lame", "Heun (lambda = 1) -> Lame data");
    h2l->add_option("--p0", p0_text)->required();
    h2l->add_option("--ab", ab_text, "x-coefficient alpha*beta")->required();
    h2l->add_option("--Ht", Ht_text, "accessory")->required();
    h2l->add_option("--lambda", lambda_text, "first-order factor (default 1)");

    auto* l2h = app.add_subcommand("lame2heun", "Lame -> Heun data via case a");
    add_lame_flags(l2h);

    auto* tables_cmd = app.add_subcommand("tables", "golden table checks");
    auto* tables_verify = tables_cmd->add_subcommand("verify", "reproduce both tables row by row");

    auto* pull_cmd = app.add_subcommand("pullback", "Belyi pullback checks");
    auto* pull_verify = pull_cmd->add_subcommand("verify", "verify a golden row");
    std::string row_id = "all";
    pull_verify->add_option("row", row_id, "row id: i..v, ex38 or all");

    auto* fricke_cmd = app.add_subcommand("fricke", "Fricke coordinate calculus");
    auto* f_check = fricke_cmd->add_subcommand("check", "residual of the Fricke relation");
    f_check->add_option("--data", data_text, "a1,a2,a3,a4,x,y,z")->required();
    auto* f_braid = fricke_cmd->add_subcommand("braid", "braid-group action on coordinates");
    f_braid->add_option("--data", data_text)->required();
    f_braid->add_option("--word", word_text, "comma list over b1,b2,B1,B2 (capitals invert)")->required();
    auto* f_descend = fricke_cmd->add_subcommand("descend", "Vieta descent to a minimal triple");
    f_descend->add_option("--triple", triple_text, "n1,n2,n3")->required();
    f_descend->add_option("--case", case_text)->required();
    f_descend->add_option("--N", N_flag, "scaling for case i");
    auto* f_enum = fricke_cmd->add_subcommand("enumerate", "minimal negative triples up to a bound");
    f_enum->add_option("--case", case_text)->required();
    f_enum->add_option("--bound", bound);

    auto* tuple_cmd = app.add_subcommand("tuple", "matrix-tuple operations");
    auto* t_verify = tuple_cmd->add_subcommand("verify", "verify the golden monodromy tuples");
    auto* t_construct = tuple_cmd->add_subcommand("construct", "reconstruct a tuple from Fricke data");
    t_construct->add_option("--data", data_text, "2,2,2,a4,x,y,z")->required();
    auto* t_mc = tuple_cmd->add_subcommand("mc", "middle convolution MC_lambda");
    t_mc->add_option("--tuple", tuple_text, "tuple as JSON")->required();
    t_mc->add_option("--lambda", lambda_mc, "parameter (default -1)");
    auto* t_form = tuple_cmd->add_subcommand("form", "invariant hermitian form");
    t_form->add_option("--tuple", tuple_text)->required();

    auto* pipe_cmd = app.add_subcommand("pipeline", "composite checks");
    auto* p_trace = pipe_cmd->add_subcommand("trace-map", "Sym^2 + MC_{-1} against the trace map");
    p_trace->add_option("--tuple", tuple_text, "involution tuple as JSON")->required();

    // let the global --json flag appear after subcommand names too
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (CLI::App* sub : a->get_subcommands({})) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "input error: " << e.what() << "\n";
        return 2;
    }

    try {
        auto lame_input = [&]() { return lame_from_flags(p0_text, nu_text, H_text); };
        auto emit_op = [&](const DiffOp& op) {
            if (as_json) out << op_json(op).dump(2) << "\n";
            else out << op.str() << "\n";
            return 0;
        };

        if (ha->parsed()) return emit_op(halphen_a(lame_input()));
        if (hb->parsed())
            return emit_op(halphen_bc(lame_input(), Scalar(parse_rat(n_text)), HalphenCase::b));
        if (hc->parsed())
            return emit_op(halphen_bc(lame_input(), Scalar(parse_rat(n_text)), HalphenCase::c));
        if (sym2_cmd->parsed()) {
            DiffOp in = op_text.empty() ? lame_input().as_operator()
                                        : op_from_json(json::parse(op_text));
            return emit_op(sym_square_2nd(in));
        }
        if (euler_cmd->parsed())
            return emit_op(euler_third_order(lame_input(), Scalar(parse_rat(mu_text))));
        if (riemann_cmd->parsed()) {
            DiffOp in = op_text.empty() ? lame_input().as_operator()
                                        : op_from_json(json::parse(op_text));
            RiemannScheme s = riemann_scheme(in);
            if (as_json) out << scheme_json(s).dump(2) << "\n";
            else out << s.str() << "\n";
            return 0;
        }
        if (h2l->parsed()) {
            HeunEquation h(parse_poly(p0_text).monic(), Scalar(parse_rat(ab_text)),
                           Scalar(parse_rat(Ht_text)), Scalar(parse_rat(lambda_text)));
            LameEquation l = h.lambda == Scalar(1) ? heun_to_lame(h) : inverse_halphen_c(h);
            json j{{"p0", poly_json(l.p0)}, {"nu", l.nu.str()}, {"H", l.H.str()}};
            if (as_json) out << j.dump(2) << "\n";
            else out << "nu = " << l.nu.str() << ", H = " << l.H.str() << ", p = 4*(" << l.p0.str() << ")\n";
            return 0;
        }
        if (l2h->parsed()) {
            LameEquation l = lame_input();
            HeunEquation h = HeunEquation::from_operator(halphen_a(l));
            json j{{"p0", poly_json(h.p0)}, {"ab", h.ab.str()}, {"Ht", h.Ht.str()}, {"lambda", h.lambda.str()}};
            if (as_json) out << j.dump(2) << "\n";
            else out << "ab = " << h.ab.str() << ", Ht = " << h.Ht.str() << ", p = " << h.p0.str() << "\n";
            return 0;
        }
        if (tables_verify->parsed()) {
            Report rep = reproduce_tables(load_tables());
            int matched = 0;
            for (const auto& l : rep.lines) matched += l.pass;
            if (!as_json)
                out << matched << "/" << rep.lines.size() << " rows match\n";
            return emit_report(rep, as_json, out);
        }
        if (pull_verify->parsed()) {
            auto [rows, example] = load_belyi_rows();
            Report rep;
            bool matched_any = false;
            for (const auto& r : rows)
                if (row_id == "all" || row_id == r.id) {
                    rep.merge(verify_pullback_row(r));
                    matched_any = true;
                }
            if (row_id == "all" || row_id == "ex38") {
                rep.merge(verify_example_row(example));
                matched_any = true;
            }
            if (!matched_any) {
                err << "input error: unknown row id '" << row_id << "'\n";
                return 2;
            }
            return emit_report(rep, as_json, out);
        }
        if (f_check->parsed()) {
            FrickeData f = fricke_from_list(data_text);
            Scalar r = f.residual();
            if (as_json) out << json{{"residual", r.str()}, {"pass", r.is_zero()}}.dump(2) << "\n";
            else out << "residual = " << r.str() << "\n";
            return r.is_zero() ? 0 : 1;
        }
        if (f_braid->parsed()) {
            FrickeData f = braid_fricke(fricke_from_list(data_text), parse_word(word_text));
            if (as_json) out << fricke_json(f).dump(2) << "\n";
            else out << f.str() << "\n";
            return 0;
        }
        if (f_descend->parsed()) {
            Triple t = descend_minimal(triple_from_list(triple_text), case_from_flags(case_text, N_flag));
            if (as_json) out << json{t[0], t[1], t[2]}.dump() << "\n";
            else out << "(" << t[0] << "," << t[1] << "," << t[2] << ")\n";
            return 0;
        }
        if (f_enum->parsed()) {
            TripleCase cs = case_from_flags(case_text, 1);
            auto found = enumerate_minimal(cs.tag, bound);
            json arr = json::array();
            for (const auto& [N, t] : found) {
                if (cs.tag == TripleCase::i) {
                    arr.push_back(json{{"N", N}, {"triple", {t[0], t[1], t[2]}}});
                    if (!as_json) out << "N=" << N << " (" << t[0] << "," << t[1] << "," << t[2] << ")\n";
                } else {
                    arr.push_back(json{{"triple", {t[0], t[1], t[2]}}});
                    if (!as_json) out << "(" << t[0] << "," << t[1] << "," << t[2] << ")\n";
                }
            }
            if (as_json) out << arr.dump(2) << "\n";
            return 0;
        }
        if (t_verify->parsed()) {
            auto [tuples, samples] = load_tuples();
            return emit_report(verify_paper_tuples(tuples, samples), as_json, out);
        }
        if (t_construct->parsed()) {
            ConstructedTuple ct = construct_tuple(fricke_from_list(data_text));
            json j{{"tuple", tuple_json(ct.tuple)},
                   {"achieved", fricke_json(ct.achieved)},
                   {"exact_match", ct.exact_match}};
            if (as_json) out << j.dump(2) << "\n";
            else {
                out << (ct.exact_match ? "exact traces realized"
                                       : "braid-equivalent a4-conjugate root realized") << "\n";
                out << "achieved " << ct.achieved.str() << "\n";
                for (const auto& m : ct.tuple.mats)
                    out << "[[" << m.at(0, 0).str() << "," << m.at(0, 1).str() << "],["
                        << m.at(1, 0).str() << "," << m.at(1, 1).str() << "]]\n";
            }
            return 0;
        }
        if (t_mc->parsed()) {
            MatrixTuple t = tuple_from_json(json::parse(tuple_text));
            MatrixTuple r = middle_convolution(t, Scalar(parse_rat(lambda_mc)));
            if (as_json) out << tuple_json(r).dump(2) << "\n";
            else {
                out << "dimension " << r.dim() << "\n";
                if (r.dim() == 2) out << "fricke " << fricke_params(r).str() << "\n";
            }
            return 0;
        }
        if (t_form->parsed()) {
            MatrixTuple t = tuple_from_json(json::parse(tuple_text));
            InvariantForm f = invariant_form(t);
            const char* signame = f.signature == InvariantForm::definite ? "definite"
                                 : f.signature == InvariantForm::indefinite ? "indefinite" : "degenerate";
            json j{{"dimension", f.dimension}, {"signature", signame},
                   {"h11", rat_str(f.h11)}, {"h22", rat_str(f.h22)},
                   {"u", rat_str(f.u)}, {"v", rat_str(f.v)}, {"d", f.d}};
            if (as_json) out << j.dump(2) << "\n";
            else out << "dimension " << f.dimension << ", " << signame << "\n";
            return 0;
        }
        if (p_trace->parsed()) {
            MatrixTuple t = tuple_from_json(json::parse(tuple_text));
            FrickeData input = fricke_params(t);
            FrickeData got = involution_pipeline(t);
            bool det_minus = t.mats[0].det() == Scalar(-1);
            FrickeData expected = trace_map(input);
            if (!det_minus) expected.a4 = input.a4 * input.a4 - Scalar(2);
            bool ok = got == expected;
            Report rep;
            rep.add("fricke(MC_{-1}(Sym^2(t))) equals the trace-map image", ok,
                    "got " + got.str() + ", expected " + expected.str() +
                    (det_minus ? "" : " (projective-involution convention: a4 image is +a4^2-2)"));
            return emit_report(rep, as_json, out);
        }
        err << "input error: no subcommand\n";
        return 2;
    } catch (const std::exception& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace halphen
