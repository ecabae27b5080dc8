#include "halphen/io.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>

namespace halphen {

using nlohmann::json;

json scalar_json(const Scalar& s) { return s.str(); }

json poly_json(const Poly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

json op_json(const DiffOp& op) {
    json coeffs = json::array();
    for (const auto& p : op.c) coeffs.push_back(poly_json(p));
    return json{{"order", op.order()}, {"coeffs", coeffs}};
}

json mat_json(const Mat& m) {
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) entries.push_back(m.at(i, j).str());
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

json tuple_json(const MatrixTuple& t) {
    json arr = json::array();
    for (const auto& m : t.mats) arr.push_back(mat_json(m));
    return json{{"matrices", arr}};
}

json fricke_json(const FrickeData& f) {
    return json{{"a1", f.a1.str()}, {"a2", f.a2.str()}, {"a3", f.a3.str()},
                {"a4", f.a4.str()}, {"x", f.x.str()}, {"y", f.y.str()}, {"z", f.z.str()},
                {"residual", f.residual().str()}};
}

json scheme_json(const RiemannScheme& s) {
    json pts = json::array();
    for (const auto& p : s.points) {
        json e = json::array();
        for (const auto& v : p.exponents) e.push_back(v.str());
        json pt;
        if (p.is_infinity()) pt["point"] = "inf";
        else if (p.kind == SchemePoint::Kind::ExtPair) pt["factor"] = poly_json(p.factor);
        else pt["point"] = p.value.str();
        pt["exponents"] = e;
        pts.push_back(pt);
    }
    return json{{"points", pts}};
}

json report_json(const Report& r) {
    json checks = json::array();
    for (const auto& l : r.lines)
        checks.push_back(json{{"name", l.name}, {"pass", l.pass}, {"detail", l.detail}});
    return json{{"checks", checks}, {"pass", r.all_pass()}};
}

Scalar scalar_from_json(const json& j) { return parse_scalar(j.get<std::string>()); }

Poly poly_from_json(const json& j) {
    std::vector<Scalar> c;
    for (const auto& e : j) c.push_back(parse_scalar(e.get<std::string>()));
    return Poly(std::move(c));
}

DiffOp op_from_json(const json& j) {
    std::vector<Poly> c;
    for (const auto& e : j.at("coeffs")) c.push_back(poly_from_json(e));
    return DiffOp(std::move(c));
}

Mat mat_from_json(const json& j) {
    int rows = j.at("rows").get<int>(), cols = j.at("cols").get<int>();
    Mat m(rows, cols);
    const auto& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != rows * cols)
        throw std::invalid_argument("matrix entry count mismatch");
    for (int i = 0; i < rows; ++i)
        for (int jj = 0; jj < cols; ++jj)
            m.at(i, jj) = parse_scalar(entries[i * cols + jj].get<std::string>());
    return m;
}

MatrixTuple tuple_from_json(const json& j) {
    std::vector<Mat> ms;
    for (const auto& e : j.at("matrices")) ms.push_back(mat_from_json(e));
    return MatrixTuple(std::move(ms));
}

FrickeData fricke_from_json(const json& j) {
    return {scalar_from_json(j.at("a1")), scalar_from_json(j.at("a2")),
            scalar_from_json(j.at("a3")), scalar_from_json(j.at("a4")),
            scalar_from_json(j.at("x")), scalar_from_json(j.at("y")),
            scalar_from_json(j.at("z"))};
}

// ---------------------------------------------------------------------------

std::string data_dir() {
    if (const char* env = std::getenv("HALPHEN_DATA_DIR"))
        return env;
#ifdef HALPHEN_SOURCE_DATA_DIR
    {
        std::ifstream probe(std::string(HALPHEN_SOURCE_DATA_DIR) + "/tables.json");
        if (probe.good()) return HALPHEN_SOURCE_DATA_DIR;
    }
#endif
    return "data";
}

namespace {

json load_json(const std::string& dir, const std::string& name) {
    std::string path = dir + "/" + name;
    std::ifstream in(path);
    if (!in.good()) throw std::runtime_error("cannot open golden data file " + path);
    json j;
    in >> j;
    return j;
}

} // namespace

std::vector<TableRow> load_tables(const std::string& dir) {
    json j = load_json(dir, "tables.json");
    std::vector<TableRow> rows;
    for (const auto& r : j.at("rows")) {
        Poly p0 = poly_from_json(r.at("p0"));
        rows.push_back({r.at("nr").get<int>(),
                        HeunEquation(p0, scalar_from_json(r.at("ab")), scalar_from_json(r.at("Ht"))),
                        LameEquation(p0, scalar_from_json(r.at("nu")), scalar_from_json(r.at("H")))});
    }
    return rows;
}

std::pair<std::vector<BelyiRow>, ExampleRow> load_belyi_rows(const std::string& dir) {
    json j = load_json(dir, "belyi_rows.json");
    std::vector<BelyiRow> rows;
    for (const auto& r : j.at("rows")) {
        RamificationData ram;
        ram.over0 = r.at("ram").at("over0").get<std::vector<int>>();
        ram.over1 = r.at("ram").at("over1").get<std::vector<int>>();
        ram.overInf = r.at("ram").at("overInf").get<std::vector<int>>();
        BelyiRow row{
            r.at("id").get<std::string>(),
            BelyiMap(poly_from_json(r.at("j1")), poly_from_json(r.at("j2"))),
            scalar_from_json(r.at("scale")), scalar_from_json(r.at("shift")),
            HGParams(scalar_from_json(r.at("a")), scalar_from_json(r.at("b")),
                     scalar_from_json(r.at("c"))),
            ram,
            HeunEquation(poly_from_json(r.at("p0")), scalar_from_json(r.at("ab")),
                         scalar_from_json(r.at("Ht"))),
            std::nullopt, std::nullopt, std::nullopt};
        if (r.contains("paper_Ht") && !r.at("paper_Ht").is_null())
            row.paper_Ht = scalar_from_json(r.at("paper_Ht"));
        if (r.contains("lame_nu")) {
            row.lame = LameEquation(poly_from_json(r.at("p0")), scalar_from_json(r.at("lame_nu")),
                                    scalar_from_json(r.at("lame_H")));
            if (r.contains("paper_lame_H") && !r.at("paper_lame_H").is_null())
                row.paper_lame_H = scalar_from_json(r.at("paper_lame_H"));
        }
        rows.push_back(std::move(row));
    }
    const auto& e = j.at("example");
    ExampleRow ex{
        BelyiMap(poly_from_json(e.at("j1")), poly_from_json(e.at("j2"))),
        HGParams(scalar_from_json(e.at("a")), scalar_from_json(e.at("b")),
                 scalar_from_json(e.at("c"))),
        scalar_from_json(e.at("t")),
        HeunEquation(poly_from_json(e.at("heun_p0")), scalar_from_json(e.at("heun_ab")),
                     scalar_from_json(e.at("heun_Ht")), scalar_from_json(e.at("heun_lambda"))),
        scalar_from_json(e.at("n")), scalar_from_json(e.at("nu")), scalar_from_json(e.at("H"))};
    return {rows, ex};
}

std::pair<std::vector<GoldenTuple>, NotgeomSamples> load_tuples(const std::string& dir) {
    json j = load_json(dir, "tuples.json");
    std::vector<GoldenTuple> tuples;
    for (const auto& t : j.at("tuples")) {
        std::vector<Mat> ms;
        for (const auto& mj : t.at("matrices")) {
            Mat m(2, 2);
            for (int i = 0; i < 4; ++i)
                m.at(i / 2, i % 2) = Scalar(Rat(mj[i].get<long long>()));
            ms.push_back(std::move(m));
        }
        std::string cs = t.at("case").get<std::string>();
        TripleCase::Tag tag = cs == "i" ? TripleCase::i
                            : cs == "ii" ? TripleCase::ii
                            : cs == "iii" ? TripleCase::iii : TripleCase::iv;
        auto mv = t.at("minimal").get<std::vector<long long>>();
        tuples.push_back({t.at("name").get<std::string>(), MatrixTuple(std::move(ms)), tag,
                          t.value("N", 1LL), Triple{mv[0], mv[1], mv[2]}});
    }
    NotgeomSamples s;
    s.n1 = j.at("notgeom").at("n1").get<std::vector<long long>>();
    s.a4 = j.at("notgeom").at("a4").get<std::vector<long long>>();
    for (const auto& p : j.at("notgeom").at("bc"))
        s.bc.emplace_back(p[0].get<long long>(), p[1].get<long long>());
    return {tuples, s};
}

} // namespace halphen
