#pragma once

#include "halphen/monodromy.hpp"
#include "halphen/pullback.hpp"
#include "halphen/transforms.hpp"

#include <nlohmann/json_fwd.hpp>

#include <iosfwd>

namespace halphen {

struct parse_error : std::runtime_error {
    size_t position;
    parse_error(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

/// Grammar: integer | integer "/" integer | "x" | expr ("+"|"-"|"*") expr |
/// expr "^" nonneg-int | "(" expr ")"; unary minus allowed; whitespace ignored.
Poly parse_poly(const std::string& text);

/// "p/q" or "p/q+r/s*sqrt(d)" (any of the three pieces optional as printed)
Scalar parse_scalar(const std::string& text);
Rat parse_rat(const std::string& text);

nlohmann::json scalar_json(const Scalar& s);
nlohmann::json poly_json(const Poly& p);
nlohmann::json op_json(const DiffOp& op);
nlohmann::json mat_json(const Mat& m);
nlohmann::json tuple_json(const MatrixTuple& t);
nlohmann::json fricke_json(const FrickeData& f);
nlohmann::json scheme_json(const RiemannScheme& s);
nlohmann::json report_json(const Report& r);

Scalar scalar_from_json(const nlohmann::json& j);
Poly poly_from_json(const nlohmann::json& j);
DiffOp op_from_json(const nlohmann::json& j);
Mat mat_from_json(const nlohmann::json& j);
MatrixTuple tuple_from_json(const nlohmann::json& j);
FrickeData fricke_from_json(const nlohmann::json& j);

// ---------------------------------------------------------------------------
// golden data (versioned JSON under the data directory)

/// Resolution order: HALPHEN_DATA_DIR env var, compile-time source dir,
/// ./data next to the current working directory.
std::string data_dir();

std::vector<TableRow> load_tables(const std::string& dir = data_dir());
std::pair<std::vector<BelyiRow>, ExampleRow> load_belyi_rows(const std::string& dir = data_dir());
std::pair<std::vector<GoldenTuple>, NotgeomSamples> load_tuples(const std::string& dir = data_dir());

/// CLI entry point used by both the binary and the tests;
/// returns the process exit code (0 ok, 1 check failed, 2 input error).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace halphen
