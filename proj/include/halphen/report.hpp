#pragma once

#include <string>
#include <vector>

namespace halphen {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail; // exact witness on failure, extra context on success
};

struct Report {
    std::vector<CheckLine> lines;

    void add(std::string name, bool pass, std::string detail = "") {
        lines.push_back({std::move(name), pass, std::move(detail)});
    }
    void merge(const Report& o) {
        lines.insert(lines.end(), o.lines.begin(), o.lines.end());
    }
    bool all_pass() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
    std::string text() const {
        std::string out;
        for (const auto& l : lines) {
            out += (l.pass ? "PASS " : "FAIL ") + l.name;
            if (!l.detail.empty()) out += " -- " + l.detail;
            out += "\n";
        }
        return out;
    }
};

} // namespace halphen
