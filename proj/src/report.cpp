#include "maxclass/report.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace maxclass {

namespace {

constexpr const char* kSchema = "maxclass-units/1";

std::string fmt_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

BigInt involution_count(const CensusReport& r) {
    return r.budget_exhausted ? BigInt(0) : BigInt(r.total - 1);
}

// Quote a CSV field when it contains a separator (spec names carry commas).
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

Format format_from_string(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "text") return Format::Text;
    throw std::invalid_argument("unknown format: " + name);
}

std::string emit(const CensusReport& r, Format format) {
    switch (format) {
        case Format::Json: {
            nlohmann::json j;
            j["schema"] = kSchema;
            j["family"] = to_string(r.family);
            j["n"] = r.n;
            j["method"] = to_string(r.method);
            j["type1"] = r.type1.str();
            j["type2"] = r.type2.str();
            j["total"] = r.total.str();
            j["involutions"] = involution_count(r).str();
            j["elapsed_ms"] = r.elapsed_ms;
            j["budget_exhausted"] = r.budget_exhausted;
            return j.dump() + "\n";
        }
        case Format::Csv:
            return "family,n,method,type1,type2,total,involutions,elapsed_ms,budget_exhausted\n" +
                   std::string(to_string(r.family)) + "," + std::to_string(r.n) + "," +
                   to_string(r.method) + "," + r.type1.str() + "," + r.type2.str() + "," +
                   r.total.str() + "," + involution_count(r).str() + "," + fmt_ms(r.elapsed_ms) +
                   "," + (r.budget_exhausted ? "true" : "false") + "\n";
        case Format::Text: {
            if (r.budget_exhausted)
                return std::string("Theta_") + to_string(r.family) + "(2) n=" +
                       std::to_string(r.n) + " method=" + to_string(r.method) +
                       ": budget exhausted after " + fmt_ms(r.elapsed_ms) + " ms\n";
            return std::string("Theta_") + to_string(r.family) + "(2) n=" + std::to_string(r.n) +
                   " method=" + to_string(r.method) + ": total=" + r.total.str() +
                   " type1=" + r.type1.str() + " type2=" + r.type2.str() +
                   " involutions=" + involution_count(r).str() + " (" + fmt_ms(r.elapsed_ms) +
                   " ms)\n";
        }
    }
    throw std::logic_error("unreachable");
}

std::string emit(const SubgroupReport& r, Format format) {
    switch (format) {
        case Format::Json: {
            nlohmann::json j;
            j["schema"] = kSchema;
            j["spec"] = r.spec;
            j["n"] = r.n;
            j["order"] = r.order.str();
            j["empty"] = r.empty;
            j["elapsed_ms"] = r.elapsed_ms;
            return j.dump() + "\n";
        }
        case Format::Csv:
            return "spec,n,order,empty,elapsed_ms\n" + csv_field(r.spec) + "," +
                   std::to_string(r.n) + "," + r.order.str() + "," + (r.empty ? "true" : "false") +
                   "," + fmt_ms(r.elapsed_ms) + "\n";
        case Format::Text:
            return r.spec + " n=" + std::to_string(r.n) + ": order " + r.order.str() +
                   (r.empty ? " (empty)" : "") + " (" + fmt_ms(r.elapsed_ms) + " ms)\n";
    }
    throw std::logic_error("unreachable");
}

std::string emit(const VerifyReport& r, Format format) {
    switch (format) {
        case Format::Json: {
            nlohmann::json j;
            j["schema"] = kSchema;
            j["suite"] = to_string(r.suite);
            j["pass"] = r.pass;
            j["elapsed_ms"] = r.elapsed_ms;
            auto& checks = j["checks"] = nlohmann::json::array();
            for (const auto& c : r.checks) {
                nlohmann::json cj;
                cj["name"] = c.name;
                cj["n"] = c.n;
                cj["expected"] = c.expected;
                cj["actual"] = c.actual;
                cj["pass"] = c.pass;
                checks.push_back(cj);
            }
            return j.dump() + "\n";
        }
        case Format::Csv: {
            std::string out = "suite,check,n,expected,actual,pass\n";
            for (const auto& c : r.checks) {
                std::string expected = c.expected, actual = c.actual;
                for (auto* s : {&expected, &actual})
                    for (auto& ch : *s)
                        if (ch == ',') ch = ';';
                out += std::string(to_string(r.suite)) + "," + c.name + "," + std::to_string(c.n) +
                       "," + expected + "," + actual + "," + (c.pass ? "true" : "false") + "\n";
            }
            return out;
        }
        case Format::Text: {
            std::string out;
            std::size_t passed = 0;
            for (const auto& c : r.checks) {
                if (c.pass) {
                    out += "PASS " + c.name + " n=" + std::to_string(c.n) + "\n";
                    ++passed;
                } else {
                    out += "FAIL " + c.name + " n=" + std::to_string(c.n) + " expected [" +
                           c.expected + "] actual [" + c.actual + "]\n";
                }
            }
            out += std::string(r.pass ? "PASS" : "FAIL") + " suite " + to_string(r.suite) + ": " +
                   std::to_string(passed) + "/" + std::to_string(r.checks.size()) + " checks (" +
                   fmt_ms(r.elapsed_ms) + " ms)\n";
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace maxclass
