#include "qpl/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace qpl {

Report Report::passed(std::string name, int lo, int hi) {
    Report r;
    r.schema = std::move(name);
    r.lo = lo;
    r.hi = hi;
    r.pass = true;
    return r;
}

Report Report::failed(std::string name, int lo, int hi, int N, Series::Term leading) {
    Report r;
    r.schema = std::move(name);
    r.lo = lo;
    r.hi = hi;
    r.pass = false;
    r.first_failure = Failure{N, std::move(leading)};
    return r;
}

nlohmann::json Report::to_json() const {
    nlohmann::json j{
        {"schema", schema},
        {"range", {lo, hi}},
        {"status", pass ? "PASS" : "FAIL"},
        {"resolution", nullptr},
        {"first_failure", nullptr},
    };
    if (resolution) {
        j["resolution"] = {{"parameter", resolution->parameter},
                           {"printed", resolution->printed},
                           {"resolved", resolution->resolved},
                           {"method", resolution->method}};
    }
    if (first_failure) {
        j["first_failure"] = {
            {"N", first_failure->N},
            {"residual_leading",
             {{"q", first_failure->residual_leading.q},
              {"x", first_failure->residual_leading.x},
              {"c", first_failure->residual_leading.c.to_decimal()}}}};
    }
    if (!agreement.empty()) {
        nlohmann::json tab = nlohmann::json::array();
        for (auto [d, g] : agreement)
            tab.push_back({{"depth", d}, {"agreement_order", g}});
        j["agreement_table"] = std::move(tab);
    }
    return j;
}

std::string Report::summary() const {
    std::ostringstream os;
    os << (pass ? "PASS" : "FAIL") << "  " << schema << "  [" << lo << "," << hi << "]";
    if (resolution)
        os << "  (resolved " << resolution->parameter << ": " << resolution->printed
           << " -> " << resolution->resolved << ")";
    if (first_failure) {
        const auto& t = first_failure->residual_leading;
        os << "  first failure at N=" << first_failure->N << ", residual "
           << t.c.to_decimal() << "*x^" << t.x << "*q^" << t.q;
    }
    return os.str();
}

}  // namespace qpl
