#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qpl/series.hpp"

namespace qpl {

/* Outcome of one exact verification sweep. Failures are data, not errors. */
struct Report {
    struct Failure {
        int N = 0;                 // failing index (N, or q-degree for order-indexed checks)
        Series::Term residual_leading{0, 0, Coeff(0)};
    };
    struct Resolution {
        std::string parameter;     // what was fitted or decided
        std::string printed;       // the form as printed
        std::string resolved;      // the empirically valid form
        std::string method;        // how the verdict was reached
    };

    std::string schema;
    int lo = 0, hi = 0;
    bool pass = false;
    std::optional<Resolution> resolution;
    std::optional<Failure> first_failure;

    /* Per-depth agreement bookkeeping, used by the continued fraction
     * checks; empty elsewhere. */
    std::vector<std::pair<int, int>> agreement;   // (depth, first disagreeing order)

    static Report passed(std::string name, int lo, int hi);
    static Report failed(std::string name, int lo, int hi, int N, Series::Term leading);

    nlohmann::json to_json() const;
    std::string summary() const;
};

}  // namespace qpl
