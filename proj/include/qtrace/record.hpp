#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace qtrace {

/// One theorem-check outcome. `worst_violation` is the largest signed
/// excess over the allowed inequality side seen across all trials (negative
/// values mean the direction held with room to spare); for pure equality
/// checks it is the largest absolute deviation. A record with trials == 0
/// and skipped > 0 marks a (suite, q) cell outside the theorem's hypothesis.
struct VerificationRecord {
    std::string theorem;
    double q = 0.0;
    int n = 0;
    std::uint64_t seed = 0;
    std::optional<double> closed_form;
    std::optional<double> numeric_opt;
    std::optional<double> worst_violation;
    int trials = 0;
    int skipped = 0;
    bool pass = false;

    bool hypothesis_skip() const { return trials == 0 && skipped > 0; }

    nlohmann::ordered_json to_json() const;
    std::string to_csv_row() const;
    static std::string csv_header();

    static VerificationRecord skip_record(std::string theorem, double q, int n,
                                          std::uint64_t seed);
};

}  // namespace qtrace
