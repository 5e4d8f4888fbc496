#include "qtrace/record.hpp"

#include <cstdio>
#include <sstream>

namespace qtrace {

using nlohmann::ordered_json;

namespace {

ordered_json opt_to_json(const std::optional<double>& v) {
    if (!v) return nullptr;
    return *v;
}

std::string csv_double(const std::optional<double>& v) {
    if (!v) return "";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", *v);
    return buf;
}

}  // namespace

ordered_json VerificationRecord::to_json() const {
    return ordered_json{
        {"theorem", theorem},
        {"q", q},
        {"n", n},
        {"seed", seed},
        {"closed_form", opt_to_json(closed_form)},
        {"numeric_opt", opt_to_json(numeric_opt)},
        {"worst_violation", opt_to_json(worst_violation)},
        {"trials", trials},
        {"skipped", skipped},
        {"pass", pass},
    };
}

std::string VerificationRecord::csv_header() {
    return "theorem,q,n,seed,closed_form,numeric_opt,worst_violation,trials,skipped,pass";
}

std::string VerificationRecord::to_csv_row() const {
    std::ostringstream oss;
    char qbuf[40];
    std::snprintf(qbuf, sizeof(qbuf), "%.17g", q);
    oss << theorem << ',' << qbuf << ',' << n << ',' << seed << ',' << csv_double(closed_form)
        << ',' << csv_double(numeric_opt) << ',' << csv_double(worst_violation) << ',' << trials
        << ',' << skipped << ',' << (pass ? "true" : "false");
    return oss.str();
}

VerificationRecord VerificationRecord::skip_record(std::string theorem, double q, int n,
                                                   std::uint64_t seed) {
    VerificationRecord record;
    record.theorem = std::move(theorem);
    record.q = q;
    record.n = n;
    record.seed = seed;
    record.trials = 0;
    record.skipped = 1;
    record.pass = true;
    return record;
}

}  // namespace qtrace
