#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ukc/uncertain_solver.hpp"

namespace ukc {

// One verification trial result. For bound suites ratio = alg/oracle; for
// exactness and inequality suites ratio is the violation margin and bound
// is 0, so the same pass rule applies everywhere.
struct RatioRow {
    std::string label;
    std::uint64_t instance_seed = 0;
    double alg_ecost = 0.0;
    double oracle_ecost = 0.0;
    double ratio = 0.0;
    double bound = 0.0;
    bool pass = true;
};

struct RunReport {
    std::string command;
    std::string instance_digest;
    std::optional<Solution> solution;
    std::vector<RatioRow> ratios;
    std::int64_t wall_time_ms = 0;

    bool all_pass() const {
        for (const auto& r : ratios)
            if (!r.pass) return false;
        return true;
    }
};

// alg/oracle, with 0/0 = 1 and positive/0 = infinity.
double approximation_ratio(double alg, double oracle);

// pass is derived as ratio <= bound + 1e-9.
RatioRow make_ratio_row(std::string label, std::uint64_t instance_seed, double alg_ecost,
                        double oracle_ecost, double bound);

std::string solution_to_json_string(const Solution& solution);
std::string report_to_json_string(const RunReport& report);

}  // namespace ukc
