#pragma once

#include "ukc/oracles.hpp"
#include "ukc/report.hpp"

namespace ukc {

struct VerifyConfig {
    std::string suite = "all";  // evaluators | lemmas | bounds | all
    int trials = 200;
    std::uint64_t seed = 1;
    int max_n = 5;
    int max_z = 3;
    int max_k = 3;
};

// Runs the named property suite over seeded random instances. Trial t uses
// seed + t, so a failing row's instance_seed replays alone via
// --seed <instance_seed> --trials 1. Row order follows trial index and the
// report is a pure function of the config. Throws InputError on an unknown
// suite name.
RunReport run_verify(const VerifyConfig& config);

}  // namespace ukc
