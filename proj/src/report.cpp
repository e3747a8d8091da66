#include "ukc/report.hpp"

#include <limits>

#include <json.hpp>

namespace ukc {

using nlohmann::json;

double approximation_ratio(double alg, double oracle) {
    if (oracle <= 0.0) return alg <= 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    return alg / oracle;
}

RatioRow make_ratio_row(std::string label, std::uint64_t instance_seed, double alg_ecost,
                        double oracle_ecost, double bound) {
    RatioRow r;
    r.label = std::move(label);
    r.instance_seed = instance_seed;
    r.alg_ecost = alg_ecost;
    r.oracle_ecost = oracle_ecost;
    r.ratio = approximation_ratio(alg_ecost, oracle_ecost);
    r.bound = bound;
    r.pass = r.ratio <= bound + 1e-9;
    return r;
}

namespace {

json point_to_json(const Point& p) {
    if (p.index >= 0 && p.coords.empty()) return json(p.index);
    return json(p.coords);
}

json solution_to_json(const Solution& s) {
    json j;
    json centers = json::array();
    for (const auto& c : s.centers) centers.push_back(point_to_json(c));
    j["centers"] = std::move(centers);
    j["assignment"] = s.assignment.target;
    j["strategy"] = s.strategy ? json(to_string(*s.strategy)) : json(nullptr);
    j["ecost"] = s.ecost;
    j["bound"] = s.bound;
    j["det_solver"] = s.det_solver ? json(to_string(*s.det_solver)) : json(nullptr);
    j["version"] = to_string(s.version);
    return j;
}

}  // namespace

std::string solution_to_json_string(const Solution& solution) {
    return solution_to_json(solution).dump();
}

std::string report_to_json_string(const RunReport& report) {
    json j;
    j["command"] = report.command;
    j["instance_digest"] = report.instance_digest;
    j["solution"] = report.solution ? solution_to_json(*report.solution) : json(nullptr);
    json rows = json::array();
    for (const auto& r : report.ratios) {
        rows.push_back(json{{"label", r.label},
                            {"instance_seed", r.instance_seed},
                            {"alg_ecost", r.alg_ecost},
                            {"oracle_ecost", r.oracle_ecost},
                            {"ratio", r.ratio},
                            {"bound", r.bound},
                            {"pass", r.pass}});
    }
    j["ratios"] = std::move(rows);
    j["wall_time_ms"] = report.wall_time_ms;
    return j.dump();
}

}  // namespace ukc
