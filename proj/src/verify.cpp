#include "ukc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace ukc {

namespace {

struct Trial {
    Instance inst;
    std::uint64_t seed = 0;
    int k = 1;
};

// Every per-trial choice is a function of the trial seed alone, so a trial
// replays in isolation with --seed <instance_seed> --trials 1.
Trial make_trial(std::uint64_t trial_seed, const VerifyConfig& cfg) {
    Rng rng(splitmix64(trial_seed));
    Trial t;
    t.seed = trial_seed;
    const bool finite = rng.below(2) == 1;
    const int n = 1 + static_cast<int>(rng.below(cfg.max_n));
    const int z = 1 + static_cast<int>(rng.below(cfg.max_z));
    t.k = 1 + static_cast<int>(rng.below(cfg.max_k));
    const int dim_or_m = finite ? 2 + static_cast<int>(rng.below(7))   // m in [2, 8]
                                : 1 + static_cast<int>(rng.below(3));  // dim in [1, 3]
    t.inst = generate_instance(n, z, finite ? SpaceKind::finite : SpaceKind::euclidean, dim_or_m,
                               splitmix64(trial_seed + 0x517cc1b727220a95ull));
    return t;
}

const char* kind_name(const Instance& inst) {
    return inst.space.kind == SpaceKind::euclidean ? "euclidean" : "finite";
}

std::vector<Point> all_locations(const Instance& inst) {
    std::vector<Point> out;
    for (const auto& p : inst.points)
        for (const auto& l : p.locations) out.push_back(l);
    return out;
}

void draw_centers_assignment(const Instance& inst, int k, Rng& rng, CenterSet& centers,
                             Assignment& a) {
    const auto locs = all_locations(inst);
    centers.clear();
    for (int j = 0; j < k; ++j) centers.push_back(locs[rng.below(locs.size())]);
    a.target.resize(inst.n());
    for (auto& t : a.target) t = static_cast<int>(rng.below(k));
}

double rel_err(double got, double want) { return std::abs(got - want) / (1.0 + std::abs(want)); }

// Inequality-style row: ratio holds the worst violation margin, bound 0.
RatioRow margin_row(std::string label, std::uint64_t seed, double lhs, double rhs, double margin) {
    RatioRow r;
    r.label = std::move(label);
    r.instance_seed = seed;
    r.alg_ecost = lhs;
    r.oracle_ecost = rhs;
    r.ratio = margin;
    r.bound = 0.0;
    r.pass = margin <= 1e-9;
    return r;
}

RatioRow evaluators_row(const Trial& t) {
    Rng rng(splitmix64(t.seed ^ 0x6a09e667f3bcc909ull));
    CenterSet centers;
    Assignment a;
    draw_centers_assignment(t.inst, t.k, rng, centers, a);

    const double assigned = ecost_assigned(t.inst, centers, a);
    const double assigned_enum = ecost_enumerated(t.inst, centers, &a);
    const double unassigned = ecost_unassigned(t.inst, centers);
    const double unassigned_enum = ecost_enumerated(t.inst, centers, nullptr);
    const double worst = std::max(rel_err(assigned, assigned_enum),
                                  rel_err(unassigned, unassigned_enum));
    return margin_row(std::string("evaluators/") + kind_name(t.inst), t.seed, assigned,
                      assigned_enum, worst);
}

RatioRow lemmas_row(const Trial& t) {
    Rng rng(splitmix64(t.seed ^ 0xbb67ae8584caa73bull));
    const Instance& inst = t.inst;
    CenterSet centers;
    Assignment a;
    draw_centers_assignment(inst, t.k, rng, centers, a);
    const double assigned_cost = ecost_assigned(inst, centers, a);

    double worst = -std::numeric_limits<double>::infinity();
    double worst_lhs = 0.0;
    double worst_rhs = 0.0;
    auto consider = [&](double lhs, double rhs) {
        if (lhs - rhs > worst) {
            worst = lhs - rhs;
            worst_lhs = lhs;
            worst_rhs = rhs;
        }
    };

    // per-point expected distance to the assigned center never exceeds the
    // assigned cost
    for (std::size_t i = 0; i < inst.n(); ++i)
        consider(expected_distance(inst.points[i], centers[a.target[i]], inst.space),
                 assigned_cost);

    Assignment identity;
    identity.target.resize(inst.n());
    std::iota(identity.target.begin(), identity.target.end(), 0);

    if (inst.space.kind == SpaceKind::euclidean) {
        std::vector<Point> bars;
        bars.reserve(inst.n());
        for (const auto& p : inst.points) bars.push_back(expected_point(p, inst.space));

        // the expected point is never farther than the expected distance
        const auto locs = all_locations(inst);
        for (std::size_t i = 0; i < inst.n(); ++i) {
            for (const auto& q : locs)
                consider(distance(inst.space, bars[i], q),
                         expected_distance(inst.points[i], q, inst.space));
            for (int s = 0; s < 2; ++s) {
                std::vector<double> coords(inst.space.dim);
                for (auto& c : coords) c = 2.0 * rng.uniform01() - 0.5;
                const Point q = Point::euclidean(std::move(coords));
                consider(distance(inst.space, bars[i], q),
                         expected_distance(inst.points[i], q, inst.space));
            }
        }
        // displacement to the expected points is within twice the assigned cost
        consider(ecost_assigned(inst, bars, identity), 2.0 * assigned_cost);
        for (std::size_t i = 0; i < inst.n(); ++i)
            consider(expected_distance(inst.points[i], bars[i], inst.space), 2.0 * assigned_cost);
        // deterministic cost of the expected points is within the assigned cost
        consider(deterministic_cost(bars, centers, inst.space), assigned_cost);
    } else {
        const auto medians = surrogate_points(inst, Strategy::OC);
        // displacement to the per-point 1-centers is within three times the
        // assigned cost; their deterministic cost is within twice
        consider(ecost_assigned(inst, medians, identity), 3.0 * assigned_cost);
        consider(deterministic_cost(medians, centers, inst.space), 2.0 * assigned_cost);
    }
    return margin_row(std::string("lemmas/") + kind_name(t.inst), t.seed, worst_lhs, worst_rhs,
                      worst);
}

std::string bound_label(const Instance& inst, Strategy strat, DetSolver det, const char* version) {
    std::ostringstream os;
    os << "bounds/" << kind_name(inst) << "/" << to_string(strat) << "/" << to_string(det) << "/"
       << version;
    return os.str();
}

void bounds_rows(const Trial& t, std::vector<RatioRow>& rows) {
    const Instance& inst = t.inst;
    const int k = t.k;

    if (inst.space.kind == SpaceKind::euclidean) {
        const auto candidates = default_candidates(inst, Strategy::ED);
        const Solution opt_res_ed = opt_restricted(inst, k, Strategy::ED, candidates);
        const Solution opt_res_ep = opt_restricted(inst, k, Strategy::EP, candidates);
        const Solution opt_unres = opt_unrestricted(inst, k, candidates);

        for (DetSolver det : {DetSolver::gonzalez, DetSolver::exact_discrete}) {
            for (Strategy strat : {Strategy::ED, Strategy::EP}) {
                const Solution sol = solve_kcenter(inst, k, strat, det, ProblemVersion::restricted);
                const Solution& opt_res = strat == Strategy::ED ? opt_res_ed : opt_res_ep;
                rows.push_back(make_ratio_row(bound_label(inst, strat, det, "restricted"), t.seed,
                                              sol.ecost, opt_res.ecost, sol.bound));
                const double unres_bound = approximation_bound(
                    strat, inst.space.kind, det_solver_eps(det), ProblemVersion::unrestricted);
                rows.push_back(make_ratio_row(bound_label(inst, strat, det, "unrestricted"),
                                              t.seed, sol.ecost, opt_unres.ecost, unres_bound));
            }
        }
        if (inst.space.dim <= 2) {
            const Solution sol = solve_one_center(inst);
            const Solution opt = opt_unassigned(inst, 1, grid_candidates(inst));
            rows.push_back(make_ratio_row("bounds/euclidean/one-center", t.seed, sol.ecost,
                                          opt.ecost, 2.0));
        }
    } else {
        const auto candidates = default_candidates(inst, Strategy::ED);
        const Solution opt_unres = opt_unrestricted(inst, k, candidates);
        for (DetSolver det : {DetSolver::gonzalez, DetSolver::exact_discrete}) {
            for (Strategy strat : {Strategy::ED, Strategy::OC}) {
                const Solution sol =
                    solve_kcenter(inst, k, strat, det, ProblemVersion::unrestricted);
                rows.push_back(make_ratio_row(bound_label(inst, strat, det, "unrestricted"),
                                              t.seed, sol.ecost, opt_unres.ecost, sol.bound));
            }
        }
        // forcing the expected-distance assignment costs at most a factor 3
        const Solution opt_res_ed = opt_restricted(inst, k, Strategy::ED, candidates);
        rows.push_back(make_ratio_row("bounds/finite/ed-restriction", t.seed, opt_res_ed.ecost,
                                      opt_unres.ecost, 3.0));
    }
}

}  // namespace

RunReport run_verify(const VerifyConfig& cfg) {
    if (cfg.trials < 1) throw InputError("verify: trials must be >= 1");
    if (cfg.max_n < 1 || cfg.max_z < 1 || cfg.max_k < 1)
        throw InputError("verify: max-n, max-z and max-k must be >= 1");
    const bool all = cfg.suite == "all";
    if (!all && cfg.suite != "evaluators" && cfg.suite != "lemmas" && cfg.suite != "bounds")
        throw InputError("verify: unknown suite '" + cfg.suite + "'");

    RunReport rep;
    rep.command = "verify";
    {
        std::ostringstream os;
        os << "suite=" << cfg.suite << ";trials=" << cfg.trials << ";seed=" << cfg.seed
           << ";max_n=" << cfg.max_n << ";max_z=" << cfg.max_z << ";max_k=" << cfg.max_k;
        rep.instance_digest = digest_string(os.str());
    }

    for (int t = 0; t < cfg.trials; ++t) {
        const std::uint64_t trial_seed = cfg.seed + static_cast<std::uint64_t>(t);
        const Trial trial = make_trial(trial_seed, cfg);
        if (all || cfg.suite == "evaluators") rep.ratios.push_back(evaluators_row(trial));
        if (all || cfg.suite == "lemmas") rep.ratios.push_back(lemmas_row(trial));
        if (all || cfg.suite == "bounds") bounds_rows(trial, rep.ratios);
    }
    return rep;
}

}  // namespace ukc
