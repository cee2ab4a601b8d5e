#include "mia/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mia/heuristics.hpp"
#include "mia/unicast.hpp"

namespace mia {

namespace {

CdfRow run_instance(const CdfConfig& cfg, std::uint64_t seed) {
    TopologyGenConfig gen;
    gen.n_relays = cfg.n_relays;
    gen.alpha = cfg.alpha;
    gen.i_max = cfg.i_max;
    gen.seed = seed;
    const Topology topo = gen_random_topology(gen);

    const auto sp = traditional_shortest_path(topo);
    const auto h1 = heuristic1(topo);
    const auto h2 = heuristic2(topo);
    if (!sp || !h1 || !h2)
        throw std::runtime_error("random topology unexpectedly infeasible");

    SolveOptions opts;
    opts.prune = true;
    opts.initial_upper = std::min({sp->delay, h1->delay, h2->delay});
    const auto opt = solve_min_delay(topo, opts);
    if (!opt) throw std::runtime_error("optimal search found nothing below the heuristic bound");

    CdfRow row;
    row.seed = seed;
    row.delay_opt = opt->delay;
    row.delay_h1 = h1->delay;
    row.delay_h2 = h2->delay;
    row.delay_sp = sp->delay;
    row.r_h1 = h1->delay / opt->delay;
    row.r_h2 = h2->delay / opt->delay;
    row.r_sp = sp->delay / opt->delay;
    return row;
}

double percentile(std::vector<double> v, double q) {
    std::sort(v.begin(), v.end());
    const double pos = q * (v.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (pos - lo) * (v[hi] - v[lo]);
}

}  // namespace

std::vector<CdfRow> run_cdf_experiment(const CdfConfig& cfg) {
    if (cfg.instances < 1) throw std::invalid_argument("instances must be >= 1");
    if (cfg.n_relays > 22) throw std::invalid_argument("n_relays exceeds the 2^n budget guard (22)");

    std::vector<CdfRow> rows(cfg.instances);
    const int workers = std::max(1, cfg.workers);
    if (workers == 1) {
        for (int i = 0; i < cfg.instances; ++i)
            rows[i] = run_instance(cfg, cfg.seed0 + static_cast<std::uint64_t>(i));
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const int i = next.fetch_add(1);
                    if (i >= cfg.instances) return;
                    rows[i] = run_instance(cfg, cfg.seed0 + static_cast<std::uint64_t>(i));
                }
            });
        }
        for (auto& th : pool) th.join();
    }
    return rows;
}

std::string cdf_to_csv(const std::vector<CdfRow>& rows) {
    std::ostringstream os;
    os.precision(17);
    os << "seed,delay_opt,delay_h1,delay_h2,delay_sp,r_h1,r_h2,r_sp\n";
    std::vector<std::vector<double>> cols(7);
    for (const CdfRow& r : rows) {
        const double vals[7] = {r.delay_opt, r.delay_h1, r.delay_h2, r.delay_sp,
                                r.r_h1, r.r_h2, r.r_sp};
        os << r.seed;
        for (int c = 0; c < 7; ++c) {
            os << ',' << vals[c];
            cols[c].push_back(vals[c]);
        }
        os << '\n';
    }
    const auto emit = [&](const std::string& tag, auto f) {
        os << tag;
        for (int c = 0; c < 7; ++c) os << ',' << f(cols[c]);
        os << '\n';
    };
    emit("summary_mean", [](const std::vector<double>& v) {
        double s = 0.0;
        for (double x : v) s += x;
        return s / v.size();
    });
    emit("summary_p50", [](const std::vector<double>& v) { return percentile(v, 0.5); });
    emit("summary_p90", [](const std::vector<double>& v) { return percentile(v, 0.9); });
    return os.str();
}

}  // namespace mia
