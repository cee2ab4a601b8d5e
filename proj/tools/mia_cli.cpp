#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mia/broadcast.hpp"
#include "mia/energy.hpp"
#include "mia/experiment.hpp"
#include "mia/heuristics.hpp"
#include "mia/json_io.hpp"
#include "mia/line.hpp"
#include "mia/lp.hpp"
#include "mia/topology.hpp"
#include "mia/unicast.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitBudget = 4;

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
}

mia::Topology load_topology(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open topology file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return mia::topology_from_json(buf.str());
}

mia::GainMatrix gains_from_topology(const mia::Topology& topo) {
    mia::GainMatrix h(topo.node_count());
    for (int i = 0; i < topo.node_count(); ++i)
        for (int j = 0; j < topo.node_count(); ++j)
            if (i != j) h.at(i, j) = topo.capacity(i, j);
    return h;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Routing and broadcast solvers for mutual-information accumulation networks"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a random topology file");
    std::uint64_t gen_seed = 0;
    int gen_n = 20;
    double gen_alpha = 3.0, gen_imax = 1.0;
    std::string gen_out;
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("--n", gen_n, "Number of relays");
    gen->add_option("--alpha", gen_alpha, "Path loss exponent")->default_val(3.0);
    gen->add_option("--imax", gen_imax, "Packet information (bits)");
    gen->add_option("--out", gen_out, "Output path (default stdout)");

    // solve
    auto* solve = app.add_subcommand("solve", "Solve a topology in the given mode");
    std::string mode, topo_path, solve_out;
    double gamma = 1.0, dmax = 0.0, theta = 1.0, solve_imax = 1.0;
    int line_n = 0;
    int budget_cap = 22;
    solve->add_option("--mode", mode, "optimal|h1|h2|sp|energy|broadcast|line")->required();
    solve->add_option("--topo", topo_path, "Topology JSON file");
    solve->add_option("--gamma", gamma, "Rate-power coefficient (energy mode)");
    solve->add_option("--dmax", dmax, "Delay constraint (energy mode)");
    solve->add_option("--theta", theta, "Capacity scale gamma*P (line mode)");
    solve->add_option("--n", line_n, "Relay count (line mode)");
    solve->add_option("--imax", solve_imax, "Packet information (line mode)");
    solve->add_option("--budget-cap", budget_cap, "Max relays for exponential searches");
    solve->add_option("--out", solve_out, "Output path (default stdout)");

    // cdf
    auto* cdf = app.add_subcommand("cdf", "Random-topology batch experiment (CSV)");
    mia::CdfConfig cc;
    std::string cdf_out;
    cdf->add_option("--n", cc.n_relays, "Relays per instance");
    cdf->add_option("--instances", cc.instances, "Number of instances");
    cdf->add_option("--seed", cc.seed0, "First seed");
    cdf->add_option("--alpha", cc.alpha, "Path loss exponent");
    cdf->add_option("--imax", cc.i_max, "Packet information (bits)");
    cdf->add_option("--parallel", cc.workers, "Worker threads");
    cdf->add_option("--out", cdf_out, "Output path (default stdout)");

    // line-ratio
    auto* lr = app.add_subcommand("line-ratio", "Delay-ratio curve for equal-spacing lines (CSV)");
    int lr_nmax = 200;
    double lr_theta = 1.0, lr_imax = 1.0;
    std::string lr_out;
    lr->add_option("--n-max", lr_nmax, "Largest relay count");
    lr->add_option("--theta", lr_theta, "Capacity scale gamma*P");
    lr->add_option("--imax", lr_imax, "Packet information (bits)");
    lr->add_option("--out", lr_out, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            mia::TopologyGenConfig cfg;
            cfg.seed = gen_seed;
            cfg.n_relays = gen_n;
            cfg.alpha = gen_alpha;
            cfg.i_max = gen_imax;
            write_output(gen_out, mia::topology_to_json(mia::gen_random_topology(cfg)));
            return 0;
        }

        if (solve->parsed()) {
            if (mode == "line") {
                if (line_n < 0) {
                    std::cerr << "error: --n must be >= 0\n";
                    return kExitUsage;
                }
                mia::LineConfig cfg;
                cfg.theta = theta;
                cfg.i_max = solve_imax;
                cfg.source_x = 0.0;
                cfg.dest_x = line_n + 1;
                for (int i = 1; i <= line_n; ++i) cfg.relay_x.push_back(i);
                write_output(solve_out, mia::solution_to_json(mia::solve_line(cfg), "line"));
                return 0;
            }
            if (topo_path.empty()) {
                std::cerr << "error: --topo is required for mode " << mode << "\n";
                return kExitUsage;
            }
            const mia::Topology topo = load_topology(topo_path);

            if (mode == "optimal") {
                if (topo.n_relays() > budget_cap) {
                    std::cerr << "refused: n_relays " << topo.n_relays()
                              << " exceeds --budget-cap " << budget_cap << "\n";
                    return kExitBudget;
                }
                mia::SolveOptions opts;
                opts.prune = true;
                auto sol = mia::solve_min_delay(topo, opts);
                if (!sol) { std::cerr << "infeasible\n"; return kExitInfeasible; }
                write_output(solve_out, mia::solution_to_json(*sol, "optimal"));
            } else if (mode == "h1" || mode == "h2") {
                auto sol = (mode == "h1") ? mia::heuristic1(topo) : mia::heuristic2(topo);
                if (!sol) { std::cerr << "infeasible\n"; return kExitInfeasible; }
                write_output(solve_out, mia::solution_to_json(*sol, mode));
            } else if (mode == "sp") {
                auto sol = mia::traditional_shortest_path(topo);
                if (!sol) { std::cerr << "infeasible\n"; return kExitInfeasible; }
                write_output(solve_out, mia::path_solution_to_json(*sol));
            } else if (mode == "energy") {
                if (!(dmax > 0.0)) {
                    std::cerr << "error: --dmax > 0 is required for energy mode\n";
                    return kExitUsage;
                }
                if (topo.n_relays() > budget_cap) {
                    std::cerr << "refused: n_relays exceeds --budget-cap\n";
                    return kExitBudget;
                }
                auto sol = mia::solve_min_energy(gains_from_topology(topo), gamma, dmax, topo.i_max());
                if (!sol) { std::cerr << "infeasible\n"; return kExitInfeasible; }
                write_output(solve_out, mia::energy_solution_to_json(*sol));
            } else if (mode == "broadcast") {
                if (topo.node_count() - 1 > budget_cap) {
                    std::cerr << "refused: node count exceeds --budget-cap\n";
                    return kExitBudget;
                }
                auto sol = mia::solve_min_delay_broadcast(topo);
                if (!sol) { std::cerr << "infeasible\n"; return kExitInfeasible; }
                write_output(solve_out, mia::broadcast_solution_to_json(*sol));
            } else {
                std::cerr << "error: unknown mode " << mode << "\n";
                return kExitUsage;
            }
            return 0;
        }

        if (cdf->parsed()) {
            if (cc.n_relays > 22) {
                std::cerr << "refused: --n exceeds the 2^n budget guard (22)\n";
                return kExitBudget;
            }
            write_output(cdf_out, mia::cdf_to_csv(mia::run_cdf_experiment(cc)));
            return 0;
        }

        if (lr->parsed()) {
            std::ostringstream os;
            os.precision(17);
            os << "n,mia_delay,trad_delay,ratio,bound\n";
            for (int n = 1; n <= lr_nmax; ++n) {
                const auto delta = mia::line_delay_recursion(n, lr_theta, lr_imax, 3.0);
                double total = 0.0;
                for (double d : delta) total += d;
                const double trad = (n + 1) * lr_imax / lr_theta;
                const auto r = mia::delay_ratio(n);
                os << n << ',' << total << ',' << trad << ',' << r.ratio << ',' << r.asymptotic_bound
                   << '\n';
            }
            write_output(lr_out, os.str());
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
