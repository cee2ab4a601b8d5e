#include "mia/broadcast.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "mia/lp.hpp"

namespace mia {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::optional<BroadcastRun> broadcast_run(const Topology& topo,
                                          const MutualInfoState& state,
                                          NodeId transmitter) {
    if (!state.decoded[transmitter])
        throw std::invalid_argument("broadcast_run: transmitter has not decoded");
    const int nc = topo.node_count();
    const double i_max = state.i_max;

    double best_time = kInf;
    NodeId decoder = -1;
    for (NodeId v = 0; v < nc; ++v) {
        if (state.decoded[v]) continue;
        const double c = topo.capacity(transmitter, v);
        if (c <= 0.0) continue;
        const double t = std::max(0.0, i_max - state.info[v]) / c;
        if (t < best_time) {
            best_time = t;
            decoder = v;
        }
    }
    if (decoder < 0) {
        if (state.all_decoded())
            throw std::invalid_argument("broadcast_run: no undecoded node left");
        return std::nullopt;
    }

    BroadcastRun run;
    run.decoder = decoder;
    run.duration = best_time;
    run.state = accumulate(state, transmitter, best_time, topo);
    // Simultaneous decoders other than the chosen one stay pending so they
    // get their own zero-length stage and a slot in the decoding order.
    for (NodeId v = 0; v < nc; ++v)
        if (v != decoder) run.state.decoded[v] = state.decoded[v];
    run.state.decoded[decoder] = true;
    run.state.info[decoder] = i_max;
    return run;
}

namespace {

struct SearchContext {
    const Topology& topo;
    bool prune;
    bool count_only;
    double best_delay = kInf;
    std::vector<Stage> best_stages;
    std::vector<Stage> cur_stages;
    std::uint64_t leaves = 0;
};

void dfs(SearchContext& ctx, const MutualInfoState& state, double partial) {
    const int nc = ctx.topo.node_count();
    if (state.all_decoded()) {
        ++ctx.leaves;
        if (!ctx.count_only && partial < ctx.best_delay) {
            ctx.best_delay = partial;
            ctx.best_stages = ctx.cur_stages;
        }
        return;
    }
    if (ctx.prune && partial >= ctx.best_delay) return;
    for (NodeId tx = 0; tx < nc; ++tx) {
        if (!state.decoded[tx]) continue;
        auto run = broadcast_run(ctx.topo, state, tx);
        if (!run) continue;
        ctx.cur_stages.push_back(Stage{tx, run->duration, run->decoder});
        dfs(ctx, run->state, partial + run->duration);
        ctx.cur_stages.pop_back();
    }
}

// The single-transmitter stage search above only switches transmitters at
// decode events. That misses optima where the last few nodes finish
// simultaneously and the final stretch has to be time-shared between two or
// more transmitters (the handoff then falls at a non-decode instant). The
// refinement below searches decoding orders with a prefix-LP lower bound and
// replaces the stage-search result whenever some ordering's LP is strictly
// better.

struct ExactContext {
    const Topology& topo;
    double best;                    // incumbent delay (stage search result)
    std::vector<NodeId> order;      // current prefix
    std::vector<NodeId> best_order;
    std::vector<double> best_x;
    bool improved = false;
};

void exact_dfs(ExactContext& c) {
    const int n = c.topo.node_count() - 1;
    if (!c.order.empty()) {
        const LpSolution sol = simplex_solve(build_prefix_broadcast_lp(c.topo, c.order));
        if (sol.status != LpStatus::Optimal) return;
        // Only strict improvements are interesting; ties keep the stage
        // search's schedule and its tie-break conventions.
        if (c.best < kInf && sol.objective >= c.best * (1.0 - 1e-9)) return;
        if (static_cast<int>(c.order.size()) == n) {
            c.best = sol.objective;
            c.best_order = c.order;
            c.best_x = sol.x;
            c.improved = true;
            return;
        }
    }
    for (NodeId v = 1; v <= n; ++v) {
        if (std::find(c.order.begin(), c.order.end(), v) != c.order.end()) continue;
        c.order.push_back(v);
        exact_dfs(c);
        c.order.pop_back();
    }
}

// Turns an ordering-LP solution back into a stage list by replaying its
// transmission segments and cutting at every decode instant. Segments that
// end without a decode become handoff stages with decoder = -1.
BroadcastSolution rebuild_from_lp(const Topology& topo, const std::vector<NodeId>& order,
                                  const std::vector<double>& x) {
    const int n = static_cast<int>(order.size());
    const int nc = topo.node_count();
    const double i_max = topo.i_max();
    const LpLayout lay = broadcast_lp_layout(n);

    std::vector<NodeId> nodes;
    nodes.push_back(topo.source());
    nodes.insert(nodes.end(), order.begin(), order.end());

    std::vector<double> raw(nc, 0.0);
    std::vector<bool> decoded(nc, false);
    raw[0] = i_max;
    decoded[0] = true;

    BroadcastSolution sol;
    NodeId last_tx = topo.source();
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i <= j; ++i) {
            double remaining = x[lay.a_index(i, j)];
            if (remaining <= 1e-15) continue;
            const NodeId tx = nodes[i];
            last_tx = tx;
            while (remaining > 0.0) {
                // Earliest decode instant inside this segment, if any.
                double cut = kInf;
                NodeId who = -1;
                for (NodeId w = 0; w < nc; ++w) {
                    if (decoded[w]) continue;
                    const double cap = topo.capacity(tx, w);
                    if (cap <= 0.0) continue;
                    if (raw[w] + remaining * cap < i_max - 1e-9 * i_max) continue;
                    const double t =
                        std::min(remaining, std::max(0.0, (i_max - raw[w]) / cap));
                    if (t < cut) {
                        cut = t;
                        who = w;
                    }
                }
                const double step = (who >= 0) ? cut : remaining;
                if (step > 0.0)
                    for (NodeId w = 0; w < nc; ++w)
                        if (!decoded[w]) raw[w] += step * topo.capacity(tx, w);
                if (who >= 0) {
                    decoded[who] = true;
                    raw[who] = i_max;
                    sol.stages.push_back(Stage{tx, step, who});
                    sol.decoding_order.push_back(who);
                } else {
                    sol.stages.push_back(Stage{tx, step, -1});
                }
                remaining -= step;
                if (who < 0) break;
            }
        }
    }
    // Nodes left exactly at the brink (float dust) decode in zero time.
    for (int m = 1; m <= n; ++m) {
        const NodeId v = nodes[m];
        if (decoded[v]) continue;
        if (raw[v] < i_max - 1e-9 * i_max)
            throw std::logic_error("broadcast LP replay left a node undecoded");
        decoded[v] = true;
        sol.stages.push_back(Stage{last_tx, 0.0, v});
        sol.decoding_order.push_back(v);
    }
    for (const Stage& st : sol.stages) sol.delay += st.duration;
    return sol;
}

}  // namespace

std::optional<BroadcastSolution> solve_min_delay_broadcast(
    const Topology& topo, const BroadcastOptions& opts) {
    if (topo.node_count() < 2)
        throw std::invalid_argument("broadcast needs at least one non-source node");

    SearchContext ctx{topo, opts.prune, /*count_only=*/false};
    dfs(ctx, MutualInfoState::initial(topo.node_count(), topo.i_max()), 0.0);

    ExactContext exact{topo, ctx.best_delay};
    exact_dfs(exact);
    if (exact.improved)
        return rebuild_from_lp(topo, exact.best_order, exact.best_x);

    if (ctx.best_delay == kInf) return std::nullopt;
    BroadcastSolution sol;
    sol.stages = std::move(ctx.best_stages);
    sol.delay = ctx.best_delay;
    for (const Stage& st : sol.stages) sol.decoding_order.push_back(st.decoder);
    return sol;
}

std::uint64_t broadcast_leaf_count(const Topology& topo) {
    SearchContext ctx{topo, /*prune=*/false, /*count_only=*/true};
    dfs(ctx, MutualInfoState::initial(topo.node_count(), topo.i_max()), 0.0);
    return ctx.leaves;
}

}  // namespace mia
