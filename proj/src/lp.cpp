#include "mia/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace mia {

namespace {
constexpr double kPivotTol = 1e-10;
constexpr double kFeasTol = 1e-8;
}

void LpProblem::validate() const {
    if (static_cast<int>(rhs.size()) != num_rows() ||
        static_cast<int>(relations.size()) != num_rows())
        throw std::invalid_argument("LpProblem: row metadata size mismatch");
    if (!free_vars.empty() && static_cast<int>(free_vars.size()) != num_vars())
        throw std::invalid_argument("LpProblem: free_vars size mismatch");
    for (double c : objective)
        if (!std::isfinite(c)) throw std::invalid_argument("LpProblem: non-finite objective");
    for (int i = 0; i < num_rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != num_vars())
            throw std::invalid_argument("LpProblem: row length mismatch");
        for (double a : rows[i])
            if (!std::isfinite(a)) throw std::invalid_argument("LpProblem: non-finite coefficient");
        if (!std::isfinite(rhs[i])) throw std::invalid_argument("LpProblem: non-finite rhs");
    }
}

std::string LpProblem::dump() const {
    std::ostringstream os;
    os << "min ";
    for (int j = 0; j < num_vars(); ++j) os << (j ? " + " : "") << objective[j] << "*x" << j;
    os << "\n";
    for (int i = 0; i < num_rows(); ++i) {
        for (int j = 0; j < num_vars(); ++j) os << (j ? " " : "  ") << rows[i][j];
        os << (relations[i] == Relation::LessEq ? " <= "
               : relations[i] == Relation::GreaterEq ? " >= " : " == ")
           << rhs[i] << "\n";
    }
    return os.str();
}

namespace {

// Full-tableau simplex state. Columns: structural (split for free vars),
// then slacks/surpluses, then artificials; last column is the rhs.
struct Tableau {
    int m = 0;
    int cols = 0;  // excluding rhs
    std::vector<std::vector<double>> a;  // m rows of cols+1
    std::vector<int> basis;

    double& at(int i, int j) { return a[i][j]; }
    double rhs(int i) const { return a[i][cols]; }

    void pivot(int r, int c) {
        const double p = a[r][c];
        for (int j = 0; j <= cols; ++j) a[r][j] /= p;
        for (int i = 0; i < m; ++i) {
            if (i == r) continue;
            const double f = a[i][c];
            if (f == 0.0) continue;
            for (int j = 0; j <= cols; ++j) a[i][j] -= f * a[r][j];
        }
        basis[r] = c;
    }
};

// Minimizes cost over the tableau with Bland's rule. `usable` masks columns
// allowed to enter. Returns false on unboundedness.
bool run_simplex(Tableau& t, std::vector<double>& cost, const std::vector<bool>& usable) {
    for (;;) {
        int enter = -1;
        for (int j = 0; j < t.cols; ++j) {
            if (!usable[j]) continue;
            if (cost[j] < -kPivotTol) { enter = j; break; }  // Bland: smallest index
        }
        if (enter < 0) return true;

        int leave = -1;
        double best_ratio = 0.0;
        for (int i = 0; i < t.m; ++i) {
            const double aij = t.a[i][enter];
            if (aij <= kPivotTol) continue;
            const double ratio = t.rhs(i) / aij;
            if (leave < 0 || ratio < best_ratio - kPivotTol ||
                (std::abs(ratio - best_ratio) <= kPivotTol && t.basis[i] < t.basis[leave]))
                { leave = i; best_ratio = ratio; }
        }
        if (leave < 0) return false;

        const double f = cost[enter];
        t.pivot(leave, enter);
        for (int j = 0; j <= t.cols; ++j) cost[j] -= f * t.a[leave][j];
    }
}

}  // namespace

LpSolution simplex_solve(const LpProblem& p) {
    p.validate();
    const int n = p.num_vars();
    const int m = p.num_rows();

    // Column layout: each structural variable gets a plus column and, when
    // free, a minus column as well.
    std::vector<int> plus_col(n), minus_col(n, -1);
    int nc = 0;
    for (int j = 0; j < n; ++j) {
        plus_col[j] = nc++;
        if (!p.free_vars.empty() && p.free_vars[j]) minus_col[j] = nc++;
    }
    const int slack_base = nc;
    int n_slack = 0;
    for (auto r : p.relations)
        if (r != Relation::Equal) ++n_slack;
    nc += n_slack;
    const int art_base = nc;
    nc += m;  // one artificial per row at most

    Tableau t;
    t.m = m;
    t.cols = nc;
    t.a.assign(m, std::vector<double>(nc + 1, 0.0));
    t.basis.assign(m, -1);

    std::vector<bool> is_artificial(nc, false);
    int slack_idx = 0;
    for (int i = 0; i < m; ++i) {
        // Equilibrate: scaling a row (and its rhs) by a positive constant
        // keeps the feasible set identical but conditions the tableau when
        // coefficients span many orders of magnitude.
        double row_max = 0.0;
        for (int j = 0; j < n; ++j) row_max = std::max(row_max, std::abs(p.rows[i][j]));
        const double scale = row_max > 0.0 ? 1.0 / row_max : 1.0;
        double sign = scale;
        if (p.rhs[i] < 0.0) sign = -scale;
        for (int j = 0; j < n; ++j) {
            const double a = sign * p.rows[i][j];
            t.a[i][plus_col[j]] = a;
            if (minus_col[j] >= 0) t.a[i][minus_col[j]] = -a;
        }
        t.a[i][nc] = sign * p.rhs[i];

        Relation rel = p.relations[i];
        if (sign < 0.0) {
            if (rel == Relation::LessEq) rel = Relation::GreaterEq;
            else if (rel == Relation::GreaterEq) rel = Relation::LessEq;
        }
        if (rel != Relation::Equal) {
            const int sc = slack_base + slack_idx++;
            t.a[i][sc] = (rel == Relation::LessEq) ? 1.0 : -1.0;
            if (rel == Relation::LessEq) {
                t.basis[i] = sc;
                continue;
            }
        }
        const int ac = art_base + i;
        t.a[i][ac] = 1.0;
        is_artificial[ac] = true;
        t.basis[i] = ac;
    }

    std::vector<bool> usable(nc, true);

    // Phase 1: minimize the sum of artificials.
    {
        std::vector<double> cost(nc + 1, 0.0);
        for (int j = 0; j < nc; ++j)
            if (is_artificial[j]) cost[j] = 1.0;
        for (int i = 0; i < m; ++i)
            if (is_artificial[t.basis[i]])
                for (int j = 0; j <= nc; ++j) cost[j] -= t.a[i][j];
        // Phase 1 minimizes a sum of nonnegative artificials, which can never
        // be unbounded; a failed ratio test here is roundoff dust, so accept
        // the current basis and let the feasibility test decide.
        run_simplex(t, cost, usable);
        if (-cost[nc] > kFeasTol) return LpSolution{LpStatus::Infeasible, 0.0, {}};

        // Drive leftover artificials out of the basis.
        for (int i = 0; i < m; ++i) {
            if (!is_artificial[t.basis[i]]) continue;
            int c = -1;
            for (int j = 0; j < nc; ++j)
                if (!is_artificial[j] && std::abs(t.a[i][j]) > kPivotTol) { c = j; break; }
            if (c >= 0) t.pivot(i, c);
            // else: redundant row, leave the artificial basic at zero
        }
        for (int j = 0; j < nc; ++j)
            if (is_artificial[j]) usable[j] = false;
    }

    // Phase 2.
    {
        std::vector<double> cost(nc + 1, 0.0);
        for (int j = 0; j < n; ++j) {
            cost[plus_col[j]] = p.objective[j];
            if (minus_col[j] >= 0) cost[minus_col[j]] = -p.objective[j];
        }
        for (int i = 0; i < m; ++i) {
            const double cb = cost[t.basis[i]];
            if (cb != 0.0)
                for (int j = 0; j <= nc; ++j) cost[j] -= cb * t.a[i][j];
        }
        if (!run_simplex(t, cost, usable))
            return LpSolution{LpStatus::Unbounded, 0.0, {}};
    }

    LpSolution sol;
    sol.status = LpStatus::Optimal;
    std::vector<double> col_val(nc, 0.0);
    for (int i = 0; i < m; ++i)
        if (t.basis[i] >= 0) col_val[t.basis[i]] = t.rhs(i);
    sol.x.resize(n);
    for (int j = 0; j < n; ++j) {
        sol.x[j] = col_val[plus_col[j]];
        if (minus_col[j] >= 0) sol.x[j] -= col_val[minus_col[j]];
        sol.objective += p.objective[j] * sol.x[j];
    }
    return sol;
}

int LpLayout::a_index(int i, int j) const { return j * (j + 1) / 2 + i; }
int LpLayout::delta_index(int j) const { return stages * (stages + 1) / 2 + j; }
int LpLayout::num_vars() const { return stages * (stages + 1) / 2 + stages; }

LpLayout unicast_lp_layout(int relay_count) { return LpLayout{relay_count + 1}; }
LpLayout broadcast_lp_layout(int n) { return LpLayout{n}; }

namespace {

// Shared builder: `nodes` maps order-index -> node id with nodes[0] the
// source; every nodes[m] for m >= 1 must accumulate i_max by the end of
// stage m-1. `stages` = nodes.size() - 1.
LpProblem build_ordering_lp(const Topology& topo, const std::vector<NodeId>& nodes) {
    const int stages = static_cast<int>(nodes.size()) - 1;
    LpLayout lay{stages};
    LpProblem p;
    p.objective.assign(lay.num_vars(), 0.0);
    for (int j = 0; j < stages; ++j) p.objective[lay.delta_index(j)] = 1.0;

    for (int m = 1; m <= stages; ++m) {
        std::vector<double> row(lay.num_vars(), 0.0);
        for (int j = 0; j < m; ++j)
            for (int i = 0; i <= j; ++i)
                row[lay.a_index(i, j)] = topo.capacity(nodes[i], nodes[m]);
        p.rows.push_back(std::move(row));
        p.relations.push_back(Relation::GreaterEq);
        p.rhs.push_back(topo.i_max());
    }
    for (int j = 0; j < stages; ++j) {
        std::vector<double> row(lay.num_vars(), 0.0);
        for (int i = 0; i <= j; ++i) row[lay.a_index(i, j)] = 1.0;
        row[lay.delta_index(j)] = -1.0;
        p.rows.push_back(std::move(row));
        p.relations.push_back(Relation::LessEq);
        p.rhs.push_back(0.0);
    }
    return p;
}

}  // namespace

LpProblem build_unicast_lp(const Topology& topo, const std::vector<NodeId>& ordering) {
    std::set<NodeId> seen;
    for (NodeId r : ordering) {
        if (r < 1 || r > topo.n_relays() || !seen.insert(r).second)
            throw std::invalid_argument("build_unicast_lp: ordering must list distinct relay ids");
    }
    std::vector<NodeId> nodes;
    nodes.push_back(topo.source());
    nodes.insert(nodes.end(), ordering.begin(), ordering.end());
    nodes.push_back(topo.destination());
    return build_ordering_lp(topo, nodes);
}

LpProblem build_broadcast_lp(const Topology& topo, const std::vector<NodeId>& ordering) {
    const int n = topo.node_count() - 1;
    if (static_cast<int>(ordering.size()) != n)
        throw std::invalid_argument("build_broadcast_lp: ordering must permute all non-source nodes");
    return build_prefix_broadcast_lp(topo, ordering);
}

LpProblem build_prefix_broadcast_lp(const Topology& topo, const std::vector<NodeId>& prefix) {
    const int n = topo.node_count() - 1;
    if (static_cast<int>(prefix.size()) > n)
        throw std::invalid_argument("build_prefix_broadcast_lp: prefix too long");
    std::set<NodeId> seen;
    for (NodeId r : prefix)
        if (r < 1 || r > n || !seen.insert(r).second)
            throw std::invalid_argument("build_prefix_broadcast_lp: bad prefix entry");
    std::vector<NodeId> nodes;
    nodes.push_back(topo.source());
    nodes.insert(nodes.end(), prefix.begin(), prefix.end());
    return build_ordering_lp(topo, nodes);
}

std::optional<ExhaustiveResult> exhaustive_unicast(const Topology& topo, int cap) {
    const int n = topo.n_relays();
    if (n > cap)
        throw std::invalid_argument("exhaustive_unicast: n_relays exceeds the configured cap");

    ExhaustiveResult res;
    bool found = false;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<NodeId> subset;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) subset.push_back(i + 1);
        std::sort(subset.begin(), subset.end());
        do {
            auto sol = simplex_solve(build_unicast_lp(topo, subset));
            ++res.lp_runs;
            if (sol.status != LpStatus::Optimal) continue;
            if (!found || sol.objective < res.delay) {
                found = true;
                res.delay = sol.objective;
                res.ordering = subset;
                res.best = std::move(sol);
            }
        } while (std::next_permutation(subset.begin(), subset.end()));
    }
    if (!found) return std::nullopt;
    return res;
}

std::optional<ExhaustiveResult> exhaustive_broadcast(const Topology& topo, int cap) {
    const int n = topo.node_count() - 1;
    if (n > cap)
        throw std::invalid_argument("exhaustive_broadcast: node count exceeds the configured cap");

    std::vector<NodeId> order;
    for (NodeId v = 1; v <= n; ++v) order.push_back(v);

    ExhaustiveResult res;
    bool found = false;
    do {
        auto sol = simplex_solve(build_broadcast_lp(topo, order));
        ++res.lp_runs;
        if (sol.status != LpStatus::Optimal) continue;
        if (!found || sol.objective < res.delay) {
            found = true;
            res.delay = sol.objective;
            res.ordering = order;
            res.best = std::move(sol);
        }
    } while (std::next_permutation(order.begin(), order.end()));
    if (!found) return std::nullopt;
    return res;
}

InactiveCheck inactive_constraint_check(const LpProblem& p, const LpSolution& sol) {
    if (sol.status != LpStatus::Optimal) return InactiveCheck::Inapplicable;
    for (double v : sol.x)
        if (v <= 1e-8) return InactiveCheck::Inapplicable;

    LpProblem relaxed = p;
    relaxed.free_vars.assign(p.num_vars(), true);
    const auto r = simplex_solve(relaxed);
    if (r.status != LpStatus::Optimal) return InactiveCheck::Changed;
    return std::abs(r.objective - sol.objective) <= 1e-7 ? InactiveCheck::Unchanged
                                                        : InactiveCheck::Changed;
}

}  // namespace mia
