#ifndef MIA_LP_HPP
#define MIA_LP_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mia/topology.hpp"

namespace mia {

enum class Relation { LessEq, GreaterEq, Equal };

/// Dense LP: minimize c^T x subject to the rows, with x >= 0 except where
/// free_vars marks a variable unbounded below.
struct LpProblem {
    std::vector<double> objective;
    std::vector<std::vector<double>> rows;
    std::vector<Relation> relations;
    std::vector<double> rhs;
    std::vector<bool> free_vars;  // empty means all bounded below by 0

    int num_vars() const { return static_cast<int>(objective.size()); }
    int num_rows() const { return static_cast<int>(rows.size()); }
    void validate() const;
    std::string dump() const;  // plain-text tableau for debugging
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    double objective = 0.0;
    std::vector<double> x;
};

/// Two-phase dense simplex with Bland's anti-cycling rule.
/// Pivot tolerance 1e-10, feasibility tolerance 1e-8.
LpSolution simplex_solve(const LpProblem& p);

/// Minimum-delay unicast LP for a fixed relay subset and decoding order:
/// variables A_ij (i <= j) and Delta_j, one accumulation constraint per
/// ordered node plus the destination, one budget constraint per stage.
LpProblem build_unicast_lp(const Topology& topo, const std::vector<NodeId>& ordering);

/// Broadcast counterpart over a decoding order of all non-source nodes.
LpProblem build_broadcast_lp(const Topology& topo, const std::vector<NodeId>& ordering);

/// Broadcast LP over a *prefix* of a decoding order: minimum time to get
/// exactly these nodes decoded in this order. Its optimum lower-bounds the
/// optimum of every full ordering starting with the prefix.
LpProblem build_prefix_broadcast_lp(const Topology& topo, const std::vector<NodeId>& prefix);

/// Stage count (k+1) and A-variable layout of the unicast/broadcast LPs.
struct LpLayout {
    int stages = 0;
    int a_index(int i, int j) const;  // variable index of A_ij, i <= j
    int delta_index(int j) const;
    int num_vars() const;
};
LpLayout unicast_lp_layout(int relay_count);
LpLayout broadcast_lp_layout(int n);

struct ExhaustiveResult {
    double delay = 0.0;
    std::vector<NodeId> ordering;  // best ordered relay subset / node order
    LpSolution best;               // LP solution for the best ordering
    std::uint64_t lp_runs = 0;
};

/// Prior-work baseline: one LP per ordered relay subset. Refuses when
/// n_relays exceeds the cap.
std::optional<ExhaustiveResult> exhaustive_unicast(const Topology& topo, int cap = 6);

/// One LP per permutation of the non-source nodes.
std::optional<ExhaustiveResult> exhaustive_broadcast(const Topology& topo, int cap = 6);

enum class InactiveCheck { Unchanged, Changed, Inapplicable };

/// Re-solves with the nonnegativity bounds removed (variables free) and
/// reports whether the optimum moved; requires a strictly interior optimum
/// (every variable > 1e-8), otherwise Inapplicable.
InactiveCheck inactive_constraint_check(const LpProblem& p, const LpSolution& sol);

}  // namespace mia

#endif  // MIA_LP_HPP
