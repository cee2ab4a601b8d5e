#include "mia/topology.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <json.hpp>

namespace mia {

Topology::Topology(int n_relays, double i_max)
    : n_relays_(n_relays), i_max_(i_max),
      cap_(static_cast<std::size_t>(n_relays + 2) * (n_relays + 2), 0.0) {
    if (n_relays < 0) throw std::invalid_argument("n_relays must be >= 0");
    if (!(i_max > 0.0)) throw std::invalid_argument("i_max must be > 0");
}

void Topology::set_i_max(double v) {
    if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument("i_max must be positive and finite");
    i_max_ = v;
}

void Topology::set_capacity(NodeId from, NodeId to, double c) {
    if (from == to && c != 0.0) throw std::invalid_argument("diagonal capacity must be zero");
    if (!(c >= 0.0) || !std::isfinite(c)) throw std::invalid_argument("capacity must be finite and >= 0");
    cap_[static_cast<std::size_t>(from) * node_count() + to] = c;
}

void Topology::set_positions(std::vector<std::pair<double, double>> p) {
    if (!p.empty() && static_cast<int>(p.size()) != node_count())
        throw std::invalid_argument("positions size must equal node count");
    positions_ = std::move(p);
}

void Topology::validate() const {
    if (!(i_max_ > 0.0)) throw std::invalid_argument("i_max must be > 0");
    const int nc = node_count();
    for (int i = 0; i < nc; ++i) {
        for (int j = 0; j < nc; ++j) {
            const double c = capacity(i, j);
            if (!std::isfinite(c) || c < 0.0)
                throw std::invalid_argument("capacity entries must be finite and >= 0");
            if (i == j && c != 0.0)
                throw std::invalid_argument("capacity diagonal must be zero");
        }
    }
}

MutualInfoState MutualInfoState::initial(int node_count, double i_max) {
    MutualInfoState s;
    s.i_max = i_max;
    s.info.assign(node_count, 0.0);
    s.decoded.assign(node_count, false);
    s.info[0] = i_max;
    s.decoded[0] = true;
    return s;
}

bool MutualInfoState::all_decoded() const {
    for (bool d : decoded)
        if (!d) return false;
    return true;
}

double capacity_awgn(double h, double p, double n0) {
    if (!std::isfinite(h) || !std::isfinite(p) || !std::isfinite(n0))
        throw std::invalid_argument("capacity_awgn: non-finite input");
    if (h < 0.0 || p < 0.0 || !(n0 > 0.0))
        throw std::invalid_argument("capacity_awgn: require h >= 0, p >= 0, n0 > 0");
    return std::log2(1.0 + h * p / n0);
}

double overhead_adjust(double c, double eps) {
    if (c < 0.0 || eps < 0.0)
        throw std::invalid_argument("overhead_adjust: require c >= 0, eps >= 0");
    return c / (1.0 + eps);
}

MutualInfoState accumulate(const MutualInfoState& state, NodeId transmitter,
                           double duration, const Topology& topo) {
    if (transmitter < 0 || transmitter >= topo.node_count())
        throw std::invalid_argument("accumulate: bad transmitter id");
    if (!state.decoded[transmitter])
        throw std::invalid_argument("accumulate: transmitter has not decoded the packet");
    if (!(duration >= 0.0))
        throw std::invalid_argument("accumulate: duration must be >= 0");

    MutualInfoState next = state;
    const double tol = state.decode_tolerance();
    for (int j = 0; j < topo.node_count(); ++j) {
        if (next.decoded[j]) continue;
        next.info[j] += duration * topo.capacity(transmitter, j);
        if (next.info[j] >= state.i_max - tol) {
            next.info[j] = state.i_max;
            next.decoded[j] = true;
        }
    }
    return next;
}

double rayleigh_mean1_sigma() {
    return std::sqrt(2.0 / M_PI);
}

namespace {

// Uniform double in [0, 1) with 53 random bits; avoids the
// implementation-defined behavior of std::uniform_real_distribution.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double rayleigh_mean1(std::mt19937_64& rng) {
    const double u = next_unit(rng);
    return rayleigh_mean1_sigma() * std::sqrt(-2.0 * std::log1p(-u));
}

}  // namespace

Topology gen_random_topology(const TopologyGenConfig& cfg) {
    if (cfg.n_relays < 0) throw std::invalid_argument("n_relays must be >= 0");
    if (!(cfg.alpha >= 2.0)) throw std::invalid_argument("alpha must be >= 2");
    if (!(cfg.area_width > 0.0) || !(cfg.area_height > 0.0))
        throw std::invalid_argument("area dimensions must be positive");

    std::mt19937_64 rng(cfg.seed);
    const int nc = cfg.n_relays + 2;

    std::vector<std::pair<double, double>> pos(nc);
    pos[0] = cfg.source_pos;
    pos[nc - 1] = cfg.dest_pos;
    for (int r = 1; r <= cfg.n_relays; ++r) {
        for (;;) {
            const double x = next_unit(rng) * cfg.area_width;
            const double y = next_unit(rng) * cfg.area_height;
            bool clash = false;
            for (int q = 0; q < nc; ++q) {
                if (q > 0 && q < nc - 1 && q >= r) continue;  // not placed yet
                const double dx = x - pos[q].first, dy = y - pos[q].second;
                if (std::hypot(dx, dy) < 1e-9) { clash = true; break; }
            }
            if (!clash) { pos[r] = {x, y}; break; }
        }
    }

    Topology topo(cfg.n_relays, cfg.i_max);
    for (int i = 0; i < nc; ++i) {
        for (int j = 0; j < nc; ++j) {
            if (i == j) continue;
            const double h = rayleigh_mean1(rng);
            const double dx = pos[i].first - pos[j].first;
            const double dy = pos[i].second - pos[j].second;
            const double d = std::hypot(dx, dy);
            topo.set_capacity(i, j, std::log2(1.0 + h / std::pow(d, cfg.alpha)));
        }
    }
    topo.set_positions(std::move(pos));
    return topo;
}

std::string topology_to_json(const Topology& topo) {
    nlohmann::json j;
    j["n_relays"] = topo.n_relays();
    j["i_max"] = topo.i_max();
    auto cap = nlohmann::json::array();
    for (int i = 0; i < topo.node_count(); ++i) {
        auto row = nlohmann::json::array();
        for (int k = 0; k < topo.node_count(); ++k) row.push_back(topo.capacity(i, k));
        cap.push_back(std::move(row));
    }
    j["capacity"] = std::move(cap);
    if (topo.has_positions()) {
        auto ps = nlohmann::json::array();
        for (const auto& [x, y] : topo.positions()) ps.push_back({x, y});
        j["positions"] = std::move(ps);
    }
    return j.dump(2) + "\n";
}

Topology topology_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    Topology topo(j.at("n_relays").get<int>(), j.at("i_max").get<double>());
    const auto& cap = j.at("capacity");
    if (static_cast<int>(cap.size()) != topo.node_count())
        throw std::invalid_argument("capacity matrix size mismatch");
    for (int i = 0; i < topo.node_count(); ++i) {
        const auto& row = cap.at(i);
        if (static_cast<int>(row.size()) != topo.node_count())
            throw std::invalid_argument("capacity matrix row size mismatch");
        for (int k = 0; k < topo.node_count(); ++k)
            topo.set_capacity(i, k, row.at(k).get<double>());
    }
    if (j.contains("positions")) {
        std::vector<std::pair<double, double>> pos;
        for (const auto& p : j.at("positions"))
            pos.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
        topo.set_positions(std::move(pos));
    }
    topo.validate();
    return topo;
}

}  // namespace mia
