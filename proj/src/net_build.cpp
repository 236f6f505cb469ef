#include "signet/net_build.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "signet/csv.hpp"
#include "signet/errors.hpp"

namespace signet {

const char* kind_name(NetworkKind kind) {
    switch (kind) {
        case NetworkKind::anti: return "anti";
        case NetworkKind::positive: return "positive";
        case NetworkKind::fully_connected: return "fully_connected";
    }
    return "?";
}

SignedNetwork::SignedNetwork(NetworkKind kind, const std::vector<std::string>& symbols,
                             std::vector<WeightedEdge> edges, bool keep_isolated)
    : kind_(kind) {
    const int n_in = static_cast<int>(symbols.size());
    std::vector<int> degree_in(static_cast<std::size_t>(n_in), 0);
    for (const auto& e : edges) {
        ++degree_in[static_cast<std::size_t>(e.i)];
        ++degree_in[static_cast<std::size_t>(e.j)];
    }

    // Remap the roster, dropping isolated nodes unless asked to keep them.
    std::vector<int> remap(static_cast<std::size_t>(n_in), -1);
    for (int i = 0; i < n_in; ++i) {
        if (keep_isolated || degree_in[static_cast<std::size_t>(i)] > 0) {
            remap[static_cast<std::size_t>(i)] = static_cast<int>(nodes_.size());
            nodes_.push_back(symbols[static_cast<std::size_t>(i)]);
        } else {
            ++isolated_removed_;
        }
    }

    edges_.reserve(edges.size());
    for (auto& e : edges) {
        e.i = remap[static_cast<std::size_t>(e.i)];
        e.j = remap[static_cast<std::size_t>(e.j)];
        if (e.i > e.j) std::swap(e.i, e.j);
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    });

    const std::size_t n = nodes_.size();
    std::vector<std::size_t> counts(n + 1, 0);
    for (const auto& e : edges_) {
        ++counts[static_cast<std::size_t>(e.i) + 1];
        ++counts[static_cast<std::size_t>(e.j) + 1];
    }
    offsets_.assign(n + 1, 0);
    std::partial_sum(counts.begin(), counts.end(), offsets_.begin());

    adj_.resize(offsets_[n]);
    adj_w_.resize(offsets_[n]);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges_) {
        adj_[cursor[static_cast<std::size_t>(e.i)]] = e.j;
        adj_w_[cursor[static_cast<std::size_t>(e.i)]++] = e.w;
        adj_[cursor[static_cast<std::size_t>(e.j)]] = e.i;
        adj_w_[cursor[static_cast<std::size_t>(e.j)]++] = e.w;
    }
    for (std::size_t i = 0; i < n; ++i) {
        // Neighbor lists sorted by node id so edge lookup can binary-search.
        const auto lo = offsets_[i], hi = offsets_[i + 1];
        std::vector<std::size_t> order(hi - lo);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return adj_[lo + a] < adj_[lo + b];
        });
        std::vector<int> tmp_n(hi - lo);
        std::vector<double> tmp_w(hi - lo);
        for (std::size_t k = 0; k < order.size(); ++k) {
            tmp_n[k] = adj_[lo + order[k]];
            tmp_w[k] = adj_w_[lo + order[k]];
        }
        std::copy(tmp_n.begin(), tmp_n.end(), adj_.begin() + static_cast<std::ptrdiff_t>(lo));
        std::copy(tmp_w.begin(), tmp_w.end(), adj_w_.begin() + static_cast<std::ptrdiff_t>(lo));
    }

    max_weight_ = 0.0;
    for (const auto& e : edges_) max_weight_ = std::max(max_weight_, e.w);
}

bool SignedNetwork::has_edge(int i, int j) const {
    auto nbrs = neighbors(i);
    return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

double SignedNetwork::weight(int i, int j) const {
    auto nbrs = neighbors(i);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), j);
    if (it == nbrs.end() || *it != j) return 0.0;
    return neighbor_weights(i)[static_cast<std::size_t>(it - nbrs.begin())];
}

double SignedNetwork::node_strength(int i) const {
    auto ws = neighbor_weights(i);
    double s = 0.0;
    for (double w : ws) s += w;
    return s;
}

namespace {

SignedNetwork build_signed(const CorrMatrix& corr, double theta, bool anti) {
    const int n = corr.n();
    std::vector<WeightedEdge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double rho = corr.rho(i, j);
            const double w = anti ? (rho < 0.0 ? -rho : 0.0) : (rho > 0.0 ? rho : 0.0);
            if (w > theta) edges.push_back(WeightedEdge{i, j, w});
        }
    }
    return SignedNetwork(anti ? NetworkKind::anti : NetworkKind::positive, corr.roster,
                         std::move(edges), /*keep_isolated=*/false);
}

}  // namespace

SignedNetwork build_anti(const CorrMatrix& corr, double theta) {
    return build_signed(corr, theta, /*anti=*/true);
}

SignedNetwork build_positive(const CorrMatrix& corr, double theta) {
    return build_signed(corr, theta, /*anti=*/false);
}

SignedNetwork build_fully_connected(const CorrMatrix& corr) {
    const int n = corr.n();
    std::vector<WeightedEdge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.push_back(
                WeightedEdge{i, j, std::exp(-std::sqrt(2.0 * (1.0 - corr.rho(i, j))))});
    return SignedNetwork(NetworkKind::fully_connected, corr.roster, std::move(edges),
                         /*keep_isolated=*/true);
}

void export_edge_list(const SignedNetwork& net, std::ostream& out) {
    out << "symbol_i,symbol_j,weight\n";
    for (const auto& e : net.edges())
        out << net.symbol(e.i) << ',' << net.symbol(e.j) << ',' << csv::format_double(e.w)
            << '\n';
}

void export_node_table(const SignedNetwork& net, std::ostream& out) {
    out << "symbol,strength\n";
    for (int i = 0; i < static_cast<int>(net.node_count()); ++i)
        out << net.symbol(i) << ',' << csv::format_double(net.node_strength(i)) << '\n';
}

}  // namespace signet
