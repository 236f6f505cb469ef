#include "signet/graph_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace signet {

std::vector<NodeMetrics> node_metrics(const SignedNetwork& net) {
    const int n = static_cast<int>(net.node_count());
    std::vector<NodeMetrics> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)].degree = net.degree(i);
        out[static_cast<std::size_t>(i)].strength = net.node_strength(i);
    }
    return out;
}

std::optional<double> assortativity(const SignedNetwork& net) {
    if (net.edge_count() < 2) return std::nullopt;
    const int n = static_cast<int>(net.node_count());
    const double two_m = 2.0 * static_cast<double>(net.edge_count());

    // Aggregate form of the double sum: the A_ij term reduces to a sum over
    // edges, the k_i k_j / 2m term factorizes through sum_i k_i s_i.
    double ks = 0.0;   // sum_i k_i s_i
    double kss = 0.0;  // sum_i k_i s_i^2
    std::vector<double> strength(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double s = net.node_strength(i);
        strength[static_cast<std::size_t>(i)] = s;
        ks += net.degree(i) * s;
        kss += net.degree(i) * s * s;
    }
    double edge_ss = 0.0;  // sum_ij A_ij s_i s_j = 2 * sum_edges s_i s_j
    for (const auto& e : net.edges())
        edge_ss += strength[static_cast<std::size_t>(e.i)] * strength[static_cast<std::size_t>(e.j)];
    edge_ss *= 2.0;

    const double shared = ks * ks / two_m;
    const double num = edge_ss - shared;
    const double den = kss - shared;
    // All-equal strengths make the denominator vanish analytically; in
    // floating point it lands near 0 relative to its constituent terms.
    const double scale = std::abs(kss) + std::abs(shared);
    if (std::abs(den) <= 1e-12 * scale) return std::nullopt;
    return num / den;
}

double avg_clustering(const SignedNetwork& net) {
    const int n = static_cast<int>(net.node_count());
    if (n == 0) return 0.0;
    const double wmax = net.max_weight();
    if (wmax <= 0.0) return 0.0;

    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const int k = net.degree(i);
        if (k < 2) continue;
        auto nbrs = net.neighbors(i);
        auto ws = net.neighbor_weights(i);
        double acc = 0.0;
        for (std::size_t a = 0; a < nbrs.size(); ++a) {
            for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
                const double w_jk = net.weight(nbrs[a], nbrs[b]);
                if (w_jk <= 0.0) continue;
                // Both orientations (j,k) and (k,j) of the ordered pair sum.
                acc += 2.0 * std::cbrt(ws[a] / wmax * (ws[b] / wmax) * (w_jk / wmax));
            }
        }
        total += acc / (static_cast<double>(k) * (k - 1));
    }
    return total / n;
}

std::vector<std::vector<int>> components(const SignedNetwork& net) {
    const int n = static_cast<int>(net.node_count());
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> comps;
    for (int start = 0; start < n; ++start) {
        if (label[static_cast<std::size_t>(start)] != -1) continue;
        const int id = static_cast<int>(comps.size());
        comps.emplace_back();
        std::vector<int> stack{start};
        label[static_cast<std::size_t>(start)] = id;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            comps[static_cast<std::size_t>(id)].push_back(v);
            for (int u : net.neighbors(v)) {
                if (label[static_cast<std::size_t>(u)] == -1) {
                    label[static_cast<std::size_t>(u)] = id;
                    stack.push_back(u);
                }
            }
        }
        std::sort(comps[static_cast<std::size_t>(id)].begin(),
                  comps[static_cast<std::size_t>(id)].end());
    }
    std::stable_sort(comps.begin(), comps.end(),
                     [](const std::vector<int>& a, const std::vector<int>& b) {
                         if (a.size() != b.size()) return a.size() > b.size();
                         return a.front() < b.front();
                     });
    return comps;
}

namespace {

// Sum of shortest-path distances from `source` to every other node of its
// component, using edge distance sqrt(2(1 - w)).
double dijkstra_distance_sum(const SignedNetwork& net, int source,
                             std::span<const int> comp, std::vector<double>& dist) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    for (int v : comp) dist[static_cast<std::size_t>(v)] = inf;
    dist[static_cast<std::size_t>(source)] = 0.0;

    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.emplace(0.0, source);
    double sum = 0.0;
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d > dist[static_cast<std::size_t>(v)]) continue;
        if (v != source) sum += d;
        auto nbrs = net.neighbors(v);
        auto ws = net.neighbor_weights(v);
        for (std::size_t k = 0; k < nbrs.size(); ++k) {
            const double nd = d + edge_distance(ws[k]);
            if (nd < dist[static_cast<std::size_t>(nbrs[k])]) {
                dist[static_cast<std::size_t>(nbrs[k])] = nd;
                heap.emplace(nd, nbrs[k]);
            }
        }
    }
    return sum;
}

}  // namespace

std::optional<double> avg_path_length(const SignedNetwork& net) {
    auto comps = components(net);
    if (comps.empty() || comps.front().size() < 2) return std::nullopt;
    const auto& lcc = comps.front();
    const double n_lcc = static_cast<double>(lcc.size());
    std::vector<double> dist(net.node_count());
    double total = 0.0;
    for (int source : lcc) total += dijkstra_distance_sum(net, source, lcc, dist);
    return total / (n_lcc * (n_lcc - 1.0));
}

NetworkMetrics network_metrics(const SignedNetwork& net) {
    NetworkMetrics m;
    auto comps = components(net);
    m.n_components = comps.size();
    m.lcc_size = comps.empty() ? 0 : comps.front().size();
    m.assortativity = assortativity(net);
    m.avg_clustering = avg_clustering(net);
    if (m.lcc_size >= 2) {
        const auto& lcc = comps.front();
        std::vector<double> dist(net.node_count());
        double total = 0.0;
        for (int source : lcc) total += dijkstra_distance_sum(net, source, lcc, dist);
        m.avg_path_len = total / (static_cast<double>(lcc.size()) *
                                  (static_cast<double>(lcc.size()) - 1.0));
    }
    return m;
}

}  // namespace signet
