// graph_metrics.hpp
// The four fundamental measurements for a SignedNetwork: degree/strength,
// strength assortativity, weighted local clustering, and the average
// shortest path length on the largest connected component, plus the
// component structure itself.
//
// Undefined values (assortativity with zero strength variance, path length
// on a singleton component) propagate as empty optionals, never as zeros:
// zero is a legal metric value.

#pragma once

#include <optional>
#include <vector>

#include "signet/net_build.hpp"

namespace signet {

struct NodeMetrics {
    int degree = 0;
    double strength = 0.0;
};

struct NetworkMetrics {
    std::optional<double> assortativity;
    double avg_clustering = 0.0;
    std::optional<double> avg_path_len;
    std::size_t lcc_size = 0;
    std::size_t n_components = 0;
};

std::vector<NodeMetrics> node_metrics(const SignedNetwork& net);

// Strength assortativity: r = sum_ij (A_ij - k_i k_j / 2m) s_i s_j over
// sum_ij (k_i delta_ij - k_i k_j / 2m) s_i s_j. Undefined when the network
// has fewer than 2 edges or the denominator vanishes (all strengths equal).
std::optional<double> assortativity(const SignedNetwork& net);

// Mean over all nodes of C_i = [1/(k_i(k_i-1))] sum_{j!=k} (w^_ij w^_ik w^_jk)^(1/3),
// where w^ = w / max network weight; C_i = 0 for degree < 2.
double avg_clustering(const SignedNetwork& net);

// Connected components over the adjacency, ordered by size descending,
// ties by smallest contained node index. Each component lists node indices
// in increasing order.
std::vector<std::vector<int>> components(const SignedNetwork& net);

// Mean shortest-path distance over ordered node pairs of the largest
// connected component, with edge distance sqrt(2(1 - w)). Undefined when
// the LCC has fewer than 2 nodes.
std::optional<double> avg_path_length(const SignedNetwork& net);

inline double edge_distance(double w) { return std::sqrt(2.0 * (1.0 - w)); }

// All of the above in one pass (components are computed once).
NetworkMetrics network_metrics(const SignedNetwork& net);

}  // namespace signet
