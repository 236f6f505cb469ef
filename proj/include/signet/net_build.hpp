// net_build.hpp
// Splits a correlation matrix into the anti-correlation network (weights
// |rho| on negative pairs), the positive-correlation network (weights rho
// on positive pairs), and the legacy fully connected baseline with weights
// exp(-sqrt(2(1 - rho))). Thresholding and isolated-node removal follow.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "signet/correlation.hpp"

namespace signet {

enum class NetworkKind { anti, positive, fully_connected };

const char* kind_name(NetworkKind kind);

struct WeightedEdge {
    int i = 0;  // i < j, indices into the retained roster
    int j = 0;
    double w = 0.0;
};

// Undirected weighted graph after thresholding and isolated-node removal.
// Adjacency is stored as sorted per-node neighbor lists (plus a flat edge
// list), which serves both the sparse anti networks and the near-complete
// positive networks without N^2 storage.
class SignedNetwork {
public:
    SignedNetwork() = default;

    // `symbols` is the roster the edge endpoints index into; nodes with no
    // incident edge are dropped unless keep_isolated is set (the fully
    // connected baseline keeps every node).
    SignedNetwork(NetworkKind kind, const std::vector<std::string>& symbols,
                  std::vector<WeightedEdge> edges, bool keep_isolated);

    NetworkKind kind() const { return kind_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return nodes_.empty(); }

    // Count of roster nodes dropped by isolated-node removal.
    std::size_t isolated_removed() const { return isolated_removed_; }

    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::string& symbol(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
    const std::vector<WeightedEdge>& edges() const { return edges_; }

    int degree(int i) const {
        return static_cast<int>(offsets_[static_cast<std::size_t>(i) + 1] -
                                offsets_[static_cast<std::size_t>(i)]);
    }
    std::span<const int> neighbors(int i) const {
        return {adj_.data() + offsets_[static_cast<std::size_t>(i)],
                adj_.data() + offsets_[static_cast<std::size_t>(i) + 1]};
    }
    std::span<const double> neighbor_weights(int i) const {
        return {adj_w_.data() + offsets_[static_cast<std::size_t>(i)],
                adj_w_.data() + offsets_[static_cast<std::size_t>(i) + 1]};
    }

    bool has_edge(int i, int j) const;
    double weight(int i, int j) const;  // 0 when no edge
    double max_weight() const { return max_weight_; }
    double node_strength(int i) const;  // sum of incident edge weights

private:
    NetworkKind kind_ = NetworkKind::anti;
    std::vector<std::string> nodes_;
    std::vector<WeightedEdge> edges_;
    std::vector<std::size_t> offsets_;  // CSR offsets, size node_count()+1
    std::vector<int> adj_;
    std::vector<double> adj_w_;
    std::size_t isolated_removed_ = 0;
    double max_weight_ = 0.0;
};

// W^a_ij = |rho_ij| where rho_ij < 0, else 0; edge iff W^a_ij > theta.
SignedNetwork build_anti(const CorrMatrix& corr, double theta);

// W_ij = rho_ij where rho_ij > 0 and i != j, else 0; edge iff W_ij > theta.
SignedNetwork build_positive(const CorrMatrix& corr, double theta);

// Complete graph with w_ij = exp(-sqrt(2(1 - rho_ij))); no thresholding,
// no node removal.
SignedNetwork build_fully_connected(const CorrMatrix& corr);

// Text rows "symbol_i,symbol_j,weight" for external graph visualizers.
void export_edge_list(const SignedNetwork& net, std::ostream& out);

// Text rows "symbol,strength".
void export_node_table(const SignedNetwork& net, std::ostream& out);

}  // namespace signet
