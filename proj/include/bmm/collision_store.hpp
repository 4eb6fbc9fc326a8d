#pragma once

#include <cstdint>
#include <vector>

#include "bmm/cost_ledger.hpp"
#include "bmm/order_stat_tree.hpp"

namespace bmm {

/// Compact representation of a bipartite graph G = (I, J, E) that starts
/// complete and only ever loses edges. Instead of adjacency it stores, per
/// left vertex, the ordered set of right vertices it is NOT connected to,
/// plus an ordered index of left vertices keyed by (degree, id). Total size
/// is O(|I| + removed edges) nodes, and each operation below touches
/// O(polylog) nodes, all charged as ds_ops on the bound ledger.
///
/// Rank queries use the (degree, id) order for the left side and plain id
/// order for the right side; ranks are 1-based counts.
class CollisionStore {
public:
    /// Complete bipartite graph on left_size x right_size; construction does
    /// O(left_size) structure work, nothing per edge.
    CollisionStore(std::uint32_t left_size, std::uint32_t right_size, CostLedger& ledger);

    std::uint32_t left_size() const { return left_size_; }
    std::uint32_t right_size() const { return right_size_; }

    std::uint64_t edge_count() const {
        return static_cast<std::uint64_t>(left_size_) * right_size_ - removed_;
    }
    std::uint64_t removed_count() const { return removed_; }

    std::uint32_t get_degree(std::uint32_t u) const;

    bool check_connection(std::uint32_t u, std::uint32_t v) const;

    /// The rank-th left vertex, in (degree asc, id asc) order, among left
    /// vertices of degree <= degree_cap. Throws std::out_of_range when rank
    /// exceeds the count of qualifying vertices.
    std::uint32_t get_vert_with_degree_at_most(std::uint64_t rank, std::uint32_t degree_cap) const;

    std::uint64_t count_with_degree_at_most(std::uint32_t degree_cap) const;

    /// The rank-th smallest right vertex not connected to u. Throws
    /// std::out_of_range when u has fewer than rank non-neighbors.
    std::uint32_t get_nonneighbor(std::uint64_t rank, std::uint32_t u) const;

    std::uint64_t nonneighbor_count(std::uint32_t u) const;

    /// Removes an edge that must currently be present; removing an absent
    /// edge is a logic error and throws.
    void remove_edge(std::uint32_t u, std::uint32_t v);

private:
    void check_left(std::uint32_t u) const;
    void check_right(std::uint32_t v) const;

    static std::uint64_t degree_key(std::uint32_t degree, std::uint32_t id) {
        return (static_cast<std::uint64_t>(degree) << 32) | id;
    }

    std::uint32_t left_size_;
    std::uint32_t right_size_;
    std::uint64_t removed_ = 0;
    std::vector<std::uint32_t> degree_;
    std::vector<detail::OrderStatTree> nonneighbors_;
    detail::OrderStatTree degree_index_;
    CostLedger* ledger_;
};

} // namespace bmm
