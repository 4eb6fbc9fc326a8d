#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bmm/cost_ledger.hpp"

namespace bmm::detail {

/// Size-augmented AVL set over uint64 keys with rank/select access.
/// Nodes live in a pooled vector with a free list, so a tree costs O(1)
/// memory until something is inserted. Every node touched during a
/// traversal, rotation or bulk build counts one ds_op on the bound ledger.
class OrderStatTree {
public:
    OrderStatTree() = default;
    explicit OrderStatTree(CostLedger* ledger) : ledger_(ledger) {}

    void bind_ledger(CostLedger* ledger) { ledger_ = ledger; }

    std::uint64_t size() const { return root_ < 0 ? 0 : pool_[static_cast<std::size_t>(root_)].size; }
    bool empty() const { return root_ < 0; }

    bool contains(std::uint64_t key) const;

    /// Returns false (and leaves the tree unchanged) if the key is present.
    bool insert(std::uint64_t key);

    /// Returns false if the key is absent.
    bool erase(std::uint64_t key);

    /// Number of stored keys <= key.
    std::uint64_t count_le(std::uint64_t key) const;

    /// The rank-th smallest stored key, 1-based. Requires 1 <= rank <= size().
    std::uint64_t select(std::uint64_t rank) const;

    /// Replaces the contents with the given strictly increasing keys,
    /// building a perfectly balanced tree in linear time.
    void build_sorted(std::span<const std::uint64_t> keys);

private:
    struct Node {
        std::uint64_t key = 0;
        std::int32_t left = -1;
        std::int32_t right = -1;
        std::int32_t height = 1;
        std::uint64_t size = 1;
    };

    void touch() const {
        if (ledger_ != nullptr) ++ledger_->ds_ops;
    }

    std::int32_t height_of(std::int32_t t) const {
        return t < 0 ? 0 : pool_[static_cast<std::size_t>(t)].height;
    }
    std::uint64_t size_of(std::int32_t t) const {
        return t < 0 ? 0 : pool_[static_cast<std::size_t>(t)].size;
    }

    std::int32_t make_node(std::uint64_t key);
    void recycle(std::int32_t t);
    void pull_up(std::int32_t t);
    std::int32_t rotate_left(std::int32_t t);
    std::int32_t rotate_right(std::int32_t t);
    std::int32_t rebalance(std::int32_t t);
    std::int32_t insert_at(std::int32_t t, std::uint64_t key, bool& inserted);
    std::int32_t erase_at(std::int32_t t, std::uint64_t key, bool& erased);
    std::int32_t pop_min(std::int32_t t, std::uint64_t& key_out);
    std::int32_t build_range(std::span<const std::uint64_t> keys);

    std::vector<Node> pool_;
    std::vector<std::int32_t> free_;
    std::int32_t root_ = -1;
    CostLedger* ledger_ = nullptr;
};

} // namespace bmm::detail
