#include "bmm/collision_store.hpp"

#include <stdexcept>
#include <string>

namespace bmm {

CollisionStore::CollisionStore(std::uint32_t left_size, std::uint32_t right_size,
                               CostLedger& ledger)
    : left_size_(left_size), right_size_(right_size), ledger_(&ledger) {
    if (left_size == 0 || right_size == 0) {
        throw std::invalid_argument("CollisionStore: sides must be non-empty");
    }
    degree_.assign(left_size, right_size);
    ledger_->ds_ops += left_size;
    nonneighbors_.resize(left_size);
    for (auto& tree : nonneighbors_) tree.bind_ledger(ledger_);
    degree_index_.bind_ledger(ledger_);
    // All degrees start equal, so ascending id order is already (degree, id)
    // order and the index can be bulk-built.
    std::vector<std::uint64_t> keys;
    keys.reserve(left_size);
    for (std::uint32_t u = 0; u < left_size; ++u) keys.push_back(degree_key(right_size, u));
    degree_index_.build_sorted(keys);
}

void CollisionStore::check_left(std::uint32_t u) const {
    if (u >= left_size_) {
        throw std::invalid_argument("CollisionStore: left vertex " + std::to_string(u) +
                                    " out of range");
    }
}

void CollisionStore::check_right(std::uint32_t v) const {
    if (v >= right_size_) {
        throw std::invalid_argument("CollisionStore: right vertex " + std::to_string(v) +
                                    " out of range");
    }
}

std::uint32_t CollisionStore::get_degree(std::uint32_t u) const {
    check_left(u);
    ++ledger_->ds_ops;
    return degree_[u];
}

bool CollisionStore::check_connection(std::uint32_t u, std::uint32_t v) const {
    check_left(u);
    check_right(v);
    return !nonneighbors_[u].contains(v);
}

std::uint64_t CollisionStore::count_with_degree_at_most(std::uint32_t degree_cap) const {
    return degree_index_.count_le(degree_key(degree_cap, 0xffffffffu));
}

std::uint32_t CollisionStore::get_vert_with_degree_at_most(std::uint64_t rank,
                                                           std::uint32_t degree_cap) const {
    // Qualifying vertices are exactly the first count_le keys in (degree, id)
    // order, so a global select answers the capped rank query.
    const std::uint64_t qualifying = count_with_degree_at_most(degree_cap);
    if (rank == 0 || rank > qualifying) {
        throw std::out_of_range("get_vert_with_degree_at_most: rank " + std::to_string(rank) +
                                " out of range (" + std::to_string(qualifying) + " qualify)");
    }
    return static_cast<std::uint32_t>(degree_index_.select(rank) & 0xffffffffu);
}

std::uint64_t CollisionStore::nonneighbor_count(std::uint32_t u) const {
    check_left(u);
    ++ledger_->ds_ops;
    return nonneighbors_[u].size();
}

std::uint32_t CollisionStore::get_nonneighbor(std::uint64_t rank, std::uint32_t u) const {
    check_left(u);
    const std::uint64_t count = nonneighbors_[u].size();
    if (rank == 0 || rank > count) {
        throw std::out_of_range("get_nonneighbor: rank " + std::to_string(rank) +
                                " out of range (" + std::to_string(count) + " non-neighbors)");
    }
    return static_cast<std::uint32_t>(nonneighbors_[u].select(rank));
}

void CollisionStore::remove_edge(std::uint32_t u, std::uint32_t v) {
    check_left(u);
    check_right(v);
    if (!nonneighbors_[u].insert(v)) {
        throw std::logic_error("remove_edge: edge (" + std::to_string(u) + ", " +
                               std::to_string(v) + ") already removed");
    }
    const std::uint32_t old_degree = degree_[u];
    degree_index_.erase(degree_key(old_degree, u));
    degree_[u] = old_degree - 1;
    degree_index_.insert(degree_key(old_degree - 1, u));
    ++removed_;
    ++ledger_->ds_ops;
}

} // namespace bmm
