#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

namespace bmm {

/// A non-zero product entry (row, col) together with one witness index k
/// such that A[row, k] = B[k, col] = 1.
struct WitnessedEntry {
    std::uint32_t row = 0;
    std::uint32_t col = 0;
    std::uint32_t witness = 0;

    bool operator==(const WitnessedEntry&) const = default;
};

/// Set of witnessed entries keyed by (row, col); at most one witness is kept
/// per key (the first one inserted). Iteration order is row-major.
class EntrySet {
public:
    using Key = std::pair<std::uint32_t, std::uint32_t>;
    using Map = std::map<Key, std::uint32_t>;

    /// Inserts unless the key is already present; returns true if inserted.
    bool insert(std::uint32_t row, std::uint32_t col, std::uint32_t witness) {
        return entries_.emplace(Key{row, col}, witness).second;
    }

    bool contains_key(std::uint32_t row, std::uint32_t col) const {
        return entries_.count(Key{row, col}) != 0;
    }

    std::optional<std::uint32_t> witness_of(std::uint32_t row, std::uint32_t col) const {
        auto it = entries_.find(Key{row, col});
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    /// First-witness-wins union.
    void merge_from(const EntrySet& other) {
        for (const auto& [key, wit] : other.entries_) entries_.emplace(key, wit);
    }

    bool keys_equal(const EntrySet& other) const {
        if (entries_.size() != other.entries_.size()) return false;
        auto it = other.entries_.begin();
        for (const auto& [key, wit] : entries_) {
            (void)wit;
            if (it->first != key) return false;
            ++it;
        }
        return true;
    }

    bool keys_subset_of(const EntrySet& other) const {
        for (const auto& [key, wit] : entries_) {
            (void)wit;
            if (other.entries_.count(key) == 0) return false;
        }
        return true;
    }

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const Map& items() const { return entries_; }

    bool operator==(const EntrySet&) const = default;

private:
    Map entries_;
};

} // namespace bmm
