#include "bmm/order_stat_tree.hpp"

#include <stdexcept>

namespace bmm::detail {

std::int32_t OrderStatTree::make_node(std::uint64_t key) {
    touch();
    if (!free_.empty()) {
        const std::int32_t t = free_.back();
        free_.pop_back();
        pool_[static_cast<std::size_t>(t)] = Node{key, -1, -1, 1, 1};
        return t;
    }
    pool_.push_back(Node{key, -1, -1, 1, 1});
    return static_cast<std::int32_t>(pool_.size() - 1);
}

void OrderStatTree::recycle(std::int32_t t) { free_.push_back(t); }

void OrderStatTree::pull_up(std::int32_t t) {
    Node& nd = pool_[static_cast<std::size_t>(t)];
    const std::int32_t hl = height_of(nd.left);
    const std::int32_t hr = height_of(nd.right);
    nd.height = (hl > hr ? hl : hr) + 1;
    nd.size = 1 + size_of(nd.left) + size_of(nd.right);
}

std::int32_t OrderStatTree::rotate_left(std::int32_t t) {
    touch();
    const std::int32_t r = pool_[static_cast<std::size_t>(t)].right;
    pool_[static_cast<std::size_t>(t)].right = pool_[static_cast<std::size_t>(r)].left;
    pool_[static_cast<std::size_t>(r)].left = t;
    pull_up(t);
    pull_up(r);
    return r;
}

std::int32_t OrderStatTree::rotate_right(std::int32_t t) {
    touch();
    const std::int32_t l = pool_[static_cast<std::size_t>(t)].left;
    pool_[static_cast<std::size_t>(t)].left = pool_[static_cast<std::size_t>(l)].right;
    pool_[static_cast<std::size_t>(l)].right = t;
    pull_up(t);
    pull_up(l);
    return l;
}

std::int32_t OrderStatTree::rebalance(std::int32_t t) {
    pull_up(t);
    const Node& nd = pool_[static_cast<std::size_t>(t)];
    const std::int32_t balance = height_of(nd.left) - height_of(nd.right);
    if (balance > 1) {
        const std::int32_t l = nd.left;
        if (height_of(pool_[static_cast<std::size_t>(l)].left) <
            height_of(pool_[static_cast<std::size_t>(l)].right)) {
            const std::int32_t nl = rotate_left(l);
            pool_[static_cast<std::size_t>(t)].left = nl;
        }
        return rotate_right(t);
    }
    if (balance < -1) {
        const std::int32_t r = nd.right;
        if (height_of(pool_[static_cast<std::size_t>(r)].right) <
            height_of(pool_[static_cast<std::size_t>(r)].left)) {
            const std::int32_t nr = rotate_right(r);
            pool_[static_cast<std::size_t>(t)].right = nr;
        }
        return rotate_left(t);
    }
    return t;
}

bool OrderStatTree::contains(std::uint64_t key) const {
    std::int32_t t = root_;
    while (t >= 0) {
        touch();
        const Node& nd = pool_[static_cast<std::size_t>(t)];
        if (key == nd.key) return true;
        t = key < nd.key ? nd.left : nd.right;
    }
    return false;
}

std::int32_t OrderStatTree::insert_at(std::int32_t t, std::uint64_t key, bool& inserted) {
    if (t < 0) {
        inserted = true;
        return make_node(key);
    }
    touch();
    if (key == pool_[static_cast<std::size_t>(t)].key) {
        inserted = false;
        return t;
    }
    if (key < pool_[static_cast<std::size_t>(t)].key) {
        const std::int32_t child = insert_at(pool_[static_cast<std::size_t>(t)].left, key, inserted);
        pool_[static_cast<std::size_t>(t)].left = child;
    } else {
        const std::int32_t child = insert_at(pool_[static_cast<std::size_t>(t)].right, key, inserted);
        pool_[static_cast<std::size_t>(t)].right = child;
    }
    return inserted ? rebalance(t) : t;
}

bool OrderStatTree::insert(std::uint64_t key) {
    bool inserted = false;
    root_ = insert_at(root_, key, inserted);
    return inserted;
}

std::int32_t OrderStatTree::pop_min(std::int32_t t, std::uint64_t& key_out) {
    touch();
    if (pool_[static_cast<std::size_t>(t)].left < 0) {
        key_out = pool_[static_cast<std::size_t>(t)].key;
        const std::int32_t right = pool_[static_cast<std::size_t>(t)].right;
        recycle(t);
        return right;
    }
    const std::int32_t child = pop_min(pool_[static_cast<std::size_t>(t)].left, key_out);
    pool_[static_cast<std::size_t>(t)].left = child;
    return rebalance(t);
}

std::int32_t OrderStatTree::erase_at(std::int32_t t, std::uint64_t key, bool& erased) {
    if (t < 0) {
        erased = false;
        return t;
    }
    touch();
    if (key < pool_[static_cast<std::size_t>(t)].key) {
        const std::int32_t child = erase_at(pool_[static_cast<std::size_t>(t)].left, key, erased);
        pool_[static_cast<std::size_t>(t)].left = child;
    } else if (key > pool_[static_cast<std::size_t>(t)].key) {
        const std::int32_t child = erase_at(pool_[static_cast<std::size_t>(t)].right, key, erased);
        pool_[static_cast<std::size_t>(t)].right = child;
    } else {
        erased = true;
        const Node& nd = pool_[static_cast<std::size_t>(t)];
        if (nd.left < 0 || nd.right < 0) {
            const std::int32_t child = nd.left < 0 ? nd.right : nd.left;
            recycle(t);
            return child;
        }
        std::uint64_t successor = 0;
        const std::int32_t right = pop_min(nd.right, successor);
        pool_[static_cast<std::size_t>(t)].right = right;
        pool_[static_cast<std::size_t>(t)].key = successor;
    }
    return erased ? rebalance(t) : t;
}

bool OrderStatTree::erase(std::uint64_t key) {
    bool erased = false;
    root_ = erase_at(root_, key, erased);
    return erased;
}

std::uint64_t OrderStatTree::count_le(std::uint64_t key) const {
    std::uint64_t count = 0;
    std::int32_t t = root_;
    while (t >= 0) {
        touch();
        const Node& nd = pool_[static_cast<std::size_t>(t)];
        if (key < nd.key) {
            t = nd.left;
        } else {
            count += 1 + size_of(nd.left);
            if (key == nd.key) break;
            t = nd.right;
        }
    }
    return count;
}

std::uint64_t OrderStatTree::select(std::uint64_t rank) const {
    if (rank == 0 || rank > size()) throw std::logic_error("OrderStatTree::select: rank out of range");
    std::int32_t t = root_;
    while (true) {
        touch();
        const Node& nd = pool_[static_cast<std::size_t>(t)];
        const std::uint64_t left_size = size_of(nd.left);
        if (rank == left_size + 1) return nd.key;
        if (rank <= left_size) {
            t = nd.left;
        } else {
            rank -= left_size + 1;
            t = nd.right;
        }
    }
}

std::int32_t OrderStatTree::build_range(std::span<const std::uint64_t> keys) {
    if (keys.empty()) return -1;
    const std::size_t mid = keys.size() / 2;
    const std::int32_t t = make_node(keys[mid]);
    const std::int32_t left = build_range(keys.first(mid));
    const std::int32_t right = build_range(keys.subspan(mid + 1));
    pool_[static_cast<std::size_t>(t)].left = left;
    pool_[static_cast<std::size_t>(t)].right = right;
    pull_up(t);
    return t;
}

void OrderStatTree::build_sorted(std::span<const std::uint64_t> keys) {
    pool_.clear();
    free_.clear();
    pool_.reserve(keys.size());
    root_ = build_range(keys);
}

} // namespace bmm::detail
