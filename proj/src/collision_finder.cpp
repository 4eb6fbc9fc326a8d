#include "bmm/collision_finder.hpp"

#include <stdexcept>
#include <string>

namespace bmm {

namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

} // namespace

std::optional<std::pair<std::uint32_t, std::uint32_t>> find_k_collision(const CollisionQuery& query,
                                                                        SearchConfig& cfg,
                                                                        CostLedger& ledger) {
    CollisionStore& store = *query.store;
    const MatrixView& a = *query.left_factor;
    const MatrixView& b = *query.right_factor;
    const std::uint32_t k = query.witness;
    const std::uint32_t left = store.left_size();
    const std::uint32_t right = store.right_size();

    // Phase 1: marked left vertex of largest degree, ties to smallest id.
    const auto u_opt = find_max_by_key(
        left, [&](std::uint64_t i) { return store.get_degree(static_cast<std::uint32_t>(i)); },
        [&](std::uint64_t i) { return a.get(static_cast<std::uint32_t>(i), k); }, 1, cfg, ledger);
    if (!u_opt) return std::nullopt;
    const auto u = static_cast<std::uint32_t>(*u_opt);

    // Phase 2: marked right vertex still connected to u.
    const auto j_opt = grover_search(
        right,
        [&](std::uint64_t j, CostLedger&) {
            const auto jj = static_cast<std::uint32_t>(j);
            return b.get(k, jj) && store.check_connection(u, jj);
        },
        1, cfg, ledger);
    if (j_opt) return std::make_pair(u, static_cast<std::uint32_t>(*j_opt));

    // Phase 3: no marked neighbor of u is left, so any remaining collision
    // pairs a low-degree marked left vertex with a non-neighbor of u.
    const std::uint32_t d = store.get_degree(u);
    if (d == right) return std::nullopt;
    const std::uint64_t gap = right - d;  // = |nonneighbors(u)|
    const std::uint64_t low_degree = store.count_with_degree_at_most(d);
    if (low_degree * gap > store.removed_count()) {
        throw std::logic_error("find_k_collision: missing-edge counting bound violated (" +
                               std::to_string(low_degree) + " * " + std::to_string(gap) + " > " +
                               std::to_string(store.removed_count()) + ")");
    }

    const std::uint64_t domain = low_degree * gap;
    const auto hit = grover_search(
        domain,
        [&](std::uint64_t t, CostLedger&) {
            const std::uint32_t i = store.get_vert_with_degree_at_most(t / gap + 1, d);
            const std::uint32_t j = store.get_nonneighbor(t % gap + 1, u);
            return a.get(i, k) && b.get(k, j) && store.check_connection(i, j);
        },
        1, cfg, ledger);
    if (!hit) return std::nullopt;
    const std::uint32_t i = store.get_vert_with_degree_at_most(*hit / gap + 1, d);
    const std::uint32_t j = store.get_nonneighbor(*hit % gap + 1, u);
    return std::make_pair(i, j);
}

EntrySet find_up_to_lambda_entries(const MatrixView& left, const MatrixView& right,
                                   std::uint64_t lambda, SearchConfig& cfg, CostLedger& ledger) {
    if (left.cols() != right.rows()) {
        throw std::invalid_argument("find_up_to_lambda_entries: inner dimensions disagree");
    }
    EntrySet found;
    if (lambda == 0) return found;

    const std::uint32_t witnesses = left.cols();
    CollisionStore store(left.rows(), right.cols(), ledger);

    // Witness blocks of size ceil(n / lambda); for lambda >= n these are
    // singletons, for smaller caps each search covers a whole block at the
    // cost of one square root.
    const std::uint64_t block = ceil_div(witnesses, lambda);

    for (std::uint64_t start = 0; start < witnesses; start += block) {
        const std::uint64_t span = std::min<std::uint64_t>(block, witnesses - start);
        while (found.size() < lambda) {
            CollisionQuery probe{&store, &left, &right, 0, lambda};
            const std::uint64_t nested_unit = probe.charge_bound();
            const auto k_opt = grover_search(
                span,
                [&](std::uint64_t t, CostLedger& sub) {
                    CollisionQuery q{&store, &left, &right,
                                     static_cast<std::uint32_t>(start + t), lambda};
                    return find_k_collision(q, cfg, sub).has_value();
                },
                nested_unit, cfg, ledger);
            if (!k_opt) break;  // no collision left in this block (or injected miss)

            // Retrieve the pair for the witness the search settled on; under
            // injected failures the retrieval may miss, in which case the
            // entry is still present and a later sweep can find it again.
            CollisionQuery q{&store, &left, &right, static_cast<std::uint32_t>(start + *k_opt),
                             lambda};
            const auto hit = find_k_collision(q, cfg, ledger);
            if (!hit) continue;
            found.insert(hit->first, hit->second, q.witness);
            store.remove_edge(hit->first, hit->second);
        }
        if (found.size() == lambda) break;
    }
    return found;
}

} // namespace bmm
