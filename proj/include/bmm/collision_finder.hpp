#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "bmm/collision_store.hpp"
#include "bmm/cost_ledger.hpp"
#include "bmm/entry_set.hpp"
#include "bmm/oracle.hpp"
#include "bmm/search.hpp"

namespace bmm {

/// One collision query: find an edge (i, j) of the store's graph with
/// left_factor[i, witness] = right_factor[witness, j] = 1, under the promise
/// that at most missing_budget edges have been removed from the complete
/// bipartite graph.
struct CollisionQuery {
    CollisionStore* store = nullptr;
    const MatrixView* left_factor = nullptr;   // rows x witness-space
    const MatrixView* right_factor = nullptr;  // witness-space x cols
    std::uint32_t witness = 0;
    std::uint64_t missing_budget = 0;

    /// Worst-case quantum charge of one invocation, ceil(sqrt(a)) +
    /// ceil(sqrt(b)) + ceil(sqrt(L)); used as the declared per-evaluation
    /// unit when this query runs inside an enclosing search (a coherent
    /// nested subroutine always pays its full depth, sized by the promise).
    std::uint64_t charge_bound() const {
        return isqrt_ceil(store->left_size()) + isqrt_ceil(store->right_size()) +
               isqrt_ceil(missing_budget);
    }
};

/// Finds one collision for the query's witness, or nullopt if none exists
/// (or an injected failure occurs). Three phases, each a simulated quantum
/// search; the store must stay frozen for the duration. Throws logic_error
/// if the missing-edge promise is violated.
std::optional<std::pair<std::uint32_t, std::uint32_t>> find_k_collision(const CollisionQuery& query,
                                                                        SearchConfig& cfg,
                                                                        CostLedger& ledger);

/// Finds up to `lambda` non-zero entries of the Boolean product of the two
/// views (left is rows x n, right is n x cols). Builds a complete bipartite
/// store, partitions the witness space into ceil(n / ceil(n/lambda)) blocks,
/// and sweeps each block with a simulated Grover search whose predicate is a
/// full collision query; every hit is re-derived, recorded and its edge
/// removed. Entries are in view-local coordinates.
///
/// With exact search (p_fail = 0) and at most lambda true entries, the
/// result is exactly the product's entry set; with more than lambda true
/// entries it is some subset of them of size lambda.
EntrySet find_up_to_lambda_entries(const MatrixView& left, const MatrixView& right,
                                   std::uint64_t lambda, SearchConfig& cfg, CostLedger& ledger);

} // namespace bmm
