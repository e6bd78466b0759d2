#pragma once

#include <utility>
#include <vector>

#include "sgpkit/types.hpp"

namespace sgpkit {

/// pi(z) = z_1 v_1 + ... + z_k v_k with exact 64-bit arithmetic.
/// Throws std::invalid_argument on length mismatch, OverflowError on overflow.
Element evaluate(const Semigroup& s, const Factorization& z);

/// All factorizations of v, sorted lexicographically.
///
/// Finite because every generator has positive grading; computed by
/// depth-first search with per-coordinate residual pruning.
std::vector<Factorization> fiber(const Semigroup& s, const Element& v);

/// True iff v has at least one factorization (early-exit search).
bool contains(const Semigroup& s, const Element& v);

/// The fiber of v partitioned into connected components of the
/// support-overlap graph: z and z' are adjacent when z_i > 0 and z'_i > 0
/// for some index i.
struct NablaPartition {
    Element element;
    std::vector<Factorization> fiber;     // lex-sorted
    std::vector<int> component_id;        // parallel to fiber; ids in order of first appearance
    int component_count = 0;
};

NablaPartition nabla(const Semigroup& s, const Element& v);

/// True iff the support-overlap graph on the fiber of v is disconnected.
bool is_betti(const Semigroup& s, const Element& v);

/// Component decomposition shared by nabla() and the presentation scans.
/// Returns (component ids numbered by first appearance, component count).
std::pair<std::vector<int>, int> support_components(const std::vector<Factorization>& fib, Int k);

}  // namespace sgpkit
