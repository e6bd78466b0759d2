#pragma once

#include <string>
#include <vector>

#include "sgpkit/core.hpp"
#include "sgpkit/types.hpp"

namespace sgpkit {

/// Whether a search result is complete outright or only up to the reported bound.
enum class Completeness { certified, bounded };

inline std::string to_string(Completeness c) {
    return c == Completeness::certified ? "certified" : "bounded";
}

/// Integer basis of { z in Z^k : sum_i z_i v_i = 0 }.
struct LatticeBasis {
    std::vector<std::vector<Int>> vectors;
};

/// Basis of the kernel lattice of the d x k generator matrix, computed by
/// exact integer row elimination with a unimodular transform. Basis size is
/// k - rank(generator matrix); vectors are sign-normalized and lex-sorted.
LatticeBasis kernel_lattice(const Semigroup& s);

/// The unique minimal relation of a 3-generated semigroup in dimension 2
/// whose kernel lattice has rank 1: the primitive kernel vector split into
/// its negative and positive parts, shorter side first.
///
/// Throws std::domain_error when the kernel rank is not 1 or when the two
/// sides have equal length (degenerate configurations).
Relation primitive_trade_3gen(const Semigroup& s);

struct BettiEntry {
    Element element;
    Int component_count = 0;
};

struct BettiReport {
    std::vector<BettiEntry> elements;  // sorted by (grading, lex)
    Int search_bound = 0;
    Completeness complete = Completeness::bounded;
};

struct Presentation {
    std::vector<Relation> relations;  // canonical order, no duplicates
    Int search_bound = 0;
    Completeness complete = Completeness::bounded;
};

/// Default search bound: 4 x the largest generator grading.
Int default_bound(const Semigroup& s);

/// Every fiber of an element with grading <= bound, grouped by element and
/// sorted by (grading, lex); fibers are lex-sorted. The workhorse behind the
/// Betti and presentation scans.
struct FiberGroup {
    Element element;
    std::vector<Factorization> members;
};

std::vector<FiberGroup> enumerate_fibers(const Semigroup& s, Int bound);

/// All elements with grading <= bound whose support-overlap graph is
/// disconnected, with their component counts.
///
/// When the semigroup is 3-generated in dimension 2 with a rank-1 kernel
/// and an unbalanced primitive trade, the search bound is raised to cover
/// the unique Betti element and the result is certified complete.
BettiReport betti_elements(const Semigroup& s, Int bound);

/// For each Betti element with c components, emits c-1 relations pairing the
/// lex-smallest factorization of each non-first component with the
/// lex-smallest factorization of the whole fiber.
Presentation minimal_presentation(const Semigroup& s, Int bound);
Presentation minimal_presentation(const Semigroup& s);  // default_bound

/// True iff for every element with grading <= bound, the graph on its fiber
/// whose edges apply translated trades from rho in both directions is
/// connected. Throws std::invalid_argument if some relation is not in the
/// kernel congruence.
bool verify_presentation(const Semigroup& s, const std::vector<Relation>& rho, Int bound);

/// Sum of (component_count - 1) over the Betti report at this bound; equals
/// the relation count of minimal_presentation at the same bound.
Int presentation_size(const Semigroup& s, Int bound);

}  // namespace sgpkit
