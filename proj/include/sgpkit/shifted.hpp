#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sgpkit/presentation.hpp"
#include "sgpkit/types.hpp"

namespace sgpkit {

/// A parametrized family M_n with generator_i(n) = (n,...,n) + r_i.
/// Offsets are stored in index order (r_1 first).
struct ShiftedFamily {
    Int dim = 1;
    std::vector<Element> offsets;

    ShiftedFamily(Int d, std::vector<Element> offs);

    Int generator_count() const { return static_cast<Int>(offsets.size()); }

    friend bool operator==(const ShiftedFamily&, const ShiftedFamily&) = default;
};

/// The member semigroup at shift n >= 1.
Semigroup instantiate(const ShiftedFamily& f, Int n);

/// Constants attached to a dimension-2 offset pair (r_1, r_2):
///   a_1 = |x_1 - y_1|, a_2 = |x_2 - y_2|,
///   d_i = a_i / gcd(a_1, a_2), p = |x_1 y_2 - y_1 x_2| / gcd(a_1, a_2).
/// Defined only when both a_1 and a_2 are positive.
struct FamilyConstants {
    Int a1 = 0;
    Int a2 = 0;
    Int d1 = 0;
    Int d2 = 0;
    Int p = 0;
};

FamilyConstants family_constants(const Element& r1, const Element& r2);

/// Geometric orientation of a dimension-2 offset pair relative to the diagonal.
enum class Orientation { opposite_sides, same_side, degenerate };

Orientation classify_orientation(const Element& r1, const Element& r2);

/// Transport of a relation of the numerical family <n+r_1, ..., n+r_k> to
/// the member at n + p, where p = r_k - r_1 > 0: the length gap l is added
/// to the shorter side at the last index and to the longer side at the
/// first index; balanced relations are fixed.
Relation phi_map(const Relation& rel, const std::vector<Int>& offsets, Int n);

/// Transport for opposite-sides dimension-2 pairs ((x1-y1)(x2-y2) <= 0):
/// the shorter side gains l(d2 e1 + d1 e2), the longer side gains
/// l(d1+d2) e0; balanced relations are fixed.
Relation psi_map(const Relation& rel, const Element& r1, const Element& r2, Int n);

/// Transport for same-side dimension-2 pairs ((x1-y1)(x2-y2) > 0).
/// After normalizing the pair so that x_i > y_i and x1 y2 - y1 x2 > 0
/// (relabeling does not change the family), the shorter side gains
/// l(max(d2-d1,0) e0 + d1 e2) and the longer side gains
/// l(max(d1-d2,0) e0 + d2 e1); balanced relations are fixed.
Relation psi_prime_map(const Relation& rel, const Element& r1, const Element& r2, Int n);

struct SweepRecord {
    Int n = 0;
    Int presentation_size = 0;
    Int betti_count = 0;
    Int bound = 0;
    Completeness complete = Completeness::bounded;
};

/// Per-member search bound used by sweep(); receives the family, the shift,
/// and the instantiated member.
using BoundPolicy = std::function<Int(const ShiftedFamily&, Int, const Semigroup&)>;

/// 4 x the largest generator grading of the member.
BoundPolicy default_bound_policy();

/// The policy registered for f, falling back to the default. The two
/// bundled dimension-2 families need per-shift bounds that grow with n to
/// cover all of their minimal relations.
BoundPolicy policy_for(const ShiftedFamily& f);

/// One record per shift, ascending in n. A null policy means policy_for(f).
std::vector<SweepRecord> sweep(const ShiftedFamily& f, std::vector<Int> shifts,
                               BoundPolicy policy = nullptr);
std::vector<SweepRecord> sweep_range(const ShiftedFamily& f, Int n_begin, Int n_end,
                                     BoundPolicy policy = nullptr);

/// Smallest (preperiod, period), lexicographically, such that the tail of
/// seq repeats with that period and contains at least three full periods.
std::optional<std::pair<Int, Int>> detect_eventual_period(std::span<const Int> seq);

/// Registered families, addressable by name from the CLI.
ShiftedFamily mcnugget_family();   // dim 1, offsets 0, 3, 14
ShiftedFamily section4_family();   // dim 2, offsets (0,0), (1,3), (2,1), (2,4)
ShiftedFamily section5_family();   // dim 2, offsets (0,0), (3,2), (4,3), (5,3)
std::optional<ShiftedFamily> named_family(const std::string& name);

}  // namespace sgpkit
