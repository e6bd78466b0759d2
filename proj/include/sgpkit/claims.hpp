#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgpkit/shifted.hpp"
#include "sgpkit/types.hpp"

namespace sgpkit {

/// Outcome of one executable claim verification.
///
/// When the claim's hypotheses are not met by the requested parameters,
/// hypothesis_met is false and passed is left empty: the report is
/// descriptive, not a verdict.
struct ClaimReport {
    std::string claim;
    bool hypothesis_met = true;
    std::optional<bool> passed;
    nlohmann::json witnesses = nlohmann::json::object();
    std::optional<Int> bound;
    std::string detail;

    /// False only for a failed verification (hypothesis met, check failed).
    bool ok() const { return !passed.has_value() || *passed; }

    nlohmann::json to_json() const;
};

/// The 4-generated family with offsets (0,0), (1,3), (2,1), (2,4) at shift
/// n = 6k + 1, together with its distinguished elements.
struct Section4Instance {
    Int k = 0;
    Int n = 0;
    Semigroup semigroup;
    Element a;  // (48k+18, 48k+28)
    Element b;  // (18k^2+27k+4, 18k^2+27k+4)

    Element r(Int i) const;  // (36k^2-18ik+24k-9i+3, 36k^2-18ik+36k-21i+5), 0 <= i <= k
    Int betti_cover_bound() const;  // 72k^2 + 60k + 8, the grading of r(0)
};

Section4Instance make_section4_instance(Int k);

/// The 4-generated family with offsets (0,0), (3,2), (4,3), (5,3) at shift
/// n = 3k + r, together with its claimed minimal relations.
struct Section5Instance {
    Int n = 0;
    Int k = 0;
    Int r = 0;
    Semigroup semigroup;
    std::vector<Relation> claimed;  // canonical; 2 relations when r = 0, else 3

    Int claimed_cover_bound() const;  // max grading over the claimed relations' elements
};

Section5Instance make_section5_instance(Int n);

// Claims about the section4 family.
ClaimReport verify_lemma_4_3(Int k);          // fiber of A is exactly {(0,6,2,0), (3,0,0,5)}
ClaimReport verify_lemma_4_4(Int k);          // dichotomy on the fiber of B
ClaimReport verify_lemma_4_5(Int k, Int i);   // dichotomy on the fiber of R_i
ClaimReport verify_lemma_4_5_all(Int k);      // all 0 <= i <= k
ClaimReport verify_theorem_4_2(Int k);        // A, B, R_0..R_k are all Betti elements

// Claims about the section5 family.
ClaimReport verify_lemma_5_1(Int n);                              // minimal trade coefficients
ClaimReport verify_theorem_5_2(Int n, std::optional<Int> bound);  // claimed presentation

// Transport claims for the shifting maps, checked against independent
// minimal-presentation computations on the target member.
ClaimReport verify_theorem_3_2(const Element& r1, const Element& r2, Int n);
ClaimReport verify_theorem_3_3(const Element& r1, const Element& r2, Int n);
ClaimReport verify_theorem_2_4(const std::vector<Int>& offsets, Int n);

// Randomized suites over admissible offset samples; deterministic per seed.
ClaimReport verify_theorem_3_2_random(Int trials, unsigned seed);
ClaimReport verify_theorem_3_3_random(Int trials, unsigned seed);
ClaimReport verify_theorem_2_4_random(Int trials, unsigned seed);

/// Certified Betti cover bound for a numerical semigroup: every element
/// above g_min * g_max + g_min + g_max has a connected support-overlap
/// graph, so a scan up to that bound sees every Betti element.
Int numerical_betti_cover(const Semigroup& s);

}  // namespace sgpkit
