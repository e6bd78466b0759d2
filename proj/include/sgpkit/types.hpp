#pragma once

#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "sgpkit/arith.hpp"

namespace sgpkit {

/// A point of Z^d_{>=0}: an ambient value of a semigroup.
struct Element {
    std::vector<Int> coords;

    Element() = default;
    explicit Element(std::vector<Int> c) : coords(std::move(c)) {}

    Int dim() const { return static_cast<Int>(coords.size()); }

    /// Coordinate sum, the grading that makes every generator positive.
    Int grading() const {
        Int s = 0;
        for (Int c : coords) s = checked_add(s, c);
        return s;
    }

    bool is_zero() const {
        for (Int c : coords)
            if (c != 0) return false;
        return true;
    }

    friend auto operator<=>(const Element&, const Element&) = default;
};

/// Orders elements by (grading, lexicographic) — the canonical report order.
inline bool graded_less(const Element& a, const Element& b) {
    Int ga = a.grading(), gb = b.grading();
    if (ga != gb) return ga < gb;
    return a.coords < b.coords;
}

/// A length-k vector of nonnegative generator multiplicities.
struct Factorization {
    std::vector<Int> counts;

    Factorization() = default;
    explicit Factorization(std::vector<Int> c) : counts(std::move(c)) {}

    Int size() const { return static_cast<Int>(counts.size()); }

    /// |z|: the total number of generators used.
    Int length() const {
        Int s = 0;
        for (Int c : counts) s = checked_add(s, c);
        return s;
    }

    friend auto operator<=>(const Factorization&, const Factorization&) = default;
};

/// An affine semigroup given by an ordered list of nonzero generators in Z^d_{>=0}.
///
/// Generator order is significant: factorization indices refer to it.
/// Duplicate generators are accepted and treated as distinct indices.
class Semigroup {
  public:
    Semigroup(Int dim, std::vector<Element> generators) : dim_(dim), gens_(std::move(generators)) {
        if (dim_ < 1) throw std::invalid_argument("semigroup dimension must be >= 1");
        if (gens_.empty()) throw std::invalid_argument("semigroup needs at least one generator");
        for (const Element& g : gens_) {
            if (g.dim() != dim_)
                throw std::invalid_argument("generator dimension mismatch: expected " +
                                            std::to_string(dim_));
            bool positive = false;
            for (Int c : g.coords) {
                if (c < 0) throw std::invalid_argument("generator coordinates must be nonnegative");
                if (c > 0) positive = true;
            }
            if (!positive) throw std::invalid_argument("zero generator is not allowed");
        }
    }

    Int dim() const { return dim_; }
    Int generator_count() const { return static_cast<Int>(gens_.size()); }
    const std::vector<Element>& generators() const { return gens_; }
    const Element& generator(Int i) const { return gens_[static_cast<std::size_t>(i)]; }

    Int max_grading() const {
        Int m = 0;
        for (const Element& g : gens_) m = std::max(m, g.grading());
        return m;
    }

    Int min_grading() const {
        Int m = gens_.front().grading();
        for (const Element& g : gens_) m = std::min(m, g.grading());
        return m;
    }

  private:
    Int dim_;
    std::vector<Element> gens_;
};

/// A pair of factorizations with equal image, stored in canonical order:
/// (|left|, left) <= (|right|, right) under (length, lexicographic) comparison.
struct Relation {
    Factorization left;
    Factorization right;

    static Relation canonical(Factorization a, Factorization b) {
        if (a.counts.size() != b.counts.size())
            throw std::invalid_argument("relation sides must have equal length");
        Int la = a.length(), lb = b.length();
        if (lb < la || (la == lb && b.counts < a.counts)) std::swap(a, b);
        return Relation{std::move(a), std::move(b)};
    }

    friend auto operator<=>(const Relation&, const Relation&) = default;
};

}  // namespace sgpkit
