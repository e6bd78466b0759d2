#include "sgpkit/presentation.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "sgpkit/union_find.hpp"

namespace sgpkit {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<Int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (Int x : v) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

void sub_row(std::vector<Int>& a, const std::vector<Int>& b, Int q) {
    for (std::size_t j = 0; j < a.size(); ++j)
        a[j] = checked_sub(a[j], checked_mul(q, b[j]));
}

// Split a kernel vector into (negative part, positive part).
std::pair<Factorization, Factorization> split_parts(const std::vector<Int>& u) {
    std::vector<Int> neg(u.size(), 0), pos(u.size(), 0);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] < 0)
            neg[i] = -u[i];
        else
            pos[i] = u[i];
    }
    return {Factorization(std::move(neg)), Factorization(std::move(pos))};
}

// For a 3-generated dimension-2 semigroup with a rank-1 kernel and an
// unbalanced trade, the unique Betti element is the image of either side of
// the primitive trade. Returns the bound needed to cover it.
std::optional<Int> certified_cover(const Semigroup& s) {
    if (s.dim() != 2 || s.generator_count() != 3) return std::nullopt;
    LatticeBasis basis = kernel_lattice(s);
    if (basis.vectors.size() != 1) return std::nullopt;
    auto [neg, pos] = split_parts(basis.vectors[0]);
    if (neg.length() == pos.length()) return std::nullopt;
    return evaluate(s, neg).grading();
}

struct SearchPlan {
    Int bound;
    Completeness complete;
};

SearchPlan plan_search(const Semigroup& s, Int bound) {
    if (bound < s.max_grading())
        throw std::invalid_argument("search bound " + std::to_string(bound) +
                                    " is smaller than the largest generator grading " +
                                    std::to_string(s.max_grading()));
    if (auto cover = certified_cover(s))
        return {std::max(bound, *cover), Completeness::certified};
    return {bound, Completeness::bounded};
}

}  // namespace

Int default_bound(const Semigroup& s) { return checked_mul(4, s.max_grading()); }

LatticeBasis kernel_lattice(const Semigroup& s) {
    const Int k = s.generator_count();
    const Int d = s.dim();
    // G has one row per generator; U tracks the unimodular row transform.
    std::vector<std::vector<Int>> G, U;
    for (Int i = 0; i < k; ++i) {
        G.push_back(s.generator(i).coords);
        std::vector<Int> e(static_cast<std::size_t>(k), 0);
        e[static_cast<std::size_t>(i)] = 1;
        U.push_back(std::move(e));
    }

    Int pivots = 0;
    for (Int col = 0; col < d && pivots < k; ++col) {
        const auto c = static_cast<std::size_t>(col);
        while (true) {
            Int best = -1;
            for (Int r = pivots; r < k; ++r) {
                const auto rr = static_cast<std::size_t>(r);
                if (G[rr][c] == 0) continue;
                if (best < 0 ||
                    std::abs(G[rr][c]) < std::abs(G[static_cast<std::size_t>(best)][c]))
                    best = r;
            }
            if (best < 0) break;
            std::swap(G[static_cast<std::size_t>(best)], G[static_cast<std::size_t>(pivots)]);
            std::swap(U[static_cast<std::size_t>(best)], U[static_cast<std::size_t>(pivots)]);
            const auto p = static_cast<std::size_t>(pivots);
            bool residue = false;
            for (Int r = pivots + 1; r < k; ++r) {
                const auto rr = static_cast<std::size_t>(r);
                if (G[rr][c] == 0) continue;
                Int q = G[rr][c] / G[p][c];
                sub_row(G[rr], G[p], q);
                sub_row(U[rr], U[p], q);
                if (G[rr][c] != 0) residue = true;
            }
            if (!residue) break;
        }
        if (G[static_cast<std::size_t>(pivots)][c] != 0) ++pivots;
    }

    LatticeBasis basis;
    for (Int r = pivots; r < k; ++r) {
        std::vector<Int> u = U[static_cast<std::size_t>(r)];
        for (Int x : u) {
            if (x != 0) {
                if (x < 0)
                    for (Int& y : u) y = -y;
                break;
            }
        }
        basis.vectors.push_back(std::move(u));
    }
    std::sort(basis.vectors.begin(), basis.vectors.end());
    return basis;
}

Relation primitive_trade_3gen(const Semigroup& s) {
    if (s.dim() != 2 || s.generator_count() != 3)
        throw std::invalid_argument("primitive trade requires 3 generators in dimension 2");
    LatticeBasis basis = kernel_lattice(s);
    if (basis.vectors.size() != 1)
        throw std::domain_error("degenerate generator configuration: kernel rank is " +
                                std::to_string(basis.vectors.size()) + ", expected 1");
    auto [neg, pos] = split_parts(basis.vectors[0]);
    if (neg.length() == pos.length())
        throw std::domain_error("degenerate generator configuration: the primitive trade "
                                "is balanced (|z| = |z'|)");
    return Relation::canonical(std::move(neg), std::move(pos));
}

std::vector<FiberGroup> enumerate_fibers(const Semigroup& s, Int bound) {
    const Int k = s.generator_count();
    const Int d = s.dim();
    std::vector<Int> weight(static_cast<std::size_t>(k));
    for (Int i = 0; i < k; ++i) weight[static_cast<std::size_t>(i)] = s.generator(i).grading();

    std::vector<FiberGroup> groups;
    std::unordered_map<std::vector<Int>, std::size_t, VecHash> index;

    std::vector<Int> counts(static_cast<std::size_t>(k), 0);
    std::vector<Int> partial(static_cast<std::size_t>(d), 0);

    // Enumerates every factorization whose image has grading <= bound, in
    // lex order, so each group's member list comes out lex-sorted.
    auto rec = [&](auto&& self, Int i, Int budget) -> void {
        if (i == k) {
            auto [it, inserted] = index.try_emplace(partial, groups.size());
            if (inserted) groups.push_back({Element(partial), {}});
            groups[it->second].members.emplace_back(counts);
            return;
        }
        const Element& g = s.generator(i);
        const Int w = weight[static_cast<std::size_t>(i)];
        Int cmax = budget / w;
        for (Int c = 0; c <= cmax; ++c) {
            counts[static_cast<std::size_t>(i)] = c;
            self(self, i + 1, budget - c * w);
            for (std::size_t j = 0; j < partial.size(); ++j)
                partial[j] = checked_add(partial[j], g.coords[j]);
        }
        for (std::size_t j = 0; j < partial.size(); ++j)
            partial[j] -= (cmax + 1) * g.coords[j];
        counts[static_cast<std::size_t>(i)] = 0;
    };
    if (bound >= 0) rec(rec, 0, bound);

    std::sort(groups.begin(), groups.end(), [](const FiberGroup& a, const FiberGroup& b) {
        return graded_less(a.element, b.element);
    });
    return groups;
}

BettiReport betti_elements(const Semigroup& s, Int bound) {
    SearchPlan plan = plan_search(s, bound);
    BettiReport report;
    report.search_bound = plan.bound;
    report.complete = plan.complete;
    for (const FiberGroup& group : enumerate_fibers(s, plan.bound)) {
        if (group.members.size() < 2) continue;
        auto [ids, count] = support_components(group.members, s.generator_count());
        if (count >= 2) report.elements.push_back({group.element, count});
    }
    return report;
}

Presentation minimal_presentation(const Semigroup& s, Int bound) {
    SearchPlan plan = plan_search(s, bound);
    Presentation pres;
    pres.search_bound = plan.bound;
    pres.complete = plan.complete;
    for (const FiberGroup& group : enumerate_fibers(s, plan.bound)) {
        if (group.members.size() < 2) continue;
        auto [ids, count] = support_components(group.members, s.generator_count());
        if (count < 2) continue;
        // Members are lex-sorted, so members[0] is the overall lex-minimum
        // and the first member seen in each other component is that
        // component's lex-minimum.
        const Factorization& anchor = group.members[0];
        std::vector<bool> seen(static_cast<std::size_t>(count), false);
        seen[static_cast<std::size_t>(ids[0])] = true;
        for (std::size_t t = 1; t < group.members.size(); ++t) {
            auto cid = static_cast<std::size_t>(ids[t]);
            if (seen[cid]) continue;
            seen[cid] = true;
            pres.relations.push_back(Relation::canonical(group.members[t], anchor));
        }
    }
    std::sort(pres.relations.begin(), pres.relations.end());
    return pres;
}

Presentation minimal_presentation(const Semigroup& s) {
    return minimal_presentation(s, default_bound(s));
}

bool verify_presentation(const Semigroup& s, const std::vector<Relation>& rho, Int bound) {
    const Int k = s.generator_count();
    for (const Relation& rel : rho) {
        if (rel.left.size() != k || rel.right.size() != k)
            throw std::invalid_argument("relation length does not match generator count");
        if (evaluate(s, rel.left) != evaluate(s, rel.right))
            throw std::invalid_argument("relation is not in the kernel congruence: the two "
                                        "sides evaluate differently");
    }

    auto apply_trade = [&](const Factorization& z, const Factorization& from,
                           const Factorization& to) -> std::optional<Factorization> {
        std::vector<Int> w(z.counts);
        for (std::size_t i = 0; i < w.size(); ++i) {
            w[i] -= from.counts[i];
            if (w[i] < 0) return std::nullopt;
            w[i] = checked_add(w[i], to.counts[i]);
        }
        return Factorization(std::move(w));
    };

    for (const FiberGroup& group : enumerate_fibers(s, bound)) {
        const auto m = group.members.size();
        if (m < 2) continue;
        UnionFind uf(m);
        auto locate = [&](const Factorization& f) -> std::size_t {
            auto it = std::lower_bound(group.members.begin(), group.members.end(), f);
            return static_cast<std::size_t>(it - group.members.begin());
        };
        for (std::size_t t = 0; t < m; ++t) {
            for (const Relation& rel : rho) {
                if (auto w = apply_trade(group.members[t], rel.left, rel.right))
                    uf.unite(t, locate(*w));
                if (auto w = apply_trade(group.members[t], rel.right, rel.left))
                    uf.unite(t, locate(*w));
            }
        }
        std::size_t root = uf.find(0);
        for (std::size_t t = 1; t < m; ++t)
            if (uf.find(t) != root) return false;
    }
    return true;
}

Int presentation_size(const Semigroup& s, Int bound) {
    Int total = 0;
    for (const BettiEntry& entry : betti_elements(s, bound).elements)
        total += entry.component_count - 1;
    return total;
}

}  // namespace sgpkit
