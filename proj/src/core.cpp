#include "sgpkit/core.hpp"

#include <limits>
#include <stdexcept>

#include "sgpkit/union_find.hpp"

namespace sgpkit {

namespace {

void require_same_dim(const Semigroup& s, const Element& v) {
    if (v.dim() != s.dim())
        throw std::invalid_argument("element dimension " + std::to_string(v.dim()) +
                                    " does not match semigroup dimension " +
                                    std::to_string(s.dim()));
    for (Int c : v.coords)
        if (c < 0) throw std::invalid_argument("element coordinates must be nonnegative");
}

// Largest c with c * g <= residual coordinatewise.
Int max_multiplicity(const std::vector<Int>& residual, const Element& g) {
    Int cmax = std::numeric_limits<Int>::max();
    for (std::size_t j = 0; j < g.coords.size(); ++j) {
        if (g.coords[j] > 0) cmax = std::min(cmax, residual[j] / g.coords[j]);
    }
    return cmax;
}

// The unique c >= 0 with c * g == residual, or -1 if none exists.
Int exact_multiplicity(const std::vector<Int>& residual, const Element& g) {
    Int c = -1;
    for (std::size_t j = 0; j < g.coords.size(); ++j) {
        if (g.coords[j] == 0) continue;
        if (residual[j] % g.coords[j] != 0) return -1;
        Int q = residual[j] / g.coords[j];
        if (c == -1)
            c = q;
        else if (c != q)
            return -1;
    }
    // g is nonzero, so c was set.
    for (std::size_t j = 0; j < g.coords.size(); ++j) {
        if (g.coords[j] == 0 && residual[j] != 0) return -1;
    }
    return c;
}

struct FiberSearch {
    const Semigroup& s;
    std::vector<Int> residual;
    std::vector<Int> counts;
    std::vector<Factorization>* out = nullptr;  // null => membership test only
    bool found = false;

    bool run(Int i) {
        const Int k = s.generator_count();
        if (i == k - 1) {
            Int c = exact_multiplicity(residual, s.generator(i));
            if (c >= 0) {
                found = true;
                if (out) {
                    counts[static_cast<std::size_t>(i)] = c;
                    out->emplace_back(counts);
                    counts[static_cast<std::size_t>(i)] = 0;
                }
            }
            return found;
        }
        const Element& g = s.generator(i);
        Int cmax = max_multiplicity(residual, g);
        Int subtracted = 0;
        for (Int c = 0; c <= cmax; ++c) {
            counts[static_cast<std::size_t>(i)] = c;
            if (run(i + 1) && !out) break;  // early exit for membership
            for (std::size_t j = 0; j < g.coords.size(); ++j) residual[j] -= g.coords[j];
            ++subtracted;
        }
        for (std::size_t j = 0; j < g.coords.size(); ++j)
            residual[j] += subtracted * g.coords[j];
        counts[static_cast<std::size_t>(i)] = 0;
        return found;
    }
};

}  // namespace

Element evaluate(const Semigroup& s, const Factorization& z) {
    if (z.size() != s.generator_count())
        throw std::invalid_argument("factorization length " + std::to_string(z.size()) +
                                    " does not match generator count " +
                                    std::to_string(s.generator_count()));
    for (Int c : z.counts)
        if (c < 0) throw std::invalid_argument("factorization counts must be nonnegative");
    std::vector<Int> acc(static_cast<std::size_t>(s.dim()), 0);
    for (Int i = 0; i < z.size(); ++i) {
        Int c = z.counts[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const Element& g = s.generator(i);
        for (std::size_t j = 0; j < acc.size(); ++j)
            acc[j] = checked_add(acc[j], checked_mul(c, g.coords[j]));
    }
    return Element(std::move(acc));
}

std::vector<Factorization> fiber(const Semigroup& s, const Element& v) {
    require_same_dim(s, v);
    std::vector<Factorization> out;
    FiberSearch search{s, v.coords, std::vector<Int>(static_cast<std::size_t>(s.generator_count()), 0),
                       &out};
    search.run(0);
    return out;  // lex-ascending by construction of the search
}

bool contains(const Semigroup& s, const Element& v) {
    require_same_dim(s, v);
    FiberSearch search{s, v.coords, std::vector<Int>(static_cast<std::size_t>(s.generator_count()), 0),
                       nullptr};
    return search.run(0);
}

std::pair<std::vector<int>, int> support_components(const std::vector<Factorization>& fib, Int k) {
    UnionFind uf(fib.size());
    for (Int i = 0; i < k; ++i) {
        std::size_t first = fib.size();
        for (std::size_t t = 0; t < fib.size(); ++t) {
            if (fib[t].counts[static_cast<std::size_t>(i)] > 0) {
                if (first == fib.size())
                    first = t;
                else
                    uf.unite(first, t);
            }
        }
    }
    std::vector<int> ids(fib.size(), -1);
    int next = 0;
    std::vector<int> root_id(fib.size(), -1);
    for (std::size_t t = 0; t < fib.size(); ++t) {
        std::size_t r = uf.find(t);
        if (root_id[r] < 0) root_id[r] = next++;
        ids[t] = root_id[r];
    }
    return {std::move(ids), next};
}

NablaPartition nabla(const Semigroup& s, const Element& v) {
    NablaPartition part;
    part.element = v;
    part.fiber = fiber(s, v);
    auto [ids, count] = support_components(part.fiber, s.generator_count());
    part.component_id = std::move(ids);
    part.component_count = count;
    return part;
}

bool is_betti(const Semigroup& s, const Element& v) { return nabla(s, v).component_count >= 2; }

}  // namespace sgpkit
