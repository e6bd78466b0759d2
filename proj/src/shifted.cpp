#include "sgpkit/shifted.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <stdexcept>

#include "sgpkit/core.hpp"

namespace sgpkit {

namespace {

void require_offset_dim(const Element& r, Int d, const char* what) {
    if (r.dim() != d)
        throw std::invalid_argument(std::string(what) + " must have dimension " +
                                    std::to_string(d));
    for (Int c : r.coords)
        if (c < 0) throw std::invalid_argument(std::string(what) + " must be nonnegative");
}

Semigroup three_generator_member(const Element& r1, const Element& r2, Int n) {
    if (n < 1) throw std::invalid_argument("shift parameter must be >= 1");
    Element N({n, n});
    Element g1({checked_add(n, r1.coords[0]), checked_add(n, r1.coords[1])});
    Element g2({checked_add(n, r2.coords[0]), checked_add(n, r2.coords[1])});
    return Semigroup(2, {N, g1, g2});
}

void require_kernel_pair(const Semigroup& m, const Relation& rel) {
    if (evaluate(m, rel.left) != evaluate(m, rel.right))
        throw std::invalid_argument("relation is not in the kernel congruence of M_n");
}

Factorization add_multiple(const Factorization& z, Int idx, Int amount) {
    Factorization w = z;
    auto i = static_cast<std::size_t>(idx);
    w.counts[i] = checked_add(w.counts[i], amount);
    return w;
}

Factorization swap_last_two(const Factorization& z) {
    Factorization w = z;
    std::swap(w.counts[1], w.counts[2]);
    return w;
}

}  // namespace

ShiftedFamily::ShiftedFamily(Int d, std::vector<Element> offs) : dim(d), offsets(std::move(offs)) {
    if (dim != 1 && dim != 2)
        throw std::invalid_argument("shifted families are supported in dimension 1 or 2");
    if (offsets.empty()) throw std::invalid_argument("shifted family needs at least one offset");
    for (const Element& r : offsets) require_offset_dim(r, dim, "offset");
}

Semigroup instantiate(const ShiftedFamily& f, Int n) {
    if (n < 1) throw std::invalid_argument("shift parameter must be >= 1");
    std::vector<Element> gens;
    gens.reserve(f.offsets.size());
    for (const Element& r : f.offsets) {
        std::vector<Int> coords(r.coords);
        for (Int& c : coords) c = checked_add(c, n);
        gens.emplace_back(std::move(coords));
    }
    return Semigroup(f.dim, std::move(gens));
}

FamilyConstants family_constants(const Element& r1, const Element& r2) {
    require_offset_dim(r1, 2, "offset r1");
    require_offset_dim(r2, 2, "offset r2");
    FamilyConstants fc;
    fc.a1 = std::abs(r1.coords[0] - r1.coords[1]);
    fc.a2 = std::abs(r2.coords[0] - r2.coords[1]);
    Int g = std::gcd(fc.a1, fc.a2);
    if (g == 0)
        throw std::invalid_argument("family constants undefined: both offsets lie on the "
                                    "diagonal (a1 = a2 = 0)");
    if (fc.a1 == 0 || fc.a2 == 0)
        throw std::invalid_argument("family constants undefined: an offset lies on the "
                                    "diagonal, so d" +
                                    std::string(fc.a1 == 0 ? "1" : "2") + " would be 0");
    fc.d1 = fc.a1 / g;
    fc.d2 = fc.a2 / g;
    Int det = checked_sub(checked_mul(r1.coords[0], r2.coords[1]),
                          checked_mul(r1.coords[1], r2.coords[0]));
    fc.p = std::abs(det) / g;
    return fc;
}

Orientation classify_orientation(const Element& r1, const Element& r2) {
    require_offset_dim(r1, 2, "offset r1");
    require_offset_dim(r2, 2, "offset r2");
    Int s1 = r1.coords[0] - r1.coords[1];
    Int s2 = r2.coords[0] - r2.coords[1];
    if (s1 == 0 || s2 == 0) return Orientation::degenerate;
    return (s1 > 0) == (s2 > 0) ? Orientation::same_side : Orientation::opposite_sides;
}

Relation phi_map(const Relation& rel, const std::vector<Int>& offsets, Int n) {
    const Int k = static_cast<Int>(offsets.size());
    if (k < 2) throw std::invalid_argument("phi map needs at least two offsets");
    Int p = checked_sub(offsets.back(), offsets.front());
    if (p <= 0) throw std::invalid_argument("phi map requires r_k - r_1 > 0");

    std::vector<Element> offs;
    offs.reserve(offsets.size());
    for (Int r : offsets) offs.push_back(Element({r}));
    Semigroup m = instantiate(ShiftedFamily(1, offs), n);
    require_kernel_pair(m, rel);

    Int lz = rel.left.length(), lzp = rel.right.length();
    if (lz == lzp) return rel;
    Int ell = std::abs(lz - lzp);
    const Factorization& shorter = lz < lzp ? rel.left : rel.right;
    const Factorization& longer = lz < lzp ? rel.right : rel.left;
    return Relation::canonical(add_multiple(shorter, k - 1, ell), add_multiple(longer, 0, ell));
}

Relation psi_map(const Relation& rel, const Element& r1, const Element& r2, Int n) {
    if (classify_orientation(r1, r2) == Orientation::same_side)
        throw std::invalid_argument("psi map expects an opposite-sides offset pair");
    FamilyConstants fc = family_constants(r1, r2);
    Semigroup m = three_generator_member(r1, r2, n);
    require_kernel_pair(m, rel);

    Int lz = rel.left.length(), lzp = rel.right.length();
    if (lz == lzp) return rel;
    Int ell = std::abs(lz - lzp);
    const Factorization& shorter = lz < lzp ? rel.left : rel.right;
    const Factorization& longer = lz < lzp ? rel.right : rel.left;

    Factorization w = shorter;
    w.counts[1] = checked_add(w.counts[1], checked_mul(ell, fc.d2));
    w.counts[2] = checked_add(w.counts[2], checked_mul(ell, fc.d1));
    Factorization wp = add_multiple(longer, 0, checked_mul(ell, checked_add(fc.d1, fc.d2)));
    return Relation::canonical(std::move(w), std::move(wp));
}

Relation psi_prime_map(const Relation& rel, const Element& r1, const Element& r2, Int n) {
    if (classify_orientation(r1, r2) == Orientation::opposite_sides)
        throw std::invalid_argument("psi-prime map expects a same-side offset pair");
    FamilyConstants probe = family_constants(r1, r2);  // rejects diagonal offsets
    (void)probe;

    // Normal form: reflecting both offsets across the diagonal does not
    // change any factorization, so assume x_i > y_i; relabeling the two
    // shifted generators (swapping indices 1 and 2 everywhere) does not
    // change the family, so assume x1 y2 - y1 x2 >= 0.
    Element a = r1, b = r2;
    if (a.coords[0] < a.coords[1]) {
        std::swap(a.coords[0], a.coords[1]);
        std::swap(b.coords[0], b.coords[1]);
    }
    bool relabeled = false;
    Int det = checked_sub(checked_mul(a.coords[0], b.coords[1]),
                          checked_mul(a.coords[1], b.coords[0]));
    if (det < 0) {
        std::swap(a, b);
        relabeled = true;
    }
    FamilyConstants fc = family_constants(a, b);

    Semigroup m = three_generator_member(r1, r2, n);
    require_kernel_pair(m, rel);

    Int lz = rel.left.length(), lzp = rel.right.length();
    if (lz == lzp) return rel;
    Int ell = std::abs(lz - lzp);
    Factorization shorter = lz < lzp ? rel.left : rel.right;
    Factorization longer = lz < lzp ? rel.right : rel.left;
    if (relabeled) {
        shorter = swap_last_two(shorter);
        longer = swap_last_two(longer);
    }

    shorter.counts[0] = checked_add(shorter.counts[0],
                                    checked_mul(ell, std::max<Int>(fc.d2 - fc.d1, 0)));
    shorter.counts[2] = checked_add(shorter.counts[2], checked_mul(ell, fc.d1));
    longer.counts[0] = checked_add(longer.counts[0],
                                   checked_mul(ell, std::max<Int>(fc.d1 - fc.d2, 0)));
    longer.counts[1] = checked_add(longer.counts[1], checked_mul(ell, fc.d2));

    if (relabeled) {
        shorter = swap_last_two(shorter);
        longer = swap_last_two(longer);
    }
    return Relation::canonical(std::move(shorter), std::move(longer));
}

BoundPolicy default_bound_policy() {
    return [](const ShiftedFamily&, Int, const Semigroup& m) { return default_bound(m); };
}

namespace {

// Bound covering every claimed Betti element of the section4 family at
// n = 6k+1; for other shifts k is rounded up, which only enlarges the bound.
Int section4_bound(const ShiftedFamily&, Int n, const Semigroup& m) {
    Int k = std::max<Int>((n + 4) / 6, 1);
    Int cover = checked_add(checked_mul(72, checked_mul(k, k)), checked_add(checked_mul(60, k), 8));
    return std::max(default_bound(m), cover);
}

// Bound covering the gradings of the claimed minimal relations of the
// section5 family at shift n = 3k + r.
Int section5_bound(const ShiftedFamily&, Int n, const Semigroup& m) {
    Int k = n / 3, r = n % 3;
    Int b1 = 3 * (2 * n + 5);
    Int b2 = checked_mul(2 * k + r, 2 * n + 7);
    Int cover = std::max(b1, b2);
    if (r != 0)
        cover = std::max(cover, checked_add((3 - r) * (2 * n + 5),
                                            checked_mul(2 * k + r - 1, 2 * n + 7)));
    return std::max(default_bound(m), cover);
}

}  // namespace

BoundPolicy policy_for(const ShiftedFamily& f) {
    if (f == section4_family()) return section4_bound;
    if (f == section5_family()) return section5_bound;
    return default_bound_policy();
}

std::vector<SweepRecord> sweep(const ShiftedFamily& f, std::vector<Int> shifts,
                               BoundPolicy policy) {
    if (shifts.empty()) throw std::invalid_argument("sweep needs a nonempty shift range");
    std::sort(shifts.begin(), shifts.end());
    shifts.erase(std::unique(shifts.begin(), shifts.end()), shifts.end());
    if (!policy) policy = policy_for(f);

    auto record_for = [&](Int n) {
        Semigroup m = instantiate(f, n);
        Int bound = policy(f, n, m);
        Presentation pres = minimal_presentation(m, bound);
        BettiReport betti = betti_elements(m, bound);
        SweepRecord rec;
        rec.n = n;
        rec.presentation_size = static_cast<Int>(pres.relations.size());
        rec.betti_count = static_cast<Int>(betti.elements.size());
        rec.bound = pres.search_bound;
        rec.complete = pres.complete;
        return rec;
    };

    // Members are independent; futures are collected in ascending n, so the
    // merge is deterministic.
    std::vector<std::future<SweepRecord>> futures;
    futures.reserve(shifts.size());
    for (Int n : shifts)
        futures.push_back(std::async(std::launch::async, record_for, n));
    std::vector<SweepRecord> records;
    records.reserve(shifts.size());
    for (auto& fu : futures) records.push_back(fu.get());
    return records;
}

std::vector<SweepRecord> sweep_range(const ShiftedFamily& f, Int n_begin, Int n_end,
                                     BoundPolicy policy) {
    if (n_begin > n_end) throw std::invalid_argument("empty shift range");
    std::vector<Int> shifts;
    for (Int n = n_begin; n <= n_end; ++n) shifts.push_back(n);
    return sweep(f, std::move(shifts), std::move(policy));
}

std::optional<std::pair<Int, Int>> detect_eventual_period(std::span<const Int> seq) {
    if (seq.empty()) throw std::invalid_argument("period detection needs a nonempty sequence");
    const Int len = static_cast<Int>(seq.size());
    for (Int pre = 0; pre < len; ++pre) {
        for (Int period = 1; 3 * period <= len - pre; ++period) {
            bool ok = true;
            for (Int i = pre; i + period < len; ++i) {
                if (seq[static_cast<std::size_t>(i)] !=
                    seq[static_cast<std::size_t>(i + period)]) {
                    ok = false;
                    break;
                }
            }
            if (ok) return std::make_pair(pre, period);
        }
    }
    return std::nullopt;
}

ShiftedFamily mcnugget_family() {
    return ShiftedFamily(1, {Element({0}), Element({3}), Element({14})});
}

ShiftedFamily section4_family() {
    return ShiftedFamily(2, {Element({0, 0}), Element({1, 3}), Element({2, 1}), Element({2, 4})});
}

ShiftedFamily section5_family() {
    return ShiftedFamily(2, {Element({0, 0}), Element({3, 2}), Element({4, 3}), Element({5, 3})});
}

std::optional<ShiftedFamily> named_family(const std::string& name) {
    if (name == "mcnugget") return mcnugget_family();
    if (name == "section4") return section4_family();
    if (name == "section5") return section5_family();
    return std::nullopt;
}

}  // namespace sgpkit
