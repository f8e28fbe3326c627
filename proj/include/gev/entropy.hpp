#ifndef GEV_ENTROPY_HPP
#define GEV_ENTROPY_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "gev/exact.hpp"
#include "gev/subgroups.hpp"

namespace gev {

inline constexpr int kMaxTupleSize = 16;

// Entropy vector of n subgroups: for every nonempty mask S the exact index
// |G : G_S| where G_S is the intersection of the chosen subgroups. Indices
// are kept as integers; logarithms are derived for display only.
struct EntropyVector {
    int n = 0;
    long long group_order = 0;
    std::vector<std::uint64_t> index_by_mask; // size 1<<n, entry 0 fixed to 1

    std::uint64_t index_of(unsigned mask) const { return index_by_mask[mask]; }
    double log2_of(unsigned mask) const { return std::log2(static_cast<double>(index_by_mask[mask])); }
    unsigned full_mask() const { return (1u << n) - 1; }
};

inline EntropyVector entropy_vector(const FiniteGroup& g, const SubgroupTable& t, const std::vector<int>& ids) {
    const int n = static_cast<int>(ids.size());
    if (n < 1 || n > kMaxTupleSize)
        fail(Errc::n_cap_exceeded, "tuple size " + std::to_string(n) + " outside [1," + std::to_string(kMaxTupleSize) + "]");
    for (int id : ids) t.check_id(id);

    EntropyVector v;
    v.n = n;
    v.group_order = g.order;
    const unsigned full = (1u << n);
    std::vector<int> inter_id(full, -1);
    v.index_by_mask.assign(full, 1);
    for (unsigned mask = 1; mask < full; ++mask) {
        const unsigned low = mask & (mask - 1u);
        const int bit = std::countr_zero(mask);
        if (low == 0) {
            inter_id[mask] = ids[static_cast<std::size_t>(bit)];
        } else {
            inter_id[mask] = t.intersect(inter_id[low], ids[static_cast<std::size_t>(bit)]);
        }
        v.index_by_mask[mask] = static_cast<std::uint64_t>(g.order) /
                                static_cast<std::uint64_t>(t[inter_id[mask]].order);
    }
    return v;
}

// One quadruple's Ingleton inequality, evaluated on exact integer products of
// subgroup orders:
//   |G1||G2||G34||G123||G124| >= |G12||G13||G14||G23||G24|
struct IngletonReport {
    std::array<int, 4> quadruple{};
    // |G1| |G2| |G34| |G123| |G124| |G12| |G13| |G14| |G23| |G24|
    std::array<std::uint64_t, 10> orders{};
    BigInt lhs;
    BigInt rhs;
    bool satisfied = false;
    Fraction slack; // lhs/rhs, reduced
};

inline IngletonReport ingleton_check(const SubgroupTable& t, const std::array<int, 4>& q) {
    for (int id : q) t.check_id(id);
    const int a = q[0], b = q[1], c = q[2], d = q[3];
    const int ab = t.intersect(a, b);
    const int cd = t.intersect(c, d);
    const int ac = t.intersect(a, c);
    const int ad = t.intersect(a, d);
    const int bc = t.intersect(b, c);
    const int bd = t.intersect(b, d);
    const int abc = t.intersect(ab, c);
    const int abd = t.intersect(ab, d);

    IngletonReport r;
    r.quadruple = q;
    r.orders = {static_cast<std::uint64_t>(t[a].order),  static_cast<std::uint64_t>(t[b].order),
                static_cast<std::uint64_t>(t[cd].order), static_cast<std::uint64_t>(t[abc].order),
                static_cast<std::uint64_t>(t[abd].order), static_cast<std::uint64_t>(t[ab].order),
                static_cast<std::uint64_t>(t[ac].order), static_cast<std::uint64_t>(t[ad].order),
                static_cast<std::uint64_t>(t[bc].order), static_cast<std::uint64_t>(t[bd].order)};

    ExactProduct lhs, rhs;
    for (int i = 0; i < 5; ++i) lhs.multiply(r.orders[static_cast<std::size_t>(i)]);
    for (int i = 5; i < 10; ++i) rhs.multiply(r.orders[static_cast<std::size_t>(i)]);
    r.lhs = lhs.value();
    r.rhs = rhs.value();
    r.satisfied = r.lhs >= r.rhs;
    r.slack = Fraction::of(r.lhs, r.rhs);
    return r;
}

// Polymatroid audit of an entropy vector in exact integer form, with the
// convention index(empty) = 1:
//   monotonicity  S <= T  =>  index(S) <= index(T)
//   submodularity index(S|T) * index(S&T) <= index(S) * index(T)
// A failure indicates an implementation bug, since group-characterizable
// vectors are entropic.
struct ShannonAuditReport {
    bool ok = true;
    std::string detail;
    unsigned mask_s = 0;
    unsigned mask_t = 0;
};

inline ShannonAuditReport shannon_audit(const EntropyVector& v) {
    ShannonAuditReport rep;
    const unsigned full = v.full_mask();
    if (v.index_by_mask[0] != 1) {
        rep.ok = false;
        rep.detail = "index(empty) != 1";
        return rep;
    }
    for (unsigned t = 1; t <= full; ++t) {
        for (unsigned s = (t - 1) & t;; s = (s - 1) & t) {
            if (v.index_by_mask[s] > v.index_by_mask[t]) {
                rep.ok = false;
                rep.detail = "monotonicity fails";
                rep.mask_s = s;
                rep.mask_t = t;
                return rep;
            }
            if (s == 0) break;
        }
    }
    for (unsigned s = 0; s <= full; ++s) {
        for (unsigned t = s; t <= full; ++t) {
            const uint128 left = static_cast<uint128>(v.index_by_mask[s | t]) * v.index_by_mask[s & t];
            const uint128 right = static_cast<uint128>(v.index_by_mask[s]) * v.index_by_mask[t];
            if (left > right) {
                rep.ok = false;
                rep.detail = "submodularity fails";
                rep.mask_s = s;
                rep.mask_t = t;
                return rep;
            }
        }
    }
    return rep;
}

} // namespace gev

#endif // GEV_ENTROPY_HPP
