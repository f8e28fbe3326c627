#ifndef GEV_SCAN_HPP
#define GEV_SCAN_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "gev/entropy.hpp"
#include "gev/exact.hpp"
#include "gev/subgroups.hpp"

namespace gev {

// Materialized pairwise intersections: entry (a,b) is the id of a & b.
// Triple intersections cost one extra lookup.
struct IntersectionIndex {
    int k = 0;
    std::vector<std::int32_t> ids;        // k*k, symmetric
    std::vector<std::uint64_t> orders;    // subgroup order by id

    std::int32_t at(int a, int b) const { return ids[static_cast<std::size_t>(a) * k + b]; }
    const std::int32_t* row(int a) const { return ids.data() + static_cast<std::size_t>(a) * k; }
};

inline IntersectionIndex precompute_intersections(const SubgroupTable& t, const Limits& lim = {}) {
    IntersectionIndex idx;
    idx.k = t.size();
    const std::uint64_t bytes = static_cast<std::uint64_t>(idx.k) * idx.k * sizeof(std::int32_t);
    if (bytes > lim.memory_budget)
        fail(Errc::memory_budget_exceeded, "intersection matrix needs " + std::to_string(bytes) + " bytes");
    idx.ids.resize(static_cast<std::size_t>(idx.k) * idx.k);
    idx.orders.resize(static_cast<std::size_t>(idx.k));
    for (int a = 0; a < idx.k; ++a) idx.orders[static_cast<std::size_t>(a)] = static_cast<std::uint64_t>(t[a].order);
    for (int a = 0; a < idx.k; ++a) {
        idx.ids[static_cast<std::size_t>(a) * idx.k + a] = static_cast<std::int32_t>(a);
        for (int b = a + 1; b < idx.k; ++b) {
            const std::int32_t id = static_cast<std::int32_t>(t.intersect(a, b));
            idx.ids[static_cast<std::size_t>(a) * idx.k + b] = id;
            idx.ids[static_cast<std::size_t>(b) * idx.k + a] = id;
        }
    }
    return idx;
}

struct ScanOptions {
    int threads = 1;
    bool distinct_only = false; // skip quadruples with repeated ids
    int max_violations = 1000;
};

struct ScanResult {
    std::string group;
    int subgroup_count = 0;
    std::uint64_t quadruples_checked = 0;
    std::uint64_t violations_total = 0;
    std::vector<IngletonReport> violations; // canonical order, capped
    Fraction min_slack;                     // smallest lhs/rhs encountered
    double wall_seconds = 0;

    bool violation_found() const { return violations_total > 0; }
};

namespace detail {

struct RawViolation {
    int a, b, c, d;
    uint128 lhs, rhs;
    std::array<std::uint64_t, 10> orders;
};

struct BlockResult {
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::vector<RawViolation> list;
    uint128 min_num = 0, min_den = 0; // den == 0 means "no check ran"
};

inline bool ratio_less(uint128 an, uint128 ad, uint128 bn, uint128 bd) {
    return cmp_ratio(an, ad, bn, bd) < 0;
}

// One block of canonical (a,b) outer pairs against every canonical (c,d)
// inner pair. Int is uint64_t when N^5 fits 63 bits, uint128 otherwise.
template <class Int>
void scan_block(const IntersectionIndex& idx, const std::vector<std::pair<std::int32_t, std::int32_t>>& pairs,
                std::size_t lo, std::size_t hi, const ScanOptions& opt, BlockResult& out) {
    const int k = idx.k;
    const std::uint64_t* ord = idx.orders.data();
    for (std::size_t pi = lo; pi < hi; ++pi) {
        const int a = pairs[pi].first, b = pairs[pi].second;
        const std::int32_t* row_a = idx.row(a);
        const std::int32_t* row_b = idx.row(b);
        const int ab = row_a[b];
        const std::int32_t* row_ab = idx.row(ab);
        const Int lhs01 = static_cast<Int>(ord[a]) * static_cast<Int>(ord[b]);
        const std::uint64_t o_ab = ord[ab];
        for (int c = 0; c < k; ++c) {
            if (opt.distinct_only && (c == a || c == b)) continue;
            const std::int32_t* row_c = idx.row(c);
            const int abc = row_ab[c];
            const Int lhs_pre = lhs01 * static_cast<Int>(ord[abc]);
            const Int rhs_pre = static_cast<Int>(o_ab) * static_cast<Int>(ord[row_a[c]]) * static_cast<Int>(ord[row_b[c]]);
            const int d0 = opt.distinct_only ? c + 1 : c;
            for (int d = d0; d < k; ++d) {
                if (opt.distinct_only && (d == a || d == b)) continue;
                const Int lhs = lhs_pre * static_cast<Int>(ord[row_c[d]]) * static_cast<Int>(ord[row_ab[d]]);
                const Int rhs = rhs_pre * static_cast<Int>(ord[row_a[d]]) * static_cast<Int>(ord[row_b[d]]);
                ++out.checked;
                if (out.min_den == 0 || ratio_less(lhs, rhs, out.min_num, out.min_den)) {
                    out.min_num = lhs;
                    out.min_den = rhs;
                }
                if (lhs < rhs) {
                    ++out.violations;
                    if (static_cast<int>(out.list.size()) < opt.max_violations) {
                        RawViolation v;
                        v.a = a; v.b = b; v.c = c; v.d = d;
                        v.lhs = lhs;
                        v.rhs = rhs;
                        v.orders = {ord[a], ord[b], ord[row_c[d]], ord[abc], ord[row_ab[d]],
                                    o_ab, ord[row_a[c]], ord[row_a[d]], ord[row_b[c]], ord[row_b[d]]};
                        out.list.push_back(v);
                    }
                }
            }
        }
    }
}

} // namespace detail

// Exhaustive Ingleton scan over canonical subgroup quadruples (a <= b for the
// first pair, c <= d for the second; the inequality is invariant under the
// two swaps). Work is partitioned into fixed blocks of the outer pair range
// and merged in block order, so the result is identical for any thread count.
inline ScanResult ingleton_scan(const FiniteGroup& g, const SubgroupTable& t, const IntersectionIndex& idx,
                                const ScanOptions& opt = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    const int k = idx.k;
    if (t.size() != k) fail(Errc::invalid_parameter, "intersection index does not match the subgroup table");

    std::vector<std::pair<std::int32_t, std::int32_t>> pairs;
    pairs.reserve(static_cast<std::size_t>(k) * (k + 1) / 2);
    for (std::int32_t a = 0; a < k; ++a)
        for (std::int32_t b = opt.distinct_only ? a + 1 : a; b < k; ++b) pairs.emplace_back(a, b);

    // 5 * log2(N) must fit the 128-bit kernel; any table that fits in memory
    // satisfies this with a wide margin.
    double log2n = 0;
    for (int x = g.order; x > 1; x >>= 1) ++log2n;
    if (5 * log2n >= 127)
        fail(Errc::arithmetic_width_exceeded, "order products exceed 128 bits");
    bool fits64 = true;
    {
        uint128 acc = 1;
        for (int i = 0; i < 5; ++i) acc *= static_cast<uint128>(g.order == 0 ? 1 : g.order);
        fits64 = acc < (static_cast<uint128>(1) << 63);
    }

    // Block boundaries are fixed independently of the thread count; each block
    // caps its own list at max_violations, so the merged prefix is exact.
    const std::size_t nblocks = pairs.empty() ? 0 : std::min<std::size_t>(pairs.size(), 64);
    std::vector<detail::BlockResult> blocks(nblocks);
    std::atomic<std::size_t> next{0};

    auto worker = [&]() {
        while (true) {
            const std::size_t bi = next.fetch_add(1);
            if (bi >= nblocks) break;
            const std::size_t lo = bi * pairs.size() / nblocks;
            const std::size_t hi = (bi + 1) * pairs.size() / nblocks;
            if (fits64)
                detail::scan_block<std::uint64_t>(idx, pairs, lo, hi, opt, blocks[bi]);
            else
                detail::scan_block<uint128>(idx, pairs, lo, hi, opt, blocks[bi]);
        }
    };

    const int nthreads = std::max(1, opt.threads);
    if (nthreads == 1 || nblocks <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    ScanResult res;
    res.group = g.construction;
    res.subgroup_count = k;
    uint128 min_num = 0, min_den = 0;
    std::vector<detail::RawViolation> merged;
    for (const auto& b : blocks) {
        res.quadruples_checked += b.checked;
        res.violations_total += b.violations;
        if (b.min_den != 0 && (min_den == 0 || detail::ratio_less(b.min_num, b.min_den, min_num, min_den))) {
            min_num = b.min_num;
            min_den = b.min_den;
        }
        for (const auto& v : b.list) {
            if (static_cast<int>(merged.size()) >= opt.max_violations) break;
            merged.push_back(v);
        }
    }
    res.min_slack = min_den == 0 ? Fraction{} : Fraction::of_u128(min_num, min_den);
    res.violations.reserve(merged.size());
    for (const auto& v : merged) {
        IngletonReport r;
        r.quadruple = {v.a, v.b, v.c, v.d};
        r.orders = v.orders;
        r.lhs = to_bigint(v.lhs);
        r.rhs = to_bigint(v.rhs);
        r.satisfied = false;
        r.slack = Fraction::of_u128(v.lhs, v.rhs);
        res.violations.push_back(std::move(r));
    }
    res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

// Entropy vector through a precomputed intersection matrix; used by the
// exhaustive verification drivers where hash lookups would dominate.
inline EntropyVector entropy_vector(const FiniteGroup& g, const IntersectionIndex& idx, const std::vector<int>& ids) {
    const int n = static_cast<int>(ids.size());
    if (n < 1 || n > kMaxTupleSize)
        fail(Errc::n_cap_exceeded, "tuple size " + std::to_string(n) + " outside [1," + std::to_string(kMaxTupleSize) + "]");
    EntropyVector v;
    v.n = n;
    v.group_order = g.order;
    const unsigned full = 1u << n;
    std::vector<int> inter(full, 0);
    v.index_by_mask.assign(full, 1);
    for (unsigned mask = 1; mask < full; ++mask) {
        const unsigned low = mask & (mask - 1u);
        const int bit = std::countr_zero(mask);
        inter[mask] = low == 0 ? ids[static_cast<std::size_t>(bit)] : idx.at(inter[low], ids[static_cast<std::size_t>(bit)]);
        v.index_by_mask[mask] = static_cast<std::uint64_t>(g.order) / idx.orders[static_cast<std::size_t>(inter[mask])];
    }
    return v;
}

} // namespace gev

#endif // GEV_SCAN_HPP
