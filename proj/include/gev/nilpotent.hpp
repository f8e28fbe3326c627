#ifndef GEV_NILPOTENT_HPP
#define GEV_NILPOTENT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gev/entropy.hpp"
#include "gev/group.hpp"
#include "gev/lazard.hpp"
#include "gev/scan.hpp"
#include "gev/subgroups.hpp"

namespace gev {

namespace detail {

inline std::vector<std::pair<int, int>> factorize(int n) {
    std::vector<std::pair<int, int>> f;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            f.emplace_back(p, e);
        }
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

inline long long inv_mod(long long a, long long m) {
    long long t = 0, newt = 1, r = m, newr = a % m;
    while (newr != 0) {
        const long long q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    return ((t % m) + m) % m;
}

} // namespace detail

// Sylow decomposition of a nilpotent group: for each prime p | N, the part is
// the set of elements of p-power order, which is a subgroup exactly in the
// nilpotent case. coords[x] lists the per-prime components of x, whose
// ordered product recovers x.
struct SylowPart {
    int prime = 0;
    int exponent = 0; // |part| = prime^exponent
    Subgroup subgroup;
};

struct SylowDecomposition {
    std::vector<SylowPart> parts; // ascending primes
    std::vector<std::vector<std::int32_t>> coords;
    bool direct_ok = false;
    std::string detail;
};

inline SylowDecomposition sylow_decomposition(const FiniteGroup& g) {
    const CentralSeries series = lower_central_series(g);
    if (!series.nilpotent())
        fail(Errc::not_nilpotent, g.construction + " is not nilpotent; p-power-order element sets need not be subgroups");

    SylowDecomposition d;
    const auto factors = detail::factorize(g.order);
    std::vector<int> ord(static_cast<std::size_t>(g.order));
    for (int x = 0; x < g.order; ++x) ord[static_cast<std::size_t>(x)] = element_order(g, x);

    for (const auto& [p, e] : factors) {
        SylowPart part;
        part.prime = p;
        part.exponent = e;
        part.subgroup.members = Bitset(g.order);
        for (int x = 0; x < g.order; ++x) {
            int m = ord[static_cast<std::size_t>(x)];
            while (m % p == 0) m /= p;
            if (m == 1) part.subgroup.members.set(x);
        }
        part.subgroup.order = part.subgroup.members.count();
        d.parts.push_back(std::move(part));
    }

    d.direct_ok = true;
    auto note = [&](const std::string& msg) {
        d.direct_ok = false;
        if (d.detail.empty()) d.detail = msg;
    };

    long long prod = 1;
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
        const SylowPart& part = d.parts[i];
        long long expected = 1;
        for (int t = 0; t < part.exponent; ++t) expected *= part.prime;
        if (part.subgroup.order != expected)
            note("part for prime " + std::to_string(part.prime) + " has wrong order");
        prod *= part.subgroup.order;

        const std::vector<int> elems = part.subgroup.members.to_indices();
        for (std::size_t x = 0; x < elems.size() && d.direct_ok; ++x)
            for (std::size_t y = 0; y < elems.size(); ++y)
                if (!part.subgroup.members.test(g.product(elems[x], elems[y]))) {
                    note("part for prime " + std::to_string(part.prime) + " is not closed");
                    break;
                }
        for (std::size_t j = 0; j < i; ++j) {
            Bitset meet = d.parts[i].subgroup.members & d.parts[j].subgroup.members;
            if (meet.count() != 1) note("parts intersect nontrivially");
        }
    }
    if (prod != g.order) note("part orders do not multiply to |G|");

    // Pairwise commuting of distinct parts, then the coordinate factorization
    // x = x_{p_1} * ... * x_{p_k} via CRT exponents.
    for (std::size_t i = 0; i + 1 < d.parts.size() && d.direct_ok; ++i)
        for (std::size_t j = i + 1; j < d.parts.size() && d.direct_ok; ++j) {
            const std::vector<int> ei = d.parts[i].subgroup.members.to_indices();
            const std::vector<int> ej = d.parts[j].subgroup.members.to_indices();
            for (int x : ei) {
                for (int y : ej)
                    if (g.product(x, y) != g.product(y, x)) {
                        note("elements of distinct parts do not commute");
                        break;
                    }
                if (!d.direct_ok) break;
            }
        }

    d.coords.assign(static_cast<std::size_t>(g.order), std::vector<std::int32_t>(d.parts.size(), g.identity));
    for (int x = 0; x < g.order; ++x) {
        const long long m = ord[static_cast<std::size_t>(x)];
        for (std::size_t i = 0; i < d.parts.size(); ++i) {
            long long q = 1, rest = m;
            while (rest % d.parts[i].prime == 0) {
                rest /= d.parts[i].prime;
                q *= d.parts[i].prime;
            }
            const long long r = m / q;
            const long long a = q == 1 ? 0 : r * detail::inv_mod(r % q, q);
            d.coords[static_cast<std::size_t>(x)][i] = static_cast<std::int32_t>(power(g, x, a));
        }
        int acc = g.identity;
        for (std::size_t i = 0; i < d.parts.size(); ++i) acc = g.product(acc, d.coords[static_cast<std::size_t>(x)][i]);
        if (acc != x) note("coordinate product does not recover element " + std::to_string(x));
    }
    return d;
}

// Per-prime components of a subgroup, H_p = H & P_p, with the product
// identity |H| = prod |H_p| asserted.
struct SylowSplit {
    std::vector<Bitset> components;
    std::vector<int> orders;
};

inline SylowSplit subgroup_sylow_split(const FiniteGroup& g, const Bitset& h, const SylowDecomposition& d) {
    SylowSplit s;
    long long prod = 1;
    for (const SylowPart& part : d.parts) {
        Bitset c = h & part.subgroup.members;
        s.orders.push_back(c.count());
        prod *= s.orders.back();
        s.components.push_back(std::move(c));
    }
    if (prod != h.count())
        fail(Errc::identity_violation, "|H| = " + std::to_string(h.count()) + " but component orders multiply to " +
                                           std::to_string(prod) + " in " + g.construction);
    return s;
}

// Componentwise intersection identity for a pair of subgroups:
// |H & K| = prod_p |H_p & K_p|.
inline bool pairwise_split_check(const Bitset& h, const Bitset& k, const SylowDecomposition& d) {
    long long prod = 1;
    for (const SylowPart& part : d.parts) prod *= (h & k & part.subgroup.members).count();
    return prod == (h & k).count();
}

// Reindexed Sylow parts with their own subgroup tables, shared by the
// via-Sylow Ingleton route and the assembled counterpart.
struct SylowContext {
    const FiniteGroup* parent = nullptr;
    SylowDecomposition dec;
    struct Part {
        FiniteGroup grp;
        std::vector<std::int32_t> to_part;   // parent index -> part index (or -1)
        std::vector<std::int32_t> to_parent; // part index -> parent index
        SubgroupTable table;
        CentralSeries series;
    };
    std::vector<Part> parts;
};

inline SylowContext make_sylow_context(const FiniteGroup& g, const Limits& lim = {}) {
    SylowContext ctx;
    ctx.parent = &g;
    ctx.dec = sylow_decomposition(g);
    for (const SylowPart& p : ctx.dec.parts) {
        SylowContext::Part part;
        part.grp = subgroup_as_group(g, p.subgroup.members.to_indices(), &part.to_part, &part.to_parent);
        part.table = enumerate_subgroups(part.grp, lim);
        part.table.parent = nullptr; // grp lives inside this Part; avoid dangling use
        part.series = lower_central_series(part.grp);
        ctx.parts.push_back(std::move(part));
    }
    for (auto& part : ctx.parts) part.table.parent = &part.grp;
    return ctx;
}

// Maps a parent-group subgroup into a part's own table.
inline int map_subgroup_to_part(const SylowContext& ctx, std::size_t part_index, const Bitset& members) {
    const auto& part = ctx.parts[part_index];
    Bitset sub(part.grp.order);
    Bitset meet = members & ctx.dec.parts[part_index].subgroup.members;
    meet.for_each([&](int x) { sub.set(part.to_part[static_cast<std::size_t>(x)]); });
    return part.table.require(sub);
}

// Ingleton check through the Sylow decomposition: each prime is checked
// inside its own part, and the per-prime order products reconstruct the
// global products exactly.
struct SylowIngletonReport {
    std::vector<IngletonReport> per_prime;
    IngletonReport direct;
    BigInt combined_lhs;
    BigInt combined_rhs;
    bool satisfied = false;
    bool consistent = false;
};

inline SylowIngletonReport ingleton_via_sylow(const SylowContext& ctx, const SubgroupTable& tg,
                                              const std::array<int, 4>& q) {
    SylowIngletonReport rep;
    rep.combined_lhs = 1;
    rep.combined_rhs = 1;
    for (std::size_t i = 0; i < ctx.parts.size(); ++i) {
        std::array<int, 4> mapped{};
        for (int t = 0; t < 4; ++t) mapped[static_cast<std::size_t>(t)] = map_subgroup_to_part(ctx, i, tg[q[static_cast<std::size_t>(t)]].members);
        rep.per_prime.push_back(ingleton_check(ctx.parts[i].table, mapped));
        rep.combined_lhs *= rep.per_prime.back().lhs;
        rep.combined_rhs *= rep.per_prime.back().rhs;
    }
    rep.direct = ingleton_check(tg, q);
    rep.satisfied = rep.combined_lhs >= rep.combined_rhs;
    rep.consistent = rep.combined_lhs == rep.direct.lhs && rep.combined_rhs == rep.direct.rhs &&
                     rep.satisfied == rep.direct.satisfied;
    return rep;
}

// Abelian counterpart of a nilpotent group, assembled from per-part Lazard
// counterparts on the group's own element set through the decomposition
// coordinates, so subgroup bitsets carry over verbatim.
inline AbelianCounterpart nilpotent_abelian_counterpart(const SylowContext& ctx, const SubgroupTable& tg) {
    const FiniteGroup& g = *ctx.parent;

    std::vector<std::vector<std::int32_t>> part_add;
    for (std::size_t i = 0; i < ctx.parts.size(); ++i) {
        const auto& part = ctx.parts[i];
        const int cls = part.series.cls.value_or(0);
        if (!part.series.nilpotent() || cls > 2)
            fail(Errc::class_exceeds_limit, "Sylow part for prime " + std::to_string(ctx.dec.parts[i].prime) +
                                                " has class > 2; the class-2 construction does not apply");
        if (cls == 2 && ctx.dec.parts[i].prime == 2)
            fail(Errc::even_prime, "Sylow 2-part has class 2; the correspondence requires class < p");
        part_add.push_back(lazard_addition(part.grp));
    }

    const int n = g.order;
    FiniteGroup a;
    a.order = n;
    a.identity = g.identity;
    a.labels = g.labels;
    a.construction = "nilpotent-counterpart(" + g.construction + ")";
    a.mul.resize(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            int acc = g.identity;
            for (std::size_t i = 0; i < ctx.parts.size(); ++i) {
                const auto& part = ctx.parts[i];
                const int px = part.to_part[static_cast<std::size_t>(ctx.dec.coords[static_cast<std::size_t>(x)][i])];
                const int py = part.to_part[static_cast<std::size_t>(ctx.dec.coords[static_cast<std::size_t>(y)][i])];
                const int ps = part_add[i][static_cast<std::size_t>(px) * part.grp.order + py];
                acc = g.product(acc, part.to_parent[static_cast<std::size_t>(ps)]);
            }
            a.mul[static_cast<std::size_t>(x) * n + y] = static_cast<std::int32_t>(acc);
        }
    }
    detail::finish_inverses(a);

    AbelianCounterpart out;
    out.prime = p_group_prime(g);
    out.source_class = lower_central_series(g).cls.value_or(0);
    out.counterpart = std::move(a);
    out.certificate = certify_counterpart(g, tg, out.counterpart);
    return out;
}

// Convenience verdict for the smallest-prime criterion: the class-2 per-part
// gate is strictly stronger, so parts are reported individually as well.
struct CorollaryVerdict {
    int cls = 0;
    int smallest_prime = 0; // 0 for the trivial group
    bool applies = false;
    struct PartReport {
        int prime = 0;
        int order = 0;
        int cls = 0;
        bool lazard_ok = false;
    };
    std::vector<PartReport> parts;
};

// Exhaustive cross-validation of the via-Sylow route against the direct
// check: on every canonical quadruple, the per-prime order products must
// reconstruct the direct products exactly, and the verdicts must agree.
struct SylowCrossScanResult {
    std::uint64_t checked = 0;
    std::uint64_t inconsistencies = 0;
    std::uint64_t violations = 0; // combined-verdict violations

    bool consistent() const { return inconsistencies == 0; }
};

inline SylowCrossScanResult sylow_cross_scan(const SylowContext& ctx, const SubgroupTable& tg,
                                             const IntersectionIndex& idxg) {
    const int k = tg.size();
    const std::size_t nparts = ctx.parts.size();

    std::vector<IntersectionIndex> part_idx;
    std::vector<std::vector<std::int32_t>> part_id; // [part][tg id] -> part table id
    part_idx.reserve(nparts);
    part_id.reserve(nparts);
    for (std::size_t i = 0; i < nparts; ++i) {
        part_idx.push_back(precompute_intersections(ctx.parts[i].table));
        std::vector<std::int32_t> map(static_cast<std::size_t>(k));
        for (int id = 0; id < k; ++id)
            map[static_cast<std::size_t>(id)] = static_cast<std::int32_t>(map_subgroup_to_part(ctx, i, tg[id].members));
        part_id.push_back(std::move(map));
    }

    SylowCrossScanResult res;
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b) {
            const int ab = idxg.at(a, b);
            for (int c = 0; c < k; ++c) {
                const int abc = idxg.at(ab, c);
                for (int d = c; d < k; ++d) {
                    const uint128 lhs = static_cast<uint128>(idxg.orders[a]) * idxg.orders[b] * idxg.orders[idxg.at(c, d)] *
                                        idxg.orders[abc] * idxg.orders[idxg.at(ab, d)];
                    const uint128 rhs = static_cast<uint128>(idxg.orders[ab]) * idxg.orders[idxg.at(a, c)] *
                                        idxg.orders[idxg.at(a, d)] * idxg.orders[idxg.at(b, c)] * idxg.orders[idxg.at(b, d)];
                    uint128 clhs = 1, crhs = 1;
                    for (std::size_t i = 0; i < nparts; ++i) {
                        const IntersectionIndex& px = part_idx[i];
                        const int pa = part_id[i][static_cast<std::size_t>(a)], pb = part_id[i][static_cast<std::size_t>(b)];
                        const int pc = part_id[i][static_cast<std::size_t>(c)], pd = part_id[i][static_cast<std::size_t>(d)];
                        const int pab = px.at(pa, pb);
                        clhs *= static_cast<uint128>(px.orders[pa]) * px.orders[pb] * px.orders[px.at(pc, pd)] *
                                px.orders[px.at(pab, pc)] * px.orders[px.at(pab, pd)];
                        crhs *= static_cast<uint128>(px.orders[pab]) * px.orders[px.at(pa, pc)] * px.orders[px.at(pa, pd)] *
                                px.orders[px.at(pb, pc)] * px.orders[px.at(pb, pd)];
                    }
                    ++res.checked;
                    if (clhs != lhs || crhs != rhs || (clhs >= crhs) != (lhs >= rhs)) ++res.inconsistencies;
                    if (clhs < crhs) ++res.violations;
                }
            }
        }
    return res;
}

inline CorollaryVerdict corollary_gate(const FiniteGroup& g) {
    const CentralSeries series = lower_central_series(g);
    if (!series.nilpotent()) fail(Errc::not_nilpotent, g.construction + " is not nilpotent");

    CorollaryVerdict v;
    v.cls = *series.cls;
    const auto factors = detail::factorize(g.order);
    v.smallest_prime = factors.empty() ? 0 : factors.front().first;
    v.applies = factors.empty() || v.cls < v.smallest_prime;

    const SylowDecomposition dec = sylow_decomposition(g);
    for (const SylowPart& p : dec.parts) {
        CorollaryVerdict::PartReport pr;
        pr.prime = p.prime;
        pr.order = p.subgroup.order;
        const FiniteGroup part = subgroup_as_group(g, p.subgroup.members.to_indices());
        pr.cls = lower_central_series(part).cls.value_or(0);
        pr.lazard_ok = pr.cls <= 2 && (pr.cls <= 1 || p.prime % 2 == 1);
        v.parts.push_back(pr);
    }
    return v;
}

} // namespace gev

#endif // GEV_NILPOTENT_HPP
