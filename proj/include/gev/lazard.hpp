#ifndef GEV_LAZARD_HPP
#define GEV_LAZARD_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gev/entropy.hpp"
#include "gev/group.hpp"
#include "gev/subgroups.hpp"

namespace gev {

// Returns p if |G| is a power of the prime p, 0 otherwise. The trivial group
// reports 0 but is accepted as a degenerate case by the constructions below.
inline int p_group_prime(const FiniteGroup& g) {
    int n = g.order;
    if (n <= 1) return 0;
    int p = 2;
    while (p * p <= n && n % p != 0) ++p;
    if (n % p != 0) p = n; // n prime
    while (n % p == 0) n /= p;
    return n == 1 ? p : 0;
}

inline std::map<int, long long> order_profile(const FiniteGroup& g) {
    std::map<int, long long> profile;
    for (int x = 0; x < g.order; ++x) ++profile[element_order(g, x)];
    return profile;
}

// Class-2 addition x (+) y = x*y*[y,x]^(1/2), where z^(1/2) = z^((m+1)/2) and
// m is the order of z (odd for odd p). For class 1 the addition degenerates
// to the group operation. Requires an odd-p p-group of class <= 2; the
// class >= 3 construction needs the general Hausdorff series and is rejected.
inline std::vector<std::int32_t> lazard_addition(const FiniteGroup& g) {
    const int p = p_group_prime(g);
    if (p == 0 && g.order > 1)
        fail(Errc::not_a_p_group, g.construction + " has order " + std::to_string(g.order) + ", not a prime power");
    const CentralSeries series = lower_central_series(g);
    const int cls = series.cls.value_or(0);
    if (!series.nilpotent() || cls > 2)
        fail(Errc::class_exceeds_limit,
             g.construction + " has nilpotency class " + (series.nilpotent() ? std::to_string(cls) : std::string("none")) +
                 "; only class <= 2 is supported");
    if (cls <= 1) return g.mul; // abelian: (+) coincides with the product

    if (p == 2)
        fail(Errc::even_prime, g.construction + " is a class-2 2-group; (m+1)/2 is undefined and the correspondence requires class < p");

    std::vector<int> ord(static_cast<std::size_t>(g.order));
    for (int x = 0; x < g.order; ++x) ord[static_cast<std::size_t>(x)] = element_order(g, x);

    const int n = g.order;
    std::vector<std::int32_t> add(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            const int c = commutator(g, y, x);
            const int m = ord[static_cast<std::size_t>(c)];
            const int half = power(g, c, (static_cast<long long>(m) + 1) / 2);
            add[static_cast<std::size_t>(x) * n + y] = static_cast<std::int32_t>(g.product(g.product(x, y), half));
        }
    }
    return add;
}

struct CounterpartCertificate {
    bool abelian_ok = false;       // (S,+) satisfies the abelian group axioms
    bool closure_ok = false;       // every subgroup bitset of G is (+)-closed
    bool indices_ok = false;       // |A : A_i| = |G : G_i| for every subgroup
    bool intersections_ok = false; // member-set intersections carry over
    bool assoc_full = false;
    std::string detail;

    bool ok() const { return abelian_ok && closure_ok && indices_ok && intersections_ok; }
};

struct AbelianCounterpart {
    FiniteGroup counterpart; // same element set, addition table as product
    CounterpartCertificate certificate;
    int prime = 0;        // p for a p-group source, 0 for mixed-order sources
    int source_class = 0;
};

// Audits an addition table as an abelian counterpart of g: abelian group
// axioms, closure of every known subgroup of g, and index preservation. The
// checks are guaranteed to pass when the construction preconditions hold, so
// a failure is a bug signal, not a data error.
inline CounterpartCertificate certify_counterpart(const FiniteGroup& g, const SubgroupTable& table,
                                                  const FiniteGroup& a) {
    CounterpartCertificate cert;
    const int n = g.order;

    bool commutative = true;
    for (int x = 0; x < n && commutative; ++x)
        for (int y = x + 1; y < n; ++y)
            if (a.product(x, y) != a.product(y, x)) {
                commutative = false;
                cert.detail = "addition not commutative at (" + std::to_string(x) + "," + std::to_string(y) + ")";
                break;
            }
    ValidationReport axioms = validate_group(a);
    cert.assoc_full = axioms.assoc_full;
    cert.abelian_ok = commutative && axioms.ok();
    if (!axioms.ok() && cert.detail.empty()) cert.detail = axioms.detail;

    cert.closure_ok = true;
    for (int id = 0; id < table.size() && cert.closure_ok; ++id) {
        const Bitset& h = table[id].members;
        const std::vector<int> elems = h.to_indices();
        for (std::size_t i = 0; i < elems.size() && cert.closure_ok; ++i)
            for (std::size_t j = i; j < elems.size(); ++j) {
                if (!h.test(a.product(elems[i], elems[j]))) {
                    cert.closure_ok = false;
                    cert.detail = "subgroup id " + std::to_string(id) + " is not closed under the addition";
                    break;
                }
            }
    }

    // The counterpart lives on the same element set, so member counts are
    // unchanged and |A : A_i| = |G : G_i| reduces to an explicit recount.
    cert.indices_ok = a.order == g.order;
    for (int id = 0; id < table.size() && cert.indices_ok; ++id) {
        const int go = table[id].order;
        const int ao = table[id].members.count();
        if (go != ao || g.order % go != 0 || g.order / go != a.order / ao) {
            cert.indices_ok = false;
            cert.detail = "index mismatch at subgroup id " + std::to_string(id);
        }
    }

    cert.intersections_ok = true;
    for (int i = 0; i < table.size() && cert.intersections_ok; ++i)
        for (int j = i; j < table.size(); ++j) {
            if (table.find(table[i].members & table[j].members) < 0) {
                cert.intersections_ok = false;
                cert.detail = "intersection of ids " + std::to_string(i) + "," + std::to_string(j) + " missing";
                break;
            }
        }
    return cert;
}

inline AbelianCounterpart build_counterpart(const FiniteGroup& g, const SubgroupTable& table) {
    AbelianCounterpart out;
    out.prime = p_group_prime(g);
    out.source_class = lower_central_series(g).cls.value_or(0);

    FiniteGroup a;
    a.order = g.order;
    a.identity = g.identity;
    a.mul = lazard_addition(g);
    a.labels = g.labels;
    a.construction = "lazard-counterpart(" + g.construction + ")";
    detail::finish_inverses(a);
    out.counterpart = std::move(a);
    out.certificate = certify_counterpart(g, table, out.counterpart);
    return out;
}

inline AbelianCounterpart build_counterpart(const FiniteGroup& g, const Limits& lim = {}) {
    const SubgroupTable table = enumerate_subgroups(g, lim);
    return build_counterpart(g, table);
}

inline const AbelianCounterpart& require_certified(const AbelianCounterpart& c) {
    if (!c.certificate.ok())
        fail(Errc::certificate_failure, c.counterpart.construction + ": " + c.certificate.detail);
    return c;
}

// Entry-wise comparison of the entropy vectors of (G, tuple) and of (A, same
// member sets). The counterpart subgroups are located in A's own table, so
// the two sides are computed independently.
struct CharacterizabilityReport {
    bool equal = false;
    unsigned first_mismatch_mask = 0;
    EntropyVector source;
    EntropyVector counterpart;
};

inline CharacterizabilityReport verify_characterizability(const FiniteGroup& g, const SubgroupTable& tg,
                                                          const FiniteGroup& a, const SubgroupTable& ta,
                                                          const std::vector<int>& ids) {
    std::vector<int> mapped;
    mapped.reserve(ids.size());
    for (int id : ids) {
        tg.check_id(id);
        mapped.push_back(ta.require(tg[id].members));
    }
    CharacterizabilityReport rep;
    rep.source = entropy_vector(g, tg, ids);
    rep.counterpart = entropy_vector(a, ta, mapped);
    rep.equal = true;
    for (unsigned mask = 1; mask < rep.source.index_by_mask.size(); ++mask) {
        if (rep.source.index_by_mask[mask] != rep.counterpart.index_by_mask[mask]) {
            rep.equal = false;
            rep.first_mismatch_mask = mask;
            break;
        }
    }
    return rep;
}

} // namespace gev

#endif // GEV_LAZARD_HPP
