#ifndef GEV_SUBGROUPS_HPP
#define GEV_SUBGROUPS_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gev/bitset.hpp"
#include "gev/error.hpp"
#include "gev/group.hpp"

namespace gev {

struct Subgroup {
    Bitset members;
    int order = 0;
    int id = -1;
};

// All subgroups of a group, deduplicated and sorted by (order, bitset), so
// ids are deterministic. id 0 is the trivial subgroup, the last id is the
// whole group.
struct SubgroupTable {
    const FiniteGroup* parent = nullptr;
    std::vector<Subgroup> subgroups;
    std::unordered_map<Bitset, int, BitsetHash> id_of;

    int size() const { return static_cast<int>(subgroups.size()); }
    const Subgroup& operator[](int id) const { return subgroups[static_cast<std::size_t>(id)]; }

    int trivial_id() const { return 0; }
    int full_id() const { return size() - 1; }

    int find(const Bitset& b) const {
        auto it = id_of.find(b);
        return it == id_of.end() ? -1 : it->second;
    }

    int require(const Bitset& b) const {
        const int id = find(b);
        if (id < 0)
            fail(Errc::incomplete_table, "bitset of size " + std::to_string(b.count()) +
                                             " missing from subgroup table (enumeration bug)");
        return id;
    }

    // Id of the intersection of two subgroups; always present in a complete
    // table.
    int intersect(int a, int b) const {
        if (a < 0 || a >= size() || b < 0 || b >= size())
            fail(Errc::index_out_of_range, "subgroup id out of range");
        return require(subgroups[static_cast<std::size_t>(a)].members & subgroups[static_cast<std::size_t>(b)].members);
    }

    void check_id(int id) const {
        if (id < 0 || id >= size()) fail(Errc::index_out_of_range, "subgroup id " + std::to_string(id) + " out of range");
    }
};

// Closure of a starting element set under multiplication. Finiteness makes
// inverse closure automatic.
inline Bitset closure_bits(const FiniteGroup& g, Bitset start) {
    start.set(g.identity);
    std::vector<int> elems = start.to_indices();
    const int n = g.order;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const int p = g.product(elems[i], elems[j]);
            if (!start.test(p)) {
                start.set(p);
                elems.push_back(p);
            }
            const int q = g.product(elems[j], elems[i]);
            if (!start.test(q)) {
                start.set(q);
                elems.push_back(q);
            }
        }
        if (static_cast<int>(elems.size()) == n) break; // already the whole group
    }
    return start;
}

inline Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& seed) {
    Bitset b(g.order);
    for (int x : seed) {
        g.check_index(x);
        b.set(x);
    }
    Subgroup s;
    s.members = closure_bits(g, std::move(b));
    s.order = s.members.count();
    return s;
}

namespace detail {

inline Bitset cyclic_subgroup_bits(const FiniteGroup& g, int x) {
    Bitset b(g.order);
    int y = g.identity;
    b.set(y);
    while (true) {
        y = g.product(y, x);
        if (b.test(y)) break;
        b.set(y);
    }
    return b;
}

} // namespace detail

// Enumerates all subgroups by join closure: seed with the cyclic subgroups,
// then join pairs until no new subgroup appears. Complete because every
// subgroup is the join of its cyclic subgroups.
inline SubgroupTable enumerate_subgroups(const FiniteGroup& g, const Limits& lim = {}) {
    std::vector<Bitset> list;
    std::unordered_set<Bitset, BitsetHash> seen;

    auto add = [&](Bitset b) {
        if (seen.insert(b).second) {
            list.push_back(std::move(b));
            if (static_cast<long long>(list.size()) > lim.subgroup_cap)
                fail(Errc::subgroup_cap_exceeded,
                     "more than " + std::to_string(lim.subgroup_cap) + " subgroups in " + g.construction);
        }
    };

    for (int x = 0; x < g.order; ++x) add(detail::cyclic_subgroup_bits(g, x));

    for (std::size_t i = 1; i < list.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (list[i].is_subset_of(list[j]) || list[j].is_subset_of(list[i])) continue;
            add(closure_bits(g, list[i] | list[j]));
        }
    }

    std::sort(list.begin(), list.end(), [](const Bitset& a, const Bitset& b) {
        const int ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return a < b;
    });

    SubgroupTable t;
    t.parent = &g;
    t.subgroups.reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
        Subgroup s;
        s.members = list[i];
        s.order = s.members.count();
        s.id = static_cast<int>(i);
        t.id_of.emplace(s.members, s.id);
        t.subgroups.push_back(std::move(s));
    }
    return t;
}

// Lower central series gamma_1 = G, gamma_{i+1} = [gamma_i, G]. cls is empty
// when the series stabilizes at a nontrivial term (not nilpotent).
struct CentralSeries {
    std::vector<Bitset> terms;
    std::optional<int> cls;

    bool nilpotent() const { return cls.has_value(); }
};

inline CentralSeries lower_central_series(const FiniteGroup& g) {
    CentralSeries s;
    Bitset full(g.order);
    for (int x = 0; x < g.order; ++x) full.set(x);
    s.terms.push_back(std::move(full));

    while (true) {
        const Bitset& cur = s.terms.back();
        Bitset comm(g.order);
        cur.for_each([&](int h) {
            for (int x = 0; x < g.order; ++x) comm.set(commutator(g, h, x));
        });
        Bitset next = closure_bits(g, std::move(comm));
        if (next == cur) break;
        s.terms.push_back(std::move(next));
    }
    if (s.terms.back().count() == 1) s.cls = static_cast<int>(s.terms.size()) - 1;
    return s;
}

// Resolves series terms to subgroup ids in a complete table.
inline std::vector<int> resolve_series(const CentralSeries& s, const SubgroupTable& t) {
    std::vector<int> ids;
    ids.reserve(s.terms.size());
    for (const Bitset& b : s.terms) ids.push_back(t.require(b));
    return ids;
}

// Hasse-diagram cover relations of the inclusion order, as (parent, child)
// pairs sorted by id.
inline std::vector<std::pair<int, int>> inclusion_edges(const SubgroupTable& t) {
    const int k = t.size();
    std::vector<std::pair<int, int>> edges;
    for (int child = 0; child < k; ++child) {
        for (int parent = 0; parent < k; ++parent) {
            if (parent == child) continue;
            if (t[child].order >= t[parent].order) continue;
            if (!t[child].members.is_subset_of(t[parent].members)) continue;
            bool covered = true;
            for (int mid = 0; mid < k && covered; ++mid) {
                if (mid == child || mid == parent) continue;
                if (t[mid].order <= t[child].order || t[mid].order >= t[parent].order) continue;
                if (t[child].members.is_subset_of(t[mid].members) && t[mid].members.is_subset_of(t[parent].members))
                    covered = false;
            }
            if (covered) edges.emplace_back(parent, child);
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

// Greedy small generating set for a subgroup, used for report hints.
inline std::vector<int> generator_hint(const FiniteGroup& g, const Bitset& members) {
    std::vector<int> gens;
    Bitset have(g.order);
    have.set(g.identity);
    if (have == members) return gens;
    while (true) {
        int pick = -1;
        for (int x = 0; x < g.order; ++x) {
            if (members.test(x) && !have.test(x)) {
                pick = x;
                break;
            }
        }
        if (pick < 0) break;
        gens.push_back(pick);
        Bitset seed = have;
        seed.set(pick);
        have = closure_bits(g, std::move(seed));
        if (have == members) break;
    }
    return gens;
}

} // namespace gev

#endif // GEV_SUBGROUPS_HPP
