#ifndef GEV_GROUP_HPP
#define GEV_GROUP_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "gev/error.hpp"

namespace gev {

struct Limits {
    int order_cap = 10000;
    long long subgroup_cap = 100000;
    std::uint64_t memory_budget = std::uint64_t(2) << 30;
};

// A finite group as a dense multiplication table over element indices
// 0..order-1. The identity is always index 0. Immutable after construction.
struct FiniteGroup {
    int order = 0;
    int identity = 0;
    std::vector<std::int32_t> mul;       // row-major, order x order
    std::vector<std::int32_t> inv;
    std::vector<std::string> labels;
    std::string construction;            // provenance: family + params
    std::vector<std::int32_t> generators; // distinguished generators, may be empty

    int product(int x, int y) const { return mul[static_cast<std::size_t>(x) * order + y]; }
    int inverse(int x) const { return inv[static_cast<std::size_t>(x)]; }
    const std::int32_t* row(int x) const { return mul.data() + static_cast<std::size_t>(x) * order; }

    void check_index(int x) const {
        if (x < 0 || x >= order) fail(Errc::index_out_of_range, "element index " + std::to_string(x) + " not in [0," + std::to_string(order) + ")");
    }
};

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void check_order_cap(long long n, const Limits& lim, const std::string& what) {
    if (n > lim.order_cap)
        fail(Errc::order_cap_exceeded, what + " has order " + std::to_string(n) + " > cap " + std::to_string(lim.order_cap));
}

namespace detail {

// Derives the inverse table from the multiplication table (identity = 0).
inline void finish_inverses(FiniteGroup& g) {
    g.inv.assign(g.order, -1);
    for (int x = 0; x < g.order; ++x) {
        const std::int32_t* r = g.row(x);
        for (int y = 0; y < g.order; ++y) {
            if (r[y] == g.identity) {
                g.inv[x] = y;
                break;
            }
        }
        if (g.inv[x] < 0) fail(Errc::invalid_parameter, "element without inverse in table for " + g.construction);
    }
}

struct IntVecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (int x : v) {
            h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 0x100000001b3ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// Breadth-first closure from the identity by right multiplication with the
// generators, in the order given. Element ids are discovery order, so the
// indexing is deterministic for a fixed generator list.
template <class Mul>
std::vector<std::vector<int>> bfs_closure(const std::vector<int>& identity,
                                          const std::vector<std::vector<int>>& gens,
                                          Mul&& mul, long long cap,
                                          std::unordered_map<std::vector<int>, int, IntVecHash>& index_of) {
    std::vector<std::vector<int>> elems;
    elems.push_back(identity);
    index_of.emplace(identity, 0);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& s : gens) {
            std::vector<int> t = mul(elems[i], s);
            auto [it, inserted] = index_of.emplace(t, static_cast<int>(elems.size()));
            (void)it;
            if (inserted) {
                elems.push_back(std::move(t));
                if (static_cast<long long>(elems.size()) > cap)
                    fail(Errc::order_cap_exceeded, "generator closure exceeds order cap " + std::to_string(cap));
            }
        }
    }
    return elems;
}

} // namespace detail

// ---------------------------------------------------------------------------
// element operations

inline int power(const FiniteGroup& g, int x, long long e) {
    g.check_index(x);
    int result = g.identity;
    int base = x;
    while (e > 0) {
        if (e & 1) result = g.product(result, base);
        base = g.product(base, base);
        e >>= 1;
    }
    return result;
}

inline int element_order(const FiniteGroup& g, int x) {
    g.check_index(x);
    int y = x;
    int ord = 1;
    while (y != g.identity) {
        y = g.product(y, x);
        ++ord;
    }
    return ord;
}

// [x,y] = x^-1 y^-1 x y
inline int commutator(const FiniteGroup& g, int x, int y) {
    g.check_index(x);
    g.check_index(y);
    return g.product(g.product(g.product(g.inverse(x), g.inverse(y)), x), y);
}

inline int find_label(const FiniteGroup& g, const std::string& label) {
    for (int i = 0; i < g.order; ++i)
        if (g.labels[i] == label) return i;
    return -1;
}

// ---------------------------------------------------------------------------
// builders

inline FiniteGroup cyclic_group(long long n, const Limits& lim = {}) {
    if (n < 1) fail(Errc::invalid_parameter, "cyclic order must be >= 1");
    check_order_cap(n, lim, "cyclic group");
    FiniteGroup g;
    g.order = static_cast<int>(n);
    g.construction = "cyclic n=" + std::to_string(n);
    g.mul.resize(static_cast<std::size_t>(n) * n);
    g.labels.resize(n);
    for (int i = 0; i < n; ++i) {
        g.labels[i] = std::to_string(i);
        for (int j = 0; j < n; ++j) g.mul[static_cast<std::size_t>(i) * n + j] = static_cast<std::int32_t>((i + j) % n);
    }
    detail::finish_inverses(g);
    if (n > 1) g.generators = {1};
    return g;
}

inline FiniteGroup abelian_group(const std::vector<long long>& factors, const Limits& lim = {}) {
    if (factors.empty()) fail(Errc::invalid_parameter, "abelian group needs at least one factor");
    long long n = 1;
    for (long long m : factors) {
        if (m < 1) fail(Errc::invalid_parameter, "abelian factor must be >= 1");
        n *= m;
        check_order_cap(n, lim, "abelian group");
    }
    FiniteGroup g;
    g.order = static_cast<int>(n);
    std::string cons = "abelian ";
    for (std::size_t i = 0; i < factors.size(); ++i) cons += (i ? "," : "") + std::to_string(factors[i]);
    g.construction = cons;

    const int k = static_cast<int>(factors.size());
    auto decode = [&](int idx, std::vector<int>& digits) {
        for (int i = k - 1; i >= 0; --i) {
            digits[i] = static_cast<int>(idx % factors[i]);
            idx = static_cast<int>(idx / factors[i]);
        }
    };
    auto encode = [&](const std::vector<int>& digits) {
        long long idx = 0;
        for (int i = 0; i < k; ++i) idx = idx * factors[i] + digits[i];
        return static_cast<int>(idx);
    };

    g.labels.resize(n);
    std::vector<int> a(k), b(k), c(k);
    for (int i = 0; i < n; ++i) {
        decode(i, a);
        if (k == 1) {
            g.labels[i] = std::to_string(a[0]);
        } else {
            std::string l = "(";
            for (int t = 0; t < k; ++t) l += (t ? "," : "") + std::to_string(a[t]);
            g.labels[i] = l + ")";
        }
    }
    g.mul.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        decode(i, a);
        for (int j = 0; j < n; ++j) {
            decode(j, b);
            for (int t = 0; t < k; ++t) c[t] = static_cast<int>((a[t] + b[t]) % factors[t]);
            g.mul[static_cast<std::size_t>(i) * n + j] = static_cast<std::int32_t>(encode(c));
        }
    }
    detail::finish_inverses(g);
    // one generator per factor
    std::vector<int> digits(k, 0);
    for (int t = 0; t < k; ++t) {
        if (factors[t] > 1) {
            digits.assign(k, 0);
            digits[t] = 1;
            g.generators.push_back(encode(digits));
        }
    }
    return g;
}

inline std::string perm_cycle_label(const std::vector<int>& img) {
    std::string out;
    std::vector<bool> seen(img.size(), false);
    for (int s = 0; s < static_cast<int>(img.size()); ++s) {
        if (seen[s] || img[s] == s) {
            seen[s] = true;
            continue;
        }
        out += '(';
        int x = s;
        bool first = true;
        while (!seen[x]) {
            seen[x] = true;
            if (!first) out += ' ';
            out += std::to_string(x + 1);
            first = false;
            x = img[x];
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

// Composition convention: (a*b)(x) = b(a(x)), i.e. apply a first, then b.
inline std::vector<int> compose_perms(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) r[x] = b[static_cast<std::size_t>(a[x])];
    return r;
}

// Full symmetric group on n points, elements in lexicographic order of their
// image vectors (so index 0 is the identity).
inline FiniteGroup symmetric_group(int n, const Limits& lim = {}) {
    if (n < 1) fail(Errc::invalid_parameter, "symmetric group needs n >= 1");
    long long order = 1;
    for (int i = 2; i <= n; ++i) {
        order *= i;
        check_order_cap(order, lim, "symmetric group");
    }
    std::vector<long long> fact(n + 1, 1);
    for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;

    auto rank = [&](const std::vector<int>& p) {
        long long r = 0;
        for (int i = 0; i < n; ++i) {
            int c = 0;
            for (int j = i + 1; j < n; ++j)
                if (p[j] < p[i]) ++c;
            r += c * fact[n - 1 - i];
        }
        return static_cast<int>(r);
    };

    std::vector<std::vector<int>> perms;
    perms.reserve(order);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    FiniteGroup g;
    g.order = static_cast<int>(order);
    g.construction = "symmetric n=" + std::to_string(n);
    g.labels.resize(order);
    g.mul.resize(static_cast<std::size_t>(order) * order);
    for (int i = 0; i < order; ++i) g.labels[i] = perm_cycle_label(perms[i]);
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
            g.mul[static_cast<std::size_t>(i) * order + j] = static_cast<std::int32_t>(rank(compose_perms(perms[i], perms[j])));
    detail::finish_inverses(g);
    if (n >= 2) {
        std::vector<int> t(n);
        std::iota(t.begin(), t.end(), 0);
        std::swap(t[0], t[1]);
        g.generators.push_back(rank(t)); // (1 2)
        std::iota(t.begin(), t.end(), 0);
        std::rotate(t.begin(), t.begin() + 1, t.end());
        g.generators.push_back(rank(t)); // (1 2 ... n)
    }
    return g;
}

// Heisenberg group: 3x3 upper unitriangular matrices over F_p, indexed by
// (a12, a13, a23) -> a12*p^2 + a13*p + a23.
inline FiniteGroup heisenberg_group(long long p, const Limits& lim = {}) {
    if (!is_prime(p)) fail(Errc::invalid_parameter, "heisenberg requires prime p, got " + std::to_string(p));
    const long long n = p * p * p;
    check_order_cap(n, lim, "heisenberg group");
    FiniteGroup g;
    g.order = static_cast<int>(n);
    g.construction = "heisenberg p=" + std::to_string(p);
    g.labels.resize(n);
    g.mul.resize(static_cast<std::size_t>(n) * n);
    auto enc = [&](long long a12, long long a13, long long a23) {
        return static_cast<int>((a12 * p + a13) * p + a23);
    };
    for (long long a12 = 0; a12 < p; ++a12)
        for (long long a13 = 0; a13 < p; ++a13)
            for (long long a23 = 0; a23 < p; ++a23)
                g.labels[enc(a12, a13, a23)] = "h(" + std::to_string(a12) + "," + std::to_string(a13) + "," + std::to_string(a23) + ")";
    for (int i = 0; i < n; ++i) {
        const long long a23 = i % p, a13 = (i / p) % p, a12 = i / (p * p);
        for (int j = 0; j < n; ++j) {
            const long long b23 = j % p, b13 = (j / p) % p, b12 = j / (p * p);
            g.mul[static_cast<std::size_t>(i) * n + j] =
                static_cast<std::int32_t>(enc((a12 + b12) % p, (a13 + b13 + a12 * b23) % p, (a23 + b23) % p));
        }
    }
    detail::finish_inverses(g);
    g.generators = {enc(1, 0, 0), enc(0, 0, 1)};
    return g;
}

// The group <x,y : x^(p^2) = y^p = 1, y^-1 x y = x^(1+p)>, realized as the
// semidirect product Z/p^2 x| Z/p. Element (a,b) stands for y^b x^a and is
// indexed as b*p^2 + a. The commutator [x,y] equals x^p.
inline FiniteGroup modular_group(long long p, const Limits& lim = {}) {
    if (!is_prime(p)) fail(Errc::invalid_parameter, "modular requires prime p, got " + std::to_string(p));
    const long long p2 = p * p;
    const long long n = p2 * p;
    check_order_cap(n, lim, "modular group");
    std::vector<long long> tpow(p); // (1+p)^d mod p^2
    tpow[0] = 1;
    for (long long d = 1; d < p; ++d) tpow[d] = (tpow[d - 1] * (1 + p)) % p2;

    FiniteGroup g;
    g.order = static_cast<int>(n);
    g.construction = "modular p=" + std::to_string(p);
    g.labels.resize(n);
    g.mul.resize(static_cast<std::size_t>(n) * n);
    auto enc = [&](long long a, long long b) { return static_cast<int>(b * p2 + a); };
    for (long long b = 0; b < p; ++b)
        for (long long a = 0; a < p2; ++a) {
            std::string l;
            if (b) l += "y^" + std::to_string(b);
            if (a) l += (l.empty() ? "" : " ") + std::string("x^") + std::to_string(a);
            if (l.empty()) l = "e";
            g.labels[enc(a, b)] = l;
        }
    for (int i = 0; i < n; ++i) {
        const long long a = i % p2, b = i / p2;
        for (int j = 0; j < n; ++j) {
            const long long c = j % p2, d = j / p2;
            g.mul[static_cast<std::size_t>(i) * n + j] = static_cast<std::int32_t>(enc((a * tpow[d] + c) % p2, (b + d) % p));
        }
    }
    detail::finish_inverses(g);
    g.generators = {enc(1, 0), enc(0, 1)};
    return g;
}

// Closure of permutation generators (0-based image vectors on npoints).
inline FiniteGroup group_from_perm_generators(int npoints, const std::vector<std::vector<int>>& gens,
                                              const Limits& lim = {}) {
    if (npoints < 1) fail(Errc::invalid_parameter, "permutation universe needs npoints >= 1");
    for (const auto& gn : gens) {
        if (static_cast<int>(gn.size()) != npoints)
            fail(Errc::malformed_generator, "permutation generator has wrong length");
        std::vector<bool> hit(npoints, false);
        for (int v : gn) {
            if (v < 0 || v >= npoints || hit[v]) fail(Errc::malformed_generator, "not a permutation of the stated points");
            hit[v] = true;
        }
    }
    std::vector<int> identity(npoints);
    std::iota(identity.begin(), identity.end(), 0);
    std::unordered_map<std::vector<int>, int, detail::IntVecHash> index_of;
    auto elems = detail::bfs_closure(identity, gens, [](const std::vector<int>& a, const std::vector<int>& b) { return compose_perms(a, b); },
                                     lim.order_cap, index_of);
    const int n = static_cast<int>(elems.size());
    FiniteGroup g;
    g.order = n;
    g.construction = "perm-closure points=" + std::to_string(npoints) + " gens=" + std::to_string(gens.size());
    g.labels.resize(n);
    for (int i = 0; i < n; ++i) g.labels[i] = perm_cycle_label(elems[i]);
    g.mul.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g.mul[static_cast<std::size_t>(i) * n + j] = static_cast<std::int32_t>(index_of.at(compose_perms(elems[i], elems[j])));
    detail::finish_inverses(g);
    for (const auto& gn : gens) g.generators.push_back(index_of.at(gn));
    return g;
}

// Closure of upper unitriangular dim x dim matrices mod m (row-major entries).
inline FiniteGroup group_from_matrix_generators(int dim, long long mod,
                                                const std::vector<std::vector<long long>>& gens,
                                                const Limits& lim = {}) {
    if (dim < 1 || mod < 2) fail(Errc::invalid_parameter, "matrix universe needs dim >= 1 and mod >= 2");
    auto validate = [&](const std::vector<long long>& m) {
        if (static_cast<int>(m.size()) != dim * dim) fail(Errc::malformed_generator, "matrix generator has wrong shape");
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) {
                long long v = m[static_cast<std::size_t>(r) * dim + c];
                if (v < 0 || v >= mod) fail(Errc::malformed_generator, "matrix entry out of range [0,mod)");
                if (r == c && v != 1) fail(Errc::malformed_generator, "matrix generator must be unitriangular (diagonal 1)");
                if (r > c && v != 0) fail(Errc::malformed_generator, "matrix generator must be unitriangular (zero below diagonal)");
            }
    };
    std::vector<std::vector<int>> igens;
    for (const auto& m : gens) {
        validate(m);
        igens.emplace_back(m.begin(), m.end());
    }
    auto matmul = [dim, mod](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(a.size(), 0);
        for (int i = 0; i < dim; ++i)
            for (int k = i; k < dim; ++k) {
                const long long aik = a[static_cast<std::size_t>(i) * dim + k];
                if (!aik) continue;
                for (int j = k; j < dim; ++j) {
                    auto& cij = c[static_cast<std::size_t>(i) * dim + j];
                    cij = static_cast<int>((cij + aik * b[static_cast<std::size_t>(k) * dim + j]) % mod);
                }
            }
        return c;
    };
    std::vector<int> identity(static_cast<std::size_t>(dim) * dim, 0);
    for (int i = 0; i < dim; ++i) identity[static_cast<std::size_t>(i) * dim + i] = 1;
    std::unordered_map<std::vector<int>, int, detail::IntVecHash> index_of;
    auto elems = detail::bfs_closure(identity, igens, matmul, lim.order_cap, index_of);
    const int n = static_cast<int>(elems.size());
    FiniteGroup g;
    g.order = n;
    g.construction = "matrix-closure dim=" + std::to_string(dim) + " mod=" + std::to_string(mod) + " gens=" + std::to_string(gens.size());
    g.labels.resize(n);
    for (int i = 0; i < n; ++i) {
        std::string l = "u(";
        bool first = true;
        for (int r = 0; r < dim; ++r)
            for (int c = r + 1; c < dim; ++c) {
                if (!first) l += ',';
                l += std::to_string(elems[i][static_cast<std::size_t>(r) * dim + c]);
                first = false;
            }
        g.labels[i] = l + ")";
    }
    g.mul.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g.mul[static_cast<std::size_t>(i) * n + j] = static_cast<std::int32_t>(index_of.at(matmul(elems[i], elems[j])));
    detail::finish_inverses(g);
    for (const auto& gn : igens) g.generators.push_back(index_of.at(gn));
    return g;
}

// Upper unitriangular n x n matrices over F_p, generated by the superdiagonal
// transvections. Order p^(n(n-1)/2), nilpotency class n-1.
inline FiniteGroup unitriangular_group(int n, long long p, const Limits& lim = {}) {
    if (n < 1) fail(Errc::invalid_parameter, "unitriangular needs n >= 1");
    if (!is_prime(p)) fail(Errc::invalid_parameter, "unitriangular requires prime p, got " + std::to_string(p));
    long long expected = 1;
    for (int i = 0; i < n * (n - 1) / 2; ++i) {
        expected *= p;
        check_order_cap(expected, lim, "unitriangular group");
    }
    std::vector<std::vector<long long>> gens;
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<long long> m(static_cast<std::size_t>(n) * n, 0);
        for (int d = 0; d < n; ++d) m[static_cast<std::size_t>(d) * n + d] = 1;
        m[static_cast<std::size_t>(i) * n + (i + 1)] = 1;
        gens.push_back(std::move(m));
    }
    FiniteGroup g = group_from_matrix_generators(n, p, gens, lim);
    if (g.order != expected)
        fail(Errc::invalid_parameter, "unitriangular closure produced unexpected order");
    g.construction = "unitriangular n=" + std::to_string(n) + " p=" + std::to_string(p);
    return g;
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const Limits& lim = {}) {
    const long long n = static_cast<long long>(a.order) * b.order;
    check_order_cap(n, lim, "direct product");
    FiniteGroup g;
    g.order = static_cast<int>(n);
    g.construction = "product(" + a.construction + "; " + b.construction + ")";
    g.labels.resize(n);
    g.mul.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < g.order; ++i) {
        const int ia = i / b.order, ib = i % b.order;
        g.labels[i] = "(" + a.labels[ia] + "," + b.labels[ib] + ")";
        for (int j = 0; j < g.order; ++j) {
            const int ja = j / b.order, jb = j % b.order;
            g.mul[static_cast<std::size_t>(i) * g.order + j] =
                static_cast<std::int32_t>(a.product(ia, ja) * b.order + b.product(ib, jb));
        }
    }
    detail::finish_inverses(g);
    for (int x : a.generators) g.generators.push_back(x * b.order);
    for (int y : b.generators) g.generators.push_back(y);
    return g;
}

// Extracts a subgroup (given as a sorted element list) as a standalone group.
// Mapping tables between parent and subgroup indices are filled on request.
inline FiniteGroup subgroup_as_group(const FiniteGroup& g, const std::vector<int>& members,
                                     std::vector<std::int32_t>* to_sub = nullptr,
                                     std::vector<std::int32_t>* to_parent = nullptr) {
    const int m = static_cast<int>(members.size());
    std::vector<std::int32_t> back(g.order, -1);
    for (int i = 0; i < m; ++i) back[static_cast<std::size_t>(members[i])] = static_cast<std::int32_t>(i);
    if (m == 0 || back[static_cast<std::size_t>(g.identity)] != 0)
        fail(Errc::invalid_parameter, "subgroup element list must start with the identity");
    FiniteGroup s;
    s.order = m;
    s.construction = "subgroup(order=" + std::to_string(m) + ") of " + g.construction;
    s.labels.resize(m);
    s.mul.resize(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i) {
        s.labels[i] = g.labels[static_cast<std::size_t>(members[i])];
        for (int j = 0; j < m; ++j) {
            const std::int32_t t = back[static_cast<std::size_t>(g.product(members[i], members[j]))];
            if (t < 0) fail(Errc::invalid_parameter, "element set not closed under multiplication");
            s.mul[static_cast<std::size_t>(i) * m + j] = t;
        }
    }
    detail::finish_inverses(s);
    if (to_sub) *to_sub = std::move(back);
    if (to_parent) to_parent->assign(members.begin(), members.end());
    return s;
}

// ---------------------------------------------------------------------------
// table validation

struct ValidationReport {
    bool latin = false;
    bool identity_ok = false;
    bool inverses_ok = false;
    bool assoc_ok = false;
    bool assoc_full = false; // true when associativity was checked on all triples
    std::string detail;

    bool ok() const { return latin && identity_ok && inverses_ok && assoc_ok; }
};

// Checks the group-table invariants. Associativity is audited on all triples
// up to assoc_full_cap, and on a fixed pseudorandom sample above it.
inline ValidationReport validate_group(const FiniteGroup& g, int assoc_full_cap = 512) {
    ValidationReport rep;
    const int n = g.order;
    if (n <= 0 || g.mul.size() != static_cast<std::size_t>(n) * n) {
        rep.detail = "malformed table";
        return rep;
    }

    std::vector<int> stamp_row(n, -1), stamp_col(n, -1);
    rep.latin = true;
    for (int x = 0; x < n && rep.latin; ++x) {
        const std::int32_t* r = g.row(x);
        for (int y = 0; y < n; ++y) {
            const int v = r[y];
            if (v < 0 || v >= n || stamp_row[v] == x) {
                rep.latin = false;
                rep.detail = "row " + std::to_string(x) + " is not a permutation";
                break;
            }
            stamp_row[v] = x;
        }
    }
    for (int y = 0; y < n && rep.latin; ++y) {
        for (int x = 0; x < n; ++x) {
            const int v = g.product(x, y);
            if (stamp_col[v] == y) {
                rep.latin = false;
                rep.detail = "column " + std::to_string(y) + " is not a permutation";
                break;
            }
            stamp_col[v] = y;
        }
    }

    rep.identity_ok = true;
    for (int x = 0; x < n; ++x) {
        if (g.product(g.identity, x) != x || g.product(x, g.identity) != x) {
            rep.identity_ok = false;
            rep.detail = "identity fails at element " + std::to_string(x);
            break;
        }
    }

    rep.inverses_ok = g.inv.size() == static_cast<std::size_t>(n);
    for (int x = 0; rep.inverses_ok && x < n; ++x) {
        const int ix = g.inv[x];
        if (ix < 0 || ix >= n || g.product(x, ix) != g.identity || g.product(ix, x) != g.identity) {
            rep.inverses_ok = false;
            rep.detail = "inverse fails at element " + std::to_string(x);
        }
    }

    rep.assoc_ok = true;
    if (n <= assoc_full_cap) {
        rep.assoc_full = true;
        for (int x = 0; x < n && rep.assoc_ok; ++x)
            for (int y = 0; y < n && rep.assoc_ok; ++y) {
                const int xy = g.product(x, y);
                const std::int32_t* row_y = g.row(y);
                const std::int32_t* row_xy = g.row(xy);
                for (int z = 0; z < n; ++z) {
                    if (row_xy[z] != g.product(x, row_y[z])) {
                        rep.assoc_ok = false;
                        rep.detail = "associativity fails";
                        break;
                    }
                }
            }
    } else {
        std::uint64_t s = 0x243f6a8885a308d3ull; // fixed seed: deterministic sample
        auto next = [&s]() {
            s += 0x9e3779b97f4a7c15ull;
            std::uint64_t z = s;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            return z ^ (z >> 31);
        };
        for (int t = 0; t < 1000000 && rep.assoc_ok; ++t) {
            const int x = static_cast<int>(next() % static_cast<std::uint64_t>(n));
            const int y = static_cast<int>(next() % static_cast<std::uint64_t>(n));
            const int z = static_cast<int>(next() % static_cast<std::uint64_t>(n));
            if (g.product(g.product(x, y), z) != g.product(x, g.product(y, z))) {
                rep.assoc_ok = false;
                rep.detail = "associativity fails (sampled)";
            }
        }
    }
    return rep;
}

} // namespace gev

#endif // GEV_GROUP_HPP
