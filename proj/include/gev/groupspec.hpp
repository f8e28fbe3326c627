#ifndef GEV_GROUPSPEC_HPP
#define GEV_GROUPSPEC_HPP

#include <string>
#include <string_view>
#include <vector>

#include "gev/error.hpp"
#include "gev/group.hpp"

namespace gev {

// Parsed form of the group mini-language:
//   cyclic n=12 | abelian 9,3 | symmetric n=5 | heisenberg p=3 | modular p=3
//   | unitriangular n=4 p=3 | product: <spec> ; <spec> | perm gens=(1 2)(3 4),(1 2 3 4 5)
// Whitespace-insensitive, '#' starts a comment. Sub-specs may be
// parenthesized, which is how a product nests inside another product.
struct GroupSpec {
    enum class Family { cyclic, abelian, symmetric, heisenberg, modular, unitriangular, product, perm_gens, matrix_gens };
    Family family = Family::cyclic;
    std::vector<long long> params;                    // n / p / abelian factors / perm npoints / matrix (dim, mod)
    std::vector<std::vector<int>> perm_images;        // 0-based image vectors
    std::vector<std::vector<long long>> matrix_entries; // row-major dim x dim
    std::vector<GroupSpec> factors;                   // product
    std::string text;
};

namespace detail {

class SpecParser {
public:
    explicit SpecParser(std::string_view in) : in_(in) {}

    GroupSpec parse() {
        GroupSpec s = parse_spec();
        skip_ws();
        if (!at_end()) err(Errc::syntax_error, "trailing input");
        s.text = std::string(in_);
        return s;
    }

private:
    std::string_view in_;
    std::size_t pos_ = 0;

    [[noreturn]] void err(Errc code, const std::string& msg) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < in_.size(); ++i) {
            if (in_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        fail(code, "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg);
    }

    bool at_end() const { return pos_ >= in_.size(); }
    char peek() const { return at_end() ? '\0' : in_[pos_]; }

    void skip_ws() {
        while (!at_end()) {
            const char c = in_[pos_];
            if (c == '#') {
                while (!at_end() && in_[pos_] != '\n') ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                ++pos_;
            } else {
                break;
            }
        }
    }

    bool consume(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!consume(c)) err(Errc::syntax_error, std::string("expected '") + c + "' " + what);
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (!at_end() && ((in_[pos_] >= 'a' && in_[pos_] <= 'z') || in_[pos_] == '-')) ++pos_;
        if (pos_ == start) err(Errc::syntax_error, "expected a name");
        return std::string(in_.substr(start, pos_ - start));
    }

    long long integer() {
        skip_ws();
        std::size_t start = pos_;
        while (!at_end() && in_[pos_] >= '0' && in_[pos_] <= '9') ++pos_;
        if (pos_ == start) err(Errc::syntax_error, "expected an integer");
        long long v = 0;
        for (std::size_t i = start; i < pos_; ++i) {
            v = v * 10 + (in_[i] - '0');
            if (v > 1000000000000LL) err(Errc::bad_parameter, "integer too large");
        }
        return v;
    }

    long long keyed_int(const char* key) {
        const std::string k = ident();
        if (k != key) err(Errc::syntax_error, std::string("expected '") + key + "='");
        expect('=', "after parameter name");
        return integer();
    }

    long long require_prime(long long p) {
        if (!is_prime(p)) err(Errc::bad_parameter, std::to_string(p) + " is not prime");
        return p;
    }

    GroupSpec parse_spec() {
        skip_ws();
        if (consume('(')) {
            GroupSpec inner = parse_spec();
            expect(')', "to close the sub-spec");
            return inner;
        }
        const std::size_t family_pos = pos_;
        const std::string fam = ident();
        GroupSpec s;
        if (fam == "cyclic") {
            s.family = GroupSpec::Family::cyclic;
            s.params = {keyed_int("n")};
            if (s.params[0] < 1) err(Errc::bad_parameter, "cyclic needs n >= 1");
        } else if (fam == "symmetric") {
            s.family = GroupSpec::Family::symmetric;
            s.params = {keyed_int("n")};
            if (s.params[0] < 1) err(Errc::bad_parameter, "symmetric needs n >= 1");
        } else if (fam == "heisenberg") {
            s.family = GroupSpec::Family::heisenberg;
            s.params = {require_prime(keyed_int("p"))};
        } else if (fam == "modular") {
            s.family = GroupSpec::Family::modular;
            s.params = {require_prime(keyed_int("p"))};
        } else if (fam == "unitriangular") {
            s.family = GroupSpec::Family::unitriangular;
            long long n = -1, p = -1;
            for (int i = 0; i < 2; ++i) {
                const std::string k = ident();
                expect('=', "after parameter name");
                const long long v = integer();
                if (k == "n")
                    n = v;
                else if (k == "p")
                    p = v;
                else
                    err(Errc::syntax_error, "unitriangular takes n= and p=");
            }
            if (n < 1) err(Errc::bad_parameter, "unitriangular needs n >= 1");
            require_prime(p);
            s.params = {n, p};
        } else if (fam == "abelian") {
            s.family = GroupSpec::Family::abelian;
            s.params.push_back(integer());
            while (consume(',')) s.params.push_back(integer());
            for (long long m : s.params)
                if (m < 1) err(Errc::bad_parameter, "abelian factors must be >= 1");
        } else if (fam == "product") {
            s.family = GroupSpec::Family::product;
            expect(':', "after 'product'");
            s.factors.push_back(parse_spec());
            while (consume(';')) s.factors.push_back(parse_spec());
            if (s.factors.size() < 2) err(Errc::syntax_error, "product needs at least two factors");
        } else if (fam == "perm") {
            s.family = GroupSpec::Family::perm_gens;
            const std::string k = ident();
            if (k != "gens") err(Errc::syntax_error, "expected 'gens='");
            expect('=', "after 'gens'");
            std::vector<std::vector<std::vector<int>>> gens_cycles;
            int npoints = 1;
            do {
                std::vector<std::vector<int>> cycles;
                skip_ws();
                if (peek() != '(') err(Errc::syntax_error, "expected '(' to open a cycle");
                while (consume('(')) {
                    std::vector<int> cyc;
                    while (true) {
                        skip_ws();
                        if (peek() == ')') break;
                        const long long pt = integer();
                        if (pt < 1 || pt > 100000) err(Errc::malformed_generator, "cycle point out of range");
                        cyc.push_back(static_cast<int>(pt));
                        npoints = std::max(npoints, static_cast<int>(pt));
                    }
                    expect(')', "to close the cycle");
                    if (cyc.empty()) err(Errc::malformed_generator, "empty cycle");
                    for (std::size_t i = 0; i < cyc.size(); ++i)
                        for (std::size_t j = i + 1; j < cyc.size(); ++j)
                            if (cyc[i] == cyc[j]) err(Errc::malformed_generator, "repeated point in a cycle");
                    cycles.push_back(std::move(cyc));
                    skip_ws();
                }
                gens_cycles.push_back(std::move(cycles));
            } while (consume(','));
            s.params = {npoints};
            for (const auto& cycles : gens_cycles) {
                std::vector<int> img(static_cast<std::size_t>(npoints));
                for (int i = 0; i < npoints; ++i) img[static_cast<std::size_t>(i)] = i;
                for (const auto& cyc : cycles) {
                    std::vector<int> step(static_cast<std::size_t>(npoints));
                    for (int i = 0; i < npoints; ++i) step[static_cast<std::size_t>(i)] = i;
                    for (std::size_t i = 0; i < cyc.size(); ++i)
                        step[static_cast<std::size_t>(cyc[i] - 1)] = cyc[(i + 1) % cyc.size()] - 1;
                    img = compose_perms(img, step);
                }
                s.perm_images.push_back(std::move(img));
            }
        } else {
            pos_ = family_pos;
            err(Errc::unknown_family, "unknown group family '" + fam + "'");
        }
        return s;
    }
};

} // namespace detail

inline GroupSpec parse_group_spec(std::string_view text) {
    return detail::SpecParser(text).parse();
}

inline FiniteGroup build_group(const GroupSpec& s, const Limits& lim = {}) {
    switch (s.family) {
        case GroupSpec::Family::cyclic:
            return cyclic_group(s.params.at(0), lim);
        case GroupSpec::Family::abelian:
            return abelian_group(s.params, lim);
        case GroupSpec::Family::symmetric:
            return symmetric_group(static_cast<int>(s.params.at(0)), lim);
        case GroupSpec::Family::heisenberg:
            return heisenberg_group(s.params.at(0), lim);
        case GroupSpec::Family::modular:
            return modular_group(s.params.at(0), lim);
        case GroupSpec::Family::unitriangular:
            return unitriangular_group(static_cast<int>(s.params.at(0)), s.params.at(1), lim);
        case GroupSpec::Family::perm_gens:
            return group_from_perm_generators(static_cast<int>(s.params.at(0)), s.perm_images, lim);
        case GroupSpec::Family::matrix_gens:
            return group_from_matrix_generators(static_cast<int>(s.params.at(0)), s.params.at(1), s.matrix_entries, lim);
        case GroupSpec::Family::product: {
            FiniteGroup acc = build_group(s.factors.at(0), lim);
            for (std::size_t i = 1; i < s.factors.size(); ++i) acc = direct_product(acc, build_group(s.factors[i], lim), lim);
            return acc;
        }
    }
    fail(Errc::unknown_family, "unhandled family");
}

inline FiniteGroup build_group(std::string_view text, const Limits& lim = {}) {
    return build_group(parse_group_spec(text), lim);
}

} // namespace gev

#endif // GEV_GROUPSPEC_HPP
