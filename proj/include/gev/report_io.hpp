#ifndef GEV_REPORT_IO_HPP
#define GEV_REPORT_IO_HPP

#include <array>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "gev/error.hpp"

namespace gev {

// Plain-text report rows and their parsers. Every format the CLI writes can
// be read back with the matching parse_* function; the test suite relies on
// that round trip.

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t p = s.find(sep, start);
        if (p == std::string::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, p - start));
        start = p + 1;
    }
    return out;
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::string kv(const std::string& tok, const std::string& key) {
    if (tok.size() <= key.size() + 1 || tok.compare(0, key.size(), key) != 0 || tok[key.size()] != '=')
        fail(Errc::syntax_error, "expected '" + key + "=...' in report token '" + tok + "'");
    return tok.substr(key.size() + 1);
}

inline long long to_ll(const std::string& s) {
    try {
        return std::stoll(s);
    } catch (...) {
        fail(Errc::syntax_error, "expected an integer, got '" + s + "'");
    }
}

inline std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

} // namespace detail

// info: order=27 class=2 pgroup=3 subgroups=10
struct InfoLine {
    long long order = 0;
    std::optional<int> cls;  // empty: not nilpotent
    int pgroup = 0;          // 0: not a p-group
    long long subgroups = 0;
};

inline std::string format_info(const InfoLine& l) {
    return "order=" + std::to_string(l.order) +
           " class=" + (l.cls ? std::to_string(*l.cls) : std::string("none")) +
           " pgroup=" + (l.pgroup ? std::to_string(l.pgroup) : std::string("no")) +
           " subgroups=" + std::to_string(l.subgroups);
}

inline InfoLine parse_info_line(const std::string& s) {
    const auto toks = detail::split_ws(s);
    if (toks.size() != 4) fail(Errc::syntax_error, "info line needs 4 fields");
    InfoLine l;
    l.order = detail::to_ll(detail::kv(toks[0], "order"));
    const std::string c = detail::kv(toks[1], "class");
    if (c != "none") l.cls = static_cast<int>(detail::to_ll(c));
    const std::string p = detail::kv(toks[2], "pgroup");
    l.pgroup = p == "no" ? 0 : static_cast<int>(detail::to_ll(p));
    l.subgroups = detail::to_ll(detail::kv(toks[3], "subgroups"));
    return l;
}

// subgroups row: id <tab> order <tab> index <tab> generators-hint
struct SubgroupRow {
    int id = 0;
    long long order = 0;
    long long index = 0;
    std::vector<int> gens;
};

inline std::string format_subgroup_row(const SubgroupRow& r) {
    std::string g = "<";
    for (std::size_t i = 0; i < r.gens.size(); ++i) g += (i ? "," : "") + std::to_string(r.gens[i]);
    g += ">";
    return std::to_string(r.id) + "\t" + std::to_string(r.order) + "\t" + std::to_string(r.index) + "\t" + g;
}

inline SubgroupRow parse_subgroup_row(const std::string& s) {
    const auto toks = detail::split(s, '\t');
    if (toks.size() != 4) fail(Errc::syntax_error, "subgroup row needs 4 tab-separated fields");
    SubgroupRow r;
    r.id = static_cast<int>(detail::to_ll(toks[0]));
    r.order = detail::to_ll(toks[1]);
    r.index = detail::to_ll(toks[2]);
    const std::string& g = toks[3];
    if (g.size() < 2 || g.front() != '<' || g.back() != '>') fail(Errc::syntax_error, "bad generators-hint");
    if (g.size() > 2)
        for (const auto& part : detail::split(g.substr(1, g.size() - 2), ','))
            r.gens.push_back(static_cast<int>(detail::to_ll(part)));
    return r;
}

// lattice edge row: parent <tab> child
struct LatticeEdge {
    int parent = 0;
    int child = 0;
};

inline std::string format_lattice_edge(const LatticeEdge& e) {
    return std::to_string(e.parent) + "\t" + std::to_string(e.child);
}

inline LatticeEdge parse_lattice_edge(const std::string& s) {
    const auto toks = detail::split(s, '\t');
    if (toks.size() != 2) fail(Errc::syntax_error, "lattice edge needs 2 fields");
    return {static_cast<int>(detail::to_ll(toks[0])), static_cast<int>(detail::to_ll(toks[1]))};
}

// entropy row: mask <tab> index <tab> log2 (6 decimals)
struct EntropyRow {
    unsigned mask = 0;
    std::uint64_t index = 0;
    std::string log2;
};

inline std::string format_entropy_row(const EntropyRow& r) {
    return std::to_string(r.mask) + "\t" + std::to_string(r.index) + "\t" + r.log2;
}

inline EntropyRow parse_entropy_row(const std::string& s) {
    const auto toks = detail::split(s, '\t');
    if (toks.size() != 3) fail(Errc::syntax_error, "entropy row needs 3 fields");
    EntropyRow r;
    r.mask = static_cast<unsigned>(detail::to_ll(toks[0]));
    r.index = static_cast<std::uint64_t>(detail::to_ll(toks[1]));
    r.log2 = toks[2];
    return r;
}

// ingleton line: a b c d <tab> LHS <tab> RHS <tab> OK|VIOLATION <tab> slack
struct IngletonLine {
    std::array<int, 4> q{};
    std::string lhs, rhs;
    bool ok = false;
    std::string slack;
};

inline std::string format_ingleton_line(const IngletonLine& l) {
    return std::to_string(l.q[0]) + " " + std::to_string(l.q[1]) + " " + std::to_string(l.q[2]) + " " +
           std::to_string(l.q[3]) + "\t" + l.lhs + "\t" + l.rhs + "\t" + (l.ok ? "OK" : "VIOLATION") + "\t" + l.slack;
}

inline IngletonLine parse_ingleton_line(const std::string& s) {
    const auto toks = detail::split(s, '\t');
    if (toks.size() != 5) fail(Errc::syntax_error, "ingleton line needs 5 tab-separated fields");
    const auto ids = detail::split_ws(toks[0]);
    if (ids.size() != 4) fail(Errc::syntax_error, "ingleton line needs 4 ids");
    IngletonLine l;
    for (int i = 0; i < 4; ++i) l.q[static_cast<std::size_t>(i)] = static_cast<int>(detail::to_ll(ids[static_cast<std::size_t>(i)]));
    l.lhs = toks[1];
    l.rhs = toks[2];
    if (toks[3] == "OK")
        l.ok = true;
    else if (toks[3] == "VIOLATION")
        l.ok = false;
    else
        fail(Errc::syntax_error, "verdict must be OK or VIOLATION");
    l.slack = toks[4];
    return l;
}

// scan summary: checked=N violations=M min_slack=p/q [time=1.234s]
struct ScanSummary {
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::string min_slack;
    std::optional<double> time_seconds;
};

inline std::string format_scan_summary(const ScanSummary& s) {
    std::string out = "checked=" + std::to_string(s.checked) + " violations=" + std::to_string(s.violations) +
                      " min_slack=" + s.min_slack;
    if (s.time_seconds) {
        char buf[48];
        std::snprintf(buf, sizeof buf, " time=%.3fs", *s.time_seconds);
        out += buf;
    }
    return out;
}

inline ScanSummary parse_scan_summary(const std::string& s) {
    const auto toks = detail::split_ws(s);
    if (toks.size() != 3 && toks.size() != 4) fail(Errc::syntax_error, "scan summary needs 3 or 4 fields");
    ScanSummary r;
    r.checked = static_cast<std::uint64_t>(detail::to_ll(detail::kv(toks[0], "checked")));
    r.violations = static_cast<std::uint64_t>(detail::to_ll(detail::kv(toks[1], "violations")));
    r.min_slack = detail::kv(toks[2], "min_slack");
    if (toks.size() == 4) {
        std::string t = detail::kv(toks[3], "time");
        if (t.empty() || t.back() != 's') fail(Errc::syntax_error, "time must end in 's'");
        t.pop_back();
        r.time_seconds = std::stod(t);
    }
    return r;
}

// scan violation row:
//   a b c d <tab> lhs <tab> rhs <tab> slack <tab> o1 o2 o34 o123 o124 o12 o13 o14 o23 o24
struct ViolationRow {
    std::array<int, 4> q{};
    std::string lhs, rhs, slack;
    std::array<std::uint64_t, 10> orders{};
};

inline std::string format_violation_row(const ViolationRow& v) {
    std::string out = std::to_string(v.q[0]) + " " + std::to_string(v.q[1]) + " " + std::to_string(v.q[2]) + " " +
                      std::to_string(v.q[3]) + "\t" + v.lhs + "\t" + v.rhs + "\t" + v.slack + "\t";
    for (int i = 0; i < 10; ++i) out += (i ? " " : "") + std::to_string(v.orders[static_cast<std::size_t>(i)]);
    return out;
}

inline ViolationRow parse_violation_row(const std::string& s) {
    const auto toks = detail::split(s, '\t');
    if (toks.size() != 5) fail(Errc::syntax_error, "violation row needs 5 tab-separated fields");
    ViolationRow v;
    const auto ids = detail::split_ws(toks[0]);
    if (ids.size() != 4) fail(Errc::syntax_error, "violation row needs 4 ids");
    for (int i = 0; i < 4; ++i) v.q[static_cast<std::size_t>(i)] = static_cast<int>(detail::to_ll(ids[static_cast<std::size_t>(i)]));
    v.lhs = toks[1];
    v.rhs = toks[2];
    v.slack = toks[3];
    const auto os = detail::split_ws(toks[4]);
    if (os.size() != 10) fail(Errc::syntax_error, "violation row needs 10 order values");
    for (int i = 0; i < 10; ++i) v.orders[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>(detail::to_ll(os[static_cast<std::size_t>(i)]));
    return v;
}

// lazard line: class=2 p=3 abelian=OK closure=OK indices=OK profile=(1:1,3:8,9:18)
struct LazardLine {
    int cls = 0;
    int p = 0;
    bool abelian = false, closure = false, indices = false;
    std::string profile; // (order:count,...)
};

inline std::string format_lazard_line(const LazardLine& l) {
    auto okfail = [](bool b) { return b ? "OK" : "FAIL"; };
    return "class=" + std::to_string(l.cls) + " p=" + std::to_string(l.p) + " abelian=" + okfail(l.abelian) +
           " closure=" + okfail(l.closure) + " indices=" + okfail(l.indices) + " profile=" + l.profile;
}

inline LazardLine parse_lazard_line(const std::string& s) {
    const auto toks = detail::split_ws(s);
    if (toks.size() != 6) fail(Errc::syntax_error, "lazard line needs 6 fields");
    auto flag = [](const std::string& v) {
        if (v == "OK") return true;
        if (v == "FAIL") return false;
        fail(Errc::syntax_error, "flag must be OK or FAIL");
    };
    LazardLine l;
    l.cls = static_cast<int>(detail::to_ll(detail::kv(toks[0], "class")));
    l.p = static_cast<int>(detail::to_ll(detail::kv(toks[1], "p")));
    l.abelian = flag(detail::kv(toks[2], "abelian"));
    l.closure = flag(detail::kv(toks[3], "closure"));
    l.indices = flag(detail::kv(toks[4], "indices"));
    l.profile = detail::kv(toks[5], "profile");
    return l;
}

// sylow part row: p <tab> order <tab> class <tab> lazard-ok(yes|no)
struct SylowRow {
    int p = 0;
    long long order = 0;
    int cls = 0;
    bool lazard_ok = false;
};

inline std::string format_sylow_row(const SylowRow& r) {
    return std::to_string(r.p) + "\t" + std::to_string(r.order) + "\t" + std::to_string(r.cls) + "\t" +
           (r.lazard_ok ? "yes" : "no");
}

inline SylowRow parse_sylow_row(const std::string& s) {
    const auto toks = detail::split(s, '\t');
    if (toks.size() != 4) fail(Errc::syntax_error, "sylow row needs 4 fields");
    SylowRow r;
    r.p = static_cast<int>(detail::to_ll(toks[0]));
    r.order = detail::to_ll(toks[1]);
    r.cls = static_cast<int>(detail::to_ll(toks[2]));
    if (toks[3] == "yes")
        r.lazard_ok = true;
    else if (toks[3] == "no")
        r.lazard_ok = false;
    else
        fail(Errc::syntax_error, "lazard-ok must be yes or no");
    return r;
}

} // namespace gev

#endif // GEV_REPORT_IO_HPP
