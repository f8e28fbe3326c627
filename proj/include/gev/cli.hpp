#ifndef GEV_CLI_HPP
#define GEV_CLI_HPP

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "gev/entropy.hpp"
#include "gev/error.hpp"
#include "gev/group.hpp"
#include "gev/groupspec.hpp"
#include "gev/lazard.hpp"
#include "gev/nilpotent.hpp"
#include "gev/report_io.hpp"
#include "gev/scan.hpp"
#include "gev/subgroups.hpp"

namespace gev {

// Exit codes: 0 success; 1 error; 2 scan found violations; 3 certificate
// failure (lazard / nilpotent-verify).
struct Command {
    enum class Verb { info, subgroups, lattice, entropy, ingleton, scan, lazard, sylow, nilpotent_verify, audit };
    Verb verb = Verb::info;
    std::string spec_text;
    std::vector<int> ids;
    bool dot = false;
    bool distinct_only = false;
    int max_violations = 1000;
    int threads = 1;
    bool json = false;
    bool no_timing = false;
    Limits limits;
};

namespace detail {

using nlohmann::json;

inline std::string profile_string(const std::map<int, long long>& profile) {
    std::string s = "(";
    bool first = true;
    for (const auto& [ord, count] : profile) {
        if (!first) s += ",";
        s += std::to_string(ord) + ":" + std::to_string(count);
        first = false;
    }
    return s + ")";
}

inline int run_info(const FiniteGroup& g, const Command& cmd, std::ostream& out) {
    const SubgroupTable t = enumerate_subgroups(g, cmd.limits);
    const CentralSeries series = lower_central_series(g);
    InfoLine l;
    l.order = g.order;
    l.cls = series.cls;
    l.pgroup = p_group_prime(g);
    l.subgroups = t.size();
    if (cmd.json) {
        json j;
        j["order"] = l.order;
        if (l.cls)
            j["class"] = *l.cls;
        else
            j["class"] = nullptr;
        if (l.pgroup)
            j["pgroup"] = l.pgroup;
        else
            j["pgroup"] = nullptr;
        j["subgroups"] = l.subgroups;
        out << j.dump() << "\n";
    } else {
        out << format_info(l) << "\n";
    }
    return 0;
}

inline int run_subgroups(const FiniteGroup& g, const Command& cmd, std::ostream& out) {
    const SubgroupTable t = enumerate_subgroups(g, cmd.limits);
    for (int id = 0; id < t.size(); ++id) {
        SubgroupRow r;
        r.id = id;
        r.order = t[id].order;
        r.index = g.order / t[id].order;
        r.gens = generator_hint(g, t[id].members);
        if (cmd.json) {
            json j;
            j["id"] = r.id;
            j["order"] = r.order;
            j["index"] = r.index;
            j["gens"] = r.gens;
            out << j.dump() << "\n";
        } else {
            out << format_subgroup_row(r) << "\n";
        }
    }
    return 0;
}

inline int run_lattice(const FiniteGroup& g, const Command& cmd, std::ostream& out) {
    const SubgroupTable t = enumerate_subgroups(g, cmd.limits);
    const auto edges = inclusion_edges(t);
    for (const auto& [parent, child] : edges) {
        if (cmd.json) {
            json j;
            j["parent"] = parent;
            j["child"] = child;
            out << j.dump() << "\n";
        } else {
            out << format_lattice_edge({parent, child}) << "\n";
        }
    }
    if (cmd.dot && !cmd.json) {
        out << "digraph lattice {\n";
        for (int id = 0; id < t.size(); ++id)
            out << "  s" << id << " [label=\"#" << id << " |" << t[id].order << "|\"];\n";
        for (const auto& [parent, child] : edges) out << "  s" << parent << " -> s" << child << ";\n";
        out << "}\n";
    }
    return 0;
}

inline int run_entropy(const FiniteGroup& g, const Command& cmd, std::ostream& out) {
    if (cmd.ids.empty()) fail(Errc::invalid_parameter, "entropy needs --ids");
    const SubgroupTable t = enumerate_subgroups(g, cmd.limits);
    const EntropyVector v = entropy_vector(g, t, cmd.ids);
    for (unsigned mask = 1; mask <= v.full_mask(); ++mask) {
        EntropyRow r;
        r.mask = mask;
        r.index = v.index_of(mask);
        r.log2 = fixed6(v.log2_of(mask));
        if (cmd.json) {
            json j;
            j["mask"] = r.mask;
            j["index"] = r.index;
            j["log2"] = v.log2_of(mask);
            out << j.dump() << "\n";
        } else {
            out << format_entropy_row(r) << "\n";
        }
    }
    return 0;
}

inline int run_ingleton(const FiniteGroup& g, const Command& cmd, std::ostream& out) {
    if (cmd.ids.size() != 4) fail(Errc::invalid_parameter, "ingleton needs exactly 4 ids");
    const SubgroupTable t = enumerate_subgroups(g, cmd.limits);
    const IngletonReport rep = ingleton_check(t, {cmd.ids[0], cmd.ids[1], cmd.ids[2], cmd.ids[3]});
    if (cmd.json) {
        json j;
        j["quadruple"] = rep.quadruple;
        j["lhs"] = rep.lhs.str();
        j["rhs"] = rep.rhs.str();
        j["satisfied"] = rep.satisfied;
        j["slack"] = rep.slack.str();
        out << j.dump() << "\n";
    } else {
        IngletonLine l;
        l.q = rep.quadruple;
        l.lhs = rep.lhs.str();
        l.rhs = rep.rhs.str();
        l.ok = rep.satisfied;
        l.slack = rep.slack.str();
        out << format_ingleton_line(l) << "\n";
    }
    return 0;
}

inline int run_scan(const FiniteGroup& g, const Command& cmd, std::ostream& out) {
    const SubgroupTable t = enumerate_subgroups(g, cmd.limits);
    const IntersectionIndex idx = precompute_intersections(t, cmd.limits);
    ScanOptions opt;
    opt.threads = cmd.threads;
    opt.distinct_only = cmd.distinct_only;
    opt.max_violations = cmd.max_violations;
    const ScanResult res = ingleton_scan(g, t, idx, opt);

    if (cmd.json) {
        json j;
        j["checked"] = res.quadruples_checked;
        j["violations"] = res.violations_total;
        j["min_slack"] = res.min_slack.str();
        if (!cmd.no_timing) j["time"] = res.wall_seconds;
        out << j.dump() << "\n";
        for (const auto& v : res.violations) {
            json row;
            row["quadruple"] = v.quadruple;
            row["lhs"] = v.lhs.str();
            row["rhs"] = v.rhs.str();
            row["slack"] = v.slack.str();
            row["orders"] = v.orders;
            out << row.dump() << "\n";
        }
    } else {
        ScanSummary s;
        s.checked = res.quadruples_checked;
        s.violations = res.violations_total;
        s.min_slack = res.min_slack.str();
        if (!cmd.no_timing) s.time_seconds = res.wall_seconds;
        out << format_scan_summary(s) << "\n";
        for (const auto& v : res.violations) {
            ViolationRow row;
            row.q = v.quadruple;
            row.lhs = v.lhs.str();
            row.rhs = v.rhs.str();
            row.slack = v.slack.str();
            row.orders = v.orders;
            out << format_violation_row(row) << "\n";
        }
    }
    return res.violation_found() ? 2 : 0;
}

inline int run_lazard(const FiniteGroup& g, const Command& cmd, std::ostream& out) {
    const SubgroupTable t = enumerate_subgroups(g, cmd.limits);
    const AbelianCounterpart c = build_counterpart(g, t);
    const auto profile = order_profile(c.counterpart);
    if (cmd.json) {
        json j;
        j["class"] = c.source_class;
        j["p"] = c.prime;
        j["abelian"] = c.certificate.abelian_ok;
        j["closure"] = c.certificate.closure_ok;
        j["indices"] = c.certificate.indices_ok;
        json prof = json::object();
        for (const auto& [ord, count] : profile) prof[std::to_string(ord)] = count;
        j["profile"] = prof;
        if (!c.certificate.ok()) j["detail"] = c.certificate.detail;
        out << j.dump() << "\n";
    } else {
        LazardLine l;
        l.cls = c.source_class;
        l.p = c.prime;
        l.abelian = c.certificate.abelian_ok;
        l.closure = c.certificate.closure_ok;
        l.indices = c.certificate.indices_ok && c.certificate.intersections_ok;
        l.profile = profile_string(profile);
        out << format_lazard_line(l) << "\n";
    }
    return c.certificate.ok() ? 0 : 3;
}

inline int run_sylow(const FiniteGroup& g, const Command& cmd, std::ostream& out) {
    const SylowDecomposition dec = sylow_decomposition(g);
    bool all_ok = dec.direct_ok;
    for (const SylowPart& p : dec.parts) {
        const FiniteGroup part = subgroup_as_group(g, p.subgroup.members.to_indices());
        const int cls = lower_central_series(part).cls.value_or(0);
        SylowRow r;
        r.p = p.prime;
        r.order = p.subgroup.order;
        r.cls = cls;
        r.lazard_ok = cls <= 2 && (cls <= 1 || p.prime % 2 == 1);
        if (cmd.json) {
            json j;
            j["p"] = r.p;
            j["order"] = r.order;
            j["class"] = r.cls;
            j["lazard_ok"] = r.lazard_ok;
            out << j.dump() << "\n";
        } else {
            out << format_sylow_row(r) << "\n";
        }
    }
    if (cmd.json) {
        json j;
        j["direct"] = dec.direct_ok;
        if (!dec.direct_ok) j["detail"] = dec.detail;
        out << j.dump() << "\n";
    } else {
        out << "direct=" << (dec.direct_ok ? "OK" : "FAIL") << "\n";
    }
    return all_ok ? 0 : 1;
}

inline int run_nilpotent_verify(const FiniteGroup& g, const Command& cmd, std::ostream& out) {
    const SubgroupTable t = enumerate_subgroups(g, cmd.limits);
    const SylowContext ctx = make_sylow_context(g, cmd.limits);
    const AbelianCounterpart c = nilpotent_abelian_counterpart(ctx, t);
    const IntersectionIndex idx = precompute_intersections(t, cmd.limits);
    ScanOptions opt;
    opt.threads = cmd.threads;
    const ScanResult res = ingleton_scan(g, t, idx, opt);
    const SylowCrossScanResult cross = sylow_cross_scan(ctx, t, idx);

    const bool ok = ctx.dec.direct_ok && c.certificate.ok() && !res.violation_found() && cross.consistent();
    if (cmd.json) {
        json j;
        j["sylow"] = ctx.dec.direct_ok;
        j["counterpart"] = c.certificate.ok();
        j["checked"] = res.quadruples_checked;
        j["violations"] = res.violations_total;
        j["cross_checked"] = cross.checked;
        j["cross_inconsistencies"] = cross.inconsistencies;
        j["ok"] = ok;
        out << j.dump() << "\n";
    } else {
        out << "sylow=" << (ctx.dec.direct_ok ? "OK" : "FAIL") << " parts=" << ctx.dec.parts.size() << "\n";
        out << "counterpart=" << (c.certificate.ok() ? "OK" : "FAIL") << " class=" << c.source_class << "\n";
        out << "ingleton=" << (res.violation_found() ? "FAIL" : "OK") << " checked=" << res.quadruples_checked
            << " violations=" << res.violations_total << "\n";
        out << "cross=" << (cross.consistent() ? "OK" : "FAIL") << " checked=" << cross.checked
            << " inconsistencies=" << cross.inconsistencies << "\n";
    }
    return ok ? 0 : 3;
}

inline int run_audit(const FiniteGroup& g, const Command& cmd, std::ostream& out) {
    const ValidationReport v = validate_group(g);
    const SubgroupTable t = enumerate_subgroups(g, cmd.limits);

    bool lagrange = true;
    for (int id = 0; id < t.size(); ++id)
        if (g.order % t[id].order != 0) lagrange = false;

    bool intersections = true;
    for (int a = 0; a < t.size() && intersections; ++a)
        for (int b = a; b < t.size(); ++b)
            if (t.find(t[a].members & t[b].members) < 0) {
                intersections = false;
                break;
            }

    // Deterministic sampled Shannon audit over random subgroup tuples.
    std::uint64_t seed = 0x6a09e667f3bcc908ull;
    auto next = [&seed]() {
        seed += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = seed;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    const int tuples = 200;
    bool shannon = true;
    for (int i = 0; i < tuples && shannon; ++i) {
        const int n = 1 + static_cast<int>(next() % 4);
        std::vector<int> ids;
        for (int j = 0; j < n; ++j) ids.push_back(static_cast<int>(next() % static_cast<std::uint64_t>(t.size())));
        if (!shannon_audit(entropy_vector(g, t, ids)).ok) shannon = false;
    }

    auto okfail = [](bool b) { return b ? "OK" : "FAIL"; };
    const bool all = v.ok() && lagrange && intersections && shannon;
    if (cmd.json) {
        json j;
        j["latin"] = v.latin;
        j["identity"] = v.identity_ok;
        j["inverses"] = v.inverses_ok;
        j["assoc"] = v.assoc_ok;
        j["assoc_full"] = v.assoc_full;
        j["lagrange"] = lagrange;
        j["intersections"] = intersections;
        j["shannon"] = shannon;
        j["tuples"] = tuples;
        out << j.dump() << "\n";
    } else {
        out << "latin=" << okfail(v.latin) << " identity=" << okfail(v.identity_ok) << " inverses=" << okfail(v.inverses_ok)
            << " assoc=" << okfail(v.assoc_ok) << (v.assoc_full ? "(full)" : "(sampled)") << " lagrange=" << okfail(lagrange)
            << " intersections=" << okfail(intersections) << " shannon=" << okfail(shannon) << " tuples=" << tuples
            << "\n";
    }
    return all ? 0 : 1;
}

} // namespace detail

inline int run_command(const Command& cmd, std::ostream& out, std::ostream& err) {
    try {
        const FiniteGroup g = build_group(parse_group_spec(cmd.spec_text), cmd.limits);
        switch (cmd.verb) {
            case Command::Verb::info: return detail::run_info(g, cmd, out);
            case Command::Verb::subgroups: return detail::run_subgroups(g, cmd, out);
            case Command::Verb::lattice: return detail::run_lattice(g, cmd, out);
            case Command::Verb::entropy: return detail::run_entropy(g, cmd, out);
            case Command::Verb::ingleton: return detail::run_ingleton(g, cmd, out);
            case Command::Verb::scan: return detail::run_scan(g, cmd, out);
            case Command::Verb::lazard: return detail::run_lazard(g, cmd, out);
            case Command::Verb::sylow: return detail::run_sylow(g, cmd, out);
            case Command::Verb::nilpotent_verify: return detail::run_nilpotent_verify(g, cmd, out);
            case Command::Verb::audit: return detail::run_audit(g, cmd, out);
        }
        err << "error: unknown verb\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace gev

#endif // GEV_CLI_HPP
