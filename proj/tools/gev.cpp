// Command-line front end: parses a group spec, dispatches a subcommand, and
// writes the report to stdout (or --out). See README.md for formats and exit
// codes.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "gev/cli.hpp"

namespace {

std::vector<int> parse_id_list(const std::string& s) {
    std::vector<int> ids;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t p = s.find(',', start);
        const std::string tok = s.substr(start, p == std::string::npos ? std::string::npos : p - start);
        if (!tok.empty()) ids.push_back(std::stoi(tok));
        if (p == std::string::npos) break;
        start = p + 1;
    }
    return ids;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"group entropy vectors and the Ingleton inequality"};
    app.require_subcommand(1);

    gev::Command cmd;
    std::string ids_text;
    std::string out_path;
    long long order_cap = cmd.limits.order_cap;
    long long subgroup_cap = cmd.limits.subgroup_cap;

    app.add_option("--order-cap", order_cap, "maximum group order");
    app.add_option("--subgroup-cap", subgroup_cap, "maximum subgroup count");
    app.add_option("--threads", cmd.threads, "worker threads for scans");
    app.add_flag("--no-timing", cmd.no_timing, "omit wall-clock fields from reports");
    app.add_flag("--json", cmd.json, "emit JSON lines instead of TSV");
    app.add_option("--out", out_path, "write the report to a file instead of stdout");

    struct VerbDef {
        const char* name;
        gev::Command::Verb verb;
        const char* help;
        bool takes_ids;
    };
    const VerbDef verbs[] = {
        {"info", gev::Command::Verb::info, "order, nilpotency class, p-group flag, subgroup count", false},
        {"subgroups", gev::Command::Verb::subgroups, "enumerate all subgroups (TSV: id, order, index, generators)", false},
        {"lattice", gev::Command::Verb::lattice, "inclusion cover edges of the subgroup lattice", false},
        {"entropy", gev::Command::Verb::entropy, "entropy vector of the subgroups given by --ids", true},
        {"ingleton", gev::Command::Verb::ingleton, "Ingleton check of the quadruple given by --ids", true},
        {"scan", gev::Command::Verb::scan, "exhaustive Ingleton scan over all subgroup quadruples", false},
        {"lazard", gev::Command::Verb::lazard, "class-2 abelian counterpart with certificate", false},
        {"sylow", gev::Command::Verb::sylow, "Sylow decomposition of a nilpotent group", false},
        {"nilpotent-verify", gev::Command::Verb::nilpotent_verify, "counterpart + exhaustive Ingleton pipeline", false},
        {"audit", gev::Command::Verb::audit, "table and lattice property checks", false},
    };

    std::vector<std::pair<CLI::App*, gev::Command::Verb>> subs;
    for (const VerbDef& v : verbs) {
        CLI::App* sub = app.add_subcommand(v.name, v.help);
        sub->add_option("spec", cmd.spec_text, "group spec, e.g. \"heisenberg p=3\"")->required();
        if (v.takes_ids) sub->add_option("--ids", ids_text, "comma-separated subgroup ids")->required();
        if (v.verb == gev::Command::Verb::lattice) sub->add_flag("--dot", cmd.dot, "append a DOT block");
        if (v.verb == gev::Command::Verb::scan) {
            sub->add_flag("--distinct", cmd.distinct_only, "skip quadruples with repeated ids");
            sub->add_option("--max-violations", cmd.max_violations, "cap on reported violations");
        }
        subs.emplace_back(sub, v.verb);
    }

    CLI11_PARSE(app, argc, argv);

    for (const auto& [sub, verb] : subs)
        if (sub->parsed()) cmd.verb = verb;
    cmd.limits.order_cap = static_cast<int>(order_cap);
    cmd.limits.subgroup_cap = subgroup_cap;
    if (!ids_text.empty()) {
        try {
            cmd.ids = parse_id_list(ids_text);
        } catch (const std::exception&) {
            std::cerr << "error: bad --ids list\n";
            return 1;
        }
    }

    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "error: cannot open " << out_path << "\n";
            return 1;
        }
        return gev::run_command(cmd, f, std::cerr);
    }
    return gev::run_command(cmd, std::cout, std::cerr);
}
