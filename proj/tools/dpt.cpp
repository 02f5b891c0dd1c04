// dpt: invariants of doubly periodic tangles given as motifs on the flat
// torus.  Subcommands: validate, report, axis, transform, fuzz, catalog.
//
// Exit codes: 0 ok, 1 usage, 2 parse/validate/file, 3 inapplicable
// transform, 4 fuzz verdict failure.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "dpt/dpt.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitMove = 3;
constexpr int kExitFuzz = 4;

struct ExitWith {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ExitWith{kExitParse, "cannot read '" + path + "'"};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ExitWith{kExitParse, "cannot write '" + path + "'"};
    out << content;
}

dpt::TorusDiagram load(const std::string& path) {
    try {
        return dpt::parse(read_file(path));
    } catch (const dpt::ParseError& e) {
        throw ExitWith{kExitParse, std::string("parse error in '") + path + "': " + e.what()};
    }
}

dpt::TorusDiagram load_valid(const std::string& path) {
    dpt::TorusDiagram d = load(path);
    const dpt::ValidationReport rep = dpt::validate(d);
    if (!rep.ok) {
        std::ostringstream msg;
        msg << "'" << path << "' is not a valid motif:";
        for (const auto& v : rep.violations)
            msg << "\n  " << v.code << " [" << v.id << "]: " << v.message;
        throw ExitWith{kExitParse, msg.str()};
    }
    return d;
}

dpt::Policy parse_policy(const std::string& name) {
    if (name == "linking") return dpt::Policy::LinkingAdjacency;
    if (name == "crossing") return dpt::Policy::CrossingAdjacency;
    throw ExitWith{kExitUsage, "unknown policy '" + name + "' (expected linking or crossing)"};
}

dpt::Mat2 parse_mat(const std::string& text, const std::string& what) {
    std::istringstream in(text);
    dpt::Mat2 m;
    if (!(in >> m.a >> m.b >> m.c >> m.d))
        throw ExitWith{kExitUsage, what + " expects four integers \"a b c d\""};
    std::string rest;
    if (in >> rest) throw ExitWith{kExitUsage, what + " expects exactly four integers"};
    return m;
}

dpt::WrapVector parse_pair(const std::string& text, const std::string& what) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ExitWith{kExitUsage, what + " expects \"du,dv\""};
    try {
        return {std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw ExitWith{kExitUsage, what + " expects two integers \"du,dv\""};
    }
}

dpt::GaugeAssignment parse_gauge(const std::string& spec) {
    dpt::GaugeAssignment g;
    std::string normalized = spec;
    std::replace(normalized.begin(), normalized.end(), ';', ' ');
    std::stringstream in(normalized);
    std::string item;
    while (in >> item) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ExitWith{kExitUsage, "gauge spec entries look like \"crossing=du,dv\""};
        g.shift[item.substr(0, eq)] = parse_pair(item.substr(eq + 1), "gauge spec");
    }
    return g;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

dpt::MoveSite parse_move(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts.empty()) throw ExitWith{kExitUsage, "empty move spec"};
    dpt::MoveSite site;
    const std::string& kind = parts[0];
    if (kind == "R1+" || kind == "r1+") {
        if (parts.size() != 4)
            throw ExitWith{kExitUsage, "R1+ spec: R1+:<edge|loop>:<+1|-1>:<over|under>"};
        site.kind = dpt::MoveSite::Kind::R1Plus;
        site.a = parts[1];
        site.sign = parts[2] == "-1" ? -1 : +1;
        site.over_first = parts[3] != "under";
    } else if (kind == "R1-" || kind == "r1-") {
        if (parts.size() != 2) throw ExitWith{kExitUsage, "R1- spec: R1-:<crossing>"};
        site.kind = dpt::MoveSite::Kind::R1Minus;
        site.a = parts[1];
    } else if (kind == "R2+" || kind == "r2+") {
        if (parts.size() != 4)
            throw ExitWith{kExitUsage, "R2+ spec: R2+:<over edge|loop>:<under edge|loop>:<du,dv>"};
        site.kind = dpt::MoveSite::Kind::R2Plus;
        site.a = parts[1];
        site.b = parts[2];
        site.offset = parse_pair(parts[3], "R2+ offset");
    } else if (kind == "R2-" || kind == "r2-") {
        if (parts.size() != 2) throw ExitWith{kExitUsage, "R2- spec: R2-:<c1>,<c2>"};
        const auto ids = split(parts[1], ',');
        if (ids.size() != 2) throw ExitWith{kExitUsage, "R2- spec: R2-:<c1>,<c2>"};
        site.kind = dpt::MoveSite::Kind::R2Minus;
        site.a = ids[0];
        site.b = ids[1];
    } else if (kind == "R3" || kind == "r3") {
        if (parts.size() != 2) throw ExitWith{kExitUsage, "R3 spec: R3:<c1>,<c2>,<c3>"};
        const auto ids = split(parts[1], ',');
        if (ids.size() != 3) throw ExitWith{kExitUsage, "R3 spec: R3:<c1>,<c2>,<c3>"};
        site.kind = dpt::MoveSite::Kind::R3;
        site.a = ids[0];
        site.b = ids[1];
        site.c = ids[2];
    } else {
        throw ExitWith{kExitUsage, "unknown move kind '" + kind + "'"};
    }
    return site;
}

int run_fuzz(const std::string& target, int walks, int length, std::uint64_t seed,
             dpt::Policy policy, const std::string& only) {
    struct Job {
        std::string name;
        dpt::TorusDiagram diagram;
    };
    std::vector<Job> jobs;
    if (target == "catalog") {
        for (const auto& entry : dpt::catalog()) {
            if (!only.empty() && entry.name != only) continue;
            jobs.push_back({entry.name, entry.diagram});
        }
        if (jobs.empty()) throw ExitWith{kExitUsage, "no catalog motif named '" + only + "'"};
    } else {
        jobs.push_back({target, load_valid(target)});
    }
    dpt::FuzzOptions options;
    options.policy = policy;
    bool all_pass = true;
    for (const auto& job : jobs) {
        int failures = 0;
        std::string first_failure;
        std::uint64_t failing_seed = 0;
        for (int w = 0; w < walks; ++w) {
            const std::uint64_t walk_seed = seed + static_cast<std::uint64_t>(w);
            const dpt::FuzzResult res = dpt::fuzz_walk(job.diagram, length, walk_seed, options);
            if (!res.pass) {
                ++failures;
                if (failures == 1) {
                    first_failure = res.failure;
                    failing_seed = walk_seed;
                }
            }
        }
        if (failures == 0) {
            std::cout << job.name << ": " << walks << " walks x " << length << " steps: pass\n";
        } else {
            all_pass = false;
            std::cout << job.name << ": FAIL (" << failures << "/" << walks
                      << " walks): " << first_failure << "\n";
            std::cout << "  reproduce: dpt fuzz "
                      << (target == "catalog" ? "catalog --only " + job.name : target)
                      << " --walks 1 --length " << length << " --seed " << failing_seed << "\n";
        }
    }
    return all_pass ? 0 : kExitFuzz;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"doubly periodic tangle invariants on flat-torus motifs"};
    app.require_subcommand(1);

    std::string file, out, policy_name = "linking", format = "text";
    std::string rebase_spec, cover_spec, gauge_spec, move_spec, svg_out;
    std::string only;
    bool allow_reflection = false;
    int walks = 100, length = 20;
    std::uint64_t seed = 0;

    auto* cmd_validate = app.add_subcommand("validate", "check a motif file");
    cmd_validate->add_option("file", file)->required();

    auto* cmd_report = app.add_subcommand("report", "print the invariant report");
    cmd_report->add_option("file", file)->required();
    cmd_report->add_option("--policy", policy_name)->check(CLI::IsMember({"linking", "crossing"}));
    cmd_report->add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));

    auto* cmd_axis = app.add_subcommand("axis", "render the axis-motif as SVG");
    cmd_axis->add_option("file", file)->required();
    cmd_axis->add_option("--svg", svg_out)->required();
    cmd_axis->add_option("--policy", policy_name)->check(CLI::IsMember({"linking", "crossing"}));

    auto* cmd_transform = app.add_subcommand("transform", "apply an equivalence move");
    cmd_transform->add_option("file", file)->required();
    auto* opt_rebase = cmd_transform->add_option("--rebase", rebase_spec, "basis change \"a b c d\"");
    auto* opt_cover = cmd_transform->add_option("--cover", cover_spec, "cover lattice \"a b c d\"");
    auto* opt_gauge = cmd_transform->add_option("--gauge", gauge_spec, "shifts \"c1=du,dv;c2=du,dv\"");
    auto* opt_move = cmd_transform->add_option("--move", move_spec, "Reidemeister site spec");
    cmd_transform->add_flag("--allow-reflection", allow_reflection, "permit det -1 rebases");
    cmd_transform->add_option("-o,--out", out)->required();

    auto* cmd_fuzz = app.add_subcommand("fuzz", "random-move invariance check");
    cmd_fuzz->add_option("file", file, "motif file or 'catalog'")->required();
    cmd_fuzz->add_option("--walks", walks);
    cmd_fuzz->add_option("--length", length);
    cmd_fuzz->add_option("--seed", seed);
    cmd_fuzz->add_option("--only", only, "restrict 'catalog' to one motif");
    cmd_fuzz->add_option("--policy", policy_name)->check(CLI::IsMember({"linking", "crossing"}));

    auto* cmd_catalog = app.add_subcommand("catalog", "built-in motifs");
    std::string catalog_action, catalog_arg;
    cmd_catalog->add_option("action", catalog_action)->required()->check(
        CLI::IsMember({"list", "show", "export"}));
    cmd_catalog->add_option("name_or_dir", catalog_arg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_validate->parsed()) {
            dpt::TorusDiagram d = load(file);
            const dpt::ValidationReport rep = dpt::validate(d);
            if (rep.ok) {
                std::cout << "ok\n";
                return 0;
            }
            for (const auto& v : rep.violations)
                std::cerr << v.code << " [" << v.id << "]: " << v.message << "\n";
            return kExitParse;
        }
        if (cmd_report->parsed()) {
            const dpt::TorusDiagram d = load_valid(file);
            const dpt::InvariantReport r = dpt::invariant_report(d, parse_policy(policy_name));
            if (format == "structured")
                std::cout << dpt::report_to_json(r).dump(2) << "\n";
            else
                std::cout << dpt::to_text(r);
            return 0;
        }
        if (cmd_axis->parsed()) {
            const dpt::TorusDiagram d = load_valid(file);
            const dpt::InvariantReport r = dpt::invariant_report(d, parse_policy(policy_name));
            write_file(svg_out, dpt::axis_svg(r.axis, r.name));
            return 0;
        }
        if (cmd_transform->parsed()) {
            const int chosen = (opt_rebase->count() > 0) + (opt_cover->count() > 0) +
                               (opt_gauge->count() > 0) + (opt_move->count() > 0);
            if (chosen != 1)
                throw ExitWith{kExitUsage,
                               "transform needs exactly one of --rebase/--cover/--gauge/--move"};
            const dpt::TorusDiagram d = load_valid(file);
            dpt::TorusDiagram result;
            try {
                if (opt_rebase->count())
                    result = dpt::rebase(d, parse_mat(rebase_spec, "--rebase"), allow_reflection);
                else if (opt_cover->count())
                    result = dpt::cover(d, parse_mat(cover_spec, "--cover"));
                else if (opt_gauge->count())
                    result = dpt::gauge_shift(d, parse_gauge(gauge_spec));
                else
                    result = dpt::apply_move(d, parse_move(move_spec));
            } catch (const dpt::MoveError& e) {
                throw ExitWith{kExitMove, e.what()};
            } catch (const std::invalid_argument& e) {
                throw ExitWith{kExitMove, e.what()};
            }
            write_file(out, dpt::serialize(result));
            return 0;
        }
        if (cmd_fuzz->parsed())
            return run_fuzz(file, walks, length, seed, parse_policy(policy_name), only);
        if (cmd_catalog->parsed()) {
            if (catalog_action == "list") {
                for (const auto& entry : dpt::catalog())
                    std::cout << entry.name << ": " << entry.description << "\n";
                return 0;
            }
            if (catalog_action == "show") {
                const dpt::CatalogEntry* entry = dpt::catalog_find(catalog_arg);
                if (!entry) throw ExitWith{kExitUsage, "no catalog motif named '" + catalog_arg + "'"};
                std::cout << dpt::serialize(entry->diagram);
                return 0;
            }
            if (catalog_arg.empty())
                throw ExitWith{kExitUsage, "catalog export needs a directory"};
            std::filesystem::create_directories(catalog_arg);
            for (const auto& entry : dpt::catalog())
                write_file(catalog_arg + "/" + entry.name + ".json", dpt::serialize(entry.diagram));
            std::cout << "exported " << dpt::catalog().size() << " motifs to " << catalog_arg
                      << "\n";
            return 0;
        }
    } catch (const ExitWith& e) {
        std::cerr << "dpt: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "dpt: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitUsage;
}
