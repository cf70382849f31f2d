#pragma once

/**
 * @file cli.hpp
 * @brief The csdepth command line: gen, depth, cdepth, core, cells2d, audit.
 *
 * Exit codes: 0 success, 1 assertion or audit violation, 2 input or format
 * error, 3 construction verification failure.
 */

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "csd/arrangements2d.hpp"
#include "csd/constructions.hpp"
#include "csd/depth.hpp"
#include "csd/io.hpp"
#include "csd/search_harness.hpp"

namespace csd::cli {

enum ExitCode : int { ok = 0, violation = 1, input_error = 2, construction_failure = 3 };

namespace detail {

struct QueryPoint {
    std::string file;
    std::string inline_point;

    void add_options(CLI::App* cmd)
    {
        auto* f = cmd->add_option("--point", file, "JSON point file");
        auto* a = cmd->add_option("--at", inline_point, "inline point, e.g. \"1/2,-3\"");
        f->excludes(a);
    }

    std::optional<Point> get() const
    {
        if (!file.empty()) return io::point_from_json(io::read_json_file(file));
        if (!inline_point.empty()) return io::parse_inline_point(inline_point);
        return std::nullopt;
    }
};

inline Containment parse_mode(const std::string& m)
{
    if (m == "open") return Containment::open;
    if (m == "closed") return Containment::closed;
    throw InputError("mode must be open or closed");
}

inline const char* yes_no(bool b) { return b ? "true" : "false"; }

inline void print_report(std::ostream& out, const DepthReport& rep)
{
    out << "mode: " << to_string(rep.mode) << '\n';
    out << "depth: " << rep.count << '\n';
    out << "degenerate: " << rep.degenerate << '\n';
    if (rep.witnesses) {
        for (const auto& w : *rep.witnesses) {
            out << "witness:";
            for (auto [c, i] : w) out << " (" << c << ',' << i << ')';
            out << '\n';
        }
    }
}

inline std::vector<std::size_t> parse_sizes(const std::string& text)
{
    std::vector<std::size_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t pos = 0;
            const long v = std::stol(item, &pos);
            if (pos != item.size() || v < 1) throw InputError("");
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw InputError("bad size list '" + text + "'");
        }
    }
    return out;
}

inline std::string join(const std::vector<std::string>& args)
{
    std::string s = "csdepth";
    for (const auto& a : args) s += " " + a;
    return s;
}

}  // namespace detail

/// Runs one command; args exclude the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact colourful simplicial depth toolkit", "csdepth"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a verified configuration");
    std::string gen_kind;
    std::size_t gen_dim = 2;
    std::string gen_eps;
    std::string gen_tol;
    std::string gen_capricorn;
    std::uint64_t gen_seed = 0;
    std::size_t gen_n = 5;
    std::size_t gen_ppc = 0;
    std::string gen_out;
    bool gen_print = false;
    gen->add_option("kind", gen_kind, "identical | sminus | sprime | splus | ngon | random")
        ->required()
        ->check(CLI::IsMember({"identical", "sminus", "sprime", "splus", "ngon", "random"}));
    gen->add_option("--dim", gen_dim, "dimension d")->check(CLI::Range(1, 12));
    gen->add_option("--epsilon", gen_eps, "latitude parameter (default 1/(100d))");
    gen->add_option("--tolerance", gen_tol, "initial direction tolerance (default 2^-24)");
    gen->add_option("--capricorn", gen_capricorn, "Capricorn height factor c (default 2)");
    gen->add_option("--seed", gen_seed, "seed for random configurations and retries");
    gen->add_option("--n", gen_n, "number of vertices for ngon (odd)");
    gen->add_option("--points-per-colour", gen_ppc, "points per colour for random (default d+1)");
    gen->add_option("--out", gen_out, "write the configuration (or point set) to this JSON file");
    gen->add_flag("--print", gen_print, "print the JSON to stdout");

    // depth
    auto* depth = app.add_subcommand("depth", "monochrome simplicial depth");
    std::string depth_points;
    std::string mode = "open";
    bool witnesses = false;
    detail::QueryPoint depth_query;
    depth->add_option("--points", depth_points, "JSON point-set file")->required();
    depth_query.add_options(depth);
    depth->add_option("--mode", mode, "open | closed")->check(CLI::IsMember({"open", "closed"}));
    depth->add_flag("--witnesses", witnesses, "list containing simplices");

    // cdepth
    auto* cdepth = app.add_subcommand("cdepth", "colourful simplicial depth");
    std::string config_file;
    bool require_core = false;
    detail::QueryPoint cdepth_query;
    cdepth->add_option("--config", config_file, "JSON configuration file")->required();
    cdepth_query.add_options(cdepth);
    cdepth->add_option("--mode", mode, "open | closed")->check(CLI::IsMember({"open", "closed"}));
    cdepth->add_flag("--witnesses", witnesses, "list containing colourful simplices");
    cdepth->add_flag("--require-core", require_core, "exit 1 unless the point is in the core");

    // core
    auto* core = app.add_subcommand("core", "core membership");
    detail::QueryPoint core_query;
    core->add_option("--config", config_file, "JSON configuration file")->required();
    core_query.add_options(core);

    // cells2d
    auto* cells = app.add_subcommand("cells2d", "cyclic cell depths of two planar colours");
    std::vector<std::size_t> cell_colours{0, 1};
    cells->add_option("--config", config_file, "JSON configuration file (d = 2)")->required();
    cells->add_option("--colours", cell_colours, "the two colour indices (default 0 1)")->expected(2);

    // audit
    auto* audit = app.add_subcommand("audit", "randomized audits");
    std::string audit_kind;
    std::string parity_kind = "monochrome";
    std::size_t audit_dim = 2;
    AuditOptions opt;
    std::string sizes_text;
    std::string csv_file;
    std::string json_file;
    bool no_planted = false;
    audit->add_option("kind", audit_kind, "parity | mu | nu | stats")
        ->required()
        ->check(CLI::IsMember({"parity", "mu", "nu", "stats"}));
    audit->add_option("--parity", parity_kind, "monochrome | colourful_odd_d | colourful_even_sizes")
        ->check(CLI::IsMember({"monochrome", "colourful_odd_d", "colourful_even_sizes"}));
    audit->add_option("--dim", audit_dim, "dimension d")->check(CLI::Range(1, 12));
    audit->add_option("--trials", opt.trials, "number of random trials");
    audit->add_option("--seed", opt.seed, "base seed; trial t uses seed + t");
    audit->add_option("--workers", opt.workers, "worker threads (0 = all cores)");
    audit->add_option("--bound", opt.bound, "coordinate magnitude bound")->check(CLI::PositiveNumber);
    audit->add_option("--core-samples", opt.core_samples, "core points sampled per configuration")
        ->check(CLI::PositiveNumber);
    audit->add_option("--n", opt.monochrome_n, "monochrome parity: points per set");
    audit->add_option("--sizes", sizes_text, "even-sizes parity: class sizes, e.g. 2,2,2");
    audit->add_option("--csv", csv_file, "write per-trial CSV here instead of stdout");
    audit->add_option("--json", json_file, "write the JSON summary here instead of stdout");
    audit->add_flag("--no-planted", no_planted, "skip planted extremal trials");

    std::vector<std::string> argv_storage{"csdepth"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : input_error;
    }

    try {
        if (*gen) {
            if (gen_kind == "ngon") {
                Rational tol = gen_tol.empty() ? dyadic(24) : parse_rational(gen_tol);
                auto g = gen_regular_ngon(gen_n, tol, gen_seed);
                const auto verified = monochrome_depth(g.points, Point::origin(2), Containment::open).count;
                if (verified != g.claimed_depth_at_centre) {
                    throw ConstructionError("n-gon centre depth mismatch", static_cast<long long>(verified));
                }
                auto j = io::point_set_to_json(g.points);
                if (!gen_out.empty()) io::write_json_file(gen_out, j);
                if (gen_print) out << j.dump(2) << '\n';
                out << "kind: ngon\n";
                out << "n: " << gen_n << '\n';
                out << "depth_at_center: " << verified << '\n';
                out << "verified: true\n";
                return ok;
            }
            ConstructionSpec spec;
            spec.dim = gen_dim;
            spec.seed = gen_seed;
            if (!gen_eps.empty()) spec.epsilon = parse_rational(gen_eps);
            if (!gen_tol.empty()) spec.direction_tolerance = parse_rational(gen_tol);
            if (!gen_capricorn.empty()) spec.capricorn_factor = parse_rational(gen_capricorn);
            if (gen_kind == "identical") spec.kind = ConstructionKind::identical;
            if (gen_kind == "sminus") spec.kind = ConstructionKind::s_minus;
            if (gen_kind == "sprime") spec.kind = ConstructionKind::s_prime;
            if (gen_kind == "splus") spec.kind = ConstructionKind::s_plus;
            if (gen_kind == "random") spec.kind = ConstructionKind::random_core;
            auto v = generate(spec, gen_ppc);
            auto j = io::to_json(v.config);
            if (!gen_out.empty()) io::write_json_file(gen_out, j);
            if (gen_print) out << j.dump(2) << '\n';
            out << "kind: " << gen_kind << '\n';
            out << "dimension: " << gen_dim << '\n';
            out << "depth_at_origin: " << v.claimed_depth_at_origin << '\n';
            out << "verified: " << detail::yes_no(v.verified) << '\n';
            out << "retries: " << v.retries << '\n';
            if (spec.kind != ConstructionKind::random_core && spec.kind != ConstructionKind::identical) {
                out << "tolerance: " << to_string(v.tolerance_used) << '\n';
            }
            return ok;
        }

        if (*depth) {
            auto pts = io::point_set_from_json(io::read_json_file(depth_points));
            auto p = depth_query.get();
            if (!p) throw InputError("depth needs --point FILE or --at x,y,...");
            auto rep = monochrome_depth(pts, *p, detail::parse_mode(mode), witnesses);
            detail::print_report(out, rep);
            return ok;
        }

        if (*cdepth) {
            auto cfg = io::configuration_from_json(io::read_json_file(config_file));
            auto p = cdepth_query.get().value_or(Point::origin(cfg.dim()));
            auto rep = colourful_depth(cfg, p, detail::parse_mode(mode), witnesses);
            detail::print_report(out, rep);
            if (require_core) {
                const bool in_core = core_membership(cfg, p, false);
                out << "core: " << detail::yes_no(in_core) << '\n';
                if (!in_core) return violation;
            }
            return ok;
        }

        if (*core) {
            auto cfg = io::configuration_from_json(io::read_json_file(config_file));
            auto p = core_query.get().value_or(Point::origin(cfg.dim()));
            out << "strict: " << detail::yes_no(core_membership(cfg, p, true)) << '\n';
            out << "closed: " << detail::yes_no(core_membership(cfg, p, false)) << '\n';
            return ok;
        }

        if (*cells) {
            auto cfg = io::configuration_from_json(io::read_json_file(config_file));
            if (cfg.dim() != 2) throw InputError("cells2d needs a planar configuration");
            if (cell_colours.size() != 2 || cell_colours[0] == cell_colours[1]) {
                throw InputError("cells2d needs two distinct colour indices");
            }
            auto arr = cell_depth_sequence(cfg.colour(cell_colours[0]), cfg.colour(cell_colours[1]));
            auto rep = verify_cell_depth_lemma(arr);
            out << "sequence: " << format_sequence(canonical_rotation(arr.cell_depths)) << '\n';
            out << "min_depth: " << rep.min_depth << '\n';
            out << "min_cells: " << rep.count_of_min_cells << '\n';
            out << "family: " << to_string(classify_family(arr.cell_depths)) << '\n';
            out << "lemma_ok: " << detail::yes_no(rep.lemma_ok) << '\n';
            return rep.lemma_ok ? ok : violation;
        }

        if (*audit) {
            opt.include_planted = !no_planted;
            if (!sizes_text.empty()) opt.sizes = detail::parse_sizes(sizes_text);
            AuditReport rep;
            if (audit_kind == "parity") rep = parity_audit(parse_parity_kind(parity_kind), audit_dim, opt);
            if (audit_kind == "mu") rep = mu_audit(audit_dim, opt);
            if (audit_kind == "nu") rep = nu_audit(audit_dim, opt);
            if (audit_kind == "stats") rep = depth_stats(audit_dim, opt);
            const auto summary = rep.to_json(detail::join(args)).dump(2);
            if (csv_file.empty()) {
                out << rep.to_csv();
            } else {
                std::ofstream f(csv_file);
                if (!f) throw InputError("cannot write '" + csv_file + "'");
                f << rep.to_csv();
            }
            if (json_file.empty()) {
                out << summary << '\n';
            } else {
                std::ofstream f(json_file);
                if (!f) throw InputError("cannot write '" + json_file + "'");
                f << summary << '\n';
            }
            return rep.violations == 0 ? ok : violation;
        }
    } catch (const ConstructionError& e) {
        err << "construction failed: " << e.what() << " (achieved " << e.achieved() << ")\n";
        return construction_failure;
    } catch (const EmptyCoreEvidenceError& e) {
        err << "error: " << e.what() << '\n';
        return violation;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed JSON input: " << e.what() << '\n';
        return input_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    return input_error;
}

inline int run(const std::vector<std::string>& args, std::ostream& out) { return run(args, out, std::cerr); }

}  // namespace csd::cli
