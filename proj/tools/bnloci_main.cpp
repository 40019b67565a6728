// Command-line front end. Exit codes: 0 for success or a positive verdict
// (Certified / Exists / GrdGeneralCertified / rigidity certified), 1 for a
// negative mathematical verdict (Failed / Unknown / NotExists / FailsAt),
// 2 for invalid input or internal errors. Human-readable text by default;
// --json emits the documented schemas.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "bnloci/serialization.hpp"

namespace {

using bnloci::Int;
using bnloci::ordered_json;

struct Output {
    bool json = false;
    std::string path;

    // Returns false only when the output file cannot be written.
    bool deliver(const std::string& payload) const {
        if (path.empty()) {
            std::cout << payload;
            return true;
        }
        std::ofstream file(path);
        if (!file) {
            std::cerr << "error: cannot open output path '" << path << "'\n";
            return false;
        }
        file << payload;
        return static_cast<bool>(file);
    }

    int finish(const std::string& text, const ordered_json& j, int verdict_code) const {
        const std::string payload = json ? j.dump(2) + "\n" : text;
        return deliver(payload) ? verdict_code : 2;
    }
};

std::string render_certificate_text(const bnloci::NonContainmentCertificate& cert) {
    std::ostringstream out;
    out << "source (g, r, d) = (" << cert.g << ", " << cert.r << ", " << cert.d
        << "), target (r', d') = (" << cert.rp << ", " << cert.dp << ")\n";
    for (const bnloci::ConditionRecord& c : cert.conditions)
        out << "  " << c.name << ": " << c.lhs << ' ' << to_string(c.relation) << ' ' << c.rhs
            << (c.holds ? "  holds" : "  FAILS") << '\n';
    out << "verdict: " << (cert.certified ? "Certified" : "Failed");
    if (!cert.certified) {
        out << " (";
        const auto names = cert.failing_names();
        for (std::size_t i = 0; i < names.size(); ++i) out << (i ? ", " : "") << names[i];
        out << ")";
    }
    out << '\n';
    return out.str();
}

std::string render_candidate_text(const bnloci::DecompositionCandidate& c) {
    std::ostringstream out;
    out << "(x, y) = (" << c.x << ", " << c.y << ")  A^2 = " << c.A_self
        << "  B^2 = " << c.B_self << "  A.H = " << c.A_dot_H << "  B.H = " << c.B_dot_H;
    return out.str();
}

int run_rho(Int g, Int r, Int d, std::optional<Int> k, const Output& out) {
    const bnloci::BNTriple t(g, r, d);
    const Int value = k ? bnloci::rho_pflueger(t, *k) : bnloci::rho(t);
    ordered_json j;
    j["query"] = {{"g", g}, {"r", r}, {"d", d}};
    if (k) {
        j["query"]["k"] = *k;
        j["rho_k"] = value;
    } else {
        j["rho"] = value;
    }
    return out.finish(std::to_string(value) + "\n", j, 0);
}

int run_maximal(Int g, const Output& out) {
    const auto loci = bnloci::expected_maximal_loci(g);
    std::ostringstream text;
    ordered_json j;
    j["g"] = g;
    ordered_json rows = ordered_json::array();
    for (const bnloci::ExpectedMaximalLocus& em : loci) {
        text << "(g, r, d) = (" << em.triple.g << ", " << em.triple.r << ", " << em.triple.d
             << ")  rho = " << em.rho << '\n';
        rows.push_back({{"g", em.triple.g}, {"r", em.triple.r}, {"d", em.triple.d}, {"rho", em.rho}});
    }
    j["loci"] = std::move(rows);
    return out.finish(text.str(), j, 0);
}

int run_rigidity(Int g, Int r, Int d, bool enumerate, bool vertices, const Output& out) {
    const bnloci::PicardLatticeParams p(g, r, d);
    const bnloci::RigidityVerdict verdict = bnloci::check_rigidity(p);

    std::ostringstream text;
    text << "lattice (g, r, d) = (" << g << ", " << r << ", " << d
         << ")  discriminant = " << bnloci::discriminant(g, r, d) << '\n';
    text << "rigidity: " << to_string(verdict.status) << '\n';
    for (const bnloci::ExclusionRule& rule : verdict.exclusions_applied)
        text << "exclusion " << rule.name << ": " << rule.reason << '\n';
    for (const bnloci::DecompositionCandidate& c : verdict.candidates)
        text << "  extra candidate " << render_candidate_text(c) << '\n';

    ordered_json j = to_json(verdict, p);

    if (enumerate) {
        const bnloci::RigidityVerdict by_enum = bnloci::check_rigidity_by_enumeration(p);
        const auto all = bnloci::decomposition_candidates(p);
        text << "enumeration: " << to_string(by_enum.status) << '\n';
        for (const bnloci::DecompositionCandidate& c : all)
            text << "  candidate " << render_candidate_text(c) << '\n';
        for (const bnloci::ExclusionRule& rule : by_enum.exclusions_applied)
            text << "  exclusion " << rule.name << ": " << rule.reason << '\n';
        ordered_json je;
        je["status"] = to_string(by_enum.status);
        ordered_json cands = ordered_json::array();
        for (const bnloci::DecompositionCandidate& c : all) cands.push_back(to_json(c));
        je["candidates"] = std::move(cands);
        ordered_json rules = ordered_json::array();
        for (const bnloci::ExclusionRule& rule : by_enum.exclusions_applied)
            rules.push_back({{"name", rule.name}, {"reason", rule.reason}});
        je["exclusions_applied"] = std::move(rules);
        j["enumeration"] = std::move(je);
    }

    if (vertices) {
        const bnloci::RegionVertices v = bnloci::region_vertices(p);
        text << to_csv(v);
        j["vertices"] = to_json(v);
    }

    return out.finish(text.str(), j, verdict.certified() ? 0 : 1);
}

int run_regenerate(Int g, Int r, Int d, Int rp, Int dp, const Output& out) {
    bnloci::RegenerationOutcome outcome{bnloci::RegenerationStatus::PreconditionsNotMet,
                                        {g, r, d, rp, dp}, {}, {}};
    if (g >= 3 && r >= 1 && 2 <= d && d <= g - 1) {
        // Discriminant >= 0 still throws here: that lattice does not occur.
        const bnloci::PicardLatticeParams p(g, r, d);
        outcome = bnloci::special_grd_exists(g, r, d, rp, dp, bnloci::check_rigidity(p));
    } else {
        outcome.reasons.push_back(
            "lattice constraints violated (need g >= 3, r >= 1, 2 <= d <= g-1)");
    }

    std::ostringstream text;
    text << "query: source (" << g << ", " << r << ", " << d << "), target (r', d') = (" << rp
         << ", " << dp << ")\n";
    text << "status: " << to_string(outcome.status) << '\n';
    if (outcome.witness)
        text << "witness (r1, r2, d1, d2) = (" << outcome.witness->r1 << ", " << outcome.witness->r2
             << ", " << outcome.witness->d1 << ", " << outcome.witness->d2 << ")\n";
    for (const std::string& reason : outcome.reasons) text << "reason: " << reason << '\n';

    const int code = outcome.status == bnloci::RegenerationStatus::Exists ? 0 : 1;
    return out.finish(text.str(), to_json(outcome), code);
}

int run_certify(Int g, Int r, Int d, Int rp, Int dp, const Output& out) {
    const bnloci::NonContainmentCertificate cert = bnloci::certify_no_grd(g, r, d, rp, dp);
    return out.finish(render_certificate_text(cert), to_json(cert), cert.certified ? 0 : 1);
}

int run_general(Int g, Int r, Int d, const Output& out) {
    const bnloci::GeneralityReport report = bnloci::grd_general_certificate(g, r, d);
    std::ostringstream text;
    text << "locus (g, r, d) = (" << g << ", " << r << ", " << d << ")\n";
    for (const bnloci::TargetCertificate& tc : report.targets) {
        text << "  target (" << tc.rp << ", " << tc.dp << "): "
             << (tc.counted_failing.empty() ? "certified" : "FAILS");
        for (const std::string& name : tc.counted_failing) text << ' ' << name;
        text << '\n';
    }
    if (!report.note.empty()) text << "note: " << report.note << '\n';
    text << "verdict: " << (report.grd_general ? "GrdGeneralCertified" : "FailsAt") << '\n';
    return out.finish(text.str(), to_json(report), report.grd_general ? 0 : 1);
}

std::string render_sweep_text(const bnloci::SweepReport& report) {
    std::ostringstream text;
    text << "sweep " << to_string(report.kind) << "  genus range [" << report.min_g << ", "
         << report.max_g << "]";
    if (!report.mode.empty()) text << "  mode " << report.mode;
    text << '\n';
    text << "rows: " << report.rows.size() << '\n';
    for (const auto& [verdict, n] : report.summary.counts)
        text << "  " << verdict << ": " << n << '\n';
    for (const bnloci::ExceptionalTuple& t : report.summary.failures)
        text << "failure: (" << t.g << ", " << t.r << ", " << t.d << ") -> (" << t.rp << ", "
             << t.dp << ")\n";
    if (report.kind == bnloci::SweepKind::Gonality) {
        text << "exceptional genera:";
        for (Int g : report.summary.exceptional_genera) text << ' ' << g;
        text << '\n';
    }
    return text.str();
}

int run_sweep(const std::string& kind, Int min_g, Int max_g, const std::string& mode, bool csv,
              const Output& out) {
    bnloci::SweepReport report;
    if (kind == "theorem-a") {
        report = bnloci::theorem_a_sweep(min_g, max_g);
    } else if (kind == "nonmax") {
        report = bnloci::nonmax_sweep(max_g);
    } else {
        const auto m = (mode == "max") ? bnloci::GonalityMode::MaxGonality
                                       : bnloci::GonalityMode::SubmaxGonality;
        report = bnloci::gonality_scan(max_g, m);
    }

    int code = 0;
    if (kind == "nonmax" && !report.summary.failures.empty()) code = 1;

    if (csv) {
        const std::string payload = to_csv(report);
        return out.deliver(payload) ? code : 2;
    }
    return out.finish(render_sweep_text(report), to_json(report), code);
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("BNLOCI_MAX_G")) {
        try {
            bnloci::set_input_guard(std::stoll(env));
        } catch (const std::exception&) {
            std::cerr << "error: BNLOCI_MAX_G is not a valid bound\n";
            return 2;
        }
    }

    CLI::App app{"bnloci: a certifying calculator for Brill-Noether loci"};
    app.require_subcommand(1);

    Output out;
    app.add_flag("--json", out.json, "emit JSON instead of text");
    app.add_option("--out", out.path, "write output to a file instead of stdout");

    Int g = 0, r = 0, d = 0, rp = 0, dp = 0;
    std::optional<Int> gonality_k;

    auto* cmd_rho = app.add_subcommand("rho", "Brill-Noether number rho (or rho_k with --k)");
    cmd_rho->add_option("--g", g, "genus")->required();
    cmd_rho->add_option("--r", r, "rank")->required();
    cmd_rho->add_option("--d", d, "degree")->required();
    cmd_rho->add_option("--k", gonality_k, "gonality for the refined number");

    auto* cmd_maximal = app.add_subcommand("maximal", "expected maximal loci of a genus");
    cmd_maximal->add_option("--g", g, "genus")->required();

    bool flag_enumerate = false, flag_vertices = false;
    auto* cmd_rigidity = app.add_subcommand("rigidity", "decomposition rigidity of a lattice");
    cmd_rigidity->add_option("--g", g, "genus")->required();
    cmd_rigidity->add_option("--r", r, "rank")->required();
    cmd_rigidity->add_option("--d", d, "degree")->required();
    cmd_rigidity->add_flag("--enumerate", flag_enumerate, "also report the full candidate enumeration");
    cmd_rigidity->add_flag("--vertices", flag_vertices, "also report the candidate-region vertices");

    auto* cmd_regenerate = app.add_subcommand("regenerate", "witness search for a target series");
    cmd_regenerate->add_option("--g", g, "genus")->required();
    cmd_regenerate->add_option("--r", r, "rank")->required();
    cmd_regenerate->add_option("--d", d, "degree")->required();
    cmd_regenerate->add_option("--rp", rp, "target rank")->required();
    cmd_regenerate->add_option("--dp", dp, "target degree")->required();

    auto* cmd_certify = app.add_subcommand("certify", "non-containment certificate");
    cmd_certify->add_option("--g", g, "genus")->required();
    cmd_certify->add_option("--r", r, "rank")->required();
    cmd_certify->add_option("--d", d, "degree")->required();
    cmd_certify->add_option("--rp", rp, "target rank")->required();
    cmd_certify->add_option("--dp", dp, "target degree")->required();

    auto* cmd_general = app.add_subcommand("general", "certify a locus against all its targets");
    cmd_general->add_option("--g", g, "genus")->required();
    cmd_general->add_option("--r", r, "rank")->required();
    cmd_general->add_option("--d", d, "degree")->required();

    std::string sweep_kind, sweep_mode = "submax";
    Int min_g = 3, max_g = 0;
    bool flag_csv = false;
    auto* cmd_sweep = app.add_subcommand("sweep", "batch reproduction sweeps");
    cmd_sweep->add_option("kind", sweep_kind, "theorem-a | nonmax | gonality")
        ->required()
        ->check(CLI::IsMember({"theorem-a", "nonmax", "gonality"}));
    cmd_sweep->add_option("--min-g", min_g, "smallest genus (theorem-a; default 3)");
    cmd_sweep->add_option("--max-g", max_g,
                          "largest genus (defaults: theorem-a 100, nonmax 200, gonality 200)");
    cmd_sweep->add_option("--mode", sweep_mode, "gonality mode")
        ->check(CLI::IsMember({"max", "submax"}));
    cmd_sweep->add_flag("--csv", flag_csv, "emit the CSV report");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n' << app.help();
        return 2;
    }

    try {
        if (cmd_rho->parsed()) return run_rho(g, r, d, gonality_k, out);
        if (cmd_maximal->parsed()) return run_maximal(g, out);
        if (cmd_rigidity->parsed()) return run_rigidity(g, r, d, flag_enumerate, flag_vertices, out);
        if (cmd_regenerate->parsed()) return run_regenerate(g, r, d, rp, dp, out);
        if (cmd_certify->parsed()) return run_certify(g, r, d, rp, dp, out);
        if (cmd_general->parsed()) return run_general(g, r, d, out);
        if (cmd_sweep->parsed()) {
            if (max_g == 0) max_g = (sweep_kind == "theorem-a") ? 100 : 200;
            return run_sweep(sweep_kind, min_g, max_g, sweep_mode, flag_csv, out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
