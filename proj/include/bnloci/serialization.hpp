#pragma once

// JSON and CSV emission. Certificates use the fixed field order
//   {"query": {...}, "conditions": [...], "verdict": ...}
// with decimal integers throughout; sweep reports serialize as
//   {"kind": ..., "params": {...}, "rows": [...], "summary": {...}}
// and as CSV with columns g,r,d,rp,dp,verdict,failing_conditions.

#include <sstream>

#include "json.hpp"

#include "bnloci/sweeps.hpp"

namespace bnloci {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const NonContainmentCertificate& cert) {
    ordered_json j;
    j["query"] = {{"g", cert.g}, {"r", cert.r}, {"d", cert.d}, {"rp", cert.rp}, {"dp", cert.dp}};
    ordered_json conditions = ordered_json::array();
    for (const ConditionRecord& c : cert.conditions) {
        conditions.push_back({{"name", c.name},
                              {"lhs", c.lhs},
                              {"rhs", c.rhs},
                              {"relation", to_string(c.relation)},
                              {"holds", c.holds}});
    }
    j["conditions"] = std::move(conditions);
    j["verdict"] = cert.certified ? "Certified" : "Failed";
    return j;
}

inline ordered_json to_json(const DecompositionCandidate& c) {
    return ordered_json{{"x", c.x},
                        {"y", c.y},
                        {"A_self", c.A_self},
                        {"B_self", c.B_self},
                        {"A_dot_H", c.A_dot_H},
                        {"B_dot_H", c.B_dot_H}};
}

inline ordered_json to_json(const RigidityVerdict& v, const PicardLatticeParams& p) {
    ordered_json j;
    j["query"] = {{"g", p.g}, {"r", p.r}, {"d", p.d}};
    j["status"] = to_string(v.status);
    ordered_json cands = ordered_json::array();
    for (const DecompositionCandidate& c : v.candidates) cands.push_back(to_json(c));
    j["candidates"] = std::move(cands);
    ordered_json rules = ordered_json::array();
    for (const ExclusionRule& rule : v.exclusions_applied)
        rules.push_back({{"name", rule.name}, {"reason", rule.reason}});
    j["exclusions_applied"] = std::move(rules);
    return j;
}

inline ordered_json to_json(const RegionVertices& v) {
    auto point = [](const char* label, RegionVertices::Point pt) {
        return ordered_json{{"label", label}, {"x", pt.x}, {"y", pt.y}};
    };
    return ordered_json::array({point("Q+", v.q_plus), point("Q-", v.q_minus),
                                point("P1", v.p1), point("P2", v.p2),
                                point("P3", v.p3), point("P4", v.p4)});
}

inline std::string to_csv(const RegionVertices& v) {
    std::ostringstream out;
    out << "label,x,y\n";
    auto line = [&out](const char* label, RegionVertices::Point pt) {
        out << label << ',' << pt.x << ',' << pt.y << '\n';
    };
    line("Q+", v.q_plus);
    line("Q-", v.q_minus);
    line("P1", v.p1);
    line("P2", v.p2);
    line("P3", v.p3);
    line("P4", v.p4);
    return out.str();
}

inline ordered_json to_json(const RegenerationOutcome& o) {
    ordered_json j;
    j["query"] = {{"g", o.query.g},
                  {"r", o.query.r},
                  {"d", o.query.d},
                  {"rp", o.query.rp},
                  {"dp", o.query.dp}};
    j["status"] = to_string(o.status);
    if (o.witness)
        j["witness"] = {{"r1", o.witness->r1},
                        {"r2", o.witness->r2},
                        {"d1", o.witness->d1},
                        {"d2", o.witness->d2}};
    if (!o.reasons.empty()) j["reasons"] = o.reasons;
    return j;
}

inline ordered_json to_json(const GeneralityReport& r) {
    ordered_json j;
    j["locus"] = {{"g", r.g}, {"r", r.r}, {"d", r.d}};
    ordered_json targets = ordered_json::array();
    for (const TargetCertificate& tc : r.targets) {
        ordered_json t;
        t["rp"] = tc.rp;
        t["dp"] = tc.dp;
        t["certificate"] = to_json(tc.certificate);
        t["counted_failing"] = tc.counted_failing;
        targets.push_back(std::move(t));
    }
    j["targets"] = std::move(targets);
    j["verdict"] = r.grd_general ? "GrdGeneralCertified" : "FailsAt";
    ordered_json fails = ordered_json::array();
    for (const auto& [rp, dp] : r.fails_at) fails.push_back({{"rp", rp}, {"dp", dp}});
    j["fails_at"] = std::move(fails);
    if (!r.waived_conditions.empty()) j["waived_conditions"] = r.waived_conditions;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline ordered_json to_json(const SweepRow& row) {
    ordered_json j;
    j["g"] = row.g;
    j["r"] = row.r;
    j["d"] = row.d;
    if (row.rp) j["rp"] = *row.rp;
    if (row.dp) j["dp"] = *row.dp;
    j["verdict"] = row.verdict;
    j["failing_conditions"] = row.failing_conditions;
    if (!row.note.empty()) j["note"] = row.note;
    if (row.k) j["k"] = *row.k;
    if (row.rho_k) j["rho_k"] = *row.rho_k;
    return j;
}

inline ordered_json to_json(const SweepReport& report) {
    ordered_json j;
    j["kind"] = to_string(report.kind);
    ordered_json params;
    params["min_g"] = report.min_g;
    params["max_g"] = report.max_g;
    if (!report.mode.empty()) params["mode"] = report.mode;
    j["params"] = std::move(params);
    ordered_json rows = ordered_json::array();
    for (const SweepRow& row : report.rows) rows.push_back(to_json(row));
    j["rows"] = std::move(rows);
    ordered_json summary;
    ordered_json counts;
    for (const auto& [verdict, n] : report.summary.counts) counts[verdict] = n;
    summary["counts"] = std::move(counts);
    ordered_json failures = ordered_json::array();
    for (const ExceptionalTuple& t : report.summary.failures)
        failures.push_back({{"g", t.g}, {"r", t.r}, {"d", t.d}, {"rp", t.rp}, {"dp", t.dp}});
    summary["failures"] = std::move(failures);
    if (report.kind == SweepKind::Gonality)
        summary["exceptional_genera"] = report.summary.exceptional_genera;
    j["summary"] = std::move(summary);
    return j;
}

// One row per instance; failing condition names are joined with ';' so the
// field stays comma-free.
inline std::string to_csv(const SweepReport& report) {
    std::ostringstream out;
    out << "g,r,d,rp,dp,verdict,failing_conditions\n";
    for (const SweepRow& row : report.rows) {
        out << row.g << ',' << row.r << ',' << row.d << ',';
        if (row.rp) out << *row.rp;
        out << ',';
        if (row.dp) out << *row.dp;
        out << ',' << row.verdict << ',';
        for (std::size_t i = 0; i < row.failing_conditions.size(); ++i) {
            if (i) out << ';';
            out << row.failing_conditions[i];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace bnloci
