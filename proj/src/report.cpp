#include "secvar/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "secvar/version.hpp"

namespace secvar {

namespace {

using nlohmann::json;

json estimate_json(const DimensionEstimate& e) {
    json j;
    j["kind"] = kind_label(e.kind);
    if (e.kind == DimKind::Span)
        j["k"] = nullptr;
    else
        j["k"] = e.k;
    if (e.h)
        j["h"] = *e.h;
    else
        j["h"] = nullptr;
    j["dim"] = e.dim;
    j["expdim"] = e.expdim;
    j["defect"] = e.defect;
    j["trial_dims"] = e.trial_dims;
    j["trials"] = e.trials_used;
    j["prime"] = e.prime;
    j["seed"] = e.seed;
    j["cross_checked"] = e.cross_checked;
    if (e.cross_check_agrees)
        j["cross_check_agrees"] = *e.cross_check_agrees;
    else
        j["cross_check_agrees"] = nullptr;
    return j;
}

json check_json(const CheckResult& c) {
    json j;
    j["rule"] = c.rule;
    if (c.h)
        j["h"] = *c.h;
    else
        j["h"] = nullptr;
    j["k"] = c.k;
    j["hypothesis_held"] = c.hypothesis_held;
    j["conclusion_held"] = c.conclusion_held;
    j["violated"] = c.violated();
    json details;
    for (const auto& [key, value] : c.details) details[key] = value;
    j["details"] = std::move(details);
    return j;
}

json validation_json(const ValidationReport& v) {
    json j;
    j["jet_rank"] = v.jet_rank;
    j["immersive"] = v.immersive;
    j["span_dim"] = v.span_dim;
    j["nondegenerate"] = v.nondegenerate;
    j["is_cone"] = v.is_cone;
    if (v.degree)
        j["degree"] = *v.degree;
    else
        j["degree"] = nullptr;
    j["ok"] = v.ok();
    return j;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

} // namespace

void Report::set_variety(const Variety& v) {
    variety_name = v.name;
    variety_n = v.n;
    variety_r = v.r;
    variety_is_cone = v.is_cone;
    variety_degree = v.degree;
}

std::string Report::to_json_text() const {
    json j;
    j["schema"] = 1;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    j["pass"] = pass;

    if (variety_name) {
        json v;
        v["name"] = *variety_name;
        v["n"] = *variety_n;
        v["r"] = *variety_r;
        v["is_cone"] = *variety_is_cone;
        if (variety_degree)
            v["degree"] = *variety_degree;
        else
            v["degree"] = nullptr;
        if (variety_digest)
            v["digest"] = *variety_digest;
        else
            v["digest"] = nullptr;
        j["variety"] = std::move(v);
    } else {
        j["variety"] = nullptr;
    }

    {
        json c;
        c["prime"] = cfg.prime;
        c["seed"] = cfg.seed;
        c["trials"] = cfg.trials;
        c["retry_cap"] = cfg.retry_cap;
        c["cross_check"] = cfg.cross_check;
        c["direction_limit"] = cfg.direction_limit;
        j["cfg"] = std::move(c);
    }

    json res = json::array();
    for (const auto& e : results) res.push_back(estimate_json(e));
    j["results"] = std::move(res);

    json chk = json::array();
    for (const auto& c : checks) chk.push_back(check_json(c));
    j["checks"] = std::move(chk);

    json lines = json::array();
    for (const auto& s : suite) {
        json l;
        l["label"] = s.label;
        l["expected"] = s.expected;
        l["actual"] = s.actual;
        l["pass"] = s.pass();
        lines.push_back(std::move(l));
    }
    j["suite"] = std::move(lines);

    if (validation)
        j["validation"] = validation_json(*validation);
    else
        j["validation"] = nullptr;

    json cat = json::array();
    for (const auto& v : catalog_entries) {
        json row;
        row["name"] = v.name;
        row["n"] = v.n;
        row["r"] = v.r;
        row["is_cone"] = v.is_cone;
        if (v.degree)
            row["degree"] = *v.degree;
        else
            row["degree"] = nullptr;
        cat.push_back(std::move(row));
    }
    j["catalog"] = std::move(cat);

    return j.dump(2) + "\n";
}

std::string Report::to_table_text() const {
    std::ostringstream out;

    if (!catalog_entries.empty()) {
        out << std::left << std::setw(16) << "name" << std::right << std::setw(3) << "n"
            << std::setw(4) << "r" << std::setw(8) << "degree" << std::setw(6) << "cone" << "\n";
        for (const auto& v : catalog_entries) {
            out << std::left << std::setw(16) << v.name << std::right << std::setw(3) << v.n
                << std::setw(4) << v.r << std::setw(8)
                << (v.degree ? std::to_string(*v.degree) : "-") << std::setw(6)
                << yesno(v.is_cone) << "\n";
        }
        return out.str();
    }

    if (variety_name) {
        out << "variety " << *variety_name << "  n=" << *variety_n << " r=" << *variety_r
            << " degree=" << (variety_degree ? std::to_string(*variety_degree) : "-")
            << " cone=" << yesno(*variety_is_cone) << "\n";
    }
    out << "prime=" << cfg.prime << " seed=" << cfg.seed << " trials=" << cfg.trials
        << " retry_cap=" << cfg.retry_cap << " cross_check=" << (cfg.cross_check ? "on" : "off")
        << "\n";

    if (validation) {
        const auto& v = *validation;
        out << "validation: jet_rank=" << v.jet_rank << " immersive=" << yesno(v.immersive)
            << " span_dim=" << v.span_dim << " nondegenerate=" << yesno(v.nondegenerate)
            << " -> " << (v.ok() ? "ok" : "degenerate") << "\n";
    }

    if (!results.empty()) {
        out << "\n" << std::left << std::setw(6) << "kind" << std::right << std::setw(3) << "h"
            << std::setw(4) << "k" << std::setw(6) << "dim" << std::setw(8) << "expdim"
            << std::setw(8) << "defect" << std::setw(7) << "check" << "\n";
        for (const auto& e : results) {
            out << std::left << std::setw(6) << kind_label(e.kind) << std::right << std::setw(3)
                << (e.h ? std::to_string(*e.h) : "-") << std::setw(4)
                << (e.kind == DimKind::Span ? std::string("-") : std::to_string(e.k))
                << std::setw(6) << e.dim << std::setw(8) << e.expdim << std::setw(8) << e.defect
                << std::setw(7)
                << (e.cross_checked ? (*e.cross_check_agrees ? "agree" : "DIFFER") : "-")
                << "\n";
        }
    }

    if (!checks.empty()) {
        std::size_t violated = 0;
        for (const auto& c : checks)
            if (c.violated()) ++violated;
        out << "\nchecks: " << checks.size() << " evaluated, " << violated << " violated\n";
        // per-rule rows only for single-variety sweeps; suite output keeps
        // its one-line-per-fixture summary instead
        if (suite.empty()) {
            out << std::left << std::setw(28) << "rule" << std::right << std::setw(3) << "h"
                << std::setw(4) << "k" << std::setw(5) << "hyp" << std::setw(7) << "concl"
                << std::setw(10) << "violated" << "\n";
            for (const auto& c : checks) {
                out << std::left << std::setw(28) << c.rule << std::right << std::setw(3)
                    << (c.h ? std::to_string(*c.h) : "-") << std::setw(4) << c.k << std::setw(5)
                    << yesno(c.hypothesis_held) << std::setw(7) << yesno(c.conclusion_held)
                    << std::setw(10) << yesno(c.violated()) << "\n";
            }
        }
    }

    if (!suite.empty()) {
        std::size_t passed = 0;
        for (const auto& s : suite)
            if (s.pass()) ++passed;
        for (std::size_t i = 0; i < suite.size(); ++i) {
            const auto& s = suite[i];
            out << "[" << std::setw(2) << (i + 1) << "] " << std::left << std::setw(52) << s.label
                << std::right << " expected " << std::setw(3) << s.expected << "  actual "
                << std::setw(3) << s.actual << "  " << (s.pass() ? "PASS" : "FAIL") << "\n";
        }
        out << "suite: " << passed << "/" << suite.size() << " lines pass\n";
    }

    out << "status: " << (pass ? "pass" : "fail") << "\n";
    return out.str();
}

std::string digest_hex(const std::string& bytes) {
    u64 hash = 14695981039346656037ULL;
    for (unsigned char ch : bytes) {
        hash ^= ch;
        hash *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << hash;
    return out.str();
}

} // namespace secvar
