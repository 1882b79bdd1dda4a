#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "secvar/report.hpp"
#include "secvar/secdim.hpp"
#include "secvar/varieties.hpp"
#include "secvar/verify.hpp"
#include "secvar/version.hpp"

namespace {

using namespace secvar;

struct CommonOpts {
    ComputeCfg cfg;
    bool json = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--prime", o.cfg.prime, "field modulus, must be prime")->capture_default_str();
    cmd->add_option("--seed", o.cfg.seed, "root random seed")->capture_default_str();
    cmd->add_option("--trials", o.cfg.trials, "independent trials per estimate")->capture_default_str();
    cmd->add_option("--retry-cap", o.cfg.retry_cap, "resampling budget per trial")->capture_default_str();
    cmd->add_flag("--cross-check", o.cfg.cross_check, "repeat each estimate over exact rationals");
    cmd->add_flag("--json", o.json, "emit a canonical JSON report");
}

struct VarietyOpts {
    std::string selector;
    std::string file;
};

void add_variety(CLI::App* cmd, VarietyOpts& o) {
    auto* sel = cmd->add_option("--variety", o.selector, "catalog selector, e.g. veronese:2,2");
    auto* file = cmd->add_option("--variety-file", o.file, "path of a variety JSON document");
    sel->excludes(file);
    file->excludes(sel);
}

Variety resolve_variety(const VarietyOpts& o, Report& rep) {
    if (!o.selector.empty()) return catalog_lookup(o.selector);
    if (!o.file.empty()) {
        std::ifstream in(o.file, std::ios::binary);
        if (!in) throw ParseError("cannot open variety file: " + o.file);
        std::ostringstream buf;
        buf << in.rdbuf();
        rep.variety_digest = digest_hex(buf.str());
        return load_variety(buf.str());
    }
    throw UsageError("give either --variety or --variety-file");
}

void emit(const Report& rep, bool json) {
    std::cout << (json ? rep.to_json_text() : rep.to_table_text());
}

int cmd_catalog(const CommonOpts& common) {
    Report rep;
    rep.command = "catalog";
    rep.cfg = common.cfg;
    rep.catalog_entries = builtin_catalog();
    emit(rep, common.json);
    return 0;
}

int cmd_dims(const CommonOpts& common, const VarietyOpts& vopt, const std::string& kind,
             i64 opt_h, i64 opt_k) {
    Report rep;
    rep.command = "dims";
    rep.cfg = common.cfg;
    const Variety v = resolve_variety(vopt, rep);
    rep.set_variety(v);

    const auto need_k = [&]() -> std::size_t {
        if (opt_k < 0) throw UsageError("kind " + kind + " needs --k");
        return static_cast<std::size_t>(opt_k);
    };

    if (kind == "span") {
        rep.results.push_back(span_dim(v, common.cfg));
    } else if (kind == "S") {
        rep.results.push_back(secant_dim(v, need_k(), common.cfg));
    } else if (kind == "G") {
        rep.results.push_back(grass_dim(v, need_k(), common.cfg));
    } else if (kind == "GHK") {
        if (opt_h < 0) throw UsageError("kind GHK needs --h");
        rep.results.push_back(
            grass_secant_dim(v, static_cast<std::size_t>(opt_h), need_k(), common.cfg));
    } else {
        throw UsageError("kind must be one of span, S, G, GHK");
    }

    if (common.cfg.cross_check)
        for (const auto& e : rep.results)
            rep.pass = rep.pass && e.cross_check_agrees.value_or(true);
    emit(rep, common.json);
    return 0;
}

int cmd_scan(const CommonOpts& common, const VarietyOpts& vopt, i64 max_k) {
    if (max_k < 0) throw UsageError("--max-k must be non-negative");
    Report rep;
    rep.command = "scan";
    rep.cfg = common.cfg;
    const Variety v = resolve_variety(vopt, rep);
    rep.set_variety(v);

    rep.validation = validate(v, common.cfg);
    if (!rep.validation->ok()) {
        rep.pass = false;
        emit(rep, common.json);
        return 4;
    }

    const std::size_t top = std::min<std::size_t>(static_cast<std::size_t>(max_k), v.r);
    rep.results.push_back(span_dim(v, common.cfg));
    for (std::size_t k = 0; k <= top; ++k) rep.results.push_back(secant_dim(v, k, common.cfg));
    for (std::size_t k = 0; k <= top; ++k) {
        if (v.n * (k + 1) > common.cfg.direction_limit) continue;
        rep.results.push_back(grass_dim(v, k, common.cfg));
    }
    for (std::size_t k = 1; k <= top; ++k) {
        for (std::size_t h = 0; h < k; ++h) {
            if (v.n * (k + 1) + (h + 1) * (k + 1) > common.cfg.direction_limit) continue;
            rep.results.push_back(grass_secant_dim(v, h, k, common.cfg));
        }
    }

    rep.checks = check_inequalities(v, top, common.cfg);
    for (const auto& c : rep.checks) rep.pass = rep.pass && !c.violated();
    for (const auto& e : rep.results)
        rep.pass = rep.pass && e.cross_check_agrees.value_or(true);
    emit(rep, common.json);
    return 0;
}

int cmd_verify(const CommonOpts& common) {
    Report rep;
    rep.command = "verify";
    rep.cfg = common.cfg;
    const SuiteResult res = run_verification_suite(common.cfg);
    rep.suite = res.lines;
    rep.checks = res.checks;
    rep.pass = res.all_pass;
    emit(rep, common.json);
    return res.all_pass ? 0 : 1;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const SampleFailure*>(&e) != nullptr ||
        dynamic_cast<const SingularPivotBlock*>(&e) != nullptr ||
        dynamic_cast<const DegenerateSample*>(&e) != nullptr)
        return 3;
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(kToolName) +
                 " - exact randomized dimensions of secant varieties and their plane families"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);

    CommonOpts catalog_o, dims_o, scan_o, verify_o;
    VarietyOpts dims_v, scan_v;
    std::string kind;
    i64 opt_h = -1;
    i64 opt_k = -1;
    i64 max_k = 3;

    auto* c_catalog = app.add_subcommand("catalog", "list the built-in varieties");
    add_common(c_catalog, catalog_o);

    auto* c_dims = app.add_subcommand("dims", "compute one dimension estimate");
    add_common(c_dims, dims_o);
    add_variety(c_dims, dims_v);
    c_dims->add_option("--kind", kind, "span, S, G or GHK")->required();
    c_dims->add_option("--h", opt_h, "plane dimension h, GHK only");
    c_dims->add_option("--k", opt_k, "secant index k");

    auto* c_scan = app.add_subcommand("scan", "validate, then sweep dimensions and implications");
    add_common(c_scan, scan_o);
    add_variety(c_scan, scan_v);
    c_scan->add_option("--max-k", max_k, "largest secant index in the sweep")->capture_default_str();

    auto* c_verify = app.add_subcommand("verify", "run the built-in verification suite");
    add_common(c_verify, verify_o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_catalog->parsed()) return cmd_catalog(catalog_o);
        if (c_dims->parsed()) return cmd_dims(dims_o, dims_v, kind, opt_h, opt_k);
        if (c_scan->parsed()) return cmd_scan(scan_o, scan_v, max_k);
        if (c_verify->parsed()) return cmd_verify(verify_o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return 2;
}
