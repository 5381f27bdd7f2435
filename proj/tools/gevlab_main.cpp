#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "gevlab/gevrey.hpp"
#include "gevlab/json_io.hpp"
#include "gevlab/quad.hpp"
#include "gevlab/stencil.hpp"
#include "gevlab/suites.hpp"
#include "gevlab/version.hpp"

namespace fs = std::filesystem;
using gevlab::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void write_text(const fs::path& path, const std::string& text) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << text;
}

void write_report(const fs::path& out_dir, const json& report,
                  const std::vector<gevlab::suites::Group>& groups) {
    write_text(out_dir / "report.json", report.dump(2) + "\n");
    for (const auto& g : groups)
        for (const auto& [name, csv] : g.tables) write_text(out_dir / "tables" / name, csv);
}

struct Options {
    int k = 2;
    double s = 0.75;
    double R = 2.0;
    int pmax = 10;
    std::string field_path, kernel_path, config_path;
    std::string out_dir = "out";
    std::uint64_t seed = 1234;
    std::string suite = "all";
    std::vector<double> x{0.0};
    double rho = 1e-2, rcut = 1e3, tol = 1e-9;
    double r0 = 0.5;
};

// --config supplies defaults; explicit flags win.
void apply_config(Options& o, const json& cfg) {
    if (cfg.contains("k")) o.k = cfg.at("k").get<int>();
    if (cfg.contains("s")) o.s = cfg.at("s").get<double>();
    if (cfg.contains("R")) o.R = cfg.at("R").get<double>();
    if (cfg.contains("pmax")) o.pmax = cfg.at("pmax").get<int>();
    if (cfg.contains("seed")) o.seed = cfg.at("seed").get<std::uint64_t>();
    if (cfg.contains("suite")) o.suite = cfg.at("suite").get<std::string>();
    if (cfg.contains("out")) o.out_dir = cfg.at("out").get<std::string>();
    if (cfg.contains("x")) o.x = cfg.at("x").get<std::vector<double>>();
    if (cfg.contains("rho")) o.rho = cfg.at("rho").get<double>();
    if (cfg.contains("rcut")) o.rcut = cfg.at("rcut").get<double>();
    if (cfg.contains("tol")) o.tol = cfg.at("tol").get<double>();
}

json job_config(const Options& o, const std::string& command) {
    return {{"command", command}, {"k", o.k},       {"s", o.s},     {"R", o.R},
            {"pmax", o.pmax},     {"seed", o.seed}, {"suite", o.suite}};
}

int cmd_stencil(const Options& o) {
    const gevlab::Stencil st = gevlab::build_stencil(o.k);
    json report{{"version", std::string(gevlab::kVersion)},
                {"config", job_config(o, "stencil")},
                {"stencil", gevlab::to_json(st)}};
    std::cout << report.dump(2) << "\n";
    write_text(fs::path(o.out_dir) / "report.json", report.dump(2) + "\n");
    return kExitOk;
}

int cmd_eval(const Options& o) {
    if (o.field_path.empty()) throw std::invalid_argument("eval: --field FILE.json is required");
    if (o.kernel_path.empty()) throw std::invalid_argument("eval: --kernel FILE.json is required");
    const gevlab::ScalarField u = gevlab::field_from_json(load_json_file(o.field_path));
    const gevlab::Kernel k = gevlab::kernel_from_json(load_json_file(o.kernel_path));

    gevlab::QuadratureConfig cfg;
    cfg.inner_radius = o.rho;
    cfg.outer_cutoff = o.rcut;
    cfg.panel_tolerance = o.tol;

    json evals = json::array();
    for (double x : o.x) {
        const gevlab::OperatorValue v = gevlab::evaluate(u, k, gevlab::vec1(x), cfg);
        json jv = gevlab::to_json(v);
        jv["x"] = x;
        evals.push_back(jv);
    }
    json report{{"version", std::string(gevlab::kVersion)},
                {"config", job_config(o, "eval")},
                {"field", u.describe()},
                {"kernel", k.describe()},
                {"evaluations", evals}};
    std::cout << report.dump(2) << "\n";
    write_text(fs::path(o.out_dir) / "report.json", report.dump(2) + "\n");
    return kExitOk;
}

int cmd_ladder_fit(const Options& o, bool with_fit) {
    if (o.field_path.empty()) throw std::invalid_argument("ladder/fit: --field FILE.json is required");
    const gevlab::ScalarField u = gevlab::field_from_json(load_json_file(o.field_path));
    const gevlab::NormLadder lad = gevlab::ladder(u, gevlab::ScalarField(), o.R, o.s, o.pmax);
    json report{{"version", std::string(gevlab::kVersion)},
                {"config", job_config(o, with_fit ? "fit" : "ladder")},
                {"field", u.describe()},
                {"ladder", gevlab::to_json(lad)}};
    if (with_fit) {
        const gevlab::GevreyFit fit = gevlab::fit_gevrey(lad, std::min(2, o.pmax), o.pmax);
        report["fit"] = gevlab::to_json(fit);
    }
    std::cout << report.dump(2) << "\n";
    write_text(fs::path(o.out_dir) / "report.json", report.dump(2) + "\n");
    return kExitOk;
}

int cmd_kernel(const Options& o) {
    if (o.kernel_path.empty()) throw std::invalid_argument("kernel: --kernel FILE.json is required");
    const gevlab::Kernel k = gevlab::kernel_from_json(load_json_file(o.kernel_path));
    const gevlab::KernelReport rep = gevlab::check_kernel(k, o.r0, o.pmax, {4096, o.seed});

    json report{{"version", std::string(gevlab::kVersion)},
                {"config", job_config(o, "kernel")},
                {"kernel", k.describe()},
                {"report", gevlab::to_json(rep)}};
    write_text(fs::path(o.out_dir) / "report.json", report.dump(2) + "\n");

    auto line = [](const char* name, bool pass, const std::string& detail) {
        std::cout << (pass ? "PASS " : "FAIL ") << name << "  " << detail << "\n";
        return pass;
    };
    bool ok = true;
    ok &= line("proximity", rep.proximity.pass,
               "a0=" + gevlab::format_double(rep.proximity.a0) + " eta=" + gevlab::format_double(rep.proximity.eta) +
                   " (needs eta < a0/4)");
    ok &= line("positivity", rep.positivity_pass, "sampled");
    ok &= line("envelope-growth", rep.growth_pass,
               "Lambda=" + gevlab::format_double(rep.growth.lambda()) + " nu=" + gevlab::format_double(rep.growth.nu) +
                   " rms=" + gevlab::format_double(rep.growth.rms));
    std::cout << "(sampled, not certified)\n";
    return ok ? kExitOk : kExitVerificationFailure;
}

int cmd_verify(const Options& o) {
    const auto groups = gevlab::suites::run_suite(o.suite, o.seed);
    const json report = gevlab::suites::report_json(groups, job_config(o, "verify"));
    write_report(o.out_dir, report, groups);

    bool all_pass = true;
    for (const auto& g : groups) {
        for (const auto& c : g.checks) {
            all_pass = all_pass && c.pass;
            std::cout << (c.pass ? "PASS " : "FAIL ") << g.name << "/" << c.name << "  value="
                      << gevlab::format_double(c.value) << " threshold=" << gevlab::format_double(c.threshold);
            if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
            std::cout << "\n";
        }
    }
    std::cout << (all_pass ? "ALL CHECKS PASSED" : "SOME CHECKS FAILED") << "\n";
    return all_pass ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"incremental quotients, singular-kernel nonlocal operators, and derivative-growth ladders"};
    app.set_version_flag("--version", std::string(gevlab::kVersion));
    app.require_subcommand(1);

    Options o;
    std::string config_path;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON job configuration file");
        sub->add_option("--out", o.out_dir, "output directory for report.json and tables/");
        sub->add_option("--seed", o.seed, "deterministic seed");
    };

    CLI::App* stencil = app.add_subcommand("stencil", "print an incremental-quotient stencil");
    stencil->add_option("--k", o.k, "quotient order");
    add_common(stencil);

    CLI::App* eval = app.add_subcommand("eval", "evaluate the nonlocal operator on a field");
    eval->add_option("--field", o.field_path, "field JSON file");
    eval->add_option("--kernel", o.kernel_path, "kernel JSON file");
    eval->add_option("--x", o.x, "evaluation points");
    eval->add_option("--rho", o.rho, "inner radius");
    eval->add_option("--rcut", o.rcut, "outer cutoff");
    eval->add_option("--tol", o.tol, "panel tolerance");
    add_common(eval);

    CLI::App* lad = app.add_subcommand("ladder", "weighted derivative ladder of a field");
    lad->add_option("--field", o.field_path, "field JSON file");
    lad->add_option("--R", o.R, "outer radius");
    lad->add_option("--s", o.s, "fractional order");
    lad->add_option("--pmax", o.pmax, "largest ladder index");
    add_common(lad);

    CLI::App* fit = app.add_subcommand("fit", "ladder plus derivative-growth fit");
    fit->add_option("--field", o.field_path, "field JSON file");
    fit->add_option("--R", o.R, "outer radius");
    fit->add_option("--s", o.s, "fractional order");
    fit->add_option("--pmax", o.pmax, "largest ladder index");
    add_common(fit);

    CLI::App* kcheck = app.add_subcommand("kernel", "structural diagnostics of a kernel");
    kcheck->add_option("--kernel", o.kernel_path, "kernel JSON file");
    kcheck->add_option("--r0", o.r0, "proximity radius");
    kcheck->add_option("--pmax", o.pmax, "largest envelope order (<= 12)");
    add_common(kcheck);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", o.suite, "one of: stencil, kernel, symbol, proint, apriori, step, closure, gevrey, all");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (!config_path.empty()) apply_config(o, load_json_file(config_path));

        if (app.got_subcommand(stencil)) return cmd_stencil(o);
        if (app.got_subcommand(eval)) return cmd_eval(o);
        if (app.got_subcommand(kcheck)) return cmd_kernel(o);
        if (app.got_subcommand(lad)) return cmd_ladder_fit(o, false);
        if (app.got_subcommand(fit)) return cmd_ladder_fit(o, true);
        if (app.got_subcommand(verify)) return cmd_verify(o);
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
}
