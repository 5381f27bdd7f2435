// Acceptance battery: one line per criterion, nonzero exit if any fails.
// Run with --only <id> to execute a single criterion (used by ctest).

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "gevlab/json_io.hpp"
#include "gevlab/suites.hpp"

namespace {

using gevlab::suites::Group;

struct Criterion {
    std::string id;
    std::string label;
    double time_budget_seconds;  // 0 = untimed
    std::function<std::vector<Group>()> run;
};

constexpr std::uint64_t kSeed = 1234;

bool report(const Criterion& c) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Group> groups;
    try {
        groups = c.run();
    } catch (const std::exception& e) {
        std::cout << "[" << c.id << "] FAIL " << c.label << "  (exception: " << e.what() << ")\n";
        return false;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    bool pass = true;
    std::string first_fail;
    for (const Group& g : groups) {
        for (const auto& chk : g.checks) {
            if (!chk.pass && first_fail.empty())
                first_fail = g.name + "/" + chk.name + " value=" + gevlab::format_double(chk.value) +
                             " threshold=" + gevlab::format_double(chk.threshold);
            pass = pass && chk.pass;
        }
    }
    bool in_time = c.time_budget_seconds <= 0.0 || secs < c.time_budget_seconds;
    std::cout << "[" << c.id << "] " << (pass && in_time ? "PASS" : "FAIL") << " " << c.label << "  ("
              << gevlab::format_double(secs) << "s";
    if (c.time_budget_seconds > 0) std::cout << " of " << gevlab::format_double(c.time_budget_seconds) << "s budget";
    std::cout << ")";
    if (!pass) std::cout << "  first failing check: " << first_fail;
    if (pass && !in_time) std::cout << "  over time budget";
    std::cout << "\n";
    return pass && in_time;
}

std::vector<Group> one(Group g) {
    std::vector<Group> v;
    v.push_back(std::move(g));
    return v;
}

Group determinism_group() {
    Group g{"determinism"};
    const nlohmann::json cfg{{"command", "verify"}, {"suite", "all"}, {"seed", kSeed}};
    const std::string r1 = gevlab::suites::report_json(gevlab::suites::run_suite("all", kSeed), cfg).dump(2);
    const std::string r2 = gevlab::suites::report_json(gevlab::suites::run_suite("all", kSeed), cfg).dump(2);
    g.add("byte-identical-reports", r1 == r2, r1 == r2 ? 0.0 : 1.0, 0.0,
          "full suite rendered twice with the same seed");
    return g;
}

}  // namespace

int main(int argc, char** argv) {
    std::string only;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = argv[i + 1];
    }

    using gevlab::suites::run_suite;
    namespace s = gevlab::suites;

    const std::vector<Criterion> criteria{
        {"c01_stencil_exactness", "stencil moment conditions, exact arithmetic, k <= 12", 1.0,
         [] { return one(s::stencil_exactness()); }},
        {"c02_quotient_convergence", "derivative estimates converge at order >= 0.9", 5.0,
         [] { return one(s::quotient_convergence()); }},
        {"c03_discrete_identities", "product-rule and summation-by-parts residuals <= 1e-10", 0.0,
         [] { return one(s::discrete_identities(kSeed)); }},
        {"c04_kernel_homogeneity", "kernel derivative homogeneity defect <= 1e-12", 0.0,
         [] { return one(s::kernel_homogeneity(kSeed)); }},
        {"c05_envelope_growth_fit", "envelope growth fit: nu in [0.8, 1.2], lambda finite", 10.0,
         [] { return one(s::envelope_growth_fit(kSeed)); }},
        {"c06_symbol", "fractional symbol on the trig family, relative error <= 1e-4", 30.0,
         [] { return one(s::symbol_check()); }},
        {"c07_classical_limit", "s -> 1 recovery of the classical second derivative within 2%", 0.0,
         [] { return one(s::classical_limit()); }},
        {"c08_quotient_integral", "quotient/integral interchange: |ratio - 1| <= 1e-2 at finest h", 0.0,
         [] { return one(s::quotient_integral_limit()); }},
        {"c09_apriori", "a priori estimate: finite ratios, bounded spread, calibrated transfer", 0.0,
         [] { return one(s::apriori_estimate()); }},
        {"c10_induction_step", "induction step: calibrated ratios <= 1, holdout transfer <= 1.5", 0.0,
         [] { return one(s::induction_step()); }},
        {"c11_induction_closure", "closure search: two-term witness <= 2, calibrated witness re-verified", 0.0,
         [] { return one(s::induction_closure_suite()); }},
        {"c12_gevrey_fits", "derivative-growth fits: analytic band, flat-bump band, synthetic exactness", 60.0,
         [] { return one(s::gevrey_fits()); }},
        {"c13_determinism", "byte-identical full reports for identical seeds", 0.0,
         [] { return one(determinism_group()); }},
    };

    bool all = true;
    bool matched = false;
    for (const Criterion& c : criteria) {
        if (!only.empty() && c.id != only) continue;
        matched = true;
        all = report(c) && all;
    }
    if (!matched) {
        std::cerr << "unknown criterion id: " << only << "\n";
        return 2;
    }
    return all ? 0 : 1;
}
