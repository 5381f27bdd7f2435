#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace gevlab::suites {

struct Check {
    std::string name;
    bool pass = false;
    double value = 0.0;
    double threshold = 0.0;
    std::string detail;
};

struct Group {
    Group() = default;
    explicit Group(std::string n) : name(std::move(n)) {}

    std::string name;
    std::vector<Check> checks;
    std::map<std::string, std::string> tables;  // csv name -> contents
    double seconds = 0.0;

    bool pass() const;
    Check& add(std::string name, bool pass, double value, double threshold, std::string detail = "");
};

// The verification battery. Each group is deterministic given the seed.
Group stencil_exactness();                  // moment conditions, exact arithmetic
Group quotient_convergence();               // derivative estimates vs jet oracle
Group discrete_identities(std::uint64_t seed);
Group kernel_homogeneity(std::uint64_t seed);
Group envelope_growth_fit(std::uint64_t seed);
Group symbol_check();
Group classical_limit();
Group quotient_integral_limit();
Group apriori_estimate();
Group induction_step();
Group induction_closure_suite();
Group gevrey_fits();

// Named suites exposed by the command line driver.
std::vector<std::string> suite_names();
std::vector<Group> run_suite(const std::string& name, std::uint64_t seed);

// Full report over the given groups, embedding the job configuration and
// the library version; byte-stable for identical inputs.
nlohmann::json report_json(const std::vector<Group>& groups, const nlohmann::json& job_config);

}  // namespace gevlab::suites
