#include "doctest.h"

#include <charconv>
#include <cmath>
#include <random>

#include "gevlab/json_io.hpp"
#include "gevlab/suites.hpp"

using namespace gevlab;

TEST_CASE("format_double round-trips bit-exactly") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    std::vector<double> vals{0.0, 1.0, -1.0, 0.1, 1e-300, 1e300, 2.0 / 3.0};
    for (int i = 0; i < 500; ++i) vals.push_back(u(rng) * std::pow(10.0, int(rng() % 40) - 20));
    for (double v : vals) {
        const std::string s = format_double(v);
        double back = 0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), back);
        REQUIRE(res.ec == std::errc());
        CHECK(back == v);
    }
}

TEST_CASE("stencil serialization carries exact decimal strings") {
    const json j = to_json(build_stencil(2));
    CHECK(j.at("k") == 2);
    CHECK(j.at("nodes") == std::vector<int>{-1, 0, 1});
    CHECK(j.at("coefficients")[0].at("num") == "1");
    CHECK(j.at("coefficients")[1].at("num") == "-2");
    CHECK(j.at("coefficients")[2].at("den") == "1");

    // arbitrary-precision coefficients survive as decimal strings
    Stencil big;
    big.k = 1;
    big.nodes = {0, 1};
    const Rational huge(BigInt("123456789012345678901234567891"), BigInt(7));
    big.coefficients = {huge, Rational(1)};
    const json jb = to_json(big);
    const Rational back(BigInt(jb.at("coefficients")[0].at("num").get<std::string>()),
                        BigInt(jb.at("coefficients")[0].at("den").get<std::string>()));
    CHECK(back == huge);
    CHECK(jb.at("coefficients")[0].at("num").get<std::string>().size() >= 29);
}

TEST_CASE("field json tree parses and evaluates") {
    const json spec = {{"kind", "product"},
                       {"children",
                        {{{"kind", "trig"}, {"params", {{"omega", 2.0}, {"phase", 0.0}}}},
                         {{"kind", "scale"}, {"params", {{"factor", 3.0}}}, {"children", {{{"kind", "gaussian"}, {"params", {{"alpha", 1.0}}}}}}}}}};
    const ScalarField f = field_from_json(spec);
    const double x = 0.4;
    CHECK(f(x) == doctest::Approx(std::cos(2 * x) * 3.0 * std::exp(-x * x)));

    CHECK_THROWS_AS(field_from_json(json{{"kind", "nope"}}), std::invalid_argument);
    CHECK_THROWS_AS(field_from_json(json{{"kind", "polynomial"}}), std::invalid_argument);
    CHECK_THROWS_AS(field_from_json(json::array()), std::invalid_argument);
}

TEST_CASE("kernel json parses both families and rejects garbage") {
    const Kernel frac = kernel_from_json(json{{"kind", "fractional"}, {"n", 1}, {"s", 0.8}});
    CHECK(frac.s() == 0.8);
    CHECK(frac.kind() == Kernel::Kind::fractional);

    const Kernel pert = kernel_from_json(json{{"kind", "perturbed"}, {"n", 1}, {"s", 0.75}, {"eps", 0.2}});
    CHECK(pert.kind() == Kernel::Kind::perturbed);

    CHECK_THROWS_AS(kernel_from_json(json{{"kind", "fractional"}, {"n", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(kernel_from_json(json{{"kind", "weird"}, {"s", 0.75}}), std::invalid_argument);
}

TEST_CASE("suite reports embed version and config and are byte-stable") {
    const json cfg{{"command", "verify"}, {"suite", "closure"}, {"seed", 7}};
    const auto groups1 = suites::run_suite("closure", 7);
    const auto groups2 = suites::run_suite("closure", 7);
    const std::string d1 = suites::report_json(groups1, cfg).dump(2);
    const std::string d2 = suites::report_json(groups2, cfg).dump(2);
    CHECK(d1 == d2);
    CHECK(d1.find("gevlab 0.1.0") != std::string::npos);
    CHECK(d1.find("\"command\"") != std::string::npos);
    CHECK_THROWS_AS(suites::run_suite("bogus", 1), std::invalid_argument);
}
