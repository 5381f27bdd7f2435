#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(GEVLAB_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof(buf), pipe)) res.output.append(buf, n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

fs::path temp_dir(const std::string& tag) {
    const fs::path p = fs::temp_directory_path() / ("gevlab_cli_" + tag);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("stencil subcommand: orders 0 and 2, and the order guard") {
    const auto out = temp_dir("stencil");
    const RunResult k2 = run_cli("stencil --k 2 --out " + out.string());
    CHECK(k2.exit_code == 0);
    CHECK(k2.output.find("\"num\": \"-2\"") != std::string::npos);

    const RunResult k0 = run_cli("stencil --k 0 --out " + out.string());
    CHECK(k0.exit_code == 0);
    CHECK(k0.output.find("\"num\": \"1\"") != std::string::npos);

    const RunResult k17 = run_cli("stencil --k 17 --out " + out.string());
    CHECK(k17.exit_code == 2);
    CHECK(k17.output.find("exceeds maximum") != std::string::npos);
}

TEST_CASE("eval subcommand: trig field against the fractional kernel") {
    const auto out = temp_dir("eval");
    const fs::path field = out / "field.json";
    const fs::path kernel = out / "kernel.json";
    std::ofstream(field) << R"({"kind":"trig","params":{"omega":1.0,"phase":0.0}})";
    std::ofstream(kernel) << R"({"kind":"fractional","n":1,"s":0.75})";

    const RunResult res = run_cli("eval --field " + field.string() + " --kernel " + kernel.string() +
                                  " --x 0.0 --rcut 10000 --out " + out.string());
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"value\"") != std::string::npos);
    CHECK(fs::exists(out / "report.json"));

    // missing kernel parameter: usage error
    const fs::path bad = out / "bad.json";
    std::ofstream(bad) << R"({"kind":"fractional","n":1})";
    const RunResult miss = run_cli("eval --field " + field.string() + " --kernel " + bad.string());
    CHECK(miss.exit_code == 2);

    const RunResult nofield = run_cli("eval --kernel " + kernel.string());
    CHECK(nofield.exit_code == 2);
}

TEST_CASE("verify subcommand: closure suite passes, unknown suite exits 2") {
    const auto out = temp_dir("verify");
    const RunResult res = run_cli("verify --suite closure --out " + out.string());
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("two-term-bracket") != std::string::npos);
    CHECK(res.output.find("ALL CHECKS PASSED") != std::string::npos);
    const std::string report = slurp(out / "report.json");
    CHECK(report.find("\"Gamma\"") == std::string::npos);  // closure numbers live in checks
    CHECK(report.find("two-term-bracket") != std::string::npos);

    const RunResult unk = run_cli("verify --suite nonsense");
    CHECK(unk.exit_code == 2);
}

TEST_CASE("verify reports are byte-identical across runs with the same seed") {
    const auto a = temp_dir("det_a");
    const auto b = temp_dir("det_b");
    const RunResult ra = run_cli("verify --suite proint --seed 99 --out " + a.string());
    const RunResult rb = run_cli("verify --suite proint --seed 99 --out " + b.string());
    CHECK(ra.exit_code == 0);
    CHECK(rb.exit_code == 0);
    CHECK(slurp(a / "report.json") == slurp(b / "report.json"));
    CHECK(slurp(a / "tables" / "quotient_integral_gamma1-r2.csv") ==
          slurp(b / "tables" / "quotient_integral_gamma1-r2.csv"));
}

TEST_CASE("config file supplies defaults, flags still win") {
    const auto out = temp_dir("config");
    const fs::path field = out / "field.json";
    const fs::path kernel = out / "kernel.json";
    const fs::path job = out / "job.json";
    std::ofstream(field) << R"({"kind":"gaussian","params":{"alpha":1.0}})";
    std::ofstream(kernel) << R"({"kind":"fractional","n":1,"s":0.75})";
    std::ofstream(job) << R"({"x":[0.0,0.5],"seed":777})";

    const RunResult res = run_cli("eval --field " + field.string() + " --kernel " + kernel.string() +
                                  " --config " + job.string() + " --out " + out.string());
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"x\": 0.5") != std::string::npos);
    CHECK(res.output.find("\"seed\": 777") != std::string::npos);

    const fs::path broken = out / "broken.json";
    std::ofstream(broken) << "not json at all{{";
    const RunResult garbage = run_cli("eval --field " + field.string() + " --kernel " + kernel.string() +
                                      " --config " + broken.string());
    CHECK(garbage.exit_code == 2);
}

TEST_CASE("kernel subcommand prints a pass/fail table per assumption") {
    const auto out = temp_dir("kernel");
    const fs::path kernel = out / "kernel.json";
    std::ofstream(kernel) << R"({"kind":"fractional","n":1,"s":0.75})";
    const RunResult res = run_cli("kernel --kernel " + kernel.string() + " --pmax 8 --out " + out.string());
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("PASS proximity") != std::string::npos);
    CHECK(res.output.find("PASS positivity") != std::string::npos);
    CHECK(res.output.find("PASS envelope-growth") != std::string::npos);
    CHECK(fs::exists(out / "report.json"));

    // a strongly perturbed kernel fails proximity with exit code 1
    const fs::path bad = out / "bad.json";
    std::ofstream(bad) << R"({"kind":"perturbed","n":1,"s":0.75,"eps":0.9})";
    const RunResult fail = run_cli("kernel --kernel " + bad.string() + " --pmax 6 --out " + out.string());
    CHECK(fail.exit_code == 1);
    CHECK(fail.output.find("FAIL proximity") != std::string::npos);
}

TEST_CASE("fit subcommand on a polynomial reports the finitely-supported marker") {
    const auto out = temp_dir("fit");
    const fs::path field = out / "poly.json";
    std::ofstream(field) << R"({"kind":"polynomial","params":{"coeffs":[0,0,1]}})";
    const RunResult res = run_cli("fit --field " + field.string() + " --R 2 --pmax 10 --out " + out.string());
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"finitely_supported\": true") != std::string::npos);
}
