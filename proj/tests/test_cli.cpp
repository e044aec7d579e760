#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "dunkl/cli.hpp"

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = dunkl::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("basis command emits labeled elements with certificates") {
    auto r = run({"basis", "--group", "z2^3", "--kappa", "1/2,1/3,1/4", "--eps", "-1",
                  "--degree", "2", "--kind", "maxwell", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("\"rank\": 6") != std::string::npos);
    CHECK(r.out.find("\"kernel\": true") != std::string::npos);
    // 6 labeled elements
    size_t count = 0, pos = 0;
    while ((pos = r.out.find("\"label\"", pos)) != std::string::npos) {
        ++count;
        pos += 7;
    }
    CHECK(count == 6);
}

TEST_CASE("basis degree 0 gives the constant spinors") {
    auto r = run({"basis", "--group", "z2^2", "--kappa", "1/2,1/3", "--degree", "0",
                  "--format", "csv"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == "label;spinor_index;component;exponents;coefficient\n"
                   "0 0;0;0;0 0;1\n"
                   "0 0;1;1;0 0;1\n");
}

TEST_CASE("ck on a non-Z2 group is a configuration error") {
    auto r = run({"basis", "--group", "b2", "--kappa", "1/2,1/2", "--degree", "1",
                  "--kind", "ck"});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("CK requires Z2^d") != std::string::npos);
}

TEST_CASE("verify exit codes") {
    auto ok = run({"verify", "--suite", "osp12", "--group", "z2^2", "--kappa", "1/2,1/2",
                   "--eps", "+1", "--max-degree", "2"});
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("[FAIL]") == std::string::npos);

    auto bad_suite = run({"verify", "--suite", "nonsense", "--group", "z2^2", "--kappa",
                          "1/2,1/2"});
    CHECK(bad_suite.exit_code == 2);

    auto bad_kappa = run({"verify", "--suite", "osp12", "--group", "z2^2", "--kappa", "1/2"});
    CHECK(bad_kappa.exit_code == 2);
}

TEST_CASE("internal failures exit with code 1") {
    auto r = run({"basis", "--group", "z2^3", "--kappa", "1/2,1/3,1/4", "--degree", "1",
                  "--elim", "5"});
    CHECK(r.exit_code == 1);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("dims table") {
    auto r = run({"dims", "--group", "z2^3", "--kappa", "1/2,1/3,1/4", "--degrees", "0..2"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("0\t2\t2") != std::string::npos);
    CHECK(r.out.find("1\t4\t4") != std::string::npos);
    CHECK(r.out.find("2\t6\t6") != std::string::npos);
}

TEST_CASE("config file with flag override") {
    const std::string path = "test_cli_config.tmp";
    {
        std::ofstream f(path);
        f << "# comment\n";
        f << "group = z2^2\n";
        f << "kappa = 1/2,1/3\n";
        f << "eps = -1\n";
        f << "degree = 1\n";
        f << "format = csv\n";
    }
    auto from_file = run({"basis", "--config", path});
    REQUIRE(from_file.exit_code == 0);
    CHECK(from_file.out.find("label;") == 0);

    // flag overrides the file's degree
    auto overridden = run({"basis", "--config", path, "--degree", "0", "--format", "csv"});
    REQUIRE(overridden.exit_code == 0);
    CHECK(overridden.out.find("0 0;0;0;0 0;1") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("explicit root list through config") {
    const std::string path = "test_cli_explicit.tmp";
    {
        std::ofstream f(path);
        f << "group = explicit\n";
        f << "roots = 1,0 ; 0,1 ; 1,1 ; 1,-1\n";  // B2 shape, normalized internally
        f << "kappa = 1/2,1/2,1/3,1/3\n";
    }
    auto r = run({"verify", "--config", path, "--suite", "osp12", "--max-degree", "2"});
    CHECK(r.exit_code == 0);
    std::remove(path.c_str());
}

TEST_CASE("byte-identical reruns") {
    const std::vector<std::string> args = {"basis", "--group", "z2^3", "--kappa",
                                           "1/2,1/3,1/4", "--eps", "-1", "--degree", "3",
                                           "--kind", "partial-z", "--format", "json"};
    auto first = run(args);
    auto second = run(args);
    REQUIRE(first.exit_code == 0);
    CHECK(first.out == second.out);
}
