// End-to-end tests of the lgpot binary: every subcommand, the exit code
// contract, and byte-determinism of the output.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#ifndef LGPOT_CLI_PATH
#error "LGPOT_CLI_PATH must point at the lgpot binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(LGPOT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/lgpot_test_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

} // namespace

TEST_CASE("eval") {
    auto r = run("eval --vars x,y --expr \"x + y + x^-1*y^-1\" --at 1,1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"value\":\"3\"}\n");

    auto g = run("eval --vars x,y --expr \"x + y + x^-1*y^-1\" --at i,-1");
    CHECK(g.exit_code == 0);
    CHECK(g.out == "{\"value\":\"-1+2*i\"}\n");

    auto a = run("eval --vars x,y --expr \"x + y\" --at 1,1 --approx");
    CHECK(a.exit_code == 0);
    CHECK(a.out.find("\"re\":2.0") != std::string::npos);

    CHECK(run("eval --vars x,y --expr \"x +\" --at 1,1").exit_code == 2);
    CHECK(run("eval --vars x,y --expr \"x\" --at 0,1").exit_code == 2);
    CHECK(run("eval --vars x,y").exit_code == 2);
}

TEST_CASE("pow emits canonical polynomial JSON") {
    auto r = run("pow --vars x --expr \"x + x^-1\" --k 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "{\"vars\":[\"x\"],\"terms\":[{\"coeff\":\"1\",\"exp\":[-2]},"
          "{\"coeff\":\"2\",\"exp\":[0]},{\"coeff\":\"1\",\"exp\":[2]}]}\n");
}

TEST_CASE("change-basis") {
    auto r = run("change-basis --vars x,y --expr \"x + y\" --matrix \"1,0;1,1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "{\"vars\":[\"x\",\"y\"],\"terms\":[{\"coeff\":\"1\",\"exp\":[1,0]},"
          "{\"coeff\":\"1\",\"exp\":[1,1]}]}\n");
    CHECK(run("change-basis --vars x,y --expr \"x\" --matrix \"2,0;0,1\"").exit_code ==
          2);
}

TEST_CASE("struct-const on the Clifford family") {
    // Build the family file with the pow subcommand's own output format.
    std::string fam = R"({
      "W": {"vars":["x","y"],"terms":[{"coeff":"1","exp":[-1,-1]},{"coeff":"1","exp":[0,1]},{"coeff":"1","exp":[1,0]}]},
      "higher": [
        {"vars":["x","y"],"terms":[{"coeff":"1","exp":[0,0]}]},
        {"vars":["x","y"],"terms":[{"coeff":"1","exp":[-1,-1]},{"coeff":"1","exp":[0,1]},{"coeff":"1","exp":[1,0]}]},
        {"vars":["x","y"],"terms":[{"coeff":"1","exp":[-2,-2]},{"coeff":"2","exp":[-1,0]},{"coeff":"2","exp":[0,-1]},{"coeff":"2","exp":[1,1]},{"coeff":"1","exp":[0,2]},{"coeff":"1","exp":[2,0]}]},
        {"vars":["x","y"],"terms":[{"coeff":"1","exp":[-3,-3]},{"coeff":"3","exp":[-2,-1]},{"coeff":"3","exp":[-1,-2]},{"coeff":"3","exp":[-1,1]},{"coeff":"3","exp":[1,-1]},{"coeff":"3","exp":[1,2]},{"coeff":"3","exp":[2,1]},{"coeff":"1","exp":[0,3]},{"coeff":"1","exp":[3,0]}]}
      ]
    })";
    std::string path = write_temp("family.json", fam);
    auto r = run("struct-const --family " + path + " --k 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"k\":3,\"c\":[\"6\",\"0\",\"0\"]}\n");

    // Perturbed family: inconsistent, exit 1.
    std::string bad = fam;
    bad.replace(bad.find("\"exp\":[3,0]"), 11, "\"exp\":[5,0]");
    std::string bad_path = write_temp("family_bad.json", bad);
    CHECK(run("struct-const --family " + bad_path + " --k 3").exit_code == 1);
}

TEST_CASE("twisted-ranks") {
    auto r = run("twisted-ranks --n 2 --lambda 2,1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"betti\":[0,0,0],\"acyclic\":true}\n");

    auto t = run("twisted-ranks --n 2 --lambda 1,1");
    CHECK(t.exit_code == 0);
    CHECK(t.out == "{\"betti\":[1,2,1],\"acyclic\":false}\n");

    CHECK(run("twisted-ranks --n 2 --lambda 0,1").exit_code == 2);
}

TEST_CASE("hom-check and bs-check") {
    std::string alg = write_temp("alg.json",
                                 R"({"gens":["p","q"],"inverted":"1-p*q"})");
    std::string hom = write_temp(
        "hom.json", R"({"vars":["u","v"],"images":{"p":"(u+1)*v","q":"v^-1"}})");
    auto r = run("hom-check --alg " + alg + " --hom " + hom);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"ok\":true}\n");

    std::string bad_hom = write_temp(
        "hom_bad.json", R"({"vars":["u","v"],"images":{"p":"u","q":"u"}})");
    auto b = run("hom-check --alg " + alg + " --hom " + bad_hom);
    CHECK(b.exit_code == 1);
    CHECK(b.out == "{\"ok\":false}\n");

    auto c = run("bs-check --alg " + alg + " --hom " + hom +
                 " --bs p --d 1 --potential \"(u+1)*v\"");
    CHECK(c.exit_code == 0);
    CHECK(c.out == "{\"ok\":true}\n");

    auto d = run("bs-check --alg " + alg + " --hom " + hom +
                 " --bs p --d 1 --potential \"v^-1\"");
    CHECK(d.exit_code == 1);
}

TEST_CASE("wallcross") {
    std::string phi = write_temp("phi.json", R"({
        "source_vars": ["u", "v"],
        "target_vars": ["u", "v"],
        "map": {
            "u": {"monomial": {"coeff": "1", "exp": [1, 0]}},
            "v": {"monomial": {"coeff": "1", "exp": [0, -1]},
                  "binomial_exp": [1, 0], "power": -1}
        }
    })");
    auto r = run("wallcross --w0 \"(u+1)*v\" --w1 \"v^-1\" --phi " + phi);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"ok\":true}\n");

    auto f = run("wallcross --w0 \"(u+1)*v\" --w1 \"v^-2\" --phi " + phi);
    CHECK(f.exit_code == 1);
    CHECK(f.out == "{\"ok\":false}\n");
}

TEST_CASE("identical inputs give byte-identical output") {
    const std::string cmd = "pow --vars x,y --expr \"(x + y + x^-1*y^-1)^2\" --k 3";
    auto a = run(cmd);
    auto b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}
