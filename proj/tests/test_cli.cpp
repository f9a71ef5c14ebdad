#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

// Drives the installed binary end to end: subcommands, formats, exit codes.
namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string cli_path() {
    const char* env = std::getenv("HKG_CLI");
    REQUIRE_MESSAGE(env != nullptr, "HKG_CLI must point at the binary");
    return env;
}

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) result.output.append(buf, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("cli_") + name + ".json";
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("analyze: json output and exit 0") {
    auto path = write_temp("hermitian", R"({"p":5,"exponents":[3,1],"jumps":[1,6]})");
    auto r = run("analyze " + path + " --format json --q 5");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["genus"] == 10);
    CHECK(j["conductor_brauer"] == 20);
    CHECK(j["different_delta"] == 268);
    CHECK(j["jumps"]["upper"][1] == "6/5");
    CHECK(j["structural_case"]["case"] == "d1");
    CHECK(j["maximal_compat"]["passes_necessary_conditions"] == true);
    CHECK(j["validation"]["valid"] == true);
}

TEST_CASE("analyze: table output") {
    auto path = write_temp("hermitian2", R"({"p":5,"exponents":[3,1],"jumps":[1,6]})");
    auto r = run("analyze " + path);
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("genus") != std::string::npos);
    CHECK(r.output.find("6/5") != std::string::npos);
}

TEST_CASE("analyze: parse errors exit 2") {
    auto bad = write_temp("badjson", "{nope");
    CHECK(run("analyze " + bad).exit_code == 2);
    auto notprime = write_temp("notprime", R"({"p":4,"exponents":[1],"jumps":[3]})");
    CHECK(run("analyze " + notprime).exit_code == 2);
    CHECK(run("analyze /no/such/file.json").exit_code == 2);
}

TEST_CASE("analyze: validation failure exits 3 and still reports") {
    auto path = write_temp("genus0", R"({"p":5,"exponents":[1],"jumps":[1]})");
    auto r = run("analyze " + path + " --format json");
    CHECK(r.exit_code == 3);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["validation"]["valid"] == false);
    CHECK(j["validation"]["failures"][0]["name"] == "genus_at_least_2");

    // the warn-only gate downgrade lets the analysis run
    auto warned = run("analyze " + path + " --format json --warn-only");
    CHECK(warned.exit_code == 0);
    auto jw = nlohmann::json::parse(warned.output);
    CHECK(jw["genus"] == 0);
}

TEST_CASE("analyze: --verify passes on sound data") {
    auto path = write_temp("verify", R"({"p":5,"exponents":[2,1],"jumps":[1,7]})");
    auto r = run("analyze " + path + " --format json --verify");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["oracle_verified"] == true);
}

TEST_CASE("catalog subcommand") {
    auto r = run("catalog hermitian q=5 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["genus"] == 10);
    CHECK(j["big_action"]["is_big"] == true);

    CHECK(run("catalog hermitian q=6").exit_code == 2);
    CHECK(run("catalog unknown-curve q=5").exit_code == 2);
    CHECK(run("catalog artin-schreier p=5").exit_code == 2);

    auto as = run("catalog artin-schreier p=5 m=7 --format json");
    REQUIRE(as.exit_code == 0);
    auto jas = nlohmann::json::parse(as.output);
    CHECK(jas["semigroup"]["frobenius"] == 23);
    CHECK(jas["structural_case"]["case"] == "d2");
}

TEST_CASE("jumps subcommand both directions") {
    auto up = run("jumps --direction lower-to-upper --p 5 --exponents 3,1 --values 1,6");
    REQUIRE(up.exit_code == 0);
    CHECK(up.output == "1, 6/5\n");

    auto down = run("jumps --direction upper-to-lower --p 5 --exponents 3,1 --values 1,6/5");
    REQUIRE(down.exit_code == 0);
    CHECK(down.output == "1, 6\n");

    auto single = run("jumps --direction lower-to-upper --p 5 --exponents 1 --values 7");
    CHECK(single.output == "7\n");

    auto bad = run("jumps --direction upper-to-lower --p 5 --exponents 3,1 --values 1,7/5");
    CHECK(bad.exit_code == 3);
}

TEST_CASE("basis subcommand") {
    auto path = write_temp("basis", R"({"p":5,"exponents":[3,1],"jumps":[1,6]})");
    auto r = run("basis " + path + " --m 1,2 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["dimension"] == "10");
    CHECK(j[1]["dimension"] == "27");
    CHECK(j[0]["pole_numbers"].size() == 10);
}

TEST_CASE("stdin input") {
    std::string cmd = "echo '{\"p\":5,\"exponents\":[1],\"jumps\":[7]}' | " + cli_path() +
                      " analyze - --format json 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) output.append(buf, got);
    int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(nlohmann::json::parse(output)["genus"] == 12);
}
