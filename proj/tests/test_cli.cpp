#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "fixtures.hpp"

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string("\"") + TILINGS_CLI + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string c(const std::string& name) { return "\"" + (fixture::corpus() / name).string() + "\""; }

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
    const auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << text;
    return p;
}

}  // namespace

TEST_CASE("cli patterns") {
    auto r = run("patterns " + c("stripes.tiles") + " --size 2 --count");
    CHECK(r.status == 0);
    CHECK(r.out == "11\n");
    r = run("patterns " + c("stripes.tiles") + " --size 2 --margin 3 --count");
    CHECK(r.out == "11\n");
    r = run("patterns " + c("checkerboard.tiles") + " --size 2");
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["count"] == 2);
    const auto a = nlohmann::json::array({"a b", "b a"});
    const auto b = nlohmann::json::array({"b a", "a b"});
    CHECK(((j["patterns"][0] == a && j["patterns"][1] == b) || (j["patterns"][0] == b && j["patterns"][1] == a)));
}

TEST_CASE("cli torus and classify") {
    auto j = nlohmann::json::parse(run("torus " + c("checkerboard.tiles") + " --max-p 2 --max-q 2").out);
    CHECK(j["count"] == 1);
    j = nlohmann::json::parse(run("torus " + c("stripes.tiles") + " --max-p 4 --max-q 4").out);
    CHECK(j["count"] == 4);
    j = nlohmann::json::parse(run("classify " + c("checkerboard.tiles") + " --budget 3").out);
    CHECK(j.dump().find("periodic") != std::string::npos);
}

TEST_CASE("cli weak-periodic") {
    auto r = run("weak-periodic " + c("stripes.tiles") + " --max-period 1");
    CHECK(r.status == 0);
    std::istringstream in(r.out);
    const auto w = tilings::parse_presentation(in, fixture::stripes().alphabet());
    CHECK(w.name == "witness");
    CHECK(tilings::is_valid(w.tiling, fixture::stripes()));
    CHECK(run("weak-periodic " + c("checkerboard.tiles") + " --max-period 3").status == 1);
}

TEST_CASE("cli validate and analyze") {
    auto r = run("validate " + c("stripes.tiles") + " " + c("white_over_green.pres"));
    CHECK(r.status == 1);
    CHECK(nlohmann::json::parse(r.out)["valid"] == false);
    r = run("validate " + c("stripes.tiles") + " " + c("stripes_family/A2.pres"));
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(run("analyze " + c("stripes.tiles") + " " + c("stripes_family/A2.pres")).out);
    CHECK(j["name"] == "A2");
    CHECK(j["type"] == "b");
    CHECK(j["structural_bound"] == 4);
}

TEST_CASE("cli order and cb") {
    const auto dot = std::filesystem::temp_directory_path() / "tilings_cli_hasse.dot";
    const std::string fam = c("stripes.tiles") + " " + c("stripes_family") + " --window 6";
    auto r = run("order " + fam + " --dot \"" + dot.string() + "\"");
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["classes"].size() == 23);
    CHECK(j["longest_chain"] == 3);
    CHECK(j["minimal"].size() == 4);
    CHECK(run("order " + fam + " --threads 4").out == r.out);
    std::ifstream in(dot);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str().rfind("digraph hasse", 0) == 0);

    const auto k = nlohmann::json::parse(run("cb " + fam).out);
    CHECK(k["family_rank"] == 4);
    CHECK(k["ranks"]["A3"] == 1);
    CHECK(k["ranks"]["red|(W|B)"] == 2);
    CHECK(k["ranks"]["all-black"] == 4);
}

TEST_CASE("cli errors") {
    CHECK(run("").status == 2);
    CHECK(run("patterns " + c("stripes.tiles")).status == 2);
    CHECK(run("patterns " + c("stripes.tiles") + " --size 0").status == 2);
    CHECK(run("patterns /nonexistent/file.tiles --size 1").status == 2);
    const auto bad = temp_file("tilings_cli_bad.tiles", "alphabet a b\nhpair a z\n");
    CHECK(run("patterns \"" + bad.string() + "\" --size 1").status == 2);
    const auto pres = temp_file("tilings_cli_bad.pres", "presentation\nxcuts 3 1\n");
    CHECK(run("validate " + c("stripes.tiles") + " \"" + pres.string() + "\"").status == 2);
    CHECK(run("--help").status == 0);
}
