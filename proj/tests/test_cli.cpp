#include "projendo/json_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

using projendo::io::Json;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(PROJENDO_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    const int raw = pclose(p);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string data(const std::string& name) { return std::string(PROJENDO_DATA) + "/" + name; }

std::string scratch(const std::string& name) { return std::string(PROJENDO_SCRATCH) + "/" + name; }

void write_file(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

} // namespace

TEST_CASE("documented invocations") {
    const auto homs = run("count-homs --family cyclic -n 3 --genus 1");
    CHECK(homs.status == 0);
    CHECK(homs.out == "9\n");
    CHECK(run("count-homs --oracle --family S3 --genus 2").out == "486\n");
    CHECK(run("count-homs --family dihedral -n 5 --genus 3").out == "212500\n");

    const auto torus = run("classify --map " + data("torus3.json"));
    REQUIRE(torus.status == 0);
    CHECK(Json::parse(torus.out)["tag"] == "TorusForm");
    CHECK(Json::parse(run("classify --map " + data("boundary3.json")).out)["tag"] == "Boundary");
    CHECK(Json::parse(run("classify --map " + data("closed3.json")).out)["tag"] == "Closed");

    const auto chow = run("chow --check all");
    CHECK(chow.status == 0);
    CHECK(chow.out.find("FAIL") == std::string::npos);
    CHECK(run("chow --check all --mutate-xi-sign").status != 0);
    CHECK(run("chow --expand twist-degree -k k").out == "1/2*c1E*k - 1/2*c1F\n");

    const auto lim = Json::parse(run("limit --map " + data("sheared3.json") + " -c -1 -b -3").out);
    CHECK(lim["tag"] == "RegularLimit");
    const auto fixed = Json::parse(run("fixed-maps --matrix " + data("jordan.json") + " --degree 4").out);
    for (const auto& es : fixed["eigenspaces"]) CHECK(es["verdict"] == "contains-no-regular-map");
    const auto torus_check = Json::parse(run("torus-check --exponents 1,2 --map " + data("irregular2.json")).out);
    CHECK(torus_check["fixed"] == true);
}

TEST_CASE("error reporting") {
    const auto unknown = run("count-homs --family S5");
    CHECK(unknown.status == 2);
    CHECK(Json::parse(unknown.out)["error"] == "unknown-group");
    const auto missing = run("classify --map " + data("does-not-exist.json"));
    CHECK(missing.status == 2);
    CHECK(Json::parse(missing.out)["error"] == "io-error");
    write_file(scratch("broken.json"), "{\"components\": [");
    CHECK(Json::parse(run("classify --map " + scratch("broken.json")).out)["error"] == "malformed-json");
    write_file(scratch("bad_schema.json"), "{\"components\": [{\"vars\": 2, \"degree\": 2, \"terms\": [[[1,0],\"1\"]]}]}");
    CHECK(Json::parse(run("regular --map " + scratch("bad_schema.json")).out)["error"] == "schema-violation");
    const auto degree_one = run("classify --map " + data("irregular2.json"));
    CHECK(degree_one.status == 2);
    CHECK(run("no-such-command").status == 2);
    CHECK(run("classify").status == 2);
}

TEST_CASE("deterministic output") {
    for (const std::string& args : std::vector<std::string>{"equivariant --group " + data("signed_swap.json") + " --degree 4",
                                   "equivariant --seed 5 --group " + data("order3.json") + " --degree 3",
                                   "invariants --group " + data("cube_rotations.json") + " --degree 4",
                                   "fixed-maps --verbose --matrix " + data("reflection.json") + " --degree 2",
                                   std::string("count-homs --verbose --family A5 --genus 2")}) {
        const auto a = run(args), b = run(args);
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
    }
    // an omitted seed means seed 0
    CHECK(run("equivariant --group " + data("order3.json") + " --degree 3").out ==
          run("equivariant --seed 0 --group " + data("order3.json") + " --degree 3").out);
}

TEST_CASE("round trips between subcommands") {
    const auto eq = Json::parse(run("equivariant --group " + data("cube_rotations.json") + " --degree 4").out);
    write_file(scratch("cube_map.json"), eq["map"].dump());
    const auto reg = Json::parse(run("regular --map " + scratch("cube_map.json")).out);
    CHECK(reg["regularity"] == "certified-regular");
    CHECK(reg["map"]["components"] == eq["map"]["components"]);

    const auto cls = Json::parse(run("classify --map " + data("boundary3.json")).out);
    write_file(scratch("classified.json"), cls["map"].dump());
    CHECK(Json::parse(run("ramification --map " + scratch("classified.json")).out)["ramification"]["degree"] == 4);

    const auto lim = Json::parse(run("limit --map " + data("sheared3.json") + " -c -1 -b -3").out);
    write_file(scratch("limit.json"), lim["limit"].dump());
    CHECK(Json::parse(run("classify --map " + scratch("limit.json")).out)["tag"] == "TorusForm");

    const auto fixed = Json::parse(run("fixed-maps --matrix " + data("reflection.json") + " --degree 2").out);
    for (const auto& es : fixed["eigenspaces"]) {
        if (es["witness"].is_null()) continue;
        write_file(scratch("witness.json"), Json{{"components", es["witness"]}}.dump());
        CHECK(Json::parse(run("regular --map " + scratch("witness.json")).out)["regularity"] == "certified-regular");
    }

    write_file(scratch("out_target.json"), "");
    CHECK(run("--output " + scratch("out_target.json") + " count-homs --family A4 --genus 1").out.empty());
    std::ifstream in(scratch("out_target.json"));
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text == "48\n");
}
