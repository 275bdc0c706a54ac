#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "buchstar/buchstar.hpp"

using namespace buchstar;
namespace fs = std::filesystem;

namespace {

const auto Q = CoefficientField::rationals();

fs::path scratch_dir()
{
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("buchstar_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

int cli(const std::string& args)
{
    const std::string cmd = std::string(BUCHSTAR_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string write_text(const std::string& name, const std::string& text)
{
    const fs::path p = scratch_dir() / name;
    std::ofstream(p) << text;
    return p.string();
}

}   // namespace

TEST_CASE("parse a facet list", "[io]")
{
    const auto file = parse_complex_text(R"({"facets":[[1,2],[2,3],[1,3]]})");
    CHECK(file.complex == simplex_boundary(2));
    CHECK_FALSE(file.coloring);
    CHECK_FALSE(file.name);

    const auto named_file = parse_complex_text(R"({"name":"x","facets":[["a","b"]],"coloring":{"a":1,"b":2},"metadata":{"k":1}})");
    CHECK(named_file.name == "x");
    REQUIRE(named_file.coloring);
    CHECK(named_file.coloring->color(Vertex("a")) == 1);
    CHECK(named_file.metadata["k"] == 1);
}

TEST_CASE("parse errors carry positions", "[io]")
{
    try
    {
        parse_complex_text("{\n  \"facets\": [[1, 2],\n  [2 3]]\n}");
        FAIL("expected a parse error");
    }
    catch (const ParseError& e)
    {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_complex_text("[1,2]"), ParseError);
    CHECK_THROWS_AS(parse_complex_text("{\"name\":\"no facets\"}"), ParseError);
    CHECK_THROWS_AS(parse_complex_text(R"({"facets":[[1,1]]})"), ValidationError);
    CHECK_THROWS_AS(parse_complex_text(R"({"facets":[[1,-2]]})"), ValidationError);
    CHECK_THROWS_AS(parse_complex_text(R"({"facets":[[1,2.5]]})"), ValidationError);
}

TEST_CASE("coloring errors name the edge", "[io]")
{
    try
    {
        parse_complex_text(R"({"facets":[[1,2],[2,3]],"coloring":{"1":1,"2":2,"3":2}})");
        FAIL("expected a validation error");
    }
    catch (const ValidationError& e)
    {
        CHECK(std::string(e.what()).find("{2,3}") != std::string::npos);
    }
}

TEST_CASE("emit and parse round trip", "[io]")
{
    const auto oct = cross_polytope(3);
    ComplexFile file{std::string("octahedron"), oct.complex, oct.coloring, nlohmann::json::object()};
    const std::string text = emit_complex_text(file);
    const auto back = parse_complex_text(text);
    CHECK(back.complex == oct.complex);
    REQUIRE(back.coloring);
    CHECK(*back.coloring == oct.coloring);
    CHECK(emit_complex_text(back) == text);

    const std::string path = (scratch_dir() / "oct.json").string();
    write_complex_file(path, file);
    CHECK(read_complex_file(path).complex == oct.complex);
    CHECK_THROWS_AS(read_complex_file((scratch_dir() / "missing.json").string()), ParseError);

    for (const auto& f : fixtures())
    {
        ComplexFile ff{f.name, f.complex, f.coloring, nlohmann::json::object()};
        const auto t = emit_complex_text(ff);
        CHECK(emit_complex_text(parse_complex_text(t)) == t);
    }
}

TEST_CASE("random pure complexes", "[random]")
{
    CHECK(random_pure_complex(7, 8, 2, 10) == random_pure_complex(7, 8, 2, 10));
    const Complex full = random_pure_complex(3, 6, 2, 20);
    CHECK(full == skeleton(simplex(5), 2));
    const Complex k5 = random_pure_complex(1, 5, 1, 10);
    CHECK(k5.facets().size() == 10);
    CHECK(k5 == skeleton(simplex(4), 1));
    CHECK_THROWS_AS(random_pure_complex(1, 5, 1, 11), DomainError);
    for (std::uint64_t seed = 0; seed < 30; ++seed)
    {
        const Complex c = random_pure_complex(seed, 7, 2, 9);
        CHECK(c.is_pure());
        CHECK(c.facets().size() == 9);
        CHECK(c.dim() == 2);
    }
}

TEST_CASE("every suite passes", "[suites]")
{
    for (const auto& name : suite_names())
    {
        INFO(name);
        const auto report = run_suite(name);
        CHECK(report.passed);
        CHECK(report.failures() == 0);
        CHECK_FALSE(report.cases.empty());
        CHECK(report.version == version_string);
        CHECK(std::is_sorted(report.cases.begin(), report.cases.end(),
                             [](const CaseRecord& a, const CaseRecord& b) { return a.id < b.id; }));
    }
    CHECK(suite_names().size() == 11);
    CHECK_THROWS_AS(run_suite("no-such-suite"), LookupError);
}

TEST_CASE("suites are deterministic and renderings agree", "[suites]")
{
    const auto a = run_suite("orientability-rp2");
    const auto b = run_suite("orientability-rp2");
    REQUIRE(a.cases.size() == b.cases.size());
    for (std::size_t i = 0; i < a.cases.size(); ++i)
    {
        CHECK(a.cases[i].id == b.cases[i].id);
        CHECK(a.cases[i].got == b.cases[i].got);
    }
    const auto j = a.to_json();
    const auto text = a.to_text();
    CHECK(j["passed"] == a.passed);
    for (std::size_t i = 0; i < a.cases.size(); ++i)
    {
        const auto& c = j["cases"][i];
        CHECK(c["passed"] == a.cases[i].passed);
        const std::string line = std::string(a.cases[i].passed ? "PASS  " : "FAIL  ") + a.cases[i].id;
        CHECK(text.find(line) != std::string::npos);
    }
    CHECK(j["fields"].size() == 3);
}

TEST_CASE("explorer examples", "[explore]")
{
    const auto small = explore_question(2, 1, 2, 6);
    CHECK(small.failures() == 0);
    CHECK_FALSE(small.incomplete);
    const auto three = explore_question(2, 2, 3, 5);
    CHECK(three.failures() == 0);
    const auto capped = explore_question(2, 1, 2, 12);
    CHECK(capped.incomplete);
    const auto tiny = explore_question(2, 1, 3, 2);
    CHECK(tiny.incomplete);
    CHECK_THROWS_AS(explore_question(1, 1, 2, 5), DomainError);
    for (const auto& n : small.notes)
        CHECK(n.find("resolved") == std::string::npos);
}

TEST_CASE("command line exit codes", "[cli]")
{
    const std::string oct = (scratch_dir() / "cli_oct.json").string();
    const std::string rp2 = (scratch_dir() / "cli_rp2.json").string();
    CHECK(cli("construct cross-polytope 3 -o " + oct) == 0);
    CHECK(cli("construct fixture rp2_min -o " + rp2) == 0);
    CHECK(cli("vectors " + oct) == 0);
    CHECK(cli("--json homology " + oct + " --field f2") == 0);
    CHECK(cli("check buchsbaum-star " + oct) == 0);
    CHECK(cli("check buchsbaum-star " + rp2 + " --field f2") == 0);
    CHECK(cli("check buchsbaum-star " + rp2 + " --field q") == 1);
    CHECK(cli("rank-select " + oct + " --colors 1,2") == 0);
    CHECK(cli("verify orientability-rp2") == 0);
    CHECK(cli("explore --m 2 --i 1 --d 2 --max-n 5") == 0);

    CHECK(cli("verify no-such-suite") == 2);
    CHECK(cli("frobnicate") == 2);
    CHECK(cli("vectors " + write_text("bad.json", "{\"facets\": [[1,2]")) == 2);
    CHECK(cli("vectors " + (scratch_dir() / "absent.json").string()) == 2);
    CHECK(cli("check buchsbaum-star " + oct + " --field f4") == 2);
}
