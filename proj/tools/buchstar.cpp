// Command-line front end.  Exit codes: 0 success, 1 a check or suite failed,
// 2 usage, parse or validation error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "buchstar/buchstar.hpp"

using namespace buchstar;
namespace fs = std::filesystem;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

std::string render(const IntVector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + std::to_string(v[i]);
    return s + ")";
}

// The Betti cache persists as one JSON file under $BUCHSTAR_CACHE_DIR.
std::optional<fs::path> cache_file()
{
    const char* dir = std::getenv("BUCHSTAR_CACHE_DIR");
    if (!dir || !*dir)
        return std::nullopt;
    return fs::path(dir) / "betti_cache.json";
}

void load_cache()
{
    auto path = cache_file();
    if (!path || !fs::exists(*path))
        return;
    try
    {
        std::ifstream in(*path);
        const auto doc = nlohmann::json::parse(in);
        for (auto it = doc.begin(); it != doc.end(); ++it)
            BettiCache::instance().store(it.key(), it.value().get<std::vector<std::int64_t>>());
    }
    catch (const std::exception& e)
    {
        std::cerr << "warning: ignoring unreadable cache " << path->string() << ": " << e.what() << "\n";
    }
}

void save_cache()
{
    auto path = cache_file();
    if (!path)
        return;
    std::error_code ec;
    fs::create_directories(path->parent_path(), ec);
    nlohmann::json doc = nlohmann::json::object();
    for (const auto& [key, values] : BettiCache::instance().snapshot())
        doc[key] = values;
    const fs::path tmp = path->string() + ".tmp";
    {
        std::ofstream out(tmp);
        out << doc.dump();
    }
    fs::rename(tmp, *path, ec);
}

ColoredComplex construct_family(const std::string& family, const std::vector<std::string>& params)
{
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw ValidationError("family '" + family + "' takes " + std::to_string(k) + " parameter(s)");
    };
    auto num = [&](std::size_t i) {
        try
        {
            return std::stoi(params.at(i));
        }
        catch (const std::exception&)
        {
            throw ValidationError("parameter '" + params.at(i) + "' is not an integer");
        }
    };
    if (family == "simplex")
        return need(1), ColoredComplex{simplex(num(0)), {}};
    if (family == "simplex-boundary")
        return need(1), ColoredComplex{simplex_boundary(num(0)), {}};
    if (family == "cross-polytope")
        return need(1), cross_polytope(num(0));
    if (family == "multi-point-join")
        return need(2), multi_point_join(num(0), num(1));
    if (family == "stacked")
        return need(2), stacked_cross_polytopal_sphere(num(0), num(1));
    if (family == "skeleton-join")
        return need(3), ColoredComplex{skeleton_join_sphere(num(0), num(1), num(2)), {}};
    if (family == "nevo")
        return need(2), ColoredComplex{nevo_sphere(num(0), num(1)), {}};
    if (family == "random-pure")
        return need(4), ColoredComplex{random_pure_complex(static_cast<std::uint64_t>(std::stoull(params[0])), num(1),
                                                           num(2), num(3)),
                                       {}};
    if (family == "fixture")
    {
        need(1);
        const Fixture f = named_fixture(params[0]);
        return {f.complex, f.coloring.value_or(Coloring{})};
    }
    throw LookupError("unknown family '" + family
                      + "' (simplex, simplex-boundary, cross-polytope, multi-point-join, stacked, skeleton-join, "
                        "nevo, random-pure, fixture)");
}

void emit_or_print(const ComplexFile& file, const std::string& out)
{
    if (out.empty() || out == "-")
        std::cout << emit_complex_text(file);
    else
        write_complex_file(out, file);
}

std::set<int> parse_colors(const std::string& text)
{
    std::set<int> colors;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        if (item.empty())
            continue;
        try
        {
            colors.insert(std::stoi(item));
        }
        catch (const std::exception&)
        {
            throw ValidationError("color '" + item + "' is not an integer");
        }
    }
    return colors;
}

PropertyReport run_check(const std::string& property, const Complex& c, const std::optional<Coloring>& coloring,
                         const CoefficientField& field, int m)
{
    if (property == "cm")
        return is_cohen_macaulay(c, field);
    if (property == "m-cm")
        return is_m_cm(c, m, field);
    if (property == "buchsbaum")
        return is_buchsbaum(c, field);
    if (property == "doubly-buchsbaum")
        return is_doubly_buchsbaum(c, field);
    if (property == "buchsbaum-star")
        return is_buchsbaum_star(c, field);
    if (property == "buchsbaum-star-pairs")
        return is_buchsbaum_star_by_pairs(c, field);
    if (property == "m-buchsbaum-star")
        return is_m_buchsbaum_star(c, m, field);
    if (property == "manifold")
        return is_homology_manifold(c, field);
    if (property == "flag")
    {
        if (is_flag(c))
            return PropertyReport::pass("flag", field);
        for (const auto& f : missing_faces(c))
            if (f.size() > 2)
                return PropertyReport::fail("flag", field, {"missing-face", f, std::nullopt, ""});
    }
    if (property == "balanced")
    {
        if (coloring)
        {
            try
            {
                validate_coloring(c, *coloring);
                return PropertyReport::pass("balanced", field);
            }
            catch (const ValidationError& e)
            {
                return PropertyReport::fail("balanced", field, {"coloring", Face(), std::nullopt, e.what()});
            }
        }
        const auto search = find_balanced_coloring(c);
        if (search.status == ColoringSearch::Status::found)
            return PropertyReport::pass("balanced", field);
        if (search.status == ColoringSearch::Status::unknown)
            throw Error("balanced: search budget exhausted after " + std::to_string(search.nodes) + " nodes");
        return PropertyReport::fail("balanced", field, {"coloring", Face(), std::nullopt, "no proper coloring"});
    }
    throw LookupError("unknown property '" + property
                      + "' (cm, m-cm, buchsbaum, doubly-buchsbaum, buchsbaum-star, buchsbaum-star-pairs, "
                        "m-buchsbaum-star, manifold, flag, balanced)");
}

int print_report(const SuiteReport& r, bool json)
{
    if (json)
        std::cout << r.to_json().dump(2) << "\n";
    else
        std::cout << r.to_text();
    return r.passed ? exit_ok : exit_failed;
}

}   // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Buchsbaum* complexes: construction, invariants and verification suites"};
    app.set_version_flag("--version", std::string(version_string));
    app.require_subcommand(1);
    app.fallthrough();

    bool json = false;
    app.add_flag("--json", json, "machine-readable output");
    std::string field_text = "q";
    app.add_option("--field", field_text, "coefficient field: q, f2, f3, f<p>");

    std::string family, out_path, file_path, property, colors_text, suite;
    std::vector<std::string> params;
    int m = 2, i_param = 1, d_param = 2;
    std::uint64_t seed = SuiteOptions{}.seed;
    int max_n = -1;

    auto* construct = app.add_subcommand("construct", "build a named family and write it as a complex file");
    construct->add_option("family", family, "family name")->required();
    construct->add_option("params", params, "integer parameters");
    construct->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* vectors = app.add_subcommand("vectors", "f-, h-, h'- and short h-vectors");
    vectors->add_option("file", file_path)->required();

    auto* homology = app.add_subcommand("homology", "reduced Betti numbers");
    homology->add_option("file", file_path)->required();

    auto* check = app.add_subcommand("check", "test a property; exit 1 when it fails");
    check->add_option("property", property)->required();
    check->add_option("file", file_path)->required();
    check->add_option("-m", m, "parameter m for m-cm and m-buchsbaum-star");

    auto* rank_select = app.add_subcommand("rank-select", "rank-selected subcomplex for a set of colors");
    rank_select->add_option("file", file_path)->required();
    rank_select->add_option("--colors", colors_text, "comma-separated colors")->required();
    rank_select->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "run a verification suite, or 'all'");
    verify->add_option("suite", suite)->required();
    verify->add_option("--seed", seed);
    verify->add_option("--max-n", max_n, "vertex cap for random corpora");

    auto* explore = app.add_subcommand("explore", "search for h-vector violations among m-CM complexes");
    explore->add_option("--m", m)->required();
    explore->add_option("--i", i_param)->required();
    explore->add_option("--d", d_param)->required();
    explore->add_option("--max-n", max_n, "largest vertex count (default 9)");
    explore->add_option("--seed", seed);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    load_cache();
    int status = exit_ok;
    try
    {
        const CoefficientField field = CoefficientField::parse(field_text);
        const bool field_given = app.count("--field") > 0;

        if (*construct)
        {
            const ColoredComplex cc = construct_family(family, params);
            ComplexFile file;
            file.name = family;
            for (const auto& p : params)
                *file.name += "_" + p;
            file.complex = cc.complex;
            if (!cc.coloring.assignment().empty())
                file.coloring = cc.coloring;
            file.metadata = {{"family", family}, {"params", params}, {"version", version_string}};
            emit_or_print(file, out_path);
        }
        else if (*vectors)
        {
            const ComplexFile file = read_complex_file(file_path);
            const FaceVectors fv = face_vectors(file.complex, field);
            if (json)
                std::cout << nlohmann::json{{"field", field.tag()},
                                            {"f", fv.f},
                                            {"h", fv.h},
                                            {"h_prime", fv.h_prime.values},
                                            {"short_h", fv.short_h},
                                            {"reduced_euler", fv.chi_reduced},
                                            {"pure", fv.pure}}
                                 .dump(2)
                          << "\n";
            else
            {
                std::cout << "f  " << render(fv.f) << "\nh  " << render(fv.h) << "\nh' " << render(fv.h_prime.values)
                          << "  [" << field.tag() << "]\n";
                if (fv.pure)
                    std::cout << "short h " << render(fv.short_h) << "\n";
                std::cout << "reduced euler characteristic " << fv.chi_reduced << "\n";
            }
        }
        else if (*homology)
        {
            const ComplexFile file = read_complex_file(file_path);
            const BettiVector b = reduced_betti(file.complex, field);
            if (json)
                std::cout << nlohmann::json{{"field", field.tag()}, {"reduced_betti", b.values}}.dump(2) << "\n";
            else
                for (int k = -1; k <= b.top_degree(); ++k)
                    std::cout << "b~" << k << " = " << b.at(k) << "  [" << field.tag() << "]\n";
        }
        else if (*check)
        {
            const ComplexFile file = read_complex_file(file_path);
            const PropertyReport r = run_check(property, file.complex, file.coloring, field, m);
            if (json)
            {
                nlohmann::json doc{{"property", r.property}, {"field", r.field.tag()}, {"verdict", r.verdict}};
                if (r.witness)
                    doc["witness"] = {{"kind", r.witness->kind},
                                      {"face", r.witness->face.to_string()},
                                      {"detail", r.witness->detail}};
                if (r.witness && r.witness->degree)
                    doc["witness"]["degree"] = *r.witness->degree;
                std::cout << doc.dump(2) << "\n";
            }
            else
            {
                std::cout << r.property << " [" << r.field.tag() << "]: " << (r.verdict ? "true" : "false");
                if (r.witness)
                    std::cout << "  witness: " << r.witness->to_string();
                std::cout << "\n";
            }
            status = r.verdict ? exit_ok : exit_failed;
        }
        else if (*rank_select)
        {
            const ComplexFile file = read_complex_file(file_path);
            Coloring coloring;
            if (file.coloring)
                coloring = *file.coloring;
            else
            {
                const auto search = find_balanced_coloring(file.complex);
                if (search.status != ColoringSearch::Status::found)
                    throw ValidationError("the file has no coloring and no balanced coloring was found");
                coloring = *search.coloring;
            }
            const auto colors = parse_colors(colors_text);
            ComplexFile out;
            out.name = file.name.value_or("complex") + "_S" + colors_text;
            out.complex = rank_selected(file.complex, coloring, colors);
            if (!out.complex.is_void() && !out.complex.is_empty_complex())
            {
                // Renumber the kept colors 1..|S| so the result is itself balanced.
                std::map<int, int> renumber;
                for (int c : colors)
                    renumber.emplace(c, static_cast<int>(renumber.size()) + 1);
                std::map<Vertex, int> assignment;
                for (const auto& v : out.complex.vertices())
                    assignment[v] = renumber.at(coloring.color(v));
                Coloring induced(static_cast<int>(colors.size()), std::move(assignment));
                if (is_valid_coloring(out.complex, induced))
                    out.coloring = std::move(induced);
            }
            emit_or_print(out, out_path);
        }
        else if (*verify)
        {
            SuiteOptions opts;
            opts.seed = seed;
            if (max_n > 0)
                opts.max_n = max_n;
            if (field_given)
                opts.fields = {field};
            std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
            if (json)
            {
                nlohmann::json all = nlohmann::json::array();
                for (const auto& name : names)
                {
                    const SuiteReport r = run_suite(name, opts);
                    all.push_back(r.to_json());
                    if (!r.passed)
                        status = exit_failed;
                }
                std::cout << (names.size() == 1 ? all[0] : all).dump(2) << "\n";
            }
            else
                for (const auto& name : names)
                    if (print_report(run_suite(name, opts), false) != exit_ok)
                        status = exit_failed;
        }
        else if (*explore)
        {
            ExploreOptions opts;
            opts.seed = seed;
            opts.field = field;
            status = print_report(explore_question(m, i_param, d_param, max_n > 0 ? max_n : 9, opts), json);
        }
    }
    catch (const Error& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        status = exit_usage;
    }
    catch (const std::exception& e)
    {
        std::cerr << "internal error: " << e.what() << "\n";
        status = exit_usage;
    }
    save_cache();
    return status;
}
