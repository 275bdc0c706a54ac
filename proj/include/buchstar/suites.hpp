/**
 * Verification suites.  Each suite runs a fixed, seeded set of cases and
 * returns a SuiteReport whose records are sorted by case id, so the report
 * does not depend on evaluation order.
 */
#ifndef BUCHSTAR_SUITES_HPP
#define BUCHSTAR_SUITES_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "classify.hpp"
#include "complex.hpp"
#include "constructions.hpp"
#include "enumerative.hpp"
#include "error.hpp"
#include "field.hpp"
#include "homology.hpp"
#include "random.hpp"
#include "version.hpp"

namespace buchstar {

struct CaseRecord
{
    std::string id;
    std::string property;
    std::string field;
    std::string expected;
    std::string got;
    std::string witness;
    bool passed = true;
};

struct SuiteReport
{
    std::string suite;
    std::string version = version_string;
    std::vector<std::string> fields;
    std::uint64_t seed = 0;
    std::vector<CaseRecord> cases;
    std::vector<std::string> notes;
    bool passed = true;
    bool incomplete = false;
    double seconds = 0.0;

    std::size_t failures() const
    {
        return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseRecord& c) {
            return !c.passed;
        }));
    }

    void finalize()
    {
        std::stable_sort(cases.begin(), cases.end(), [](const CaseRecord& a, const CaseRecord& b) { return a.id < b.id; });
        passed = failures() == 0;
    }

    std::string to_text() const
    {
        std::ostringstream os;
        os << "suite " << suite << "  version " << version << "  seed " << seed << "  fields ";
        for (std::size_t i = 0; i < fields.size(); ++i)
            os << (i ? "," : "") << fields[i];
        os << "\n";
        for (const auto& c : cases)
        {
            os << (c.passed ? "  PASS  " : "  FAIL  ") << c.id << "  " << c.property;
            if (!c.field.empty())
                os << " [" << c.field << "]";
            os << "  expected " << c.expected << "  got " << c.got;
            if (!c.witness.empty())
                os << "  (" << c.witness << ")";
            os << "\n";
        }
        for (const auto& n : notes)
            os << "  note: " << n << "\n";
        os << "result: " << (passed ? "PASS" : "FAIL") << (incomplete ? " (incomplete)" : "") << "  "
           << (cases.size() - failures()) << "/" << cases.size() << " cases  " << seconds << " s\n";
        return os.str();
    }

    nlohmann::json to_json() const
    {
        nlohmann::json cs = nlohmann::json::array();
        for (const auto& c : cases)
            cs.push_back({{"id", c.id},
                          {"property", c.property},
                          {"field", c.field},
                          {"expected", c.expected},
                          {"got", c.got},
                          {"witness", c.witness},
                          {"passed", c.passed}});
        return {{"suite", suite},   {"version", version}, {"fields", fields},   {"seed", seed},
                {"passed", passed}, {"incomplete", incomplete}, {"seconds", seconds}, {"notes", notes},
                {"cases", cs}};
    }
};

struct SuiteOptions
{
    std::uint64_t seed = 20100801;
    int max_n = 8;
    std::vector<CoefficientField> fields;   // empty: the suite's default fields
};

namespace detail {

inline std::string render(const IntVector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

inline std::string render(const std::set<int>& s)
{
    std::string out = "{";
    bool first = true;
    for (int c : s)
    {
        out += (first ? "" : ",") + std::to_string(c);
        first = false;
    }
    return out + "}";
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline std::string padded(std::size_t k)
{
    std::string s = std::to_string(k);
    return std::string(s.size() < 3 ? 3 - s.size() : 0, '0') + s;
}

/// Records cases and turns thrown errors into failed records.
class CaseLog
{
public:
    explicit CaseLog(SuiteReport& report) : report_(report) {}

    void add(std::string id, std::string property, std::string field, std::string expected, std::string got,
             bool passed, std::string witness = {})
    {
        report_.cases.push_back({std::move(id), std::move(property), std::move(field), std::move(expected),
                                 std::move(got), std::move(witness), passed});
    }

    template <typename Fn>
    void guarded(const std::string& id, const std::string& property, const std::string& field, Fn&& fn)
    {
        try
        {
            fn();
        }
        catch (const std::exception& e)
        {
            add(id, property, field, "no error", "error", false, e.what());
        }
    }

private:
    SuiteReport& report_;
};

struct NamedComplex
{
    std::string id;
    Complex complex;
    std::optional<Coloring> coloring;
};

inline NamedComplex colored(std::string id, const ColoredComplex& c) { return {std::move(id), c.complex, c.coloring}; }

inline std::string stacked_id(int n, int d)
{
    return "stacked_sphere(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")";
}

inline std::string join_id(int q, int d)
{
    return "multi_point_join(q=" + std::to_string(q) + ",d=" + std::to_string(d) + ")";
}

inline std::string cross_id(int d) { return "cross_polytope(d=" + std::to_string(d) + ")"; }

/// Balanced Buchsbaum* complexes used by the rank-selection suites.
inline std::vector<NamedComplex> balanced_star_corpus()
{
    std::vector<NamedComplex> out;
    for (int d = 2; d <= 4; ++d)
        out.push_back(colored(cross_id(d), cross_polytope(d)));
    out.push_back(colored(stacked_id(9, 3), stacked_cross_polytopal_sphere(9, 3)));
    out.push_back(colored(stacked_id(12, 3), stacked_cross_polytopal_sphere(12, 3)));
    out.push_back(colored(stacked_id(12, 4), stacked_cross_polytopal_sphere(12, 4)));
    out.push_back(colored(join_id(3, 2), multi_point_join(3, 2)));
    out.push_back(colored(join_id(3, 3), multi_point_join(3, 3)));
    return out;
}

/// Named constructions beyond the fixtures, all pure.
inline std::vector<NamedComplex> family_corpus()
{
    std::vector<NamedComplex> out = balanced_star_corpus();
    out.push_back({"simplex(2)", simplex(2), std::nullopt});
    out.push_back({"simplex_boundary(3)", simplex_boundary(3), std::nullopt});
    out.push_back({"skeleton_join_sphere(m=2,i=2,d=3)", skeleton_join_sphere(2, 2, 3), std::nullopt});
    out.push_back({"skeleton_join_sphere(m=3,i=1,d=2)", skeleton_join_sphere(3, 1, 2), std::nullopt});
    out.push_back({"nevo_sphere(i=2,d=4)", nevo_sphere(2, 4), std::nullopt});
    return out;
}

inline std::vector<NamedComplex> fixture_corpus()
{
    std::vector<NamedComplex> out;
    for (const auto& f : fixtures())
        out.push_back({"fixture:" + f.name, f.complex, f.coloring});
    return out;
}

/// count seeded random pure complexes on at most max_n vertices, dimension 1 or 2.
inline std::vector<NamedComplex> random_pure_corpus(std::uint64_t seed, std::size_t count, int max_n)
{
    std::vector<NamedComplex> out;
    Rng rng(seed);
    for (std::size_t k = 0; k < count; ++k)
    {
        const int dim = static_cast<int>(rng.between(1, 2));
        const int n = static_cast<int>(rng.between(dim + 2, std::max(dim + 2, max_n)));
        const std::int64_t total = binomial(n, dim + 1);
        const std::int64_t facets = rng.between(1, std::min<std::int64_t>(total, 14));
        const std::uint64_t s = rng.below(UINT64_MAX);
        out.push_back({"random_pure[" + padded(k) + "]", random_pure_complex(s, n, dim, facets), std::nullopt});
    }
    return out;
}

/// Random complexes that are not necessarily pure: unions of two random pure ones.
inline std::vector<NamedComplex> random_mixed_corpus(std::uint64_t seed, std::size_t count, int max_n)
{
    std::vector<NamedComplex> out;
    Rng rng(seed);
    for (std::size_t k = 0; k < count; ++k)
    {
        const int n = static_cast<int>(rng.between(3, std::max(3, max_n)));
        std::vector<Face> faces;
        for (int part = 0; part < 2; ++part)
        {
            const int dim = static_cast<int>(rng.between(0, std::min(2, n - 1)));
            const std::int64_t total = binomial(n, dim + 1);
            const std::int64_t count_facets = rng.between(1, std::min<std::int64_t>(total, 8));
            const Complex c = random_pure_complex(rng.below(UINT64_MAX), n, dim, count_facets);
            faces.insert(faces.end(), c.facets().begin(), c.facets().end());
        }
        out.push_back({"random_mixed[" + padded(k) + "]", Complex::from_faces(std::move(faces)), std::nullopt});
    }
    return out;
}

inline std::vector<NamedComplex> random_balanced_corpus(std::uint64_t seed, std::size_t count, int max_n)
{
    std::vector<NamedComplex> out;
    Rng rng(seed);
    for (std::size_t k = 0; k < count; ++k)
    {
        const int d = static_cast<int>(rng.between(2, 3));
        const int n = static_cast<int>(rng.between(d + 1, std::max(d + 2, max_n)));
        const std::int64_t facets = rng.between(3, 20);
        out.push_back(colored("random_balanced[" + padded(k) + "]",
                              random_balanced_complex(rng.below(UINT64_MAX), n, d, facets)));
    }
    return out;
}

inline std::vector<std::set<int>> color_subsets(int d)
{
    std::vector<std::set<int>> out;
    for (int mask = 0; mask < (1 << d); ++mask)
    {
        std::set<int> s;
        for (int c = 1; c <= d; ++c)
            if (mask & (1 << (c - 1)))
                s.insert(c);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

inline std::vector<CoefficientField> fields_or(const SuiteOptions& opts, std::vector<CoefficientField> fallback)
{
    return opts.fields.empty() ? fallback : opts.fields;
}

inline std::string witness_of(const PropertyReport& r) { return r.witness ? r.witness->to_string() : std::string(); }

/* ------------------------------------------------------------------------ //
 *                                  SUITES                                  //
 * ------------------------------------------------------------------------ */

/// h_i(Δ) = Σ_{|S| = i} h_i(Δ_S) for balanced complexes.
inline void suite_stanley(SuiteReport& report, const SuiteOptions& opts)
{
    CaseLog log(report);
    std::vector<NamedComplex> corpus{colored(cross_id(3), cross_polytope(3)),
                                     colored(stacked_id(9, 3), stacked_cross_polytopal_sphere(9, 3)),
                                     colored(join_id(3, 3), multi_point_join(3, 3))};
    for (auto& c : random_balanced_corpus(opts.seed, 50, opts.max_n))
        corpus.push_back(std::move(c));

    for (const auto& item : corpus)
        log.guarded(item.id, "h_i = sum of rank-selected h_i", "", [&] {
            const int d = item.coloring->num_colors();
            const IntVector h = h_vector(item.complex, d);
            IntVector sums(static_cast<std::size_t>(d + 1), 0);
            for (const auto& s : color_subsets(d))
            {
                const int i = static_cast<int>(s.size());
                sums[static_cast<std::size_t>(i)] += h_vector(rank_selected(item.complex, *item.coloring, s), i)
                                                         [static_cast<std::size_t>(i)];
            }
            log.add(item.id, "h_i = sum of rank-selected h_i", "", render(h), render(sums), h == sums);
        });
}

/// Every proper non-empty rank selection of a balanced Buchsbaum* complex is Buchsbaum*.
inline void suite_rank_selection(SuiteReport& report, const SuiteOptions& opts)
{
    CaseLog log(report);
    for (const auto& field : fields_or(opts, {CoefficientField::rationals(), CoefficientField::prime(2)}))
        for (const auto& item : balanced_star_corpus())
        {
            const std::string tag = field.tag();
            log.guarded(item.id + "/input/" + tag, "buchsbaum*", tag, [&] {
                const auto r = is_buchsbaum_star(item.complex, field);
                log.add(item.id + "/input/" + tag, "buchsbaum*", tag, "true", yes_no(r.verdict), r.verdict,
                        witness_of(r));
            });
            const int d = item.coloring->num_colors();
            for (const auto& s : color_subsets(d))
            {
                if (s.empty() || static_cast<int>(s.size()) == d)
                    continue;
                const std::string id = item.id + "/S=" + render(s) + "/" + tag;
                log.guarded(id, "buchsbaum* of rank selection", tag, [&] {
                    const auto r = is_buchsbaum_star(rank_selected(item.complex, *item.coloring, s), field);
                    log.add(id, "buchsbaum* of rank selection", tag, "true", yes_no(r.verdict), r.verdict,
                            witness_of(r));
                });
            }
        }
}

inline void suite_m_rank_selection(SuiteReport& report, const SuiteOptions& opts)
{
    CaseLog log(report);
    const int m = 2;
    const ColoredComplex p33 = multi_point_join(3, 3);
    const std::string base = join_id(3, 3);
    for (const auto& field : fields_or(opts, {CoefficientField::rationals(), CoefficientField::prime(2)}))
    {
        const std::string tag = field.tag();
        log.guarded(base + "/input/" + tag, "2-buchsbaum*", tag, [&] {
            const auto r = is_m_buchsbaum_star(p33.complex, m, field);
            log.add(base + "/input/" + tag, "2-buchsbaum*", tag, "true", yes_no(r.verdict), r.verdict, witness_of(r));
        });
        for (const auto& s : color_subsets(3))
        {
            if (s.size() != 2)
                continue;
            const std::string id = base + "/S=" + render(s) + "/" + tag;
            log.guarded(id, "2-buchsbaum* of rank selection", tag, [&] {
                const auto r = is_m_buchsbaum_star(rank_selected(p33.complex, p33.coloring, s), m, field);
                log.add(id, "2-buchsbaum* of rank selection", tag, "true", yes_no(r.verdict), r.verdict,
                        witness_of(r));
            });
        }
    }
}

/// f_j of the stacked cross-polytopal sphere by inclusion-exclusion over the glued facets.
inline IntVector stacked_f_formula(int n, int d)
{
    const std::int64_t k = n / d - 1;
    IntVector f{1};
    for (int j = 0; j < d - 1; ++j)
        f.push_back(k * binomial(d, j + 1) * (std::int64_t{1} << (j + 1)) - (k - 1) * binomial(d, j + 1));
    f.push_back(k * (std::int64_t{1} << d) - 2 * (k - 1));
    return f;
}

inline void suite_balanced_lbt(SuiteReport& report, const SuiteOptions& opts)
{
    CaseLog log(report);
    const auto field = fields_or(opts, {CoefficientField::rationals()}).front();
    struct Item
    {
        NamedComplex c;
        bool stacked;
    };
    std::vector<Item> corpus{{colored(cross_id(3), cross_polytope(3)), true},
                             {colored(cross_id(4), cross_polytope(4)), true},
                             {colored(stacked_id(9, 3), stacked_cross_polytopal_sphere(9, 3)), true},
                             {colored(stacked_id(12, 3), stacked_cross_polytopal_sphere(12, 3)), true},
                             {colored(stacked_id(12, 4), stacked_cross_polytopal_sphere(12, 4)), true},
                             {colored(stacked_id(15, 3), stacked_cross_polytopal_sphere(15, 3)), true},
                             {colored(join_id(3, 3), multi_point_join(3, 3)), false}};
    const Fixture hex = named_fixture("suspended_hexagon");
    corpus.push_back({{"fixture:" + hex.name, hex.complex, hex.coloring}, false});

    for (const auto& [item, stacked] : corpus)
    {
        const std::string tag = field.tag();
        log.guarded(item.id + "/input", "connected balanced buchsbaum*", tag, [&, &item = item] {
            const auto r = is_buchsbaum_star(item.complex, field);
            const bool ok = r.verdict && connected_components(item.complex).size() == 1
                            && is_valid_coloring(item.complex, *item.coloring) && item.complex.dim() >= 2;
            log.add(item.id + "/input", "connected balanced buchsbaum*", tag, "true", yes_no(ok), ok, witness_of(r));
        });
        log.guarded(item.id + "/lbt", "d h_2 >= C(d,2) h_1", "", [&, &item = item, stacked = stacked] {
            const IntVector h = h_vector(item.complex);
            const std::int64_t d = item.complex.dim() + 1;
            const std::int64_t lhs = d * h[2], rhs = binomial(d, 2) * h[1];
            const std::string got = std::to_string(lhs) + " vs " + std::to_string(rhs) + ", h=" + render(h);
            if (stacked)
                log.add(item.id + "/lbt", "d h_2 >= C(d,2) h_1", "", "equality", got, lhs == rhs);
            else
                log.add(item.id + "/lbt", "d h_2 >= C(d,2) h_1", "", "lhs >= rhs", got, lhs >= rhs);
        });
    }

    // Stacked spheres minimize every f_j among the corpus members of the same (n, d).
    for (const auto& [item, stacked] : corpus)
    {
        if (stacked)
            continue;
        const int n = static_cast<int>(item.complex.vertices().size());
        const int d = item.complex.dim() + 1;
        if (n % d != 0 || n < 2 * d)
            continue;
        const std::string id = item.id + "/f_vs_stacked";
        log.guarded(id, "f_j >= f_j(stacked)", "", [&, &item = item] {
            const IntVector f = f_vector(item.complex);
            const IntVector g = f_vector(stacked_cross_polytopal_sphere(n, d).complex);
            log.add(id, "f_j >= f_j(stacked)", "", ">= " + render(g), render(f), poly_geq(f, g));
        });
    }

    for (const auto& [n, d] : std::vector<std::pair<int, int>>{{9, 3}, {12, 3}, {12, 4}, {8, 4}})
    {
        const std::string id = stacked_id(n, d) + "/f_formula";
        log.guarded(id, "f-vector formula", "", [&, n = n, d = d] {
            const IntVector f = f_vector(stacked_cross_polytopal_sphere(n, d).complex);
            const IntVector expect = stacked_f_formula(n, d);
            log.add(id, "f-vector formula", "", render(expect), render(f), f == expect);
        });
    }
}

inline void suite_h3_bound(SuiteReport& report, const SuiteOptions& opts)
{
    CaseLog log(report);
    const auto field = fields_or(opts, {CoefficientField::rationals()}).front();
    const std::string tag = field.tag();
    std::vector<NamedComplex> balanced{colored(cross_id(4), cross_polytope(4)),
                                       colored(stacked_id(8, 4), stacked_cross_polytopal_sphere(8, 4)),
                                       colored(stacked_id(12, 4), stacked_cross_polytopal_sphere(12, 4)),
                                       colored(stacked_id(16, 4), stacked_cross_polytopal_sphere(16, 4)),
                                       colored(cross_id(5), cross_polytope(5))};
    for (const auto& item : balanced)
        log.guarded(item.id, "d h_3 >= C(d,3) h_1", tag, [&] {
            const auto r = is_buchsbaum_star(item.complex, field);
            const IntVector h = h_vector(item.complex);
            const std::int64_t d = item.complex.dim() + 1;
            const std::int64_t lhs = d * h[3], rhs = binomial(d, 3) * h[1];
            const bool ok = r.verdict && is_valid_coloring(item.complex, *item.coloring) && lhs >= rhs;
            log.add(item.id, "d h_3 >= C(d,3) h_1", tag, "buchsbaum* and lhs >= rhs",
                    std::string(r.verdict ? "buchsbaum*, " : "not buchsbaum*, ") + std::to_string(lhs) + " vs "
                        + std::to_string(rhs),
                    ok, witness_of(r));
        });

    // For d = 4 the bound h_3 >= h_1 needs no coloring.
    std::vector<NamedComplex> plain{{"simplex_boundary(4)", simplex_boundary(4), std::nullopt},
                                    {"nevo_sphere(i=2,d=4)", nevo_sphere(2, 4), std::nullopt}};
    for (const auto& item : plain)
        log.guarded(item.id, "h_3 >= h_1 (d=4)", tag, [&] {
            const auto r = is_buchsbaum_star(item.complex, field);
            const IntVector h = h_vector(item.complex);
            const bool ok = r.verdict && h[3] >= h[1];
            log.add(item.id, "h_3 >= h_1 (d=4)", tag, "buchsbaum* and h_3 >= h_1",
                    std::string(r.verdict ? "buchsbaum*, " : "not buchsbaum*, ") + "h=" + render(h), ok,
                    witness_of(r));
        });
}

/// h̃_{j-1} = j h_j + (d-j+1) h_{j-1}, with h̃ summed over vertex links here.
inline void suite_swartz(SuiteReport& report, const SuiteOptions& opts)
{
    CaseLog log(report);
    std::vector<NamedComplex> corpus = fixture_corpus();
    for (auto& c : family_corpus())
        corpus.push_back(std::move(c));
    for (auto& c : random_pure_corpus(opts.seed, 100, opts.max_n))
        corpus.push_back(std::move(c));

    for (const auto& item : corpus)
    {
        if (!item.complex.is_pure())
            continue;
        log.guarded(item.id, "short h identity", "", [&] {
            const int d = item.complex.dim() + 1;
            const IntVector h = h_vector(item.complex);
            IntVector lhs(static_cast<std::size_t>(d), 0), rhs(static_cast<std::size_t>(d), 0);
            for (const auto& v : item.complex.vertices())
            {
                const IntVector hl = h_from_f(f_vector(link(item.complex, Face{v})), d - 1);
                for (int j = 0; j < d; ++j)
                    lhs[static_cast<std::size_t>(j)] += hl[static_cast<std::size_t>(j)];
            }
            for (int j = 1; j <= d; ++j)
                rhs[static_cast<std::size_t>(j - 1)] =
                    j * h[static_cast<std::size_t>(j)] + (d - j + 1) * h[static_cast<std::size_t>(j - 1)];
            log.add(item.id, "short h identity", "", render(rhs), render(lhs), lhs == rhs);
        });
    }
}

inline void suite_flag_bound(SuiteReport& report, const SuiteOptions& opts)
{
    CaseLog log(report);
    struct Item
    {
        std::string id;
        Complex complex;
        int m;
        bool extremal;
    };
    const std::vector<Item> corpus{{"fixture:k33", named("k33"), 2, true},
                                   {join_id(3, 3), multi_point_join(3, 3).complex, 2, true},
                                   {"fixture:octahedron", named("octahedron"), 1, true},
                                   {cross_id(4), cross_polytope(4).complex, 1, true},
                                   {"fixture:suspended_hexagon", named("suspended_hexagon"), 1, false},
                                   {"fixture:two_octahedra_disjoint", named("two_octahedra_disjoint"), 1, false}};

    for (const auto& field : fields_or(opts, {CoefficientField::rationals(), CoefficientField::prime(2)}))
    {
        const std::string tag = field.tag();
        for (const auto& item : corpus)
        {
            const int d = item.complex.dim() + 1;
            const std::string pre = item.id + "/input/" + tag;
            const std::string prop = std::to_string(item.m) + "-buchsbaum* and flag";
            log.guarded(pre, prop, tag, [&] {
                const auto r = is_m_buchsbaum_star(item.complex, item.m, field);
                const bool ok = r.verdict && is_flag(item.complex);
                log.add(pre, prop, tag, "true", yes_no(ok), ok, witness_of(r));
            });

            const std::string id = item.id + "/h_prime/" + tag;
            log.guarded(id, "h' >= (1+mt)^d", tag, [&] {
                const IntVector hp = h_prime_vector(item.complex, field).values;
                const IntVector bound = one_plus_mt_power(item.m, d);
                if (item.extremal)
                {
                    log.add(id, "h' = (1+mt)^d", tag, render(bound), render(hp), hp == bound);
                    return;
                }
                bool strict = true;
                for (int j = 1; j <= d - 1; ++j)
                    strict = strict && hp[static_cast<std::size_t>(j)] > bound[static_cast<std::size_t>(j)];
                const bool other = !are_isomorphic(item.complex, multi_point_join(item.m + 1, d).complex);
                log.add(id, "h' > (1+mt)^d strictly in degrees 1..d-1", tag, "> " + render(bound), render(hp),
                        poly_geq(hp, bound) && strict && other,
                        other ? "" : "isomorphic to the extremal join");
            });
        }
    }
}

inline void suite_euler(SuiteReport& report, const SuiteOptions& opts)
{
    CaseLog log(report);
    struct Item
    {
        std::string id;
        Complex complex;
        int m;
        std::optional<std::int64_t> exact;
    };
    const std::vector<Item> corpus{{"fixture:k33", named("k33"), 2, 4},
                                   {join_id(3, 3), multi_point_join(3, 3).complex, 2, 8},
                                   {"fixture:octahedron", named("octahedron"), 1, std::nullopt},
                                   {cross_id(4), cross_polytope(4).complex, 1, std::nullopt},
                                   {"fixture:suspended_hexagon", named("suspended_hexagon"), 1, std::nullopt}};
    for (const auto& field : fields_or(opts, {CoefficientField::rationals(), CoefficientField::prime(2)}))
    {
        const std::string tag = field.tag();
        for (const auto& item : corpus)
        {
            const std::string id = item.id + "/" + tag;
            log.guarded(id, "(-1)^(d-1) chi >= m^d", tag, [&] {
                const int d = item.complex.dim() + 1;
                const auto r = is_m_buchsbaum_star(item.complex, item.m, field);
                const std::int64_t value = ((d - 1) % 2 == 0 ? 1 : -1) * reduced_euler_characteristic(item.complex);
                std::int64_t md = 1;
                for (int k = 0; k < d; ++k)
                    md *= item.m;
                const std::int64_t top = reduced_betti(item.complex, field).at(d - 1);
                bool ok = r.verdict && value >= md && top >= md;
                std::string expected = ">= " + std::to_string(md);
                if (item.exact)
                {
                    ok = ok && value == *item.exact && md == *item.exact;
                    expected = std::to_string(*item.exact) + " = " + std::to_string(item.m) + "^" + std::to_string(d);
                }
                log.add(id, "(-1)^(d-1) chi >= m^d", tag, expected,
                        std::to_string(value) + " (top betti " + std::to_string(top) + ")", ok, witness_of(r));
            });
        }
    }
}

inline void suite_orientability(SuiteReport& report, const SuiteOptions& opts)
{
    CaseLog log(report);
    const auto fields =
        fields_or(opts, {CoefficientField::rationals(), CoefficientField::prime(2), CoefficientField::prime(3)});
    const Complex rp2 = named("rp2_min");
    const Complex torus = named("torus_7");
    for (const auto& field : fields)
    {
        const std::string tag = field.tag();
        // Orientable over k exactly when char k = 2 for the projective plane.
        const bool orientable = field.characteristic() == 2;
        log.guarded("rp2_min/manifold/" + tag, "homology manifold", tag, [&] {
            const auto r = is_homology_manifold(rp2, field);
            log.add("rp2_min/manifold/" + tag, "homology manifold", tag, "true", yes_no(r.verdict), r.verdict,
                    witness_of(r));
        });
        log.guarded("rp2_min/buchsbaum*/" + tag, "buchsbaum*", tag, [&] {
            const auto r = is_buchsbaum_star(rp2, field);
            bool ok = r.verdict == orientable;
            std::string w = witness_of(r);
            if (!orientable)
                ok = ok && r.witness && r.witness->face.size() == 1;
            log.add("rp2_min/buchsbaum*/" + tag, "buchsbaum*", tag,
                    orientable ? "true" : "false with a vertex witness", yes_no(r.verdict), ok, w);
        });
        log.guarded("torus_7/buchsbaum*/" + tag, "buchsbaum*", tag, [&] {
            const auto r = is_buchsbaum_star(torus, field);
            log.add("torus_7/buchsbaum*/" + tag, "buchsbaum*", tag, "true", yes_no(r.verdict), r.verdict,
                    witness_of(r));
        });
    }
}

/// Relative homology of (Δ, cost τ) against the shifted homology of lk τ.
inline void suite_lemma(SuiteReport& report, const SuiteOptions& opts)
{
    CaseLog log(report);
    std::vector<NamedComplex> corpus = fixture_corpus();
    const int n = std::min(opts.max_n, 7);
    for (auto& c : random_pure_corpus(opts.seed, 50, n))
        corpus.push_back(std::move(c));
    for (auto& c : random_mixed_corpus(opts.seed + 1, 50, n))
        corpus.push_back(std::move(c));

    for (const auto& field : fields_or(opts, {CoefficientField::rationals(), CoefficientField::prime(2)}))
        for (const auto& item : corpus)
        {
            const std::string tag = field.tag();
            const std::string id = item.id + "/" + tag;
            log.guarded(id, "relative homology = shifted link homology", tag, [&] {
                std::size_t checks = 0;
                std::string mismatch;
                for (const auto& tau : item.complex.all_faces())
                {
                    if (tau.empty())
                        continue;
                    const BettiVector lk = reduced_betti(link(item.complex, tau), field);
                    for (int i = -1; i <= item.complex.dim() + 1; ++i)
                    {
                        ++checks;
                        const std::int64_t rel = relative_betti(item.complex, tau, i, field);
                        const std::int64_t expect = lk.at(i - static_cast<int>(tau.size()));
                        if (rel != expect && mismatch.empty())
                            mismatch = "face " + tau.to_string() + " degree " + std::to_string(i) + ": "
                                       + std::to_string(rel) + " vs " + std::to_string(expect);
                    }
                }
                log.add(id, "relative homology = shifted link homology", tag, "all agree",
                        std::to_string(checks) + " checks", mismatch.empty(), mismatch);
            });
        }
}

inline void suite_hierarchy(SuiteReport& report, const SuiteOptions& opts)
{
    CaseLog log(report);
    std::vector<NamedComplex> corpus = fixture_corpus();
    for (auto& c : family_corpus())
        corpus.push_back(std::move(c));
    for (auto& c : random_pure_corpus(opts.seed, 60, std::min(opts.max_n, 7)))
        corpus.push_back(std::move(c));

    for (const auto& field : fields_or(opts, {CoefficientField::rationals(), CoefficientField::prime(2)}))
        for (const auto& item : corpus)
        {
            const std::string tag = field.tag();
            const std::string id = item.id + "/" + tag;
            log.guarded(id, "hierarchy", tag, [&] {
                std::vector<std::string> broken;
                const auto star = is_buchsbaum_star(item.complex, field);
                const auto buchsbaum = is_buchsbaum(item.complex, field);
                if (star.verdict)
                {
                    const int d = item.complex.dim() + 1;
                    if (reduced_betti(item.complex, field).at(d - 1) < 1)
                        broken.push_back("top betti vanishes");
                    for (const auto& v : item.complex.vertices())
                        if (!is_m_cm(link(item.complex, Face{v}), 2, field).verdict)
                        {
                            broken.push_back("link of " + v.to_string() + " is not 2-CM");
                            break;
                        }
                    if (!is_doubly_buchsbaum(item.complex, field).verdict)
                        broken.push_back("not doubly buchsbaum");
                    if (!buchsbaum.verdict)
                        broken.push_back("not buchsbaum");
                }
                if (buchsbaum.verdict)
                {
                    const auto pairs = is_buchsbaum_star_by_pairs(item.complex, field);
                    if (pairs.verdict != star.verdict)
                        broken.push_back("pair condition says " + yes_no(pairs.verdict));
                }
                if (is_m_cm(item.complex, 2, field).verdict && !star.verdict)
                    broken.push_back("2-CM but not buchsbaum*");
                if (item.complex.vertices().size() <= 12 && is_m_cm(item.complex, 3, field).verdict
                    && !is_m_buchsbaum_star(item.complex, 2, field).verdict)
                    broken.push_back("3-CM but not 2-buchsbaum*");
                std::string got = std::string("buchsbaum*=") + yes_no(star.verdict);
                std::string w;
                for (const auto& b : broken)
                    w += (w.empty() ? "" : "; ") + b;
                log.add(id, "hierarchy", tag, "implications hold", got, broken.empty(), w);
            });
        }
}

using SuiteFn = std::function<void(SuiteReport&, const SuiteOptions&)>;

inline const std::map<std::string, std::pair<SuiteFn, std::vector<std::string>>>& suite_registry()
{
    static const std::map<std::string, std::pair<SuiteFn, std::vector<std::string>>> registry{
        {"stanley-hnums", {suite_stanley, {}}},
        {"rank-selection", {suite_rank_selection, {"Q", "F2"}}},
        {"m-rank-selection", {suite_m_rank_selection, {"Q", "F2"}}},
        {"balanced-lbt", {suite_balanced_lbt, {"Q"}}},
        {"h3-bound", {suite_h3_bound, {"Q"}}},
        {"swartz-identity", {suite_swartz, {}}},
        {"flag-bound", {suite_flag_bound, {"Q", "F2"}}},
        {"euler-corollary", {suite_euler, {"Q", "F2"}}},
        {"orientability-rp2", {suite_orientability, {"Q", "F2", "F3"}}},
        {"lemma-oracle", {suite_lemma, {"Q", "F2"}}},
        {"hierarchy", {suite_hierarchy, {"Q", "F2"}}},
    };
    return registry;
}

}   // namespace detail

inline std::vector<std::string> suite_names()
{
    std::vector<std::string> names;
    for (const auto& [name, entry] : detail::suite_registry())
        names.push_back(name);
    return names;
}

inline SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {})
{
    const auto& registry = detail::suite_registry();
    auto it = registry.find(name);
    if (it == registry.end())
        throw LookupError("unknown suite '" + name + "'");
    SuiteReport report;
    report.suite = name;
    report.seed = opts.seed;
    if (opts.fields.empty())
        report.fields = it->second.second;
    else
        for (const auto& f : opts.fields)
            report.fields.push_back(f.tag());
    const auto start = std::chrono::steady_clock::now();
    it->second.first(report, opts);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.finalize();
    return report;
}

/* ------------------------------------------------------------------------ //
 *                              QUESTION EXPLORER                           //
 * ------------------------------------------------------------------------ */

struct ExploreOptions
{
    std::uint64_t seed = 20100801;
    int hard_cap = 9;                     // largest vertex count ever examined
    std::int64_t exhaustive_limit = 16;   // enumerate all facet sets when C(n, d) is at most this
    std::uint64_t samples = 3000;         // random facet sets per n otherwise
    CoefficientField field = CoefficientField::rationals();
};

/**
 * Searches (d-1)-complexes on n ≤ n_max vertices that are m-CM with no
 * missing face of dimension above i, comparing h with that of
 * skeleton_join_sphere(m, i, d).  A violation is reported as a candidate
 * counterexample; finding none settles nothing beyond the examined sizes.
 */
inline SuiteReport explore_question(int m, int i, int d, int n_max, const ExploreOptions& opts = {})
{
    if (m < 2 || i < 1 || d < 1)
        throw DomainError("explore: requires m >= 2, i >= 1, d >= 1");
    SuiteReport report;
    report.suite = "explore(m=" + std::to_string(m) + ",i=" + std::to_string(i) + ",d=" + std::to_string(d) + ")";
    report.seed = opts.seed;
    report.fields = {opts.field.tag()};
    const auto start = std::chrono::steady_clock::now();

    const Complex model = skeleton_join_sphere(m, i, d);
    const IntVector target = h_vector(model);
    report.notes.push_back("comparison complex has h = " + detail::render(target));

    int top = n_max;
    if (n_max > opts.hard_cap)
    {
        top = opts.hard_cap;
        report.incomplete = true;
        report.notes.push_back("n_max " + std::to_string(n_max) + " exceeds the cap " + std::to_string(opts.hard_cap)
                               + "; stopped at " + std::to_string(top));
    }
    if (top < d)
    {
        report.incomplete = true;
        report.notes.push_back("no vertex count in range: n_max < d");
    }

    Rng rng(opts.seed);
    detail::CaseLog log(report);
    for (int n = d; n <= top; ++n)
    {
        const auto candidates = subsets_of_size(integer_vertices(n), static_cast<std::size_t>(d));
        const auto total = static_cast<std::int64_t>(candidates.size());
        const bool exhaustive = total <= opts.exhaustive_limit;
        if (!exhaustive)
            report.incomplete = true;
        const std::uint64_t rounds = exhaustive ? (std::uint64_t{1} << total) - 1 : opts.samples;

        std::uint64_t examined = 0, qualifying = 0, violations = 0;
        std::set<std::string> seen;
        for (std::uint64_t r = 0; r < rounds; ++r)
        {
            std::vector<Face> chosen;
            for (std::int64_t k = 0; k < total; ++k)
            {
                const bool take = exhaustive ? (((r + 1) >> k) & 1) != 0 : rng.below(2) == 1;
                if (take)
                    chosen.push_back(candidates[static_cast<std::size_t>(k)]);
            }
            if (chosen.empty())
                continue;
            const Complex c = Complex::from_faces(std::move(chosen));
            if (static_cast<int>(c.vertices().size()) != n)
                continue;
            if (!exhaustive && !seen.insert(c.encoding()).second)
                continue;
            ++examined;
            if (d >= 2 && connected_components(c).size() != 1)
                continue;
            if (max_missing_face_dim(c) > i)
                continue;
            if (!is_m_cm(c, m, opts.field).verdict)
                continue;
            ++qualifying;
            const IntVector h = h_vector(c);
            if (!poly_geq(h, target))
            {
                ++violations;
                log.add("n=" + std::to_string(n) + "/candidate/" + c.encoding(), "h >= h(comparison)",
                        opts.field.tag(), ">= " + detail::render(target), detail::render(h), false,
                        "candidate counterexample, facets " + c.encoding());
            }
        }
        log.add("n=" + std::to_string(n), "h >= h(comparison)", opts.field.tag(), "no violation",
                std::to_string(examined) + " examined, " + std::to_string(qualifying) + " qualifying, "
                    + std::to_string(violations) + " violations",
                violations == 0, exhaustive ? "exhaustive" : "sampled");
    }
    report.notes.push_back("a search without violations does not answer the question");
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.finalize();
    return report;
}

}   // namespace buchstar

#endif
