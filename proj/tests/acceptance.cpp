// Acceptance run: one line per criterion, non-zero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "buchstar/buchstar.hpp"

using namespace buchstar;

namespace {

const auto Q = CoefficientField::rationals();
const auto F2 = CoefficientField::prime(2);
const auto F3 = CoefficientField::prime(3);

struct Outcome
{
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond)
        {
            ok = false;
            if (!detail.empty())
                detail += "; ";
            detail += what;
        }
    }
};

void suite_passes(Outcome& out, const std::string& name)
{
    const auto report = run_suite(name);
    out.require(report.passed, name + " suite: " + std::to_string(report.failures()) + " failing cases");
    if (!report.passed)
        for (const auto& c : report.cases)
            if (!c.passed)
                std::fprintf(stderr, "    %s %s expected %s got %s %s\n", c.id.c_str(), c.property.c_str(),
                             c.expected.c_str(), c.got.c_str(), c.witness.c_str());
}

std::vector<std::set<int>> proper_subsets(int d)
{
    std::vector<std::set<int>> out;
    for (int mask = 1; mask < (1 << d) - 1; ++mask)
    {
        std::set<int> s;
        for (int c = 1; c <= d; ++c)
            if (mask >> (c - 1) & 1)
                s.insert(c);
        out.push_back(s);
    }
    return out;
}

Outcome stanley()
{
    Outcome out;
    suite_passes(out, "stanley-hnums");
    for (const auto& cc : {cross_polytope(3), stacked_cross_polytopal_sphere(9, 3), multi_point_join(3, 3)})
    {
        const int d = cc.coloring.num_colors();
        const IntVector h = h_vector(cc.complex);
        IntVector sums(static_cast<std::size_t>(d + 1), 0);
        sums[0] = 1;
        for (const auto& s : proper_subsets(d))
        {
            const auto i = s.size();
            sums[i] += h_vector(rank_selected(cc.complex, cc.coloring, s), static_cast<int>(i))[i];
        }
        sums[static_cast<std::size_t>(d)] += h[static_cast<std::size_t>(d)];
        out.require(sums == h, "direct Stanley sum differs");
    }
    return out;
}

Outcome rank_selection()
{
    Outcome out;
    suite_passes(out, "rank-selection");
    const auto st = stacked_cross_polytopal_sphere(12, 4);
    for (const auto& s : proper_subsets(4))
        for (const auto& field : {Q, F2})
            out.require(is_buchsbaum_star(rank_selected(st.complex, st.coloring, s), field).verdict,
                        "ST(12,4) rank selection not Buchsbaum*");
    return out;
}

Outcome m_rank_selection()
{
    Outcome out;
    suite_passes(out, "m-rank-selection");
    const auto p = multi_point_join(3, 3);
    for (const auto& s : proper_subsets(3))
        if (s.size() == 2)
            out.require(is_m_buchsbaum_star(rank_selected(p.complex, p.coloring, s), 2, Q).verdict,
                        "P(3,3) selection not 2-Buchsbaum*");
    return out;
}

Outcome balanced_lbt()
{
    Outcome out;
    suite_passes(out, "balanced-lbt");
    const IntVector h93 = h_vector(stacked_cross_polytopal_sphere(9, 3).complex);
    out.require(3 * h93[2] == 18 && 3 * h93[1] == 18, "ST(9,3) is not 18 = 18");
    const IntVector h124 = h_vector(stacked_cross_polytopal_sphere(12, 4).complex);
    out.require(4 * h124[2] == 6 * h124[1], "ST(12,4) equality fails");
    out.require(f_vector(stacked_cross_polytopal_sphere(9, 3).complex) == IntVector{1, 9, 21, 14},
                "ST(9,3) f-vector");
    return out;
}

Outcome h3_bound()
{
    Outcome out;
    suite_passes(out, "h3-bound");
    for (const auto& cc : {cross_polytope(4), stacked_cross_polytopal_sphere(8, 4)})
    {
        const IntVector h = h_vector(cc.complex);
        out.require(4 * h[3] >= binomial(4, 3) * h[1], "h3 bound fails");
    }
    return out;
}

Outcome swartz()
{
    Outcome out;
    suite_passes(out, "swartz-identity");
    return out;
}

Outcome flag_bound()
{
    Outcome out;
    suite_passes(out, "flag-bound");
    out.require(h_prime_vector(named("k33"), Q).values == IntVector{1, 4, 4}, "K33 h'");
    out.require(h_prime_vector(multi_point_join(3, 3).complex, Q).values == IntVector{1, 6, 12, 8}, "P(3,3) h'");
    out.require(h_prime_vector(cross_polytope(3).complex, Q).values == IntVector{1, 3, 3, 1}, "octahedron h'");
    const Complex hex = named("suspended_hexagon");
    const IntVector hp = h_prime_vector(hex, Q).values;
    out.require(is_flag(hex) && is_buchsbaum_star(hex, Q).verdict, "suspended hexagon not flag Buchsbaum*");
    out.require(poly_geq(hp, one_plus_mt_power(1, 3)) && hp != one_plus_mt_power(1, 3),
                "suspended hexagon excess not strict");
    out.require(!are_isomorphic(hex, cross_polytope(3).complex), "suspended hexagon is the octahedron");
    return out;
}

Outcome euler()
{
    Outcome out;
    suite_passes(out, "euler-corollary");
    out.require(-reduced_euler_characteristic(named("k33")) == 4, "K33 Euler value");
    out.require(reduced_euler_characteristic(multi_point_join(3, 3).complex) == 8, "P(3,3) Euler value");
    return out;
}

Outcome orientability()
{
    Outcome out;
    suite_passes(out, "orientability-rp2");
    const Complex rp2 = named("rp2_min");
    out.require(is_buchsbaum_star(rp2, F2).verdict, "rp2 not Buchsbaum* over F2");
    for (const auto& field : {Q, F3})
    {
        const auto r = is_buchsbaum_star(rp2, field);
        out.require(!r.verdict && r.witness && r.witness->face.size() == 1,
                    "rp2 over " + field.tag() + " lacks a vertex witness");
    }
    return out;
}

Outcome lemma()
{
    Outcome out;
    suite_passes(out, "lemma-oracle");
    return out;
}

Outcome hierarchy()
{
    Outcome out;
    suite_passes(out, "hierarchy");
    return out;
}

}   // namespace

int main()
{
    struct Criterion
    {
        int number;
        const char* title;
        std::function<Outcome()> run;
        double limit_seconds;   // 0: no stated limit
    };
    const std::vector<Criterion> criteria{
        {1, "Stanley identity", stanley, 5},
        {2, "rank selection preserves Buchsbaum*", rank_selection, 60},
        {3, "rank selection preserves m-Buchsbaum*", m_rank_selection, 30},
        {4, "balanced lower bound", balanced_lbt, 0},
        {5, "h3 bound", h3_bound, 0},
        {6, "Swartz identity", swartz, 0},
        {7, "flag m-Buchsbaum* bound", flag_bound, 0},
        {8, "Euler corollary", euler, 0},
        {9, "field dependence on rp2", orientability, 5},
        {10, "relative homology lemma", lemma, 60},
        {11, "property hierarchy", hierarchy, 0},
    };
    int failed = 0;
    for (const auto& c : criteria)
    {
        // Each criterion is timed from a cold cache.
        BettiCache::instance().clear();
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try
        {
            out = c.run();
        }
        catch (const std::exception& e)
        {
            out.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && secs >= c.limit_seconds)
            out.require(false, "runtime " + std::to_string(secs) + " s over the limit");
        std::printf("criterion %d: %s  %s  (%.2f s)%s%s\n", c.number, out.ok ? "PASS" : "FAIL", c.title, secs,
                    out.detail.empty() ? "" : "  ", out.detail.c_str());
        failed += out.ok ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
