/**
 * Property predicates (Cohen-Macaulay, m-CM, Buchsbaum, doubly Buchsbaum,
 * Buchsbaum*, m-Buchsbaum*, homology manifold), balanced colorings and rank
 * selection.
 *
 * Every predicate returns a PropertyReport.  A false verdict carries the
 * first violation found, scanning faces by dimension and then
 * lexicographically and vertex sets by size and then lexicographically, so
 * that witnesses are stable.
 */
#ifndef BUCHSTAR_CLASSIFY_HPP
#define BUCHSTAR_CLASSIFY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "complex.hpp"
#include "error.hpp"
#include "field.hpp"
#include "homology.hpp"

namespace buchstar {

/* ------------------------------------------------------------------------ //
 *                                  REPORTS                                 //
 * ------------------------------------------------------------------------ */

/**
 * Certificate of a failed property check.
 *
 *   reisner        face = σ, degree = i with β̃_i(lk σ) ≠ 0 below dim lk σ
 *   non-pure       face = a facet of less than maximal dimension
 *   vertex-link    face = {v} whose link is not Cohen-Macaulay
 *   deletion       face = A where Δ − A fails the property in question
 *   dimension      face = A where Δ − A drops dimension
 *   surjectivity   face = τ where H̃_{d-1}(Δ) → H̃_{d-1}(Δ, cost τ) is not onto
 *   sphere-link    face = σ, degree = i where lk σ differs from a sphere
 */
struct Witness
{
    std::string kind;
    Face face;
    std::optional<int> degree;
    std::string detail;

    std::string to_string() const
    {
        std::string s = kind + " at " + face.to_string();
        if (degree)
            s += " (degree " + std::to_string(*degree) + ")";
        if (!detail.empty())
            s += ": " + detail;
        return s;
    }
};

struct PropertyReport
{
    std::string property;
    CoefficientField field = CoefficientField::rationals();
    bool verdict = true;
    std::optional<Witness> witness;

    explicit operator bool() const { return verdict; }

    static PropertyReport pass(std::string property, const CoefficientField& field)
    {
        return PropertyReport{std::move(property), field, true, std::nullopt};
    }

    static PropertyReport fail(std::string property, const CoefficientField& field, Witness w)
    {
        return PropertyReport{std::move(property), field, false, std::move(w)};
    }
};

namespace detail {

inline void require_non_void(const Complex& complex, const char* what)
{
    if (complex.is_void())
        throw DomainError(std::string(what) + ": the void complex is not a valid input");
}

/// Δ − A has dimension dim Δ (void or lower-dimensional results do not).
inline bool keeps_dimension(const Complex& reduced, int dim)
{
    return !reduced.is_void() && reduced.dim() == dim;
}

inline std::string nested(const PropertyReport& r)
{
    return r.witness ? r.witness->to_string() : std::string();
}

}   // namespace detail

/* ------------------------------------------------------------------------ //
 *                           COHEN-MACAULAY FAMILY                          //
 * ------------------------------------------------------------------------ */

/**
 * Reisner-type criterion: β̃_i(lk σ) = 0 for every face σ (including ∅) and
 * every i < dim lk σ.
 */
inline PropertyReport is_cohen_macaulay(const Complex& complex, const CoefficientField& field)
{
    detail::require_non_void(complex, "is_cohen_macaulay");
    for (const auto& sigma : complex.all_faces())
    {
        const Complex lk = link(complex, sigma);
        const BettiVector b = reduced_betti(lk, field);
        for (int i = -1; i < lk.dim(); ++i)
            if (b.at(i) != 0)
                return PropertyReport::fail("cohen-macaulay", field,
                                            {"reisner", sigma, i, "reduced Betti number of the link is non-zero"});
    }
    return PropertyReport::pass("cohen-macaulay", field);
}

/**
 * m-CM: Δ is CM and Δ − A is CM of dimension dim Δ for every vertex set A
 * with 1 ≤ |A| < m.  m = 1 is plain Cohen-Macaulayness.
 */
inline PropertyReport is_m_cm(const Complex& complex, int m, const CoefficientField& field)
{
    if (m < 1)
        throw DomainError("is_m_cm: m must be at least 1");
    detail::require_non_void(complex, "is_m_cm");
    const std::string name = std::to_string(m) + "-cm";
    auto base = is_cohen_macaulay(complex, field);
    if (!base)
        return PropertyReport::fail(name, field, *base.witness);
    const int dim = complex.dim();
    const std::size_t max_size = std::min<std::size_t>(static_cast<std::size_t>(m - 1), complex.vertices().size());
    for (std::size_t s = 1; s <= max_size; ++s)
        for (const auto& removed : subsets_of_size(complex.vertices(), s))
        {
            const Complex rest = deletion(complex, removed.vertices());
            if (!detail::keeps_dimension(rest, dim))
                return PropertyReport::fail(name, field, {"dimension", removed, std::nullopt, "deletion drops dimension"});
            auto r = is_cohen_macaulay(rest, field);
            if (!r)
                return PropertyReport::fail(name, field, {"deletion", removed, std::nullopt, detail::nested(r)});
        }
    return PropertyReport::pass(name, field);
}

/* ------------------------------------------------------------------------ //
 *                              BUCHSBAUM FAMILY                            //
 * ------------------------------------------------------------------------ */

/// Pure, and the link of every vertex is Cohen-Macaulay.
inline PropertyReport is_buchsbaum(const Complex& complex, const CoefficientField& field)
{
    detail::require_non_void(complex, "is_buchsbaum");
    if (!complex.is_pure())
    {
        for (const auto& f : complex.facets())
            if (f.dim() != complex.dim())
                return PropertyReport::fail("buchsbaum", field,
                                            {"non-pure", f, std::nullopt, "facet of non-maximal dimension"});
    }
    for (const auto& v : complex.vertices())
    {
        auto r = is_cohen_macaulay(link(complex, Face{v}), field);
        if (!r)
            return PropertyReport::fail("buchsbaum", field, {"vertex-link", Face{v}, std::nullopt, detail::nested(r)});
    }
    return PropertyReport::pass("buchsbaum", field);
}

/// Buchsbaum, and Δ − v is Buchsbaum of dimension dim Δ for every vertex v.
inline PropertyReport is_doubly_buchsbaum(const Complex& complex, const CoefficientField& field)
{
    auto base = is_buchsbaum(complex, field);
    if (!base)
        return PropertyReport::fail("doubly-buchsbaum", field, *base.witness);
    const int dim = complex.dim();
    for (const auto& v : complex.vertices())
    {
        const Complex rest = deletion(complex, v);
        if (!detail::keeps_dimension(rest, dim))
            return PropertyReport::fail("doubly-buchsbaum", field,
                                        {"dimension", Face{v}, std::nullopt, "deletion drops dimension"});
        auto r = is_buchsbaum(rest, field);
        if (!r)
            return PropertyReport::fail("doubly-buchsbaum", field,
                                        {"deletion", Face{v}, std::nullopt, detail::nested(r)});
    }
    return PropertyReport::pass("doubly-buchsbaum", field);
}

/**
 * Buchsbaum, and H̃_{d-1}(Δ) → H̃_{d-1}(Δ, cost τ) is onto for every non-empty
 * face τ.
 */
inline PropertyReport is_buchsbaum_star(const Complex& complex, const CoefficientField& field)
{
    auto base = is_buchsbaum(complex, field);
    if (!base)
        return PropertyReport::fail("buchsbaum*", field, *base.witness);
    return with_field(field, [&](const auto& f) {
        TopHomologyProbe probe(complex, f);
        for (int k = 0; k <= complex.dim(); ++k)
            for (const auto& tau : complex.faces_of_dim(k))
                if (!probe.surjective(Face(), tau))
                    return PropertyReport::fail("buchsbaum*", field,
                                                {"surjectivity", tau, complex.dim(),
                                                 "top homology does not surject onto the relative top homology"});
        return PropertyReport::pass("buchsbaum*", field);
    });
}

/**
 * Condition (b) form of the Buchsbaum* test: surjectivity of
 * H̃_{d-1}(Δ, cost σ) → H̃_{d-1}(Δ, cost τ) for every pair of faces σ ⊆ τ.
 * Used to cross-check is_buchsbaum_star on Buchsbaum inputs.
 */
inline PropertyReport is_buchsbaum_star_by_pairs(const Complex& complex, const CoefficientField& field)
{
    auto base = is_buchsbaum(complex, field);
    if (!base)
        return PropertyReport::fail("buchsbaum*-pairs", field, *base.witness);
    return with_field(field, [&](const auto& f) {
        TopHomologyProbe probe(complex, f);
        for (const auto& tau : complex.all_faces())
        {
            std::optional<Witness> bad;
            for_each_subset(tau, [&](const Face& sigma) {
                if (!bad && !probe.surjective(sigma, tau))
                    bad = Witness{"surjectivity", tau, complex.dim(), "pair map from " + sigma.to_string() + " not onto"};
            });
            if (bad)
                return PropertyReport::fail("buchsbaum*-pairs", field, *bad);
        }
        return PropertyReport::pass("buchsbaum*-pairs", field);
    });
}

/**
 * m-Buchsbaum*: Buchsbaum, and Δ − A is Buchsbaum* of dimension dim Δ for
 * every vertex set A with |A| < m.  m = 0 is Buchsbaumness, m = 1 is
 * Buchsbaum*.
 */
inline PropertyReport is_m_buchsbaum_star(const Complex& complex, int m, const CoefficientField& field)
{
    if (m < 0)
        throw DomainError("is_m_buchsbaum_star: m must be non-negative");
    const std::string name = std::to_string(m) + "-buchsbaum*";
    auto base = is_buchsbaum(complex, field);
    if (!base)
        return PropertyReport::fail(name, field, *base.witness);
    const int dim = complex.dim();
    const std::size_t max_size = std::min<std::size_t>(static_cast<std::size_t>(std::max(m - 1, 0)),
                                                       complex.vertices().size());
    if (m == 0)
        return PropertyReport::pass(name, field);
    for (std::size_t s = 0; s <= max_size; ++s)
        for (const auto& removed : subsets_of_size(complex.vertices(), s))
        {
            const Complex rest = s == 0 ? complex : deletion(complex, removed.vertices());
            if (!detail::keeps_dimension(rest, dim))
                return PropertyReport::fail(name, field, {"dimension", removed, std::nullopt, "deletion drops dimension"});
            auto r = is_buchsbaum_star(rest, field);
            if (!r)
                return PropertyReport::fail(name, field, {"deletion", removed, std::nullopt, detail::nested(r)});
        }
    return PropertyReport::pass(name, field);
}

/**
 * Closed homology manifold: pure, and the link of every non-empty face σ has
 * the reduced homology of a sphere of dimension dim Δ − |σ|.
 */
inline PropertyReport is_homology_manifold(const Complex& complex, const CoefficientField& field)
{
    detail::require_non_void(complex, "is_homology_manifold");
    if (!complex.is_pure())
    {
        for (const auto& f : complex.facets())
            if (f.dim() != complex.dim())
                return PropertyReport::fail("homology-manifold", field,
                                            {"non-pure", f, std::nullopt, "facet of non-maximal dimension"});
    }
    const int dim = complex.dim();
    for (int k = 0; k <= dim; ++k)
        for (const auto& sigma : complex.faces_of_dim(k))
        {
            const int sphere_dim = dim - static_cast<int>(sigma.size());
            const BettiVector b = reduced_betti(link(complex, sigma), field);
            for (int i = -1; i <= sphere_dim; ++i)
                if (b.at(i) != (i == sphere_dim ? 1 : 0))
                    return PropertyReport::fail("homology-manifold", field,
                                                {"sphere-link", sigma, i, "link homology differs from a sphere"});
        }
    return PropertyReport::pass("homology-manifold", field);
}

/* ------------------------------------------------------------------------ //
 *                         COLORINGS AND RANK SELECTION                     //
 * ------------------------------------------------------------------------ */

/**
 * Vertex coloring κ: V → {1, ..., d}.
 */
class Coloring
{
public:
    Coloring() = default;
    Coloring(int colors, std::map<Vertex, int> assignment) : d_(colors), assignment_(std::move(assignment)) {}

    int num_colors() const { return d_; }
    const std::map<Vertex, int>& assignment() const { return assignment_; }

    bool has(const Vertex& v) const { return assignment_.count(v) != 0; }

    int color(const Vertex& v) const
    {
        auto it = assignment_.find(v);
        if (it == assignment_.end())
            throw ValidationError("coloring: vertex " + v.to_string() + " has no color");
        return it->second;
    }

    /// Vertices of each color, indexed 1..d (entry 0 unused).
    std::vector<std::vector<Vertex>> classes() const
    {
        std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(d_ + 1));
        for (const auto& [v, c] : assignment_)
            out.at(static_cast<std::size_t>(c)).push_back(v);
        return out;
    }

    friend bool operator==(const Coloring& a, const Coloring& b)
    {
        return a.d_ == b.d_ && a.assignment_ == b.assignment_;
    }

private:
    int d_ = 0;
    std::map<Vertex, int> assignment_;
};

/**
 * Checks that κ is a balanced coloring of Δ: d = dim Δ + 1 colors, every
 * vertex colored in [1, d], endpoints of every edge colored differently.
 * Extra entries for vertices outside Δ are ignored.  Throws ValidationError.
 */
inline void validate_coloring(const Complex& complex, const Coloring& coloring)
{
    if (complex.is_void())
        return;
    if (coloring.num_colors() != complex.dim() + 1)
        throw ValidationError("coloring uses " + std::to_string(coloring.num_colors()) + " colors but the complex has d = "
                              + std::to_string(complex.dim() + 1));
    for (const auto& v : complex.vertices())
    {
        const int c = coloring.color(v);
        if (c < 1 || c > coloring.num_colors())
            throw ValidationError("coloring: vertex " + v.to_string() + " has color " + std::to_string(c)
                                  + " outside [1, " + std::to_string(coloring.num_colors()) + "]");
    }
    for (const auto& e : complex.faces_of_dim(1))
        if (coloring.color(e[0]) == coloring.color(e[1]))
            throw ValidationError("coloring: edge " + e.to_string() + " has both endpoints colored "
                                  + std::to_string(coloring.color(e[0])));
    BUCHSTAR_INVARIANT(!complex.is_pure() || std::all_of(complex.facets().begin(), complex.facets().end(),
                                                         [&](const Face& f) {
                                                             std::set<int> cs;
                                                             for (const auto& v : f)
                                                                 cs.insert(coloring.color(v));
                                                             return cs.size() == f.size();
                                                         }),
                       "facets of a pure balanced complex receive distinct colors");
}

inline bool is_valid_coloring(const Complex& complex, const Coloring& coloring)
{
    try
    {
        validate_coloring(complex, coloring);
        return true;
    }
    catch (const ValidationError&)
    {
        return false;
    }
}

struct ColoringSearch
{
    enum class Status { found, none, unknown };
    Status status = Status::none;
    std::optional<Coloring> coloring;
    std::uint64_t nodes = 0;
};

/**
 * Backtracking search for a proper d-coloring of the 1-skeleton, d = dim Δ + 1.
 * Vertices are visited by decreasing degree; a new color is only opened when
 * all lower ones are in use.  Exceeding `node_budget` yields Status::unknown.
 */
inline ColoringSearch find_balanced_coloring(const Complex& complex, std::uint64_t node_budget = 10'000'000)
{
    if (complex.is_void() || !complex.is_pure())
        throw DomainError("find_balanced_coloring: the complex must be pure");
    const int d = complex.dim() + 1;
    const auto& vs = complex.vertices();
    const std::size_t n = vs.size();
    auto index = [&](const Vertex& v) {
        return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& e : complex.faces_of_dim(1))
    {
        adj[index(e[0])].push_back(index(e[1]));
        adj[index(e[1])].push_back(index(e[0]));
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return adj[a].size() > adj[b].size(); });

    std::vector<int> color(n, 0);
    ColoringSearch result;

    // Iterative depth-first search over positions in `order`
    std::vector<int> max_used(n + 1, 0);
    std::size_t pos = 0;
    while (true)
    {
        if (pos == n)
        {
            std::map<Vertex, int> assignment;
            for (std::size_t i = 0; i < n; ++i)
                assignment[vs[i]] = color[i];
            result.status = ColoringSearch::Status::found;
            result.coloring = Coloring(d, std::move(assignment));
            return result;
        }
        const std::size_t v = order[pos];
        int c = color[v] + 1;
        const int limit = std::min(d, max_used[pos] + 1);
        for (; c <= limit; ++c)
        {
            bool ok = true;
            for (auto u : adj[v])
                if (color[u] == c)
                {
                    ok = false;
                    break;
                }
            if (ok)
                break;
        }
        if (++result.nodes > node_budget)
        {
            result.status = ColoringSearch::Status::unknown;
            return result;
        }
        if (c <= limit)
        {
            color[v] = c;
            max_used[pos + 1] = std::max(max_used[pos], c);
            ++pos;
        }
        else
        {
            color[v] = 0;
            if (pos == 0)
                break;
            --pos;
        }
    }
    result.status = ColoringSearch::Status::none;
    return result;
}

/**
 * Δ_S = {τ ∈ Δ : κ(τ) ⊆ S}.
 */
inline Complex rank_selected(const Complex& complex, const Coloring& coloring, const std::set<int>& colors)
{
    validate_coloring(complex, coloring);
    for (int c : colors)
        if (c < 1 || c > coloring.num_colors())
            throw ValidationError("rank selection: color " + std::to_string(c) + " is outside [1, "
                                  + std::to_string(coloring.num_colors()) + "]");
    std::vector<Vertex> removed;
    for (const auto& v : complex.vertices())
        if (!colors.count(coloring.color(v)))
            removed.push_back(v);
    return deletion(complex, removed);
}

}   // namespace buchstar

#endif
