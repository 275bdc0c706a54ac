/**
 * Named families of complexes: simplices and their boundaries, cross
 * polytopes, joins of point sets, stacked cross-polytopal spheres, the
 * skeleton-join spheres S(m, i, d-1), and a registry of small fixtures.
 */
#ifndef BUCHSTAR_CONSTRUCTIONS_HPP
#define BUCHSTAR_CONSTRUCTIONS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "classify.hpp"
#include "complex.hpp"
#include "error.hpp"

namespace buchstar {

/// A complex together with a balanced coloring of it.
struct ColoredComplex
{
    Complex complex;
    Coloring coloring;
};

/* ------------------------------------------------------------------------ //
 *                          SIMPLICES AND JOINS                             //
 * ------------------------------------------------------------------------ */

/// Σ^j on vertices 1..j+1.
inline Complex simplex(int j)
{
    if (j < 0)
        throw ConstructionError("simplex: dimension must be non-negative");
    std::vector<Vertex> vs;
    for (int v = 1; v <= j + 1; ++v)
        vs.emplace_back(v);
    return Complex::build({vs});
}

/// ∂Σ^j: all proper faces of Σ^j.
inline Complex simplex_boundary(int j)
{
    if (j < 1)
        throw ConstructionError("simplex_boundary: dimension must be at least 1");
    return skeleton(simplex(j), j - 1);
}

/**
 * Join of several complexes after relabeling vertex v of factor i (1-based)
 * to the string "i:v", so the factors are always disjoint.
 */
inline Complex disjoint_join(const std::vector<Complex>& factors)
{
    Complex out = Complex::empty_complex();
    for (std::size_t i = 0; i < factors.size(); ++i)
    {
        std::map<Vertex, Vertex> names;
        for (const auto& v : factors[i].vertices())
            names[v] = Vertex(std::to_string(i + 1) + ":" + v.to_string());
        out = join(out, relabel(factors[i], names));
    }
    return out;
}

/**
 * P(q, d): the d-fold join of q isolated vertices.  Point j of factor c
 * (both 1-based) is labeled (c - 1) q + j and colored c.
 */
inline ColoredComplex multi_point_join(int q, int d)
{
    if (q < 1 || d < 1)
        throw ConstructionError("multi_point_join: q and d must be positive");
    Complex out = Complex::empty_complex();
    std::map<Vertex, int> colors;
    for (int c = 1; c <= d; ++c)
    {
        std::vector<std::vector<Vertex>> points;
        for (int j = 1; j <= q; ++j)
        {
            const Vertex v((c - 1) * q + j);
            points.push_back({v});
            colors[v] = c;
        }
        out = join(out, Complex::build(points));
    }
    return {out, Coloring(d, std::move(colors))};
}

/// Boundary of the d-dimensional cross polytope; antipodes 2c-1, 2c share color c.
inline ColoredComplex cross_polytope(int d)
{
    if (d < 1)
        throw ConstructionError("cross_polytope: d must be positive");
    return multi_point_join(2, d);
}

/* ------------------------------------------------------------------------ //
 *                             CONNECTED SUMS                               //
 * ------------------------------------------------------------------------ */

namespace detail {

inline void check_facet(const Complex& complex, const Face& facet, const char* which)
{
    if (std::find(complex.facets().begin(), complex.facets().end(), facet) == complex.facets().end())
        throw ConstructionError(std::string("connected_sum: ") + which + " face " + facet.to_string()
                                + " is not a facet");
}

}   // namespace detail

/**
 * Glues Δ₂ to Δ₁ by identifying facet F₂ with F₁ through φ: F₁ → F₂ and
 * removing the identified facet.  Vertices of Δ₂ outside F₂ keep their labels
 * and must not occur in Δ₁.
 */
inline Complex connected_sum(const Complex& first, const Face& first_facet, const Complex& second,
                             const Face& second_facet, const std::map<Vertex, Vertex>& phi)
{
    detail::check_facet(first, first_facet, "first");
    detail::check_facet(second, second_facet, "second");
    if (first_facet.size() != second_facet.size())
        throw ConstructionError("connected_sum: facets have different dimensions");
    if (phi.size() != first_facet.size())
        throw ConstructionError("connected_sum: the identification must be a bijection of the facets");
    std::map<Vertex, Vertex> inverse;
    for (const auto& [a, b] : phi)
    {
        if (!first_facet.contains(a) || !second_facet.contains(b))
            throw ConstructionError("connected_sum: identification " + a.to_string() + " -> " + b.to_string()
                                    + " leaves the facets");
        if (!inverse.emplace(b, a).second)
            throw ConstructionError("connected_sum: identification is not injective");
    }

    std::map<Vertex, Vertex> rename;
    for (const auto& v : second.vertices())
    {
        auto it = inverse.find(v);
        if (it != inverse.end())
        {
            rename[v] = it->second;
            continue;
        }
        if (first.has_vertex(v))
            throw LabelCollisionError("connected_sum: vertex " + v.to_string() + " occurs in both summands");
        rename[v] = v;
    }
    const Complex moved = relabel(second, rename);

    std::vector<Face> gens;
    for (const auto& f : first.facets())
        if (f != first_facet)
            gens.push_back(f);
    for (const auto& f : moved.facets())
        if (f != first_facet)
            gens.push_back(f);
    // The boundary of the removed facet stays in the result
    for (std::size_t k = 0; k < first_facet.size(); ++k)
        gens.push_back(first_facet.without(k));
    return Complex::from_faces(std::move(gens));
}

/// Connected sum of balanced complexes; φ must preserve colors.
inline ColoredComplex connected_sum(const ColoredComplex& first, const Face& first_facet,
                                    const ColoredComplex& second, const Face& second_facet,
                                    const std::map<Vertex, Vertex>& phi)
{
    for (const auto& [a, b] : phi)
        if (first.coloring.color(a) != second.coloring.color(b))
            throw ConstructionError("connected_sum: vertices " + a.to_string() + " and " + b.to_string()
                                    + " have different colors");
    Complex sum = connected_sum(first.complex, first_facet, second.complex, second_facet, phi);
    std::map<Vertex, int> colors = first.coloring.assignment();
    for (const auto& [v, c] : second.coloring.assignment())
        if (!second_facet.contains(v))
            colors[v] = c;
    std::map<Vertex, int> restricted;
    for (const auto& v : sum.vertices())
        restricted[v] = colors.at(v);
    return {sum, Coloring(first.coloring.num_colors(), std::move(restricted))};
}

/**
 * ST^×(n, d-1): connected sum of n/d - 1 copies of the d-dimensional cross
 * polytope boundary.  Each new copy is glued along the lexicographically last
 * facet of the running sum; the copy's all-even facet {2, 4, ..., 2d} is
 * matched by color and its remaining vertices get the next unused labels in
 * color order, so the result is labeled 1..n.
 */
inline ColoredComplex stacked_cross_polytopal_sphere(int n, int d)
{
    if (d < 2)
        throw ConstructionError("stacked_cross_polytopal_sphere: d must be at least 2");
    if (n % d != 0)
        throw ConstructionError("stacked_cross_polytopal_sphere: d = " + std::to_string(d) + " does not divide n = "
                                + std::to_string(n));
    if (n < 2 * d)
        throw ConstructionError("stacked_cross_polytopal_sphere: n must be at least 2d");

    const int copies = n / d - 1;
    ColoredComplex running = cross_polytope(d);
    int next = 2 * d + 1;
    for (int k = 2; k <= copies; ++k)
    {
        const Face glue = running.complex.facets().back();
        std::map<int, Vertex> by_color;
        for (const auto& v : glue)
            by_color[running.coloring.color(v)] = v;

        const ColoredComplex fresh = cross_polytope(d);
        std::map<Vertex, Vertex> rename;
        for (int c = 1; c <= d; ++c)
        {
            rename[Vertex(2 * c)] = by_color.at(c);
            rename[Vertex(2 * c - 1)] = Vertex(next++);
        }
        ColoredComplex copy{relabel(fresh.complex, rename), {}};
        std::map<Vertex, int> colors;
        for (const auto& [old, now] : rename)
            colors[now] = fresh.coloring.color(old);
        copy.coloring = Coloring(d, std::move(colors));

        std::map<Vertex, Vertex> identity;
        for (const auto& v : glue)
            identity[v] = v;
        running = connected_sum(running, glue, copy, glue, identity);
    }
    return running;
}

/**
 * S(m, i, d-1) = Skel_{i-1}(Σ^{m+i-2})^{*q} * Skel_{r-1}(Σ^{m+r-2}) with
 * d = q i + r, 1 ≤ r ≤ i.
 */
inline Complex skeleton_join_sphere(int m, int i, int d)
{
    if (m < 2 || i < 1 || d < 1)
        throw ConstructionError("skeleton_join_sphere: requires m >= 2, i >= 1, d >= 1");
    const int q = (d - 1) / i;
    const int r = d - q * i;
    std::vector<Complex> factors(static_cast<std::size_t>(q), skeleton(simplex(m + i - 2), i - 1));
    factors.push_back(skeleton(simplex(m + r - 2), r - 1));
    return disjoint_join(factors);
}

/// Nevo's S(i, d-1) = (∂Σ^i)^{*q} * ∂Σ^r with d = q i + r, 1 ≤ r ≤ i.
inline Complex nevo_sphere(int i, int d)
{
    if (i < 1 || d < 1)
        throw ConstructionError("nevo_sphere: requires i >= 1, d >= 1");
    const int q = (d - 1) / i;
    const int r = d - q * i;
    std::vector<Complex> factors(static_cast<std::size_t>(q), simplex_boundary(i));
    factors.push_back(simplex_boundary(r));
    return disjoint_join(factors);
}

/* ------------------------------------------------------------------------ //
 *                               ISOMORPHISM                                //
 * ------------------------------------------------------------------------ */

/**
 * Whether two complexes are isomorphic, by backtracking over vertex
 * bijections that preserve adjacency.  Meant for small complexes.
 */
inline bool are_isomorphic(const Complex& a, const Complex& b)
{
    if (a.is_void() || b.is_void())
        return a.is_void() && b.is_void();
    if (a.vertices().size() != b.vertices().size() || a.facets().size() != b.facets().size() || a.dim() != b.dim())
        return false;
    for (int k = 0; k <= a.dim(); ++k)
        if (a.num_faces(k) != b.num_faces(k))
            return false;

    const auto& va = a.vertices();
    const auto& vb = b.vertices();
    const std::size_t n = va.size();
    auto adjacency = [n](const Complex& c) {
        const auto& vs = c.vertices();
        std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
        for (const auto& e : c.faces_of_dim(1))
        {
            auto i = static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), e[0]) - vs.begin());
            auto j = static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), e[1]) - vs.begin());
            adj[i][j] = adj[j][i] = true;
        }
        return adj;
    };
    // Vertex invariant: f-vector of the link
    auto signature = [](const Complex& c, const Vertex& v) {
        const Complex lk = link(c, Face{v});
        std::vector<std::size_t> sig;
        for (int k = -1; k <= lk.dim(); ++k)
            sig.push_back(lk.num_faces(k));
        return sig;
    };
    const auto adj_a = adjacency(a);
    const auto adj_b = adjacency(b);
    std::vector<std::vector<std::size_t>> sig_a, sig_b;
    for (const auto& v : va) sig_a.push_back(signature(a, v));
    for (const auto& v : vb) sig_b.push_back(signature(b, v));

    const std::set<Face> facets_b(b.facets().begin(), b.facets().end());
    std::vector<std::size_t> image(n, SIZE_MAX);
    std::vector<bool> used(n, false);

    std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
        if (i == n)
        {
            for (const auto& f : a.facets())
            {
                std::vector<Vertex> mapped;
                for (const auto& v : f)
                {
                    auto idx = static_cast<std::size_t>(std::lower_bound(va.begin(), va.end(), v) - va.begin());
                    mapped.push_back(vb[image[idx]]);
                }
                if (!facets_b.count(Face(std::move(mapped))))
                    return false;
            }
            return true;
        }
        for (std::size_t j = 0; j < n; ++j)
        {
            if (used[j] || sig_a[i] != sig_b[j])
                continue;
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k)
                ok = adj_a[i][k] == adj_b[j][image[k]];
            if (!ok)
                continue;
            image[i] = j;
            used[j] = true;
            if (extend(i + 1))
                return true;
            used[j] = false;
            image[i] = SIZE_MAX;
        }
        return false;
    };
    return extend(0);
}

/* ------------------------------------------------------------------------ //
 *                                 FIXTURES                                 //
 * ------------------------------------------------------------------------ */

/**
 * A curated complex with its expected reduced Betti numbers over Q and F₂
 * (β̃_{-1}, ..., β̃_{dim}), and a balanced coloring where one is known.
 */
struct Fixture
{
    std::string name;
    Complex complex;
    std::optional<Coloring> coloring;
    std::vector<std::int64_t> betti_rationals;
    std::vector<std::int64_t> betti_f2;
};

inline std::vector<Fixture> fixtures()
{
    std::vector<Fixture> out;
    auto add = [&](std::string name, const Complex& c, std::vector<std::int64_t> bq, std::vector<std::int64_t> b2,
                   std::optional<Coloring> coloring = std::nullopt) {
        out.push_back({std::move(name), c, std::move(coloring), std::move(bq), std::move(b2)});
    };

    // The 6-vertex real projective plane (hemi-icosahedron)
    add("rp2_min",
        build({{1, 2, 4}, {1, 2, 6}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5},
               {2, 3, 4}, {2, 3, 5}, {2, 5, 6}, {3, 4, 6}, {4, 5, 6}}),
        {0, 0, 0, 0}, {0, 0, 1, 1});

    std::vector<std::vector<Vertex>> torus;
    for (int i = 0; i < 7; ++i)
    {
        torus.push_back({i + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1});
        torus.push_back({i + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1});
    }
    add("torus_7", build(torus), {0, 0, 2, 1}, {0, 0, 2, 1});

    const ColoredComplex octa = cross_polytope(3);
    add("octahedron", octa.complex, {0, 0, 0, 1}, {0, 0, 0, 1}, octa.coloring);

    std::vector<std::vector<Vertex>> two_octa;
    for (const auto& f : octa.complex.facets())
    {
        std::vector<Vertex> g;
        for (const auto& v : f)
            g.emplace_back(v.integer() + 6);
        two_octa.push_back(f.vertices());
        two_octa.push_back(g);
    }
    add("two_octahedra_disjoint", build(two_octa), {0, 1, 0, 2}, {0, 1, 0, 2});

    add("triangle_boundary", simplex_boundary(2), {0, 0, 1}, {0, 0, 1});
    add("two_triangle_boundaries", build({{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}}), {0, 1, 2}, {0, 1, 2});
    add("triangle_with_pendant", build({{1, 2}, {2, 3}, {1, 3}, {3, 4}}), {0, 0, 1}, {0, 0, 1});
    add("single_edge", build({{1, 2}}), {0, 0, 0}, {0, 0, 0});
    add("path2", build({{1, 2}, {2, 3}}), {0, 0, 0}, {0, 0, 0});
    add("bowtie2d", build({{1, 2, 3}, {1, 4, 5}}), {0, 0, 0, 0}, {0, 0, 0, 0});
    add("cone_over_square", build({{1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {1, 4, 5}}), {0, 0, 0, 0}, {0, 0, 0, 0});

    const ColoredComplex k33 = multi_point_join(3, 2);
    add("k33", k33.complex, {0, 0, 4}, {0, 0, 4}, k33.coloring);

    // Suspension of a hexagon: a flag 2-sphere on 8 vertices
    std::vector<std::vector<Vertex>> susp;
    std::map<Vertex, int> susp_colors;
    for (int i = 1; i <= 6; ++i)
    {
        const int j = i % 6 + 1;
        susp.push_back({i, j, 7});
        susp.push_back({i, j, 8});
        susp_colors[Vertex(i)] = (i % 2) + 1;
    }
    susp_colors[Vertex(7)] = 3;
    susp_colors[Vertex(8)] = 3;
    add("suspended_hexagon", build(susp), {0, 0, 0, 1}, {0, 0, 0, 1}, Coloring(3, susp_colors));

    return out;
}

inline std::vector<std::string> fixture_names()
{
    std::vector<std::string> names;
    for (const auto& f : fixtures())
        names.push_back(f.name);
    return names;
}

inline Fixture named_fixture(const std::string& name)
{
    for (auto& f : fixtures())
        if (f.name == name)
            return f;
    throw LookupError("no fixture named '" + name + "'");
}

inline Complex named(const std::string& name)
{
    return named_fixture(name).complex;
}

}   // namespace buchstar

#endif
