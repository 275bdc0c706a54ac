/**
 * Seeded generators for the fuzz corpus.  Draws use mt19937_64 with
 * rejection sampling, so a seed yields the same complex on every platform.
 */
#ifndef BUCHSTAR_RANDOM_HPP
#define BUCHSTAR_RANDOM_HPP

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "constructions.hpp"
#include "enumerative.hpp"
#include "error.hpp"

namespace buchstar {

class Rng
{
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n)
    {
        if (n == 0)
            throw DomainError("Rng::below: empty range");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do
            x = engine_();
        while (x >= limit);
        return x % n;
    }

    /// Uniform integer in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi)
    {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// k distinct items drawn uniformly from pool (partial Fisher-Yates).
    template <typename T>
    std::vector<T> sample(std::vector<T> pool, std::size_t k)
    {
        for (std::size_t i = 0; i < k; ++i)
            std::swap(pool[i], pool[i + below(pool.size() - i)]);
        pool.resize(k);
        return pool;
    }

private:
    std::mt19937_64 engine_;
};

inline std::vector<Vertex> integer_vertices(int n)
{
    std::vector<Vertex> vs;
    for (int v = 1; v <= n; ++v)
        vs.emplace_back(v);
    return vs;
}

/**
 * facet_count distinct (dim+1)-subsets of {1..n}, drawn uniformly without
 * replacement.
 */
inline Complex random_pure_complex(std::uint64_t seed, int n, int dim, std::int64_t facet_count)
{
    if (n < 1 || dim < 0 || dim + 1 > n)
        throw DomainError("random_pure_complex: need 0 <= dim < n");
    const std::int64_t total = binomial(n, dim + 1);
    if (facet_count < 1 || facet_count > total)
        throw DomainError("random_pure_complex: facet_count must lie in [1, C(n, dim+1)] = [1, "
                          + std::to_string(total) + "]");
    Rng rng(seed);
    auto chosen = rng.sample(subsets_of_size(integer_vertices(n), static_cast<std::size_t>(dim + 1)),
                             static_cast<std::size_t>(facet_count));
    return Complex::from_faces(std::move(chosen));
}

/**
 * A random balanced (d-1)-complex on at most n vertices: vertex v < d gets
 * color v, the rest uniform colors; facets are facet_count distinct colorful
 * d-sets (fewer if there are not that many).
 */
inline ColoredComplex random_balanced_complex(std::uint64_t seed, int n, int d, std::int64_t facet_count)
{
    if (d < 1 || n < d)
        throw DomainError("random_balanced_complex: need 1 <= d <= n");
    Rng rng(seed);
    std::vector<std::vector<Vertex>> classes(static_cast<std::size_t>(d));
    std::map<Vertex, int> colors;
    for (int v = 1; v <= n; ++v)
    {
        const int c = v <= d ? v : static_cast<int>(rng.below(static_cast<std::uint64_t>(d))) + 1;
        classes[static_cast<std::size_t>(c - 1)].emplace_back(v);
        colors[Vertex(v)] = c;
    }
    std::vector<Face> colorful{Face()};
    for (const auto& cls : classes)
    {
        std::vector<Face> next;
        for (const auto& partial : colorful)
            for (const auto& v : cls)
                next.push_back(partial.united_with(Face{v}));
        colorful = std::move(next);
    }
    std::sort(colorful.begin(), colorful.end());
    const auto k = std::min<std::size_t>(colorful.size(), static_cast<std::size_t>(std::max<std::int64_t>(facet_count, 1)));
    Complex c = Complex::from_faces(rng.sample(std::move(colorful), k));
    std::map<Vertex, int> used;
    for (const auto& v : c.vertices())
        used[v] = colors.at(v);
    return {c, Coloring(d, std::move(used))};
}

}   // namespace buchstar

#endif
