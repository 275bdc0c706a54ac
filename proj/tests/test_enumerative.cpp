#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "buchstar/buchstar.hpp"
#include "oracles.hpp"

using namespace buchstar;

namespace {

const auto Q = CoefficientField::rationals();
const auto F2 = CoefficientField::prime(2);

Complex octahedron() { return cross_polytope(3).complex; }

}   // namespace

TEST_CASE("f-vectors", "[enumerative]")
{
    CHECK(f_vector(octahedron()) == IntVector{1, 6, 12, 8});
    CHECK(f_vector(simplex_boundary(3)) == IntVector{1, 4, 6, 4});
    CHECK(f_vector(named("k33")) == IntVector{1, 6, 9});
    CHECK(f_vector(Complex::empty_complex()) == IntVector{1});
    CHECK_THROWS_AS(f_vector(Complex()), DomainError);
}

TEST_CASE("h-vectors", "[enumerative]")
{
    CHECK(h_vector(octahedron()) == IntVector{1, 3, 3, 1});
    CHECK(h_vector(stacked_cross_polytopal_sphere(9, 3).complex) == IntVector{1, 6, 6, 1});
    for (int d = 2; d <= 6; ++d)
        CHECK(h_vector(simplex_boundary(d - 1)) == IntVector(static_cast<std::size_t>(d), 1));
    CHECK(h_vector(build({{1, 2}}), 3) == IntVector{1, -1, 0, 0});
    CHECK_THROWS_AS(h_vector(octahedron(), 2), DomainError);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("h'-vectors", "[enumerative]")
{
    CHECK(h_prime_vector(octahedron(), Q).values == h_vector(octahedron()));
    CHECK(h_vector(named("two_triangle_boundaries")) == IntVector{1, 4, 1});
    CHECK(h_prime_vector(named("two_triangle_boundaries"), Q).values == IntVector{1, 4, 2});
    for (const auto& field : {Q, F2})
    {
        const auto hp = h_prime_vector(named("k33"), field);
        CHECK(hp.values == IntVector{1, 4, 4});
        CHECK(hp.values == one_plus_mt_power(2, 2));
        CHECK(hp.field == field);
    }
    // Field dependence through the Betti numbers
    CHECK(h_prime_vector(named("rp2_min"), Q).values != h_prime_vector(named("rp2_min"), F2).values);
}

TEST_CASE("short simplicial h-numbers", "[enumerative]")
{
    CHECK(short_simplicial_h(octahedron()) == IntVector{6, 12, 6});
    const IntVector h = h_vector(octahedron());
    CHECK(short_simplicial_h(octahedron())[1] == 2 * h[2] + 2 * h[1]);
    for (int d = 1; d <= 5; ++d)
    {
        IntVector expect(static_cast<std::size_t>(d), 0);
        expect[0] = d;
        CHECK(short_simplicial_h(simplex(d - 1)) == expect);
    }
    CHECK_THROWS_AS(short_simplicial_h(build({{1, 2, 3}, {3, 4}})), DomainError);
}

TEST_CASE("coefficientwise comparison", "[enumerative]")
{
    CHECK(poly_geq({1, 6, 12, 8}, {1, 6, 12, 8}));
    CHECK_FALSE(poly_geq({1, 3, 3, 1}, {1, 3, 4, 1}));
    CHECK(poly_geq({1, 2}, {1, 2, 0}));
    CHECK_FALSE(poly_geq({1, 2}, {1, 2, 1}));
    const auto hp = h_prime_vector(multi_point_join(3, 3).complex, Q).values;
    CHECK(hp == IntVector{1, 6, 12, 8});
    CHECK(poly_geq(hp, one_plus_mt_power(2, 3)));
    CHECK(one_plus_mt_power(2, 3) == IntVector{1, 6, 12, 8});
}

TEST_CASE("face_vectors bundles everything", "[enumerative]")
{
    const auto fv = face_vectors(octahedron(), Q);
    CHECK(fv.f == IntVector{1, 6, 12, 8});
    CHECK(fv.h == IntVector{1, 3, 3, 1});
    CHECK(fv.short_h == IntVector{6, 12, 6});
    CHECK(fv.chi_reduced == 1);
    CHECK(fv.pure);
    const auto np = face_vectors(build({{1, 2, 3}, {3, 4}}), Q);
    CHECK_FALSE(np.pure);
    CHECK(np.short_h.empty());
}

TEST_CASE("f and h round trip", "[enumerative][property]")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 300; ++trial)
    {
        const Complex c = oracle::random_complex(rng, 8, 4, true);
        const int d = c.dim() + 1;
        const IntVector f = f_vector(c);
        REQUIRE(f == oracle::f_vector(c));
        const IntVector h = h_from_f(f, d);
        REQUIRE(h == oracle::h_from_f(f, d));
        REQUIRE(f_from_h(h, d) == f);
    }
}

TEST_CASE("Euler characteristic from faces and from Betti numbers", "[enumerative][property]")
{
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 150; ++trial)
    {
        const Complex c = oracle::random_complex(rng, 7, 3, false);
        const auto chi = face_vectors(c, Q).chi_reduced;
        for (const auto& field : {Q, F2, CoefficientField::prime(3)})
            REQUIRE(reduced_betti(c, field).euler_characteristic() == chi);
    }
}

TEST_CASE("h' equals h when lower homology vanishes", "[enumerative][property]")
{
    std::mt19937_64 rng(43);
    int seen = 0;
    for (int trial = 0; trial < 200; ++trial)
    {
        const Complex c = oracle::random_complex(rng, 7, 3, true);
        const auto b = reduced_betti(c, Q);
        if (!b.vanishes_below(c.dim()))
            continue;
        ++seen;
        REQUIRE(h_prime_vector(c, Q).values == h_vector(c));
    }
    CHECK(seen > 10);
}

TEST_CASE("Swartz identity on random pure complexes", "[enumerative][property]")
{
    // short_simplicial_h asserts the identity itself in test builds; this
    // recomputes both sides from oracle counts.
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 200; ++trial)
    {
        const Complex c = oracle::random_complex(rng, 8, 3, true);
        const int d = c.dim() + 1;
        const IntVector h = oracle::h_from_f(oracle::f_vector(c), d);
        const IntVector got = short_simplicial_h(c);
        for (int j = 1; j <= d; ++j)
            REQUIRE(got[static_cast<std::size_t>(j - 1)]
                    == j * h[static_cast<std::size_t>(j)] + (d - j + 1) * h[static_cast<std::size_t>(j - 1)]);
    }
}

TEST_CASE("Stanley identity on random balanced complexes", "[enumerative][property]")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed)
    {
        const auto cc = random_balanced_complex(seed, 4 + static_cast<int>(seed % 5), 2 + static_cast<int>(seed % 3),
                                                3 + static_cast<std::int64_t>(seed % 11));
        const int d = cc.coloring.num_colors();
        const IntVector h = h_vector(cc.complex, d);
        IntVector sums(static_cast<std::size_t>(d + 1), 0);
        for (int mask = 0; mask < (1 << d); ++mask)
        {
            std::set<int> s;
            for (int c = 1; c <= d; ++c)
                if (mask >> (c - 1) & 1)
                    s.insert(c);
            const int i = static_cast<int>(s.size());
            const Complex sel = rank_selected(cc.complex, cc.coloring, s);
            sums[static_cast<std::size_t>(i)] += oracle::h_from_f(oracle::f_vector(sel), i)[static_cast<std::size_t>(i)];
        }
        REQUIRE(h == sums);
    }
}
