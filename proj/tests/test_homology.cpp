#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <thread>

#include "buchstar/buchstar.hpp"
#include "oracles.hpp"

using namespace buchstar;

namespace {

const auto Q = CoefficientField::rationals();
const auto F2 = CoefficientField::prime(2);
const auto F3 = CoefficientField::prime(3);

Complex octahedron() { return cross_polytope(3).complex; }

}   // namespace

TEST_CASE("chain complex of an edge", "[homology]")
{
    const auto cc = chain_complex(build({{1, 2}}), Q);
    REQUIRE(cc.top_degree() == 1);
    const auto& d1 = cc.d(1);
    CHECK(d1.at(0, 0) == -1);   // vertex 1
    CHECK(d1.at(1, 0) == 1);    // vertex 2
    const auto& d0 = cc.d(0);
    CHECK(d0.rows() == 1);
    CHECK(d0.at(0, 0) == 1);
    CHECK(d0.at(0, 1) == 1);
}

TEST_CASE("boundary ranks and d^2 = 0", "[homology]")
{
    const auto tri = chain_complex(simplex_boundary(2), Q);
    CHECK(tri.d(1).rows() == 3);
    CHECK(tri.d(1).cols() == 3);
    CHECK(rank(tri.d(1), Q) == 2);
    const auto oct = chain_complex(octahedron(), F3);
    for (int k = 1; k <= oct.top_degree(); ++k)
        for (const auto& row : multiply(oct.d(k - 1), oct.d(k)))
            for (auto x : row)
                CHECK(x == 0);
    CHECK_THROWS_AS(chain_complex(Complex(), Q), DomainError);
}

TEST_CASE("reduced Betti numbers", "[homology]")
{
    CHECK(reduced_betti(octahedron(), Q).values == std::vector<std::int64_t>{0, 0, 0, 1});
    CHECK(reduced_betti(named("rp2_min"), F2).values == std::vector<std::int64_t>{0, 0, 1, 1});
    CHECK(reduced_betti(named("rp2_min"), Q).values == std::vector<std::int64_t>{0, 0, 0, 0});
    CHECK(reduced_betti(Complex::empty_complex(), Q).values == std::vector<std::int64_t>{1});
    CHECK_THROWS_AS(reduced_betti(Complex(), Q), DomainError);
    CHECK(reduced_betti(octahedron(), Q).field == Q);
}

TEST_CASE("fixture Betti numbers", "[homology]")
{
    for (const auto& f : fixtures())
    {
        INFO(f.name);
        CHECK(reduced_betti(f.complex, Q).values == f.betti_rationals);
        CHECK(reduced_betti(f.complex, F2).values == f.betti_f2);
        CHECK(oracle::betti(f.complex, oracle::big_prime) == f.betti_rationals);
        CHECK(oracle::betti(f.complex, 2) == f.betti_f2);
    }
}

TEST_CASE("relative Betti numbers", "[homology]")
{
    CHECK(relative_betti(octahedron(), Face{1}, 2, Q) == 1);
    CHECK(relative_betti(simplex_boundary(2), Face{1, 2}, 1, Q) == 1);
    CHECK(relative_betti(simplex(2), Face{1}, 2, Q) == 0);
    CHECK_THROWS_AS(relative_betti(octahedron(), Face(), 1, Q), DomainError);
    CHECK_THROWS_AS(relative_betti(octahedron(), Face{1, 2}, 1, Q), DomainError);
}

TEST_CASE("top restriction surjectivity", "[homology]")
{
    const Complex oct = octahedron();
    for (const auto& field : {Q, F2, F3})
        for (const auto& tau : oct.all_faces())
            if (!tau.empty())
                CHECK(top_restriction_surjective(oct, tau, field));
    const Complex rp2 = named("rp2_min");
    for (const auto& v : rp2.vertices())
    {
        CHECK_FALSE(top_restriction_surjective(rp2, Face{v}, Q));
        CHECK(top_restriction_surjective(rp2, Face{v}, F2));
    }
    CHECK_THROWS_AS(top_restriction_surjective(build({{1, 2, 3}, {3, 4}}), Face{1}, Q), DomainError);
}

TEST_CASE("pair restriction surjectivity", "[homology]")
{
    const Complex oct = octahedron();
    CHECK(pair_restriction_surjective(oct, Face{1, 3}, Face{1, 3}, Q));
    CHECK(pair_restriction_surjective(oct, Face{1}, Face{1, 3}, Q));
    CHECK_FALSE(pair_restriction_surjective(named("rp2_min"), Face(), Face{1}, Q));
    CHECK_THROWS_AS(pair_restriction_surjective(oct, Face{1, 3}, Face{1}, Q), DomainError);
}

TEST_CASE("Betti numbers match the oracle on random complexes", "[homology][property]")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 150; ++trial)
    {
        const Complex c = oracle::random_complex(rng, 7, 3, false);
        for (const auto& field : {Q, F2, F3})
        {
            const auto b = compute_reduced_betti(c, field);
            REQUIRE(b.values == oracle::betti(c, oracle::modulus_for(field.characteristic())));
            REQUIRE(b.euler_characteristic() == reduced_euler_characteristic(c));
            for (auto x : b.values)
                REQUIRE(x >= 0);
        }
    }
}

TEST_CASE("relative homology is shifted link homology", "[homology][property]")
{
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 80; ++trial)
    {
        const Complex c = oracle::random_complex(rng, 7, 3, false);
        for (const auto& field : {Q, F2})
        {
            const auto p = oracle::modulus_for(field.characteristic());
            for (const auto& tau : c.all_faces())
            {
                if (tau.empty())
                    continue;
                const auto lk = reduced_betti(link(c, tau), field);
                for (int i = -1; i <= c.dim() + 1; ++i)
                {
                    const auto rel = relative_betti(c, tau, i, field);
                    REQUIRE(rel == lk.at(i - static_cast<int>(tau.size())));
                    REQUIRE(rel == oracle::relative_betti(c, tau, i, p));
                }
            }
        }
    }
}

TEST_CASE("disjoint unions add Betti numbers", "[homology][property]")
{
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 60; ++trial)
    {
        const Complex a = oracle::random_complex(rng, 5, 2, false);
        const Complex b0 = oracle::random_complex(rng, 5, 2, false);
        std::map<Vertex, Vertex> shift;
        for (const auto& v : b0.vertices())
            shift[v] = Vertex(v.integer() + 50);
        const Complex b = relabel(b0, shift);
        std::vector<Face> both = a.facets();
        both.insert(both.end(), b.facets().begin(), b.facets().end());
        const Complex u = Complex::from_faces(both);
        const auto ba = reduced_betti(a, Q), bb = reduced_betti(b, Q), bu = reduced_betti(u, Q);
        REQUIRE(bu.at(-1) == 0);
        REQUIRE(bu.at(0) == ba.at(0) + bb.at(0) + 1);
        for (int i = 1; i <= u.dim(); ++i)
            REQUIRE(bu.at(i) == ba.at(i) + bb.at(i));
    }
}

TEST_CASE("surjectivity matches the long exact sequence oracle", "[homology][property]")
{
    std::mt19937_64 rng(34);
    int checked = 0;
    for (int trial = 0; trial < 150; ++trial)
    {
        const Complex c = oracle::random_complex(rng, 6, 2, true);
        for (const auto& field : {Q, F2})
        {
            const auto p = oracle::modulus_for(field.characteristic());
            for (const auto& tau : c.all_faces())
            {
                if (tau.empty())
                    continue;
                REQUIRE(top_restriction_surjective(c, tau, field) == oracle::top_map_onto(c, tau, p));
                ++checked;
            }
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("the Betti cache is write-once and thread safe", "[homology]")
{
    auto& cache = BettiCache::instance();
    const Complex torus = named("torus_7");
    const std::string key = BettiCache::key(torus, Q);
    std::vector<std::thread> workers;
    std::vector<std::vector<std::int64_t>> results(8);
    for (std::size_t t = 0; t < results.size(); ++t)
        workers.emplace_back([&, t] { results[t] = reduced_betti(torus, Q).values; });
    for (auto& w : workers)
        w.join();
    for (const auto& r : results)
        CHECK(r == std::vector<std::int64_t>{0, 0, 2, 1});
    std::vector<std::int64_t> stored;
    REQUIRE(cache.lookup(key, stored));
    CHECK(stored == std::vector<std::int64_t>{0, 0, 2, 1});
    cache.store(key, {9, 9, 9, 9});
    cache.lookup(key, stored);
    CHECK(stored == std::vector<std::int64_t>{0, 0, 2, 1});
}
