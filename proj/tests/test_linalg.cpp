#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "buchstar/buchstar.hpp"
#include "oracles.hpp"

using namespace buchstar;

namespace {

const std::vector<CoefficientField> test_fields{CoefficientField::rationals(), CoefficientField::prime(2),
                                                CoefficientField::prime(3), CoefficientField::prime(5)};

SparseIntMatrix triangle_d1()
{
    // columns: edges 12, 13, 23; rows: vertices 1, 2, 3
    return SparseIntMatrix::from_rows({{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}});
}

SparseIntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int density_percent)
{
    std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols, 0));
    for (auto& row : m)
        for (auto& x : row)
            if (static_cast<int>(rng() % 100) < density_percent)
                x = static_cast<std::int64_t>(rng() % 7) - 3;
    return SparseIntMatrix::from_rows(m);
}

std::vector<std::vector<std::int64_t>> rows_of(const SparseIntMatrix& m)
{
    std::vector<std::vector<std::int64_t>> out(m.rows(), std::vector<std::int64_t>(m.cols(), 0));
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            out[i][j] = m.at(i, j);
    return out;
}

}   // namespace

TEST_CASE("coefficient fields", "[field]")
{
    CHECK(CoefficientField::rationals().tag() == "Q");
    CHECK(CoefficientField::prime(2).tag() == "F2");
    CHECK(CoefficientField::parse("f3") == CoefficientField::prime(3));
    CHECK(CoefficientField::parse("q").is_rationals());
    CHECK(CoefficientField::parse("rationals").is_rationals());
    CHECK_THROWS_AS(CoefficientField::prime(4), DomainError);
    CHECK_THROWS_AS(CoefficientField::parse("f9"), DomainError);
    CHECK_THROWS(CoefficientField::parse("reals"));

    const PrimeField f5{5};
    CHECK(f5.mul(f5.inv(3), 3) == 1);
    CHECK(f5.from_int(-1) == 4);
    const RationalField q;
    CHECK(q.mul(q.inv(q.from_int(3)), q.from_int(3)) == q.one());
}

TEST_CASE("rank examples", "[linalg]")
{
    for (const auto& field : test_fields)
    {
        CHECK(rank(SparseIntMatrix::identity(5), field) == 5);
        CHECK(rank(triangle_d1(), field) == 2);
    }
    const auto two = SparseIntMatrix::from_rows({{2}});
    CHECK(rank(two, CoefficientField::rationals()) == 1);
    CHECK(rank(two, CoefficientField::prime(2)) == 0);
    CHECK(rank(SparseIntMatrix(0, 4), CoefficientField::rationals()) == 0);
}

TEST_CASE("kernel examples", "[linalg]")
{
    const RationalField q;
    const auto zero = SparseIntMatrix::from_rows({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
    CHECK(kernel_basis(zero, q).cols() == 3);
    const auto k = kernel_basis(triangle_d1(), q);
    REQUIRE(k.cols() == 1);
    const auto image = apply(triangle_d1().to_dense(q), k.column(0), q);
    for (const auto& x : image)
        CHECK(q.is_zero(x));
    CHECK(kernel_basis(SparseIntMatrix::identity(4), q).cols() == 0);
}

TEST_CASE("span and membership", "[linalg]")
{
    const RationalField q;
    const auto span = SparseIntMatrix::from_rows({{1, 1}, {0, 1}, {0, 0}}).to_dense(q);
    CHECK(span_dim(span, q) == 2);
    const auto e1 = SparseIntMatrix::from_rows({{1}, {0}, {0}}).to_dense(q);
    CHECK_FALSE(contains(e1, std::vector<Rational>{0, 1, 0}, q));
    CHECK(contains(e1, std::vector<Rational>{5, 0, 0}, q));
    CHECK_THROWS_AS(contains(e1, std::vector<Rational>{1, 0}, q), ShapeError);

    // Boundaries of the three edges of a triangle are dependent
    CHECK(span_dim(triangle_d1().to_dense(q), q) == 2);
}

TEST_CASE("dense and sparse elimination agree", "[linalg][property]")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial)
    {
        const auto rows = 1 + rng() % 9, cols = 1 + rng() % 9;
        const auto m = random_matrix(rng, rows, cols, 10 + static_cast<int>(rng() % 80));
        for (const auto& field : test_fields)
            with_field(field, [&](const auto& f) {
                const auto dense = rank_dense(m, f);
                const auto sparse = rank_sparse(m, f);
                REQUIRE(dense == sparse);
                REQUIRE(rank(m, field) == dense);
                REQUIRE(rank_sparse(m.transpose(), f) == dense);
                REQUIRE(dense == oracle::rank_mod(rows_of(m), oracle::modulus_for(field.characteristic())));
                return 0;
            });
        const auto rq = rank(m, CoefficientField::rationals());
        for (std::uint32_t p : {2u, 3u, 5u, 7u})
            REQUIRE(rank(m, CoefficientField::prime(p)) <= rq);
    }
}

TEST_CASE("kernels satisfy rank-nullity and annihilate", "[linalg][property]")
{
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 150; ++trial)
    {
        const auto m = random_matrix(rng, 1 + rng() % 7, 1 + rng() % 7, 50);
        for (const auto& field : test_fields)
            with_field(field, [&](const auto& f) {
                const auto k = kernel_basis(m, f);
                REQUIRE(k.cols() + rank_dense(m, f) == m.cols());
                REQUIRE(span_dim(k, f) == k.cols());
                const auto dense = m.to_dense(f);
                for (std::size_t c = 0; c < k.cols(); ++c)
                    for (const auto& x : apply(dense, k.column(c), f))
                        REQUIRE(f.is_zero(x));
                return 0;
            });
    }
}

TEST_CASE("rational elimination stays exact on growing entries", "[linalg]")
{
    // Hilbert-like integer matrix: full rank over Q
    std::vector<std::vector<std::int64_t>> rows;
    for (int i = 0; i < 8; ++i)
    {
        std::vector<std::int64_t> row;
        for (int j = 0; j < 8; ++j)
        {
            std::int64_t x = 1;
            for (int k = 0; k < j; ++k)
                x *= (i + 2);
            row.push_back(x);
        }
        rows.push_back(row);
    }
    const auto m = SparseIntMatrix::from_rows(rows);
    CHECK(rank(m, CoefficientField::rationals()) == 8);
    CHECK(rank_dense(m, RationalField{}) == rank_sparse(m, RationalField{}));
}
