/**
 * Face-counting invariants: f-, h-, h'- and short simplicial h-vectors, the
 * reduced Euler characteristic, and coefficient-wise polynomial comparison.
 */
#ifndef BUCHSTAR_ENUMERATIVE_HPP
#define BUCHSTAR_ENUMERATIVE_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "complex.hpp"
#include "error.hpp"
#include "homology.hpp"

namespace buchstar {

using IntVector = std::vector<std::int64_t>;

inline std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

/// (f_{-1}, f_0, ..., f_{dim Δ}).
inline IntVector f_vector(const Complex& complex)
{
    if (complex.is_void())
        throw DomainError("f_vector: the void complex has no faces");
    IntVector f;
    for (int i = -1; i <= complex.dim(); ++i)
        f.push_back(static_cast<std::int64_t>(complex.num_faces(i)));
    return f;
}

/**
 * h-numbers h_0..h_d from (f_{-1}, ..., f_{d-1}) via
 * Σ h_j λ^{d-j} = Σ f_{i-1} (λ-1)^{d-i}.  Missing f-entries count as zero.
 */
inline IntVector h_from_f(const IntVector& f, int d)
{
    IntVector h(static_cast<std::size_t>(d + 1), 0);
    for (int j = 0; j <= d; ++j)
        for (int i = 0; i <= j; ++i)
        {
            const std::int64_t fi = static_cast<std::size_t>(i) < f.size() ? f[static_cast<std::size_t>(i)] : 0;
            const std::int64_t sign = ((j - i) % 2 == 0) ? 1 : -1;
            h[static_cast<std::size_t>(j)] += sign * binomial(d - i, j - i) * fi;
        }
    return h;
}

/// Inverse of h_from_f: f_{i-1} = Σ_{j ≤ i} C(d-j, i-j) h_j.
inline IntVector f_from_h(const IntVector& h, int d)
{
    IntVector f(static_cast<std::size_t>(d + 1), 0);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= i; ++j)
            f[static_cast<std::size_t>(i)] += binomial(d - j, i - j) * h[static_cast<std::size_t>(j)];
    return f;
}

/// h-vector with d = dim Δ + 1 (also computed for non-pure complexes).
inline IntVector h_vector(const Complex& complex)
{
    return h_from_f(f_vector(complex), complex.dim() + 1);
}

/// h-vector taken with respect to an explicit d (used for rank-selected subcomplexes).
inline IntVector h_vector(const Complex& complex, int d)
{
    if (complex.dim() + 1 > d)
        throw DomainError("h_vector: d is smaller than dim + 1");
    return h_from_f(f_vector(complex), d);
}

/**
 * h'-numbers: h'_j = h_j + C(d, j) Σ_{i=0}^{j-1} (-1)^{j-i-1} β̃_{i-1}.
 * The result depends on the field through the Betti numbers.
 */
struct HPrimeVector
{
    CoefficientField field = CoefficientField::rationals();
    IntVector values;

    friend bool operator==(const HPrimeVector& a, const HPrimeVector& b)
    {
        return a.field == b.field && a.values == b.values;
    }
};

inline HPrimeVector h_prime_vector(const Complex& complex, const CoefficientField& field)
{
    if (complex.is_void())
        throw DomainError("h_prime_vector: the void complex has no h'-vector");
    const int d = complex.dim() + 1;
    const IntVector h = h_vector(complex);
    const BettiVector betti = reduced_betti(complex, field);
    HPrimeVector out{field, h};
    for (int j = 0; j <= d; ++j)
    {
        std::int64_t correction = 0;
        for (int i = 0; i <= j - 1; ++i)
            correction += (((j - i - 1) % 2 == 0) ? 1 : -1) * betti.at(i - 1);
        out.values[static_cast<std::size_t>(j)] += binomial(d, j) * correction;
    }
    return out;
}

/**
 * Short simplicial h-numbers h̃_j = Σ_v h_j(lk v), j = 0..d-1.  Defined for
 * pure complexes, where every vertex link has dimension d - 2.
 */
inline IntVector short_simplicial_h(const Complex& complex)
{
    if (!complex.is_pure())
        throw DomainError("short_simplicial_h: the complex must be pure");
    const int d = complex.dim() + 1;
    IntVector out(static_cast<std::size_t>(std::max(d, 0)), 0);
    for (const auto& v : complex.vertices())
    {
        const IntVector hl = h_vector(link(complex, Face{v}), d - 1);
        for (int j = 0; j < d; ++j)
            out[static_cast<std::size_t>(j)] += hl[static_cast<std::size_t>(j)];
    }
#ifdef BUCHSTAR_CHECK_INVARIANTS
    const IntVector h = h_vector(complex);
    for (int j = 1; j <= d; ++j)
        BUCHSTAR_INVARIANT(out[static_cast<std::size_t>(j - 1)]
                               == j * h[static_cast<std::size_t>(j)] + (d - j + 1) * h[static_cast<std::size_t>(j - 1)],
                           "short h-numbers satisfy j h_j + (d-j+1) h_{j-1}");
#endif
    return out;
}

/// a ≥ b coefficient-wise, the shorter sequence padded with zeros.
inline bool poly_geq(const IntVector& a, const IntVector& b)
{
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t j = 0; j < n; ++j)
    {
        const std::int64_t x = j < a.size() ? a[j] : 0;
        const std::int64_t y = j < b.size() ? b[j] : 0;
        if (x < y)
            return false;
    }
    return true;
}

/// Coefficients of (1 + m t)^d.
inline IntVector one_plus_mt_power(std::int64_t m, int d)
{
    IntVector out(static_cast<std::size_t>(d + 1));
    std::int64_t mj = 1;
    for (int j = 0; j <= d; ++j)
    {
        out[static_cast<std::size_t>(j)] = binomial(d, j) * mj;
        mj *= m;
    }
    return out;
}

struct FaceVectors
{
    IntVector f;
    IntVector h;
    HPrimeVector h_prime;
    IntVector short_h;       // empty for non-pure complexes
    std::int64_t chi_reduced = 0;
    bool pure = true;        // non-pure results use d = dim + 1
};

inline FaceVectors face_vectors(const Complex& complex, const CoefficientField& field)
{
    FaceVectors fv;
    fv.f = f_vector(complex);
    fv.h = h_vector(complex);
    fv.h_prime = h_prime_vector(complex, field);
    fv.pure = complex.is_pure();
    if (fv.pure)
        fv.short_h = short_simplicial_h(complex);
    fv.chi_reduced = reduced_euler_characteristic(complex);
    return fv;
}

}   // namespace buchstar

#endif
