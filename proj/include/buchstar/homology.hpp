/**
 * Reduced simplicial homology over a field, relative homology of the pair
 * (Δ, cost_Δ τ), and the surjectivity tests on top-dimensional homology that
 * define the Buchsbaum* property.
 *
 * Conventions: reduced (augmented) chain complexes throughout, so the empty
 * face spans degree -1 and ∂₀ sends every vertex to it with coefficient 1.
 * Faces are oriented by their sorted vertex order.  Relative homology is
 * computed on the quotient complex spanned by the faces containing τ, and the
 * induced maps are coordinate projections at chain level.
 */
#ifndef BUCHSTAR_HOMOLOGY_HPP
#define BUCHSTAR_HOMOLOGY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "complex.hpp"
#include "error.hpp"
#include "field.hpp"
#include "linalg.hpp"

namespace buchstar {

/* ------------------------------------------------------------------------ //
 *                              CHAIN COMPLEXES                             //
 * ------------------------------------------------------------------------ */

/**
 * Signed boundary matrix from the chains on `cols` to the chains on `rows`.
 * Both lists must be sorted.  Codimension-one faces missing from `rows` are
 * dropped, which yields the boundary of a quotient complex when `rows` is the
 * set of faces containing a fixed face.
 */
inline SparseIntMatrix boundary_between(const std::vector<Face>& cols, const std::vector<Face>& rows)
{
    SparseIntMatrix m(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
    {
        SparseIntMatrix::Column col;
        const Face& f = cols[j];
        for (std::size_t k = 0; k < f.size(); ++k)
        {
            Face g = f.without(k);
            auto it = std::lower_bound(rows.begin(), rows.end(), g);
            if (it == rows.end() || *it != g)
                continue;
            col.emplace_back(static_cast<std::size_t>(it - rows.begin()), (k % 2 == 0) ? 1 : -1);
        }
        std::sort(col.begin(), col.end());
        m.set_column(j, std::move(col));
    }
    return m;
}

/// Faces of dimension k that contain `face`, in lexicographic order.
inline std::vector<Face> faces_containing(const Complex& complex, const Face& face, int k)
{
    std::vector<Face> out;
    for (const auto& f : complex.faces_of_dim(k))
        if (face.is_subset_of(f))
            out.push_back(f);
    return out;
}

/**
 * Augmented chain complex of Δ.  basis[i + 1] holds the i-faces and
 * boundary[i] the map ∂_i from degree i to degree i - 1, for i = 0 .. dim Δ.
 */
struct ChainComplex
{
    CoefficientField field;
    std::vector<std::vector<Face>> basis;
    std::vector<SparseIntMatrix> boundary;

    int top_degree() const { return static_cast<int>(basis.size()) - 2; }
    const std::vector<Face>& faces(int degree) const { return basis.at(static_cast<std::size_t>(degree + 1)); }
    const SparseIntMatrix& d(int degree) const { return boundary.at(static_cast<std::size_t>(degree)); }
};

inline ChainComplex chain_complex(const Complex& complex, const CoefficientField& field)
{
    if (complex.is_void())
        throw DomainError("chain_complex: the void complex has no chain complex");
    ChainComplex cc{field, {}, {}};
    const int top = complex.dim();
    for (int k = -1; k <= top; ++k)
        cc.basis.push_back(complex.faces_of_dim(k));
    for (int k = 0; k <= top; ++k)
        cc.boundary.push_back(boundary_between(cc.faces(k), cc.faces(k - 1)));
#ifdef BUCHSTAR_CHECK_INVARIANTS
    for (int k = 1; k <= top; ++k)
    {
        auto prod = multiply(cc.d(k - 1), cc.d(k));
        for (const auto& row : prod)
            for (auto x : row)
                BUCHSTAR_INVARIANT(x == 0, "boundary of a boundary vanishes");
    }
#endif
    return cc;
}

/* ------------------------------------------------------------------------ //
 *                               BETTI NUMBERS                              //
 * ------------------------------------------------------------------------ */

/**
 * Reduced Betti numbers β̃_{-1}, ..., β̃_{dim Δ} over one field.
 */
struct BettiVector
{
    CoefficientField field = CoefficientField::rationals();
    std::vector<std::int64_t> values;   // values[i + 1] = β̃_i

    int top_degree() const { return static_cast<int>(values.size()) - 2; }

    /// β̃_degree, zero outside the stored range.
    std::int64_t at(int degree) const
    {
        if (degree < -1 || degree > top_degree())
            return 0;
        return values[static_cast<std::size_t>(degree + 1)];
    }

    std::int64_t euler_characteristic() const
    {
        std::int64_t chi = 0;
        for (int i = -1; i <= top_degree(); ++i)
            chi += (i % 2 == 0 ? 1 : -1) * at(i);
        return chi;
    }

    /// True when β̃_i = 0 for every i < degree.
    bool vanishes_below(int degree) const
    {
        for (int i = -1; i < degree; ++i)
            if (at(i) != 0)
                return false;
        return true;
    }

    friend bool operator==(const BettiVector& a, const BettiVector& b)
    {
        return a.field == b.field && a.values == b.values;
    }
};

/**
 * Write-once memo of Betti vectors keyed by (field, canonical facet list).
 * Concurrent insertions of the same key store identical values, so readers
 * never observe a change.
 */
class BettiCache
{
public:
    static BettiCache& instance()
    {
        static BettiCache cache;
        return cache;
    }

    bool lookup(const std::string& key, std::vector<std::int64_t>& out) const
    {
        std::shared_lock lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end())
            return false;
        out = it->second;
        return true;
    }

    void store(const std::string& key, const std::vector<std::int64_t>& values)
    {
        std::unique_lock lock(mutex_);
        map_.emplace(key, values);
    }

    std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return map_.size();
    }

    void clear()
    {
        std::unique_lock lock(mutex_);
        map_.clear();
    }

    /// Copy of every entry, for persisting the cache between runs.
    std::unordered_map<std::string, std::vector<std::int64_t>> snapshot() const
    {
        std::shared_lock lock(mutex_);
        return map_;
    }

    static std::string key(const Complex& complex, const CoefficientField& field)
    {
        return field.tag() + "|" + complex.encoding();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, std::vector<std::int64_t>> map_;
};

/// Reduced Betti numbers computed from boundary ranks, without the cache.
inline BettiVector compute_reduced_betti(const Complex& complex, const CoefficientField& field)
{
    if (complex.is_void())
        throw DomainError("reduced_betti: the void complex has no homology");
    const int top = complex.dim();
    std::vector<std::int64_t> ranks(static_cast<std::size_t>(top + 2), 0);   // ranks[i] = rank ∂_i
    for (int i = 0; i <= top; ++i)
    {
        auto d = boundary_between(complex.faces_of_dim(i), complex.faces_of_dim(i - 1));
        ranks[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(rank(d, field));
    }
    BettiVector b{field, {}};
    for (int i = -1; i <= top; ++i)
    {
        std::int64_t cycles = static_cast<std::int64_t>(complex.num_faces(i))
                              - (i >= 0 ? ranks[static_cast<std::size_t>(i)] : 0);
        std::int64_t bounds = (i + 1 <= top) ? ranks[static_cast<std::size_t>(i + 1)] : 0;
        b.values.push_back(cycles - bounds);
    }
    return b;
}

inline std::int64_t reduced_euler_characteristic(const Complex& complex)
{
    std::int64_t chi = 0;
    if (complex.is_void())
        return chi;
    for (int i = -1; i <= complex.dim(); ++i)
        chi += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(complex.num_faces(i));
    return chi;
}

/// β̃(Δ; k), memoized.
inline BettiVector reduced_betti(const Complex& complex, const CoefficientField& field)
{
    if (complex.is_void())
        throw DomainError("reduced_betti: the void complex has no homology");
    auto& cache = BettiCache::instance();
    const std::string key = BettiCache::key(complex, field);
    BettiVector b{field, {}};
    if (cache.lookup(key, b.values))
        return b;
    b = compute_reduced_betti(complex, field);
    BUCHSTAR_INVARIANT(b.euler_characteristic() == reduced_euler_characteristic(complex),
                       "alternating Betti sum equals the reduced Euler characteristic");
    cache.store(key, b.values);
    return b;
}

/* ------------------------------------------------------------------------ //
 *                             RELATIVE HOMOLOGY                            //
 * ------------------------------------------------------------------------ */

/**
 * dim H̃_i(Δ, cost_Δ τ; k), computed on the quotient complex whose degree-j
 * basis is the j-faces containing τ.
 */
inline std::int64_t relative_betti(const Complex& complex, const Face& face, int degree,
                                   const CoefficientField& field)
{
    if (face.empty())
        throw DomainError("relative_betti: the face must be non-empty");
    if (!complex.contains(face))
        throw DomainError("relative_betti: face " + face.to_string() + " is not in the complex");
    if (degree < face.dim() || degree > complex.dim())
        return 0;

    const auto here = faces_containing(complex, face, degree);
    const auto below = faces_containing(complex, face, degree - 1);
    const auto above = faces_containing(complex, face, degree + 1);
    const auto r_here = static_cast<std::int64_t>(rank(boundary_between(here, below), field));
    const auto r_above = static_cast<std::int64_t>(rank(boundary_between(above, here), field));
    const std::int64_t result = static_cast<std::int64_t>(here.size()) - r_here - r_above;

    BUCHSTAR_INVARIANT(result == reduced_betti(link(complex, face), field).at(degree - static_cast<int>(face.size())),
                       "relative homology of (Δ, cost τ) is the shifted link homology");
    return result;
}

/* ------------------------------------------------------------------------ //
 *                       SURJECTIVITY ON TOP HOMOLOGY                       //
 * ------------------------------------------------------------------------ */

/**
 * Evaluates the maps H̃_{d-1}(Δ, cost σ) → H̃_{d-1}(Δ, cost τ) for a fixed pure
 * complex and field policy.  Since Δ has no d-chains, every top homology
 * group here is a cycle space; cycles of the pair (Δ, cost σ) are computed
 * once per σ and projected onto the facets containing τ.
 */
template <typename F>
class TopHomologyProbe
{
public:
    using T = typename F::value_type;

    TopHomologyProbe(const Complex& complex, const F& field) : complex_(complex), field_(field)
    {
        if (complex.is_void() || !complex.is_pure())
            throw DomainError("top homology maps require a pure complex");
        top_ = complex.dim();
        facets_ = complex.faces_of_dim(top_);
        ridges_ = complex.faces_of_dim(top_ - 1);
    }

    int top() const { return top_; }

    /// Basis (as columns over the facets containing σ) of the relative top cycles.
    DenseMatrix<T> relative_cycles(const Face& sigma) const
    {
        const auto cols = containing(facets_, sigma);
        const auto rows = containing(ridges_, sigma);
        return kernel_basis(boundary_between(cols, rows), field_);
    }

    std::size_t relative_cycle_dim(const Face& sigma) const
    {
        const auto cols = containing(facets_, sigma);
        const auto rows = containing(ridges_, sigma);
        const auto d = boundary_between(cols, rows);
        return cols.size() - rank_sparse(d, field_);
    }

    /**
     * Whether the projection H̃_{d-1}(Δ, cost σ) → H̃_{d-1}(Δ, cost τ) is onto.
     * σ = ∅ gives the map from H̃_{d-1}(Δ).
     */
    bool surjective(const Face& sigma, const Face& tau) const
    {
        if (!sigma.is_subset_of(tau))
            throw DomainError("pair map requires " + sigma.to_string() + " ⊆ " + tau.to_string());
        if (!complex_.contains(tau))
            throw DomainError("face " + tau.to_string() + " is not in the complex");
        if (sigma == tau)
            return true;
        const std::size_t target = relative_cycle_dim(tau);
        if (target == 0)
            return true;

        const DenseMatrix<T>& source = sigma.empty() ? absolute_cycles() : cached_relative(sigma);
        const auto source_cols = containing(facets_, sigma);
        std::vector<std::size_t> keep;
        for (std::size_t r = 0; r < source_cols.size(); ++r)
            if (tau.is_subset_of(source_cols[r]))
                keep.push_back(r);
        const auto image = source.select_rows(keep);
        return rank_dense(image, field_) == target;
    }

    /// dim H̃_{d-1}(Δ).
    std::size_t top_betti() const { return absolute_cycles().cols(); }

private:
    static std::vector<Face> containing(const std::vector<Face>& faces, const Face& sigma)
    {
        std::vector<Face> out;
        for (const auto& f : faces)
            if (sigma.is_subset_of(f))
                out.push_back(f);
        return out;
    }

    const DenseMatrix<T>& absolute_cycles() const
    {
        if (!absolute_)
            absolute_ = std::make_shared<DenseMatrix<T>>(relative_cycles(Face()));
        return *absolute_;
    }

    const DenseMatrix<T>& cached_relative(const Face& sigma) const
    {
        auto it = relative_.find(sigma);
        if (it == relative_.end())
            it = relative_.emplace(sigma, relative_cycles(sigma)).first;
        return it->second;
    }

    Complex complex_;
    F field_;
    int top_ = -1;
    std::vector<Face> facets_;
    std::vector<Face> ridges_;
    mutable std::shared_ptr<DenseMatrix<T>> absolute_;
    mutable std::map<Face, DenseMatrix<T>> relative_;
};

/**
 * Whether ρ*: H̃_{d-1}(Δ) → H̃_{d-1}(Δ, cost_Δ τ) is surjective.
 */
inline bool top_restriction_surjective(const Complex& complex, const Face& face, const CoefficientField& field)
{
    if (face.empty())
        throw DomainError("top_restriction_surjective: the face must be non-empty");
    return with_field(field, [&](const auto& f) {
        return TopHomologyProbe(complex, f).surjective(Face(), face);
    });
}

/**
 * Whether j*: H̃_{d-1}(Δ, cost σ) → H̃_{d-1}(Δ, cost τ) is surjective, σ ⊆ τ.
 */
inline bool pair_restriction_surjective(const Complex& complex, const Face& sigma, const Face& tau,
                                        const CoefficientField& field)
{
    if (!sigma.is_subset_of(tau))
        throw DomainError("pair_restriction_surjective: " + sigma.to_string() + " is not a subset of "
                          + tau.to_string());
    return with_field(field, [&](const auto& f) {
        return TopHomologyProbe(complex, f).surjective(sigma, tau);
    });
}

}   // namespace buchstar

#endif
