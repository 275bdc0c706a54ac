/**
 * Finite abstract simplicial complexes stored by their facets, together with
 * the face-level operators (link, contrastar, deletion, join, skeleton,
 * missing faces, components) the rest of the library is built on.
 *
 * A Complex is immutable once built.  The full face lattice is enumerated
 * lazily on first use and shared between copies.
 */
#ifndef BUCHSTAR_COMPLEX_HPP
#define BUCHSTAR_COMPLEX_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "error.hpp"

namespace buchstar {

/* ------------------------------------------------------------------------ //
 *                                 VERTICES                                 //
 * ------------------------------------------------------------------------ */

/**
 * Opaque, totally ordered vertex label: a non-negative integer or a string.
 * Integer labels sort before string labels.
 */
class Vertex
{
public:
    Vertex() : label_(std::int64_t{0}) {}
    Vertex(std::int64_t value) : label_(value) {}
    Vertex(int value) : label_(std::int64_t{value}) {}
    Vertex(std::string value) : label_(std::move(value)) {}
    Vertex(const char* value) : label_(std::string(value)) {}

    bool is_integer() const { return std::holds_alternative<std::int64_t>(label_); }
    std::int64_t integer() const { return std::get<std::int64_t>(label_); }
    const std::string& name() const { return std::get<std::string>(label_); }

    std::string to_string() const
    {
        return is_integer() ? std::to_string(integer()) : name();
    }

    friend bool operator==(const Vertex& a, const Vertex& b) { return a.label_ == b.label_; }
    friend bool operator!=(const Vertex& a, const Vertex& b) { return !(a == b); }
    friend bool operator<(const Vertex& a, const Vertex& b) { return a.label_ < b.label_; }
    friend bool operator>(const Vertex& a, const Vertex& b) { return b < a; }
    friend bool operator<=(const Vertex& a, const Vertex& b) { return !(b < a); }
    friend bool operator>=(const Vertex& a, const Vertex& b) { return !(a < b); }

private:
    std::variant<std::int64_t, std::string> label_;
};

/* ------------------------------------------------------------------------ //
 *                                   FACES                                  //
 * ------------------------------------------------------------------------ */

/**
 * A face: a sorted, duplicate-free set of vertices.  The empty face has
 * dimension -1.
 */
class Face
{
public:
    Face() = default;

    /// Sorts the input; throws MalformedFaceError on a repeated vertex.
    explicit Face(std::vector<Vertex> vertices) : vertices_(std::move(vertices))
    {
        std::sort(vertices_.begin(), vertices_.end());
        auto dup = std::adjacent_find(vertices_.begin(), vertices_.end());
        if (dup != vertices_.end())
            throw MalformedFaceError("vertex " + dup->to_string() + " appears twice in one face");
    }

    Face(std::initializer_list<Vertex> vertices) : Face(std::vector<Vertex>(vertices)) {}

    /// Wraps an already sorted, duplicate-free sequence without re-checking.
    static Face from_sorted(std::vector<Vertex> vertices)
    {
        Face f;
        f.vertices_ = std::move(vertices);
        return f;
    }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    bool empty() const { return vertices_.empty(); }
    int dim() const { return static_cast<int>(vertices_.size()) - 1; }
    const Vertex& operator[](std::size_t i) const { return vertices_[i]; }
    auto begin() const { return vertices_.begin(); }
    auto end() const { return vertices_.end(); }

    bool contains(const Vertex& v) const
    {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    bool is_subset_of(const Face& other) const
    {
        return std::includes(other.vertices_.begin(), other.vertices_.end(),
                             vertices_.begin(), vertices_.end());
    }

    bool is_disjoint_from(const Face& other) const
    {
        auto a = vertices_.begin();
        auto b = other.vertices_.begin();
        while (a != vertices_.end() && b != other.vertices_.end())
        {
            if (*a == *b)
                return false;
            if (*a < *b) ++a; else ++b;
        }
        return true;
    }

    Face united_with(const Face& other) const
    {
        std::vector<Vertex> out;
        std::set_union(vertices_.begin(), vertices_.end(),
                       other.vertices_.begin(), other.vertices_.end(),
                       std::back_inserter(out));
        return from_sorted(std::move(out));
    }

    Face minus(const Face& other) const
    {
        std::vector<Vertex> out;
        std::set_difference(vertices_.begin(), vertices_.end(),
                            other.vertices_.begin(), other.vertices_.end(),
                            std::back_inserter(out));
        return from_sorted(std::move(out));
    }

    Face without(std::size_t index) const
    {
        std::vector<Vertex> out;
        out.reserve(vertices_.size() - 1);
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (i != index)
                out.push_back(vertices_[i]);
        return from_sorted(std::move(out));
    }

    std::string to_string() const
    {
        std::string s = "{";
        for (std::size_t i = 0; i < vertices_.size(); ++i)
        {
            if (i) s += ",";
            s += vertices_[i].to_string();
        }
        return s + "}";
    }

    friend bool operator==(const Face& a, const Face& b) { return a.vertices_ == b.vertices_; }
    friend bool operator!=(const Face& a, const Face& b) { return !(a == b); }
    friend bool operator<(const Face& a, const Face& b) { return a.vertices_ < b.vertices_; }

private:
    std::vector<Vertex> vertices_;
};

/**
 * Calls fn(subset) for every subset of `face` (including the empty face and
 * `face` itself).  Intended for faces of modest size.
 */
template <typename Fn>
void for_each_subset(const Face& face, Fn&& fn)
{
    const std::size_t n = face.size();
    std::vector<Vertex> buf;
    buf.reserve(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
    {
        buf.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i))
                buf.push_back(face[i]);
        fn(Face::from_sorted(buf));
    }
}

/// All k-element subsets of the sorted sequence, in lexicographic order.
inline std::vector<Face> subsets_of_size(const std::vector<Vertex>& ground, std::size_t k)
{
    std::vector<Face> out;
    const std::size_t n = ground.size();
    if (k > n)
        return out;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true)
    {
        std::vector<Vertex> vs;
        vs.reserve(k);
        for (auto i : idx)
            vs.push_back(ground[i]);
        out.push_back(Face::from_sorted(std::move(vs)));
        // Advance to the next combination
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return out;
}

/* ------------------------------------------------------------------------ //
 *                                 COMPLEXES                                //
 * ------------------------------------------------------------------------ */

/**
 * A finite simplicial complex, stored by its inclusion-maximal facets.
 *
 * Two degenerate complexes are distinguished: the void complex (no faces at
 * all, the default-constructed value) and the empty complex {∅}, whose only
 * face is the empty face and whose dimension is -1.
 */
class Complex
{
public:
    /// The void complex.
    Complex() : lattice_(std::make_shared<Lattice>()) {}

    /**
     * Canonical complex generated by the given faces: vertices are sorted,
     * repeated or inclusion-dominated entries are dropped, facets are kept in
     * lexicographic order.
     */
    static Complex build(const std::vector<std::vector<Vertex>>& facets)
    {
        std::vector<Face> faces;
        faces.reserve(facets.size());
        for (const auto& f : facets)
            faces.emplace_back(f);
        return from_faces(std::move(faces));
    }

    static Complex from_faces(std::vector<Face> faces)
    {
        Complex c;
        if (faces.empty())
            return c;

        // Largest first so that every dominating face is seen before the
        // faces it dominates
        std::sort(faces.begin(), faces.end());
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
        std::stable_sort(faces.begin(), faces.end(),
                         [](const Face& a, const Face& b) { return a.size() > b.size(); });
        std::vector<Face> kept;
        for (auto& f : faces)
        {
            bool dominated = false;
            for (const auto& k : kept)
            {
                if (k.size() > f.size() && f.is_subset_of(k))
                {
                    dominated = true;
                    break;
                }
            }
            if (!dominated)
                kept.push_back(std::move(f));
        }
        std::sort(kept.begin(), kept.end());

        std::set<Vertex> universe;
        for (const auto& f : kept)
            universe.insert(f.begin(), f.end());

        c.vertices_.assign(universe.begin(), universe.end());
        c.facets_ = std::move(kept);
        c.dim_ = -1;
        for (const auto& f : c.facets_)
            c.dim_ = std::max(c.dim_, f.dim());
        c.pure_ = std::all_of(c.facets_.begin(), c.facets_.end(),
                              [&](const Face& f) { return f.dim() == c.dim_; });
        return c;
    }

    /// The complex {∅}.
    static Complex empty_complex() { return from_faces({Face()}); }

    bool is_void() const { return facets_.empty(); }
    bool is_empty_complex() const { return facets_.size() == 1 && facets_[0].empty(); }

    /// dim Δ; the void complex has no dimension.
    int dim() const
    {
        if (is_void())
            throw DomainError("the void complex has no dimension");
        return dim_;
    }

    bool is_pure() const { return !is_void() && pure_; }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Face>& facets() const { return facets_; }

    bool has_vertex(const Vertex& v) const
    {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    /// Faces of dimension exactly k in lexicographic order; empty when k is out of range.
    const std::vector<Face>& faces_of_dim(int k) const
    {
        static const std::vector<Face> none;
        if (is_void() || k < -1 || k > dim_)
            return none;
        return lattice().at(static_cast<std::size_t>(k + 1));
    }

    std::size_t num_faces(int k) const { return faces_of_dim(k).size(); }

    /// Every face, ordered by dimension then lexicographically.
    std::vector<Face> all_faces() const
    {
        std::vector<Face> out;
        if (is_void())
            return out;
        for (int k = -1; k <= dim_; ++k)
        {
            const auto& fs = faces_of_dim(k);
            out.insert(out.end(), fs.begin(), fs.end());
        }
        return out;
    }

    bool contains(const Face& face) const
    {
        const auto& fs = faces_of_dim(face.dim());
        return std::binary_search(fs.begin(), fs.end(), face);
    }

    /// Position of `face` within faces_of_dim(face.dim()).
    std::size_t index_of(const Face& face) const
    {
        const auto& fs = faces_of_dim(face.dim());
        auto it = std::lower_bound(fs.begin(), fs.end(), face);
        if (it == fs.end() || *it != face)
            throw FaceNotPresentError("face " + face.to_string() + " is not in the complex");
        return static_cast<std::size_t>(it - fs.begin());
    }

    /// Canonical text key: the sorted facet list.
    std::string encoding() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < facets_.size(); ++i)
        {
            if (i) s += ",";
            s += "[";
            for (std::size_t j = 0; j < facets_[i].size(); ++j)
            {
                if (j) s += ",";
                const Vertex& v = facets_[i][j];
                s += v.is_integer() ? v.to_string() : "\"" + v.name() + "\"";
            }
            s += "]";
        }
        return s + "]";
    }

    friend bool operator==(const Complex& a, const Complex& b) { return a.facets_ == b.facets_; }
    friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

private:
    struct Lattice
    {
        std::once_flag once;
        std::vector<std::vector<Face>> by_dim;
    };

    const std::vector<std::vector<Face>>& lattice() const
    {
        std::call_once(lattice_->once, [this] {
            std::vector<std::vector<Face>> by_dim(static_cast<std::size_t>(dim_ + 2));
            for (const auto& facet : facets_)
                for_each_subset(facet, [&](Face f) {
                    by_dim[static_cast<std::size_t>(f.dim() + 1)].push_back(std::move(f));
                });
            for (auto& fs : by_dim)
            {
                std::sort(fs.begin(), fs.end());
                fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
            }
            lattice_->by_dim = std::move(by_dim);
        });
        return lattice_->by_dim;
    }

    std::vector<Vertex> vertices_;
    std::vector<Face> facets_;
    int dim_ = -1;
    bool pure_ = true;
    std::shared_ptr<Lattice> lattice_;
};

/* ------------------------------------------------------------------------ //
 *                              FACE OPERATORS                              //
 * ------------------------------------------------------------------------ */

inline Complex build(const std::vector<std::vector<Vertex>>& facets)
{
    return Complex::build(facets);
}

inline std::vector<Face> faces_of_dim(const Complex& complex, int k)
{
    return complex.faces_of_dim(k);
}

/**
 * lk_Δ(τ) = {σ : σ ∩ τ = ∅, σ ∪ τ ∈ Δ}.
 */
inline Complex link(const Complex& complex, const Face& face)
{
    if (!complex.contains(face))
        throw FaceNotPresentError("link: face " + face.to_string() + " is not in the complex");
    std::vector<Face> gens;
    for (const auto& facet : complex.facets())
        if (face.is_subset_of(facet))
            gens.push_back(facet.minus(face));
    return Complex::from_faces(std::move(gens));
}

/**
 * cost_Δ(τ) = {σ ∈ Δ : σ ⊉ τ}, for non-empty τ ∈ Δ.
 */
inline Complex contrastar(const Complex& complex, const Face& face)
{
    if (face.empty())
        throw DomainError("contrastar of the empty face is not defined");
    if (!complex.contains(face))
        throw FaceNotPresentError("contrastar: face " + face.to_string() + " is not in the complex");
    std::vector<Face> gens;
    for (const auto& facet : complex.facets())
    {
        if (!face.is_subset_of(facet))
        {
            gens.push_back(facet);
            continue;
        }
        // A face of this facet avoids τ iff it misses some vertex of τ
        for (std::size_t i = 0; i < facet.size(); ++i)
            if (face.contains(facet[i]))
                gens.push_back(facet.without(i));
    }
    return Complex::from_faces(std::move(gens));
}

/**
 * Δ − A: the restriction of Δ to V(Δ) ∖ A.  Every vertex of A must belong to Δ.
 */
inline Complex deletion(const Complex& complex, const std::vector<Vertex>& removed)
{
    for (const auto& v : removed)
        if (!complex.has_vertex(v))
            throw UnknownVertexError("deletion: vertex " + v.to_string() + " is not in the complex");
    if (complex.is_void())
        return complex;
    Face drop(removed);
    std::vector<Face> gens;
    gens.reserve(complex.facets().size());
    for (const auto& facet : complex.facets())
        gens.push_back(facet.minus(drop));
    return Complex::from_faces(std::move(gens));
}

inline Complex deletion(const Complex& complex, const Vertex& v)
{
    return deletion(complex, std::vector<Vertex>{v});
}

/**
 * Γ * Δ = {σ ∪ τ : σ ∈ Γ, τ ∈ Δ}.  Vertex labels must be disjoint.
 */
inline Complex join(const Complex& a, const Complex& b)
{
    for (const auto& v : a.vertices())
        if (b.has_vertex(v))
            throw LabelCollisionError("join: vertex label " + v.to_string() + " occurs in both factors");
    std::vector<Face> gens;
    for (const auto& f : a.facets())
        for (const auto& g : b.facets())
            gens.push_back(f.united_with(g));
    return Complex::from_faces(std::move(gens));
}

/// All faces of dimension at most j.
inline Complex skeleton(const Complex& complex, int j)
{
    if (j < -1)
        throw DomainError("skeleton: dimension must be at least -1");
    if (complex.is_void() || j >= complex.dim())
        return complex;
    std::vector<Face> gens = complex.faces_of_dim(j);
    for (const auto& f : complex.facets())
        if (f.dim() < j)
            gens.push_back(f);
    return Complex::from_faces(std::move(gens));
}

/**
 * Minimal non-faces: vertex sets τ ∉ Δ all of whose proper subsets are faces.
 * Ordered by size, then lexicographically.
 */
inline std::vector<Face> missing_faces(const Complex& complex)
{
    std::vector<Face> out;
    if (complex.is_void())
        return out;
    const auto& universe = complex.vertices();
    for (int k = 0; k <= complex.dim(); ++k)
    {
        // Candidates of size k + 2 extend a k-face by a larger vertex
        for (const auto& base : complex.faces_of_dim(k))
        {
            auto start = std::upper_bound(universe.begin(), universe.end(), base.vertices().back());
            for (auto it = start; it != universe.end(); ++it)
            {
                std::vector<Vertex> vs = base.vertices();
                vs.push_back(*it);
                Face cand = Face::from_sorted(std::move(vs));
                if (complex.contains(cand))
                    continue;
                bool minimal = true;
                for (std::size_t i = 0; i + 1 < cand.size() && minimal; ++i)
                    minimal = complex.contains(cand.without(i));
                if (minimal)
                    out.push_back(std::move(cand));
            }
        }
    }
    return out;
}

inline bool is_flag(const Complex& complex)
{
    for (const auto& f : missing_faces(complex))
        if (f.size() != 2)
            return false;
    return true;
}

/// Largest dimension of a missing face, or -2 when there is none.
inline int max_missing_face_dim(const Complex& complex)
{
    int best = -2;
    for (const auto& f : missing_faces(complex))
        best = std::max(best, f.dim());
    return best;
}

/**
 * Components of the 1-skeleton, each returned as the subcomplex generated by
 * its facets.  Ordered by smallest vertex.
 */
inline std::vector<Complex> connected_components(const Complex& complex)
{
    const auto& vs = complex.vertices();
    std::vector<std::size_t> parent(vs.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    auto index = [&](const Vertex& v) {
        return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    for (const auto& f : complex.facets())
        for (std::size_t i = 1; i < f.size(); ++i)
        {
            auto a = find(index(f[0]));
            auto b = find(index(f[i]));
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }

    std::map<std::size_t, std::vector<Face>> groups;
    for (const auto& f : complex.facets())
        if (!f.empty())
            groups[find(index(f[0]))].push_back(f);
    std::vector<Complex> out;
    for (auto& [root, facets] : groups)
        out.push_back(Complex::from_faces(std::move(facets)));
    return out;
}

/// Applies a vertex relabeling; the map must be injective on V(Δ).
inline Complex relabel(const Complex& complex, const std::map<Vertex, Vertex>& mapping)
{
    std::set<Vertex> image;
    for (const auto& v : complex.vertices())
    {
        auto it = mapping.find(v);
        if (it == mapping.end())
            throw UnknownVertexError("relabel: no image for vertex " + v.to_string());
        if (!image.insert(it->second).second)
            throw LabelCollisionError("relabel: two vertices map to " + it->second.to_string());
    }
    std::vector<Face> gens;
    for (const auto& f : complex.facets())
    {
        std::vector<Vertex> out;
        for (const auto& v : f)
            out.push_back(mapping.at(v));
        gens.emplace_back(std::move(out));
    }
    return Complex::from_faces(std::move(gens));
}

}   // namespace buchstar

#endif
