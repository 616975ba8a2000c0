#pragma once

#include <set>
#include <vector>

#include "relkk/int.hpp"
#include "relkk/vectors.hpp"

namespace relkk {

/// A face is a strictly increasing sequence of positive integers; a
/// multiset face is weakly increasing. The empty face is valid.
using Face = std::vector<int>;
using MultiFace = std::vector<int>;

bool is_valid_face(const Face& f);
bool is_valid_multiface(const MultiFace& f);

/// Reverse-lexicographic comparison of equal-cardinality tuples: the one
/// with the smaller element at the largest differing position comes first.
/// Returns <0, 0, >0. Throws on a cardinality mismatch.
int revlex_compare(const std::vector<int>& a, const std::vector<int>& b);

/// Cardinality first, then revlex within each cardinality.
int graded_revlex_compare(const std::vector<int>& a, const std::vector<int>& b);

struct GradedRevlexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        return graded_revlex_compare(a, b) < 0;
    }
};

using FaceSet = std::set<Face, GradedRevlexLess>;

/// The first m k-(multi)subsets of [n] in revlex order.
std::vector<std::vector<int>> compressed_family(const Int& m, int k, int n, bool multiset);

/// All (k-1)-subsets of the members of a uniform family of k-sets.
std::vector<Face> shadow_of_family(const std::vector<Face>& faces);

class SimplicialComplex {
public:
    /// The void complex: no faces at all.
    static SimplicialComplex void_complex(int n);
    /// The complex whose only face is the empty face.
    static SimplicialComplex empty_face_complex(int n);
    /// Builds from generating faces: keeps the inclusion-maximal ones.
    static SimplicialComplex from_facets(int n, std::vector<Face> facets);

    int n() const { return n_; }
    bool is_void() const { return void_; }
    /// Top dimension; requires a non-void complex.
    int dim() const;
    const std::vector<Face>& facets() const { return facets_; }

    bool contains(const Face& f) const;
    /// The full face set, empty face included.
    FaceSet faces() const;
    FVector f_vector() const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    int n_ = 0;
    bool void_ = true;
    std::vector<Face> facets_; // antichain, graded revlex order
};

/// A finite multicomplex stored by its full face set.
class Multicomplex {
public:
    static Multicomplex void_complex(int n);
    /// Validates closure under multisubsets.
    static Multicomplex from_faces(int n, std::vector<MultiFace> faces);

    int n() const { return n_; }
    bool is_void() const { return faces_.empty(); }
    const std::vector<MultiFace>& faces() const { return faces_; }
    bool contains(const MultiFace& f) const;
    FVector f_vector() const;

    bool operator==(const Multicomplex&) const = default;

private:
    int n_ = 0;
    std::vector<MultiFace> faces_; // graded revlex order
};

/// A presentation (delta, gamma) with gamma a subcomplex of delta. The
/// relative face set delta \ gamma is derived on demand.
class RelativeComplex {
public:
    RelativeComplex(SimplicialComplex delta, SimplicialComplex gamma);

    const SimplicialComplex& delta() const { return delta_; }
    const SimplicialComplex& gamma() const { return gamma_; }
    int n() const { return delta_.n(); }
    /// Proper means the empty face is not in delta \ gamma.
    bool proper() const;

    FaceSet faces() const;
    /// Inclusion-maximal faces of delta \ gamma.
    std::vector<Face> max_faces() const;
    FVector f_vector() const; // trimmed
    bool is_void_relative() const;
    /// Dimension of delta \ gamma; requires it to be nonempty.
    int dim() const;

private:
    SimplicialComplex delta_, gamma_;
};

/// Compressed complex with the given f-vector; rejects infeasible input.
SimplicialComplex compressed_complex(const FVector& f, int n);
Multicomplex compressed_multicomplex(const FVector& f, int n);

/// Cone with a single new apex vertex (apex must exceed every vertex used).
SimplicialComplex cone(const SimplicialComplex& c, int apex);
/// All faces of dimension <= k.
SimplicialComplex skeleton(const SimplicialComplex& c, int k);
SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);

} // namespace relkk
