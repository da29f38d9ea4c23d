#pragma once

#include "iq/abelian.hpp"

#include <cstddef>
#include <vector>

namespace iq {

/// Exact rational polyhedral cone in Q^r.
///
/// A cone is stored canonically: the saturated HNF basis of its linear span,
/// the primitive facet normals (computed inside the span and mapped back so
/// they lie in the span), the extreme rays of its pointed part and the HNF
/// basis of its lineality space. Cones built from different generating sets
/// of the same cone compare equal and print identically.
///
/// The double description step enumerates subsets and is only intended for
/// small ambient dimension; construction fails loudly beyond the configurable
/// dimension limit (default 6).
class RationalCone {
public:
    static RationalCone from_generators(std::size_t ambient_dim,
                                        const std::vector<std::vector<Int>>& gens);
    static RationalCone from_rational_generators(std::size_t ambient_dim,
                                                 const std::vector<std::vector<Rat>>& gens);
    static RationalCone zero(std::size_t ambient_dim);

    static std::size_t dimension_limit();
    static void set_dimension_limit(std::size_t limit);

    std::size_t ambient_dim() const { return ambient_dim_; }
    /// Dimension of the linear span.
    std::size_t dim() const { return span_.rows(); }
    bool is_pointed() const { return lineality_span_.rows() == 0; }
    bool is_zero() const { return dim() == 0; }
    std::size_t lineality_dim() const { return lineality_span_.rows(); }

    /// Extreme rays of the pointed part (primitive, lexicographically sorted).
    const std::vector<std::vector<Int>>& rays() const { return rays_amb_; }
    /// HNF basis of the lineality space.
    const IntMat& lineality_basis() const { return lineality_amb_; }
    /// Facet normals as primitive integer forms lying in the span.
    const std::vector<std::vector<Int>>& facet_normals() const { return normals_amb_; }
    /// Canonical generator list: extreme rays plus +-b for lineality basis b.
    std::vector<std::vector<Int>> generators() const;

    bool contains(const std::vector<Int>& x) const;
    bool contains(const std::vector<Rat>& x) const;
    bool relint_contains(const std::vector<Int>& x) const;
    bool relint_contains(const std::vector<Rat>& x) const;

    friend RationalCone intersect(const RationalCone& a, const RationalCone& b);
    friend bool cone_equals(const RationalCone& a, const RationalCone& b);
    /// Whether b is contained in a.
    friend bool cone_subset(const RationalCone& a, const RationalCone& b);
    /// Whether f is a face of c (including f == c and the zero face).
    friend bool is_face_of(const RationalCone& f, const RationalCone& c);

    bool operator==(const RationalCone& o) const { return cone_equals(*this, o); }

private:
    RationalCone() = default;
    void build_from_primitive_gens(std::size_t ambient_dim,
                                   std::vector<std::vector<Int>> gens);

    std::size_t ambient_dim_ = 0;
    IntMat span_;  // saturated HNF basis of the linear span, s x r
    std::vector<std::vector<Int>> normals_span_, normals_amb_;
    std::vector<std::vector<Int>> rays_span_, rays_amb_;
    IntMat lineality_span_, lineality_amb_;
};

RationalCone intersect(const RationalCone& a, const RationalCone& b);
bool cone_equals(const RationalCone& a, const RationalCone& b);
bool cone_subset(const RationalCone& a, const RationalCone& b);
bool is_face_of(const RationalCone& f, const RationalCone& c);

/// Primitive integer direction of a nonzero rational vector.
std::vector<Int> primitive_vector(const std::vector<Rat>& v);
std::vector<Int> primitive_vector(const std::vector<Int>& v);

/// Solve x * rows = rhs over Q (rows as a list of row vectors); nullopt if
/// the system is inconsistent.
std::optional<std::vector<Rat>> solve_left_rational(const std::vector<std::vector<Int>>& rows,
                                                    const std::vector<Rat>& rhs);

}  // namespace iq
