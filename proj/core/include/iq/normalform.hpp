#pragma once

#include "iq/abelian.hpp"
#include "iq/grading.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace iq {

struct NotHomogeneousError : Error {
    using Error::Error;
};
struct ZeroFormError : Error {
    using Error::Error;
};

/// A quadratic polynomial sum a_ij T_i T_j (i <= j) with K-homogeneous
/// variables. Zero coefficients may be omitted.
struct QuadraticForm {
    FgAbelianGroup group;
    std::size_t num_vars = 0;
    std::map<std::pair<std::size_t, std::size_t>, Rat> coefficients;  // 0-based, i <= j
    std::vector<GroupElement> degrees;

    void set_coefficient(std::size_t i, std::size_t j, const Rat& a);
};

/// Outcome of the graded reduction to the standard form g_{q,t}.
struct NormalFormResult {
    std::size_t q = 0;
    std::size_t t = 0;
    /// Original variable indices in normal-form order: the q pair slots, then
    /// the t square slots, then everything else.
    std::vector<std::size_t> variable_permutation;
    /// Elementary graded substitutions over Q, in the order applied.
    std::vector<std::string> rational_reduction;
    std::size_t sing_dim = 0;

    /// Degrees of the normal-form variables in block order (q pairs, t
    /// squares, remaining variables); feeds the standard construction.
    std::vector<GroupElement> block_degrees;
};

/// Common degree of all monomials; throws NotHomogeneousError naming an
/// offending monomial pair otherwise.
GroupElement homogeneity_check(const QuadraticForm& f);

NormalFormResult normalize_quadric(const QuadraticForm& f);

std::size_t singular_locus_dim(std::size_t s, std::size_t q, std::size_t t);

/// Standard graded setup (q,t,m block structure) obtained from an arbitrary
/// homogeneous quadric via the normal form.
GradedSetup to_graded_setup(const QuadraticForm& f);

}  // namespace iq
