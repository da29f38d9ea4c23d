#pragma once

#include "iq/abelian.hpp"
#include "iq/cone.hpp"

#include <string>
#include <vector>

namespace iq {

/// Raised when the (q,t,m) block structure of a graded setup is broken
/// (homogeneity, parity, size constraints).
struct GradingStructureError : Error {
    using Error::Error;
};

/// A K-graded polynomial ring K[T_1..T_n, S_1..S_m] together with the block
/// structure of the standard relation g_{q,t}: the first q degrees pair up to
/// the relation degree, the next t degrees square to it, the trailing m
/// degrees are free variables.
class GradedSetup {
public:
    GradedSetup(FgAbelianGroup group, std::vector<GroupElement> degrees, std::size_t q,
                std::size_t t, std::size_t m);

    const FgAbelianGroup& group() const { return group_; }
    const std::vector<GroupElement>& degrees() const { return degrees_; }
    const GroupElement& degree(std::size_t i) const { return degrees_[i]; }

    std::size_t q() const { return q_; }
    std::size_t t() const { return t_; }
    std::size_t m() const { return m_; }
    std::size_t n() const { return q_ + t_; }
    std::size_t total_vars() const { return q_ + t_ + m_; }

    /// Degree of the relation g_{q,t}.
    const GroupElement& relation_degree() const { return mu_; }

    std::vector<Int> free_part(std::size_t i) const { return degrees_[i].free_part; }

private:
    FgAbelianGroup group_;
    std::vector<GroupElement> degrees_;
    std::size_t q_, t_, m_;
    GroupElement mu_;
};

struct ValidationReport {
    bool pointed = false;
    bool almost_free = false;
    bool moving_cone_fulldim = false;
    bool factorial = false;
    std::string factorial_case;  // "q+t>=5", "matrix-shape(q,t)" or "none"
    std::vector<std::string> messages;

    bool valid() const { return pointed && almost_free && moving_cone_fulldim && factorial; }
};

RationalCone weight_cone(const GradedSetup& s);
RationalCone moving_cone(const GradedSetup& s);
bool is_pointed_grading(const GradedSetup& s);
bool is_almost_free(const GradedSetup& s);
std::pair<bool, std::string> is_factorially_graded(const GradedSetup& s);
ValidationReport validate(const GradedSetup& s);

/// Relation lattice ker(Q) of the degree map Z^(n+m) -> K, as an HNF basis.
IntMat degree_kernel(const GradedSetup& s);

}  // namespace iq
