#pragma once

#include "iq/abelian.hpp"
#include "iq/cone.hpp"
#include "iq/grading.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace iq {

struct InvalidGradingError : Error {
    ValidationReport report;
    InvalidGradingError(const std::string& msg, ValidationReport r)
        : Error(msg), report(std::move(r)) {}
};
struct AmpleClassError : Error {
    using Error::Error;
};
struct WNotEffectiveError : Error {
    using Error::Error;
};
struct UnsupportedTorsionError : Error {
    using Error::Error;
};
struct SearchBoundExceededError : Error {
    using Error::Error;
};
struct FaceLimitError : Error {
    using Error::Error;
};

/// A face of the positive orthant Q_{>=0}^(n+m), as a subset of coordinate
/// indices {0..n+m-1}.
struct Face {
    std::uint64_t bits = 0;

    bool contains(std::size_t i) const { return (bits >> i) & 1u; }
    Face with(std::size_t i) const { return Face{bits | (std::uint64_t{1} << i)}; }
    bool subset_of(const Face& o) const { return (bits & ~o.bits) == 0; }
    bool proper_subset_of(const Face& o) const { return subset_of(o) && bits != o.bits; }
    std::size_t popcount() const;
    std::vector<std::size_t> indices() const;
    static Face from_indices(const std::vector<std::size_t>& idx);

    auto operator<=>(const Face&) const = default;
};

std::string to_string(const Face& f, std::size_t n);

/// Emptiness combinatorics of Remark-2.6 type: whether the open coordinate
/// stratum of the face meets V(g_{q,t}). Depends only on the block structure.
bool xbar_face(std::size_t q, std::size_t t, std::size_t m, const Face& f);

enum class FanoTag { Fano, TrulyAlmostFano, NotAlmostFano };

struct FanoStatus {
    FanoTag tag = FanoTag::NotAlmostFano;
    GroupElement anticanonical;
    std::optional<Int> fano_index;
    /// Set when the index was computed in a group with torsion (the divisor
    /// search then solves torsion congruences on top of the free gcd).
    bool index_torsion_caveat = false;
};

enum class ContractionTag { FiberType, Divisorial, Small, Identity, NotSemiample };

std::string to_string(FanoTag t);
std::string to_string(ContractionTag t);

/// A validated standard intrinsic quadric X(q,t,m,u): graded setup plus an
/// ample class, with the face combinatorics and divisor-class invariants.
/// Immutable; all caches are built eagerly at construction.
class QuadricVariety {
public:
    explicit QuadricVariety(GradedSetup setup, std::optional<GroupElement> ample = std::nullopt);

    const GradedSetup& setup() const { return setup_; }
    const FgAbelianGroup& group() const { return setup_.group(); }
    const GroupElement& ample_class() const { return u_; }
    std::size_t total_vars() const { return setup_.total_vars(); }

    bool is_xbar_face(const Face& f) const;
    bool is_x_relevant(const Face& f) const;
    /// Minimal X-relevant faces, fully expanded and sorted.
    const std::vector<Face>& covering_collection() const { return cov_; }
    /// One representative per symmetry orbit of the covering collection.
    const std::vector<Face>& cov_orbit_representatives() const { return cov_reps_; }
    /// Full list of X-relevant faces by direct enumeration (exponential; test
    /// and diagnostic use).
    std::vector<Face> all_x_relevant_faces() const;

    /// Image cone Q(face) in K_Q (free parts of the degrees on the face).
    RationalCone face_image_cone(const Face& f) const;
    /// Subgroup of K generated by the degrees on the face.
    Subgroup face_degree_subgroup(const Face& f) const;

    const RationalCone& eff_cone() const { return eff_; }
    const RationalCone& mov_cone() const { return mov_; }
    const RationalCone& semiample_cone() const { return sample_; }
    /// Literal ample test: w in relint Q(face) for every covering face.
    bool is_ample(const GroupElement& w) const;
    /// Whether the literal formula and relint(SAmple) disagree at w.
    bool ample_formula_degenerate(const GroupElement& w) const;

    const Subgroup& picard_group() const { return pic_; }
    std::size_t picard_number() const { return pic_.free_rank(); }

    Face xbar_singular_locus_face() const;
    std::string xbar_singular_locus() const;
    bool is_quasismooth() const;
    bool is_locally_factorial() const;
    bool piece_is_smooth(const Face& f) const;
    bool is_smooth() const;
    bool is_q_factorial() const;

    GroupElement anticanonical_class() const;
    FanoStatus fano_status() const;

    struct MukaiCheck {
        Int lhs, rhs;
        bool holds = false;
    };
    MukaiCheck mukai_check() const;

    std::vector<GroupElement> bpf_generators(const Face& f) const;
    bool is_bpf_class(const GroupElement& w) const;
    bool bpf_saturated() const;
    /// Saturation of the degree monoid of one covering face (torsion-free K).
    bool face_monoid_saturated(const Face& f) const;

    /// GIT chamber of w: intersection of the Q(face) over all Xbar-faces
    /// whose image contains w.
    RationalCone chamber(const GroupElement& w) const;

    struct ContractionResult {
        ContractionTag tag = ContractionTag::NotSemiample;
        RationalCone lambda;
    };
    ContractionResult classify_contraction(const GroupElement& w) const;

    std::size_t dimension() const;
    const GroupElement& relation_degree() const { return setup_.relation_degree(); }

    /// Monoid membership by bounded nonnegative search over the generators.
    bool monoid_contains(const std::vector<GroupElement>& gens, const GroupElement& w) const;

    static std::size_t face_limit();

private:
    void enumerate_cov();
    std::vector<Face> orbit_of(const Face& f) const;
    template <typename Fn>
    void for_each_face_rep(Fn&& fn) const;

    GradedSetup setup_;
    GroupElement u_;
    std::vector<Int> u_free_;

    // symmetry structure of the coordinate blocks
    struct PairChunk {
        std::size_t index;  // pair number, positions 2*index, 2*index+1
        bool flipped;       // true if the canonical (smaller) key sits second
    };
    struct PairGroup {
        bool symmetric;  // both degrees of the pair equal
        std::vector<PairChunk> chunks;
    };
    std::vector<PairGroup> pair_groups_;
    std::vector<std::vector<std::size_t>> s_classes_;

    std::vector<Face> cov_reps_, cov_;
    RationalCone eff_, mov_, sample_;
    Subgroup pic_;
};

}  // namespace iq
