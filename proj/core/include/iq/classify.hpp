#pragma once

#include "iq/grading.hpp"
#include "iq/quadric.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace iq {

/// Picard-number-two constellation (four types, each with the grading data of
/// the classification). a_list holds the S-degree parameters for Types 1 and
/// 4 and the normalized pair minima for Type 2; `a` is the Type-4 even-block
/// parameter.
struct ConstellationP2 {
    int type = 0;
    std::size_t n = 0, m = 0;
    long alpha = 0;
    long a = 0;
    std::vector<long> a_list;

    std::string label() const;
};

GradedSetup p2_setup(const ConstellationP2& c);
/// Semiample cone tau_X stated by the classification.
RationalCone p2_tau(const ConstellationP2& c);
/// Canonical ample class: sum of the extreme rays of tau_X.
GroupElement p2_canonical_ample(const ConstellationP2& c);

enum class FanoTableEntry { Fano, TrulyAlmostFano, Neither };
std::string to_string(FanoTableEntry e);

/// Literal evaluation of the Fano / truly-almost-Fano table.
FanoTableEntry fano_table_predicate(const ConstellationP2& c);

/// All Picard-number-two constellations of the given dimension with
/// parameters bounded by alpha_max, canonically ordered and deduplicated.
std::vector<ConstellationP2> picard2_constellations(std::size_t dim, long alpha_max);

enum class FanoFilter { All, FanoOnly, AlmostFano };

struct Picard2Item {
    ConstellationP2 constellation;
    QuadricVariety variety;
};
/// Enumerate and cross-validate: every item passes validation, smoothness,
/// Picard number 2 and has semiample cone equal to the stated tau_X.
std::vector<Picard2Item> enumerate_picard2(std::size_t dim, long alpha_max,
                                           FanoFilter filter = FanoFilter::All);

struct Picard1Item {
    std::size_t n = 0, m = 0;
    QuadricVariety variety;
};
/// Picard-number-one classification: K = Z, all degrees 1; smooth iff m = 0.
std::vector<Picard1Item> enumerate_picard1(std::size_t dim);

/// Full Picard-number-three constellation: first eight degrees fixed by the
/// classification; each extra pair is either a copy of (w1,w2) (entry -1) or
/// sits on the two boundary segments with parameter c in [0,a].
struct ConstellationP3Full {
    std::size_t n = 0;
    long a = 0;
    std::vector<long> extras;

    std::string label() const;
};

GradedSetup p3_setup(const ConstellationP3Full& c);
RationalCone p3_tau(const ConstellationP3Full& c);
GroupElement p3_canonical_ample(const ConstellationP3Full& c);

struct Picard3Item {
    ConstellationP3Full constellation;
    QuadricVariety variety;
};
std::vector<Picard3Item> enumerate_full_picard3(std::size_t n_max, long a_max);

struct FullFanoItem {
    std::size_t rho = 0;  // 1: smooth quadric in P_n; 2: flag variety of type (1,n-1,1)
    std::size_t n = 0;
    QuadricVariety variety;
};
std::vector<FullFanoItem> full_fano_smooth(std::size_t dim_max);

}  // namespace iq
