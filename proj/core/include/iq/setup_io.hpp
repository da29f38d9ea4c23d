#pragma once

#include "iq/classify.hpp"
#include "iq/normalform.hpp"
#include "iq/quadric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace iq {

struct ParseError : Error {
    using Error::Error;
};

/// On-disk description of a graded setup. Either block mode (q,t,m plus
/// degrees in T-then-S order) or raw mode (an arbitrary homogeneous quadric
/// that goes through the normal form first).
struct SetupFile {
    FgAbelianGroup group;
    bool raw = false;

    // block mode
    std::size_t q = 0, t = 0, m = 0;
    std::vector<GroupElement> degrees;
    std::optional<GroupElement> ample;

    // raw mode
    std::size_t num_vars = 0;
    std::vector<std::tuple<std::size_t, std::size_t, Rat>> coefficients;  // 0-based i <= j
    std::vector<GroupElement> raw_degrees;
};

/// Parse the line-oriented text format, or JSON when the first non-space
/// character is '{'.
SetupFile parse_setup(const std::string& content);
std::string emit_setup_text(const SetupFile& f);
std::string emit_setup_json(const SetupFile& f);

SetupFile setup_file_for(const GradedSetup& s, const std::optional<GroupElement>& ample);

/// Everything `analyze` reports. The body is absent when validation fails.
struct AnalysisRecord {
    bool raw_input = false;
    std::optional<NormalFormResult> normal_form;

    std::size_t q = 0, t = 0, m = 0;
    FgAbelianGroup group;
    ValidationReport validation;
    std::string construction_error;  // nonempty when the variety could not be built

    struct BoundaryClass {
        std::vector<Int> cls;
        ContractionTag tag = ContractionTag::NotSemiample;
        std::vector<std::vector<Int>> lambda_rays;
    };

    struct Body {
        GroupElement ample;
        std::size_t dimension = 0;
        std::size_t picard_number = 0;
        bool picard_full = false;
        Int picard_index;  // 0 meaning infinite
        std::vector<std::vector<Int>> eff_rays, mov_rays, sample_rays;
        std::vector<std::string> cov_reps;
        std::size_t cov_size = 0;
        bool quasismooth = false, locally_factorial = false, smooth = false, q_factorial = false;
        GroupElement anticanonical;
        FanoTag fano_tag = FanoTag::NotAlmostFano;
        std::optional<Int> fano_index;
        bool fano_index_torsion_caveat = false;
        bool ample_formula_degenerate = false;
        std::optional<Int> mukai_lhs, mukai_rhs;
        std::optional<bool> mukai_holds;
        std::optional<bool> bpf_saturated;  // absent when torsion blocks the check
        std::string bpf_note;
        std::vector<BoundaryClass> contractions;
    };
    std::optional<Body> body;

    bool ok() const { return body.has_value(); }
};

AnalysisRecord analyze_setup(const SetupFile& f);
std::string render_analysis_text(const AnalysisRecord& r);
std::string render_analysis_json(const AnalysisRecord& r);

}  // namespace iq
