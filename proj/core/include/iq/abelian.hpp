#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace iq {

using Int = mpz_class;
using Rat = mpq_class;

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense integer matrix, row-major. All entries are arbitrary precision.
class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMat(std::size_t rows, std::size_t cols, std::vector<Int> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) throw Error("IntMat: data size mismatch");
    }

    static IntMat identity(std::size_t n);
    static IntMat from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Int> row(std::size_t i) const;
    void append_row(const std::vector<Int>& r);
    IntMat transposed() const;

    bool operator==(const IntMat& other) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

IntMat operator*(const IntMat& a, const IntMat& b);

/// Exact determinant of a square matrix (fraction-free Bareiss elimination).
Int determinant(const IntMat& m);

/// Smith normal form s = u*m*v with u, v unimodular and s diagonal,
/// diagonal entries non-negative with d1 | d2 | ... .
struct SmithResult {
    IntMat s, u, v, v_inv;
};
SmithResult smith_normal_form(const IntMat& m);

/// Row-style Hermite normal form of the lattice spanned by the rows of m.
/// Canonical: zero rows dropped, pivots positive, pivot columns strictly
/// increasing, entries above a pivot reduced into [0, pivot).
IntMat hermite_normal_form(const IntMat& m);

/// Basis (in HNF) of the left kernel {x : x*m = 0}.
IntMat kernel_basis(const IntMat& m);

/// Basis (in HNF) of the saturation (rowspan_Q(m) intersected with Z^cols).
IntMat saturation(const IntMat& m);

/// Whether v lies in the row lattice of a matrix already in HNF.
bool lattice_contains(const IntMat& hnf, const std::vector<Int>& v);

/// Integer coordinates of v in the HNF row basis, if v lies in the lattice.
std::optional<std::vector<Int>> solve_in_lattice(const IntMat& hnf, const std::vector<Int>& v);

/// Basis (in HNF) of the intersection of the two row lattices.
IntMat lattice_intersection(const IntMat& a, const IntMat& b, std::size_t cols);

std::size_t lattice_rank(const IntMat& m);

/// A finitely generated abelian group Z^rank + Z/k1 + ... in invariant-factor
/// form: every k_j >= 2 and k_1 | k_2 | ... .
struct FgAbelianGroup {
    std::size_t rank = 0;
    std::vector<Int> torsion;

    FgAbelianGroup() = default;
    FgAbelianGroup(std::size_t rank_, std::vector<Int> torsion_ = {});

    std::size_t coords() const { return rank + torsion.size(); }
    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    /// Order of the 2-torsion subgroup {x : 2x = 0}.
    Int two_torsion_order() const;

    bool operator==(const FgAbelianGroup&) const = default;
};

/// An element of an FgAbelianGroup: free part plus torsion residues reduced
/// modulo the invariant factors.
struct GroupElement {
    std::vector<Int> free_part;
    std::vector<Int> tors;

    bool is_zero() const;
    bool operator==(const GroupElement&) const = default;
};

GroupElement make_element(const FgAbelianGroup& g, std::vector<Int> free_part,
                          std::vector<Int> tors = {});
GroupElement zero_element(const FgAbelianGroup& g);
GroupElement add(const FgAbelianGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement sub(const FgAbelianGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement neg(const FgAbelianGroup& g, const GroupElement& a);
GroupElement scale(const FgAbelianGroup& g, const Int& c, const GroupElement& a);
std::string to_string(const GroupElement& a);

/// A subgroup of an FgAbelianGroup, stored as the HNF basis of its preimage
/// lattice in Z^(rank + #torsion). The lattice always contains the relation
/// vectors k_j * e_(rank+j), so the HNF is a unique representation.
class Subgroup {
public:
    Subgroup(FgAbelianGroup ambient, const IntMat& lattice_generators);

    static Subgroup full(const FgAbelianGroup& g);

    const FgAbelianGroup& ambient() const { return ambient_; }
    const IntMat& lattice() const { return lattice_; }

    bool contains(const GroupElement& x) const;
    bool is_full() const;
    /// Free rank of the subgroup as an abstract group.
    std::size_t free_rank() const;
    /// Index in the ambient group; 0 means infinite index.
    Int index_in_ambient() const;

    bool operator==(const Subgroup& other) const {
        return ambient_ == other.ambient_ && lattice_ == other.lattice_;
    }

private:
    FgAbelianGroup ambient_;
    IntMat lattice_;
};

Subgroup subgroup_from_generators(const FgAbelianGroup& g, const std::vector<GroupElement>& gens);
Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b);
bool generates_group(const FgAbelianGroup& g, const std::vector<GroupElement>& gens);

/// Largest q >= 1 with w = q*v solvable in the group. For torsion-free groups
/// this is the gcd of the coordinates. Requires w != 0 with nonzero free part
/// (for pure torsion elements no largest q exists).
Int max_divisor(const FgAbelianGroup& g, const GroupElement& w);

/// Presentation of Z^cols modulo the row span of `relations` in invariant
/// factor form, together with the images of the canonical basis vectors.
struct QuotientPresentation {
    FgAbelianGroup group;
    std::vector<GroupElement> images;
};
QuotientPresentation quotient_group(const IntMat& relations, std::size_t cols);

}  // namespace iq
