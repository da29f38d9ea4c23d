#include "iq/abelian.hpp"

#include <algorithm>
#include <sstream>

namespace iq {

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) return IntMat();
    IntMat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw Error("IntMat::from_rows: ragged rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Int> IntMat::row(std::size_t i) const {
    std::vector<Int> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

void IntMat::append_row(const std::vector<Int>& r) {
    if (cols_ == 0 && rows_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw Error("IntMat::append_row: size mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

IntMat IntMat::transposed() const {
    IntMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
    if (a.cols() != b.rows()) throw Error("IntMat multiply: shape mismatch");
    IntMat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

Int determinant(const IntMat& m) {
    if (m.rows() != m.cols()) throw Error("determinant: matrix not square");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMat a = m;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                a(i, j) = num / prev;  // exact by Bareiss
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

// Elementary row/column operations tracking the transforms for SNF.
struct SnfState {
    IntMat m, u, v, v_inv;

    void row_swap(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
        for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
    }
    void row_negate(std::size_t i) {
        for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = -m(i, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
    }
    void row_add(std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += f * m(src, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(dst, c) += f * u(src, c);
    }
    void col_swap(std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
        for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
        for (std::size_t c = 0; c < v_inv.cols(); ++c) std::swap(v_inv(i, c), v_inv(j, c));
    }
    void col_negate(std::size_t i) {
        for (std::size_t r = 0; r < m.rows(); ++r) m(r, i) = -m(r, i);
        for (std::size_t r = 0; r < v.rows(); ++r) v(r, i) = -v(r, i);
        for (std::size_t c = 0; c < v_inv.cols(); ++c) v_inv(i, c) = -v_inv(i, c);
    }
    // col_dst += f * col_src; inverse transform acts on rows of v_inv.
    void col_add(std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += f * m(r, src);
        for (std::size_t r = 0; r < v.rows(); ++r) v(r, dst) += f * v(r, src);
        for (std::size_t c = 0; c < v_inv.cols(); ++c) v_inv(src, c) -= f * v_inv(dst, c);
    }
};

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

SmithResult smith_normal_form(const IntMat& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    SnfState st{m, IntMat::identity(rows), IntMat::identity(cols), IntMat::identity(cols)};
    std::size_t n = std::min(rows, cols);

    for (std::size_t k = 0; k < n; ++k) {
        // find a nonzero pivot in the remaining block
        bool found = false;
        for (std::size_t i = k; i < rows && !found; ++i)
            for (std::size_t j = k; j < cols && !found; ++j)
                if (st.m(i, j) != 0) {
                    st.row_swap(k, i);
                    st.col_swap(k, j);
                    found = true;
                }
        if (!found) break;

        // clear row k and column k by repeated gcd reduction
        for (;;) {
            bool progress = false;
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (st.m(i, k) == 0) continue;
                Int q = floor_div(st.m(i, k), st.m(k, k));
                st.row_add(i, k, -q);
                if (st.m(i, k) != 0) {
                    st.row_swap(k, i);
                    progress = true;
                }
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (st.m(k, j) == 0) continue;
                Int q = floor_div(st.m(k, j), st.m(k, k));
                st.col_add(j, k, -q);
                if (st.m(k, j) != 0) {
                    st.col_swap(k, j);
                    progress = true;
                }
            }
            if (!progress) break;
        }
        if (st.m(k, k) < 0) st.row_negate(k);
    }

    // enforce the divisibility chain d_k | d_{k+1}
    for (std::size_t k = 0; k + 1 < n; ++k) {
        for (std::size_t l = k + 1; l < n; ++l) {
            if (st.m(k, k) == 0) {
                if (st.m(l, l) != 0) {
                    // move the nonzero entry forward
                    st.row_swap(k, l);
                    st.col_swap(k, l);
                }
                continue;
            }
            if (st.m(l, l) % st.m(k, k) == 0) continue;
            // fold entry (l,l) into the pivot and redo the reduction
            st.col_add(k, l, 1);
            for (;;) {
                bool progress = false;
                if (st.m(l, k) != 0) {
                    Int q = floor_div(st.m(l, k), st.m(k, k));
                    st.row_add(l, k, -q);
                    if (st.m(l, k) != 0) {
                        st.row_swap(k, l);
                        progress = true;
                    }
                }
                if (st.m(k, l) != 0) {
                    Int q = floor_div(st.m(k, l), st.m(k, k));
                    st.col_add(l, k, -q);
                    if (st.m(k, l) != 0) {
                        st.col_swap(k, l);
                        progress = true;
                    }
                }
                if (!progress) break;
            }
            if (st.m(k, k) < 0) st.row_negate(k);
            if (st.m(l, l) < 0) st.row_negate(l);
        }
    }
    return SmithResult{st.m, st.u, st.v, st.v_inv};
}

namespace {

// Row HNF with an optional transform accumulator; keeps all rows.
void hnf_in_place(IntMat& m, IntMat* transform) {
    std::size_t rows = m.rows(), cols = m.cols();
    auto row_add = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t c = 0; c < cols; ++c) m(dst, c) += f * m(src, c);
        if (transform)
            for (std::size_t c = 0; c < transform->cols(); ++c)
                (*transform)(dst, c) += f * (*transform)(src, c);
    };
    auto row_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < cols; ++c) std::swap(m(i, c), m(j, c));
        if (transform)
            for (std::size_t c = 0; c < transform->cols(); ++c)
                std::swap((*transform)(i, c), (*transform)(j, c));
    };
    auto row_negate = [&](std::size_t i) {
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = -m(i, c);
        if (transform)
            for (std::size_t c = 0; c < transform->cols(); ++c)
                (*transform)(i, c) = -(*transform)(i, c);
    };

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // gcd-reduce column c below row r
        for (;;) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i) {
                if (m(i, c) == 0) continue;
                if (best == rows || cmp(abs(m(i, c)), abs(m(best, c))) < 0) best = i;
            }
            if (best == rows) break;
            row_swap(r, best);
            bool any = false;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (m(i, c) == 0) continue;
                Int q = floor_div(m(i, c), m(r, c));
                row_add(i, r, -q);
                if (m(i, c) != 0) any = true;
            }
            if (!any) break;
        }
        if (m(r, c) == 0) continue;
        if (m(r, c) < 0) row_negate(r);
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(m(i, c), m(r, c));
            if (q != 0) row_add(i, r, -q);
        }
        ++r;
    }
}

IntMat drop_zero_rows(const IntMat& m) {
    IntMat out(0, m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < m.cols() && zero; ++j) zero = (m(i, j) == 0);
        if (!zero) out.append_row(m.row(i));
    }
    return out;
}

}  // namespace

IntMat hermite_normal_form(const IntMat& m) {
    IntMat a = m;
    hnf_in_place(a, nullptr);
    return drop_zero_rows(a);
}

IntMat kernel_basis(const IntMat& m) {
    IntMat a = m;
    IntMat u = IntMat::identity(m.rows());
    hnf_in_place(a, &u);
    IntMat ker(0, m.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < a.cols() && zero; ++j) zero = (a(i, j) == 0);
        if (zero) ker.append_row(u.row(i));
    }
    return hermite_normal_form(ker);
}

IntMat saturation(const IntMat& m) {
    if (m.rows() == 0) return IntMat(0, m.cols());
    SmithResult snf = smith_normal_form(m);
    std::size_t rank = 0;
    for (std::size_t k = 0; k < std::min(snf.s.rows(), snf.s.cols()); ++k)
        if (snf.s(k, k) != 0) ++rank;
    IntMat sat(0, m.cols());
    for (std::size_t i = 0; i < rank; ++i) sat.append_row(snf.v_inv.row(i));
    return hermite_normal_form(sat);
}

std::optional<std::vector<Int>> solve_in_lattice(const IntMat& hnf, const std::vector<Int>& v) {
    if (hnf.cols() != v.size()) throw Error("solve_in_lattice: dimension mismatch");
    std::vector<Int> x = v;
    std::vector<Int> coords(hnf.rows());
    std::size_t row = 0;
    for (std::size_t c = 0; c < hnf.cols(); ++c) {
        if (row < hnf.rows() && hnf(row, c) != 0) {
            // pivot of `row` sits at the first nonzero column >= c
            if (x[c] % hnf(row, c) != 0) return std::nullopt;
            Int q = floor_div(x[c], hnf(row, c));
            for (std::size_t j = c; j < hnf.cols(); ++j) x[j] -= q * hnf(row, j);
            coords[row] = q;
            ++row;
        } else if (x[c] != 0) {
            return std::nullopt;
        }
    }
    return coords;
}

bool lattice_contains(const IntMat& hnf, const std::vector<Int>& v) {
    return solve_in_lattice(hnf, v).has_value();
}

IntMat lattice_intersection(const IntMat& a, const IntMat& b, std::size_t cols) {
    if ((a.rows() && a.cols() != cols) || (b.rows() && b.cols() != cols))
        throw Error("lattice_intersection: dimension mismatch");
    // (u,v) with u*a = v*b <=> (u,v) in kernel of stacked [a; -b]
    IntMat stacked(0, cols);
    for (std::size_t i = 0; i < a.rows(); ++i) stacked.append_row(a.row(i));
    for (std::size_t i = 0; i < b.rows(); ++i) {
        std::vector<Int> r = b.row(i);
        for (Int& e : r) e = -e;
        stacked.append_row(r);
    }
    IntMat ker = kernel_basis(stacked);
    IntMat inter(0, cols);
    for (std::size_t i = 0; i < ker.rows(); ++i) {
        std::vector<Int> x(cols);
        for (std::size_t k = 0; k < a.rows(); ++k) {
            if (ker(i, k) == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) x[j] += ker(i, k) * a(k, j);
        }
        inter.append_row(x);
    }
    return hermite_normal_form(inter);
}

std::size_t lattice_rank(const IntMat& m) { return hermite_normal_form(m).rows(); }

FgAbelianGroup::FgAbelianGroup(std::size_t rank_, std::vector<Int> torsion_)
    : rank(rank_), torsion(std::move(torsion_)) {
    for (std::size_t j = 0; j < torsion.size(); ++j) {
        if (torsion[j] < 2) throw Error("FgAbelianGroup: invariant factors must be >= 2");
        if (j > 0 && torsion[j] % torsion[j - 1] != 0)
            throw Error("FgAbelianGroup: invariant factors must form a divisibility chain");
    }
}

Int FgAbelianGroup::two_torsion_order() const {
    Int order = 1;
    for (const Int& k : torsion)
        if (k % 2 == 0) order *= 2;
    return order;
}

bool GroupElement::is_zero() const {
    for (const Int& e : free_part)
        if (e != 0) return false;
    for (const Int& e : tors)
        if (e != 0) return false;
    return true;
}

namespace {
Int mod_reduce(const Int& a, const Int& k) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), k.get_mpz_t());
    return r;
}
}  // namespace

GroupElement make_element(const FgAbelianGroup& g, std::vector<Int> free_part,
                          std::vector<Int> tors) {
    if (free_part.size() != g.rank) throw Error("make_element: free part has wrong length");
    if (tors.empty()) tors.resize(g.torsion.size());
    if (tors.size() != g.torsion.size()) throw Error("make_element: torsion part has wrong length");
    for (std::size_t j = 0; j < tors.size(); ++j) tors[j] = mod_reduce(tors[j], g.torsion[j]);
    return GroupElement{std::move(free_part), std::move(tors)};
}

GroupElement zero_element(const FgAbelianGroup& g) {
    return GroupElement{std::vector<Int>(g.rank), std::vector<Int>(g.torsion.size())};
}

GroupElement add(const FgAbelianGroup& g, const GroupElement& a, const GroupElement& b) {
    GroupElement r = a;
    for (std::size_t i = 0; i < g.rank; ++i) r.free_part[i] += b.free_part[i];
    for (std::size_t j = 0; j < g.torsion.size(); ++j)
        r.tors[j] = mod_reduce(r.tors[j] + b.tors[j], g.torsion[j]);
    return r;
}

GroupElement sub(const FgAbelianGroup& g, const GroupElement& a, const GroupElement& b) {
    return add(g, a, neg(g, b));
}

GroupElement neg(const FgAbelianGroup& g, const GroupElement& a) {
    GroupElement r = a;
    for (Int& e : r.free_part) e = -e;
    for (std::size_t j = 0; j < g.torsion.size(); ++j) r.tors[j] = mod_reduce(-r.tors[j], g.torsion[j]);
    return r;
}

GroupElement scale(const FgAbelianGroup& g, const Int& c, const GroupElement& a) {
    GroupElement r = a;
    for (Int& e : r.free_part) e *= c;
    for (std::size_t j = 0; j < g.torsion.size(); ++j) r.tors[j] = mod_reduce(c * r.tors[j], g.torsion[j]);
    return r;
}

std::string to_string(const GroupElement& a) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < a.free_part.size(); ++i) {
        if (i) os << ",";
        os << a.free_part[i];
    }
    for (std::size_t j = 0; j < a.tors.size(); ++j) {
        os << (j == 0 && a.free_part.empty() ? "" : ",") << a.tors[j] << "~";
    }
    os << ")";
    return os.str();
}

namespace {
// Lift of an element to Z^(rank + #torsion).
std::vector<Int> lift(const FgAbelianGroup& g, const GroupElement& x) {
    std::vector<Int> v;
    v.reserve(g.coords());
    v.insert(v.end(), x.free_part.begin(), x.free_part.end());
    v.insert(v.end(), x.tors.begin(), x.tors.end());
    return v;
}

IntMat relation_rows(const FgAbelianGroup& g) {
    IntMat rel(0, g.coords());
    for (std::size_t j = 0; j < g.torsion.size(); ++j) {
        std::vector<Int> r(g.coords());
        r[g.rank + j] = g.torsion[j];
        rel.append_row(r);
    }
    return rel;
}
}  // namespace

Subgroup::Subgroup(FgAbelianGroup ambient, const IntMat& lattice_generators)
    : ambient_(std::move(ambient)) {
    if (lattice_generators.rows() && lattice_generators.cols() != ambient_.coords())
        throw Error("Subgroup: lattice generators have wrong width");
    IntMat gen = relation_rows(ambient_);
    for (std::size_t i = 0; i < lattice_generators.rows(); ++i)
        gen.append_row(lattice_generators.row(i));
    lattice_ = hermite_normal_form(gen);
}

Subgroup Subgroup::full(const FgAbelianGroup& g) {
    return Subgroup(g, IntMat::identity(g.coords()));
}

bool Subgroup::contains(const GroupElement& x) const {
    if (x.free_part.size() != ambient_.rank || x.tors.size() != ambient_.torsion.size())
        throw Error("Subgroup::contains: element/group mismatch");
    return lattice_contains(lattice_, lift(ambient_, x));
}

bool Subgroup::is_full() const { return lattice_ == IntMat::identity(ambient_.coords()); }

std::size_t Subgroup::free_rank() const {
    std::size_t r = lattice_.rows();
    return r - ambient_.torsion.size();
}

Int Subgroup::index_in_ambient() const {
    if (lattice_.rows() < ambient_.coords()) return 0;
    Int idx = 1;
    std::size_t col = 0;
    for (std::size_t i = 0; i < lattice_.rows(); ++i) {
        while (col < lattice_.cols() && lattice_(i, col) == 0) ++col;
        idx *= lattice_(i, col);
    }
    return idx;
}

Subgroup subgroup_from_generators(const FgAbelianGroup& g, const std::vector<GroupElement>& gens) {
    IntMat rows(0, g.coords());
    for (const GroupElement& x : gens) {
        if (x.free_part.size() != g.rank || x.tors.size() != g.torsion.size())
            throw Error("subgroup_from_generators: element/group mismatch");
        rows.append_row(lift(g, x));
    }
    return Subgroup(g, rows);
}

Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b) {
    if (!(a.ambient() == b.ambient())) throw Error("subgroup_intersection: ambient group mismatch");
    IntMat inter = lattice_intersection(a.lattice(), b.lattice(), a.ambient().coords());
    return Subgroup(a.ambient(), inter);
}

bool generates_group(const FgAbelianGroup& g, const std::vector<GroupElement>& gens) {
    if (g.is_trivial()) return true;
    return subgroup_from_generators(g, gens).is_full();
}

Int max_divisor(const FgAbelianGroup& g, const GroupElement& w) {
    if (w.free_part.size() != g.rank || w.tors.size() != g.torsion.size())
        throw Error("max_divisor: element/group mismatch");
    if (w.is_zero()) throw Error("max_divisor: element is zero");
    Int g0 = 0;
    for (const Int& e : w.free_part) g0 = gcd(g0, e);
    if (g0 == 0)
        throw Error("max_divisor: no largest divisor for a pure torsion element");
    if (g.torsion.empty()) return g0;

    // collect divisors of the free gcd, largest first
    std::vector<Int> divisors;
    for (Int d = 1; d * d <= g0; ++d) {
        if (g0 % d != 0) continue;
        divisors.push_back(d);
        if (d * d != g0) divisors.push_back(g0 / d);
    }
    std::sort(divisors.begin(), divisors.end(), [](const Int& a, const Int& b) { return a > b; });
    for (const Int& q : divisors) {
        bool ok = true;
        for (std::size_t j = 0; j < g.torsion.size() && ok; ++j) {
            // q*x == w_j (mod k_j) solvable iff gcd(q,k_j) | w_j
            ok = (w.tors[j] % gcd(q, g.torsion[j]) == 0);
        }
        if (ok) return q;
    }
    return 1;  // q = 1 always solves the congruences
}

QuotientPresentation quotient_group(const IntMat& relations, std::size_t cols) {
    if (relations.rows() && relations.cols() != cols)
        throw Error("quotient_group: relation width mismatch");
    IntMat rel = relations;
    if (rel.rows() == 0) rel = IntMat(0, cols);
    SmithResult snf = smith_normal_form(rel);
    std::size_t n = std::min(snf.s.rows(), snf.s.cols());

    // rowspan(rel) = span{ d_i * (row i of v_inv) }; in the basis given by the
    // rows of v_inv the quotient splits coordinatewise.
    std::vector<Int> diag;
    for (std::size_t i = 0; i < n; ++i) diag.push_back(snf.s(i, i));
    while (diag.size() < cols) diag.push_back(0);

    std::vector<std::size_t> tors_pos, free_pos;
    std::vector<Int> torsion;
    for (std::size_t i = 0; i < cols; ++i) {
        if (diag[i] == 0)
            free_pos.push_back(i);
        else if (diag[i] >= 2)
            tors_pos.push_back(i);
        // d_i == 1 contributes nothing
    }
    for (std::size_t i : tors_pos) torsion.push_back(diag[i]);
    FgAbelianGroup group(free_pos.size(), torsion);

    // coordinates of e_k in the v_inv basis are row k of v
    std::vector<GroupElement> images;
    images.reserve(cols);
    for (std::size_t k = 0; k < cols; ++k) {
        std::vector<Int> free_part, tors;
        for (std::size_t i : free_pos) free_part.push_back(snf.v(k, i));
        for (std::size_t i : tors_pos) tors.push_back(snf.v(k, i));
        images.push_back(make_element(group, std::move(free_part), std::move(tors)));
    }
    return QuotientPresentation{std::move(group), std::move(images)};
}

}  // namespace iq
