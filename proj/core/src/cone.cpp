#include "iq/cone.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <set>

namespace iq {

namespace {

std::atomic<std::size_t> g_dim_limit{6};

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

bool lex_less(const std::vector<Int>& a, const std::vector<Int>& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

bool is_zero_vec(const std::vector<Int>& v) {
    for (const Int& e : v)
        if (e != 0) return false;
    return true;
}

Rat dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return Rat(s);
}

Int idot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Right kernel {x : m*x = 0} of a rational matrix, as a rational basis.
QMat rational_right_kernel(QMat m, std::size_t cols) {
    std::size_t rows = m.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        Rat inv = 1 / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    QMat kernel;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        QVec x(cols);
        x[c] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = -m[i][c];
        kernel.push_back(std::move(x));
    }
    return kernel;
}

std::size_t rational_rank(QMat m, std::size_t cols) {
    std::size_t rows = m.size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

QMat to_qmat(const std::vector<std::vector<Int>>& rows) {
    QMat m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        QVec q(r.size());
        for (std::size_t j = 0; j < r.size(); ++j) q[j] = Rat(r[j]);
        m.push_back(std::move(q));
    }
    return m;
}

// Solve x*a = b over Q for a row vector x (a given by rows). Returns nullopt
// if inconsistent.
std::optional<QVec> solve_left(const std::vector<std::vector<Int>>& a, const QVec& b) {
    std::size_t n = a.size();
    if (n == 0) {
        for (const Rat& e : b)
            if (e != 0) return std::nullopt;
        return QVec{};
    }
    std::size_t cols = a[0].size();
    // Gaussian elimination on the transposed system a^T x^T = b^T
    QMat m(cols, QVec(n + 1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < cols; ++j) m[j][i] = Rat(a[i][j]);
    for (std::size_t j = 0; j < cols; ++j) m[j][n] = b[j];

    std::vector<std::size_t> pivot_of_col(n, cols);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < cols; ++c) {
        std::size_t p = r;
        while (p < cols && m[p][c] == 0) ++p;
        if (p == cols) continue;
        std::swap(m[r], m[p]);
        Rat inv = 1 / m[r][c];
        for (std::size_t j = c; j <= n; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < cols; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_of_col[c] = r;
        ++r;
    }
    // consistency: rows with all-zero coefficients must have zero rhs
    for (std::size_t i = r; i < cols; ++i)
        if (m[i][n] != 0) return std::nullopt;
    QVec x(n, Rat(0));
    for (std::size_t c = 0; c < n; ++c)
        if (pivot_of_col[c] != cols) x[c] = m[pivot_of_col[c]][n];
    return x;
}

std::vector<std::vector<Int>> mat_rows(const IntMat& m) {
    std::vector<std::vector<Int>> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rows;
}

// All k-subsets of {0..n-1}, invoking f on each.
template <typename F>
void for_subsets(std::size_t n, std::size_t k, F&& f) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    for (;;) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::vector<Int> primitive_vector(const std::vector<Rat>& v) {
    Int lcm_den = 1;
    for (const Rat& e : v) lcm_den = lcm(lcm_den, Int(e.get_den()));
    std::vector<Int> w(v.size());
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat scaled = v[i] * Rat(lcm_den);
        w[i] = Int(scaled.get_num());
        g = gcd(g, w[i]);
    }
    if (g == 0) throw Error("primitive_vector: zero vector");
    for (Int& e : w) e /= g;
    return w;
}

std::vector<Int> primitive_vector(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& e : v) g = gcd(g, e);
    if (g == 0) throw Error("primitive_vector: zero vector");
    std::vector<Int> w = v;
    for (Int& e : w) e /= g;
    return w;
}

std::optional<std::vector<Rat>> solve_left_rational(const std::vector<std::vector<Int>>& rows,
                                                    const std::vector<Rat>& rhs) {
    return solve_left(rows, rhs);
}

std::size_t RationalCone::dimension_limit() { return g_dim_limit.load(); }
void RationalCone::set_dimension_limit(std::size_t limit) { g_dim_limit.store(limit); }

RationalCone RationalCone::zero(std::size_t ambient_dim) {
    return from_generators(ambient_dim, {});
}

RationalCone RationalCone::from_rational_generators(std::size_t ambient_dim,
                                                    const std::vector<std::vector<Rat>>& gens) {
    std::vector<std::vector<Int>> cleared;
    for (const auto& g : gens) {
        bool zero = true;
        for (const Rat& e : g)
            if (e != 0) zero = false;
        if (!zero) cleared.push_back(primitive_vector(g));
    }
    return from_generators(ambient_dim, cleared);
}

RationalCone RationalCone::from_generators(std::size_t ambient_dim,
                                           const std::vector<std::vector<Int>>& gens) {
    if (ambient_dim > dimension_limit())
        throw Error("RationalCone: ambient dimension " + std::to_string(ambient_dim) +
                    " exceeds the configured limit " + std::to_string(dimension_limit()));
    std::set<std::vector<Int>> dedup;
    for (const auto& g : gens) {
        if (g.size() != ambient_dim) throw Error("RationalCone: generator dimension mismatch");
        if (is_zero_vec(g)) continue;
        dedup.insert(primitive_vector(g));
    }
    RationalCone c;
    c.build_from_primitive_gens(ambient_dim,
                                std::vector<std::vector<Int>>(dedup.begin(), dedup.end()));
    return c;
}

void RationalCone::build_from_primitive_gens(std::size_t ambient_dim,
                                             std::vector<std::vector<Int>> gens) {
    ambient_dim_ = ambient_dim;

    IntMat gen_mat(0, ambient_dim);
    for (const auto& g : gens) gen_mat.append_row(g);
    span_ = saturation(gen_mat);
    std::size_t s = span_.rows();

    if (s == 0) {
        normals_span_.clear();
        normals_amb_.clear();
        rays_span_.clear();
        rays_amb_.clear();
        lineality_span_ = IntMat(0, 0);
        lineality_amb_ = IntMat(0, ambient_dim);
        return;
    }

    // express generators in span coordinates (integral by saturation)
    std::vector<std::vector<Int>> span_rows = mat_rows(span_);
    std::vector<std::vector<Int>> gens_span;
    gens_span.reserve(gens.size());
    for (const auto& g : gens) {
        QVec b(g.size());
        for (std::size_t j = 0; j < g.size(); ++j) b[j] = Rat(g[j]);
        auto c = solve_left(span_rows, b);
        if (!c) throw Error("RationalCone: generator escaped its own span");
        std::vector<Int> ci(s);
        for (std::size_t j = 0; j < s; ++j) {
            if ((*c)[j].get_den() != 1) throw Error("RationalCone: non-integral span coordinates");
            ci[j] = Int((*c)[j].get_num());
        }
        gens_span.push_back(std::move(ci));
    }

    // facet normals: kernels of (s-1)-subsets of generators, sign-filtered,
    // then kept only if the tight generators span a hyperplane
    std::set<std::vector<Int>> normal_set;
    for_subsets(gens_span.size(), s - 1, [&](const std::vector<std::size_t>& idx) {
        QMat sub;
        sub.reserve(idx.size());
        for (std::size_t i : idx) {
            QVec row(s);
            for (std::size_t j = 0; j < s; ++j) row[j] = Rat(gens_span[i][j]);
            sub.push_back(std::move(row));
        }
        QMat ker = rational_right_kernel(sub, s);
        if (ker.size() != 1) return;
        std::vector<Int> n = primitive_vector(ker[0]);
        bool nonneg = true, nonpos = true;
        for (const auto& g : gens_span) {
            int sg = sgn(idot(n, g));
            if (sg > 0) nonpos = false;
            if (sg < 0) nonneg = false;
        }
        if (nonneg)
            normal_set.insert(n);
        else if (nonpos) {
            for (Int& e : n) e = -e;
            normal_set.insert(n);
        }
    });
    normals_span_.clear();
    for (const auto& n : normal_set) {
        QMat tight;
        for (const auto& g : gens_span)
            if (idot(n, g) == 0) {
                QVec row(s);
                for (std::size_t j = 0; j < s; ++j) row[j] = Rat(g[j]);
                tight.push_back(std::move(row));
            }
        if (rational_rank(tight, s) == s - 1) normals_span_.push_back(n);
    }
    std::sort(normals_span_.begin(), normals_span_.end(), lex_less);

    // lineality: common kernel of the facet normals inside the span
    IntMat normal_mat(0, s);
    for (const auto& n : normals_span_) normal_mat.append_row(n);
    if (normals_span_.empty()) {
        lineality_span_ = hermite_normal_form(IntMat::identity(s));
    } else {
        lineality_span_ = saturation(kernel_basis(normal_mat.transposed()));
    }

    // extreme rays of the pointed part
    std::set<std::vector<Int>> ray_set;
    std::size_t ldim = lineality_span_.rows();
    if (ldim == 0) {
        for (const auto& g : gens_span) {
            QMat tight;
            for (const auto& n : normals_span_)
                if (idot(n, g) == 0) {
                    QVec row(s);
                    for (std::size_t j = 0; j < s; ++j) row[j] = Rat(n[j]);
                    tight.push_back(std::move(row));
                }
            if (rational_rank(tight, s) == s - 1) ray_set.insert(primitive_vector(g));
        }
    } else if (s > ldim) {
        // rays of C /\ L^perp: kernels of (s-ldim-1)-subsets of normals joined
        // with the lineality equations
        std::vector<std::vector<Int>> lin_rows = mat_rows(lineality_span_);
        for_subsets(normals_span_.size(), s - ldim - 1, [&](const std::vector<std::size_t>& idx) {
            QMat sys;
            for (std::size_t i : idx) {
                QVec row(s);
                for (std::size_t j = 0; j < s; ++j) row[j] = Rat(normals_span_[i][j]);
                sys.push_back(std::move(row));
            }
            for (const auto& l : lin_rows) {
                QVec row(s);
                for (std::size_t j = 0; j < s; ++j) row[j] = Rat(l[j]);
                sys.push_back(std::move(row));
            }
            QMat ker = rational_right_kernel(sys, s);
            if (ker.size() != 1) return;
            std::vector<Int> r = primitive_vector(ker[0]);
            for (int dir = 0; dir < 2; ++dir) {
                bool feasible = true;
                for (const auto& n : normals_span_)
                    if (idot(n, r) < 0) {
                        feasible = false;
                        break;
                    }
                if (feasible) {
                    // extreme iff tight normals + lineality equations have corank 1
                    QMat tight;
                    for (const auto& n : normals_span_)
                        if (idot(n, r) == 0) {
                            QVec row(s);
                            for (std::size_t j = 0; j < s; ++j) row[j] = Rat(n[j]);
                            tight.push_back(std::move(row));
                        }
                    for (const auto& l : lin_rows) {
                        QVec row(s);
                        for (std::size_t j = 0; j < s; ++j) row[j] = Rat(l[j]);
                        tight.push_back(std::move(row));
                    }
                    if (rational_rank(tight, s) == s - 1) ray_set.insert(r);
                }
                for (Int& e : r) e = -e;
            }
        });
    }
    rays_span_.assign(ray_set.begin(), ray_set.end());
    std::sort(rays_span_.begin(), rays_span_.end(), lex_less);

    // map everything back to ambient coordinates
    auto span_to_amb = [&](const std::vector<Int>& c) {
        std::vector<Int> v(ambient_dim_);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < ambient_dim_; ++j) v[j] += c[i] * span_(i, j);
        return v;
    };
    rays_amb_.clear();
    for (const auto& r : rays_span_) rays_amb_.push_back(primitive_vector(span_to_amb(r)));
    std::sort(rays_amb_.begin(), rays_amb_.end(), lex_less);

    IntMat lin_amb(0, ambient_dim_);
    for (std::size_t i = 0; i < lineality_span_.rows(); ++i)
        lin_amb.append_row(span_to_amb(lineality_span_.row(i)));
    lineality_amb_ = hermite_normal_form(lin_amb);

    // ambient normal: the unique preimage inside the span, via (B B^T)^{-1} B
    normals_amb_.clear();
    if (!normals_span_.empty()) {
        std::vector<std::vector<Int>> gram_rows(s, std::vector<Int>(s));
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j) {
                Int acc = 0;
                for (std::size_t k = 0; k < ambient_dim_; ++k) acc += span_(i, k) * span_(j, k);
                gram_rows[i][j] = acc;
            }
        for (const auto& m : normals_span_) {
            QVec rhs(s);
            for (std::size_t j = 0; j < s; ++j) rhs[j] = Rat(m[j]);
            auto y = solve_left(gram_rows, rhs);
            if (!y) throw Error("RationalCone: Gram system unsolvable");
            QVec n_amb(ambient_dim_, Rat(0));
            for (std::size_t i = 0; i < s; ++i)
                for (std::size_t j = 0; j < ambient_dim_; ++j)
                    n_amb[j] += (*y)[i] * Rat(span_(i, j));
            normals_amb_.push_back(primitive_vector(n_amb));
        }
    }
}

std::vector<std::vector<Int>> RationalCone::generators() const {
    std::vector<std::vector<Int>> out = rays_amb_;
    for (std::size_t i = 0; i < lineality_amb_.rows(); ++i) {
        std::vector<Int> b = lineality_amb_.row(i);
        out.push_back(b);
        for (Int& e : b) e = -e;
        out.push_back(b);
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

namespace {
int sgn_rat(const Rat& x) { return sgn(x); }
}  // namespace

bool RationalCone::contains(const std::vector<Rat>& x) const {
    if (x.size() != ambient_dim_) throw Error("RationalCone::contains: dimension mismatch");
    bool zero = true;
    for (const Rat& e : x)
        if (e != 0) zero = false;
    if (zero) return true;
    if (dim() == 0) return false;
    auto c = solve_left(mat_rows(span_), x);
    if (!c) return false;
    for (const auto& n : normals_span_) {
        Rat acc = 0;
        for (std::size_t j = 0; j < n.size(); ++j) acc += (*c)[j] * Rat(n[j]);
        if (sgn_rat(acc) < 0) return false;
    }
    return true;
}

bool RationalCone::relint_contains(const std::vector<Rat>& x) const {
    if (x.size() != ambient_dim_) throw Error("RationalCone::relint_contains: dimension mismatch");
    if (dim() == 0) {
        for (const Rat& e : x)
            if (e != 0) return false;
        return true;
    }
    auto c = solve_left(mat_rows(span_), x);
    if (!c) return false;
    for (const auto& n : normals_span_) {
        Rat acc = 0;
        for (std::size_t j = 0; j < n.size(); ++j) acc += (*c)[j] * Rat(n[j]);
        if (sgn_rat(acc) <= 0) return false;
    }
    return true;
}

bool RationalCone::contains(const std::vector<Int>& x) const {
    QVec q(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) q[i] = Rat(x[i]);
    return contains(q);
}

bool RationalCone::relint_contains(const std::vector<Int>& x) const {
    QVec q(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) q[i] = Rat(x[i]);
    return relint_contains(q);
}

RationalCone intersect(const RationalCone& a, const RationalCone& b) {
    if (a.ambient_dim_ != b.ambient_dim_) throw Error("intersect: ambient dimension mismatch");
    std::size_t r = a.ambient_dim_;
    IntMat span_meet = lattice_intersection(a.span_, b.span_, r);
    std::size_t s = span_meet.rows();
    if (s == 0) return RationalCone::zero(r);

    // restrict both normal systems to the common span
    std::vector<std::vector<Int>> normals;
    auto restrict_normals = [&](const RationalCone& c) {
        for (const auto& n : c.normals_amb_) {
            std::vector<Int> m(s);
            for (std::size_t i = 0; i < s; ++i) {
                Int acc = 0;
                for (std::size_t j = 0; j < r; ++j) acc += span_meet(i, j) * n[j];
                m[i] = acc;
            }
            if (!is_zero_vec(m)) normals.push_back(m);
        }
    };
    restrict_normals(a);
    restrict_normals(b);

    // lineality of the restriction
    IntMat normal_mat(0, s);
    for (const auto& n : normals) normal_mat.append_row(n);
    IntMat lin = normals.empty() ? hermite_normal_form(IntMat::identity(s))
                                 : saturation(kernel_basis(normal_mat.transposed()));
    std::size_t ldim = lin.rows();

    auto meet_to_amb = [&](const std::vector<Int>& c) {
        std::vector<Int> v(r);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < r; ++j) v[j] += c[i] * span_meet(i, j);
        return v;
    };

    std::vector<std::vector<Int>> gens;
    for (std::size_t i = 0; i < ldim; ++i) {
        std::vector<Int> v = meet_to_amb(lin.row(i));
        gens.push_back(v);
        for (Int& e : v) e = -e;
        gens.push_back(v);
    }
    if (s > ldim) {
        std::vector<std::vector<Int>> lin_rows = mat_rows(lin);
        std::set<std::vector<Int>> candidates;
        for_subsets(normals.size(), s - ldim - 1, [&](const std::vector<std::size_t>& idx) {
            QMat sys;
            for (std::size_t i : idx) {
                QVec row(s);
                for (std::size_t j = 0; j < s; ++j) row[j] = Rat(normals[i][j]);
                sys.push_back(std::move(row));
            }
            for (const auto& l : lin_rows) {
                QVec row(s);
                for (std::size_t j = 0; j < s; ++j) row[j] = Rat(l[j]);
                sys.push_back(std::move(row));
            }
            QMat ker = rational_right_kernel(sys, s);
            if (ker.size() != 1) return;
            std::vector<Int> cand = primitive_vector(ker[0]);
            for (int dir = 0; dir < 2; ++dir) {
                bool feasible = true;
                for (const auto& n : normals)
                    if (idot(n, cand) < 0) {
                        feasible = false;
                        break;
                    }
                if (feasible) candidates.insert(cand);
                for (Int& e : cand) e = -e;
            }
        });
        for (const auto& c : candidates) gens.push_back(meet_to_amb(c));
    }
    return RationalCone::from_generators(r, gens);
}

bool cone_equals(const RationalCone& a, const RationalCone& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.span_ == b.span_ &&
           a.normals_span_ == b.normals_span_;
}

bool cone_subset(const RationalCone& a, const RationalCone& b) {
    if (a.ambient_dim_ != b.ambient_dim_) throw Error("cone_subset: ambient dimension mismatch");
    for (const auto& g : b.generators())
        if (!a.contains(g)) return false;
    return true;
}

bool is_face_of(const RationalCone& f, const RationalCone& c) {
    if (f.ambient_dim_ != c.ambient_dim_) throw Error("is_face_of: ambient dimension mismatch");
    if (!cone_subset(c, f)) return false;
    if (cone_equals(f, c)) return true;
    // tight normals of c on all of f
    std::vector<std::vector<Int>> tight;
    auto fgens = f.generators();
    if (fgens.empty()) {
        // the zero cone is a face iff c is pointed
        return c.is_pointed();
    }
    for (const auto& n : c.normals_amb_) {
        bool all_zero = true;
        for (const auto& g : fgens)
            if (idot(n, g) != 0) {
                all_zero = false;
                break;
            }
        if (all_zero) tight.push_back(n);
    }
    if (tight.empty()) return false;  // f proper subset with no supporting facet
    // g = c /\ {tight normals = 0}
    IntMat tight_mat(0, c.ambient_dim_);
    for (const auto& n : tight) tight_mat.append_row(n);
    IntMat sub = saturation(kernel_basis(tight_mat.transposed()));
    std::vector<std::vector<Int>> sub_gens;
    for (std::size_t i = 0; i < sub.rows(); ++i) {
        std::vector<Int> v = sub.row(i);
        sub_gens.push_back(v);
        for (Int& e : v) e = -e;
        sub_gens.push_back(v);
    }
    RationalCone subspace = RationalCone::from_generators(c.ambient_dim_, sub_gens);
    return cone_equals(f, intersect(c, subspace));
}

}  // namespace iq
