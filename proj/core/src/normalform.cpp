#include "iq/normalform.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace iq {

namespace {

using QMat = std::vector<std::vector<Rat>>;

std::size_t q_rank(QMat m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
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

std::vector<Int> degree_key(const GroupElement& d) {
    std::vector<Int> key = d.free_part;
    key.insert(key.end(), d.tors.begin(), d.tors.end());
    return key;
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string var_name(std::size_t i) { return "T" + std::to_string(i + 1); }

std::string linear_combo(const std::vector<std::pair<Rat, std::size_t>>& terms) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, v] : terms) {
        if (c == 0) continue;
        if (!first) os << " + ";
        os << "(" << rat_str(c) << ")*" << var_name(v);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace

void QuadraticForm::set_coefficient(std::size_t i, std::size_t j, const Rat& a) {
    if (i > j) std::swap(i, j);
    if (j >= num_vars) throw Error("QuadraticForm: variable index out of range");
    if (a == 0)
        coefficients.erase({i, j});
    else
        coefficients[{i, j}] = a;
}

GroupElement homogeneity_check(const QuadraticForm& f) {
    if (f.degrees.size() != f.num_vars) throw Error("QuadraticForm: missing degrees");
    if (f.coefficients.empty()) throw ZeroFormError("quadratic form is zero");
    bool have_mu = false;
    GroupElement mu;
    std::pair<std::size_t, std::size_t> first_mono;
    for (const auto& [idx, coeff] : f.coefficients) {
        if (coeff == 0) continue;
        GroupElement d = add(f.group, f.degrees[idx.first], f.degrees[idx.second]);
        if (!have_mu) {
            mu = d;
            first_mono = idx;
            have_mu = true;
        } else if (!(d == mu)) {
            throw NotHomogeneousError(
                "monomials T" + std::to_string(first_mono.first + 1) + "*T" +
                std::to_string(first_mono.second + 1) + " and T" + std::to_string(idx.first + 1) +
                "*T" + std::to_string(idx.second + 1) + " have different degrees");
        }
    }
    if (!have_mu) throw ZeroFormError("quadratic form is zero");
    return mu;
}

NormalFormResult normalize_quadric(const QuadraticForm& f) {
    GroupElement mu = homogeneity_check(f);
    const FgAbelianGroup& K = f.group;

    auto coeff = [&](std::size_t i, std::size_t j) -> Rat {
        if (i > j) std::swap(i, j);
        auto it = f.coefficients.find({i, j});
        return it == f.coefficients.end() ? Rat(0) : it->second;
    };

    // degree classes of the variables that actually appear
    std::vector<bool> support(f.num_vars, false);
    for (const auto& [idx, c] : f.coefficients) {
        if (c == 0) continue;
        support[idx.first] = support[idx.second] = true;
    }
    std::map<std::vector<Int>, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < f.num_vars; ++i)
        if (support[i]) classes[degree_key(f.degrees[i])].push_back(i);

    NormalFormResult res;
    std::vector<std::pair<std::size_t, std::size_t>> pair_slots;  // variable index pairs
    std::vector<GroupElement> pair_degs_first, pair_degs_second;
    std::vector<std::size_t> square_slots;
    std::vector<GroupElement> square_degs;

    std::set<std::vector<Int>> done_class;
    for (const auto& [key, vars] : classes) {
        if (done_class.count(key)) continue;
        const GroupElement& w = f.degrees[vars.front()];
        GroupElement partner = sub(K, mu, w);
        std::vector<Int> partner_key = degree_key(partner);

        if (partner_key == key) {
            // quadratic block: symmetric Gram matrix of the class
            done_class.insert(key);
            std::size_t k = vars.size();
            QMat g(k, std::vector<Rat>(k));
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = a; b < k; ++b) {
                    Rat c = coeff(vars[a], vars[b]);
                    if (a != b) c /= 2;
                    g[a][b] = g[b][a] = c;
                }
            std::vector<bool> alive(k, true);
            std::vector<std::size_t> pivots;
            for (;;) {
                std::size_t piv = k;
                for (std::size_t a = 0; a < k && piv == k; ++a)
                    if (alive[a] && g[a][a] != 0) piv = a;
                if (piv == k) {
                    // no diagonal entry: create one from an off-diagonal term
                    std::size_t a = k, b = k;
                    for (std::size_t x = 0; x < k && a == k; ++x)
                        for (std::size_t y = x + 1; y < k && a == k; ++y)
                            if (alive[x] && alive[y] && g[x][y] != 0) {
                                a = x;
                                b = y;
                            }
                    if (a == k) break;  // block exhausted
                    res.rational_reduction.push_back(
                        var_name(vars[b]) + " -> " + var_name(vars[b]) + " + " + var_name(vars[a]));
                    for (std::size_t x = 0; x < k; ++x) {
                        if (!alive[x]) continue;
                        g[a][x] += g[b][x];
                    }
                    for (std::size_t x = 0; x < k; ++x) {
                        if (!alive[x]) continue;
                        g[x][a] += g[x][b];
                    }
                    continue;
                }
                // complete the square on the pivot
                std::vector<std::pair<Rat, std::size_t>> terms;
                for (std::size_t x = 0; x < k; ++x)
                    if (alive[x] && x != piv && g[piv][x] != 0)
                        terms.push_back({-g[piv][x] / g[piv][piv], vars[x]});
                if (!terms.empty()) {
                    terms.insert(terms.begin(), {Rat(1), vars[piv]});
                    res.rational_reduction.push_back(var_name(vars[piv]) + " -> " +
                                                     linear_combo(terms));
                }
                for (std::size_t x = 0; x < k; ++x) {
                    if (!alive[x] || x == piv) continue;
                    for (std::size_t y = 0; y < k; ++y) {
                        if (!alive[y] || y == piv) continue;
                        g[x][y] -= g[piv][x] * g[piv][y] / g[piv][piv];
                    }
                }
                for (std::size_t x = 0; x < k; ++x) {
                    if (x == piv) continue;
                    g[piv][x] = g[x][piv] = 0;
                }
                alive[piv] = false;
                pivots.push_back(vars[piv]);
            }
            std::size_t r = pivots.size();
            for (std::size_t p = 0; p + 1 < r; p += 2) {
                pair_slots.push_back({pivots[p], pivots[p + 1]});
                pair_degs_first.push_back(w);
                pair_degs_second.push_back(w);
            }
            if (r % 2 == 1) {
                square_slots.push_back(pivots[r - 1]);
                square_degs.push_back(w);
            }
        } else {
            // pairing block between the classes of w and mu - w
            if (!classes.count(partner_key)) {
                // a supported variable with no partner class cannot occur
                throw Error("normalize_quadric: inconsistent block decomposition");
            }
            if (done_class.count(partner_key)) continue;
            done_class.insert(key);
            done_class.insert(partner_key);
            const std::vector<std::size_t>& rows = vars;
            const std::vector<std::size_t>& cols = classes[partner_key];
            std::size_t nr = rows.size(), nc = cols.size();
            QMat b(nr, std::vector<Rat>(nc));
            for (std::size_t a = 0; a < nr; ++a)
                for (std::size_t c = 0; c < nc; ++c) b[a][c] = coeff(rows[a], cols[c]);
            std::vector<bool> row_alive(nr, true), col_alive(nc, true);
            for (;;) {
                std::size_t pa = nr, pb = nc;
                for (std::size_t a = 0; a < nr && pa == nr; ++a)
                    for (std::size_t c = 0; c < nc && pa == nr; ++c)
                        if (row_alive[a] && col_alive[c] && b[a][c] != 0) {
                            pa = a;
                            pb = c;
                        }
                if (pa == nr) break;
                Rat piv = b[pa][pb];
                // psi_ij: normalize the pivot column variable
                std::vector<std::pair<Rat, std::size_t>> tj;
                tj.push_back({1 / piv, cols[pb]});
                for (std::size_t c = 0; c < nc; ++c)
                    if (col_alive[c] && c != pb && b[pa][c] != 0)
                        tj.push_back({-b[pa][c] / piv, cols[c]});
                if (tj.size() > 1 || piv != 1)
                    res.rational_reduction.push_back(var_name(cols[pb]) + " -> " + linear_combo(tj));
                // psi_ji: clear the pivot row variable
                std::vector<std::pair<Rat, std::size_t>> ti;
                ti.push_back({Rat(1), rows[pa]});
                for (std::size_t a = 0; a < nr; ++a)
                    if (row_alive[a] && a != pa && b[a][pb] != 0)
                        ti.push_back({-b[a][pb] / piv, rows[a]});
                if (ti.size() > 1)
                    res.rational_reduction.push_back(var_name(rows[pa]) + " -> " + linear_combo(ti));
                for (std::size_t a = 0; a < nr; ++a) {
                    if (!row_alive[a] || a == pa) continue;
                    for (std::size_t c = 0; c < nc; ++c) {
                        if (!col_alive[c] || c == pb) continue;
                        b[a][c] -= b[a][pb] * b[pa][c] / piv;
                    }
                }
                row_alive[pa] = false;
                col_alive[pb] = false;
                pair_slots.push_back({rows[pa], cols[pb]});
                pair_degs_first.push_back(w);
                pair_degs_second.push_back(partner);
            }
        }
    }

    res.q = 2 * pair_slots.size();
    res.t = square_slots.size();
    res.sing_dim = f.num_vars - res.q - res.t;

    // internal consistency: block ranks must reproduce the full Gram rank
    QMat full(f.num_vars, std::vector<Rat>(f.num_vars));
    for (const auto& [idx, c] : f.coefficients) {
        if (idx.first == idx.second)
            full[idx.first][idx.first] = c;
        else {
            full[idx.first][idx.second] = c / 2;
            full[idx.second][idx.first] = c / 2;
        }
    }
    if (q_rank(full) != res.q + res.t)
        throw Error("normalize_quadric: block rank deviates from the Gram rank");

    std::vector<bool> used(f.num_vars, false);
    for (const auto& [a, b] : pair_slots) {
        res.variable_permutation.push_back(a);
        res.variable_permutation.push_back(b);
        used[a] = used[b] = true;
    }
    for (std::size_t a : square_slots) {
        res.variable_permutation.push_back(a);
        used[a] = true;
    }
    for (std::size_t i = 0; i < f.num_vars; ++i)
        if (!used[i]) res.variable_permutation.push_back(i);

    for (std::size_t p = 0; p < pair_slots.size(); ++p) {
        res.block_degrees.push_back(pair_degs_first[p]);
        res.block_degrees.push_back(pair_degs_second[p]);
    }
    for (std::size_t p = 0; p < square_slots.size(); ++p) res.block_degrees.push_back(square_degs[p]);
    for (std::size_t i = 0; i < f.num_vars; ++i)
        if (!used[i]) res.block_degrees.push_back(f.degrees[i]);

    return res;
}

std::size_t singular_locus_dim(std::size_t s, std::size_t q, std::size_t t) {
    if (q + t > s) throw Error("singular_locus_dim: q+t exceeds the variable count");
    return s - q - t;
}

GradedSetup to_graded_setup(const QuadraticForm& f) {
    NormalFormResult nf = normalize_quadric(f);
    return GradedSetup(f.group, nf.block_degrees, nf.q, nf.t, f.num_vars - nf.q - nf.t);
}

}  // namespace iq
