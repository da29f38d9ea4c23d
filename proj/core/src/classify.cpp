#include "iq/classify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace iq {

namespace {

const FgAbelianGroup kZ1(1);
const FgAbelianGroup kZ2(2);
const FgAbelianGroup kZ3(3);

GroupElement z2(long x, long y) { return make_element(kZ2, {Int(x), Int(y)}); }
GroupElement z3(long x, long y, long z) { return make_element(kZ3, {Int(x), Int(y), Int(z)}); }

// nondecreasing sequences of the given length with entries in [lo, hi]
std::vector<std::vector<long>> sorted_tuples(std::size_t len, long lo, long hi) {
    std::vector<std::vector<long>> out;
    if (hi < lo) {
        if (len == 0) out.push_back({});
        return out;
    }
    std::vector<long> cur;
    auto rec = [&](auto&& self, long min_v) -> void {
        if (cur.size() == len) {
            out.push_back(cur);
            return;
        }
        for (long v = min_v; v <= hi; ++v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, lo);
    return out;
}

void check(bool cond, const std::string& what) {
    if (!cond) throw Error("classification cross-validation failed: " + what);
}

}  // namespace

std::string ConstellationP2::label() const {
    std::ostringstream os;
    os << "type=" << type << " n=" << n << " m=" << m << " alpha=" << alpha;
    if (type == 4) os << " a=" << a;
    if (!a_list.empty()) {
        os << " params=";
        for (std::size_t i = 0; i < a_list.size(); ++i) os << (i ? "," : "") << a_list[i];
    }
    return os.str();
}

GradedSetup p2_setup(const ConstellationP2& c) {
    std::vector<GroupElement> degs;
    std::size_t q = c.n % 2 == 0 ? c.n : c.n - 1;
    std::size_t t = c.n - q;
    switch (c.type) {
        case 1: {
            for (std::size_t i = 0; i < c.n; ++i) degs.push_back(z2(1, 0));
            for (long aj : c.a_list) degs.push_back(z2(aj, 1));
            break;
        }
        case 2: {
            degs.push_back(z2(0, 1));
            degs.push_back(z2(c.alpha, 1));
            for (long b : c.a_list) {
                degs.push_back(z2(b, 1));
                degs.push_back(z2(c.alpha - b, 1));
            }
            if (t == 1) degs.push_back(z2(c.alpha / 2, 1));
            for (std::size_t j = 0; j < c.m; ++j) degs.push_back(z2(1, 0));
            break;
        }
        case 3: {
            degs.push_back(z2(0, 1));
            degs.push_back(z2(2, 1));
            for (std::size_t i = 2; i < c.n; ++i) degs.push_back(z2(1, 1));
            for (std::size_t j = 0; j < c.m; ++j) degs.push_back(z2(1, 0));
            break;
        }
        case 4: {
            for (std::size_t p = 0; p < c.n / 2; ++p) {
                degs.push_back(z2(1, 0));
                degs.push_back(z2(c.a, 1));
            }
            for (long aj : c.a_list) degs.push_back(z2(aj, 1));
            break;
        }
        default:
            throw Error("p2_setup: unknown type");
    }
    return GradedSetup(kZ2, std::move(degs), q, t, c.m);
}

RationalCone p2_tau(const ConstellationP2& c) {
    if (c.type == 3) return RationalCone::from_generators(2, {{Int(1), Int(1)}, {Int(2), Int(1)}});
    return RationalCone::from_generators(2, {{Int(1), Int(0)}, {Int(c.alpha), Int(1)}});
}

GroupElement p2_canonical_ample(const ConstellationP2& c) {
    if (c.type == 3) return z2(3, 2);
    return z2(c.alpha + 1, 1);
}

std::string to_string(FanoTableEntry e) {
    switch (e) {
        case FanoTableEntry::Fano: return "Fano";
        case FanoTableEntry::TrulyAlmostFano: return "truly almost Fano";
        case FanoTableEntry::Neither: return "neither";
    }
    return "?";
}

FanoTableEntry fano_table_predicate(const ConstellationP2& c) {
    Int n(c.n), m(c.m), alpha(c.alpha);
    switch (c.type) {
        case 1: {
            Int sum = 0;
            for (long aj : c.a_list) sum += aj;
            Int lhs = m * alpha, rhs = n - 2 + sum;
            if (lhs < rhs) return FanoTableEntry::Fano;
            if (lhs == rhs) return FanoTableEntry::TrulyAlmostFano;
            return FanoTableEntry::Neither;
        }
        case 2: {
            Int lhs = (n - 2) * alpha, rhs = 2 * m;
            if (lhs < rhs) return FanoTableEntry::Fano;
            if (lhs == rhs) return FanoTableEntry::TrulyAlmostFano;
            return FanoTableEntry::Neither;
        }
        case 3: {
            if (n - 2 > m) return FanoTableEntry::Fano;
            if (n - 2 == m) return FanoTableEntry::TrulyAlmostFano;
            return FanoTableEntry::Neither;
        }
        case 4: {
            Int sum = 0;
            for (long aj : c.a_list) sum += aj;
            if (c.a == c.alpha) {  // w_2 = (alpha,1) row
                Int lhs = m * alpha, rhs = (n - 2) / 2 + sum;
                if (lhs < rhs) return FanoTableEntry::Fano;
                if (lhs == rhs) return FanoTableEntry::TrulyAlmostFano;
            }
            // u_1 = ... = u_m = (1,1), w_2 = (0,1) row
            if (c.a == 0 && c.m >= 1 && c.alpha == 1) {
                bool all_one = true;
                for (long aj : c.a_list)
                    if (aj != 1) all_one = false;
                if (all_one) return FanoTableEntry::TrulyAlmostFano;
            }
            return FanoTableEntry::Neither;
        }
        default:
            throw Error("fano_table_predicate: unknown type");
    }
}

namespace {

// canonical Type-4 split of the degree multiset {a x n/2} + a_list: prefer
// putting (alpha,1) on the even w-block, then (0,1), then the largest value
bool type4_is_canonical(std::size_t half_n, long a, const std::vector<long>& list) {
    std::map<long, std::size_t> mult;
    mult[a] += half_n;
    for (long v : list) ++mult[v];
    long alpha = a;
    for (long v : list) alpha = std::max(alpha, v);
    std::vector<long> candidates;
    if (mult.count(alpha) && mult[alpha] >= half_n) candidates.push_back(alpha);
    if (alpha != 0 && mult.count(0) && mult[0] >= half_n) candidates.push_back(0);
    for (auto it = mult.rbegin(); it != mult.rend(); ++it)
        if (it->second >= half_n && it->first != alpha && it->first != 0)
            candidates.push_back(it->first);
    return !candidates.empty() && candidates.front() == a;
}

}  // namespace

std::vector<ConstellationP2> picard2_constellations(std::size_t dim, long alpha_max) {
    if (dim < 3) throw Error("picard2_constellations: dimension must be at least 3");
    if (alpha_max < 0) throw Error("picard2_constellations: alpha_max must be nonnegative");
    std::size_t total = dim + 3;
    std::vector<ConstellationP2> out;

    // Type 1: all w_i = (1,0), u_j = (a_j,1) with 0 = a_1 <= ... <= a_m
    for (std::size_t m = 2; m + 5 <= total; ++m) {
        std::size_t n = total - m;
        for (auto& tail : sorted_tuples(m - 1, 0, alpha_max)) {
            ConstellationP2 c;
            c.type = 1;
            c.n = n;
            c.m = m;
            c.a_list = {0};
            c.a_list.insert(c.a_list.end(), tail.begin(), tail.end());
            c.alpha = c.a_list.back();
            out.push_back(std::move(c));
        }
    }

    // Type 2: u_j = (1,0), first pair (0,1),(alpha,1), free pairs by minima
    for (std::size_t m = 2; m + 5 <= total; ++m) {
        std::size_t n = total - m;
        std::size_t free_pairs = (n % 2 == 0 ? n / 2 : (n - 1) / 2) - 1;
        for (long alpha = 0; alpha <= alpha_max; ++alpha) {
            if (n % 2 == 1 && alpha % 2 == 1) continue;  // square needs (alpha/2,1)
            for (auto& mins : sorted_tuples(free_pairs, 0, alpha / 2)) {
                ConstellationP2 c;
                c.type = 2;
                c.n = n;
                c.m = m;
                c.alpha = alpha;
                c.a_list = mins;
                out.push_back(std::move(c));
            }
        }
    }

    // Type 3: fixed degrees, no parameters
    for (std::size_t m = 1; m + 5 <= total; ++m) {
        ConstellationP2 c;
        c.type = 3;
        c.n = total - m;
        c.m = m;
        c.alpha = 0;
        out.push_back(std::move(c));
    }

    // Type 4: n even, pairs (1,0),(a,1), u_j = (a_j,1); (alpha,1) and (0,1)
    // must occur among the degrees
    for (std::size_t n = 6; n <= total; n += 2) {
        std::size_t m = total - n;
        for (long a = 0; a <= alpha_max; ++a) {
            for (auto& list : sorted_tuples(m, 0, alpha_max)) {
                long lo = a, hi = a;
                for (long v : list) {
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
                if (lo != 0) continue;  // (0,1) must occur
                if (!type4_is_canonical(n / 2, a, list)) continue;
                ConstellationP2 c;
                c.type = 4;
                c.n = n;
                c.m = m;
                c.a = a;
                c.alpha = hi;
                c.a_list = list;
                out.push_back(std::move(c));
            }
        }
    }

    std::sort(out.begin(), out.end(), [](const ConstellationP2& x, const ConstellationP2& y) {
        return std::tie(x.type, x.n, x.m, x.alpha, x.a, x.a_list) <
               std::tie(y.type, y.n, y.m, y.alpha, y.a, y.a_list);
    });
    return out;
}

std::vector<Picard2Item> enumerate_picard2(std::size_t dim, long alpha_max, FanoFilter filter) {
    std::vector<Picard2Item> out;
    for (const ConstellationP2& c : picard2_constellations(dim, alpha_max)) {
        GradedSetup setup = p2_setup(c);
        QuadricVariety x(setup, p2_canonical_ample(c));
        check(x.is_smooth(), c.label() + ": not smooth");
        check(x.picard_number() == 2, c.label() + ": Picard number differs from 2");
        check(x.group().torsion.empty(), c.label() + ": class group has torsion");
        check(cone_equals(x.semiample_cone(), p2_tau(c)),
              c.label() + ": semiample cone differs from tau_X");
        if (filter != FanoFilter::All) {
            FanoTag tag = x.fano_status().tag;
            bool keep = filter == FanoFilter::FanoOnly
                            ? tag == FanoTag::Fano
                            : (tag == FanoTag::Fano || tag == FanoTag::TrulyAlmostFano);
            if (!keep) continue;
        }
        out.push_back(Picard2Item{c, std::move(x)});
    }
    return out;
}

std::vector<Picard1Item> enumerate_picard1(std::size_t dim) {
    if (dim < 3) throw Error("enumerate_picard1: dimension must be at least 3");
    std::vector<Picard1Item> out;
    std::size_t total = dim + 2;
    for (std::size_t n = 5; n <= total; ++n) {
        std::size_t m = total - n;
        std::size_t q = n % 2 == 0 ? n : n - 1;
        std::vector<GroupElement> degs(total, make_element(kZ1, {Int(1)}));
        GradedSetup setup(kZ1, std::move(degs), q, n - q, m);
        QuadricVariety x(setup);
        check(x.picard_number() == 1, "Picard-number-1 item has higher rank");
        check(x.is_smooth() == (m == 0), "smoothness must hold exactly for m = 0");
        out.push_back(Picard1Item{n, m, std::move(x)});
    }
    return out;
}

std::string ConstellationP3Full::label() const {
    std::ostringstream os;
    os << "n=" << n << " a=" << a << " extras=";
    for (std::size_t i = 0; i < extras.size(); ++i) {
        if (i) os << ",";
        if (extras[i] < 0)
            os << "copy";
        else
            os << extras[i];
    }
    if (extras.empty()) os << "-";
    return os.str();
}

GradedSetup p3_setup(const ConstellationP3Full& c) {
    std::vector<GroupElement> degs;
    long a = c.a;
    degs.push_back(z3(0, 1, 0));
    degs.push_back(z3(1, a - 1, 1));
    degs.push_back(z3(0, 1, 0));
    degs.push_back(z3(1, a - 1, 1));
    degs.push_back(z3(0, 0, 1));
    degs.push_back(z3(1, a, 0));
    degs.push_back(z3(1, 0, 0));
    degs.push_back(z3(0, a, 1));
    for (long e : c.extras) {
        if (e < 0) {
            degs.push_back(z3(0, 1, 0));
            degs.push_back(z3(1, a - 1, 1));
        } else {
            degs.push_back(z3(0, e, 1));
            degs.push_back(z3(1, a - e, 0));
        }
    }
    return GradedSetup(kZ3, std::move(degs), c.n, 0, 0);
}

RationalCone p3_tau(const ConstellationP3Full& c) {
    long a = c.a;
    RationalCone c126 = RationalCone::from_generators(
        3, {{Int(0), Int(1), Int(0)}, {Int(1), Int(a - 1), Int(1)}, {Int(1), Int(a), Int(0)}});
    RationalCone c168 = RationalCone::from_generators(
        3, {{Int(0), Int(1), Int(0)}, {Int(1), Int(a), Int(0)}, {Int(0), Int(a), Int(1)}});
    return intersect(c126, c168);
}

GroupElement p3_canonical_ample(const ConstellationP3Full& c) {
    RationalCone tau = p3_tau(c);
    std::vector<Int> sum(3);
    for (const auto& ray : tau.rays())
        for (std::size_t j = 0; j < 3; ++j) sum[j] += ray[j];
    return make_element(kZ3, std::move(sum));
}

std::vector<Picard3Item> enumerate_full_picard3(std::size_t n_max, long a_max) {
    if (n_max < 8) throw Error("enumerate_full_picard3: n_max must be at least 8");
    if (a_max < 0) throw Error("enumerate_full_picard3: a_max must be nonnegative");
    std::vector<Picard3Item> out;
    for (std::size_t n = 8; n <= n_max; n += 2) {
        std::size_t slots = (n - 8) / 2;
        for (long a = 0; a <= a_max; ++a) {
            for (auto& extras : sorted_tuples(slots, -1, a)) {
                ConstellationP3Full c;
                c.n = n;
                c.a = a;
                c.extras = extras;
                GradedSetup setup = p3_setup(c);
                QuadricVariety x(setup, p3_canonical_ample(c));
                check(x.is_smooth(), c.label() + ": not smooth");
                check(x.picard_number() == 3, c.label() + ": Picard number differs from 3");
                check(cone_equals(x.semiample_cone(), p3_tau(c)),
                      c.label() + ": semiample cone differs from tau_X");
                check(x.fano_status().tag != FanoTag::Fano, c.label() + ": unexpected Fano");
                out.push_back(Picard3Item{std::move(c), std::move(x)});
            }
        }
    }
    return out;
}

std::vector<FullFanoItem> full_fano_smooth(std::size_t dim_max) {
    if (dim_max < 3) throw Error("full_fano_smooth: dimension must be at least 3");
    std::vector<FullFanoItem> out;
    // rho = 1: smooth quadrics V(T_0^2 + ... + T_n^2) in P_n, n >= 4
    for (std::size_t n = 4; n - 1 <= dim_max; ++n) {
        std::size_t s = n + 1;
        std::size_t q = s % 2 == 0 ? s : s - 1;
        std::vector<GroupElement> degs(s, make_element(kZ1, {Int(1)}));
        GradedSetup setup(kZ1, std::move(degs), q, s - q, 0);
        QuadricVariety x(setup);
        check(x.is_smooth(), "rho-1 full Fano item not smooth");
        check(x.fano_status().tag == FanoTag::Fano, "rho-1 item not Fano");
        check(x.picard_number() == 1, "rho-1 item has wrong Picard number");
        out.push_back(FullFanoItem{1, n, std::move(x)});
    }
    // rho = 2: flag varieties V(T_0 S_0 + ... + T_n S_n) in P_n x P_n, n >= 2
    for (std::size_t n = 2; 2 * n - 1 <= dim_max; ++n) {
        std::vector<GroupElement> degs;
        for (std::size_t i = 0; i <= n; ++i) {
            degs.push_back(z2(1, 0));
            degs.push_back(z2(0, 1));
        }
        GradedSetup setup(kZ2, std::move(degs), 2 * n + 2, 0, 0);
        QuadricVariety x(setup);
        check(x.is_smooth(), "flag item not smooth");
        check(x.fano_status().tag == FanoTag::Fano, "flag item not Fano");
        check(x.picard_number() == 2, "flag item has wrong Picard number");
        out.push_back(FullFanoItem{2, n, std::move(x)});
    }
    return out;
}

}  // namespace iq
