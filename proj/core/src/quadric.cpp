#include "iq/quadric.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace iq {

std::size_t Face::popcount() const { return static_cast<std::size_t>(std::popcount(bits)); }

std::vector<std::size_t> Face::indices() const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 64; ++i)
        if (contains(i)) idx.push_back(i);
    return idx;
}

Face Face::from_indices(const std::vector<std::size_t>& idx) {
    Face f;
    for (std::size_t i : idx) f = f.with(i);
    return f;
}

std::string to_string(const Face& f, std::size_t n) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (!f.contains(i)) continue;
        if (!first) os << ",";
        os << (i + 1);
        first = false;
    }
    os << "}";
    return os.str();
}

bool xbar_face(std::size_t q, std::size_t t, std::size_t m, const Face& f) {
    (void)m;
    std::size_t complete_pairs = 0;
    for (std::size_t p = 0; 2 * p + 1 < q; ++p)
        if (f.contains(2 * p) && f.contains(2 * p + 1)) ++complete_pairs;
    std::size_t squares = 0;
    for (std::size_t k = 0; k < t; ++k)
        if (f.contains(q + k)) ++squares;
    if (complete_pairs >= 2) return true;                   // type (i)
    if (complete_pairs >= 1 && squares >= 1) return true;   // type (ii)
    if (squares >= 2) return true;                          // type (iii)
    return complete_pairs == 0 && squares == 0;             // below a type (iv) face
}

std::string to_string(FanoTag t) {
    switch (t) {
        case FanoTag::Fano: return "Fano";
        case FanoTag::TrulyAlmostFano: return "truly almost Fano";
        case FanoTag::NotAlmostFano: return "not almost Fano";
    }
    return "?";
}

std::string to_string(ContractionTag t) {
    switch (t) {
        case ContractionTag::FiberType: return "fiber type";
        case ContractionTag::Divisorial: return "divisorial";
        case ContractionTag::Small: return "small";
        case ContractionTag::Identity: return "identity";
        case ContractionTag::NotSemiample: return "not semiample";
    }
    return "?";
}

namespace {

std::vector<Int> degree_key(const GroupElement& d) {
    std::vector<Int> key = d.free_part;
    key.insert(key.end(), d.tors.begin(), d.tors.end());
    return key;
}

// node budget for the bounded monoid-membership search
constexpr std::size_t kMonoidSearchBudget = 5'000'000;

}  // namespace

std::size_t QuadricVariety::face_limit() {
    if (const char* env = std::getenv("IQ_FACE_LIMIT")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0 && v <= 62) return static_cast<std::size_t>(v);
    }
    return 24;
}

QuadricVariety::QuadricVariety(GradedSetup setup, std::optional<GroupElement> ample)
    : setup_(std::move(setup)),
      eff_(RationalCone::zero(0)),
      mov_(RationalCone::zero(0)),
      sample_(RationalCone::zero(0)),
      pic_(Subgroup::full(setup_.group())) {
    if (setup_.total_vars() > face_limit())
        throw FaceLimitError("face enumeration cap exceeded: n+m = " +
                             std::to_string(setup_.total_vars()) + " > " +
                             std::to_string(face_limit()) + " (override with IQ_FACE_LIMIT)");

    ValidationReport report = validate(setup_);
    if (!report.valid()) {
        std::string msg = "invalid grading:";
        for (const auto& m : report.messages) msg += " " + m + ";";
        throw InvalidGradingError(msg, report);
    }

    eff_ = weight_cone(setup_);
    mov_ = moving_cone(setup_);

    const FgAbelianGroup& K = setup_.group();
    if (ample) {
        u_ = *ample;
        if (u_.free_part.size() != K.rank || u_.tors.size() != K.torsion.size())
            throw AmpleClassError("ample class does not belong to the grading group");
        if (!mov_.relint_contains(u_.free_part))
            throw AmpleClassError("ample class is not in the relative interior of the moving cone");
    } else {
        std::vector<Int> sum(K.rank);
        for (const auto& ray : mov_.rays())
            for (std::size_t j = 0; j < K.rank; ++j) sum[j] += ray[j];
        u_ = make_element(K, std::move(sum));
        if (!mov_.relint_contains(u_.free_part))
            throw AmpleClassError("failed to synthesize an interior ample class");
    }
    u_free_ = u_.free_part;

    // symmetry structure: pair chunks grouped by unordered degree-pair label,
    // S-coordinates grouped by degree
    std::map<std::pair<std::vector<Int>, std::vector<Int>>, std::size_t> group_of;
    for (std::size_t p = 0; 2 * p + 1 < setup_.q(); ++p) {
        std::vector<Int> ka = degree_key(setup_.degree(2 * p));
        std::vector<Int> kb = degree_key(setup_.degree(2 * p + 1));
        bool flip = kb < ka;
        auto label = flip ? std::make_pair(kb, ka) : std::make_pair(ka, kb);
        auto it = group_of.find(label);
        if (it == group_of.end()) {
            it = group_of.emplace(label, pair_groups_.size()).first;
            pair_groups_.push_back(PairGroup{label.first == label.second, {}});
        }
        pair_groups_[it->second].chunks.push_back(PairChunk{p, flip});
    }
    std::map<std::vector<Int>, std::size_t> s_class_of;
    for (std::size_t j = 0; j < setup_.m(); ++j) {
        std::size_t pos = setup_.n() + j;
        std::vector<Int> key = degree_key(setup_.degree(pos));
        auto it = s_class_of.find(key);
        if (it == s_class_of.end()) {
            it = s_class_of.emplace(key, s_classes_.size()).first;
            s_classes_.push_back({});
        }
        s_classes_[it->second].push_back(pos);
    }

    enumerate_cov();

    sample_ = eff_;
    for (const Face& f : cov_reps_) sample_ = intersect(sample_, face_image_cone(f));

    pic_ = Subgroup::full(K);
    for (const Face& f : cov_reps_) pic_ = subgroup_intersection(pic_, face_degree_subgroup(f));
}

bool QuadricVariety::is_xbar_face(const Face& f) const {
    return xbar_face(setup_.q(), setup_.t(), setup_.m(), f);
}

RationalCone QuadricVariety::face_image_cone(const Face& f) const {
    std::vector<std::vector<Int>> gens;
    for (std::size_t i = 0; i < setup_.total_vars(); ++i)
        if (f.contains(i)) gens.push_back(setup_.free_part(i));
    return RationalCone::from_generators(setup_.group().rank, gens);
}

Subgroup QuadricVariety::face_degree_subgroup(const Face& f) const {
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i < setup_.total_vars(); ++i)
        if (f.contains(i)) gens.push_back(setup_.degree(i));
    return subgroup_from_generators(setup_.group(), gens);
}

bool QuadricVariety::is_x_relevant(const Face& f) const {
    return is_xbar_face(f) && face_image_cone(f).relint_contains(u_free_);
}

// Enumerate one face per symmetry orbit. States of a pair chunk: 0 empty,
// 1 canonical-first coordinate, 2 canonical-second coordinate, 3 both; for a
// symmetric label states 1 and 2 coincide (1 is used).
template <typename Fn>
void QuadricVariety::for_each_face_rep(Fn&& fn) const {
    std::size_t t = setup_.t(), q = setup_.q();

    // per pair group: all state count vectors (c0,c1,c2,c3) summing to size
    std::vector<std::vector<std::array<std::size_t, 4>>> group_counts;
    for (const PairGroup& g : pair_groups_) {
        std::vector<std::array<std::size_t, 4>> counts;
        std::size_t sz = g.chunks.size();
        for (std::size_t c0 = 0; c0 <= sz; ++c0)
            for (std::size_t c1 = 0; c0 + c1 <= sz; ++c1)
                for (std::size_t c2 = 0; c0 + c1 + c2 <= sz; ++c2) {
                    if (g.symmetric && c2 > 0) continue;
                    counts.push_back({c0, c1, c2, sz - c0 - c1 - c2});
                }
        group_counts.push_back(std::move(counts));
    }
    // recursive product over pair groups, then t-subsets, then S-class counts
    auto emit_with_s = [&](Face base) {
        std::vector<std::size_t> sc(s_classes_.size());
        for (;;) {
            Face f = base;
            for (std::size_t c = 0; c < s_classes_.size(); ++c)
                for (std::size_t i = 0; i < sc[c]; ++i) f = f.with(s_classes_[c][i]);
            fn(f);
            // odometer over class counts
            std::size_t k = 0;
            while (k < sc.size() && sc[k] == s_classes_[k].size()) {
                sc[k] = 0;
                ++k;
            }
            if (k == sc.size()) break;
            ++sc[k];
        }
    };

    auto build_pairs = [&](auto&& self, std::size_t gi, Face acc) -> void {
        if (gi == pair_groups_.size()) {
            // all subsets of the t-block (degrees there are pairwise distinct)
            for (std::uint64_t tm = 0; tm < (std::uint64_t{1} << t); ++tm) {
                Face f = acc;
                for (std::size_t k = 0; k < t; ++k)
                    if ((tm >> k) & 1u) f = f.with(q + k);
                if (s_classes_.empty())
                    fn(f);
                else
                    emit_with_s(f);
            }
            return;
        }
        const PairGroup& g = pair_groups_[gi];
        for (const auto& counts : group_counts[gi]) {
            Face f = acc;
            std::size_t chunk_at = 0;
            for (int state = 0; state < 4; ++state) {
                for (std::size_t rep = 0; rep < counts[state]; ++rep) {
                    const PairChunk& ch = g.chunks[chunk_at++];
                    std::size_t first = 2 * ch.index + (ch.flipped ? 1 : 0);
                    std::size_t second = 2 * ch.index + (ch.flipped ? 0 : 1);
                    if (state == 1) f = f.with(first);
                    if (state == 2) f = f.with(second);
                    if (state == 3) f = f.with(first).with(second);
                }
            }
            self(self, gi + 1, f);
        }
    };
    Face empty;
    build_pairs(build_pairs, 0, empty);
}

std::vector<Face> QuadricVariety::orbit_of(const Face& f) const {
    std::size_t t = setup_.t(), q = setup_.q();
    std::vector<Face> acc{Face{}};

    // pair groups: redistribute the multiset of chunk states
    for (const PairGroup& g : pair_groups_) {
        std::array<std::size_t, 4> counts{0, 0, 0, 0};
        for (const PairChunk& ch : g.chunks) {
            std::size_t first = 2 * ch.index + (ch.flipped ? 1 : 0);
            std::size_t second = 2 * ch.index + (ch.flipped ? 0 : 1);
            bool b1 = f.contains(first), b2 = f.contains(second);
            int state = b1 && b2 ? 3 : b1 ? 1 : b2 ? 2 : 0;
            if (g.symmetric && state == 2) state = 1;
            ++counts[state];
        }
        std::vector<Face> exts;
        std::vector<int> assignment(g.chunks.size());
        auto rec = [&](auto&& self, std::size_t pos, std::array<std::size_t, 4> left) -> void {
            if (pos == g.chunks.size()) {
                std::vector<Face> partials{Face{}};
                for (std::size_t i = 0; i < g.chunks.size(); ++i) {
                    const PairChunk& ch = g.chunks[i];
                    std::size_t first = 2 * ch.index + (ch.flipped ? 1 : 0);
                    std::size_t second = 2 * ch.index + (ch.flipped ? 0 : 1);
                    int st = assignment[i];
                    std::vector<Face> next;
                    for (const Face& p : partials) {
                        if (st == 0) next.push_back(p);
                        if (st == 3) next.push_back(p.with(first).with(second));
                        if (st == 1) {
                            next.push_back(p.with(first));
                            if (g.symmetric) next.push_back(p.with(second));
                        }
                        if (st == 2) next.push_back(p.with(second));
                    }
                    partials = std::move(next);
                }
                exts.insert(exts.end(), partials.begin(), partials.end());
                return;
            }
            for (int st = 0; st < 4; ++st) {
                if (left[st] == 0) continue;
                assignment[pos] = st;
                auto l2 = left;
                --l2[st];
                self(self, pos + 1, l2);
            }
        };
        rec(rec, 0, counts);
        std::vector<Face> merged;
        for (const Face& a : acc)
            for (const Face& e : exts) merged.push_back(Face{a.bits | e.bits});
        acc = std::move(merged);
    }

    // t-block bits are fixed
    Face tpart;
    for (std::size_t k = 0; k < t; ++k)
        if (f.contains(q + k)) tpart = tpart.with(q + k);
    for (Face& a : acc) a.bits |= tpart.bits;

    // S classes: all position subsets of the same size
    for (const auto& cls : s_classes_) {
        std::size_t cnt = 0;
        for (std::size_t pos : cls)
            if (f.contains(pos)) ++cnt;
        std::vector<Face> subsets;
        std::vector<std::size_t> pick;
        auto rec = [&](auto&& self, std::size_t start, std::size_t need) -> void {
            if (need == 0) {
                Face s;
                for (std::size_t pos : pick) s = s.with(pos);
                subsets.push_back(s);
                return;
            }
            for (std::size_t i = start; i + need <= cls.size(); ++i) {
                pick.push_back(cls[i]);
                self(self, i + 1, need - 1);
                pick.pop_back();
            }
        };
        rec(rec, 0, cnt);
        std::vector<Face> merged;
        for (const Face& a : acc)
            for (const Face& s : subsets) merged.push_back(Face{a.bits | s.bits});
        acc = std::move(merged);
    }

    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    return acc;
}

void QuadricVariety::enumerate_cov() {
    std::vector<Face> reps;
    for_each_face_rep([&](const Face& f) { reps.push_back(f); });
    std::sort(reps.begin(), reps.end(), [](const Face& a, const Face& b) {
        auto pa = a.popcount(), pb = b.popcount();
        return pa != pb ? pa < pb : a < b;
    });

    cov_reps_.clear();
    cov_.clear();
    for (const Face& rep : reps) {
        bool dominated = false;
        for (const Face& f : cov_)
            if (f.proper_subset_of(rep) || f == rep) {
                dominated = true;
                break;
            }
        if (dominated) continue;
        if (!is_xbar_face(rep)) continue;
        if (!face_image_cone(rep).relint_contains(u_free_)) continue;
        cov_reps_.push_back(rep);
        std::vector<Face> orbit = orbit_of(rep);
        cov_.insert(cov_.end(), orbit.begin(), orbit.end());
    }
    std::sort(cov_.begin(), cov_.end());
    cov_.erase(std::unique(cov_.begin(), cov_.end()), cov_.end());
}

std::vector<Face> QuadricVariety::all_x_relevant_faces() const {
    std::size_t total = setup_.total_vars();
    if (total > 22) throw Error("all_x_relevant_faces: instance too large for direct enumeration");
    std::vector<Face> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << total); ++bits) {
        Face f{bits};
        if (is_x_relevant(f)) out.push_back(f);
    }
    return out;
}

bool QuadricVariety::is_ample(const GroupElement& w) const {
    for (const Face& f : cov_reps_)
        if (!face_image_cone(f).relint_contains(w.free_part)) return false;
    return true;
}

bool QuadricVariety::ample_formula_degenerate(const GroupElement& w) const {
    return is_ample(w) != sample_.relint_contains(w.free_part);
}

Face QuadricVariety::xbar_singular_locus_face() const {
    Face f;
    for (std::size_t j = 0; j < setup_.m(); ++j) f = f.with(setup_.n() + j);
    return f;
}

std::string QuadricVariety::xbar_singular_locus() const {
    return "V(T_1,...,T_" + std::to_string(setup_.n()) + ")";
}

bool QuadricVariety::is_quasismooth() const {
    for (const Face& f : cov_reps_) {
        bool has_relation_var = false;
        for (std::size_t i = 0; i < setup_.n() && !has_relation_var; ++i)
            if (f.contains(i)) has_relation_var = true;
        if (!has_relation_var) return false;
    }
    return true;
}

bool QuadricVariety::is_locally_factorial() const {
    for (const Face& f : cov_reps_)
        if (!face_degree_subgroup(f).is_full()) return false;
    return true;
}

bool QuadricVariety::piece_is_smooth(const Face& f) const {
    bool has_relation_var = false;
    for (std::size_t i = 0; i < setup_.n() && !has_relation_var; ++i)
        if (f.contains(i)) has_relation_var = true;
    return has_relation_var && face_degree_subgroup(f).is_full();
}

bool QuadricVariety::is_smooth() const { return is_quasismooth() && is_locally_factorial(); }

bool QuadricVariety::is_q_factorial() const { return sample_.dim() == setup_.group().rank; }

GroupElement QuadricVariety::anticanonical_class() const {
    const FgAbelianGroup& K = setup_.group();
    Int coeff = (Int(setup_.q()) - 2) / 2;
    GroupElement acc = scale(K, coeff, setup_.relation_degree());
    for (std::size_t k = 0; k < setup_.t(); ++k) acc = add(K, acc, setup_.degree(setup_.q() + k));
    for (std::size_t j = 0; j < setup_.m(); ++j) acc = add(K, acc, setup_.degree(setup_.n() + j));
    return acc;
}

FanoStatus QuadricVariety::fano_status() const {
    FanoStatus st;
    st.anticanonical = anticanonical_class();
    bool ample = is_ample(st.anticanonical);
    bool nef = sample_.contains(st.anticanonical.free_part);
    st.tag = ample ? FanoTag::Fano : nef ? FanoTag::TrulyAlmostFano : FanoTag::NotAlmostFano;

    bool free_zero = true;
    for (const Int& e : st.anticanonical.free_part)
        if (e != 0) free_zero = false;
    if (!st.anticanonical.is_zero() && !free_zero) {
        st.fano_index = max_divisor(setup_.group(), st.anticanonical);
        st.index_torsion_caveat = !setup_.group().torsion.empty();
    }
    return st;
}

QuadricVariety::MukaiCheck QuadricVariety::mukai_check() const {
    FanoStatus st = fano_status();
    if (!st.fano_index) throw Error("mukai_check: Fano index unavailable");
    MukaiCheck mc;
    mc.lhs = Int(picard_number()) * (*st.fano_index - 1);
    mc.rhs = Int(dimension());
    mc.holds = mc.lhs <= mc.rhs;
    return mc;
}

std::vector<GroupElement> QuadricVariety::bpf_generators(const Face& f) const {
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i < setup_.total_vars(); ++i)
        if (f.contains(i)) gens.push_back(setup_.degree(i));
    return gens;
}

bool QuadricVariety::monoid_contains(const std::vector<GroupElement>& gens,
                                     const GroupElement& w) const {
    const FgAbelianGroup& K = setup_.group();
    if (w.is_zero()) return true;
    if (gens.empty()) return false;

    std::vector<std::vector<Int>> free_gens;
    for (const auto& g : gens) free_gens.push_back(g.free_part);
    RationalCone c = RationalCone::from_generators(K.rank, free_gens);
    if (!c.contains(w.free_part)) return false;

    // strictly positive functional on the pointed cone: sum of facet normals
    std::vector<Int> phi(K.rank);
    for (const auto& n : c.facet_normals())
        for (std::size_t j = 0; j < K.rank; ++j) phi[j] += n[j];
    auto phi_of = [&](const std::vector<Int>& v) {
        Int s = 0;
        for (std::size_t j = 0; j < K.rank; ++j) s += phi[j] * v[j];
        return s;
    };
    for (const auto& g : free_gens)
        if (phi_of(g) <= 0) throw Error("monoid_contains: generator cone is not pointed");

    std::size_t budget = kMonoidSearchBudget;
    auto rec = [&](auto&& self, std::size_t k, const GroupElement& rest) -> bool {
        if (budget-- == 0)
            throw SearchBoundExceededError("monoid membership search exceeded " +
                                           std::to_string(kMonoidSearchBudget) + " nodes");
        if (rest.is_zero()) return true;
        if (k == gens.size()) return false;
        if (!c.contains(rest.free_part)) return false;
        Int cmax = phi_of(rest.free_part) / phi_of(free_gens[k]);
        GroupElement r = rest;
        for (Int cnt = 0; cnt <= cmax; ++cnt) {
            if (self(self, k + 1, r)) return true;
            r = sub(K, r, gens[k]);
        }
        return false;
    };
    return rec(rec, 0, w);
}

bool QuadricVariety::is_bpf_class(const GroupElement& w) const {
    for (const Face& f : cov_reps_)
        if (!monoid_contains(bpf_generators(f), w)) return false;
    return true;
}

bool QuadricVariety::face_monoid_saturated(const Face& f) const {
    const FgAbelianGroup& K = setup_.group();
    if (!K.torsion.empty())
        throw UnsupportedTorsionError("saturation check requires a torsion-free class group");
    std::vector<GroupElement> gens = bpf_generators(f);
    if (gens.empty()) return true;
    std::vector<std::vector<Int>> free_gens;
    for (const auto& g : gens) free_gens.push_back(g.free_part);
    RationalCone c = RationalCone::from_generators(K.rank, free_gens);

    Subgroup lat = subgroup_from_generators(K, gens);
    std::vector<std::vector<Int>> basis;
    for (std::size_t i = 0; i < lat.lattice().rows(); ++i) basis.push_back(lat.lattice().row(i));

    // scale each extreme ray to its minimal lattice representative
    std::vector<std::vector<Int>> scaled;
    for (const auto& ray : c.rays()) {
        std::vector<Rat> rhs(ray.size());
        for (std::size_t j = 0; j < ray.size(); ++j) rhs[j] = Rat(ray[j]);
        auto sol = solve_left_rational(basis, rhs);
        if (!sol) throw Error("face_monoid_saturated: ray escapes the degree lattice span");
        Int mult = 1;
        for (const Rat& x : *sol) mult = lcm(mult, Int(x.get_den()));
        std::vector<Int> s = ray;
        for (Int& e : s) e *= mult;
        scaled.push_back(std::move(s));
    }

    // every Hilbert basis element lies in the zonotope of the scaled rays;
    // enumerate the bounding box and test monoid membership
    std::vector<Int> lo(K.rank), hi(K.rank);
    for (const auto& s : scaled)
        for (std::size_t j = 0; j < K.rank; ++j) {
            if (s[j] < 0) lo[j] += s[j];
            if (s[j] > 0) hi[j] += s[j];
        }
    std::vector<Int> point(K.rank);
    std::size_t budget = kMonoidSearchBudget;
    auto rec = [&](auto&& self, std::size_t j) -> bool {
        if (budget-- == 0)
            throw SearchBoundExceededError("saturation box enumeration exceeded the budget");
        if (j == K.rank) {
            bool zero = true;
            for (const Int& e : point)
                if (e != 0) zero = false;
            if (zero) return true;
            if (!c.contains(point)) return true;
            if (!lat.contains(make_element(K, point))) return true;
            return monoid_contains(gens, make_element(K, point));
        }
        for (Int v = lo[j]; v <= hi[j]; ++v) {
            point[j] = v;
            if (!self(self, j + 1)) return false;
        }
        return true;
    };
    return rec(rec, 0);
}

bool QuadricVariety::bpf_saturated() const {
    for (const Face& f : cov_reps_)
        if (!face_monoid_saturated(f)) return false;
    return true;
}

RationalCone QuadricVariety::chamber(const GroupElement& w) const {
    if (!eff_.contains(w.free_part))
        throw WNotEffectiveError("class is not effective");
    RationalCone acc = eff_;
    for_each_face_rep([&](const Face& f) {
        if (!is_xbar_face(f)) return;
        RationalCone qf = face_image_cone(f);
        if (qf.contains(w.free_part)) acc = intersect(acc, qf);
    });
    return acc;
}

QuadricVariety::ContractionResult QuadricVariety::classify_contraction(
    const GroupElement& w) const {
    ContractionResult res{ContractionTag::NotSemiample, chamber(w)};
    if (cone_equals(res.lambda, sample_)) {
        res.tag = ContractionTag::Identity;
        return res;
    }
    if (!is_face_of(res.lambda, sample_)) return res;
    if (!eff_.relint_contains(w.free_part))
        res.tag = ContractionTag::FiberType;
    else if (!mov_.relint_contains(w.free_part))
        res.tag = ContractionTag::Divisorial;
    else
        res.tag = ContractionTag::Small;
    return res;
}

std::size_t QuadricVariety::dimension() const {
    return setup_.total_vars() - setup_.group().rank - 1;
}

}  // namespace iq
