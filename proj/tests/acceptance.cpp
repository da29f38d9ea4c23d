// Acceptance suite: one check per stated criterion, one PASS/FAIL line each.
#include "iq/classify.hpp"
#include "iq/setup_io.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace iq;

namespace {

int g_failures = 0;

void report(int number, const std::string& what, bool ok, double seconds,
            const std::string& detail = "") {
    std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number, what.c_str(),
                seconds, detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

void run(int number, const std::string& what, double time_limit,
         const std::function<bool(std::string&)>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && time_limit > 0 && secs > time_limit) {
        ok = false;
        detail = "time limit " + std::to_string(time_limit) + "s exceeded";
    }
    report(number, what, ok, secs, detail);
}

// every Picard-number-2 constellation with n <= 9, m <= 4, alpha <= 3
const std::vector<Picard2Item>& grid_picard2() {
    static const std::vector<Picard2Item> grid = [] {
        std::vector<Picard2Item> g;
        for (std::size_t dim = 3; dim <= 10; ++dim)
            for (auto& item : enumerate_picard2(dim, 3)) {
                if (item.constellation.n > 9 || item.constellation.m > 4) continue;
                g.push_back(std::move(item));
            }
        return g;
    }();
    return grid;
}

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    CliResult r;
    std::string cmd = std::string(IQ_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool criterion1(std::string& detail) {
    CliResult r = run_cli("classify --picard 2 --dim 3");
    if (r.exit_code != 0) {
        detail = "cli exited with " + std::to_string(r.exit_code);
        return false;
    }
    if (r.out.find("count=2") == std::string::npos) {
        detail = "expected count=2";
        return false;
    }
    auto items = enumerate_picard2(3, 3);
    if (items.size() != 2) {
        detail = "library census size " + std::to_string(items.size());
        return false;
    }
    const ConstellationP2& a = items[0].constellation;
    const ConstellationP2& b = items[1].constellation;
    if (!(a.type == 3 && a.n == 5 && a.m == 1)) {
        detail = "first item is not Type 3 (n=5,m=1)";
        return false;
    }
    if (!(b.type == 4 && b.n == 6 && b.m == 0 && b.alpha == 0)) {
        detail = "second item is not Type 4 (n=6,m=0,alpha=0)";
        return false;
    }
    for (const auto& item : items) {
        if (!item.variety.is_smooth() || item.variety.picard_number() != 2 ||
            !item.variety.picard_group().is_full()) {
            detail = "census item fails smooth/Pic checks";
            return false;
        }
    }
    return true;
}

bool criterion2(std::string& detail) {
    std::size_t count = 0;
    for (const auto& item : grid_picard2()) {
        const auto& x = item.variety;
        ValidationReport rep = validate(x.setup());
        if (!rep.valid() || !x.is_smooth() || x.picard_number() != 2 ||
            !x.group().torsion.empty() ||
            !cone_equals(x.semiample_cone(), p2_tau(item.constellation))) {
            detail = "fails at " + item.constellation.label();
            return false;
        }
        ++count;
    }
    detail = std::to_string(count) + " constellations";
    return count > 0;
}

bool criterion3(std::string& detail) {
    std::size_t mismatches = 0, count = 0;
    for (const auto& item : grid_picard2()) {
        FanoTableEntry table = fano_table_predicate(item.constellation);
        FanoTag cones = item.variety.fano_status().tag;
        bool match = (table == FanoTableEntry::Fano && cones == FanoTag::Fano) ||
                     (table == FanoTableEntry::TrulyAlmostFano &&
                      cones == FanoTag::TrulyAlmostFano) ||
                     (table == FanoTableEntry::Neither && cones == FanoTag::NotAlmostFano);
        if (!match) {
            ++mismatches;
            if (detail.empty()) detail = "first mismatch at " + item.constellation.label();
        }
        ++count;
    }
    if (mismatches == 0) detail = std::to_string(count) + " constellations, zero mismatches";
    return mismatches == 0;
}

bool criterion4(std::string& detail) {
    for (std::size_t dim = 3; dim <= 8; ++dim) {
        for (const auto& item : enumerate_picard1(dim)) {
            const auto& x = item.variety;
            if (item.m == 0) {
                FanoStatus fs = x.fano_status();
                GroupElement expect =
                    make_element(x.group(), {Int(static_cast<long>(item.n) - 2)});
                if (!x.is_smooth() || !(fs.anticanonical == expect) ||
                    fs.tag != FanoTag::Fano) {
                    detail = "smooth case fails at n=" + std::to_string(item.n);
                    return false;
                }
            } else if (x.is_quasismooth()) {
                detail = "m>0 case is quasismooth at n=" + std::to_string(item.n) +
                         " m=" + std::to_string(item.m);
                return false;
            }
        }
    }
    return true;
}

bool criterion5(std::string& detail) {
    std::size_t count = 0;
    for (const auto& item : enumerate_full_picard3(10, 2)) {
        const auto& x = item.variety;
        if (!x.is_smooth() || x.picard_number() != 3 ||
            !cone_equals(x.semiample_cone(), p3_tau(item.constellation)) ||
            x.fano_status().tag == FanoTag::Fano) {
            detail = "fails at " + item.constellation.label();
            return false;
        }
        ++count;
    }
    detail = std::to_string(count) + " constellations";
    return count > 0;
}

bool criterion6(std::string& detail) {
    std::size_t count = 0;
    for (const auto& item : grid_picard2()) {
        if (!item.variety.bpf_saturated()) {
            detail = "not saturated at " + item.constellation.label();
            return false;
        }
        ++count;
    }
    for (const auto& item : enumerate_full_picard3(10, 2)) {
        if (!item.variety.bpf_saturated()) {
            detail = "not saturated at " + item.constellation.label();
            return false;
        }
        ++count;
    }
    detail = std::to_string(count) + " varieties saturated";
    return count > 0;
}

bool criterion7(std::string& detail) {
    std::size_t count = 0;
    for (const auto& item : grid_picard2()) {
        if (item.variety.dimension() > 8) continue;
        if (item.variety.fano_status().tag != FanoTag::Fano) continue;
        auto mc = item.variety.mukai_check();
        if (!mc.holds || mc.lhs >= mc.rhs) {
            detail = "fails at " + item.constellation.label();
            return false;
        }
        ++count;
    }
    for (std::size_t dim = 3; dim <= 8; ++dim)
        for (const auto& item : enumerate_picard1(dim)) {
            if (item.m != 0) continue;
            auto mc = item.variety.mukai_check();
            if (!mc.holds) {
                detail = "fails at picard-1 n=" + std::to_string(item.n);
                return false;
            }
            ++count;
        }
    detail = std::to_string(count) + " Fano varieties";
    return count > 0;
}

QuadraticForm scramble_base(std::size_t q, std::size_t t) {
    const FgAbelianGroup kZ1(1);
    auto z1 = [&](long a) { return make_element(kZ1, {Int(a)}); };
    QuadraticForm f;
    if (q == 4 && t == 0) {
        f.group = kZ1;
        f.num_vars = 6;
        f.degrees.assign(6, z1(1));
        f.set_coefficient(0, 1, 1);
        f.set_coefficient(2, 3, 1);
    } else if (q == 4 && t == 1) {
        f.group = kZ1;
        f.num_vars = 6;
        f.degrees.assign(6, z1(1));
        f.set_coefficient(0, 1, 1);
        f.set_coefficient(2, 3, 1);
        f.set_coefficient(4, 4, 1);
    } else if (q == 6 && t == 0) {
        f.group = kZ1;
        f.num_vars = 8;
        f.degrees.assign(8, z1(1));
        f.set_coefficient(0, 1, 1);
        f.set_coefficient(2, 3, 1);
        f.set_coefficient(4, 5, 1);
    } else if (q == 2 && t == 2) {
        FgAbelianGroup g(1, {Int(2)});
        f.group = g;
        f.num_vars = 6;
        f.degrees = {make_element(g, {Int(0)}, {Int(0)}), make_element(g, {Int(2)}, {Int(0)}),
                     make_element(g, {Int(1)}, {Int(0)}), make_element(g, {Int(1)}, {Int(1)}),
                     make_element(g, {Int(1)}, {Int(0)}), make_element(g, {Int(0)}, {Int(0)})};
        f.set_coefficient(0, 1, 1);
        f.set_coefficient(2, 2, 1);
        f.set_coefficient(3, 3, 1);
    } else if (q == 0 && t == 3) {
        FgAbelianGroup g(1, {Int(2), Int(2)});
        f.group = g;
        f.num_vars = 4;
        f.degrees = {make_element(g, {Int(1)}, {Int(0), Int(0)}),
                     make_element(g, {Int(1)}, {Int(1), Int(0)}),
                     make_element(g, {Int(1)}, {Int(0), Int(1)}),
                     make_element(g, {Int(1)}, {Int(0), Int(0)})};
        f.set_coefficient(0, 0, 1);
        f.set_coefficient(1, 1, 1);
        f.set_coefficient(2, 2, 1);
    } else {
        throw Error("unknown scramble base");
    }
    return f;
}

bool criterion8(std::string& detail) {
    std::mt19937_64 rng(20260810);
    std::size_t runs = 0;
    for (auto [q, t] : std::vector<std::pair<std::size_t, std::size_t>>{
             {4, 0}, {4, 1}, {6, 0}, {2, 2}, {0, 3}}) {
        QuadraticForm base = scramble_base(q, t);
        for (int it = 0; it < 200; ++it) {
            QuadraticForm g = iq::testing::graded_scramble(base, rng);
            NormalFormResult r = normalize_quadric(g);
            if (r.q != q || r.t != t) {
                detail = "scramble of g_(" + std::to_string(q) + "," + std::to_string(t) +
                         ") recovered (" + std::to_string(r.q) + "," + std::to_string(r.t) + ")";
                return false;
            }
            if (Int(r.t) > base.group.two_torsion_order()) {
                detail = "t exceeds |K_2|";
                return false;
            }
            ++runs;
        }
    }
    detail = std::to_string(runs) + " scrambles";
    return runs == 1000;
}

bool criterion9(std::string& detail) {
    std::size_t faces = 0;
    for (std::size_t q = 0; q <= 8; q += 2)
        for (std::size_t t = 0; q + t <= 8; ++t) {
            if (q + t < 3) continue;
            for (std::size_t m = 0; q + t + m <= 8; ++m) {
                std::size_t total = q + t + m;
                for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << total); ++bits) {
                    Face f{bits};
                    if (xbar_face(q, t, m, f) != iq::testing::stratum_nonempty_oracle(q, t, m, f)) {
                        detail = "mismatch at q=" + std::to_string(q) + " t=" + std::to_string(t) +
                                 " m=" + std::to_string(m) + " face bits=" + std::to_string(bits);
                        return false;
                    }
                    ++faces;
                }
            }
        }
    detail = std::to_string(faces) + " faces";
    return faces > 0;
}

bool criterion10(std::string& detail) {
    std::mt19937_64 rng(97);
    std::uniform_int_distribution<int> pick_t(0, 5);
    std::uniform_int_distribution<int> pick_q(0, 1);
    std::uniform_int_distribution<int> entry(0, 2);
    std::size_t fano_samples = 0, attempts = 0;
    std::size_t rank_counts[5] = {0, 0, 0, 0, 0};
    while (fano_samples < 200 && attempts < 100000) {
        ++attempts;
        int tsel = pick_t(rng);
        std::size_t t = tsel >= 5 ? 2 : tsel >= 3 ? 1 : 0;
        // q+t >= 5 is needed for a factorial grading
        std::size_t q = (t == 0 ? 6 : 4) + 2 * static_cast<std::size_t>(pick_q(rng));
        std::size_t max_rank = t == 0 ? 4 : t == 1 ? 3 : 2;
        std::uniform_int_distribution<int> pick_r(1, static_cast<int>(max_rank));
        std::size_t rank = static_cast<std::size_t>(pick_r(rng));
        std::vector<Int> torsion;
        if (t == 2) torsion.push_back(2);
        FgAbelianGroup K(rank, torsion);

        // relation degree: even in each free coordinate when squares exist
        std::vector<Int> mu(rank);
        for (auto& e : mu) e = entry(rng);
        if (t > 0)
            for (auto& e : mu) e *= 2;

        std::vector<GroupElement> degs;
        for (std::size_t p = 0; p < q / 2; ++p) {
            std::vector<Int> w(rank);
            for (auto& e : w) e = entry(rng);
            std::vector<Int> w2(rank);
            for (std::size_t j = 0; j < rank; ++j) w2[j] = mu[j] - w[j];
            degs.push_back(make_element(K, w));
            degs.push_back(make_element(K, w2));
        }
        if (t >= 1) {
            std::vector<Int> nu(rank);
            for (std::size_t j = 0; j < rank; ++j) nu[j] = mu[j] / 2;
            degs.push_back(make_element(K, nu, std::vector<Int>(torsion.size(), 0)));
            if (t == 2) degs.push_back(make_element(K, nu, {Int(1)}));
        }

        try {
            GradedSetup setup(K, degs, q, t, 0);
            // cheap rejections first, full validation before accepting
            if (!is_pointed_grading(setup) || !is_almost_free(setup)) continue;
            GroupElement mk = scale(K, (Int(q) - 2) / 2, setup.relation_degree());
            for (std::size_t k = 0; k < t; ++k) mk = add(K, mk, setup.degree(q + k));
            RationalCone mov = moving_cone(setup);
            if (mov.dim() != rank || !mov.relint_contains(mk.free_part)) continue;
            if (!validate(setup).valid()) continue;
            QuadricVariety x(setup, mk);  // X(q,t,0,-K)
            if (x.fano_status().tag != FanoTag::Fano) continue;
            ++fano_samples;
            ++rank_counts[rank];
            std::size_t rho = x.picard_number();
            std::size_t bound = t > 1 ? 1 : t == 1 ? 2 : 3;
            if (rho > bound) {
                detail = "rho=" + std::to_string(rho) + " violates the bound for t=" +
                         std::to_string(t);
                return false;
            }
        } catch (const GradingStructureError&) {
            continue;
        }
    }
    detail = std::to_string(fano_samples) + " valid full Fano samples in " +
             std::to_string(attempts) + " attempts (rank counts 1..4: " +
             std::to_string(rank_counts[1]) + "/" + std::to_string(rank_counts[2]) + "/" +
             std::to_string(rank_counts[3]) + "/" + std::to_string(rank_counts[4]) + ")";
    return fano_samples >= 200;
}

}  // namespace

int main() {
    std::setvbuf(stdout, nullptr, _IOLBF, 0);
    run(1, "dimension-3 census via the CLI", 1.0, criterion1);
    run(2, "converse validation grid (n<=9, m<=4, alpha<=3)", 60.0, criterion2);
    run(3, "Fano table equals the cone-based status on the grid", 60.0, criterion3);
    run(4, "Picard-number-1 classification up to dimension 8", 30.0, criterion4);
    run(5, "full Picard-number-3 grid (n<=10, a<=2)", 60.0, criterion5);
    run(6, "base-point-free monoids saturated on all smooth items", 180.0, criterion6);
    run(7, "Mukai inequality on all Fano items up to dimension 8", 60.0, criterion7);
    run(8, "normal-form invariance under 1000 graded scrambles", 60.0, criterion8);
    run(9, "face predicate equals the emptiness oracle (n+m<=8)", 30.0, criterion9);
    run(10, "Picard bounds on 200 sampled full Fano setups", 300.0, criterion10);

    if (g_failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    return g_failures;
}
