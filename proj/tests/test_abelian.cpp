#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iq/abelian.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace iq;

namespace {

IntMat mat(std::vector<std::vector<Int>> rows) { return IntMat::from_rows(rows); }

void check_smith(const IntMat& m) {
    SmithResult r = smith_normal_form(m);
    CHECK(r.u * m * r.v == r.s);
    CHECK(abs(determinant(r.u)) == 1);
    CHECK(abs(determinant(r.v)) == 1);
    CHECK(r.v * r.v_inv == IntMat::identity(m.cols()));
    std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t k = 0; k + 1 < n; ++k) {
        CHECK(r.s(k, k) >= 0);
        if (r.s(k, k) != 0) CHECK(r.s(k + 1, k + 1) % r.s(k, k) == 0);
        if (r.s(k, k) == 0) CHECK(r.s(k + 1, k + 1) == 0);
    }
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j) CHECK(r.s(i, j) == 0);
}

}  // namespace

TEST_CASE("smith normal form on the stated examples") {
    SmithResult r = smith_normal_form(mat({{2, 0}, {0, 3}}));
    CHECK(r.s(0, 0) == 1);
    CHECK(r.s(1, 1) == 6);
    check_smith(mat({{2, 0}, {0, 3}}));

    SmithResult id = smith_normal_form(IntMat::identity(3));
    for (std::size_t i = 0; i < 3; ++i) CHECK(id.s(i, i) == 1);

    SmithResult z = smith_normal_form(mat({{0}}));
    CHECK(z.s(0, 0) == 0);
}

TEST_CASE("smith normal form randomized transform checks") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int it = 0; it < 60; ++it) {
        std::size_t rows = 1 + it % 4, cols = 1 + (it / 4) % 4;
        IntMat m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
        check_smith(m);
    }
}

TEST_CASE("hermite normal form is a normal form") {
    // different generating sets of the same lattice
    IntMat a = hermite_normal_form(mat({{2, 0}, {0, 2}, {1, 1}}));
    IntMat b = hermite_normal_form(mat({{1, 1}, {1, -1}}));
    CHECK(a == b);
    CHECK(a.rows() == 2);
    CHECK(lattice_contains(a, {Int(1), Int(1)}));
    CHECK(lattice_contains(a, {Int(2), Int(0)}));
    CHECK_FALSE(lattice_contains(a, {Int(1), Int(0)}));
}

TEST_CASE("kernel and saturation") {
    // kernel of x -> x * [[1],[1]] is spanned by (1,-1)
    IntMat k = kernel_basis(mat({{1}, {1}}));
    CHECK(k.rows() == 1);
    CHECK(((k(0, 0) == 1 && k(0, 1) == -1) || (k(0, 0) == -1 && k(0, 1) == 1)));

    IntMat sat = saturation(mat({{2, 0}, {0, 3}}));
    CHECK(sat == IntMat::identity(2));
    IntMat sat2 = saturation(mat({{2, 4}}));
    CHECK(sat2.rows() == 1);
    CHECK(sat2(0, 0) == 1);
    CHECK(sat2(0, 1) == 2);
}

TEST_CASE("subgroup from generators: stated examples") {
    FgAbelianGroup z2(2);
    auto e = [&](long a, long b) { return make_element(z2, {Int(a), Int(b)}); };

    CHECK(subgroup_from_generators(z2, {e(1, 0), e(0, 1)}).is_full());

    Subgroup s = subgroup_from_generators(z2, {e(0, 1), e(2, -1)});
    CHECK_FALSE(s.is_full());
    CHECK(s.index_in_ambient() == 2);
    CHECK(s.lattice() == hermite_normal_form(mat({{0, 1}, {2, 0}})));

    FgAbelianGroup z_z2(1, {Int(2)});
    Subgroup s2 = subgroup_from_generators(z_z2, {make_element(z_z2, {Int(1)}, {Int(0)})});
    CHECK(s2.index_in_ambient() == 2);
}

TEST_CASE("subgroup generation is order independent and idempotent") {
    FgAbelianGroup z3(3);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int it = 0; it < 40; ++it) {
        std::vector<GroupElement> gens;
        for (int g = 0; g < 3; ++g)
            gens.push_back(make_element(z3, {Int(d(rng)), Int(d(rng)), Int(d(rng))}));
        Subgroup s = subgroup_from_generators(z3, gens);
        std::shuffle(gens.begin(), gens.end(), rng);
        CHECK(subgroup_from_generators(z3, gens) == s);
        // regenerate from the basis rows of the result
        std::vector<GroupElement> basis;
        for (std::size_t i = 0; i < s.lattice().rows(); ++i) {
            auto row = s.lattice().row(i);
            basis.push_back(make_element(z3, row));
        }
        CHECK(subgroup_from_generators(z3, basis) == s);
    }
}

TEST_CASE("subgroup membership matches bounded brute force") {
    FgAbelianGroup z2(2);
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int it = 0; it < 20; ++it) {
        std::vector<GroupElement> gens;
        for (int g = 0; g < 2; ++g) gens.push_back(make_element(z2, {Int(d(rng)), Int(d(rng))}));
        Subgroup s = subgroup_from_generators(z2, gens);
        // brute-force span; the coefficient box covers every point of the
        // +-6 test box (Cramer bound: |c| <= 6*3*2 for entries up to 3)
        std::set<std::pair<long, long>> span;
        for (long c1 = -40; c1 <= 40; ++c1)
            for (long c2 = -40; c2 <= 40; ++c2) {
                Int x = c1 * gens[0].free_part[0] + c2 * gens[1].free_part[0];
                Int y = c1 * gens[0].free_part[1] + c2 * gens[1].free_part[1];
                span.insert({x.get_si(), y.get_si()});
            }
        for (long x = -6; x <= 6; ++x)
            for (long y = -6; y <= 6; ++y) {
                bool brute = span.count({x, y}) > 0;
                bool impl = s.contains(make_element(z2, {Int(x), Int(y)}));
                // the brute-force box always suffices for these small inputs
                CHECK(brute == impl);
            }
    }
}

TEST_CASE("subgroup intersection: stated examples and box oracle") {
    FgAbelianGroup z2(2);
    auto e = [&](long a, long b) { return make_element(z2, {Int(a), Int(b)}); };
    Subgroup full = Subgroup::full(z2);
    CHECK(subgroup_intersection(full, full) == full);

    Subgroup a = subgroup_from_generators(z2, {e(1, 0), e(0, 2)});
    Subgroup b = subgroup_from_generators(z2, {e(2, 0), e(0, 1)});
    Subgroup ab = subgroup_intersection(a, b);
    CHECK(ab.lattice() == hermite_normal_form(mat({{2, 0}, {0, 2}})));
    for (long x = -10; x <= 10; ++x)
        for (long y = -10; y <= 10; ++y) {
            GroupElement v = e(x, y);
            CHECK(ab.contains(v) == (a.contains(v) && b.contains(v)));
        }

    // absorption: B inside A
    Subgroup b2 = subgroup_from_generators(z2, {e(2, 0), e(0, 4)});
    CHECK(subgroup_intersection(a, b2) == b2);

    // commutative, associative on random triples
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int it = 0; it < 15; ++it) {
        auto rnd = [&]() {
            return subgroup_from_generators(
                z2, {e(d(rng), d(rng)), e(d(rng), d(rng))});
        };
        Subgroup x = rnd(), y = rnd(), z = rnd();
        CHECK(subgroup_intersection(x, y) == subgroup_intersection(y, x));
        CHECK(subgroup_intersection(subgroup_intersection(x, y), z) ==
              subgroup_intersection(x, subgroup_intersection(y, z)));
        CHECK(subgroup_intersection(x, x) == x);
    }
}

TEST_CASE("generates_group") {
    FgAbelianGroup z2(2);
    auto e = [&](long a, long b) { return make_element(z2, {Int(a), Int(b)}); };
    CHECK(generates_group(z2, {e(1, 0), e(0, 1)}));
    CHECK_FALSE(generates_group(z2, {e(0, 1), e(2, -1)}));
    CHECK(generates_group(z2, {e(0, 1), e(2, 1), e(1, 1)}));
    CHECK_FALSE(generates_group(z2, {}));
    CHECK(generates_group(FgAbelianGroup(0), {}));
}

TEST_CASE("max_divisor") {
    FgAbelianGroup z2(2), z1(1);
    CHECK(max_divisor(z2, make_element(z2, {Int(4), Int(3)})) == 1);
    CHECK(max_divisor(z2, make_element(z2, {Int(2), Int(2)})) == 2);
    CHECK(max_divisor(z1, make_element(z1, {Int(3)})) == 3);
    CHECK_THROWS_AS(max_divisor(z1, make_element(z1, {Int(0)})), Error);

    // with torsion: w = (4, 2~) in Z + Z/4: q=4 needs 4x = 2 mod 4 (no),
    // q=2 needs 2x = 2 mod 4 (x=1)
    FgAbelianGroup g(1, {Int(4)});
    CHECK(max_divisor(g, make_element(g, {Int(4)}, {Int(2)})) == 2);
    // divisibility witness: (4,2~) = 2*(2,1~)
    CHECK(max_divisor(g, make_element(g, {Int(4)}, {Int(0)})) == 4);
}

TEST_CASE("quotient presentation") {
    // Z^2 / <(2,0),(0,3)> = Z/2 + Z/3 = Z/6
    QuotientPresentation p = quotient_group(mat({{2, 0}, {0, 3}}), 2);
    CHECK(p.group.rank == 0);
    REQUIRE(p.group.torsion.size() == 1);
    CHECK(p.group.torsion[0] == 6);
    // images generate and satisfy the relations
    CHECK(generates_group(p.group, p.images));
    CHECK(scale(p.group, 2, p.images[0]).is_zero());
    CHECK(scale(p.group, 3, p.images[1]).is_zero());

    // Z^3 / <(1,0,0)> = Z^2
    QuotientPresentation p2 = quotient_group(mat({{1, 0, 0}}), 3);
    CHECK(p2.group.rank == 2);
    CHECK(p2.group.torsion.empty());
    CHECK(p2.images[0].is_zero());
}
