#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iq/classify.hpp"

#include <map>
#include <set>

using namespace iq;

TEST_CASE("dimension-3 census of Picard number two") {
    auto items = enumerate_picard2(3, 3);
    REQUIRE(items.size() == 2);
    CHECK(items[0].constellation.type == 3);
    CHECK(items[0].constellation.n == 5);
    CHECK(items[0].constellation.m == 1);
    CHECK(items[1].constellation.type == 4);
    CHECK(items[1].constellation.n == 6);
    CHECK(items[1].constellation.m == 0);
    CHECK(items[1].constellation.alpha == 0);
    for (const auto& item : items) {
        CHECK(item.variety.is_smooth());
        CHECK(item.variety.picard_number() == 2);
    }
    // the census does not depend on the parameter cap
    CHECK(enumerate_picard2(3, 0).size() == 2);
    CHECK(enumerate_picard2(3, 1).size() == 2);
}

TEST_CASE("fano table predicate: stated examples") {
    ConstellationP2 t3a{3, 5, 1, 0, 0, {}};
    CHECK(fano_table_predicate(t3a) == FanoTableEntry::Fano);
    ConstellationP2 t3b{3, 5, 3, 0, 0, {}};
    CHECK(fano_table_predicate(t3b) == FanoTableEntry::TrulyAlmostFano);
    ConstellationP2 t2{2, 6, 2, 1, 0, {0, 0}};
    CHECK(fano_table_predicate(t2) == FanoTableEntry::TrulyAlmostFano);
}

TEST_CASE("fano table agrees with the cone computation on a small grid") {
    for (std::size_t dim = 3; dim <= 6; ++dim) {
        for (const auto& item : enumerate_picard2(dim, 2)) {
            FanoTableEntry table = fano_table_predicate(item.constellation);
            FanoTag cones = item.variety.fano_status().tag;
            FanoTag expected = table == FanoTableEntry::Fano ? FanoTag::Fano
                               : table == FanoTableEntry::TrulyAlmostFano
                                   ? FanoTag::TrulyAlmostFano
                                   : FanoTag::NotAlmostFano;
            CHECK(cones == expected);
        }
    }
}

TEST_CASE("fano filters") {
    std::size_t all = enumerate_picard2(4, 2).size();
    std::size_t fano = enumerate_picard2(4, 2, FanoFilter::FanoOnly).size();
    std::size_t almost = enumerate_picard2(4, 2, FanoFilter::AlmostFano).size();
    CHECK(fano <= almost);
    CHECK(almost <= all);
    CHECK(fano > 0);
    for (const auto& item : enumerate_picard2(4, 2, FanoFilter::FanoOnly))
        CHECK(item.variety.fano_status().tag == FanoTag::Fano);
}

TEST_CASE("type 2 parity: odd n forces even alpha") {
    for (const auto& item : enumerate_picard2(6, 3)) {
        if (item.constellation.type != 2) continue;
        if (item.constellation.n % 2 == 1) CHECK(item.constellation.alpha % 2 == 0);
    }
}

TEST_CASE("deduplication is sound") {
    for (std::size_t dim = 3; dim <= 6; ++dim) {
        std::set<std::string> labels;
        std::set<std::string> degree_keys;
        for (const auto& item : enumerate_picard2(dim, 3)) {
            CHECK(labels.insert(item.constellation.label()).second);
            // no two items share the same full degree data
            std::string key = std::to_string(item.constellation.type);
            for (const auto& d : item.variety.setup().degrees()) key += " " + to_string(d);
            CHECK(degree_keys.insert(key).second);
            // parameter lists are canonically sorted
            auto lst = item.constellation.a_list;
            CHECK(std::is_sorted(lst.begin(), lst.end()));
        }
    }
    // Type-4 multiset splits: {a=0,list={2}} and {a=2,list={0}} describe the
    // same degree multiset at n=6,m=1; exactly one representative is emitted
    std::size_t seen = 0;
    for (const auto& item : enumerate_picard2(4, 2)) {
        if (item.constellation.type != 4 || item.constellation.n != 6) continue;
        const auto& c = item.constellation;
        std::multiset<long> mset(c.a_list.begin(), c.a_list.end());
        for (std::size_t i = 0; i < c.n / 2; ++i) mset.insert(c.a);
        if (mset == std::multiset<long>{0, 0, 0, 2}) ++seen;
    }
    CHECK(seen == 1);
}

TEST_CASE("picard number one enumeration") {
    auto d3 = enumerate_picard1(3);
    REQUIRE(d3.size() == 1);
    CHECK(d3[0].n == 5);
    CHECK(d3[0].m == 0);
    CHECK(d3[0].variety.is_smooth());

    auto d4 = enumerate_picard1(4);
    REQUIRE(d4.size() == 2);
    CHECK(d4[0].n == 5);
    CHECK(d4[0].m == 1);
    CHECK_FALSE(d4[0].variety.is_smooth());
    CHECK(d4[1].n == 6);
    CHECK(d4[1].m == 0);
    CHECK(d4[1].variety.is_smooth());

    CHECK_THROWS_AS(enumerate_picard1(2), Error);
}

TEST_CASE("full Picard number three enumeration") {
    auto one = enumerate_full_picard3(8, 0);
    REQUIRE(one.size() == 1);
    CHECK(one[0].constellation.n == 8);
    CHECK(one[0].constellation.a == 0);
    CHECK(one[0].variety.picard_number() == 3);

    auto upto10 = enumerate_full_picard3(10, 1);
    std::map<std::pair<std::size_t, long>, std::size_t> counts;
    for (const auto& item : upto10)
        counts[{item.constellation.n, item.constellation.a}]++;
    CHECK(counts[{8, 0}] == 1);
    CHECK(counts[{8, 1}] == 1);
    CHECK(counts[{10, 0}] == 2);  // extra pair: copy of (w1,w2) or c=0
    CHECK(counts[{10, 1}] == 3);  // copy, c=0, c=1

    for (const auto& item : upto10) {
        CHECK(item.variety.is_smooth());
        CHECK(item.variety.picard_number() == 3);
        CHECK(item.variety.fano_status().tag != FanoTag::Fano);
        // -K is a multiple of the relation degree and must not be ample
        GroupElement mk = item.variety.anticanonical_class();
        GroupElement mu = item.variety.relation_degree();
        Int half(static_cast<long>(item.constellation.n / 2 - 1));
        CHECK(mk == scale(item.variety.group(), half, mu));
        CHECK_FALSE(item.variety.is_ample(mk));
    }
    CHECK_THROWS_AS(enumerate_full_picard3(6, 0), Error);
}

TEST_CASE("full smooth Fano list") {
    auto d3 = full_fano_smooth(3);
    REQUIRE(d3.size() == 2);
    CHECK(d3[0].rho == 1);
    CHECK(d3[0].n == 4);
    CHECK(d3[0].variety.dimension() == 3);
    CHECK(d3[1].rho == 2);
    CHECK(d3[1].n == 2);
    CHECK(d3[1].variety.dimension() == 3);

    auto d6 = full_fano_smooth(6);
    for (const auto& item : d6) {
        CHECK(item.variety.is_smooth());
        CHECK(item.variety.fano_status().tag == FanoTag::Fano);
        CHECK(item.variety.picard_number() == item.rho);
        if (item.rho == 1) {
            // classical quadric in P_n: -K = (n-1) * hyperplane class
            FanoStatus fs = item.variety.fano_status();
            CHECK(*fs.fano_index == Int(static_cast<long>(item.n - 1)));
        }
        if (item.rho == 2) {
            FanoStatus fs = item.variety.fano_status();
            CHECK(*fs.fano_index == Int(static_cast<long>(item.n)));
            CHECK(item.variety.mukai_check().holds);
        }
    }
    CHECK_THROWS_AS(full_fano_smooth(2), Error);
}

TEST_CASE("every emitted constellation is factorially graded") {
    for (std::size_t dim = 3; dim <= 5; ++dim)
        for (const auto& item : enumerate_picard2(dim, 2)) {
            auto [ok, tag] = is_factorially_graded(item.variety.setup());
            CHECK(ok);
            CHECK(tag == "q+t>=5");
        }
}
