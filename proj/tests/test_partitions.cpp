#include "doctest.h"
#include "vf/partitions.hpp"

using namespace vf;

TEST_CASE("partition enumeration") {
    CHECK(enum_partitions(0) == std::vector<Partition>{Partition{}});
    CHECK(enum_partitions(4).size() == 5);
    CHECK(enum_partitions(6).size() == 11);
    CHECK(enum_partitions_upto(3).size() == 1 + 1 + 2 + 3);
    for (const auto& p : enum_partitions(5)) CHECK(valid_partition(p));
    CHECK_FALSE(valid_partition({1, 2}));
    CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
    CHECK(cells({2, 1}).size() == 3);
}

TEST_CASE("contents") {
    ParamSample s{2, 3, 5, 0};
    auto c = cells({1, 1});
    CHECK(content(c[0], s) == 0);
    CHECK(content(c[1], s) == 2);  // second row lies along t1
}

TEST_CASE("reverse plane partitions") {
    auto empty = enum_rpp({}, 3);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].size() == 0);
    auto one = enum_rpp({1}, 3);
    REQUIRE(one.size() == 4);
    for (int n = 0; n <= 3; ++n) CHECK(one[n].size() == n);
    int exactly2 = 0;
    for (const auto& r : enum_rpp({1, 1}, 2))
        if (r.size() == 2) {
            ++exactly2;
            CHECK(r.k[0] <= r.k[1]);
        }
    CHECK(exactly2 == 2);
    CHECK_FALSE(valid_rpp(RppConfig{{1, 1}, {2, 0}}));
}

TEST_CASE("plane partitions by volume") {
    std::vector<int> counts(6, 0);
    for (const auto& pp : enum_legged_pp({}, 5)) ++counts[pp.renorm_volume()];
    CHECK(counts == std::vector<int>{1, 1, 3, 6, 13, 24});
    auto mm = macmahon_coeffs(5);
    for (int n = 0; n <= 5; ++n) CHECK(mm[n] == counts[n]);
    int leg0 = 0;
    for (const auto& pp : enum_legged_pp({1}, 0)) leg0 += pp.renorm_volume() == 0;
    CHECK(leg0 == 1);
}

TEST_CASE("legged volume one by brute force") {
    // a single box is addable at (1,0) and (0,1) on top of the leg cylinder, nothing else
    int n = 0;
    for (const auto& pp : enum_legged_pp({1}, 1)) {
        CHECK(valid_lpp(pp));
        n += pp.renorm_volume() == 1;
    }
    CHECK(n == 2);
}

TEST_CASE("slices") {
    LeggedPlanePartition box{{}, {{{0, 0}, 1}}};
    CHECK(slices_of(box) == SliceSeq{{1}});
    LeggedPlanePartition two{{}, {{{0, 0}, 2}, {{1, 0}, 1}}};
    CHECK(slices_of(two) == SliceSeq{{1, 1}, {1}});
    CHECK(first_slice(two) == Partition{1, 1});
    for (const auto& pp : enum_legged_pp({}, 5)) CHECK(from_slices(slices_of(pp)) == pp);
}
