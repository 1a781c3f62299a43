#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "brauerdm/young.hpp"

using namespace brauerdm;

namespace {

// oracle: count standard tableaux by peeling removable boxes one at a time
long long count_syt_oracle(const Partition& lam, std::map<std::vector<int>, long long>& memo) {
    if (lam.empty()) return 1;
    auto it = memo.find(lam.parts());
    if (it != memo.end()) return it->second;
    long long total = 0;
    for (const Box& b : lam.removable_boxes())
        total += count_syt_oracle(lam.remove_from_row(b.row), memo);
    memo[lam.parts()] = total;
    return total;
}

}  // namespace

TEST_CASE("parse and print") {
    CHECK(Partition::parse("7.7.6.5.3.2").parts() == std::vector<int>{7, 7, 6, 5, 3, 2});
    CHECK(Partition::parse("-").empty());
    CHECK(Partition::parse("-").to_string() == "-");
    CHECK(Partition::parse("4.1").to_string() == "4.1");
    CHECK(Partition(std::vector<int>{3, 2, 0, 0}).to_string() == "3.2");
    CHECK_THROWS_AS(Partition::parse("1.2"), ParseError);
    CHECK_THROWS_AS(Partition::parse("3.x"), ParseError);
    CHECK_THROWS_AS(Partition::parse("0"), ParseError);
}

TEST_CASE("conjugate") {
    CHECK(Partition::parse("4.2.1").conjugate().to_string() == "3.2.1.1");
    CHECK(Partition::parse("-").conjugate().empty());
    for (int m = 0; m <= 9; ++m)
        for (const auto& p : partitions_of(m)) {
            CHECK(p.conjugate().conjugate() == p);
            CHECK(p.conjugate().sum() == p.sum());
        }
}

TEST_CASE("charge") {
    CHECK(charge(2, Box{1, 2}) == -1);
    CHECK(charge(2, Box{2, 2}) == 1);
    CHECK(charge(0, Box{1, 1}) == -1);
    CHECK(charge(-1, Box{3, 1}) == 2);
}

TEST_CASE("removable and addable boxes") {
    Partition lam = Partition::parse("4.2.2.1");
    CHECK(lam.removable_boxes() == std::vector<Box>{{1, 4}, {3, 2}, {4, 1}});
    CHECK(lam.addable_boxes() == std::vector<Box>{{1, 5}, {2, 3}, {4, 2}, {5, 1}});
    CHECK(Partition{}.addable_boxes() == std::vector<Box>{{1, 1}});
    CHECK(Partition{}.removable_boxes().empty());
    // removable and addable boxes interleave by content
    for (const auto& p : partitions_of(8)) {
        auto rem = p.removable_boxes();
        auto add = p.addable_boxes();
        CHECK(add.size() == rem.size() + 1);
        for (size_t i = 0; i < rem.size(); ++i) {
            CHECK(add[i].content() > rem[i].content());
            CHECK(rem[i].content() > add[i + 1].content());
        }
    }
}

TEST_CASE("skew boxes") {
    auto s = skew_boxes(Partition::parse("2.2"), Partition::parse("1.1"));
    CHECK(s == std::vector<Box>{{1, 2}, {2, 2}});
    CHECK_THROWS_AS(skew_boxes(Partition::parse("2"), Partition::parse("1.1")), NotContained);
    CHECK(skew_boxes(Partition::parse("3.1"), Partition::parse("3.1")).empty());
}

TEST_CASE("is_rim") {
    CHECK(is_rim(std::vector<Box>{}));
    CHECK(is_rim(std::vector<Box>{{1, 1}}));
    // L-shaped strip
    CHECK(is_rim(std::vector<Box>{{1, 2}, {2, 2}, {2, 1}}));
    // 2x2 square is a cycle, not a path
    CHECK_FALSE(is_rim(std::vector<Box>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
    // disconnected: domino + far box
    CHECK_FALSE(is_rim(std::vector<Box>{{1, 1}, {1, 2}, {5, 5}}));
    // disconnected path + square has n-1 edges and two endpoints; still not a rim
    CHECK_FALSE(is_rim(std::vector<Box>{{1, 1}, {1, 2}, {4, 4}, {4, 5}, {5, 4}, {5, 5}}));
    // branching T shape
    CHECK_FALSE(is_rim(std::vector<Box>{{1, 1}, {1, 2}, {1, 3}, {2, 2}}));
    // every skew of the form lam / (lam minus a border strip) with path dual graph
    CHECK(is_rim(skew_boxes(Partition::parse("4.4.2"), Partition::parse("3.1.1"))));
}

TEST_CASE("cell label enumeration") {
    auto l2 = cell_labels(2);
    REQUIRE(l2.size() == 3);
    CHECK(l2[0].to_string() == "2");
    CHECK(l2[1].to_string() == "1.1");
    CHECK(l2[2].to_string() == "-");
    auto l4 = cell_labels(4);
    REQUIRE(l4.size() == 8);
    CHECK(l4[0].to_string() == "4");
    CHECK(l4[1].to_string() == "3.1");
    CHECK(l4[2].to_string() == "2.2");
    CHECK(l4[3].to_string() == "2.1.1");
    CHECK(l4[4].to_string() == "1.1.1.1");
    CHECK(l4[5].to_string() == "2");
    CHECK(l4[6].to_string() == "1.1");
    CHECK(l4[7].to_string() == "-");
    // p(0..10) = 1,1,2,3,5,7,11,15,22,30,42
    int expect[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int m = 0; m <= 10; ++m) CHECK(partitions_of(m).size() == size_t(expect[m]));
    // enumeration order is strict and total
    for (size_t i = 0; i + 1 < l4.size(); ++i) CHECK(l4[i].before(l4[i + 1]));
}

TEST_CASE("standard tableau counts match peeling oracle") {
    std::map<std::vector<int>, long long> memo;
    for (int m = 0; m <= 9; ++m)
        for (const auto& p : partitions_of(m))
            CHECK(num_standard_tableaux(p) == count_syt_oracle(p, memo));
    CHECK(num_standard_tableaux(Partition::parse("3.2.1")) == 16);
    CHECK(num_standard_tableaux(Partition::parse("2.1")) == 2);
}

TEST_CASE("cell dimensions") {
    CHECK(dim_cell(2, Partition{}) == 1);
    CHECK(dim_cell(4, Partition::parse("2")) == 6);
    CHECK(dim_cell(5, Partition::parse("2.1")) == 20);
    CHECK(dim_cell(6, Partition::parse("3.3")) == 5);
    CHECK(dim_cell(6, Partition::parse("2")) == 45);
    CHECK(dim_cell(8, Partition{}) == 105);
    CHECK_THROWS_AS(dim_cell(4, Partition::parse("3")), ParseError);

    // sum of squared cell dimensions is the diagram count (2n-1)!!
    for (int n = 0; n <= 8; ++n) {
        long long total = 0;
        for (const auto& lam : cell_labels(n)) {
            long long d = dim_cell(n, lam);
            total += d * d;
        }
        CHECK(total == double_factorial(2 * n - 1));
    }

    // restriction: dim of a cell module of B_n is the sum of the dims of the
    // B_{n-1} cell modules labelled by one box less or one box more
    for (int n = 1; n <= 8; ++n)
        for (const auto& lam : cell_labels(n)) {
            long long sum = 0;
            for (const Box& b : lam.removable_boxes())
                sum += dim_cell(n - 1, lam.remove_from_row(b.row));
            if (lam.sum() + 1 <= n - 1)
                for (const Box& b : lam.addable_boxes()) {
                    std::vector<int> parts = lam.parts();
                    if (b.row > lam.length()) parts.push_back(0);
                    parts[b.row - 1] += 1;
                    sum += dim_cell(n - 1, Partition(parts));
                }
            CHECK(sum == dim_cell(n, lam));
        }
}
