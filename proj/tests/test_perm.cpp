#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cga/perm.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace cga;

namespace {

Permutation random_perm(int degree, std::mt19937& rng) {
    std::vector<std::uint8_t> img(degree);
    for (int i = 0; i < degree; ++i) img[i] = static_cast<std::uint8_t>(i);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation::from_images(std::move(img));
}

}  // namespace

TEST_CASE("compose basics") {
    auto id8 = Permutation(8);
    auto c3 = parse_cycles("(1,2,3)", 8);
    CHECK(compose(c3, id8) == c3);
    CHECK(compose(id8, c3) == c3);

    auto t = parse_cycles("(1,2)", 8);
    CHECK(compose(t, t).is_identity());

    // square of a 3-cycle is its inverse
    CHECK(compose(c3, c3) == parse_cycles("(1,3,2)", 8));
    CHECK(compose(c3, c3) == c3.inverse());
}

TEST_CASE("composition is right to left") {
    // (1,2) then-apply (2,3) reading right to left: 1 -> 2 -> 3
    auto a = parse_cycles("(2,3)", 3);
    auto b = parse_cycles("(1,2)", 3);
    auto ab = a * b;
    CHECK(ab(0) == 2);
    CHECK(ab == parse_cycles("(1,3,2)", 3));
}

TEST_CASE("cycle decomposition") {
    CHECK(Permutation(10).cycles().empty());

    auto sigma = parse_cycles("(4,5)(6,7,8)(9,10,11,12,13,14,15,16)", 16);
    auto cs = sigma.cycles();
    REQUIRE(cs.size() == 3);
    CHECK(cs[0].size() == 2);
    CHECK(cs[1].size() == 3);
    CHECK(cs[2].size() == 8);
    CHECK(cs[0][0] == 3);  // smallest moved point first, 0-based

    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto p = random_perm(9, rng);
        auto q = Permutation(9);
        for (const auto& c : p.cycles()) q = q * from_cycles(9, {c});
        CHECK(q == p);
    }
}

TEST_CASE("cycle type") {
    auto tau = parse_cycles("(4,5)(6,7,8)(9,10,11,12,13,14,15,16)(17,18,19,20,21)", 21);
    CHECK(CycleType::of(tau).parts == std::vector<int>{8, 5, 3, 2});
    CHECK(CycleType::of(tau).str() == "8-5-3-2");
    CHECK(CycleType::of(tau).fixed_points() == 3);

    CHECK(CycleType::of(Permutation(6)).parts.empty());
    CHECK(CycleType::of(Permutation(6)).str() == "id");

    auto v = parse_cycles("(1,3,2,4)(5,7,6,8)", 8);
    CHECK(CycleType::of(v).parts == std::vector<int>{4, 4});
}

TEST_CASE("cycle type parse and render") {
    auto t = CycleType::parse("6-3-3-2", 15);
    CHECK(t.parts == std::vector<int>{6, 3, 3, 2});
    CHECK(t.str() == "6-3-3-2");
    CHECK(t.fixed_points() == 1);
    CHECK(CycleType::parse("3-6-2-3", 15) == t);  // order normalized

    CHECK(CycleType::parse("id", 7).parts.empty());
    CHECK(CycleType::parse("", 7).parts.empty());

    CHECK_THROWS(CycleType::parse("6-1", 9));    // parts below 2
    CHECK_THROWS(CycleType::parse("6-4", 9));    // exceeds degree
    CHECK_THROWS(CycleType::parse("6--3", 12));
    CHECK_THROWS(CycleType::parse("6-3-", 12));
    CHECK_THROWS(CycleType::parse("x", 12));
}

TEST_CASE("parity") {
    CHECK(parse_cycles("(2,5,7)", 8).even());
    CHECK_FALSE(parse_cycles("(1,2)", 8).even());
    CHECK(parse_cycles("(1,3,2,4)(5,7,6,8)", 8).even());
    CHECK(CycleType::parse("4-4", 8).even());
    CHECK_FALSE(CycleType::parse("4-3", 8).even());
}

TEST_CASE("commutes") {
    auto a = parse_cycles("(1,2,3)", 16);
    auto b = parse_cycles("(4,5)", 16);
    CHECK(a.commutes_with(b));  // disjoint supports
    CHECK(a.commutes_with(a.inverse()));

    auto g1 = parse_cycles("(1,2,3)(7,8)(9,10,11,12,13,14,15,16)", 16);
    auto g8 = parse_cycles("(2,3,4)(7,8)(9,10,11,12,13,14,15,16)", 16);
    CHECK_FALSE(g1.commutes_with(g8));
}

TEST_CASE("parse and render cycles") {
    auto p = parse_cycles("(4,5)(6,7,8)", 8);
    auto cs = p.cycles();
    REQUIRE(cs.size() == 2);
    CHECK(cs[0] == std::vector<int>{3, 4});
    CHECK(cs[1] == std::vector<int>{5, 6, 7});

    CHECK(parse_cycles("()", 5).is_identity());
    CHECK(parse_cycles("", 5).is_identity());
    CHECK(render_cycles(Permutation(5)) == "()");
    CHECK(parse_cycles(" (1, 2) (3 ,4) ", 5) == parse_cycles("(1,2)(3,4)", 5));

    CHECK_THROWS(parse_cycles("(1,1,2)", 5));   // repeated point
    CHECK_THROWS(parse_cycles("(1,2)(2,3)", 5));
    CHECK_THROWS(parse_cycles("(1,6)", 5));     // out of range
    CHECK_THROWS(parse_cycles("(0,1)", 5));     // notation is 1-based
    CHECK_THROWS(parse_cycles("(1,2", 5));
    CHECK_THROWS(parse_cycles("1,2)", 5));
    CHECK_THROWS(parse_cycles("(1,x)", 5));
}

TEST_CASE("inverse property") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        auto p = random_perm(10, rng);
        CHECK(compose(p, p.inverse()).is_identity());
        CHECK(compose(p.inverse(), p).is_identity());
    }
}

TEST_CASE("cycle type is conjugation invariant") {
    std::mt19937 rng(13);
    int samples = 0;
    for (int n = 4; n <= 10; ++n) {
        for (int trial = 0; trial < 200; ++trial) {
            auto p = random_perm(n, rng);
            auto q = random_perm(n, rng);
            auto conj = q * p * q.inverse();
            CHECK(CycleType::of(conj) == CycleType::of(p));
            ++samples;
        }
    }
    CHECK(samples >= 1000);
}

TEST_CASE("parity is a homomorphism") {
    std::mt19937 rng(14);
    for (int trial = 0; trial < 500; ++trial) {
        auto a = random_perm(9, rng);
        auto b = random_perm(9, rng);
        CHECK((a * b).even() == (a.even() == b.even()));
    }
}

TEST_CASE("commutes is symmetric and reflexive") {
    std::mt19937 rng(15);
    for (int trial = 0; trial < 500; ++trial) {
        auto a = random_perm(8, rng);
        auto b = random_perm(8, rng);
        CHECK(a.commutes_with(b) == b.commutes_with(a));
        CHECK(a.commutes_with(a));
    }
}

TEST_CASE("support of a product") {
    std::mt19937 rng(16);
    for (int trial = 0; trial < 500; ++trial) {
        auto a = random_perm(9, rng);
        auto b = random_perm(9, rng);
        auto sa = a.support();
        auto sb = b.support();
        std::set<int> u(sa.begin(), sa.end());
        u.insert(sb.begin(), sb.end());
        for (int x : (a * b).support()) CHECK(u.count(x) == 1);
    }
}

TEST_CASE("render round trip") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 500; ++trial) {
        auto p = random_perm(12, rng);
        CHECK(parse_cycles(render_cycles(p), 12) == p);
    }
}

TEST_CASE("canonical order is lexicographic on images") {
    // identity is least, and comparison follows the image table pointwise
    auto id = Permutation(4);
    auto p = parse_cycles("(3,4)", 4);
    auto q = parse_cycles("(1,2)", 4);
    CHECK(id < p);
    CHECK(p < q);
}

TEST_CASE("degree mismatch and bad tables") {
    auto a = parse_cycles("(1,2)", 5);
    auto b = parse_cycles("(1,2)", 6);
    CHECK_THROWS(a * b);
    CHECK_THROWS(a.commutes_with(b));
    CHECK_THROWS(Permutation::from_images({0, 0, 1}));
    CHECK_THROWS(Permutation::from_images({0, 1, 3}));
}
