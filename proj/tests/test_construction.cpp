#include "doctest.h"

#include <numeric>

#include <stdexcept>

#include "burrlab/construction.hpp"

using namespace burrlab;

TEST_CASE("interval_base produces verified bases") {
    CHECK(interval_base(4).elements() == std::vector<std::uint64_t>{1, 2});
    CHECK(interval_base(8).elements() == std::vector<std::uint64_t>{1, 2, 4});
    for (std::uint64_t u : {2ull, 4ull, 7ull, 8ull, 11ull, 12ull, 13ull, 14ull, 15ull,
                            16ull, 20ull, 50ull, 101ull, 1000ull}) {
        IntSeq base = interval_base(u);
        CHECK(base.sum() == u - 1);
        CHECK(base.elements().back() <= u - 1);
        CHECK(psa(base, u - 1).is_full_interval());
    }
}

TEST_CASE("interval_base rejects infeasible sums") {
    // u-1 in {2,4,5,8,9} admits no chain set; these u are outside the
    // admissible domain anyway.
    for (std::uint64_t u : {3ull, 5ull, 6ull, 9ull, 10ull})
        CHECK_THROWS(interval_base(u));
    CHECK_THROWS_AS(interval_base(1), std::invalid_argument);
}

TEST_CASE("decompose worked examples") {
    auto d = decompose({4, 17});  // 18 = 5+6+7
    CHECK(d.s == 3);
    CHECK(d.r == 0);
    CHECK(d.eps == 0);
    CHECK(d.r_list == std::vector<std::uint64_t>{0, 0});

    d = decompose({4, 20});  // 21 = 5+6+7+3; 3 = 0+2+1
    CHECK(d.s == 3);
    CHECK(d.r == 3);
    CHECK(d.eps == 1);
    CHECK(d.r_list == std::vector<std::uint64_t>{0, 2});

    d = decompose({4, 50});  // 51 = 5+...+10+6; 6 = 0+0+0+2+3+1
    CHECK(d.s == 6);
    CHECK(d.r == 6);
    CHECK(d.eps == 1);
    CHECK(d.r_list == std::vector<std::uint64_t>{0, 0, 0, 2, 3});
}

TEST_CASE("decompose invariants across a grid") {
    for (std::uint64_t u : {4ull, 7ull, 8ull, 11ull, 12ull, 17ull}) {
        for (std::uint64_t v = 3 * u + 5; v <= 3 * u + 60; ++v) {
            Params p{u, v};
            auto d = decompose(p);
            REQUIRE(d.s >= 3);
            std::uint64_t total = d.r;
            for (std::uint64_t t = 1; t <= d.s; ++t) total += u + t;
            REQUIRE(total == v + 1);
            REQUIRE(d.r <= u + d.s);
            std::uint64_t rsum = d.eps;
            for (auto x : d.r_list) rsum += x;
            if (d.r > 0) REQUIRE(rsum == d.r);
            for (std::size_t j = 1; j < d.r_list.size(); ++j) {
                REQUIRE(d.r_list[j] >= d.r_list[j - 1]);
                REQUIRE(d.r_list[j] - d.r_list[j - 1] <= u - 2);
            }
        }
    }
}

TEST_CASE("generators worked examples") {
    CHECK(generators({4, 17}, decompose({4, 17})).elements() ==
          std::vector<std::uint64_t>{5, 6, 7});
    CHECK(generators({4, 20}, decompose({4, 20})).elements() ==
          std::vector<std::uint64_t>{5, 6, 10});
    CHECK(generators({4, 50}, decompose({4, 50})).elements() ==
          std::vector<std::uint64_t>{5, 6, 7, 8, 11, 14});
}

TEST_CASE("build_plan assembles the full sequence") {
    CHECK(build_plan({4, 17}, 0).full_sequence().elements() ==
          std::vector<std::uint64_t>{1, 2, 5, 6, 7});
    CHECK(build_plan({4, 17}, 1).full_sequence().elements() ==
          std::vector<std::uint64_t>{1, 2, 5, 6, 7, 18});
    CHECK(build_plan({4, 17}, 2).full_sequence().elements() ==
          std::vector<std::uint64_t>{1, 2, 5, 6, 7, 18, 36});
}

TEST_CASE("verify_construction matches the predicted complement") {
    auto rep = verify_construction(build_plan({4, 17}, 0));
    CHECK(rep.window == 21);
    CHECK(rep.computed == std::vector<std::uint64_t>{4, 17});
    CHECK(rep.match);

    rep = verify_construction(build_plan({4, 17}, 1));
    CHECK(rep.window == 39);
    CHECK(rep.computed == std::vector<std::uint64_t>{4, 17, 22, 35});
    CHECK(rep.match);

    rep = verify_construction(build_plan({4, 17}, 2));
    CHECK(rep.window == 75);
    CHECK(rep.computed == std::vector<std::uint64_t>{4, 17, 22, 35, 40, 53, 58, 71});
    CHECK(rep.match);
}

TEST_CASE("grid verification, side condition, and u/v exclusion") {
    for (std::uint64_t u : {4ull, 7ull, 8ull, 11ull, 12ull}) {
        for (std::uint64_t v = 3 * u + 5; v <= 3 * u + 15; v += 3) {
            Params p{u, v};
            for (std::uint64_t k = 0; k <= 3; ++k) {
                GeneratorPlan plan = build_plan(p, k);  // throws on violations
                auto rep = verify_construction(plan);
                REQUIRE(rep.match);
                SumsetMask mask = psa(plan.full_sequence(), rep.window);
                REQUIRE_FALSE(mask.contains(u));
                REQUIRE_FALSE(mask.contains(v));
                REQUIRE(mask.contains(u + 1));

                // side condition on every element above u+1
                std::uint64_t running = 0;
                for (std::uint64_t a : plan.full_sequence()) {
                    if (a > u + 1) REQUIRE(a <= running + 1);
                    running += a;
                }
            }
        }
    }
}
