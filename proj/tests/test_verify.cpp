#include "ffrunner/verify.hpp"

#include "doctest.h"

#include <cmath>

using namespace ffr;

namespace {

// Brute-force minimum cover: test every subset by direct evaluation.
int min_cover_oracle(const Field& field, int k, int D) {
    auto pool = monic_up_to_degree(field, static_cast<unsigned>(D));
    const int M = static_cast<int>(pool.size());
    int best = -1;
    for (int mask = 1; mask < (1 << M); ++mask) {
        int size = __builtin_popcount(static_cast<unsigned>(mask));
        if (best >= 0 && size >= best) continue;
        std::vector<Poly> fam;
        for (int i = 0; i < M; ++i)
            if (mask & (1 << i)) fam.push_back(pool[static_cast<std::size_t>(i)]);
        CoverOptions co;
        co.k = k;
        co.D = D;
        if (covers_reference(fam, co).covers_all) best = size;
    }
    return best;
}

}  // namespace

TEST_CASE("extremal families enumerate all monic polynomials up to degree k") {
    Field f2(2, 1);
    auto fam = gen_extremal(f2, 1);
    REQUIRE(fam.size() == 3);
    CHECK(fam[0] == Poly::constant(f2, 1));
    CHECK(fam[1] == Poly(f2, {0, 1}));
    CHECK(fam[2] == Poly(f2, {1, 1}));
    CHECK(gen_extremal(f2, 2).size() == 7);
    Field f3(3, 1);
    CHECK(gen_extremal(f3, 1).size() == 4);
    CHECK_THROWS_AS(gen_extremal(f2, 0), std::invalid_argument);
}

TEST_CASE("minimum cover matches the subset oracle on small instances") {
    Field f2(2, 1);
    auto r21 = min_cover(f2, 1, 1);
    CHECK(r21.exact);
    CHECK(r21.found);
    CHECK(r21.min_size == 3);
    CHECK(r21.conjectured == 3);
    CHECK(r21.min_size == min_cover_oracle(f2, 1, 1));

    Field f3(3, 1);
    auto r31 = min_cover(f3, 1, 1);
    CHECK(r31.min_size == 4);
    CHECK(r31.min_size == min_cover_oracle(f3, 1, 1));

    auto r22 = min_cover(f2, 2, 2);
    CHECK(r22.min_size == 7);
    CHECK(r22.min_size == min_cover_oracle(f2, 2, 2));
    CHECK(r22.witness_family.size() == 7);

    CoverOptions co;
    co.k = 2;
    CHECK(covers(r22.witness_family, co).covers_all);
}

TEST_CASE("minimum cover with and without pruning agrees") {
    Budget plain;
    plain.union_bound_pruning = false;
    plain.factor_pruning = false;
    for (std::uint64_t q : {2, 3, 4}) {
        Field field = Field::from_q(q);
        auto pruned = min_cover(field, 1, 1);
        auto literal = min_cover(field, 1, 1, plain);
        CHECK(pruned.min_size == literal.min_size);
        CHECK(pruned.witness_family.size() == literal.witness_family.size());
        for (std::size_t i = 0; i < pruned.witness_family.size(); ++i)
            CHECK(pruned.witness_family[i] == literal.witness_family[i]);
    }
    Field f3(3, 1);
    auto pruned = min_cover(f3, 2, 2);
    auto literal = min_cover(f3, 2, 2, plain);
    CHECK(pruned.min_size == 13);
    CHECK(literal.min_size == 13);
}

TEST_CASE("minimum cover beyond the small-degree regime stays at the threshold") {
    // at q=2, k=2 the small-degree sufficient condition fails for D >= 3,
    // yet the exhaustive minimum still matches the conjectured threshold
    Field f2(2, 1);
    Budget literal;
    literal.union_bound_pruning = false;
    literal.factor_pruning = false;
    for (int D : {3, 4}) {
        CHECK_FALSE(smalld_condition(2, 2, D).holds);
        auto pruned = min_cover(f2, 2, D);
        auto plain = min_cover(f2, 2, D, literal);
        CHECK(pruned.min_size == 7);
        CHECK(plain.min_size == 7);
        REQUIRE(pruned.witness_family.size() == plain.witness_family.size());
        for (std::size_t i = 0; i < pruned.witness_family.size(); ++i)
            CHECK(pruned.witness_family[i] == plain.witness_family[i]);
    }
}

TEST_CASE("factor pruning is exact when candidates exceed the factor degree") {
    Field f2(2, 1);
    CHECK(min_cover(f2, 1, 2).min_size == 3);
    CHECK(min_cover(f2, 1, 2).min_size == min_cover_oracle(f2, 1, 2));
    Field f3(3, 1);
    CHECK(min_cover(f3, 1, 2).min_size == 4);
    CHECK(min_cover(f3, 1, 2).min_size == min_cover_oracle(f3, 1, 2));
}

TEST_CASE("minimum cover witness is minimal under single removals") {
    Field f3(3, 1);
    auto res = min_cover(f3, 2, 2);
    REQUIRE(res.found);
    CoverOptions co;
    co.k = 2;
    co.D = 2;
    for (std::size_t skip = 0; skip < res.witness_family.size(); ++skip) {
        std::vector<Poly> sub;
        for (std::size_t i = 0; i < res.witness_family.size(); ++i)
            if (i != skip) sub.push_back(res.witness_family[i]);
        CHECK_FALSE(covers(sub, co).covers_all);
    }
}

TEST_CASE("exhausted budget degrades to reported bounds") {
    Field f3(3, 1);
    Budget tiny;
    tiny.max_nodes = 3;
    auto res = min_cover(f3, 2, 2, tiny);
    CHECK_FALSE(res.exact);
    CHECK(res.lower_bound >= 1);
    CHECK_FALSE(res.found);
}

TEST_CASE("the small-degree condition evaluates exactly") {
    auto a = smalld_condition(2, 2, 2);
    CHECK(a.holds);
    CHECK(a.n_irreducible == 2);
    CHECK(a.denom == 6);
    CHECK(a.floor_term == 0);

    auto b = smalld_condition(2, 2, 3);
    CHECK_FALSE(b.holds);  // 2/6 <= 1

    auto c = smalld_condition(8, 2, 2);
    CHECK(c.holds);
    CHECK(c.n_irreducible == 168);
    CHECK(c.denom == 72);

    CHECK_THROWS_AS(smalld_condition(2, 1, 1), std::invalid_argument);
}

TEST_CASE("the quartic constant reproduces 0.4877") {
    double c = close_half_constant(10000);
    CHECK(std::round(c * 10000.0) / 10000.0 == doctest::Approx(0.4877).epsilon(1e-12));

    // oracle: brute grid over a million points
    auto g = [](double x) { return 2 * x * x * x * x - 3 * x * x * x - 3 * x * x + x; };
    double best = g(0.0);
    for (int i = 1; i <= 1000000; ++i) best = std::max(best, g(i / 1000000.0));
    CHECK(c == doctest::Approx((3.0 - best) / 6.0).epsilon(1e-9));

    CHECK(g(0.0) == 0.0);
    CHECK(g(1.0) == -3.0);
    CHECK_THROWS_AS(close_half_constant(10), std::invalid_argument);
}

TEST_CASE("line systems below the threshold always leave a gap") {
    CHECK(check_lines_cover(2, 1, 500, 11).status == CheckStatus::pass);
    CHECK(check_lines_cover(3, 2, 200, 12).status == CheckStatus::pass);
}

TEST_CASE("irreducible counts match enumeration at degree 5 for q in {7,8,9}") {
    for (std::uint64_t q : {7, 8, 9}) {
        Field field = Field::from_q(q);
        CHECK(count_irreducible(5, q) == irreducible_monic(field, 5).size());
    }
}

TEST_CASE("appendix checks gate out when no large sunflower exists") {
    Field f2(2, 1);
    auto rep = appendix_checks(gen_extremal(f2, 1), 1);
    CHECK(rep.pass);
    for (const Check& c : rep.checks) {
        if (c.name == "sprime-structure") CHECK(c.status == CheckStatus::not_applicable);
        if (c.name == "sprime-connections") CHECK(c.status == CheckStatus::not_applicable);
        if (c.name == "large-structured-part") CHECK(c.status == CheckStatus::not_applicable);
    }
}

TEST_CASE("appendix checks on the full quadratic family over F_3") {
    Field f3(3, 1);
    auto rep = appendix_checks(monic_up_to_degree(f3, 2), 2);
    REQUIRE(rep.pass);
    for (const Check& c : rep.checks) {
        if (c.name == "sprime-structure") CHECK(c.status == CheckStatus::pass);
        if (c.name == "sprime-connections") CHECK(c.status == CheckStatus::pass);
        if (c.name == "large-structured-part") CHECK(c.status == CheckStatus::not_applicable);
        if (c.name == "large-sunflower-min") CHECK(c.status == CheckStatus::not_applicable);
        if (c.name == "drop-one-minimality") CHECK(c.status == CheckStatus::pass);
    }
}

TEST_CASE("quick suites pass") {
    CHECK(run_suite("extremal-family").pass);
    CHECK(run_suite("oracle-equivalence").pass);
    CHECK(run_suite("min-cover-k1").pass);

    SuiteParams small;
    small.trials = 100;
    CHECK(run_suite("theorem-1-4", small).pass);
    CHECK(run_suite("small-sunflower-constant").pass);

    SuiteParams q23;
    q23.qs = {2, 3};
    CHECK(run_suite("sunflower-bound", q23).pass);
    CHECK(run_suite("large-sunflower", q23).pass);

    CHECK_THROWS_AS(run_suite("no-such-suite"), std::invalid_argument);
}

TEST_CASE("suite reports serialize with stable shape") {
    auto rep = run_suite("extremal-family");
    auto j = rep.to_json(true);
    CHECK(j["suite"] == "extremal-family");
    CHECK(j["pass"] == true);
    CHECK(j.contains("checks"));
    CHECK(j.contains("timings"));
    auto no_t = rep.to_json(false);
    CHECK_FALSE(no_t.contains("timings"));
}
