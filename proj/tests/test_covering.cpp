#include "ffrunner/covering.hpp"
#include "ffrunner/verify.hpp"

#include "doctest.h"

#include <random>

using namespace ffr;

namespace {

bool reports_equal(const CoverReport& a, const CoverReport& b) {
    return a.covers_all == b.covers_all && a.covered_count == b.covered_count &&
           a.witness == b.witness && a.per_polynomial_new == b.per_polynomial_new && a.k == b.k &&
           a.D == b.D;
}

}  // namespace

TEST_CASE("circulant rows are shifted coefficient vectors") {
    Field f2(2, 1);
    auto a = circulant(Poly::constant(f2, 1), 1, 0);
    CHECK(a.rows.rows == 1);
    CHECK(a.rows.at(0, 0) == 1);

    auto b = circulant(Poly(f2, {0, 1}), 2, 1);
    CHECK(b.rows.at(0, 0) == 0);
    CHECK(b.rows.at(0, 1) == 1);
    CHECK(b.rows.at(0, 2) == 0);
    CHECK(b.rows.at(1, 1) == 0);
    CHECK(b.rows.at(1, 2) == 1);

    auto c = circulant(Poly(f2, {1, 1, 1}), 2, 2);
    CHECK(c.rows.at(0, 0) == 1);
    CHECK(c.rows.at(0, 1) == 1);
    CHECK(c.rows.at(0, 2) == 1);
    CHECK(c.rows.at(0, 3) == 0);
    CHECK(c.rows.at(1, 0) == 0);
    CHECK(c.rows.at(1, 1) == 1);
    CHECK(c.rows.at(1, 2) == 1);
    CHECK(c.rows.at(1, 3) == 1);

    CHECK_THROWS_AS(circulant(Poly::zero(f2), 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(circulant(Poly(f2, {1, 1, 1}), 1, 1), std::invalid_argument);
}

TEST_CASE("kernel bases are canonical and annihilated by the matrix") {
    Field f2(2, 1);

    auto k0 = kernel_of(Poly::constant(f2, 1), 1, 0);
    CHECK(k0.dim() == 0);
    CHECK(k0.ambient() == 1);

    auto k1 = kernel_of(Poly(f2, {0, 1}), 1, 1);
    REQUIRE(k1.dim() == 1);
    CHECK(k1.basis_row(0) == std::vector<Elem>{1, 0});

    auto a = circulant(Poly(f2, {1, 1, 1}), 2, 2);
    auto k2 = kernel_basis(a);
    REQUIRE(k2.dim() == 2);
    CHECK(k2.basis_row(0) == std::vector<Elem>{1, 0, 1, 1});
    CHECK(k2.basis_row(1) == std::vector<Elem>{0, 1, 1, 0});
    for (int r = 0; r < k2.dim(); ++r) CHECK(in_kernel(a, k2.basis_row(r)));
}

TEST_CASE("perp is an involution that complements dimensions") {
    Field f2(2, 1);
    auto zero = Subspace::zero(f2, 3);
    CHECK(zero.perp().dim() == 3);

    Mat m(f2, 1, 2);
    m.at(0, 0) = 1;
    auto line = Subspace::span_of(std::move(m));
    auto p = line.perp();
    REQUIRE(p.dim() == 1);
    CHECK(p.basis_row(0) == std::vector<Elem>{0, 1});

    // row space perp equals the kernel, across random speeds
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        std::uint64_t q = (rng() & 1) ? 2 : 3;
        Field field = Field::from_q(q);
        int deg = static_cast<int>(rng() % 4);
        std::vector<Elem> c(static_cast<std::size_t>(deg) + 1);
        for (auto& x : c) x = static_cast<Elem>(rng() % q);
        c.back() = 1;
        Poly f(field, c);
        int k = 1 + static_cast<int>(rng() % 3);
        int D = deg + static_cast<int>(rng() % 2);
        auto a = circulant(f, k, D);
        auto rowspace = Subspace::span_of(a.rows);
        CHECK(rowspace.perp() == kernel_basis(a));
    }

    Check c = check_perp_properties(1000, 4242);
    CHECK(c.status == CheckStatus::pass);
}

TEST_CASE("kernel dimension equals D across the exhaustive sweep") {
    Check c = check_kernel_dimension();
    CHECK(c.status == CheckStatus::pass);
}

TEST_CASE("coverage of pinned families") {
    Field f2(2, 1);
    Poly one = Poly::constant(f2, 1), t(f2, {0, 1}), t1(f2, {1, 1});

    CoverOptions co;
    co.k = 1;
    auto rep = covers({one, t, t1}, co);
    CHECK(rep.covers_all);
    CHECK(rep.covered_count == 4);
    CHECK(rep.per_polynomial_new == std::vector<std::uint64_t>{2, 1, 1});

    auto single = covers({one}, co);
    CHECK_FALSE(single.covers_all);
    CHECK(single.witness == std::vector<Elem>{1});

    co.k = 2;
    auto full = covers(monic_up_to_degree(f2, 2), co);
    CHECK(full.covers_all);
    CHECK(full.covered_count == 16);
}

TEST_CASE("loneliness exponents of pinned families") {
    Field f2(2, 1);
    Poly one = Poly::constant(f2, 1), t(f2, {0, 1}), t1(f2, {1, 1});
    CHECK(loneliness({one}).exponent_k == 1);
    CHECK(loneliness({one, t, t1}).exponent_k == 2);
    CHECK(loneliness(monic_up_to_degree(f2, 2)).exponent_k == 3);

    Field f4 = Field::from_q(4);
    CHECK(loneliness(monic_up_to_degree(f4, 1)).exponent_k == 2);
    Field f8 = Field::from_q(8);
    CHECK(loneliness(monic_up_to_degree(f8, 1)).exponent_k == 2);
}

TEST_CASE("the witness attains the loneliness value exactly") {
    // min over the speeds of |alpha f| equals q^{-k} on the nose: at least
    // one speed sits at distance exactly q^{-k}, none below it
    Field f2(2, 1);
    auto pool = monic_up_to_degree(f2, 2);
    const int M = static_cast<int>(pool.size());
    for (int mask = 1; mask < (1 << M); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) > 4) continue;
        std::vector<Poly> fam;
        for (int i = 0; i < M; ++i)
            if (mask & (1 << i)) fam.push_back(pool[static_cast<std::size_t>(i)]);
        auto res = loneliness(fam);
        int min_exp = 1;
        for (const Poly& f : res.cover.speeds) {
            auto fn = frac_norm(res.witness, f);
            REQUIRE_FALSE(fn.zero_part);
            REQUIRE(fn.exponent >= -res.exponent_k);
            min_exp = std::min(min_exp, fn.exponent);
        }
        CHECK(min_exp == -res.exponent_k);
    }
}

TEST_CASE("kernel membership matches the fractional-norm predicate") {
    // x in ker(A_f) iff the tail it encodes keeps alpha*f strictly below q^-k
    Field f2(2, 1);
    for (int D = 0; D <= 4; ++D)
        for (int k = 1; D + k <= 6 && k <= 3; ++k) {
            std::uint64_t total = 1;
            for (int i = 0; i < D + k; ++i) total *= 2;
            for (const Poly& f : monic_up_to_degree(f2, static_cast<unsigned>(D))) {
                auto a = circulant(f, k, D);
                for (std::uint64_t idx = 0; idx < total; ++idx) {
                    auto x = index_to_digits(idx, 2, D + k);
                    bool inker = in_kernel(a, x);
                    auto fn = frac_norm(Tail(f2, x), f);
                    bool close = fn.zero_part || fn.exponent < -k;
                    CHECK(inker == close);
                }
            }
        }
}

TEST_CASE("engine agrees with the direct reference") {
    std::mt19937_64 rng(2024);
    const std::uint64_t qs[] = {2, 3, 4, 9};  // includes extension-field digit arithmetic
    for (int trial = 0; trial < 40; ++trial) {
        std::uint64_t q = qs[rng() % 4];
        Field field = Field::from_q(q);
        auto pool = monic_up_to_degree(field, q <= 3 ? 3 : 2);
        std::size_t size = 1 + rng() % 8;
        std::vector<Poly> fam;
        while (fam.size() < size) {
            const Poly& cand = pool[rng() % pool.size()];
            bool seen = false;
            for (const Poly& g : fam)
                if (g == cand) seen = true;
            if (!seen) fam.push_back(cand);
        }
        CoverOptions co;
        co.k = 1 + static_cast<int>(rng() % 2);
        auto a = covers(fam, co);
        auto b = covers_reference(fam, co);
        CHECK(reports_equal(a, b));

        std::uint64_t attributed = 0;
        for (std::uint64_t n : a.per_polynomial_new) attributed += n;
        CHECK(attributed == a.covered_count);
    }
}

TEST_CASE("parallel marking is bit-identical to sequential marking") {
    Field f3(3, 1);
    auto fam = monic_up_to_degree(f3, 2);
    for (int k : {1, 2}) {
        CoverOptions serial;
        serial.k = k;
        CoverOptions par = serial;
        par.threads = 2;
        auto a = covers(fam, serial);
        auto b = covers(fam, par);
        CHECK(reports_equal(a, b));
    }
}

TEST_CASE("identical runs produce identical reports") {
    Field f2(2, 1);
    auto fam = monic_up_to_degree(f2, 2);
    CoverOptions co;
    co.k = 2;
    auto a = covers(fam, co);
    auto b = covers(fam, co);
    CHECK(reports_equal(a, b));
    CHECK(a.speeds.size() == b.speeds.size());
}

TEST_CASE("a larger ambient degree bound never changes the exponent") {
    Field f2(2, 1);
    auto fam = monic_up_to_degree(f2, 2);
    auto base = loneliness(fam);
    CoverOptions wide;
    wide.D = 4;
    auto wider = loneliness(fam, wide);
    CHECK(base.exponent_k == wider.exponent_k);

    Poly one = Poly::constant(f2, 1), t(f2, {0, 1}), t1(f2, {1, 1});
    CoverOptions wide2;
    wide2.D = 3;
    CHECK(loneliness({one, t, t1}, wide2).exponent_k == 2);
}

TEST_CASE("adding speeds never increases the loneliness value") {
    std::mt19937_64 rng(31337);
    Field f3(3, 1);
    auto pool = monic_up_to_degree(f3, 2);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t base_size = 1 + rng() % 6;
        std::vector<Poly> fam;
        while (fam.size() < base_size) {
            const Poly& cand = pool[rng() % pool.size()];
            bool seen = false;
            for (const Poly& g : fam)
                if (g == cand) seen = true;
            if (!seen) fam.push_back(cand);
        }
        int k_small = loneliness(fam).exponent_k;
        while (fam.size() < std::min<std::size_t>(base_size + 4, pool.size())) {
            const Poly& cand = pool[rng() % pool.size()];
            bool seen = false;
            for (const Poly& g : fam)
                if (g == cand) seen = true;
            if (!seen) fam.push_back(cand);
        }
        CHECK(loneliness(fam).exponent_k >= k_small);
    }
}

TEST_CASE("union bound holds on randomized families") {
    SuiteParams p;
    p.trials = 200;
    auto rep = run_suite("theorem-1-4", p);
    CHECK(rep.pass);
}

TEST_CASE("covered count respects the shared-origin ceiling") {
    Field f2(2, 1);
    CoverOptions co;
    co.k = 2;
    auto rep = covers(monic_up_to_degree(f2, 2), co);
    std::uint64_t per = 4;  // q^D
    CHECK(rep.covered_count <= per * rep.speeds.size() - (rep.speeds.size() - 1));
}

TEST_CASE("error paths of the coverage surface") {
    Field f2(2, 1);
    Field f3(3, 1);
    CoverOptions co;
    co.k = 1;
    CHECK_THROWS_AS(covers({}, co), std::invalid_argument);
    CHECK_THROWS_AS(covers({Poly::zero(f2)}, co), std::invalid_argument);
    CoverOptions bad_k;
    bad_k.k = 0;
    CHECK_THROWS_AS(covers({Poly::constant(f2, 1)}, bad_k), std::invalid_argument);
    CHECK_THROWS_AS(Poly::constant(f2, 1) + Poly::constant(f3, 1), std::invalid_argument);

    DirectOptions tight;
    tight.enum_cap = 2;
    CHECK_THROWS_AS(loneliness_direct({Poly(f2, {1, 1})}, tight), CapExceeded);
    CHECK_THROWS_AS(loneliness_direct({Poly::zero(f2)}), std::invalid_argument);
}

TEST_CASE("enumeration refuses above its cap") {
    Field f3(3, 1);
    CHECK_THROWS_AS(monic_of_degree(f3, 10, 100), CapExceeded);
    CHECK_THROWS_AS(monic_up_to_degree(f3, 10, 100), CapExceeded);
}

TEST_CASE("an ambient bound below the maximal degree is rejected") {
    Field f2(2, 1);
    CoverOptions co;
    co.k = 1;
    co.D = 1;
    CHECK_THROWS_AS(covers({Poly(f2, {1, 1, 1})}, co), std::invalid_argument);
}

TEST_CASE("bitmap cap refuses oversized requests") {
    Field f2(2, 1);
    CoverOptions co;
    co.k = 1;
    co.D = 40;
    co.bitmap_cap_bits = 1 << 20;
    CHECK_THROWS_AS(covers({Poly::constant(f2, 1)}, co), CapExceeded);
}

TEST_CASE("bitset first_zero handles word boundaries") {
    Bitset b(70);
    for (std::uint64_t i = 0; i < 70; ++i) b.set(i);
    CHECK(b.first_zero() == -1);
    Bitset c(70);
    for (std::uint64_t i = 0; i < 64; ++i) c.set(i);
    CHECK(c.first_zero() == 64);
    CHECK(c.count() == 64);
}
