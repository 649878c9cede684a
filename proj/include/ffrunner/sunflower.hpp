#pragma once

#include "ffrunner/covering.hpp"

#include <optional>

namespace ffr {

// Codimension-4 sunflower machinery at coverage level k = 2: every pair of
// petal kernels intersects in one common core K inside F_q^{D+2}.

struct SunflowerOptions {
    int threads = 1;
    std::uint64_t node_cap = 50'000'000;
    std::uint64_t bitmap_cap_bits = std::uint64_t(1) << 32;
};

struct SunflowerReport {
    bool found = false;  // some codimension-4 sunflower exists in the family
    int D = 0;
    std::vector<Poly> petals;  // ascending canonical order
    std::optional<Subspace> core;
    int n = 0;
    bool type1 = false;
    bool type2 = false;
    std::optional<Poly> type1_p;  // common factor, present iff type1
    std::vector<Poly> s_prime;
    std::vector<Poly> s_double_prime;
    std::vector<Elem> lambda_roots;  // linear-factor roots hit by the petals, TYPE I only
};

// ker(f) intersect ker(f'): the complement of the span of f, Tf, f', Tf'
// inside F_q^{D+2}. Codimension equals the rank of that span, at most 4.
Subspace pair_core(const Poly& f, const Poly& g, int D);

struct SunflowerCheck {
    bool ok;
    Subspace core;  // the common pairwise intersection when ok
};

// True iff all pairwise cores agree as canonical subspaces. Any codimension
// qualifies here; callers wanting codimension 4 check the returned core.
SunflowerCheck is_sunflower(const std::vector<Poly>& petals, int D);

// Exact maximum-size codimension-4 sunflower, by grouping petal pairs on
// their common core and running a deterministic branch-and-bound clique
// search per candidate core. Ties break to the least petal index set.
SunflowerReport max_sunflower(std::vector<Poly> family, int D = -1, const SunflowerOptions& opts = {});

struct Classification {
    bool type1 = false;  // common factor P with pairwise-coprime quotients of degree <= 2
    bool type2 = false;  // every petal in the plane spanned by the first two
    std::optional<Poly> p;
    std::vector<Elem> lambda_roots;
};

// Both flags may hold at once; for n >= 3 at least one must, and a violation
// throws (either a bug or a genuine structural counterexample).
Classification classify(const std::vector<Poly>& petals, int D);

// Splits family minus petals by whether the kernel contains the core. Every
// member of the first part must meet some petal kernel in codimension 3;
// that consequence is asserted and fails loudly for non-maximal sunflowers.
std::pair<std::vector<Poly>, std::vector<Poly>> decompose(const std::vector<Poly>& family,
                                                          const std::vector<Poly>& petals,
                                                          const Subspace& core, int D);

enum class ContributionMode {
    afterparty,   // new points of ker(f) relative to the petal kernels
    final_stage,  // relative to every earlier kernel in the given order
};

struct ContributionCheck {
    std::uint64_t actual;
    std::uint64_t bound;
    bool ok;
};

// Checks the covering contribution of f against the proven ceiling. Requires
// D >= 3 so the bound's q^{D-3} term is integral, f outside the sunflower,
// and re-verifies that the sunflower is of maximal size in the family.
ContributionCheck contribution_bound_check(const std::vector<Poly>& ordered_family,
                                           const SunflowerReport& s, const Poly& f, int D,
                                           ContributionMode mode = ContributionMode::afterparty,
                                           const SunflowerOptions& opts = {});

}  // namespace ffr
