#pragma once

#include "ffrunner/json_out.hpp"
#include "ffrunner/sunflower.hpp"

#include <string>

namespace ffr {

enum class CheckStatus { pass, fail, not_applicable };

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string details;
    double ms = 0;
};

struct SuiteReport {
    std::string suite;
    ordered_json params = ordered_json::object();
    bool pass = true;  // stays true while the failure list is empty
    std::vector<Check> checks;
    double total_ms = 0;

    void add(Check c);
    ordered_json to_json(bool with_timings = true) const;
};

struct Budget {
    std::uint64_t max_nodes = 200'000'000;
    double max_seconds = 600.0;
    std::uint64_t bitmap_cap_bits = std::uint64_t(1) << 32;
    // Sound pruning rules; switch off to make the subset search literal.
    bool union_bound_pruning = true;
    bool factor_pruning = true;
};

// All monic polynomials of degree at most k; attains loneliness exactly
// q^{-(k+1)} and witnesses the sharpness of the size threshold.
std::vector<Poly> gen_extremal(const Field& field, int k);

struct MinCoverResult {
    std::uint64_t q = 0;
    int k = 0;
    int D = 0;
    bool exact = true;   // false when the budget ran out
    bool found = false;  // some covering family exists at this D
    int min_size = 0;    // valid when found
    std::vector<Poly> witness_family;
    std::uint64_t conjectured = 0;  // (q^{k+1}-1)/(q-1)
    int lower_bound = 1;            // family sizes below this are exhaustively ruled out
    std::uint64_t nodes = 0;
};

// Least covering family size over monic candidates of degree <= D, by
// increasing-size depth-first search in canonical candidate order.
MinCoverResult min_cover(const Field& field, int k, int D, const Budget& budget = {},
                         int threads = 1);

struct SmallDCondition {
    bool holds;
    std::uint64_t n_irreducible;  // N(k+1, q)
    std::uint64_t denom;          // q^k + ... + q
    std::uint64_t floor_term;     // floor(D / (k+1))
};
// Exact rational comparison N(k+1,q) / (q^k + ... + q) > floor(D/(k+1)).
SmallDCondition smalld_condition(std::uint64_t q, int k, int D);

// (3 - max_{0<=x<=1} (2x^4 - 3x^3 - 3x^2 + x)) / 6, by grid search plus
// local refinement. Rounds to 0.4877 at four decimals.
double close_half_constant(int resolution = 10000);

// One-directional instance checks of the structural statements about
// families with a large sunflower: hypotheses gate conclusions, and
// inapplicable statements are recorded rather than assumed.
SuiteReport appendix_checks(std::vector<Poly> family, int D = -1,
                            const SunflowerOptions& opts = {});

struct SuiteParams {
    std::vector<std::uint64_t> qs;  // empty: suite defaults
    std::vector<int> ks;
    int trials = -1;  // -1: suite default
    std::uint64_t seed = 0x5eed5eedULL;
    int threads = 1;
    Budget budget;
};

SuiteReport run_suite(const std::string& name, const SuiteParams& params = {});
const std::vector<std::string>& suite_names();

// Property checks shared between the acceptance gate and the unit tests.
Check check_perp_properties(int trials, std::uint64_t seed);
Check check_kernel_dimension();   // exhaustive: deg <= 3, q in {2,3}, k <= 3
Check check_scalar_invariance();  // exhaustive: q <= 4, deg <= 2, tails up to length 4
Check check_lines_cover(std::uint64_t q, int k, int trials, std::uint64_t seed);

}  // namespace ffr
