#pragma once

#include "ffrunner/poly.hpp"

namespace ffr {

// Truncated tail sum_{i>=1} x_{-i} T^{-i}. coeffs()[i] stores x_{-(i+1)}.
// The canonical enumeration position is the mixed-radix index with x_{-1} as
// the least significant digit, matching the coverage module's vector
// encoding.
class Tail {
  public:
    Tail(Field field, std::vector<Elem> coeffs);
    static Tail from_index(const Field& field, std::uint64_t index, int len);

    const Field& field() const { return field_; }
    const std::vector<Elem>& coeffs() const { return coeffs_; }
    int length() const { return static_cast<int>(coeffs_.size()); }
    std::uint64_t index() const;

  private:
    Field field_;
    std::vector<Elem> coeffs_;
};

struct OrdNorm {
    bool is_zero;  // ord -infinity, norm 0
    int ord;       // greatest exponent carrying a nonzero coefficient; valid when !is_zero
};
OrdNorm ord_and_norm(const Tail& alpha);

struct FracNorm {
    bool zero_part;  // the fractional part of alpha*f vanishes entirely
    int exponent;    // norm exponent of ||alpha f||, valid when !zero_part
    int horizon;     // coefficients of T^-1 .. T^-horizon are stable under tail extension
};
FracNorm frac_norm(const Tail& alpha, const Poly& f);

struct DirectOptions {
    int threads = 1;
    std::uint64_t enum_cap = std::uint64_t(1) << 26;
};

struct DirectResult {
    int exponent_k;  // delta(F) = q^{-exponent_k}
    Tail witness;    // least tail in canonical index order, length D + exponent_k
};

// Loneliness straight from the definition: enumerate tails of increasing
// resolution until one keeps every speed at distance >= q^{-k}. Exponential
// and deliberately independent of the covering engine, which it serves as an
// oracle for.
DirectResult loneliness_direct(std::vector<Poly> speeds, const DirectOptions& opts = {});

}  // namespace ffr
