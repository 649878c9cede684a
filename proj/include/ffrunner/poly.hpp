#pragma once

#include "ffrunner/gf.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ffr {

inline constexpr std::uint64_t kEnumCap = std::uint64_t(1) << 22;

// Dense univariate polynomial over F_q. Coefficients ascending, trailing
// zeros stripped; the zero polynomial has an empty coefficient vector and
// carries the sentinel degree kZeroDegree.
class Poly {
  public:
    static constexpr int kZeroDegree = -1;  // documented stand-in for -infinity

    Poly(Field field, std::vector<Elem> coeffs);
    static Poly zero(Field field);
    static Poly constant(Field field, Elem c);
    static Poly t_power(Field field, unsigned k);  // T^k

    const Field& field() const { return field_; }
    const std::vector<Elem>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return is_zero() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
    Elem coeff(int i) const;
    Elem leading_coeff() const;
    bool is_monic() const;

    Elem eval(Elem x) const;

    // Coefficient row of T^shift * this, padded with zeros to `width`.
    std::vector<Elem> shifted_row(int width, int shift) const;

    std::string str() const;  // e.g. "T^2+T+1", coefficients as encodings

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  private:
    Field field_;
    std::vector<Elem> coeffs_;
};

// Quotient and remainder; deg(remainder) < deg(g), g != 0.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
bool divides(const Poly& g, const Poly& f);

// Monic greatest common divisor. gcd(f, 0) is the monic normalization of f.
Poly gcd(const Poly& f, const Poly& g);

Poly make_monic(const Poly& f);  // f != 0

// Exact test by trial division over all monic polynomials of degree
// <= deg(f)/2. Requires deg(f) >= 1.
bool is_irreducible(const Poly& f);

// Canonical order: by degree, then by the integer encoding of the
// coefficient word. All enumeration, search and reporting uses this order.
bool poly_less(const Poly& a, const Poly& b);

std::vector<Poly> monic_of_degree(const Field& field, unsigned m, std::uint64_t cap = kEnumCap);
std::vector<Poly> monic_up_to_degree(const Field& field, unsigned D, std::uint64_t cap = kEnumCap);
std::vector<Poly> irreducible_monic(const Field& field, unsigned m, std::uint64_t cap = kEnumCap);

int mobius(unsigned n);

// Number of monic irreducible polynomials of degree m over F_q, by the
// Moebius-sum formula. Must match |irreducible_monic(field, m)|.
std::uint64_t count_irreducible(unsigned m, std::uint64_t q);

// Monic normalization plus stable deduplication. Returns the number of
// duplicates dropped; callers surface that as a warning.
std::pair<std::vector<Poly>, int> normalize_speeds(std::vector<Poly> speeds);

}  // namespace ffr
