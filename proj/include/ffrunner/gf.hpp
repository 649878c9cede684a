#pragma once

#include "ffrunner/common.hpp"

#include <memory>
#include <vector>

namespace ffr {

// Arithmetic context for the finite field F_q, q = p^e.
//
// Elements are encoded as integers in [0, q): for e = 1 the residue mod p,
// otherwise the little-endian base-p digit word of the element's coefficient
// vector in the power basis of `modulus`. The modulus is the monic
// irreducible of degree e over F_p with the least integer encoding, so a
// context is fully determined by (p, e) and is reproducible across runs.
//
// Multiplication and inversion use precomputed q x q tables for q <= 256;
// larger fields reduce on the fly.
//
// Immutable after construction; safe to share across threads.
class Field {
  public:
    static constexpr std::uint64_t kDefaultMaxQ = 1024;

    Field(unsigned p, unsigned e, std::uint64_t max_q = kDefaultMaxQ);

    // Accepts any prime power: q = 4 resolves to p = 2, e = 2.
    static Field from_q(std::uint64_t q, std::uint64_t max_q = kDefaultMaxQ);

    unsigned p() const;
    unsigned e() const;
    std::uint64_t q() const;

    // Ascending coefficients over F_p, length e + 1, monic.
    // Empty for prime fields.
    const std::vector<Elem>& modulus() const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;  // requires a != 0
    Elem pow(Elem a, std::uint64_t n) const;

    std::vector<Elem> digits(Elem a) const;  // base-p word, length e
    Elem from_digits(const std::vector<Elem>& d) const;

    bool same(const Field& other) const;

  private:
    struct Impl;
    explicit Field(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

}  // namespace ffr
