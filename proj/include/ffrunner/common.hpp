#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffr {

// Canonical integer encoding of a field element, in [0, q).
using Elem = std::uint32_t;

// Thrown when an operation would exceed a configured cap or budget.
// Operations refuse instead of degrading silently.
class CapExceeded : public std::runtime_error {
  public:
    explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// base^exp, throwing CapExceeded if the result would exceed `cap`.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp, std::uint64_t cap,
                          const std::string& what);

// Mixed-radix packing of digit words; digit 0 is the least significant.
// Tails and coverage vectors share this encoding, so indices are
// cross-comparable between modules.
std::uint64_t digits_to_index(const std::vector<Elem>& digits, std::uint64_t q);
std::vector<Elem> index_to_digits(std::uint64_t index, std::uint64_t q, int len);

bool is_prime(std::uint64_t n);

}  // namespace ffr
