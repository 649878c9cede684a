#include "ffrunner/common.hpp"

namespace ffr {

std::uint64_t checked_pow(std::uint64_t base, unsigned exp, std::uint64_t cap,
                          const std::string& what) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base)
            throw CapExceeded(what + ": " + std::to_string(base) + "^" + std::to_string(exp) +
                              " exceeds cap " + std::to_string(cap));
        r *= base;
    }
    if (r > cap)
        throw CapExceeded(what + ": " + std::to_string(r) + " exceeds cap " + std::to_string(cap));
    return r;
}

std::uint64_t digits_to_index(const std::vector<Elem>& digits, std::uint64_t q) {
    std::uint64_t idx = 0;
    for (std::size_t i = digits.size(); i-- > 0;) idx = idx * q + digits[i];
    return idx;
}

std::vector<Elem> index_to_digits(std::uint64_t index, std::uint64_t q, int len) {
    std::vector<Elem> d(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
        d[static_cast<std::size_t>(i)] = static_cast<Elem>(index % q);
        index /= q;
    }
    return d;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace ffr
