#include "ffrunner/laurent.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ffr {

Tail::Tail(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (Elem c : coeffs_)
        if (c >= field_.q()) throw std::invalid_argument("tail coefficient out of range for the field");
}

Tail Tail::from_index(const Field& field, std::uint64_t index, int len) {
    return Tail(field, index_to_digits(index, field.q(), len));
}

std::uint64_t Tail::index() const { return digits_to_index(coeffs_, field_.q()); }

OrdNorm ord_and_norm(const Tail& alpha) {
    const auto& c = alpha.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) return {false, -static_cast<int>(i) - 1};
    return {true, 0};
}

FracNorm frac_norm(const Tail& alpha, const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("frac_norm needs a nonzero polynomial");
    const Field& k = alpha.field();
    if (!k.same(f.field())) throw std::invalid_argument("tail and polynomial over different fields");
    const int m = alpha.length();
    const int d = f.degree();
    FracNorm out{true, 0, std::max(m - d, 0)};
    // coefficient of T^{-n} in alpha*f; entries beyond the truncation are zero
    for (int n = 1; n <= m; ++n) {
        Elem acc = 0;
        for (int j = 0; j <= d; ++j) {
            int idx = n + j - 1;  // position of x_{-(n+j)}
            if (idx >= m) break;
            acc = k.add(acc, k.mul(f.coeff(j), alpha.coeffs()[static_cast<std::size_t>(idx)]));
        }
        if (acc != 0) {
            out.zero_part = false;
            out.exponent = -n;
            return out;
        }
    }
    return out;
}

namespace {

// |alpha f| >= q^{-k} for the tail packed at `index`, i.e. some coefficient
// of T^-1 .. T^-k in alpha*f is nonzero, for every speed.
bool tail_is_witness(const Field& field, std::uint64_t index, int len, int k,
                     const std::vector<Poly>& speeds, std::vector<Elem>& scratch) {
    const std::uint64_t q = field.q();
    for (int i = 0; i < len; ++i) {
        scratch[static_cast<std::size_t>(i)] = static_cast<Elem>(index % q);
        index /= q;
    }
    for (const Poly& f : speeds) {
        const int d = f.degree();
        bool close = true;
        for (int n = 1; n <= k && close; ++n) {
            Elem acc = 0;
            for (int j = 0; j <= d; ++j) {
                int idx = n + j - 1;
                if (idx >= len) break;
                acc = field.add(acc, field.mul(f.coeff(j), scratch[static_cast<std::size_t>(idx)]));
            }
            if (acc != 0) close = false;
        }
        if (close) return false;  // f stays within q^{-(k+1)} of a polynomial
    }
    return true;
}

}  // namespace

DirectResult loneliness_direct(std::vector<Poly> speeds, const DirectOptions& opts) {
    if (speeds.empty()) throw std::invalid_argument("loneliness of the empty family is undefined");
    auto [norm, dropped] = normalize_speeds(std::move(speeds));
    (void)dropped;
    const Field field = norm.front().field();
    int D = 0;
    for (const Poly& f : norm) D = std::max(D, f.degree());

    // guaranteed to stop: families of size <= q^k never block every tail
    int k_max = 1;
    {
        std::uint64_t pw = field.q();
        while (pw < norm.size()) {
            pw *= field.q();
            ++k_max;
        }
    }

    for (int k = 1; k <= k_max; ++k) {
        const int len = D + k;
        const std::uint64_t total = checked_pow(field.q(), static_cast<unsigned>(len), opts.enum_cap,
                                                "tail enumeration");
        std::uint64_t found = total;
#ifdef _OPENMP
        if (opts.threads > 1) {
            const std::uint64_t block = 1 << 16;
            for (std::uint64_t base = 0; base < total && found == total; base += block) {
                const std::uint64_t end = std::min(base + block, total);
                std::uint64_t local_best = total;
#pragma omp parallel num_threads(opts.threads)
                {
                    std::vector<Elem> scratch(static_cast<std::size_t>(len));
                    std::uint64_t mine = total;
#pragma omp for schedule(static)
                    for (std::int64_t i = static_cast<std::int64_t>(base);
                         i < static_cast<std::int64_t>(end); ++i) {
                        std::uint64_t idx = static_cast<std::uint64_t>(i);
                        if (idx < mine && tail_is_witness(field, idx, len, k, norm, scratch)) mine = idx;
                    }
#pragma omp critical
                    local_best = std::min(local_best, mine);
                }
                found = local_best;
            }
        } else
#endif
        {
            std::vector<Elem> scratch(static_cast<std::size_t>(len));
            for (std::uint64_t idx = 0; idx < total; ++idx) {
                if (tail_is_witness(field, idx, len, k, norm, scratch)) {
                    found = idx;
                    break;
                }
            }
        }
        if (found != total) return {k, Tail::from_index(field, found, len)};
    }
    throw std::logic_error("direct loneliness search exceeded its guaranteed resolution");
}

}  // namespace ffr
