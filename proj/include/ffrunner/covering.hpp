#pragma once

#include "ffrunner/laurent.hpp"
#include "ffrunner/linalg.hpp"

#include <cstring>

namespace ffr {

// The k x (D+k) matrix whose rows are the coefficient vectors of
// f, Tf, ..., T^{k-1} f. Row j is row j-1 shifted right by one; the rank is
// exactly k for nonzero f.
struct Circulant {
    Field field;
    int k;
    int ambient;  // D + k
    Mat rows;
};

Circulant circulant(const Poly& f, int k, int D);

// x in ker(A): every row dots to zero against x.
bool in_kernel(const Circulant& a, const std::vector<Elem>& x);

// Canonical RREF basis of the right null space; dimension is D exactly.
Subspace kernel_basis(const Circulant& a);
Subspace kernel_of(const Poly& f, int k, int D);

// Flat bit array indexed by packed vectors of F_q^ambient.
class Bitset {
  public:
    explicit Bitset(std::uint64_t bits) : bits_(bits), w_((bits + 63) / 64, 0) {}

    bool test(std::uint64_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    // Returns true when the bit was newly set.
    bool set(std::uint64_t i) {
        std::uint64_t& w = w_[i >> 6];
        const std::uint64_t m = std::uint64_t(1) << (i & 63);
        const bool fresh = !(w & m);
        w |= m;
        return fresh;
    }
    std::uint64_t size() const { return bits_; }
    std::uint64_t count() const;
    // this |= other, returning how many bits were new.
    std::uint64_t merge_new(const Bitset& other);
    // Least clear index, or -1 when full.
    std::int64_t first_zero() const;
    void clear() { std::memset(w_.data(), 0, w_.size() * sizeof(std::uint64_t)); }

  private:
    std::uint64_t bits_;
    std::vector<std::uint64_t> w_;
};

// Walks every point of the kernel subspace in mixed-radix order of its
// coefficient word, handing the packed index of each point to `fn`. The walk
// is incremental: each step adds one scaled basis row per carried digit, so
// the amortized cost per point is O(codim) instead of O(dim * ambient).
template <typename Fn>
void for_each_kernel_point(const Subspace& kernel, Fn&& fn) {
    const Field& field = kernel.field();
    const std::uint64_t q = field.q();
    const int dim = kernel.dim();
    const int ambient = kernel.ambient();

    std::vector<std::uint64_t> qpow(static_cast<std::size_t>(ambient));
    {
        std::uint64_t p = 1;
        for (int i = 0; i < ambient; ++i) {
            qpow[static_cast<std::size_t>(i)] = p;
            p *= q;
        }
    }

    fn(std::uint64_t{0});
    if (dim == 0) return;

    // step deltas between successive scalar encodings, including the wrap
    std::vector<Elem> delta(static_cast<std::size_t>(q));
    for (std::uint64_t v = 0; v < q; ++v)
        delta[static_cast<std::size_t>(v)] =
            field.sub(static_cast<Elem>((v + 1) % q), static_cast<Elem>(v));

    struct Entry {
        int pos;
        Elem val;
    };
    // scaled[d][v]: the support of delta[v] * row_d
    std::vector<std::vector<std::vector<Entry>>> scaled(static_cast<std::size_t>(dim));
    for (int d = 0; d < dim; ++d) {
        scaled[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(q));
        for (std::uint64_t v = 0; v < q; ++v) {
            auto& vec = scaled[static_cast<std::size_t>(d)][static_cast<std::size_t>(v)];
            for (int c = 0; c < ambient; ++c) {
                Elem base = kernel.basis().at(d, c);
                if (base == 0) continue;
                Elem s = field.mul(delta[static_cast<std::size_t>(v)], base);
                if (s != 0) vec.push_back({c, s});
            }
        }
    }

    std::vector<Elem> digits(static_cast<std::size_t>(dim), 0);
    std::vector<Elem> cur(static_cast<std::size_t>(ambient), 0);
    std::uint64_t idx = 0;
    const Elem qm1 = static_cast<Elem>(q - 1);

    auto apply = [&](int d) {
        for (const Entry& en : scaled[static_cast<std::size_t>(d)][digits[static_cast<std::size_t>(d)]]) {
            Elem old = cur[static_cast<std::size_t>(en.pos)];
            Elem nw = field.add(old, en.val);
            cur[static_cast<std::size_t>(en.pos)] = nw;
            idx = static_cast<std::uint64_t>(
                static_cast<std::int64_t>(idx) +
                (static_cast<std::int64_t>(nw) - static_cast<std::int64_t>(old)) *
                    static_cast<std::int64_t>(qpow[static_cast<std::size_t>(en.pos)]));
        }
    };

    while (true) {
        int d = 0;
        while (d < dim && digits[static_cast<std::size_t>(d)] == qm1) {
            apply(d);
            digits[static_cast<std::size_t>(d)] = 0;
            ++d;
        }
        if (d == dim) break;
        apply(d);
        ++digits[static_cast<std::size_t>(d)];
        fn(idx);
    }
}

struct CoverOptions {
    int k = 1;
    int D = -1;  // -1: use the maximal degree of the speeds
    int threads = 1;
    std::uint64_t bitmap_cap_bits = std::uint64_t(1) << 32;
};

struct CoverReport {
    std::uint64_t q = 0;
    int k = 0;
    int D = 0;
    bool covers_all = false;
    std::vector<Elem> witness;  // least uncovered vector, empty when covers_all
    std::uint64_t covered_count = 0;
    std::vector<std::uint64_t> per_polynomial_new;  // insertion-order attribution
    std::vector<Poly> speeds;                       // monic, deduplicated
    int duplicates_dropped = 0;
};

// Marks every kernel point of every speed in a bit array over F_q^{D+k}.
// With threads > 1 the marking runs one worker per polynomial on private bit
// arrays which are then merged in input order, so the result (attribution
// included) is bit-identical to the sequential run.
CoverReport covers(std::vector<Poly> speeds, const CoverOptions& opts);

// Direct evaluation: classifies every vector of F_q^{D+k} by testing
// A_f x != 0 speed by speed. Slow and simple; the engine's reference.
CoverReport covers_reference(std::vector<Poly> speeds, const CoverOptions& opts);

struct LonelinessResult {
    int exponent_k;  // delta(F) = q^{-exponent_k}
    Tail witness;    // length D + exponent_k
    CoverReport cover;  // the non-covering report at exponent_k
};

// Least k at which the kernels fail to cover, with the least uncovered
// vector translated back into a tail.
LonelinessResult loneliness(std::vector<Poly> speeds, CoverOptions opts = {});

}  // namespace ffr
