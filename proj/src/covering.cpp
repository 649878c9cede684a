#include "ffrunner/covering.hpp"

#include <algorithm>
#include <bit>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ffr {

Circulant circulant(const Poly& f, int k, int D) {
    if (f.is_zero()) throw std::invalid_argument("circulant of the zero polynomial");
    if (k < 1) throw std::invalid_argument("circulant needs k >= 1");
    if (D < f.degree()) throw std::invalid_argument("D must be at least deg f");
    const int ambient = D + k;
    Mat rows(f.field(), k, ambient);
    for (int r = 0; r < k; ++r)
        for (int i = 0; i <= f.degree(); ++i) rows.at(r, r + i) = f.coeff(i);
    return {f.field(), k, ambient, std::move(rows)};
}

bool in_kernel(const Circulant& a, const std::vector<Elem>& x) {
    if (static_cast<int>(x.size()) != a.ambient) throw std::invalid_argument("vector has wrong length");
    const Field& k = a.field;
    for (int r = 0; r < a.k; ++r) {
        Elem acc = 0;
        for (int c = 0; c < a.ambient; ++c)
            acc = k.add(acc, k.mul(a.rows.at(r, c), x[static_cast<std::size_t>(c)]));
        if (acc != 0) return false;
    }
    return true;
}

Subspace kernel_basis(const Circulant& a) {
    Subspace ker = Subspace::span_of(nullspace(a.rows));
    // the shifted leading coefficients make the k rows independent
    if (ker.dim() != a.ambient - a.k)
        throw std::logic_error("circulant rows are unexpectedly dependent");
    return ker;
}

Subspace kernel_of(const Poly& f, int k, int D) { return kernel_basis(circulant(f, k, D)); }

std::uint64_t Bitset::count() const {
    std::uint64_t n = 0;
    for (std::uint64_t w : w_) n += static_cast<std::uint64_t>(std::popcount(w));
    return n;
}

std::uint64_t Bitset::merge_new(const Bitset& other) {
    std::uint64_t fresh = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        std::uint64_t nw = other.w_[i] & ~w_[i];
        fresh += static_cast<std::uint64_t>(std::popcount(nw));
        w_[i] |= other.w_[i];
    }
    return fresh;
}

std::int64_t Bitset::first_zero() const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
        std::uint64_t w = w_[i];
        if (i + 1 == w_.size() && (bits_ & 63))
            w |= ~((std::uint64_t(1) << (bits_ & 63)) - 1);  // pad past the end with ones
        if (w != ~std::uint64_t(0)) {
            std::uint64_t pos = static_cast<std::uint64_t>(std::countr_one(w));
            return static_cast<std::int64_t>((static_cast<std::uint64_t>(i) << 6) + pos);
        }
    }
    return -1;
}

namespace {

struct CoverSetup {
    Field field;
    std::vector<Poly> speeds;
    int dropped = 0;
    int D = 0;
    std::uint64_t total = 0;
};

CoverSetup prepare(std::vector<Poly> speeds, const CoverOptions& opts) {
    if (speeds.empty()) throw std::invalid_argument("coverage of the empty family is undefined");
    if (opts.k < 1) throw std::invalid_argument("coverage level k must be >= 1");
    auto [norm, dropped] = normalize_speeds(std::move(speeds));
    CoverSetup s{norm.front().field(), std::move(norm), dropped, 0, 0};
    for (const Poly& f : s.speeds)
        if (!f.field().same(s.field)) throw std::invalid_argument("speeds over different fields");
    int maxdeg = 0;
    for (const Poly& f : s.speeds) maxdeg = std::max(maxdeg, f.degree());
    s.D = opts.D < 0 ? maxdeg : opts.D;
    if (s.D < maxdeg) throw std::invalid_argument("D must be at least the maximal speed degree");
    s.total = checked_pow(s.field.q(), static_cast<unsigned>(s.D + opts.k), opts.bitmap_cap_bits,
                          "coverage bitmap");
    return s;
}

void finish(CoverReport& rep, const Bitset& bits, const CoverSetup& s) {
    rep.covered_count = bits.count();
    rep.covers_all = rep.covered_count == s.total;
    if (!rep.covers_all) {
        std::int64_t fz = bits.first_zero();
        rep.witness = index_to_digits(static_cast<std::uint64_t>(fz), s.field.q(), rep.D + rep.k);
    }
    // kernels all share the origin
    const std::uint64_t per = checked_pow(s.field.q(), static_cast<unsigned>(rep.D),
                                          ~std::uint64_t(0) >> 1, "kernel size");
    if (rep.covered_count > per * s.speeds.size() - (s.speeds.size() - 1))
        throw std::logic_error("covered count exceeds the union bound");
}

}  // namespace

CoverReport covers(std::vector<Poly> speeds, const CoverOptions& opts) {
    CoverSetup s = prepare(std::move(speeds), opts);
    CoverReport rep;
    rep.q = s.field.q();
    rep.k = opts.k;
    rep.D = s.D;
    rep.duplicates_dropped = s.dropped;
    rep.per_polynomial_new.resize(s.speeds.size(), 0);

    Bitset acc(s.total);
    const int n = static_cast<int>(s.speeds.size());

#ifdef _OPENMP
    if (opts.threads > 1 && n > 1) {
        // private bitmaps per polynomial, merged in input order afterwards;
        // blocks bound the number of live private bitmaps
        const int block = std::max(2 * opts.threads, 8);
        for (int base = 0; base < n; base += block) {
            const int end = std::min(base + block, n);
            std::vector<Bitset> priv;
            priv.reserve(static_cast<std::size_t>(end - base));
            for (int i = base; i < end; ++i) priv.emplace_back(s.total);
#pragma omp parallel for schedule(dynamic) num_threads(opts.threads)
            for (int i = base; i < end; ++i) {
                Bitset& mine = priv[static_cast<std::size_t>(i - base)];
                Subspace ker = kernel_of(s.speeds[static_cast<std::size_t>(i)], opts.k, s.D);
                for_each_kernel_point(ker, [&](std::uint64_t idx) { mine.set(idx); });
            }
            for (int i = base; i < end; ++i)
                rep.per_polynomial_new[static_cast<std::size_t>(i)] =
                    acc.merge_new(priv[static_cast<std::size_t>(i - base)]);
        }
        rep.speeds = s.speeds;
        finish(rep, acc, s);
        return rep;
    }
#endif

    for (int i = 0; i < n; ++i) {
        std::uint64_t fresh = 0;
        Subspace ker = kernel_of(s.speeds[static_cast<std::size_t>(i)], opts.k, s.D);
        for_each_kernel_point(ker, [&](std::uint64_t idx) { fresh += acc.set(idx) ? 1 : 0; });
        rep.per_polynomial_new[static_cast<std::size_t>(i)] = fresh;
    }
    rep.speeds = s.speeds;
    finish(rep, acc, s);
    return rep;
}

CoverReport covers_reference(std::vector<Poly> speeds, const CoverOptions& opts) {
    CoverSetup s = prepare(std::move(speeds), opts);
    CoverReport rep;
    rep.q = s.field.q();
    rep.k = opts.k;
    rep.D = s.D;
    rep.duplicates_dropped = s.dropped;
    rep.per_polynomial_new.resize(s.speeds.size(), 0);

    std::vector<Circulant> mats;
    mats.reserve(s.speeds.size());
    for (const Poly& f : s.speeds) mats.push_back(circulant(f, opts.k, s.D));

    Bitset acc(s.total);
    std::vector<Elem> x(static_cast<std::size_t>(s.D + opts.k));
    for (std::uint64_t idx = 0; idx < s.total; ++idx) {
        std::uint64_t t = idx;
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] = static_cast<Elem>(t % s.field.q());
            t /= s.field.q();
        }
        for (std::size_t i = 0; i < mats.size(); ++i) {
            if (in_kernel(mats[i], x)) {
                acc.set(idx);
                ++rep.per_polynomial_new[i];  // first coverer in input order
                break;
            }
        }
    }
    rep.speeds = s.speeds;
    finish(rep, acc, s);
    return rep;
}

LonelinessResult loneliness(std::vector<Poly> speeds, CoverOptions opts) {
    if (speeds.empty()) throw std::invalid_argument("loneliness of the empty family is undefined");
    auto [norm, dropped] = normalize_speeds(std::move(speeds));
    (void)dropped;
    int k_max = 1;
    {
        std::uint64_t pw = norm.front().field().q();
        while (pw < norm.size()) {
            pw *= norm.front().field().q();
            ++k_max;
        }
    }
    for (int k = 1; k <= k_max; ++k) {
        opts.k = k;
        CoverReport rep = covers(norm, opts);
        if (!rep.covers_all) {
            Tail w(norm.front().field(), rep.witness);
            return {k, std::move(w), std::move(rep)};
        }
    }
    throw std::logic_error("covering loneliness exceeded its guaranteed level");
}

}  // namespace ffr
