#include "ffrunner/gf.hpp"

#include <algorithm>
#include <cstdlib>

namespace ffr {

namespace {

// Helpers over F_p on raw ascending digit vectors, used only for modulus
// selection. The general Poly type depends on Field, so this stays local.

void fp_strip(std::vector<unsigned>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f by monic-normalizable g, both nonzero.
std::vector<unsigned> fp_mod(std::vector<unsigned> f, const std::vector<unsigned>& g, unsigned p) {
    const unsigned dg = static_cast<unsigned>(g.size()) - 1;
    // inverse of the leading coefficient of g mod p
    unsigned lead = g.back() % p, lead_inv = 1;
    for (unsigned x = 1; x < p; ++x)
        if (lead * x % p == 1) { lead_inv = x; break; }
    while (f.size() >= g.size()) {
        unsigned shift = static_cast<unsigned>(f.size() - g.size());
        unsigned factor = f.back() * lead_inv % p;
        for (unsigned i = 0; i <= dg; ++i) {
            unsigned sub = factor * g[i] % p;
            f[i + shift] = (f[i + shift] + p - sub) % p;
        }
        fp_strip(f);
        if (f.empty()) break;
    }
    return f;
}

bool fp_irreducible(const std::vector<unsigned>& f, unsigned p) {
    const unsigned deg = static_cast<unsigned>(f.size()) - 1;
    if (deg < 1) return false;
    if (deg == 1) return true;
    // trial division by every monic polynomial of degree 1..deg/2
    for (unsigned d = 1; d <= deg / 2; ++d) {
        std::uint64_t total = 1;
        for (unsigned i = 0; i < d; ++i) total *= p;
        for (std::uint64_t v = 0; v < total; ++v) {
            std::vector<unsigned> g(d + 1, 0);
            std::uint64_t t = v;
            for (unsigned i = 0; i < d; ++i) { g[i] = static_cast<unsigned>(t % p); t /= p; }
            g[d] = 1;
            if (fp_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

struct Field::Impl {
    unsigned p = 0;
    unsigned e = 1;
    std::uint64_t q = 0;
    std::vector<Elem> modulus;  // empty when e == 1
    bool tables = false;
    std::vector<Elem> mul_table;  // q * q when tables
    std::vector<Elem> inv_table;  // q when tables

    static constexpr std::uint64_t kTableMaxQ = 256;

    std::vector<Elem> to_digits(Elem a) const {
        std::vector<Elem> d(e);
        for (unsigned i = 0; i < e; ++i) { d[i] = a % p; a /= p; }
        return d;
    }
    Elem from_digits_raw(const std::vector<Elem>& d) const {
        Elem v = 0;
        for (unsigned i = e; i-- > 0;) v = v * p + (i < d.size() ? d[i] % p : 0);
        return v;
    }

    Elem add_raw(Elem a, Elem b) const {
        if (e == 1) {
            Elem s = a + b;
            return s >= p ? s - p : s;
        }
        if (p == 2) return a ^ b;
        Elem r = 0, mult = 1;
        for (unsigned i = 0; i < e; ++i) {
            Elem da = a % p, db = b % p;
            a /= p;
            b /= p;
            Elem s = da + db;
            if (s >= p) s -= p;
            r += s * mult;
            mult *= p;
        }
        return r;
    }

    Elem neg_raw(Elem a) const {
        if (e == 1) return a == 0 ? 0 : p - a;
        if (p == 2) return a;
        Elem r = 0, mult = 1;
        for (unsigned i = 0; i < e; ++i) {
            Elem da = a % p;
            a /= p;
            r += (da == 0 ? 0 : p - da) * mult;
            mult *= p;
        }
        return r;
    }

    // polynomial product in the power basis, reduced by the modulus
    Elem mul_raw(Elem a, Elem b) const {
        if (e == 1) return static_cast<Elem>(std::uint64_t(a) * b % p);
        std::vector<Elem> da = to_digits(a), db = to_digits(b);
        std::vector<Elem> prod(2 * e - 1, 0);
        for (unsigned i = 0; i < e; ++i) {
            if (da[i] == 0) continue;
            for (unsigned j = 0; j < e; ++j)
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
        // modulus is monic: T^e = -(lower part)
        for (unsigned i = 2 * e - 2; i >= e; --i) {
            Elem c = prod[i];
            if (c == 0) continue;
            prod[i] = 0;
            for (unsigned j = 0; j < e; ++j) {
                Elem sub = static_cast<Elem>(std::uint64_t(c) * modulus[j] % p);
                prod[i - e + j] = (prod[i - e + j] + p - sub) % p;
            }
        }
        Elem r = 0;
        for (unsigned i = e; i-- > 0;) r = r * p + prod[i];
        return r;
    }

    Elem pow_raw(Elem a, std::uint64_t n) const {
        Elem r = 1, base = a;
        while (n) {
            if (n & 1) r = tables ? mul_table[std::size_t(r) * q + base] : mul_raw(r, base);
            base = tables ? mul_table[std::size_t(base) * q + base] : mul_raw(base, base);
            n >>= 1;
        }
        return r;
    }
};

Field::Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Field::Field(unsigned p, unsigned e, std::uint64_t max_q) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
    if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->e = e;
    impl->q = checked_pow(p, e, max_q, "field size");
    if (impl->q > (std::uint64_t(1) << 31))
        throw CapExceeded("field size does not fit the element encoding");

    if (e > 1) {
        // least integer encoding among monic irreducibles of degree e over F_p
        std::uint64_t total = 1;
        for (unsigned i = 0; i < e; ++i) total *= p;
        bool found = false;
        for (std::uint64_t v = 0; v < total && !found; ++v) {
            std::vector<unsigned> cand(e + 1, 0);
            std::uint64_t t = v;
            for (unsigned i = 0; i < e; ++i) { cand[i] = static_cast<unsigned>(t % p); t /= p; }
            cand[e] = 1;
            if (fp_irreducible(cand, p)) {
                impl->modulus.assign(cand.begin(), cand.end());
                found = true;
            }
        }
        if (!found) throw std::logic_error("no irreducible modulus found");  // cannot happen
    }

    if (impl->q <= Impl::kTableMaxQ) {
        const std::size_t q = static_cast<std::size_t>(impl->q);
        impl->mul_table.resize(q * q);
        for (std::size_t a = 0; a < q; ++a)
            for (std::size_t b = 0; b < q; ++b)
                impl->mul_table[a * q + b] = impl->mul_raw(static_cast<Elem>(a), static_cast<Elem>(b));
        impl->inv_table.assign(q, 0);
        for (std::size_t a = 1; a < q; ++a)
            for (std::size_t b = 1; b < q; ++b)
                if (impl->mul_table[a * q + b] == 1) { impl->inv_table[a] = static_cast<Elem>(b); break; }
        impl->tables = true;
    }
    impl_ = std::move(impl);
}

Field Field::from_q(std::uint64_t q, std::uint64_t max_q) {
    if (q < 2) throw std::invalid_argument("field size must be >= 2");
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) { p = d; break; }
    if (p == 0) return Field(static_cast<unsigned>(q), 1, max_q);
    unsigned e = 0;
    std::uint64_t t = q;
    while (t > 1) {
        if (t % p != 0) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
        t /= p;
        ++e;
    }
    return Field(static_cast<unsigned>(p), e, max_q);
}

unsigned Field::p() const { return impl_->p; }
unsigned Field::e() const { return impl_->e; }
std::uint64_t Field::q() const { return impl_->q; }
const std::vector<Elem>& Field::modulus() const { return impl_->modulus; }

Elem Field::add(Elem a, Elem b) const { return impl_->add_raw(a, b); }
Elem Field::sub(Elem a, Elem b) const { return impl_->add_raw(a, impl_->neg_raw(b)); }
Elem Field::neg(Elem a) const { return impl_->neg_raw(a); }

Elem Field::mul(Elem a, Elem b) const {
    return impl_->tables ? impl_->mul_table[std::size_t(a) * impl_->q + b] : impl_->mul_raw(a, b);
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero");
    if (impl_->tables) return impl_->inv_table[a];
    return impl_->pow_raw(a, impl_->q - 2);
}

Elem Field::pow(Elem a, std::uint64_t n) const { return impl_->pow_raw(a, n); }

std::vector<Elem> Field::digits(Elem a) const { return impl_->to_digits(a); }
Elem Field::from_digits(const std::vector<Elem>& d) const { return impl_->from_digits_raw(d); }

bool Field::same(const Field& other) const {
    return impl_ == other.impl_ || (impl_->p == other.impl_->p && impl_->e == other.impl_->e);
}

}  // namespace ffr
