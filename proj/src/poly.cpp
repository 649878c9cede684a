#include "ffrunner/poly.hpp"

#include <algorithm>

namespace ffr {

namespace {

void strip(std::vector<Elem>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

void require_same_field(const Poly& a, const Poly& b) {
    if (!a.field().same(b.field()))
        throw std::invalid_argument("polynomials over different fields");
}

}  // namespace

Poly::Poly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (Elem c : coeffs_)
        if (c >= field_.q()) throw std::invalid_argument("coefficient out of range for the field");
    strip(coeffs_);
}

Poly Poly::zero(Field field) { return Poly(std::move(field), {}); }

Poly Poly::constant(Field field, Elem c) { return Poly(std::move(field), {c}); }

Poly Poly::t_power(Field field, unsigned k) {
    std::vector<Elem> c(k + 1, 0);
    c[k] = 1;
    return Poly(std::move(field), std::move(c));
}

Elem Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

Elem Poly::leading_coeff() const {
    if (is_zero()) throw std::invalid_argument("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

bool Poly::is_monic() const { return !is_zero() && coeffs_.back() == 1; }

Elem Poly::eval(Elem x) const {
    Elem r = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = field_.add(field_.mul(r, x), coeffs_[i]);
    return r;
}

std::vector<Elem> Poly::shifted_row(int width, int shift) const {
    std::vector<Elem> row(static_cast<std::size_t>(width), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        int pos = static_cast<int>(i) + shift;
        if (pos < 0 || pos >= width)
            throw std::invalid_argument("shifted coefficient row does not fit the requested width");
        row[static_cast<std::size_t>(pos)] = coeffs_[i];
    }
    return row;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Elem c = coeff(i);
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c);
            out += "T";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    std::vector<Elem> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.field_.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    strip(c);
    return Poly(a.field_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    std::vector<Elem> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.field_.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    strip(c);
    return Poly(a.field_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.field_);
    std::vector<Elem> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] = a.field_.add(c[i + j], a.field_.mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return Poly(a.field_, std::move(c));
}

bool operator==(const Poly& a, const Poly& b) {
    return a.field_.same(b.field_) && a.coeffs_ == b.coeffs_;
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
    require_same_field(f, g);
    if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    const Field& k = f.field();
    if (f.degree() < g.degree()) return {Poly::zero(k), f};
    std::vector<Elem> rem = f.coeffs();
    std::vector<Elem> quot(static_cast<std::size_t>(f.degree() - g.degree()) + 1, 0);
    const Elem lead_inv = k.inv(g.leading_coeff());
    const int dg = g.degree();
    for (int i = f.degree(); i >= dg; --i) {
        Elem c = rem[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Elem factor = k.mul(c, lead_inv);
        quot[static_cast<std::size_t>(i - dg)] = factor;
        for (int j = 0; j <= dg; ++j)
            rem[static_cast<std::size_t>(i - dg + j)] =
                k.sub(rem[static_cast<std::size_t>(i - dg + j)], k.mul(factor, g.coeff(j)));
    }
    return {Poly(k, std::move(quot)), Poly(k, std::move(rem))};
}

bool divides(const Poly& g, const Poly& f) { return divmod(f, g).second.is_zero(); }

Poly gcd(const Poly& f, const Poly& g) {
    require_same_field(f, g);
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = b;
        b = r;
    }
    return make_monic(a);
}

Poly make_monic(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("cannot normalize the zero polynomial");
    if (f.is_monic()) return f;
    const Field& k = f.field();
    Elem s = k.inv(f.leading_coeff());
    std::vector<Elem> c = f.coeffs();
    for (Elem& x : c) x = k.mul(x, s);
    return Poly(k, std::move(c));
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) throw std::invalid_argument("irreducibility is defined for degree >= 1");
    const int deg = f.degree();
    if (deg == 1) return true;
    const Field& k = f.field();
    for (int d = 1; d <= deg / 2; ++d) {
        // odometer over the lower coefficients of a monic divisor candidate
        std::vector<Elem> c(static_cast<std::size_t>(d) + 1, 0);
        c[static_cast<std::size_t>(d)] = 1;
        while (true) {
            if (divides(Poly(k, c), f)) return false;
            int i = 0;
            while (i < d && c[static_cast<std::size_t>(i)] == k.q() - 1) c[static_cast<std::size_t>(i++)] = 0;
            if (i == d) break;
            ++c[static_cast<std::size_t>(i)];
        }
    }
    return true;
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

std::vector<Poly> monic_of_degree(const Field& field, unsigned m, std::uint64_t cap) {
    std::uint64_t count = checked_pow(field.q(), m, cap, "monic enumeration");
    std::vector<Poly> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<Elem> c(m + 1, 0);
    c[m] = 1;
    while (true) {
        out.emplace_back(field, c);
        unsigned i = 0;
        while (i < m && c[i] == field.q() - 1) c[i++] = 0;
        if (i == m) break;
        ++c[i];
    }
    return out;
}

std::vector<Poly> monic_up_to_degree(const Field& field, unsigned D, std::uint64_t cap) {
    std::vector<Poly> out;
    std::uint64_t total = 0;
    for (unsigned m = 0; m <= D; ++m) {
        total += checked_pow(field.q(), m, cap, "monic enumeration");
        if (total > cap) throw CapExceeded("monic enumeration exceeds cap");
        auto part = monic_of_degree(field, m, cap);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<Poly> irreducible_monic(const Field& field, unsigned m, std::uint64_t cap) {
    if (m < 1) throw std::invalid_argument("irreducible enumeration needs degree >= 1");
    std::vector<Poly> out;
    for (const Poly& f : monic_of_degree(field, m, cap))
        if (is_irreducible(f)) out.push_back(f);
    return out;
}

int mobius(unsigned n) {
    if (n < 1) throw std::invalid_argument("mobius is defined for n >= 1");
    int factors = 0;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            ++factors;
            if (n % d == 0) return 0;
        }
    }
    if (n > 1) ++factors;
    return factors % 2 == 0 ? 1 : -1;
}

std::uint64_t count_irreducible(unsigned m, std::uint64_t q) {
    if (m < 1) throw std::invalid_argument("count_irreducible needs degree >= 1");
    std::int64_t sum = 0;
    for (unsigned d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        std::uint64_t power = 1;
        for (unsigned i = 0; i < m / d; ++i) power *= q;
        sum += mobius(d) * static_cast<std::int64_t>(power);
    }
    if (sum < 0 || sum % static_cast<std::int64_t>(m) != 0)
        throw std::logic_error("irreducible count is not integral");
    return static_cast<std::uint64_t>(sum) / m;
}

std::pair<std::vector<Poly>, int> normalize_speeds(std::vector<Poly> speeds) {
    std::vector<Poly> out;
    int dropped = 0;
    for (const Poly& f : speeds) {
        if (f.is_zero()) throw std::invalid_argument("speed polynomials must be nonzero");
        Poly m = make_monic(f);
        bool seen = false;
        for (const Poly& g : out)
            if (g == m) { seen = true; break; }
        if (seen)
            ++dropped;
        else
            out.push_back(std::move(m));
    }
    return {out, dropped};
}

}  // namespace ffr
