#include "schurdex/exactnum.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "schurdex/arith.hpp"
#include "schurdex/errors.hpp"

namespace schurdex {

using arith::i64;

namespace {

// Per-order reduction data: row k holds t^k mod Φ_n as φ(n) integer coordinates.
struct PowerTable {
    i64 n = 1;
    i64 phi = 1;
    std::vector<std::vector<i64>> powers;
};

// Coordinates of Q(ζ_sub) inside Q(ζ_top): an invertible φ(sub)×φ(sub) block
// of the embedding matrix, used to read subfield coordinates off φ(sub) rows.
struct SubfieldChart {
    std::vector<std::size_t> pivot_rows;
    std::vector<std::vector<Rational>> inverse;
};

std::vector<i64> poly_divide_exact(std::vector<i64> num, const std::vector<i64>& den) {
    // Both little-endian, den monic.
    std::size_t dn = den.size() - 1;
    std::vector<i64> q(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        i64 c = num[i];
        q[i - dn] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    return q;
}

class Tables {
public:
    static Tables& instance() {
        static Tables t;
        return t;
    }

    std::shared_ptr<const PowerTable> power_table(i64 n) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = powers_.find(n); it != powers_.end()) return it->second;
        }
        auto table = build_power_table(n);
        std::unique_lock lock(mutex_);
        return powers_.emplace(n, std::move(table)).first->second;
    }

    std::shared_ptr<const SubfieldChart> chart(i64 top, i64 sub) {
        auto key = std::pair{top, sub};
        {
            std::shared_lock lock(mutex_);
            if (auto it = charts_.find(key); it != charts_.end()) return it->second;
        }
        auto c = build_chart(top, sub);
        std::unique_lock lock(mutex_);
        return charts_.emplace(key, std::move(c)).first->second;
    }

private:
    std::vector<i64> cyclotomic_poly(i64 n) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = polys_.find(n); it != polys_.end()) return it->second;
        }
        std::vector<i64> num(static_cast<std::size_t>(n) + 1, 0);
        num[0] = -1;
        num[n] = 1;
        for (i64 d : arith::divisors(n))
            if (d < n) num = poly_divide_exact(num, cyclotomic_poly(d));
        std::unique_lock lock(mutex_);
        return polys_.emplace(n, std::move(num)).first->second;
    }

    std::shared_ptr<const PowerTable> build_power_table(i64 n) {
        auto phi_poly = cyclotomic_poly(n);
        auto t = std::make_shared<PowerTable>();
        t->n = n;
        t->phi = arith::euler_phi(n);
        const auto phi = static_cast<std::size_t>(t->phi);
        t->powers.assign(static_cast<std::size_t>(n), std::vector<i64>(phi, 0));
        std::vector<i64> cur(phi, 0);
        cur[0] = 1;
        for (i64 k = 0; k < n; ++k) {
            t->powers[k] = cur;
            // multiply by t and fold the degree-φ term back through the monic Φ_n
            i64 top = cur[phi - 1];
            for (std::size_t j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
            cur[0] = 0;
            if (top != 0)
                for (std::size_t j = 0; j < phi; ++j) cur[j] -= top * phi_poly[j];
        }
        return t;
    }

    std::shared_ptr<const SubfieldChart> build_chart(i64 top, i64 sub) {
        auto tt = power_table(top);
        const auto phi_top = static_cast<std::size_t>(tt->phi);
        const auto phi_sub = static_cast<std::size_t>(arith::euler_phi(sub));
        const i64 step = top / sub;
        // rows[i][j] = coordinate i of ζ_sub^j in Q(ζ_top)
        std::vector<std::vector<Rational>> rows(phi_top, std::vector<Rational>(phi_sub));
        for (std::size_t j = 0; j < phi_sub; ++j) {
            const auto& v = tt->powers[static_cast<std::size_t>(arith::mod(static_cast<i64>(j) * step, top))];
            for (std::size_t i = 0; i < phi_top; ++i) rows[i][j] = v[i];
        }
        // Greedy row selection with an incremental echelon basis.
        auto c = std::make_shared<SubfieldChart>();
        std::vector<std::vector<Rational>> basis;
        std::vector<std::size_t> lead;
        for (std::size_t i = 0; i < phi_top && c->pivot_rows.size() < phi_sub; ++i) {
            auto v = rows[i];
            for (std::size_t b = 0; b < basis.size(); ++b) {
                if (v[lead[b]] == 0) continue;
                Rational f = v[lead[b]] / basis[b][lead[b]];
                for (std::size_t j = 0; j < phi_sub; ++j) v[j] -= f * basis[b][j];
            }
            std::size_t l = 0;
            while (l < phi_sub && v[l] == 0) ++l;
            if (l == phi_sub) continue;
            basis.push_back(std::move(v));
            lead.push_back(l);
            c->pivot_rows.push_back(i);
        }
        // Gauss-Jordan inverse of the selected square block.
        std::vector<std::vector<Rational>> a(phi_sub, std::vector<Rational>(2 * phi_sub));
        for (std::size_t r = 0; r < phi_sub; ++r) {
            for (std::size_t j = 0; j < phi_sub; ++j) a[r][j] = rows[c->pivot_rows[r]][j];
            a[r][phi_sub + r] = 1;
        }
        for (std::size_t col = 0; col < phi_sub; ++col) {
            std::size_t p = col;
            while (a[p][col] == 0) ++p;
            std::swap(a[p], a[col]);
            Rational inv = 1 / a[col][col];
            for (auto& e : a[col]) e *= inv;
            for (std::size_t r = 0; r < phi_sub; ++r) {
                if (r == col || a[r][col] == 0) continue;
                Rational f = a[r][col];
                for (std::size_t j = 0; j < 2 * phi_sub; ++j) a[r][j] -= f * a[col][j];
            }
        }
        c->inverse.assign(phi_sub, std::vector<Rational>(phi_sub));
        for (std::size_t r = 0; r < phi_sub; ++r)
            for (std::size_t j = 0; j < phi_sub; ++j) c->inverse[r][j] = a[r][phi_sub + j];
        return c;
    }

    std::shared_mutex mutex_;
    std::unordered_map<i64, std::vector<i64>> polys_;
    std::unordered_map<i64, std::shared_ptr<const PowerTable>> powers_;
    std::map<std::pair<i64, i64>, std::shared_ptr<const SubfieldChart>> charts_;
};

// Accumulate weight·ζ_n^k into dense coordinates.
void add_power(std::vector<Rational>& acc, const PowerTable& t, i64 k, const Rational& weight) {
    const auto& v = t.powers[static_cast<std::size_t>(arith::mod(k, t.n))];
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) acc[i] += weight * v[i];
}

std::vector<Rational> galois_coords(i64 b, i64 m, const std::vector<Rational>& c) {
    auto t = Tables::instance().power_table(m);
    std::vector<Rational> out(static_cast<std::size_t>(t->phi));
    for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j] != 0) add_power(out, *t, static_cast<i64>(j) * b, c[j]);
    return out;
}

bool in_subfield(i64 m, const std::vector<Rational>& c, i64 sub) {
    for (i64 b = 1; b < m; ++b) {
        if (arith::gcd(b, m) != 1 || b % sub != 1 % sub || b == 1) continue;
        if (galois_coords(b, m, c) != c) return false;
    }
    return true;
}

std::vector<Rational> project(i64 m, const std::vector<Rational>& c, i64 sub) {
    auto chart = Tables::instance().chart(m, sub);
    std::vector<Rational> out(chart->inverse.size());
    for (std::size_t r = 0; r < out.size(); ++r)
        for (std::size_t j = 0; j < out.size(); ++j)
            out[r] += chart->inverse[r][j] * c[chart->pivot_rows[j]];
    return out;
}

}  // namespace

Cyclotomic::Cyclotomic(long value) {
    if (value != 0) coeffs_ = {Rational(value)};
}

Cyclotomic::Cyclotomic(const Rational& value) {
    if (value == 0) return;
    coeffs_ = {value};
    coeffs_[0].canonicalize();
}

Cyclotomic::Cyclotomic(i64 order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::canonical(i64 m, std::vector<Rational> c) {
    bool zero = true;
    for (const auto& q : c)
        if (q != 0) {
            zero = false;
            break;
        }
    if (zero) return Cyclotomic{};
    bool descended = true;
    while (descended && m > 1) {
        descended = false;
        for (i64 p : arith::prime_divisors(m)) {
            i64 sub = m / p;
            if (sub % 4 == 2) sub /= 2;
            if (!in_subfield(m, c, sub)) continue;
            c = project(m, c, sub);
            m = sub;
            descended = true;
            break;
        }
    }
    if (m == 2) m = 1;
    return Cyclotomic(m, std::move(c));
}

Cyclotomic Cyclotomic::root(i64 n, i64 k) {
    if (n < 1) throw std::domain_error("cyc_root: order must be positive");
    auto t = Tables::instance().power_table(n);
    const auto& v = t->powers[static_cast<std::size_t>(arith::mod(k, n))];
    return canonical(n, std::vector<Rational>(v.begin(), v.end()));
}

Cyclotomic Cyclotomic::from_powers(i64 n, const std::vector<Rational>& weights) {
    auto t = Tables::instance().power_table(n);
    std::vector<Rational> acc(static_cast<std::size_t>(t->phi));
    for (std::size_t k = 0; k < weights.size(); ++k)
        if (weights[k] != 0) add_power(acc, *t, static_cast<i64>(k), weights[k]);
    return canonical(n, std::move(acc));
}

Cyclotomic Cyclotomic::from_powers(i64 n, const std::vector<i64>& weights) {
    auto t = Tables::instance().power_table(n);
    std::vector<i64> acc(static_cast<std::size_t>(t->phi), 0);
    for (std::size_t k = 0; k < weights.size(); ++k) {
        if (weights[k] == 0) continue;
        const auto& v = t->powers[k % static_cast<std::size_t>(n)];
        for (std::size_t i = 0; i < v.size(); ++i) acc[i] += weights[k] * v[i];
    }
    return canonical(n, std::vector<Rational>(acc.begin(), acc.end()));
}

Rational Cyclotomic::rational_value() const {
    if (order_ != 1) throw std::domain_error("Cyclotomic::rational_value on irrational value");
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

std::vector<Rational> Cyclotomic::coordinates_in(i64 N) const {
    if (N % order_ != 0)
        throw Error(ErrorKind::IncompatibleModulus,
                    "order " + std::to_string(order_) + " does not divide " + std::to_string(N));
    auto t = Tables::instance().power_table(N);
    std::vector<Rational> out(static_cast<std::size_t>(t->phi));
    const i64 step = N / order_;
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0) add_power(out, *t, static_cast<i64>(j) * step, coeffs_[j]);
    return out;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& q : r.coeffs_) q = -q;
    return r;
}

Cyclotomic operator+(const Cyclotomic& x, const Cyclotomic& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    i64 N = arith::lcm(x.order_, y.order_);
    auto a = x.coordinates_in(N);
    auto b = y.coordinates_in(N);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return Cyclotomic::canonical(N, std::move(a));
}

Cyclotomic operator-(const Cyclotomic& x, const Cyclotomic& y) { return x + (-y); }

Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y) {
    if (x.is_zero() || y.is_zero()) return Cyclotomic{};
    if (x.is_rational() || y.is_rational()) {
        const Cyclotomic& irr = x.is_rational() ? y : x;
        Rational s = x.is_rational() ? x.coeffs_[0] : y.coeffs_[0];
        Cyclotomic r = irr;
        for (auto& q : r.coeffs_) q *= s;
        return r;
    }
    i64 N = arith::lcm(x.order_, y.order_);
    auto a = x.coordinates_in(N);
    auto b = y.coordinates_in(N);
    auto t = Tables::instance().power_table(N);
    std::vector<Rational> prod(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) prod[i + j] += a[i] * b[j];
    }
    std::vector<Rational> acc(static_cast<std::size_t>(t->phi));
    for (std::size_t k = 0; k < prod.size(); ++k)
        if (prod[k] != 0) add_power(acc, *t, static_cast<i64>(k), prod[k]);
    return Cyclotomic::canonical(N, std::move(acc));
}

Cyclotomic operator/(const Cyclotomic& x, const Cyclotomic& y) { return x * y.inverse(); }

Cyclotomic Cyclotomic::pow(i64 k) const {
    if (k < 0) return inverse().pow(-k);
    Cyclotomic result(1L), base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic::inverse of zero");
    if (is_rational()) return Cyclotomic(Rational(1) / coeffs_[0]);
    Cyclotomic others(1L);
    for (i64 b : arith::units(order_))
        if (b != 1) others = others * apply_galois_exponent(b, *this);
    Rational norm = (*this * others).rational_value();
    return others * Cyclotomic(Rational(1) / norm);
}

std::string Cyclotomic::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        const Rational& q = coeffs_[j];
        if (q == 0) continue;
        bool neg = q < 0;
        Rational mag = neg ? Rational(-q) : q;
        if (neg) os << '-';
        else if (!first) os << '+';
        first = false;
        if (j == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << "E(" << order_ << ')';
        if (j > 1) os << '^' << j;
    }
    return os.str();
}

Cyclotomic apply_galois_exponent(i64 b, const Cyclotomic& x) {
    if (x.is_rational()) return x;
    // The conductor is Galois-stable, so the order is unchanged.
    return Cyclotomic(x.order_, galois_coords(arith::mod(b, x.order_), x.order_, x.coeffs_));
}

GaloisAut::GaloisAut(i64 modulus, i64 exponent) : modulus_(modulus) {
    if (modulus < 1) throw std::domain_error("GaloisAut: modulus must be positive");
    exponent_ = arith::mod(exponent, modulus);
    if (modulus == 1) exponent_ = 1;
    if (arith::gcd(exponent_, modulus) != 1)
        throw Error(ErrorKind::NotCoprime, std::to_string(exponent) + " is not a unit mod " +
                                               std::to_string(modulus));
}

GaloisAut GaloisAut::compose(const GaloisAut& other) const {
    if (other.modulus_ != modulus_)
        throw Error(ErrorKind::IncompatibleModulus, "composing automorphisms of different moduli");
    return GaloisAut(modulus_, arith::mulmod(exponent_, other.exponent_, modulus_));
}

GaloisAut GaloisAut::power(i64 k) const {
    i64 ord = order();
    return GaloisAut(modulus_, arith::powmod(exponent_, arith::mod(k, ord), modulus_));
}

i64 GaloisAut::order() const { return arith::mult_order(exponent_, modulus_); }

Cyclotomic cyc_root(i64 n, i64 k) { return Cyclotomic::root(n, k); }
Cyclotomic cyc_add(const Cyclotomic& x, const Cyclotomic& y) { return x + y; }
Cyclotomic cyc_mul(const Cyclotomic& x, const Cyclotomic& y) { return x * y; }
bool cyc_eq(const Cyclotomic& x, const Cyclotomic& y) { return x == y; }

Cyclotomic galois_apply(const GaloisAut& s, const Cyclotomic& x) {
    if (s.modulus() % x.order() != 0)
        throw Error(ErrorKind::IncompatibleModulus,
                    "element of order " + std::to_string(x.order()) + " under σ mod " +
                        std::to_string(s.modulus()));
    return apply_galois_exponent(s.exponent(), x);
}

std::optional<std::pair<i64, i64>> as_root_of_unity(const Cyclotomic& x) {
    if (x.is_zero()) return std::nullopt;
    const i64 m = x.order();
    auto t = Tables::instance().power_table(m);
    const auto& c = x.coeffs();
    for (i64 k = 0; k < m; ++k) {
        const auto& v = t->powers[static_cast<std::size_t>(k)];
        bool plus = true, minus = true;
        for (std::size_t i = 0; i < v.size() && (plus || minus); ++i) {
            if (c[i] != v[i]) plus = false;
            if (c[i] != -v[i]) minus = false;
        }
        i64 M = m, K = k;
        if (!plus && !minus) continue;
        if (minus) {
            M = 2 * m;
            K = m + 2 * k;
        }
        i64 g = arith::gcd(M, K);
        return std::pair{M / g, K / g};
    }
    return std::nullopt;
}

std::optional<i64> root_of_unity_order(const Cyclotomic& x) {
    if (auto r = as_root_of_unity(x)) return r->first;
    return std::nullopt;
}

Cyclotomic conjugate_product(const Cyclotomic& x, const GaloisAut& s, i64 k) {
    if (k < 1) throw std::domain_error("conjugate_product: k must be positive");
    if (s.modulus() % x.order() != 0)
        throw Error(ErrorKind::IncompatibleModulus,
                    "element of order " + std::to_string(x.order()) + " under σ mod " +
                        std::to_string(s.modulus()));
    Cyclotomic acc = x, cur = x;
    for (i64 i = 1; i < k; ++i) {
        cur = galois_apply(s, cur);
        acc = acc * cur;
    }
    return acc;
}

Cyclotomic complex_conjugate(const Cyclotomic& x) { return apply_galois_exponent(-1, x); }

}  // namespace schurdex
