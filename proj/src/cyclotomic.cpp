#include "monodromy/cyclotomic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace monodromy {

namespace {

using Poly = std::vector<Rational>; // coefficient vector, index = exponent

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Euclidean division over Q[x]; divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(Poly num, const Poly& den) {
    Poly quot;
    if (den.empty()) throw std::domain_error("polynomial division by zero");
    poly_trim(num);
    if (num.size() < den.size()) return {quot, num};
    quot.assign(num.size() - den.size() + 1, Rational(0));
    const Rational lead = den.back();
    for (std::size_t i = num.size(); i-- >= den.size();) {
        if (num[i] != 0) {
            Rational c = num[i] / lead;
            quot[i - den.size() + 1] = c;
            for (std::size_t j = 0; j < den.size(); ++j)
                num[i - den.size() + 1 + j] -= c * den[j];
        }
        if (i == 0) break;
    }
    poly_trim(num);
    return {quot, num};
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    poly_trim(r);
    return r;
}

} // namespace

int euler_phi(int k) {
    if (k <= 0) throw std::invalid_argument("euler_phi needs k >= 1");
    int result = k, n = k;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::shared_ptr<const std::vector<Rational>> cyclotomic_polynomial(int k) {
    if (k <= 0) throw std::invalid_argument("cyclotomic_polynomial needs k >= 1");
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const Poly>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
    }
    // (x^k - 1) divided by Phi_d for every proper divisor d of k.
    Poly p(static_cast<std::size_t>(k) + 1, Rational(0));
    p[0] = Rational(-1);
    p[static_cast<std::size_t>(k)] = Rational(1);
    for (int d = 1; d < k; ++d) {
        if (k % d != 0) continue;
        auto phi_d = cyclotomic_polynomial(d);
        auto [q, r] = poly_divmod(p, *phi_d);
        if (!r.empty()) throw std::logic_error("cyclotomic polynomial division not exact");
        p = std::move(q);
    }
    auto sp = std::make_shared<const Poly>(std::move(p));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(k, sp);
    return it->second;
}

namespace {

// Fold exponents mod k, then reduce modulo Phi_k; result has length k with
// zeros at indices >= phi(k).
std::vector<Rational> reduce_coeffs(int k, const std::vector<Rational>& raw) {
    std::vector<Rational> v(static_cast<std::size_t>(k), Rational(0));
    for (std::size_t j = 0; j < raw.size(); ++j)
        if (raw[j] != 0) v[j % static_cast<std::size_t>(k)] += raw[j];
    auto phi = cyclotomic_polynomial(k);
    const std::size_t m = phi->size() - 1; // degree phi(k)
    for (std::size_t i = v.size(); i-- > m;) {
        if (v[i] == 0) continue;
        Rational c = v[i];
        for (std::size_t j = 0; j <= m; ++j) v[i - m + j] -= c * (*phi)[j];
    }
    return v;
}

} // namespace

Cyclotomic Cyclotomic::from_coeffs(int k, std::vector<Rational> coeffs) {
    if (k <= 0) throw std::invalid_argument("cyclotomic order must be >= 1");
    Cyclotomic x;
    x.order_ = k;
    x.coeffs_ = reduce_coeffs(k, coeffs);
    return x;
}

Cyclotomic Cyclotomic::root_of_unity(int k, long power) {
    if (k <= 0) throw std::invalid_argument("cyclotomic order must be >= 1");
    long j = power % k;
    if (j < 0) j += k;
    std::vector<Rational> v(static_cast<std::size_t>(k), Rational(0));
    v[static_cast<std::size_t>(j)] = Rational(1);
    return from_coeffs(k, std::move(v));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t j = 1; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::embedded(int m) const {
    if (m % order_ != 0) throw std::invalid_argument("embedding target order must be a multiple");
    if (m == order_) return *this;
    const int r = m / order_;
    std::vector<Rational> v(static_cast<std::size_t>(m), Rational(0));
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0) v[j * static_cast<std::size_t>(r)] = coeffs_[j];
    return from_coeffs(m, std::move(v));
}

Cyclotomic Cyclotomic::conj() const {
    std::vector<Rational> v(static_cast<std::size_t>(order_), Rational(0));
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0) v[(static_cast<std::size_t>(order_) - j) % static_cast<std::size_t>(order_)] += coeffs_[j];
    return from_coeffs(order_, std::move(v));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero cyclotomic");
    if (is_rational()) return Cyclotomic(Rational(1) / coeffs_[0]);
    // Extended Euclid against Phi_k: u*a + v*Phi = gcd = nonzero constant.
    Poly a(coeffs_);
    poly_trim(a);
    Poly r0 = a, r1 = *cyclotomic_polynomial(order_);
    Poly s0 = {Rational(1)}, s1 = {};
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(r0, r1);
        Poly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) throw std::logic_error("cyclotomic inverse: gcd with Phi_k not constant");
    const Rational c = r0[0];
    for (auto& x : s0) x /= c;
    return from_coeffs(order_, std::move(s0));
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic result(Rational(1));
    Cyclotomic base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    const int m = std::lcm(a.order_, b.order_);
    Cyclotomic ea = a.embedded(m), eb = b.embedded(m);
    for (std::size_t j = 0; j < ea.coeffs_.size(); ++j) ea.coeffs_[j] += eb.coeffs_[j];
    return ea;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    const int m = std::lcm(a.order_, b.order_);
    Cyclotomic ea = a.embedded(m), eb = b.embedded(m);
    for (std::size_t j = 0; j < ea.coeffs_.size(); ++j) ea.coeffs_[j] -= eb.coeffs_[j];
    return ea;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    const int m = std::lcm(a.order_, b.order_);
    const Cyclotomic ea = a.embedded(m), eb = b.embedded(m);
    std::vector<Rational> v(static_cast<std::size_t>(m), Rational(0));
    for (std::size_t i = 0; i < ea.coeffs_.size(); ++i) {
        if (ea.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < eb.coeffs_.size(); ++j)
            if (eb.coeffs_[j] != 0)
                v[(i + j) % static_cast<std::size_t>(m)] += ea.coeffs_[i] * eb.coeffs_[j];
    }
    return Cyclotomic::from_coeffs(m, std::move(v));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    const int m = std::lcm(a.order_, b.order_);
    return a.embedded(m).coeffs_ == b.embedded(m).coeffs_;
}

std::string Cyclotomic::to_string() const {
    std::string out;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        std::string term = monodromy::to_string(coeffs_[j] > 0 || out.empty() ? coeffs_[j] : -coeffs_[j]);
        if (j > 0) {
            if (term == "1") term.clear();
            else term += "*";
            term += "z";
            if (j > 1) term += "^" + std::to_string(j);
        }
        if (out.empty()) out = term;
        else out += (coeffs_[j] > 0 ? " + " : " - ") + term;
    }
    if (out.empty()) return "0";
    if (order_ > 1) out += "  (z = zeta_" + std::to_string(order_) + ")";
    return out;
}

std::string Cyclotomic::canonical_key() const {
    std::string key = std::to_string(order_) + ":";
    for (const auto& c : coeffs_) {
        key += monodromy::to_string(c);
        key += ',';
    }
    return key;
}

namespace {

struct Mpfr {
    mpfr_t v;
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v, prec); }
    ~Mpfr() { mpfr_clear(v); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
};

} // namespace

int sign_real_cyclotomic(const Cyclotomic& x) {
    if (x.is_zero()) return 0;
    if (x.is_rational()) return sign(x.rational_value());
    if (!(x == x.conj()))
        throw std::invalid_argument("sign_real_cyclotomic: value is not real");
    const int k = x.order();
    for (mpfr_prec_t prec = 64; prec <= (mpfr_prec_t{1} << 20); prec *= 2) {
        Mpfr lo(prec), hi(prec), pi_lo(prec), pi_hi(prec), ang_lo(prec), ang_hi(prec);
        Mpfr cs(prec), width(prec), t_lo(prec), t_hi(prec);
        mpfr_set_zero(lo.v, 1);
        mpfr_set_zero(hi.v, 1);
        mpfr_const_pi(pi_lo.v, MPFR_RNDD);
        mpfr_const_pi(pi_hi.v, MPFR_RNDU);
        const auto& c = x.coeffs();
        for (int j = 0; j < k; ++j) {
            if (c[static_cast<std::size_t>(j)] == 0) continue;
            const mpq_class& q = c[static_cast<std::size_t>(j)];
            if (j == 0) {
                mpfr_add_q(lo.v, lo.v, q.get_mpq_t(), MPFR_RNDD);
                mpfr_add_q(hi.v, hi.v, q.get_mpq_t(), MPFR_RNDU);
                continue;
            }
            // angle = 2*pi*j/k, positive, bracketed with directed rounding
            mpq_class f(2L * j, k);
            f.canonicalize();
            mpfr_mul_q(ang_lo.v, pi_lo.v, f.get_mpq_t(), MPFR_RNDD);
            mpfr_mul_q(ang_hi.v, pi_hi.v, f.get_mpq_t(), MPFR_RNDU);
            mpfr_sub(width.v, ang_hi.v, ang_lo.v, MPFR_RNDU);
            // cos is 1-Lipschitz: cos(angle) lies in cos(ang_lo) +- width, widened a ulp
            mpfr_cos(cs.v, ang_lo.v, MPFR_RNDD);
            mpfr_sub(t_lo.v, cs.v, width.v, MPFR_RNDD);
            mpfr_nextbelow(t_lo.v);
            mpfr_cos(cs.v, ang_lo.v, MPFR_RNDU);
            mpfr_add(t_hi.v, cs.v, width.v, MPFR_RNDU);
            mpfr_nextabove(t_hi.v);
            // term = q * [t_lo, t_hi]
            if (sgn(q) > 0) {
                mpfr_mul_q(t_lo.v, t_lo.v, q.get_mpq_t(), MPFR_RNDD);
                mpfr_mul_q(t_hi.v, t_hi.v, q.get_mpq_t(), MPFR_RNDU);
            } else {
                Mpfr swap_lo(prec);
                mpfr_mul_q(swap_lo.v, t_hi.v, q.get_mpq_t(), MPFR_RNDD);
                mpfr_mul_q(t_hi.v, t_lo.v, q.get_mpq_t(), MPFR_RNDU);
                mpfr_set(t_lo.v, swap_lo.v, MPFR_RNDD);
            }
            mpfr_add(lo.v, lo.v, t_lo.v, MPFR_RNDD);
            mpfr_add(hi.v, hi.v, t_hi.v, MPFR_RNDU);
        }
        if (mpfr_sgn(lo.v) > 0) return 1;
        if (mpfr_sgn(hi.v) < 0) return -1;
    }
    throw std::logic_error("sign_real_cyclotomic: interval refinement did not separate from zero");
}

} // namespace monodromy
