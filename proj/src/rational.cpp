#include "monodromy/rational.hpp"

#include <stdexcept>

namespace monodromy {

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + text + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

static std::size_t hash_mpz(const mpz_class& z) {
    // FNV-1a over the limbs plus the sign; cheap and stable within a run.
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1));
    const std::size_t n = mpz_size(z.get_mpz_t());
    for (std::size_t i = 0; i < n; ++i)
        mix(static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), static_cast<mp_size_t>(i))));
    return h;
}

std::size_t hash_rational(const Rational& x) {
    std::size_t h = hash_mpz(x.get_num());
    h ^= hash_mpz(x.get_den()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

} // namespace monodromy
