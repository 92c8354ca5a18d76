#include "harmonia/poly.hpp"

namespace harmonia {
namespace mono {

Mono from_exponents(const std::vector<unsigned>& e) {
    if (e.size() > static_cast<std::size_t>(kMaxVars)) throw std::invalid_argument("monomial: at most 8 variables");
    Mono m = 0;
    unsigned total = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        total += e[i];
        if (e[i] > kMaxDegree || total > kMaxDegree) throw std::overflow_error("monomial: total degree exceeds 255");
        m |= Mono{e[i]} << shift(static_cast<int>(i));
    }
    return m;
}

std::vector<unsigned> to_exponents(Mono m, int nvars) {
    std::vector<unsigned> e(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i) e[i] = exp(m, i);
    return e;
}

Mono mul(Mono a, Mono b) {
    if (degree(a) + degree(b) > kMaxDegree) throw std::overflow_error("monomial: total degree exceeds 255");
    return a + b;
}

namespace {
void fill(int nvars, int var, unsigned left, Mono acc, std::vector<Mono>& out) {
    if (var == nvars - 1) {
        out.push_back(acc | (Mono{left} << shift(var)));
        return;
    }
    for (unsigned e = left + 1; e-- > 0;) fill(nvars, var + 1, left - e, acc | (Mono{e} << shift(var)), out);
}
}  // namespace

std::vector<Mono> of_degree(int nvars, unsigned d) {
    if (d > kMaxDegree) throw std::overflow_error("monomial: total degree exceeds 255");
    std::vector<Mono> out;
    if (nvars == 0) {
        if (d == 0) out.push_back(0);
        return out;
    }
    fill(nvars, 0, d, 0, out);
    return out;
}

}  // namespace mono

Rational falling_factor(Mono e, Mono b) {
    mpz_class r = 1;
    for (int i = 0; i < kMaxVars; ++i) {
        unsigned ei = mono::exp(e, i), bi = mono::exp(b, i);
        for (unsigned k = 0; k < bi; ++k) r *= ei - k;
    }
    return Rational(r);
}

std::vector<std::string> default_names(int nvars) {
    std::vector<std::string> names;
    for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
    return names;
}

}  // namespace harmonia
