#include "harmonia/cyclotomic.hpp"
#include "harmonia/rational.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace harmonia {

std::string FieldSpec::to_string() const {
    return is_rational() ? "rational" : "cyclotomic(" + std::to_string(order) + ")";
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    if (s.front() == '+') s.erase(s.begin());
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational::parse: bad number '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("Rational::parse: zero denominator");
    q.canonicalize();
    return Rational(q);
}

namespace {

std::vector<long> poly_mul(const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Exact division of integer polynomials with monic divisor.
std::vector<long> poly_div_exact(std::vector<long> a, const std::vector<long>& b) {
    const std::size_t db = b.size() - 1;
    std::vector<long> q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        long c = a[i];
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    for (std::size_t i = 0; i < db; ++i)
        if (a[i] != 0) throw std::logic_error("cyclotomic_polynomial: inexact division");
    return q;
}

std::vector<long> compute_phi(int k) {
    // x^k - 1 = prod_{d | k} Phi_d
    std::vector<long> num(k + 1, 0);
    num[0] = -1;
    num[k] = 1;
    for (int d = 1; d < k; ++d)
        if (k % d == 0) num = poly_div_exact(num, cyclotomic_polynomial(d));
    return num;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int k) {
    if (k < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be >= 1");
    static std::mutex mu;
    static std::map<int, std::vector<long>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
    }
    std::vector<long> p = (k == 1) ? std::vector<long>{-1, 1} : compute_phi(k);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(k, std::move(p)).first->second;
}

int euler_phi(int k) {
    int r = k;
    int m = k;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            r -= r / p;
        }
    }
    if (m > 1) r -= r / m;
    return r;
}

// ---------------------------------------------------------------------------
// Cyclo

namespace {
int normalise_order(int order) {
    if (order < 0) throw std::invalid_argument("Cyclo: negative order");
    return order <= 2 ? 0 : order;
}
}  // namespace

Cyclo::Cyclo(int order, std::vector<Rational> coords) : order_(normalise_order(order)), coords_(std::move(coords)) {
    if (coords_.empty()) coords_.emplace_back(0);
    if (order_ == 0) {
        // Q: coordinates beyond the constant must vanish after reduction mod (x-1) or (x+1).
        Rational c = 0;
        Rational x = order == 2 ? Rational(-1) : Rational(1);
        Rational p = 1;
        for (const auto& a : coords_) {
            c += a * p;
            p *= x;
        }
        coords_ = {c};
        return;
    }
    reduce();
}

Cyclo Cyclo::root_of_unity(int order, long power) {
    if (order < 1) throw std::invalid_argument("root_of_unity: order must be >= 1");
    long e = ((power % order) + order) % order;
    if (order <= 2) return Cyclo((order == 2 && e == 1) ? -1 : 1);
    std::vector<Rational> c(static_cast<std::size_t>(e) + 1, Rational(0));
    c[static_cast<std::size_t>(e)] = 1;
    return Cyclo(order, std::move(c));
}

Cyclo Cyclo::rational_in(int order, const Rational& r) {
    Cyclo c(r);
    c.adopt(normalise_order(order));
    return c;
}

Cyclo Cyclo::parse(std::string_view text) {
    std::string s(text);
    auto at = s.find('@');
    if (at == std::string::npos) return Cyclo(Rational::parse(s));
    int order = std::stoi(s.substr(at + 1));
    std::string body = s.substr(0, at);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw std::invalid_argument("Cyclo::parse: expected [..]@k");
    body = body.substr(1, body.size() - 2);
    std::vector<Rational> coords;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) coords.push_back(Rational::parse(item));
    if (normalise_order(order) != 0 && coords.size() != static_cast<std::size_t>(euler_phi(order)))
        throw std::invalid_argument("Cyclo::parse: coordinate count does not match phi(k)");
    return Cyclo(order, std::move(coords));
}

void Cyclo::adopt(int order) {
    if (order == order_ || order == 0) return;
    if (order_ != 0)
        throw FieldMismatch("Cyclo: mixing Q(zeta_" + std::to_string(order_) + ") and Q(zeta_" +
                            std::to_string(order) + ")");
    order_ = order;
    coords_.resize(static_cast<std::size_t>(euler_phi(order)), Rational(0));
}

void Cyclo::reduce() {
    const auto& phi = cyclotomic_polynomial(order_);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = coords_.size(); i-- > deg;) {
        if (coords_[i].is_zero()) continue;
        Rational c = coords_[i];
        for (std::size_t j = 0; j <= deg; ++j)
            if (phi[j] != 0) coords_[i - deg + j] -= c * Rational(phi[j]);
    }
    coords_.resize(deg, Rational(0));
}

bool Cyclo::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (!coords_[i].is_zero()) return false;
    return true;
}

bool Cyclo::is_one() const { return is_rational() && coords_[0].is_one(); }

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    if (o.order_ != order_) {
        if (o.order_ == 0) {
            coords_[0] += o.coords_[0];
            return *this;
        }
        adopt(o.order_);
    }
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    if (o.order_ != order_) {
        if (o.order_ == 0) {
            coords_[0] -= o.coords_[0];
            return *this;
        }
        adopt(o.order_);
    }
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    if (o.order_ == 0) {
        const Rational& s = o.coords_[0];
        if (s.is_one()) return *this;
        for (auto& c : coords_) c *= s;
        return *this;
    }
    if (order_ == 0) {
        Rational s = coords_[0];
        *this = o;
        if (!s.is_one())
            for (auto& c : coords_) c *= s;
        return *this;
    }
    if (o.order_ != order_) adopt(o.order_);  // throws
    std::vector<Rational> prod(coords_.size() + o.coords_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coords_.size(); ++j)
            if (!o.coords_[j].is_zero()) prod[i + j] += coords_[i] * o.coords_[j];
    }
    coords_ = std::move(prod);
    reduce();
    return *this;
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.order_ == b.order_) return a.coords_ == b.coords_;
    if (a.order_ == 0) return b.is_rational() && b.coords_[0] == a.coords_[0];
    if (b.order_ == 0) return a.is_rational() && a.coords_[0] == b.coords_[0];
    throw FieldMismatch("Cyclo: comparing elements of different cyclotomic fields");
}

Cyclo Cyclo::conjugate() const {
    if (order_ == 0) return *this;
    // zeta^i -> zeta^{k-i}
    std::vector<Rational> c(static_cast<std::size_t>(order_), Rational(0));
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i].is_zero()) continue;
        std::size_t j = i == 0 ? 0 : static_cast<std::size_t>(order_) - i;
        c[j] += coords_[i];
    }
    return Cyclo(order_, std::move(c));
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclo: division by zero");
    if (order_ == 0) return Cyclo(coords_[0].inverse());
    // Solve (multiplication-by-this) * x = 1 over Q.
    const std::size_t n = coords_.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1, Rational(0)));
    for (std::size_t j = 0; j < n; ++j) {
        Cyclo basis = Cyclo::root_of_unity(order_, static_cast<long>(j));
        Cyclo col = *this * basis;
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col.coords_[i];
    }
    m[0][n] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (m[p][c].is_zero()) ++p;
        std::swap(m[p], m[c]);
        Rational inv = m[c][c].inverse();
        for (std::size_t k = c; k <= n; ++k) m[c][k] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c].is_zero()) continue;
            Rational f = m[r][c];
            for (std::size_t k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
    return Cyclo(order_, std::move(x));
}

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo result(1);
    Cyclo base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

std::string Cyclo::to_string() const {
    if (order_ == 0) return coords_[0].to_string();
    std::string s = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ',';
        s += coords_[i].to_string();
    }
    return s + "]@" + std::to_string(order_);
}

}  // namespace harmonia
