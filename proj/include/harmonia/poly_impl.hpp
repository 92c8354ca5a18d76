#pragma once

// Template definitions for poly.hpp.

namespace harmonia {

namespace detail {
inline bool term_less(Mono a, Mono b) { return mono::grlex_greater(a, b); }
}  // namespace detail

template <class F>
Poly<F> Poly<F>::constant(int nvars, const F& c) {
    Poly p(nvars);
    if (!c.is_zero()) p.t_.emplace_back(Mono{0}, c);
    return p;
}

template <class F>
Poly<F> Poly<F>::variable(int nvars, int i, const F& c) {
    if (i < 0 || i >= nvars) throw std::out_of_range("Poly::variable: index out of range");
    Poly p(nvars);
    if (!c.is_zero()) p.t_.emplace_back(mono::unit(i), c);
    return p;
}

template <class F>
Poly<F> Poly<F>::monomial(int nvars, Mono m, const F& c) {
    Poly p(nvars);
    if (!c.is_zero()) p.t_.emplace_back(m, c);
    return p;
}

template <class F>
Poly<F> Poly<F>::linear(const std::vector<F>& coeffs) {
    const int n = static_cast<int>(coeffs.size());
    Poly p(n);
    for (int i = 0; i < n; ++i)
        if (!coeffs[i].is_zero()) p.t_.emplace_back(mono::unit(i), coeffs[i]);
    return p;  // units are already in descending order
}

template <class F>
Poly<F> Poly<F>::from_terms(int nvars, std::vector<Term> terms) {
    Poly p(nvars);
    p.t_ = std::move(terms);
    p.normalise();
    return p;
}

template <class F>
void Poly<F>::normalise() {
    std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return detail::term_less(a.first, b.first); });
    std::vector<Term> out;
    out.reserve(t_.size());
    for (auto& t : t_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else {
            if (!out.empty() && out.back().second.is_zero()) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    t_ = std::move(out);
}

template <class F>
Poly<F> Poly<F>::homogeneous_part(int d) const {
    Poly p(n_);
    for (const auto& t : t_)
        if (static_cast<int>(mono::degree(t.first)) == d) p.t_.push_back(t);
    return p;
}

template <class F>
F Poly<F>::coeff(Mono m) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), m,
                               [](const Term& a, Mono b) { return detail::term_less(a.first, b); });
    if (it != t_.end() && it->first == m) return it->second;
    return F(0);
}

template <class F>
Poly<F>& Poly<F>::operator+=(const Poly& o) {
    if (o.n_ != n_) throw std::invalid_argument("Poly: variable count mismatch");
    if (o.t_.empty()) return *this;
    if (t_.empty()) return *this = o;
    std::vector<Term> out;
    out.reserve(t_.size() + o.t_.size());
    std::size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        if (t_[i].first == o.t_[j].first) {
            F c = t_[i].second + o.t_[j].second;
            if (!c.is_zero()) out.emplace_back(t_[i].first, std::move(c));
            ++i;
            ++j;
        } else if (detail::term_less(t_[i].first, o.t_[j].first)) {
            out.push_back(std::move(t_[i++]));
        } else {
            out.push_back(o.t_[j++]);
        }
    }
    for (; i < t_.size(); ++i) out.push_back(std::move(t_[i]));
    for (; j < o.t_.size(); ++j) out.push_back(o.t_[j]);
    t_ = std::move(out);
    return *this;
}

template <class F>
Poly<F>& Poly<F>::operator-=(const Poly& o) {
    return *this += -o;
}

template <class F>
Poly<F>& Poly<F>::operator*=(const F& c) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    if (c.is_one()) return *this;
    for (auto& t : t_) t.second *= c;
    return *this;
}

template <class F>
Poly<F> Poly<F>::operator-() const {
    Poly p = *this;
    for (auto& t : p.t_) t.second = -t.second;
    return p;
}

template <class F>
Poly<F> Poly<F>::mul(const Poly& a, const Poly& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("Poly: variable count mismatch");
    Poly p(a.n_);
    if (a.t_.empty() || b.t_.empty()) return p;
    if (mono::degree(a.t_.front().first) + mono::degree(b.t_.front().first) > kMaxDegree)
        throw std::overflow_error("Poly: total degree exceeds 255");
    const Poly& small = a.t_.size() <= b.t_.size() ? a : b;
    const Poly& large = a.t_.size() <= b.t_.size() ? b : a;
    if (small.t_.size() == 1) {
        // Shifting by one monomial keeps the order.
        p.t_.reserve(large.t_.size());
        for (const auto& t : large.t_) p.t_.emplace_back(t.first + small.t_[0].first, t.second * small.t_[0].second);
        return p;
    }
    p.t_.reserve(a.t_.size() * b.t_.size());
    for (const auto& x : small.t_)
        for (const auto& y : large.t_) p.t_.emplace_back(x.first + y.first, x.second * y.second);
    p.normalise();
    return p;
}

template <class F>
Poly<F> Poly<F>::pow(unsigned e) const {
    Poly result = constant(n_, F(1));
    Poly base = *this;
    while (e) {
        if (e & 1U) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

template <class F>
Poly<F> Poly<F>::derivative(int i) const {
    Poly p(n_);
    const Mono u = mono::unit(i);
    for (const auto& t : t_) {
        unsigned e = mono::exp(t.first, i);
        if (e == 0) continue;
        p.t_.emplace_back(t.first - u, t.second * F(static_cast<long>(e)));
    }
    return p;
}

template <class F>
Poly<F> Poly<F>::derivative(const std::vector<F>& xi) const {
    if (static_cast<int>(xi.size()) != n_) throw std::invalid_argument("Poly::derivative: direction size mismatch");
    Poly p(n_);
    for (int i = 0; i < n_; ++i)
        if (!xi[i].is_zero()) p += derivative(i) * xi[i];
    return p;
}

template <class F>
Poly<F> Poly<F>::derivative_multi(Mono beta) const {
    if (beta == 0) return *this;
    Poly p(n_);
    for (const auto& t : t_) {
        if (!mono::divides(beta, t.first)) continue;
        p.t_.emplace_back(t.first - beta, t.second * F(falling_factor(t.first, beta)));
    }
    return p;
}

template <class F>
Poly<F> Poly<F>::substitute(const std::vector<Poly>& images) const {
    if (static_cast<int>(images.size()) != n_) throw std::invalid_argument("Poly::substitute: wrong image count");
    const int m = n_ == 0 ? 0 : images[0].n_;
    for (const auto& im : images)
        if (im.n_ != m) throw std::invalid_argument("Poly::substitute: images disagree on variable count");
    if (t_.empty()) return Poly(m);
    if (n_ == 0) return constant(0, t_[0].second);

    bool monomial_images = true;
    for (const auto& im : images) monomial_images = monomial_images && im.t_.size() == 1;
    if (monomial_images) {
        std::vector<Term> out;
        out.reserve(t_.size());
        for (const auto& t : t_) {
            Mono mm = 0;
            F c = t.second;
            for (int i = 0; i < n_; ++i) {
                unsigned e = mono::exp(t.first, i);
                if (!e) continue;
                for (unsigned k = 0; k < e; ++k) mm = mono::mul(mm, images[i].t_[0].first);
                const F& ci = images[i].t_[0].second;
                if (!ci.is_one()) c *= ci.pow(static_cast<long>(e));
            }
            out.emplace_back(mm, std::move(c));
        }
        return from_terms(m, std::move(out));
    }

    // Power caches, then one accumulation pass.
    std::vector<std::vector<Poly>> powers(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        unsigned maxe = 0;
        for (const auto& t : t_) maxe = std::max(maxe, mono::exp(t.first, i));
        powers[i].reserve(maxe + 1);
        powers[i].push_back(constant(m, F(1)));
        for (unsigned k = 1; k <= maxe; ++k) powers[i].push_back(powers[i].back() * images[i]);
    }
    Poly acc(m);
    std::vector<Term> pending;
    for (const auto& t : t_) {
        Poly term = constant(m, t.second);
        for (int i = 0; i < n_; ++i) {
            unsigned e = mono::exp(t.first, i);
            if (e) term = term * powers[i][e];
        }
        for (auto& x : term.t_) pending.push_back(std::move(x));
        if (pending.size() > 200000) {
            acc += from_terms(m, std::move(pending));
            pending.clear();
        }
    }
    acc += from_terms(m, std::move(pending));
    return acc;
}

template <class F>
F Poly<F>::evaluate(const std::vector<F>& point) const {
    if (static_cast<int>(point.size()) != n_) throw std::invalid_argument("Poly::evaluate: wrong point size");
    F acc(0);
    for (const auto& t : t_) {
        F v = t.second;
        for (int i = 0; i < n_; ++i) {
            unsigned e = mono::exp(t.first, i);
            if (e) v *= point[i].pow(static_cast<long>(e));
        }
        acc += v;
    }
    return acc;
}

template <class F>
std::string Poly<F>::to_string(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    const auto nm = names.empty() ? default_names(n_) : names;
    std::string s;
    for (std::size_t k = 0; k < t_.size(); ++k) {
        const auto& [m, c] = t_[k];
        std::string cs = c.to_string();
        bool neg = false;
        if constexpr (std::is_same_v<F, Rational>) {
            neg = c.sign() < 0;
            if (neg) cs = (-c).to_string();
        } else if (c.is_rational() && c.rational_part().sign() < 0) {
            neg = true;
            cs = (-c).to_string();
        }
        if (k == 0)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        std::string ms;
        for (int i = 0; i < n_; ++i) {
            unsigned e = mono::exp(m, i);
            if (!e) continue;
            if (!ms.empty()) ms += "*";
            ms += nm[i];
            if (e > 1) ms += "^" + std::to_string(e);
        }
        const bool unit = cs == "1";
        if (ms.empty())
            s += cs;
        else if (unit)
            s += ms;
        else
            s += (cs.find_first_of("+-[") != std::string::npos ? "(" + cs + ")" : cs) + "*" + ms;
    }
    return s;
}

template <class F>
std::optional<Poly<F>> divide_exact(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
    if (a.nvars() != b.nvars()) throw std::invalid_argument("divide_exact: variable count mismatch");
    const int n = a.nvars();
    std::vector<typename Poly<F>::Term> q;
    Poly<F> r = a;
    const auto& [lb, lc] = b.leading();
    const F lc_inv = lc.inverse();
    while (!r.is_zero()) {
        const auto& [lr, rc] = r.leading();
        if (!mono::divides(lb, lr)) return std::nullopt;
        Mono m = lr - lb;
        F c = rc * lc_inv;
        q.emplace_back(m, c);
        r -= Poly<F>::monomial(n, m, c) * b;
    }
    return Poly<F>::from_terms(n, std::move(q));
}

}  // namespace harmonia
