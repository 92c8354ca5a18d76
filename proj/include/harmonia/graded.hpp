#pragma once

#include "harmonia/linalg.hpp"
#include "harmonia/poly.hpp"

#include <unordered_map>

namespace harmonia {

/// Monomials of one total degree, in descending grlex order, with coordinate conversion.
struct MonomialBasis {
    int nvars = 0;
    unsigned degree = 0;
    std::vector<Mono> monos;
    std::unordered_map<Mono, std::size_t> index;

    MonomialBasis() = default;
    MonomialBasis(int n, unsigned d) : nvars(n), degree(d), monos(mono::of_degree(n, d)) {
        for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
    }
    std::size_t size() const { return monos.size(); }

    /// Coefficients of the degree-d part of p.
    template <class F>
    Vec<F> coords(const Poly<F>& p) const {
        Vec<F> v(monos.size(), F(0));
        for (const auto& [m, c] : p.terms())
            if (mono::degree(m) == degree) v[index.at(m)] = c;
        return v;
    }

    template <class F>
    Poly<F> poly(const Vec<F>& v) const {
        std::vector<std::pair<Mono, F>> terms;
        for (std::size_t i = 0; i < monos.size(); ++i)
            if (!v[i].is_zero()) terms.emplace_back(monos[i], v[i]);
        return Poly<F>::from_terms(nvars, std::move(terms));
    }
};

}  // namespace harmonia
