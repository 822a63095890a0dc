#pragma once

// The incidence algebra on the comparable-pair basis, and its Cartan data.
//
// Direction conventions used throughout the library (right modules,
// representations of the Hasse quiver with arrows a -> b for a < b):
//
//   P_a is supported on {x : a <= x}          I_a on {x : x <= a}
//   Hom(P_a, P_b) = e_b A e_a != 0  iff  b <= a
//   Ext^1(S_a, S_b) != 0           iff  b covers a
//   a radical complex differential P_a -> P_b has b < a strictly

#include "posetalg/error.hpp"
#include "posetalg/linalg.hpp"
#include "posetalg/poset.hpp"

#include <cstddef>
#include <limits>
#include <vector>

namespace posetalg {

class IncidenceAlgebra {
public:
    using Vector = std::vector<mpq_class>;
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    explicit IncidenceAlgebra(Poset p, bool allow_disconnected = false) : poset_(std::move(p)) {
        if (!allow_disconnected) require_connected(poset_, "incidence algebra");
        order_ = linear_extension(poset_);
        const std::size_t n = poset_.size();
        std::vector<std::size_t> pos(n);
        for (std::size_t i = 0; i < n; ++i) pos[order_[i]] = i;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                if (poset_.leq(order_[i], order_[j])) basis_.emplace_back(order_[i], order_[j]);
        index_.assign(n * n, npos);
        for (std::size_t k = 0; k < basis_.size(); ++k) index_[basis_[k].first * n + basis_[k].second] = k;
    }

    const Poset& poset() const noexcept { return poset_; }
    const std::vector<Element>& order() const noexcept { return order_; }
    /// Comparable pairs (a, b), a <= b, in linear-extension order.
    const std::vector<Cover>& basis() const noexcept { return basis_; }
    std::size_t dimension() const noexcept { return basis_.size(); }

    std::size_t basis_index(Element a, Element b) const { return index_[a * poset_.size() + b]; }

    Vector unit(Element a, Element b) const {
        const std::size_t k = basis_index(a, b);
        if (k == npos) throw ValidationError("e_ab is not a basis element: elements not comparable");
        Vector v(dimension());
        v[k] = 1;
        return v;
    }

    Vector one() const {
        Vector v(dimension());
        for (Element a = 0; a < poset_.size(); ++a) v[basis_index(a, a)] = 1;
        return v;
    }

    /// Bilinear extension of e_ab * e_bc = e_ac.
    Vector multiply(const Vector& x, const Vector& y) const {
        if (x.size() != dimension() || y.size() != dimension())
            throw std::invalid_argument("multiply: vector length differs from algebra dimension");
        Vector z(dimension());
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            const auto [a, b] = basis_[i];
            for (std::size_t j = 0; j < y.size(); ++j) {
                if (y[j] == 0 || basis_[j].first != b) continue;
                z[basis_index(a, basis_[j].second)] += x[i] * y[j];
            }
        }
        return z;
    }

private:
    Poset poset_;
    std::vector<Element> order_;
    std::vector<Cover> basis_;
    std::vector<std::size_t> index_;
};

inline IncidenceAlgebra build_algebra(const Poset& p, bool allow_disconnected = false) {
    return IncidenceAlgebra(p, allow_disconnected);
}

struct CartanData {
    std::vector<Element> order;
    IntMatrix cartan;   ///< zeta matrix: cartan(i, j) = 1 iff order[i] <= order[j]
    IntMatrix moebius;  ///< inverse of cartan
    RatMatrix coxeter;  ///< -(cartan^-T) * cartan
    std::vector<mpz_class> coxeter_polynomial;  ///< lowest degree first
};

inline CartanData cartan_data(const IncidenceAlgebra& alg) {
    const Poset& p = alg.poset();
    const std::size_t n = p.size();
    CartanData d;
    d.order = alg.order();
    d.cartan = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d.cartan(i, j) = p.leq(d.order[i], d.order[j]) ? 1 : 0;

    const RatMatrix c = to_rational(d.cartan);
    const auto inv = inverse(c);
    if (!inv) throw InvariantError("Cartan matrix is singular");
    d.moebius = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const mpq_class& v = (*inv)(i, j);
            if (v.get_den() != 1) throw InvariantError("Moebius matrix is not integral");
            d.moebius(i, j) = v.get_num();
        }
    d.coxeter = mpq_class(-1) * (inv->transpose() * c);
    for (const auto& coef : characteristic_polynomial(d.coxeter)) {
        if (coef.get_den() != 1) throw InvariantError("Coxeter polynomial is not integral");
        d.coxeter_polynomial.push_back(coef.get_num());
    }
    return d;
}

/// dim Hom(P_a, P_b) = dim e_b A e_a, which is 1 iff b <= a.
inline int dimension_of_hom_between_projectives(const IncidenceAlgebra& alg, Element a, Element b) {
    return alg.poset().leq(b, a) ? 1 : 0;
}

} // namespace posetalg
