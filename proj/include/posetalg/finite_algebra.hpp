#pragma once

// Finite-dimensional algebras given by structure constants, and a
// characteristic-zero locality test via the trace form.

#include "posetalg/error.hpp"
#include "posetalg/linalg.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace posetalg {

/// left[i](k, j) is the coefficient of q_k in q_i * q_j, i.e. left[i] is
/// the matrix of left multiplication by the basis element q_i.
struct FiniteAlgebra {
    std::vector<RatMatrix> left;

    std::size_t dimension() const noexcept { return left.size(); }

    std::vector<mpq_class> multiply(const std::vector<mpq_class>& x, const std::vector<mpq_class>& y) const {
        const std::size_t n = dimension();
        std::vector<mpq_class> z(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (y[j] == 0) continue;
                for (std::size_t k = 0; k < n; ++k)
                    if (left[i](k, j) != 0) z[k] += x[i] * y[j] * left[i](k, j);
            }
        }
        return z;
    }

    /// Left multiplication by an arbitrary element.
    RatMatrix left_matrix(const std::vector<mpq_class>& x) const {
        const std::size_t n = dimension();
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            if (x[i] != 0) m = m + x[i] * left[i];
        return m;
    }
};

/// Identity of the regular representation holds iff L_{q_i q_j} = L_i L_j for all i, j.
inline bool is_associative(const FiniteAlgebra& e) {
    const std::size_t n = e.dimension();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (e.left_matrix(e.left[i].column(j)) != e.left[i] * e.left[j]) return false;
    return true;
}

/// Two-sided identity element, if one exists.
inline std::optional<std::vector<mpq_class>> identity_element(const FiniteAlgebra& e) {
    const std::size_t n = e.dimension();
    // unknowns u_0..u_{n-1}: sum_i u_i q_i q_j = q_j and sum_i u_i q_j q_i = q_j
    RatMatrix sys(2 * n * n, n), rhs(2 * n * n, 1);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t r1 = j * n + k, r2 = n * n + j * n + k;
            for (std::size_t i = 0; i < n; ++i) {
                sys(r1, i) = e.left[i](k, j);
                sys(r2, i) = e.left[j](k, i);
            }
            rhs(r1, 0) = rhs(r2, 0) = (j == k) ? 1 : 0;
        }
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    return sol->column(0);
}

/// Dimension of the radical of the trace form tr(L_{xy}); in characteristic
/// zero this is the Jacobson radical.
inline std::size_t jacobson_radical_dimension(const FiniteAlgebra& e) {
    const std::size_t n = e.dimension();
    std::vector<mpq_class> tr(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) tr[k] += e.left[k](l, l);
    RatMatrix form(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (e.left[i](k, j) != 0) form(i, j) += e.left[i](k, j) * tr[k];
    return n - rank(form);
}

/// Local iff dim E/J(E) = 1. Throws InvariantError on non-associative or
/// non-unital input.
inline bool is_local_algebra(const FiniteAlgebra& e) {
    if (e.dimension() == 0) return false;
    if (!is_associative(e)) throw InvariantError("is_local_algebra: structure constants are not associative");
    if (!identity_element(e)) throw InvariantError("is_local_algebra: algebra has no identity");
    return e.dimension() - jacobson_radical_dimension(e) == 1;
}

} // namespace posetalg
