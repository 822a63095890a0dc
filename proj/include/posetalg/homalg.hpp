#pragma once

// Minimal projective resolutions, projective and injective dimension,
// global dimension and Ext between simples.

#include "posetalg/error.hpp"
#include "posetalg/linalg.hpp"
#include "posetalg/modrep.hpp"
#include "posetalg/poset.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace posetalg {

/// 0 -> P_len -> ... -> P_1 -> P_0 -> M -> 0, term k = sum of P_a over terms[k].
struct Resolution {
    std::vector<std::vector<Element>> terms;
    std::vector<std::vector<std::size_t>> multiplicities;  ///< multiplicities[k][a]
    std::vector<PosetRepresentation> modules;              ///< P_k as representations
    ModuleMap augmentation;                                ///< P_0 -> M
    std::vector<ModuleMap> differentials;                  ///< differentials[k-1] : P_k -> P_{k-1}
    /// labels[k-1](i, j): scalar of the map from summand j of P_k to summand i
    /// of P_{k-1}; zero unless terms[k-1][i] < terms[k][j].
    std::vector<RatMatrix> labels;

    std::size_t length() const { return terms.size() - 1; }
};

namespace detail {

/// Scalar labels of a map between projective sums, read off at the source
/// summands' own elements.
inline RatMatrix scalar_labels(const Poset& p, const std::vector<Element>& target, const std::vector<Element>& source,
                               const ModuleMap& f) {
    RatMatrix lab(target.size(), source.size());
    for (std::size_t j = 0; j < source.size(); ++j) {
        const Element a = source[j];
        const auto src_here = summands_at(p, source, a);
        const auto tgt_here = summands_at(p, target, a);
        const std::size_t col = static_cast<std::size_t>(std::find(src_here.begin(), src_here.end(), j) - src_here.begin());
        for (std::size_t r = 0; r < tgt_here.size(); ++r) lab(tgt_here[r], j) = f.blocks[a](r, col);
    }
    return lab;
}

inline std::vector<std::size_t> multiplicity_vector(const Poset& p, const std::vector<Element>& summands) {
    std::vector<std::size_t> m(p.size(), 0);
    for (Element a : summands) ++m[a];
    return m;
}

} // namespace detail

/// Throws InvariantError unless `res` is an exact, minimal projective resolution of m.
inline void verify_resolution(const Poset& p, const PosetRepresentation& m, const Resolution& res) {
    if (res.terms.empty()) throw InvariantError("resolution has no terms");
    for (Element x = 0; x < p.size(); ++x) {
        // surjective augmentation
        if (rank(res.augmentation.blocks[x]) != m.dims[x]) throw InvariantError("augmentation is not surjective");
        for (std::size_t k = 0; k <= res.length(); ++k) {
            const RatMatrix& out = k == 0 ? res.augmentation.blocks[x] : res.differentials[k - 1].blocks[x];
            const std::size_t dim_here = res.modules[k].dims[x];
            const std::size_t image_in = k < res.length() ? rank(res.differentials[k].blocks[x]) : 0;
            if (k < res.length() && !(out * res.differentials[k].blocks[x]).is_zero())
                throw InvariantError("resolution differentials do not compose to zero");
            if (dim_here - rank(out) != image_in) throw InvariantError("resolution is not exact");
        }
    }
    for (std::size_t k = 0; k < res.labels.size(); ++k)
        for (std::size_t i = 0; i < res.terms[k].size(); ++i)
            for (std::size_t j = 0; j < res.terms[k + 1].size(); ++j)
                if (res.terms[k][i] == res.terms[k + 1][j] && res.labels[k](i, j) != 0)
                    throw InvariantError("resolution is not minimal: a differential leaves the radical");
}

inline Resolution minimal_projective_resolution(const Poset& p, const PosetRepresentation& m) {
    check_shapes(p, m);
    if (m.is_zero()) throw ValidationError("projective resolution of the zero module");
    Resolution res;
    PosetRepresentation current = m;
    std::vector<RatMatrix> into_previous;  // kernel inclusion into P_{k-1}
    for (std::size_t k = 0;; ++k) {
        if (k >= std::max<std::size_t>(p.size(), 1))
            throw InvariantError("projective resolution exceeded length |poset| - 1");
        ProjectiveCover pc = projective_cover(p, current);
        if (k == 0) {
            res.augmentation = pc.surjection;
        } else {
            ModuleMap d;
            for (Element x = 0; x < p.size(); ++x) d.blocks.push_back(into_previous[x] * pc.surjection.blocks[x]);
            res.labels.push_back(detail::scalar_labels(p, res.terms.back(), pc.summands, d));
            res.differentials.push_back(std::move(d));
        }
        res.multiplicities.push_back(detail::multiplicity_vector(p, pc.summands));
        res.terms.push_back(pc.summands);
        Subrepresentation ker = kernel(p, pc.surjection, pc.projective);
        res.modules.push_back(std::move(pc.projective));
        if (ker.module.is_zero()) break;
        current = std::move(ker.module);
        into_previous = std::move(ker.inclusion);
    }
    verify_resolution(p, m, res);
    return res;
}

inline std::size_t projective_dimension(const Poset& p, const PosetRepresentation& m) {
    return minimal_projective_resolution(p, m).length();
}

/// Computed as the projective dimension of D M over the opposite poset.
inline std::size_t injective_dimension(const Poset& p, const PosetRepresentation& m) {
    const Poset op = opposite(p);
    return projective_dimension(op, dual(p, op, m));
}

inline std::vector<Resolution> simple_resolutions(const Poset& p) {
    std::vector<Resolution> out;
    for (Element a = 0; a < p.size(); ++a) out.push_back(minimal_projective_resolution(p, simple_module(p, a)));
    return out;
}

/// Maximum projective dimension of a simple module.
inline std::size_t global_dimension(const Poset& p) {
    require_connected(p, "global dimension");
    std::size_t g = 0;
    for (const auto& r : simple_resolutions(p)) g = std::max(g, r.length());
    return g;
}

/// ext[k][a][b] = dim Ext^k(S_a, S_b), k = 0..gldim.
struct ExtTable {
    std::vector<std::vector<std::vector<std::size_t>>> ext;

    std::size_t operator()(std::size_t k, Element a, Element b) const {
        return k < ext.size() ? ext[k][a][b] : 0;
    }
};

/// In a minimal resolution of S_a, dim Ext^k(S_a, S_b) is the multiplicity of P_b in degree k.
inline ExtTable ext_dims_between_simples(const Poset& p) {
    const auto res = simple_resolutions(p);
    std::size_t g = 0;
    for (const auto& r : res) g = std::max(g, r.length());
    ExtTable t;
    t.ext.assign(g + 1, std::vector<std::vector<std::size_t>>(p.size(), std::vector<std::size_t>(p.size(), 0)));
    for (Element a = 0; a < p.size(); ++a)
        for (std::size_t k = 0; k <= res[a].length(); ++k) t.ext[k][a] = res[a].multiplicities[k];
    return t;
}

/// dim Ext^k(M, N) from the minimal resolution of M and Hom(P_b, N) = N_b.
inline std::size_t ext_dimension(const Poset& p, const PosetRepresentation& m, const PosetRepresentation& n,
                                 std::size_t k) {
    check_shapes(p, n);
    const Resolution res = minimal_projective_resolution(p, m);
    if (k > res.length()) return 0;
    const TransportTable t(p, n);
    // coboundary Hom(P_j, N) -> Hom(P_{j+1}, N)
    auto coboundary = [&](std::size_t j) {
        const auto& lower = res.terms[j];
        const auto& upper = res.terms[j + 1];
        std::vector<std::size_t> row_off(upper.size() + 1, 0), col_off(lower.size() + 1, 0);
        for (std::size_t u = 0; u < upper.size(); ++u) row_off[u + 1] = row_off[u] + n.dims[upper[u]];
        for (std::size_t l = 0; l < lower.size(); ++l) col_off[l + 1] = col_off[l] + n.dims[lower[l]];
        RatMatrix d(row_off.back(), col_off.back());
        for (std::size_t u = 0; u < upper.size(); ++u)
            for (std::size_t l = 0; l < lower.size(); ++l) {
                const mpq_class& lambda = res.labels[j](l, u);
                if (lambda == 0) continue;
                const RatMatrix block = lambda * t(lower[l], upper[u]);
                for (std::size_t r = 0; r < block.rows(); ++r)
                    for (std::size_t c = 0; c < block.cols(); ++c) d(row_off[u] + r, col_off[l] + c) = block(r, c);
            }
        return d;
    };
    std::size_t hom_k = 0;
    for (Element b : res.terms[k]) hom_k += n.dims[b];
    const std::size_t out_rank = k < res.length() ? rank(coboundary(k)) : 0;
    const std::size_t in_rank = k > 0 ? rank(coboundary(k - 1)) : 0;
    return hom_k - out_rank - in_rank;
}

/// sum_k (-1)^k dimvec(P_k); equals dimvec(M) for any resolution of M.
inline std::vector<long> alternating_dimension_vector(const Poset& p, const Resolution& res) {
    std::vector<long> v(p.size(), 0);
    for (std::size_t k = 0; k <= res.length(); ++k)
        for (Element x = 0; x < p.size(); ++x)
            v[x] += (k % 2 == 0 ? 1 : -1) * static_cast<long>(res.modules[k].dims[x]);
    return v;
}

} // namespace posetalg
