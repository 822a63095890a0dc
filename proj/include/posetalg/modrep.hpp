#pragma once

// Modules over an incidence algebra as representations of the Hasse quiver.

#include "posetalg/algebra.hpp"
#include "posetalg/error.hpp"
#include "posetalg/finite_algebra.hpp"
#include "posetalg/linalg.hpp"
#include "posetalg/poset.hpp"

#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace posetalg {

/// One vector space per element, one matrix per cover (a, b) of shape
/// dims[b] x dims[a]; maps[k] belongs to poset.covers()[k].
struct PosetRepresentation {
    std::vector<std::size_t> dims;
    std::vector<RatMatrix> maps;

    std::size_t total_dimension() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }
    bool is_zero() const { return total_dimension() == 0; }

    friend bool operator==(const PosetRepresentation&, const PosetRepresentation&) = default;
};

/// Component f_x : M_x -> N_x for every element x.
struct ModuleMap {
    std::vector<RatMatrix> blocks;

    friend bool operator==(const ModuleMap&, const ModuleMap&) = default;
};

inline PosetRepresentation zero_module(const Poset& p) {
    PosetRepresentation m;
    m.dims.assign(p.size(), 0);
    m.maps.assign(p.covers().size(), RatMatrix());
    return m;
}

inline void check_shapes(const Poset& p, const PosetRepresentation& m) {
    if (m.dims.size() != p.size() || m.maps.size() != p.covers().size())
        throw ValidationError("representation does not match the poset (element or cover count)");
    for (std::size_t k = 0; k < p.covers().size(); ++k) {
        const auto [a, b] = p.covers()[k];
        if (m.maps[k].rows() != m.dims[b] || m.maps[k].cols() != m.dims[a])
            throw ValidationError("map on cover has wrong shape", {{p.id(a), p.id(b)}});
    }
}

/// Composite maps M_x -> M_y along the lexicographically least cover path,
/// for every comparable pair x <= y.
class TransportTable {
public:
    TransportTable(const Poset& p, const PosetRepresentation& m) : n_(p.size()), table_(n_ * n_) {
        // fill x in reverse linear-extension order so upper covers are ready
        const auto order = linear_extension(p);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const Element x = *it;
            table_[x * n_ + x] = RatMatrix::identity(m.dims[x]);
            for (Element y = 0; y < n_; ++y) {
                if (!p.less(x, y)) continue;
                for (Element c : p.upper_covers(x))
                    if (p.leq(c, y)) {
                        table_[x * n_ + y] = *table_[c * n_ + y] * m.maps[*p.cover_index(x, c)];
                        break;
                    }
            }
        }
    }

    const RatMatrix& operator()(Element x, Element y) const {
        const auto& t = table_[x * n_ + y];
        if (!t) throw std::invalid_argument("transport: elements are not comparable in this direction");
        return *t;
    }

private:
    std::size_t n_;
    std::vector<std::optional<RatMatrix>> table_;
};

/// First pair (x, y) where two cover paths disagree, if any. Checking that
/// every first step agrees with the canonical path covers all paths by
/// induction on path length.
inline std::optional<Cover> commutativity_violation(const Poset& p, const PosetRepresentation& m) {
    const TransportTable t(p, m);
    for (Element x = 0; x < p.size(); ++x)
        for (Element y = 0; y < p.size(); ++y) {
            if (!p.less(x, y)) continue;
            for (Element c : p.upper_covers(x))
                if (p.leq(c, y) && t(c, y) * m.maps[*p.cover_index(x, c)] != t(x, y)) return Cover{x, y};
        }
    return std::nullopt;
}

inline void validate_representation(const Poset& p, const PosetRepresentation& m) {
    check_shapes(p, m);
    if (auto bad = commutativity_violation(p, m))
        throw ValidationError("representation violates a commutativity relation",
                              {{p.id(bad->first), p.id(bad->second)}});
}

inline std::vector<std::size_t> dimension_vector(const PosetRepresentation& m) { return m.dims; }

/// Direct sum of projectives P_{s_0} + P_{s_1} + ...; at x the basis is the
/// summands j with s_j <= x, in summand order.
inline PosetRepresentation projective_sum(const Poset& p, const std::vector<Element>& summands) {
    PosetRepresentation m = zero_module(p);
    std::vector<std::vector<std::size_t>> pos(p.size(), std::vector<std::size_t>(summands.size(), 0));
    for (Element x = 0; x < p.size(); ++x)
        for (std::size_t j = 0; j < summands.size(); ++j)
            if (p.leq(summands[j], x)) pos[x][j] = m.dims[x]++;
    for (std::size_t k = 0; k < p.covers().size(); ++k) {
        const auto [x, y] = p.covers()[k];
        RatMatrix a(m.dims[y], m.dims[x]);
        for (std::size_t j = 0; j < summands.size(); ++j)
            if (p.leq(summands[j], x)) a(pos[y][j], pos[x][j]) = 1;
        m.maps[k] = std::move(a);
    }
    return m;
}

/// Positions (in summand order) of the summands present at x.
inline std::vector<std::size_t> summands_at(const Poset& p, const std::vector<Element>& summands, Element x) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < summands.size(); ++j)
        if (p.leq(summands[j], x)) out.push_back(j);
    return out;
}

inline PosetRepresentation projective_module(const Poset& p, Element a) {
    if (a >= p.size()) throw ValidationError("projective_module: unknown element");
    return projective_sum(p, {a});
}

inline PosetRepresentation simple_module(const Poset& p, Element a) {
    if (a >= p.size()) throw ValidationError("simple_module: unknown element");
    PosetRepresentation m = zero_module(p);
    m.dims[a] = 1;
    for (std::size_t k = 0; k < p.covers().size(); ++k) {
        const auto [x, y] = p.covers()[k];
        m.maps[k] = RatMatrix(m.dims[y], m.dims[x]);
    }
    return m;
}

inline PosetRepresentation injective_module(const Poset& p, Element a) {
    if (a >= p.size()) throw ValidationError("injective_module: unknown element");
    PosetRepresentation m = zero_module(p);
    for (Element x = 0; x < p.size(); ++x) m.dims[x] = p.leq(x, a) ? 1 : 0;
    for (std::size_t k = 0; k < p.covers().size(); ++k) {
        const auto [x, y] = p.covers()[k];
        m.maps[k] = m.dims[x] && m.dims[y] ? RatMatrix::identity(1) : RatMatrix(m.dims[y], m.dims[x]);
    }
    return m;
}

/// K at every element, identity on every cover.
inline PosetRepresentation canonical_sincere_module(const Poset& p) {
    require_connected(p, "canonical sincere module");
    PosetRepresentation m = zero_module(p);
    m.dims.assign(p.size(), 1);
    for (auto& a : m.maps) a = RatMatrix::identity(1);
    return m;
}

inline PosetRepresentation direct_sum(const Poset& p, const PosetRepresentation& m, const PosetRepresentation& n) {
    PosetRepresentation s = zero_module(p);
    for (Element x = 0; x < p.size(); ++x) s.dims[x] = m.dims[x] + n.dims[x];
    for (std::size_t k = 0; k < p.covers().size(); ++k) {
        const auto [x, y] = p.covers()[k];
        RatMatrix a(s.dims[y], s.dims[x]);
        for (std::size_t i = 0; i < m.dims[y]; ++i)
            for (std::size_t j = 0; j < m.dims[x]; ++j) a(i, j) = m.maps[k](i, j);
        for (std::size_t i = 0; i < n.dims[y]; ++i)
            for (std::size_t j = 0; j < n.dims[x]; ++j) a(m.dims[y] + i, m.dims[x] + j) = n.maps[k](i, j);
        s.maps[k] = std::move(a);
    }
    return s;
}

inline bool is_module_map(const Poset& p, const ModuleMap& f, const PosetRepresentation& m,
                          const PosetRepresentation& n) {
    if (f.blocks.size() != p.size()) return false;
    for (Element x = 0; x < p.size(); ++x)
        if (f.blocks[x].rows() != n.dims[x] || f.blocks[x].cols() != m.dims[x]) return false;
    for (std::size_t k = 0; k < p.covers().size(); ++k) {
        const auto [x, y] = p.covers()[k];
        if (n.maps[k] * f.blocks[x] != f.blocks[y] * m.maps[k]) return false;
    }
    return true;
}

/// g after f.
inline ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
    ModuleMap h;
    for (std::size_t x = 0; x < f.blocks.size(); ++x) h.blocks.push_back(g.blocks[x] * f.blocks[x]);
    return h;
}

namespace detail {

inline std::vector<mpq_class> flatten(const ModuleMap& f) {
    std::vector<mpq_class> v;
    for (const auto& b : f.blocks) v.insert(v.end(), b.entries().begin(), b.entries().end());
    return v;
}

} // namespace detail

/// Basis of Hom(M, N): solutions of the naturality equations on every cover.
inline std::vector<ModuleMap> hom_space(const Poset& p, const PosetRepresentation& m, const PosetRepresentation& n) {
    check_shapes(p, m);
    check_shapes(p, n);
    std::vector<std::size_t> offset(p.size() + 1, 0);
    for (Element x = 0; x < p.size(); ++x) offset[x + 1] = offset[x] + n.dims[x] * m.dims[x];
    const std::size_t unknowns = offset.back();

    std::size_t eq_count = 0;
    for (const auto& [x, y] : p.covers()) eq_count += n.dims[y] * m.dims[x];
    RatMatrix sys(eq_count, unknowns);
    std::size_t row = 0;
    for (std::size_t k = 0; k < p.covers().size(); ++k) {
        const auto [x, y] = p.covers()[k];
        const RatMatrix& nm = n.maps[k];
        const RatMatrix& mm = m.maps[k];
        // (N_xy f_x - f_y M_xy)(r, c) = 0
        for (std::size_t r = 0; r < n.dims[y]; ++r)
            for (std::size_t c = 0; c < m.dims[x]; ++c, ++row) {
                for (std::size_t t = 0; t < n.dims[x]; ++t)
                    if (nm(r, t) != 0) sys(row, offset[x] + t * m.dims[x] + c) += nm(r, t);
                for (std::size_t t = 0; t < m.dims[y]; ++t)
                    if (mm(t, c) != 0) sys(row, offset[y] + r * m.dims[y] + t) -= mm(t, c);
            }
    }
    const RatMatrix ker = kernel_basis(sys);
    std::vector<ModuleMap> basis;
    for (std::size_t j = 0; j < ker.cols(); ++j) {
        ModuleMap f;
        for (Element x = 0; x < p.size(); ++x) {
            RatMatrix b(n.dims[x], m.dims[x]);
            for (std::size_t r = 0; r < n.dims[x]; ++r)
                for (std::size_t c = 0; c < m.dims[x]; ++c) b(r, c) = ker(offset[x] + r * m.dims[x] + c, j);
            f.blocks.push_back(std::move(b));
        }
        basis.push_back(std::move(f));
    }
    return basis;
}

/// A module together with its embedding, componentwise.
struct Subrepresentation {
    PosetRepresentation module;
    std::vector<RatMatrix> inclusion;  ///< inclusion[x] has shape dims(ambient)_x x dims(sub)_x
};

namespace detail {

/// Restricts the ambient maps to subspaces given by full-column-rank bases.
inline PosetRepresentation restrict_to(const Poset& p, const PosetRepresentation& ambient,
                                       const std::vector<RatMatrix>& basis) {
    PosetRepresentation s = zero_module(p);
    for (Element x = 0; x < p.size(); ++x) s.dims[x] = basis[x].cols();
    for (std::size_t k = 0; k < p.covers().size(); ++k) {
        const auto [x, y] = p.covers()[k];
        auto c = solve(basis[y], ambient.maps[k] * basis[x]);
        if (!c) throw InvariantError("subspace is not stable under a cover map");
        s.maps[k] = std::move(*c);
    }
    return s;
}

} // namespace detail

inline Subrepresentation kernel(const Poset& p, const ModuleMap& f, const PosetRepresentation& source) {
    Subrepresentation k;
    for (Element x = 0; x < p.size(); ++x) k.inclusion.push_back(kernel_basis(f.blocks[x]));
    k.module = detail::restrict_to(p, source, k.inclusion);
    return k;
}

struct RadicalTop {
    Subrepresentation radical;
    PosetRepresentation top;
    /// top_lift[x]: columns in M_x completing a basis of rad(M)_x; they map onto a basis of top(M)_x.
    std::vector<RatMatrix> top_lift;
};

/// rad(M)_x is the sum of the images of the cover maps into x; top = M / rad M.
inline RadicalTop radical_and_top(const Poset& p, const PosetRepresentation& m) {
    check_shapes(p, m);
    RadicalTop rt;
    rt.top = zero_module(p);
    for (Element x = 0; x < p.size(); ++x) {
        RatMatrix images(m.dims[x], 0);
        for (Element c : p.lower_covers(x)) images = hstack(images, m.maps[*p.cover_index(c, x)]);
        RatMatrix rad(m.dims[x], 0);
        for (auto j : independent_extension(RatMatrix(m.dims[x], 0), images))
            rad = hstack(rad, from_columns(m.dims[x], {images.column(j)}));
        const RatMatrix id = RatMatrix::identity(m.dims[x]);
        RatMatrix lift(m.dims[x], 0);
        for (auto j : independent_extension(rad, id)) lift = hstack(lift, from_columns(m.dims[x], {id.column(j)}));
        rt.top.dims[x] = lift.cols();
        rt.radical.inclusion.push_back(std::move(rad));
        rt.top_lift.push_back(std::move(lift));
    }
    rt.radical.module = detail::restrict_to(p, m, rt.radical.inclusion);
    for (std::size_t k = 0; k < p.covers().size(); ++k) {
        const auto [x, y] = p.covers()[k];
        rt.top.maps[k] = RatMatrix(rt.top.dims[y], rt.top.dims[x]);
    }
    return rt;
}

struct ProjectiveCover {
    std::vector<Element> summands;  ///< sorted; P = sum of P_s over summands
    PosetRepresentation projective;
    ModuleMap surjection;
};

inline ProjectiveCover projective_cover(const Poset& p, const PosetRepresentation& m) {
    if (m.is_zero()) throw ValidationError("projective cover of the zero module");
    const RadicalTop rt = radical_and_top(p, m);
    ProjectiveCover pc;
    std::vector<std::vector<mpq_class>> generators;
    for (Element a = 0; a < p.size(); ++a)
        for (std::size_t j = 0; j < rt.top_lift[a].cols(); ++j) {
            pc.summands.push_back(a);
            generators.push_back(rt.top_lift[a].column(j));
        }
    pc.projective = projective_sum(p, pc.summands);
    const TransportTable t(p, m);
    for (Element x = 0; x < p.size(); ++x) {
        const auto present = summands_at(p, pc.summands, x);
        RatMatrix block(m.dims[x], present.size());
        for (std::size_t c = 0; c < present.size(); ++c) {
            const std::size_t j = present[c];
            const RatMatrix img = t(pc.summands[j], x) * from_columns(m.dims[pc.summands[j]], {generators[j]});
            for (std::size_t r = 0; r < m.dims[x]; ++r) block(r, c) = img(r, 0);
        }
        pc.surjection.blocks.push_back(std::move(block));
    }
    return pc;
}

/// Transpose-dual D M, a representation of the opposite poset (same element
/// indices, reversed covers).
inline PosetRepresentation dual(const Poset& p, const Poset& op, const PosetRepresentation& m) {
    check_shapes(p, m);
    PosetRepresentation d = zero_module(op);
    d.dims = m.dims;
    for (std::size_t k = 0; k < op.covers().size(); ++k) {
        const auto [b, a] = op.covers()[k];
        const auto orig = p.cover_index(a, b);
        if (!orig) throw std::invalid_argument("dual: second poset is not the opposite of the first");
        d.maps[k] = m.maps[*orig].transpose();
    }
    return d;
}

/// End(M) with structure constants relative to the hom_space basis.
inline FiniteAlgebra endomorphism_algebra(const Poset& p, const PosetRepresentation& m) {
    const auto basis = hom_space(p, m, m);
    const std::size_t dim = basis.size();
    std::vector<std::vector<mpq_class>> flat;
    for (const auto& f : basis) flat.push_back(detail::flatten(f));
    const std::size_t len = flat.empty() ? 0 : flat.front().size();
    const RatMatrix b = from_columns(len, flat);
    FiniteAlgebra e;
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<std::vector<mpq_class>> prods;
        for (std::size_t j = 0; j < dim; ++j) prods.push_back(detail::flatten(compose(basis[i], basis[j])));
        auto coeffs = solve(b, from_columns(len, prods));
        if (!coeffs) throw InvariantError("End(M) is not closed under composition");
        e.left.push_back(std::move(*coeffs));
    }
    return e;
}

/// Indecomposable iff End(M) is local.
inline bool is_indecomposable(const Poset& p, const PosetRepresentation& m) {
    if (m.is_zero()) return false;
    return is_local_algebra(endomorphism_algebra(p, m));
}

} // namespace posetalg
