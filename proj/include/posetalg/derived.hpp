#pragma once

// Radical complexes of projectives over an incidence algebra, their
// endomorphism algebras in the homotopy category, and a bounded search for
// long indecomposable complexes.
//
// Because every Hom(P_a, P_b) is at most one-dimensional, a map between sums
// of indecomposable projectives is a scalar matrix whose (i, j) entry labels
// the basis map P_{source_j} -> P_{target_i}; it may be nonzero only when
// target_i <= source_j. Composition is matrix multiplication.

#include "posetalg/error.hpp"
#include "posetalg/finite_algebra.hpp"
#include "posetalg/homalg.hpp"
#include "posetalg/linalg.hpp"
#include "posetalg/poset.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace posetalg {

/// terms[k] lists the summands in degree lowest_degree + k; diff[k] is the
/// differential from degree k+1 to degree k (homological indexing), of shape
/// |terms[k]| x |terms[k+1]|.
struct ProjComplex {
    int lowest_degree = 0;
    std::vector<std::vector<Element>> terms;
    std::vector<RatMatrix> diff;

    int highest_degree() const { return lowest_degree + static_cast<int>(terms.size()) - 1; }
    std::size_t summand_count() const {
        std::size_t n = 0;
        for (const auto& t : terms) n += t.size();
        return n;
    }

    friend bool operator==(const ProjComplex&, const ProjComplex&) = default;
};

/// Throws InvariantError unless shapes agree, every entry labels an existing
/// map, d^2 = 0 and both end terms are nonzero.
inline void validate_complex(const Poset& p, const ProjComplex& c) {
    if (c.terms.empty()) throw InvariantError("complex has no terms");
    if (c.terms.front().empty() || c.terms.back().empty()) throw InvariantError("complex end terms must be nonzero");
    if (c.diff.size() + 1 != c.terms.size()) throw InvariantError("complex differential count does not match terms");
    for (std::size_t k = 0; k < c.diff.size(); ++k) {
        const RatMatrix& d = c.diff[k];
        if (d.rows() != c.terms[k].size() || d.cols() != c.terms[k + 1].size())
            throw InvariantError("complex differential has the wrong shape");
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (std::size_t j = 0; j < d.cols(); ++j)
                if (d(i, j) != 0 && !p.leq(c.terms[k][i], c.terms[k + 1][j]))
                    throw InvariantError("differential entry labels a zero Hom space");
        if (k + 1 < c.diff.size() && !(d * c.diff[k + 1]).is_zero())
            throw InvariantError("complex differentials do not compose to zero");
    }
}

inline std::size_t complex_length(const ProjComplex& c) {
    if (c.summand_count() == 0) throw ValidationError("length of the zero complex");
    return c.terms.size() - 1;
}

/// No differential entry joins two copies of the same projective.
inline bool is_radical(const ProjComplex& c) {
    for (std::size_t k = 0; k < c.diff.size(); ++k)
        for (std::size_t i = 0; i < c.diff[k].rows(); ++i)
            for (std::size_t j = 0; j < c.diff[k].cols(); ++j)
                if (c.diff[k](i, j) != 0 && c.terms[k][i] == c.terms[k + 1][j]) return false;
    return true;
}

inline ProjComplex stalk_complex(std::vector<Element> summands, int degree = 0) {
    ProjComplex c;
    c.lowest_degree = degree;
    c.terms.push_back(std::move(summands));
    return c;
}

/// The minimal resolution P_len -> ... -> P_0 with M removed, P_k in degree k.
inline ProjComplex resolution_as_complex(const Resolution& res) {
    ProjComplex c;
    c.terms = res.terms;
    c.diff = res.labels;
    return c;
}

/// Endomorphisms of a complex in the homotopy category. Chain maps are
/// flattened degree by degree, row-major over the allowed entries.
struct HomotopyEnd {
    RatMatrix chain_end_basis;       ///< columns: basis of degree-0 chain maps
    RatMatrix nullhomotopic_basis;   ///< columns: spanning set reduced to a basis
    std::size_t quotient_dim = 0;
    FiniteAlgebra multiplication_table;  ///< the quotient algebra
    RatMatrix quotient_basis;        ///< columns: chain maps representing the quotient basis
};

namespace detail {

struct EndLayout {
    // slot[k][i * n_k + j] = variable index of entry (i, j) of f_k, or npos
    std::vector<std::vector<std::size_t>> slot;
    std::size_t count = 0;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

inline EndLayout end_layout(const Poset& p, const ProjComplex& c) {
    EndLayout L;
    for (const auto& t : c.terms) {
        std::vector<std::size_t> s(t.size() * t.size(), EndLayout::npos);
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = 0; j < t.size(); ++j)
                if (p.leq(t[i], t[j])) s[i * t.size() + j] = L.count++;
        L.slot.push_back(std::move(s));
    }
    return L;
}

inline std::vector<RatMatrix> unflatten(const ProjComplex& c, const EndLayout& L, const RatMatrix& cols, std::size_t col) {
    std::vector<RatMatrix> f;
    for (std::size_t k = 0; k < c.terms.size(); ++k) {
        const std::size_t n = c.terms[k].size();
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (L.slot[k][i * n + j] != EndLayout::npos) m(i, j) = cols(L.slot[k][i * n + j], col);
        f.push_back(std::move(m));
    }
    return f;
}

inline std::vector<mpq_class> flatten(const EndLayout& L, const std::vector<RatMatrix>& f) {
    std::vector<mpq_class> v(L.count);
    for (std::size_t k = 0; k < f.size(); ++k) {
        const std::size_t n = f[k].rows();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t s = L.slot[k][i * n + j];
                if (s != EndLayout::npos) v[s] = f[k](i, j);
                else if (f[k](i, j) != 0) throw InvariantError("chain map entry outside the allowed pattern");
            }
    }
    return v;
}

} // namespace detail

inline HomotopyEnd homotopy_endomorphisms(const Poset& p, const ProjComplex& c) {
    validate_complex(p, c);
    const detail::EndLayout L = detail::end_layout(p, c);
    const std::size_t K = c.terms.size();

    // d_k f_{k+1} - f_k d_k = 0 for every differential
    std::size_t eq_count = 0;
    for (std::size_t k = 0; k + 1 < K; ++k) eq_count += c.terms[k].size() * c.terms[k + 1].size();
    RatMatrix sys(eq_count, L.count);
    std::size_t row = 0;
    for (std::size_t k = 0; k + 1 < K; ++k) {
        const auto& lo = c.terms[k];
        const auto& hi = c.terms[k + 1];
        const RatMatrix& d = c.diff[k];
        for (std::size_t i = 0; i < lo.size(); ++i)
            for (std::size_t j = 0; j < hi.size(); ++j, ++row) {
                for (std::size_t m = 0; m < hi.size(); ++m) {
                    const std::size_t s = L.slot[k + 1][m * hi.size() + j];
                    if (s != detail::EndLayout::npos && d(i, m) != 0) sys(row, s) += d(i, m);
                }
                for (std::size_t m = 0; m < lo.size(); ++m) {
                    const std::size_t s = L.slot[k][i * lo.size() + m];
                    if (s != detail::EndLayout::npos && d(m, j) != 0) sys(row, s) -= d(m, j);
                }
            }
    }
    HomotopyEnd h;
    h.chain_end_basis = kernel_basis(sys);

    // f = d h + h d for each allowed entry of h_k : degree k -> degree k+1
    std::vector<std::vector<mpq_class>> null_cols;
    for (std::size_t k = 0; k + 1 < K; ++k) {
        const auto& lo = c.terms[k];
        const auto& hi = c.terms[k + 1];
        for (std::size_t a = 0; a < hi.size(); ++a)
            for (std::size_t b = 0; b < lo.size(); ++b) {
                if (!p.leq(hi[a], lo[b])) continue;
                RatMatrix hk(hi.size(), lo.size());
                hk(a, b) = 1;
                std::vector<RatMatrix> f;
                for (std::size_t t = 0; t < K; ++t) f.emplace_back(c.terms[t].size(), c.terms[t].size());
                f[k] = c.diff[k] * hk;          // d_k h_k on degree k
                f[k + 1] = hk * c.diff[k];      // h_k d_k on degree k+1
                null_cols.push_back(detail::flatten(L, f));
            }
    }
    const RatMatrix null_span = from_columns(L.count, null_cols);
    const RowEchelon ne = rref(null_span);
    std::vector<std::vector<mpq_class>> null_basis;
    for (auto col : ne.pivots) null_basis.push_back(null_span.column(col));
    h.nullhomotopic_basis = from_columns(L.count, null_basis);

    const auto picked = independent_extension(h.nullhomotopic_basis, h.chain_end_basis);
    std::vector<std::vector<mpq_class>> qcols;
    for (auto j : picked) qcols.push_back(h.chain_end_basis.column(j));
    h.quotient_basis = from_columns(L.count, qcols);
    h.quotient_dim = qcols.size();
    if (h.quotient_dim + h.nullhomotopic_basis.cols() != h.chain_end_basis.cols())
        throw InvariantError("null-homotopic maps are not contained in the chain endomorphisms");

    const RatMatrix full = hstack(h.quotient_basis, h.nullhomotopic_basis);
    const std::size_t q = h.quotient_dim;
    std::vector<std::vector<RatMatrix>> maps(q);
    for (std::size_t i = 0; i < q; ++i) maps[i] = detail::unflatten(c, L, h.quotient_basis, i);
    h.multiplication_table.left.assign(q, RatMatrix(q, q));
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            std::vector<RatMatrix> prod;
            for (std::size_t k = 0; k < K; ++k) prod.push_back(maps[i][k] * maps[j][k]);
            const auto v = detail::flatten(L, prod);
            RatMatrix rhs(L.count, 1);
            for (std::size_t r = 0; r < L.count; ++r) rhs(r, 0) = v[r];
            const auto sol = solve(full, rhs);
            if (!sol) throw InvariantError("product of chain maps is not a chain map");
            for (std::size_t k = 0; k < q; ++k) h.multiplication_table.left[i](k, j) = (*sol)(k, 0);
        }
    return h;
}

/// Indecomposable in the homotopy category iff its endomorphism ring there is local.
inline bool is_indecomposable_complex(const Poset& p, const ProjComplex& c) {
    const HomotopyEnd h = homotopy_endomorphisms(p, c);
    return h.quotient_dim > 0 && is_local_algebra(h.multiplication_table);
}

struct ProbeOptions {
    std::size_t max_len = 3;
    std::size_t max_mult = 2;            ///< bound on the number of summands in each degree
    std::vector<long> coeff_pool{0, 1, -1};
    std::size_t sample_budget = 0;       ///< random complexes drawn after enumeration
    std::uint64_t seed = 0;
    std::size_t node_limit = 0;          ///< 0 = unlimited
    bool seed_with_resolutions = true;  ///< try minimal resolutions of simples before enumerating
};

enum class WitnessSource { resolution, enumeration, random };

inline const char* to_string(WitnessSource s) {
    switch (s) {
    case WitnessSource::resolution: return "resolution";
    case WitnessSource::enumeration: return "enumeration";
    case WitnessSource::random: return "random";
    }
    return "?";
}

struct ProbeWitness {
    ProjComplex complex;
    WitnessSource source = WitnessSource::enumeration;
    std::size_t endomorphism_dim = 0;
};

struct LengthSearch {
    std::size_t length = 0;
    std::optional<ProbeWitness> witness;
    bool exhausted = false;   ///< every candidate of this length was examined
    std::size_t nodes = 0;
    std::size_t complexes_checked = 0;
};

struct ProbeReport {
    ProbeOptions options;
    std::vector<LengthSearch> by_length;   ///< index = length, 0..max_len
    std::optional<std::size_t> max_witness_length;
    std::size_t random_draws = 0;
    std::size_t random_valid = 0;
    bool node_limit_hit = false;
    std::string searched_space;
    std::string note;
};

namespace detail {

class ProbeSearch {
public:
    ProbeSearch(const Poset& p, const ProbeOptions& o) : p_(p), o_(o) {
        for (long v : o.coeff_pool)
            if (v != 0) nonzero_.push_back(v);
        std::sort(nonzero_.begin(), nonzero_.end(), [](long a, long b) {
            return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a > b;
        });
        nonzero_.erase(std::unique(nonzero_.begin(), nonzero_.end()), nonzero_.end());
        symmetric_ = std::all_of(nonzero_.begin(), nonzero_.end(), [&](long v) {
            return std::find(nonzero_.begin(), nonzero_.end(), -v) != nonzero_.end();
        });
        // multisets of 1..max_mult elements, nondecreasing
        std::vector<Element> cur;
        std::function<void(Element)> gen = [&](Element from) {
            if (!cur.empty()) multisets_.push_back(cur);
            if (cur.size() == o_.max_mult) return;
            for (Element e = from; e < p_.size(); ++e) {
                cur.push_back(e);
                gen(e);
                cur.pop_back();
            }
        };
        gen(0);
        std::stable_sort(multisets_.begin(), multisets_.end(),
                         [](const auto& a, const auto& b) { return a.size() < b.size(); });
        has_larger_.assign(p_.size(), false);
        for (Element a = 0; a < p_.size(); ++a)
            for (Element b = 0; b < p_.size(); ++b)
                if (p_.less(a, b)) has_larger_[a] = true;
    }

    /// Depth-first search over complexes of exactly `len`+1 degrees; stops at
    /// the first indecomposable one.
    LengthSearch run(std::size_t len) {
        LengthSearch s;
        s.length = len;
        len_ = len;
        stats_ = &s;
        found_.reset();
        aborted_ = false;
        c_ = ProjComplex{};
        // column() holds references into these across recursion
        c_.terms.reserve(len + 1);
        c_.diff.reserve(len + 1);
        degree(0);
        s.witness = found_;
        s.exhausted = !found_ && !aborted_;
        return s;
    }

    bool node_limit_hit() const { return limit_hit_; }

private:
    bool tick() {
        ++stats_->nodes;
        ++total_nodes_;
        if (o_.node_limit != 0 && total_nodes_ > o_.node_limit) {
            aborted_ = limit_hit_ = true;
            return false;
        }
        return true;
    }

    bool stopped() const { return found_.has_value() || aborted_; }

    void degree(std::size_t k) {
        for (const auto& ms : multisets_) {
            if (stopped()) return;
            if (!tick()) return;
            // a summand with no column in d (degree 0) needs a larger element above it
            if (k == 0 && len_ > 0 &&
                std::any_of(ms.begin(), ms.end(), [&](Element e) { return !has_larger_[e]; }))
                continue;
            if (k == 0 && len_ == 0) {
                c_.terms = {ms};
                leaf();
                continue;
            }
            c_.terms.push_back(ms);
            if (k == 0) {
                degree(1);
            } else {
                c_.diff.emplace_back(c_.terms[k - 1].size(), ms.size());
                column(k, 0);
                c_.diff.pop_back();
            }
            c_.terms.pop_back();
        }
    }

    // choose column j of diff[k-1] (the map out of degree k)
    void column(std::size_t k, std::size_t j) {
        const auto& tgt = c_.terms[k - 1];
        const auto& src = c_.terms[k];
        RatMatrix& d = c_.diff[k - 1];
        if (j == src.size()) {
            finish_degree(k);
            return;
        }
        std::vector<std::size_t> slots;
        for (std::size_t i = 0; i < tgt.size(); ++i)
            if (p_.less(tgt[i], src[j])) slots.push_back(i);
        std::vector<long> vals(slots.size(), 0);
        // enumerate all assignments of pool values to slots (0 first)
        std::function<void(std::size_t, bool)> assign = [&](std::size_t pos, bool nonzero_seen) {
            if (stopped()) return;
            if (pos == slots.size()) {
                if (!tick()) return;
                const bool top = k == len_;
                if (top && !nonzero_seen) return;  // isolated top summand
                for (std::size_t i = 0; i < tgt.size(); ++i) d(i, j) = 0;
                for (std::size_t s = 0; s < slots.size(); ++s) d(slots[s], j) = vals[s];
                // copies of one element: columns non-increasing
                if (j > 0 && src[j - 1] == src[j] && column_less(d, j - 1, j)) return;
                if (k >= 2 && !composes_to_zero(k, j)) return;
                column(k, j + 1);
                for (std::size_t i = 0; i < tgt.size(); ++i) d(i, j) = 0;
                return;
            }
            vals[pos] = 0;
            assign(pos + 1, nonzero_seen);
            for (long v : nonzero_) {
                // the first nonzero entry of each column can be made positive
                if (symmetric_ && !nonzero_seen && v < 0) continue;
                vals[pos] = v;
                assign(pos + 1, true);
            }
            vals[pos] = 0;
        };
        assign(0, false);
    }

    static bool column_less(const RatMatrix& d, std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < d.rows(); ++i) {
            if (d(i, a) != d(i, b)) return d(i, a) < d(i, b);
        }
        return false;
    }

    bool composes_to_zero(std::size_t k, std::size_t j) const {
        const RatMatrix& lower = c_.diff[k - 2];
        const RatMatrix& d = c_.diff[k - 1];
        for (std::size_t r = 0; r < lower.rows(); ++r) {
            mpq_class s = 0;
            for (std::size_t m = 0; m < lower.cols(); ++m)
                if (lower(r, m) != 0 && d(m, j) != 0) s += lower(r, m) * d(m, j);
            if (s != 0) return false;
        }
        return true;
    }

    void finish_degree(std::size_t k) {
        const RatMatrix& d = c_.diff[k - 1];
        if (d.is_zero()) return;  // the complex would split
        // summands of degree k-1 with no outgoing map must receive one
        for (std::size_t i = 0; i < d.rows(); ++i) {
            const bool has_out = k >= 2 && column_nonzero(c_.diff[k - 2], i);
            const bool has_in = row_nonzero(d, i);
            if (!has_out && !has_in) return;
        }
        if (k == len_) {
            leaf();
            return;
        }
        // summands of degree k with a zero column need a larger element above
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (!column_nonzero(d, j) && !has_larger_[c_.terms[k][j]]) return;
        degree(k + 1);
    }

    static bool column_nonzero(const RatMatrix& d, std::size_t j) {
        for (std::size_t i = 0; i < d.rows(); ++i)
            if (d(i, j) != 0) return true;
        return false;
    }
    static bool row_nonzero(const RatMatrix& d, std::size_t i) {
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (d(i, j) != 0) return true;
        return false;
    }

    bool connected() const {
        std::vector<std::size_t> offset{0};
        for (const auto& t : c_.terms) offset.push_back(offset.back() + t.size());
        const std::size_t n = offset.back();
        std::vector<std::size_t> parent(n);
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
        std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
            return parent[x] == x ? x : parent[x] = find(parent[x]);
        };
        for (std::size_t k = 0; k < c_.diff.size(); ++k)
            for (std::size_t i = 0; i < c_.diff[k].rows(); ++i)
                for (std::size_t j = 0; j < c_.diff[k].cols(); ++j)
                    if (c_.diff[k](i, j) != 0) parent[find(offset[k] + i)] = find(offset[k + 1] + j);
        for (std::size_t i = 1; i < n; ++i)
            if (find(i) != find(0)) return false;
        return true;
    }

    void leaf() {
        if (!connected()) return;
        ++stats_->complexes_checked;
        const HomotopyEnd h = homotopy_endomorphisms(p_, c_);
        if (h.quotient_dim > 0 && is_local_algebra(h.multiplication_table))
            found_ = ProbeWitness{c_, WitnessSource::enumeration, h.quotient_dim};
    }

    const Poset& p_;
    const ProbeOptions& o_;
    std::vector<long> nonzero_;
    bool symmetric_ = true;
    std::vector<std::vector<Element>> multisets_;
    std::vector<bool> has_larger_;
    std::size_t len_ = 0;
    LengthSearch* stats_ = nullptr;
    std::optional<ProbeWitness> found_;
    bool aborted_ = false;
    bool limit_hit_ = false;
    std::size_t total_nodes_ = 0;
    ProjComplex c_;
};

/// One random candidate: random summands per degree and random small-integer
/// labels on the allowed strict positions. Most draws fail d^2 = 0.
inline std::optional<ProjComplex> random_complex(const Poset& p, const ProbeOptions& o, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> len_d(0, o.max_len);
    std::uniform_int_distribution<std::size_t> mult_d(1, std::max<std::size_t>(o.max_mult, 1));
    std::uniform_int_distribution<Element> elem_d(0, p.size() - 1);
    std::uniform_int_distribution<int> coef_d(-3, 3);
    ProjComplex c;
    const std::size_t len = len_d(rng);
    for (std::size_t k = 0; k <= len; ++k) {
        std::vector<Element> t(mult_d(rng));
        for (auto& e : t) e = elem_d(rng);
        std::sort(t.begin(), t.end());
        c.terms.push_back(std::move(t));
    }
    for (std::size_t k = 0; k < len; ++k) {
        RatMatrix d(c.terms[k].size(), c.terms[k + 1].size());
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (std::size_t j = 0; j < d.cols(); ++j)
                if (p.less(c.terms[k][i], c.terms[k + 1][j])) d(i, j) = coef_d(rng);
        c.diff.push_back(std::move(d));
    }
    for (std::size_t k = 0; k + 1 < c.diff.size(); ++k)
        if (!(c.diff[k] * c.diff[k + 1]).is_zero()) return std::nullopt;
    return c;
}

} // namespace detail

/// Certified lower bound on the strong global dimension: the longest
/// indecomposable radical complex found within the bounds. Not finding a
/// longer one is bounded evidence, never an upper bound.
inline ProbeReport sgldim_probe(const Poset& p, const ProbeOptions& o) {
    require_connected(p, "strong global dimension probe");
    if (o.max_mult < 1) throw ValidationError("sgldim probe: max_mult must be at least 1");
    if (std::find(o.coeff_pool.begin(), o.coeff_pool.end(), 0L) == o.coeff_pool.end())
        throw ValidationError("sgldim probe: coefficient pool must contain 0");
    ProbeReport r;
    r.options = o;
    r.by_length.resize(o.max_len + 1);
    for (std::size_t L = 0; L <= o.max_len; ++L) r.by_length[L].length = L;

    // seeds: minimal resolutions of simples
    for (Element a = 0; o.seed_with_resolutions && a < p.size(); ++a) {
        const Resolution res = minimal_projective_resolution(p, simple_module(p, a));
        const std::size_t L = res.length();
        if (L > o.max_len || r.by_length[L].witness) continue;
        const ProjComplex c = resolution_as_complex(res);
        const bool within = std::all_of(c.terms.begin(), c.terms.end(),
                                        [&](const auto& t) { return t.size() <= o.max_mult; });
        if (!within) continue;
        const HomotopyEnd h = homotopy_endomorphisms(p, c);
        if (h.quotient_dim > 0 && is_local_algebra(h.multiplication_table))
            r.by_length[L].witness = ProbeWitness{c, WitnessSource::resolution, h.quotient_dim};
    }

    detail::ProbeSearch search(p, o);
    for (std::size_t L = 0; L <= o.max_len; ++L) {
        if (r.by_length[L].witness) continue;
        r.by_length[L] = search.run(L);
    }
    r.node_limit_hit = search.node_limit_hit();

    std::mt19937_64 rng(o.seed);
    for (std::size_t i = 0; i < o.sample_budget; ++i) {
        ++r.random_draws;
        auto c = detail::random_complex(p, o, rng);
        if (!c) continue;
        if (!is_radical(*c)) continue;
        ++r.random_valid;
        const std::size_t L = c->terms.size() - 1;
        if (r.by_length[L].witness) continue;
        const HomotopyEnd h = homotopy_endomorphisms(p, *c);
        if (h.quotient_dim > 0 && is_local_algebra(h.multiplication_table))
            r.by_length[L].witness = ProbeWitness{*c, WitnessSource::random, h.quotient_dim};
    }

    for (const auto& s : r.by_length)
        if (s.witness) {
            // independent re-verification of every reported witness
            validate_complex(p, s.witness->complex);
            if (!is_radical(s.witness->complex) || !is_indecomposable_complex(p, s.witness->complex))
                throw InvariantError("probe witness failed re-verification");
            r.max_witness_length = s.length;
        }

    std::ostringstream space;
    space << "radical complexes of length 0.." << o.max_len << " with 1.." << o.max_mult
          << " indecomposable projective summands per degree and differential labels from {";
    for (std::size_t i = 0; i < o.coeff_pool.size(); ++i) space << (i ? "," : "") << o.coeff_pool[i];
    space << "}, up to sign of each summand; plus " << o.sample_budget << " random draws (seed " << o.seed
          << ", labels in [-3,3])";
    r.searched_space = space.str();
    r.note = "the maximal witness length is a certified lower bound on the strong global dimension; "
             "absence of longer witnesses within these bounds is not an upper-bound certificate";
    return r;
}

} // namespace posetalg
