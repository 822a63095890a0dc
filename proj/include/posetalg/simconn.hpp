#pragma once

// Order-complex homology, first Hochschild cohomology, fundamental group
// presentations, crowns and the critical Q_n configuration.

#include "posetalg/algebra.hpp"
#include "posetalg/error.hpp"
#include "posetalg/linalg.hpp"
#include "posetalg/poset.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <array>
#include <tuple>
#include <string>
#include <vector>

namespace posetalg {

struct H1Data {
    std::size_t betti1 = 0;
    std::vector<mpz_class> torsion;         ///< invariant factors > 1
    std::array<std::size_t, 3> simplices{};  ///< vertex, edge, triangle counts
};

namespace detail {

inline IntMatrix boundary1(const Poset& p, const OrderComplex& oc) {
    IntMatrix d(p.size(), oc.edges.size());
    for (std::size_t j = 0; j < oc.edges.size(); ++j) {
        d(oc.edges[j][0], j) -= 1;
        d(oc.edges[j][1], j) += 1;
    }
    return d;
}

inline IntMatrix boundary2(const OrderComplex& oc) {
    std::map<std::array<Element, 2>, std::size_t> edge_index;
    for (std::size_t j = 0; j < oc.edges.size(); ++j) edge_index.emplace(oc.edges[j], j);
    IntMatrix d(oc.edges.size(), oc.triangles.size());
    for (std::size_t j = 0; j < oc.triangles.size(); ++j) {
        const auto [a, b, c] = oc.triangles[j];
        d(edge_index.at({b, c}), j) += 1;
        d(edge_index.at({a, c}), j) -= 1;
        d(edge_index.at({a, b}), j) += 1;
    }
    return d;
}

} // namespace detail

/// H_1 of the order complex over Z, from the Smith forms of the boundary maps.
inline H1Data h1_order_complex(const Poset& p) {
    require_connected(p, "H1 of the order complex");
    const OrderComplex oc = order_complex_2skeleton(p);
    H1Data h;
    h.simplices = {oc.vertices.size(), oc.edges.size(), oc.triangles.size()};
    const std::size_t r1 = integer_rank(detail::boundary1(p, oc));
    const SnfResult s2 = smith_normal_form(detail::boundary2(oc));
    h.betti1 = oc.edges.size() - r1 - s2.rank;
    for (const auto& d : s2.nonzero_factors())
        if (d > 1) h.torsion.push_back(d);
    return h;
}

inline bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// dim Hom(H_1, K+) over a field of the given characteristic (0 or a prime).
/// Hom(pi_1, K+) factors through the abelianization because K+ is abelian.
inline std::size_t hh1_dimension(const H1Data& h, unsigned long characteristic) {
    if (characteristic != 0 && !is_prime(characteristic))
        throw ValidationError("characteristic must be 0 or a prime, got " + std::to_string(characteristic));
    std::size_t dim = h.betti1;
    if (characteristic != 0)
        for (const auto& t : h.torsion)
            if (mpz_divisible_ui_p(t.get_mpz_t(), characteristic)) ++dim;
    return dim;
}

inline std::size_t hh1_dimension(const Poset& p, unsigned long characteristic) {
    if (characteristic != 0 && !is_prime(characteristic))
        throw ValidationError("characteristic must be 0 or a prime, got " + std::to_string(characteristic));
    return hh1_dimension(h1_order_complex(p), characteristic);
}

/// HH^1 over Q as Der(A) / Inn(A), solved directly on the comparable-pair
/// basis. Independent of the order complex; meant for small posets.
inline std::size_t hh1_dimension_via_derivations(const IncidenceAlgebra& alg) {
    const std::size_t dim = alg.dimension();
    const auto& basis = alg.basis();
    const auto npos = IncidenceAlgebra::npos;
    // unknown (s, t): coefficient of basis t in D(basis s)
    auto var = [dim](std::size_t s, std::size_t t) { return s * dim + t; };

    SparseRowSpace leibniz;
    for (std::size_t s1 = 0; s1 < dim; ++s1) {
        const auto [x, y] = basis[s1];
        for (std::size_t s2 = 0; s2 < dim; ++s2) {
            const auto [z, w] = basis[s2];
            const std::size_t prod = y == z ? alg.basis_index(x, w) : npos;
            // D(ab) - a D(b) - D(a) b = 0, component on basis (u, v)
            for (std::size_t g = 0; g < dim; ++g) {
                const auto [u, v] = basis[g];
                SparseRowSpace::Row row;
                if (prod != npos) row[var(prod, g)] += 1;
                if (u == x) {
                    const std::size_t yv = alg.basis_index(y, v);
                    if (yv != npos) row[var(s2, yv)] -= 1;
                }
                if (v == w) {
                    const std::size_t uz = alg.basis_index(u, z);
                    if (uz != npos) row[var(s1, uz)] -= 1;
                }
                if (!row.empty()) leibniz.insert(std::move(row));
            }
        }
    }
    const std::size_t der = dim * dim - leibniz.rank();

    SparseRowSpace inner;
    for (std::size_t c = 0; c < dim; ++c) {
        const auto e_c = alg.unit(basis[c].first, basis[c].second);
        SparseRowSpace::Row row;
        for (std::size_t s = 0; s < dim; ++s) {
            const auto e_s = alg.unit(basis[s].first, basis[s].second);
            const auto left = alg.multiply(e_s, e_c);
            const auto right = alg.multiply(e_c, e_s);
            for (std::size_t t = 0; t < dim; ++t)
                if (left[t] != right[t]) row[var(s, t)] = left[t] - right[t];
        }
        inner.insert(std::move(row));
    }
    return der - inner.rank();
}

struct Letter {
    std::size_t generator;
    int exponent;  ///< +1 or -1

    friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Edge-path presentation: generators are the comparability edges outside a
/// BFS spanning tree, one relator per 2-simplex.
struct Pi1Presentation {
    std::vector<std::array<Element, 2>> generator_edges;
    std::vector<Word> relators;

    std::size_t generators() const noexcept { return generator_edges.size(); }
};

inline Word free_reduce(const Word& w) {
    Word out;
    for (const auto& l : w) {
        if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

inline Pi1Presentation pi1_presentation(const Poset& p) {
    require_connected(p, "fundamental group presentation");
    const OrderComplex oc = order_complex_2skeleton(p);
    std::vector<std::vector<std::pair<Element, std::size_t>>> adj(p.size());
    for (std::size_t j = 0; j < oc.edges.size(); ++j) {
        adj[oc.edges[j][0]].emplace_back(oc.edges[j][1], j);
        adj[oc.edges[j][1]].emplace_back(oc.edges[j][0], j);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    std::vector<char> in_tree(oc.edges.size(), 0), seen(p.size(), 0);
    std::queue<Element> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
        const Element v = q.front();
        q.pop();
        for (const auto& [w, j] : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                in_tree[j] = 1;
                q.push(w);
            }
    }
    Pi1Presentation pres;
    std::map<std::array<Element, 2>, std::size_t> gen_of;
    for (std::size_t j = 0; j < oc.edges.size(); ++j)
        if (!in_tree[j]) {
            gen_of.emplace(oc.edges[j], pres.generator_edges.size());
            pres.generator_edges.push_back(oc.edges[j]);
        }
    auto letter = [&](Element a, Element b, int e, Word& w) {
        auto it = gen_of.find({a, b});
        if (it != gen_of.end()) w.push_back({it->second, e});
    };
    for (const auto& [a, b, c] : oc.triangles) {
        Word w;
        letter(a, b, 1, w);
        letter(b, c, 1, w);
        letter(a, c, -1, w);
        pres.relators.push_back(free_reduce(w));
    }
    return pres;
}

/// Rank and torsion of the abelianized presentation.
inline H1Data abelianization(const Pi1Presentation& pres) {
    IntMatrix rel(pres.relators.size(), pres.generators());
    for (std::size_t r = 0; r < pres.relators.size(); ++r)
        for (const auto& l : pres.relators[r]) rel(r, l.generator) += l.exponent;
    const SnfResult s = smith_normal_form(rel);
    H1Data h;
    h.betti1 = pres.generators() - s.rank;
    for (const auto& d : s.nonzero_factors())
        if (d > 1) h.torsion.push_back(d);
    return h;
}

enum class CrownKind { weak, crown };

struct CrownWitness {
    std::size_t n = 0;
    std::vector<Element> xs, ys;
    CrownKind kind = CrownKind::weak;
};

namespace detail {

/// x_h < y_l exactly when l is h or h+1 (mod n), and no other comparabilities.
inline bool is_crown_pattern(const Poset& p, const std::vector<Element>& xs, const std::vector<Element>& ys) {
    const std::size_t n = xs.size();
    if (n < 2 || ys.size() != n) return false;
    std::vector<Element> all(xs);
    all.insert(all.end(), ys.begin(), ys.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t l = 0; l < n; ++l) {
            if (h != l && (p.comparable(xs[h], xs[l]) || p.comparable(ys[h], ys[l]))) return false;
            const bool expected = l == h || l == (h + 1) % n;
            if (p.less(xs[h], ys[l]) != expected || p.leq(ys[l], xs[h])) return false;
        }
    return true;
}

using Bits = std::vector<char>;

inline Bits interval_bits(const Poset& p, Element x, Element y) {
    Bits b(p.size(), 0);
    for (Element z = 0; z < p.size(); ++z) b[z] = p.leq(x, z) && p.leq(z, y);
    return b;
}

inline Bits intersect(const Bits& a, const Bits& b) {
    Bits c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] && b[i];
    return c;
}

inline bool none(const Bits& a) { return std::none_of(a.begin(), a.end(), [](char c) { return c != 0; }); }

inline bool exactly(const Bits& a, Element e) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if ((a[i] != 0) != (i == e)) return false;
    return true;
}

/// Enumerates crown patterns of size n inside `candidates` with xs[0] the
/// smallest x; the callback returns false to stop.
inline void for_each_crown_pattern(const Poset& p, const std::vector<Element>& candidates, std::size_t n,
                                   const std::function<bool(const std::vector<Element>&, const std::vector<Element>&)>& visit) {
    std::vector<Element> xs(n), ys(n);
    std::vector<char> used(p.size(), 0);
    bool stop = false;
    // chosen so far must agree with the pattern: checked pairwise on insertion
    auto fits_x = [&](std::size_t h, Element e) {
        if (used[e] || e < xs[0]) return false;
        for (std::size_t k = 0; k < h; ++k)
            if (p.comparable(xs[k], e)) return false;
        for (std::size_t l = 0; l <= h && l < n; ++l) {  // ys[0..h] are placed when x_h is chosen
            const bool expected = l == h || l == (h + 1) % n;
            if (p.less(e, ys[l]) != expected || p.leq(ys[l], e)) return false;
        }
        return true;
    };
    auto fits_y = [&](std::size_t l, Element e, std::size_t xs_placed) {
        if (used[e]) return false;
        for (std::size_t k = 0; k < l; ++k)
            if (p.comparable(ys[k], e)) return false;
        for (std::size_t h = 0; h < xs_placed; ++h) {
            const bool expected = l == h || l == (h + 1) % n;
            if (p.less(xs[h], e) != expected || p.leq(e, xs[h])) return false;
        }
        return true;
    };
    // order of placement: x0, y0, y1, x1, y2, x2, ..., y_{n-1}, x_{n-1}
    std::function<void(std::size_t)> place_y;
    std::function<void(std::size_t)> place_x = [&](std::size_t h) {
        for (Element e : candidates) {
            if (stop) return;
            if (h > 0 && !fits_x(h, e)) continue;
            xs[h] = e;
            used[e] = 1;
            if (h == 0) {
                for (Element f : candidates) {
                    if (stop) break;
                    if (!fits_y(0, f, 1)) continue;
                    ys[0] = f;
                    used[f] = 1;
                    place_y(1);
                    used[f] = 0;
                }
            } else if (h + 1 == n) {
                if (is_crown_pattern(p, xs, ys)) stop = !visit(xs, ys);
            } else {
                place_y(h + 1);
            }
            used[e] = 0;
        }
    };
    place_y = [&](std::size_t l) {
        for (Element f : candidates) {
            if (stop) return;
            if (!fits_y(l, f, l)) continue;
            ys[l] = f;
            used[f] = 1;
            place_x(l);
            used[f] = 0;
        }
    };
    place_x(0);
}

} // namespace detail

/// The strongest crown kind satisfied by (xs, ys), or nullopt. Checks the
/// comparability pattern and the interval-intersection conditions directly.
inline std::optional<CrownKind> classify_crown(const Poset& p, const std::vector<Element>& xs,
                                               const std::vector<Element>& ys) {
    using namespace detail;
    if (!is_crown_pattern(p, xs, ys)) return std::nullopt;
    const std::size_t n = xs.size();
    // pattern intervals in cyclic order: [x_0,y_0], [x_0,y_1], [x_1,y_1], ...
    struct Iv {
        std::size_t h, l;
        Bits bits;
    };
    std::vector<Iv> ivs;
    for (std::size_t h = 0; h < n; ++h) {
        ivs.push_back({h, h, interval_bits(p, xs[h], ys[h])});
        ivs.push_back({h, (h + 1) % n, interval_bits(p, xs[h], ys[(h + 1) % n])});
    }
    auto find_iv = [&](std::size_t h, std::size_t l) -> const Iv& {
        for (const auto& iv : ivs)
            if (iv.h == h && iv.l == l) return iv;
        throw InvariantError("crown interval lookup failed");
    };
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t prev = (i + n - 1) % n, next = (i + 1) % n;
        const Iv& diag = find_iv(i, i);
        const Iv& left = find_iv(prev, i);
        const Iv& right = find_iv(i, next);
        if (none(intersect(diag.bits, left.bits)) || none(intersect(diag.bits, right.bits))) return std::nullopt;
        for (const auto& other : ivs) {
            if (&other == &diag || &other == &left || &other == &right) continue;
            if (!none(intersect(diag.bits, other.bits))) return std::nullopt;
        }
    }
    for (std::size_t a = 0; a < ivs.size(); ++a)
        for (std::size_t b = a + 1; b < ivs.size(); ++b) {
            const Bits ab = intersect(ivs[a].bits, ivs[b].bits);
            if (none(ab)) continue;
            for (std::size_t c = b + 1; c < ivs.size(); ++c)
                if (!none(intersect(ab, ivs[c].bits))) return std::nullopt;
        }
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t prev = (i + n - 1) % n, next = (i + 1) % n;
        if (!exactly(intersect(find_iv(i, i).bits, find_iv(i, next).bits), xs[i]) ||
            !exactly(intersect(find_iv(prev, i).bits, find_iv(i, i).bits), ys[i]))
            return CrownKind::weak;
    }
    return CrownKind::crown;
}

inline constexpr std::size_t default_crown_cap = 6;

/// Lexicographically least (xs, ys) of the smallest size n <= max_n whose
/// kind is at least `required`.
inline std::optional<CrownWitness> find_crown(const Poset& p, std::size_t max_n = default_crown_cap,
                                              CrownKind required = CrownKind::crown) {
    if (max_n < 2) throw ValidationError("find_crown: max_n must be at least 2");
    std::vector<Element> all(p.size());
    for (Element e = 0; e < p.size(); ++e) all[e] = e;
    for (std::size_t n = 2; n <= max_n && 2 * n <= p.size(); ++n) {
        std::optional<CrownWitness> best;
        detail::for_each_crown_pattern(p, all, n, [&](const auto& xs, const auto& ys) {
            auto kind = classify_crown(p, xs, ys);
            if (!kind || (required == CrownKind::crown && *kind != CrownKind::crown)) return true;
            if (!best || std::tie(xs, ys) < std::tie(best->xs, best->ys)) best = CrownWitness{n, xs, ys, *kind};
            return true;
        });
        if (best) return best;
    }
    return std::nullopt;
}

struct SscResult {
    bool strongly_simply_connected = false;
    std::optional<CrownWitness> witness;
    std::size_t searched_up_to = 0;  ///< largest crown size examined
};

/// No crown of any size up to min(|poset|/2, cap).
inline SscResult is_strongly_simply_connected(const Poset& p, std::size_t cap = default_crown_cap) {
    require_connected(p, "strong simple connectedness");
    SscResult r;
    r.searched_up_to = std::min(p.size() / 2, cap);
    if (r.searched_up_to >= 2) r.witness = find_crown(p, r.searched_up_to, CrownKind::crown);
    r.strongly_simply_connected = !r.witness;
    return r;
}

struct QnWitness {
    std::size_t n = 0;
    Element source = 0;
    std::vector<Element> xs, ys;
    Element sink = 0;
};

/// Full subposet shaped like Q_n: a source below a crown-pattern layer
/// x_1..x_n < y_1..y_n below a sink. Lexicographically least by
/// (source, xs, ys, sink) for the smallest n.
inline std::optional<QnWitness> find_critical_qn(const Poset& p, std::size_t max_n = default_crown_cap) {
    for (std::size_t n = 2; n <= max_n && 2 * n + 2 <= p.size(); ++n) {
        std::optional<QnWitness> best;
        for (Element s = 0; s < p.size(); ++s)
            for (Element t = 0; t < p.size(); ++t) {
                if (!p.less(s, t)) continue;
                const auto inside = open_interval(p, s, t);
                if (inside.size() < 2 * n) continue;
                detail::for_each_crown_pattern(p, inside, n, [&](const auto& xs, const auto& ys) {
                    QnWitness w{n, s, xs, ys, t};
                    if (!best || std::tie(w.source, w.xs, w.ys, w.sink) <
                                     std::tie(best->source, best->xs, best->ys, best->sink))
                        best = w;
                    return true;
                });
            }
        if (best) return best;
    }
    return std::nullopt;
}

} // namespace posetalg
