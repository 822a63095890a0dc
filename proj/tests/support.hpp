#pragma once

// Shared fixtures, random generators and independent oracles for the tests.
// The oracles deliberately avoid the library's own elimination routines.

#include "posetalg/io.hpp"
#include "posetalg/linalg.hpp"
#include "posetalg/poset.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#ifndef POSETALG_CORPUS_DIR
#define POSETALG_CORPUS_DIR "corpus"
#endif

namespace testing_support {

using namespace posetalg;

inline Poset load(const std::string& name) {
    return io::parse_poset(io::read_file(std::string(POSETALG_CORPUS_DIR) + "/" + name + ".json")).poset;
}

inline Poset make(std::vector<std::string> elements, const std::vector<std::pair<std::string, std::string>>& rel) {
    return Poset::from_relations(std::move(elements), rel);
}

inline Poset chain(std::size_t n) {
    std::vector<std::string> e;
    std::vector<std::pair<std::string, std::string>> r;
    for (std::size_t i = 0; i < n; ++i) {
        e.push_back("c" + std::to_string(i));
        if (i) r.emplace_back(e[i - 1], e[i]);
    }
    return make(e, r);
}

inline std::string elem_name(std::size_t i) { return (i < 10 ? "e0" : "e") + std::to_string(i); }

/// Random order: i < j related with probability pct/100 for i < j in a hidden
/// order, then closed transitively by the constructor.
inline Poset random_poset(std::mt19937_64& rng, std::size_t n, int pct) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::uniform_int_distribution<int> coin(0, 99);
    std::vector<std::string> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(elem_name(i));
    std::vector<std::pair<std::string, std::string>> r;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng) < pct) r.emplace_back(e[perm[i]], e[perm[j]]);
    return make(e, r);
}

inline Poset random_connected_poset(std::mt19937_64& rng, std::size_t n, int pct) {
    for (;;) {
        Poset p = random_poset(rng, n, pct);
        if (is_connected(p)) return p;
    }
}

/// Graded poset: layers of the given sizes, each element covering a random
/// nonempty set of elements in the layer below (each with chance `percent`). Retries until connected.
inline Poset random_layered_poset(std::mt19937_64& rng, const std::vector<std::size_t>& layers, int percent = 50) {
    std::uniform_int_distribution<int> roll(0, 99);
    auto coin = [&](std::mt19937_64& g) { return roll(g) < percent; };
    for (;;) {
        std::vector<std::string> e;
        std::vector<std::vector<std::size_t>> idx;
        for (std::size_t l : layers) {
            idx.emplace_back();
            for (std::size_t i = 0; i < l; ++i) {
                idx.back().push_back(e.size());
                e.push_back(elem_name(e.size()));
            }
        }
        std::vector<std::pair<std::string, std::string>> r;
        for (std::size_t k = 1; k < idx.size(); ++k)
            for (std::size_t hi : idx[k]) {
                bool any = false;
                for (std::size_t lo : idx[k - 1])
                    if (coin(rng)) {
                        r.emplace_back(e[lo], e[hi]);
                        any = true;
                    }
                if (!any) r.emplace_back(e[idx[k - 1][std::uniform_int_distribution<std::size_t>(0, idx[k - 1].size() - 1)(rng)]], e[hi]);
            }
        Poset p = make(e, r);
        if (is_connected(p)) return p;
    }
}

/// Brute-force reachability over the raw relation list.
inline std::vector<std::vector<bool>> closure_oracle(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& rel) {
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [a, b] : rel) adj[a].push_back(b);
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> stack{s};
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            if (leq[s][v]) continue;
            leq[s][v] = true;
            for (auto w : adj[v]) stack.push_back(w);
        }
    }
    return leq;
}

/// Fraction-free (Bareiss) rank after clearing denominators row by row.
inline std::size_t bareiss_rank(const RatMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    std::vector<std::vector<mpz_class>> a(r, std::vector<mpz_class>(c));
    for (std::size_t i = 0; i < r; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < c; ++j) l = lcm(l, m(i, j).get_den());
        for (std::size_t j = 0; j < c; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t col = 0; col < c && rank < r; ++col) {
        std::size_t piv = rank;
        while (piv < r && a[piv][col] == 0) ++piv;
        if (piv == r) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t i = rank + 1; i < r; ++i) {
            for (std::size_t j = col + 1; j < c; ++j)
                a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

/// Determinant by cofactor expansion (small matrices only).
template <typename T>
T cofactor_det(const std::vector<std::vector<T>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return T(1);
    if (n == 1) return m[0][0];
    T det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<T>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<T> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        const T term = m[0][j] * cofactor_det(minor);
        det += (j % 2 == 0) ? term : T(-term);
    }
    return det;
}

/// Invariant factors d_k / d_{k-1}, d_k = gcd of all k x k minors.
inline std::vector<mpz_class> determinantal_factors(const IntMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    std::vector<mpz_class> divisors{1};
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
        mpz_class g = 0;
        std::vector<std::size_t> rows(k), cols(k);
        std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&, std::size_t, std::function<void()>)> choose =
            [&](std::size_t start, std::size_t depth, std::vector<std::size_t>& out, std::size_t limit, std::function<void()> f) {
                if (depth == out.size()) {
                    f();
                    return;
                }
                for (std::size_t i = start; i < limit; ++i) {
                    out[depth] = i;
                    choose(i + 1, depth + 1, out, limit, f);
                }
            };
        choose(0, 0, rows, r, [&] {
            choose(0, 0, cols, c, [&] {
                std::vector<std::vector<mpz_class>> sub(k, std::vector<mpz_class>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(rows[i], cols[j]);
                g = gcd(g, cofactor_det(sub));
            });
        });
        if (g == 0) break;
        divisors.push_back(abs(g));
    }
    std::vector<mpz_class> factors;
    for (std::size_t k = 1; k < divisors.size(); ++k) factors.push_back(divisors[k] / divisors[k - 1]);
    return factors;
}

/// det(tI - m) evaluated at t = 0..n, then Lagrange interpolation.
inline std::vector<mpq_class> charpoly_by_interpolation(const RatMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<mpq_class> xs, ys;
    for (std::size_t t = 0; t <= n; ++t) {
        std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a[i][j] = (i == j ? mpq_class(t) : mpq_class(0)) - m(i, j);
        xs.emplace_back(t);
        ys.push_back(cofactor_det(a));
    }
    std::vector<mpq_class> poly(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        std::vector<mpq_class> basis{1};
        mpq_class denom = 1;
        for (std::size_t j = 0; j <= n; ++j) {
            if (j == i) continue;
            std::vector<mpq_class> next(basis.size() + 1);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * xs[j];
            }
            basis = next;
            denom *= xs[i] - xs[j];
        }
        for (std::size_t k = 0; k < basis.size(); ++k) poly[k] += ys[i] * basis[k] / denom;
    }
    return poly;
}

/// Reduced rational homology dimensions of the order complex (all chains) on
/// the given elements, degrees -1..max_deg. Over Q these equal the reduced
/// cohomology dimensions.
inline std::vector<std::size_t> reduced_betti_oracle(const Poset& p, const std::vector<Element>& elems, std::size_t max_deg) {
    // chains[q+1] = chains with q+1 elements, q = -1 .. max_deg+1
    std::vector<std::vector<std::vector<Element>>> chains(max_deg + 3);
    chains[0].push_back({});
    for (std::size_t q = 1; q < chains.size(); ++q)
        for (const auto& ch : chains[q - 1])
            for (Element e : elems)
                if (ch.empty() || p.less(ch.back(), e)) {
                    auto next = ch;
                    next.push_back(e);
                    chains[q].push_back(next);
                }
    auto boundary_rank = [&](std::size_t q) -> std::size_t {  // from chains[q] to chains[q-1]
        if (q == 0 || chains[q].empty() || chains[q - 1].empty()) return 0;
        std::map<std::vector<Element>, std::size_t> index;
        for (std::size_t i = 0; i < chains[q - 1].size(); ++i) index[chains[q - 1][i]] = i;
        RatMatrix d(chains[q - 1].size(), chains[q].size());
        for (std::size_t j = 0; j < chains[q].size(); ++j)
            for (std::size_t drop = 0; drop < chains[q][j].size(); ++drop) {
                auto face = chains[q][j];
                face.erase(face.begin() + static_cast<long>(drop));
                d(index.at(face), j) += (drop % 2 == 0) ? 1 : -1;
            }
        return bareiss_rank(d);
    };
    std::vector<std::size_t> betti;
    for (std::size_t q = 0; q <= max_deg + 1; ++q)  // chain size q <-> degree q-1
        betti.push_back(chains[q].size() - boundary_rank(q) - boundary_rank(q + 1));
    return betti;
}

} // namespace testing_support
