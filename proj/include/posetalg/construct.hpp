#pragma once

// Weight-sequence arithmetic for weighted projective lines, and the one-point
// extension of an incidence algebra by its canonical sincere module.

#include "posetalg/algebra.hpp"
#include "posetalg/error.hpp"
#include "posetalg/homalg.hpp"
#include "posetalg/modrep.hpp"
#include "posetalg/poset.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

namespace posetalg {

class WeightType {
public:
    WeightType() = default;
    explicit WeightType(std::vector<long> weights) : weights_(std::move(weights)) {
        for (long w : weights_)
            if (w < 2) throw ValidationError("weight " + std::to_string(w) + " is smaller than 2");
        std::sort(weights_.begin(), weights_.end());
    }

    /// Comma-separated list such as "2,3,7"; the empty string is the empty type.
    static WeightType parse(const std::string& text) {
        std::vector<long> w;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto first = item.find_first_not_of(" \t");
            if (first == std::string::npos) throw ValidationError("empty entry in weight list '" + text + "'");
            const auto last = item.find_last_not_of(" \t");
            item = item.substr(first, last - first + 1);
            std::size_t used = 0;
            long v = 0;
            try {
                v = std::stol(item, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != item.size() || item.empty()) throw ValidationError("weight '" + item + "' is not an integer");
            w.push_back(v);
        }
        return WeightType(std::move(w));
    }

    const std::vector<long>& weights() const noexcept { return weights_; }

private:
    std::vector<long> weights_;
};

/// 2 - sum (1 - 1/p_i)
inline mpq_class euler_characteristic(const WeightType& w) {
    mpq_class chi = 2;
    for (long p : w.weights()) chi -= 1 - mpq_class(1, p);
    return chi;
}

enum class SheafType { domestic, tubular, wild };

inline const char* to_string(SheafType t) {
    switch (t) {
    case SheafType::domestic: return "domestic";
    case SheafType::tubular: return "tubular";
    case SheafType::wild: return "wild";
    }
    return "?";
}

inline SheafType sheaf_type(const WeightType& w) {
    const int s = sgn(euler_characteristic(w));
    return s > 0 ? SheafType::domestic : s == 0 ? SheafType::tubular : SheafType::wild;
}

/// Two or three weights.
inline bool ladkani_admissible(const WeightType& w) {
    return w.weights().size() == 2 || w.weights().size() == 3;
}

struct ExtensionResult {
    Poset extended_poset;
    std::string new_element;
    std::vector<std::pair<std::string, std::string>> added_covers;  ///< (new, old) pairs
    std::size_t original_dimension = 0;
    std::size_t extended_dimension = 0;
    std::size_t module_dimension = 0;
};

/// Adds a new element below the support of top(M), M the canonical sincere
/// module. Under the right-module convention that support is the set of
/// minimal elements, so the new element becomes the global minimum; the
/// opposite poset has it as the global maximum.
inline ExtensionResult one_point_extension_by_canonical_sincere(const Poset& p) {
    require_connected(p, "one-point extension");
    const PosetRepresentation m = canonical_sincere_module(p);
    const RadicalTop rt = radical_and_top(p, m);

    ExtensionResult r;
    r.new_element = "*";
    while (p.find(r.new_element)) r.new_element += "'";

    std::vector<std::string> elements = p.ids();
    elements.push_back(r.new_element);
    std::vector<std::pair<std::string, std::string>> relations;
    for (const auto& [a, b] : p.cover_ids()) relations.emplace_back(a, b);
    for (Element x = 0; x < p.size(); ++x)
        if (rt.top.dims[x] != 0) {
            relations.emplace_back(r.new_element, p.id(x));
            r.added_covers.emplace_back(r.new_element, p.id(x));
        }
    r.extended_poset = Poset::from_relations(std::move(elements), relations);

    const Element star = *r.extended_poset.find(r.new_element);
    for (Element x = 0; x < r.extended_poset.size(); ++x)
        if (!r.extended_poset.leq(star, x)) throw InvariantError("extension element is not a global minimum");
    std::vector<Element> keep;
    for (Element x = 0; x < r.extended_poset.size(); ++x)
        if (x != star) keep.push_back(x);
    if (!(induced_subposet(r.extended_poset, keep) == p))
        throw InvariantError("removing the extension element does not recover the poset");

    r.original_dimension = IncidenceAlgebra(p).dimension();
    r.extended_dimension = IncidenceAlgebra(r.extended_poset).dimension();
    r.module_dimension = m.total_dimension();
    if (r.extended_dimension != r.original_dimension + r.module_dimension + 1)
        throw InvariantError("dimension identity dim A[M] = dim A + dim M + 1 fails");
    return r;
}

/// End(M) and Ext^k(M, M) for the canonical sincere module; M is exceptional
/// when End(M) = K and every Ext^k vanishes for k >= 1.
struct SincereReport {
    std::size_t end_dimension = 0;
    bool indecomposable = false;
    std::size_t projective_dimension = 0;
    std::vector<std::size_t> self_ext;  ///< self_ext[k-1] = dim Ext^k(M, M), k = 1..pd
    bool exceptional = false;
};

inline SincereReport sincere_check(const Poset& p) {
    const PosetRepresentation m = canonical_sincere_module(p);
    SincereReport r;
    r.end_dimension = hom_space(p, m, m).size();
    r.indecomposable = is_indecomposable(p, m);
    r.projective_dimension = projective_dimension(p, m);
    for (std::size_t k = 1; k <= r.projective_dimension; ++k) r.self_ext.push_back(ext_dimension(p, m, m, k));
    r.exceptional = r.end_dimension == 1 &&
                    std::all_of(r.self_ext.begin(), r.self_ext.end(), [](std::size_t d) { return d == 0; });
    return r;
}

} // namespace posetalg
