#pragma once

// Finite posets stored by their full order relation and Hasse covers.

#include "posetalg/error.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace posetalg {

using Element = std::size_t;
using Cover = std::pair<Element, Element>;

/// Elements are indexed 0..n-1 in lexicographic order of their ids; every
/// deterministic choice in the library breaks ties by this index.
class Poset {
public:
    Poset() = default;

    /// Builds the order generated by `relations` (pairs a <= b). Throws
    /// ValidationError on duplicate ids, unknown ids, or a cycle.
    static Poset from_relations(std::vector<std::string> elements,
                                const std::vector<std::pair<std::string, std::string>>& relations) {
        Poset p;
        std::sort(elements.begin(), elements.end());
        for (std::size_t i = 1; i < elements.size(); ++i)
            if (elements[i] == elements[i - 1])
                throw ValidationError("duplicate element id '" + elements[i] + "'");
        p.ids_ = std::move(elements);
        for (std::size_t i = 0; i < p.ids_.size(); ++i) p.index_.emplace(p.ids_[i], i);

        const std::size_t n = p.ids_.size();
        p.leq_.assign(n * n, 0);
        for (std::size_t i = 0; i < n; ++i) p.leq_[i * n + i] = 1;
        for (const auto& [a, b] : relations) {
            auto ia = p.find(a), ib = p.find(b);
            if (!ia || !ib)
                throw ValidationError("unknown element in relation (" + a + ", " + b + ")", {{a, b}});
            p.leq_[*ia * n + *ib] = 1;
        }
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) {
                if (!p.leq_[i * n + k]) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (p.leq_[k * n + j]) p.leq_[i * n + j] = 1;
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (p.leq_[i * n + j] && p.leq_[j * n + i])
                    throw ValidationError("cycle detected: " + p.ids_[i] + " <= " + p.ids_[j] + " and " +
                                              p.ids_[j] + " <= " + p.ids_[i] + " (not a poset)",
                                          {{p.ids_[i], p.ids_[j]}});
        p.rebuild_covers();
        return p;
    }

    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }

    const std::vector<std::string>& ids() const noexcept { return ids_; }
    const std::string& id(Element e) const { return ids_.at(e); }

    std::optional<Element> find(std::string_view id) const {
        auto it = index_.find(std::string(id));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    Element index_of(std::string_view id) const {
        if (auto e = find(id)) return *e;
        throw ValidationError("unknown element '" + std::string(id) + "'");
    }

    bool leq(Element a, Element b) const { return leq_[a * size() + b] != 0; }
    bool less(Element a, Element b) const { return a != b && leq(a, b); }
    bool comparable(Element a, Element b) const { return leq(a, b) || leq(b, a); }

    /// Cover pairs (a, b), a covered by b, sorted.
    const std::vector<Cover>& covers() const noexcept { return covers_; }
    const std::vector<Element>& upper_covers(Element a) const { return up_.at(a); }
    const std::vector<Element>& lower_covers(Element a) const { return down_.at(a); }

    std::optional<std::size_t> cover_index(Element a, Element b) const {
        auto it = std::lower_bound(covers_.begin(), covers_.end(), Cover{a, b});
        if (it == covers_.end() || *it != Cover{a, b}) return std::nullopt;
        return static_cast<std::size_t>(it - covers_.begin());
    }

    bool is_cover(Element a, Element b) const { return cover_index(a, b).has_value(); }

    std::vector<Element> minimal_elements() const {
        std::vector<Element> out;
        for (Element e = 0; e < size(); ++e)
            if (down_[e].empty()) out.push_back(e);
        return out;
    }

    std::vector<Element> maximal_elements() const {
        std::vector<Element> out;
        for (Element e = 0; e < size(); ++e)
            if (up_[e].empty()) out.push_back(e);
        return out;
    }

    /// All strict relations a < b as id pairs, sorted by index.
    std::vector<std::pair<std::string, std::string>> relation_ids() const {
        std::vector<std::pair<std::string, std::string>> out;
        for (Element a = 0; a < size(); ++a)
            for (Element b = 0; b < size(); ++b)
                if (less(a, b)) out.emplace_back(ids_[a], ids_[b]);
        return out;
    }

    std::vector<std::pair<std::string, std::string>> cover_ids() const {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& [a, b] : covers_) out.emplace_back(ids_[a], ids_[b]);
        return out;
    }

    friend bool operator==(const Poset& x, const Poset& y) { return x.ids_ == y.ids_ && x.leq_ == y.leq_; }

private:
    void rebuild_covers() {
        const std::size_t n = size();
        covers_.clear();
        up_.assign(n, {});
        down_.assign(n, {});
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b) {
                if (!less(a, b)) continue;
                bool between = false;
                for (Element c = 0; c < n && !between; ++c) between = less(a, c) && less(c, b);
                if (!between) {
                    covers_.emplace_back(a, b);
                    up_[a].push_back(b);
                    down_[b].push_back(a);
                }
            }
    }

    std::vector<std::string> ids_;
    std::map<std::string, Element> index_;
    std::vector<char> leq_;
    std::vector<Cover> covers_;
    std::vector<std::vector<Element>> up_, down_;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> arrows;
};

/// Vertices are the elements; one arrow a -> b per cover.
inline Quiver hasse_quiver(const Poset& p) { return {p.ids(), p.cover_ids()}; }

/// Whether the undirected Hasse graph is connected. The empty poset is rejected.
inline bool is_connected(const Poset& p) {
    if (p.empty()) throw ValidationError("empty poset has no connectedness");
    std::vector<char> seen(p.size(), 0);
    std::vector<Element> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        const Element e = stack.back();
        stack.pop_back();
        for (const auto* nbrs : {&p.upper_covers(e), &p.lower_covers(e)})
            for (Element f : *nbrs)
                if (!seen[f]) {
                    seen[f] = 1;
                    ++count;
                    stack.push_back(f);
                }
    }
    return count == p.size();
}

inline void require_connected(const Poset& p, std::string_view what) {
    if (!is_connected(p)) throw ValidationError(std::string(what) + ": poset is not connected");
}

struct Interval {
    Element bottom;
    Element top;
    std::vector<Element> members;
};

/// [x, y] = {z : x <= z <= y}; empty when x is not below y.
inline Interval interval(const Poset& p, Element x, Element y) {
    if (x >= p.size() || y >= p.size()) throw ValidationError("interval: unknown element");
    Interval iv{x, y, {}};
    for (Element z = 0; z < p.size(); ++z)
        if (p.leq(x, z) && p.leq(z, y)) iv.members.push_back(z);
    return iv;
}

inline Interval interval(const Poset& p, std::string_view x, std::string_view y) {
    return interval(p, p.index_of(x), p.index_of(y));
}

/// Strictly between x and y.
inline std::vector<Element> open_interval(const Poset& p, Element x, Element y) {
    std::vector<Element> out;
    for (Element z = 0; z < p.size(); ++z)
        if (p.less(x, z) && p.less(z, y)) out.push_back(z);
    return out;
}

/// Chains of length 1, 2 and 3, each listed bottom to top.
struct OrderComplex {
    std::vector<Element> vertices;
    std::vector<std::array<Element, 2>> edges;
    std::vector<std::array<Element, 3>> triangles;
};

inline OrderComplex order_complex_2skeleton(const Poset& p) {
    OrderComplex oc;
    const std::size_t n = p.size();
    for (Element a = 0; a < n; ++a) oc.vertices.push_back(a);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (p.less(a, b)) oc.edges.push_back({a, b});
    for (const auto& [a, b] : oc.edges)
        for (Element c = 0; c < n; ++c)
            if (p.less(b, c)) oc.triangles.push_back({a, b, c});
    std::sort(oc.triangles.begin(), oc.triangles.end());
    return oc;
}

/// Same elements, reversed order.
inline Poset opposite(const Poset& p) {
    std::vector<std::pair<std::string, std::string>> rel;
    for (const auto& [a, b] : p.covers()) rel.emplace_back(p.id(b), p.id(a));
    return Poset::from_relations(p.ids(), rel);
}

/// Full subposet on the given elements.
inline Poset induced_subposet(const Poset& p, const std::vector<Element>& keep) {
    std::vector<std::string> ids;
    for (Element e : keep) ids.push_back(p.id(e));
    std::vector<std::pair<std::string, std::string>> rel;
    for (Element a : keep)
        for (Element b : keep)
            if (p.less(a, b)) rel.emplace_back(p.id(a), p.id(b));
    return Poset::from_relations(std::move(ids), rel);
}

/// Kahn's algorithm, always taking the smallest available index.
inline std::vector<Element> linear_extension(const Poset& p) {
    std::vector<std::size_t> indeg(p.size());
    for (Element e = 0; e < p.size(); ++e) indeg[e] = p.lower_covers(e).size();
    std::set<Element> ready;
    for (Element e = 0; e < p.size(); ++e)
        if (indeg[e] == 0) ready.insert(e);
    std::vector<Element> order;
    while (!ready.empty()) {
        const Element e = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(e);
        for (Element f : p.upper_covers(e))
            if (--indeg[f] == 0) ready.insert(f);
    }
    return order;
}

/// Graphviz rendering of the Hasse quiver, one edge per cover.
inline std::string to_dot(const Poset& p, std::string_view name = "hasse") {
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') q += '\\';
            q += c;
        }
        return q + "\"";
    };
    std::ostringstream os;
    os << "digraph " << quote(std::string(name)) << " {\n";
    for (const auto& id : p.ids()) os << "  " << quote(id) << ";\n";
    for (const auto& [a, b] : p.covers()) os << "  " << quote(p.id(a)) << " -> " << quote(p.id(b)) << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace posetalg
