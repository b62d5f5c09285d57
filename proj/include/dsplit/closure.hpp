#pragma once

#include <cstddef>
#include <unordered_set>
#include <vector>

#include "dsplit/sperm.hpp"

namespace dsplit {

// Breadth-first closure of <gens> from the identity; right multiplication by
// generators, so the order is deterministic in the generator order.
template <class T, class Hash = std::hash<T>>
std::vector<T> closure(const std::vector<T>& gens, const T& id, std::size_t cap) {
    std::vector<T> elems{id};
    std::unordered_set<T, Hash> seen{id};
    for (std::size_t k = 0; k < elems.size(); ++k) {
        for (const T& g : gens) {
            T y = elems[k] * g;
            if (seen.insert(y).second) {
                if (elems.size() >= cap) throw ClosureExceedsCap(cap);
                elems.push_back(std::move(y));
            }
        }
    }
    return elems;
}

template <class T, class Hash = std::hash<T>>
bool same_set(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) return false;
    std::unordered_set<T, Hash> sa(a.begin(), a.end());
    for (const T& x : b)
        if (!sa.count(x)) return false;
    return sa.size() == b.size();
}

}  // namespace dsplit
