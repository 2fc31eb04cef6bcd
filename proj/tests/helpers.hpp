#pragma once

#include <deque>
#include <map>
#include <set>

#include "skewcyc/subspace.hpp"

namespace skewcyc::testing {

// every F_{q^d}-subspace of F_{q^{rn}}, by closure under one-element extension
inline std::vector<Subspace> all_subspaces(const Tower& t, u32 d) {
    std::vector<Subspace> out;
    std::set<std::string> seen;
    std::deque<Subspace> queue;
    auto push = [&](Subspace s) {
        if (seen.insert(canonical_key(t, s)).second) {
            queue.push_back(s);
            out.push_back(std::move(s));
        }
    };
    push(zero_subspace(t, d));
    u64 size = (u64)t.field_size();
    while (!queue.empty()) {
        Subspace cur = std::move(queue.front());
        queue.pop_front();
        for (u64 code = 1; code < size; ++code) {
            FieldElem e = t.from_radix(code);
            if (contains(t, cur, e)) continue;
            push(extend(t, cur, e));
        }
    }
    return out;
}

}  // namespace skewcyc::testing
