#include "fincat/partition.hpp"

#include <algorithm>
#include <numeric>

namespace fincat {

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

ZetaPartition::ZetaPartition(const FiniteCategory& ground,
                             const std::vector<std::pair<int, int>>& pairs) {
    const int n = ground.num_objects();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (auto [a, b] : pairs) {
        int ra = find_root(parent, a);
        int rb = find_root(parent, b);
        if (ra != rb) parent[ra] = rb;
    }

    std::vector<std::vector<int>> by_root(n);
    for (int o = 0; o < n; ++o) by_root[find_root(parent, o)].push_back(o);

    std::vector<int> roots;
    for (int r = 0; r < n; ++r)
        if (!by_root[r].empty()) roots.push_back(r);

    // Representative = member with the least identifier; order blocks by it.
    auto least_name = [&](int root) -> const std::string& {
        int best = by_root[root][0];
        for (int o : by_root[root])
            if (ground.object_name(o) < ground.object_name(best)) best = o;
        return ground.object_name(best);
    };
    std::sort(roots.begin(), roots.end(),
              [&](int a, int b) { return least_name(a) < least_name(b); });

    block_of_.assign(n, -1);
    for (int r : roots) {
        int b = static_cast<int>(blocks_.size());
        for (int o : by_root[r]) block_of_[o] = b;
        representatives_.push_back(least_name(r));
        blocks_.push_back(std::move(by_root[r]));
    }
}

int ZetaPartition::block_index(std::string_view name) const {
    std::string_view key = name;
    if (key.size() >= 2 && key.front() == '[' && key.back() == ']')
        key = key.substr(1, key.size() - 2);
    for (int b = 0; b < num_blocks(); ++b)
        if (representatives_[b] == key) return b;
    return -1;
}

}  // namespace fincat
