#include "fincat/presented.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace fincat {

PresentedCategory::PresentedCategory(std::string name, CategoryPtr base, ZetaPartition partition)
    : name_(std::move(name)), base_(std::move(base)), partition_(std::move(partition)) {
    graph_.num_nodes = partition_.num_blocks();
    for (int m = 0; m < base_->num_morphisms(); ++m)
        graph_.edges.push_back({m, partition_.block_of(base_->dom(m)),
                                partition_.block_of(base_->cod(m)), base_->is_identity(m)});

    std::vector<int> by_name(base_->num_morphisms());
    std::iota(by_name.begin(), by_name.end(), 0);
    std::sort(by_name.begin(), by_name.end(), [&](int a, int b) {
        return base_->morphism_name(a) < base_->morphism_name(b);
    });
    letter_rank_.assign(base_->num_morphisms(), 0);
    for (int rank = 0; rank < static_cast<int>(by_name.size()); ++rank)
        letter_rank_[by_name[rank]] = rank;
}

int PresentedCategory::node_index(std::string_view name) const {
    int n = partition_.block_index(name);
    if (n < 0) throw UnknownId("unknown node '" + std::string(name) + "' in presentation " + name_);
    return n;
}

int PresentedCategory::dom_node(const PathWord& w) const {
    return w.empty() ? w.anchor : edge_src(w.letters.front());
}

int PresentedCategory::cod_node(const PathWord& w) const {
    return w.empty() ? w.anchor : edge_dst(w.letters.back());
}

void PresentedCategory::check_word(const PathWord& w) const {
    if (w.empty()) {
        if (w.anchor < 0 || w.anchor >= num_nodes())
            throw MalformedWord("empty word anchored at unknown node");
        return;
    }
    for (int e : w.letters)
        if (e < 0 || e >= static_cast<int>(graph_.edges.size()))
            throw MalformedWord("word contains an unknown edge");
    for (size_t i = 0; i + 1 < w.letters.size(); ++i)
        if (edge_dst(w.letters[i]) != edge_src(w.letters[i + 1]))
            throw MalformedWord("letters '" + base_->morphism_name(w.letters[i]) + "' and '" +
                                base_->morphism_name(w.letters[i + 1]) + "' do not chain");
}

PathWord PresentedCategory::reduce(const PathWord& w) const {
    check_word(w);
    const FiniteCategory& base = *base_;
    std::vector<int> stack;
    stack.reserve(w.letters.size());
    for (int e : w.letters) {
        if (base.is_identity(e)) continue;  // R1
        int cur = e;
        while (!stack.empty()) {
            int top = stack.back();
            if (base.cod(top) != base.dom(cur)) break;
            stack.pop_back();
            int fused = base.compose(cur, top);  // R2: <top, cur> -> <cur ∘ top>
            if (base.is_identity(fused)) {
                cur = -1;  // the pair cancelled; R1 removes the identity
                break;
            }
            cur = fused;
        }
        if (cur >= 0) stack.push_back(cur);
    }
    return PathWord{dom_node(w), std::move(stack)};
}

bool PresentedCategory::is_normal_form(const PathWord& w) const {
    check_word(w);
    for (int e : w.letters)
        if (base_->is_identity(e)) return false;
    for (size_t i = 0; i + 1 < w.letters.size(); ++i)
        if (base_->cod(w.letters[i]) == base_->dom(w.letters[i + 1])) return false;
    return true;
}

PathWord PresentedCategory::compose_words(const PathWord& w2, const PathWord& w1) const {
    check_word(w1);
    check_word(w2);
    if (cod_node(w1) != dom_node(w2))
        throw NotComposable("words do not compose: cod node " + node_name(cod_node(w1)) +
                            " differs from dom node " + node_name(dom_node(w2)));
    PathWord concat{dom_node(w1), w1.letters};
    concat.letters.insert(concat.letters.end(), w2.letters.begin(), w2.letters.end());
    return reduce(concat);
}

PathWord PresentedCategory::word_of(int morphism) const {
    return reduce(PathWord{edge_src(morphism), {morphism}});
}

bool PresentedCategory::hom_inhabited(int n1, int n2) const {
    if (n1 < 0 || n1 >= num_nodes() || n2 < 0 || n2 >= num_nodes())
        throw UnknownId("node out of range in presentation " + name_);
    if (n1 == n2) return true;
    std::vector<char> seen(num_nodes(), 0);
    std::deque<int> queue{n1};
    seen[n1] = 1;
    while (!queue.empty()) {
        int n = queue.front();
        queue.pop_front();
        for (const auto& edge : graph_.edges) {
            if (edge.src_node != n || seen[edge.dst_node]) continue;
            if (edge.dst_node == n2) return true;
            seen[edge.dst_node] = 1;
            queue.push_back(edge.dst_node);
        }
    }
    return false;
}

std::vector<PathWord> PresentedCategory::enumerate_hom(int n1, int n2, int max_len) const {
    if (n1 < 0 || n1 >= num_nodes() || n2 < 0 || n2 >= num_nodes())
        throw UnknownId("node out of range in presentation " + name_);

    // Normal forms are closed under prefixes, so depth-first extension by
    // letters that keep the word normal generates each one exactly once.
    std::vector<PathWord> result;
    PathWord current{n1, {}};
    auto extend = [&](auto&& self, int node) -> void {
        if (node == n2) result.push_back(current);
        if (current.length() >= max_len) return;
        for (const auto& edge : graph_.edges) {
            if (edge.identity || edge.src_node != node) continue;
            if (!current.empty()) {
                int last = current.letters.back();
                if (base_->cod(last) == base_->dom(edge.morphism)) continue;  // reducible
            }
            current.letters.push_back(edge.morphism);
            self(self, edge.dst_node);
            current.letters.pop_back();
        }
    };
    extend(extend, n1);

    std::sort(result.begin(), result.end(), [&](const PathWord& a, const PathWord& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        for (int i = 0; i < a.length(); ++i)
            if (letter_rank_[a.letters[i]] != letter_rank_[b.letters[i]])
                return letter_rank_[a.letters[i]] < letter_rank_[b.letters[i]];
        return false;
    });
    return result;
}

bool PresentedCategory::is_finite() const {
    // Vertices: non-identity edges. Arc e -> e' when they chain at node level
    // but are not composable in the base category; walks are exactly the
    // normal forms, so a cycle is equivalent to unbounded normal forms.
    const int m = base_->num_morphisms();
    std::vector<char> color(m, 0);  // 0 unvisited, 1 on stack, 2 done
    auto dfs = [&](auto&& self, int e) -> bool {
        color[e] = 1;
        for (const auto& next : graph_.edges) {
            if (next.identity) continue;
            if (edge_dst(e) != next.src_node) continue;
            if (base_->cod(e) == base_->dom(next.morphism)) continue;  // composable pair reduces
            if (color[next.morphism] == 1) return false;
            if (color[next.morphism] == 0 && !self(self, next.morphism)) return false;
        }
        color[e] = 2;
        return true;
    };
    for (const auto& edge : graph_.edges)
        if (!edge.identity && color[edge.morphism] == 0 && !dfs(dfs, edge.morphism)) return false;
    return true;
}

std::string PresentedCategory::word_to_string(const PathWord& w) const {
    if (w.empty()) return "eps";
    std::string out;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i > 0) out += ' ';
        out += base_->morphism_name(w.letters[i]);
    }
    return out;
}

}  // namespace fincat
