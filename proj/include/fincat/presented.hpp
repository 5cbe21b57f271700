#ifndef FINCAT_PRESENTED_HPP
#define FINCAT_PRESENTED_HPP

#include <memory>
#include <string>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/partition.hpp"

namespace fincat {

/// One edge of the quotient graph: a morphism of the base category with its
/// endpoints pushed down to partition blocks. Edges are indexed by the
/// morphism index in the base category, so every morphism appears exactly once.
struct QuotientEdge {
    int morphism;   // index in the base category
    int src_node;   // block of dom
    int dst_node;   // block of cod
    bool identity;
};

struct QuotientGraph {
    int num_nodes = 0;
    std::vector<QuotientEdge> edges;
};

/// A path in the quotient graph, letters in diagrammatic order (source to
/// target). The anchor node carries dom/cod information for the empty word.
struct PathWord {
    int anchor = 0;
    std::vector<int> letters;

    bool empty() const { return letters.empty(); }
    int length() const { return static_cast<int>(letters.size()); }

    bool operator==(const PathWord& other) const {
        if (letters != other.letters) return false;
        return !letters.empty() || anchor == other.anchor;
    }
    bool operator!=(const PathWord& other) const { return !(*this == other); }
};

/// The quotient of the free category on a QuotientGraph by the congruence
/// generated by identity collapse (R1) and composable fusion (R2).
///
/// Both rules strictly shorten a word, so rewriting terminates; all critical
/// pairs resolve by the identity and associativity laws of the base category,
/// so normal forms are unique and morphism equality is decidable even when
/// the category is infinite.
class PresentedCategory {
public:
    PresentedCategory(std::string name, CategoryPtr base, ZetaPartition partition);

    const std::string& name() const { return name_; }
    const CategoryPtr& base() const { return base_; }
    const ZetaPartition& partition() const { return partition_; }
    const QuotientGraph& graph() const { return graph_; }

    int num_nodes() const { return graph_.num_nodes; }
    std::string node_name(int n) const { return partition_.block_name(n); }
    /// Node by display name ("[a]") or representative ("a"); throws UnknownId.
    int node_index(std::string_view name) const;

    int edge_src(int e) const { return graph_.edges[e].src_node; }
    int edge_dst(int e) const { return graph_.edges[e].dst_node; }
    bool edge_is_identity(int e) const { return graph_.edges[e].identity; }

    /// Dom/cod nodes of a valid word.
    int dom_node(const PathWord& w) const;
    int cod_node(const PathWord& w) const;

    /// Throws MalformedWord when letters are invalid or do not chain.
    void check_word(const PathWord& w) const;

    /// The unique normal form: no identity letters, no composable adjacency.
    PathWord reduce(const PathWord& w) const;
    bool is_normal_form(const PathWord& w) const;

    /// w1 then w2; throws NotComposable when the nodes do not match.
    PathWord compose_words(const PathWord& w2, const PathWord& w1) const;

    PathWord empty_word(int node) const { return PathWord{node, {}}; }
    /// The (reduced) one-letter word on a base morphism.
    PathWord word_of(int morphism) const;

    /// True when some morphism n1 -> n2 exists (graph reachability).
    bool hom_inhabited(int n1, int n2) const;

    /// All normal forms n1 -> n2 of length <= max_len, in length-lex order
    /// with letters compared by morphism identifier.
    std::vector<PathWord> enumerate_hom(int n1, int n2, int max_len) const;

    /// Whether the set of all normal forms is finite, decided by cycle
    /// detection on the irreducible-adjacency graph of non-identity edges.
    bool is_finite() const;

    /// Word rendered with morphism identifiers, "eps" when empty.
    std::string word_to_string(const PathWord& w) const;

private:
    std::string name_;
    CategoryPtr base_;
    ZetaPartition partition_;
    QuotientGraph graph_;
    std::vector<int> letter_rank_;  // morphism index -> rank of its id in token order
};

using PresentedCategoryPtr = std::shared_ptr<const PresentedCategory>;

}  // namespace fincat

#endif
