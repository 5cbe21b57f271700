#ifndef FINCAT_PARTITION_HPP
#define FINCAT_PARTITION_HPP

#include <string>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

/// A partition of the object set of a category into equivalence classes.
///
/// Blocks are canonical: each block lists object indices in increasing order
/// and blocks are ordered by the identifier of their least-named member
/// (the block representative), so equal partitions compare equal.
class ZetaPartition {
public:
    /// Builds the smallest equivalence relation containing the given pairs;
    /// unpaired objects become singleton blocks.
    ZetaPartition(const FiniteCategory& ground, const std::vector<std::pair<int, int>>& pairs);

    int num_blocks() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block(int b) const { return blocks_[b]; }

    int block_of(int obj) const { return block_of_[obj]; }
    bool same_block(int a, int b) const { return block_of_[a] == block_of_[b]; }

    /// The least object identifier in the block, in token order.
    const std::string& representative(int b) const { return representatives_[b]; }
    /// Display name of a block: the representative in brackets, e.g. "[a]".
    std::string block_name(int b) const { return "[" + representatives_[b] + "]"; }
    /// Block index by display name or representative; -1 if absent.
    int block_index(std::string_view name) const;

    bool operator==(const ZetaPartition& other) const {
        return blocks_ == other.blocks_;
    }
    bool operator!=(const ZetaPartition& other) const { return !(*this == other); }

private:
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
    std::vector<std::string> representatives_;
};

}  // namespace fincat

#endif
