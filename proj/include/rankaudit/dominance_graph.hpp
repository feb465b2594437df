#ifndef RANKAUDIT_DOMINANCE_GRAPH_HPP
#define RANKAUDIT_DOMINANCE_GRAPH_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rankaudit {

/**
 * DominanceGraph — directed preference graph over named alternatives.
 * Edge (winner, loser) means the winner beat the loser in a pairwise
 * subproblem. Under a force-untie policy the graph is a tournament: exactly
 * one orientation per unordered pair, no self-loops.
 */
class DominanceGraph {
public:
    /// Empty graph; only useful as a placeholder member before assignment.
    DominanceGraph() = default;

    explicit DominanceGraph(std::vector<std::string> nodes);

    std::size_t size() const { return nodes_.size(); }
    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::string& node(std::size_t i) const { return nodes_[i]; }
    std::size_t index(const std::string& name) const;

    void add_edge(const std::string& winner, const std::string& loser);
    void add_edge(std::size_t winner, std::size_t loser);
    void remove_edge(std::size_t winner, std::size_t loser);
    bool has_edge(std::size_t winner, std::size_t loser) const {
        return adjacency_[winner * nodes_.size() + loser] != 0;
    }
    bool has_edge(const std::string& winner, const std::string& loser) const;

    std::size_t edge_count() const { return edge_count_; }
    std::size_t out_degree(std::size_t node) const;
    bool is_tournament() const;
    bool is_acyclic() const;

    /// Edges as (winner, loser) name pairs in canonical node-index order.
    std::vector<std::pair<std::string, std::string>> edge_list() const;

    bool operator==(const DominanceGraph& other) const = default;

private:
    std::vector<std::string> nodes_;
    std::vector<std::uint8_t> adjacency_; // n x n, row = winner
    std::size_t edge_count_ = 0;
};

/// Moon's bound: the maximum number of 3-cycles an n-tournament can hold,
/// n(n^2-4)/24 for even n and n(n^2-1)/24 for odd n. Throws NTooSmall for
/// n < 3.
long long max_three_cycles(int n);

/// All cyclically oriented triples of a tournament, each reported once with
/// the lexicographically smallest node first, sorted. Throws NotATournament.
std::vector<std::array<std::string, 3>> find_three_cycles(const DominanceGraph& graph);

/// Johnson-style enumeration of elementary cycles (as node-index sequences,
/// smallest index first), capped; `truncated` reports whether the cap hit.
std::vector<std::vector<std::size_t>> enumerate_simple_cycles(
    const DominanceGraph& graph, std::size_t max_cycles, bool* truncated = nullptr);

} // namespace rankaudit

#endif // RANKAUDIT_DOMINANCE_GRAPH_HPP
