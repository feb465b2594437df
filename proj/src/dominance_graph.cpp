#include "rankaudit/dominance_graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "rankaudit/error.hpp"

namespace rankaudit {

DominanceGraph::DominanceGraph(std::vector<std::string> nodes)
    : nodes_(std::move(nodes)) {
    if (nodes_.size() < 2) {
        fail(ErrorCode::DimensionMismatch, "dominance graph needs >= 2 nodes");
    }
    std::unordered_set<std::string> seen;
    for (const auto& name : nodes_) {
        if (name.empty() || !seen.insert(name).second) {
            fail(ErrorCode::DuplicateName, "graph node names must be unique");
        }
    }
    adjacency_.assign(nodes_.size() * nodes_.size(), 0);
}

std::size_t DominanceGraph::index(const std::string& name) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i] == name) return i;
    }
    fail(ErrorCode::UnknownAlternative, "graph has no node " + name);
}

void DominanceGraph::add_edge(std::size_t winner, std::size_t loser) {
    if (winner == loser) {
        fail(ErrorCode::InvalidConfig, "self-loops are not allowed");
    }
    std::uint8_t& cell = adjacency_[winner * nodes_.size() + loser];
    if (cell == 0) {
        cell = 1;
        ++edge_count_;
    }
}

void DominanceGraph::add_edge(const std::string& winner, const std::string& loser) {
    add_edge(index(winner), index(loser));
}

void DominanceGraph::remove_edge(std::size_t winner, std::size_t loser) {
    std::uint8_t& cell = adjacency_[winner * nodes_.size() + loser];
    if (cell != 0) {
        cell = 0;
        --edge_count_;
    }
}

bool DominanceGraph::has_edge(const std::string& winner, const std::string& loser) const {
    return has_edge(index(winner), index(loser));
}

std::size_t DominanceGraph::out_degree(std::size_t node) const {
    std::size_t d = 0;
    for (std::size_t j = 0; j < nodes_.size(); ++j) {
        if (has_edge(node, j)) ++d;
    }
    return d;
}

bool DominanceGraph::is_tournament() const {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes_.size(); ++j) {
            if (has_edge(i, j) == has_edge(j, i)) return false;
        }
    }
    return true;
}

bool DominanceGraph::is_acyclic() const {
    // Kahn peeling; leftovers mean a cycle.
    const std::size_t n = nodes_.size();
    std::vector<std::size_t> indegree(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (has_edge(i, j)) ++indegree[j];
        }
    }
    std::vector<std::size_t> queue;
    for (std::size_t i = 0; i < n; ++i) {
        if (indegree[i] == 0) queue.push_back(i);
    }
    std::size_t removed = 0;
    while (!queue.empty()) {
        const std::size_t v = queue.back();
        queue.pop_back();
        ++removed;
        for (std::size_t j = 0; j < n; ++j) {
            if (has_edge(v, j) && --indegree[j] == 0) queue.push_back(j);
        }
    }
    return removed == n;
}

std::vector<std::pair<std::string, std::string>> DominanceGraph::edge_list() const {
    std::vector<std::pair<std::string, std::string>> edges;
    edges.reserve(edge_count_);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        for (std::size_t j = 0; j < nodes_.size(); ++j) {
            if (has_edge(i, j)) edges.emplace_back(nodes_[i], nodes_[j]);
        }
    }
    return edges;
}

long long max_three_cycles(int n) {
    if (n < 3) {
        fail(ErrorCode::NTooSmall, "3-cycle bound needs n >= 3");
    }
    const long long nn = n;
    return n % 2 == 0 ? nn * (nn * nn - 4) / 24 : nn * (nn * nn - 1) / 24;
}

std::vector<std::array<std::string, 3>> find_three_cycles(const DominanceGraph& graph) {
    if (!graph.is_tournament()) {
        fail(ErrorCode::NotATournament, "3-cycle detection expects a tournament");
    }
    std::vector<std::array<std::string, 3>> cycles;
    const std::size_t n = graph.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t c = b + 1; c < n; ++c) {
                // With a as anchor the cyclic triple is either a>b>c>a or
                // a>c>b>a; anything else is transitive.
                if (graph.has_edge(a, b) && graph.has_edge(b, c) &&
                    graph.has_edge(c, a)) {
                    cycles.push_back({graph.node(a), graph.node(b), graph.node(c)});
                } else if (graph.has_edge(a, c) && graph.has_edge(c, b) &&
                           graph.has_edge(b, a)) {
                    cycles.push_back({graph.node(a), graph.node(c), graph.node(b)});
                }
            }
        }
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

namespace {

/// Johnson's elementary-circuit search, trimmed to desk-scale graphs: the
/// start vertex is always the smallest index of its cycle because each pass
/// restricts the graph to vertices >= start.
class CycleEnumerator {
public:
    CycleEnumerator(const DominanceGraph& graph, std::size_t cap)
        : graph_(graph), cap_(cap), n_(graph.size()),
          blocked_(n_, false), block_list_(n_) {}

    std::vector<std::vector<std::size_t>> run(bool* truncated) {
        for (start_ = 0; start_ < n_ && !full_; ++start_) {
            std::fill(blocked_.begin(), blocked_.end(), false);
            for (auto& list : block_list_) list.clear();
            circuit(start_);
        }
        if (truncated) *truncated = full_;
        return std::move(cycles_);
    }

private:
    bool circuit(std::size_t v) {
        bool found = false;
        stack_.push_back(v);
        blocked_[v] = true;
        for (std::size_t w = start_; w < n_ && !full_; ++w) {
            if (!graph_.has_edge(v, w)) continue;
            if (w == start_) {
                cycles_.push_back(stack_);
                found = true;
                if (cycles_.size() >= cap_) full_ = true;
            } else if (!blocked_[w]) {
                if (circuit(w)) found = true;
            }
        }
        if (found) {
            unblock(v);
        } else {
            for (std::size_t w = start_; w < n_; ++w) {
                if (graph_.has_edge(v, w) && w != start_) {
                    auto& list = block_list_[w];
                    if (std::find(list.begin(), list.end(), v) == list.end()) {
                        list.push_back(v);
                    }
                }
            }
        }
        stack_.pop_back();
        return found;
    }

    void unblock(std::size_t v) {
        blocked_[v] = false;
        auto pending = std::move(block_list_[v]);
        block_list_[v].clear();
        for (std::size_t w : pending) {
            if (blocked_[w]) unblock(w);
        }
    }

    const DominanceGraph& graph_;
    std::size_t cap_;
    std::size_t n_;
    std::size_t start_ = 0;
    bool full_ = false;
    std::vector<bool> blocked_;
    std::vector<std::vector<std::size_t>> block_list_;
    std::vector<std::size_t> stack_;
    std::vector<std::vector<std::size_t>> cycles_;
};

} // namespace

std::vector<std::vector<std::size_t>> enumerate_simple_cycles(
    const DominanceGraph& graph, std::size_t max_cycles, bool* truncated) {
    CycleEnumerator enumerator(graph, max_cycles == 0 ? 1 : max_cycles);
    return enumerator.run(truncated);
}

} // namespace rankaudit
