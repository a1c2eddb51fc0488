// Lazily grown rooted trees. A sampled tree is fully determined by
// (offspring distribution, seed): every vertex carries a stream key
// derived from its path to the root, and child lists are drawn from the
// vertex's own counter stream, so exploration order never changes the
// tree. Hand-built trees share the same container.
#pragma once

#include <atomic>
#include <cstdint>
#include <deque>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "frogsim/distribution.hpp"
#include "frogsim/rng.hpp"

namespace frogsim {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

enum class Label : std::uint8_t {
    Unlabeled = 0,
    G,        // on an infinite geodesic (here: has a descendant at the horizon)
    B,        // bush vertex
    Br,       // bush root (type-b child of a type-g vertex)
    Bs,       // stretch start
    Es,       // stretch end
    S,        // stretch interior
    N,        // branching vertex
};

const char* label_name(Label label);

// Sleeping-frog count at a vertex: pure function of (init, eta_seed, vertex
// stream key). Simulators and RootedTree::assign_frogs share this so the
// frog model, the collapsed model and the coupled BMC all see one
// realization per seed.
std::int64_t eta_value(const FrogInit& init, std::uint64_t eta_seed, std::uint64_t vertex_key);

class RootedTree {
  public:
    struct Node {
        VertexId parent = kNoVertex;
        std::int32_t depth = 0;
        std::uint64_t stream_key = 0;
        std::vector<VertexId> children;
        std::atomic<bool> expanded{false};
        Label label = Label::Unlabeled;
        std::int64_t frogs = -1;  // -1: not assigned
        // decomposed-sampler bookkeeping
        std::int32_t chain_remaining = -1;  // >=0: inside an inserted stretch
        std::int32_t chain_end_offspring = 0;
    };

    // Lazy samplers ------------------------------------------------------
    static RootedTree sample(const OffspringDistribution& dist, std::uint64_t seed,
                             std::int32_t depth_horizon);
    // Three-stage construction ST x PER x GW_bg; requires 0 < p_1 < 1.
    static RootedTree sample_decomposed(const OffspringDistribution& dist, std::uint64_t seed,
                                        std::int32_t depth_horizon);
    // Hand-built tree with just a root.
    static RootedTree manual(std::int32_t depth_horizon = 1 << 30);

    RootedTree(RootedTree&&) noexcept = default;
    RootedTree& operator=(RootedTree&&) noexcept = default;

    VertexId root() const { return 0; }
    std::size_t explored_size() const;
    std::int32_t depth_horizon() const { return horizon_; }
    std::uint64_t seed() const { return seed_; }

    VertexId parent(VertexId v) const { return node(v).parent; }
    std::int32_t depth(VertexId v) const { return node(v).depth; }
    std::uint64_t stream_key(VertexId v) const { return node(v).stream_key; }
    Label label(VertexId v) const { return node(v).label; }
    void set_label(VertexId v, Label label) { node_mut(v).label = label; }

    // Children, materializing them if needed. Vertices at the depth
    // horizon are frontier vertices: their lists stay empty and
    // children_known() reports false.
    const std::vector<VertexId>& children(VertexId v);
    bool children_known(VertexId v) const;
    // Degree in the full tree: children + parent edge.
    int degree(VertexId v);

    // Manual construction.
    VertexId add_child(VertexId parent);

    // Frog counts.
    bool frogs_assigned(VertexId v) const { return node(v).frogs >= 0; }
    std::int64_t frogs(VertexId v) const;
    void set_frogs(VertexId v, std::int64_t n) { node_mut(v).frogs = n; }
    // Draw counts for every explored vertex from (init, eta_seed).
    void assign_frogs(const FrogInit& init, std::uint64_t eta_seed);

    // Materialize everything to the given depth (capped by the horizon).
    void explore_to_depth(std::int32_t depth);

    // Canonical structure signature (child counts in DFS preorder);
    // equal signatures == isomorphic explored trees with equal child order.
    std::vector<std::int32_t> structure_signature() const;

    // One line per explored vertex: "parent_id vertex_id label frog_count",
    // ids renumbered in DFS preorder, root parent = -1.
    std::string to_edge_list() const;

  private:
    enum class Backing { Manual, Plain, Decomposed };

    RootedTree(Backing backing, OffspringDistribution dist, std::uint64_t seed,
               std::int32_t depth_horizon);

    const Node& node(VertexId v) const { return nodes_.at(v); }
    Node& node_mut(VertexId v) { return nodes_.at(v); }
    void expand(VertexId v);
    VertexId append_node(VertexId parent, std::uint64_t key, std::int32_t chain_remaining,
                         std::int32_t chain_end);

    Backing backing_;
    std::optional<OffspringDistribution> dist_;
    std::uint64_t seed_ = 0;
    std::int32_t horizon_ = 0;
    std::deque<Node> nodes_;
    mutable std::mutex expand_mutex_;
};

}  // namespace frogsim
