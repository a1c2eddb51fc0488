#include "frogsim/tree.hpp"

#include <sstream>
#include <stdexcept>

namespace frogsim {

const char* label_name(Label label) {
    switch (label) {
        case Label::Unlabeled: return "-";
        case Label::G: return "g";
        case Label::B: return "b";
        case Label::Br: return "b_r";
        case Label::Bs: return "bs";
        case Label::Es: return "es";
        case Label::S: return "s";
        case Label::N: return "n";
    }
    return "?";
}

std::int64_t eta_value(const FrogInit& init, std::uint64_t eta_seed, std::uint64_t vertex_key) {
    const double u = rng::uniform(rng::stream_key(eta_seed, rng::Purpose::Eta, vertex_key), 0);
    return init.sample(u);
}

namespace {
constexpr std::uint64_t kRootSalt = 0x5af7e1c9b2d4a301ULL;
}

RootedTree::RootedTree(Backing backing, OffspringDistribution dist, std::uint64_t seed,
                       std::int32_t depth_horizon)
    : backing_(backing), dist_(std::move(dist)), seed_(seed), horizon_(depth_horizon) {
    if (depth_horizon < 1) throw std::invalid_argument("tree: depth horizon must be >= 1");
    append_node(kNoVertex, rng::derive_key(seed, kRootSalt), -1, 0);
}

RootedTree RootedTree::sample(const OffspringDistribution& dist, std::uint64_t seed,
                              std::int32_t depth_horizon) {
    return RootedTree(Backing::Plain, dist, seed, depth_horizon);
}

RootedTree RootedTree::sample_decomposed(const OffspringDistribution& dist, std::uint64_t seed,
                                         std::int32_t depth_horizon) {
    const double p1 = dist.prob(1);
    if (p1 <= 0.0 || p1 >= 1.0)
        throw std::invalid_argument("sample_decomposed: needs 0 < p_1 < 1");
    return RootedTree(Backing::Decomposed, dist, seed, depth_horizon);
}

RootedTree RootedTree::manual(std::int32_t depth_horizon) {
    return RootedTree(Backing::Manual, DiscreteDistribution::delta(0), 0x6d616e75616cULL,
                      depth_horizon);
}

std::size_t RootedTree::explored_size() const {
    std::lock_guard<std::mutex> lock(expand_mutex_);
    return nodes_.size();
}

VertexId RootedTree::append_node(VertexId parent, std::uint64_t key, std::int32_t chain_remaining,
                                 std::int32_t chain_end) {
    nodes_.emplace_back();
    Node& n = nodes_.back();
    n.parent = parent;
    n.depth = parent == kNoVertex ? 0 : nodes_[parent].depth + 1;
    n.stream_key = key;
    n.chain_remaining = chain_remaining;
    n.chain_end_offspring = chain_end;
    return static_cast<VertexId>(nodes_.size() - 1);
}

bool RootedTree::children_known(VertexId v) const {
    return node(v).expanded.load(std::memory_order_acquire);
}

void RootedTree::expand(VertexId v) {
    Node& n = node_mut(v);
    if (n.expanded.load(std::memory_order_acquire)) return;
    std::lock_guard<std::mutex> lock(expand_mutex_);
    if (n.expanded.load(std::memory_order_relaxed)) return;

    if (backing_ != Backing::Manual && n.depth < horizon_) {
        int count = 0;
        std::int32_t child_chain = -1;
        std::int32_t child_end = 0;

        if (backing_ == Backing::Plain) {
            const double u = rng::uniform(
                rng::stream_key(seed_, rng::Purpose::Offspring, n.stream_key), 0);
            count = dist_->sample(u);
        } else if (n.chain_remaining > 0) {
            // interior of an inserted stretch
            count = 1;
            child_chain = n.chain_remaining - 1;
            child_end = n.chain_end_offspring;
        } else if (n.chain_remaining == 0) {
            // last inserted vertex: attach the buffered GW_bg offspring
            count = n.chain_end_offspring;
        } else {
            // GW_bg vertex: draw offspring from p^_k = p_k/(1-p_1), then an
            // independent Bernoulli(p_1) stretch-start mark.
            const double p1 = dist_->prob(1);
            const double u = rng::uniform(
                rng::stream_key(seed_, rng::Purpose::Offspring, n.stream_key), 0);
            double acc = 0.0;
            int k_bg = -1;
            for (int k = 0; k <= dist_->d_max(); ++k) {
                if (k == 1 || dist_->prob(k) == 0.0) continue;
                k_bg = k;  // fallback: largest supported k, guards rounding at u ~ 1
                acc += dist_->prob(k) / (1.0 - p1);
                if (u < acc) break;
            }
            if (k_bg < 0) throw std::logic_error("sample_decomposed: distribution has no k != 1 mass");
            const bool marked = rng::uniform(rng::stream_key(seed_, rng::Purpose::StretchMark,
                                                             n.stream_key), 0) < p1;
            if (marked) {
                rng::Stream len_stream(
                    rng::stream_key(seed_, rng::Purpose::StretchLen, n.stream_key));
                const auto extra = len_stream.next_geometric_failures(p1);  // run = 1 + geo
                count = 1;
                child_chain = static_cast<std::int32_t>(extra);
                child_end = k_bg;
            } else {
                count = k_bg;
            }
        }

        n.children.reserve(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) {
            const std::uint64_t child_key =
                rng::derive_key(n.stream_key, static_cast<std::uint64_t>(i) + 1);
            n.children.push_back(append_node(v, child_key, child_chain, child_end));
        }
    }
    n.expanded.store(true, std::memory_order_release);
}

const std::vector<VertexId>& RootedTree::children(VertexId v) {
    expand(v);
    return node(v).children;
}

int RootedTree::degree(VertexId v) {
    const int parent_edge = node(v).parent == kNoVertex ? 0 : 1;
    return static_cast<int>(children(v).size()) + parent_edge;
}

VertexId RootedTree::add_child(VertexId parent) {
    if (backing_ != Backing::Manual)
        throw std::logic_error("add_child: only valid on manually built trees");
    std::lock_guard<std::mutex> lock(expand_mutex_);
    Node& p = node_mut(parent);
    const std::uint64_t key =
        rng::derive_key(p.stream_key, p.children.size() + 1);
    const VertexId id = append_node(parent, key, -1, 0);
    p.children.push_back(id);
    p.expanded.store(true, std::memory_order_release);
    nodes_[id].expanded.store(true, std::memory_order_release);
    return id;
}

std::int64_t RootedTree::frogs(VertexId v) const {
    const Node& n = node(v);
    if (n.frogs < 0) throw std::logic_error("frogs: count not assigned for vertex");
    return n.frogs;
}

void RootedTree::assign_frogs(const FrogInit& init, std::uint64_t eta_seed) {
    for (std::size_t v = 0; v < nodes_.size(); ++v) {
        Node& n = nodes_[v];
        if (n.frogs < 0) n.frogs = eta_value(init, eta_seed, n.stream_key);
    }
}

void RootedTree::explore_to_depth(std::int32_t depth) {
    // nodes_ only grows; index sweep doubles as a BFS-ish frontier walk.
    for (std::size_t v = 0; v < nodes_.size(); ++v) {
        if (nodes_[v].depth < depth) expand(static_cast<VertexId>(v));
    }
}

std::vector<std::int32_t> RootedTree::structure_signature() const {
    std::vector<std::int32_t> sig;
    std::vector<VertexId> stack = {0};
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        const Node& n = node(v);
        sig.push_back(n.expanded.load(std::memory_order_acquire)
                          ? static_cast<std::int32_t>(n.children.size())
                          : -1);
        for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(*it);
    }
    return sig;
}

std::string RootedTree::to_edge_list() const {
    std::ostringstream out;
    // DFS preorder renumbering makes the file independent of
    // materialization order.
    std::vector<std::pair<VertexId, std::int64_t>> stack = {{0, -1}};  // (vertex, parent dfs id)
    std::int64_t next_id = 0;
    while (!stack.empty()) {
        const auto [v, parent_dfs] = stack.back();
        stack.pop_back();
        const Node& n = node(v);
        const std::int64_t dfs_id = next_id++;
        out << parent_dfs << ' ' << dfs_id << ' ' << label_name(n.label) << ' ' << n.frogs << '\n';
        for (auto it = n.children.rbegin(); it != n.children.rend(); ++it)
            stack.push_back({*it, dfs_id});
    }
    return out.str();
}

}  // namespace frogsim
