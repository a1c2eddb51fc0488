// Stretch labeling (bs/es/s/n), stretch truncation T -> T_N, and bush
// erasure T -> T^ with frog-mass aggregation.
#pragma once

#include <cstdint>
#include <vector>

#include "frogsim/tree.hpp"

namespace frogsim {

struct Stretch {
    VertexId start = kNoVertex;  // label bs
    VertexId end = kNoVertex;    // label es (== start when length 1)
    std::int32_t length = 0;     // number of degree-2 vertices in the run
};

struct StretchMap {
    std::vector<Stretch> stretches;
    // stretch index per vertex, kNoStretch when not inside any stretch
    static constexpr std::uint32_t kNoStretch = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> stretch_of;  // indexed by VertexId, may be shorter than tree

    std::uint32_t stretch_index(VertexId v) const {
        return v < stretch_of.size() ? stretch_of[v] : kNoStretch;
    }
};

// Labels every explored vertex up to `horizon` with bs/es/s/n by the
// degree rules; vertices whose classification depends on unexplored
// children keep Label::Unlabeled. The root is never part of a stretch.
// Returns all maximal stretches that are fully classified.
StretchMap label_stretches(RootedTree& tree, std::int32_t horizon);

// T_N: copy of the explored tree where every stretch longer than N is
// shortened to exactly N degree-2 vertices. Frog counts of surviving
// vertices are carried over.
RootedTree truncate_stretches(RootedTree& tree, const StretchMap& stretches, std::int32_t max_len);

struct BushErasure {
    RootedTree tree;                      // T^: the type-g skeleton
    std::vector<std::int64_t> frog_mass;  // per T^ vertex: own count + erased bushes
    std::size_t erased_vertices = 0;
};

// Erases every vertex with no descendant at the horizon depth. Requires
// frog counts assigned on the explored region. Bushes larger than
// `bush_cap` vertices abort with an explicit error rather than biasing
// the aggregated mass.
BushErasure erase_bushes(RootedTree& tree, std::int32_t horizon,
                         std::size_t bush_cap = 1'000'000);

}  // namespace frogsim
