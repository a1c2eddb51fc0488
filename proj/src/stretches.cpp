#include "frogsim/stretches.hpp"

#include <stdexcept>
#include <string>

namespace frogsim {

StretchMap label_stretches(RootedTree& tree, std::int32_t horizon) {
    tree.explore_to_depth(horizon);
    const auto explored = tree.explored_size();

    // A vertex's own degree is known once its children are materialized;
    // classification additionally needs the mother's degree (always known
    // for explored non-roots) and, to tell es/s apart, the child's.
    auto degree_known = [&](VertexId v) { return tree.children_known(v); };

    for (VertexId v = 0; v < explored; ++v) {
        if (!degree_known(v)) {
            tree.set_label(v, Label::Unlabeled);
            continue;
        }
        if (v == tree.root()) {
            tree.set_label(v, Label::N);
            continue;
        }
        if (tree.degree(v) != 2) {
            tree.set_label(v, Label::N);
            continue;
        }
        // degree 2 and not the root: exactly one child
        const VertexId mother = tree.parent(v);
        const VertexId child = tree.children(v)[0];
        const bool mother_is_root = mother == tree.root();
        const int mother_deg = tree.degree(mother);
        if (!mother_is_root && mother_deg > 2) {
            tree.set_label(v, Label::Bs);
            continue;
        }
        if (!degree_known(child)) {
            tree.set_label(v, Label::Unlabeled);
            continue;
        }
        const int child_deg = tree.degree(child);
        if (child_deg > 2) {
            tree.set_label(v, Label::Es);
        } else if (!mother_is_root && mother_deg == 2 && child_deg == 2) {
            tree.set_label(v, Label::S);
        } else {
            // degenerate neighbourhoods (root chains, leaves below): the
            // paper's rules presume a proper mother, treat as non-stretch
            tree.set_label(v, Label::N);
        }
    }

    StretchMap map;
    map.stretch_of.assign(explored, StretchMap::kNoStretch);
    for (VertexId v = 0; v < explored; ++v) {
        if (tree.label(v) != Label::Bs) continue;
        // walk down through s-vertices; a complete stretch ends at an es
        // vertex (or at the bs vertex itself when its child branches)
        std::vector<VertexId> run = {v};
        VertexId cur = v;
        bool complete = false;
        while (true) {
            const VertexId child = tree.children(cur)[0];
            if (!tree.children_known(child)) break;  // classification incomplete
            const int child_deg = tree.degree(child);
            if (child_deg > 2) {
                complete = true;
                break;
            }
            if (tree.label(child) != Label::S && tree.label(child) != Label::Es) break;
            run.push_back(child);
            cur = child;
        }
        if (!complete) continue;
        const auto idx = static_cast<std::uint32_t>(map.stretches.size());
        map.stretches.push_back({v, run.back(), static_cast<std::int32_t>(run.size())});
        for (VertexId u : run) map.stretch_of[u] = idx;
    }
    return map;
}

namespace {

// Copies `src` below `from` into `dst` below `to`, applying the stretch
// clipping rule.
struct CopyFrame {
    VertexId src;
    VertexId dst;
};

}  // namespace

RootedTree truncate_stretches(RootedTree& tree, const StretchMap& stretches,
                              std::int32_t max_len) {
    if (max_len < 1) throw std::invalid_argument("truncate_stretches: N must be >= 1");
    RootedTree out = RootedTree::manual(tree.depth_horizon());
    if (tree.frogs_assigned(tree.root())) out.set_frogs(out.root(), tree.frogs(tree.root()));
    out.set_label(out.root(), tree.label(tree.root()));

    std::vector<CopyFrame> stack = {{tree.root(), out.root()}};
    while (!stack.empty()) {
        auto [src, dst] = stack.back();
        stack.pop_back();
        if (!tree.children_known(src)) continue;
        for (VertexId child : tree.children(src)) {
            VertexId tail = child;
            const auto sidx = stretches.stretch_index(child);
            if (sidx != StretchMap::kNoStretch && stretches.stretches[sidx].start == child) {
                const auto& st = stretches.stretches[sidx];
                if (st.length > max_len) {
                    // keep the first max_len run vertices, splice the rest out
                    VertexId cursor = child;
                    VertexId d = dst;
                    for (std::int32_t i = 0; i < max_len; ++i) {
                        const VertexId nd = out.add_child(d);
                        if (tree.frogs_assigned(cursor)) out.set_frogs(nd, tree.frogs(cursor));
                        out.set_label(nd, tree.label(cursor));
                        d = nd;
                        cursor = tree.children(cursor)[0];
                    }
                    // reattach the branching vertex below the clipped run
                    const VertexId after = tree.children(st.end)[0];
                    const VertexId nd_after = out.add_child(d);
                    if (tree.frogs_assigned(after)) out.set_frogs(nd_after, tree.frogs(after));
                    out.set_label(nd_after, tree.label(after));
                    stack.push_back({after, nd_after});
                    continue;
                }
            }
            const VertexId nd = out.add_child(dst);
            if (tree.frogs_assigned(tail)) out.set_frogs(nd, tree.frogs(tail));
            out.set_label(nd, tree.label(tail));
            stack.push_back({tail, nd});
        }
    }
    return out;
}

namespace {

// Vertices with a descendant at the horizon depth survive (treated as
// type g at finite horizon).
void classify_survivors(RootedTree& tree, std::int32_t horizon, std::vector<char>& survives) {
    tree.explore_to_depth(horizon);
    const auto explored = tree.explored_size();
    survives.assign(explored, 0);
    // children were appended after their parents, so a reverse index sweep
    // is a valid post-order aggregation
    for (std::size_t v = explored; v-- > 0;) {
        const auto vid = static_cast<VertexId>(v);
        if (tree.depth(vid) >= horizon) {
            survives[v] = 1;
            continue;
        }
        for (VertexId c : tree.children(vid))
            if (survives[c]) {
                survives[v] = 1;
                break;
            }
    }
}

std::int64_t bush_frog_total(RootedTree& tree, VertexId bush_root, std::size_t bush_cap) {
    std::int64_t total = 0;
    std::size_t count = 0;
    std::vector<VertexId> stack = {bush_root};
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        if (++count > bush_cap)
            throw std::runtime_error("erase_bushes: bush-cap exceeded (" +
                                     std::to_string(bush_cap) + " vertices); re-run with a larger cap");
        total += tree.frogs(v);
        for (VertexId c : tree.children(v)) stack.push_back(c);
    }
    return total;
}

}  // namespace

BushErasure erase_bushes(RootedTree& tree, std::int32_t horizon, std::size_t bush_cap) {
    std::vector<char> survives;
    classify_survivors(tree, horizon, survives);
    if (!survives[tree.root()])
        throw std::invalid_argument("erase_bushes: tree is extinct before the horizon");

    BushErasure result{RootedTree::manual(tree.depth_horizon()), {}, 0};
    std::size_t erased = 0;

    std::vector<CopyFrame> stack = {{tree.root(), result.tree.root()}};
    // mass = own frogs + total frogs of attached erased bushes
    std::vector<std::int64_t> mass = {tree.frogs(tree.root())};
    while (!stack.empty()) {
        auto [src, dst] = stack.back();
        stack.pop_back();
        for (VertexId child : tree.children(src)) {
            tree.set_label(child, survives[child] ? Label::G : Label::Br);
            if (survives[child]) {
                const VertexId nd = result.tree.add_child(dst);
                mass.push_back(tree.frogs(child));
                result.tree.set_frogs(nd, tree.frogs(child));
                stack.push_back({child, nd});
            } else {
                mass[dst] += bush_frog_total(tree, child, bush_cap);
                // count the erased vertices for reporting
                std::vector<VertexId> bs = {child};
                while (!bs.empty()) {
                    const VertexId b = bs.back();
                    bs.pop_back();
                    if (b != child) tree.set_label(b, Label::B);
                    ++erased;
                    for (VertexId c : tree.children(b)) bs.push_back(c);
                }
            }
        }
    }
    tree.set_label(tree.root(), Label::G);
    for (std::size_t v = 0; v < mass.size(); ++v)
        result.tree.set_frogs(static_cast<VertexId>(v), mass[v]);
    result.frog_mass = std::move(mass);
    result.erased_vertices = erased;
    return result;
}

}  // namespace frogsim
