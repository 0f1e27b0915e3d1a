#include "cayspec/gcm.hpp"

#include <algorithm>

#include "cayspec/errors.hpp"

namespace cayspec {

namespace {

// connected components of the induced subgraph on verts, in g or in the
// complement of g restricted to verts
std::vector<std::vector<int>> subset_components(const TGraph& g, const std::vector<int>& verts,
                                                bool in_complement) {
    std::vector<std::vector<int>> out;
    std::vector<char> used(verts.size(), 0);
    for (std::size_t s = 0; s < verts.size(); ++s) {
        if (used[s]) continue;
        std::vector<std::size_t> stack{s};
        std::vector<int> comp;
        used[s] = 1;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            comp.push_back(verts[v]);
            for (std::size_t u = 0; u < verts.size(); ++u) {
                if (used[u]) continue;
                bool adj = g.has_edge(verts[v], verts[u]);
                if (in_complement ? !adj : adj) {
                    used[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// vertex classes if the induced subgraph is complete multipartite: every
// complement component must be an independent set of g
std::optional<std::vector<std::vector<int>>> multipartite_classes(const TGraph& g,
                                                                  const std::vector<int>& verts) {
    auto classes = subset_components(g, verts, /*in_complement=*/true);
    for (const auto& cls : classes)
        for (std::size_t x = 0; x < cls.size(); ++x)
            for (std::size_t y = x + 1; y < cls.size(); ++y)
                if (g.has_edge(cls[x], cls[y])) return std::nullopt;
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) {
                  return a.size() != b.size() ? a.size() > b.size() : a < b;
              });
    return classes;
}

std::optional<GcmNode> decompose_union(const TGraph& g, const std::vector<int>& verts);

// verts induce a connected, non-complete-multipartite subgraph; try to split
// it as a join of >= 2 factors (components of the complement)
std::optional<GcmNode> decompose_join(const TGraph& g, const std::vector<int>& verts) {
    auto factors = subset_components(g, verts, /*in_complement=*/true);
    if (factors.size() < 2) return std::nullopt;
    GcmNode node;
    node.kind = GcmNode::Kind::Join;
    node.cm_pure = false;
    int max_child = 1;
    bool all_pure = true;
    for (const auto& f : factors) {
        auto child = decompose_union(g, f);
        if (!child) return std::nullopt;
        max_child = std::max(max_child, child->type);
        all_pure = all_pure && child->cm_pure;
        node.children.push_back(std::move(*child));
    }
    node.type = all_pure ? 1 : 1 + max_child;
    return node;
}

// verts induce an arbitrary subgraph; accept it as a disjoint union of
// complete multipartite pieces and recursively decomposed joins
std::optional<GcmNode> decompose_union(const TGraph& g, const std::vector<int>& verts) {
    GcmNode node;
    node.kind = GcmNode::Kind::Union;
    GcmNode iso;
    iso.kind = GcmNode::Kind::Isolated;
    for (const auto& comp : subset_components(g, verts, /*in_complement=*/false)) {
        if (comp.size() == 1) {
            iso.isolated_vertices.push_back(comp[0]);
            continue;
        }
        if (auto classes = multipartite_classes(g, comp)) {
            GcmNode leaf;
            leaf.kind = GcmNode::Kind::Multipartite;
            leaf.classes = std::move(*classes);
            node.children.push_back(std::move(leaf));
            continue;
        }
        auto sub = decompose_join(g, comp);
        if (!sub) return std::nullopt;
        node.cm_pure = false;
        node.type = std::max(node.type, sub->type);
        node.children.push_back(std::move(*sub));
    }
    if (!iso.isolated_vertices.empty()) node.children.push_back(std::move(iso));
    return node;
}

void collect_support(const GcmNode& node, std::vector<int>& out) {
    for (const auto& cls : node.classes) out.insert(out.end(), cls.begin(), cls.end());
    out.insert(out.end(), node.isolated_vertices.begin(), node.isolated_vertices.end());
    for (const auto& c : node.children) collect_support(c, out);
}

void add_node_edges(const GcmNode& node, TGraph& g) {
    switch (node.kind) {
    case GcmNode::Kind::Isolated:
        break;
    case GcmNode::Kind::Multipartite:
        for (std::size_t a = 0; a < node.classes.size(); ++a)
            for (std::size_t b = a + 1; b < node.classes.size(); ++b)
                for (int u : node.classes[a])
                    for (int v : node.classes[b]) g.add_edge(u, v);
        break;
    case GcmNode::Kind::Union:
        for (const auto& c : node.children) add_node_edges(c, g);
        break;
    case GcmNode::Kind::Join: {
        std::vector<std::vector<int>> supports;
        for (const auto& c : node.children) {
            add_node_edges(c, g);
            supports.push_back(c.support());
        }
        for (std::size_t a = 0; a < supports.size(); ++a)
            for (std::size_t b = a + 1; b < supports.size(); ++b)
                for (int u : supports[a])
                    for (int v : supports[b]) g.add_edge(u, v);
        break;
    }
    }
}

} // namespace

std::vector<int> GcmNode::support() const {
    std::vector<int> out;
    collect_support(*this, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::string GcmNode::to_string() const {
    switch (kind) {
    case Kind::Isolated:
        return std::to_string(isolated_vertices.size()) + "K1";
    case Kind::Multipartite: {
        std::string s = "K{";
        for (std::size_t i = 0; i < classes.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(classes[i].size());
        }
        return s + "}";
    }
    case Kind::Union:
    case Kind::Join: {
        std::string sep = kind == Kind::Union ? " u " : " * ";
        std::string s = "(";
        for (std::size_t i = 0; i < children.size(); ++i) {
            if (i) s += sep;
            s += children[i].to_string();
        }
        return s + ")";
    }
    }
    return "?";
}

std::optional<GcmTree> gcm_decompose(const TGraph& g) {
    std::vector<int> isolated, core;
    for (int v = 1; v <= g.n(); ++v) (g.degree(v) == 0 ? isolated : core).push_back(v);

    GcmTree tree;
    tree.isolated = static_cast<int>(isolated.size());

    if (core.empty()) {
        tree.root.kind = GcmNode::Kind::Isolated;
        tree.root.isolated_vertices = isolated;
        tree.type_number = 1;
        return tree;
    }

    // base case: every component of the core is complete multipartite
    bool base = true;
    for (const auto& comp : subset_components(g, core, false))
        if (!multipartite_classes(g, comp)) {
            base = false;
            break;
        }

    std::optional<GcmNode> core_node;
    if (base) {
        core_node = decompose_union(g, core); // yields only leaves here
    } else {
        core_node = decompose_join(g, core); // the core itself must be a join
    }
    if (!core_node) return std::nullopt;

    if (isolated.empty()) {
        tree.root = std::move(*core_node);
    } else {
        GcmNode iso;
        iso.kind = GcmNode::Kind::Isolated;
        iso.isolated_vertices = isolated;
        GcmNode root;
        root.kind = GcmNode::Kind::Union;
        root.type = core_node->type;
        root.cm_pure = core_node->cm_pure;
        root.children.push_back(std::move(*core_node));
        root.children.push_back(std::move(iso));
        tree.root = std::move(root);
    }
    tree.type_number = tree.root.type;
    return tree;
}

TGraph reconstruct(const GcmTree& tree, int n) {
    TGraph g(n);
    add_node_edges(tree.root, g);
    return g;
}

} // namespace cayspec
