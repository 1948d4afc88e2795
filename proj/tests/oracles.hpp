#pragma once

// Test-side oracles, deliberately independent of the library code paths they
// are used to check.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "graphs.hpp"

namespace propcalc::oracles {

// Brute-force isomorphism search: tries every vertex bijection and every
// edge bijection and re-checks the definition from scratch.
inline bool brute_force_iso_exists(const ColoredGraph& g1, const ColoredGraph& g2,
                                   IsoFlavor flavor) {
    const int nv = g1.vertex_count();
    const int ne = g1.edge_count();
    if (nv != g2.vertex_count() || ne != g2.edge_count()) return false;
    std::vector<int> vperm(nv), eperm(ne);
    std::iota(vperm.begin(), vperm.end(), 0);
    do {
        std::iota(eperm.begin(), eperm.end(), 0);
        do {
            GraphIso cand;
            cand.flavor = flavor;
            cand.vertex_map = vperm;
            cand.edge_map = eperm;
            bool ok = true;
            for (int e = 0; e < ne && ok; ++e) {
                const auto& a = g1.edges[e];
                const auto& b = g2.edges[eperm[e]];
                if (a.color != b.color) ok = false;
                if (ok && a.source.attached() != b.source.attached()) ok = false;
                if (ok && a.target.attached() != b.target.attached()) ok = false;
                if (ok && a.source.attached()) {
                    if (vperm[a.source.vertex] != b.source.vertex) ok = false;
                    if (ok && flavor == IsoFlavor::Strict && a.source.port != b.source.port)
                        ok = false;
                }
                if (ok && a.target.attached()) {
                    if (vperm[a.target.vertex] != b.target.vertex) ok = false;
                    if (ok && flavor == IsoFlavor::Strict && a.target.port != b.target.port)
                        ok = false;
                }
            }
            // arities must correspond so ports stay bijective
            for (int v = 0; v < nv && ok; ++v) {
                if (g1.vertices[v].in_arity() != g2.vertices[vperm[v]].in_arity()) ok = false;
                if (g1.vertices[v].out_arity() != g2.vertices[vperm[v]].out_arity())
                    ok = false;
            }
            if (ok && flavor == IsoFlavor::Strict) {
                if (g1.graph_inputs.size() != g2.graph_inputs.size() ||
                    g1.graph_outputs.size() != g2.graph_outputs.size())
                    ok = false;
                for (size_t s = 0; ok && s < g1.graph_inputs.size(); ++s)
                    if (eperm[g1.graph_inputs[s]] != g2.graph_inputs[s]) ok = false;
                for (size_t t = 0; ok && t < g1.graph_outputs.size(); ++t)
                    if (eperm[g1.graph_outputs[t]] != g2.graph_outputs[t]) ok = false;
            }
            if (ok) return true;
        } while (std::next_permutation(eperm.begin(), eperm.end()));
    } while (std::next_permutation(vperm.begin(), vperm.end()));
    return false;
}

// Undirected cycle detection by explicit DFS on the incidence structure
// (vertices and dangling ends are nodes, edges are arcs).
inline bool brute_force_has_cycle(const ColoredGraph& g) {
    const int nv = g.vertex_count();
    int extra = 0;
    std::vector<std::pair<int, int>> arcs; // node pairs
    for (const auto& e : g.edges) {
        int a = e.source.attached() ? e.source.vertex : nv + extra++;
        int b = e.target.attached() ? e.target.vertex : nv + extra++;
        arcs.push_back({a, b});
    }
    const int n = nv + extra;
    std::vector<std::vector<std::pair<int, int>>> adj(n); // (node, arc id)
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
        adj[arcs[i].first].push_back({arcs[i].second, i});
        adj[arcs[i].second].push_back({arcs[i].first, i});
    }
    std::vector<int> mark(n, 0);
    for (int s = 0; s < n; ++s) {
        if (mark[s]) continue;
        // DFS remembering the arc used to enter each node
        std::vector<std::tuple<int, int>> stack = {{s, -1}};
        while (!stack.empty()) {
            auto [v, via] = stack.back();
            stack.pop_back();
            if (mark[v]) return true; // reached an already-visited node: cycle
            mark[v] = 1;
            for (auto [w, arc] : adj[v])
                if (arc != via) stack.push_back({w, arc});
        }
    }
    return false;
}

// Whisker deletion: remove a leg edge (exactly one dangling end) together
// with its port, renumbering the surviving ports and orderings.
inline std::optional<ColoredGraph> drop_leg(const ColoredGraph& g, int edge) {
    const auto& e = g.edges[edge];
    const bool in_leg = !e.source.attached() && e.target.attached();
    const bool out_leg = e.source.attached() && !e.target.attached();
    if (!in_leg && !out_leg) return std::nullopt;
    ColoredGraph r;
    r.colors = g.colors;
    std::vector<int> emap(g.edge_count(), -1);
    for (int i = 0, j = 0; i < g.edge_count(); ++i)
        if (i != edge) emap[i] = j++;
    r.vertices.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int k = 0; k < g.vertices[v].in_arity(); ++k) {
            int ee = g.vertices[v].inputs[k];
            if (ee != edge) r.vertices[v].inputs.push_back(emap[ee]);
        }
        for (int k = 0; k < g.vertices[v].out_arity(); ++k) {
            int ee = g.vertices[v].outputs[k];
            if (ee != edge) r.vertices[v].outputs.push_back(emap[ee]);
        }
    }
    for (int i = 0; i < g.edge_count(); ++i) {
        if (i == edge) continue;
        GraphEdge ne = g.edges[i];
        r.edges.push_back(ne);
    }
    // fix port indices after removal
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int k = 0; k < static_cast<int>(r.vertices[v].inputs.size()); ++k)
            r.edges[r.vertices[v].inputs[k]].target = PortRef{v, k};
        for (int k = 0; k < static_cast<int>(r.vertices[v].outputs.size()); ++k)
            r.edges[r.vertices[v].outputs[k]].source = PortRef{v, k};
    }
    for (int ee : g.graph_inputs)
        if (ee != edge) r.graph_inputs.push_back(emap[ee]);
    for (int ee : g.graph_outputs)
        if (ee != edge) r.graph_outputs.push_back(emap[ee]);
    return r;
}

} // namespace propcalc::oracles
