#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace propcalc {

using Color = std::string;

// Ordered pair of color lists (inputs; outputs) indexing an entry P(d;c).
struct Biprofile {
    std::vector<Color> inputs;
    std::vector<Color> outputs;

    bool operator==(const Biprofile&) const = default;
    auto operator<=>(const Biprofile&) const = default;

    int in_arity() const { return static_cast<int>(inputs.size()); }
    int out_arity() const { return static_cast<int>(outputs.size()); }
    int total_arity() const { return in_arity() + out_arity(); }

    // Stable textual key, e.g. "c,c|d".
    std::string key() const;
};

// The three pasting schemes: all wheel-free graphs, connected wheel-free
// graphs, simply connected wheel-free graphs.
enum class Scheme { Prop, Properad, Dioperad };

const char* scheme_name(Scheme s);
std::optional<Scheme> scheme_from_name(const std::string& name);

// One end of an edge: an input or output port of a vertex, or dangling.
struct PortRef {
    std::int32_t vertex = -1;
    std::int32_t port = -1;

    bool attached() const { return vertex >= 0; }
    bool operator==(const PortRef&) const = default;
};

struct GraphEdge {
    Color color;
    PortRef source; // output port producing this edge, if attached
    PortRef target; // input port consuming this edge, if attached
};

struct GraphVertex {
    std::vector<int> inputs;  // edge ids in input-port order
    std::vector<int> outputs; // edge ids in output-port order

    int in_arity() const { return static_cast<int>(inputs.size()); }
    int out_arity() const { return static_cast<int>(outputs.size()); }
};

// Finite directed wheel-free graph with half-edges, edge colors, and
// orderings of graph-level and vertex-level inputs/outputs.
//
// graph_inputs lists, in order, the edges whose source end is dangling;
// graph_outputs those whose target end is dangling. An isolated edge
// appears in both.
struct ColoredGraph {
    std::vector<Color> colors; // ambient color set, ordered
    std::vector<GraphVertex> vertices;
    std::vector<GraphEdge> edges;
    std::vector<int> graph_inputs;
    std::vector<int> graph_outputs;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    Biprofile biprofile() const;
    Biprofile vertex_profile(int v) const;

    // Edges with both ends attached.
    int internal_edge_count() const;
};

struct ValidationIssue {
    std::string code;   // stable identifier, e.g. "wheel", "ordering"
    std::string detail; // human-readable description
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string summary() const;
};

ValidationReport validate(const ColoredGraph& g);

// Throws ValidationError unless validate(g) is clean.
void require_valid(const ColoredGraph& g, const std::string& context);

// One-vertex graph of the given biprofile. Ambient colors default to the
// colors appearing in the biprofile (deduplicated, in order of appearance).
ColoredGraph make_corolla(const Biprofile& bp);
ColoredGraph make_corolla(const std::vector<Color>& ambient, const Biprofile& bp);

// Zero-vertex graph consisting of a single edge, input and output at once.
ColoredGraph make_edge(const Color& c);
ColoredGraph make_edge(const std::vector<Color>& ambient, const Color& c);

// Empty graph over an ambient color set (biprofile (;)).
ColoredGraph make_empty(const std::vector<Color>& ambient);

// Connectivity of the underlying undirected incidence structure; isolated
// edges count as components. The empty graph is not connected.
bool is_connected(const ColoredGraph& g);
bool is_simply_connected(const ColoredGraph& g);

struct Betti {
    unsigned b0 = 0; // rank of reduced H0
    unsigned b1 = 0; // cycle rank
    bool operator==(const Betti&) const = default;
};

// Betti numbers of the topological realization (dangling ends are 0-cells).
Betti betti(const ColoredGraph& g);

enum class IsoFlavor { Strict, Weak };

struct GraphIso {
    std::vector<int> vertex_map; // g1 vertex -> g2 vertex
    std::vector<int> edge_map;   // g1 edge -> g2 edge
    IsoFlavor flavor = IsoFlavor::Strict;
};

inline constexpr int kDefaultIsoVertexBound = 8;

// Exhaustive isomorphism search. Throws BoundError past max_vertices.
std::optional<GraphIso> find_iso(const ColoredGraph& g1, const ColoredGraph& g2,
                                 IsoFlavor flavor,
                                 int max_vertices = kDefaultIsoVertexBound);

// Checks that a given candidate really is an isomorphism of the stated flavor.
bool check_iso(const ColoredGraph& g1, const ColoredGraph& g2, const GraphIso& iso);

using CanonicalCode = std::string;

// Canonical byte string: equal for two graphs iff they are strictly
// isomorphic. Computed by minimizing a structural encoding over all vertex
// numberings. Throws BoundError past max_vertices.
CanonicalCode canonical_code(const ColoredGraph& g,
                             int max_vertices = kDefaultIsoVertexBound);

// Same, with one opaque label per vertex folded into the encoding; equal
// codes iff there is a strict isomorphism matching labels.
CanonicalCode canonical_code_decorated(const ColoredGraph& g,
                                       const std::vector<std::string>& vertex_labels,
                                       int max_vertices = kDefaultIsoVertexBound);

bool strictly_isomorphic(const ColoredGraph& g1, const ColoredGraph& g2);

struct EnumerationParams {
    Scheme scheme = Scheme::Prop;
    std::vector<Color> colors;
    Biprofile biprofile;
    int max_vertices = 0;
    int max_vertex_in = 0;  // per-vertex input arity bound
    int max_vertex_out = 0; // per-vertex output arity bound
};

// One representative per strict-isomorphism class of scheme members with
// the given biprofile, within the bounds; sorted by canonical code.
std::vector<ColoredGraph> enumerate_graphs(const EnumerationParams& params);

// Relabel vertices and edges by permutations (inverse images: position i of
// the result holds old vertex vperm[i]). Test/oracle helper; preserves the
// strict isomorphism class.
ColoredGraph relabel(const ColoredGraph& g, const std::vector<int>& vertex_order,
                     const std::vector<int>& edge_order);

} // namespace propcalc
