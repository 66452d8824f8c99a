#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tkm {

// One crossing of an oriented PD code.  e[0..3] are edge ids listed
// counterclockwise starting at the incoming under-strand, so e[0] is the
// under-strand arriving and e[2] the under-strand leaving.  The over-strand
// occupies e[1] and e[3]; `over_in_3` records which of them is incoming.
// over_in_3 == true gives a positive crossing under the right-hand rule.
struct Crossing {
    std::array<int, 4> e{};
    bool over_in_3 = true;

    int sign() const { return over_in_3 ? 1 : -1; }
    int over_in_slot() const { return over_in_3 ? 3 : 1; }
    int over_out_slot() const { return over_in_3 ? 1 : 3; }
    bool slot_is_incoming(int s) const {
        return s == 0 || s == over_in_slot();
    }
};

// Where one end of an edge sits.
struct EdgeEnd {
    int crossing = -1;
    int slot = -1;
    bool operator==(const EdgeEnd&) const = default;
};

struct EdgeInfo {
    EdgeEnd tail;  // where the edge leaves a crossing
    EdgeEnd head;  // where it arrives
    bool loop = false;
};

// A face side: edge id + direction of traversal (true = tail->head).
struct FaceSide {
    int edge;
    bool forward;
    bool operator==(const FaceSide&) const = default;
    bool operator<(const FaceSide& o) const {
        return edge != o.edge ? edge < o.edge : forward < o.forward;
    }
};

// Oriented link diagram: a PD code plus crossing-free circles ("loops").
// Edge ids are arbitrary distinct integers.  Immutable by convention; all
// surgeries return new diagrams.
class LinkDiagram {
  public:
    std::vector<Crossing> crossings;
    std::vector<int> loops;  // one edge id per 0-crossing circle

    // Rebuilds the edge index and checks the PD invariants: every edge id
    // occurs exactly twice across crossing slots with one incoming and one
    // outgoing role (or once as a loop), and the face structure of every
    // connected component has Euler characteristic 2.
    void validate();

    bool has_edge(int e) const { return edges_.count(e) != 0; }
    const EdgeInfo& edge(int e) const;
    std::vector<int> edge_ids() const;
    int fresh_edge_id() const;

    // Successor edge along the orientation (loops are their own successor).
    int next_edge(int e) const;

    int num_components() const;
    int component_of(int edge) const;
    // Edges of each component, in traversal order.
    const std::vector<std::vector<int>>& component_cycles() const;

    int writhe() const;

    // Half the signed count of crossings between components i and j (i != j).
    int linking_number(int i, int j) const;
    // Sum of linking numbers of component i with everything else.
    int total_linking(int i) const;

    LinkDiagram reversed_component(int comp) const;
    LinkDiagram reversed_components(const std::set<int>& comps) const;
    LinkDiagram mirrored() const;

    // Faces of the underlying 4-valent sphere graph.  Loop circles contribute
    // no faces here; they are handled by the callers that need them.
    const std::vector<std::vector<FaceSide>>& faces() const;
    // face index on the left/right of the directed edge
    int face_of(const FaceSide& side) const;

    // Connected components of the underlying graph; loops are singletons.
    // Returns one diagram per connected piece when split, with edge ids kept.
    bool is_connected() const;
    std::vector<LinkDiagram> split_components() const;

    // Deterministic canonical relabeling; equal keys define diagram equality.
    std::string canonical_key() const;

    bool operator==(const LinkDiagram& o) const;

  private:
    void build_index();
    int next_edge_internal(int e) const;

    std::map<int, EdgeInfo> edges_;
    std::vector<std::vector<int>> cycles_;        // component edge cycles
    std::map<int, int> comp_of_;                  // edge -> component index
    std::vector<std::vector<FaceSide>> faces_;    // face orbits
    std::map<FaceSide, int> face_of_;
    bool indexed_ = false;
};

// Signed braid word on `strands` strands; letter i (1 <= |i| < strands)
// crosses strand positions |i| and |i|+1, positive letters give positive
// crossings in the diagram of the closure.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    void validate() const;
    int exponent_sum() const;
};

LinkDiagram braid_closure(const BraidWord& b);

// --- text formats (pdcode.cpp) -------------------------------------------

// Serializes with edges renumbered sequentially along each component:
// "X[a,b,c,d] X[...] O[e]" (+ "D[e,c]" direction hints only when needed).
std::string pd_serialize(const LinkDiagram& d);
LinkDiagram pd_parse(const std::string& text);

std::string diagram_json(const LinkDiagram& d);
LinkDiagram diagram_from_json(const std::string& text);

BraidWord braid_parse(const std::string& text);  // "n=3:1 -2 1 -2"

// --- named link table (table.cpp) -----------------------------------------

struct NamedLink {
    std::string name;
    std::string spec;     // braid:... or pd:... source text
    std::string comment;  // provenance note
};

const std::vector<NamedLink>& link_table();
// Resolves a name against the built-in table (or the file named by the
// TKMOVES_LINK_TABLE environment variable, which overrides it).
LinkDiagram named_link(const std::string& name);

}  // namespace tkm
