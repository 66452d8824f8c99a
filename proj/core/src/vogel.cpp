#include "tkmoves/matrices.hpp"

#include "diagram_builder.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace tkm {

namespace {

using detail::BEnd;
using detail::Builder;

// Seifert circle of every edge: orbits of the oriented smoothing.
std::map<int, int> seifert_circles(const LinkDiagram& d, int* count) {
    auto next = [&](int e) {
        const EdgeInfo& info = d.edge(e);
        if (info.loop) return e;
        const Crossing& c = d.crossings[info.head.crossing];
        int s = info.head.slot;
        int out;
        if (c.over_in_3)
            out = (s == 0) ? 1 : 2;  // in at 0 -> out 1, in at 3 -> out 2
        else
            out = (s == 0) ? 3 : 2;  // in at 0 -> out 3, in at 1 -> out 2
        return c.e[out];
    };
    std::map<int, int> circ;
    int n = 0;
    for (int e : d.edge_ids()) {
        if (circ.count(e)) continue;
        int cur = e;
        do {
            circ[cur] = n;
            cur = next(cur);
        } while (cur != e);
        ++n;
    }
    if (count) *count = n;
    return circ;
}

// A face side pair on distinct Seifert circles, co-oriented along the face
// boundary; pulling one across the other is the Vogel reduction move.
struct Defect {
    int e1, e2;
};

std::optional<Defect> find_defect(const LinkDiagram& d, const std::map<int, int>& circ) {
    for (const auto& face : d.faces()) {
        for (size_t i = 0; i < face.size(); ++i) {
            for (size_t j = i + 1; j < face.size(); ++j) {
                if (face[i].forward != face[j].forward) continue;
                int a = face[i].edge, b = face[j].edge;
                if (circ.at(a) == circ.at(b)) continue;
                return Defect{a, b};
            }
        }
    }
    return std::nullopt;
}

// Reidemeister-II hook pulling e1 across e2 (antiparallel strands):
// two new crossings of opposite sign with e1's strand on top.
LinkDiagram apply_r2(const LinkDiagram& d, int e1, int e2) {
    Builder b(d);
    auto [u1, d1] = b.cut(e1);
    auto [u2, d2] = b.cut(e2);
    int mid_d = b.fresh_edge();  // strand 1 between the crossings
    int mid_u = b.fresh_edge();  // strand 2 between the crossings
    int d_out = b.fresh_edge();
    int u_out = b.fresh_edge();
    // A: over = strand 1 heading down-right, under = strand 2 going up.
    b.add_crossing({BEnd{u2.edge, u2.head}, BEnd{mid_d, false}, BEnd{mid_u, false},
                    BEnd{u1.edge, u1.head}},
                   true);
    // B: same over-strand again; opposite sign.
    b.add_crossing({BEnd{mid_u, true}, BEnd{mid_d, true}, BEnd{u_out, false},
                    BEnd{d_out, false}},
                   false);
    b.join(BEnd{d_out, true}, d1);
    b.join(BEnd{u_out, true}, d2);
    return b.finish();
}

struct BraidedReading {
    int n = 0;
    std::vector<int> circle_order;                 // circle id per strand index
    std::map<int, std::vector<int>> ring;          // circle -> incident crossings in cyclic order
    std::vector<std::pair<int, int>> cross_circs;  // per crossing: its two circles
};

// Crossing lists in traversal order around every circle.
BraidedReading analyse(const LinkDiagram& d, const std::map<int, int>& circ, int ncirc) {
    BraidedReading br;
    br.n = ncirc;
    br.cross_circs.resize(d.crossings.size());
    for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
        const Crossing& c = d.crossings[ci];
        int ca = circ.at(c.e[0]);
        int cb = circ.at(c.e[c.over_in_slot()]);
        if (ca == cb) throw std::logic_error("vogel: crossing within one Seifert circle");
        br.cross_circs[ci] = {ca, cb};
    }
    // Walk each circle: record the crossing at each smoothed transition.
    std::set<int> seen;
    for (int e : d.edge_ids()) {
        if (seen.count(e)) continue;
        int c0 = circ.at(e);
        std::vector<int> ring;
        int cur = e;
        do {
            seen.insert(cur);
            const EdgeInfo& info = d.edge(cur);
            if (info.loop) break;
            ring.push_back(info.head.crossing);
            const Crossing& c = d.crossings[info.head.crossing];
            int s = info.head.slot;
            int out = c.over_in_3 ? (s == 0 ? 1 : 2) : (s == 0 ? 3 : 2);
            cur = c.e[out];
        } while (cur != e);
        br.ring[c0] = ring;
    }
    return br;
}

// Region tree of the smoothed diagram: faces merged through each crossing's
// channel; circles are the tree edges.  Returns the circles in path order.
std::vector<int> nesting_order(const LinkDiagram& d, const std::map<int, int>& circ, int ncirc) {
    int nf = static_cast<int>(d.faces().size());
    std::vector<int> parent(nf);
    for (int i = 0; i < nf; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto quad = [&](int ci, int s) {
        int e = d.crossings[ci].e[s];
        const EdgeInfo& info = d.edge(e);
        bool fwd = info.head.crossing == ci && info.head.slot == s;
        return d.face_of(FaceSide{e, fwd});
    };
    for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
        if (d.crossings[ci].over_in_3)
            parent[find(quad(ci, 1))] = find(quad(ci, 3));
        else
            parent[find(quad(ci, 0))] = find(quad(ci, 2));
    }
    // circle -> set of adjacent regions
    std::map<int, std::set<int>> adj;
    std::map<int, std::set<int>> region_circles;
    for (int e : d.edge_ids()) {
        if (d.edge(e).loop) continue;
        for (bool fwd : {true, false}) {
            int R = find(d.face_of(FaceSide{e, fwd}));
            adj[circ.at(e)].insert(R);
            region_circles[R].insert(circ.at(e));
        }
    }
    for (auto& [c, rs] : adj)
        if (rs.size() != 2)
            throw std::logic_error("vogel: circle does not separate two regions after reduction");
    // Path: start from a region adjacent to exactly one circle.
    int start = -1;
    for (auto& [R, cs] : region_circles) {
        if (cs.size() == 1) start = std::min(start == -1 ? R : start, R);
    }
    if (start == -1) throw std::logic_error("vogel: no leaf region (not braided)");
    std::vector<int> order;
    std::set<int> used;
    int region = start;
    while (static_cast<int>(order.size()) < ncirc) {
        int next_circle = -1;
        for (int c : region_circles[region]) {
            if (!used.count(c)) {
                next_circle = c;
                break;
            }
        }
        if (next_circle == -1) throw std::logic_error("vogel: region chain broke (not braided)");
        used.insert(next_circle);
        order.push_back(next_circle);
        int other = -1;
        for (int R : adj[next_circle])
            if (R != region) other = R;
        if (other == -1) throw std::logic_error("vogel: circle with one region");
        region = other;
    }
    return order;
}

std::optional<BraidWord> read_word(const LinkDiagram& d, const BraidedReading& br,
                                   const std::vector<int>& order, int rotate_first) {
    int n = br.n;
    std::map<int, int> strand_of;
    for (int i = 0; i < n; ++i) strand_of[order[i]] = i;

    // Rotated crossing list per circle; rotations chosen cut-compatibly.
    std::map<int, std::vector<int>> lists;
    {
        auto rot = [](std::vector<int> v, size_t at) {
            std::rotate(v.begin(), v.begin() + at, v.end());
            return v;
        };
        const auto& ring0 = br.ring.at(order[0]);
        if (ring0.empty()) return std::nullopt;
        lists[order[0]] = rot(ring0, rotate_first % ring0.size());
        for (int i = 1; i < n; ++i) {
            const auto& prev = lists[order[i - 1]];
            const auto& ring = br.ring.at(order[i]);
            if (ring.empty()) return std::nullopt;
            // first crossing of the previous list that touches this circle
            int anchor = -1;
            for (int x : prev) {
                auto [a, b] = br.cross_circs[x];
                if (a == order[i] || b == order[i]) {
                    anchor = x;
                    break;
                }
            }
            if (anchor == -1) return std::nullopt;
            auto it = std::find(ring.begin(), ring.end(), anchor);
            if (it == ring.end()) return std::nullopt;
            lists[order[i]] = rot(ring, it - ring.begin());
        }
    }

    // Topological sort of the union of the per-circle chains.
    std::map<int, std::vector<int>> succ;
    std::map<int, int> indeg;
    std::set<int> nodes;
    for (auto& [c, l] : lists) {
        for (int x : l) {
            nodes.insert(x);
            indeg.emplace(x, 0);
        }
        for (size_t i = 0; i + 1 < l.size(); ++i) {
            succ[l[i]].push_back(l[i + 1]);
            indeg[l[i + 1]]++;
        }
    }
    std::vector<int> word_order;
    std::set<int> avail;
    for (int x : nodes)
        if (indeg[x] == 0) avail.insert(x);
    while (!avail.empty()) {
        int x = *avail.begin();
        avail.erase(avail.begin());
        word_order.push_back(x);
        for (int y : succ[x]) {
            if (--indeg[y] == 0) avail.insert(y);
        }
    }
    if (word_order.size() != nodes.size()) return std::nullopt;  // cyclic: bad cut

    BraidWord w;
    w.strands = n;
    for (int x : word_order) {
        auto [a, b] = br.cross_circs[x];
        int i = strand_of.at(a), j = strand_of.at(b);
        if (std::abs(i - j) != 1) return std::nullopt;
        int g = std::min(i, j) + 1;
        w.letters.push_back(d.crossings[x].sign() > 0 ? g : -g);
    }
    return w;
}

}  // namespace

BraidWord vogel_braid(const LinkDiagram& d) {
    if (!d.is_connected())
        throw std::invalid_argument("vogel_braid expects a connected diagram");
    if (d.crossings.empty()) {
        BraidWord w;
        w.strands = 1;
        return w;
    }
    LinkDiagram cur = d;
    int cap = 60 + 10 * static_cast<int>(d.crossings.size());
    for (int iter = 0;; ++iter) {
        if (iter > cap) throw std::runtime_error("vogel reduction did not stabilize");
        int ncirc = 0;
        auto circ = seifert_circles(cur, &ncirc);
        auto defect = find_defect(cur, circ);
        if (!defect) break;
        cur = apply_r2(cur, defect->e1, defect->e2);
    }
    int ncirc = 0;
    auto circ = seifert_circles(cur, &ncirc);
    auto order = nesting_order(cur, circ, ncirc);
    BraidedReading br = analyse(cur, circ, ncirc);
    size_t max_rot = br.ring.at(order[0]).size();
    for (size_t rot = 0; rot < max_rot; ++rot) {
        auto w = read_word(cur, br, order, static_cast<int>(rot));
        if (w) return *w;
    }
    throw std::runtime_error("vogel: could not linearize the braided diagram");
}

}  // namespace tkm
