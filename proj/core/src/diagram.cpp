#include "tkmoves/diagram.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace tkm {

void LinkDiagram::build_index() {
    edges_.clear();
    cycles_.clear();
    comp_of_.clear();
    faces_.clear();
    face_of_.clear();

    // Collect the two occurrences of every edge with their in/out roles.
    std::map<int, std::vector<std::pair<EdgeEnd, bool>>> occ;  // edge -> [(end, incoming)]
    for (size_t ci = 0; ci < crossings.size(); ++ci) {
        const Crossing& c = crossings[ci];
        for (int s = 0; s < 4; ++s) {
            occ[c.e[s]].push_back({EdgeEnd{static_cast<int>(ci), s}, c.slot_is_incoming(s)});
        }
    }
    for (int l : loops) {
        if (occ.count(l))
            throw std::invalid_argument("loop edge id also used by a crossing");
        EdgeInfo info;
        info.loop = true;
        if (!edges_.emplace(l, info).second)
            throw std::invalid_argument("duplicate loop edge id");
    }
    for (auto& [e, ends] : occ) {
        if (ends.size() != 2)
            throw std::invalid_argument("edge " + std::to_string(e) + " occurs " +
                                        std::to_string(ends.size()) + " times, expected 2");
        EdgeInfo info;
        if (ends[0].second == ends[1].second)
            throw std::invalid_argument("edge " + std::to_string(e) +
                                        " has inconsistent orientation roles");
        for (auto& [end, incoming] : ends) {
            if (incoming)
                info.head = end;
            else
                info.tail = end;
        }
        edges_[e] = info;
    }

    // Component cycles along the orientation.
    std::set<int> seen;
    for (const auto& [e, info] : edges_) {
        if (seen.count(e)) continue;
        std::vector<int> cycle;
        int cur = e;
        do {
            cycle.push_back(cur);
            seen.insert(cur);
            cur = next_edge_internal(cur);
        } while (cur != e);
        for (int x : cycle) comp_of_[x] = static_cast<int>(cycles_.size());
        cycles_.push_back(std::move(cycle));
    }

    // Face orbits: arriving via slot s, leave through slot (s+1) % 4.
    std::set<FaceSide> visited;
    for (const auto& [e, info] : edges_) {
        if (info.loop) continue;
        for (bool fwd : {true, false}) {
            FaceSide start{e, fwd};
            if (visited.count(start)) continue;
            std::vector<FaceSide> face;
            FaceSide cur = start;
            do {
                face.push_back(cur);
                visited.insert(cur);
                const EdgeInfo& ci = edges_.at(cur.edge);
                EdgeEnd arrive = cur.forward ? ci.head : ci.tail;
                int s2 = (arrive.slot + 1) % 4;
                int f = crossings[arrive.crossing].e[s2];
                const EdgeInfo& fi = edges_.at(f);
                bool leave_forward =
                    fi.tail.crossing == arrive.crossing && fi.tail.slot == s2;
                cur = FaceSide{f, leave_forward};
            } while (!(cur == start));
            for (const auto& side : face) face_of_[side] = static_cast<int>(faces_.size());
            faces_.push_back(std::move(face));
        }
    }
    indexed_ = true;
}

int LinkDiagram::next_edge_internal(int e) const {
    const EdgeInfo& info = edges_.at(e);
    if (info.loop) return e;
    const Crossing& c = crossings[info.head.crossing];
    int out_slot = (info.head.slot + 2) % 4;
    return c.e[out_slot];
}

void LinkDiagram::validate() {
    build_index();
    // Euler characteristic 2 per connected (crossing-bearing) component.
    std::vector<int> comp(crossings.size(), -1);
    int ncomp = 0;
    for (size_t i = 0; i < crossings.size(); ++i) {
        if (comp[i] != -1) continue;
        std::queue<int> q;
        q.push(static_cast<int>(i));
        comp[i] = ncomp;
        while (!q.empty()) {
            int c = q.front();
            q.pop();
            for (int s = 0; s < 4; ++s) {
                const EdgeInfo& info = edges_.at(crossings[c].e[s]);
                for (const EdgeEnd& end : {info.head, info.tail}) {
                    if (comp[end.crossing] == -1) {
                        comp[end.crossing] = ncomp;
                        q.push(end.crossing);
                    }
                }
            }
        }
        ++ncomp;
    }
    std::vector<int> verts(ncomp, 0), face_count(ncomp, 0);
    for (size_t i = 0; i < crossings.size(); ++i) verts[comp[i]]++;
    for (const auto& face : faces_) {
        const EdgeInfo& info = edges_.at(face.front().edge);
        face_count[comp[info.head.crossing]]++;
    }
    for (int i = 0; i < ncomp; ++i) {
        // V - E + F with E = 2V for a 4-valent graph.
        if (face_count[i] - verts[i] != 2)
            throw std::invalid_argument("diagram component is not planar: V=" +
                                        std::to_string(verts[i]) +
                                        " F=" + std::to_string(face_count[i]));
    }
}

const EdgeInfo& LinkDiagram::edge(int e) const {
    auto it = edges_.find(e);
    if (it == edges_.end())
        throw std::invalid_argument("unknown edge id " + std::to_string(e));
    return it->second;
}

std::vector<int> LinkDiagram::edge_ids() const {
    std::vector<int> ids;
    ids.reserve(edges_.size());
    for (const auto& [e, info] : edges_) ids.push_back(e);
    return ids;
}

int LinkDiagram::fresh_edge_id() const {
    int m = 0;
    for (const auto& [e, info] : edges_) m = std::max(m, e + 1);
    return m;
}

int LinkDiagram::next_edge(int e) const {
    edge(e);
    return next_edge_internal(e);
}

int LinkDiagram::num_components() const { return static_cast<int>(cycles_.size()); }

int LinkDiagram::component_of(int e) const {
    auto it = comp_of_.find(e);
    if (it == comp_of_.end())
        throw std::invalid_argument("unknown edge id " + std::to_string(e));
    return it->second;
}

const std::vector<std::vector<int>>& LinkDiagram::component_cycles() const { return cycles_; }

int LinkDiagram::writhe() const {
    int w = 0;
    for (const auto& c : crossings) w += c.sign();
    return w;
}

int LinkDiagram::linking_number(int i, int j) const {
    if (i == j) throw std::invalid_argument("linking_number needs two distinct components");
    if (i < 0 || j < 0 || i >= num_components() || j >= num_components())
        throw std::invalid_argument("component index out of range");
    int sum = 0;
    for (const auto& c : crossings) {
        int under_comp = comp_of_.at(c.e[0]);
        int over_comp = comp_of_.at(c.e[c.over_in_slot()]);
        if ((under_comp == i && over_comp == j) || (under_comp == j && over_comp == i))
            sum += c.sign();
    }
    if (sum % 2 != 0) throw std::logic_error("odd inter-component crossing sum");
    return sum / 2;
}

int LinkDiagram::total_linking(int i) const {
    int sum = 0;
    for (int j = 0; j < num_components(); ++j)
        if (j != i) sum += linking_number(i, j);
    return sum;
}

LinkDiagram LinkDiagram::reversed_components(const std::set<int>& comps) const {
    LinkDiagram d;
    d.loops = loops;
    for (const auto& c : crossings) {
        bool under_rev = comps.count(comp_of_.at(c.e[0])) != 0;
        bool over_rev = comps.count(comp_of_.at(c.e[c.over_in_slot()])) != 0;
        Crossing nc = c;
        if (under_rev) nc.e = {c.e[2], c.e[3], c.e[0], c.e[1]};
        nc.over_in_3 = c.over_in_3 ^ under_rev ^ over_rev;
        d.crossings.push_back(nc);
    }
    d.validate();
    return d;
}

LinkDiagram LinkDiagram::reversed_component(int comp) const {
    if (comp < 0 || comp >= num_components())
        throw std::invalid_argument("component index out of range");
    return reversed_components({comp});
}

LinkDiagram LinkDiagram::mirrored() const {
    // Switch every crossing (swap over/under strands): e[0] <-> over-in slot.
    LinkDiagram d;
    d.loops = loops;
    for (const auto& c : crossings) {
        Crossing nc;
        if (c.over_in_3) {
            // over in at 3, out at 1; new under-in = old over-in (slot 3).
            nc.e = {c.e[3], c.e[0], c.e[1], c.e[2]};
            nc.over_in_3 = false;
        } else {
            nc.e = {c.e[1], c.e[2], c.e[3], c.e[0]};
            nc.over_in_3 = true;
        }
        d.crossings.push_back(nc);
    }
    d.validate();
    return d;
}

const std::vector<std::vector<FaceSide>>& LinkDiagram::faces() const { return faces_; }

int LinkDiagram::face_of(const FaceSide& side) const {
    auto it = face_of_.find(side);
    if (it == face_of_.end()) throw std::invalid_argument("unknown face side");
    return it->second;
}

bool LinkDiagram::is_connected() const {
    return split_components().size() <= 1;
}

std::vector<LinkDiagram> LinkDiagram::split_components() const {
    // Union the link components that share a crossing.
    int n = num_components();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& c : crossings) {
        int a = find(comp_of_.at(c.e[0]));
        int b = find(comp_of_.at(c.e[c.over_in_slot()]));
        parent[a] = b;
    }
    std::map<int, LinkDiagram> pieces;
    for (const auto& c : crossings) pieces[find(comp_of_.at(c.e[0]))].crossings.push_back(c);
    for (int l : loops) pieces[find(comp_of_.at(l))].loops.push_back(l);
    std::vector<LinkDiagram> out;
    for (auto& [root, d] : pieces) {
        d.validate();
        out.push_back(std::move(d));
    }
    return out;
}

namespace {

// Relabels edges by traversal from `start`, then encodes crossings sorted.
std::string encode_from(const LinkDiagram& d, int start) {
    std::map<int, int> relabel;
    int next_id = 0;
    auto label_cycle = [&](int e0) {
        int cur = e0;
        do {
            relabel[cur] = next_id++;
            cur = d.next_edge(cur);
        } while (cur != e0);
    };
    label_cycle(start);
    // Pull in remaining components through the crossing of the smallest
    // labeled edge that touches an unlabeled one.
    while (true) {
        int best_lab = -1, best_slot = -1, best_edge = -1;
        for (const auto& [e, lab] : relabel) {
            const EdgeInfo& info = d.edge(e);
            if (info.loop) continue;
            for (const EdgeEnd& end : {info.head, info.tail}) {
                const Crossing& c = d.crossings[end.crossing];
                for (int s = 0; s < 4; ++s) {
                    if (relabel.count(c.e[s])) continue;
                    if (best_lab == -1 || lab < best_lab ||
                        (lab == best_lab && s < best_slot)) {
                        best_lab = lab;
                        best_slot = s;
                        best_edge = c.e[s];
                    }
                }
            }
        }
        if (best_lab == -1) break;
        label_cycle(best_edge);
    }
    if (relabel.size() + d.loops.size() != d.edge_ids().size()) {
        // Disconnected crossing graph: caller handles splits; mark distinct.
        return std::string();
    }
    std::vector<std::array<int, 5>> enc;
    for (const auto& c : d.crossings) {
        enc.push_back({relabel.at(c.e[0]), relabel.at(c.e[1]), relabel.at(c.e[2]),
                       relabel.at(c.e[3]), c.over_in_3 ? 1 : 0});
    }
    std::sort(enc.begin(), enc.end());
    std::ostringstream out;
    for (const auto& t : enc) {
        out << "X" << t[0] << "," << t[1] << "," << t[2] << "," << t[3] << ";" << t[4];
    }
    return out.str();
}

}  // namespace

std::string LinkDiagram::canonical_key() const {
    auto pieces = split_components();
    if (pieces.size() > 1) {
        std::vector<std::string> keys;
        for (const auto& p : pieces) keys.push_back(p.canonical_key());
        std::sort(keys.begin(), keys.end());
        std::ostringstream out;
        for (const auto& k : keys) out << k << "|";
        return out.str();
    }
    if (crossings.empty()) return "O" + std::to_string(loops.size());
    std::string best;
    for (const auto& [e, info] : edges_) {
        if (info.loop) continue;
        std::string k = encode_from(*this, e);
        if (best.empty() || (!k.empty() && k < best)) best = k;
    }
    if (!loops.empty()) best += "O" + std::to_string(loops.size());
    return best;
}

bool LinkDiagram::operator==(const LinkDiagram& o) const {
    return canonical_key() == o.canonical_key();
}

void BraidWord::validate() const {
    if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
    for (int l : letters) {
        if (l == 0 || std::abs(l) >= strands)
            throw std::invalid_argument("generator " + std::to_string(l) +
                                        " out of range for n=" + std::to_string(strands));
    }
}

int BraidWord::exponent_sum() const {
    int s = 0;
    for (int l : letters) s += l > 0 ? 1 : -1;
    return s;
}

LinkDiagram braid_closure(const BraidWord& b) {
    b.validate();
    LinkDiagram d;
    int next_id = 0;
    std::vector<int> top(b.strands), cur(b.strands);
    for (int i = 0; i < b.strands; ++i) top[i] = cur[i] = next_id++;

    for (int l : b.letters) {
        int g = std::abs(l) - 1;  // left position
        int A = cur[g], B = cur[g + 1];
        int Ap = next_id++, Bp = next_id++;
        Crossing c;
        if (l > 0) {
            // under = left strand (enters top-left), over = right strand.
            c.e = {A, Ap, Bp, B};
            c.over_in_3 = true;
        } else {
            // under = right strand (enters top-right), over = left strand.
            c.e = {B, A, Ap, Bp};
            c.over_in_3 = false;
        }
        d.crossings.push_back(c);
        cur[g] = Ap;
        cur[g + 1] = Bp;
    }

    // Close up: identify each bottom edge with the matching top edge.
    for (int i = 0; i < b.strands; ++i) {
        if (cur[i] == top[i]) {
            d.loops.push_back(top[i]);  // untouched strand
            continue;
        }
        for (auto& c : d.crossings) {
            for (int s = 0; s < 4; ++s) {
                if (c.e[s] == cur[i]) c.e[s] = top[i];
            }
        }
    }
    d.validate();
    return d;
}

}  // namespace tkm
