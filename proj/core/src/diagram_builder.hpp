#pragma once

// Internal surgery helper shared by moves.cpp and vogel.cpp: a mutable
// diagram whose edge ends can be cut, glued and attached to new crossings,
// then rebuilt (with consistent orientations) into a valid LinkDiagram.

#include "tkmoves/diagram.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tkm {
namespace detail {

struct BEnd {
    int edge;
    bool head;
    bool operator<(const BEnd& o) const {
        return edge != o.edge ? edge < o.edge : head < o.head;
    }
    bool operator==(const BEnd&) const = default;
};

// Mutable diagram under surgery: edge pieces whose ends are either attached
// to a crossing slot, glued to another end, or (transiently) free.
class Builder {
  public:
    explicit Builder(const LinkDiagram& d) : xs_(d.crossings) {
        removed_.assign(xs_.size(), false);
        for (int e : d.edge_ids()) {
            const EdgeInfo& info = d.edge(e);
            Piece p;
            if (info.loop) {
                p.closed_loop = true;
            } else {
                p.tail = info.tail;
                p.head = info.head;
            }
            pieces_[e] = p;
            original_.insert(e);
            next_id_ = std::max(next_id_, e + 1);
        }
    }

    int fresh_edge() {
        int id = next_id_++;
        pieces_[id] = Piece{};
        return id;
    }

    // Splits edge e; returns (upstream free end, downstream free end).
    std::pair<BEnd, BEnd> cut(int e) {
        Piece& p = piece(e);
        if (p.closed_loop) {
            p.closed_loop = false;
            return {BEnd{e, true}, BEnd{e, false}};
        }
        if (!p.head) throw std::logic_error("cut: edge already opened at its head");
        int e2 = fresh_edge();
        Piece& p2 = pieces_[e2];
        p2.head = p.head;
        p.head.reset();
        xs_[p2.head->crossing].e[p2.head->slot] = e2;
        return {BEnd{e, true}, BEnd{e2, false}};
    }

    void join(BEnd a, BEnd b) {
        if (joins_.count(a) || joins_.count(b)) throw std::logic_error("join: end already glued");
        joins_[a] = b;
        joins_[b] = a;
    }

    void remove_crossing(int ci) {
        if (removed_[ci]) throw std::logic_error("crossing already removed");
        removed_[ci] = true;
        for (int s = 0; s < 4; ++s) {
            int e = xs_[ci].e[s];
            Piece& p = piece(e);
            if (p.head && p.head->crossing == ci && p.head->slot == s)
                p.head.reset();
            else if (p.tail && p.tail->crossing == ci && p.tail->slot == s)
                p.tail.reset();
            else
                throw std::logic_error("remove_crossing: stale attachment");
        }
    }

    // New crossing attaching four ends in CCW slot order; each entry is the
    // end of an edge piece that must currently be free.
    void add_crossing(const std::array<BEnd, 4>& ends, bool over_in_3) {
        Crossing c;
        c.over_in_3 = over_in_3;
        int ci = static_cast<int>(xs_.size());
        for (int s = 0; s < 4; ++s) {
            c.e[s] = ends[s].edge;
            Piece& p = piece(ends[s].edge);
            auto& slot = ends[s].head ? p.head : p.tail;
            if (slot) throw std::logic_error("add_crossing: end not free");
            slot = EdgeEnd{ci, s};
        }
        xs_.push_back(c);
        removed_.push_back(false);
    }

    // Rebuilds a valid diagram.  `prefer` lists edge ids whose orientation
    // should win when gluings force reversals; remaining circles start from
    // the smallest original edge, then the smallest new edge.
    LinkDiagram finish(const std::vector<int>& prefer = {}) const {
        for (const auto& [e, p] : pieces_) {
            if (p.closed_loop) continue;
            for (bool h : {true, false}) {
                const auto& at = h ? p.head : p.tail;
                if (!at && !joins_.count(BEnd{e, h}))
                    throw std::logic_error("finish: loose end on edge " + std::to_string(e));
            }
        }

        std::map<int, bool> flip;  // per piece: traversed against its direction?
        std::vector<int> order;
        for (int e : prefer) order.push_back(e);
        for (int e : original_) order.push_back(e);
        for (const auto& [e, p] : pieces_) {
            (void)p;
            order.push_back(e);
        }

        for (int start : order) {
            if (flip.count(start) || piece(start).closed_loop) continue;
            int e = start;
            bool fwd = true;
            do {
                flip[e] = !fwd;
                BEnd exit{e, fwd};  // leave via the head when moving forward
                const Piece& p = piece(e);
                const auto& at = exit.head ? p.head : p.tail;
                BEnd enter{-1, false};
                if (at) {
                    const Crossing& c = xs_[at->crossing];
                    int s2 = (at->slot + 2) % 4;
                    int f = c.e[s2];
                    const Piece& pf = piece(f);
                    bool enters_at_head =
                        pf.head && pf.head->crossing == at->crossing && pf.head->slot == s2;
                    enter = BEnd{f, enters_at_head};
                } else {
                    enter = joins_.at(exit);
                }
                e = enter.edge;
                fwd = !enter.head;  // entering at the tail means forward
            } while (!(e == start && fwd));
        }

        // Pieces glued through joins merge into one final edge.
        std::map<int, int> rep;
        std::function<int(int)> find = [&](int x) {
            if (!rep.count(x)) rep[x] = x;
            while (rep[x] != x) x = rep[x] = rep[rep[x]];
            return x;
        };
        for (const auto& [a, b] : joins_) {
            int ra = find(a.edge), rb = find(b.edge);
            if (ra != rb) rep[std::max(ra, rb)] = std::min(ra, rb);
        }

        LinkDiagram out;
        std::set<int> has_attachment;
        for (size_t ci = 0; ci < xs_.size(); ++ci) {
            if (removed_[ci]) continue;
            const Crossing& c = xs_[ci];
            bool under_rev = flip.at(c.e[0]);
            bool over_rev = flip.at(c.e[c.over_in_slot()]);
            if (flip.at(c.e[0]) != flip.at(c.e[2]))
                throw std::logic_error("finish: inconsistent under-strand flip");
            Crossing nc;
            std::array<int, 4> src = c.e;
            if (under_rev) src = {c.e[2], c.e[3], c.e[0], c.e[1]};
            for (int s = 0; s < 4; ++s) nc.e[s] = find(src[s]);
            nc.over_in_3 = c.over_in_3 ^ under_rev ^ over_rev;
            out.crossings.push_back(nc);
            for (int s = 0; s < 4; ++s) has_attachment.insert(nc.e[s]);
        }
        // Untouched loops survive; fully glued runs close into new loops.
        std::set<int> loop_reps;
        for (const auto& [e, p] : pieces_) {
            if (p.closed_loop) {
                out.loops.push_back(e);
                continue;
            }
            int r = find(e);
            if (!has_attachment.count(r)) loop_reps.insert(r);
        }
        for (int r : loop_reps) out.loops.push_back(r);
        out.validate();
        return out;
    }

  private:
    struct Piece {
        std::optional<EdgeEnd> tail, head;
        bool closed_loop = false;
    };

    Piece& piece(int e) {
        auto it = pieces_.find(e);
        if (it == pieces_.end())
            throw std::invalid_argument("unknown edge id " + std::to_string(e));
        return it->second;
    }
    const Piece& piece(int e) const { return const_cast<Builder*>(this)->piece(e); }

    std::vector<Crossing> xs_;
    std::vector<bool> removed_;
    std::map<int, Piece> pieces_;
    std::map<BEnd, BEnd> joins_;
    std::set<int> original_;
    int next_id_ = 0;
};


}  // namespace detail
}  // namespace tkm
