#include "tkmoves/diagram.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tkm {

namespace {

// Renumber edges 1..E sequentially along each component (loops afterwards).
std::map<int, int> sequential_relabel(const LinkDiagram& d) {
    std::map<int, int> relabel;
    int next = 1;
    for (const auto& cycle : d.component_cycles()) {
        if (cycle.size() == 1 && d.edge(cycle[0]).loop) continue;
        for (int e : cycle) relabel[e] = next++;
    }
    for (int l : d.loops) relabel[l] = next++;
    return relabel;
}

}  // namespace

std::string pd_serialize(const LinkDiagram& d) {
    auto relabel = sequential_relabel(d);
    std::ostringstream out;
    bool first = true;
    std::vector<std::array<int, 4>> xs;
    for (const auto& c : d.crossings)
        xs.push_back({relabel.at(c.e[0]), relabel.at(c.e[1]), relabel.at(c.e[2]),
                      relabel.at(c.e[3])});
    std::sort(xs.begin(), xs.end());
    for (const auto& x : xs) {
        if (!first) out << " ";
        first = false;
        out << "X[" << x[0] << "," << x[1] << "," << x[2] << "," << x[3] << "]";
    }
    for (int l : d.loops) {
        if (!first) out << " ";
        first = false;
        out << "O[" << relabel.at(l) << "]";
    }
    // Direction hints for over-edges whose orientation the sequential
    // numbering cannot pin down (two-edge components crossing only as
    // over-strands at both ends).
    for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
        const Crossing& c = d.crossings[ci];
        int in_e = c.e[c.over_in_slot()];
        int out_e = c.e[c.over_out_slot()];
        if (d.next_edge(in_e) == out_e && d.next_edge(out_e) == in_e) {
            // ambiguous two-edge cycle; pin the incoming edge's head.
            out << " D[" << relabel.at(in_e) << ","
                << relabel.at(c.e[0]) << "," << relabel.at(c.e[1]) << ","
                << relabel.at(c.e[2]) << "," << relabel.at(c.e[3]) << "]";
        }
    }
    return out.str();
}

namespace {

struct RawX {
    std::array<int, 4> e;
};

}  // namespace

LinkDiagram pd_parse(const std::string& text) {
    std::vector<RawX> raw;
    std::vector<int> loops;
    // D[e, a,b,c,d]: edge e's head is the crossing listed as X[a,b,c,d].
    std::vector<std::array<int, 5>> hints;

    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) ||
                                   text[i] == ','))
            ++i;
    };
    auto parse_ints = [&](char open, char close, int n, const char* what) {
        std::vector<int> vals;
        if (i >= text.size() || text[i] != open)
            throw std::invalid_argument(std::string("expected '") + open + "' after " + what +
                                        " at position " + std::to_string(i));
        ++i;
        for (int k = 0; k < n; ++k) {
            skip_ws();
            size_t start = i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i)
                throw std::invalid_argument(std::string("expected integer in ") + what +
                                            " at position " + std::to_string(start));
            vals.push_back(std::stoi(text.substr(start, i - start)));
        }
        skip_ws();
        if (i >= text.size() || text[i] != close)
            throw std::invalid_argument(std::string("expected '") + close + "' closing " + what +
                                        " at position " + std::to_string(i));
        ++i;
        return vals;
    };

    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        char tag = text[i];
        ++i;
        if (tag == 'X') {
            auto v = parse_ints('[', ']', 4, "X");
            raw.push_back(RawX{{v[0], v[1], v[2], v[3]}});
        } else if (tag == 'O') {
            auto v = parse_ints('[', ']', 1, "O");
            loops.push_back(v[0]);
        } else if (tag == 'D') {
            auto v = parse_ints('[', ']', 5, "D");
            hints.push_back({v[0], v[1], v[2], v[3], v[4]});
        } else {
            throw std::invalid_argument(std::string("unexpected token '") + tag +
                                        "' at position " + std::to_string(i - 1));
        }
    }

    // Determine the orientation of over-strands.  Under-strand edges are
    // directed by the code itself (slot 0 in, slot 2 out).  An over-edge pair
    // (x at slot 1, y at slot 3) is resolved by sequential numbering: the
    // outgoing edge is the successor of the incoming one along the strand.
    std::map<int, int> occurrences;
    for (const auto& x : raw)
        for (int e : x.e) occurrences[e]++;
    for (int l : loops) occurrences[l]++;
    for (const auto& [e, n] : occurrences) {
        int expected = 0;
        for (const auto& x : raw)
            for (int s = 0; s < 4; ++s) expected += (x.e[s] == e);
        bool is_loop = std::find(loops.begin(), loops.end(), e) != loops.end();
        if ((is_loop && expected != 0) || (!is_loop && expected != 2))
            throw std::invalid_argument("edge " + std::to_string(e) +
                                        " does not occur exactly twice");
    }

    // Successor candidates from sequential numbering: e -> e+1 within a
    // cyclic block.  Blocks are recovered lazily: we only need to decide, for
    // each crossing, whether slot1 or slot3 is incoming; try both choices per
    // crossing and keep the globally consistent one.
    LinkDiagram d;
    d.loops = loops;
    for (const auto& x : raw) {
        Crossing c;
        c.e = x.e;
        c.over_in_3 = true;
        d.crossings.push_back(c);
    }

    // Edge roles implied so far: in-roles at slot0 heads, out at slot2.
    // For each crossing choose over_in_3 so that every edge gets exactly one
    // in and one out role; where both assignments are locally possible use
    // the numbering rule (over-out should be over-in's successor, which for
    // sequential codes means out = in + 1 up to block wrap), or a D[] hint.
    std::map<int, int> in_deg, out_deg;  // from under-strand roles
    for (const auto& c : d.crossings) {
        in_deg[c.e[0]]++;
        out_deg[c.e[2]]++;
    }
    for (auto& c : d.crossings) {
        int x1 = c.e[1], x3 = c.e[3];
        bool can3 = in_deg[x3] == 0 && out_deg[x1] == 0;   // over in at 3, out at 1
        bool can1 = in_deg[x1] == 0 && out_deg[x3] == 0;   // over in at 1, out at 3
        bool chosen3;
        if (can3 && !can1) {
            chosen3 = true;
        } else if (can1 && !can3) {
            chosen3 = false;
        } else if (can1 && can3) {
            // Both locally fine: prefer numbering succession in+1 == out.
            bool hint_found = false;
            chosen3 = true;
            for (const auto& h : hints) {
                if (h[1] == c.e[0] && h[2] == c.e[1] && h[3] == c.e[2] && h[4] == c.e[3]) {
                    chosen3 = (h[0] == x3);
                    hint_found = true;
                }
            }
            if (!hint_found) {
                if (x1 == x3 + 1)
                    chosen3 = true;
                else if (x3 == x1 + 1)
                    chosen3 = false;
                else
                    chosen3 = x3 < x1;  // wrap of a block: smaller id is the start
            }
        } else {
            throw std::invalid_argument("inconsistent over-strand orientation at crossing X[" +
                                        std::to_string(c.e[0]) + "," + std::to_string(c.e[1]) +
                                        "," + std::to_string(c.e[2]) + "," +
                                        std::to_string(c.e[3]) + "]");
        }
        c.over_in_3 = chosen3;
        in_deg[chosen3 ? x3 : x1]++;
        out_deg[chosen3 ? x1 : x3]++;
    }
    d.validate();
    return d;
}

std::string diagram_json(const LinkDiagram& d) {
    nlohmann::json j;
    j["crossings"] = nlohmann::json::array();
    for (const auto& c : d.crossings) {
        j["crossings"].push_back(
            {{"e", {c.e[0], c.e[1], c.e[2], c.e[3]}}, {"over_in", c.over_in_slot()}});
    }
    j["loops"] = d.loops;
    return j.dump();
}

LinkDiagram diagram_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    LinkDiagram d;
    for (const auto& jc : j.at("crossings")) {
        Crossing c;
        auto e = jc.at("e");
        for (int s = 0; s < 4; ++s) c.e[s] = e.at(s).get<int>();
        int over_in = jc.at("over_in").get<int>();
        if (over_in != 1 && over_in != 3)
            throw std::invalid_argument("over_in must be 1 or 3");
        c.over_in_3 = over_in == 3;
        d.crossings.push_back(c);
    }
    if (j.contains("loops"))
        for (const auto& l : j.at("loops")) d.loops.push_back(l.get<int>());
    d.validate();
    return d;
}

BraidWord braid_parse(const std::string& text) {
    // "n=3:1 -2 1 -2" or just "1 -2 1 -2" meaning n = max|l|+1.
    BraidWord b;
    std::string body = text;
    b.strands = 0;
    auto npos = text.find("n=");
    if (npos != std::string::npos) {
        size_t colon = text.find(':', npos);
        if (colon == std::string::npos)
            throw std::invalid_argument("braid: expected ':' after n=<strands>");
        b.strands = std::stoi(text.substr(npos + 2, colon - npos - 2));
        body = text.substr(colon + 1);
    }
    std::istringstream in(body);
    int l;
    while (in >> l) b.letters.push_back(l);
    if (!in.eof()) throw std::invalid_argument("braid: malformed letter list");
    if (b.strands == 0) {
        int m = 1;
        for (int x : b.letters) m = std::max(m, std::abs(x) + 1);
        b.strands = m;
    }
    b.validate();
    return b;
}

}  // namespace tkm
