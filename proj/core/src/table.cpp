#include "tkmoves/diagram.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tkm {

namespace {

// Built-in table.  Every entry was checked against an independent anchor
// (printed polynomial values, determinants, Alexander polynomials); the
// comments record which.
const std::vector<NamedLink> kTable = {
    {"T1", "braid:n=1:", "crossing-free circle"},
    {"T2", "braid:n=2:", "two-component unlink"},
    {"T3", "braid:n=3:", "three-component unlink"},
    {"T4", "braid:n=4:", "four-component unlink"},
    {"T5", "braid:n=5:", "five-component unlink"},
    {"hopf", "braid:n=2:1 1", "positive Hopf link, lk = +1"},
    {"2_1^2", "braid:n=2:1 1", "positive Hopf link (Rolfsen name)"},
    {"3_1", "braid:n=2:1 1 1", "right-handed trefoil; P = -a^-4-2a^-2+a^-2 z^2, det 3"},
    {"3_1m", "braid:n=2:-1 -1 -1", "left-handed trefoil"},
    {"4_1", "braid:n=3:1 -2 1 -2", "figure eight; P = -a^-2-1-a^2+z^2, det 5"},
    {"5_2", "braid:n=3:-1 -1 -1 -2 1 -2",
     "5_2 twist knot; P = a^6+a^4-a^2+z^2(a^2-a^4), det 7, Alexander 2t-3+2/t"},
    {"6_3", "braid:n=3:1 1 -2 1 -2 -2", "6_3, amphichiral, det 13, P(a,1) = 1"},
    {"borromean", "braid:n=3:1 -2 1 -2 1 -2", "Borromean rings, 3 components, det 32"},
    {"6_2^3", "braid:n=3:1 -2 1 -2 1 -2", "Borromean rings (Rolfsen name)"},
    {"6_3^2", "braid:n=3:2 2 -1 2 1 1 1",
     "two-bridge link b(12,5) = C(2,2,2); det 12, three-colourable"},
    {"8_5", "braid:n=3:1 1 1 -2 1 1 1 -2", "8_5; P(1,(1+sqrt5)/2) = -4+sqrt5"},
    {"8_18", "braid:n=3:1 -2 1 -2 1 -2 1 -2", "8_18, amphichiral, det 45"},
    {"9_42", "braid:n=4:-3 -3 2 2 2 -3 1 -2 1 -2 3",
     "9_42; det 7, Alexander t^2-2t+1-2/t+1/t^2, sig -2; reached from 4_1 by "
     "t_3^-1 then t_3"},
};

LinkDiagram from_spec_text(const std::string& spec) {
    if (spec.rfind("braid:", 0) == 0) return braid_closure(braid_parse(spec.substr(6)));
    if (spec.rfind("pd:", 0) == 0) return pd_parse(spec.substr(3));
    throw std::invalid_argument("link spec must start with braid: or pd:");
}

std::vector<NamedLink> load_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open link table file " + path);
    std::vector<NamedLink> table;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        std::string comment = hash == std::string::npos ? "" : line.substr(hash + 1);
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t");
            size_t e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string name = trim(line.substr(0, eq));
        std::string spec = trim(line.substr(eq + 1));
        if (!name.empty() && !spec.empty()) table.push_back({name, spec, trim(comment)});
    }
    return table;
}

}  // namespace

const std::vector<NamedLink>& link_table() {
    static const std::vector<NamedLink>* table = [] {
        const char* env = std::getenv("TKMOVES_LINK_TABLE");
        if (env && *env) return new std::vector<NamedLink>(load_table_file(env));
        return new std::vector<NamedLink>(kTable);
    }();
    return *table;
}

LinkDiagram named_link(const std::string& name) {
    for (const auto& entry : link_table()) {
        if (entry.name == name) return from_spec_text(entry.spec);
    }
    throw std::invalid_argument("unknown link name '" + name + "'");
}

}  // namespace tkm
