#include "tkmoves/skein.hpp"

#include "tkmoves/moves.hpp"

#include <map>
#include <optional>
#include <stdexcept>

namespace tkm {

namespace {

LaurentPoly az_mono(int ae, int ze, BigInt c) {
    return LaurentPoly::monomial({"a", "z"}, {ae, ze}, std::move(c));
}
LaurentPoly ax_mono(int ae, int xe, BigInt c) {
    return LaurentPoly::monomial({"a", "x"}, {ae, xe}, std::move(c));
}

// delta = (a + a^-1) / z: value of one extra split unknot for P.
LaurentPoly homfly_delta() { return az_mono(1, -1, 1) + az_mono(-1, -1, 1); }
// Kauffman split-component factor (a + a^-1)/x - 1.
LaurentPoly kauffman_delta() { return ax_mono(1, -1, 1) + ax_mono(-1, -1, 1) + ax_mono(0, 0, -1); }

// First crossing met on its under-strand before being met on its over-strand,
// walking the components in their cycle order.  Descending diagrams return
// nothing.
std::optional<int> first_bad_crossing(const LinkDiagram& d) {
    std::set<int> seen;
    for (const auto& cycle : d.component_cycles()) {
        for (int e : cycle) {
            const EdgeInfo& info = d.edge(e);
            if (info.loop) break;
            int c = info.head.crossing;
            if (seen.count(c)) continue;
            seen.insert(c);
            if (info.head.slot == 0) return c;
        }
    }
    return std::nullopt;
}

class HomflyEngine {
  public:
    LaurentPoly run(const LinkDiagram& d) {
        std::string key = d.canonical_key();
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        LaurentPoly result({"a", "z"});
        auto bad = first_bad_crossing(d);
        if (!bad) {
            result = homfly_delta().pow(d.num_components() - 1);
        } else {
            LinkDiagram switched = switch_crossing(d, *bad);
            LinkDiagram smoothed = smooth_crossing(d, *bad);
            if (d.crossings[*bad].sign() > 0) {
                // a P+ + a^-1 P- = z P0  =>  P+ = a^-1 z P0 - a^-2 P-
                result = az_mono(-1, 1, 1) * run(smoothed) - az_mono(-2, 0, 1) * run(switched);
            } else {
                result = az_mono(1, 1, 1) * run(smoothed) - az_mono(2, 0, 1) * run(switched);
            }
        }
        memo_.emplace(std::move(key), result);
        return result;
    }

  private:
    std::map<std::string, LaurentPoly> memo_;
};

class KauffmanEngine {
  public:
    LaurentPoly run(const LinkDiagram& d) {
        std::string key = d.canonical_key();
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        LaurentPoly result({"a", "x"});
        auto bad = first_bad_crossing(d);
        if (!bad) {
            result = LaurentPoly::monomial({"a", "x"}, {d.writhe(), 0}, 1) *
                     kauffman_delta().pow(d.num_components() - 1);
        } else {
            LinkDiagram switched = switch_crossing(d, *bad);
            LinkDiagram sm_a = smooth_crossing(d, *bad);
            LinkDiagram sm_b = smooth_crossing_other(d, *bad);
            // Lambda+ + Lambda- = x(Lambda0 + LambdaInf)
            result = ax_mono(0, 1, 1) * (run(sm_a) + run(sm_b)) - run(switched);
        }
        memo_.emplace(std::move(key), result);
        return result;
    }

  private:
    std::map<std::string, LaurentPoly> memo_;
};

// Substitute a -> i s^a_shift, z -> i(s - 1/s) into P(a,z) with exact
// Gaussian-integer bookkeeping; the result must come out real.
LaurentPoly homfly_substitute_svar(const LaurentPoly& p, int a_shift) {
    if (p.vars() != std::vector<std::string>{"a", "z"})
        throw std::invalid_argument("expected a polynomial in (a, z)");
    // Clear z denominators: work with P * z^N.
    int n_clear = std::max(0, -p.min_exp("z"));

    std::map<int, GaussInt> acc;  // s-exponent -> coefficient
    for (const auto& [e, c] : p.terms()) {
        int ae = e[0], ze = e[1] + n_clear;
        // c * i^(ae+ze) * s^(a_shift*ae) * (s - 1/s)^ze
        GaussInt unit = gauss_i_pow(ae + ze);
        // binomial expansion of (s - s^-1)^ze
        BigInt binom = 1;
        for (int j = 0; j <= ze; ++j) {
            BigInt coeff = binom;
            if (j % 2 != 0) coeff = -coeff;
            GaussInt term = unit * GaussInt(coeff * c);
            acc[a_shift * ae + ze - 2 * j] += term;
            binom = binom * (ze - j) / (j + 1);
        }
    }
    // Divide by (i(s - 1/s))^n_clear exactly.
    for (int round = 0; round < n_clear; ++round) {
        if (acc.empty()) break;
        // f = g*(s - 1/s) means f_k = g_{k-1} - g_{k+1}; solve from the top.
        int lo = acc.begin()->first, hi = acc.rbegin()->first;
        std::map<int, GaussInt> g;
        for (int k = hi; k >= lo; --k) {
            GaussInt fk = acc.count(k) ? acc[k] : GaussInt();
            GaussInt gk1 = g.count(k + 1) ? g[k + 1] : GaussInt();
            GaussInt gkm1 = fk + gk1;
            if (!gkm1.is_zero()) g[k - 1] = gkm1;
        }
        // Exactness: the quotient's support must stay within [lo+1, hi-1].
        if (g.count(lo) || g.count(lo - 1))
            throw std::logic_error("inexact division while specializing P (skein bug)");
        acc.clear();
        for (auto& [k, v] : g) acc[k] = v * GaussInt(0, -1);  // times i^-1
    }
    LaurentPoly out({"s"});
    for (const auto& [k, v] : acc) {
        if (!v.is_real())
            throw std::logic_error("complex coefficient after specializing P (skein bug)");
        out.add_term({k}, v.re);
    }
    return out;
}

}  // namespace

LaurentPoly homfly(const LinkDiagram& d, const SkeinConfig& cfg) {
    if (static_cast<int>(d.crossings.size()) > cfg.max_crossings_homfly)
        throw BudgetExceeded("diagram exceeds the P crossing budget (" +
                             std::to_string(d.crossings.size()) + " > " +
                             std::to_string(cfg.max_crossings_homfly) + ")");
    HomflyEngine engine;
    return engine.run(d);
}

LaurentPoly kauffman_lambda(const LinkDiagram& d, const SkeinConfig& cfg) {
    if (static_cast<int>(d.crossings.size()) > cfg.max_crossings_kauffman)
        throw BudgetExceeded("diagram exceeds the Kauffman crossing budget (" +
                             std::to_string(d.crossings.size()) + " > " +
                             std::to_string(cfg.max_crossings_kauffman) + ")");
    KauffmanEngine engine;
    return engine.run(d);
}

LaurentPoly kauffman_f(const LinkDiagram& d, const SkeinConfig& cfg) {
    return LaurentPoly::monomial({"a", "x"}, {-d.writhe(), 0}, 1) * kauffman_lambda(d, cfg);
}

LaurentPoly jones_from_homfly(const LaurentPoly& p) { return homfly_substitute_svar(p, -2); }

LaurentPoly alexander_from_homfly(const LaurentPoly& p) { return homfly_substitute_svar(p, 0); }

LaurentPoly jones(const LinkDiagram& d, const SkeinConfig& cfg) {
    return jones_from_homfly(homfly(d, cfg));
}

LaurentPoly alexander(const LinkDiagram& d, const SkeinConfig& cfg) {
    return alexander_from_homfly(homfly(d, cfg));
}

}  // namespace tkm
