#include "doctest.h"

#include "tkmoves/chebyshev.hpp"
#include "tkmoves/moves.hpp"
#include "tkmoves/skein.hpp"

#include <optional>
#include <random>
#include <stdexcept>

using namespace tkm;

namespace {

LinkDiagram closure(const char* w) { return braid_closure(braid_parse(w)); }

LaurentPoly az(std::initializer_list<std::tuple<int, int, long>> terms) {
    LaurentPoly p({"a", "z"});
    for (auto& [ae, ze, c] : terms) p.add_term({ae, ze}, c);
    return p;
}

MoveSite tk_site(std::initializer_list<int> anchors) {
    return MoveSite{MoveKind::TK, std::vector<int>(anchors), TbarOrient::FirstAnchor};
}
MoveSite tbar_site(std::initializer_list<int> anchors) {
    return MoveSite{MoveKind::TBARK, std::vector<int>(anchors), TbarOrient::FirstAnchor};
}

// First pair of edges accepting the given move kind.
std::optional<MoveSite> find_site(const LinkDiagram& d, MoveKind kind) {
    auto ids = d.edge_ids();
    for (int a : ids) {
        for (int b : ids) {
            if (a == b) continue;
            MoveSite site{kind, {a, b}, TbarOrient::FirstAnchor};
            try {
                apply_move(d, site, kind == MoveKind::TBARK ? 2 : 1);
                return site;
            } catch (const std::exception&) {
            }
        }
    }
    return std::nullopt;
}

// Lift a univariate-in-z polynomial into (a,z).
LaurentPoly lift_z(const LaurentPoly& p) {
    LaurentPoly out({"a", "z"});
    for (const auto& [e, c] : p.terms()) out.add_term({0, e[0]}, c);
    return out;
}
LaurentPoly lift_a(const LaurentPoly& p) {
    LaurentPoly out({"a", "z"});
    for (const auto& [e, c] : p.terms()) out.add_term({e[0], 0}, c);
    return out;
}

}  // namespace

TEST_CASE("tk move on the 2-component unlink gives the trefoil") {
    LinkDiagram t2 = closure("n=2:");  // loops 0, 1
    LinkDiagram out = apply_move(t2, tk_site({0, 1}), 3);
    CHECK(out.crossings.size() == 3);
    CHECK(out.num_components() == 1);
    CHECK(homfly(out) == az({{-4, 0, -1}, {-2, 0, -2}, {-2, 2, 1}}));
}

TEST_CASE("folded slots on a bare circle") {
    LinkDiagram t1 = closure("n=1:");
    // a coherent (parallel) fold of one circle interleaves its return arcs,
    // which cannot be drawn without an extra crossing: rejected as non-planar
    CHECK_THROWS_AS(apply_move(t1, tk_site({0, 0}), 3), std::invalid_argument);
    // the hairpin (antiparallel) fold is fine; one twist is just a curl
    LinkDiagram curl = apply_move(t1, tbar_site({0, 0}), 1);
    CHECK(curl.crossings.size() == 1);
    CHECK(curl.num_components() == 1);
    CHECK(homfly(curl) == LaurentPoly::constant({"a", "z"}, 1));
    // an even hairpin twist is a clasp of the circle with itself
    LinkDiagram clasp = apply_move(t1, tbar_site({0, 0}), 2);
    CHECK(clasp.crossings.size() == 2);
    CHECK(clasp.num_components() == 1);
    CHECK(homfly(clasp) == LaurentPoly::constant({"a", "z"}, 1));
}

TEST_CASE("zero twists return the diagram unchanged") {
    LinkDiagram d = closure("n=2:1");
    MoveSite site = tk_site({0, 1});
    CHECK(apply_move(d, site, 0) == d);
}

TEST_CASE("writhe increases by k under tk") {
    LinkDiagram d = closure("n=2:1");
    for (int k : {-3, -1, 1, 2, 5}) {
        CAPTURE(k);
        LinkDiagram out = apply_move(d, tk_site({0, 1}), k);
        CHECK(out.writhe() == d.writhe() + k);
    }
}

TEST_CASE("tk then its inverse restores the polynomial") {
    LinkDiagram d = closure("n=2:1");
    LinkDiagram plus = apply_move(d, tk_site({0, 1}), 3);
    // the inserted twist region leaves fresh edges; pick a valid site on them
    auto site = find_site(plus, MoveKind::TK);
    REQUIRE(site.has_value());
    bool matched = false;
    // any parallel site supporting -3 such that P returns works for the check
    for (int a : plus.edge_ids()) {
        for (int b : plus.edge_ids()) {
            if (a == b) continue;
            try {
                LinkDiagram back = apply_move(plus, tk_site({a, b}), -3);
                if (homfly(back) == homfly(d)) matched = true;
            } catch (const std::exception&) {
            }
            if (matched) break;
        }
        if (matched) break;
    }
    CHECK(matched);
}

TEST_CASE("tbar move on the 2-component unlink gives the negative hopf link") {
    LinkDiagram t2 = closure("n=2:");
    LinkDiagram out = apply_move(t2, tbar_site({0, 1}), 2);
    CHECK(out.crossings.size() == 2);
    CHECK(out.num_components() == 2);
    // P(Hopf-) = a z - (a + a^3) z^-1: pins the antiparallel twist pattern
    CHECK(homfly(out) == az({{1, 1, 1}, {1, -1, -1}, {3, -1, -1}}));
}

TEST_CASE("smooth_site joins two circles") {
    LinkDiagram t2 = closure("n=2:");
    LinkDiagram out = smooth_site(t2, 0, 1);
    CHECK(out.num_components() == 1);
    CHECK(out.crossings.empty());
}

TEST_CASE("theorem 1.7 twist formula for tbar moves") {
    // P(tbar_2k(L)) = (-1)^k a^(2k) P(L0) + z u1(2k) P(Linf) exactly.
    LinkDiagram l0 = closure("n=2:");          // the 0-slot: two circles
    LinkDiagram linf = smooth_site(l0, 0, 1);  // the infinity-slot: one circle
    LaurentPoly p0 = homfly(l0), pinf = homfly(linf);
    LaurentPoly zmono = az({{0, 1, 1}});
    for (int k = 1; k <= 3; ++k) {
        CAPTURE(k);
        LinkDiagram moved = apply_move(l0, tbar_site({0, 1}), 2 * k);
        LaurentPoly lhs = homfly(moved);
        LaurentPoly rhs = LaurentPoly::monomial({"a", "z"}, {2 * k, 0}, k % 2 ? -1 : 1) * p0 +
                          zmono * lift_a(twist_seq(TwistSeqKind::U1, 2 * k)) * pinf;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("theorem 1.1 twist recursion for tk moves") {
    // a^k P(t_k L) = a v1(k) P(t_1 L) - v1(k-1) P(L) exactly.
    for (const char* w : {"n=2:", "n=2:1", "n=2:1 1"}) {
        CAPTURE(w);
        LinkDiagram base = closure(w);
        MoveSite site = tk_site({0, 1});
        LaurentPoly p0 = homfly(base);
        LaurentPoly p1 = homfly(apply_move(base, site, 1));
        for (int k = 2; k <= 5; ++k) {
            CAPTURE(k);
            LaurentPoly pk = homfly(apply_move(base, site, k));
            LaurentPoly lhs = az({{k, 0, 1}}) * pk;
            LaurentPoly rhs = az({{1, 0, 1}}) * lift_z(twist_seq(TwistSeqKind::V1, k)) * p1 -
                              lift_z(twist_seq(TwistSeqKind::V1, k - 1)) * p0;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("component count rules") {
    LinkDiagram t2 = closure("n=2:");
    // even tk keeps components, odd tk on distinct components merges
    CHECK(apply_move(t2, tk_site({0, 1}), 4).num_components() == 2);
    CHECK(apply_move(t2, tk_site({0, 1}), 3).num_components() == 1);
    // odd tk on a two-strand site of one component splits it: take the
    // trefoil's braid slot (both strands on the single knot component)
    LinkDiagram tref = closure("n=2:1 1 1");
    CHECK(apply_move(tref, tk_site({0, 1}), 1).num_components() == 2);
    // tbar even keeps the count
    CHECK(apply_move(t2, tbar_site({0, 1}), 2).num_components() == 2);
    // tbar odd with two components merges them (one component involved
    // keeps the count; see the folded-slot cases above)
    CHECK(apply_move(t2, tbar_site({0, 1}), 3).num_components() == 1);
}

TEST_CASE("odd tbar orientation choice picks the surviving direction") {
    LinkDiagram hopf = closure("n=2:1 1");
    auto site = find_site(hopf, MoveKind::TBARK);
    REQUIRE(site.has_value());
    MoveSite s1 = *site, s2 = *site;
    s1.orient = TbarOrient::FirstAnchor;
    s2.orient = TbarOrient::SecondAnchor;
    LinkDiagram a = apply_move(hopf, s1, 3);
    LinkDiagram b = apply_move(hopf, s2, 3);
    CHECK(a.num_components() == 1);
    CHECK(b.num_components() == 1);
    // the two choices are the two orientations of the merged component:
    // P may differ, but both must satisfy P(a, a+1/a) = 1
    for (const LinkDiagram& d : {a, b}) {
        LaurentPoly p = homfly(d);
        int n = std::max(0, -p.min_exp("z"));
        LaurentPoly zn = LaurentPoly::monomial({"a", "z"}, {0, n}, 1);
        LaurentPoly img({"a"});
        img.add_term({1}, 1);
        img.add_term({-1}, 1);
        CHECK((zn * p).substitute("z", img) == img.pow(n));
    }
}

TEST_CASE("linking numbers mod 2 preserved by k=4 moves") {
    std::mt19937_64 rng(5150);
    for (const char* w : {"n=2:1 1", "n=3:1 1 2 2", "n=3:1 -2 1 -2 1 -2"}) {
        CAPTURE(w);
        LinkDiagram d = closure(w);
        for (MoveKind kind : {MoveKind::TK, MoveKind::TBARK}) {
            auto site = find_site(d, kind);
            if (!site) continue;
            LinkDiagram out = apply_move(d, *site, 4);
            REQUIRE(out.num_components() == d.num_components());
            // components keep their identity through surviving edge ids:
            // compare the multiset of pairwise linking numbers mod 2.
            std::multiset<int> before, after;
            for (int i = 0; i < d.num_components(); ++i)
                for (int j = i + 1; j < d.num_components(); ++j)
                    before.insert(((d.linking_number(i, j) % 2) + 2) % 2);
            for (int i = 0; i < out.num_components(); ++i)
                for (int j = i + 1; j < out.num_components(); ++j)
                    after.insert(((out.linking_number(i, j) % 2) + 2) % 2);
            CHECK(before == after);
        }
    }
}

TEST_CASE("full twist on two strands equals 2k half twists") {
    LinkDiagram d = closure("n=2:1");
    MoveSite ft{MoveKind::FULLTWIST, {0, 1}, TbarOrient::FirstAnchor};
    LinkDiagram a = apply_move(d, ft, 2);
    LinkDiagram b = apply_move(d, tk_site({0, 1}), 4);
    CHECK(homfly(a) == homfly(b));
    CHECK(a.writhe() == b.writhe());
}

TEST_CASE("full twist respects mixed strand directions") {
    // a full twist through two antiparallel strands has algebraic count 0
    LinkDiagram hopf = closure("n=2:1 1");
    auto site = find_site(hopf, MoveKind::TBARK);
    REQUIRE(site.has_value());
    MoveSite ft{MoveKind::FULLTWIST, site->anchors, TbarOrient::FirstAnchor};
    CHECK(site_algebraic_count(hopf, ft) == 0);
    LinkDiagram out = apply_move(hopf, ft, 1);
    CHECK(out.num_components() == hopf.num_components());
    // one full twist of an antiparallel pair is the 2-half-twist clasp
    CHECK(out.writhe() == hopf.writhe() - 2);
    CHECK(homfly(out) == homfly(apply_move(hopf, *site, 2)));

    MoveSite ft2{MoveKind::FULLTWIST, {0, 1}, TbarOrient::FirstAnchor};
    LinkDiagram d = closure("n=2:1");
    CHECK(site_algebraic_count(d, ft2) == 2);
}

TEST_CASE("move site validation errors") {
    LinkDiagram hopf = closure("n=2:1 1");
    // parallel braid strands reject TBARK and vice versa
    bool tk_somewhere = false, mismatch_seen = false;
    for (int a : hopf.edge_ids()) {
        for (int b : hopf.edge_ids()) {
            if (a == b) continue;
            try {
                apply_move(hopf, tk_site({a, b}), 2);
                tk_somewhere = true;
                CHECK_THROWS_AS(apply_move(hopf, tbar_site({a, b}), 2), std::invalid_argument);
                mismatch_seen = true;
            } catch (const std::invalid_argument&) {
            }
            if (mismatch_seen) break;
        }
        if (mismatch_seen) break;
    }
    CHECK(tk_somewhere);
    CHECK(mismatch_seen);

    CHECK_THROWS_AS(apply_move(hopf, MoveSite{MoveKind::FULLTWIST, {0, 0}, {}}, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_move(hopf, MoveSite{MoveKind::TK, {0}, {}}, 1), std::invalid_argument);
}

TEST_CASE("fuzz: random moves keep diagrams valid") {
    std::mt19937_64 rng(987654);
    std::vector<std::string> seeds = {"n=2:1 1", "n=3:1 -2 1 -2", "n=2:1 1 1", "n=3:1 1 2"};
    int applied = 0;
    for (const auto& w : seeds) {
        LinkDiagram d = braid_closure(braid_parse(w));
        for (int step = 0; step < 4; ++step) {
            std::uniform_int_distribution<int> kd(1, 2);
            int k = kd(rng);
            bool moved = false;
            for (int a : d.edge_ids()) {
                for (int b : d.edge_ids()) {
                    if (a == b || moved) continue;
                    for (MoveKind kind : {MoveKind::TK, MoveKind::TBARK}) {
                        try {
                            LinkDiagram next = apply_move(d, MoveSite{kind, {a, b}, {}}, k);
                            next.validate();  // all invariants re-checked
                            ++applied;
                            if (!moved && next.crossings.size() <= 9) {
                                d = next;
                                moved = true;
                            }
                        } catch (const std::invalid_argument&) {
                        }
                    }
                }
            }
            if (!moved) break;
        }
    }
    CHECK(applied > 20);
}
