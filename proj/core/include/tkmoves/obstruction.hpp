#pragma once

#include "tkmoves/diagram.hpp"
#include "tkmoves/laurent.hpp"
#include "tkmoves/skein.hpp"

#include <optional>
#include <string>

namespace tkm {

enum class Verdict { Incompatible, Compatible, InconclusiveBeyondBound };

// Outcome of a twist-equivalence test.  Incompatible verdicts carry a witness
// evaluation where no admissible level fits; Compatible ones the recovered
// candidate level distance (when the test has one).
struct ObstructionReport {
    Verdict verdict = Verdict::Incompatible;
    std::optional<int> level;
    Complex witness_point{0, 0};
    Complex witness_lhs{0, 0};
    Complex witness_rhs{0, 0};
    std::string method;

    std::string json() const;
};

struct ObstructionConfig {
    unsigned long seed = 20106;  // fixed so failures reproduce
    double tol = 1e-9;
    int samples = 24;
};

// Cor-1.2-style test at z0 = 2 cos(pi m / k): P_L'(a, z0) must equal
// ((-1)^m a^-k)^n P_L(a, z0) for a single n with |n| <= nmax.
ObstructionReport tk_obstruction(const LaurentPoly& pL, const LaurentPoly& pL2, int k, int m,
                                 int nmax = 64, const ObstructionConfig& cfg = {});

// P_L'(a0, z) = P_L(a0, z) at every a0 with a0^(2k) = (-1)^k, a0 != +-i.
ObstructionReport bar_t2k_obstruction(const LaurentPoly& pL, const LaurentPoly& pL2, int k,
                                      const ObstructionConfig& cfg = {});

// Single-point Jones test at t = e^{i pi m / k} (m = k mod 2 so t^k = (-1)^k):
// V_L'(t) = ((-1)^(m') i^k)^n V_L(t) with sqrt(t) = -i e^{i pi m'/k}.
ObstructionReport jones_tk_factor(const LaurentPoly& vL, const LaurentPoly& vL2, int k, int m,
                                  int nmax = 64, const ObstructionConfig& cfg = {});

enum class CongruenceMode { TkAtPm2, BarT2kAtPmI };

// Coefficient congruences: P(t_k L)(a, +-2) = eps a^-k P_L(a, +-2) over
// Z[1/2]/kZ[1/2], or P(tbar_2k L)(+-i, z) = P_L(+-i, z) over (Z+iZ)/k(Z+iZ).
bool mod_k_congruence(const LaurentPoly& pL, const LaurentPoly& pL2, int k, CongruenceMode mode);

// Arf invariant via P(1, sqrt 2) = (sqrt 2)^(c-1) (-1)^Arf; absent when the
// value vanishes.  Any other magnitude reports a computation bug.
std::optional<int> murakami_arf(const LinkDiagram& d, const SkeinConfig& cfg = {});

struct SpecialValueCheck {
    Complex lhs{0, 0};
    int dim = 0;
    bool consistent = false;
};

// |P(e^{i pi/6}, 1)| = (sqrt 3)^dim with dim = dim H1(M^(2), Z_3).
SpecialValueCheck lickorish_millett_check(const LinkDiagram& d, const SkeinConfig& cfg = {});
// |P(1, 1)| = 2^(dim/2) with dim = dim H1(M^(3), Z_2).
SpecialValueCheck lmm_check(const LinkDiagram& d, const SkeinConfig& cfg = {});

// Number of Fox p-colourings, constant colourings included.
BigInt fox_colorings(const LinkDiagram& d, const BigInt& p);

}  // namespace tkm
