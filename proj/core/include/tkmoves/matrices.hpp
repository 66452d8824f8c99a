#pragma once

#include "tkmoves/bigint.hpp"
#include "tkmoves/diagram.hpp"
#include "tkmoves/laurent.hpp"

#include <string>
#include <vector>

namespace tkm {

struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<std::vector<BigInt>> a;

    static IntMatrix zero(int r, int c);
    static IntMatrix identity(int n);
    bool is_symmetric() const;
    IntMatrix transpose() const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-() const;
    BigInt det() const;  // exact (Bareiss)
    std::string json() const;
    bool operator==(const IntMatrix&) const = default;
};

// Invariant factors d1 | d2 | ..., zeros (free rank) last.
struct SnfResult {
    std::vector<BigInt> factors;
    int rank_deficiency = 0;  // number of zero factors

    std::vector<BigInt> nontrivial() const;  // factors != 1, zeros included
    // gcd(d_i, k) multiset with 1s dropped: the Z_k profile of the group.
    std::vector<BigInt> mod_profile(const BigInt& k) const;
    // dim of H (x) Z_p for p prime.
    int zp_dimension(const BigInt& p) const;
    std::string json() const;
    bool operator==(const SnfResult&) const = default;
};

struct SignatureValue {
    int signature = 0;
    int nullity = 0;
    bool operator==(const SignatureValue&) const = default;
};

SnfResult smith_normal_form(const IntMatrix& m);

// Goeritz matrix over the white regions X_1..X_n of the checkerboard
// colouring (unbounded region white).  Connected diagrams only.  Without a
// seed the larger colour class is white and its first face unbounded; a seed
// face-side forces that face to be the white unbounded region, which lets
// paired computations (a diagram and its twisted copy) share conventions.
IntMatrix goeritz_matrix(const LinkDiagram& d,
                         std::optional<FaceSide> white_outer = std::nullopt);

// Gordon-Litherland correction: type II incidence sum making
// signature = sig(Goeritz) - mu; same seeding rules.
int mu_correction(const LinkDiagram& d, std::optional<FaceSide> white_outer = std::nullopt);

// Seifert matrix of a connected Seifert surface from Seifert's algorithm.
// Split diagrams tube their pieces together (one zero generator per tube).
IntMatrix seifert_matrix(const LinkDiagram& d);
// The same matrix computed from a braid word directly.
IntMatrix seifert_matrix_braid(const BraidWord& b);

// Converts any diagram of a connected link into a braid word with the same
// closure (Vogel reduction to coherent nested Seifert circles).
BraidWord vogel_braid(const LinkDiagram& d);

// H1 of the s-fold cyclic branched cover.  s = 2 is computed from both the
// Goeritz matrix and the Seifert blocks, which must agree; s >= 3 uses the
// block presentation built from V and V^T.
SnfResult branched_cover_homology(const LinkDiagram& d, int s);

// Classical signature via Goeritz + mu, cross-checked against V + V^T.
SignatureValue signature(const LinkDiagram& d);

// Tristram-Levine signature: eigenvalues of (1-conj(xi)) V + (1-xi) V^T,
// classified with 1e-9 tolerance.
SignatureValue tristram_levine(const LinkDiagram& d, Complex xi);

// det(i A(xi)) for the same Hermitian matrix.
Complex tl_determinant(const LinkDiagram& d, Complex xi);

}  // namespace tkm
