#pragma once

#include "tkmoves/laurent.hpp"

namespace tkm {

// The five twist-recursion coefficient sequences.  V1/W1 are univariate in z
// (or x, the variable name is "z"), U1 univariate in a, V2/W2 bivariate (a,x).
// U1 is defined only at even indices.
enum class TwistSeqKind { V1, W1, U1, V2, W2 };

// Exact polynomial value, unrolled from the initial conditions:
//   v1: v1(-1)=-1, v1(0)=0, v1(1)=1,   v1(k) = z v1(k-1) - v1(k-2)
//   w1: w1(0)=2,  w1(1)=z,             w1(k) = z w1(k-1) - w1(k-2)
//   u1: u1(0)=0,  u1(2)=a,             u1(2k) = -a^2 u1(2(k-1)) + a
//   v2: v2(0)=0,  v2(1)=0,             v2(k) = x v2(k-1) - v2(k-2) + a^(1-k)
//   w2: w2(0)=0,  w2(1)=1,             w2(k) = x w2(k-1) - w2(k-2) + a^(k-1) + a^(1-k)
// Index ranges: k >= -1 for V1, k >= 0 for W1/V2/W2, k even >= 0 for U1.
LaurentPoly twist_seq(TwistSeqKind kind, int k);

// Closed-form value at z = x = p + 1/p.  Throws when the requested formula's
// denominator vanishes (reporting which one).
Complex twist_seq_closed(TwistSeqKind kind, int k, Complex p, Complex a);

}  // namespace tkm
