#pragma once

#include "tkmoves/diagram.hpp"
#include "tkmoves/laurent.hpp"

#include <stdexcept>

namespace tkm {

struct SkeinConfig {
    int max_crossings_homfly = 14;
    int max_crossings_kauffman = 12;
};

class BudgetExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Jones-Conway polynomial P(a,z) with a P+ + a^-1 P- = z P0, P(unknot) = 1.
LaurentPoly homfly(const LinkDiagram& d, const SkeinConfig& cfg = {});

// Kauffman regular-isotopy polynomial: Lambda(+curl unknot) = a,
// Lambda+ + Lambda- = x(Lambda0 + LambdaInf).  Depends on the writhe.
LaurentPoly kauffman_lambda(const LinkDiagram& d, const SkeinConfig& cfg = {});

// F = a^{-writhe} Lambda, an invariant of the oriented link.
LaurentPoly kauffman_f(const LinkDiagram& d, const SkeinConfig& cfg = {});

// Jones polynomial in s (s^2 = t), from P via a -> i s^-2, z -> i(s - 1/s).
LaurentPoly jones(const LinkDiagram& d, const SkeinConfig& cfg = {});

// Normalized Alexander polynomial in s, from P via a -> i, z -> i(s - 1/s).
LaurentPoly alexander(const LinkDiagram& d, const SkeinConfig& cfg = {});

// The same substitutions applied to an already computed P(a,z).
LaurentPoly jones_from_homfly(const LaurentPoly& p);
LaurentPoly alexander_from_homfly(const LaurentPoly& p);

}  // namespace tkm
