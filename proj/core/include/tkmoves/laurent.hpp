#pragma once

#include "tkmoves/bigint.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace tkm {

using Complex = std::complex<double>;

// Evaluation point for eval_complex: one complex number per variable.
struct ComplexPoint {
    std::map<std::string, Complex> assignments;
};

// Sparse exact Laurent polynomial in one or two named variables.
//
// Invariants: no stored coefficient is zero, every exponent vector has the
// same length as the variable list, and two polynomials are equal iff their
// canonical term maps are identical.
class LaurentPoly {
  public:
    using Exps = std::vector<int>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::vector<std::string> vars);

    // Constant polynomial in the given variables.
    static LaurentPoly constant(std::vector<std::string> vars, BigInt c);
    // coeff * prod(vars[i]^exps[i])
    static LaurentPoly monomial(std::vector<std::string> vars, Exps exps, BigInt coeff);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exps, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    void add_term(const Exps& exps, const BigInt& coeff);

    LaurentPoly operator+(const LaurentPoly& q) const;
    LaurentPoly operator-(const LaurentPoly& q) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& q) const;
    LaurentPoly& operator+=(const LaurentPoly& q);
    LaurentPoly& operator-=(const LaurentPoly& q);
    bool operator==(const LaurentPoly& q) const;
    bool operator!=(const LaurentPoly& q) const { return !(*this == q); }

    LaurentPoly pow(int n) const;  // n >= 0

    // Substitute `var` by `image`, fully expanded.  Negative powers of `var`
    // require `image` to be a unit monomial (single term, coefficient +-1);
    // otherwise a "non-invertible image" error is thrown.  If `image` does not
    // mention `var`, the variable is dropped from the result's variable list.
    LaurentPoly substitute(const std::string& var, const LaurentPoly& image) const;

    // Exact evaluation of each term accumulated in double precision.
    // Variables with negative exponents must be assigned nonzero values.
    Complex eval(const ComplexPoint& pt) const;

    // Smallest/largest exponent of the given variable (0 for the zero poly).
    int min_exp(const std::string& var) const;
    int max_exp(const std::string& var) const;

    // Terms sorted lexicographically by exponent vector, e.g.
    // "-a^-4 - 2a^-2 + a^-2 z^2".
    std::string str() const;
    std::string json() const;

  private:
    int var_index(const std::string& var) const;

    std::vector<std::string> vars_;
    std::map<Exps, BigInt> terms_;
};

// Relative comparison used for all floating checks downstream: 1e-9 relative,
// 1e-12 absolute near zero.
bool approx_equal(const Complex& a, const Complex& b, double rel_tol = 1e-9,
                  double abs_tol = 1e-12);

}  // namespace tkm
