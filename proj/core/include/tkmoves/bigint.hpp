#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace tkm {

using BigInt = boost::multiprecision::cpp_int;

// Gaussian integer, used when a polynomial substitution introduces the
// imaginary unit (a = i s^-2 etc.).  Kept exact so root-of-unity
// specializations stay integer arithmetic until the final evaluation.
struct GaussInt {
    BigInt re = 0;
    BigInt im = 0;

    GaussInt() = default;
    GaussInt(BigInt r) : re(std::move(r)) {}
    GaussInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussInt operator+(const GaussInt& o) const { return {re + o.re, im + o.im}; }
    GaussInt operator-(const GaussInt& o) const { return {re - o.re, im - o.im}; }
    GaussInt operator*(const GaussInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussInt& operator+=(const GaussInt& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussInt& operator-=(const GaussInt& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    bool operator==(const GaussInt& o) const { return re == o.re && im == o.im; }
};

// i^k for any integer k.
inline GaussInt gauss_i_pow(long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace tkm
