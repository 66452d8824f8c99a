#include "tkmoves/chebyshev.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace tkm {

namespace {

std::mutex g_memo_mutex;

const LaurentPoly& memo_slot(std::vector<LaurentPoly>& table, size_t idx) { return table[idx]; }

LaurentPoly zpoly(int exp, BigInt c) { return LaurentPoly::monomial({"z"}, {exp}, std::move(c)); }
LaurentPoly apoly(int exp, BigInt c) { return LaurentPoly::monomial({"a"}, {exp}, std::move(c)); }
LaurentPoly axpoly(int ae, int xe, BigInt c) {
    return LaurentPoly::monomial({"a", "x"}, {ae, xe}, std::move(c));
}

}  // namespace

LaurentPoly twist_seq(TwistSeqKind kind, int k) {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    switch (kind) {
        case TwistSeqKind::V1: {
            if (k < -1) throw std::invalid_argument("twist_seq: V1 needs k >= -1");
            // table[i] = v1(i-1)
            static std::vector<LaurentPoly> t = {zpoly(0, -1), LaurentPoly({"z"}), zpoly(0, 1)};
            while (static_cast<int>(t.size()) <= k + 1)
                t.push_back(zpoly(1, 1) * t[t.size() - 1] - t[t.size() - 2]);
            return memo_slot(t, k + 1);
        }
        case TwistSeqKind::W1: {
            if (k < 0) throw std::invalid_argument("twist_seq: W1 needs k >= 0");
            static std::vector<LaurentPoly> t = {zpoly(0, 2), zpoly(1, 1)};
            while (static_cast<int>(t.size()) <= k)
                t.push_back(zpoly(1, 1) * t[t.size() - 1] - t[t.size() - 2]);
            return memo_slot(t, k);
        }
        case TwistSeqKind::U1: {
            if (k < 0 || k % 2 != 0)
                throw std::invalid_argument("twist_seq: U1 needs even k >= 0");
            // table[i] = u1(2i)
            static std::vector<LaurentPoly> t = {LaurentPoly({"a"}), apoly(1, 1)};
            while (static_cast<int>(t.size()) <= k / 2)
                t.push_back(apoly(2, -1) * t[t.size() - 1] + apoly(1, 1));
            return memo_slot(t, k / 2);
        }
        case TwistSeqKind::V2: {
            if (k < 0) throw std::invalid_argument("twist_seq: V2 needs k >= 0");
            static std::vector<LaurentPoly> t = {LaurentPoly({"a", "x"}), LaurentPoly({"a", "x"})};
            while (static_cast<int>(t.size()) <= k) {
                int n = static_cast<int>(t.size());
                t.push_back(axpoly(0, 1, 1) * t[n - 1] - t[n - 2] + axpoly(1 - n, 0, 1));
            }
            return memo_slot(t, k);
        }
        case TwistSeqKind::W2: {
            if (k < 0) throw std::invalid_argument("twist_seq: W2 needs k >= 0");
            static std::vector<LaurentPoly> t = {LaurentPoly({"a", "x"}), axpoly(0, 0, 1)};
            while (static_cast<int>(t.size()) <= k) {
                int n = static_cast<int>(t.size());
                t.push_back(axpoly(0, 1, 1) * t[n - 1] - t[n - 2] + axpoly(n - 1, 0, 1) +
                            axpoly(1 - n, 0, 1));
            }
            return memo_slot(t, k);
        }
    }
    throw std::logic_error("twist_seq: unreachable");
}

namespace {

Complex cpow(Complex b, int e) { return std::pow(b, e); }

void require_nonsingular(Complex denom, const char* which) {
    if (std::abs(denom) < 1e-12)
        throw std::invalid_argument(std::string("twist_seq_closed: denominator '") + which +
                                    "' vanished");
}

}  // namespace

Complex twist_seq_closed(TwistSeqKind kind, int k, Complex p, Complex a) {
    switch (kind) {
        case TwistSeqKind::V1: {
            Complex d = p - 1.0 / p;
            require_nonsingular(d, "p - 1/p");
            return (cpow(p, k) - cpow(p, -k)) / d;
        }
        case TwistSeqKind::W1:
            return cpow(p, k) + cpow(p, -k);
        case TwistSeqKind::U1: {
            if (k % 2 != 0) throw std::invalid_argument("twist_seq_closed: U1 needs even index");
            int m = k / 2;
            Complex d = a + 1.0 / a;
            require_nonsingular(d, "a + 1/a");
            double sign = (m % 2 == 0) ? -1.0 : 1.0;  // (-1)^(m+1)
            return sign * cpow(a, m) * (cpow(a, m) + sign * cpow(a, -m)) / d;
        }
        case TwistSeqKind::V2: {
            Complex d1 = p - 1.0 / p;
            require_nonsingular(d1, "p - 1/p");
            Complex d2 = a + 1.0 / a - (p + 1.0 / p);
            require_nonsingular(d2, "a + 1/a - (p + 1/p)");
            Complex num = -(1.0 / a) * (cpow(p, k) - cpow(p, -k)) +
                          p * (cpow(a, -k) - cpow(p, -k)) - (1.0 / p) * (cpow(a, -k) - cpow(p, k));
            return num / (d1 * d2);
        }
        case TwistSeqKind::W2: {
            Complex d1 = a - p;
            require_nonsingular(d1, "a - p");
            Complex d2 = 1.0 - a * p;
            require_nonsingular(d2, "1 - a p");
            return cpow(a, -(k - 1)) * cpow(p, -(k - 1)) * ((cpow(a, k) - cpow(p, k)) / d1) *
                   ((1.0 - cpow(a, k) * cpow(p, k)) / d2);
        }
    }
    throw std::logic_error("twist_seq_closed: unreachable");
}

}  // namespace tkm
