#include "tkmoves/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tkm {

LaurentPoly::LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
    if (vars_.empty() || vars_.size() > 2)
        throw std::invalid_argument("LaurentPoly supports one or two variables");
}

LaurentPoly LaurentPoly::constant(std::vector<std::string> vars, BigInt c) {
    LaurentPoly p(std::move(vars));
    if (c != 0) p.terms_[Exps(p.vars_.size(), 0)] = std::move(c);
    return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> vars, Exps exps, BigInt coeff) {
    LaurentPoly p(std::move(vars));
    if (exps.size() != p.vars_.size())
        throw std::invalid_argument("monomial: exponent vector length mismatch");
    if (coeff != 0) p.terms_[std::move(exps)] = std::move(coeff);
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exps(vars_.size(), 0) &&
           terms_.begin()->second == 1;
}

void LaurentPoly::add_term(const Exps& exps, const BigInt& coeff) {
    if (exps.size() != vars_.size())
        throw std::invalid_argument("add_term: exponent vector length mismatch");
    if (coeff == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

static void require_same_vars(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.vars() != q.vars())
        throw std::invalid_argument("variable-list mismatch between polynomials");
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& q) const {
    require_same_vars(*this, q);
    LaurentPoly r = *this;
    for (const auto& [e, c] : q.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& q) const {
    require_same_vars(*this, q);
    LaurentPoly r = *this;
    for (const auto& [e, c] : q.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
    require_same_vars(*this, q);
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) {
    require_same_vars(*this, q);
    for (const auto& [e, c] : q.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& q) const {
    require_same_vars(*this, q);
    LaurentPoly r(vars_);
    Exps e(vars_.size());
    for (const auto& [ep, cp] : terms_) {
        for (const auto& [eq, cq] : q.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + eq[i];
            r.add_term(e, cp * cq);
        }
    }
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& q) const {
    return vars_ == q.vars_ && terms_ == q.terms_;
}

LaurentPoly LaurentPoly::pow(int n) const {
    if (n < 0) throw std::invalid_argument("pow: negative exponent");
    LaurentPoly r = constant(vars_, 1);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

int LaurentPoly::var_index(const std::string& var) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == var) return static_cast<int>(i);
    throw std::invalid_argument("unknown variable '" + var + "'");
}

LaurentPoly LaurentPoly::substitute(const std::string& var, const LaurentPoly& image) const {
    int vi = var_index(var);

    // The variable survives only if the image's terms actually use it.
    bool image_uses_var = false;
    for (size_t i = 0; i < image.vars().size(); ++i) {
        if (image.vars()[i] != var) continue;
        for (const auto& [e, c] : image.terms()) {
            (void)c;
            if (e[i] != 0) image_uses_var = true;
        }
    }

    // Result variable list: keep `var` only if the image still mentions it.
    std::vector<std::string> rvars;
    for (const auto& v : vars_)
        if (v != var || image_uses_var) rvars.push_back(v);
    for (const auto& v : image.vars()) {
        if (v == var && !image_uses_var) continue;
        if (std::find(rvars.begin(), rvars.end(), v) == rvars.end()) rvars.push_back(v);
    }
    if (rvars.empty() || rvars.size() > 2)
        throw std::invalid_argument("substitute: resulting variable list not supported");

    // Lift the image into the result variable list.
    LaurentPoly img(rvars);
    for (const auto& [e, c] : image.terms()) {
        Exps re(rvars.size(), 0);
        for (size_t i = 0; i < image.vars().size(); ++i) {
            auto it = std::find(rvars.begin(), rvars.end(), image.vars()[i]);
            if (it == rvars.end()) {
                if (e[i] != 0) throw std::logic_error("substitute: dropped variable in use");
                continue;
            }
            re[it - rvars.begin()] = e[i];
        }
        img.add_term(re, c);
    }

    bool unit_image = image.terms().size() == 1 &&
                      (image.terms().begin()->second == 1 || image.terms().begin()->second == -1);
    LaurentPoly img_inv(rvars);
    if (unit_image) {
        Exps re(rvars.size(), 0);
        const auto& [e, c] = *image.terms().begin();
        for (size_t i = 0; i < image.vars().size(); ++i) {
            auto it = std::find(rvars.begin(), rvars.end(), image.vars()[i]);
            if (it == rvars.end()) continue;
            re[it - rvars.begin()] = -e[i];
        }
        img_inv.add_term(re, c);  // (+-m)^-1 = +-m^-1 for unit monomials
    }

    LaurentPoly result(rvars);
    for (const auto& [e, c] : terms_) {
        int k = e[vi];
        if (k < 0 && !unit_image)
            throw std::invalid_argument("non-invertible image substituted into negative exponent");
        // The term with `var` removed (or zeroed).
        Exps re(rvars.size(), 0);
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (static_cast<int>(i) == vi && !image_uses_var) continue;
            auto it = std::find(rvars.begin(), rvars.end(), vars_[i]);
            re[it - rvars.begin()] = (static_cast<int>(i) == vi) ? 0 : e[i];
        }
        LaurentPoly term = LaurentPoly::monomial(rvars, re, c);
        LaurentPoly power = k >= 0 ? img.pow(k) : img_inv.pow(-k);
        result += term * power;
    }
    return result;
}

Complex LaurentPoly::eval(const ComplexPoint& pt) const {
    std::vector<Complex> vals(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = pt.assignments.find(vars_[i]);
        if (it == pt.assignments.end())
            throw std::invalid_argument("eval: variable '" + vars_[i] + "' unassigned");
        vals[i] = it->second;
        if (vals[i] == Complex(0.0, 0.0) && min_exp(vars_[i]) < 0)
            throw std::invalid_argument("eval: zero assigned to '" + vars_[i] +
                                        "' which occurs with negative exponent");
    }
    Complex acc(0.0, 0.0);
    for (const auto& [e, c] : terms_) {
        Complex t(c.convert_to<double>(), 0.0);
        for (size_t i = 0; i < vals.size(); ++i) {
            t *= std::pow(vals[i], e[i]);
        }
        acc += t;
    }
    return acc;
}

int LaurentPoly::min_exp(const std::string& var) const {
    int vi = var_index(var);
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        (void)c;
        if (first || e[vi] < m) m = e[vi];
        first = false;
    }
    return m;
}

int LaurentPoly::max_exp(const std::string& var) const {
    int vi = var_index(var);
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        (void)c;
        if (first || e[vi] > m) m = e[vi];
        first = false;
    }
    return m;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt abs_c = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        // Coefficient binds to the first variable piece: "2a^-2", "a^-2 z^2".
        bool all_zero = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
        if (abs_c != 1 || all_zero) out << abs_c.str();
        bool first_var = true;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first_var) out << " ";
            first_var = false;
            out << vars_[i];
            if (e[i] != 1) out << "^" << e[i];
        }
    }
    return out.str();
}

std::string LaurentPoly::json() const {
    std::ostringstream out;
    out << "{\"vars\":[";
    for (size_t i = 0; i < vars_.size(); ++i) out << (i ? "," : "") << "\"" << vars_[i] << "\"";
    out << "],\"terms\":[";
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << ",";
        first = false;
        out << "{\"exps\":[";
        for (size_t i = 0; i < e.size(); ++i) out << (i ? "," : "") << e[i];
        out << "],\"coeff\":\"" << c.str() << "\"}";
    }
    out << "]}";
    return out.str();
}

bool approx_equal(const Complex& a, const Complex& b, double rel_tol, double abs_tol) {
    double d = std::abs(a - b);
    double scale = std::max(std::abs(a), std::abs(b));
    return d <= abs_tol || d <= rel_tol * scale;
}

}  // namespace tkm
