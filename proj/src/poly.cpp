#include "utq/poly.hpp"

#include <stdexcept>

namespace utq {

IntPolynomial IntPolynomial::constant(Var v, Int k) {
    IntPolynomial p(v);
    if (k != 0) p.c_ = {std::move(k)};
    return p;
}

IntPolynomial IntPolynomial::monomial(Var v, Int coeff, std::size_t deg) {
    IntPolynomial p(v);
    if (coeff != 0) {
        p.c_.assign(deg + 1, Int(0));
        p.c_[deg] = std::move(coeff);
    }
    return p;
}

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (var_ != o.var_ && !o.is_zero() && !is_zero())
        throw std::invalid_argument("polynomial basis mismatch");
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (var_ != o.var_ && !o.is_zero() && !is_zero())
        throw std::invalid_argument("polynomial basis mismatch");
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    IntPolynomial r = *this;
    r += o;
    return r;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    IntPolynomial r = *this;
    r -= o;
    return r;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (var_ != o.var_ && !o.is_zero() && !is_zero())
        throw std::invalid_argument("polynomial basis mismatch");
    if (is_zero() || o.is_zero()) return IntPolynomial(var_);
    IntPolynomial r(var_);
    r.c_.assign(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] += c_[i] * o.c_[j];
    r.trim();
    return r;
}

IntPolynomial IntPolynomial::operator*(const Int& k) const {
    IntPolynomial r = *this;
    if (k == 0) { r.c_.clear(); return r; }
    for (auto& c : r.c_) c *= k;
    return r;
}

Int IntPolynomial::eval(const Int& v) const {
    Int acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
    return acc;
}

Int IntPolynomial::eval_at_q(const Int& q) const {
    switch (var_) {
        case Var::q: return eval(q);
        case Var::qm1: return eval(q - 1);
        case Var::x: throw std::invalid_argument("eval_at_q on x-polynomial");
    }
    return 0;
}

IntPolynomial IntPolynomial::derivative() const {
    IntPolynomial r(var_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * i;
    r.trim();
    return r;
}

namespace {

// substitute var -> (var' + shift), returning coefficients in var'
std::vector<Int> shift_var(const std::vector<Int>& c, int shift) {
    std::vector<Int> out;
    for (std::size_t i = c.size(); i-- > 0;) {
        // Horner step: out = out*(t + shift) + c[i]
        out.push_back(Int(0));
        for (std::size_t j = out.size(); j-- > 1;)
            out[j] = out[j - 1] + out[j] * shift;
        out[0] = out[0] * shift + c[i];
    }
    return out;
}

}  // namespace

IntPolynomial IntPolynomial::to_q_basis() const {
    if (var_ == Var::q) return *this;
    if (var_ == Var::x) throw std::invalid_argument("x-polynomials have no q basis");
    // p(q-1): substitute (q-1) -> (q - 1), i.e. t = q + (-1)
    IntPolynomial r(Var::q);
    r.c_ = shift_var(c_, -1);
    r.trim();
    return r;
}

IntPolynomial IntPolynomial::to_qm1_basis() const {
    if (var_ == Var::qm1) return *this;
    if (var_ == Var::x) throw std::invalid_argument("x-polynomials have no q-1 basis");
    IntPolynomial r(Var::qm1);
    r.c_ = shift_var(c_, 1);
    r.trim();
    return r;
}

bool IntPolynomial::nonnegative_coeffs() const {
    for (const auto& c : c_)
        if (c < 0) return false;
    return true;
}

std::string IntPolynomial::str() const {
    if (c_.empty()) return "0";
    const char* name = var_ == Var::q ? "q" : var_ == Var::qm1 ? "(q-1)" : "x";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Int a = c_[i];
        if (!s.empty()) {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        } else if (a < 0) {
            s += "-";
            a = -a;
        }
        if (i == 0) {
            s += a.str();
        } else {
            if (a != 1) { s += a.str(); s += "*"; }
            s += name;
            if (i > 1) { s += "^"; s += std::to_string(i); }
        }
    }
    return s;
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace utq
