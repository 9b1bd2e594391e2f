#pragma once

// Exact integer polynomials in a tagged variable: q, q-1, or x.  Basis
// conversion between q and q-1 is exact and involutive.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace utq {

using Int = boost::multiprecision::cpp_int;

enum class Var { q, qm1, x };

class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(Var v) : var_(v) {}
    IntPolynomial(Var v, std::vector<Int> coeffs) : var_(v), c_(std::move(coeffs)) { trim(); }

    static IntPolynomial constant(Var v, Int k);
    static IntPolynomial monomial(Var v, Int coeff, std::size_t deg);

    Var var() const { return var_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return int(c_.size()) - 1; }   // -1 for zero
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    Int leading() const { return c_.empty() ? Int(0) : c_.back(); }

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const Int& k) const;
    bool operator==(const IntPolynomial& o) const { return var_ == o.var_ && c_ == o.c_; }

    Int eval(const Int& v) const;

    // value after substituting var = q for a numeric q (identical for tag q;
    // shifts by one for tag q-1)
    Int eval_at_q(const Int& q) const;

    IntPolynomial derivative() const;

    // exact change of basis between q and q-1 (identity on tag x)
    IntPolynomial to_q_basis() const;
    IntPolynomial to_qm1_basis() const;

    bool nonnegative_coeffs() const;

    std::string str() const;

private:
    void trim();
    Var var_ = Var::q;
    std::vector<Int> c_;   // c_[i] = coefficient of var^i
};

Int binomial(unsigned n, unsigned k);
Int factorial(unsigned n);

}  // namespace utq
