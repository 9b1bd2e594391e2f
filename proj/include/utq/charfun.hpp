#pragma once

// Exact Q(zeta_p)-valued class functions on small algebra groups: theta_lambda,
// Kirillov functions, supercharacters, and exact inner products.  No floating
// point anywhere; values are rational combinations of p-th roots of unity.

#include "utq/nilalg.hpp"
#include "utq/orbit.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace utq {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Element of Q(zeta_p) in the basis 1, zeta, ..., zeta^{p-2} (the coordinate
// of zeta^{p-1} is eliminated through 1 + zeta + ... + zeta^{p-1} = 0).
class Cyclotomic {
public:
    explicit Cyclotomic(int p);
    static Cyclotomic rational(int p, const Rational& r);
    static Cyclotomic zeta_pow(int p, int k);

    int p() const { return p_; }
    const std::vector<Rational>& coords() const { return c_; }

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator*(const Rational& r) const;
    Cyclotomic conj() const;
    bool operator==(const Cyclotomic& o) const { return p_ == o.p_ && c_ == o.c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;   // throws when not rational

    std::string str() const;

private:
    static Cyclotomic from_group_ring(int p, std::vector<Rational> redundant);
    int p_;
    std::vector<Rational> c_;   // length p-1
};

inline constexpr uint64_t kClassFunctionCap = uint64_t(1) << 16;
inline constexpr uint64_t kStreamingInnerCap = uint64_t(1) << 20;

// Dense class-function table on G = 1 + n, stored as one integer cyclotomic
// (length-p group-ring coordinates) per group element plus a global rational
// scale.
class ClassFunction {
public:
    const NilpotentAlgebra* algebra() const { return alg_; }
    uint64_t size() const { return table_.size() / p_; }
    Cyclotomic value(uint64_t g_state) const;
    Cyclotomic at_one() const { return value(0); }
    bool constant_on_conjugacy_classes() const;

private:
    friend ClassFunction theta_fn(const NilpotentAlgebra&, const LinearFunctional&, int);
    friend ClassFunction orbit_sum_fn(const NilpotentAlgebra&, const std::vector<uint64_t>&,
                                      const Rational&, int);
    friend Cyclotomic inner_product(const ClassFunction&, const ClassFunction&);

    const NilpotentAlgebra* alg_ = nullptr;
    int p_ = 2;
    Rational scale_ = 1;
    std::vector<int64_t> table_;   // flat [state*p + r], redundant group-ring coords
};

// theta_lambda(1+x) = zeta_p^(multiplier * tr(lambda(x)))
ClassFunction theta_fn(const NilpotentAlgebra& a, const LinearFunctional& lam,
                       int theta_multiplier = 1);

// scale * sum of theta_mu over the given functional states
ClassFunction orbit_sum_fn(const NilpotentAlgebra& a, const std::vector<uint64_t>& orbit,
                           const Rational& scale, int theta_multiplier = 1);

ClassFunction kirillov_fn(const NilpotentAlgebra& a, const LinearFunctional& lam,
                          uint64_t cap = kClassFunctionCap, int theta_multiplier = 1);
ClassFunction superchar_fn(const NilpotentAlgebra& a, const LinearFunctional& lam,
                           uint64_t cap = kClassFunctionCap, int theta_multiplier = 1);

Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& g);

// Streaming inner product of two orbit-sum functions scale * sum theta_mu for
// groups too large for dense tables (prime q only, |G| <= kStreamingInnerCap).
Cyclotomic inner_product_orbit_sums(const NilpotentAlgebra& a,
                                    const std::vector<uint64_t>& orbit_f, const Rational& scale_f,
                                    const std::vector<uint64_t>& orbit_g, const Rational& scale_g);

}  // namespace utq
