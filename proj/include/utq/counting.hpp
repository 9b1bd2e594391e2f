#pragma once

// The assembly layer: N_{n,e}(q) from the Ntilde tables (two routes), the
// closed bivariate formula, the crossing-component product formula, closed
// forms for at most two crossings, and the congruence checks.

#include "utq/orbit.hpp"
#include "utq/poly.hpp"
#include "utq/setpartition.hpp"
#include "utq/tables.hpp"

#include <map>
#include <optional>

namespace utq {

// N_{n,e}(q) assembled from the tilde table with the zero parts collapsed
// into binomial factors; exact polynomial in q.  e <= 8.
IntPolynomial assemble_N(int n, int e);

// the same sum organized composition-by-composition over weak compositions;
// slower, used as an identity check against assemble_N
IntPolynomial assemble_N_compositions(int n, int e);

// N_{n,e}(q) = q^{n-e-2} sum_i (c_{e,i}!/e!) f_{e,i}(n-2e-1) (q-1)^i for n > 2e
IntPolynomial closed_form_N(int n, int e);

struct BivariateFormula {
    int e;
    std::vector<IntPolynomial> f;   // f_{e,1}..f_{e,2e} in x
    IntPolynomial at(int n) const;  // = closed_form_N(n, e)
};
BivariateFormula bivariate_formula(int e);

struct BivariateCheckReport {
    bool degrees_ok = true;
    bool narayana_ok = true;
    bool f1_ok = true;
    bool integrality_ok = true;
    bool agreement_ok = true;
    bool ok() const { return degrees_ok && narayana_ok && f1_ok && integrality_ok && agreement_ok; }
};
BivariateCheckReport bivariate_check(int e);

// brute-force right side of N_{n,e}(q) = sum over shapes (orbit oracle)
Int shape_sum(int n, int e, const Field& f, uint64_t cap = kDefaultOrbitCap);

// full degree profile of u_n(q) via the shape sum, for every e at once
std::map<int, Int> shape_sum_all(int n, const Field& f, uint64_t cap = kDefaultOrbitCap);

// Counts for Lambda via its crossing-connected
// components (factors evaluated by the orbit engine, convolved over weak
// compositions); full map, and single e
std::map<int, Int> product_formula_all(const SetPartition& p, const Field& f,
                                       uint64_t cap = kDefaultOrbitCap);
Int product_formula(const SetPartition& p, int e, const Field& f,
                    uint64_t cap = kDefaultOrbitCap);

// memoized engine counts, keyed by the structure constants of the extended
// crossing algebra (relabeling-invariant)
const LambdaCounts& count_lambda_all_cached(const SetPartition& p, const Field& f,
                                            uint64_t cap = kDefaultOrbitCap);

// closed forms when |Cr| <= 2; nullopt otherwise ("not applicable")
struct PropEvalResult {
    int e;                 // the unique degree with a nonzero count
    IntPolynomial value;   // in q
};
std::optional<PropEvalResult> prop_eval(const SetPartition& p);

bool congruence_check(int n, int e);
Int derivative_at_1(int n, int e);

// A/B-triangle forms of the tilde rows at n = 2e+1 and n = 2e
bool ab_observation_check(int e);

}  // namespace utq
