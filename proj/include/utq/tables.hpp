#pragma once

// Checked-in appendix data (the Ntilde_{n,e} table, the f_{e,i} table, and
// fixture polynomials) plus the small combinatorial number families they are
// cross-checked against.

#include "utq/poly.hpp"

#include <map>
#include <string>

namespace utq {

inline constexpr int kMaxTabulatedE = 8;

struct AppendixTables {
    // (n,e) -> Ntilde_{n,e} in the q-1 basis; only nonzero entries stored
    std::map<std::pair<int, int>, IntPolynomial> tilde;
    // (e,i) -> f_{e,i} in x
    std::map<std::pair<int, int>, IntPolynomial> fcoeffs;
    // fixtures: (key,e) -> polynomial (ex13, lambda13, n14, n15, n16)
    std::map<std::pair<std::string, int>, IntPolynomial> extra;

    // Ntilde_{n,e}: stored entry, or zero when the tables certify vanishing.
    // Throws for e > 8 (no data) and for n < 1.
    IntPolynomial tilde_lookup(int n, int e) const;

    const IntPolynomial& f_poly(int e, int i) const;
    const IntPolynomial& extra_poly(const std::string& key, int e) const;
};

// Loads (once) from the data directory: $UTQ_DATA_DIR if set, else the
// compiled-in source path.  Verifies the SHA-256 manifest and validates row
// shapes. Throws on any mismatch.
const AppendixTables& appendix();

// --- number families -------------------------------------------------------

Int bell_number(int n);
Int catalan_number(int n);
Int narayana(int m, int k);          // (1/k) C(m-1,k-1) C(m,k-1)
Int max_degree_exponent(int n);      // floor(n/2) floor((n-1)/2)
Int a_triangle(int n, int k);
Int b_triangle(int n, int k);
int c_coeff(int e, int i);           // max(e-i+1, i-e)

}  // namespace utq
