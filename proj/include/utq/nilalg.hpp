#pragma once

// Nilpotent F_q-algebras as structure-constant tables: u_n(q), the crossing
// algebras C_Lambda(q) and their central extensions, pattern algebras, and
// the functional-derived subquotients.

#include "utq/gfq.hpp"
#include "utq/setpartition.hpp"

#include <optional>
#include <set>
#include <string>

namespace utq {

struct BasisLabel {
    int i = 0, j = 0;
    bool is_z = false;
    std::string str() const { return is_z ? "z" : "e[" + std::to_string(i) + "," + std::to_string(j) + "]"; }
};

class NilpotentAlgebra {
public:
    NilpotentAlgebra(const Field& f, std::size_t dim, std::vector<BasisLabel> labels);

    const Field& field() const { return *field_; }
    std::size_t dim() const { return dim_; }
    const BasisLabel& label(std::size_t i) const { return labels_[i]; }

    const FqVector& basis_product(std::size_t i, std::size_t j) const { return prod_[i * dim_ + j]; }
    void set_basis_product(std::size_t i, std::size_t j, FqVector v) { prod_[i * dim_ + j] = std::move(v); }

    FqVector multiply(const FqVector& x, const FqVector& y) const;
    FqVector zero() const { return FqVector(*field_, dim_); }
    FqVector unit_vec(std::size_t i) const;

    // basis index of the position label (i,j), if present
    std::optional<std::size_t> index_of(int i, int j) const;
    std::optional<std::size_t> z_index() const;

    bool is_associative() const;
    // least k with n^k = 0; throws if the power chain fails to vanish
    int nilpotency_index() const;

    // canonical text dump: "dim q" header then one line per nonzero product
    std::string dump() const;

private:
    const Field* field_;
    std::size_t dim_;
    std::vector<BasisLabel> labels_;
    std::vector<FqVector> prod_;
};

NilpotentAlgebra build_un(int n, const Field& f);
NilpotentAlgebra build_crossing(const SetPartition& p, const Field& f, bool extended);

bool is_closed_pattern(int n, const std::set<std::pair<int, int>>& positions);
NilpotentAlgebra build_pattern(int n, const std::set<std::pair<int, int>>& positions, const Field& f);

// The Lambda of [2n] with Cr(Lambda) equal to the given closed pattern whose
// complement is also closed; throws otherwise.
SetPartition pattern_to_partition(int n, const std::set<std::pair<int, int>>& positions);

struct LinearFunctional {
    const NilpotentAlgebra* algebra = nullptr;
    FqVector values;   // value on each basis element

    uint8_t operator()(const FqVector& x) const;
};

// lambda = sum of coeff_k * e_{ij}^* over the arcs of the shape, on u_n(q).
// coeffs empty means all ones.
LinearFunctional quasi_monomial_functional(const NilpotentAlgebra& un, const SetPartition& shape,
                                           const std::vector<uint8_t>& coeffs = {});

struct Subspace {
    FqMatrix basis;                      // rows, reduced echelon form
    std::vector<std::size_t> pivots;
    std::size_t dim() const { return basis.rows; }
    bool contains(const FqVector& v) const;
};

Subspace make_subspace(const Field& f, std::vector<FqVector> spanning, std::size_t ambient_dim);

struct FunctionalSubspaces {
    Subspace k, l, s;
};
FunctionalSubspaces functional_subspaces(const NilpotentAlgebra& a, const LinearFunctional& lam);

// A multiplicatively closed subspace turned into an algebra in its own
// coordinates; coords_of expresses ambient vectors in the subalgebra basis.
struct SubalgebraResult {
    NilpotentAlgebra algebra;
    Subspace space;
    FqVector coords_of(const FqVector& ambient) const;   // throws if outside
};
SubalgebraResult subalgebra(const NilpotentAlgebra& a, const Subspace& s);

// Quotient by a two-sided ideal (verified); project maps ambient vectors to
// quotient coordinates.
struct QuotientResult {
    NilpotentAlgebra algebra;
    Subspace ideal;
    std::vector<std::size_t> rep_coords;   // ambient coordinates of the representatives
    FqVector project(const FqVector& ambient) const;
};
QuotientResult quotient(const NilpotentAlgebra& a, const Subspace& ideal);

// Does the linear map sending basis i of A to row i of M transport structure
// constants exactly (and is it bijective)?
bool iso_check(const NilpotentAlgebra& A, const NilpotentAlgebra& B, const FqMatrix& M);

}  // namespace utq
