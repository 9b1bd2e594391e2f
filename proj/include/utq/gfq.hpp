#pragma once

// Arithmetic for small finite fields GF(q), q in {2,3,4,5,7,8,9}, plus dense
// vectors/matrices over them.  Elements are indexed 0..q-1; for q = p^k the
// index is the little-endian base-p encoding of the polynomial-basis
// coordinates, so index arithmetic lines up with the prime-field coordinate
// expansion used by the orbit engine and the character transforms.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace utq {

class Field {
public:
    explicit Field(int q);

    int q() const { return q_; }
    int p() const { return p_; }
    int degree() const { return k_; }       // q = p^k
    int primitive() const { return primitive_; }

    uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_[a * q_ + neg_[b]]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t inv(uint8_t a) const;

    // trace to the prime field, as an integer in [0,p)
    uint8_t trace(uint8_t a) const { return trace_[a]; }

    std::vector<uint8_t> elements() const;

    static const Field& get(int q);          // interned, immutable
    static bool supported(int q);

private:
    int q_, p_, k_;
    int primitive_ = 0;
    std::vector<uint8_t> add_, mul_, neg_, inv_, trace_;
};

struct FqVector {
    const Field* field = nullptr;
    std::vector<uint8_t> e;

    FqVector() = default;
    FqVector(const Field& f, std::size_t n) : field(&f), e(n, 0) {}

    std::size_t size() const { return e.size(); }
    uint8_t operator[](std::size_t i) const { return e[i]; }
    uint8_t& operator[](std::size_t i) { return e[i]; }
    bool is_zero() const;
    bool operator==(const FqVector& o) const { return e == o.e; }

    void add_scaled(const FqVector& v, uint8_t c);   // *this += c*v
};

struct FqMatrix {
    const Field* field = nullptr;
    std::size_t rows = 0, cols = 0;
    std::vector<uint8_t> a;                  // row-major

    FqMatrix() = default;
    FqMatrix(const Field& f, std::size_t r, std::size_t c)
        : field(&f), rows(r), cols(c), a(r * c, 0) {}

    uint8_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    uint8_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }

    FqVector row(std::size_t i) const;
    void set_row(std::size_t i, const FqVector& v);
    FqMatrix transposed() const;
};

FqMatrix mat_mul(const FqMatrix& A, const FqMatrix& B);
FqVector mat_vec(const FqMatrix& A, const FqVector& x);
FqVector vec_mat(const FqVector& x, const FqMatrix& A);

// In-place reduced row echelon form; returns rank.  Pivot columns, if
// requested, come back in order.
std::size_t rref(FqMatrix& A, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(FqMatrix A);

// Right kernel {x : A x = 0} and left kernel {x : x A = 0}, each returned as
// the rows of a matrix in reduced echelon form (canonical bases).
FqMatrix kernel(const FqMatrix& A);
FqMatrix left_kernel(const FqMatrix& A);

// One solution of A x = b, if any.
bool solve(const FqMatrix& A, const FqVector& b, FqVector& x);

// Intersection of the row spaces of U and W, rows in reduced echelon form.
FqMatrix intersect_subspaces(const FqMatrix& U, const FqMatrix& W);

// Reduce v against echelonized basis rows (eliminating the pivot positions);
// the remainder is returned.  coeffs, if given, receives the elimination
// coefficients per row.
FqVector reduce_by_rref(const FqMatrix& basis, const std::vector<std::size_t>& pivots,
                        FqVector v, std::vector<uint8_t>* coeffs = nullptr);

}  // namespace utq
