#include "utq/gfq.hpp"

#include <array>
#include <map>
#include <mutex>

namespace utq {

namespace {

struct FieldSpec {
    int p, k;
    // modulus coefficients c0..ck of the irreducible (monic), low to high
    std::array<int, 4> mod;
};

// Fixed irreducibles so tables are identical across runs:
//   GF(4) = F_2[x]/(x^2+x+1), GF(8) = F_2[x]/(x^3+x+1), GF(9) = F_3[x]/(x^2+1)
bool field_spec(int q, FieldSpec& s) {
    switch (q) {
        case 2: s = {2, 1, {0, 1, 0, 0}}; return true;
        case 3: s = {3, 1, {0, 1, 0, 0}}; return true;
        case 4: s = {2, 2, {1, 1, 1, 0}}; return true;
        case 5: s = {5, 1, {0, 1, 0, 0}}; return true;
        case 7: s = {7, 1, {0, 1, 0, 0}}; return true;
        case 8: s = {2, 3, {1, 1, 0, 1}}; return true;
        case 9: s = {3, 2, {1, 0, 1, 0}}; return true;
        default: return false;
    }
}

std::vector<int> digits_of(int a, int p, int k) {
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i) { d[i] = a % p; a /= p; }
    return d;
}

int index_of(const std::vector<int>& d, int p) {
    int a = 0;
    for (int i = int(d.size()) - 1; i >= 0; --i) a = a * p + d[i];
    return a;
}

}  // namespace

Field::Field(int q) {
    FieldSpec s;
    if (!field_spec(q, s))
        throw std::invalid_argument("unsupported field order " + std::to_string(q));
    q_ = q; p_ = s.p; k_ = s.k;
    add_.resize(q * q); mul_.resize(q * q);
    neg_.resize(q); inv_.assign(q, 0); trace_.resize(q);

    for (int a = 0; a < q; ++a) {
        auto da = digits_of(a, p_, k_);
        for (int b = 0; b < q; ++b) {
            auto db = digits_of(b, p_, k_);
            std::vector<int> sum(k_);
            for (int i = 0; i < k_; ++i) sum[i] = (da[i] + db[i]) % p_;
            add_[a * q + b] = uint8_t(index_of(sum, p_));

            // polynomial product reduced by the modulus
            std::vector<int> prod(2 * k_ - 1, 0);
            for (int i = 0; i < k_; ++i)
                for (int j = 0; j < k_; ++j)
                    prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
            for (int d = 2 * k_ - 2; d >= k_; --d) {
                int c = prod[d];
                if (c == 0) continue;
                prod[d] = 0;
                for (int i = 0; i < k_; ++i)
                    prod[d - k_ + i] = ((prod[d - k_ + i] - c * s.mod[i]) % p_ + p_) % p_;
            }
            prod.resize(k_);
            mul_[a * q + b] = uint8_t(index_of(prod, p_));
        }
        std::vector<int> n(k_);
        for (int i = 0; i < k_; ++i) n[i] = (p_ - da[i]) % p_;
        neg_[a] = uint8_t(index_of(n, p_));
    }
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (mul_[a * q + b] == 1) inv_[a] = uint8_t(b);

    // tr(a) = a + a^p + ... + a^{p^{k-1}}
    for (int a = 0; a < q; ++a) {
        int acc = 0, t = a;
        for (int i = 0; i < k_; ++i) {
            acc = add_[acc * q + t];
            int tp = t;
            for (int j = 1; j < p_; ++j) tp = mul_[tp * q + t];
            t = tp;
        }
        trace_[a] = uint8_t(acc);   // lies in the prime subfield: index == value
    }

    for (int g = 1; g < q; ++g) {
        int seen = 0, t = 1;
        do { t = mul_[t * q + g]; ++seen; } while (t != 1);
        if (seen == q - 1) { primitive_ = g; break; }
    }
}

uint8_t Field::inv(uint8_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return inv_[a];
}

std::vector<uint8_t> Field::elements() const {
    std::vector<uint8_t> v(q_);
    for (int i = 0; i < q_; ++i) v[i] = uint8_t(i);
    return v;
}

const Field& Field::get(int q) {
    static std::mutex m;
    static std::map<int, Field> cache;
    std::lock_guard<std::mutex> lk(m);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, Field(q)).first;
    return it->second;
}

bool Field::supported(int q) {
    FieldSpec s;
    return field_spec(q, s);
}

bool FqVector::is_zero() const {
    for (uint8_t x : e) if (x) return false;
    return true;
}

void FqVector::add_scaled(const FqVector& v, uint8_t c) {
    if (c == 0) return;
    const Field& F = *field;
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = F.add(e[i], F.mul(c, v.e[i]));
}

FqVector FqMatrix::row(std::size_t i) const {
    FqVector v(*field, cols);
    for (std::size_t j = 0; j < cols; ++j) v[j] = at(i, j);
    return v;
}

void FqMatrix::set_row(std::size_t i, const FqVector& v) {
    for (std::size_t j = 0; j < cols; ++j) at(i, j) = v[j];
}

FqMatrix FqMatrix::transposed() const {
    FqMatrix T(*field, cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            T.at(j, i) = at(i, j);
    return T;
}

FqMatrix mat_mul(const FqMatrix& A, const FqMatrix& B) {
    if (A.cols != B.rows) throw std::invalid_argument("mat_mul: dimension mismatch");
    const Field& F = *A.field;
    FqMatrix C(F, A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k) {
            uint8_t aik = A.at(i, k);
            if (!aik) continue;
            for (std::size_t j = 0; j < B.cols; ++j)
                C.at(i, j) = F.add(C.at(i, j), F.mul(aik, B.at(k, j)));
        }
    return C;
}

FqVector mat_vec(const FqMatrix& A, const FqVector& x) {
    if (A.cols != x.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
    const Field& F = *A.field;
    FqVector y(F, A.rows);
    for (std::size_t i = 0; i < A.rows; ++i) {
        uint8_t acc = 0;
        for (std::size_t j = 0; j < A.cols; ++j)
            acc = F.add(acc, F.mul(A.at(i, j), x[j]));
        y[i] = acc;
    }
    return y;
}

FqVector vec_mat(const FqVector& x, const FqMatrix& A) {
    if (A.rows != x.size()) throw std::invalid_argument("vec_mat: dimension mismatch");
    const Field& F = *A.field;
    FqVector y(F, A.cols);
    for (std::size_t i = 0; i < A.rows; ++i) {
        uint8_t xi = x[i];
        if (!xi) continue;
        for (std::size_t j = 0; j < A.cols; ++j)
            y[j] = F.add(y[j], F.mul(xi, A.at(i, j)));
    }
    return y;
}

std::size_t rref(FqMatrix& A, std::vector<std::size_t>* pivots) {
    const Field& F = *A.field;
    std::size_t r = 0;
    if (pivots) pivots->clear();
    for (std::size_t c = 0; c < A.cols && r < A.rows; ++c) {
        std::size_t piv = r;
        while (piv < A.rows && A.at(piv, c) == 0) ++piv;
        if (piv == A.rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < A.cols; ++j)
                std::swap(A.at(piv, j), A.at(r, j));
        uint8_t s = F.inv(A.at(r, c));
        for (std::size_t j = 0; j < A.cols; ++j) A.at(r, j) = F.mul(s, A.at(r, j));
        for (std::size_t i = 0; i < A.rows; ++i) {
            if (i == r) continue;
            uint8_t f = A.at(i, c);
            if (!f) continue;
            for (std::size_t j = 0; j < A.cols; ++j)
                A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(r, j)));
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return r;
}

std::size_t rank(FqMatrix A) { return rref(A); }

FqMatrix kernel(const FqMatrix& A) {
    const Field& F = *A.field;
    FqMatrix R = A;
    std::vector<std::size_t> piv;
    std::size_t r = rref(R, &piv);
    std::vector<bool> ispiv(A.cols, false);
    for (auto c : piv) ispiv[c] = true;
    FqMatrix K(F, A.cols - r, A.cols);
    std::size_t k = 0;
    for (std::size_t c = 0; c < A.cols; ++c) {
        if (ispiv[c]) continue;
        K.at(k, c) = 1;
        for (std::size_t i = 0; i < r; ++i)
            K.at(k, piv[i]) = F.neg(R.at(i, c));
        ++k;
    }
    rref(K);   // canonical form
    return K;
}

FqMatrix left_kernel(const FqMatrix& A) { return kernel(A.transposed()); }

bool solve(const FqMatrix& A, const FqVector& b, FqVector& x) {
    if (A.rows != b.size()) throw std::invalid_argument("solve: dimension mismatch");
    const Field& F = *A.field;
    FqMatrix M(F, A.rows, A.cols + 1);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j) M.at(i, j) = A.at(i, j);
        M.at(i, A.cols) = b[i];
    }
    std::vector<std::size_t> piv;
    std::size_t r = rref(M, &piv);
    for (std::size_t i = 0; i < r; ++i)
        if (piv[i] == A.cols) return false;   // inconsistent
    x = FqVector(F, A.cols);
    for (std::size_t i = 0; i < r; ++i) x[piv[i]] = M.at(i, A.cols);
    return true;
}

FqMatrix intersect_subspaces(const FqMatrix& U, const FqMatrix& W) {
    if (U.cols != W.cols) throw std::invalid_argument("intersect: dimension mismatch");
    const Field& F = *U.field;
    // kernel rows (a | b) of [U^T  W^T] give intersection vectors a U = -b W
    FqMatrix M(F, U.cols, U.rows + W.rows);
    for (std::size_t j = 0; j < U.cols; ++j) {
        for (std::size_t i = 0; i < U.rows; ++i) M.at(j, i) = U.at(i, j);
        for (std::size_t i = 0; i < W.rows; ++i) M.at(j, U.rows + i) = W.at(i, j);
    }
    FqMatrix K = kernel(M);
    FqMatrix I(F, K.rows, U.cols);
    for (std::size_t k = 0; k < K.rows; ++k) {
        FqVector v(F, U.cols);
        for (std::size_t i = 0; i < U.rows; ++i) {
            uint8_t c = K.at(k, i);
            if (!c) continue;
            for (std::size_t j = 0; j < U.cols; ++j)
                v[j] = F.add(v[j], F.mul(c, U.at(i, j)));
        }
        I.set_row(k, v);
    }
    std::size_t r = rref(I);
    FqMatrix out(F, r, U.cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < U.cols; ++j) out.at(i, j) = I.at(i, j);
    return out;
}

FqVector reduce_by_rref(const FqMatrix& basis, const std::vector<std::size_t>& pivots,
                        FqVector v, std::vector<uint8_t>* coeffs) {
    const Field& F = *basis.field;
    if (coeffs) coeffs->assign(basis.rows, 0);
    for (std::size_t i = 0; i < basis.rows; ++i) {
        uint8_t c = v[pivots[i]];
        if (!c) continue;
        if (coeffs) (*coeffs)[i] = c;
        for (std::size_t j = 0; j < basis.cols; ++j)
            v[j] = F.sub(v[j], F.mul(c, basis.at(i, j)));
    }
    return v;
}

}  // namespace utq
