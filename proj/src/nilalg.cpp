#include "utq/nilalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace utq {

NilpotentAlgebra::NilpotentAlgebra(const Field& f, std::size_t dim, std::vector<BasisLabel> labels)
    : field_(&f), dim_(dim), labels_(std::move(labels)) {
    if (labels_.size() != dim_) throw std::invalid_argument("label count mismatch");
    prod_.assign(dim_ * dim_, FqVector(f, dim_));
}

FqVector NilpotentAlgebra::multiply(const FqVector& x, const FqVector& y) const {
    const Field& F = *field_;
    FqVector out(F, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (!x[i]) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (!y[j]) continue;
            uint8_t c = F.mul(x[i], y[j]);
            out.add_scaled(prod_[i * dim_ + j], c);
        }
    }
    return out;
}

FqVector NilpotentAlgebra::unit_vec(std::size_t i) const {
    FqVector v(*field_, dim_);
    v[i] = 1;
    return v;
}

std::optional<std::size_t> NilpotentAlgebra::index_of(int i, int j) const {
    for (std::size_t k = 0; k < dim_; ++k)
        if (!labels_[k].is_z && labels_[k].i == i && labels_[k].j == j) return k;
    return std::nullopt;
}

std::optional<std::size_t> NilpotentAlgebra::z_index() const {
    for (std::size_t k = 0; k < dim_; ++k)
        if (labels_[k].is_z) return k;
    return std::nullopt;
}

bool NilpotentAlgebra::is_associative() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            const FqVector& ij = basis_product(i, j);
            for (std::size_t k = 0; k < dim_; ++k) {
                FqVector left = multiply(ij, unit_vec(k));
                FqVector right = multiply(unit_vec(i), basis_product(j, k));
                if (!(left == right)) return false;
            }
        }
    return true;
}

int NilpotentAlgebra::nilpotency_index() const {
    // power chain n >= n^2 >= ... via spanning sets
    std::vector<FqVector> cur;
    for (std::size_t i = 0; i < dim_; ++i) cur.push_back(unit_vec(i));
    Subspace powerspace = make_subspace(*field_, cur, dim_);
    int k = 1;
    while (powerspace.dim() > 0) {
        if (k > int(dim_) + 1) throw std::runtime_error("algebra is not nilpotent");
        std::vector<FqVector> next;
        for (std::size_t r = 0; r < powerspace.dim(); ++r)
            for (std::size_t i = 0; i < dim_; ++i)
                next.push_back(multiply(powerspace.basis.row(r), unit_vec(i)));
        powerspace = make_subspace(*field_, next, dim_);
        ++k;
    }
    return k;
}

std::string NilpotentAlgebra::dump() const {
    std::string s = std::to_string(dim_) + " " + std::to_string(field_->q()) + "\n";
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            const FqVector& p = basis_product(i, j);
            if (p.is_zero()) continue;
            s += std::to_string(i) + " " + std::to_string(j) + " ->";
            for (std::size_t k = 0; k < dim_; ++k) s += " " + std::to_string(int(p[k]));
            s += "\n";
        }
    return s;
}

NilpotentAlgebra build_un(int n, const Field& f) {
    if (n < 1) throw std::invalid_argument("build_un: n >= 1 required");
    std::vector<BasisLabel> labels;
    std::map<std::pair<int, int>, std::size_t> idx;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            idx[{i, j}] = labels.size();
            labels.push_back({i, j, false});
        }
    NilpotentAlgebra A(f, labels.size(), labels);
    for (std::size_t a = 0; a < A.dim(); ++a)
        for (std::size_t b = 0; b < A.dim(); ++b) {
            const BasisLabel& la = labels[a];
            const BasisLabel& lb = labels[b];
            if (la.j == lb.i) {
                FqVector v = A.zero();
                v[idx[{la.i, lb.j}]] = 1;
                A.set_basis_product(a, b, std::move(v));
            }
        }
    return A;
}

NilpotentAlgebra build_crossing(const SetPartition& p, const Field& f, bool extended) {
    CrossingData cd = crossing_data(p);
    std::set<std::pair<int, int>> cr(cd.crossing_pairs.begin(), cd.crossing_pairs.end());
    std::set<std::pair<int, int>> arcs;
    for (auto a : arc_set(p).arcs) arcs.insert(a);

    std::vector<BasisLabel> labels;
    std::map<std::pair<int, int>, std::size_t> idx;
    for (auto [i, j] : cr) {
        idx[{i, j}] = labels.size();
        labels.push_back({i, j, false});
    }
    std::size_t zpos = labels.size();
    if (extended) labels.push_back({0, 0, true});

    NilpotentAlgebra A(f, labels.size(), labels);
    for (auto [i, j] : cr)
        for (auto [k, l] : cr) {
            if (j != k) continue;
            FqVector v = A.zero();
            if (cr.count({i, l})) v[idx[{i, l}]] = 1;
            else if (extended && arcs.count({i, l})) v[zpos] = 1;
            else continue;
            A.set_basis_product(idx[{i, j}], idx[{k, l}], std::move(v));
        }
    return A;
}

bool is_closed_pattern(int n, const std::set<std::pair<int, int>>& P) {
    for (auto [i, j] : P) {
        if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("bad pattern position");
        for (auto [k, l] : P)
            if (j == k && !P.count({i, l})) return false;
    }
    return true;
}

NilpotentAlgebra build_pattern(int n, const std::set<std::pair<int, int>>& P, const Field& f) {
    if (!is_closed_pattern(n, P))
        throw std::invalid_argument("pattern is not multiplicatively closed");
    std::vector<BasisLabel> labels;
    std::map<std::pair<int, int>, std::size_t> idx;
    for (auto [i, j] : P) {
        idx[{i, j}] = labels.size();
        labels.push_back({i, j, false});
    }
    NilpotentAlgebra A(f, labels.size(), labels);
    for (auto [i, j] : P)
        for (auto [k, l] : P) {
            if (j != k) continue;
            FqVector v = A.zero();
            v[idx[{i, l}]] = 1;
            A.set_basis_product(idx[{i, j}], idx[{k, l}], std::move(v));
        }
    return A;
}

SetPartition pattern_to_partition(int n, const std::set<std::pair<int, int>>& P) {
    // i < j: i precedes j iff (i,j) in P; j < i: i precedes j iff (j,i) not in P.
    // Valid iff this tournament is a total order, iff the scores are distinct.
    std::vector<int> score(n + 1, 0);
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i) {
            if (i == j) continue;
            bool precedes = i < j ? P.count({i, j}) > 0 : P.count({j, i}) == 0;
            if (precedes) ++score[j];
        }
    std::vector<bool> seen(n, false);
    for (int j = 1; j <= n; ++j) {
        if (seen[score[j]])
            throw std::invalid_argument("pattern and complement are not both closed");
        seen[score[j]] = true;
    }
    std::vector<std::vector<int>> blocks;
    for (int j = 1; j <= n; ++j)
        blocks.push_back({j, n + score[j] + 1});
    return SetPartition::from_blocks(std::move(blocks));
}

uint8_t LinearFunctional::operator()(const FqVector& x) const {
    const Field& F = algebra->field();
    uint8_t acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        acc = F.add(acc, F.mul(values[i], x[i]));
    return acc;
}

LinearFunctional quasi_monomial_functional(const NilpotentAlgebra& un, const SetPartition& shape,
                                           const std::vector<uint8_t>& coeffs) {
    auto arcs = arc_set(shape).arcs;
    if (!coeffs.empty() && coeffs.size() != arcs.size())
        throw std::invalid_argument("coefficient count must match the arc count");
    LinearFunctional lam{&un, FqVector(un.field(), un.dim())};
    for (std::size_t t = 0; t < arcs.size(); ++t) {
        uint8_t c = coeffs.empty() ? uint8_t(1) : coeffs[t];
        if (c == 0) throw std::invalid_argument("arc coefficients must be nonzero");
        auto idx = un.index_of(arcs[t].first, arcs[t].second);
        if (!idx) throw std::invalid_argument("arc position outside the algebra");
        lam.values[*idx] = c;
    }
    return lam;
}

bool Subspace::contains(const FqVector& v) const {
    return reduce_by_rref(basis, pivots, v).is_zero();
}

Subspace make_subspace(const Field& f, std::vector<FqVector> spanning, std::size_t ambient_dim) {
    FqMatrix M(f, spanning.size(), ambient_dim);
    for (std::size_t i = 0; i < spanning.size(); ++i) M.set_row(i, spanning[i]);
    std::vector<std::size_t> piv;
    std::size_t r = rref(M, &piv);
    Subspace s;
    s.basis = FqMatrix(f, r, ambient_dim);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < ambient_dim; ++j) s.basis.at(i, j) = M.at(i, j);
    s.pivots = std::move(piv);
    return s;
}

FunctionalSubspaces functional_subspaces(const NilpotentAlgebra& a, const LinearFunctional& lam) {
    const Field& F = a.field();
    std::size_t d = a.dim();
    // B[i][j] = lambda(e_i e_j)
    FqMatrix B(F, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            B.at(i, j) = lam(a.basis_product(i, j));

    FunctionalSubspaces out;
    FqMatrix lk = left_kernel(B);
    out.l = make_subspace(F, [&] {
        std::vector<FqVector> rows;
        for (std::size_t i = 0; i < lk.rows; ++i) rows.push_back(lk.row(i));
        return rows;
    }(), d);

    // s = left kernel of B restricted to columns spanning l
    FqMatrix Bl(F, d, out.l.dim());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t m = 0; m < out.l.dim(); ++m) {
            uint8_t acc = 0;
            for (std::size_t j = 0; j < d; ++j)
                acc = F.add(acc, F.mul(B.at(i, j), out.l.basis.at(m, j)));
            Bl.at(i, m) = acc;
        }
    FqMatrix sk = left_kernel(Bl);
    out.s = make_subspace(F, [&] {
        std::vector<FqVector> rows;
        for (std::size_t i = 0; i < sk.rows; ++i) rows.push_back(sk.row(i));
        return rows;
    }(), d);

    // k = l intersect ker(lambda)
    FqMatrix lamrow(F, 1, d);
    for (std::size_t j = 0; j < d; ++j) lamrow.at(0, j) = lam.values[j];
    FqMatrix kerlam = kernel(lamrow);
    FqMatrix inter = intersect_subspaces(out.l.basis, kerlam);
    out.k = make_subspace(F, [&] {
        std::vector<FqVector> rows;
        for (std::size_t i = 0; i < inter.rows; ++i) rows.push_back(inter.row(i));
        return rows;
    }(), d);
    return out;
}

FqVector SubalgebraResult::coords_of(const FqVector& ambient) const {
    std::vector<uint8_t> coeffs;
    FqVector rem = reduce_by_rref(space.basis, space.pivots, ambient, &coeffs);
    if (!rem.is_zero()) throw std::invalid_argument("vector outside subalgebra");
    FqVector out(algebra.field(), space.dim());
    for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] = coeffs[i];
    return out;
}

SubalgebraResult subalgebra(const NilpotentAlgebra& a, const Subspace& s) {
    const Field& F = a.field();
    std::size_t d = s.dim();
    std::vector<BasisLabel> labels(d);
    for (std::size_t i = 0; i < d; ++i) {
        // label by the pivot position's ambient label
        labels[i] = a.label(s.pivots[i]);
    }
    SubalgebraResult out{NilpotentAlgebra(F, d, labels), s};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            FqVector prod = a.multiply(s.basis.row(i), s.basis.row(j));
            std::vector<uint8_t> coeffs;
            FqVector rem = reduce_by_rref(s.basis, s.pivots, prod, &coeffs);
            if (!rem.is_zero())
                throw std::invalid_argument("subspace is not multiplicatively closed");
            FqVector v(F, d);
            for (std::size_t t = 0; t < d; ++t) v[t] = coeffs[t];
            out.algebra.set_basis_product(i, j, std::move(v));
        }
    return out;
}

FqVector QuotientResult::project(const FqVector& ambient) const {
    FqVector rem = reduce_by_rref(ideal.basis, ideal.pivots, ambient);
    FqVector out(algebra.field(), rep_coords.size());
    for (std::size_t t = 0; t < rep_coords.size(); ++t) out[t] = rem[rep_coords[t]];
    return out;
}

QuotientResult quotient(const NilpotentAlgebra& a, const Subspace& ideal) {
    const Field& F = a.field();
    std::size_t d = a.dim();
    // two-sided ideal check
    for (std::size_t r = 0; r < ideal.dim(); ++r) {
        FqVector v = ideal.basis.row(r);
        for (std::size_t i = 0; i < d; ++i) {
            if (!ideal.contains(a.multiply(a.unit_vec(i), v)) ||
                !ideal.contains(a.multiply(v, a.unit_vec(i))))
                throw std::invalid_argument("subspace is not a two-sided ideal");
        }
    }
    std::vector<bool> ispivot(d, false);
    for (auto p : ideal.pivots) ispivot[p] = true;
    std::vector<std::size_t> reps;
    for (std::size_t c = 0; c < d; ++c)
        if (!ispivot[c]) reps.push_back(c);

    std::vector<BasisLabel> labels;
    for (auto c : reps) labels.push_back(a.label(c));
    QuotientResult out{NilpotentAlgebra(F, reps.size(), labels), ideal, reps};
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j) {
            FqVector prod = a.multiply(a.unit_vec(reps[i]), a.unit_vec(reps[j]));
            out.algebra.set_basis_product(i, j, out.project(prod));
        }
    return out;
}

bool iso_check(const NilpotentAlgebra& A, const NilpotentAlgebra& B, const FqMatrix& M) {
    if (A.dim() != B.dim() || M.rows != A.dim() || M.cols != B.dim()) return false;
    if (rank(M) != A.dim()) return false;
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j) {
            FqVector lhs = vec_mat(A.basis_product(i, j), M);   // phi(e_i e_j)
            FqVector rhs = B.multiply(M.row(i), M.row(j));
            if (!(lhs == rhs)) return false;
        }
    return true;
}

}  // namespace utq
