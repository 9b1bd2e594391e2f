#include "utq/charfun.hpp"

#include <stdexcept>

namespace utq {

// ---------------------------------------------------------------------------
// Cyclotomic
// ---------------------------------------------------------------------------

Cyclotomic::Cyclotomic(int p) : p_(p), c_(p - 1, Rational(0)) {
    if (p < 2) throw std::invalid_argument("p must be a prime >= 2");
}

Cyclotomic Cyclotomic::from_group_ring(int p, std::vector<Rational> redundant) {
    // subtract the zeta^{p-1} coordinate from all (1+zeta+...+zeta^{p-1} = 0)
    Cyclotomic out(p);
    const Rational& top = redundant[p - 1];
    for (int i = 0; i < p - 1; ++i) out.c_[i] = redundant[i] - top;
    return out;
}

Cyclotomic Cyclotomic::rational(int p, const Rational& r) {
    Cyclotomic out(p);
    out.c_[0] = r;
    return out;
}

Cyclotomic Cyclotomic::zeta_pow(int p, int k) {
    k = ((k % p) + p) % p;
    std::vector<Rational> red(p, Rational(0));
    red[k] = 1;
    return from_group_ring(p, std::move(red));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    Cyclotomic out(p_);
    for (int i = 0; i < p_ - 1; ++i) out.c_[i] = c_[i] + o.c_[i];
    return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    Cyclotomic out(p_);
    for (int i = 0; i < p_ - 1; ++i) out.c_[i] = c_[i] - o.c_[i];
    return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    std::vector<Rational> red(p_, Rational(0));
    for (int i = 0; i < p_ - 1; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < p_ - 1; ++j) {
            if (o.c_[j] == 0) continue;
            red[(i + j) % p_] += c_[i] * o.c_[j];
        }
    }
    return from_group_ring(p_, std::move(red));
}

Cyclotomic Cyclotomic::operator*(const Rational& r) const {
    Cyclotomic out(p_);
    for (int i = 0; i < p_ - 1; ++i) out.c_[i] = c_[i] * r;
    return out;
}

Cyclotomic Cyclotomic::conj() const {
    std::vector<Rational> red(p_, Rational(0));
    for (int i = 0; i < p_ - 1; ++i) red[(p_ - i) % p_] = c_[i];
    return from_group_ring(p_, std::move(red));
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (int i = 1; i < p_ - 1; ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::domain_error("value is not rational");
    return c_[0];
}

std::string Cyclotomic::str() const {
    std::string s;
    for (int i = 0; i < p_ - 1; ++i) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += " + ";
        s += c_[i].str();
        if (i >= 1) s += "*z^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// pairing helpers
// ---------------------------------------------------------------------------

namespace {

// For each field-element index v, the index whose base-p digits c_m satisfy
// sum_m c_m x_m = tr(v * x) for all x (coordinates in the polynomial basis).
// Identity map for prime fields.
std::vector<uint8_t> trace_remap(const Field& F) {
    int q = F.q(), p = F.p(), k = F.degree();
    std::vector<uint8_t> remap(q);
    for (int v = 0; v < q; ++v) {
        int out = 0, mult = 1;
        uint8_t basis = 1;
        for (int m = 0; m < k; ++m) {
            out += int(F.trace(F.mul(uint8_t(v), basis))) * mult;
            mult *= p;
            basis = F.mul(basis, uint8_t(p));   // next polynomial basis element x^m
        }
        remap[v] = uint8_t(out);
    }
    return remap;
}

// remap every base-q digit of the state
uint64_t remap_state(uint64_t s, int q, int dim, const std::vector<uint8_t>& remap) {
    uint64_t out = 0, mult = 1;
    for (int i = 0; i < dim; ++i) {
        out += uint64_t(remap[s % q]) * mult;
        mult *= q;
        s /= q;
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// ClassFunction
// ---------------------------------------------------------------------------

bool ClassFunction::constant_on_conjugacy_classes() const {
    auto gens = adjoint_steppers(*alg_);
    uint64_t space = size();
    for (uint64_t s = 0; s < space; ++s)
        for (const auto& g : gens) {
            uint64_t t = g.step(s);
            if (t == s) continue;
            for (int r = 0; r < p_; ++r)
                if (table_[s * p_ + r] != table_[t * p_ + r]) return false;
        }
    return true;
}

Cyclotomic ClassFunction::value(uint64_t g_state) const {
    const Rational top = Rational(table_[g_state * p_ + (p_ - 1)]) * scale_;
    Cyclotomic acc =
        Cyclotomic::rational(p_, Rational(table_[g_state * p_]) * scale_ - top);
    for (int i = 1; i < p_ - 1; ++i)
        acc = acc + Cyclotomic::zeta_pow(p_, i) *
                        (Rational(table_[g_state * p_ + i]) * scale_ - top);
    return acc;
}

ClassFunction theta_fn(const NilpotentAlgebra& a, const LinearFunctional& lam,
                       int theta_multiplier) {
    const Field& F = a.field();
    uint64_t space = space_size_checked(a, kClassFunctionCap);
    ClassFunction out;
    out.alg_ = &a;
    out.p_ = F.p();
    out.scale_ = 1;
    out.table_.assign(space * F.p(), 0);
    for (uint64_t s = 0; s < space; ++s) {
        FqVector x = decode_state(F, a.dim(), s);
        int t = int(F.trace(lam(x)));
        out.table_[s * F.p() + (t * theta_multiplier) % F.p()] = 1;
    }
    return out;
}

ClassFunction orbit_sum_fn(const NilpotentAlgebra& a, const std::vector<uint64_t>& orbit,
                           const Rational& scale, int theta_multiplier) {
    const Field& F = a.field();
    const int p = F.p(), q = F.q(), dim = int(a.dim());
    uint64_t space = space_size_checked(a, kClassFunctionCap);

    ClassFunction out;
    out.alg_ = &a;
    out.p_ = p;
    out.scale_ = scale;
    out.table_.assign(space * p, 0);

    // indicator of the orbit, reindexed so that the prime-coordinate pairing
    // computes tr(mu(x)); then one radix-p character transform per axis
    auto remap = trace_remap(F);
    for (uint64_t mu : orbit) {
        uint64_t s = remap_state(mu, q, dim, remap);
        out.table_[s * p + 0] += 1;
    }

    int slots = dim * F.degree();
    std::vector<int64_t> tmp(std::size_t(p) * p);
    uint64_t stride = 1;
    for (int axis = 0; axis < slots; ++axis, stride *= p) {
        for (uint64_t base = 0; base < space; ++base) {
            if ((base / stride) % p != 0) continue;
            // butterfly over the p states base + s*stride
            for (int t = 0; t < p; ++t)
                for (int r = 0; r < p; ++r) {
                    int64_t acc = 0;
                    for (int s = 0; s < p; ++s) {
                        int rr = (r - theta_multiplier * t * s) % p;
                        if (rr < 0) rr += p;
                        acc += out.table_[(base + uint64_t(s) * stride) * p + rr];
                    }
                    tmp[std::size_t(t) * p + r] = acc;
                }
            for (int t = 0; t < p; ++t)
                for (int r = 0; r < p; ++r)
                    out.table_[(base + uint64_t(t) * stride) * p + r] = tmp[std::size_t(t) * p + r];
        }
    }
    return out;
}

namespace {

int integer_log(uint64_t v, int q) {
    int e = 0;
    uint64_t s = 1;
    while (s < v) { s *= q; ++e; }
    if (s != v) throw std::runtime_error("size is not a power of q");
    return e;
}

}  // namespace

ClassFunction kirillov_fn(const NilpotentAlgebra& a, const LinearFunctional& lam, uint64_t cap,
                          int theta_multiplier) {
    auto orbit = coadjoint_orbit_states(a, lam, cap);
    int exp = integer_log(orbit.size(), a.field().q());
    if (exp % 2 != 0) throw std::runtime_error("coadjoint orbit size has odd q-exponent");
    // scale 1/sqrt(|orbit|) = q^{-exp/2}
    Rational scale(1);
    for (int t = 0; t < exp / 2; ++t) scale /= a.field().q();
    ClassFunction psi = orbit_sum_fn(a, orbit, scale, theta_multiplier);
    Cyclotomic deg = psi.at_one();
    Rational expect(1);
    for (int t = 0; t < exp / 2; ++t) expect *= a.field().q();
    if (!deg.is_rational() || deg.rational_value() != expect)
        throw std::runtime_error("Kirillov degree differs from sqrt(orbit size)");
    if (!psi.constant_on_conjugacy_classes())
        throw std::runtime_error("Kirillov function is not a class function");
    return psi;
}

ClassFunction superchar_fn(const NilpotentAlgebra& a, const LinearFunctional& lam, uint64_t cap,
                           int theta_multiplier) {
    SidedOrbitSizes sz = sided_orbits(a, lam, cap);
    auto orbit = two_sided_orbit(a, lam, cap);
    if (orbit.size() != sz.twosided) throw std::runtime_error("two-sided orbit size mismatch");
    if (sz.twosided % sz.left != 0)
        throw std::runtime_error("two-sided orbit size not divisible by left orbit size");
    Rational scale(Rational(sz.left) / Rational(sz.twosided));
    ClassFunction chi = orbit_sum_fn(a, orbit, scale, theta_multiplier);
    Cyclotomic deg = chi.at_one();
    if (!deg.is_rational() || deg.rational_value() != Rational(sz.left))
        throw std::runtime_error("supercharacter degree differs from |G lambda|");
    if (!chi.constant_on_conjugacy_classes())
        throw std::runtime_error("supercharacter is not a class function");
    return chi;
}

Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& g) {
    if (f.algebra() != g.algebra())
        throw std::invalid_argument("inner product requires functions on the same group");
    const int p = f.p_;
    uint64_t space = f.size();
    // integer accumulation of sum_x f(x) * conj(g(x)) in group-ring coordinates
    std::vector<BigInt> acc(p, BigInt(0));
    for (uint64_t s = 0; s < space; ++s) {
        const int64_t* fv = &f.table_[s * p];
        const int64_t* gv = &g.table_[s * p];
        for (int i = 0; i < p; ++i) {
            if (!fv[i]) continue;
            for (int j = 0; j < p; ++j) {
                if (!gv[j]) continue;
                int r = (i - j) % p;
                if (r < 0) r += p;
                acc[r] += BigInt(fv[i]) * gv[j];
            }
        }
    }
    Rational norm = f.scale_ * g.scale_ / Rational(space);
    Cyclotomic out = Cyclotomic::rational(p, Rational(acc[0]) * norm);
    for (int i = 1; i < p; ++i)
        out = out + Cyclotomic::zeta_pow(p, i) * (Rational(acc[i]) * norm);
    return out;
}

Cyclotomic inner_product_orbit_sums(const NilpotentAlgebra& a,
                                    const std::vector<uint64_t>& orbit_f, const Rational& scale_f,
                                    const std::vector<uint64_t>& orbit_g, const Rational& scale_g) {
    const Field& F = a.field();
    if (F.degree() != 1)
        throw std::invalid_argument("streaming inner product supports prime q only");
    const int p = F.p(), dim = int(a.dim());
    uint64_t space = space_size_checked(a, kStreamingInnerCap);

    auto digits_of = [&](uint64_t s) {
        std::vector<uint8_t> d(dim);
        for (int i = 0; i < dim; ++i) { d[i] = uint8_t(s % p); s /= p; }
        return d;
    };
    std::vector<std::vector<uint8_t>> fd, gd;
    for (uint64_t mu : orbit_f) fd.push_back(digits_of(mu));
    for (uint64_t mu : orbit_g) gd.push_back(digits_of(mu));

    // walk x through the group in odometer order, keeping every pairing mu(x)
    // and per-side residue histograms; each odometer carry bumps a digit by
    // +1 mod p (the wrap p-1 -> 0 is also +1)
    std::vector<uint8_t> resf(fd.size(), 0), resg(gd.size(), 0);
    std::vector<int64_t> histf(p, 0), histg(p, 0);
    histf[0] = int64_t(fd.size());
    histg[0] = int64_t(gd.size());
    std::vector<uint8_t> x(dim, 0);
    std::vector<BigInt> acc(p, BigInt(0));
    for (uint64_t step = 0;; ++step) {
        for (int u = 0; u < p; ++u) {
            if (!histf[u]) continue;
            for (int v = 0; v < p; ++v) {
                if (!histg[v]) continue;
                int r = (u - v) % p;
                if (r < 0) r += p;
                acc[r] += BigInt(histf[u]) * histg[v];
            }
        }
        if (step + 1 == space) break;
        for (int d = 0; d < dim; ++d) {
            for (std::size_t i = 0; i < fd.size(); ++i) {
                --histf[resf[i]];
                resf[i] = uint8_t((resf[i] + fd[i][d]) % p);
                ++histf[resf[i]];
            }
            for (std::size_t j = 0; j < gd.size(); ++j) {
                --histg[resg[j]];
                resg[j] = uint8_t((resg[j] + gd[j][d]) % p);
                ++histg[resg[j]];
            }
            if (++x[d] < p) break;
            x[d] = 0;
        }
    }
    Rational norm = scale_f * scale_g / Rational(space);
    Cyclotomic out = Cyclotomic::rational(p, Rational(acc[0]) * norm);
    for (int i = 1; i < p; ++i)
        out = out + Cyclotomic::zeta_pow(p, i) * (Rational(acc[i]) * norm);
    return out;
}

}  // namespace utq
