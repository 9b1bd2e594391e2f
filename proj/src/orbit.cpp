#include "utq/orbit.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace utq {

// ---------------------------------------------------------------------------
// group elements
// ---------------------------------------------------------------------------

GroupElement group_identity(const NilpotentAlgebra& a) {
    return {&a, FqVector(a.field(), a.dim())};
}

GroupElement group_mul(const GroupElement& g, const GroupElement& h) {
    const NilpotentAlgebra& A = *g.alg;
    FqVector x = g.x;
    const Field& F = A.field();
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = F.add(x[i], h.x[i]);
    FqVector xy = A.multiply(g.x, h.x);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = F.add(x[i], xy[i]);
    return {&A, std::move(x)};
}

GroupElement group_inv(const GroupElement& g) {
    // geometric series: (1+x)^{-1} = 1 + sum_{t>=1} (-x)^t
    const NilpotentAlgebra& A = *g.alg;
    const Field& F = A.field();
    FqVector minus_x = g.x;
    for (std::size_t i = 0; i < minus_x.size(); ++i) minus_x[i] = F.neg(minus_x[i]);
    FqVector acc = minus_x, power = minus_x;
    for (std::size_t t = 2; t <= A.dim() + 1; ++t) {
        power = A.multiply(power, minus_x);
        if (power.is_zero()) break;
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = F.add(acc[i], power[i]);
    }
    return {&A, std::move(acc)};
}

std::vector<GroupElement> generators(const NilpotentAlgebra& a) {
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (int t = 1; t < a.field().q(); ++t) {
            FqVector x(a.field(), a.dim());
            x[i] = uint8_t(t);
            gens.push_back({&a, std::move(x)});
        }
    return gens;
}

uint64_t closure_size(const NilpotentAlgebra& a, const std::vector<GroupElement>& gens) {
    std::set<std::vector<uint8_t>> seen;
    std::vector<GroupElement> frontier = {group_identity(a)};
    seen.insert(frontier[0].x.e);
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& g : frontier)
            for (const auto& s : gens) {
                GroupElement h = group_mul(g, s);
                if (seen.insert(h.x.e).second) next.push_back(std::move(h));
            }
        frontier = std::move(next);
    }
    return seen.size();
}

// ---------------------------------------------------------------------------
// state encoding
// ---------------------------------------------------------------------------

uint64_t encode_state(const FqVector& v) {
    uint64_t s = 0;
    int q = v.field->q();
    for (std::size_t i = v.size(); i-- > 0;) s = s * q + v[i];
    return s;
}

FqVector decode_state(const Field& f, std::size_t dim, uint64_t s) {
    FqVector v(f, dim);
    for (std::size_t i = 0; i < dim; ++i) { v[i] = uint8_t(s % f.q()); s /= f.q(); }
    return v;
}

// ---------------------------------------------------------------------------
// LinearStepper
// ---------------------------------------------------------------------------

LinearStepper::LinearStepper(const Field& f, const FqMatrix& M)
    : field_(&f), dim_(int(M.rows)), p_(f.p()), k_(f.degree()) {
    if (M.rows != M.cols) throw std::invalid_argument("stepper needs a square matrix");
    slots_ = dim_ * k_;
    char2_ = (p_ == 2);
    mat_ = M;
    if (slots_ == 0 || (char2_ && slots_ > 64)) { generic_ = true; return; }
    build_tables(M);
}

void LinearStepper::build_tables(const FqMatrix& M) {
    const Field& F = *field_;
    // chunk width in prime-field slots, table size p^w <= 4096
    int w = 0;
    uint64_t sz = 1;
    while (w < slots_ && sz * p_ <= 4096) { sz *= p_; ++w; }
    chunk_slots_ = w;
    nchunks_ = (slots_ + w - 1) / w;
    chunk_mod_ = sz;
    chunk_div_.resize(nchunks_);
    uint64_t d = 1;
    for (int c = 0; c < nchunks_; ++c) {
        chunk_div_[c] = d;
        for (int t = 0; t < w; ++t) d *= p_;
    }

    if (!char2_) {
        bits_ = 1;
        while ((1 << bits_) <= nchunks_ * (p_ - 1)) ++bits_;
        if (slots_ * bits_ > 64) { generic_ = true; return; }
        // reduction window: rw slots per lookup, index width rw*bits <= 13
        red_slots_ = std::max(1, 13 / bits_);
        red_slots_ = std::min(red_slots_, slots_);
        red_table_.assign(uint64_t(1) << (red_slots_ * bits_), 0);
        for (uint64_t v = 0; v < red_table_.size(); ++v) {
            uint64_t val = 0, mult = 1;
            for (int t = 0; t < red_slots_; ++t) {
                uint64_t digit = (v >> (t * bits_)) & ((1u << bits_) - 1);
                val += (digit % p_) * mult;
                mult *= p_;
            }
            red_table_[v] = val;
        }
        int nwin = (slots_ + red_slots_ - 1) / red_slots_;
        red_mult_.resize(nwin);
        uint64_t m = 1;
        for (int t = 0; t < nwin; ++t) {
            red_mult_[t] = m;
            for (int j = 0; j < red_slots_; ++j) m *= p_;
        }
    }

    // per-slot image columns: slot b = (digit d, power j) corresponds to the
    // basis vector x^j e_d; its image is column d of M scaled by x^j
    auto encode_image = [&](const FqVector& y) -> uint64_t {
        uint64_t out = 0;
        for (int i = 0; i < dim_; ++i) {
            uint8_t idx = y[i];
            // base-p coordinates of the element index
            for (int m = 0, rem = idx; m < k_; ++m, rem /= p_) {
                int slot = i * k_ + m;
                uint64_t coord = rem % p_;
                if (char2_) out |= coord << slot;
                else out |= coord << (slot * bits_);
            }
        }
        return out;
    };

    std::vector<uint64_t> slot_col(slots_);
    for (int slot = 0; slot < slots_; ++slot) {
        int d = slot / k_, j = slot % k_;
        uint8_t xj = 1;
        for (int t = 0; t < j; ++t) xj = F.mul(xj, uint8_t(p_));   // index p = generator x
        FqVector y(F, dim_);
        for (int i = 0; i < dim_; ++i) y[i] = F.mul(mat_.at(i, d), xj);
        slot_col[slot] = encode_image(y);
    }

    uint64_t bmask = char2_ ? 1 : ((1u << bits_) - 1);
    tables_.assign(nchunks_, {});
    for (int c = 0; c < nchunks_; ++c) {
        int base_slot = c * chunk_slots_;
        int nslots = std::min(chunk_slots_, slots_ - base_slot);
        uint64_t size = 1;
        for (int t = 0; t < nslots; ++t) size *= p_;
        auto& T = tables_[c];
        T.assign(size, 0);
        // incremental fill: strip one unit from the lowest nonzero base-p slot
        std::vector<uint64_t> powp(nslots + 1, 1);
        for (int t = 0; t < nslots; ++t) powp[t + 1] = powp[t] * p_;
        for (uint64_t v = 1; v < size; ++v) {
            int t = 0;
            while ((v / powp[t]) % p_ == 0) ++t;
            uint64_t prev = T[v - powp[t]];
            uint64_t col = slot_col[base_slot + t];
            if (char2_) {
                T[v] = prev ^ col;
            } else {
                // slot-wise sum mod p; a raw integer add could carry between slots
                uint64_t out = 0;
                for (int sslot = 0; sslot < slots_; ++sslot) {
                    uint64_t digit = ((prev >> (sslot * bits_)) & bmask) +
                                     ((col >> (sslot * bits_)) & bmask);
                    if (digit >= uint64_t(p_)) digit -= p_;
                    out |= digit << (sslot * bits_);
                }
                T[v] = out;
            }
        }
    }
}

uint64_t LinearStepper::step_generic(uint64_t s) const {
    FqVector v = decode_state(*field_, dim_, s);
    return encode_state(mat_vec(mat_, v));
}

uint64_t LinearStepper::step(uint64_t s) const {
    if (generic_) return step_generic(s);
    if (char2_) {
        uint64_t r = 0;
        for (int c = 0; c < nchunks_; ++c)
            r ^= tables_[c][(s / chunk_div_[c]) % chunk_mod_];
        return r;
    }
    uint64_t acc = 0;
    for (int c = 0; c < nchunks_; ++c)
        acc += tables_[c][(s / chunk_div_[c]) % chunk_mod_];
    uint64_t out = 0;
    uint64_t rmask = (uint64_t(1) << (red_slots_ * bits_)) - 1;
    int nwin = int(red_mult_.size());
    for (int t = 0; t < nwin; ++t)
        out += red_table_[(acc >> (t * red_slots_ * bits_)) & rmask] * red_mult_[t];
    return out;
}

// ---------------------------------------------------------------------------
// action matrices
// ---------------------------------------------------------------------------

namespace {

// matrix of X -> (1+u) X (1+v)
FqMatrix sandwich_matrix(const NilpotentAlgebra& a, const FqVector& u, const FqVector& v) {
    const Field& F = a.field();
    FqMatrix M(F, a.dim(), a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j) {
        FqVector ej = a.unit_vec(j);
        FqVector img = ej;
        FqVector ue = a.multiply(u, ej);
        FqVector ev = a.multiply(ej, v);
        FqVector uev = a.multiply(ue, v);
        for (std::size_t i = 0; i < a.dim(); ++i)
            img[i] = F.add(F.add(img[i], ue[i]), F.add(ev[i], uev[i]));
        for (std::size_t i = 0; i < a.dim(); ++i) M.at(i, j) = img[i];
    }
    return M;
}

}  // namespace

FqMatrix adjoint_matrix(const NilpotentAlgebra& a, const GroupElement& g) {
    GroupElement gi = group_inv(g);
    return sandwich_matrix(a, g.x, gi.x);       // X -> g X g^{-1}
}

FqMatrix dual_action_matrix(const NilpotentAlgebra& a, const GroupElement& g, DualAction act) {
    GroupElement gi = group_inv(g);
    FqMatrix phi(a.field(), a.dim(), a.dim());
    FqVector zero(a.field(), a.dim());
    switch (act) {
        case DualAction::coadjoint: phi = sandwich_matrix(a, gi.x, g.x); break;   // X -> g^{-1} X g
        case DualAction::left:      phi = sandwich_matrix(a, gi.x, zero); break;  // X -> g^{-1} X
        case DualAction::right:     phi = sandwich_matrix(a, zero, gi.x); break;  // X -> X g^{-1}
    }
    return phi.transposed();    // lambda' = lambda . phi
}

std::vector<LinearStepper> adjoint_steppers(const NilpotentAlgebra& a) {
    std::vector<LinearStepper> out;
    for (const auto& g : generators(a))
        out.emplace_back(a.field(), adjoint_matrix(a, g));
    return out;
}

std::vector<LinearStepper> dual_steppers(const NilpotentAlgebra& a, DualAction act) {
    std::vector<LinearStepper> out;
    for (const auto& g : generators(a))
        out.emplace_back(a.field(), dual_action_matrix(a, g, act));
    return out;
}

// ---------------------------------------------------------------------------
// orbit scans
// ---------------------------------------------------------------------------

uint64_t space_size_checked(const NilpotentAlgebra& a, uint64_t cap) {
    const uint64_t q = uint64_t(a.field().q());
    uint64_t s = 1;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (s > cap / q) {
            long double needed = 1;
            for (std::size_t t = 0; t < a.dim(); ++t) needed *= (long double)q;
            throw CapExceeded("state space q^" + std::to_string(a.dim()) + " = " +
                              std::to_string((unsigned long long)needed) +
                              " points exceeds the orbit cap of " + std::to_string(cap) +
                              " (~" + std::to_string((unsigned long long)(needed / 8 / (1 << 20))) +
                              " MiB of visited bits); raise UTQ_MAX_POINTS to override");
        }
        s *= q;
    }
    return s;
}

namespace {

class Bitset {
public:
    explicit Bitset(uint64_t n) : words_((n + 63) / 64, 0) {}
    bool test(uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    // returns true if the bit was newly set
    bool testset(uint64_t i) {
        uint64_t& w = words_[i >> 6];
        uint64_t m = uint64_t(1) << (i & 63);
        if (w & m) return false;
        w |= m;
        return true;
    }
    bool testset_atomic(uint64_t i) {
        std::atomic_ref<uint64_t> w(words_[i >> 6]);
        uint64_t m = uint64_t(1) << (i & 63);
        return (w.fetch_or(m, std::memory_order_relaxed) & m) == 0;
    }
    void clear() { std::fill(words_.begin(), words_.end(), 0); }
    void set(uint64_t i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
    const std::vector<uint64_t>& words() const { return words_; }
    uint64_t word(std::size_t i) const { return words_[i]; }
    std::size_t word_count() const { return words_.size(); }

private:
    std::vector<uint64_t> words_;
};

constexpr std::size_t kSpillThreshold = std::size_t(1) << 21;   // frontier entries

// expand a frontier vector once; returns new states (parallel over chunks)
void expand_frontier(const std::vector<LinearStepper>& gens, const std::vector<uint64_t>& frontier,
                     Bitset& visited, std::vector<uint64_t>& next, int threads) {
    next.clear();
    if (threads <= 1 || frontier.size() < 4096) {
        for (uint64_t s : frontier)
            for (const auto& g : gens) {
                uint64_t t = g.step(s);
                if (visited.testset(t)) next.push_back(t);
            }
        return;
    }
    std::vector<std::vector<uint64_t>> local(threads);
    std::vector<std::thread> pool;
    std::size_t chunk = (frontier.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            std::size_t lo = t * chunk, hi = std::min(frontier.size(), lo + chunk);
            auto& mine = local[t];
            for (std::size_t i = lo; i < hi; ++i)
                for (const auto& g : gens) {
                    uint64_t u = g.step(frontier[i]);
                    if (visited.testset_atomic(u)) mine.push_back(u);
                }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& mine : local) next.insert(next.end(), mine.begin(), mine.end());
}

}  // namespace

void scan_orbits(const std::vector<LinearStepper>& gens, uint64_t space,
                 const std::function<void(uint64_t, uint64_t)>& on_orbit, int threads) {
    Bitset visited(space);
    std::vector<uint64_t> frontier, next;
    Bitset cur_bm(1), next_bm(1);
    bool bm_alloc = false;

    for (uint64_t s0 = 0; s0 < space; ++s0) {
        if (visited.test(s0)) continue;
        uint64_t size = 1;
        visited.testset(s0);
        frontier.assign(1, s0);
        bool bitmap_mode = false;
        while (!frontier.empty()) {
            expand_frontier(gens, frontier, visited, next, threads);
            size += next.size();
            std::swap(frontier, next);
            if (frontier.size() > kSpillThreshold) { bitmap_mode = true; break; }
        }
        if (bitmap_mode) {
            // giant orbit: level-synchronized passes over whole-space bitmaps
            if (!bm_alloc) { cur_bm = Bitset(space); next_bm = Bitset(space); bm_alloc = true; }
            else { cur_bm.clear(); }
            for (uint64_t s : frontier) cur_bm.set(s);
            frontier.clear();
            bool more = true;
            while (more) {
                more = false;
                next_bm.clear();
                uint64_t nw = cur_bm.word_count();
                std::atomic<uint64_t> found{0};
                auto sweep = [&](uint64_t wlo, uint64_t whi) {
                    uint64_t mine = 0;
                    for (uint64_t wi = wlo; wi < whi; ++wi) {
                        uint64_t w = cur_bm.word(wi);
                        while (w) {
                            uint64_t b = w & (~w + 1);
                            uint64_t s = wi * 64 + uint64_t(__builtin_ctzll(w));
                            w ^= b;
                            for (const auto& g : gens) {
                                uint64_t t = g.step(s);
                                if (threads > 1 ? visited.testset_atomic(t) : visited.testset(t)) {
                                    next_bm.testset_atomic(t);
                                    ++mine;
                                }
                            }
                        }
                    }
                    found += mine;
                };
                if (threads <= 1) sweep(0, nw);
                else {
                    std::vector<std::thread> pool;
                    uint64_t chunk = (nw + threads - 1) / threads;
                    for (int t = 0; t < threads; ++t)
                        pool.emplace_back(sweep, t * chunk, std::min(nw, (t + 1) * chunk));
                    for (auto& th : pool) th.join();
                }
                size += found;
                more = found != 0;
                std::swap(cur_bm, next_bm);
            }
        }
        on_orbit(s0, size);
    }
}

std::vector<uint64_t> orbit_of(const std::vector<LinearStepper>& gens, uint64_t start) {
    std::unordered_set<uint64_t> seen = {start};
    std::vector<uint64_t> frontier = {start}, out = {start};
    while (!frontier.empty()) {
        std::vector<uint64_t> next;
        for (uint64_t s : frontier)
            for (const auto& g : gens) {
                uint64_t t = g.step(s);
                if (seen.insert(t).second) { next.push_back(t); out.push_back(t); }
            }
        frontier = std::move(next);
    }
    return out;
}

namespace {

// orbit size must be q^{2f}; returns f
int degree_from_size(uint64_t size, int q) {
    int e = 0;
    uint64_t s = 1;
    while (s < size) { s *= q; ++e; }
    if (s != size) throw std::runtime_error("orbit size is not a power of q");
    if (e % 2 != 0)
        throw std::runtime_error("coadjoint orbit size q^" + std::to_string(e) +
                                 " has odd exponent");
    return e / 2;
}

constexpr std::size_t kMaxStoredReps = 4096;

}  // namespace

OrbitSummary adjoint_orbits(const NilpotentAlgebra& a, uint64_t cap, int threads) {
    uint64_t space = space_size_checked(a, cap);
    auto gens = adjoint_steppers(a);
    OrbitSummary sum;
    sum.total_points = space;
    scan_orbits(gens, space, [&](uint64_t rep, uint64_t size) {
        ++sum.orbit_count;
        ++sum.histogram[size];
        if (sum.representatives.size() < kMaxStoredReps) sum.representatives.push_back(rep);
    }, threads);
    return sum;
}

CoadjointResult coadjoint_orbits(const NilpotentAlgebra& a, uint64_t cap, int threads,
                                 bool track_z) {
    uint64_t space = space_size_checked(a, cap);
    auto gens = dual_steppers(a, DualAction::coadjoint);
    int q = a.field().q();
    std::size_t zpos = 0;
    uint64_t zdiv = 1;
    if (track_z) {
        auto zi = a.z_index();
        if (!zi) throw std::invalid_argument("algebra has no central z basis element");
        zpos = *zi;
        for (std::size_t i = 0; i < zpos; ++i) zdiv *= q;
    }
    CoadjointResult res;
    res.summary.total_points = space;
    uint64_t mass = 0;
    scan_orbits(gens, space, [&](uint64_t rep, uint64_t size) {
        ++res.summary.orbit_count;
        ++res.summary.histogram[size];
        if (res.summary.representatives.size() < kMaxStoredReps)
            res.summary.representatives.push_back(rep);
        int f = degree_from_size(size, q);
        ++res.degrees.by_f[f];
        mass += size;
        if (track_z) {
            int zval = int((rep / zdiv) % q);
            ++res.by_f_and_z[{f, zval}];
        }
    }, threads);
    if (mass != space) throw std::runtime_error("orbit sizes fail to partition the dual space");
    return res;
}

namespace {

std::vector<uint64_t> dual_orbit(const NilpotentAlgebra& a, const LinearFunctional& lam,
                                 uint64_t cap, std::initializer_list<DualAction> acts) {
    space_size_checked(a, cap);
    std::vector<LinearStepper> gens;
    for (DualAction act : acts)
        for (auto& s : dual_steppers(a, act)) gens.push_back(std::move(s));
    return orbit_of(gens, encode_state(lam.values));
}

}  // namespace

SidedOrbitSizes sided_orbits(const NilpotentAlgebra& a, const LinearFunctional& lam, uint64_t cap) {
    auto left = dual_orbit(a, lam, cap, {DualAction::left});
    auto right = dual_orbit(a, lam, cap, {DualAction::right});
    auto both = dual_orbit(a, lam, cap, {DualAction::left, DualAction::right});
    std::unordered_set<uint64_t> l(left.begin(), left.end());
    uint64_t inter = 0;
    for (uint64_t s : right) inter += l.count(s);
    SidedOrbitSizes out;
    out.left = left.size();
    out.right = right.size();
    out.twosided = both.size();
    out.intersection = inter;
    if (out.left != out.right)
        throw std::runtime_error("left and right orbit sizes differ");
    if (out.twosided * out.intersection != out.left * out.right)
        throw std::runtime_error("two-sided orbit size identity fails");
    return out;
}

std::vector<uint64_t> two_sided_orbit(const NilpotentAlgebra& a, const LinearFunctional& lam,
                                      uint64_t cap) {
    return dual_orbit(a, lam, cap, {DualAction::left, DualAction::right});
}

std::vector<uint64_t> coadjoint_orbit_states(const NilpotentAlgebra& a, const LinearFunctional& lam,
                                             uint64_t cap) {
    return dual_orbit(a, lam, cap, {DualAction::coadjoint});
}

// ---------------------------------------------------------------------------
// N_{Lambda,e}(q)
// ---------------------------------------------------------------------------

long long LambdaCounts::at(int e) const {
    auto it = by_e.find(e);
    return it == by_e.end() ? 0 : it->second;
}

long long LambdaCounts::total() const {
    long long t = 0;
    for (auto& [e, c] : by_e) t += c;
    return t;
}

LambdaCounts count_lambda_all(const SetPartition& shape, const Field& f, uint64_t cap,
                              int threads) {
    const int q = f.q();
    CrossingData cd = crossing_data(shape);
    const long long ncr = (long long)cd.crossing_pairs.size();
    const long long d = cd.d_stat;

    NilpotentAlgebra ext = build_crossing(shape, f, true);
    NilpotentAlgebra plain = build_crossing(shape, f, false);

    CoadjointResult tilde = coadjoint_orbits(ext, cap, threads, true);
    CoadjointResult base = coadjoint_orbits(plain, cap, threads, false);

    LambdaCounts out;
    std::set<int> fs;
    for (auto& [fdeg, c] : tilde.degrees.by_f) fs.insert(fdeg);
    for (auto& [fdeg, c] : base.degrees.by_f) fs.insert(fdeg);
    for (int fdeg : fs) {
        auto it1 = tilde.degrees.by_f.find(fdeg);
        auto it0 = base.degrees.by_f.find(fdeg);
        uint64_t ktilde = it1 == tilde.degrees.by_f.end() ? 0 : it1->second;
        uint64_t kplain = it0 == base.degrees.by_f.end() ? 0 : it0->second;
        if (ktilde < kplain)
            throw std::runtime_error("degree count of the extended algebra fell below the plain one");
        uint64_t diff = ktilde - kplain;

        // cross-check: orbits of the extended dual with z-value != 0, by degree;
        // the q-1 nonzero z classes must be uniform (torus symmetry)
        uint64_t znonzero = 0, first = 0;
        bool have_first = false;
        for (int zv = 1; zv < q; ++zv) {
            auto it = tilde.by_f_and_z.find({fdeg, zv});
            uint64_t c = it == tilde.by_f_and_z.end() ? 0 : it->second;
            znonzero += c;
            if (!have_first) { first = c; have_first = true; }
            else if (c != first)
                throw std::runtime_error("z-filtered orbit counts are not uniform across F_q^x");
        }
        if (znonzero != diff)
            throw std::runtime_error("z-filtered count disagrees with the histogram difference");
        if (diff % uint64_t(q - 1) != 0)
            throw std::runtime_error(
                "degree-count difference not divisible by q-1 "
                "(Kirillov count / irreducible count mismatch)");
        uint64_t n = diff / uint64_t(q - 1);
        if (n) out.by_e[int(fdeg - ncr + d)] = (long long)(n);
    }
    return out;
}

long long count_lambda_e(const SetPartition& shape, const Field& f, int e, uint64_t cap,
                         int threads) {
    return count_lambda_all(shape, f, cap, threads).at(e);
}

int min_nonzero_degree(const SetPartition& shape, const Field& f, uint64_t cap) {
    LambdaCounts c = count_lambda_all(shape, f, cap);
    if (c.by_e.empty()) throw std::runtime_error("no nonzero degree counts");
    int m = c.by_e.begin()->first;
    CrossingData cd = crossing_data(shape);
    if (m < cd.d_stat - (long long)cd.crossing_pairs.size())
        throw std::runtime_error("minimal degree violates the vanishing observation");
    return m;
}

}  // namespace utq
