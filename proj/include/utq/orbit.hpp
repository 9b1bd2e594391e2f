#pragma once

// Exhaustive orbit enumeration for the algebra group G = 1+n acting on n
// (adjoint) and on n* (coadjoint, left, right, two-sided).  States are
// integers in [0, q^dim) via base-q digits; generator actions are applied
// through chunked lookup tables so the BFS inner loop is a handful of table
// reads per state.

#include "utq/nilalg.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace utq {

inline constexpr uint64_t kDefaultOrbitCap = uint64_t(1) << 26;

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// group elements 1 + x
// ---------------------------------------------------------------------------

struct GroupElement {
    const NilpotentAlgebra* alg = nullptr;
    FqVector x;
};

GroupElement group_identity(const NilpotentAlgebra& a);
GroupElement group_mul(const GroupElement& g, const GroupElement& h);
GroupElement group_inv(const GroupElement& g);

// the elements 1 + t e_i for basis vectors e_i and t in F_q^x
std::vector<GroupElement> generators(const NilpotentAlgebra& a);

// subgroup generated by the given elements, by closure (small groups only)
uint64_t closure_size(const NilpotentAlgebra& a, const std::vector<GroupElement>& gens);

// ---------------------------------------------------------------------------
// state encoding and fast linear steppers
// ---------------------------------------------------------------------------

uint64_t encode_state(const FqVector& v);
FqVector decode_state(const Field& f, std::size_t dim, uint64_t s);

class LinearStepper {
public:
    LinearStepper(const Field& f, const FqMatrix& M);   // square matrix, acts on states
    uint64_t step(uint64_t s) const;

private:
    void build_tables(const FqMatrix& M);
    uint64_t step_generic(uint64_t s) const;

    const Field* field_;
    int dim_, p_, k_, slots_;
    bool char2_ = false, generic_ = false;
    int chunk_slots_ = 0, nchunks_ = 0, bits_ = 0;
    std::vector<uint64_t> chunk_div_;             // p^(c*w) divisors
    uint64_t chunk_mod_ = 0;                      // p^w
    std::vector<std::vector<uint64_t>> tables_;   // per chunk
    int red_slots_ = 0;
    std::vector<uint64_t> red_table_, red_mult_;
    FqMatrix mat_;                                // generic fallback
};

enum class DualAction { coadjoint, left, right };

FqMatrix adjoint_matrix(const NilpotentAlgebra& a, const GroupElement& g);
FqMatrix dual_action_matrix(const NilpotentAlgebra& a, const GroupElement& g, DualAction act);

std::vector<LinearStepper> adjoint_steppers(const NilpotentAlgebra& a);
std::vector<LinearStepper> dual_steppers(const NilpotentAlgebra& a, DualAction act);

// ---------------------------------------------------------------------------
// orbit scans
// ---------------------------------------------------------------------------

uint64_t space_size_checked(const NilpotentAlgebra& a, uint64_t cap);

// Visits every orbit of the whole state space once, ascending by minimal
// representative.  Deterministic regardless of thread count.
void scan_orbits(const std::vector<LinearStepper>& gens, uint64_t space,
                 const std::function<void(uint64_t rep, uint64_t size)>& on_orbit,
                 int threads = 1);

// single orbit, explicit states (unsorted)
std::vector<uint64_t> orbit_of(const std::vector<LinearStepper>& gens, uint64_t start);

struct OrbitSummary {
    uint64_t total_points = 0;
    uint64_t orbit_count = 0;
    std::map<uint64_t, uint64_t> histogram;           // orbit size -> multiplicity
    std::vector<uint64_t> representatives;            // minimal, kept when small
};

struct DegreeHistogram {
    std::map<int, uint64_t> by_f;                     // orbit size q^{2f} -> count at f
};

OrbitSummary adjoint_orbits(const NilpotentAlgebra& a, uint64_t cap = kDefaultOrbitCap,
                            int threads = 1);

struct CoadjointResult {
    OrbitSummary summary;
    DegreeHistogram degrees;
    // (f, z-digit of representative) -> orbit count; filled when track_z
    std::map<std::pair<int, int>, uint64_t> by_f_and_z;
};

CoadjointResult coadjoint_orbits(const NilpotentAlgebra& a, uint64_t cap = kDefaultOrbitCap,
                                 int threads = 1, bool track_z = false);

struct SidedOrbitSizes {
    uint64_t left = 0, right = 0, twosided = 0, intersection = 0;
};
SidedOrbitSizes sided_orbits(const NilpotentAlgebra& a, const LinearFunctional& lam,
                             uint64_t cap = kDefaultOrbitCap);
std::vector<uint64_t> two_sided_orbit(const NilpotentAlgebra& a, const LinearFunctional& lam,
                                      uint64_t cap = kDefaultOrbitCap);
std::vector<uint64_t> coadjoint_orbit_states(const NilpotentAlgebra& a, const LinearFunctional& lam,
                                             uint64_t cap = kDefaultOrbitCap);

// ---------------------------------------------------------------------------
// N_{Lambda,e}(q) at numeric q, per the crossing-algebra degree counts
// ---------------------------------------------------------------------------

struct LambdaCounts {
    std::map<int, long long> by_e;   // nonzero entries only
    long long at(int e) const;
    long long total() const;
};

LambdaCounts count_lambda_all(const SetPartition& shape, const Field& f,
                              uint64_t cap = kDefaultOrbitCap, int threads = 1);
long long count_lambda_e(const SetPartition& shape, const Field& f, int e,
                         uint64_t cap = kDefaultOrbitCap, int threads = 1);
int min_nonzero_degree(const SetPartition& shape, const Field& f,
                       uint64_t cap = kDefaultOrbitCap);

}  // namespace utq
