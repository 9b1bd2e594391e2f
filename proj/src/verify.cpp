#include "utq/verify.hpp"

#include "utq/charfun.hpp"
#include "utq/counting.hpp"

#include <chrono>
#include <sstream>

namespace utq {

bool RunReport::ok() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void RunReport::add(const std::string& label, bool pass, const std::string& detail) {
    checks.push_back({label, pass, detail});
}

std::string RunReport::summary() const {
    std::ostringstream out;
    for (const auto& c : checks) {
        out << (c.pass ? "PASS" : "FAIL") << "  " << c.label;
        if (!c.detail.empty()) out << "  [" << c.detail << "]";
        out << "\n";
    }
    out << (ok() ? "OK" : "FAILED") << "  suite=" << suite << "  checks=" << checks.size()
        << "  wall=" << wall_seconds << "s\n";
    return out.str();
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

std::string instance(const SetPartition& p, int q, int e) {
    return "Lambda=" + format_partition(p) + " q=" + std::to_string(q) +
           " e=" + std::to_string(e);
}

std::string map_str(const std::map<int, long long>& m) {
    std::string s = "{";
    for (auto& [k, v] : m) s += std::to_string(k) + ":" + std::to_string(v) + " ";
    s += "}";
    return s;
}

const char* kEx13 = "1,5,7,9,13/2,6,8,12/3,10/4,11";
const char* kLambda13 = "1,6,8,13/2,7,12/3,9/4,10/5,11";

}  // namespace

RunReport verify_table1(int max_n, const VerifyOptions&) {
    Timer t;
    RunReport rep;
    rep.suite = "table1";
    static const uint64_t expected[13][4] = {
        {1, 1, 1, 1},
        {2, 1, 1, 1},
        {5, 2, 1, 0},
        {15, 6, 2, 1},
        {52, 22, 6, 1},
        {203, 92, 21, 5},
        {877, 426, 85, 16},
        {4140, 2146, 385, 69},
        {21147, 11624, 1907, 316},
        {115975, 67146, 10205, 1591},
        {678570, 411142, 58455, 8614},
        {4213597, 2656052, 355884, 49841},
        {27644437, 18035178, 2290536, 306043},
    };
    if (max_n > 13) max_n = 13;
    for (int n = 1; n <= max_n; ++n) {
        CountRow row = count_table(n);
        const auto& ex = expected[n - 1];
        bool pass = row.bell == ex[0] && row.atomic == ex[1] && row.connected == ex[2] &&
                    row.crossing_connected == ex[3];
        rep.add("row n=" + std::to_string(n), pass,
                std::to_string(row.bell) + " " + std::to_string(row.atomic) + " " +
                    std::to_string(row.connected) + " " + std::to_string(row.crossing_connected));
    }
    rep.wall_seconds = t.seconds();
    return rep;
}

RunReport verify_appendix(const VerifyOptions&) {
    Timer t;
    RunReport rep;
    rep.suite = "appendix";

    for (int e = 1; e <= kMaxTabulatedE; ++e) {
        bool ok = true;
        std::string bad;
        for (int n = 2 * e + 1; n <= 2 * e + 8; ++n)
            if (!(closed_form_N(n, e) == assemble_N(n, e))) {
                ok = false;
                bad = "n=" + std::to_string(n);
                break;
            }
        rep.add("closed formula vs assembly, e=" + std::to_string(e), ok, bad);
    }

    for (int e = 1; e <= kMaxTabulatedE; ++e) {
        BivariateCheckReport b = bivariate_check(e);
        rep.add("f-table structure, e=" + std::to_string(e), b.ok(),
                std::string(b.degrees_ok ? "" : "degrees ") + (b.narayana_ok ? "" : "narayana ") +
                    (b.f1_ok ? "" : "f1 ") + (b.integrality_ok ? "" : "integrality ") +
                    (b.agreement_ok ? "" : "agreement"));
        rep.add("A/B-triangle rows, e=" + std::to_string(e), ab_observation_check(e));
    }

    {
        bool ok = true;
        std::string bad;
        for (int e = 0; e <= kMaxTabulatedE && ok; ++e)
            for (int n = 1; n <= 30; ++n) {
                IntPolynomial p = assemble_N(n, e).to_qm1_basis();
                if (!p.nonnegative_coeffs()) {
                    ok = false;
                    bad = "n=" + std::to_string(n) + " e=" + std::to_string(e);
                    break;
                }
            }
        rep.add("nonnegative q-1 coefficients, n<=30 e<=8", ok, bad);
    }

    {
        bool ok = true;
        std::string bad;
        for (int e = 0; e <= kMaxTabulatedE && ok; ++e)
            for (int n = 1; n <= 12; ++n)
                if (!(assemble_N_compositions(n, e) == assemble_N(n, e))) {
                    ok = false;
                    bad = "n=" + std::to_string(n) + " e=" + std::to_string(e);
                    break;
                }
        rep.add("binomial collapse identity, n<=12 e<=8", ok, bad);
    }

    for (auto [key, n, e] : {std::tuple<const char*, int, int>{"n14", 14, 7},
                             {"n14", 14, 8},
                             {"n15", 15, 8},
                             {"n16", 16, 8}}) {
        bool ok = assemble_N(n, e) == appendix().extra_poly(key, e);
        rep.add("fixture N_{" + std::to_string(n) + "," + std::to_string(e) + "}", ok);
    }

    rep.wall_seconds = t.seconds();
    return rep;
}

RunReport verify_congruence(const VerifyOptions&) {
    Timer t;
    RunReport rep;
    rep.suite = "congruence";
    bool cong = true, deriv = true;
    std::string bad_c, bad_d;
    for (int e = 0; e <= kMaxTabulatedE; ++e)
        for (int n = 1; n <= 30; ++n) {
            if (!congruence_check(n, e) && cong) {
                cong = false;
                bad_c = "n=" + std::to_string(n) + " e=" + std::to_string(e);
            }
            Int expect = e < n ? Int(n - e - 1) : Int(0);
            if (derivative_at_1(n, e) != expect && deriv) {
                deriv = false;
                bad_d = "n=" + std::to_string(n) + " e=" + std::to_string(e);
            }
        }
    rep.add("congruence mod (q-1)^2, n<=30 e<=8", cong, bad_c);
    rep.add("derivative at q=1, n<=30 e<=8", deriv, bad_d);
    rep.wall_seconds = t.seconds();
    return rep;
}

RunReport verify_oracle_un(const VerifyOptions& opt) {
    Timer t;
    RunReport rep;
    rep.suite = "oracle-un";
    auto run = [&](int n, int q) {
        const Field& F = Field::get(q);
        NilpotentAlgebra un = build_un(n, F);
        CoadjointResult co = coadjoint_orbits(un, opt.cap, opt.threads);
        OrbitSummary ad = adjoint_orbits(un, opt.cap, opt.threads);

        uint64_t kirillov_total = 0;
        for (auto& [f, c] : co.degrees.by_f) kirillov_total += c;
        rep.add("u_" + std::to_string(n) + "(" + std::to_string(q) + ") class number",
                kirillov_total == ad.orbit_count,
                std::to_string(kirillov_total) + " vs " + std::to_string(ad.orbit_count));

        const int mmax = (n / 2) * ((n - 1) / 2);
        bool degrees_ok = true;
        std::string bad;
        for (auto& [f, c] : co.degrees.by_f)
            if (f > mmax) { degrees_ok = false; bad = "f=" + std::to_string(f); }
        for (int e = 0; e <= std::min(mmax, kMaxTabulatedE); ++e) {
            Int expect = assemble_N(n, e).eval_at_q(q);
            auto it = co.degrees.by_f.find(e);
            Int got = it == co.degrees.by_f.end() ? Int(0) : Int(it->second);
            if (got != expect) {
                degrees_ok = false;
                bad = "e=" + std::to_string(e) + " got=" + got.str() + " want=" + expect.str();
                break;
            }
        }
        rep.add("u_" + std::to_string(n) + "(" + std::to_string(q) + ") degree histogram",
                degrees_ok, bad);

        // degrees past the tabulated range (only u_7: e = 9) go through the
        // shape sum instead
        for (auto& [f, c] : co.degrees.by_f) {
            if (f <= kMaxTabulatedE) continue;
            Int expect = shape_sum(n, f, F, opt.cap);
            rep.add("u_" + std::to_string(n) + "(" + std::to_string(q) + ") e=" +
                        std::to_string(f) + " via shape sum",
                    Int(c) == expect, std::to_string(c) + " vs " + expect.str());
        }
    };
    for (int n = 1; n <= 7; ++n) run(n, 2);
    for (int n = 1; n <= 5; ++n) run(n, 3);
    rep.wall_seconds = t.seconds();
    return rep;
}

namespace {

void check_stored_counts(RunReport& rep, const char* text, const char* key,
                         const std::vector<int>& degrees, int q, const VerifyOptions& opt) {
    SetPartition p = parse_partition(text);
    const Field& F = Field::get(q);
    LambdaCounts counts = count_lambda_all(p, F, opt.cap, opt.threads);
    bool ok = true;
    std::string bad;
    std::map<int, long long> expect;
    for (int e : degrees) {
        Int v = appendix().extra_poly(key, e).eval_at_q(q);
        if (v != 0) expect[e] = v.convert_to<long long>();
    }
    if (counts.by_e != expect) {
        ok = false;
        bad = "got " + map_str(counts.by_e);
    }
    rep.add(std::string(key) + " counts at q=" + std::to_string(q), ok, bad);
}

}  // namespace

RunReport verify_ex13(const VerifyOptions& opt) {
    Timer t;
    RunReport rep;
    rep.suite = "ex13";
    check_stored_counts(rep, kEx13, "ex13", {15, 16, 17}, 2, opt);
    {
        SetPartition p = parse_partition(kEx13);
        LambdaCounts counts = count_lambda_all(p, Field::get(2), opt.cap, opt.threads);
        rep.add("total N_Lambda(2) = 98", counts.total() == 98, std::to_string(counts.total()));
    }
    // q = 3 fits the default cap: 3^{|Cr|+1} = 3^16 points
    {
        SetPartition p = parse_partition(kEx13);
        CrossingData cd = crossing_data(p);
        uint64_t needed = 1;
        bool fits = true;
        for (std::size_t i = 0; i <= cd.crossing_pairs.size(); ++i) {
            if (needed > opt.cap / 3) { fits = false; break; }
            needed *= 3;
        }
        if (fits)
            check_stored_counts(rep, kEx13, "ex13", {15, 16, 17}, 3, opt);
        else
            rep.add("ex13 q=3 skipped (cap)", true, "needs 3^" +
                        std::to_string(cd.crossing_pairs.size() + 1) + " points");
    }
    rep.wall_seconds = t.seconds();
    return rep;
}

RunReport verify_lambda13(const VerifyOptions& opt) {
    Timer t;
    RunReport rep;
    rep.suite = "lambda13";
    {
        IntPolynomial e20 = appendix().extra_poly("lambda13", 20);
        rep.add("stored e=20 polynomial has a negative q-1 coefficient",
                !e20.nonnegative_coeffs());
    }
    check_stored_counts(rep, kLambda13, "lambda13", {18, 19, 20, 21}, 2, opt);
    rep.wall_seconds = t.seconds();
    return rep;
}

RunReport verify_factorization(const VerifyOptions& opt) {
    Timer t;
    RunReport rep;
    rep.suite = "factorization";
    const Field& F = Field::get(2);
    for (int n = 1; n <= 8; ++n) {
        bool ok = true;
        std::string bad;
        enumerate_partitions(n, [&](const SetPartition& p) {
            const LambdaCounts& direct = count_lambda_all_cached(p, F, opt.cap);
            std::map<int, Int> prod = product_formula_all(p, F, opt.cap);
            std::map<int, Int> directI;
            for (auto& [e, c] : direct.by_e) directI[e] = c;
            if (directI != prod) {
                ok = false;
                bad = instance(p, 2, -1);
                return false;
            }
            return true;
        });
        rep.add("product formula, all shapes of [" + std::to_string(n) + "]", ok, bad);
    }
    rep.wall_seconds = t.seconds();
    return rep;
}

RunReport verify_fact_identities(const VerifyOptions& opt) {
    Timer t;
    RunReport rep;
    rep.suite = "fact-identities";
    for (int q : {2, 3}) {
        const Field& F = Field::get(q);
        for (int n = 1; n <= 5; ++n) {
            if (n == 1) {
                rep.add("degree/norm identities over u_1(" + std::to_string(q) + ")", true,
                        "trivial group");
                continue;
            }
            NilpotentAlgebra un = build_un(n, F);
            bool ok = true;
            std::string bad;
            enumerate_partitions(n, [&](const SetPartition& p) {
                CrossingData cd = crossing_data(p);
                LinearFunctional lam = quasi_monomial_functional(un, p);
                ClassFunction chi = superchar_fn(un, lam, opt.cap);
                Rational deg_expect = 1, norm_expect = 1;
                for (int i = 0; i < cd.d_stat; ++i) deg_expect *= q;
                for (std::size_t i = 0; i < cd.crossing_pairs.size(); ++i) norm_expect *= q;
                Cyclotomic deg = chi.at_one();
                Cyclotomic norm = inner_product(chi, chi);
                if (!deg.is_rational() || deg.rational_value() != deg_expect ||
                    !norm.is_rational() || norm.rational_value() != norm_expect) {
                    ok = false;
                    bad = instance(p, q, -1);
                    return false;
                }
                return true;
            });
            rep.add("degree/norm identities over u_" + std::to_string(n) + "(" +
                        std::to_string(q) + ")", ok, bad);
        }
    }
    rep.wall_seconds = t.seconds();
    return rep;
}

RunReport verify_maxcross(const VerifyOptions& opt) {
    Timer t;
    RunReport rep;
    rep.suite = "maxcross";
    const Field& F = Field::get(2);
    for (int n = 1; n <= 8; ++n) {
        bool ok = true;
        std::string bad;
        uint64_t hits = 0;
        enumerate_partitions(n, [&](const SetPartition& p) {
            if (!all_maximal_crossings_even(p)) return true;
            ++hits;
            CrossingData cd = crossing_data(p);
            const LambdaCounts& counts = count_lambda_all_cached(p, F, opt.cap);
            long long ncr = (long long)cd.crossing_pairs.size();
            bool good = ncr % 2 == 0 && counts.total() == 1 &&
                        counts.at(int(cd.d_stat - ncr / 2)) == 1;
            if (!good) {
                ok = false;
                bad = instance(p, 2, int(cd.d_stat - ncr / 2)) + " counts=" + map_str(counts.by_e);
                return false;
            }
            return true;
        });
        rep.add("even maximal crossings imply one constituent, n=" + std::to_string(n) +
                    " (" + std::to_string(hits) + " shapes)", ok, bad);
    }
    rep.wall_seconds = t.seconds();
    return rep;
}

RunReport verify_prop_eval(const VerifyOptions& opt) {
    Timer t;
    RunReport rep;
    rep.suite = "prop-eval";
    for (int q : {2, 3}) {
        const Field& F = Field::get(q);
        for (int n = 1; n <= 8; ++n) {
            bool ok = true;
            std::string bad;
            enumerate_partitions(n, [&](const SetPartition& p) {
                auto closed = prop_eval(p);
                if (!closed) return true;   // |Cr| > 2
                const LambdaCounts& counts = count_lambda_all_cached(p, F, opt.cap);
                bool good = counts.by_e.size() <= 1 &&
                            counts.at(closed->e) == closed->value.eval_at_q(q).convert_to<long long>() &&
                            counts.total() == counts.at(closed->e);
                if (!good) {
                    ok = false;
                    bad = instance(p, q, closed->e) + " counts=" + map_str(counts.by_e);
                    return false;
                }
                return true;
            });
            rep.add("closed forms |Cr|<=2, n=" + std::to_string(n) + " q=" + std::to_string(q),
                    ok, bad);
        }
    }
    {
        const Field& F = Field::get(2);
        bool ok = true;
        std::string bad;
        for (int n = 1; n <= 8 && ok; ++n)
            enumerate_partitions(n, [&](const SetPartition& p) {
                const LambdaCounts& a = count_lambda_all_cached(p, F, opt.cap);
                const LambdaCounts& b = count_lambda_all_cached(transpose(p), F, opt.cap);
                if (a.by_e != b.by_e) {
                    ok = false;
                    bad = instance(p, 2, -1);
                    return false;
                }
                return true;
            });
        rep.add("transpose symmetry, n<=8 q=2", ok, bad);
    }
    rep.wall_seconds = t.seconds();
    return rep;
}

RunReport verify_algebra(const VerifyOptions& opt) {
    Timer t;
    RunReport rep;
    rep.suite = "algebra";
    // structure constants of the crossing algebras do not depend on q
    const Field& F2 = Field::get(2);
    for (int n = 1; n <= 9; ++n) {
        bool ok = true;
        std::string bad;
        enumerate_partitions(n, [&](const SetPartition& p) {
            for (bool ext : {false, true}) {
                NilpotentAlgebra A = build_crossing(p, F2, ext);
                if (!A.is_associative()) {
                    ok = false;
                    bad = "associativity " + instance(p, 2, -1);
                    return false;
                }
                try {
                    A.nilpotency_index();
                } catch (const std::exception&) {
                    ok = false;
                    bad = "nilpotency " + instance(p, 2, -1);
                    return false;
                }
            }
            // chained-crossing detector vs direct sum with the central line
            NilpotentAlgebra ext = build_crossing(p, F2, true);
            auto zi = ext.z_index();
            bool any_z_product = false;
            for (std::size_t i = 0; i < ext.dim(); ++i)
                for (std::size_t j = 0; j < ext.dim(); ++j)
                    if (ext.basis_product(i, j)[*zi]) any_z_product = true;
            bool chained = false;
            CrossingData cd = crossing_data(p);
            for (const auto& c1 : cd.crossings4)
                for (const auto& c2 : cd.crossings4)
                    if (c1[1] == c2[0] && c1[2] == c2[1] && c1[3] == c2[2]) chained = true;
            if (any_z_product != chained) {
                ok = false;
                bad = "central-split detector " + instance(p, 2, -1);
                return false;
            }
            return true;
        });
        rep.add("crossing algebras well-formed, n=" + std::to_string(n), ok, bad);
    }

    for (int q : {2, 3}) {
        const Field& F = Field::get(q);
        for (int n = 1; n <= 7; ++n) {
            NilpotentAlgebra un = build_un(n, F);
            bool ok = true;
            std::string bad;
            enumerate_partitions(n, [&](const SetPartition& p) {
                auto fail = [&](const std::string& what) {
                    ok = false;
                    bad = what + " " + instance(p, q, -1);
                    return false;
                };
                CrossingData cd = crossing_data(p);
                auto arcs = arc_set(p).arcs;
                LinearFunctional lam = quasi_monomial_functional(un, p);
                FunctionalSubspaces sub = functional_subspaces(un, lam);
                if (sub.l.dim() - sub.k.dim() != (arcs.empty() ? 0u : 1u))
                    return fail("dim l - dim k");
                if (sub.s.dim() - sub.l.dim() != cd.crossing_pairs.size())
                    return fail("dim s - dim l");
                try {
                    SubalgebraResult s_alg = subalgebra(un, sub.s);
                    auto into_s = [&](const FqMatrix& rows) {
                        std::vector<FqVector> vecs;
                        for (std::size_t r = 0; r < rows.rows; ++r)
                            vecs.push_back(s_alg.coords_of(rows.row(r)));
                        return make_subspace(F, vecs, s_alg.algebra.dim());
                    };
                    QuotientResult mod_l = quotient(s_alg.algebra, into_s(sub.l.basis));
                    NilpotentAlgebra C = build_crossing(p, F, false);
                    FqMatrix M(F, C.dim(), mod_l.algebra.dim());
                    for (std::size_t r = 0; r < C.dim(); ++r) {
                        auto idx = un.index_of(C.label(r).i, C.label(r).j);
                        M.set_row(r, mod_l.project(s_alg.coords_of(un.unit_vec(*idx))));
                    }
                    if (!iso_check(C, mod_l.algebra, M)) return fail("s/l iso");

                    if (!arcs.empty()) {
                        QuotientResult mod_k = quotient(s_alg.algebra, into_s(sub.k.basis));
                        NilpotentAlgebra Ce = build_crossing(p, F, true);
                        FqMatrix Me(F, Ce.dim(), mod_k.algebra.dim());
                        for (std::size_t r = 0; r < Ce.dim(); ++r) {
                            std::size_t amb;
                            if (Ce.label(r).is_z)
                                amb = *un.index_of(arcs.front().first, arcs.front().second);
                            else
                                amb = *un.index_of(Ce.label(r).i, Ce.label(r).j);
                            Me.set_row(r, mod_k.project(s_alg.coords_of(un.unit_vec(amb))));
                        }
                        if (!iso_check(Ce, mod_k.algebra, Me)) return fail("s/k iso");
                    }
                } catch (const std::exception& ex) {
                    return fail(std::string("exception: ") + ex.what());
                }
                return true;
            });
            rep.add("subquotient isomorphisms, n=" + std::to_string(n) + " q=" + std::to_string(q),
                    ok, bad);
        }
    }
    (void)opt;
    rep.wall_seconds = t.seconds();
    return rep;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "appendix", "factorization", "fact-identities", "prop-eval", "maxcross",
        "congruence", "ex13", "lambda13", "oracle-un"};
    return names;
}

RunReport run_suite(const std::string& name, const VerifyOptions& opt) {
    RunReport rep;
    if (name == "appendix") rep = verify_appendix(opt);
    else if (name == "factorization") rep = verify_factorization(opt);
    else if (name == "fact-identities") rep = verify_fact_identities(opt);
    else if (name == "prop-eval") rep = verify_prop_eval(opt);
    else if (name == "maxcross") rep = verify_maxcross(opt);
    else if (name == "congruence") rep = verify_congruence(opt);
    else if (name == "ex13") rep = verify_ex13(opt);
    else if (name == "lambda13") rep = verify_lambda13(opt);
    else if (name == "oracle-un") rep = verify_oracle_un(opt);
    else throw std::invalid_argument("unknown verify suite '" + name + "'");
    rep.parameters["cap"] = std::to_string(opt.cap);
    rep.parameters["threads"] = std::to_string(opt.threads);
    return rep;
}

}  // namespace utq
