#include "utq/tables.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace utq {

namespace {

std::string data_dir() {
    if (const char* env = std::getenv("UTQ_DATA_DIR")) return env;
#ifdef UTQ_DATA_DIR
    return UTQ_DATA_DIR;
#else
    return "data";
#endif
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open data file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr))
        throw std::runtime_error("SHA-256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

void verify_manifest(const std::string& dir,
                     const std::map<std::string, std::string>& contents) {
    std::ifstream in(dir + "/MANIFEST.sha256");
    if (!in) throw std::runtime_error("missing data manifest " + dir + "/MANIFEST.sha256");
    std::string hash, name;
    std::map<std::string, std::string> expected;
    while (in >> hash >> name) expected[name] = hash;
    for (const auto& [name, bytes] : contents) {
        auto it = expected.find(name);
        if (it == expected.end())
            throw std::runtime_error("data file not in manifest: " + name);
        if (sha256_hex(bytes) != it->second)
            throw std::runtime_error("SHA-256 mismatch for data file " + name);
    }
}

std::vector<std::vector<std::string>> tokenize_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) rows.push_back(std::move(toks));
    }
    return rows;
}

AppendixTables load_tables() {
    std::string dir = data_dir();
    std::map<std::string, std::string> contents;
    for (const char* name : {"tilde_table.txt", "f_table.txt", "extra_polys.txt"})
        contents[name] = read_file(dir + "/" + name);
    verify_manifest(dir, contents);

    AppendixTables T;
    for (const auto& row : tokenize_rows(contents["tilde_table.txt"])) {
        if (row.size() < 3) throw std::runtime_error("malformed tilde table row");
        int n = std::stoi(row[0]), e = std::stoi(row[1]);
        if (n < 1 || e < 0 || e > kMaxTabulatedE)
            throw std::runtime_error("tilde table row out of range");
        std::vector<Int> c;
        for (std::size_t i = 2; i < row.size(); ++i) c.emplace_back(row[i]);
        IntPolynomial p(Var::qm1, std::move(c));
        if (p.is_zero()) throw std::runtime_error("tilde table stores only nonzero rows");
        if (!T.tilde.emplace(std::make_pair(n, e), std::move(p)).second)
            throw std::runtime_error("duplicate tilde table row");
    }
    // Ntilde_{1,0} must equal q, i.e. 1 + (q-1)
    {
        auto it = T.tilde.find({1, 0});
        if (it == T.tilde.end() || it->second != IntPolynomial(Var::qm1, {Int(1), Int(1)}))
            throw std::runtime_error("tilde table row (1,0) must encode q");
    }

    for (const auto& row : tokenize_rows(contents["f_table.txt"])) {
        if (row.size() < 3) throw std::runtime_error("malformed f table row");
        int e = std::stoi(row[0]), i = std::stoi(row[1]);
        if (e < 1 || e > kMaxTabulatedE || i < 1 || i > 2 * e)
            throw std::runtime_error("f table row out of range");
        std::vector<Int> c;
        for (std::size_t j = 2; j < row.size(); ++j) c.emplace_back(row[j]);
        IntPolynomial p(Var::x, std::move(c));
        if (p.degree() != e + 1 - c_coeff(e, i))
            throw std::runtime_error("f table degree mismatch at e=" + std::to_string(e) +
                                     " i=" + std::to_string(i));
        if (!T.fcoeffs.emplace(std::make_pair(e, i), std::move(p)).second)
            throw std::runtime_error("duplicate f table row");
    }
    for (int e = 1; e <= kMaxTabulatedE; ++e)
        for (int i = 1; i <= 2 * e; ++i)
            if (!T.fcoeffs.count({e, i}))
                throw std::runtime_error("f table missing entry");

    for (const auto& row : tokenize_rows(contents["extra_polys.txt"])) {
        if (row.size() < 4) throw std::runtime_error("malformed extra poly row");
        const std::string& key = row[0];
        int e = std::stoi(row[1]);
        Var basis;
        if (row[2] == "q") basis = Var::q;
        else if (row[2] == "qm1") basis = Var::qm1;
        else throw std::runtime_error("unknown basis tag " + row[2]);
        std::vector<Int> c;
        for (std::size_t j = 3; j < row.size(); ++j) c.emplace_back(row[j]);
        if (!T.extra.emplace(std::make_pair(key, e), IntPolynomial(basis, std::move(c))).second)
            throw std::runtime_error("duplicate extra poly row");
    }
    return T;
}

}  // namespace

IntPolynomial AppendixTables::tilde_lookup(int n, int e) const {
    if (n < 1) throw std::invalid_argument("tilde_lookup: n must be >= 1");
    if (e > kMaxTabulatedE)
        throw std::invalid_argument("tilde_lookup: no data for e > 8");
    auto it = tilde.find({n, e});
    if (it != tilde.end()) return it->second;
    return IntPolynomial(Var::qm1);   // certified zero (vanishing rule / exhaustive sweep)
}

const IntPolynomial& AppendixTables::f_poly(int e, int i) const {
    auto it = fcoeffs.find({e, i});
    if (it == fcoeffs.end()) throw std::invalid_argument("f_poly: out of range");
    return it->second;
}

const IntPolynomial& AppendixTables::extra_poly(const std::string& key, int e) const {
    auto it = extra.find({key, e});
    if (it == extra.end()) throw std::invalid_argument("extra_poly: no such fixture");
    return it->second;
}

const AppendixTables& appendix() {
    static std::once_flag flag;
    static AppendixTables tables;
    std::call_once(flag, [] { tables = load_tables(); });
    return tables;
}

Int bell_number(int n) {
    if (n < 0) throw std::invalid_argument("bell_number: n >= 0 required");
    // Bell triangle
    std::vector<Int> row = {1};
    for (int i = 1; i <= n; ++i) {
        std::vector<Int> next(i + 1);
        next[0] = row.back();
        for (int j = 1; j <= i; ++j) next[j] = next[j - 1] + row[j - 1];
        row = std::move(next);
    }
    return row[0];
}

Int catalan_number(int n) {
    if (n < 0) throw std::invalid_argument("catalan_number: n >= 0 required");
    return binomial(2 * n, n) / (n + 1);
}

Int narayana(int m, int k) {
    if (m < 1 || k < 1 || k > m) throw std::invalid_argument("narayana: 1 <= k <= m required");
    return binomial(m - 1, k - 1) * binomial(m, k - 1) / k;
}

Int max_degree_exponent(int n) {
    if (n < 1) throw std::invalid_argument("max_degree_exponent: n >= 1 required");
    return Int(n / 2) * Int((n - 1) / 2);
}

namespace {

Int ab_triangle(int n, int k, bool a_variant) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k == 0 || k == n) return 1;
    // parity-split recurrences; the extra term joins on odd rows for B, even for A
    bool extra = a_variant ? (n % 2 == 0) : (n % 2 == 1);
    Int v = ab_triangle(n - 1, k - 1, a_variant) + ab_triangle(n - 1, k, a_variant);
    if (extra) v += ab_triangle(n - 2, k - 1, a_variant);
    return v;
}

}  // namespace

Int a_triangle(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("a_triangle: nonnegative arguments required");
    return ab_triangle(n, k, true);
}

Int b_triangle(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("b_triangle: nonnegative arguments required");
    return ab_triangle(n, k, false);
}

int c_coeff(int e, int i) {
    if (e < 1 || i < 1 || i > 2 * e) throw std::invalid_argument("c_coeff: out of range");
    return std::max(e - i + 1, i - e);
}

}  // namespace utq
