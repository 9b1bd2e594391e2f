#include "utq/setpartition.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace utq {

SetPartition SetPartition::from_blocks(std::vector<std::vector<int>> blocks) {
    if (blocks.empty()) throw std::invalid_argument("set partition must be nonempty");
    std::set<int> seen;
    for (auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("empty block");
        std::sort(b.begin(), b.end());
        for (int v : b) {
            if (v <= 0) throw std::invalid_argument("elements must be positive");
            if (!seen.insert(v).second)
                throw std::invalid_argument("duplicate element " + std::to_string(v));
        }
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    SetPartition p;
    p.blocks = std::move(blocks);
    p.ground.assign(seen.begin(), seen.end());
    return p;
}

bool SetPartition::over_interval() const {
    for (int i = 0; i < n(); ++i)
        if (ground[i] != i + 1) return false;
    return true;
}

namespace {

std::vector<std::string> split_all(const std::string& s, char delim) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == delim) { out.push_back(cur); cur.clear(); }
        else cur += c;
    }
    out.push_back(cur);
    return out;
}

}  // namespace

SetPartition parse_partition(const std::string& text) {
    std::vector<std::vector<int>> blocks;
    for (const std::string& blocktext : split_all(text, '/')) {
        std::vector<int> block;
        for (const std::string& tok : split_all(blocktext, ',')) {
            std::size_t pos = 0;
            int v;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("non-integer token '" + tok + "'");
            }
            while (pos < tok.size() && std::isspace(uint8_t(tok[pos]))) ++pos;
            if (pos != tok.size())
                throw std::invalid_argument("non-integer token '" + tok + "'");
            block.push_back(v);
        }
        blocks.push_back(std::move(block));
    }
    return SetPartition::from_blocks(std::move(blocks));
}


std::string format_partition(const SetPartition& p) {
    std::string s;
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        if (b) s += '/';
        for (std::size_t i = 0; i < p.blocks[b].size(); ++i) {
            if (i) s += ',';
            s += std::to_string(p.blocks[b][i]);
        }
    }
    return s;
}

ArcSet arc_set(const SetPartition& p) {
    ArcSet a;
    for (const auto& b : p.blocks)
        for (std::size_t i = 0; i + 1 < b.size(); ++i)
            a.arcs.emplace_back(b[i], b[i + 1]);
    std::sort(a.arcs.begin(), a.arcs.end());
    return a;
}

namespace {

bool arcs_cross(std::pair<int, int> a, std::pair<int, int> b) {
    // i<j<k<l with (i,k) = a, (j,l) = b after ordering by left endpoint
    if (a.first > b.first) std::swap(a, b);
    return a.first < b.first && b.first < a.second && a.second < b.second;
}

}  // namespace

CrossingData crossing_data(const SetPartition& p) {
    CrossingData cd;
    ArcSet as = arc_set(p);
    const auto& arcs = as.arcs;
    std::set<std::pair<int, int>> pairs;
    for (std::size_t x = 0; x < arcs.size(); ++x) {
        cd.d_stat += arcs[x].second - arcs[x].first - 1;
        for (std::size_t y = x + 1; y < arcs.size(); ++y) {
            auto a = arcs[x], b = arcs[y];
            if (a.first > b.first) std::swap(a, b);
            if (arcs_cross(a, b)) {
                cd.crossings4.push_back({a.first, b.first, a.second, b.second});
                pairs.emplace(a.first, b.first);
            }
        }
    }
    std::sort(cd.crossings4.begin(), cd.crossings4.end());
    cd.crossing_pairs.assign(pairs.begin(), pairs.end());
    return cd;
}

std::vector<MaximalCrossing> max_crossings(const SetPartition& p) {
    // next[v]/prev[v]: the unique arc leaving/entering v, if any
    std::map<int, int> next, prev;
    for (auto [i, j] : arc_set(p).arcs) { next[i] = j; prev[j] = i; }

    std::vector<MaximalCrossing> out;
    const auto& g = p.ground;
    for (std::size_t ai = 0; ai < g.size(); ++ai) {
        for (std::size_t bi = ai + 1; bi < g.size(); ++bi) {
            int a = g[ai], b = g[bi];
            auto pb = prev.find(b);
            if (pb != prev.end() && pb->second < a) continue;   // extendable left
            std::vector<int> seq = {a, b};
            while (true) {
                auto nx = next.find(seq[seq.size() - 2]);
                if (nx == next.end() || nx->second <= seq.back()) break;
                seq.push_back(nx->second);
            }
            if (seq.size() >= 3) out.push_back({std::move(seq)});
        }
    }
    return out;
}

bool all_maximal_crossings_even(const SetPartition& p) {
    for (const auto& mc : max_crossings(p))
        if (mc.length() % 2 != 0) return false;
    return true;
}

Standardized standardize(const SetPartition& p) {
    std::map<int, int> relabel;
    for (int i = 0; i < p.n(); ++i) relabel[p.ground[i]] = i + 1;
    std::vector<std::vector<int>> blocks;
    for (const auto& b : p.blocks) {
        std::vector<int> nb;
        for (int v : b) nb.push_back(relabel[v]);
        blocks.push_back(std::move(nb));
    }
    Standardized s;
    s.partition = SetPartition::from_blocks(std::move(blocks));
    s.f_shift = crossing_data(p).d_stat - crossing_data(s.partition).d_stat;
    return s;
}

SetPartition transpose(const SetPartition& p) {
    if (!p.over_interval())
        throw std::invalid_argument("transpose requires a partition of [n]");
    int n = p.n();
    std::vector<std::vector<int>> blocks;
    for (const auto& b : p.blocks) {
        std::vector<int> nb;
        for (int v : b) nb.push_back(n + 1 - v);
        blocks.push_back(std::move(nb));
    }
    return SetPartition::from_blocks(std::move(blocks));
}

std::vector<SetPartition> split_atomic(const SetPartition& p) {
    if (!p.over_interval())
        throw std::invalid_argument("split_atomic requires a partition of [n]");
    int n = p.n();
    std::vector<int> block_of(n + 1), block_end(p.num_blocks());
    for (int b = 0; b < p.num_blocks(); ++b) {
        block_end[b] = p.blocks[b].back();
        for (int v : p.blocks[b]) block_of[v] = b;
    }
    std::vector<SetPartition> factors;
    int start = 1, reach = 0;
    for (int m = 1; m <= n; ++m) {
        reach = std::max(reach, block_end[block_of[m]]);
        if (reach == m) {   // split point: [start, m] is a union of blocks
            std::vector<std::vector<int>> piece;
            for (const auto& b : p.blocks) {
                if (b.front() < start || b.front() > m) continue;
                std::vector<int> nb;
                for (int v : b) nb.push_back(v - start + 1);
                piece.push_back(std::move(nb));
            }
            factors.push_back(SetPartition::from_blocks(std::move(piece)));
            start = m + 1;
        }
    }
    return factors;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { for (int i = 0; i < n; ++i) parent[i] = i; }
    int find(int x) { while (parent[x] != x) x = parent[x] = parent[parent[x]]; return x; }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<SetPartition> connected_components(const SetPartition& p) {
    // blocks joined whenever arcs from the two blocks cross
    auto arcs = arc_set(p).arcs;
    std::map<int, int> block_of;
    for (int b = 0; b < p.num_blocks(); ++b)
        for (int v : p.blocks[b]) block_of[v] = b;
    UnionFind uf(p.num_blocks());
    for (std::size_t x = 0; x < arcs.size(); ++x)
        for (std::size_t y = x + 1; y < arcs.size(); ++y)
            if (arcs_cross(arcs[x], arcs[y]))
                uf.unite(block_of[arcs[x].first], block_of[arcs[y].first]);
    std::map<int, std::vector<std::vector<int>>> groups;
    for (int b = 0; b < p.num_blocks(); ++b)
        groups[uf.find(b)].push_back(p.blocks[b]);
    std::vector<SetPartition> out;
    for (auto& [root, blocks] : groups)
        out.push_back(SetPartition::from_blocks(std::move(blocks)));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.ground.front() < b.ground.front(); });
    return out;
}

std::vector<SetPartition> crossing_components(const SetPartition& p) {
    auto arcs = arc_set(p).arcs;
    UnionFind uf(int(arcs.size()));
    for (std::size_t x = 0; x < arcs.size(); ++x)
        for (std::size_t y = x + 1; y < arcs.size(); ++y)
            if (arcs_cross(arcs[x], arcs[y])) uf.unite(int(x), int(y));

    std::map<int, std::vector<std::pair<int, int>>> classes;
    for (std::size_t x = 0; x < arcs.size(); ++x)
        classes[uf.find(int(x))].push_back(arcs[x]);

    std::vector<SetPartition> out;
    for (auto& [root, carcs] : classes) {
        // the arcs of one class form disjoint chains; chains are the blocks
        std::map<int, int> nxt;
        std::set<int> verts, has_prev;
        for (auto [i, j] : carcs) { nxt[i] = j; verts.insert(i); verts.insert(j); has_prev.insert(j); }
        std::vector<std::vector<int>> blocks;
        for (int v : verts) {
            if (has_prev.count(v)) continue;
            std::vector<int> chain = {v};
            while (nxt.count(chain.back())) chain.push_back(nxt[chain.back()]);
            blocks.push_back(std::move(chain));
        }
        out.push_back(SetPartition::from_blocks(std::move(blocks)));
    }
    for (const auto& b : p.blocks)
        if (b.size() == 1) out.push_back(SetPartition::from_blocks({{b[0]}}));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.ground.front() < b.ground.front(); });
    return out;
}

ClassifyFlags classify(const SetPartition& p) {
    if (!p.over_interval())
        throw std::invalid_argument("classify requires a partition of [n]");
    ClassifyFlags f;
    f.atomic = split_atomic(p).size() == 1;
    f.connected = connected_components(p).size() == 1;
    auto arcs = arc_set(p).arcs;
    if (arcs.empty()) {
        f.crossing_connected = p.n() == 1;
        f.noncrossing = true;
    } else {
        UnionFind uf(int(arcs.size()));
        bool anycross = false;
        for (std::size_t x = 0; x < arcs.size(); ++x)
            for (std::size_t y = x + 1; y < arcs.size(); ++y)
                if (arcs_cross(arcs[x], arcs[y])) { uf.unite(int(x), int(y)); anycross = true; }
        std::set<int> roots;
        for (std::size_t x = 0; x < arcs.size(); ++x) roots.insert(uf.find(int(x)));
        f.crossing_connected = f.connected && roots.size() == 1;
        f.noncrossing = !anycross;
    }
    return f;
}

Outline outline(const SetPartition& p) {
    if (!p.over_interval())
        throw std::invalid_argument("outline requires a partition of [n]");
    int n = p.n();
    std::vector<bool> covered(n + 1, false);
    for (auto [i, j] : arc_set(p).arcs)
        for (int v = i + 1; v < j; ++v) covered[v] = true;
    Outline o;
    for (int v = 1; v <= n; ++v)
        if (!covered[v]) o.cut_points.push_back(v);
    return o;
}

SetPartition restrict_piece(const SetPartition& p, int i) {
    Outline o = outline(p);
    int ell = int(o.cut_points.size()) - 1;
    if (i < 1 || i > ell) throw std::out_of_range("piece index out of range");
    int lo = o.cut_points[i - 1], hi = o.cut_points[i];
    std::vector<std::vector<int>> blocks;
    for (const auto& b : p.blocks) {
        std::vector<int> nb;
        for (int v : b)
            if (lo <= v && v <= hi) nb.push_back(v - lo + 1);
        if (!nb.empty()) blocks.push_back(std::move(nb));
    }
    return SetPartition::from_blocks(std::move(blocks));
}

// ---------------------------------------------------------------------------
// Enumeration via restricted growth strings.
// ---------------------------------------------------------------------------

namespace {

SetPartition partition_from_rgs(const std::vector<int>& a) {
    int nblocks = *std::max_element(a.begin(), a.end()) + 1;
    std::vector<std::vector<int>> blocks(nblocks);
    for (std::size_t i = 0; i < a.size(); ++i) blocks[a[i]].push_back(int(i) + 1);
    return SetPartition::from_blocks(std::move(blocks));
}

// Lean classifier on a restricted growth string; avoids building the
// SetPartition object for counting sweeps over millions of partitions.
struct FastClassifier {
    int n;
    std::vector<int> block_end;        // last position of each block value
    std::vector<std::pair<int, int>> arcs;
    std::vector<int> arc_parent, block_parent;

    explicit FastClassifier(int n) : n(n) {
        block_end.reserve(n);
        arcs.reserve(n);
        arc_parent.reserve(n);
        block_parent.reserve(n);
    }

    int find(std::vector<int>& par, int x) {
        while (par[x] != x) x = par[x] = par[par[x]];
        return x;
    }

    ClassifyFlags run(const std::vector<int>& a) {
        int nblocks = *std::max_element(a.begin(), a.end()) + 1;
        block_end.assign(nblocks, 0);
        std::vector<int> last(nblocks, 0);
        arcs.clear();
        std::vector<int> arc_block;
        for (int i = 1; i <= n; ++i) {
            int b = a[i - 1];
            block_end[b] = i;
            if (last[b]) { arcs.emplace_back(last[b], i); arc_block.push_back(b); }
            last[b] = i;
        }

        ClassifyFlags f;
        f.atomic = true;
        int reach = 0;
        for (int m = 1; m < n; ++m) {
            reach = std::max(reach, block_end[a[m - 1]]);
            if (reach == m) { f.atomic = false; break; }
        }

        int na = int(arcs.size());
        arc_parent.resize(na);
        for (int i = 0; i < na; ++i) arc_parent[i] = i;
        block_parent.resize(nblocks);
        for (int i = 0; i < nblocks; ++i) block_parent[i] = i;
        bool anycross = false;
        for (int x = 0; x < na; ++x)
            for (int y = x + 1; y < na; ++y)
                if (arcs_cross(arcs[x], arcs[y])) {
                    anycross = true;
                    arc_parent[find(arc_parent, x)] = find(arc_parent, y);
                    block_parent[find(block_parent, arc_block[x])] = find(block_parent, arc_block[y]);
                }
        f.noncrossing = !anycross;

        int block_classes = 0;
        for (int b = 0; b < nblocks; ++b)
            if (find(block_parent, b) == b) ++block_classes;
        f.connected = block_classes == 1;

        int arc_classes = 0;
        for (int x = 0; x < na; ++x)
            if (find(arc_parent, x) == x) ++arc_classes;
        f.crossing_connected = na == 0 ? n == 1 : (f.connected && arc_classes == 1);
        return f;
    }
};

bool next_rgs(std::vector<int>& a, std::vector<int>& maxima) {
    int n = int(a.size());
    for (int i = n - 1; i >= 1; --i) {
        if (a[i] <= maxima[i - 1]) {
            ++a[i];
            maxima[i] = std::max(maxima[i - 1], a[i]);
            for (int j = i + 1; j < n; ++j) { a[j] = 0; maxima[j] = maxima[i]; }
            return true;
        }
    }
    return false;
}

void check_enumeration_n(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (n > kEnumerationCap)
        throw std::invalid_argument("n exceeds enumeration cap " + std::to_string(kEnumerationCap));
}

// completions(r, m): number of ways to extend an RGS by r positions when the
// prefix maximum is m
uint64_t completions(int r, int m) {
    static std::map<std::pair<int, int>, uint64_t> memo;
    if (r == 0) return 1;
    auto key = std::make_pair(r, m);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    uint64_t v = uint64_t(m + 1) * completions(r - 1, m) + completions(r - 1, m + 1);
    memo[key] = v;
    return v;
}

}  // namespace

void enumerate_partitions(int n, const std::function<bool(const SetPartition&)>& visit,
                          PartitionClass filter) {
    check_enumeration_n(n);
    std::vector<int> a(n, 0), maxima(n, 0);
    FastClassifier fc(n);
    do {
        if (filter != PartitionClass::all) {
            ClassifyFlags f = fc.run(a);
            bool keep = (filter == PartitionClass::atomic && f.atomic) ||
                        (filter == PartitionClass::connected && f.connected) ||
                        (filter == PartitionClass::crossing_connected && f.crossing_connected) ||
                        (filter == PartitionClass::noncrossing && f.noncrossing);
            if (!keep) continue;
        }
        if (!visit(partition_from_rgs(a))) return;
    } while (next_rgs(a, maxima));
}

void enumerate_partitions_range(int n, uint64_t first, uint64_t count,
                                const std::function<bool(const SetPartition&)>& visit) {
    check_enumeration_n(n);
    if (first >= completions(n - 1, 0)) return;
    // unrank: peel off completion counts position by position
    std::vector<int> a(n, 0), maxima(n, 0);
    uint64_t rem = first;
    for (int i = 1; i < n; ++i) {
        for (int v = 0; v <= maxima[i - 1] + 1; ++v) {
            int m = std::max(maxima[i - 1], v);
            uint64_t block = completions(n - 1 - i, m);
            if (rem < block) { a[i] = v; maxima[i] = m; break; }
            rem -= block;
        }
    }
    uint64_t done = 0;
    do {
        if (done++ >= count) return;
        if (!visit(partition_from_rgs(a))) return;
    } while (next_rgs(a, maxima));
}

CountRow count_table(int n) {
    check_enumeration_n(n);
    CountRow row;
    std::vector<int> a(n, 0), maxima(n, 0);
    FastClassifier fc(n);
    do {
        ClassifyFlags f = fc.run(a);
        ++row.bell;
        if (f.atomic) ++row.atomic;
        if (f.connected) ++row.connected;
        if (f.crossing_connected) ++row.crossing_connected;
    } while (next_rgs(a, maxima));
    return row;
}

}  // namespace utq
