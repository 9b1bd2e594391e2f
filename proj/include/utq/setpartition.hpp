#pragma once

// Set partitions of finite subsets of N, their arc sets, crossings and the
// connectivity taxonomy (atomic / connected / crossing-connected), plus
// restricted-growth-string enumeration.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace utq {

struct SetPartition {
    std::vector<int> ground;                 // sorted, distinct, positive
    std::vector<std::vector<int>> blocks;    // disjoint, sorted, ordered by min

    static SetPartition from_blocks(std::vector<std::vector<int>> blocks);

    int n() const { return int(ground.size()); }
    int num_blocks() const { return int(blocks.size()); }
    bool over_interval() const;              // ground == [1..n]
    bool operator==(const SetPartition& o) const { return blocks == o.blocks; }
    bool operator<(const SetPartition& o) const { return blocks < o.blocks; }
};

SetPartition parse_partition(const std::string& text);
std::string format_partition(const SetPartition& p);

struct ArcSet {
    std::vector<std::pair<int, int>> arcs;   // sorted pairs (i,j), i<j
};

struct CrossingData {
    std::vector<std::array<int, 4>> crossings4;   // (i,j,k,l), i<j<k<l
    std::vector<std::pair<int, int>> crossing_pairs;   // Cr
    long d_stat = 0;                               // sum of (k-i-1) over arcs
};

struct MaximalCrossing {
    std::vector<int> vertices;               // i_0 < ... < i_{k+2}
    int length() const { return int(vertices.size()) - 3; }
};

struct Outline {
    std::vector<int> cut_points;
};

struct ClassifyFlags {
    bool atomic = false;
    bool connected = false;
    bool crossing_connected = false;
    bool noncrossing = false;
};

ArcSet arc_set(const SetPartition& p);
CrossingData crossing_data(const SetPartition& p);

std::vector<MaximalCrossing> max_crossings(const SetPartition& p);
bool all_maximal_crossings_even(const SetPartition& p);

// Order-preserving relabeling onto [k]; f_shift = d(p) - d(st(p)) >= 0.
struct Standardized {
    SetPartition partition;
    long f_shift = 0;
};
Standardized standardize(const SetPartition& p);

SetPartition transpose(const SetPartition& p);          // i -> n+1-i, ground [n]

std::vector<SetPartition> split_atomic(const SetPartition& p);
std::vector<SetPartition> connected_components(const SetPartition& p);
std::vector<SetPartition> crossing_components(const SetPartition& p);
ClassifyFlags classify(const SetPartition& p);

Outline outline(const SetPartition& p);                 // ground [n]
SetPartition restrict_piece(const SetPartition& p, int i);   // piece i, 1-based

// Enumeration of set partitions of [n] in restricted-growth-string order.
// visit returns false to stop early.
enum class PartitionClass { all, atomic, connected, crossing_connected, noncrossing };
void enumerate_partitions(int n, const std::function<bool(const SetPartition&)>& visit,
                          PartitionClass filter = PartitionClass::all);
// Restartable range scan: visits partitions with rank in [first, first+count).
void enumerate_partitions_range(int n, uint64_t first, uint64_t count,
                                const std::function<bool(const SetPartition&)>& visit);

struct CountRow {
    uint64_t bell = 0, atomic = 0, connected = 0, crossing_connected = 0;
};
CountRow count_table(int n);

inline constexpr int kEnumerationCap = 13;

}  // namespace utq
