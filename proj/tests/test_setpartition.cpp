#include "utq/setpartition.hpp"

#include "utq/tables.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace utq;

TEST_CASE("parse and format round trip") {
    SetPartition p = parse_partition("1,3,5/2,4,6");
    CHECK(p.n() == 6);
    CHECK(p.num_blocks() == 2);
    CHECK(format_partition(p) == "1,3,5/2,4,6");
    CHECK(parse_partition(format_partition(p)) == p);

    SetPartition q = parse_partition("2,5/1,3,4");
    CHECK(format_partition(q) == "1,3,4/2,5");   // canonical block order

    CHECK_THROWS(parse_partition("1,1/2"));
    CHECK_THROWS(parse_partition("1,/2"));
    CHECK_THROWS(parse_partition("1,a/2"));
    CHECK_THROWS(parse_partition(""));
    CHECK_THROWS(parse_partition("0,1"));
}

TEST_CASE("arc sets") {
    CHECK(arc_set(parse_partition("1,3,4/2,5")).arcs ==
          std::vector<std::pair<int, int>>{{1, 3}, {2, 5}, {3, 4}});
    CHECK(arc_set(parse_partition("1/2/3/4/5/6")).arcs.empty());
    CHECK(arc_set(parse_partition("1,2,3,4,5,6")).arcs ==
          std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
}

TEST_CASE("crossing data") {
    SUBCASE("paper example") {
        CrossingData cd = crossing_data(parse_partition("1,3,4/2,5"));
        CHECK(cd.crossing_pairs == std::vector<std::pair<int, int>>{{1, 2}});
        CHECK(cd.d_stat == 3);
        REQUIRE(cd.crossings4.size() == 1);
        CHECK(cd.crossings4[0] == std::array<int, 4>{1, 2, 3, 5});
    }
    SUBCASE("three mutually crossing arcs") {
        CrossingData cd = crossing_data(parse_partition("1,4/2,5/3,6"));
        CHECK(cd.crossing_pairs ==
              std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
        CHECK(cd.d_stat == 6);
    }
    SUBCASE("noncrossing") {
        CrossingData cd = crossing_data(parse_partition("1,2/3,4"));
        CHECK(cd.crossing_pairs.empty());
        CHECK(cd.d_stat == 0);
    }
    SUBCASE("crossing pairs are the projections of the 4-tuples") {
        enumerate_partitions(7, [&](const SetPartition& p) {
            CrossingData cd = crossing_data(p);
            std::set<std::pair<int, int>> proj;
            for (const auto& c : cd.crossings4) proj.emplace(c[0], c[1]);
            std::set<std::pair<int, int>> pairs(cd.crossing_pairs.begin(),
                                                cd.crossing_pairs.end());
            CHECK(proj == pairs);
            return true;
        });
    }
}

TEST_CASE("maximal crossings") {
    SUBCASE("one even maximal crossing") {
        auto mc = max_crossings(parse_partition("1,3,5/2,4"));
        REQUIRE(mc.size() == 1);
        CHECK(mc[0].vertices == std::vector<int>{1, 2, 3, 4, 5});
        CHECK(mc[0].length() == 2);
        CHECK(all_maximal_crossings_even(parse_partition("1,3,5/2,4")));
    }
    SUBCASE("one odd maximal crossing") {
        auto mc = max_crossings(parse_partition("1,3/2,4"));
        REQUIRE(mc.size() == 1);
        CHECK(mc[0].length() == 1);
        CHECK_FALSE(all_maximal_crossings_even(parse_partition("1,3/2,4")));
    }
    SUBCASE("an arc over a vertex is a 0-crossing") {
        auto mc = max_crossings(parse_partition("1,3/2"));
        REQUIRE(mc.size() == 1);
        CHECK(mc[0].length() == 0);
    }
    SUBCASE("no crossings at all") {
        CHECK(max_crossings(parse_partition("1,2")).empty());
    }
    SUBCASE("brute force comparison on [6]") {
        // maximal crossings found by exhaustive extension search over all
        // vertex sequences
        enumerate_partitions(6, [&](const SetPartition& p) {
            std::set<std::pair<int, int>> arcs;
            for (auto a : arc_set(p).arcs) arcs.insert(a);
            auto is_crossing_seq = [&](const std::vector<int>& seq) {
                if (seq.size() < 3) return false;
                for (std::size_t r = 0; r + 2 < seq.size(); ++r)
                    if (!arcs.count({seq[r], seq[r + 2]})) return false;
                for (std::size_t r = 0; r + 1 < seq.size(); ++r)
                    if (seq[r] >= seq[r + 1]) return false;
                return true;
            };
            // enumerate all increasing sequences of length >= 3 in [6]
            std::set<std::vector<int>> all;
            for (int mask = 0; mask < 64; ++mask) {
                std::vector<int> seq;
                for (int v = 1; v <= 6; ++v)
                    if (mask & (1 << (v - 1))) seq.push_back(v);
                if (is_crossing_seq(seq)) all.insert(seq);
            }
            std::set<std::vector<int>> maximal;
            for (const auto& seq : all) {
                bool extendable = false;
                for (const auto& other : all)
                    if (other.size() == seq.size() + 1) {
                        if (std::equal(seq.begin(), seq.end(), other.begin()) ||
                            std::equal(seq.begin(), seq.end(), other.begin() + 1))
                            extendable = true;
                    }
                if (!extendable) maximal.insert(seq);
            }
            std::set<std::vector<int>> got;
            for (const auto& mc : max_crossings(p)) got.insert(mc.vertices);
            CHECK(got == maximal);
            return true;
        });
    }
}

TEST_CASE("standardize") {
    SUBCASE("paper example with shift") {
        Standardized s = standardize(parse_partition("4,9/6,14/10"));
        CHECK(format_partition(s.partition) == "1,3/2,5/4");
        CHECK(s.f_shift == 8);
    }
    SUBCASE("identity on interval partitions") {
        enumerate_partitions(6, [&](const SetPartition& p) {
            Standardized s = standardize(p);
            CHECK(s.partition == p);
            CHECK(s.f_shift == 0);
            return true;
        });
    }
    SUBCASE("single displaced arc") {
        Standardized s = standardize(parse_partition("2,4"));
        CHECK(format_partition(s.partition) == "1,2");
        CHECK(s.f_shift == 1);
    }
    SUBCASE("crossing count is preserved") {
        Standardized s = standardize(parse_partition("4,9/6,14/10"));
        CHECK(crossing_data(s.partition).crossing_pairs.size() ==
              crossing_data(parse_partition("4,9/6,14/10")).crossing_pairs.size());
    }
}

TEST_CASE("transpose") {
    CHECK(format_partition(transpose(parse_partition("1,2/3"))) == "1/2,3");
    CHECK_THROWS(transpose(parse_partition("2,4")));
    SUBCASE("involution and invariants up to [8]") {
        for (int n = 1; n <= 8; ++n)
            enumerate_partitions(n, [&](const SetPartition& p) {
                SetPartition t = transpose(p);
                CHECK(transpose(t) == p);
                CrossingData a = crossing_data(p), b = crossing_data(t);
                CHECK(a.crossing_pairs.size() == b.crossing_pairs.size());
                CHECK(a.d_stat == b.d_stat);
                return true;
            });
    }
    SUBCASE("the exceptional 13-partition is self-transpose") {
        SetPartition p = parse_partition("1,5,7,9,13/2,6,8,12/3,10/4,11");
        CHECK(transpose(p) == p);
    }
}

TEST_CASE("atomic splits") {
    auto split = split_atomic(parse_partition("1,2/3,4"));
    REQUIRE(split.size() == 2);
    CHECK(format_partition(split[0]) == "1,2");
    CHECK(format_partition(split[1]) == "1,2");

    CHECK(split_atomic(parse_partition("1,5/2,3,4")).size() == 1);
    CHECK(split_atomic(parse_partition("1/2/3")).size() == 3);

    SUBCASE("concatenation reconstructs the partition") {
        enumerate_partitions(7, [&](const SetPartition& p) {
            auto factors = split_atomic(p);
            std::vector<std::vector<int>> blocks;
            int off = 0;
            for (const auto& f : factors) {
                for (auto b : f.blocks) {
                    for (auto& v : b) v += off;
                    blocks.push_back(b);
                }
                off += f.n();
            }
            CHECK(SetPartition::from_blocks(blocks) == p);
            for (const auto& f : factors) CHECK(classify(f).atomic);
            return true;
        });
    }
}

TEST_CASE("components") {
    SUBCASE("paper examples") {
        auto cc = crossing_components(parse_partition("1,5/2,3,4"));
        REQUIRE(cc.size() == 3);
        CHECK(format_partition(cc[0]) == "1,5");
        CHECK(format_partition(cc[1]) == "2,3");
        CHECK(format_partition(cc[2]) == "3,4");

        auto cc2 = crossing_components(parse_partition("1,3/2,4,5"));
        REQUIRE(cc2.size() == 2);
        CHECK(format_partition(cc2[0]) == "1,3/2,4");
        CHECK(format_partition(cc2[1]) == "4,5");

        auto cc3 = crossing_components(parse_partition("1,3,5/2,4"));
        REQUIRE(cc3.size() == 1);
        CHECK(format_partition(cc3[0]) == "1,3,5/2,4");

        auto comp = connected_components(parse_partition("1,5/2,3,4"));
        REQUIRE(comp.size() == 2);
        CHECK(format_partition(comp[0]) == "1,5");
        CHECK(format_partition(comp[1]) == "2,3,4");
    }
    SUBCASE("arc and crossing sets are disjoint unions over crossing components") {
        for (int n = 1; n <= 9; ++n)
            enumerate_partitions(n, [&](const SetPartition& p) {
                std::multiset<std::pair<int, int>> arcs, comp_arcs;
                for (auto a : arc_set(p).arcs) arcs.insert(a);
                std::multiset<std::pair<int, int>> crs, comp_crs;
                for (auto c : crossing_data(p).crossing_pairs) crs.insert(c);
                for (const auto& g : crossing_components(p)) {
                    for (auto a : arc_set(g).arcs) comp_arcs.insert(a);
                    for (auto c : crossing_data(g).crossing_pairs) comp_crs.insert(c);
                }
                CHECK(arcs == comp_arcs);
                CHECK(crs == comp_crs);
                return true;
            });
    }
}

TEST_CASE("classification") {
    SUBCASE("paper figure") {
        ClassifyFlags a = classify(parse_partition("1,5/2,3,4"));
        CHECK(a.atomic);
        CHECK_FALSE(a.connected);
        ClassifyFlags b = classify(parse_partition("1,3/2,4,5"));
        CHECK(b.connected);
        CHECK_FALSE(b.crossing_connected);
        ClassifyFlags c = classify(parse_partition("1,3,5/2,4"));
        CHECK(c.crossing_connected);
    }
    SUBCASE("implication chain for all partitions up to 9") {
        for (int n = 1; n <= 9; ++n)
            enumerate_partitions(n, [&](const SetPartition& p) {
                ClassifyFlags f = classify(p);
                if (f.crossing_connected) CHECK(f.connected);
                if (f.connected) CHECK(f.atomic);
                return true;
            });
    }
    SUBCASE("connectedness matches the interval characterization") {
        // disconnected iff some union of blocks is a proper nonempty subinterval
        for (int n = 1;n <= 8; ++n)
            enumerate_partitions(n, [&](const SetPartition& p) {
                bool interval_disconnected = false;
                for (int mask = 1; mask + 1 < (1 << p.num_blocks()); ++mask) {
                    std::set<int> u;
                    for (int b = 0; b < p.num_blocks(); ++b)
                        if (mask & (1 << b)) u.insert(p.blocks[b].begin(), p.blocks[b].end());
                    if (u.empty()) continue;
                    if (int(u.size()) == *u.rbegin() - *u.begin() + 1 && int(u.size()) < n)
                        interval_disconnected = true;
                }
                CHECK(classify(p).connected == !interval_disconnected);
                return true;
            });
    }
}

TEST_CASE("enumeration counts") {
    SUBCASE("table rows") {
        CountRow r1 = count_table(1);
        CHECK(r1.bell == 1); CHECK(r1.atomic == 1);
        CHECK(r1.connected == 1); CHECK(r1.crossing_connected == 1);
        CountRow r6 = count_table(6);
        CHECK(r6.bell == 203); CHECK(r6.atomic == 92);
        CHECK(r6.connected == 21); CHECK(r6.crossing_connected == 5);
    }
    SUBCASE("bell recurrence via the number family") {
        for (int n = 1; n <= 9; ++n) {
            uint64_t count = 0;
            enumerate_partitions(n, [&](const SetPartition&) { ++count; return true; });
            CHECK(Int(count) == bell_number(n));
        }
    }
    SUBCASE("noncrossing partitions are counted by Catalan numbers") {
        for (int n = 1; n <= 10; ++n) {
            uint64_t count = 0;
            enumerate_partitions(n, [&](const SetPartition&) { ++count; return true; },
                                 PartitionClass::noncrossing);
            CHECK(Int(count) == catalan_number(n));
        }
    }
    SUBCASE("arc count identity |Arc| = n - blocks") {
        for (int n = 1; n <= 9; ++n)
            enumerate_partitions(n, [&](const SetPartition& p) {
                CHECK(int(arc_set(p).arcs.size()) == p.n() - p.num_blocks());
                return true;
            });
    }
    SUBCASE("range scans restart where expected") {
        std::vector<std::string> all;
        enumerate_partitions(5, [&](const SetPartition& p) {
            all.push_back(format_partition(p));
            return true;
        });
        REQUIRE(all.size() == 52);
        std::vector<std::string> mid;
        enumerate_partitions_range(5, 20, 12, [&](const SetPartition& p) {
            mid.push_back(format_partition(p));
            return true;
        });
        REQUIRE(mid.size() == 12);
        for (int i = 0; i < 12; ++i) CHECK(mid[i] == all[20 + i]);
    }
    SUBCASE("cap enforced") {
        CHECK_THROWS(count_table(kEnumerationCap + 1));
        CHECK_THROWS(count_table(0));
    }
}

TEST_CASE("outline and restriction") {
    SetPartition p = parse_partition("1,3/2,5/4/6,7/8/9/10,13/11,12");
    Outline o = outline(p);
    CHECK(o.cut_points == std::vector<int>{1, 5, 6, 7, 8, 9, 10, 13});
    CHECK(format_partition(restrict_piece(p, 1)) == "1,3/2,5/4");
    CHECK(format_partition(restrict_piece(p, 3)) == "1,2");
    CHECK(format_partition(restrict_piece(p, 7)) == "1,4/2,3");
    CHECK_THROWS(restrict_piece(p, 0));
    CHECK_THROWS(restrict_piece(p, 8));

    SUBCASE("pieces reconstruct the arc set") {
        enumerate_partitions(8, [&](const SetPartition& q) {
            Outline oq = outline(q);
            std::multiset<std::pair<int, int>> rebuilt, arcs;
            for (auto a : arc_set(q).arcs) arcs.insert(a);
            for (int i = 1; i < int(oq.cut_points.size()); ++i) {
                int lo = oq.cut_points[i - 1];
                for (auto [a, b] : arc_set(restrict_piece(q, i)).arcs)
                    rebuilt.emplace(a + lo - 1, b + lo - 1);
            }
            CHECK(rebuilt == arcs);
            return true;
        });
    }
}
