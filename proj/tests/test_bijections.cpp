#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "symlat/bijections.hpp"

using namespace symlat;

TEST_CASE("level-step removal and insertion") {
    SECTION("hUh strips to U with level steps at vertices 0 and 1") {
        const auto removal = remove_levels(LatticePath::parse("hUh"));
        CHECK(removal.dyck_half.str() == "U");
        CHECK(removal.positions == std::vector<std::size_t>{0, 1});
        CHECK(insert_levels(removal.dyck_half, removal.positions) == LatticePath::parse("hUh"));
    }
    SECTION("a level-free half is fixed") {
        const auto removal = remove_levels(LatticePath::parse("UUD"));
        CHECK(removal.dyck_half.str() == "UUD");
        CHECK(removal.positions.empty());
    }
    SECTION("round-trips on every Motzkin half up to n = 8") {
        for (int n = 0; n <= 8; ++n)
            for_each_path(FamilySpec::motzkin(), n, [&](const LatticePath& p) {
                const auto removal = remove_levels(p);
                CHECK(insert_levels(removal.dyck_half, removal.positions) == p);
            });
    }
    SECTION("fibers have size binom(n, k) and sum to the Motzkin count") {
        const int n = 6;
        std::map<std::pair<std::string, std::size_t>, Int> fiber;
        Int total = 0;
        for_each_path(FamilySpec::motzkin(), n, [&](const LatticePath& p) {
            const auto removal = remove_levels(p);
            ++fiber[{removal.dyck_half.str(), removal.positions.size()}];
            ++total;
        });
        CHECK(total == 267);
        for (const auto& [key, size] : fiber)
            CHECK(size == binomial(n, static_cast<long>(key.second)));
    }
    SECTION("rejects wide levels and negative halves") {
        CHECK_THROWS_AS(remove_levels(LatticePath::parse("HU")), std::invalid_argument);
        CHECK_THROWS_AS(remove_levels(LatticePath::parse("Dh")), std::invalid_argument);
    }
}

TEST_CASE("wide-level removal and insertion") {
    SECTION("H strips to the empty half") {
        const auto removal = remove_wide_levels(LatticePath::parse("H"));
        CHECK(removal.dyck_half.step_count() == 0);
        CHECK(removal.positions == std::vector<std::size_t>{0});
        CHECK(insert_wide_levels(removal.dyck_half, removal.positions) == LatticePath::parse("H"));
    }
    SECTION("round-trips on every Schroeder half up to n = 10") {
        for (int n = 0; n <= 10; ++n)
            for_each_path(FamilySpec::schroeder(), n, [&](const LatticePath& p) {
                const auto removal = remove_wide_levels(p);
                CHECK(insert_wide_levels(removal.dyck_half, removal.positions) == p);
            });
    }
    SECTION("fiber decomposition reproduces s_4 = 13 = 6 + 3*2 + 1") {
        const int n = 4;
        std::map<long, Int> by_removed;  // k -> number of halves with k wide levels
        for_each_path(FamilySpec::schroeder(), n, [&](const LatticePath& p) {
            ++by_removed[static_cast<long>(remove_wide_levels(p).positions.size())];
        });
        CHECK(by_removed[0] == 6);
        CHECK(by_removed[1] == 6);
        CHECK(by_removed[2] == 1);
        // binom(n-k, k) Schroeder halves per Dyck half of length n-2k
        for (const auto& [k, size] : by_removed)
            CHECK(size == binomial(n - k, k) * count(FamilySpec::dyck(), static_cast<int>(n - 2 * k)));
    }
}

TEST_CASE("last-ascent marking") {
    const auto q = LatticePath::parse("UDUUDUUDUUDDU");
    REQUIRE(q.final_height() == 3);
    const auto marking = mark_last_ascents(q);
    CHECK(marking.last_ascent_positions == std::vector<std::size_t>{2, 5, 12});
    CHECK(mark_last_ascents(LatticePath::parse("UDUD")).last_ascent_positions.empty());
    CHECK_THROWS_AS(mark_last_ascents(LatticePath::parse("DU")), std::invalid_argument);
}

TEST_CASE("phi lowers the terminal height by flipping last ascents") {
    SECTION("the worked example: half of a length-26 path, k = 3, i = 2") {
        const auto q = LatticePath::parse("UDUUDUUDUUDDU");
        const auto image = phi(q, 2);
        CHECK(image.str() == "UDDUDDUDUUDDU");
        CHECK(image.final_height() == -1);
        CHECK(image.min_height() < 0);
    }
    SECTION("i = 0 is the identity") {
        const auto q = LatticePath::parse("UUDUD");
        CHECK(phi(q, 0) == q);
    }
    SECTION("the all-up half flips to all-down at i = k") {
        CHECK(phi(LatticePath::parse("UUU"), 3).str() == "DDD");
        CHECK(phi(LatticePath::parse("UUU"), 3).final_height() == -3);
    }
    SECTION("i beyond the mid-height is rejected") {
        CHECK_THROWS_AS(phi(LatticePath::parse("UUD"), 2), std::invalid_argument);
    }
    SECTION("terminal height is k - 2i everywhere (n <= 9)") {
        for (int n = 0; n <= 9; ++n)
            for_each_path(FamilySpec::dyck(), n, [&](const LatticePath& q) {
                const int k = q.final_height();
                for (int i = 0; i <= k; ++i) {
                    const auto image = phi(q, i);
                    CHECK(image.final_height() == k - 2 * i);
                    if (i > 0) CHECK(image.min_height() < 0);
                }
            });
    }
}

TEST_CASE("phi_inverse recovers the flipped half") {
    SECTION("nonnegative halves are their own preimage") {
        const auto pre = phi_inverse(LatticePath::parse("UDUU"));
        CHECK(pre.premier_count == 0);
        CHECK(pre.restricted == LatticePath::parse("UDUU"));
    }
    SECTION("DDD came from UUU with three flips") {
        const auto pre = phi_inverse(LatticePath::parse("DDD"));
        CHECK(pre.premier_count == 3);
        CHECK(pre.restricted == LatticePath::parse("UUU"));
    }
    SECTION("round-trips both ways (n <= 9)") {
        for (int n = 0; n <= 9; ++n) {
            for_each_path(FamilySpec::dyck(false, true), n, [&](const LatticePath& p) {
                const auto pre = phi_inverse(p);
                CHECK(pre.restricted.nonnegative());
                CHECK(phi(pre.restricted, pre.premier_count) == p);
            });
            for_each_path(FamilySpec::dyck(), n, [&](const LatticePath& q) {
                const int k = q.final_height();
                for (int i = 0; i <= k; ++i) {
                    const auto pre = phi_inverse(phi(q, i));
                    CHECK(pre.premier_count == i);
                    CHECK(pre.restricted == q);
                }
            });
        }
    }
    SECTION("images tile the whole free set (n <= 10)") {
        for (int n = 0; n <= 10; ++n) {
            std::unordered_set<std::string> images;
            Int produced = 0;
            for_each_path(FamilySpec::dyck(), n, [&](const LatticePath& q) {
                for (int i = 0; i <= q.final_height(); ++i) {
                    ++produced;
                    CHECK(images.insert(phi(q, i).str()).second);
                }
            });
            CHECK(produced == pow2(n));
            CHECK(Int(images.size()) == pow2(n));
        }
    }
}

TEST_CASE("psi masks up steps into level steps") {
    SECTION("the worked example: half of a length-16 path, mask 1,0,1") {
        const auto q = LatticePath::parse("UDDUHUD");
        CHECK(psi(q, UpStepMask{true, false, true}).str() == "hDDUHhD");
    }
    SECTION("the all-zero mask is the identity") {
        const auto q = LatticePath::parse("UDDUHUD");
        CHECK(psi(q, UpStepMask{false, false, false}) == q);
    }
    SECTION("mask length must match the up-step count") {
        CHECK_THROWS_AS(psi(LatticePath::parse("UD"), UpStepMask{}), std::invalid_argument);
        CHECK_THROWS_AS(psi(LatticePath::parse("UD"), UpStepMask{true, true}), std::invalid_argument);
        CHECK_THROWS_AS(psi(LatticePath::parse("hD"), UpStepMask{true}), std::invalid_argument);
    }
}

TEST_CASE("psi_inverse strips level steps back to up steps") {
    SECTION("no level steps means the all-zero mask") {
        const auto pre = psi_inverse(LatticePath::parse("UDH"));
        CHECK(pre.schroeder_half == LatticePath::parse("UDH"));
        CHECK(pre.mask == UpStepMask{false});
    }
    SECTION("the worked example in reverse") {
        const auto pre = psi_inverse(LatticePath::parse("hDDUHhD"));
        CHECK(pre.schroeder_half == LatticePath::parse("UDDUHUD"));
        CHECK(pre.mask == UpStepMask{true, false, true});
    }
    SECTION("round-trips both ways (n <= 7)") {
        for (int n = 0; n <= 7; ++n) {
            for_each_path(FamilySpec::ms(false, true), n, [&](const LatticePath& p) {
                const auto pre = psi_inverse(p);
                CHECK(psi(pre.schroeder_half, pre.mask) == p);
            });
            for_each_path(FamilySpec::schroeder(false, true), n, [&](const LatticePath& q) {
                int k = 0;
                for (Step s : q.steps())
                    if (s == Step::up) ++k;
                for (unsigned long bits = 0; bits < (1ul << k); ++bits) {
                    UpStepMask mask(static_cast<std::size_t>(k));
                    for (int b = 0; b < k; ++b) mask[static_cast<std::size_t>(b)] = (bits >> b) & 1;
                    const auto pre = psi_inverse(psi(q, mask));
                    CHECK(pre.schroeder_half == q);
                    CHECK(pre.mask == mask);
                }
            });
        }
    }
    SECTION("mask images tile the free MS family: sum of 2^k equals h_(n+1)") {
        const int n = 8;
        std::unordered_set<std::string> images;
        Int produced = 0;
        for_each_path(FamilySpec::schroeder(false, true), n, [&](const LatticePath& q) {
            int k = 0;
            for (Step s : q.steps())
                if (s == Step::up) ++k;
            for (unsigned long bits = 0; bits < (1ul << k); ++bits) {
                UpStepMask mask(static_cast<std::size_t>(k));
                for (int b = 0; b < k; ++b) mask[static_cast<std::size_t>(b)] = (bits >> b) & 1;
                ++produced;
                CHECK(images.insert(psi(q, mask).str()).second);
            }
        });
        CHECK(produced == 12970);  // h_9
        CHECK(Int(images.size()) == count(FamilySpec::ms(false, true), n));
    }
}
