#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "jmod/geometric.hpp"

using namespace jmod;

namespace {

Composition comp(std::vector<int> parts) { return Composition(std::move(parts)); }

// every composition of n, for cross-checks
std::vector<std::vector<int>> compositions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int rem) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = 1; p <= rem; ++p) {
            cur.push_back(p);
            rec(rem - p);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

}  // namespace

TEST_CASE("composition validation") {
    CHECK_THROWS_AS(comp({}), std::invalid_argument);
    CHECK_THROWS_AS(comp({1, 0}), std::invalid_argument);
    CHECK(comp({1, 2, 3}).total() == 6);
    CHECK(comp({1, 1, 2}).boundaries() == std::vector<int>{1, 2});
}

TEST_CASE("is_subpartition") {
    CHECK(is_subpartition(comp({1, 1, 2}), comp({2, 2})));
    CHECK_FALSE(is_subpartition(comp({2, 2}), comp({1, 3})));
    CHECK(is_subpartition(comp({2, 2}), comp({2, 2})));
    CHECK_THROWS_AS(is_subpartition(comp({1}), comp({2})), std::invalid_argument);
}

TEST_CASE("enumerate_split_matrices basics") {
    auto two = enumerate_split_matrices(comp({1, 1}), comp({1, 1}));
    REQUIRE(two.size() == 2);
    // lexicographic row-major order
    CHECK(two[0].entries == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
    CHECK(two[1].entries == std::vector<std::vector<int>>{{1, 0}, {0, 1}});

    auto forced = enumerate_split_matrices(comp({5}), comp({2, 3}));
    REQUIRE(forced.size() == 1);
    CHECK(forced[0].entries == std::vector<std::vector<int>>{{2, 3}});

    // brute-force count for margins (2,1) / (1,1,1): row one picks two of the
    // three unit columns, row two is forced
    CHECK(enumerate_split_matrices(comp({2, 1}), comp({1, 1, 1})).size() == 3);

    CHECK_THROWS_AS(enumerate_split_matrices(comp({2}), comp({3})),
                    std::invalid_argument);
}

TEST_CASE("matrix margins hold and the set is never empty") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& beta : compositions_of(n))
            for (const auto& gamma : compositions_of(n)) {
                auto mats = enumerate_split_matrices(comp(beta), comp(gamma));
                CHECK(!mats.empty());
                for (const auto& m : mats) {
                    for (std::size_t i = 0; i < beta.size(); ++i) {
                        int rs = 0;
                        for (int v : m.entries[i]) rs += v;
                        CHECK(rs == beta[i]);
                    }
                    for (std::size_t j = 0; j < gamma.size(); ++j) {
                        int cs = 0;
                        for (std::size_t i = 0; i < beta.size(); ++i)
                            cs += m.entries[i][j];
                        CHECK(cs == gamma[j]);
                    }
                }
            }
}

TEST_CASE("enumeration count matches the contingency-table DP") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& beta : compositions_of(n))
            for (const auto& gamma : compositions_of(n)) {
                auto mats = enumerate_split_matrices(comp(beta), comp(gamma));
                CHECK(static_cast<long long>(mats.size()) ==
                      count_contingency_tables(comp(beta), comp(gamma)));
            }
}

TEST_CASE("vanishing_cuspidal") {
    CHECK(vanishing_cuspidal(comp({2, 2}), comp({1, 3})));
    CHECK_FALSE(vanishing_cuspidal(comp({1, 1, 1}), comp({2, 1})));
    CHECK_FALSE(vanishing_cuspidal(comp({2, 2}), comp({2, 2})));
}

TEST_CASE("cuspidal oracle examples") {
    std::vector<CuspidalPoint> pts{{"rho", 1, 0}, {"rho", 1, 1}};
    auto sum = oracle_jacquet_cuspidal(pts, comp({1, 1}));
    REQUIRE(sum.terms().size() == 2);
    CHECK(sum.total_multiplicity() == 2);
    Arrangement fwd{{pts[0]}, {pts[1]}};
    Arrangement rev{{pts[1]}, {pts[0]}};
    CHECK(sum.terms().count(fwd) == 1);
    CHECK(sum.terms().count(rev) == 1);

    std::vector<CuspidalPoint> one{{"rho", 3, 0}};
    CHECK(oracle_jacquet_cuspidal(one, comp({3})).total_multiplicity() == 1);

    std::vector<CuspidalPoint> dims22{{"rho", 2, 0}, {"rho", 2, 1}};
    CHECK(oracle_jacquet_cuspidal(dims22, comp({1, 3})).empty());
}

TEST_CASE("equal points assigned to swapped blocks collapse to one arrangement") {
    std::vector<CuspidalPoint> pts{{"rho", 1, 5}, {"rho", 1, 5}};
    auto sum = oracle_jacquet_cuspidal(pts, comp({1, 1}));
    REQUIRE(sum.terms().size() == 1);
    CHECK(sum.terms().begin()->second == 2);
}

namespace {

// independent feasibility check: can the multiset of dims be partitioned into
// groups summing to the parts of gamma?
bool can_fill(std::vector<int> dims, const std::vector<int>& parts) {
    std::function<bool(std::size_t, int)> rec = [&](std::size_t j, int rem) -> bool {
        if (rem == 0) {
            if (j + 1 == parts.size())
                return std::all_of(dims.begin(), dims.end(),
                                   [](int d) { return d == 0; });
            return rec(j + 1, parts[j + 1]);
        }
        for (std::size_t i = 0; i < dims.size(); ++i) {
            if (dims[i] == 0 || dims[i] > rem) continue;
            if (i > 0 && dims[i] == dims[i - 1]) continue;  // skip duplicates
            int d = dims[i];
            dims[i] = 0;
            if (rec(j, rem - d)) {
                dims[i] = d;
                return true;
            }
            dims[i] = d;
        }
        return false;
    };
    std::vector<int> sorted = dims;
    std::sort(sorted.begin(), sorted.end());
    dims = sorted;
    return rec(0, parts[0]);
}

}  // namespace

TEST_CASE("oracle emptiness is block-filling infeasibility") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& dims : compositions_of(n))
            for (const auto& gamma : compositions_of(n)) {
                std::vector<CuspidalPoint> pts;
                for (std::size_t i = 0; i < dims.size(); ++i)
                    pts.push_back(CuspidalPoint{"rho", dims[i], static_cast<int>(i)});
                bool empty = oracle_jacquet_cuspidal(pts, comp(gamma)).empty();
                CHECK(empty == !can_fill(dims, gamma));
            }
}

TEST_CASE("oracle emptiness matches vanishing_cuspidal for equal dims") {
    for (int m = 1; m <= 3; ++m)
        for (int r = 1; r * m <= 6; ++r)
            for (const auto& gamma : compositions_of(r * m)) {
                std::vector<CuspidalPoint> pts;
                std::vector<int> dims(static_cast<std::size_t>(r), m);
                for (int i = 0; i < r; ++i)
                    pts.push_back(CuspidalPoint{"rho", m, i});
                bool empty = oracle_jacquet_cuspidal(pts, comp(gamma)).empty();
                CHECK(empty == vanishing_cuspidal(comp(dims), comp(gamma)));
            }
}

// The vanishing predicate is strictly coarser than oracle emptiness on mixed
// dims: (1,2) cannot be reordered into (2,1) blockwise, yet the assignment
// sending the dim-2 point to the first block fills every block.
TEST_CASE("subpartition vanishing over-reports on mixed dims") {
    std::vector<CuspidalPoint> pts{{"rho", 1, 0}, {"rho", 2, 1}};
    CHECK(vanishing_cuspidal(comp({1, 2}), comp({2, 1})));
    CHECK_FALSE(oracle_jacquet_cuspidal(pts, comp({2, 1})).empty());
}
