#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jmod/verify.hpp"

using namespace jmod;

namespace {

Segment seg(int a, int b, int dim = 1, const std::string& line = "rho") {
    return Segment{line, dim, a, b};
}

}  // namespace

TEST_CASE("check_mult_free") {
    CHECK(check_mult_free(Multisegment({seg(0, 1), seg(3, 4)}), 2).mult_free);

    auto res = check_mult_free(Multisegment({seg(0, 1), seg(0, 1)}), 1);
    CHECK_FALSE(res.mult_free);
    REQUIRE(res.witness);
    CHECK(res.witness->splits.size() == 2);
    CHECK(res.witness->left == Multisegment({seg(0, 0)}));
    CHECK(res.witness->right == Multisegment({seg(0, 1), seg(1, 1)}));

    // single segments always split multiplicity-free
    for (int m = 1; m <= 3; ++m) {
        Multisegment single({seg(0, 3, m)});
        int n = single.total_size();
        for (int l = 1; l <= n - 1; ++l)
            CHECK(check_mult_free(single, l).mult_free);
    }
}

TEST_CASE("dp_split_count") {
    // single segment of length 3, dim 1: one solution per level
    Multisegment single({seg(0, 2)});
    for (int l = 0; l <= 3; ++l) CHECK(dp_split_count(single, l) == 1);
    // two segments of length 2: counts 1,2,3,2,1 over l = 0..4
    Multisegment pair({seg(0, 1), seg(3, 4)});
    CHECK(dp_split_count(pair, 0) == 1);
    CHECK(dp_split_count(pair, 1) == 2);
    CHECK(dp_split_count(pair, 2) == 3);
    CHECK(dp_split_count(pair, 3) == 2);
    CHECK(dp_split_count(pair, 4) == 1);
    // dim 2 segment contributes only even levels
    CHECK(dp_split_count(Multisegment({seg(0, 1, 2)}), 1) == 0);
    CHECK(dp_split_count(Multisegment({seg(0, 1, 2)}), 2) == 1);
}

TEST_CASE("exhaustive theorem-1 sweep finds no violations") {
    SweepConfig cfg;
    cfg.max_b = 3;
    cfg.max_r = 2;
    Verdict verdict = sweep_theorem1(cfg);
    CHECK(verdict.checked > 0);
    CHECK(verdict.ok());
}

TEST_CASE("removing the m-irr filter exposes the repeated-segment duplicate") {
    SweepConfig cfg;
    cfg.max_b = 2;
    cfg.max_r = 2;
    cfg.require_m_irr = false;
    Verdict verdict = sweep_theorem1(cfg);
    REQUIRE_FALSE(verdict.ok());
    Multisegment repeated({seg(0, 1, 1, "rho0"), seg(0, 1, 1, "rho0")});
    bool found = false;
    for (const auto& v : verdict.violations)
        if (v.ms == repeated && v.l == 1 && v.splits.size() == 2) found = true;
    CHECK(found);
}

TEST_CASE("empty domain yields an empty verdict") {
    SweepConfig cfg;
    cfg.max_b = 0;  // only the size-1 segment, which has no proper Levi
    cfg.max_r = 1;
    Verdict verdict = sweep_theorem1(cfg);
    CHECK(verdict.checked == 0);
    CHECK(verdict.ok());
}

TEST_CASE("consistency sweep passes at desk scale") {
    SweepConfig cfg;
    cfg.max_b = 3;
    cfg.max_r = 2;
    Verdict verdict = sweep_consistency(cfg);
    CHECK(verdict.checked > 0);
    CHECK(verdict.ok());
}

TEST_CASE("invariant checker flags a corrupted sum") {
    Multisegment ms({seg(0, 1), seg(3, 4)});
    FormalSum good = jacquet_max_levi(ms, 2);
    CHECK(check_sum_invariants(ms, 2, good).empty());

    // drop a term: the count identity must fire
    FormalSum missing;
    bool skipped = false;
    for (const auto& [key, splits] : good.terms()) {
        if (!skipped) {
            skipped = true;
            continue;
        }
        for (const auto& sv : splits) missing.add(key.first, key.second, sv);
    }
    CHECK_FALSE(check_sum_invariants(ms, 2, missing).empty());

    // swap in a term with the wrong support: conservation must fire
    FormalSum corrupted = good;
    corrupted.add(Multisegment({seg(7, 8)}), Multisegment({seg(0, 1), seg(3, 4)})
                  , SplitVector{0, 0});
    CHECK_FALSE(check_sum_invariants(ms, 2, corrupted).empty());
}

TEST_CASE("sampled sweeps are deterministic under a fixed seed") {
    SweepConfig cfg;
    cfg.max_b = 3;
    cfg.max_r = 3;
    cfg.dims = {1, 2};
    cfg.lines = 2;
    cfg.seed = 2024;
    cfg.samples = 300;
    Verdict v1 = sweep_theorem1(cfg);
    Verdict v2 = sweep_theorem1(cfg);
    CHECK(v1.checked == v2.checked);
    CHECK(v1.violations.size() == v2.violations.size());
    CHECK(v1.ok());
}

TEST_CASE("mixed-line sampled theorem-1 sweep") {
    SweepConfig cfg;
    cfg.max_b = 3;
    cfg.max_r = 3;
    cfg.dims = {1, 2};
    cfg.lines = 2;
    cfg.seed = 7;
    cfg.samples = 10000;
    Verdict verdict = sweep_theorem1(cfg);
    CHECK(verdict.checked > 0);
    CHECK(verdict.ok());
}

TEST_CASE("violations replay from (multisegment, l) alone") {
    SweepConfig cfg;
    cfg.max_b = 2;
    cfg.max_r = 2;
    cfg.require_m_irr = false;
    for (const auto& v : sweep_theorem1(cfg).violations) {
        auto replay = check_mult_free(v.ms, v.l);
        REQUIRE_FALSE(replay.mult_free);
        CHECK(replay.witness->left == v.left);
        CHECK(replay.witness->right == v.right);
        CHECK(replay.witness->splits == v.splits);
    }
}
