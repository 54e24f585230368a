#include "jmod/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace jmod {

MultFreeResult check_mult_free(const Multisegment& ms, int l) {
    FormalSum sum = jacquet_max_levi(ms, l);
    for (const auto& [key, splits] : sum.terms()) {
        if (splits.size() > 1) {
            Violation v;
            v.ms = ms;
            v.l = l;
            v.kind = "multiplicity";
            v.detail = "canonical term occurs " + std::to_string(splits.size()) + " times";
            v.left = key.first;
            v.right = key.second;
            v.splits = splits;
            return MultFreeResult{false, v};
        }
    }
    return MultFreeResult{true, std::nullopt};
}

long long dp_split_count(const Multisegment& ms, int l) {
    if (l < 0) return 0;
    std::vector<long long> ways(static_cast<std::size_t>(l) + 1, 0);
    ways[0] = 1;
    for (const Segment& s : ms.segments()) {
        std::vector<long long> next(ways.size(), 0);
        for (int t = 0; t <= l; ++t) {
            if (ways[t] == 0) continue;
            for (int x = 0; x <= s.length() && t + x * s.dim <= l; ++x)
                next[t + x * s.dim] += ways[t];
        }
        ways = std::move(next);
    }
    return ways[static_cast<std::size_t>(l)];
}

std::vector<Segment> sweep_segment_universe(const SweepConfig& config) {
    std::vector<Segment> out;
    for (int li = 0; li < config.lines; ++li) {
        std::string id = "rho" + std::to_string(li);
        int dim = config.dims[static_cast<std::size_t>(li) % config.dims.size()];
        for (int a = 0; a <= config.max_b; ++a)
            for (int b = a; b <= config.max_b; ++b)
                out.push_back(Segment{id, dim, a, b});
    }
    return out;
}

static void enumerate_multisets(const std::vector<Segment>& universe, int max_r,
                                std::vector<std::size_t>& pick,
                                std::size_t from,
                                std::vector<Multisegment>& out) {
    if (!pick.empty()) {
        std::vector<Segment> segs;
        segs.reserve(pick.size());
        for (std::size_t idx : pick) segs.push_back(universe[idx]);
        out.emplace_back(std::move(segs));
    }
    if (static_cast<int>(pick.size()) == max_r) return;
    for (std::size_t i = from; i < universe.size(); ++i) {
        pick.push_back(i);
        enumerate_multisets(universe, max_r, pick, i, out);
        pick.pop_back();
    }
}

std::vector<Multisegment> sweep_multisegments(const SweepConfig& config) {
    std::vector<Segment> universe = sweep_segment_universe(config);
    std::vector<Multisegment> out;
    if (config.samples == 0) {
        std::vector<std::size_t> pick;
        enumerate_multisets(universe, config.max_r, pick, 0, out);
        if (config.require_m_irr) {
            out.erase(std::remove_if(out.begin(), out.end(),
                                     [](const Multisegment& ms) { return !in_m_irr(ms); }),
                      out.end());
        }
        return out;
    }
    std::mt19937_64 rng(config.seed);
    std::uniform_int_distribution<int> rdist(1, config.max_r);
    std::uniform_int_distribution<std::size_t> sdist(0, universe.size() - 1);
    long long attempts = 0;
    const long long cap = config.samples * 1000 + 1000;
    while (static_cast<long long>(out.size()) < config.samples && attempts < cap) {
        ++attempts;
        int r = rdist(rng);
        std::vector<Segment> segs;
        segs.reserve(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) segs.push_back(universe[sdist(rng)]);
        Multisegment ms(std::move(segs));
        if (config.require_m_irr && !in_m_irr(ms)) continue;
        out.push_back(std::move(ms));
    }
    return out;
}

Verdict sweep_theorem1(const SweepConfig& config) {
    Verdict verdict;
    for (const Multisegment& ms : sweep_multisegments(config)) {
        int n = ms.total_size();
        for (int l = 1; l <= n - 1; ++l) {
            ++verdict.checked;
            MultFreeResult res = check_mult_free(ms, l);
            if (!res.mult_free) verdict.violations.push_back(*res.witness);
        }
    }
    return verdict;
}

static std::vector<CuspidalPoint> sorted_support(const Multisegment& ms) {
    auto pts = cuspidal_support(ms);
    std::sort(pts.begin(), pts.end());
    return pts;
}

std::vector<std::string> check_sum_invariants(const Multisegment& ms, int l,
                                              const FormalSum& sum) {
    std::vector<std::string> failures;
    const int n = ms.total_size();

    if (sum.total_multiplicity() != dp_split_count(ms, l))
        failures.push_back("term-count identity: total multiplicity " +
                           std::to_string(sum.total_multiplicity()) + " != DP count " +
                           std::to_string(dp_split_count(ms, l)));

    auto full_support = sorted_support(ms);
    std::set<std::pair<std::vector<CuspidalPoint>, std::vector<CuspidalPoint>>>
        allowed;
    {
        ArrangementSum oracle =
            oracle_jacquet_cuspidal(cuspidal_support(ms), Composition({l, n - l}));
        for (const auto& [arr, mult] : oracle.terms()) {
            auto left = arr[0], right = arr[1];
            std::sort(left.begin(), left.end());
            std::sort(right.begin(), right.end());
            allowed.emplace(std::move(left), std::move(right));
        }
    }

    for (const auto& [key, splits] : sum.terms()) {
        const Multisegment& left = key.first;
        const Multisegment& right = key.second;
        if (left.total_size() != l || right.total_size() != n - l) {
            failures.push_back("size conservation: term has sizes " +
                               std::to_string(left.total_size()) + "+" +
                               std::to_string(right.total_size()));
            continue;
        }
        auto ls = sorted_support(left);
        auto rs = sorted_support(right);
        std::vector<CuspidalPoint> merged;
        std::merge(ls.begin(), ls.end(), rs.begin(), rs.end(),
                   std::back_inserter(merged));
        if (merged != full_support)
            failures.push_back("support conservation violated for a term at l=" +
                               std::to_string(l));
        if (!allowed.count({ls, rs}))
            failures.push_back("oracle containment: term's cuspidal arrangement not "
                               "produced by the geometric lemma at l=" +
                               std::to_string(l));
    }
    return failures;
}

// The refine-left bracketing of a 3-part composition, built only from
// jacquet_max_levi calls.
static LeviSum levi_via_left_refinement(const Multisegment& ms, int c1, int c2) {
    LeviSum out;
    FormalSum first = jacquet_max_levi(ms, c1 + c2);
    for (const auto& [key, splits] : first.terms()) {
        FormalSum second = jacquet_max_levi(key.first, c1);
        for (const auto& [key2, splits2] : second.terms())
            out.add({key2.first, key2.second, key.second},
                    static_cast<long long>(splits.size()) *
                        static_cast<long long>(splits2.size()));
    }
    return out;
}

Verdict sweep_consistency(const SweepConfig& config) {
    Verdict verdict;
    auto report = [&](const Multisegment& ms, int l, std::string kind,
                      std::string detail) {
        Violation v;
        v.ms = ms;
        v.l = l;
        v.kind = std::move(kind);
        v.detail = std::move(detail);
        verdict.violations.push_back(std::move(v));
    };

    // truncation lemma over all segment pairs of the universe
    for (const Segment& d1 : sweep_segment_universe(config)) {
        for (const Segment& d2 : sweep_segment_universe(config)) {
            if (is_linked(d1, d2) || contains(d1, d2) || contains(d2, d1)) continue;
            ++verdict.checked;
            for (int c1 = d1.a; c1 <= d1.b; ++c1) {
                for (int c2 = d2.a; c2 <= d2.b; ++c2) {
                    bool left_bad = is_linked(Segment{d1.line, d1.dim, d1.a, c1},
                                              Segment{d2.line, d2.dim, d2.a, c2});
                    bool right_bad = is_linked(Segment{d1.line, d1.dim, c1, d1.b},
                                               Segment{d2.line, d2.dim, c2, d2.b});
                    if (left_bad || right_bad) {
                        std::ostringstream os;
                        os << "truncation lemma fails for [" << d1.a << "," << d1.b
                           << "],[" << d2.a << "," << d2.b << "] at c=(" << c1 << ","
                           << c2 << ")";
                        report(Multisegment({d1, d2}), 0, "truncation", os.str());
                    }
                }
            }
        }
    }

    for (const Multisegment& ms : sweep_multisegments(config)) {
        const int n = ms.total_size();
        for (int l = 1; l <= n - 1; ++l) {
            ++verdict.checked;
            FormalSum sum = jacquet_max_levi(ms, l);
            for (const std::string& f : check_sum_invariants(ms, l, sum))
                report(ms, l, "invariant", f);
        }
        // transitivity across the two bracketings of every 3-part composition
        for (int c1 = 1; c1 <= n - 2; ++c1) {
            for (int c2 = 1; c2 <= n - 1 - c1; ++c2) {
                int c3 = n - c1 - c2;
                ++verdict.checked;
                LeviSum direct = jacquet_levi(ms, Composition({c1, c2, c3}));
                LeviSum refined = levi_via_left_refinement(ms, c1, c2);
                if (!(direct == refined))
                    report(ms, c1, "transitivity",
                           "bracketings of (" + std::to_string(c1) + "," +
                               std::to_string(c2) + "," + std::to_string(c3) +
                               ") disagree");
            }
        }
    }

    std::sort(verdict.violations.begin(), verdict.violations.end(),
              [](const Violation& x, const Violation& y) {
                  return std::tie(x.kind, x.detail, x.l) <
                         std::tie(y.kind, y.detail, y.l);
              });
    return verdict;
}

}  // namespace jmod
