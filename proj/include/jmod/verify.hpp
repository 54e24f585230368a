#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jmod/jacquet.hpp"

namespace jmod {

// Domain and mode of a sweep. samples == 0 means exhaustive enumeration of
// canonical multisegments within the bounds; samples > 0 means that many
// seeded random cases. Line i of `lines` carries dims[i % dims.size()].
struct SweepConfig {
    int max_b = 3;
    int max_r = 2;
    std::vector<int> dims{1};
    int lines = 1;
    std::uint64_t seed = 0;
    long long samples = 0;
    bool require_m_irr = true;
};

struct Violation {
    Multisegment ms;
    int l = 0;
    std::string kind;  // "multiplicity" or an invariant name
    std::string detail;
    Multisegment left;   // duplicated term, when kind == "multiplicity"
    Multisegment right;
    std::vector<SplitVector> splits;
};

struct Verdict {
    long long checked = 0;
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

struct MultFreeResult {
    bool mult_free = true;
    std::optional<Violation> witness;  // the first duplicated canonical term
};

// true iff every multiplicity in jacquet_max_levi(ms, l) is 1; otherwise the
// witness carries the duplicated term and all split vectors producing it.
MultFreeResult check_mult_free(const Multisegment& ms, int l);

// Independent dynamic-programming count of split vectors: solutions of
// sum m_i x_i = l with 0 <= x_i <= k_i over the canonical segments of ms.
long long dp_split_count(const Multisegment& ms, int l);

// Runs check_mult_free over every (multisegment, l) in the configured domain,
// restricted to canonical multisegments passing in_m_irr when
// require_m_irr is set.
Verdict sweep_theorem1(const SweepConfig& config);

// Cross-module invariants of a single computed formal sum: size and support
// conservation, the term-count identity against dp_split_count, and
// containment of every refined term in the cuspidal oracle's arrangements.
// Returns one description per failed invariant.
std::vector<std::string> check_sum_invariants(const Multisegment& ms, int l,
                                              const FormalSum& sum);

// Runs every cross-module invariant (check_sum_invariants on real engine
// output, transitivity of jacquet_levi across bracketings, the truncation
// lemma on segment pairs of the domain) and reports failures with
// reproduction data.
Verdict sweep_consistency(const SweepConfig& config);

// The multisegment universe a config describes, in deterministic order.
std::vector<Segment> sweep_segment_universe(const SweepConfig& config);
std::vector<Multisegment> sweep_multisegments(const SweepConfig& config);

}  // namespace jmod
