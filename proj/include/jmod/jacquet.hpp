#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "jmod/geometric.hpp"
#include "jmod/segment.hpp"

namespace jmod {

// One split position p_i per input segment, in canonical input order.
// a_i <= p_i <= b_i + 1; [a_i, p_i - 1] goes left, [p_i, b_i] goes right.
using SplitVector = std::vector<int>;

// Result of splitting a single segment at level l. zero covers the case where
// the line dimension does not divide l.
struct SplitResult {
    bool zero = false;
    std::optional<Segment> left;
    std::optional<Segment> right;
};

// The single-segment splitting rule: zero unless dim | l, otherwise the
// tensor factorization at p = a + l / dim, with an absent factor when the
// interval on that side is empty. Throws std::invalid_argument unless
// 0 <= l <= size(d).
SplitResult split_segment(const Segment& d, int l);

struct JacquetTerm {
    Multisegment left;
    Multisegment right;
    SplitVector split;
};

// A multiset of canonical (left, right) pairs; each entry retains every split
// vector that produced it, and its multiplicity is the number of those
// vectors. Iteration order is the canonical order of the pairs.
class FormalSum {
public:
    using Key = std::pair<Multisegment, Multisegment>;

    void add(Multisegment left, Multisegment right, SplitVector split);

    bool empty() const { return terms_.empty(); }
    std::size_t distinct_terms() const { return terms_.size(); }
    long long total_multiplicity() const;
    const std::map<Key, std::vector<SplitVector>>& terms() const {
        return terms_;
    }

    friend bool operator==(const FormalSum& x, const FormalSum& y) {
        return x.terms_ == y.terms_;
    }

private:
    std::map<Key, std::vector<SplitVector>> terms_;
};

// The maximal-Levi Jacquet module at level l: enumerates every split vector
// with left total size l and collects the canonical terms. Throws unless
// 1 <= l <= n - 1.
FormalSum jacquet_max_levi(const Multisegment& ms, int l);

// An s-fold tensor term: one multisegment factor per composition part.
class LeviSum {
public:
    using Key = std::vector<Multisegment>;

    void add(const Key& factors, long long mult);

    bool empty() const { return terms_.empty(); }
    long long total_multiplicity() const;
    const std::map<Key, long long>& terms() const { return terms_; }

    friend bool operator==(const LeviSum& x, const LeviSum& y) {
        return x.terms_ == y.terms_;
    }

private:
    std::map<Key, long long> terms_;
};

// Iterated Jacquet module along a composition gamma of n with s >= 2 parts:
// splits off gamma_1, then recursively refines the right factor. The result is
// independent of bracketing. Throws on a malformed gamma.
LeviSum jacquet_levi(const Multisegment& ms, const Composition& gamma);

// The multiset of twisted cuspidal points of ms, in canonical segment order
// (each segment contributes exponents a, a+1, ..., b in order).
std::vector<CuspidalPoint> cuspidal_support(const Multisegment& ms);

}  // namespace jmod
