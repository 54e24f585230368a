#pragma once

#include <compare>
#include <string>
#include <tuple>
#include <vector>

namespace jmod {

// An opaque supercuspidal orbit label together with the dimension m of the
// group carrying it. Two lines are the same iff their ids are equal; distinct
// ids never interact (no twist identifies them).
struct CuspidalLine {
    std::string id;
    int dim = 1;

    friend bool operator==(const CuspidalLine& x, const CuspidalLine& y) {
        return x.id == y.id;
    }
};

// A closed integer interval [a, b] of nu-twists on a cuspidal line, a <= b.
// The empty segment is never stored; absence represents it.
struct Segment {
    std::string line;  // line id
    int dim = 1;       // dimension of the line's group
    int a = 0;
    int b = 0;

    int length() const { return b - a + 1; }
    int size() const { return dim * length(); }

    friend bool operator==(const Segment& x, const Segment& y) {
        return x.line == y.line && x.a == y.a && x.b == y.b;
    }
};

// Canonical ordering: line id ascending, then a descending, then b descending.
// Within a line this guarantees that for i < j, segment i does not precede
// segment j (a_i >= a_j).
inline bool canonical_less(const Segment& x, const Segment& y) {
    return std::tie(x.line, y.a, y.b) < std::tie(y.line, x.a, x.b);
}

// A finite multiset of segments kept in canonical order. Two multisegments are
// equal iff their canonical forms agree entry-wise.
class Multisegment {
public:
    Multisegment() = default;
    explicit Multisegment(std::vector<Segment> segs);

    const std::vector<Segment>& segments() const { return segs_; }
    std::size_t count() const { return segs_.size(); }
    bool empty() const { return segs_.empty(); }
    int total_size() const;

    friend bool operator==(const Multisegment& x, const Multisegment& y) {
        return x.segs_ == y.segs_;
    }
    friend bool operator<(const Multisegment& x, const Multisegment& y);

private:
    std::vector<Segment> segs_;
};

// A single twisted cuspidal point nu^exponent on a line.
struct CuspidalPoint {
    std::string line;
    int dim = 1;
    int exponent = 0;

    friend bool operator==(const CuspidalPoint& x, const CuspidalPoint& y) {
        return x.line == y.line && x.exponent == y.exponent;
    }
    friend bool operator<(const CuspidalPoint& x, const CuspidalPoint& y) {
        return std::tie(x.line, x.exponent) < std::tie(y.line, y.exponent);
    }
};

// true iff outer and inner live on the same line and [inner] sits inside
// [outer] as intervals.
bool contains(const Segment& outer, const Segment& inner);

// true iff neither segment contains the other and their union is again a
// segment (same line, intervals overlap or are adjacent).
bool is_linked(const Segment& d1, const Segment& d2);

// Orientation of linkedness: linked and a1 < a2.
bool precedes(const Segment& d1, const Segment& d2);

// true iff no unordered pair of distinct-index segments is linked.
bool is_irreducible(const Multisegment& ms);

// true iff irreducible and no segment contains another at distinct indices
// (equal segments contain each other, so repeats are excluded).
bool in_m_irr(const Multisegment& ms);

// Returns the canonical ordering; idempotent.
Multisegment canonicalize(const Multisegment& ms);

}  // namespace jmod
