#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jmod/segment.hpp"

namespace jmod {

// A parsed input: line declarations followed by a product of segment
// literals. Canonical form keeps declarations sorted by id and the product as
// written.
struct Expression {
    std::vector<CuspidalLine> declarations;  // sorted by id
    std::vector<Segment> product;            // in written order

    Multisegment multisegment() const {
        return Multisegment(product);
    }

    friend bool operator==(const Expression& x, const Expression& y);
};

struct Diagnostic {
    std::string code;  // SYNTAX, MALFORMED_INT, A_GT_B, UNKNOWN_LINE, ...
    std::string message;
    int line = 1;
    int column = 1;
};

using ParseResult = std::variant<Expression, Diagnostic>;

// Grammar: `let <id> : <dim>` declarations, then segment literals
// `Z[<a>..<b>]@<id>` joined by `*`. Integers may be negative; whitespace is
// insignificant.
ParseResult parse(std::string_view input);

// Canonical text form; parse(print(e)) == e for canonical expressions.
std::string print(const Expression& e);

}  // namespace jmod
