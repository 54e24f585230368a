#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "jmod/parse.hpp"

using namespace jmod;

namespace {

Expression expect_ok(std::string_view src) {
    auto r = parse(src);
    auto* e = std::get_if<Expression>(&r);
    REQUIRE(e != nullptr);
    return *e;
}

Diagnostic expect_error(std::string_view src) {
    auto r = parse(src);
    auto* d = std::get_if<Diagnostic>(&r);
    REQUIRE(d != nullptr);
    return *d;
}

}  // namespace

TEST_CASE("well-formed product") {
    Expression e = expect_ok("let rho:1  Z[0..1]@rho * Z[3..4]@rho");
    REQUIRE(e.declarations.size() == 1);
    CHECK(e.declarations[0].id == "rho");
    CHECK(e.declarations[0].dim == 1);
    REQUIRE(e.product.size() == 2);
    CHECK(e.product[0] == (Segment{"rho", 1, 0, 1}));
    CHECK(e.product[1] == (Segment{"rho", 1, 3, 4}));
}

TEST_CASE("negative exponents and odd whitespace") {
    Expression e = expect_ok("let p : 2\n  Z[ -3 .. -1 ] @ p");
    REQUIRE(e.product.size() == 1);
    CHECK(e.product[0] == (Segment{"p", 2, -3, -1}));
    CHECK(e.product[0].dim == 2);
}

TEST_CASE("diagnostics carry distinct codes and positions") {
    CHECK(expect_error("let rho:1 Z[2..0]@rho").code == "A_GT_B");
    CHECK(expect_error("Z[0..1]@tau").code == "UNKNOWN_LINE");
    CHECK(expect_error("let rho:1 Z[-..1]@rho").code == "MALFORMED_INT");
    CHECK(expect_error("let rho:0 Z[0..1]@rho").code == "BAD_DIM");
    CHECK(expect_error("let rho:1 let rho:2 Z[0..1]@rho").code == "DUPLICATE_LINE");
    CHECK(expect_error("let rho:1").code == "SYNTAX");
    CHECK(expect_error("let rho:1 Z[0..1]@rho *").code == "SYNTAX");
    CHECK(expect_error("").code == "SYNTAX");

    Diagnostic d = expect_error("let rho:1\nZ[2..0]@rho");
    CHECK(d.line == 2);
}

TEST_CASE("print emits the canonical surface syntax") {
    Expression e = expect_ok("let rho:1 Z[0..1]@rho * Z[3..4]@rho");
    CHECK(print(e) == "let rho:1 Z[0..1]@rho * Z[3..4]@rho");
}

TEST_CASE("parse-print round trip on generated expressions") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> d(0, 9);
    const std::vector<std::string> ids{"rho", "sigma", "tau", "p_1"};
    for (int iter = 0; iter < 1000; ++iter) {
        Expression e;
        int nlines = 1 + d(rng) % 3;
        for (int i = 0; i < nlines; ++i)
            e.declarations.push_back(CuspidalLine{ids[static_cast<std::size_t>(i)],
                                                  1 + d(rng) % 3});
        int nsegs = 1 + d(rng) % 4;
        for (int i = 0; i < nsegs; ++i) {
            const auto& decl =
                e.declarations[static_cast<std::size_t>(d(rng) % nlines)];
            int a = d(rng) - 5;
            int b = a + d(rng) % 4;
            e.product.push_back(Segment{decl.id, decl.dim, a, b});
        }
        auto r = parse(print(e));
        auto* back = std::get_if<Expression>(&r);
        REQUIRE(back != nullptr);
        CHECK(*back == e);
    }
}
