#include <doctest.h>

#include "support.hpp"

using namespace teamsem;
using support::sig1;
using support::sig2;
using support::sig3;

TEST_CASE("parsing the concrete grammar") {
    Signature sig = sig3();

    SUBCASE("dependence atoms") {
        Formula f = parse("=(p;q) & =(;r)", sig);
        REQUIRE(f.kind() == Formula::Kind::And);
        CHECK(f.lhs() == Formula::dep({"p"}, "q"));
        CHECK(f.rhs() == Formula::dep({}, "r"));
    }
    SUBCASE("constants") {
        CHECK(parse("top", sig) == Formula::top());
        CHECK(parse("bot", sig) == Formula::bot());
    }
    SUBCASE("grouping and literals") {
        Formula f = parse("(p | !p) & q", sig);
        CHECK(f == Formula::conj(Formula::disj(Formula::var("p"), Formula::neg_var("p")),
                                 Formula::var("q")));
    }
    SUBCASE("precedence: & binds tighter than |") {
        CHECK(parse("p & q | r", sig) ==
              Formula::disj(Formula::conj(Formula::var("p"), Formula::var("q")),
                            Formula::var("r")));
        CHECK(parse("p | q & r", sig) ==
              Formula::disj(Formula::var("p"),
                            Formula::conj(Formula::var("q"), Formula::var("r"))));
    }
    SUBCASE("left associativity") {
        CHECK(parse("p & q & r", sig) ==
              Formula::conj(Formula::conj(Formula::var("p"), Formula::var("q")),
                            Formula::var("r")));
        CHECK(parse("p | q | r", sig) ==
              Formula::disj(Formula::disj(Formula::var("p"), Formula::var("q")),
                            Formula::var("r")));
    }
    SUBCASE("multi-argument dependence atom") {
        CHECK(parse("=(p,q;r)", sig) == Formula::dep({"p", "q"}, "r"));
    }
    SUBCASE("argument lists may repeat variables and include the target") {
        Formula f = parse("=(p,p,q;q)", sig);
        CHECK(f == Formula::dep({"p", "p", "q"}, "q"));
        CHECK(parse(print(f), sig) == f);
    }
    SUBCASE("whitespace is insignificant") {
        CHECK(parse("  p&q ", sig) == parse("p & q", sig));
        CHECK(parse("=( p , q ; r )", sig) == parse("=(p,q;r)", sig));
    }
}

TEST_CASE("parse errors") {
    Signature sig = sig2();
    CHECK_THROWS_AS(parse("p &", sig), ParseError);
    CHECK_THROWS_AS(parse("(p", sig), ParseError);
    CHECK_THROWS_AS(parse("p q", sig), ParseError);
    CHECK_THROWS_AS(parse("=(p)", sig), ParseError);
    CHECK_THROWS_AS(parse("", sig), ParseError);
    CHECK_THROWS_AS(parse("!", sig), ParseError);

    SUBCASE("unknown variables are named") {
        try {
            parse("p & zz", sig);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("zz") != std::string::npos);
            CHECK(e.position() == 4);
        }
    }
}

TEST_CASE("printing is canonical") {
    CHECK(print(Formula::dep({}, "p")) == "=(;p)");
    CHECK(print(Formula::conj(Formula::var("p"), Formula::bot())) == "p & bot");
    CHECK(print(Formula::disj(Formula::dep({}, "p"), Formula::dep({}, "p"))) ==
          "=(;p) | =(;p)");
    CHECK(print(Formula::dep({"p", "q"}, "r")) == "=(p,q;r)");

    SUBCASE("parenthesization tracks associativity") {
        Formula right = Formula::conj(Formula::var("p"),
                                      Formula::conj(Formula::var("q"), Formula::var("r")));
        CHECK(print(right) == "p & (q & r)");
        Formula mixed = Formula::conj(Formula::disj(Formula::var("p"), Formula::var("q")),
                                      Formula::var("r"));
        CHECK(print(mixed) == "(p | q) & r");
    }
}

TEST_CASE("parse . print is the identity on random formulas") {
    Signature sig = sig3();
    Rng rng(20240517);
    for (int i = 0; i < 500; ++i) {
        Formula f = support::random_formula(rng, sig, 15, true);
        CAPTURE(print(f));
        CHECK(parse(print(f), sig) == f);
        CHECK(print(f) == print(parse(print(f), sig)));
    }
}

TEST_CASE("is_pl detects dependence atoms") {
    CHECK(Formula::var("p").is_pl());
    CHECK_FALSE(Formula::dep({}, "p").is_pl());
    CHECK_FALSE(Formula::conj(Formula::var("p"), Formula::dep({"p"}, "q")).is_pl());
}

TEST_CASE("formula equality is structural") {
    CHECK(Formula::conj(Formula::var("p"), Formula::var("q")) !=
          Formula::conj(Formula::var("q"), Formula::var("p")));
    CHECK(Formula::dep({"p"}, "q") != Formula::dep({}, "q"));
    CHECK(Formula::var("p") != Formula::neg_var("p"));
}

TEST_CASE("signature validation") {
    CHECK_THROWS_AS(Signature({}), InvalidArgument);
    CHECK_THROWS_AS(Signature({"p", "p"}), InvalidArgument);
    CHECK_THROWS_AS(Signature({"P"}), InvalidArgument);
    CHECK_THROWS_AS(Signature({"1x"}), InvalidArgument);
    CHECK_THROWS_AS(Signature({"top"}), InvalidArgument);  // reserved word
    CHECK(signature_from_csv("p, q ,r").vars() == std::vector<std::string>{"p", "q", "r"});
    CHECK(Signature({"x_1", "y2"}).size() == 2);
}

TEST_CASE("variables of a formula include dependence arguments") {
    Formula f = parse("=(p;q) | r", sig3());
    std::set<std::string> expected{"p", "q", "r"};
    CHECK(f.variables() == expected);
}
