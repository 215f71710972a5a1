#include <catch2/catch_amalgamated.hpp>

#include "lamin/charpoly.hpp"
#include "lamin/sturm.hpp"

using namespace lamin;

TEST_CASE("squarefree part") {
    IntPoly sq = IntPoly({-1, 1}) * IntPoly({-1, 1}) * IntPoly({2, 1});  // (x-1)^2 (x+2)
    IntPoly sf = squarefree_part(sq);
    REQUIRE(sf.degree() == 2);
    REQUIRE(sf.sign_at(Rat(1)) == 0);
    REQUIRE(sf.sign_at(Rat(-2)) == 0);
    REQUIRE(squarefree_part(IntPoly({6, 12})) == IntPoly({1, 2}));
}

TEST_CASE("root counting") {
    SturmChain chain(IntPoly({-2, 0, 1}));  // x^2 - 2
    REQUIRE(chain.count_in(Rat(-2), Rat(2)) == 2);
    REQUIRE(chain.count_in(Rat(0), Rat(2)) == 1);
    REQUIRE(chain.count_in(Rat(-2), Rat(0)) == 1);
    REQUIRE(chain.count_in(Rat(2), Rat(3)) == 0);
    REQUIRE(chain.cauchy_bound() >= 2);
    // left endpoint on a root is a usage error for the half-open count
    SturmChain unit(IntPoly({-1, 0, 1}));
    REQUIRE_THROWS_AS(unit.count_in(Rat(1), Rat(2)), std::invalid_argument);
}

TEST_CASE("least real root of x^2 - 1") {
    RootBracket b = least_real_root(IntPoly({-1, 0, 1}));
    REQUIRE(b.lo < -1);
    REQUIRE(b.hi >= -1);
    REQUIRE(b.width() <= Rat(1, 1000000000000LL));
    REQUIRE_THAT(b.midpoint(), Catch::Matchers::WithinAbs(-1.0, 1e-11));
}

TEST_CASE("least real root error cases") {
    REQUIRE_THROWS_AS(least_real_root(IntPoly({1, 0, 1})), std::domain_error);  // x^2 + 1
    REQUIRE_THROWS_AS(least_real_root(IntPoly::constant(3)), std::invalid_argument);
    REQUIRE_THROWS_AS(least_real_root(IntPoly({-1, 0, 1}), Rat(0)), std::invalid_argument);
    REQUIRE(has_real_root(IntPoly({-2, 0, 1})));
    REQUIRE_FALSE(has_real_root(IntPoly({1, 0, 1})));
    REQUIRE_FALSE(has_real_root(IntPoly::constant(5)));
}

TEST_CASE("least root of the degree-7 reduction at p=q=9") {
    RootBracket b = least_real_root(paper_f(9, 9));
    REQUIRE_THAT(b.midpoint(), Catch::Matchers::WithinAbs(-4.0368692375760, 1e-9));
    // all real roots of these polynomials sit below -2 on the least side
    for (auto [p, q] : {std::pair<long long, long long>{1, 3}, {5, 8}, {18, 20}}) {
        RootBracket r = least_real_root(paper_f(p, q));
        REQUIRE(r.hi < -2);
    }
}

TEST_CASE("compare_least_roots") {
    // shared least root found exactly through the gcd certificate
    IntPoly a = IntPoly({3, 1}) * IntPoly({-1, 1});   // (x+3)(x-1)
    IntPoly b = IntPoly({3, 1}) * IntPoly({-2, 1});   // (x+3)(x-2)
    REQUIRE(compare_least_roots(a, b) == 0);
    REQUIRE(compare_least_roots(IntPoly({-2, 0, 1}), IntPoly({-2, 0, 1}) * IntPoly({-5, 1})) == 0);
    REQUIRE(compare_least_roots(IntPoly({-2, 0, 1}), IntPoly({-4, 0, 2})) == 0);

    // strict separation
    REQUIRE(compare_least_roots(IntPoly({2, 1}), IntPoly({1, 1})) == -1);   // -2 < -1
    REQUIRE(compare_least_roots(IntPoly({-2, 0, 1}), IntPoly({-3, 0, 1})) == 1);  // -sqrt2 > -sqrt3
    REQUIRE(compare_least_roots(paper_f(9, 9), paper_f(8, 10)) == -1);
}
