#include "oracles.hpp"
#include "seshadri/divisor.hpp"

#include <doctest.h>

using namespace seshadri;

namespace {

IntClass cls(long d, std::vector<long> m) {
    std::vector<Integer> mm(m.begin(), m.end());
    return IntClass(Integer(d), std::move(mm));
}

std::vector<QuadScalar> repeat(std::size_t n, const QuadScalar& x) { return std::vector<QuadScalar>(n, x); }

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("intersection form") {
    CHECK(intersect(IntClass::hyperplane(0), IntClass::hyperplane(0)) == 1);
    CHECK(self_intersection(IntClass::uniform(10, Integer(10), Integer(3))) == 10);
    for (std::size_t t : {1u, 4u, 10u}) CHECK(intersect(canonical_class(SurfaceContext{t}), IntClass::exceptional(t, 0)) == -1);
    CHECK(canonical_class(SurfaceContext{0}) == cls(-3, {}));
    CHECK(self_intersection(canonical_class(SurfaceContext{10})) == -1);
    IntClass anti = canonical_class(SurfaceContext{9});
    anti *= Integer(-1);
    CHECK(self_intersection(anti) == 0);
}

TEST_CASE("context and radicand checks") {
    CHECK_THROWS_AS(intersect(IntClass::hyperplane(2), IntClass::hyperplane(3)), ContextMismatch);
    const QuadClass a(QuadScalar(1), {QuadScalar::sqrt(2)});
    const QuadClass b(QuadScalar(1), {QuadScalar::sqrt(3)});
    CHECK_THROWS_AS(intersect(a, b), RadicandMismatch);
}

TEST_CASE("standard form") {
    std::vector<QuadScalar> m13{QuadScalar::sqrt(3)};
    for (int i = 0; i < 13; ++i) m13.emplace_back(1);
    CHECK(is_standard(QuadClass(QuadScalar(4), m13)));
    CHECK_FALSE(is_standard(cls(3, {2, 2, 0})));
    auto m9 = repeat(9, QuadScalar(7));
    m9.push_back(QuadScalar::sqrt(43));
    CHECK(is_standard(QuadClass(QuadScalar(22), m9)));
    CHECK(is_standard(cls(2, {1, 1})));
    CHECK_FALSE(is_standard(cls(1, {1, 1})));
    CHECK_FALSE(is_standard(cls(5, {1, -1, 0})));
}

TEST_CASE("ladder decomposition") {
    const auto h3 = standard_decomposition(cls(3, {1, 1, 1}));
    CHECK(h3.coefficients == std::vector<Integer>{0, 0, 0, 1});

    const IntClass D = cls(5, {2, 2, 1});
    const auto dec = standard_decomposition(D);
    CHECK(dec.coefficients == std::vector<Integer>{0, 0, 1, 1});
    // H_2 + H_3 expanded by hand
    const oracle::Cls sum{2 + 3, {1 + 1, 1 + 1, 0 + 1}};
    CHECK(sum == oracle::Cls{5, {2, 2, 1}});
    CHECK(dec.recombine() == D);

    const auto h = standard_decomposition(cls(1, {0, 0, 0}));
    CHECK(h.coefficients == std::vector<Integer>{1, 0, 0, 0});

    const IntClass unsorted = cls(7, {1, 3, 2, 0});
    const auto u = standard_decomposition(unsorted);
    CHECK(u.order == std::vector<std::size_t>{1, 2, 0, 3});
    CHECK(u.recombine() == unsorted);
    CHECK(u.nonnegative() == is_standard(unsorted));
}

TEST_CASE("cremona") {
    const IntClass F1 = IntClass::exceptional(3, 0);
    const IntClass moved = cremona(F1, 0, 1, 2);
    CHECK(moved == cls(1, {0, 1, 1}));
    CHECK(self_intersection(moved) == -1);
    CHECK(intersect(moved, canonical_class(SurfaceContext{3})) == -1);

    const IntClass H = IntClass::hyperplane(3);
    CHECK(cremona(H, 0, 1, 2) == cls(2, {1, 1, 1}));
    CHECK(self_intersection(cremona(H, 0, 1, 2)) == 1);

    const IntClass D = cls(9, {4, 1, 3, 2, 2});
    CHECK(cremona(cremona(D, 3, 0, 2), 3, 0, 2) == D);

    CHECK_THROWS_AS(cremona(IntClass::hyperplane(2), 0, 1, 2), PreconditionError);
    CHECK_THROWS_AS(cremona(D, 0, 0, 1), PreconditionError);
    CHECK_THROWS_AS(cremona(D, 0, 1, 5), PreconditionError);
}

TEST_CASE("reduction") {
    const Reduction r = reduce_to_standard(cls(2, {1, 1, 1}));
    CHECK(r.terminal == cls(1, {0, 0, 0}));
    CHECK(r.trace.size() == 1);
    CHECK(r.stop == ReductionStop::standard);

    const IntClass standard = cls(4, {1, 1, 1, 1});
    const Reduction s = reduce_to_standard(standard);
    CHECK(s.terminal == standard);
    CHECK(s.trace.empty());

    const Reduction f = reduce_to_standard(IntClass::exceptional(3, 0));
    CHECK(f.terminal == cls(0, {-1, 0, 0}));
    CHECK(f.stop == ReductionStop::negative_multiplicity);

    // ties go to the lowest index
    const IntClass tied = cls(5, {2, 2, 2, 2, 1});
    const Reduction t = reduce_to_standard(tied);
    REQUIRE_FALSE(t.trace.empty());
    CHECK(t.trace.front() == CremonaMove{0, 1, 2});
    CHECK(replay(tied, t.trace) == t.terminal);

    const Reduction capped = reduce_to_standard(cls(8, {3, 3, 3, 3, 3, 3, 3, 1}), 1);
    CHECK(capped.stop == ReductionStop::inconclusive);
}

TEST_CASE("small contexts") {
    CHECK(is_standard(cls(1, {1})));
    CHECK_FALSE(is_standard(cls(1, {2})));
    CHECK(pad_points(cls(1, {1}), 3) == cls(1, {1, 0, 0}));
    CHECK(is_coordinate_class(IntClass::exceptional(4, 2)));
    CHECK_FALSE(is_coordinate_class(cls(1, {1, 1})));
    CHECK(to_string(cls(10, {3, 3})) == "10;3,3");
}

}
