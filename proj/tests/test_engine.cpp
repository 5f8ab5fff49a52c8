#include "oracles.hpp"
#include "seshadri/engine.hpp"

#include <doctest.h>

using namespace seshadri;

namespace {

IntClass cls(long d, std::vector<long> m) {
    std::vector<Integer> mm(m.begin(), m.end());
    return IntClass(Integer(d), std::move(mm));
}

ClassCatalog& catalog() {
    static ClassCatalog c;
    return c;
}

QuadScalar inv_sqrt(long s) { return QuadScalar(Rational(0), Rational(1, s), s); }

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("perfect squares") {
    const auto nine = is_perfect_square(9);
    CHECK_FALSE(nine.irrational);
    CHECK(nine.root == 3);
    CHECK(is_perfect_square(3).irrational);
    const auto c = is_perfect_square(145);
    CHECK(c.irrational);
    CHECK(c.root == 12);
    CHECK(c.verify());
    CHECK(is_perfect_square(0).verify());
}

TEST_CASE("conditional nef") {
    std::vector<QuadScalar> m{QuadScalar::sqrt(10)};
    for (int i = 0; i < 10; ++i) m.emplace_back(3);
    const QuadClass F(QuadScalar(10), m);
    CHECK(conditional_nef(F, catalog().get(11, 8)).kind == NefKind::certified_nef);

    const QuadClass E(QuadScalar(0), {QuadScalar(-1)});
    const auto v = conditional_nef(E, catalog().get(1, 8));
    CHECK(v.kind == NefKind::not_nef);
    REQUIRE(v.witness);
    CHECK(*v.witness == IntClass::exceptional(1, 0));

    const auto anti = cast<QuadScalar>(IntClass::uniform(9, Integer(3), Integer(1)));
    CHECK(conditional_nef(anti, catalog().get(9, 8)).kind == NefKind::certified_nef);

    // 5H - 2ΣE on 7 points: not standard, negative on the conic through five points
    const auto conic = conditional_nef(cast<QuadScalar>(IntClass::uniform(7, Integer(5), Integer(2))), catalog().get(7, 8));
    CHECK(conic.kind == NefKind::not_nef);
}

TEST_CASE("single-point constants from the case table") {
    const auto ten = seshadri_single(IntClass::uniform(10, Integer(10), Integer(3)), catalog());
    CHECK(ten.value == QuadScalar::sqrt(10));
    CHECK(ten.status == SeshadriStatus::certified_maximal);
    CHECK(ten.conditional);

    const auto eleven = seshadri_single(IntClass::uniform(11, Integer(7), Integer(2)), catalog());
    CHECK(eleven.value == QuadScalar::sqrt(5));
    CHECK(eleven.status == SeshadriStatus::certified_maximal);
    const auto& dec = std::get<StandardDecomposition<QuadScalar>>(eleven.witness);
    CHECK(dec.nonnegative());
    CHECK(dec.recombine() == eleven.tested);
}

TEST_CASE("single-point constant with a witness curve") {
    const IntClass L = cls(2, {1});
    const auto r = seshadri_single(L, catalog(), 2);
    CHECK(r.value == QuadScalar(1));
    CHECK(r.status == SeshadriStatus::submaximal_witness);
    CHECK(r.cap == QuadScalar::sqrt(3));
    const IntClass& w = std::get<IntClass>(r.witness);
    CHECK(w == cls(1, {1, 1}));
    // (π*L)·C / C·E by hand
    const oracle::Cls piL{2, {0, 1}}, C{1, {1, 1}};
    CHECK(oracle::dot(piL, C) == 1);
    CHECK_FALSE(r.conditional);
}

TEST_CASE("single-point constant on the plane") {
    const auto r = seshadri_single(IntClass::hyperplane(0), catalog());
    CHECK(r.value == QuadScalar(1));
    CHECK(r.status == SeshadriStatus::certified_maximal);
    CHECK_FALSE(r.conditional);
}

TEST_CASE("single-point constant certified by the complete class list") {
    // 3H - ΣE on five points: the line through x and one point attains 2 = sqrt(L^2)
    const IntClass L = IntClass::uniform(5, Integer(3), Integer(1));
    const auto r = seshadri_single(L, catalog());
    CHECK(r.value == QuadScalar(2));
    CHECK(r.status == SeshadriStatus::certified_maximal);
    CHECK_FALSE(is_standard(r.tested));
    const auto& check = std::get<CompleteListCheck>(r.witness);
    CHECK(check.points == 6);
    CHECK_FALSE(r.conditional);
    REQUIRE(r.best_ratio);
    CHECK(*r.best_ratio == 2);
}

TEST_CASE("single-point preconditions") {
    CHECK_THROWS_AS(seshadri_single(IntClass::hyperplane(1), catalog()), PreconditionError);
    CHECK_THROWS_AS(seshadri_single(IntClass::hyperplane(0), catalog(), 0), PreconditionError);
}

TEST_CASE("multi-point constants") {
    const auto nine = seshadri_multi(9, catalog());
    CHECK(nine.value == QuadScalar(Rational(1, 3)));
    CHECK(nine.status == SeshadriStatus::certified_maximal);
    CHECK_FALSE(nine.conditional);

    const auto ten = seshadri_multi(10, catalog());
    CHECK(ten.value == inv_sqrt(10));
    CHECK(ten.status == SeshadriStatus::certified_maximal);
    CHECK(ten.conditional);

    const auto two = seshadri_multi(2, catalog());
    CHECK(two.value == QuadScalar(Rational(1, 2)));
    CHECK(two.status == SeshadriStatus::submaximal_witness);
    CHECK(std::get<IntClass>(two.witness) == cls(1, {1, 1}));

    // five points: the conic gives 2/5 < 1/sqrt 5
    CHECK(seshadri_multi(5, catalog()).value == QuadScalar(Rational(2, 5)));
    CHECK(seshadri_multi(4, catalog()).value == QuadScalar(Rational(1, 2)));
}

TEST_CASE("ampleness") {
    const auto nine = ample_conditional(IntClass::uniform(9, Integer(22), Integer(7)), catalog().get(9, 8));
    CHECK(nine.kind == AmpleKind::certified_ample);
    CHECK_FALSE(nine.conditional);

    const auto h = ample_conditional(IntClass::hyperplane(1), catalog().get(1, 8));
    CHECK(h.kind == AmpleKind::not_ample);
    REQUIRE(h.witness);
    CHECK(*h.witness == IntClass::exceptional(1, 0));

    const auto ten = ample_conditional(IntClass::uniform(10, Integer(10), Integer(3)), catalog().get(10, 8));
    CHECK(ten.kind == AmpleKind::certified_ample);
    CHECK(ten.conditional);

    CHECK(ample_conditional(IntClass::uniform(9, Integer(3), Integer(1)), catalog().get(9, 8)).kind ==
          AmpleKind::not_ample);
    CHECK(ample_conditional(cls(10, {3, 3, 3, 3, 3, 3, 3, 3, 3, 2}), catalog().get(10, 8)).kind ==
          AmpleKind::ample_up_to_bound);
}

TEST_CASE("degree choice") {
    struct Row {
        std::size_t s;
        long d, radicand;
    };
    for (auto [s, d, k] : {Row{13, 4, 3}, Row{14, 4, 2}, Row{17, 5, 8}, Row{24, 6, 12}}) {
        CAPTURE(s);
        const DegreeChoice c = choose_degree(s);
        CHECK(c.degree == d);
        CHECK(c.certificate.radicand == k);
        CHECK(c.certificate.irrational);
    }
    // independent scan: smallest d with 4d-3 <= s < d^2 and d^2-s not a square
    for (long s = 13; s <= 200; ++s) {
        if (s == 15 || s == 16) continue;
        long d = 1;
        while (!(4 * d - 3 <= s && s < d * d && !oracle::is_square(d * d - s))) ++d;
        CHECK(choose_degree(s).degree == d);
    }
    CHECK_THROWS_AS(choose_degree(15), PreconditionError);
    CHECK_THROWS_AS(choose_degree(12), PreconditionError);

    const DegreeChoice c22 = choose_degree(22);
    CHECK(c22.degree == 5);
    CHECK_FALSE(c22.in_window);
    REQUIRE(c22.window_degree);
    CHECK(*c22.window_degree == 6);
    CHECK(c22.window_identity);
}

TEST_CASE("degree-choice certificates") {
    const auto r13 = degree_certificate(13, 4, catalog());
    CHECK(r13.standard);
    CHECK(r13.epsilon == QuadScalar::sqrt(3));
    CHECK(r13.irrationality.irrational);
    CHECK(r13.verified());

    const auto r17 = degree_certificate(17, 5, catalog());
    CHECK(r17.epsilon == QuadScalar::sqrt(8));
    CHECK(r17.verified());

    const auto r15 = degree_certificate(15, 4, catalog());
    CHECK(r15.epsilon == QuadScalar(1));
    CHECK_FALSE(r15.irrationality.irrational);

    CHECK_THROWS_AS(degree_certificate(12, 4, catalog()), PreconditionError);
}

TEST_CASE("case-table rows") {
    CHECK(case_row(12, {}, catalog()).epsilon.value == QuadScalar::sqrt(13));
    CHECK(case_row(15, {}, catalog()).epsilon.value == QuadScalar::sqrt(34));
    const auto r16 = case_row(16, 9, catalog());
    CHECK(r16.epsilon.value == QuadScalar::sqrt(73));
    CHECK(r16.irrationality.irrational);
    CHECK(r16.line_bundle == IntClass::uniform(16, Integer(37), Integer(9)));
    CHECK(r16.verified());
    CHECK_THROWS_AS(case_line_bundle(9, std::nullopt), PreconditionError);
    CHECK_THROWS_AS(case_line_bundle(13, std::nullopt), PreconditionError);
}

TEST_CASE("nagata check") {
    const IntClass line = cls(1, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0});
    CHECK(intersect(line, IntClass::uniform(10, Integer(3), Integer(1))) == 1);
    const QuadClass slack(QuadScalar::sqrt(10), std::vector<QuadScalar>(10, QuadScalar(1)));
    CHECK(intersect(cast<QuadScalar>(line), slack) == QuadScalar::sqrt(10) - QuadScalar(2));

    const IntClass e1 = IntClass::exceptional(9, 0);
    CHECK(intersect(e1, IntClass::uniform(9, Integer(3), Integer(1))) == 1);

    const auto r = nagata_check(12, catalog(), 6);
    CHECK(r.verified());
    CHECK(r.min_anticanonical == 1);
    CHECK(r.conditional_multi_point == inv_sqrt(12));
    CHECK_THROWS_AS(nagata_check(8, catalog()), PreconditionError);
}

TEST_CASE("sweep") {
    const auto nine = sweep_Ldn(9, 24, 24, catalog());
    REQUIRE(nine.size() == 1);
    REQUIRE(nine[0].degree);
    CHECK(*nine[0].degree == 73);
    CHECK(*nine[0].epsilon == QuadScalar::sqrt(145));

    const auto sixteen = sweep_Ldn(16, 9, 9, catalog());
    CHECK(*sixteen[0].degree == 37);
    CHECK(*sixteen[0].epsilon == QuadScalar::sqrt(73));

    const auto ten = sweep_Ldn(10, 3, 3, catalog());
    CHECK(*ten[0].degree == 10);
    CHECK(*ten[0].epsilon == QuadScalar::sqrt(10));
}

TEST_CASE("certified results pair nonnegatively with every enumerated class") {
    for (auto [s, n] : std::vector<std::pair<std::size_t, std::optional<long>>>{{9, 8}, {11, {}}, {16, 10}}) {
        const auto row = case_row(s, n, catalog());
        REQUIRE(row.epsilon.status == SeshadriStatus::certified_maximal);
        for (const auto& c : catalog().get(s + 1, 8)) CHECK(min_orbit_pairing(row.epsilon.tested, c).value >= QuadScalar(0));
    }
}

TEST_CASE("raising the degree bound is monotone") {
    for (const IntClass& L : {cls(2, {1}), IntClass::uniform(4, Integer(5), Integer(2)),
                              IntClass::uniform(10, Integer(10), Integer(3)), cls(7, {3, 2, 2, 1, 1, 1})}) {
        CAPTURE(to_string(L));
        const auto lo = seshadri_single(L, catalog(), 4);
        const auto hi = seshadri_single(L, catalog(), 8);
        if (lo.status == SeshadriStatus::certified_maximal) CHECK(hi.value == lo.value);
        if (lo.status == SeshadriStatus::submaximal_witness) CHECK(hi.value <= lo.value);
    }
}

}
