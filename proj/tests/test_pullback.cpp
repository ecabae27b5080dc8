#include <doctest.h>

#include "halphen/io.hpp"
#include "halphen/pullback.hpp"

using namespace halphen;

TEST_CASE("ramification_data spec examples") {
    auto [rows, example] = load_belyi_rows();
    SUBCASE("row i: ((2,2,1),(5),(2,2,1))") {
        RamificationData r = ramification_data(rows[0].printed);
        CHECK(r.over0 == std::vector<int>{2, 2, 1});
        CHECK(r.over1 == std::vector<int>{5});
        CHECK(r.overInf == std::vector<int>{2, 2, 1});
    }
    SUBCASE("degree-1 map") {
        BelyiMap j(Poly::x(), Poly(1));
        RamificationData r = ramification_data(j);
        CHECK(r.over0 == std::vector<int>{1});
        CHECK(r.over1 == std::vector<int>{1});
        CHECK(r.overInf == std::vector<int>{1});
    }
    SUBCASE("row ii: ((5),(2,2,1),(3,1,1))") {
        RamificationData r = ramification_data(rows[1].printed);
        CHECK(r.over0 == std::vector<int>{5});
        CHECK(r.over1 == std::vector<int>{2, 2, 1});
        CHECK(r.overInf == std::vector<int>{3, 1, 1});
    }
    SUBCASE("partitions sum to the degree for all shipped rows") {
        for (const auto& row : rows) {
            RamificationData r = ramification_data(row.printed);
            int deg = row.printed.degree();
            for (const auto* f : {&r.over0, &r.over1, &r.overInf}) {
                int s = 0;
                for (int v : *f) s += v;
                CHECK(s == deg);
            }
        }
    }
}

TEST_CASE("is_belyi") {
    auto [rows, example] = load_belyi_rows();
    SUBCASE("row iv") { CHECK(is_belyi(rows[3].printed)); }
    SUBCASE("x^2 is ramified only over 0 and infinity") {
        CHECK(is_belyi(BelyiMap(parse_poly("x^2"), Poly(1))));
    }
    SUBCASE("x^3 - 3x has critical values +-2") {
        CHECK_FALSE(is_belyi(BelyiMap(parse_poly("x^3 - 3*x"), Poly(1))));
    }
    SUBCASE("all shipped rows and the example map") {
        for (const auto& row : rows) CHECK(is_belyi(row.printed));
        CHECK(is_belyi(example.map));
    }
}

TEST_CASE("pullback_operator") {
    auto [rows, example] = load_belyi_rows();
    SUBCASE("identity pullback returns the hypergeometric operator") {
        HGParams h(Scalar(Rat(1, 3)), Scalar(Rat(1, 4)), Scalar(Rat(6, 5)));
        BelyiMap j(Poly::x(), Poly(1));
        CHECK(pullback_operator(h, j).equal_up_to_scalar(hypergeometric_operator(h)));
    }
    SUBCASE("row i matches the printed operator") {
        const auto& r = rows[0];
        DiffOp got = pullback_operator(r.params, r.printed.precomposed_affine(r.corr_scale, r.corr_shift));
        CHECK(got.equal_up_to_scalar(r.heun.as_operator()));
    }
    SUBCASE("row v matches the verified operator (paper accessory is a misprint)") {
        const auto& r = rows[4];
        REQUIRE(r.paper_Ht.has_value());
        DiffOp got = pullback_operator(r.params, r.printed.precomposed_affine(r.corr_scale, r.corr_shift));
        CHECK(got.equal_up_to_scalar(r.heun.as_operator()));
        HeunEquation printed(r.heun.p0, r.heun.ab, *r.paper_Ht);
        CHECK_FALSE(got.equal_up_to_scalar(printed.as_operator()));
    }
}

TEST_CASE("pullback local-exponent invariant") {
    // at a point of multiplicity k over s the exponents are k*(hg exponents at
    // s) shifted by the gauge order
    auto [rows, example] = load_belyi_rows();
    const auto& r = rows[0]; // row i, c = 1
    BelyiMap j = r.printed.precomposed_affine(r.corr_scale, r.corr_shift);
    DiffOp op = pullback_operator(r.params, j);
    RiemannScheme s = riemann_scheme(op);
    // over-0 points (c = 1): exponents {0, 0}; the minimal operator keeps
    // exactly the logarithmic points and infinity
    int log_points = 0;
    for (const auto& p : s.points) {
        if (p.is_infinity()) {
            CHECK(p.exponents == std::vector<Scalar>{Scalar(Rat(3, 4)), Scalar(Rat(5, 4))});
        } else {
            CHECK(p.exponents == std::vector<Scalar>{Scalar(0), Scalar(0)});
            log_points += p.multiplicity();
        }
    }
    CHECK(log_points == 3);
    // Fuchsian: riemann_scheme succeeded at every singular point, and the
    // operator is regular there by construction
    auto [sum, expected] = fuchs_sum(op);
    CHECK(sum == expected);
}

TEST_CASE("verify_pullback_row golden rows") {
    auto [rows, example] = load_belyi_rows();
    for (const auto& r : rows) {
        Report rep = verify_pullback_row(r);
        INFO(rep.text());
        CHECK(rep.all_pass());
    }
    SUBCASE("perturbed parameter is reported as an operator mismatch") {
        BelyiRow bad = rows[0];
        bad.params = HGParams(bad.params.a + Scalar(1), bad.params.b, bad.params.c);
        Report rep = verify_pullback_row(bad);
        CHECK_FALSE(rep.all_pass());
    }
}

TEST_CASE("example 3.8") {
    auto [rows, example] = load_belyi_rows();
    Report rep = verify_example_row(example);
    INFO(rep.text());
    CHECK(rep.all_pass());
    SUBCASE("the pullback's essential points lie in Q(sqrt(-15))") {
        DiffOp op = pullback_operator(example.params, example.map);
        EssentialPoints ep = essential_points(op);
        CHECK(ep.count() == 4);
        CHECK_FALSE(ep.has_infinity);
        for (const auto& v : ep.finite) CHECK(v.ext_d() == -15);
    }
    SUBCASE("normalize_heun t-set contains 32/27") {
        DiffOp op = pullback_operator(example.params, example.map);
        auto forms = normalize_heun(op);
        bool found = false;
        for (auto& [t, o] : forms)
            if (t == Scalar(Rat(32, 27))) found = true;
        CHECK(found);
    }
}
