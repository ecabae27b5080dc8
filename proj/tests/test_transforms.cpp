#include <doctest.h>

#include "halphen/io.hpp"
#include "halphen/transforms.hpp"

#include <random>

using namespace halphen;

namespace {

LameEquation krammer() {
    return LameEquation(parse_poly("x*(x-1)*(x-81)"), Scalar(Rat(-2, 9)), Scalar(-2));
}

LameEquation rnd_lame(std::mt19937& g) {
    std::uniform_int_distribution<int> v(-6, 6);
    while (true) {
        Poly p0 = Poly::from_roots({Scalar(v(g)), Scalar(v(g)), Scalar(v(g))});
        if (gcd(p0, p0.derivative()).degree() > 0) continue;
        return LameEquation(p0, Scalar(Rat(v(g), 1 + std::abs(v(g)))), Scalar(Rat(v(g), 2)));
    }
}

} // namespace

TEST_CASE("sym_square_2nd") {
    SUBCASE("y'' = 0 -> y''' = 0") {
        DiffOp dd({Poly(0), Poly(0), Poly(1)});
        DiffOp s = sym_square_2nd(dd);
        CHECK(s.order() == 3);
        CHECK(s.c[0].is_zero());
        CHECK(s.c[1].is_zero());
        CHECK(s.c[2].is_zero());
    }
    SUBCASE("Lame symmetric square has the closed form") {
        LameEquation l = krammer();
        DiffOp s = sym_square_2nd(l.as_operator());
        Poly p = Scalar(4) * l.p0;
        // p y''' + 3/2 p' y'' + (p''/2 - 4(nu x - H)) y' - 2 nu y
        DiffOp expected({Poly(Scalar(-2) * l.nu),
                         Scalar(Rat(1, 2)) * p.derivative().derivative() +
                             Poly({Scalar(4) * l.H, Scalar(-4) * l.nu}),
                         Scalar(Rat(3, 2)) * p.derivative(),
                         p});
        CHECK(s.equal_up_to_scalar(expected));
    }
    SUBCASE("Krammer instance, explicit integer coefficients") {
        DiffOp s = sym_square_2nd(krammer().as_operator());
        // 4x(x-1)(x-81) y''' + 6(3x^2-164x+81) y'' + (12x - 328 + 8/9 x + 8) y' + 4/9 y
        DiffOp expected({parse_poly("4/9"),
                         parse_poly("116/9*x - 336"),
                         parse_poly("6*(3*x^2 - 164*x + 81)"),
                         parse_poly("4*x*(x-1)*(x-81)")});
        CHECK(s.equal_up_to_scalar(expected));
    }
    SUBCASE("order != 2 rejected") {
        CHECK_THROWS_AS(sym_square_2nd(DiffOp({Poly(1), Poly(1)})), std::invalid_argument);
    }
}

TEST_CASE("euler_third_order closed forms") {
    SUBCASE("r0 vanishes at mu = -1/2") {
        CHECK(euler_r0(Scalar(Rat(-1, 2)), Scalar(Rat(17, 5))).is_zero());
    }
    SUBCASE("mu = 3, nu = 2 gives r0 = 140 = 2(2mu+1)(mu-n)(mu+n+1), n = 1") {
        CHECK(euler_r0(Scalar(3), Scalar(2)) == Scalar(140));
        // 2*(2*3+1)*(3-1)*(3+1+1) = 2*7*2*5
        CHECK(Scalar(2) * Scalar(7) * Scalar(2) * Scalar(5) == Scalar(140));
    }
    SUBCASE("Krammer data at mu = -1/2: r1 = 35/9 x - 90") {
        Poly r1 = euler_r1(krammer(), Scalar(Rat(-1, 2)));
        CHECK(r1 == parse_poly("35/9*x - 90"));
    }
    SUBCASE("r0 factorization and vanishing on random data") {
        std::mt19937 g(5);
        std::uniform_int_distribution<int> v(-9, 9), d(1, 7);
        for (int i = 0; i < 50; ++i) {
            Scalar mu(Rat(v(g), d(g))), n(Rat(v(g), d(g)));
            Scalar nu = n * (n + Scalar(1));
            CHECK(euler_r0(mu, nu) ==
                  Scalar(2) * (Scalar(2) * mu + Scalar(1)) * (mu * mu + mu - nu));
            CHECK(euler_r0(Scalar(Rat(-1, 2)), nu).is_zero());
            CHECK(euler_r0(n, nu).is_zero());
            CHECK(euler_r0(-n - Scalar(1), nu).is_zero());
        }
    }
}

TEST_CASE("halphen_a") {
    SUBCASE("Krammer example") {
        DiffOp op = halphen_a(krammer());
        DiffOp expected({parse_poly("35/9*x - 90"),
                         parse_poly("4*(3*x^2 - 164*x + 81)"),
                         parse_poly("4*x*(x-1)*(x-81)")});
        CHECK(op.equal_up_to_scalar(expected));
    }
    SUBCASE("4nu - 3 = 0 kills the x-term") {
        LameEquation l(parse_poly("x^3 - x"), Scalar(Rat(3, 4)), Scalar(0));
        // H = sum_e / 4 = 0 here, so the whole zeroth term vanishes
        DiffOp op = halphen_a(l);
        CHECK(op.c[0].is_zero());
    }
    SUBCASE("table row 2 reproduces the Heun row after content removal") {
        LameEquation l(parse_poly("x*(x-1)*(x+1)"), Scalar(Rat(-1, 4)), Scalar(0));
        HeunEquation h(parse_poly("x*(x-1)*(x+1)"), Scalar(1), Scalar(0));
        CHECK(halphen_a(l).equal_up_to_scalar(h.as_operator()));
    }
}

TEST_CASE("halphen_bc") {
    SUBCASE("case b at n equals case c at -n-1") {
        LameEquation l = rnd_lame(*new std::mt19937(9));
        Scalar n(Rat(1, 3));
        LameEquation l2(l.p0, n * (n + Scalar(1)), l.H);
        DiffOp b = halphen_bc(l2, n, HalphenCase::b);
        DiffOp c = halphen_bc(l2, -n - Scalar(1), HalphenCase::c);
        CHECK(b.equal_up_to_scalar(c));
    }
    SUBCASE("wrong n rejected") {
        CHECK_THROWS_AS(halphen_bc(krammer(), Scalar(1), HalphenCase::c), std::invalid_argument);
    }
    SUBCASE("example 3.8 forward: case c gives the displayed Heun") {
        LameEquation l(parse_poly("x*(x-1)*(x-32/27)"), Scalar(Rat(-5, 36)), Scalar(Rat(-13, 108)));
        DiffOp op = halphen_bc(l, Scalar(Rat(-1, 6)), HalphenCase::c);
        HeunEquation h(parse_poly("x*(x-1)*(x-32/27)"), Scalar(Rat(2, 9)), Scalar(Rat(-44, 243)),
                       Scalar(Rat(2, 3)));
        CHECK(op.equal_up_to_scalar(h.as_operator()));
    }
    SUBCASE("all three specializations reduce the generic euler operator") {
        // euler_third_order at the special mu has r0 = 0 and the reduced
        // operator matches the specialization
        std::mt19937 g(13);
        for (int i = 0; i < 10; ++i) {
            LameEquation base = rnd_lame(g);
            Scalar n(Rat(2, 3));
            LameEquation l(base.p0, n * (n + Scalar(1)), base.H);
            for (auto [mu, cs] : {std::pair<Scalar, int>{n, 0}, {-n - Scalar(1), 1}, {Scalar(Rat(-1, 2)), 2}}) {
                DiffOp full = euler_third_order(l, mu);
                CHECK(full.c[0].is_zero()); // r0 vanishes
                DiffOp reduced({full.c[1], full.c[2], full.c[3]});
                DiffOp special = cs == 0 ? halphen_bc(l, n, HalphenCase::b)
                               : cs == 1 ? halphen_bc(l, n, HalphenCase::c)
                                         : halphen_a(l);
                CHECK(reduced.equal_up_to_scalar(special));
            }
        }
    }
}

TEST_CASE("heun_to_lame spec examples") {
    SUBCASE("row 9") {
        HeunEquation h(parse_poly("x*(x-1)*(x-81)"), Scalar(Rat(35, 36)), Scalar(Rat(-45, 2)));
        LameEquation l = heun_to_lame(h);
        CHECK(l.nu == Scalar(Rat(-2, 9)));
        CHECK(l.H == Scalar(-2));
    }
    SUBCASE("trivial row") {
        HeunEquation h(parse_poly("x^3 - x"), Scalar(Rat(3, 4)), Scalar(0));
        LameEquation l = heun_to_lame(h);
        CHECK(l.nu == Scalar(0));
        CHECK(l.H == Scalar(0));
    }
    SUBCASE("row 16") {
        HeunEquation h(parse_poly("x*(x-1)*(x-2/27)"), Scalar(Rat(8, 9)), Scalar(Rat(-8, 27)));
        LameEquation l = heun_to_lame(h);
        CHECK(l.nu == Scalar(Rat(-5, 36)));
        CHECK(l.H == Scalar(Rat(-1, 36)));
    }
    SUBCASE("lambda != 1 is routed elsewhere") {
        HeunEquation h(parse_poly("x^3 - x"), Scalar(Rat(3, 4)), Scalar(0), Scalar(Rat(2, 3)));
        CHECK_THROWS_WITH_AS(heun_to_lame(h), "heun_to_lame: lambda != 1, use inverse_halphen_c",
                             std::invalid_argument);
    }
}

TEST_CASE("inverse_halphen_c") {
    SUBCASE("example 3.8") {
        HeunEquation h(parse_poly("x*(x-1)*(x-32/27)"), Scalar(Rat(2, 9)), Scalar(Rat(-44, 243)),
                       Scalar(Rat(2, 3)));
        LameEquation l = inverse_halphen_c(h);
        CHECK(l.nu == Scalar(Rat(-5, 36)));
        CHECK(l.H == Scalar(Rat(-13, 108)));
    }
    SUBCASE("round trip halphen_bc(. , n, c) -> inverse") {
        std::mt19937 g(21);
        for (int i = 0; i < 12; ++i) {
            LameEquation base = rnd_lame(g);
            Scalar n(Rat(1 + (i % 5), 2 + (i % 3)));
            LameEquation l(base.p0, n * (n + Scalar(1)), base.H);
            DiffOp transformed = halphen_bc(l, n, HalphenCase::c);
            HeunEquation h = HeunEquation::from_operator(transformed);
            LameEquation back = inverse_halphen_c(h);
            CHECK(back == l);
        }
    }
    SUBCASE("lambda = 1 agrees with heun_to_lame on nu (n = -1/2)") {
        // lambda = 1 corresponds to n = -1/2, nu = -1/4; both paths agree
        HeunEquation h(parse_poly("x*(x-1)*(x+1)"), Scalar(1), Scalar(0));
        LameEquation via_a = heun_to_lame(h);
        CHECK(via_a.nu == Scalar(Rat(-1, 4)));
        Scalar n = Scalar(Rat(1, 2)) - h.lambda;
        CHECK(n * (n + Scalar(1)) == via_a.nu);
    }
    SUBCASE("lambda = 1/2 rejected") {
        HeunEquation h(parse_poly("x^3 - x"), Scalar(0), Scalar(0), Scalar(Rat(1, 2)));
        CHECK_THROWS_AS(inverse_halphen_c(h), std::invalid_argument);
    }
}

TEST_CASE("round trips on random Lame data") {
    std::mt19937 g(31);
    for (int i = 0; i < 15; ++i) {
        LameEquation l = rnd_lame(g);
        // heun_to_lame o (halphen_a / content) = id
        HeunEquation h = HeunEquation::from_operator(halphen_a(l));
        CHECK(h.lambda == Scalar(1));
        CHECK(heun_to_lame(h) == l);
    }
}

TEST_CASE("reproduce_tables") {
    auto rows = load_tables();
    REQUIRE(rows.size() == 13);
    Report rep = reproduce_tables(rows);
    CHECK(rep.all_pass());
    CHECK(rep.lines.size() == 13);
    SUBCASE("row 9 data") {
        for (const auto& r : rows)
            if (r.nr == 9) {
                CHECK(r.lame.nu == Scalar(Rat(-2, 9)));
                CHECK(r.lame.H == Scalar(-2));
            }
    }
    SUBCASE("a perturbed row is reported with the exact difference") {
        auto bad = rows;
        bad[4].heun.Ht += Scalar(1);
        Report r2 = reproduce_tables(bad);
        CHECK_FALSE(r2.all_pass());
        int fails = 0;
        for (const auto& l : r2.lines) fails += !l.pass;
        CHECK(fails == 1);
    }
}
