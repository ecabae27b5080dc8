// Acceptance suite: one line per criterion, exit 0 iff all pass.
#include "halphen/io.hpp"

#include <iostream>
#include <random>

using namespace halphen;

namespace {

int failures = 0;

void line(int nr, const std::string& what, bool pass, const std::string& detail = "") {
    std::cout << "criterion " << nr << (pass ? ": PASS " : ": FAIL ") << what;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!pass) ++failures;
}

Scalar rnd_rat(std::mt19937& g, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> num(lo, hi), den(1, 7);
    return Scalar(Rat(num(g), den(g)));
}

Poly rnd_cubic(std::mt19937& g) {
    std::uniform_int_distribution<int> v(-5, 5);
    while (true) {
        Poly p0 = Poly::from_roots({Scalar(v(g)), Scalar(v(g)), Scalar(v(g))});
        if (gcd(p0, p0.derivative()).degree() == 0) return p0;
    }
}

Mat rnd_involution(std::mt19937& g, int det) {
    std::uniform_int_distribution<int> v(-4, 4);
    while (true) {
        Rat a(v(g)), b(v(g));
        if (b == 0) continue;
        Rat c = (Rat(-det) - a * a) / b;
        if (c == 0) continue;
        Mat m(2, 2);
        m.at(0, 0) = Scalar(a); m.at(0, 1) = Scalar(b);
        m.at(1, 0) = Scalar(c); m.at(1, 1) = Scalar(-a);
        return m;
    }
}

void criterion1() {
    bool pass = false;
    std::string detail;
    try {
        auto rows = load_tables();
        Report rep = reproduce_tables(rows);
        pass = rep.all_pass() && rep.lines.size() == 13;
        int n = 0;
        for (const auto& l : rep.lines) n += l.pass;
        detail = std::to_string(n) + "/13 rows match";
    } catch (const std::exception& e) {
        detail = e.what();
    }
    line(1, "table reproduction: heun_to_lame on all 13 rows, halphen_a inverts", pass, detail);
}

void criterion2() {
    LameEquation krammer(parse_poly("x*(x-1)*(x-81)"), Scalar(Rat(-2, 9)), Scalar(-2));
    DiffOp op = halphen_a(krammer);
    bool pass = op.c[0] == parse_poly("35/9*x - 90") &&
                op.c[2] == parse_poly("4*x^3 - 328*x^2 + 324*x");
    line(2, "Krammer example: zeroth coefficient (35/9)x - 90", pass, op.c[0].str());
}

void criterion3() {
    std::mt19937 g(101);
    bool pass = true;
    for (int i = 0; i < 50; ++i) {
        Scalar mu = rnd_rat(g), n = rnd_rat(g), H = rnd_rat(g);
        Scalar nu = n * (n + Scalar(1));
        Poly p0 = rnd_cubic(g);
        LameEquation eq(p0, nu, H);
        // r0 closed form
        if (euler_r0(mu, nu) != Scalar(2) * (Scalar(2) * mu + Scalar(1)) * (mu * mu + mu - nu))
            pass = false;
        // r0 vanishing at the three special values
        if (!euler_r0(Scalar(Rat(-1, 2)), nu).is_zero()) pass = false;
        if (!euler_r0(n, nu).is_zero()) pass = false;
        if (!euler_r0(-n - Scalar(1), nu).is_zero()) pass = false;
        // r1 against the displayed form 4(6x + 2(-sum_e))(mu(mu-1)/2 + 3mu/2 + 1/2) - 4(nu x - H)
        Scalar half(Rat(1, 2));
        Scalar bracket = mu * (mu - Scalar(1)) * half + Scalar(Rat(3, 2)) * mu + half;
        Poly displayed = Scalar(4) * (Poly({Scalar(-2) * eq.sum_e(), Scalar(6)}) * Poly(bracket)) -
                         Scalar(4) * Poly({-H, nu});
        if (euler_r1(eq, mu) != displayed) pass = false;
        // and the full operator is the euler_third_order output
        DiffOp full = euler_third_order(eq, mu);
        if (full.order() != 3) pass = false;
    }
    line(3, "Lemma closed forms r0, r1 on 50 random rational (mu, nu, H, e)", pass);
}

void criterion4() {
    bool pass = true;
    std::string detail;
    // five sample equations with rational n and sum_e = 0
    std::vector<std::pair<Rat, Poly>> samples = {
        {Rat(-1, 3), parse_poly("x^3 - x")},
        {Rat(1, 4), parse_poly("x^3 - 4*x")},
        {Rat(2, 3), parse_poly("x^3 - 7*x + 6")},
        {Rat(-1, 6), parse_poly("x^3 - x")},
        {Rat(3, 2), parse_poly("x^3 - 13*x + 12")},
    };
    try {
        for (auto& [nr, p0] : samples) {
            Scalar n(nr);
            Scalar nu = n * (n + Scalar(1));
            LameEquation l(p0, nu, Scalar(Rat(1, 3)));
            RiemannScheme s = riemann_scheme(l.as_operator());
            // finite: {0, 1/2}; infinity: {-n/2, (n+1)/2}
            for (const auto& p : s.points) {
                std::vector<Scalar> want;
                if (p.is_infinity()) {
                    want = {-n / Scalar(2), (n + Scalar(1)) / Scalar(2)};
                    std::sort(want.begin(), want.end(),
                              [](const Scalar& a, const Scalar& b) { return Scalar::cmp(a, b) < 0; });
                } else {
                    want = {Scalar(0), Scalar(Rat(1, 2))};
                }
                if (p.exponents != want) pass = false;
            }
            // halphen-c scheme with sum_e = 0: {0, n+1/2}, infinity {-2n, 1/2-n}
            DiffOp hc = halphen_bc(l, n, HalphenCase::c);
            RiemannScheme sc = riemann_scheme(hc);
            for (const auto& p : sc.points) {
                std::vector<Scalar> want;
                if (p.is_infinity())
                    want = {Scalar(-2) * n, Scalar(Rat(1, 2)) - n};
                else
                    want = {Scalar(0), n + Scalar(Rat(1, 2))};
                std::sort(want.begin(), want.end(),
                          [](const Scalar& a, const Scalar& b) { return Scalar::cmp(a, b) < 0; });
                if (p.exponents != want) pass = false;
            }
            // Fuchs sum on every transform output
            for (const DiffOp& op : {l.as_operator(), sym_square_2nd(l.as_operator()),
                                     euler_third_order(l, Scalar(Rat(1, 5))), halphen_a(l),
                                     halphen_bc(l, n, HalphenCase::b), hc}) {
                auto [sum, expected] = fuchs_sum(op);
                if (sum != expected) pass = false;
            }
        }
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    line(4, "Riemann schemes (Lame and Halphen-c) and Fuchs sums on 5 samples", pass, detail);
}

void criterion5() {
    bool pass = true;
    std::string detail;
    try {
        auto [rows, example] = load_belyi_rows();
        bool misprint_note = false;
        for (const auto& r : rows) {
            Report rep = verify_pullback_row(r);
            if (!rep.all_pass()) {
                pass = false;
                for (const auto& l : rep.lines)
                    if (!l.pass) detail += l.name + "; ";
            }
            if (r.paper_Ht) misprint_note = true;
        }
        Report ex = verify_example_row(example);
        if (!ex.all_pass()) {
            pass = false;
            for (const auto& l : ex.lines)
                if (!l.pass) detail += l.name + "; ";
        }
        if (pass && misprint_note)
            detail = "row v checked against the exactly recomputed accessory 20/27; "
                     "the table prints 5/8 (misprint, see data notes)";
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    line(5, "Belyi rows i-v (ramification, Belyi, operator) and example t = 32/27, n = -1/6, nu = -5/36",
         pass, detail);
}

void criterion6() {
    bool pass = false;
    std::string detail;
    try {
        auto [tuples, samples] = load_tuples();
        Report rep = verify_paper_tuples(tuples, samples);
        pass = rep.all_pass() && tuples.size() == 15;
        for (const auto& l : rep.lines)
            if (!l.pass) detail += l.name + "; ";
    } catch (const std::exception& e) {
        detail = e.what();
    }
    line(6, "15 golden tuples: product identity, residual 0, classification; diagonal conjugations",
         pass, detail);
}

void criterion7() {
    bool pass = true;
    auto ci = enumerate_minimal(TripleCase::i, 30);
    std::vector<std::pair<long long, Triple>> want_i{
        {5, {-1, -4, -5}}, {6, {-1, -2, -3}}, {8, {-1, -1, -2}}, {9, {-1, -1, -1}}};
    if (ci != want_i) pass = false;
    auto cii = enumerate_minimal(TripleCase::ii, 30);
    if (cii.size() != 3 || cii[0].second != Triple{-5, -12, -15} ||
        cii[1].second != Triple{-6, -8, -12} || cii[2].second != Triple{-7, -7, -9})
        pass = false;
    auto ciii = enumerate_minimal(TripleCase::iii, 30);
    if (ciii.size() != 4 || ciii[0].second != Triple{-5, -16, -20} ||
        ciii[1].second != Triple{-6, -10, -15} || ciii[2].second != Triple{-7, -8, -14} ||
        ciii[3].second != Triple{-8, -8, -9})
        pass = false;
    auto civ = enumerate_minimal(TripleCase::iv, 30);
    if (civ.size() != 2 || civ[0].second != Triple{-5, -8, -10} || civ[1].second != Triple{-6, -6, -9})
        pass = false;
    line(7, "enumerate_minimal(bound 30) returns exactly the minimal-solution tables", pass,
         "case i: " + std::to_string(ci.size()) + ", ii: " + std::to_string(cii.size()) +
             ", iii: " + std::to_string(ciii.size()) + ", iv: " + std::to_string(civ.size()));
}

void criterion8() {
    bool pass = true;
    int checked = 0;
    auto [tuples, samples] = load_tuples();
    for (const auto& g : tuples) {
        if (g.tag != TripleCase::i) continue;
        FrickeData f = fricke_params(g.tuple);
        Scalar four(4);
        if ((f.x - four) * (f.x - four) + (f.y - four) * (f.y - four) +
                (f.z - four) * (f.z - four) !=
            Scalar(20) - f.x * f.y * f.z)
            pass = false;
        ++checked;
    }
    line(8, "unipotent relation (x-4)^2+(y-4)^2+(z-4)^2 = 20 - xyz on all-unipotent tuples", pass,
         std::to_string(checked) + " tuples");
}

void criterion9() {
    std::mt19937 g(103);
    bool pass = true;
    std::string detail;
    int n_minus = 0, n_plus = 0;
    try {
        while (n_minus < 50 || n_plus < 50) {
            int det = n_minus < 50 ? -1 : +1;
            Mat a1 = rnd_involution(g, det), a2 = rnd_involution(g, det), a3 = rnd_involution(g, det);
            Mat a4 = (a1 * a2 * a3).inverse();
            MatrixTuple t({a1, a2, a3, a4});
            FrickeData f = fricke_params(t);
            if (f.x == f.y || f.y == f.z || f.x == f.z) continue; // keep the sample generic
            MatrixTuple c = sym_square_tuple(t);
            if (det == +1) {
                std::vector<Mat> neg;
                for (const auto& m : c.mats) neg.push_back(Scalar(-1) * m);
                c = MatrixTuple(std::move(neg));
            }
            MatrixTuple b = middle_convolution(c, Scalar(-1));
            if (b.dim() != 2) { pass = false; detail = "MC dimension " + std::to_string(b.dim()); break; }
            FrickeData got = fricke_params(b);
            FrickeData expected = trace_map(f);
            if (det == +1) expected.a4 = f.a4 * f.a4 - Scalar(2); // a4 -> i a4 under (iA)^2 = 1
            if (!(got == expected)) {
                pass = false;
                detail = "got " + got.str() + " expected " + expected.str();
                break;
            }
            (det == -1 ? n_minus : n_plus)++;
        }
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    if (pass)
        detail = "50 det -1 tuples match the displayed map; 50 det +1 tuples match its "
                 "projective-involution form (a4 image +a4^2-2 via (iA)^2 = 1), dimension 2 throughout";
    line(9, "pipeline fricke(MC_-1(Sym^2 t)) = trace_map(fricke t) on both det conventions", pass, detail);
}

void criterion10() {
    std::mt19937 g(107);
    std::uniform_int_distribution<int> v(-3, 3), len(1, 3), side(0, 1);
    auto rnd_sl2 = [&]() {
        Mat m = Mat::identity(2);
        int n = len(g);
        for (int i = 0; i < n; ++i) {
            Mat e = Mat::identity(2);
            if (side(g)) e.at(0, 1) = Scalar(v(g));
            else e.at(1, 0) = Scalar(v(g));
            m = m * e;
        }
        return m;
    };
    bool pass = true;
    int done = 0;
    while (done < 100) {
        Mat a1 = rnd_sl2(), a2 = rnd_sl2(), a3 = rnd_sl2();
        MatrixTuple t({a1, a2, a3, (a1 * a2 * a3).inverse()});
        ++done;
        FrickeData f = fricke_params(t);
        MatrixTuple lhs = braid(t, {BraidGen::b1, BraidGen::b2, BraidGen::b1});
        MatrixTuple rhs = braid(t, {BraidGen::b2, BraidGen::b1, BraidGen::b2});
        for (int k = 0; k < 4; ++k)
            if (!(lhs.mats[k] == rhs.mats[k])) pass = false;
        if (!lhs.product_is_identity()) pass = false;
        if (fricke_params(lhs).residual() != f.residual()) pass = false;
        for (auto w : {std::vector<BraidGen>{BraidGen::b1}, {BraidGen::b2}})
            if (!(fricke_params(braid(t, w)) == braid_fricke(f, w))) pass = false;
    }
    line(10, "braid relation, residual preservation and commuting square on 100 random tuples", pass);
}

void criterion11() {
    bool pass = true;
    std::string detail;
    try {
        auto [tuples, samples] = load_tuples();
        for (const auto& g : tuples) {
            InvariantForm f = invariant_form(g.tuple);
            if (f.dimension != 1 || f.signature != InvariantForm::indefinite) {
                pass = false;
                detail += g.name + " dim " + std::to_string(f.dimension) + "; ";
            }
        }
        // injected non-real-trace tuple
        Mat a(2, 2);
        a.at(0, 0) = Scalar(Rat(0), Rat(2), -1);
        a.at(0, 1) = Scalar(1);
        a.at(1, 0) = Scalar(-1);
        MatrixTuple bad({a, a.inverse(), Mat::identity(2), Mat::identity(2)});
        InvariantForm f = invariant_form(bad);
        if (f.dimension != 0) {
            pass = false;
            detail += "non-real-trace tuple dim " + std::to_string(f.dimension);
        }
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    line(11, "golden tuples carry a 1-dim indefinite hermitian form; non-real trace kills it", pass,
         detail);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    if (failures) {
        std::cout << failures << " criteria FAILED\n";
        return 1;
    }
    std::cout << "all 11 criteria passed\n";
    return 0;
}
