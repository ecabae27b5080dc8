#include "halphen/transforms.hpp"

namespace halphen {

DiffOp sym_square_2nd(const DiffOp& op) {
    if (op.order() != 2) throw std::invalid_argument("sym_square_2nd: order 2 required");
    RatFun c2(op.c[2]);
    RatFun q1 = RatFun(op.c[1]) / c2;
    RatFun q2 = RatFun(op.c[0]) / c2;
    RatFun one(Poly(1));
    std::vector<RatFun> out{
        RatFun(Scalar(2)) * (q2.derivative() + RatFun(Scalar(2)) * q1 * q2),
        q1.derivative() + RatFun(Scalar(4)) * q2 + RatFun(Scalar(2)) * q1 * q1,
        RatFun(Scalar(3)) * q1,
        one};
    return DiffOp::from_ratfun_coeffs(out);
}

Scalar euler_r0(const Scalar& mu, const Scalar& nu) {
    return Scalar(2) * (Scalar(2) * mu + Scalar(1)) * (mu * mu + mu - nu);
}

Poly euler_r1(const LameEquation& eq, const Scalar& mu) {
    Scalar m1 = mu + Scalar(1);
    Scalar x_coeff = Scalar(12) * m1 * m1 - Scalar(4) * eq.nu;
    Scalar c_coeff = Scalar(-4) * m1 * m1 * eq.sum_e() + Scalar(4) * eq.H;
    return Poly({c_coeff, x_coeff});
}

DiffOp euler_third_order(const LameEquation& eq, const Scalar& mu) {
    Poly p = Scalar(4) * eq.p0;
    return DiffOp({Poly(euler_r0(mu, eq.nu)),
                   euler_r1(eq, mu),
                   (Scalar(Rat(3, 2)) + mu) * p.derivative(),
                   p});
}

DiffOp halphen_a(const LameEquation& eq) {
    Poly p = Scalar(4) * eq.p0;
    // 4H - sum_e - (2n+3)(2n-1)x, (2n+3)(2n-1) = 4 nu - 3
    Poly r({Scalar(4) * eq.H - eq.sum_e(), -(Scalar(4) * eq.nu - Scalar(3))});
    return DiffOp({r, p.derivative(), p});
}

DiffOp halphen_bc(const LameEquation& eq, const Scalar& n, HalphenCase cs) {
    if (n * (n + Scalar(1)) != eq.nu)
        throw std::invalid_argument("halphen_bc: n(n+1) != nu");
    Scalar mu = (cs == HalphenCase::b) ? n : -n - Scalar(1);
    Poly p = Scalar(4) * eq.p0;
    return DiffOp({euler_r1(eq, mu), (Scalar(Rat(3, 2)) + mu) * p.derivative(), p});
}

LameEquation heun_to_lame(const HeunEquation& h) {
    if (h.lambda != Scalar(1))
        throw std::invalid_argument("heun_to_lame: lambda != 1, use inverse_halphen_c");
    return LameEquation(h.p0, Scalar(Rat(3, 4)) - h.ab, h.Ht + h.sum_e() / Scalar(4));
}

LameEquation inverse_halphen_c(const HeunEquation& h) {
    if (h.lambda == Scalar(Rat(1, 2)))
        throw std::invalid_argument("inverse_halphen_c: lambda = 1/2 is degenerate (n = 0)");
    Scalar n = Scalar(Rat(1, 2)) - h.lambda;
    Scalar expected_ab = n * (Scalar(2) * n - Scalar(1));
    if (h.ab != expected_ab)
        throw std::invalid_argument("inverse_halphen_c: x-coefficient " + h.ab.str() +
                                    " does not match n(2n-1) = " + expected_ab.str());
    Scalar H = h.Ht + n * n * h.sum_e();
    return LameEquation(h.p0, n * (n + Scalar(1)), H);
}

Report reproduce_tables(const std::vector<TableRow>& rows) {
    Report rep;
    for (const auto& row : rows) {
        std::string tag = "table row " + std::to_string(row.nr);
        try {
            LameEquation got = heun_to_lame(row.heun);
            bool fwd = got == row.lame;
            std::string detail;
            if (!fwd)
                detail = "heun_to_lame gave nu=" + got.nu.str() + " H=" + got.H.str() +
                         ", table has nu=" + row.lame.nu.str() + " H=" + row.lame.H.str();
            DiffOp back = halphen_a(row.lame);
            bool inv = back.equal_up_to_scalar(row.heun.as_operator());
            if (!inv) detail += (detail.empty() ? "" : "; ") + std::string("halphen_a does not invert");
            rep.add(tag, fwd && inv, detail);
        } catch (const std::exception& e) {
            rep.add(tag, false, e.what());
        }
    }
    return rep;
}

} // namespace halphen
