#include "msl/constants.hpp"

namespace msl {

namespace {

SurdSum eval_sum(const Int& a0f, const std::string& fpre, const std::string& fper,
                 const Int& a0b, const std::string& bpre, const std::string& bper) {
    SurdSum fwd(eval_periodic(a0f, OneSidedWord(parse_compact(fpre), parse_compact(fper))));
    SurdSum bwd(eval_periodic(a0b, OneSidedWord(parse_compact(bpre), parse_compact(bper))));
    return fwd + bwd;
}

}  // namespace

SurdSum c_inf_value() {
    // [ov(2_4,1_2,2_2,1)] + [0; ov(1,2_2,1_2,2_4)]
    return eval_sum(2, "2_3 1_2 2_2 1", "2_4 1_2 2_2 1", 0, "", "1 2_2 1_2 2_4");
}

SurdSum C_inf_value() {
    return eval_sum(2, "1 2_2 1_2 2_4 1 2_2 1_2 2_4 1 2_2 1_2 2_2 1 2_4 1_2", "2_3 1_3",
                    0, "2_3 1_2 2_2 1 2_4 1", "1_3 2_3");
}

SurdSum f_value() {
    // [ov(2_4,1_2,2_2,1)] + [0; 1,2_2,1_2,2_4,1,2_2,1_2,2_2,1_2, ov(2_3,1_3)]
    return eval_sum(2, "2_3 1_2 2_2 1", "2_4 1_2 2_2 1",
                    0, "1 2_2 1_2 2_4 1 2_2 1_2 2_2 1_2", "2_3 1_3");
}

SurdSum sigma_value() {
    return eval_sum(2, "2_3 1_2 2_2 1", "2_4 1_2 2_2 1",
                    0, "1 2_2 1_2 2_4 1 2_2 1_2 2_2 1_2", "2_2 1_2 2_2 1 2_2");
}

SurdSum f_closed_form() {
    return SurdSum(QuadraticSurd(Int("71788723850"), 2, 210, Int("101867079581"))) +
           SurdSum(QuadraticSurd(217, 1, 156817, 254));
}

const BiInfiniteSequence& rho_sequence() {
    static const BiInfiniteSequence seq = parse_sequence(
        "over(1 2_2 1_2 2_4) 1 2_2 1_2 2_3 ; 2 1 2_2 1_2 2_4 1 2_2 1_2 2_2 1_2 ; over(2_3 1_3)");
    return seq;
}

const BiInfiniteSequence& freiman_sequence() {
    static const BiInfiniteSequence seq = parse_sequence(
        "over(1 2_2 1_2 2_4) 1 2_2 1_2 2_3 ; 2 1 2_2 1_2 2_4 1 2_2 1_2 2_2 1_2 ; over(2_2 1_2 2_2 1 2_2)");
    return seq;
}

BiInfiniteSequence isolated_family_sequence(const FiniteWord& gamma_period) {
    BiInfiniteSequence seq = rho_sequence();
    seq.right = OneSidedWord(FiniteWord{}, gamma_period);
    return seq;
}

NamedConstant compute_constant(const std::string& name, int digits) {
    if (digits < 0 || digits > 200) throw std::invalid_argument("compute_constant: digits out of range");
    SurdSum v;
    if (name == "c_inf")
        v = c_inf_value();
    else if (name == "C_inf")
        v = C_inf_value();
    else if (name == "f")
        v = f_value();
    else if (name == "sigma")
        v = sigma_value();
    else
        throw std::invalid_argument("compute_constant: unknown name '" + name + "'");
    return NamedConstant{name, v, v.decimal(digits)};
}

ClosedFormReport verify_f_closed_form(int digits) {
    if (digits < 40) throw std::invalid_argument("verify_f_closed_form: digits must be >= 40");

    // (a) the two periodic components of lambda_0(rho) satisfy their quadratics
    bool components_ok = true;
    auto check_root = [&](const OneSidedWord& w) {
        // recompute the fixed-point quadratic of the purely periodic tail and
        // plug the root back in
        struct M {
            Int a{1}, b{0}, c{0}, d{1};
        } m;
        for (int dig : w.period.digits) {
            Int na = m.a * dig + m.b, nc = m.c * dig + m.d;
            m.b = m.a;
            m.d = m.c;
            m.a = na;
            m.c = nc;
        }
        QuadraticSurd y = surd_from_fixed_point(m.c, m.d - m.a, -m.b, +1);
        SurdSum ys(y);
        SurdSum y2 = [&] {
            Rational rp(y.p * y.p + y.q * y.q * y.d, y.r * y.r);
            return SurdSum(rp) + SurdSum(QuadraticSurd(0, 2 * y.p * y.q, y.d, y.r * y.r));
        }();
        SurdSum residual = y2.scaled(Rational(m.c)) + ys.scaled(Rational(Int(m.d - m.a))) -
                           SurdSum(Rational(m.b));
        components_ok = components_ok && residual.sign() == 0;
    };
    check_root(OneSidedWord(parse_compact("2_3 1_2 2_2 1"), parse_compact("2_4 1_2 2_2 1")));
    check_root(OneSidedWord(parse_compact("1 2_2 1_2 2_4 1 2_2 1_2 2_2 1_2"), parse_compact("2_3 1_3")));

    // (b)/(c) exact agreement between the functional value and the closed form
    SurdSum lhs = lambda_at(rho_sequence(), 0).value;
    SurdSum rhs = f_closed_form();
    bool equal = surd_compare(lhs, rhs) == Ordering::Equal;

    return ClosedFormReport{components_ok, equal, lhs.decimal(digits), digits};
}

}  // namespace msl
