#include "degenkit/verify.hpp"

#include "degenkit/degen_core.hpp"
#include "degenkit/operators.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

namespace degenkit {

namespace {

using Sample = std::optional<Rational>;
using LSeries = TruncatedSeries<LambdaPoly>;

bool zero_at(const LambdaPoly& p, const Sample& s) {
    return s ? p.eval(*s).is_zero() : p.is_zero();
}

std::string render_at(const LambdaPoly& p, const Sample& s) {
    return s ? p.eval(*s).to_string() : p.to_string();
}

std::optional<FirstFailure> xpoly_mismatch(const XPoly& a, const XPoly& b, const Sample& s,
                                           const std::string& prefix = "") {
    int top = std::max(a.degree(), b.degree());
    for (int k = 0; k <= top; ++k)
        if (!zero_at(a.coeff(k) - b.coeff(k), s))
            return FirstFailure{prefix + "x^" + std::to_string(k), render_at(a.coeff(k), s),
                                render_at(b.coeff(k), s)};
    return std::nullopt;
}

std::optional<FirstFailure> series_mismatch(const LSeries& a, const LSeries& b, const Sample& s,
                                            const std::string& var = "x",
                                            const std::string& prefix = "") {
    int top = std::min(a.valid_order(), b.valid_order());
    for (int k = 0; k <= top; ++k)
        if (!zero_at(a.coefficient(k) - b.coefficient(k), s))
            return FirstFailure{prefix + var + "^" + std::to_string(k), render_at(a.coefficient(k), s),
                                render_at(b.coefficient(k), s)};
    return std::nullopt;
}

VerdictReport run_check(std::string id, std::vector<std::pair<std::string, std::int64_t>> params,
                        const std::function<std::optional<FirstFailure>()>& body,
                        std::string note = {}) {
    VerdictReport report;
    report.identity_id = std::move(id);
    report.params = std::move(params);
    report.note = std::move(note);
    auto start = std::chrono::steady_clock::now();
    try {
        report.first_failure = body();
    } catch (const std::exception& e) {
        report.first_failure = FirstFailure{"error", e.what(), ""};
    }
    auto stop = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    report.passed = !report.first_failure;
    return report;
}

Rational binomial_rat(int n, int k) {
    return Rational(binomial_int(n, k));
}

// sum_{k=0}^{bound} C(choose_n, k) phi_k(x) (1)_{n-k,L}
XPoly bell_convolution(const PolyFamily& bell, int n, int choose_n, int bound) {
    XPoly out;
    for (int k = 0; k <= bound; ++k)
        out += bell.at(k).scaled(one_falling_factorial(n - k).scaled(binomial_rat(choose_n, k)));
    return out;
}

// EGF of the consecutive falling-factorial sums: sum_{n>=1} S_{n,L}(p) x^n / n!.
LSeries falling_sum_egf(int p, int order) {
    BigInt fact = 1;
    return LSeries::build(order, [&](int n) {
        if (n == 0)
            return LambdaPoly::zero();
        fact *= n;
        return falling_power_sum(p, n).scaled(Rational(BigInt(1), fact));
    });
}

// x/(1-x) = sum_{n>=1} x^n.
LSeries x_over_one_minus_x(int order) {
    return LSeries::build(order, [](int n) { return n >= 1 ? LambdaPoly::one() : LambdaPoly::zero(); });
}

LSeries geometric_power(const LSeries& geometric, int exponent) {
    LSeries out = LSeries::unit(geometric.order());
    for (int i = 0; i < exponent; ++i)
        out = out * geometric;
    return out;
}

}  // namespace

void validate_config(const SuiteConfig& config) {
    if (config.n_max < 0)
        throw std::invalid_argument("n_max must be nonnegative");
    if (config.p_max < 1)
        throw std::invalid_argument("p_max must be at least 1");
    if (config.r_max < 0)
        throw std::invalid_argument("r_max must be nonnegative");
    int min_order = std::max({config.n_max, config.p_max + 1, config.r_max + 2, 1});
    if (config.order < min_order)
        throw std::invalid_argument("order must be at least " + std::to_string(min_order) +
                                    " for these ranges");
    if (config.selection)
        for (const auto& name : *config.selection)
            if (!is_family_name(name))
                throw std::invalid_argument("unknown identity family: " + name);
    if (config.perturb_second_kind) {
        const auto& p = *config.perturb_second_kind;
        int triangle_n = std::max(config.n_max, config.p_max) + 1;
        if (p.n < 0 || p.n > triangle_n || p.k < 0 || p.k > p.n)
            throw std::invalid_argument("perturbation entry out of triangle range");
    }
}

namespace {
StirlingTriangle build_second_recurrence(const SuiteConfig& config, int n_max) {
    auto triangle = stirling_second_by_recurrence(n_max);
    if (config.perturb_second_kind) {
        const auto& p = *config.perturb_second_kind;
        triangle = triangle.with_entry_bumped(p.n, p.k, p.delta);
    }
    return triangle;
}

SuiteConfig validated(SuiteConfig config) {
    validate_config(config);
    return config;
}
}  // namespace

VerifyContext::VerifyContext(SuiteConfig config)
    : config_(validated(std::move(config))),
      family_n_max_(std::max(config_.n_max, config_.p_max) + 1),
      second_recurrence_(build_second_recurrence(config_, family_n_max_)),
      second_egf_(stirling_second_by_egf(family_n_max_)),
      first_egf_(stirling_first_by_egf(family_n_max_)),
      bell_(bell_family(second_recurrence_, family_n_max_)),
      fubini_(fubini_family(second_recurrence_, family_n_max_)),
      exp_x_(lift_series<LambdaPoly>(exp_series(config_.order))),
      geometric_((TruncatedSeries<LambdaPoly>::unit(config_.order) -
                  TruncatedSeries<LambdaPoly>::indeterminate(config_.order))
                     .geometric_inverse()) {}

VerdictReport check_theorem_1(const VerifyContext& ctx, int n) {
    return run_check("theorem_1", {{"n", n}}, [&]() {
        XPoly lhs = XPoly::x() * bell_convolution(ctx.bell(), n, n, n);
        XPoly tail = XPoly::x() * bell_convolution(ctx.bell(), n, n - 1, n - 1);
        XPoly rhs = ctx.bell().at(n + 1) + tail.scaled(LambdaPoly::monomial(Rational(n), 1));
        return xpoly_mismatch(lhs, rhs, ctx.lambda_sample());
    }, "x-cleared form");
}

VerdictReport check_theorem_2(const VerifyContext& ctx, int n) {
    return run_check("theorem_2", {{"n", n}}, [&]() -> std::optional<FirstFailure> {
        const auto& bell = ctx.bell();
        const auto& s = ctx.lambda_sample();
        XPoly tail = XPoly::x() * bell_convolution(bell, n, n - 1, n - 1);
        XPoly rhs = XPoly::x() * (bell.at(n).derivative() + bell.at(n)) -
                    tail.scaled(LambdaPoly::monomial(Rational(n), 1));
        if (auto fail = xpoly_mismatch(bell.at(n + 1), rhs, s, "main: "))
            return fail;
        if (n >= 1) {
            XPoly expansion;
            for (int k = 0; k <= n - 1; ++k)
                expansion += bell.at(k).scaled(one_falling_factorial(n - k).scaled(binomial_rat(n, k)));
            if (auto fail = xpoly_mismatch(bell.at(n).derivative(), expansion, s, "derivative: "))
                return fail;
        }
        return std::nullopt;
    }, "x-cleared form plus the derivative expansion");
}

VerdictReport check_proposition_3(const VerifyContext& ctx, int p) {
    return run_check("proposition_3", {{"p", p}, {"N", ctx.order()}}, [&]() {
        int N = ctx.order();
        BigInt fact = 1;
        LSeries y = LSeries::build(N, [&](int n) {
            if (n > 0)
                fact *= n;
            if (n < 2)
                return LambdaPoly::zero();
            return falling_power_sum(p, n - 1).scaled(Rational(BigInt(1), fact));
        });
        LSeries lhs = y.differentiated() - y;
        LSeries rhs = ctx.exp_x() * to_series_in_x(ctx.bell().at(p), N);
        return series_mismatch(lhs, rhs, ctx.lambda_sample());
    });
}

VerdictReport check_theorem_4(const VerifyContext& ctx, int p) {
    return run_check("theorem_4", {{"p", p}, {"N", ctx.order()}}, [&]() {
        int N = ctx.order();
        const XPoly& phi = ctx.bell().at(p);
        LSeries rhs = ctx.exp_x() * to_series_in_x(phi + phi.antiderivative_from_zero(), N);
        return series_mismatch(falling_sum_egf(p, N), rhs, ctx.lambda_sample());
    }, "single series variable");
}

VerdictReport check_theorem_5(const VerifyContext& ctx, int p) {
    return run_check("theorem_5", {{"p", p}, {"N", ctx.order()}}, [&]() -> std::optional<FirstFailure> {
        int N = ctx.order();
        const auto& s = ctx.lambda_sample();
        LSeries operator_path = apply_euler_degenerate_literal(ctx.exp_x(), p);
        LSeries direct_path = euler_degenerate_on_exp(p, N);
        LSeries product_path = ctx.exp_x() * to_series_in_x(ctx.bell().at(p), N);
        if (auto fail = series_mismatch(operator_path, direct_path, s, "x", "operator vs sum: "))
            return fail;
        if (auto fail = series_mismatch(operator_path, product_path, s, "x", "operator vs product: "))
            return fail;
        return series_mismatch(direct_path, product_path, s, "x", "sum vs product: ");
    });
}

VerdictReport check_theorem_6(const VerifyContext& ctx, int p) {
    return run_check("theorem_6", {{"p", p}, {"N", ctx.order()}}, [&]() {
        int N = ctx.order();
        XPoly weighted;
        for (int k = 0; k <= p; ++k) {
            const LambdaPoly& entry = ctx.second_recurrence().at(p, k);
            weighted += XPoly::monomial(entry, k);
            weighted += XPoly::monomial(entry.scaled(Rational(BigInt(1), BigInt(k + 1))), k + 1);
        }
        LSeries rhs = ctx.exp_x() * to_series_in_x(weighted, N);
        return series_mismatch(falling_sum_egf(p, N), rhs, ctx.lambda_sample());
    });
}

VerdictReport check_theorem_7(const VerifyContext& ctx, int p) {
    return run_check("theorem_7", {{"p", p}, {"N", ctx.order()}}, [&]() -> std::optional<FirstFailure> {
        int N = ctx.order();
        const auto& s = ctx.lambda_sample();
        // Eq. (34) hinges on the vanishing of the (p, p+1) entry.
        if (!zero_at(ctx.second_recurrence().at(p, p + 1), s))
            return FirstFailure{"S2(p, p+1)", render_at(ctx.second_recurrence().at(p, p + 1), s), "0"};
        XPoly numerator =
            ctx.bell().at(p + 1) + ctx.bell().at(p).scaled(LambdaPoly::monomial(Rational(p), 1));
        XPoly integrated = numerator.divided_by_x().antiderivative_from_zero();
        LSeries rhs = ctx.exp_x() * to_series_in_x(integrated, N);
        return series_mismatch(falling_sum_egf(p, N), rhs, s);
    }, "p >= 1 only; includes the (p, p+1) vanishing");
}

VerdictReport check_theorem_8(const VerifyContext& ctx, int p, int statement) {
    if (statement != 1 && statement != 2)
        throw std::invalid_argument("theorem_8 statement must be 1 or 2");
    return run_check("theorem_8", {{"p", p}, {"stmt", statement}, {"N", ctx.order()}}, [&]() {
        int N = ctx.order();
        LSeries composed = to_series_in_x(ctx.fubini().at(p), N).composed_with(x_over_one_minus_x(N));
        if (statement == 1) {
            LSeries lhs = LSeries::build(N, [&](int n) { return falling_factorial(Rational(n), p); });
            return series_mismatch(lhs, ctx.geometric() * composed, ctx.lambda_sample());
        }
        LSeries lhs = LSeries::build(N, [&](int n) {
            return n >= 1 ? falling_power_sum(p, n) : LambdaPoly::zero();
        });
        LSeries rhs = ctx.geometric() * ctx.geometric() * composed;
        return series_mismatch(lhs, rhs, ctx.lambda_sample());
    });
}

VerdictReport check_corollary_9(const VerifyContext& ctx, int p) {
    return run_check("corollary_9", {{"p", p}, {"N", ctx.order()}}, [&]() {
        int N = ctx.order();
        // Coefficient reduction of the left side: [x^m] = S_{m-1,L}(p).
        LSeries lhs = LSeries::build(N, [&](int m) {
            return m >= 1 ? falling_power_sum(p, m - 1) : LambdaPoly::zero();
        });
        LSeries composed = to_series_in_x(ctx.fubini().at(p), N).composed_with(x_over_one_minus_x(N));
        LSeries rhs = (ctx.geometric() * ctx.geometric() * composed).shifted_up(1);
        return series_mismatch(lhs, rhs, ctx.lambda_sample());
    }, "infinite sum reduced per coefficient");
}

VerdictReport check_theorem_10(const VerifyContext& ctx, int r, int n) {
    return run_check("theorem_10", {{"r", r}, {"n", n}}, [&]() {
        XPoly literal = d_r_on_fubini(ctx.second_recurrence(), r, n);
        XPoly closed;
        BigInt fact = 1;
        for (int k = 0; k <= n; ++k) {
            if (k > 0)
                fact *= k;
            closed += XPoly::monomial(
                ctx.second_recurrence().at(n, k).scaled(Rational(binomial_int(k + r, k) * fact)), k);
        }
        return xpoly_mismatch(literal, closed, ctx.lambda_sample());
    });
}

VerdictReport check_theorem_11(const VerifyContext& ctx, int p, int r) {
    return run_check("theorem_11", {{"p", p}, {"r", r}, {"N", ctx.order()}},
                     [&]() -> std::optional<FirstFailure> {
        int N = ctx.order();
        const auto& s = ctx.lambda_sample();
        LSeries powered = geometric_power(ctx.geometric(), r + 1);
        LSeries operator_path = apply_euler_degenerate_literal(powered, p);
        LSeries direct_path = LSeries::build(N, [&](int n) {
            return falling_factorial(Rational(n), p).scaled(binomial_rat(n + r, n));
        });
        XPoly shifted_fubini = apply_d_r(ctx.fubini().at(p), r);
        LSeries closed_path =
            powered * to_series_in_x(shifted_fubini, N).composed_with(x_over_one_minus_x(N));
        if (auto fail = series_mismatch(operator_path, direct_path, s, "x", "operator vs sum: "))
            return fail;
        if (auto fail = series_mismatch(operator_path, closed_path, s, "x", "operator vs closed: "))
            return fail;
        return series_mismatch(direct_path, closed_path, s, "x", "sum vs closed: ");
    });
}

VerdictReport check_theorem_12(const VerifyContext& ctx, int p, int r) {
    return run_check("theorem_12", {{"p", p}, {"r", r}, {"N", ctx.order()}}, [&]() {
        int N = ctx.order();
        LSeries composed = to_series_in_x(ctx.fubini().at(p), N).composed_with(x_over_one_minus_x(N));
        LSeries inner = ctx.geometric() * ctx.geometric() * composed;
        // (1/r!) (d/dx)^r [x^r * inner], valid to N - r.
        LSeries first_term = apply_d_r_literal(inner, r);
        LSeries second_term = apply_euler_degenerate(geometric_power(ctx.geometric(), r + 1), p);
        LSeries lhs = first_term - second_term;
        LSeries rhs = LSeries::build(N, [&](int n) {
            if (n == 0)
                return LambdaPoly::zero();
            return falling_power_sum(p, n - 1).scaled(binomial_rat(n + r, n));
        });
        return series_mismatch(lhs, rhs, ctx.lambda_sample());
    }, "infinite sum reduced per coefficient; degrees 0..N-r");
}

VerdictReport check_eq_33(const VerifyContext& ctx) {
    return run_check("eq_33", {{"n_max", ctx.config().n_max}}, [&]() -> std::optional<FirstFailure> {
        const auto& egf = ctx.second_egf();
        const auto& s = ctx.lambda_sample();
        for (int n = 0; n < ctx.config().n_max; ++n) {
            for (int k = 0; k <= n + 1; ++k) {
                LambdaPoly weight = LambdaPoly(Rational(k)) - LambdaPoly::monomial(Rational(n), 1);
                LambdaPoly expected = egf.at(n, k - 1) + weight * egf.at(n, k);
                if (!zero_at(egf.at(n + 1, k) - expected, s))
                    return FirstFailure{"(n=" + std::to_string(n + 1) + ",k=" + std::to_string(k) + ")",
                                        render_at(egf.at(n + 1, k), s), render_at(expected, s)};
            }
        }
        return std::nullopt;
    });
}

VerdictReport check_eq_39(const VerifyContext& ctx, int p) {
    return run_check("eq_39", {{"p", p}, {"N", ctx.order()}}, [&]() {
        int N = ctx.order();
        LSeries lhs = ctx.geometric() * polylog_degenerate_series(p, N);
        // Partial sums of the closed-form coefficients, accumulated directly.
        LambdaPoly running;
        LambdaPoly product = LambdaPoly::one();
        BigInt fact = 1;
        LSeries rhs = LSeries::build(N, [&](int n) {
            if (n == 0)
                return LambdaPoly::zero();
            if (n > 1) {
                product = product * (LambdaPoly(Rational(n - 1)) - LambdaPoly::lambda());
                fact *= n - 1;
            }
            running += product.scaled(Rational(BigInt(1), fact) * Rational::integer_power(n, -p));
            return running;
        });
        return series_mismatch(lhs, rhs, ctx.lambda_sample());
    });
}

VerdictReport check_eq_5(const VerifyContext& ctx) {
    return run_check("eq_5", {{"n_max", ctx.config().n_max}}, [&]() -> std::optional<FirstFailure> {
        for (int n = 0; n <= ctx.config().n_max; ++n) {
            XPoly rhs;
            for (int k = 0; k <= n; ++k)
                rhs += falling_factorial_x(k).scaled(ctx.first_egf().at(n, k));
            if (auto fail = xpoly_mismatch(classical_falling_factorial_x(n), rhs, ctx.lambda_sample(),
                                           "n=" + std::to_string(n) + " "))
                return fail;
        }
        return std::nullopt;
    });
}

VerdictReport check_eq_6(const VerifyContext& ctx) {
    return run_check("eq_6", {{"n_max", ctx.config().n_max}}, [&]() -> std::optional<FirstFailure> {
        for (int n = 0; n <= ctx.config().n_max; ++n) {
            XPoly rhs;
            for (int k = 0; k <= n; ++k)
                rhs += classical_falling_factorial_x(k).scaled(ctx.second_recurrence().at(n, k));
            if (auto fail = xpoly_mismatch(falling_factorial_x(n), rhs, ctx.lambda_sample(),
                                           "n=" + std::to_string(n) + " "))
                return fail;
        }
        return std::nullopt;
    });
}

VerdictReport check_stirling_inversion(const VerifyContext& ctx) {
    return run_check("stirling_inversion", {{"n_max", ctx.config().n_max}},
                     [&]() -> std::optional<FirstFailure> {
        const auto& s = ctx.lambda_sample();
        for (int n = 0; n <= ctx.config().n_max; ++n) {
            for (int m = 0; m <= ctx.config().n_max; ++m) {
                LambdaPoly first_second;
                LambdaPoly second_first;
                for (int k = 0; k <= n; ++k) {
                    first_second += ctx.first_egf().at(n, k) * ctx.second_recurrence().at(k, m);
                    second_first += ctx.second_recurrence().at(n, k) * ctx.first_egf().at(k, m);
                }
                LambdaPoly delta = n == m ? LambdaPoly::one() : LambdaPoly::zero();
                std::string where = "(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")";
                if (!zero_at(first_second - delta, s))
                    return FirstFailure{"S1*S2 " + where, render_at(first_second, s),
                                        render_at(delta, s)};
                if (!zero_at(second_first - delta, s))
                    return FirstFailure{"S2*S1 " + where, render_at(second_first, s),
                                        render_at(delta, s)};
            }
        }
        return std::nullopt;
    });
}

VerdictReport check_stirling_cross(const VerifyContext& ctx) {
    return run_check("stirling_cross_check", {{"n_max", ctx.config().n_max}},
                     [&]() -> std::optional<FirstFailure> {
        for (int n = 0; n <= ctx.config().n_max; ++n)
            for (int k = 0; k <= n; ++k)
                if (!zero_at(ctx.second_recurrence().at(n, k) - ctx.second_egf().at(n, k),
                             ctx.lambda_sample()))
                    return FirstFailure{"(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")",
                                        render_at(ctx.second_recurrence().at(n, k), ctx.lambda_sample()),
                                        render_at(ctx.second_egf().at(n, k), ctx.lambda_sample())};
        return std::nullopt;
    });
}

VerdictReport check_bell_dobinski(const VerifyContext& ctx, int n) {
    return run_check("bell_dobinski", {{"n", n}, {"N", ctx.order()}}, [&]() {
        int N = ctx.order();
        LSeries lhs = ctx.exp_x() * to_series_in_x(ctx.bell().at(n), N);
        BigInt fact = 1;
        LSeries rhs = LSeries::build(N, [&](int k) {
            if (k > 0)
                fact *= k;
            return falling_factorial(Rational(k), n).scaled(Rational(BigInt(1), fact));
        });
        return series_mismatch(lhs, rhs, ctx.lambda_sample());
    });
}

VerdictReport check_bell_egf_cross(const VerifyContext& ctx) {
    return run_check("bell_egf_cross", {{"n_max", ctx.config().n_max}, {"N", ctx.order()}},
                     [&]() -> std::optional<FirstFailure> {
        PolyFamily from_egf = bell_family_from_egf(ctx.config().n_max, ctx.order());
        for (int n = 0; n <= ctx.config().n_max; ++n)
            if (auto fail = xpoly_mismatch(ctx.bell().at(n), from_egf.at(n), ctx.lambda_sample(),
                                           "n=" + std::to_string(n) + " "))
                return fail;
        return std::nullopt;
    });
}

VerdictReport check_fubini_ogf_cross(const VerifyContext& ctx) {
    return run_check("fubini_ogf_cross", {{"n_max", ctx.config().n_max}, {"N", ctx.order()}},
                     [&]() -> std::optional<FirstFailure> {
        PolyFamily from_ogf = fubini_family_from_ogf(ctx.config().n_max, ctx.order());
        for (int n = 0; n <= ctx.config().n_max; ++n)
            if (auto fail = xpoly_mismatch(ctx.fubini().at(n), from_ogf.at(n), ctx.lambda_sample(),
                                           "n=" + std::to_string(n) + " "))
                return fail;
        return std::nullopt;
    });
}

VerdictReport check_eq_7_log_exp(const VerifyContext& ctx) {
    return run_check("eq_7_log_exp", {{"N", ctx.order()}}, [&]() {
        int N = ctx.order();
        LSeries inner = exp_degenerate_one_series(N) - LSeries::unit(N);
        LSeries lhs = log_degenerate_series(N).composed_with(inner);
        return series_mismatch(lhs, LSeries::indeterminate(N), ctx.lambda_sample(), "t");
    });
}

VerdictReport check_eq_8_li1(const VerifyContext& ctx) {
    return run_check("eq_8_li1", {{"N", ctx.order()}}, [&]() {
        int N = ctx.order();
        LSeries lhs = polylog_degenerate_series(1, N);
        LSeries rhs = -log_degenerate_series(N).composed_with(-LSeries::indeterminate(N));
        return series_mismatch(lhs, rhs, ctx.lambda_sample(), "t");
    });
}

namespace {

const std::vector<FamilyInfo>& families_table() {
    static const std::vector<FamilyInfo> table = {
        {"theorem_1", FamilyTier::paper},
        {"theorem_2", FamilyTier::paper},
        {"proposition_3", FamilyTier::paper},
        {"theorem_4", FamilyTier::paper},
        {"theorem_5", FamilyTier::paper},
        {"theorem_6", FamilyTier::paper},
        {"theorem_7", FamilyTier::paper},
        {"theorem_8", FamilyTier::paper},
        {"corollary_9", FamilyTier::paper},
        {"theorem_10", FamilyTier::paper},
        {"theorem_11", FamilyTier::paper},
        {"theorem_12", FamilyTier::paper},
        {"eq_33", FamilyTier::paper},
        {"eq_39", FamilyTier::paper},
        {"eq_5", FamilyTier::definitional},
        {"eq_6", FamilyTier::definitional},
        {"stirling_inversion", FamilyTier::definitional},
        {"stirling_cross_check", FamilyTier::definitional},
        {"bell_dobinski", FamilyTier::definitional},
        {"bell_egf_cross", FamilyTier::definitional},
        {"fubini_ogf_cross", FamilyTier::definitional},
        {"eq_7_log_exp", FamilyTier::definitional},
        {"eq_8_li1", FamilyTier::definitional},
    };
    return table;
}

void run_family(const std::string& name, const VerifyContext& ctx, std::vector<VerdictReport>& out) {
    const auto& cfg = ctx.config();
    if (name == "theorem_1") {
        for (int n = 0; n <= cfg.n_max; ++n)
            out.push_back(check_theorem_1(ctx, n));
    } else if (name == "theorem_2") {
        for (int n = 0; n <= cfg.n_max; ++n)
            out.push_back(check_theorem_2(ctx, n));
    } else if (name == "proposition_3") {
        for (int p = 1; p <= cfg.p_max; ++p)
            out.push_back(check_proposition_3(ctx, p));
    } else if (name == "theorem_4") {
        for (int p = 1; p <= cfg.p_max; ++p)
            out.push_back(check_theorem_4(ctx, p));
    } else if (name == "theorem_5") {
        for (int p = 1; p <= cfg.p_max; ++p)
            out.push_back(check_theorem_5(ctx, p));
    } else if (name == "theorem_6") {
        for (int p = 1; p <= cfg.p_max; ++p)
            out.push_back(check_theorem_6(ctx, p));
    } else if (name == "theorem_7") {
        for (int p = 1; p <= cfg.p_max; ++p)
            out.push_back(check_theorem_7(ctx, p));
    } else if (name == "theorem_8") {
        for (int p = 1; p <= cfg.p_max; ++p)
            for (int statement = 1; statement <= 2; ++statement)
                out.push_back(check_theorem_8(ctx, p, statement));
    } else if (name == "corollary_9") {
        for (int p = 1; p <= cfg.p_max; ++p)
            out.push_back(check_corollary_9(ctx, p));
    } else if (name == "theorem_10") {
        for (int r = 0; r <= cfg.r_max; ++r)
            for (int n = 0; n <= cfg.p_max; ++n)
                out.push_back(check_theorem_10(ctx, r, n));
    } else if (name == "theorem_11") {
        for (int p = 1; p <= cfg.p_max; ++p)
            for (int r = 0; r <= cfg.r_max; ++r)
                out.push_back(check_theorem_11(ctx, p, r));
    } else if (name == "theorem_12") {
        for (int p = 1; p <= cfg.p_max; ++p)
            for (int r = 0; r <= cfg.r_max; ++r)
                out.push_back(check_theorem_12(ctx, p, r));
    } else if (name == "eq_33") {
        out.push_back(check_eq_33(ctx));
    } else if (name == "eq_39") {
        for (int p = 0; p <= 2; ++p)
            out.push_back(check_eq_39(ctx, p));
    } else if (name == "eq_5") {
        out.push_back(check_eq_5(ctx));
    } else if (name == "eq_6") {
        out.push_back(check_eq_6(ctx));
    } else if (name == "stirling_inversion") {
        out.push_back(check_stirling_inversion(ctx));
    } else if (name == "stirling_cross_check") {
        out.push_back(check_stirling_cross(ctx));
    } else if (name == "bell_dobinski") {
        for (int n = 0; n <= cfg.p_max; ++n)
            out.push_back(check_bell_dobinski(ctx, n));
    } else if (name == "bell_egf_cross") {
        out.push_back(check_bell_egf_cross(ctx));
    } else if (name == "fubini_ogf_cross") {
        out.push_back(check_fubini_ogf_cross(ctx));
    } else if (name == "eq_7_log_exp") {
        out.push_back(check_eq_7_log_exp(ctx));
    } else if (name == "eq_8_li1") {
        out.push_back(check_eq_8_li1(ctx));
    } else {
        throw std::invalid_argument("unknown identity family: " + name);
    }
}

}  // namespace

const std::vector<FamilyInfo>& suite_families() {
    return families_table();
}

bool is_family_name(const std::string& name) {
    for (const auto& info : families_table())
        if (info.name == name)
            return true;
    return false;
}

SuiteResult run_suite(const SuiteConfig& config) {
    validate_config(config);
    VerifyContext ctx(config);

    std::vector<std::string> selected;
    if (config.selection)
        selected = *config.selection;
    else
        for (const auto& info : families_table())
            selected.push_back(info.name);

    SuiteResult result;
    result.config = config;
    // Fixed family order regardless of selection order.
    for (const auto& info : families_table()) {
        if (std::find(selected.begin(), selected.end(), info.name) == selected.end())
            continue;
        run_family(info.name, ctx, result.reports);
    }
    result.all_passed = std::all_of(result.reports.begin(), result.reports.end(),
                                    [](const VerdictReport& r) { return r.passed; });
    return result;
}

namespace {
FamilyTier tier_of(const std::string& name) {
    for (const auto& info : families_table())
        if (info.name == name)
            return info.tier;
    return FamilyTier::definitional;
}
}  // namespace

nlohmann::ordered_json suite_to_json(const SuiteResult& result) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json cfg;
    cfg["n_max"] = result.config.n_max;
    cfg["p_max"] = result.config.p_max;
    cfg["r_max"] = result.config.r_max;
    cfg["order"] = result.config.order;
    cfg["lambda"] = result.config.lambda_value ? result.config.lambda_value->to_string() : "sym";
    nlohmann::ordered_json selection = nlohmann::ordered_json::array();
    if (result.config.selection.empty()) {
        for (const auto& info : families_table())
            selection.push_back(info.name);
    } else {
        for (const auto& name : result.config.selection)
            selection.push_back(name);
    }
    cfg["selection"] = std::move(selection);
    j["config"] = std::move(cfg);
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    for (const auto& report : result.reports)
        reports.push_back(report.to_json());
    j["reports"] = std::move(reports);
    j["passed"] = result.all_passed;
    return j;
}

std::string suite_to_text(const SuiteResult& result) {
    std::string out;
    int paper_selected = 0, paper_passed = 0;
    int defn_selected = 0, defn_passed = 0;
    std::string last_family;
    bool family_ok = true;

    auto flush_family = [&](const std::string& next) {
        if (!last_family.empty() && last_family != next) {
            int& selected = tier_of(last_family) == FamilyTier::paper ? paper_selected : defn_selected;
            int& passed = tier_of(last_family) == FamilyTier::paper ? paper_passed : defn_passed;
            ++selected;
            if (family_ok)
                ++passed;
            family_ok = true;
        }
        last_family = next;
    };

    size_t failed = 0;
    for (const auto& report : result.reports) {
        flush_family(report.identity_id);
        family_ok = family_ok && report.passed;
        if (!report.passed)
            ++failed;
        out += report.to_text_line() + "\n";
    }
    flush_family("");

    out += "paper identities: " + std::to_string(paper_passed) + "/" + std::to_string(paper_selected) +
           " families passed\n";
    out += "definitional cross-checks: " + std::to_string(defn_passed) + "/" +
           std::to_string(defn_selected) + " families passed\n";
    out += "reports: " + std::to_string(result.reports.size() - failed) + " passed, " +
           std::to_string(failed) + " failed\n";
    return out;
}

std::string suite_to_csv(const SuiteResult& result) {
    std::string out = VerdictReport::csv_header() + "\n";
    for (const auto& report : result.reports)
        out += report.to_csv_row() + "\n";
    return out;
}

}  // namespace degenkit
