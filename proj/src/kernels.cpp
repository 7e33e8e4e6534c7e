#include "pht/kernels.hpp"
#include "pht/errors.hpp"
#include "pht/expr.hpp"
#include "pht/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace pht {

KernelSpec make_kernel(const std::string& name) {
    if (name == "hilbert")
        return {[](double x) { return 1.0 / x; },
                [](double x) { return -1.0 / (x * x); }, "hilbert"};
    if (name == "signed-square")
        return {[](double x) { return (x > 0 ? 1.0 : -1.0) / (x * x); },
                [](double x) { return (x > 0 ? -2.0 : 2.0) / (x * x * x); },
                "signed-square"};
    if (name == "zero")
        return {[](double) { return 0.0; }, [](double) { return 0.0; }, "zero"};
    throw PreconditionError("unknown kernel '" + name + "'");
}

KernelSpec make_expression_kernel(const std::string& k_expr,
                                  const std::string& dk_expr,
                                  const std::string& name) {
    auto k = std::make_shared<Expression>(k_expr);
    auto dk = std::make_shared<Expression>(dk_expr);
    return {[k](double x) { return k->eval(x); },
            [dk](double x) { return dk->eval(x); }, name};
}

// ---------------------------------------------------------------------------
// validate_kernel
// ---------------------------------------------------------------------------
namespace {
double checked_eval(const std::function<double(double)>& f, double x) {
    double v = f(x);
    if (!std::isfinite(v)) {
        char msg[96];
        std::snprintf(msg, sizeof msg, "kernel evaluation not finite at x=%.9g", x);
        throw NumericError(msg);
    }
    return v;
}
} // namespace

KernelValidation validate_kernel(const KernelSpec& k, int sample_count) {
    if (sample_count < 16)
        throw PreconditionError("validate_kernel: sample_count >= 16");
    KernelValidation rep;
    const double lo = 1.0, hi = 1e6;
    // size bound on log-spaced |x|, both signs
    for (int i = 0; i < sample_count; ++i) {
        double t = double(i) / double(sample_count - 1);
        double ax = lo * std::pow(hi / lo, t);
        for (double x : {ax, -ax}) {
            double v = std::abs(x) * std::abs(checked_eval(k.evaluate, x)) +
                       x * x * std::abs(checked_eval(k.derivative, x));
            if (v > rep.max_size_bound) {
                rep.max_size_bound = v;
                rep.worst_x = x;
            }
        }
    }
    // cancellation: incremental integrals between consecutive lambdas
    Kahan integral; // int_{1<=|x|<=lambda} K
    double prev = 1.0;
    rep.max_cancellation = 0.0;
    for (int i = 0; i < sample_count; ++i) {
        double t = double(i) / double(sample_count - 1);
        double lam = lo * std::pow(hi / lo, t);
        if (lam > prev) {
            auto f = [&](double x) {
                return checked_eval(k.evaluate, x) + checked_eval(k.evaluate, -x);
            };
            integral.add(integrate(f, prev, lam, 1e-9));
            prev = lam;
        }
        rep.max_cancellation =
            std::max(rep.max_cancellation, std::abs(integral.value()));
    }
    rep.passes = rep.max_size_bound <= 1.0 + 1e-6 &&
                 rep.max_cancellation <= 1.0 + 1e-6;
    return rep;
}

BlockKernel block_kernel(const KernelSpec& k, double tau, int j) {
    if (!(tau > 1.0 && tau <= 2.0))
        throw PreconditionError("block_kernel: tau must lie in (1,2]");
    if (j < 0) throw PreconditionError("block_kernel: j >= 0");
    BlockKernel b;
    b.base = k;
    b.tau = tau;
    b.j = j;
    b.lo = std::pow(tau, j);
    b.hi = std::pow(tau, j + 1);
    return b;
}

std::complex<double> fourier_block(const BlockKernel& b, double xi) {
    // fold the two signed intervals onto [lo, hi]:
    //   re integrand: (K(y) + K(-y)) cos(2 pi xi y)
    //   im integrand: (K(y) - K(-y)) sin(2 pi xi y)
    const auto& K = b.base.evaluate;
    auto fre = [&](double y) {
        return (checked_eval(K, y) + checked_eval(K, -y)) * std::cos(kTwoPi * xi * y);
    };
    auto fim = [&](double y) {
        return (checked_eval(K, y) - checked_eval(K, -y)) * std::sin(kTwoPi * xi * y);
    };
    double re = integrate_oscillatory(fre, b.lo, b.hi, xi, 5e-11);
    double im = integrate_oscillatory(fim, b.lo, b.hi, xi, 5e-11);
    return {re, im};
}

std::complex<double> hilbert_block_symbol(double tau, int j, double xi) {
    if (xi == 0.0) return {0.0, 0.0};
    double ax = std::abs(xi);
    double a = kTwoPi * ax * std::pow(tau, j);
    double b = kTwoPi * ax * std::pow(tau, j + 1);
    double v = 2.0 * (sine_integral(b) - sine_integral(a));
    return {0.0, xi > 0 ? v : -v};
}

std::complex<double> block_symbol(const KernelSpec& k, double tau, int j,
                                  double xi) {
    if (k.name == "hilbert") return hilbert_block_symbol(tau, j, xi);
    if (k.name == "zero") return {0.0, 0.0};
    return fourier_block(block_kernel(k, tau, j), xi);
}

std::complex<double> partial_symbol(const KernelSpec& k, double tau, int kmax,
                                    double xi) {
    KahanComplex acc;
    for (int j = 0; j <= kmax; ++j) acc.add(block_symbol(k, tau, j, xi));
    return acc.value();
}

SymbolDecayReport symbol_decay_report(const KernelSpec& k, double tau,
                                      int j_min, int j_max,
                                      const std::vector<double>& xi_grid) {
    SymbolDecayReport rep;
    // mean-zero check on block 0 (eq. the cancellation within one block)
    if (k.name == "hilbert" || k.name == "zero") {
        rep.mean_zero = true;
    } else {
        BlockKernel b0 = block_kernel(k, tau, 0);
        auto f = [&](double y) { return k.evaluate(y) + k.evaluate(-y); };
        rep.mean_zero = std::abs(integrate(f, b0.lo, b0.hi, 1e-11)) < 1e-9;
    }
    for (int j = j_min; j <= j_max; ++j) {
        double tj = std::pow(tau, j);
        for (double xi : xi_grid) {
            if (xi == 0.0) continue;
            double mag = std::abs(block_symbol(k, tau, j, xi));
            rep.c_high = std::max(rep.c_high, mag * std::abs(xi) * tj);
            if (rep.mean_zero)
                rep.c_low = std::max(rep.c_low, mag / (std::abs(xi) * tj));
        }
    }
    return rep;
}

} // namespace pht
