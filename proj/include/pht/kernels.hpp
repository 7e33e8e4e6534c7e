#pragma once
#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace pht {

// ---------------------------------------------------------------------------
// Calderon-Zygmund kernel contract: K in C^1 away from 0 with
//   |x||K(x)| + |x|^2|K'(x)| <= 1   and   sup_l |int_{1<=|x|<=l} K| <= 1.
// Kernels violating the size bound by a constant factor are accepted but the
// raw constants are reported (the Hilbert kernel 1/x has raw size bound 2).
// ---------------------------------------------------------------------------
struct KernelSpec {
    std::function<double(double)> evaluate;   // K(x), |x| >= 1
    std::function<double(double)> derivative; // K'(x)
    std::string name;
};

// Registry: "hilbert" (1/x), "signed-square" (sign(x)/x^2), "zero".
KernelSpec make_kernel(const std::string& name);
// Custom kernel from two expression strings (K and K'; no symbolic
// differentiation is attempted).
KernelSpec make_expression_kernel(const std::string& k_expr,
                                  const std::string& dk_expr,
                                  const std::string& name = "custom");

struct KernelValidation {
    double max_size_bound = 0.0;   // max over samples of |x||K|+|x|^2|K'|
    double max_cancellation = 0.0; // sup over sampled l of |int K|
    bool passes = false;           // both <= 1 + 1e-6
    double worst_x = 0.0;          // argmax of the size bound
};

// Log-spaced samples of |x| and lambda in [1, 1e6]; sample_count >= 16.
KernelValidation validate_kernel(const KernelSpec& k, int sample_count);

// ---------------------------------------------------------------------------
// tau-adic block K_j: equals K on tau^j < |x| <= tau^{j+1}, zero otherwise.
// ---------------------------------------------------------------------------
struct BlockKernel {
    KernelSpec base;
    double tau = 2.0;
    int j = 0;
    double lo = 1.0, hi = 2.0; // (lo, hi]

    double evaluate(double x) const {
        double ax = std::abs(x);
        return (ax > lo && ax <= hi) ? base.evaluate(x) : 0.0;
    }
};

BlockKernel block_kernel(const KernelSpec& k, double tau, int j);

// Phi_j(xi) = int K_j(x) e^{2 pi i xi x} dx by adaptive quadrature over the
// two intervals +-(tau^j, tau^{j+1}]; absolute error <= 1e-10.
std::complex<double> fourier_block(const BlockKernel& b, double xi);

// Closed form for the Hilbert kernel: 2i (Si(2 pi |xi| tau^{j+1}) -
// Si(2 pi |xi| tau^j)) with odd symmetry in xi.
std::complex<double> hilbert_block_symbol(double tau, int j, double xi);

// Dispatch: closed form for "hilbert" and "zero", quadrature otherwise.
// Large-j evaluation is only feasible through this fast path.
std::complex<double> block_symbol(const KernelSpec& k, double tau, int j,
                                  double xi);

// Psi_k(xi) = sum_{j=0}^{kmax} Phi_j(xi).
std::complex<double> partial_symbol(const KernelSpec& k, double tau, int kmax,
                                    double xi);

// Fitted decay constants over a grid:
//   C_high = max |Phi_j(xi)| |xi| tau^j   (xi = 0 excluded)
//   C_low  = max |Phi_j(xi)| / (|xi| tau^j)   (mean-zero blocks only)
struct SymbolDecayReport {
    double c_high = 0.0;
    double c_low = 0.0;
    bool mean_zero = false; // whether the C_low part applies
};

SymbolDecayReport symbol_decay_report(const KernelSpec& k, double tau,
                                      int j_min, int j_max,
                                      const std::vector<double>& xi_grid);

} // namespace pht
