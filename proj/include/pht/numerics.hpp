#pragma once
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace pht {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

// Neumaier-compensated accumulator. Used for every scalar sum whose order
// matters for reproducibility.
struct Kahan {
    double s = 0.0, c = 0.0;
    void add(double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

struct KahanComplex {
    Kahan re, im;
    void add(std::complex<double> z) { re.add(z.real()); im.add(z.imag()); }
    std::complex<double> value() const { return {re.value(), im.value()}; }
};

// ---------------------------------------------------------------------------
// Adaptive quadrature: embedded Gauss-Legendre 15/7 pair, bisection on the
// interval until |GL15 - GL7| meets the local tolerance budget.
// ---------------------------------------------------------------------------
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int max_depth = 52);

// Same, but pre-splits [a,b] at period boundaries of e^{2 pi i freq x} when
// the interval spans more than ~8 oscillations.
double integrate_oscillatory(const std::function<double(double)>& f, double a,
                             double b, double freq, double abs_tol);

// Sine integral Si(z) = int_0^z sin(t)/t dt.  Series for small z, composite
// Gauss panels in the midrange, asymptotic auxiliary series for large z.
double sine_integral(double z);

// ---------------------------------------------------------------------------
// Uniform-grid cubic Hermite spline with exact nodal derivatives.
// ---------------------------------------------------------------------------
class HermiteSpline {
  public:
    HermiteSpline() = default;
    HermiteSpline(double x0, double dx, std::vector<double> values,
                  std::vector<double> derivs);
    double operator()(double x) const;
    double x_min() const { return x0_; }
    double x_max() const { return x0_ + dx_ * double(v_.size() - 1); }

  private:
    double x0_ = 0.0, dx_ = 1.0;
    std::vector<double> v_, d_;
};

// 64-bit xorshift* generator (state ^= state>>12, ^=state<<25, ^=state>>27,
// then multiply by 0x2545F4914F6CDD1D; top bits used).  Seeding goes through
// one round of splitmix64 so small seeds decorrelate.
struct XorShift64Star {
    std::uint64_t state;
    explicit XorShift64Star(std::uint64_t seed);
    std::uint64_t next();
    double uniform();          // (0,1)
    double normal();           // Box-Muller, consumes two uniforms
    bool sign_bit();

  private:
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace pht
