#include "pht/numerics.hpp"
#include "pht/errors.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

namespace pht {

// ---------------------------------------------------------------------------
// Gauss-Legendre nodes by Newton iteration on P_n (weights from P_n').
// ---------------------------------------------------------------------------
namespace {

struct GLRule {
    std::vector<double> x, w; // nodes in (-1,1), weights
};

GLRule make_gl(int n) {
    GLRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; ++i) {
        // Chebyshev-like initial guess
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            // evaluate P_n(x) and P_n'(x) by recurrence
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        r.x[i] = x;
        r.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

const GLRule& gl7() {
    static const GLRule r = make_gl(7);
    return r;
}
const GLRule& gl15() {
    static const GLRule r = make_gl(15);
    return r;
}

double gl_apply(const GLRule& r, const std::function<double(double)>& f,
                double a, double b) {
    const double h = 0.5 * (b - a), m = 0.5 * (a + b);
    Kahan acc;
    for (size_t i = 0; i < r.x.size(); ++i) acc.add(r.w[i] * f(m + h * r.x[i]));
    return h * acc.value();
}

struct AdaptState {
    const std::function<double(double)>* f;
    double worst_err = 0.0;
};

double adapt(AdaptState& st, double a, double b, double tol, int depth,
             double coarse) {
    double mid = 0.5 * (a + b);
    double left15 = gl_apply(gl15(), *st.f, a, mid);
    double right15 = gl_apply(gl15(), *st.f, mid, b);
    double fine = left15 + right15;
    double err = std::abs(fine - coarse);
    if (err <= tol || b - a < 1e-15 * (1.0 + std::abs(a))) {
        if (depth <= 0 && err > tol) st.worst_err = std::max(st.worst_err, err);
        return fine;
    }
    if (depth <= 0) {
        st.worst_err = std::max(st.worst_err, err);
        return fine;
    }
    return adapt(st, a, mid, 0.5 * tol, depth - 1, left15) +
           adapt(st, mid, b, 0.5 * tol, depth - 1, right15);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int max_depth) {
    if (a == b) return 0.0;
    AdaptState st;
    st.f = &f;
    double coarse = gl_apply(gl15(), f, a, b);
    double check = gl_apply(gl7(), f, a, b);
    if (std::abs(coarse - check) <= abs_tol) return coarse;
    double v = adapt(st, a, b, abs_tol, max_depth, coarse);
    if (st.worst_err > abs_tol) {
        char msg[160];
        std::snprintf(msg, sizeof msg,
                      "quadrature did not converge: achieved %.3e, wanted %.3e",
                      st.worst_err, abs_tol);
        throw NumericError(msg);
    }
    return v;
}

double integrate_oscillatory(const std::function<double(double)>& f, double a,
                             double b, double freq, double abs_tol) {
    freq = std::abs(freq);
    double periods = freq * (b - a);
    if (periods <= 8.0) return integrate(f, a, b, abs_tol);
    // one chunk per period, tolerance split across chunks
    long n = long(std::ceil(periods));
    double chunk_tol = abs_tol / double(n);
    double step = (b - a) / double(n);
    Kahan acc;
    for (long i = 0; i < n; ++i) {
        double lo = a + step * double(i);
        double hi = (i + 1 == n) ? b : a + step * double(i + 1);
        acc.add(integrate(f, lo, hi, chunk_tol));
    }
    return acc.value();
}

// ---------------------------------------------------------------------------
// Si(z)
// ---------------------------------------------------------------------------
double sine_integral(double z) {
    if (z < 0) return -sine_integral(-z);
    if (z == 0) return 0.0;
    if (z <= 6.0) {
        // Maclaurin: sum (-1)^k z^(2k+1) / ((2k+1)(2k+1)!)
        double term = z, sum = z; // k = 0
        for (int k = 1; k < 40; ++k) {
            term *= -z * z / double(2 * k * (2 * k + 1));
            sum += term / double(2 * k + 1);
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        }
        return sum;
    }
    if (z <= 40.0) {
        // composite GL15 panels of width <= 2 on [0, z]
        int n = int(std::ceil(z / 2.0));
        double step = z / n;
        Kahan acc;
        auto f = [](double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; };
        for (int i = 0; i < n; ++i)
            acc.add(gl_apply(gl15(), f, step * i, step * (i + 1)));
        return acc.value();
    }
    // asymptotic: Si = pi/2 - f(z) cos z - g(z) sin z, truncated where the
    // terms stop decreasing
    double z2 = z * z;
    double fv = 0.0, gv = 0.0, num = 1.0;
    double prev_f = 1e308, prev_g = 1e308;
    int kf = 0;
    for (int k = 0; k < 15; ++k) {
        // f: (-1)^k (2k)! / z^{2k};  g: (-1)^k (2k+1)! / z^{2k+1} scaled later
        double tf = num;                       // (2k)!/z^{2k}
        double tg = num * double(2 * k + 1) / z; // (2k+1)!/z^{2k+1}
        if (std::abs(tf) > prev_f || std::abs(tg) > prev_g) break;
        fv += (k % 2 == 0 ? tf : -tf);
        gv += (k % 2 == 0 ? tg : -tg);
        prev_f = std::abs(tf);
        prev_g = std::abs(tg);
        num *= double(2 * k + 1) * double(2 * k + 2) / z2;
        kf = k;
    }
    (void)kf;
    fv /= z;
    gv /= z;
    return kPi / 2.0 - fv * std::cos(z) - gv * std::sin(z);
}

// ---------------------------------------------------------------------------
// HermiteSpline
// ---------------------------------------------------------------------------
HermiteSpline::HermiteSpline(double x0, double dx, std::vector<double> values,
                             std::vector<double> derivs)
    : x0_(x0), dx_(dx), v_(std::move(values)), d_(std::move(derivs)) {
    if (v_.size() != d_.size() || v_.size() < 2)
        throw PreconditionError("HermiteSpline: bad node arrays");
}

double HermiteSpline::operator()(double x) const {
    double u = (x - x0_) / dx_;
    long i = long(std::floor(u));
    long last = long(v_.size()) - 2;
    if (i < 0) i = 0;
    if (i > last) i = last;
    double t = u - double(i);
    double t2 = t * t, t3 = t2 * t;
    double h00 = 2 * t3 - 3 * t2 + 1;
    double h10 = t3 - 2 * t2 + t;
    double h01 = -2 * t3 + 3 * t2;
    double h11 = t3 - t2;
    return h00 * v_[i] + h10 * dx_ * d_[i] + h01 * v_[i + 1] +
           h11 * dx_ * d_[i + 1];
}

// ---------------------------------------------------------------------------
// XorShift64Star
// ---------------------------------------------------------------------------
namespace {
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}
} // namespace

XorShift64Star::XorShift64Star(std::uint64_t seed) {
    state = splitmix64(seed);
    if (state == 0) state = 0x9E3779B97F4A7C15ull;
}

std::uint64_t XorShift64Star::next() {
    std::uint64_t x = state;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state = x;
    return x * 0x2545F4914F6CDD1Dull;
}

double XorShift64Star::uniform() {
    // top 53 bits -> (0,1)
    return (double(next() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

double XorShift64Star::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = kTwoPi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

bool XorShift64Star::sign_bit() { return (next() >> 63) != 0; }

} // namespace pht
