#include "pht/number_theory.hpp"
#include "pht/errors.hpp"
#include "pht/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numeric>

namespace pht {

std::size_t PrimeTable::upper_index(double x) const {
    if (x < 2.0) return 0;
    std::uint64_t xi = std::uint64_t(std::floor(x));
    return std::size_t(std::upper_bound(primes.begin(), primes.end(), xi) -
                       primes.begin());
}

// ---------------------------------------------------------------------------
// sieve_primes: odds-only segmented Eratosthenes. Construction is
// single-threaded; the resulting table is immutable and freely shared.
// ---------------------------------------------------------------------------
PrimeTable sieve_primes(std::uint64_t limit, std::uint64_t memory_ceiling,
                        std::uint64_t segment) {
    if (limit < 2) throw PreconditionError("sieve_primes: limit must be >= 2");
    if (limit > memory_ceiling)
        throw PreconditionError("sieve_primes: limit exceeds memory ceiling");
    if (segment < 1024) segment = 1024;

    PrimeTable t;
    t.limit = limit;
    t.primes.reserve(std::size_t(double(limit) / std::log(double(limit) + 2) * 1.2) + 16);
    t.primes.push_back(2);

    // base primes up to sqrt(limit), odds only
    std::uint64_t root = std::uint64_t(std::sqrt(double(limit))) + 2;
    while (root * root > limit + 1) --root;
    std::vector<std::uint8_t> base((root >> 1) + 1, 1); // base[i] ~ 2i+1
    std::vector<std::uint64_t> base_primes;
    for (std::uint64_t i = 1; 2 * i + 1 <= root; ++i) {
        if (!base[i]) continue;
        std::uint64_t p = 2 * i + 1;
        base_primes.push_back(p);
        for (std::uint64_t j = (p * p) >> 1; 2 * j + 1 <= root; j += p) base[j] = 0;
    }

    std::vector<std::uint8_t> seg;
    for (std::uint64_t lo = 3; lo <= limit; lo += 2 * segment) {
        std::uint64_t hi = std::min(limit, lo + 2 * segment - 2); // odd range [lo, hi]
        std::uint64_t n = (hi - lo) / 2 + 1;
        seg.assign(n, 1);
        for (std::uint64_t p : base_primes) {
            std::uint64_t start = p * p;
            if (start > hi) break;
            if (start < lo) {
                std::uint64_t k = (lo + p - 1) / p;
                if (k % 2 == 0) ++k;
                start = k * p;
            }
            for (std::uint64_t v = start; v <= hi; v += 2 * p) seg[(v - lo) >> 1] = 0;
        }
        for (std::uint64_t i = 0; i < n; ++i)
            if (seg[i]) t.primes.push_back(lo + 2 * i);
    }
    t.log_weights.resize(t.primes.size());
    for (std::size_t i = 0; i < t.primes.size(); ++i)
        t.log_weights[i] = std::log(double(t.primes[i]));
    return t;
}

// ---------------------------------------------------------------------------
// Linear sieve for mu, phi, d.
// ---------------------------------------------------------------------------
ArithmeticTables build_arithmetic_tables(std::uint64_t limit) {
    if (limit < 1) throw PreconditionError("arithmetic tables: limit >= 1");
    if (limit > 200000000ull)
        throw PreconditionError("arithmetic tables: limit too large");
    ArithmeticTables t;
    t.limit = limit;
    t.mobius.assign(limit + 1, 0);
    t.totient.assign(limit + 1, 0);
    t.divisor_count.assign(limit + 1, 0);
    std::vector<std::uint32_t> primes;
    std::vector<std::uint32_t> cnt(limit + 1, 0); // exponent of smallest prime
    t.mobius[1] = 1;
    t.totient[1] = 1;
    t.divisor_count[1] = 1;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (t.totient[i] == 0) { // i prime
            primes.push_back(std::uint32_t(i));
            t.mobius[i] = -1;
            t.totient[i] = std::uint32_t(i - 1);
            t.divisor_count[i] = 2;
            cnt[i] = 1;
        }
        for (std::uint32_t p : primes) {
            std::uint64_t ip = i * std::uint64_t(p);
            if (ip > limit) break;
            if (i % p == 0) {
                t.mobius[ip] = 0;
                t.totient[ip] = t.totient[i] * p;
                t.divisor_count[ip] = std::uint16_t(
                    t.divisor_count[i] / (cnt[i] + 1) * (cnt[i] + 2));
                cnt[ip] = cnt[i] + 1;
                break;
            }
            t.mobius[ip] = -t.mobius[i];
            t.totient[ip] = t.totient[i] * (p - 1);
            t.divisor_count[ip] = std::uint16_t(t.divisor_count[i] * 2);
            cnt[ip] = 1;
        }
    }
    return t;
}

std::vector<std::uint32_t> reduced_residues(std::uint32_t q) {
    if (q < 1) throw PreconditionError("reduced_residues: q >= 1");
    std::vector<std::uint32_t> out;
    for (std::uint32_t a = 1; a <= q; ++a)
        if (std::gcd(a, q) == 1) out.push_back(a);
    return out;
}

double ramanujan_identity_residual(std::uint32_t q, std::uint32_t a) {
    if (q < 1) throw PreconditionError("ramanujan residual: q >= 1");
    std::uint32_t am = a % q;
    if (std::gcd(am == 0 ? q : am, q) != 1)
        throw PreconditionError("ramanujan residual: gcd(a,q) must be 1");
    // q-th roots table, then index by (r*a) mod q
    std::vector<double> cs(q), sn(q);
    for (std::uint32_t k = 0; k < q; ++k) {
        double ang = kTwoPi * double(k) / double(q);
        cs[k] = std::cos(ang);
        sn[k] = std::sin(ang);
    }
    Kahan re, im;
    int mu = 1;
    {
        // mu(q) by trial factorization (independent of ArithmeticTables)
        std::uint32_t n = q;
        for (std::uint32_t p = 2; std::uint64_t(p) * p <= n; ++p) {
            if (n % p) continue;
            n /= p;
            if (n % p == 0) { mu = 0; break; }
            mu = -mu;
        }
        if (mu != 0 && n > 1) mu = -mu;
    }
    for (std::uint32_t r = 1; r <= q; ++r) {
        if (std::gcd(r, q) != 1) continue;
        std::uint32_t idx = std::uint32_t((std::uint64_t(r) * a) % q);
        re.add(cs[idx]);
        im.add(sn[idx]);
    }
    double dr = re.value() - double(mu);
    double di = im.value();
    return std::hypot(dr, di);
}

double mobius_inversion_residual(const RationalFn& F, std::uint32_t q) {
    if (q < 1) throw PreconditionError("mobius inversion: q >= 1");
    // left: sum over A_q of F(a/q)
    KahanComplex left;
    for (std::uint32_t a = 1; a <= q; ++a)
        if (std::gcd(a, q) == 1) left.add(F(a, q));
    // right: sum over d | q of mu(q/d) * sum_{a=1..d} F(a/d)
    auto mu_of = [](std::uint32_t n) {
        int m = 1;
        for (std::uint32_t p = 2; std::uint64_t(p) * p <= n; ++p) {
            if (n % p) continue;
            n /= p;
            if (n % p == 0) return 0;
            m = -m;
        }
        if (n > 1) m = -m;
        return m;
    };
    KahanComplex right;
    for (std::uint32_t d = 1; d <= q; ++d) {
        if (q % d) continue;
        int mu = mu_of(q / d);
        if (mu == 0) continue;
        KahanComplex inner;
        for (std::uint32_t a = 1; a <= d; ++a) inner.add(F(a, d));
        right.add(double(mu) * inner.value());
    }
    return std::abs(left.value() - right.value());
}

// ---------------------------------------------------------------------------
// Farey levels
// ---------------------------------------------------------------------------
FareyLevel farey_level(int s, const ArithmeticTables& tables) {
    if (s < 0) throw PreconditionError("farey_level: s >= 0");
    std::uint64_t lo = 1ull << s, hi = (2ull << s) - 1;
    if (2ull << s > tables.limit)
        throw PreconditionError("farey_level: tables too small for level");
    FareyLevel lvl;
    lvl.s = s;
    for (std::uint64_t q = lo; q <= hi; ++q) {
        double w = double(tables.mobius[q]) / double(tables.totient[q]);
        for (std::uint32_t a = 1; a <= q; ++a)
            if (std::gcd(a, std::uint32_t(q)) == 1)
                lvl.fractions.push_back({a, std::uint32_t(q), w});
    }
    std::sort(lvl.fractions.begin(), lvl.fractions.end(),
              [](const FareyFraction& x, const FareyFraction& y) {
                  return std::uint64_t(x.a) * y.q < std::uint64_t(y.a) * x.q;
              });
    return lvl;
}

std::uint64_t farey_level_count_bruteforce(int s) {
    std::uint64_t lo = 1ull << s, hi = (2ull << s) - 1, n = 0;
    for (std::uint64_t q = lo; q <= hi; ++q)
        for (std::uint32_t a = 1; a <= q; ++a)
            if (std::gcd(a, std::uint32_t(q)) == 1) ++n;
    return n;
}

// ---------------------------------------------------------------------------
// psi(x;q,r) by direct scan; this is the oracle other modules test against.
// ---------------------------------------------------------------------------
ResidueClassSum chebyshev_psi_ap(double x, std::uint32_t q, std::uint32_t r,
                                 const PrimeTable& primes) {
    if (!(x >= 2.0)) throw PreconditionError("psi: x >= 2 required");
    if (x > double(primes.limit))
        throw PreconditionError("psi: x exceeds sieve limit");
    if (q < 1 || r < 1 || r > q) throw PreconditionError("psi: need 1 <= r <= q");
    std::size_t n = primes.upper_index(x);
    std::uint32_t rr = r % q;
    Kahan acc;
    for (std::size_t i = 0; i < n; ++i)
        if (primes.primes[i] % q == rr) acc.add(primes.log_weights[i]);
    return {x, q, r, acc.value()};
}

double siegel_walfisz_residual(double x, std::uint32_t q, std::uint32_t r,
                               const PrimeTable& primes,
                               const ArithmeticTables& tables) {
    if (std::gcd(r, q) != 1)
        throw PreconditionError("siegel-walfisz residual: gcd(r,q) must be 1");
    if (q > tables.limit) throw PreconditionError("siegel-walfisz: q beyond tables");
    double psi = chebyshev_psi_ap(x, q, r, primes).value;
    return std::abs(psi - x / double(tables.totient[q])) / x;
}

// ---------------------------------------------------------------------------
// Binary cache. Little-endian x86 layout written raw; documented in README.
// ---------------------------------------------------------------------------
namespace {
constexpr std::uint32_t kMagic = 0x31544850; // "PHT1"
constexpr std::uint32_t kVersion = 1;

template <class T>
void wr(std::ofstream& o, const T& v) {
    o.write(reinterpret_cast<const char*>(&v), sizeof v);
}
template <class T>
bool rd(std::ifstream& i, T& v) {
    i.read(reinterpret_cast<char*>(&v), sizeof v);
    return bool(i);
}
} // namespace

void save_tables(const std::string& path, const PrimeTable* primes,
                 const ArithmeticTables* tables) {
    std::ofstream o(path, std::ios::binary);
    if (!o) throw PreconditionError("cache: cannot open " + path);
    wr(o, kMagic);
    wr(o, kVersion);
    std::uint64_t limit = primes ? primes->limit : (tables ? tables->limit : 0);
    wr(o, limit);
    std::uint32_t flags = (primes ? 1u : 0u) | (tables ? 2u : 0u);
    wr(o, flags);
    if (primes) {
        std::uint64_t n = primes->primes.size();
        wr(o, n);
        o.write(reinterpret_cast<const char*>(primes->primes.data()),
                std::streamsize(n * 8));
        o.write(reinterpret_cast<const char*>(primes->log_weights.data()),
                std::streamsize(n * 8));
    }
    if (tables) {
        std::uint64_t n = tables->limit;
        wr(o, n);
        o.write(reinterpret_cast<const char*>(tables->mobius.data()),
                std::streamsize(n + 1));
        o.write(reinterpret_cast<const char*>(tables->totient.data()),
                std::streamsize((n + 1) * 4));
        o.write(reinterpret_cast<const char*>(tables->divisor_count.data()),
                std::streamsize((n + 1) * 2));
    }
}

bool load_tables(const std::string& path, PrimeTable* primes,
                 ArithmeticTables* tables) {
    std::ifstream i(path, std::ios::binary);
    if (!i) return false;
    std::uint32_t magic = 0, version = 0, flags = 0;
    std::uint64_t limit = 0;
    if (!rd(i, magic) || magic != kMagic) return false;
    if (!rd(i, version) || version != kVersion) return false;
    if (!rd(i, limit) || !rd(i, flags)) return false;
    if (flags & 1u) {
        std::uint64_t n = 0;
        if (!rd(i, n)) return false;
        PrimeTable t;
        t.limit = limit;
        t.primes.resize(n);
        t.log_weights.resize(n);
        i.read(reinterpret_cast<char*>(t.primes.data()), std::streamsize(n * 8));
        i.read(reinterpret_cast<char*>(t.log_weights.data()),
               std::streamsize(n * 8));
        if (!i) return false;
        if (primes) *primes = std::move(t);
    }
    if (flags & 2u) {
        std::uint64_t n = 0;
        if (!rd(i, n)) return false;
        ArithmeticTables t;
        t.limit = n;
        t.mobius.resize(n + 1);
        t.totient.resize(n + 1);
        t.divisor_count.resize(n + 1);
        i.read(reinterpret_cast<char*>(t.mobius.data()), std::streamsize(n + 1));
        i.read(reinterpret_cast<char*>(t.totient.data()),
               std::streamsize((n + 1) * 4));
        i.read(reinterpret_cast<char*>(t.divisor_count.data()),
               std::streamsize((n + 1) * 2));
        if (!i) return false;
        if (tables) *tables = std::move(t);
    }
    return true;
}

} // namespace pht
