#pragma once
#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace pht {

// ---------------------------------------------------------------------------
// PrimeTable: sieved primes up to `limit` with their natural-log weights.
// ---------------------------------------------------------------------------
struct PrimeTable {
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> primes;
    std::vector<double> log_weights; // log_weights[i] = ln(primes[i])

    // index of first prime > x (upper bound by value)
    std::size_t upper_index(double x) const;
    // count of primes <= x
    std::size_t count_leq(double x) const { return upper_index(x); }
};

// Segmented sieve of Eratosthenes; memory O(sqrt(limit) + segment).
// Throws PreconditionError if limit < 2 or limit > memory_ceiling.
PrimeTable sieve_primes(std::uint64_t limit,
                        std::uint64_t memory_ceiling = 100000000ull,
                        std::uint64_t segment = 1u << 20);

// ---------------------------------------------------------------------------
// ArithmeticTables: mu, phi, d by linear sieve in O(limit).
// ---------------------------------------------------------------------------
struct ArithmeticTables {
    std::uint64_t limit = 0;
    std::vector<std::int8_t> mobius;    // index 0 unused
    std::vector<std::uint32_t> totient;
    std::vector<std::uint16_t> divisor_count;
};

ArithmeticTables build_arithmetic_tables(std::uint64_t limit);

// ---------------------------------------------------------------------------
// Reduced residues A_q = { a in [1,q] : gcd(a,q)=1 }.
// ---------------------------------------------------------------------------
std::vector<std::uint32_t> reduced_residues(std::uint32_t q);

// | sum_{r in A_q} e^{2 pi i r a / q} - mu(q) |, requires gcd(a,q)=1.
double ramanujan_identity_residual(std::uint32_t q, std::uint32_t a);

// | sum_{a in A_q} F(a/q) - sum_{d|q} mu(q/d) sum_{a=1}^{d} F(a/d) |.
// F receives the rational argument as an exact (numerator, denominator) pair.
using RationalFn =
    std::function<std::complex<double>(std::uint64_t num, std::uint64_t den)>;
double mobius_inversion_residual(const RationalFn& F, std::uint32_t q);

// ---------------------------------------------------------------------------
// Farey level R_s: reduced a/q with 2^s <= q < 2^{s+1}, sorted by value.
// ---------------------------------------------------------------------------
struct FareyFraction {
    std::uint32_t a = 1, q = 1;
    double weight = 1.0; // mu(q)/phi(q)
    double value() const { return double(a) / double(q); }
};

struct FareyLevel {
    int s = 0;
    std::vector<FareyFraction> fractions; // ascending by a/q
};

FareyLevel farey_level(int s, const ArithmeticTables& tables);
// independent gcd-scan count (oracle; does not use the tables)
std::uint64_t farey_level_count_bruteforce(int s);

// ---------------------------------------------------------------------------
// Chebyshev psi over an arithmetic progression:
//   psi(x;q,r) = sum_{p <= x, p == r (mod q)} ln p     (primes only)
// ---------------------------------------------------------------------------
struct ResidueClassSum {
    double x = 0.0;
    std::uint32_t q = 1, r = 1;
    double value = 0.0;
};

ResidueClassSum chebyshev_psi_ap(double x, std::uint32_t q, std::uint32_t r,
                                 const PrimeTable& primes);

// |psi(x;q,r) - x/phi(q)| / x, requires gcd(r,q)=1 and x <= primes.limit.
double siegel_walfisz_residual(double x, std::uint32_t q, std::uint32_t r,
                               const PrimeTable& primes,
                               const ArithmeticTables& tables);

// ---------------------------------------------------------------------------
// Binary cache (little-endian): magic 'PHT1', version, limit, then sections.
// ---------------------------------------------------------------------------
void save_tables(const std::string& path, const PrimeTable* primes,
                 const ArithmeticTables* tables);
bool load_tables(const std::string& path, PrimeTable* primes,
                 ArithmeticTables* tables);

} // namespace pht
