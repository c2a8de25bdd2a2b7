#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dgs/numeric.hpp"

namespace dgs {

// Pollard-rho iterations allowed per remaining cofactor.
inline constexpr std::uint64_t kDefaultFactorEffort = 100000;

// Strong-probable-prime testing with the fixed witness set
// {2,...,37} is deterministic below this bound.
const Integer& deterministic_primality_bound();

enum class Primality { composite, prime, probable_prime };

enum class QrClass { zero, residue, nonresidue };

// Factorization with honest incompleteness:
//   sign * prod(prime^exponent) * residual == value, primes ascending.
// A residual != 1 is a composite cofactor the effort bound could not split;
// complete is true iff residual == 1.
struct Factorization {
    int sign = 1;
    std::vector<std::pair<Integer, unsigned>> factors;
    Integer residual = 1;
    bool complete = true;

    Integer value() const;
    unsigned exponent_of(const Integer& p) const;
    bool squarefree_odd_part() const;  // every odd prime has exponent 1
};

// classify_prime(x) is exact for x below deterministic_primality_bound();
// above it the verdict prime degrades to probable_prime (64 random witnesses,
// reproducible via seed).
Primality classify_prime(const Integer& x, std::uint64_t witness_seed = 0x9e3779b97f4a7c15ull);
bool is_prime(const Integer& x, std::uint64_t witness_seed = 0x9e3779b97f4a7c15ull);

// Trial division up to 10^6, then Pollard rho bounded by effort_bound.
// Throws std::invalid_argument for x == 0.
Factorization factor(const Integer& x, std::uint64_t effort_bound = kDefaultFactorEffort);

// Largest k with p^k | x. Throws std::invalid_argument for x == 0 or p < 2.
unsigned p_adic_valuation(const Integer& x, const Integer& p);

// Euler-criterion class of a modulo an odd prime p.
QrClass qr_class(const Integer& a, const Integer& p);

}  // namespace dgs
