#include "dgs/factor.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

namespace dgs {

namespace {

constexpr std::uint32_t kTrialBound = 1000000;

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> sieve(kTrialBound + 1, true);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= kTrialBound; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j <= kTrialBound; j += i)
                sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod64(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

u64 powmod64(u64 b, u64 e, u64 m) {
    u64 r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, b, m);
        b = mulmod64(b, b, m);
        e >>= 1;
    }
    return r;
}

bool strong_probable_prime64(u64 n, u64 a) {
    a %= n;
    if (a == 0) return true;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

bool strong_probable_prime(const Integer& n, const Integer& a) {
    Integer b = mod_floor(a, n);
    if (b == 0) return true;
    Integer d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    Integer x = boost::multiprecision::powm(b, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

constexpr std::array<u64, 12> kFixedWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

const Integer& deterministic_primality_bound() {
    static const Integer bound("3317044064679887385961981");
    return bound;
}

Primality classify_prime(const Integer& x, std::uint64_t witness_seed) {
    if (x < 2) return Primality::composite;
    if (x < 4) return Primality::prime;
    if ((x & 1) == 0) return Primality::composite;

    if (x <= std::numeric_limits<u64>::max()) {
        u64 n = x.convert_to<u64>();
        for (u64 a : kFixedWitnesses) {
            if (a % n == 0) continue;
            if (!strong_probable_prime64(n, a)) return Primality::composite;
        }
        return Primality::prime;
    }

    for (u64 a : kFixedWitnesses)
        if (!strong_probable_prime(x, Integer(a))) return Primality::composite;
    if (x < deterministic_primality_bound()) return Primality::prime;

    std::mt19937_64 rng(witness_seed);
    for (int i = 0; i < 64; ++i) {
        Integer a = 2 + mod_floor(Integer(rng()) * Integer(rng()), x - 3);
        if (!strong_probable_prime(x, a)) return Primality::composite;
    }
    return Primality::probable_prime;
}

bool is_prime(const Integer& x, std::uint64_t witness_seed) {
    return classify_prime(x, witness_seed) != Primality::composite;
}

namespace {

// Brent-cycle Pollard rho; returns a nontrivial factor of composite odd n,
// or 0 once the shared iteration budget runs out.
Integer pollard_rho(const Integer& n, std::uint64_t max_iterations) {
    if ((n & 1) == 0) return 2;
    std::uint64_t iter = 0;
    for (Integer c = 1; iter < max_iterations; ++c) {
        Integer x = 2, y = 2, d = 1;
        Integer ys = y, q = 1;
        const std::uint64_t batch = 128;
        std::uint64_t r = 1;
        while (d == 1 && iter < max_iterations) {
            x = y;
            for (std::uint64_t i = 0; i < r && iter < max_iterations; ++i, ++iter)
                y = mod_floor(y * y + c, n);
            std::uint64_t k = 0;
            while (k < r && d == 1 && iter < max_iterations) {
                ys = y;
                std::uint64_t lim = std::min(batch, r - k);
                for (std::uint64_t i = 0; i < lim && iter < max_iterations; ++i, ++iter) {
                    y = mod_floor(y * y + c, n);
                    q = mod_floor(q * abs(x - y), n);
                }
                d = gcd(q, n);
                k += lim;
            }
            r *= 2;
        }
        if (d == n) {
            // overshot the collision; replay one step at a time
            d = 1;
            while (d == 1 && iter < max_iterations) {
                ++iter;
                ys = mod_floor(ys * ys + c, n);
                d = gcd(abs(x - ys), n);
            }
        }
        if (d != 1 && d != n) return d;
        // otherwise retry with the next polynomial increment
    }
    return 0;
}

void insert_factor(std::vector<std::pair<Integer, unsigned>>& factors, const Integer& p,
                   unsigned exp) {
    for (auto& [q, e] : factors)
        if (q == p) {
            e += exp;
            return;
        }
    factors.emplace_back(p, exp);
}

// Split cofactor (odd, no prime divisor <= trial bound) into primes, within
// the rho budget. Unsplit parts multiply into residual.
void split(const Integer& n, std::uint64_t effort,
           std::vector<std::pair<Integer, unsigned>>& factors, Integer& residual) {
    if (n == 1) return;
    if (is_prime(n)) {
        insert_factor(factors, n, 1);
        return;
    }
    Integer d = effort ? pollard_rho(n, effort) : 0;
    if (d == 0) {
        residual *= n;
        return;
    }
    split(d, effort, factors, residual);
    split(n / d, effort, factors, residual);
}

}  // namespace

Factorization factor(const Integer& x, std::uint64_t effort_bound) {
    if (x == 0) throw std::invalid_argument("cannot factor 0");
    Factorization f;
    Integer n = x;
    if (n < 0) {
        f.sign = -1;
        n = -n;
    }
    for (std::uint32_t p : small_primes()) {
        if (n == 1) break;
        if (Integer(p) * p > n) break;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) f.factors.emplace_back(Integer(p), e);
    }
    if (n > 1) {
        if (n <= Integer(kTrialBound) * kTrialBound) {
            // no divisor up to sqrt(n), hence prime
            insert_factor(f.factors, n, 1);
        } else {
            split(n, effort_bound, f.factors, f.residual);
        }
    }
    std::sort(f.factors.begin(), f.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    f.complete = (f.residual == 1);
    return f;
}

Integer Factorization::value() const {
    Integer v = sign;
    for (const auto& [p, e] : factors)
        for (unsigned i = 0; i < e; ++i) v *= p;
    return v * residual;
}

unsigned Factorization::exponent_of(const Integer& p) const {
    for (const auto& [q, e] : factors)
        if (q == p) return e;
    return 0;
}

bool Factorization::squarefree_odd_part() const {
    for (const auto& [p, e] : factors)
        if (p != 2 && e > 1) return false;
    return true;
}

unsigned p_adic_valuation(const Integer& x, const Integer& p) {
    if (x == 0) throw std::invalid_argument("valuation of 0 is undefined");
    if (p < 2) throw std::invalid_argument("valuation base must be at least 2");
    Integer n = abs(x);
    unsigned k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

QrClass qr_class(const Integer& a, const Integer& p) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("qr_class requires an odd prime modulus");
    Integer r = mod_floor(a, p);
    if (r == 0) return QrClass::zero;
    Integer e = boost::multiprecision::powm(r, (p - 1) / 2, p);
    return e == 1 ? QrClass::residue : QrClass::nonresidue;
}

}  // namespace dgs
