#pragma once

#include <cstdint>
#include <stdexcept>

namespace grmod {

/* Arithmetic in GF(p) for a word-sized prime p. Elements are canonical
 * residues in [0, p). The default 32003 is the usual computer-algebra
 * workhorse prime: large enough that random linear forms are generic with
 * overwhelming probability, small enough that products fit in 64 bits. */
class PrimeField {
  public:
    explicit PrimeField(std::uint32_t p = 32003) : p_(p) {
        if (!is_prime(p))
            throw std::invalid_argument("PrimeField: characteristic " + std::to_string(p) + " is not prime");
    }

    std::uint32_t characteristic() const noexcept { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
        return a >= b ? a - b : a + p_ - b;
    }

    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
    }

    /* canonical residue of an arbitrary signed integer */
    std::uint32_t reduce(long long v) const noexcept {
        long long m = v % static_cast<long long>(p_);
        if (m < 0)
            m += p_;
        return static_cast<std::uint32_t>(m);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept {
        std::uint64_t base = a % p_, acc = 1;
        while (e) {
            if (e & 1)
                acc = acc * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(acc);
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0)
            throw std::domain_error("PrimeField: inverse of zero");
        /* extended Euclid; p prime so gcd is 1 */
        long long t = 0, new_t = 1;
        long long r = p_, new_r = a % p_;
        while (new_r != 0) {
            long long q = r / new_r;
            long long tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0)
            t += p_;
        return static_cast<std::uint32_t>(t);
    }

    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

    static bool is_prime(std::uint32_t n) noexcept {
        if (n < 2)
            return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0)
                return false;
        return true;
    }

  private:
    std::uint32_t p_;
};

}  // namespace grmod
