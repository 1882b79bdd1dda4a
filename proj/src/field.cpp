#include "secvar/field.hpp"

#include <bit>

namespace secvar {

namespace {

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// SplitMix64 finalizer; full 64-bit avalanche.
u64 mix64(u64 z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    const int s = std::countr_zero(d);
    d >>= s;
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

FieldCtx::FieldCtx(u64 p) : p_(p) {
    if (!is_prime_u64(p)) throw CompositeModulus("modulus " + std::to_string(p) + " is not prime");
    if (p < kMinModulus) throw ModulusTooSmall("modulus " + std::to_string(p) + " is below 2^31");
    if ((p & (p + 1)) == 0) mersenne_bits_ = static_cast<unsigned>(std::popcount(p));
}

u64 FieldCtx::pow(u64 a, u64 e) const {
    u64 r = 1;
    a = a >= p_ ? a % p_ : a;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

u64 FieldCtx::inv(u64 a) const {
    if (a == 0) throw SingularPivotBlock("field inverse of zero");
    return pow(a, p_ - 2);
}

u64 FieldCtx::from_int(i64 x) const {
    if (x >= 0) return static_cast<u64>(x) % p_;
    const u64 mag = static_cast<u64>(-(x + 1)) + 1; // avoids overflow at INT64_MIN
    const u64 m = mag % p_;
    return m == 0 ? 0 : p_ - m;
}

u64 FieldCtx::from_mpz(const mpz_class& z) const {
    // fits: unsigned long is 64-bit on this platform
    const u64 m = mpz_fdiv_ui(z.get_mpz_t(), p_);
    return m;
}

FieldCtx make_field(u64 p) { return FieldCtx(p); }

Rng::Rng(u64 seed) : key0_(mix64(seed)), key1_(mix64(seed ^ 0x6a09e667f3bcc909ULL)) {}

Rng Rng::substream(u64 idx) const {
    return Rng(mix64(key0_ ^ mix64(idx + 0x243f6a8885a308d3ULL)),
               mix64(key1_ + mix64(idx ^ 0x452821e638d01377ULL)));
}

u64 Rng::next_u64() {
    return mix64(key0_ + mix64(key1_ ^ mix64(counter_++)));
}

u64 Rng::next_below(u64 bound) {
    if (bound == 0) throw UsageError("next_below needs a positive bound");
    // reject the sliver below 2^64 mod bound so residues stay uniform
    const u64 threshold = (0 - bound) % bound;
    for (;;) {
        const u64 x = next_u64();
        if (x >= threshold) return x % bound;
    }
}

i64 Rng::next_int(i64 lo, i64 hi) {
    if (lo > hi) throw UsageError("next_int needs lo <= hi");
    const u64 width = static_cast<u64>(hi - lo) + 1;
    return lo + static_cast<i64>(next_below(width));
}

u64 sample_elem(const FieldCtx& f, Rng& rng) { return rng.next_below(f.modulus()); }

std::vector<u64> sample_vector(const FieldCtx& f, Rng& rng, std::size_t len) {
    std::vector<u64> v;
    v.reserve(len);
    for (std::size_t i = 0; i < len; ++i) v.push_back(sample_elem(f, rng));
    return v;
}

} // namespace secvar
