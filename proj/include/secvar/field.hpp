#pragma once

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "secvar/common.hpp"
#include "secvar/errors.hpp"

namespace secvar {

inline constexpr u64 kDefaultPrime = 2305843009213693951ULL; // 2^61 - 1
inline constexpr u64 kMinModulus = 1ULL << 31;

// Deterministic Miller-Rabin; the witness set is exact for all 64-bit inputs.
bool is_prime_u64(u64 n);

// Arithmetic context for residues modulo a verified prime.
// Elements are canonical residues in [0, p); every operation keeps them so.
class FieldCtx {
public:
    using Elem = u64;

    // Throws ModulusTooSmall below 2^31, CompositeModulus otherwise invalid.
    explicit FieldCtx(u64 p);

    u64 modulus() const { return p_; }

    u64 zero() const { return 0; }
    u64 one() const { return 1; }
    bool is_zero(u64 a) const { return a == 0; }

    u64 add(u64 a, u64 b) const {
        // overflow-free for any p < 2^64
        const u64 t = p_ - b;
        return a >= t ? a - t : a + b;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + (p_ - b); }
    u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
    u64 mul(u64 a, u64 b) const { return reduce(static_cast<u128>(a) * b); }

    u64 pow(u64 a, u64 e) const;

    // Fermat inverse; a must be nonzero.
    u64 inv(u64 a) const;

    u64 from_int(i64 x) const;
    u64 from_mpz(const mpz_class& z) const;

private:
    u64 reduce(u128 t) const {
        if (mersenne_bits_) {
            u64 r = static_cast<u64>(t & p_) + static_cast<u64>(t >> mersenne_bits_);
            r = (r & p_) + (r >> mersenne_bits_);
            return r >= p_ ? r - p_ : r;
        }
        return static_cast<u64>(t % p_);
    }

    u64 p_ = 0;
    unsigned mersenne_bits_ = 0; // nonzero iff p == 2^bits - 1
};

// Named constructor matching the rest of the value-returning API.
FieldCtx make_field(u64 p);

// Exact rational context with the same interface shape as FieldCtx.
// Used by the cross-check path; never on the randomized hot path.
struct RatCtx {
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (sgn(a) == 0) throw SingularPivotBlock("rational inverse of zero");
        return Elem(1) / a;
    }

    Elem from_int(i64 x) const { return Elem(mpz_class(static_cast<long>(x))); }
    Elem from_mpz(const mpz_class& z) const { return Elem(z); }
};

// Counter-based deterministic generator. Outputs depend only on the seed,
// the substream derivation path and the draw index, so independent parts
// of a computation can own non-overlapping streams.
class Rng {
public:
    explicit Rng(u64 seed);

    // Child stream; children with distinct indices are independent.
    Rng substream(u64 idx) const;

    u64 next_u64();

    // Uniform in [0, bound) by rejection; bound >= 1.
    u64 next_below(u64 bound);

    // Uniform in [lo, hi] inclusive.
    i64 next_int(i64 lo, i64 hi);

private:
    Rng(u64 k0, u64 k1) : key0_(k0), key1_(k1) {}

    u64 key0_ = 0;
    u64 key1_ = 0;
    u64 counter_ = 0;
};

u64 sample_elem(const FieldCtx& f, Rng& rng);
std::vector<u64> sample_vector(const FieldCtx& f, Rng& rng, std::size_t len);

// First-order jet: value plus one partial derivative per active direction.
template <class Ring>
struct Jet {
    typename Ring::Elem val{};
    std::vector<typename Ring::Elem> partials;

    bool operator==(const Jet&) const = default;
};

// Ring of first-order jets over a base ring, with a fixed direction count.
// Products follow the Leibniz rule; a jet is invertible iff its value is.
template <class Ring>
class JetCtx {
public:
    using Base = Ring;
    using Elem = Jet<Ring>;

    JetCtx(const Ring& base, std::size_t dirs) : base_(&base), dirs_(dirs) {}

    const Ring& base() const { return *base_; }
    std::size_t dirs() const { return dirs_; }

    Elem constant(typename Ring::Elem v) const {
        Elem e;
        e.val = std::move(v);
        e.partials.assign(dirs_, base_->zero());
        return e;
    }
    Elem zero() const { return constant(base_->zero()); }
    Elem one() const { return constant(base_->one()); }

    bool is_zero(const Elem& a) const {
        if (!base_->is_zero(a.val)) return false;
        for (const auto& d : a.partials)
            if (!base_->is_zero(d)) return false;
        return true;
    }
    bool is_unit(const Elem& a) const { return !base_->is_zero(a.val); }

    Elem add(const Elem& a, const Elem& b) const {
        Elem e;
        e.val = base_->add(a.val, b.val);
        e.partials.resize(dirs_);
        for (std::size_t i = 0; i < dirs_; ++i)
            e.partials[i] = base_->add(a.partials[i], b.partials[i]);
        return e;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem e;
        e.val = base_->sub(a.val, b.val);
        e.partials.resize(dirs_);
        for (std::size_t i = 0; i < dirs_; ++i)
            e.partials[i] = base_->sub(a.partials[i], b.partials[i]);
        return e;
    }
    Elem neg(const Elem& a) const {
        Elem e;
        e.val = base_->neg(a.val);
        e.partials.resize(dirs_);
        for (std::size_t i = 0; i < dirs_; ++i)
            e.partials[i] = base_->neg(a.partials[i]);
        return e;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        Elem e;
        e.val = base_->mul(a.val, b.val);
        e.partials.resize(dirs_);
        for (std::size_t i = 0; i < dirs_; ++i)
            e.partials[i] = base_->add(base_->mul(a.val, b.partials[i]),
                                       base_->mul(b.val, a.partials[i]));
        return e;
    }
    Elem inv(const Elem& a) const {
        if (!is_unit(a)) throw SingularPivotBlock("jet inverse needs a nonzero value part");
        Elem e;
        e.val = base_->inv(a.val);
        const auto sq = base_->mul(e.val, e.val);
        e.partials.resize(dirs_);
        for (std::size_t i = 0; i < dirs_; ++i)
            e.partials[i] = base_->neg(base_->mul(a.partials[i], sq));
        return e;
    }

    Elem from_int(i64 x) const { return constant(base_->from_int(x)); }
    Elem from_mpz(const mpz_class& z) const { return constant(base_->from_mpz(z)); }

private:
    const Ring* base_;
    std::size_t dirs_;
};

// Lift a point to jets with |active| directions: coordinate i gets partial
// row e_j exactly when active[j] == i. Directions must be distinct.
template <class Ring>
std::vector<Jet<Ring>> lift_to_jets(const Ring& base,
                                    std::span<const typename Ring::Elem> point,
                                    std::span<const std::size_t> active) {
    std::vector<std::size_t> sorted(active.begin(), active.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DuplicateDirection("jet lift given a repeated direction index");

    std::vector<Jet<Ring>> jets(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) {
        jets[i].val = point[i];
        jets[i].partials.assign(active.size(), base.zero());
        for (std::size_t j = 0; j < active.size(); ++j)
            if (active[j] == i) jets[i].partials[j] = base.one();
    }
    return jets;
}

} // namespace secvar
