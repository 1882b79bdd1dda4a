#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "secvar/common.hpp"
#include "secvar/errors.hpp"

namespace secvar {

// One monomial: coeff * prod x_i^exps[i]. Canonical terms have coeff != 0
// and an exponent vector of exactly the owning map's arity.
struct Term {
    mpz_class coeff;
    std::vector<std::uint32_t> exps;

    bool operator==(const Term&) const = default;
};

// Graded comparison: total degree first, then lexicographic on exponents.
bool grlex_less(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);

// Canonical form: grlex-descending, exponent vectors unique, no zero terms.
using Poly = std::vector<Term>;

// Sparse integer-coefficient polynomial map A^arity -> A^coord_count.
// Coefficients stay exact integers; they are reduced into whichever ring
// evaluates the map, so one object serves every prime and the rationals.
class PolyMap {
public:
    PolyMap() : arity_(0) {} // empty map; placeholder until assigned

    PolyMap(std::size_t arity, std::vector<Poly> coords, std::string name = {});

    std::size_t arity() const { return arity_; }
    std::size_t coord_count() const { return coords_.size(); }
    const std::vector<Poly>& coords() const { return coords_; }
    const std::string& name() const { return name_; }

    std::size_t total_degree() const;

    // Formal d/dx_var applied to every coordinate.
    PolyMap partial(std::size_t var) const;

    // Coordinates of the result are rows of a times the coordinate vector.
    PolyMap compose_linear(const std::vector<std::vector<i64>>& a) const;

    // Name is a label, not part of the mathematical identity.
    bool operator==(const PolyMap& o) const {
        return arity_ == o.arity_ && coords_ == o.coords_;
    }

    template <class Ctx>
    std::vector<typename Ctx::Elem> eval(const Ctx& ring,
                                         std::span<const typename Ctx::Elem> pt) const {
        if (pt.size() != arity_)
            throw ArityMismatch("eval point has length " + std::to_string(pt.size()) +
                                ", map arity is " + std::to_string(arity_));
        using E = typename Ctx::Elem;
        std::vector<E> out;
        out.reserve(coords_.size());
        for (const Poly& poly : coords_) {
            E acc = ring.zero();
            for (const Term& t : poly) {
                E v = ring.from_mpz(t.coeff);
                for (std::size_t i = 0; i < arity_; ++i)
                    for (std::uint32_t e = 0; e < t.exps[i]; ++e)
                        v = ring.mul(v, pt[i]);
                acc = ring.add(acc, v);
            }
            out.push_back(std::move(acc));
        }
        return out;
    }

private:
    std::size_t arity_;
    std::vector<Poly> coords_;
    std::string name_;
};

} // namespace secvar
