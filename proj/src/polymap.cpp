#include "secvar/polymap.hpp"

#include <algorithm>
#include <map>

namespace secvar {

bool grlex_less(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    u64 da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

Poly canonicalize(std::size_t arity, Poly raw) {
    for (const Term& t : raw) {
        if (t.exps.size() != arity)
            throw ArityMismatch("term exponent vector has length " +
                                std::to_string(t.exps.size()) + ", map arity is " +
                                std::to_string(arity));
    }
    std::sort(raw.begin(), raw.end(),
              [](const Term& x, const Term& y) { return grlex_less(y.exps, x.exps); });
    Poly out;
    for (Term& t : raw) {
        if (!out.empty() && out.back().exps == t.exps)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
    return out;
}

} // namespace

PolyMap::PolyMap(std::size_t arity, std::vector<Poly> coords, std::string name)
    : arity_(arity), name_(std::move(name)) {
    coords_.reserve(coords.size());
    for (Poly& p : coords) coords_.push_back(canonicalize(arity, std::move(p)));
}

std::size_t PolyMap::total_degree() const {
    u64 deg = 0;
    for (const Poly& p : coords_)
        for (const Term& t : p) {
            u64 d = 0;
            for (auto e : t.exps) d += e;
            deg = std::max(deg, d);
        }
    return static_cast<std::size_t>(deg);
}

PolyMap PolyMap::partial(std::size_t var) const {
    if (var >= arity_)
        throw IndexOutOfRange("partial with respect to variable " + std::to_string(var) +
                              ", map arity is " + std::to_string(arity_));
    std::vector<Poly> out;
    out.reserve(coords_.size());
    for (const Poly& p : coords_) {
        Poly d;
        for (const Term& t : p) {
            if (t.exps[var] == 0) continue;
            Term dt = t;
            dt.coeff *= t.exps[var];
            --dt.exps[var];
            d.push_back(std::move(dt));
        }
        out.push_back(std::move(d));
    }
    return PolyMap(arity_, std::move(out), name_);
}

PolyMap PolyMap::compose_linear(const std::vector<std::vector<i64>>& a) const {
    for (const auto& row : a)
        if (row.size() != coords_.size())
            throw ShapeMismatch("matrix row length " + std::to_string(row.size()) +
                                " does not match coordinate count " +
                                std::to_string(coords_.size()));
    std::vector<Poly> out;
    out.reserve(a.size());
    for (const auto& row : a) {
        std::map<std::vector<std::uint32_t>, mpz_class> acc;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] == 0) continue;
            for (const Term& t : coords_[j]) acc[t.exps] += t.coeff * row[j];
        }
        Poly p;
        for (auto& [exps, coeff] : acc)
            if (coeff != 0) p.push_back(Term{std::move(coeff), exps});
        out.push_back(std::move(p));
    }
    return PolyMap(arity_, std::move(out), name_);
}

} // namespace secvar
