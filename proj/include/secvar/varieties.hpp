#pragma once

#include <optional>
#include <string>
#include <vector>

#include "secvar/common.hpp"
#include "secvar/config.hpp"
#include "secvar/field.hpp"
#include "secvar/polymap.hpp"

namespace secvar {

// A parametrized projective variety: the closure of the image of the
// polynomial map A^n -> P^r given by r+1 coordinate polynomials.
struct Variety {
    std::string name;
    std::size_t n = 0; // dimension of the parameter space
    std::size_t r = 0; // dimension of the ambient projective space
    PolyMap map;       // arity n, exactly r+1 coordinates
    bool is_cone = false;
    std::optional<i64> degree;
};

// Degree-d Veronese embedding of P^n (affine chart): all monomials in n
// variables of degree <= d, listed by ascending total degree and
// descending lexicographic order within a degree.
Variety veronese(std::size_t n, std::size_t d);

// Rational normal scroll S(a,b) in P^(a+b+1), a >= b >= 0 after
// normalization; b == 0 degenerates to a cone over a rational curve.
Variety scroll(std::size_t a, std::size_t b);

// Segre embedding of P^n x P^m in P^(nm+n+m), row-major coordinate order.
Variety segre(std::size_t n, std::size_t m);

// Cone with a vertex_count-dimensional vertex: appends vertex_count
// parameters as fresh coordinates. vertex_count == 0 returns the input
// unchanged except for the cone flag.
Variety cone_over(const Variety& base, std::size_t vertex_count);

// Image under a random linear projection P^r -> P^target_r with integer
// matrix entries drawn from rng. Requires target_r >= dim + 1 so a general
// projection stays finite onto its image.
Variety project(const Variety& base, std::size_t target_r, Rng& rng);

// Serialization to and from a JSON document with fields
// name, n, r, is_cone, degree (optional) and coords. load(save(v))
// reproduces v exactly; loading validates shape and well-formedness.
Variety load_variety(const std::string& text);
Variety load_variety_file(const std::string& path);
std::string save_variety(const Variety& v);

struct ValidationReport {
    // generic rank of the map value stacked on its Jacobian; n+1 means the
    // parametrization is generically immersive
    std::size_t jet_rank = 0;
    bool immersive = false;
    // projective dimension of the linear span of sampled image points
    std::size_t span_dim = 0;
    bool nondegenerate = false;
    bool is_cone = false;
    std::optional<i64> degree;

    bool ok() const { return immersive && nondegenerate; }
};

// Randomized sanity checks on a variety document or constructor output.
ValidationReport validate(const Variety& v, const ComputeCfg& cfg);

// The built-in collection used by the scan and verification tooling.
std::vector<Variety> builtin_catalog();

// Resolve selectors like "veronese:2,2", "scroll:3,1", "segre:1,2",
// "cone-rnc4". Throws UsageError for selectors that do not parse.
Variety catalog_lookup(const std::string& selector);

} // namespace secvar
