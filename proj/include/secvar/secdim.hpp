#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "secvar/common.hpp"
#include "secvar/config.hpp"
#include "secvar/varieties.hpp"

namespace secvar {

// Expected (count) dimensions; actual dimensions never exceed them.
int expdim_secant(std::size_t n, std::size_t k, std::size_t r);
int expdim_grass(std::size_t n, std::size_t k, std::size_t r);
int expdim_grass_secant(std::size_t n, std::size_t h, std::size_t k, std::size_t r);

enum class DimKind { Span, Secant, Grass, GrassSecant };

const char* kind_label(DimKind kind); // "span", "S", "G", "GHK"

// Result of one randomized dimension computation. dim is the maximum over
// trials; rank can only undershoot at special points, so the maximum is the
// best available lower bound and equals the true dimension with high
// probability.
struct DimensionEstimate {
    DimKind kind = DimKind::Secant;
    std::optional<int> h;
    int k = 0;
    int dim = 0;
    int expdim = 0;
    int defect = 0;
    std::vector<int> trial_dims;
    unsigned trials_used = 0;
    u64 prime = 0;
    u64 seed = 0;
    bool cross_checked = false;
    std::optional<bool> cross_check_agrees;
};

// Projective dimension of the linear span of the image.
DimensionEstimate span_dim(const Variety& v, const ComputeCfg& cfg);

// Dimension of the variety of (k+1)-point spans, computed from the rank of
// the stacked tangent spaces at k+1 general points.
DimensionEstimate secant_dim(const Variety& v, std::size_t k, const ComputeCfg& cfg);

// Dimension of the closure of { span of k+1 general points } inside the
// Grassmannian of k-planes.
DimensionEstimate grass_dim(const Variety& v, std::size_t k, const ComputeCfg& cfg);

// Dimension of the closure of { h-plane inside a general (k+1)-point span }
// inside the Grassmannian of h-planes.
DimensionEstimate grass_secant_dim(const Variety& v, std::size_t h, std::size_t k,
                                   const ComputeCfg& cfg);

// Dimension of the fiber of the h-plane family over the k-plane family:
// dim G + (h+1)(k-h) - dim GHK. Zero exactly when h-planes move as freely
// as the ambient k-planes allow.
int fiber_dim(const Variety& v, std::size_t h, std::size_t k, const ComputeCfg& cfg);

// One structural implication evaluated on computed dimensions. A record is
// a violation when its hypothesis held and its conclusion failed.
struct CheckResult {
    std::string rule;
    std::optional<int> h;
    int k = 0;
    bool hypothesis_held = false;
    bool conclusion_held = false;
    std::map<std::string, i64> details;

    bool violated() const { return hypothesis_held && !conclusion_held; }
};

// Rule identifiers, in emission order per (h, k).
inline constexpr const char* kRuleGrassExpected = "grass-dim-expected";
inline constexpr const char* kRuleSecantFiberBound = "secant-bound-fiber-defect";
inline constexpr const char* kRuleSecantFiberBoundNoncone = "secant-bound-noncone";
inline constexpr const char* kRuleDefectDescends = "defect-descends";
inline constexpr const char* kRuleConeCriterion = "cone-criterion";

// Evaluate every applicable structural implication for k up to max_k.
// Skips combinations whose jet width would exceed cfg.direction_limit.
std::vector<CheckResult> check_inequalities(const Variety& v, std::size_t max_k,
                                            const ComputeCfg& cfg);

} // namespace secvar
