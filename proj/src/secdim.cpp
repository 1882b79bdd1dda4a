#include "secvar/secdim.hpp"

#include <algorithm>
#include <numeric>

#include "secvar/linalg.hpp"

namespace secvar {

int expdim_secant(std::size_t n, std::size_t k, std::size_t r) {
    return static_cast<int>(std::min(n * (k + 1) + k, r));
}

int expdim_grass(std::size_t n, std::size_t k, std::size_t r) {
    return static_cast<int>(std::min(n * (k + 1), (r - k) * (k + 1)));
}

int expdim_grass_secant(std::size_t n, std::size_t h, std::size_t k, std::size_t r) {
    return static_cast<int>(std::min((k - h) * (h + 1) + n * (k + 1), (r - h) * (h + 1)));
}

const char* kind_label(DimKind kind) {
    switch (kind) {
        case DimKind::Span: return "span";
        case DimKind::Secant: return "S";
        case DimKind::Grass: return "G";
        case DimKind::GrassSecant: return "GHK";
    }
    return "?";
}

namespace {

u64 draw_param(const FieldCtx& f, Rng& rng) { return sample_elem(f, rng); }

// cross-check samples: small integers keep the exact arithmetic cheap
constexpr i64 kRatRange = 1 << 20;
mpq_class draw_param(const RatCtx&, Rng& rng) {
    return mpq_class(static_cast<long>(rng.next_int(-kRatRange, kRatRange)));
}

template <class Ctx>
std::vector<typename Ctx::Elem> draw_params(const Ctx& f, Rng& rng, std::size_t len) {
    std::vector<typename Ctx::Elem> v;
    v.reserve(len);
    for (std::size_t i = 0; i < len; ++i) v.push_back(draw_param(f, rng));
    return v;
}

std::vector<std::size_t> iota_vec(std::size_t len) {
    std::vector<std::size_t> v(len);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return v;
}

template <class Ctx>
int span_rank_once(const Ctx& f, const Variety& v, Rng& rng) {
    Mat<typename Ctx::Elem> pts(v.r + 2, v.r + 1, f.zero());
    for (std::size_t row = 0; row < pts.rows; ++row) {
        const auto t = draw_params(f, rng, v.n);
        const auto vals = v.map.eval(f, t);
        for (std::size_t c = 0; c <= v.r; ++c) pts.at(row, c) = vals[c];
    }
    const std::size_t rk = rank(f, pts);
    if (rk == 0) throw DegenerateSample("every sampled point evaluated to zero");
    return static_cast<int>(rk) - 1;
}

// Stacked tangent frames at k+1 points: value row plus n derivative rows
// per point. The affine cone over the secant family has this rank.
template <class Ctx>
int secant_rank_once(const Ctx& f, const Variety& v, std::size_t k, Rng& rng) {
    const JetCtx<Ctx> jets(f, v.n);
    const auto dirs = iota_vec(v.n);
    Mat<typename Ctx::Elem> stack((v.n + 1) * (k + 1), v.r + 1, f.zero());
    for (std::size_t pt = 0; pt <= k; ++pt) {
        const auto t = draw_params(f, rng, v.n);
        const auto lifted = lift_to_jets(f, t, dirs);
        const auto img = v.map.eval(jets, lifted);
        for (std::size_t c = 0; c <= v.r; ++c) {
            stack.at(pt * (v.n + 1), c) = img[c].val;
            for (std::size_t i = 0; i < v.n; ++i)
                stack.at(pt * (v.n + 1) + 1 + i, c) = img[c].partials[i];
        }
    }
    const std::size_t rk = rank(f, stack);
    if (rk == 0) throw DegenerateSample("every sampled tangent frame vanished");
    return static_cast<int>(rk) - 1;
}

// Image of k+1 parameter slices of one jet-lifted parameter vector; every
// entry carries partials with respect to all sampled scalars at once.
template <class Ctx>
Mat<Jet<Ctx>> jet_point_matrix(const JetCtx<Ctx>& jets, const Variety& v, std::size_t k,
                               const std::vector<Jet<Ctx>>& lifted) {
    Mat<Jet<Ctx>> m(k + 1, v.r + 1, jets.zero());
    for (std::size_t pt = 0; pt <= k; ++pt) {
        const std::span<const Jet<Ctx>> slice(lifted.data() + pt * v.n, v.n);
        const auto img = v.map.eval(jets, slice);
        for (std::size_t c = 0; c <= v.r; ++c) m.at(pt, c) = img[c];
    }
    return m;
}

template <class Ctx>
Mat<typename Ctx::Elem> value_part(const Ctx& f, const Mat<Jet<Ctx>>& m) {
    Mat<typename Ctx::Elem> vals(m.rows, m.cols, f.zero());
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) vals.at(i, j) = m.at(i, j).val;
    return vals;
}

// Rank of the chart derivative of the span map at a random configuration.
template <class Ctx>
int grass_rank_once(const Ctx& f, const Variety& v, std::size_t k, Rng& rng) {
    const std::size_t width = v.n * (k + 1);
    const JetCtx<Ctx> jets(f, width);
    const auto w = draw_params(f, rng, width);
    const auto lifted = lift_to_jets(f, w, iota_vec(width));
    auto m = jet_point_matrix(jets, v, k, lifted);

    std::vector<std::size_t> piv;
    try {
        piv = choose_pivot_columns(f, value_part(f, m), k + 1);
    } catch (const RankDeficient&) {
        throw DegenerateSample("sampled points do not span a k-plane");
    }
    const auto chart = chart_normalize(jets, std::move(m), piv);
    return static_cast<int>(jacobian_rank(f, chart));
}

// Same chart construction for the family of h-planes inside (k+1)-point
// spans; the plane frame is a full (h+1) x (k+1) coefficient gauge so the
// derivative sees motions of the points and of the plane independently.
template <class Ctx>
int grass_secant_rank_once(const Ctx& f, const Variety& v, std::size_t h, std::size_t k,
                           Rng& rng) {
    const std::size_t point_width = v.n * (k + 1);
    const std::size_t width = point_width + (h + 1) * (k + 1);
    const JetCtx<Ctx> jets(f, width);
    const auto w = draw_params(f, rng, width);
    const auto lifted = lift_to_jets(f, w, iota_vec(width));
    const auto m = jet_point_matrix(jets, v, k, lifted);

    if (rank(f, value_part(f, m)) < k + 1)
        throw DegenerateSample("sampled points do not span a k-plane");

    Mat<Jet<Ctx>> plane(h + 1, v.r + 1, jets.zero());
    for (std::size_t i = 0; i <= h; ++i) {
        for (std::size_t c = 0; c <= v.r; ++c) {
            Jet<Ctx> acc = jets.zero();
            for (std::size_t j = 0; j <= k; ++j) {
                const auto& lam = lifted[point_width + i * (k + 1) + j];
                acc = jets.add(acc, jets.mul(lam, m.at(j, c)));
            }
            plane.at(i, c) = std::move(acc);
        }
    }

    std::vector<std::size_t> piv;
    try {
        piv = choose_pivot_columns(f, value_part(f, plane), h + 1);
    } catch (const RankDeficient&) {
        throw DegenerateSample("sampled plane frame is rank deficient");
    }
    const auto chart = chart_normalize(jets, std::move(plane), piv);
    return static_cast<int>(jacobian_rank(f, chart));
}

// One trial: resample on degenerate configurations up to the retry cap.
template <class Ctx, class Body>
int one_trial(const Ctx& f, const Rng& trial_rng, const ComputeCfg& cfg, bool pivot_error,
              const char* what, Body&& body) {
    for (unsigned attempt = 0; attempt <= cfg.retry_cap; ++attempt) {
        Rng rng = trial_rng.substream(attempt);
        try {
            return body(f, rng);
        } catch (const DegenerateSample&) {
        } catch (const SingularPivotBlock&) {
        }
    }
    const std::string msg = std::string(what) + ": no usable sample after " +
                            std::to_string(cfg.retry_cap + 1) + " attempts";
    if (pivot_error) throw SingularPivotBlock(msg);
    throw SampleFailure(msg);
}

void check_cfg(const ComputeCfg& cfg) {
    if (cfg.trials == 0) throw UsageError("trials must be at least 1");
}

template <class Body>
DimensionEstimate run_estimate(DimKind kind, std::optional<int> h, int k, int expdim,
                               const ComputeCfg& cfg, bool pivot_error, const char* what,
                               Body&& body) {
    check_cfg(cfg);
    const FieldCtx f(cfg.prime);
    const Rng root(cfg.seed);

    DimensionEstimate est;
    est.kind = kind;
    est.h = h;
    est.k = k;
    est.expdim = expdim;
    est.prime = cfg.prime;
    est.seed = cfg.seed;
    est.trials_used = cfg.trials;
    for (unsigned trial = 0; trial < cfg.trials; ++trial)
        est.trial_dims.push_back(one_trial(f, root.substream(trial), cfg, pivot_error, what, body));
    est.dim = *std::max_element(est.trial_dims.begin(), est.trial_dims.end());
    est.defect = est.expdim - est.dim;
    if (est.dim > est.expdim)
        throw Error(std::string(what) + ": computed dimension " + std::to_string(est.dim) +
                    " exceeds the count bound " + std::to_string(est.expdim));

    if (cfg.cross_check) {
        const RatCtx q;
        const int exact = one_trial(q, root.substream(cfg.trials), cfg, pivot_error, what, body);
        est.cross_checked = true;
        est.cross_check_agrees = (exact == est.dim);
    }
    return est;
}

} // namespace

DimensionEstimate span_dim(const Variety& v, const ComputeCfg& cfg) {
    auto body = [&](const auto& f, Rng& rng) { return span_rank_once(f, v, rng); };
    return run_estimate(DimKind::Span, std::nullopt, 0, static_cast<int>(v.r), cfg, false,
                        "span", body);
}

DimensionEstimate secant_dim(const Variety& v, std::size_t k, const ComputeCfg& cfg) {
    // any k is meaningful here: once the family fills P^r it stays there,
    // so no index cap beyond what the tangent-frame stack enforces itself
    auto body = [&](const auto& f, Rng& rng) { return secant_rank_once(f, v, k, rng); };
    return run_estimate(DimKind::Secant, std::nullopt, static_cast<int>(k),
                        expdim_secant(v.n, k, v.r), cfg, false, "secant", body);
}

DimensionEstimate grass_dim(const Variety& v, std::size_t k, const ComputeCfg& cfg) {
    if (k > v.r) throw UsageError("span family index k must satisfy k <= r");
    if (v.n * (k + 1) > cfg.direction_limit)
        throw DirectionLimitExceeded("span family needs " + std::to_string(v.n * (k + 1)) +
                                     " jet directions, limit is " +
                                     std::to_string(cfg.direction_limit));
    auto body = [&](const auto& f, Rng& rng) { return grass_rank_once(f, v, k, rng); };
    return run_estimate(DimKind::Grass, std::nullopt, static_cast<int>(k),
                        expdim_grass(v.n, k, v.r), cfg, true, "span family", body);
}

DimensionEstimate grass_secant_dim(const Variety& v, std::size_t h, std::size_t k,
                                   const ComputeCfg& cfg) {
    if (h > k || k > v.r) throw UsageError("plane family indices must satisfy h <= k <= r");
    const std::size_t width = v.n * (k + 1) + (h + 1) * (k + 1);
    if (width > cfg.direction_limit)
        throw DirectionLimitExceeded("plane family needs " + std::to_string(width) +
                                     " jet directions, limit is " +
                                     std::to_string(cfg.direction_limit));
    auto body = [&](const auto& f, Rng& rng) { return grass_secant_rank_once(f, v, h, k, rng); };
    return run_estimate(DimKind::GrassSecant, static_cast<int>(h), static_cast<int>(k),
                        expdim_grass_secant(v.n, h, k, v.r), cfg, true, "plane family", body);
}

int fiber_dim(const Variety& v, std::size_t h, std::size_t k, const ComputeCfg& cfg) {
    const auto g = grass_dim(v, k, cfg);
    const auto ghk = grass_secant_dim(v, h, k, cfg);
    return g.dim + static_cast<int>((h + 1) * (k - h)) - ghk.dim;
}

namespace {

// Memoized dimensions so one sweep never recomputes an estimate. Entries
// outside the index or jet-width guards report as absent.
class DimTable {
public:
    DimTable(const Variety& v, const ComputeCfg& cfg) : v_(v), cfg_(cfg) {}

    std::optional<int> secant(std::size_t k) {
        if (k > v_.r) return std::nullopt;
        auto it = secant_.find(k);
        if (it == secant_.end())
            it = secant_.emplace(k, secant_dim(v_, k, cfg_).dim).first;
        return it->second;
    }
    std::optional<int> grass(std::size_t k) {
        if (k > v_.r || v_.n * (k + 1) > cfg_.direction_limit) return std::nullopt;
        auto it = grass_.find(k);
        if (it == grass_.end()) it = grass_.emplace(k, grass_dim(v_, k, cfg_).dim).first;
        return it->second;
    }
    std::optional<int> grass_secant(std::size_t h, std::size_t k) {
        if (h > k || k > v_.r) return std::nullopt;
        if (v_.n * (k + 1) + (h + 1) * (k + 1) > cfg_.direction_limit) return std::nullopt;
        const auto key = std::make_pair(h, k);
        auto it = ghk_.find(key);
        if (it == ghk_.end())
            it = ghk_.emplace(key, grass_secant_dim(v_, h, k, cfg_).dim).first;
        return it->second;
    }

private:
    const Variety& v_;
    const ComputeCfg& cfg_;
    std::map<std::size_t, int> secant_;
    std::map<std::size_t, int> grass_;
    std::map<std::pair<std::size_t, std::size_t>, int> ghk_;
};

} // namespace

std::vector<CheckResult> check_inequalities(const Variety& v, std::size_t max_k,
                                            const ComputeCfg& cfg) {
    DimTable table(v, cfg);
    std::vector<CheckResult> out;
    const std::size_t top = std::min(max_k, v.r);
    const i64 n = static_cast<i64>(v.n);
    const i64 r = static_cast<i64>(v.r);

    for (std::size_t k = 0; k <= top; ++k) {
        const auto g = table.grass(k);
        if (!g) continue;
        CheckResult c;
        c.rule = kRuleGrassExpected;
        c.k = static_cast<int>(k);
        c.hypothesis_held = true;
        c.conclusion_held = (*g == expdim_grass(v.n, k, v.r));
        c.details = {{"dim", *g}, {"expdim", expdim_grass(v.n, k, v.r)}};
        out.push_back(std::move(c));
    }

    for (std::size_t k = 2; k <= top; ++k) {
        for (std::size_t h = 1; h < k; ++h) {
            const auto g = table.grass(k);
            const auto ghk = table.grass_secant(h, k);
            const auto sk = table.secant(k);
            if (!g || !ghk || !sk) continue;
            const i64 fiber = *g + static_cast<i64>((h + 1) * (k - h)) - *ghk;
            const i64 hh = static_cast<i64>(h);
            const i64 kk = static_cast<i64>(k);

            {
                // positive fiber defect caps the secant dimension
                CheckResult c;
                c.rule = kRuleSecantFiberBound;
                c.h = static_cast<int>(h);
                c.k = static_cast<int>(k);
                c.hypothesis_held = fiber > 0;
                const i64 bound = n * (kk + 1) + kk - fiber - hh;
                c.conclusion_held = (*sk <= bound);
                c.details = {{"grass_dim", *g},        {"grass_secant_dim", *ghk},
                             {"fiber", fiber},         {"secant_dim", *sk},
                             {"bound", bound}};
                out.push_back(std::move(c));
            }

            const auto sk_prev = table.secant(k - 1);

            if (sk_prev) {
                // sharper cap when the previous secant family does not fill
                // the ambient space and the variety is not a cone
                CheckResult c;
                c.rule = kRuleSecantFiberBoundNoncone;
                c.h = static_cast<int>(h);
                c.k = static_cast<int>(k);
                c.hypothesis_held = fiber > 0 && *sk_prev < r && !v.is_cone;
                const i64 bound = n * (kk + 1) + kk - fiber - 2 * hh;
                c.conclusion_held = (*sk <= bound);
                c.details = {{"grass_dim", *g},
                             {"grass_secant_dim", *ghk},
                             {"fiber", fiber},
                             {"secant_dim", *sk},
                             {"prev_secant_dim", *sk_prev},
                             {"is_cone", v.is_cone ? 1 : 0},
                             {"bound", bound}};
                out.push_back(std::move(c));
            }

            {
                // a degenerate plane family forces degeneracy one level down
                const i64 uncapped = (kk - hh) * (hh + 1) + n * (kk + 1);
                const auto lower = (h == 1) ? table.secant(k - 1) : table.grass_secant(h - 1, k - 1);
                if (sk_prev && lower) {
                    CheckResult c;
                    c.rule = kRuleDefectDescends;
                    c.h = static_cast<int>(h);
                    c.k = static_cast<int>(k);
                    c.hypothesis_held = (*sk_prev < r) && (*ghk < uncapped);
                    const i64 bound = (kk - hh) * hh + n * kk;
                    c.conclusion_held = (*lower < bound);
                    c.details = {{"grass_secant_dim", *ghk}, {"uncapped_expdim", uncapped},
                                 {"prev_secant_dim", *sk_prev}, {"lower_dim", *lower},
                                 {"bound", bound}};
                    out.push_back(std::move(c));
                }
            }
        }
    }

    if (top >= 2) {
        const auto g12 = table.grass_secant(1, 2);
        const auto s1 = table.secant(1);
        if (g12 && s1) {
            // a degenerate line family through secant planes, together with
            // a minimal nondegenerate secant line family, happens only on cones
            CheckResult c;
            c.rule = kRuleConeCriterion;
            c.h = 1;
            c.k = 2;
            c.hypothesis_held = (*g12 < 3 * n + 2) && (*s1 == 2 * n) && (2 * n < r);
            c.conclusion_held = v.is_cone;
            c.details = {{"grass_secant_dim", *g12},
                         {"secant_line_dim", *s1},
                         {"n", n},
                         {"r", r},
                         {"is_cone", v.is_cone ? 1 : 0}};
            out.push_back(std::move(c));
        }
    }

    return out;
}

} // namespace secvar
