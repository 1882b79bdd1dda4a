#include "secvar/varieties.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "secvar/linalg.hpp"

namespace secvar {

namespace {

using nlohmann::json;

void append_monomials_of_degree(std::vector<std::vector<std::uint32_t>>& out,
                                std::vector<std::uint32_t>& prefix, std::size_t vars_left,
                                std::uint32_t degree_left) {
    if (vars_left == 1) {
        prefix.push_back(degree_left);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    // descending first exponent gives descending lexicographic order
    for (std::uint32_t e = degree_left; ; --e) {
        prefix.push_back(e);
        append_monomials_of_degree(out, prefix, vars_left - 1, degree_left - e);
        prefix.pop_back();
        if (e == 0) break;
    }
}

Poly monomial(std::vector<std::uint32_t> exps, long coeff = 1) {
    return Poly{Term{mpz_class(coeff), std::move(exps)}};
}

i64 binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    i64 b = 1;
    for (std::size_t i = 1; i <= k; ++i) b = b * static_cast<i64>(n - k + i) / static_cast<i64>(i);
    return b;
}

i64 ipow(i64 b, std::size_t e) {
    i64 r = 1;
    while (e--) r *= b;
    return r;
}

} // namespace

Variety veronese(std::size_t n, std::size_t d) {
    if (n == 0 || d == 0) throw UsageError("veronese needs n >= 1 and d >= 1");
    std::vector<std::vector<std::uint32_t>> monos;
    std::vector<std::uint32_t> prefix;
    for (std::uint32_t deg = 0; deg <= d; ++deg)
        append_monomials_of_degree(monos, prefix, n, deg);

    std::vector<Poly> coords;
    coords.reserve(monos.size());
    for (auto& e : monos) coords.push_back(monomial(std::move(e)));

    Variety v;
    v.name = "veronese:" + std::to_string(n) + "," + std::to_string(d);
    v.n = n;
    v.r = coords.size() - 1;
    v.map = PolyMap(n, std::move(coords), v.name);
    v.is_cone = false;
    v.degree = ipow(static_cast<i64>(d), n);
    return v;
}

Variety scroll(std::size_t a, std::size_t b) {
    if (a < b) std::swap(a, b);
    if (a == 0) throw UsageError("scroll needs a + b >= 1");
    std::vector<Poly> coords;
    for (std::size_t i = 0; i <= a; ++i)
        coords.push_back(monomial({static_cast<std::uint32_t>(i), 0}));
    for (std::size_t i = 0; i <= b; ++i)
        coords.push_back(monomial({static_cast<std::uint32_t>(i), 1}));

    Variety v;
    v.name = "scroll:" + std::to_string(a) + "," + std::to_string(b);
    v.n = 2;
    v.r = a + b + 1;
    v.map = PolyMap(2, std::move(coords), v.name);
    v.is_cone = (b == 0); // the ruling directrix collapses to a vertex point
    v.degree = static_cast<i64>(a + b);
    return v;
}

Variety segre(std::size_t n, std::size_t m) {
    if (n == 0 || m == 0) throw UsageError("segre needs n >= 1 and m >= 1");
    const std::size_t arity = n + m;
    std::vector<Poly> coords;
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= m; ++j) {
            std::vector<std::uint32_t> e(arity, 0);
            if (i > 0) e[i - 1] = 1;
            if (j > 0) e[n + j - 1] = 1;
            coords.push_back(monomial(std::move(e)));
        }
    }

    Variety v;
    v.name = "segre:" + std::to_string(n) + "," + std::to_string(m);
    v.n = arity;
    v.r = (n + 1) * (m + 1) - 1;
    v.map = PolyMap(arity, std::move(coords), v.name);
    v.is_cone = false;
    v.degree = binomial(n + m, n);
    return v;
}

Variety cone_over(const Variety& base, std::size_t vertex_count) {
    const std::size_t arity = base.n + vertex_count;
    std::vector<Poly> coords;
    coords.reserve(base.r + 1 + vertex_count);
    for (const Poly& p : base.map.coords()) {
        Poly q = p;
        for (Term& t : q) t.exps.resize(arity, 0);
        coords.push_back(std::move(q));
    }
    for (std::size_t i = 0; i < vertex_count; ++i) {
        std::vector<std::uint32_t> e(arity, 0);
        e[base.n + i] = 1;
        coords.push_back(monomial(std::move(e)));
    }

    Variety v;
    v.name = "cone:" + base.name + ":" + std::to_string(vertex_count);
    v.n = arity;
    v.r = base.r + vertex_count;
    v.map = PolyMap(arity, std::move(coords), v.name);
    v.is_cone = true;
    v.degree = base.degree;
    return v;
}

Variety project(const Variety& base, std::size_t target_r, Rng& rng) {
    if (target_r < base.n + 1)
        throw TargetTooSmall("projection target P^" + std::to_string(target_r) +
                             " cannot carry a variety of dimension " + std::to_string(base.n));
    if (target_r > base.r)
        throw UsageError("projection cannot raise the ambient dimension");

    std::vector<std::vector<i64>> a(target_r + 1, std::vector<i64>(base.r + 1, 0));
    for (auto& row : a)
        for (auto& entry : row) entry = rng.next_int(-99, 99);

    Variety v;
    v.name = "project:" + base.name + "->" + std::to_string(target_r);
    v.n = base.n;
    v.r = target_r;
    v.map = base.map.compose_linear(a);
    v.is_cone = base.is_cone; // linear images of cones are cones
    v.degree = std::nullopt;  // projection can drop the degree
    return v;
}

std::string save_variety(const Variety& v) {
    json j;
    j["name"] = v.name;
    j["n"] = v.n;
    j["r"] = v.r;
    j["is_cone"] = v.is_cone;
    if (v.degree) j["degree"] = *v.degree;
    json coords = json::array();
    for (const Poly& p : v.map.coords()) {
        json poly = json::array();
        for (const Term& t : p) {
            json term;
            term["c"] = t.coeff.get_str();
            term["e"] = t.exps;
            poly.push_back(std::move(term));
        }
        coords.push_back(std::move(poly));
    }
    j["coords"] = std::move(coords);
    return j.dump(2);
}

namespace {

const json& require_field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("variety document lacks \"") + key + "\"");
    return *it;
}

} // namespace

Variety load_variety(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("variety document is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("variety document must be a JSON object");

    const json& jname = require_field(j, "name");
    const json& jn = require_field(j, "n");
    const json& jr = require_field(j, "r");
    const json& jcoords = require_field(j, "coords");
    if (!jname.is_string()) throw ParseError("\"name\" must be a string");
    if (!jn.is_number_unsigned() || !jr.is_number_unsigned())
        throw ParseError("\"n\" and \"r\" must be non-negative integers");
    if (!jcoords.is_array()) throw ParseError("\"coords\" must be an array");

    Variety v;
    v.name = jname.get<std::string>();
    v.n = jn.get<std::size_t>();
    v.r = jr.get<std::size_t>();
    if (v.n == 0) throw InvariantViolation("parameter dimension n must be positive");

    if (auto it = j.find("is_cone"); it != j.end()) {
        if (!it->is_boolean()) throw ParseError("\"is_cone\" must be a boolean");
        v.is_cone = it->get<bool>();
    }
    if (auto it = j.find("degree"); it != j.end()) {
        if (!it->is_number_integer()) throw ParseError("\"degree\" must be an integer");
        v.degree = it->get<i64>();
    }

    if (jcoords.size() != v.r + 1)
        throw InvariantViolation("expected " + std::to_string(v.r + 1) + " coordinates, found " +
                                 std::to_string(jcoords.size()));

    std::vector<Poly> coords;
    coords.reserve(jcoords.size());
    for (const json& jpoly : jcoords) {
        if (!jpoly.is_array()) throw ParseError("each coordinate must be an array of terms");
        Poly p;
        for (const json& jterm : jpoly) {
            if (!jterm.is_object()) throw ParseError("each term must be an object");
            const json& jc = require_field(jterm, "c");
            const json& je = require_field(jterm, "e");
            Term t;
            if (jc.is_string()) {
                try {
                    t.coeff = mpz_class(jc.get<std::string>());
                } catch (const std::invalid_argument&) {
                    throw ParseError("coefficient \"" + jc.get<std::string>() +
                                     "\" is not a decimal integer");
                }
            } else if (jc.is_number_integer()) {
                t.coeff = mpz_class(static_cast<long>(jc.get<i64>()));
            } else {
                throw ParseError("coefficient must be a decimal string or an integer");
            }
            if (!je.is_array()) throw ParseError("exponent vector must be an array");
            if (je.size() != v.n)
                throw InvariantViolation("exponent vector length " + std::to_string(je.size()) +
                                         " does not match n = " + std::to_string(v.n));
            for (const json& e : je) {
                if (!e.is_number_unsigned())
                    throw ParseError("exponents must be non-negative integers");
                t.exps.push_back(e.get<std::uint32_t>());
            }
            p.push_back(std::move(t));
        }
        coords.push_back(std::move(p));
    }

    v.map = PolyMap(v.n, std::move(coords), v.name);
    return v;
}

Variety load_variety_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open variety file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_variety(buf.str());
}

ValidationReport validate(const Variety& v, const ComputeCfg& cfg) {
    const FieldCtx f(cfg.prime);
    const Rng root(cfg.seed);
    ValidationReport rep;
    rep.is_cone = v.is_cone;
    rep.degree = v.degree;

    std::vector<std::size_t> dirs(v.n);
    std::iota(dirs.begin(), dirs.end(), std::size_t{0});
    const JetCtx<FieldCtx> jets(f, v.n);

    for (unsigned trial = 0; trial < cfg.trials; ++trial) {
        Rng rng = root.substream(trial);

        // generic immersion: value row stacked on the n Jacobian rows
        const auto t = sample_vector(f, rng, v.n);
        const auto lifted = lift_to_jets(f, t, dirs);
        const auto img = v.map.eval(jets, lifted);
        Mat<u64> stack(v.n + 1, v.r + 1, 0);
        for (std::size_t c = 0; c <= v.r; ++c) {
            stack.at(0, c) = img[c].val;
            for (std::size_t i = 0; i < v.n; ++i) stack.at(1 + i, c) = img[c].partials[i];
        }
        rep.jet_rank = std::max(rep.jet_rank, rank(f, stack));

        // linear span of r+2 sampled image points
        Mat<u64> pts(v.r + 2, v.r + 1, 0);
        for (std::size_t row = 0; row < v.r + 2; ++row) {
            const auto s = sample_vector(f, rng, v.n);
            const auto vals = v.map.eval(f, s);
            for (std::size_t c = 0; c <= v.r; ++c) pts.at(row, c) = vals[c];
        }
        const std::size_t rk = rank(f, pts);
        rep.span_dim = std::max(rep.span_dim, rk == 0 ? 0 : rk - 1);
    }

    rep.immersive = (rep.jet_rank == v.n + 1);
    rep.nondegenerate = (rep.span_dim == v.r);
    return rep;
}

std::vector<Variety> builtin_catalog() {
    std::vector<Variety> cat;
    cat.push_back(veronese(2, 2));
    cat.push_back(veronese(2, 3));
    cat.push_back(veronese(1, 3));
    cat.push_back(veronese(1, 4));
    cat.push_back(scroll(2, 2));
    cat.push_back(scroll(3, 1));
    cat.push_back(scroll(4, 0));
    Variety quartic_cone = cone_over(veronese(1, 4), 1);
    quartic_cone.name = "cone-rnc4";
    cat.push_back(std::move(quartic_cone));
    cat.push_back(segre(1, 1));
    cat.push_back(segre(1, 2));
    return cat;
}

Variety catalog_lookup(const std::string& selector) {
    if (selector == "cone-rnc4") {
        Variety v = cone_over(veronese(1, 4), 1);
        v.name = "cone-rnc4";
        return v;
    }
    const auto colon = selector.find(':');
    if (colon != std::string::npos) {
        const std::string head = selector.substr(0, colon);
        const std::string args = selector.substr(colon + 1);
        const auto comma = args.find(',');
        if (comma != std::string::npos) {
            std::size_t a = 0, b = 0;
            try {
                a = std::stoul(args.substr(0, comma));
                b = std::stoul(args.substr(comma + 1));
            } catch (const std::exception&) {
                throw UsageError("cannot parse catalog selector: " + selector);
            }
            if (head == "veronese") return veronese(a, b);
            if (head == "scroll") return scroll(a, b);
            if (head == "segre") return segre(a, b);
        }
    }
    throw UsageError("unknown catalog selector: " + selector);
}

} // namespace secvar
