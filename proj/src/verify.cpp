#include "qhopf/verify.hpp"

#include "qhopf/expr.hpp"
#include "qhopf/numrep.hpp"
#include "qhopf/random.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qhopf {

namespace {

/// Counts failures of an exact identity over many instances.
struct Tally {
    int total = 0;
    int failures = 0;
    std::string first;

    void record(bool ok, const std::function<std::string()>& describe) {
        ++total;
        if (ok) return;
        if (failures++ == 0) first = describe();
    }
};

CheckRecord exact_record(const std::string& name, Json params, const Tally& t) {
    params["instances"] = t.total;
    CheckRecord r;
    r.check_name = name;
    r.params = std::move(params);
    r.defect = t.failures;
    r.tolerance = 0.0;
    r.pass = t.failures == 0;
    r.detail = t.first;
    return r;
}

CheckRecord numeric_record(const std::string& name, Json params, double defect, double tolerance,
                           std::string detail = {}) {
    CheckRecord r;
    r.check_name = name;
    r.params = std::move(params);
    r.defect = defect;
    r.tolerance = tolerance;
    r.pass = defect <= tolerance;
    if (!r.pass) r.detail = std::move(detail);
    return r;
}

Json base_params(const VerifyConfig& c) { return Json{{"seed", c.seed}}; }

Json numeric_params(const VerifyConfig& c) {
    return Json{{"p", c.p.get_str()}, {"q", c.q.get_str()}, {"N", c.N}, {"seed", c.seed}};
}

AlgElement gen(Generator g) { return AlgElement::generator(g); }

AlgElement nonzero_random(std::mt19937_64& rng, const RandomShape& shape = {}) {
    for (;;) {
        AlgElement x = random_element(rng, shape);
        if (!x.is_zero()) return x;
    }
}

// ---- algebra -------------------------------------------------------------------------

std::vector<CheckRecord> algebra_suite(const VerifyConfig& config) {
    std::vector<CheckRecord> out;
    const ParamScalar p = ParamScalar::p(), q = ParamScalar::q(), one(1);
    const AlgElement a = gen(Generator::a), as = gen(Generator::a_star);
    const AlgElement b = gen(Generator::b), bs = gen(Generator::b_star);

    {
        Tally t;
        const std::vector<std::pair<std::string, AlgElement>> relations{
            {"a^* a - q a a^* - (1 - q)", mul(as, a) - q * mul(a, as) - AlgElement(one - q)},
            {"b^* b - p b b^* - (1 - p)", mul(bs, b) - p * mul(b, bs) - AlgElement(one - p)},
            {"a b - b a", mul(a, b) - mul(b, a)},
            {"a^* b - b a^*", mul(as, b) - mul(b, as)},
            {"(1 - a a^*)(1 - b b^*)", mul(AlgElement::unit() - mul(a, as), AlgElement::unit() - mul(b, bs))},
        };
        for (const auto& [text, value] : relations)
            t.record(value.is_zero(), [&] { return text + " = " + value.to_string(); });
        out.push_back(exact_record("defining_relations_vanish", Json::object(), t));
    }

    {
        Tally t;
        const AlgElement f0 = iota(S2Generator::f0), f1 = iota(S2Generator::f1), f1s = iota(S2Generator::f1_star);
        const std::vector<std::pair<std::string, AlgElement>> relations{
            {"f0 - f0^*", f0 - star(f0)},
            {"f1^* f1 - q f1 f1^* - (p - q) f0 - (1 - p)",
             mul(f1s, f1) - q * mul(f1, f1s) - (p - q) * f0 - AlgElement(one - p)},
            {"f0 f1 - p f1 f0 - (1 - p) f1", mul(f0, f1) - p * mul(f1, f0) - (one - p) * f1},
            {"(1 - f0)(f1 f1^* - f0)", mul(AlgElement::unit() - f0, mul(f1, f1s) - f0)},
        };
        for (const auto& [text, value] : relations)
            t.record(value.is_zero(), [&] { return "iota(" + text + ") = " + value.to_string(); });
        out.push_back(exact_record("base_relations_vanish_under_iota", Json::object(), t));
    }

    std::mt19937_64 rng(config.seed);
    {
        Tally t;
        for (int i = 0; i < 500; ++i) {
            const AlgElement x = random_element(rng), y = random_element(rng), z = random_element(rng);
            t.record(mul(mul(x, y), z) == mul(x, mul(y, z)),
                     [&] { return "x = " + x.to_string() + ", y = " + y.to_string() + ", z = " + z.to_string(); });
        }
        out.push_back(exact_record("associativity", base_params(config), t));
    }
    {
        Tally t;
        for (int i = 0; i < 500; ++i) {
            const AlgElement x = random_element(rng), y = random_element(rng);
            t.record(star(mul(x, y)) == mul(star(y), star(x)) && star(star(x)) == x,
                     [&] { return "x = " + x.to_string() + ", y = " + y.to_string(); });
        }
        out.push_back(exact_record("involution_antimultiplicative", base_params(config), t));
    }
    {
        Tally t;
        for (int i = 0; i < 200; ++i) {
            const AlgElement x = random_element(rng), y = random_element(rng);
            t.record(mul(x, y) == mul_by_generators(x, y) && mul(x, y) == mul_serial(x, y),
                     [&] { return "x = " + x.to_string() + ", y = " + y.to_string(); });
        }
        out.push_back(exact_record("product_matches_generator_rewriting", base_params(config), t));
    }
    {
        Tally t;
        for (int i = 0; i < 200; ++i) {
            const AlgElement x = random_element(rng);
            t.record(parse_element(x.to_string()) == x && element_from_json(to_json(x)) == x,
                     [&] { return x.to_string(); });
        }
        out.push_back(exact_record("text_and_json_roundtrip", base_params(config), t));
    }
    return out;
}

// ---- gluing --------------------------------------------------------------------------

std::vector<CheckRecord> gluing_suite(const VerifyConfig& config) {
    std::vector<CheckRecord> out;
    {
        Tally t;
        for (int mu = -6; mu <= 6; ++mu)
            for (int nu = -6; nu <= 6; ++nu)
                for (int d = 0; d <= 3; ++d)
                    for (int side = 0; side < (d == 0 ? 1 : 2); ++side) {
                        const BasisMonomial mono{mu, side == 0 ? d : 0, side == 1 ? d : 0, nu};
                        if (mono.degree() > 6) continue;
                        t.record(gluing_check(AlgElement::monomial(mono)), [&] { return to_string(mono); });
                    }
        out.push_back(exact_record("gluing_on_basis_monomials", Json{{"max_degree", 6}}, t));
    }
    std::mt19937_64 rng(config.seed);
    {
        Tally t;
        for (int i = 0; i < 100; ++i) {
            const AlgElement x = random_element(rng);
            t.record(gluing_check(x), [&] { return x.to_string(); });
        }
        out.push_back(exact_record("gluing_on_random_elements", base_params(config), t));
    }
    {
        Tally t;
        for (int i = 0; i < 100; ++i) {
            const AlgElement x = random_element(rng);
            for (Param leg : {Param::p, Param::q})
                t.record(chi_after_coaction(x, leg) == coproduct_after_chi(x, leg), [&] { return x.to_string(); });
        }
        out.push_back(exact_record("trivialization_colinearity", base_params(config), t));
    }
    {
        Tally t;
        for (int i = 0; i < 100; ++i) {
            const S2Polynomial f = random_base_polynomial(rng);
            const AlgElement x = iota(f);
            for (Param leg : {Param::p, Param::q}) {
                const TrivializedElement c = chi(x, leg);
                bool base_only = true;
                for (const auto& [key, coeff] : c.terms()) base_only = base_only && key.second == 0;
                t.record(base_only, [&] { return x.to_string(); });
            }
        }
        out.push_back(exact_record("trivialization_over_base", base_params(config), t));
    }
    return out;
}

// ---- galois --------------------------------------------------------------------------

std::vector<CheckRecord> galois_suite(const VerifyConfig&) {
    std::vector<CheckRecord> out;
    constexpr int k_max = 8;
    {
        const ConnectionReport report = check_connection_properties(k_max);
        CheckRecord r;
        r.check_name = "strong_connection_identities";
        r.params = Json{{"k_max", k_max}};
        r.defect = static_cast<double>(report.failures.size());
        r.pass = report.pass();
        if (!report.pass()) {
            const auto& f = report.failures.front();
            r.detail = "k = " + std::to_string(f.k) + ": " + f.identity + " off by " + f.difference;
        }
        out.push_back(r);
    }
    {
        Tally t;
        for (int n = 1; n <= k_max; ++n)
            for (int sign : {1, -1})
                t.record(strong_connection(sign * n) == strong_connection_closed(n, sign),
                         [&] { return "k = " + std::to_string(sign * n); });
        out.push_back(exact_record("recursion_matches_closed_form", Json{{"k_max", k_max}}, t));
    }
    {
        Tally t;
        for (int n = 1; n <= k_max; ++n)
            for (int sign : {1, -1}) {
                const AlgElement m = multiply_legs(strong_connection_closed(n, sign));
                t.record(m == AlgElement::unit(), [&] { return "n = " + std::to_string(n) + ": " + m.to_string(); });
            }
        out.push_back(exact_record("partition_identities", Json{{"n_max", k_max}}, t));
    }
    {
        Tally t;
        for (int k = -6; k <= 6; ++k) {
            const TensorElement w = galois_witness(k);
            t.record(lifted_can(w) == unit_cotensor(k) && w == strong_connection(k),
                     [&] { return "k = " + std::to_string(k); });
        }
        out.push_back(exact_record("galois_witnesses", Json{{"k_max", 6}}, t));
    }
    return out;
}

// ---- chern ---------------------------------------------------------------------------

std::vector<CheckRecord> chern_suite(const VerifyConfig& config) {
    std::vector<CheckRecord> out;
    {
        Tally t;
        for (int n = 1; n <= 5; ++n)
            for (int mu : {-n, n}) {
                const CoinvariantMatrix e = idempotent(mu);
                t.record(matrix_product(e, e) == e && e.all_coinvariant(), [&] { return "mu = " + std::to_string(mu); });
            }
        out.push_back(exact_record("idempotents", Json{{"n_max", 5}}, t));
    }
    {
        Tally t;
        const ParamScalar v = pairing(-1);
        t.record(v == ParamScalar(-1), [&] { return "pairing(-1) = " + v.to_string(); });
        out.push_back(exact_record("pairing_minus_one", Json::object(), t));
    }
    {
        Tally t;
        Json values = Json::object();
        for (int n = 1; n <= 5; ++n)
            for (int mu : {-n, n}) {
                const ParamScalar v = pairing(mu);
                values[std::to_string(mu)] = v.to_string();
                t.record(v.is_integer(), [&] { return "pairing(" + std::to_string(mu) + ") = " + v.to_string(); });
            }
        out.push_back(exact_record("pairings_are_integers", Json{{"values", values}}, t));
    }
    {
        Tally t;
        const ParamScalar one(1);
        const ParamScalar t1 = trace_functional(AlgElement::unit());
        const ParamScalar t2 = trace_functional(AlgElement::monomial({0, 1, 0, 0}));
        const ParamScalar t3 = trace_functional(AlgElement::monomial({0, 0, 2, 0}));
        t.record(t1.is_zero(), [&] { return "tr(1) = " + t1.to_string(); });
        t.record(t2 == one / (one - ParamScalar::q()), [&] { return "tr(1 - a a^*) = " + t2.to_string(); });
        t.record(t3 == -one / (one - ParamScalar::p().pow(2)), [&] { return "tr((1 - b b^*)^2) = " + t3.to_string(); });
        out.push_back(exact_record("trace_anchor_values", Json::object(), t));
    }
    std::mt19937_64 rng(config.seed);
    {
        Tally t;
        for (int i = 0; i < 200; ++i) {
            const AlgElement x = random_coinvariant(rng), y = random_coinvariant(rng);
            t.record(trace_functional(mul(x, y)) == trace_functional(mul(y, x)),
                     [&] { return "x = " + x.to_string() + ", y = " + y.to_string(); });
        }
        out.push_back(exact_record("trace_is_tracial", base_params(config), t));
    }
    {
        // Numeric truncated traces of every coinvariant basis monomial with m + n <= 6, |mu| <= 3.
        const double p = config.p.get_d(), q = config.q.get_d();
        std::vector<AlgElement> monomials;
        for (int mu = -3; mu <= 3; ++mu)
            for (int d = 0; d <= 6; ++d)
                for (int side = 0; side < (d == 0 ? 1 : 2); ++side)
                    monomials.push_back(AlgElement::monomial({mu, side == 0 ? d : 0, side == 1 ? d : 0, mu}));
        const std::vector<NumericTrace> traces = numeric_traces(monomials, config.N, p, q);
        double worst = 0.0;
        std::string detail;
        for (std::size_t i = 0; i < monomials.size(); ++i) {
            const double exact = trace_functional(monomials[i]).eval(p, q);
            const double excess = std::abs(traces[i].value - exact) - traces[i].tail_bound;
            if (excess > worst) {
                worst = excess;
                detail = monomials[i].to_string();
            }
        }
        Json params = numeric_params(config);
        params["instances"] = monomials.size();
        out.push_back(numeric_record("trace_matches_truncated_trace", params, worst, 1e-9, detail));
    }
    {
        const double p = config.p.get_d(), q = config.q.get_d();
        double worst = 0.0;
        for (int mu : {-2, -1, 1, 2}) {
            const NumericTrace t = numeric_trace(matrix_trace(idempotent(mu)), config.N, p, q);
            worst = std::max(worst, std::abs(t.value - pairing(mu).eval(p, q)) - t.tail_bound);
        }
        out.push_back(numeric_record("pairing_matches_truncated_trace", numeric_params(config), worst, 1e-9));
    }
    return out;
}

// ---- numeric -------------------------------------------------------------------------

std::vector<CheckRecord> numeric_suite(const VerifyConfig& config) {
    std::vector<CheckRecord> out;
    const double p = config.p.get_d(), q = config.q.get_d();
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

    {
        double worst = 0.0;
        for (int N : {10, 50, 200})
            for (Family family : {Family::rho1, Family::rho2, Family::classical})
                for (int i = 0; i < 5; ++i) {
                    const TruncatedRep rep = build_rep(family, angle(rng), angle(rng), N, p, q);
                    for (double d : relation_defects(rep)) worst = std::max(worst, d);
                }
        Json params = numeric_params(config);
        params["N"] = Json::array({10, 50, 200});
        params["phases_per_family"] = 5;
        out.push_back(numeric_record("relations_in_truncated_reps", params, worst, 1e-12));
    }
    {
        double worst = 0.0;
        for (int N : {10, 50, 200})
            for (Family family : {Family::rho1, Family::rho2})
                worst = std::max(worst, spectrum_check(build_rep(family, 0.0, 0.0, N, p, q)).max_deviation);
        Json params = numeric_params(config);
        params["N"] = Json::array({10, 50, 200});
        out.push_back(numeric_record("defect_spectra", params, worst, 1e-10));
    }
    {
        double worst = 0.0;
        const int N = std::min(config.N, 60);
        for (int i = 0; i < 200; ++i) {
            const AlgElement x = random_element(rng), y = random_element(rng);
            const Family family = i % 2 == 0 ? Family::rho1 : Family::rho2;
            worst = std::max(worst, homomorphism_defect(x, y, build_rep(family, angle(rng), 0.0, N, p, q)));
        }
        Json params = numeric_params(config);
        params["N"] = N;
        params["instances"] = 200;
        out.push_back(numeric_record("evaluation_is_multiplicative", params, worst, 1e-10));
    }
    {
        double eig_gap = 0.0, defect = 0.0;
        for (Family family : {Family::rho1, Family::rho2})
            for (Generator g : {Generator::a, Generator::b}) {
                const PolarReport r = polar_isometry_check(build_rep(family, angle(rng), 0.0, 100, p, q), g);
                eig_gap = std::max(eig_gap, r.lower_bound - r.min_eigenvalue);
                defect = std::max(defect, r.isometry_defect);
            }
        Json params = numeric_params(config);
        params["N"] = 100;
        out.push_back(numeric_record("polar_parts_lower_bound", params, std::max(eig_gap, 0.0), 1e-10));
        out.push_back(numeric_record("polar_parts_isometric", params, defect, 1e-10));
    }
    {
        const MvnReport r = mvn_witness_check(10);
        const double defect = std::max({r.range_defect, r.source_defect, r.partial_isometry_defect});
        out.push_back(numeric_record("murray_von_neumann_witness", Json{{"N", 10}, {"projection_rank", r.projection_rank}},
                                     r.projection_rank == 1 ? defect : INFINITY, 1e-12));
    }
    {
        Tally t;
        for (int i = 0; i < 100; ++i) {
            const AlgElement x = nonzero_random(rng);
            t.record(faithfulness_search(x, 20, 5, config.seed + i, p, q).witness_found, [&] { return x.to_string(); });
        }
        const AlgElement relation = parse_element("a^* a - 1 + q (1 - a a^*)");
        t.record(relation.is_zero() && !faithfulness_search(relation, 20, 5, config.seed, p, q).witness_found,
                 [&] { return "relation element " + relation.to_string(); });
        Json params = numeric_params(config);
        params["N"] = 20;
        params["trials"] = 5;
        out.push_back(exact_record("faithfulness_witnesses", params, t));
    }
    return out;
}

// ---- classical -----------------------------------------------------------------------

std::vector<CheckRecord> classical_suite(const VerifyConfig& config) {
    const ClassicalReport r = classical_maps_check(1000, config.seed);
    Json params{{"samples", 1000}, {"seed", config.seed}};
    std::vector<CheckRecord> out;
    out.push_back(numeric_record("classical_f_after_g", params, r.f_after_g, 1e-12));
    out.push_back(numeric_record("classical_g_after_f", params, r.g_after_f, 1e-12));
    out.push_back(numeric_record("classical_membership", params, r.membership, 1e-12));
    out.push_back(numeric_record("classical_equivariance", params, r.equivariance, 1e-12));
    return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"algebra", "gluing", "galois", "chern", "numeric", "classical"};
    return names;
}

std::vector<CheckRecord> run_suite(const std::string& name, const VerifyConfig& config) {
    if (name == "algebra") return algebra_suite(config);
    if (name == "gluing") return gluing_suite(config);
    if (name == "galois") return galois_suite(config);
    if (name == "chern") return chern_suite(config);
    if (name == "numeric") return numeric_suite(config);
    if (name == "classical") return classical_suite(config);
    if (name == "all") {
        std::vector<CheckRecord> out;
        for (const auto& suite : suite_names()) {
            auto part = run_suite(suite, config);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

Json to_json(const CheckRecord& r) {
    Json j{{"check_name", r.check_name}, {"params", r.params}, {"defect", r.defect},
           {"tolerance", r.tolerance}, {"pass", r.pass}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

}  // namespace qhopf
