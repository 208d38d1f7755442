#include "qhopf/cli.hpp"

#include "qhopf/expr.hpp"
#include "qhopf/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>

namespace qhopf {

namespace {

struct Options {
    std::string p_text, q_text;
    int N = 300;
    std::optional<std::uint64_t> seed;
    int k = 1;
    int mu = -1;
    bool json = true;
    std::vector<std::string> inputs;
    std::string suite;
};

/// Raised for malformed input; maps to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

mpq_class parse_rational(const std::string& text, const char* flag) {
    ParamScalar s;
    try {
        s = ParamScalar::parse(text);
    } catch (const std::exception& e) {
        throw InputError(std::string(flag) + ": " + e.what());
    }
    if (!s.is_constant()) throw InputError(std::string(flag) + " expects a number, got '" + text + "'");
    return s.constant_value();
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("QHOPF_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw InputError(std::string("QHOPF_SEED is not an integer: ") + env);
        }
    }
    return 7;
}

/// Optional exact specialization of p and q in symbolic output.
struct Specialization {
    std::optional<mpq_class> p, q;

    bool active() const { return p || q; }
    ParamScalar apply(const ParamScalar& s) const {
        if (!active()) return s;
        return s.substitute(p ? &*p : nullptr, q ? &*q : nullptr);
    }
    AlgElement apply(const AlgElement& x) const {
        if (!active()) return x;
        AlgElement out;
        for (const auto& [mono, c] : x.terms()) out.add_term(mono, apply(c));
        return out;
    }
    LaurentElement apply(const LaurentElement& x) const {
        if (!active()) return x;
        LaurentElement out;
        for (const auto& [k, c] : x.terms()) out.add_term(k, apply(c));
        return out;
    }
    Value apply(const Value& v) const {
        return std::visit([&](const auto& x) -> Value { return apply(x); }, v);
    }
    CotensorElement apply(const CotensorElement& x) const {
        if (!active()) return x;
        CotensorElement out;
        for (const auto& [key, c] : x.terms()) out.add_term(key.first, key.second, apply(c));
        return out;
    }
    TensorElement apply(const TensorElement& x) const {
        if (!active()) return x;
        TensorElement out;
        for (const auto& [key, c] : x.terms()) out.add_term(key.first, key.second, apply(c));
        return out;
    }
    CoinvariantMatrix apply(const CoinvariantMatrix& e) const {
        if (!active()) return e;
        CoinvariantMatrix out(e.rows(), e.cols());
        for (std::size_t i = 0; i < e.rows(); ++i)
            for (std::size_t j = 0; j < e.cols(); ++j) out.at(i, j) = apply(e.at(i, j));
        return out;
    }
    Json params() const {
        Json j = Json::object();
        if (p) j["p"] = p->get_str();
        if (q) j["q"] = q->get_str();
        return j;
    }
};

Json value_json(const Value& v) {
    return std::visit([](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ParamScalar>) return Json{{"kind", "scalar"}, {"value", x.to_string()}};
        else if constexpr (std::is_same_v<T, AlgElement>)
            return Json{{"kind", "element"}, {"value", x.to_string()}, {"terms", to_json(x)}};
        else return Json{{"kind", "laurent"}, {"value", x.to_string()}, {"terms", to_json(x)}};
    }, v);
}

Value parse_input(const std::string& text) {
    try {
        return evaluate_text(text);
    } catch (const ParseError& e) {
        throw InputError(std::string("parse error: ") + e.what());
    } catch (const std::domain_error& e) {
        throw InputError(e.what());
    }
}

AlgElement parse_algebra_input(const std::string& text) {
    const Value v = parse_input(text);
    if (std::holds_alternative<LaurentElement>(v)) throw InputError("expected an element of O(S^3_pq): " + text);
    if (const auto* s = std::get_if<ParamScalar>(&v)) return AlgElement(*s);
    return std::get<AlgElement>(v);
}

Json envelope(const std::string& command) { return Json{{"schema", 1}, {"command", command}}; }

struct Output {
    Json json;
    std::string text;
    int exit_code = 0;
    std::string err;
};

// ---- commands -------------------------------------------------------------------------

Output cmd_normalize(const Options& o, const Specialization& sp) {
    const Value v = sp.apply(parse_input(o.inputs.at(0)));
    Output out;
    out.json = envelope("normalize");
    out.json["input"] = o.inputs[0];
    if (sp.active()) out.json["specialize"] = sp.params();
    out.json.update(value_json(v));
    out.text = to_string(v);
    return out;
}

Output cmd_mul(const Options& o, const Specialization& sp) {
    const Value x = parse_input(o.inputs.at(0));
    const Value y = parse_input(o.inputs.at(1));
    const bool circle = std::holds_alternative<LaurentElement>(x) || std::holds_alternative<LaurentElement>(y);
    const bool sphere = std::holds_alternative<AlgElement>(x) || std::holds_alternative<AlgElement>(y);
    if (circle && sphere) throw InputError("cannot multiply an element of O(S^3_pq) with one of O(U(1))");
    Value product;
    if (circle) {
        auto lift = [](const Value& v) {
            if (const auto* s = std::get_if<ParamScalar>(&v)) return LaurentElement(*s);
            return std::get<LaurentElement>(v);
        };
        product = lift(x) * lift(y);
    } else if (sphere) {
        product = mul(parse_algebra_input(o.inputs[0]), parse_algebra_input(o.inputs[1]));
    } else {
        product = std::get<ParamScalar>(x) * std::get<ParamScalar>(y);
    }
    product = sp.apply(product);
    Output out;
    out.json = envelope("mul");
    out.json["inputs"] = o.inputs;
    out.json.update(value_json(product));
    out.text = to_string(product);
    return out;
}

Output cmd_star(const Options& o, const Specialization& sp) {
    const Value v = parse_input(o.inputs.at(0));
    const Value s = sp.apply(std::visit([](const auto& x) -> Value {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ParamScalar>) return x;
        else return star(x);
    }, v));
    Output out;
    out.json = envelope("star");
    out.json["input"] = o.inputs[0];
    out.json.update(value_json(s));
    out.text = to_string(s);
    return out;
}

Output cmd_winding(const Options& o, const Specialization& sp) {
    const AlgElement x = sp.apply(parse_algebra_input(o.inputs.at(0)));
    Output out;
    out.json = envelope("winding");
    out.json["input"] = o.inputs[0];
    Json parts = Json::array();
    std::ostringstream text;
    for (const auto& [w, part] : winding_decompose(x)) {
        // The U(1)-degree label is the negated winding.
        parts.push_back(Json{{"winding", w}, {"degree", -w}, {"value", part.to_string()}, {"terms", to_json(part)}});
        text << "winding " << std::setw(3) << w << ": " << part.to_string() << "\n";
    }
    out.json["components"] = parts;
    out.json["coinvariant"] = is_coinvariant(x);
    out.text = text.str();
    if (!out.text.empty()) out.text.pop_back();
    if (x.is_zero()) out.text = "0";
    return out;
}

Output cmd_coaction(const Options& o, const Specialization& sp) {
    const CotensorElement c = sp.apply(coaction(parse_algebra_input(o.inputs.at(0))));
    Output out;
    out.json = envelope("coaction");
    out.json["input"] = o.inputs[0];
    out.json["value"] = c.to_string();
    out.json["terms"] = to_json(c);
    out.text = c.to_string();
    return out;
}

Output cmd_gluing(const Options& o, const Specialization&) {
    const AlgElement x = parse_algebra_input(o.inputs.at(0));
    const BoundaryTensor lhs = boundary_leg(chi(x, Param::p));
    const BoundaryTensor rhs = phi12(boundary_leg(chi(x, Param::q)));
    const bool ok = lhs == rhs;
    Output out;
    out.json = envelope("gluing-check");
    out.json["input"] = o.inputs[0];
    out.json["chi_p"] = chi(x, Param::p).to_string();
    out.json["chi_q"] = chi(x, Param::q).to_string();
    out.json["boundary_p"] = to_string(lhs);
    out.json["phi12_boundary_q"] = to_string(rhs);
    out.json["pass"] = ok;
    out.text = std::string(ok ? "PASS" : "FAIL") + "  (pi_p (x) id) chi_p = " + to_string(lhs) +
               "\n      phi12 (pi_q (x) id) chi_q = " + to_string(rhs);
    if (!ok) {
        out.exit_code = 1;
        out.err = "gluing condition fails: " + to_string(lhs) + " != " + to_string(rhs) + "\n";
    }
    return out;
}

Output cmd_connection(const Options& o, const Specialization& sp) {
    const TensorElement l = strong_connection(o.k);
    const CotensorElement can = lifted_can(l);
    const bool ok = can == unit_cotensor(o.k);
    const TensorElement shown = sp.apply(l);
    Output out;
    out.json = envelope("connection");
    out.json["k"] = o.k;
    out.json["terms"] = to_json(shown);
    out.json["lifted_can"] = can.to_string();
    out.json["pass"] = ok;
    out.text = "l(u^" + std::to_string(o.k) + ") = " + shown.to_string() + "\ncan = " + can.to_string();
    if (!ok) {
        out.exit_code = 1;
        out.err = "lifted canonical map gives " + can.to_string() + "\n";
    }
    return out;
}

Output cmd_idempotent(const Options& o, const Specialization& sp) {
    if (o.mu == 0) throw InputError("--mu must be nonzero");
    const CoinvariantMatrix e = idempotent(o.mu);
    const bool idem = matrix_product(e, e) == e;
    const bool coinv = e.all_coinvariant();
    const CoinvariantMatrix shown = sp.apply(e);
    Output out;
    out.json = envelope("idempotent");
    out.json["mu"] = o.mu;
    out.json["size"] = e.rows();
    out.json["entries"] = to_json(shown);
    out.json["idempotent"] = idem;
    out.json["coinvariant"] = coinv;
    out.text = shown.to_string();
    if (!idem || !coinv) {
        out.exit_code = 1;
        out.err = std::string(!idem ? "E^2 != E" : "entry is not coinvariant") + " for mu = " + std::to_string(o.mu) + "\n";
    }
    return out;
}

Output cmd_pairing(const Options& o, const Specialization& sp) {
    if (o.mu == 0) throw InputError("--mu must be nonzero");
    const ParamScalar v = sp.apply(pairing(o.mu));
    Output out;
    out.json = envelope("pairing");
    out.json["mu"] = o.mu;
    out.json["value"] = v.to_string();
    out.json["integer"] = v.is_integer();
    out.text = "<tr, [E_" + std::to_string(o.mu) + "]> = " + v.to_string();
    return out;
}

Output cmd_trace(const Options& o, const Specialization& sp) {
    const AlgElement x = parse_algebra_input(o.inputs.at(0));
    if (!is_coinvariant(x)) throw InputError("trace is defined on coinvariant elements only: " + x.to_string());
    const ParamScalar v = sp.apply(trace_functional(x));
    Output out;
    out.json = envelope("trace");
    out.json["input"] = o.inputs[0];
    out.json["value"] = v.to_string();
    out.text = v.to_string();
    return out;
}

Output cmd_verify(const Options& o) {
    VerifyConfig config;
    config.p = o.p_text.empty() ? mpq_class(1, 2) : parse_rational(o.p_text, "--p");
    config.q = o.q_text.empty() ? mpq_class(1, 3) : parse_rational(o.q_text, "--q");
    if (config.p <= 0 || config.p >= 1 || config.q <= 0 || config.q >= 1)
        throw InputError("numeric checks need 0 < p, q < 1");
    if (o.N < 10) throw InputError("--N must be at least 10");
    config.N = o.N;
    config.seed = o.seed ? *o.seed : default_seed();

    std::vector<CheckRecord> records;
    try {
        records = run_suite(o.suite, config);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }

    Output out;
    out.json = envelope("verify");
    out.json["suite"] = o.suite;
    out.json["params"] = Json{{"p", config.p.get_str()}, {"q", config.q.get_str()}, {"N", config.N}, {"seed", config.seed}};
    Json checks = Json::array();
    bool all = true;
    std::size_t width = 0;
    for (const auto& r : records) width = std::max(width, r.check_name.size());
    std::ostringstream text;
    for (const auto& r : records) {
        checks.push_back(to_json(r));
        all = all && r.pass;
        text << std::left << std::setw(static_cast<int>(width) + 2) << r.check_name << (r.pass ? "PASS" : "FAIL")
             << "  defect " << std::setprecision(3) << r.defect << "  tol " << r.tolerance << "\n";
        if (!r.pass) out.err += "FAIL " + r.check_name + (r.detail.empty() ? "" : ": " + r.detail) + "\n";
    }
    out.json["checks"] = checks;
    out.json["pass"] = all;
    out.text = text.str();
    if (!out.text.empty()) out.text.pop_back();
    out.exit_code = all ? 0 : 1;
    return out;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Exact computations in the quantum Hopf fibration O(S^2_pq) ⊂ O(S^3_pq)", "qhopf"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--p", o.p_text, "value of p (rational); specializes symbolic output");
        sub->add_option("--q", o.q_text, "value of q (rational); specializes symbolic output");
        sub->add_option("--N", o.N, "truncation dimension for numeric checks");
        sub->add_option("--seed", o.seed, "seed for sampled checks (default $QHOPF_SEED or 7)");
        auto* json = sub->add_flag("--json", o.json, "JSON output (default)");
        sub->add_flag("--text{false}", o.json, "plain text output")->excludes(json);
    };

    struct Spec {
        const char* name;
        const char* help;
        int inputs;
    };
    const std::vector<Spec> element_commands{
        {"normalize", "canonical form of an expression", 1},
        {"mul", "product of two expressions", 2},
        {"star", "involution", 1},
        {"winding", "decomposition by winding (U(1)-degree)", 1},
        {"coaction", "right coaction Delta_R", 1},
        {"gluing-check", "pullback condition for the two trivializations", 1},
        {"trace", "trace functional on a coinvariant element", 1},
    };
    for (const auto& s : element_commands) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        common(sub);
        sub->add_option("expr", o.inputs, "expression")->required()->expected(s.inputs);
    }
    CLI::App* connection = app.add_subcommand("connection", "strong connection l(u^k)");
    common(connection);
    connection->add_option("--k", o.k, "power of u")->required();
    for (const char* name : {"idempotent", "pairing"}) {
        CLI::App* sub = app.add_subcommand(name, name == std::string("pairing") ? "Chern-Connes pairing <tr, [E_mu]>"
                                                                                 : "idempotent E_mu");
        common(sub);
        sub->add_option("--mu", o.mu, "nonzero winding number")->required();
    }
    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    common(verify);
    verify->add_option("suite", o.suite, "algebra | gluing | galois | chern | numeric | classical | all")->required();

    CliResult result;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        result.out = app.help();
        return result;
    } catch (const CLI::ParseError& e) {
        result.exit_code = 2;
        result.err = std::string(e.what()) + "\nRun with --help for usage.\n";
        return result;
    }

    try {
        Specialization sp;
        CLI::App* chosen = app.get_subcommands().front();
        const std::string cmd = chosen->get_name();
        if (cmd != "verify") {
            if (!o.p_text.empty()) sp.p = parse_rational(o.p_text, "--p");
            if (!o.q_text.empty()) sp.q = parse_rational(o.q_text, "--q");
        }
        Output out;
        if (cmd == "normalize") out = cmd_normalize(o, sp);
        else if (cmd == "mul") out = cmd_mul(o, sp);
        else if (cmd == "star") out = cmd_star(o, sp);
        else if (cmd == "winding") out = cmd_winding(o, sp);
        else if (cmd == "coaction") out = cmd_coaction(o, sp);
        else if (cmd == "gluing-check") out = cmd_gluing(o, sp);
        else if (cmd == "trace") out = cmd_trace(o, sp);
        else if (cmd == "connection") out = cmd_connection(o, sp);
        else if (cmd == "idempotent") out = cmd_idempotent(o, sp);
        else if (cmd == "pairing") out = cmd_pairing(o, sp);
        else out = cmd_verify(o);

        result.exit_code = out.exit_code;
        result.err = out.err;
        result.out = (o.json ? out.json.dump(2) : out.text) + "\n";
    } catch (const InputError& e) {
        result.exit_code = 2;
        result.err = std::string("error: ") + e.what() + "\n";
    } catch (const std::domain_error& e) {
        result.exit_code = 2;
        result.err = std::string("error: ") + e.what() + "\n";
    }
    return result;
}

}  // namespace qhopf
