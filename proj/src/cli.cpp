#include "disckit/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "disckit/error.hpp"
#include "disckit/etale.hpp"
#include "disckit/expr.hpp"
#include "disckit/jet.hpp"
#include "disckit/oracle.hpp"
#include "disckit/repdims.hpp"
#include "disckit/resultant.hpp"

namespace disckit::cli {

namespace {

using json = nlohmann::ordered_json;

/* An Error plus the rendered source excerpt that caused it. */
struct Diagnosed {
    Error error;
    std::string diagnostic;
};

int exit_code(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Parse: return kParseError;
    case ErrorKind::Ring:
    case ErrorKind::Parameter: return kRingError;
    case ErrorKind::Budget: return kBudgetError;
    case ErrorKind::Internal: return kInternalError;
    }
    return kInternalError;
}

template <class F>
auto with_source(const std::string& flag, const std::string& src, F&& parse) {
    try {
        return parse();
    } catch (const Error& e) {
        std::string diag;
        if (e.has_position())
            diag = "in " + flag + ":\n" + caret_diagnostic(src, e.line(), e.column());
        throw Diagnosed{e, diag};
    }
}

Ring ring_arg(const std::string& src) {
    return with_source("--ring", src, [&] { return parse_ring(src); });
}

UniPoly poly_arg(const std::string& flag, const std::string& src, const Ring& ring,
                 const std::string& var) {
    return with_source(flag, src, [&] { return parse_unipoly(src, ring, var); });
}

json verdict_json(const Stratum& s) {
    json v;
    v["kind"] = to_string(s.verdict);
    if (s.verdict == StratumVerdict::EtaleOfDegree) v["degree"] = s.residual_degree;
    if (s.verdict == StratumVerdict::Unsupported) v["reason"] = s.reason;
    return v;
}

json elements_json(const std::vector<Element>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(to_string(x));
    return a;
}

json stratum_json(const Stratum& s) {
    json j;
    j["ring"] = s.ring.to_string();
    j["inverted"] = elements_json(s.inverted);
    j["quotiented"] = elements_json(s.quotiented);
    j["residual_poly"] = print_poly(s.residual_poly);
    j["residual_degree"] = s.residual_degree;
    j["discriminant"] = to_string(s.discriminant);
    j["verdict"] = verdict_json(s);
    return j;
}

json chart_json(ChartId c) { return json{{"section", c.section}, {"affine", c.affine}}; }

json verify_json(const VerifyReport& r) {
    json j;
    j["d"] = r.d;
    j["l"] = r.l;
    j["q"] = r.q;
    j["chart"] = chart_json(r.chart);
    j["ideal_zero_count"] = r.ideal_zero_count;
    j["mult_root_count"] = r.mult_root_count;
    json sound = json::array(), complete = json::array();
    for (const auto& m : r.mismatches)
        (m.direction == MismatchDirection::Soundness ? sound : complete).push_back(m.point);
    j["soundness_mismatches"] = sound;
    j["completeness_mismatches"] = complete;
    return j;
}

/* Plain text rendering; depends on the payload only. */
std::string render_plain(const std::string& command, const json& p) {
    std::ostringstream o;
    auto list = [&](const json& a) {
        std::string s;
        for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + a[i].get<std::string>();
        return "[" + s + "]";
    };
    if (command == "resultant") {
        o << p["resultant"].get<std::string>() << "\n";
    } else if (command == "discriminant") {
        o << "discriminant: " << p["discriminant"].get<std::string>() << "\n";
        o << "class: " << (p["class"].is_null() ? "n/a" : p["class"].get<std::string>()) << "\n";
    } else if (command == "disc-ideal") {
        for (const auto& g : p["generators"]) o << g.get<std::string>() << "\n";
    } else if (command == "charts") {
        for (const auto& r : p["rows"]) {
            o << "j=" << r["j"] << " " << r["relation"].get<std::string>();
            if (!r["sign"].is_null()) o << " sign=" << r["sign"];
            if (!r["factor"].is_null()) o << " factor=" << r["factor"].get<std::string>();
            if (!r["quotient"].is_null()) o << " quotient=" << r["quotient"].get<std::string>();
            o << "\n";
        }
        o << "all_integer_multiples: " << (p["all_integer_multiples"].get<bool>() ? "yes" : "no")
          << "\n";
    } else if (command == "etale") {
        if (!p["verdict"].is_null()) {
            o << "verdict: " << p["verdict"].get<std::string>() << "\n";
            o << "discriminant: " << p["discriminant"].get<std::string>() << "\n";
        }
        if (p.contains("strata")) {
            std::size_t k = 0;
            for (const auto& s : p["strata"]) {
                o << "stratum " << ++k << ": " << s["verdict"]["kind"].get<std::string>();
                if (s["verdict"].contains("degree")) o << " degree " << s["verdict"]["degree"];
                o << " | ring " << s["ring"].get<std::string>() << " | inverted "
                  << list(s["inverted"]) << " | quotiented " << list(s["quotiented"])
                  << " | P = " << s["residual_poly"].get<std::string>() << " | b = "
                  << s["discriminant"].get<std::string>();
                if (s["verdict"].contains("reason"))
                    o << " | " << s["verdict"]["reason"].get<std::string>();
                o << "\n";
            }
        }
    } else if (command == "dims") {
        if (p.contains("rows")) {
            for (const auto& r : p["rows"])
                o << "j=" << r["j"] << " twist=" << r["twist"]
                  << " dim=" << r["module_dim"].get<std::string>() << "\n";
        } else {
            o << "rank_jet: " << p["rank_jet"].get<std::string>() << "\n";
            if (p.contains("h_ext_jet")) {
                o << "h_ext_jet: " << p["h_ext_jet"].get<std::string>() << "\n";
                o << "h_ext_jet_dual: " << p["h_ext_jet_dual"].get<std::string>() << "\n";
            }
        }
    } else if (command == "verify") {
        o << "ideal_zero_count: " << p["ideal_zero_count"] << "\n";
        o << "mult_root_count: " << p["mult_root_count"] << "\n";
        o << "soundness_mismatches: " << p["soundness_mismatches"].size() << "\n";
        o << "completeness_mismatches: " << p["completeness_mismatches"].size() << "\n";
        if (p.contains("growth")) {
            const auto& g = p["growth"];
            o << "growth: " << g["count_q1"] << " -> " << g["count_q2"] << ", ratio "
              << (g["ratio"].is_null() ? std::string("n/a") : g["ratio"].dump())
              << ", expected " << g["expected"].dump() << ", within tolerance "
              << (g["within_tolerance"].get<bool>() ? "yes" : "no") << "\n";
        }
    }
    return o.str();
}

unsigned oracle_threads() {
    const char* env = std::getenv("DISCKIT_THREADS");
    if (!env || !*env) return 0;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1)
        throw Error(ErrorKind::Parameter, "DISCKIT_THREADS must be a positive integer");
    return static_cast<unsigned>(v);
}

double round6(double x) { return std::round(x * 1e6) / 1e6; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Resultants, discriminants, etale strata and jet dimension tables", "disckit"};
    app.require_subcommand(1);
    std::string format = "plain";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"plain", "json"}));
    };

    std::string f_src, g_src, p_src, ring_src = "ZZ", var = "t";
    std::optional<long> deg_f, deg_g;
    auto* res = app.add_subcommand("resultant", "Sylvester resultant Res_{m,n}(F, G)");
    res->add_option("--f", f_src, "F")->required();
    res->add_option("--g", g_src, "G")->required();
    res->add_option("--ring", ring_src, "Coefficient ring, e.g. ZZ[b,c]");
    res->add_option("--var", var, "Main variable");
    res->add_option("--deg-f", deg_f, "Declared degree m of F");
    res->add_option("--deg-g", deg_g, "Declared degree n of G");
    add_format(res);

    auto* disc = app.add_subcommand("discriminant", "Discr(P) = Res_{d,d-1}(P, P')");
    disc->add_option("--p", p_src, "P")->required();
    disc->add_option("--ring", ring_src, "Coefficient ring");
    disc->add_option("--var", var, "Main variable");
    add_format(disc);

    int d = 0, l = 0;
    std::optional<int> section;
    int affine = 0;
    bool homogeneous = false;
    auto* ideal = app.add_subcommand("disc-ideal", "Generators P_j of the discriminant ideal");
    ideal->add_option("--d", d, "Degree d")->required();
    ideal->add_option("--l", l, "Jet order l")->required();
    ideal->add_option("--i", section, "Inverted section y_i (default d)");
    ideal->add_option("--chart", affine, "Affine chart of P^1 (0: t, 1: s)");
    ideal->add_flag("--homogeneous", homogeneous, "Classical discriminant in y0..yd");
    add_format(ideal);

    auto* charts = app.add_subcommand("charts", "Compare P_j (t-chart) with Q_j (s-chart)");
    charts->add_option("--d", d, "Degree d")->required();
    charts->add_option("--l", l, "Jet order l")->required();
    charts->add_option("--i", section, "Inverted section y_i (default d)");
    add_format(charts);

    bool strata = false;
    auto* etale = app.add_subcommand("etale", "Etale verdict and stratification of A[t]/P");
    etale->add_option("--p", p_src, "P")->required();
    etale->add_option("--ring", ring_src, "Coefficient ring");
    etale->add_option("--var", var, "Main variable");
    etale->add_flag("--strata", strata, "Emit the full stratification");
    add_format(etale);

    long N = 0, dd = 0, k = 0;
    std::optional<long> j_opt, i_opt;
    bool table = false;
    auto* dims = app.add_subcommand("dims", "Jet bundle cohomology and discriminant complex ranks");
    dims->add_option("--N", N, "Projective dimension N")->required();
    dims->add_option("--d", dd, "Degree d")->required();
    dims->add_option("--k", k, "Jet order k")->required();
    dims->add_option("--j", j_opt, "Exterior power j");
    dims->add_option("--i", i_opt, "Cohomology index i");
    dims->add_flag("--table", table, "Discriminant complex rank table");
    add_format(dims);

    std::uint64_t q = 0, budget = 10'000'000;
    std::optional<std::uint64_t> q2;
    auto* verify = app.add_subcommand("verify", "Finite-field check of the discriminant locus");
    verify->add_option("--d", d, "Degree d")->required();
    verify->add_option("--l", l, "Jet order l")->required();
    verify->add_option("--q", q, "Prime field size")->required();
    verify->add_option("--q2", q2, "Second field size for the growth check");
    verify->add_option("--budget", budget, "Maximum number of enumerated points");
    add_format(verify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }

    const CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    json payload;
    try {
        if (sub == res) {
            const Ring ring = ring_arg(ring_src);
            const UniPoly f = poly_arg("--f", f_src, ring, var);
            const UniPoly g = poly_arg("--g", g_src, ring, var);
            if (f.is_zero() || g.is_zero())
                throw Error(ErrorKind::Parameter, "resultant of the zero polynomial");
            if ((deg_f && *deg_f < 0) || (deg_g && *deg_g < 0))
                throw Error(ErrorKind::Parameter, "declared degrees must be nonnegative");
            const SylvesterSpec s{deg_f ? static_cast<std::size_t>(*deg_f) : f.degree().value(),
                                  deg_g ? static_cast<std::size_t>(*deg_g) : g.degree().value()};
            payload["resultant"] = to_string(resultant(f, g, s));
            payload["m"] = s.m;
            payload["n"] = s.n;
            payload["ring"] = ring.to_string();
            payload["var"] = var;
        } else if (sub == disc) {
            const Ring ring = ring_arg(ring_src);
            const UniPoly p = poly_arg("--p", p_src, ring, var);
            const Element b = discriminant(p);
            payload["discriminant"] = to_string(b);
            payload["class"] = p.is_monic() ? json(to_string(classify_discriminant(p).kind))
                                            : json(nullptr);
            payload["degree"] = p.degree().value();
            payload["ring"] = ring.to_string();
            payload["var"] = var;
        } else if (sub == ideal) {
            payload["d"] = d;
            payload["l"] = l;
            payload["homogeneous"] = homogeneous;
            if (homogeneous) {
                if (l != 1)
                    throw Error(ErrorKind::Parameter, "--homogeneous is the l = 1 discriminant");
                const Element h = homogeneous_classical_discriminant(d);
                payload["chart"] = nullptr;
                payload["ring"] = h.ring().to_string();
                payload["generators"] = json::array({to_string(h)});
            } else {
                const ChartId chart{section.value_or(d), affine};
                const IdealGens gens = discriminant_ideal(d, l, chart);
                payload["chart"] = chart_json(chart);
                payload["ring"] = gens.ring.to_string();
                payload["generators"] = elements_json(gens.gens);
            }
        } else if (sub == charts) {
            const ChartConsistencyReport r = chart_consistency(d, l, section.value_or(d));
            payload["d"] = r.d;
            payload["l"] = r.l;
            payload["i"] = r.section;
            json rows = json::array();
            for (const auto& row : r.rows) {
                json x;
                x["j"] = row.j;
                x["p"] = to_string(row.p);
                x["q"] = to_string(row.q);
                x["relation"] = to_string(row.relation);
                x["sign"] = row.sign ? json(row.sign) : json(nullptr);
                const bool constant = row.relation == ChartRelation::IntegerMultiple ||
                                      row.relation == ChartRelation::RationalMultiple;
                x["factor"] = constant ? json(row.factor.get_str()) : json(nullptr);
                x["quotient"] = row.quotient ? json(to_string(*row.quotient)) : json(nullptr);
                rows.push_back(std::move(x));
            }
            payload["rows"] = rows;
            payload["all_integer_multiples"] = r.all_integer_multiples();
        } else if (sub == etale) {
            const Ring ring = ring_arg(ring_src);
            const UniPoly p = poly_arg("--p", p_src, ring, var);
            if (p.is_monic()) {
                const EtaleVerdict v = etale_verdict(p);
                payload["verdict"] = to_string(v.kind);
                payload["discriminant"] = to_string(v.discriminant);
            } else if (!strata) {
                throw Error(ErrorKind::Parameter,
                            "P is not monic; pass --strata for the stratification");
            } else {
                payload["verdict"] = nullptr;
                payload["discriminant"] = nullptr;
            }
            payload["ring"] = ring.to_string();
            if (strata) {
                json list = json::array();
                for (const auto& s : main1_strata(p)) list.push_back(stratum_json(s));
                payload["strata"] = list;
            }
        } else if (sub == dims) {
            payload["N"] = N;
            payload["d"] = dd;
            payload["k"] = k;
            if (table) {
                json rows = json::array();
                for (const auto& t : complex_table(N, dd, k))
                    rows.push_back({{"j", t.j}, {"twist", t.twist},
                                    {"module_dim", t.module_dim.get_str()}});
                payload["rows"] = rows;
            } else {
                payload["rank_jet"] = rank_jet(k, N).get_str();
                if (j_opt.has_value() != i_opt.has_value())
                    throw Error(ErrorKind::Parameter, "--j and --i must be given together");
                if (j_opt) {
                    payload["j"] = *j_opt;
                    payload["i"] = *i_opt;
                    payload["h_ext_jet"] = h_ext_jet(N, dd, k, *j_opt, *i_opt).get_str();
                    payload["h_ext_jet_dual"] = h_ext_jet_dual(N, dd, k, *j_opt, *i_opt).get_str();
                }
            }
        } else if (sub == verify) {
            OracleOptions opts{budget, oracle_threads()};
            payload = verify_json(verify_discriminant_locus(d, l, q, {d, 0}, opts));
            if (q2) {
                const GrowthReport g = dimension_growth_check(d, l, q, *q2, opts);
                json gj;
                gj["q1"] = q;
                gj["q2"] = *q2;
                gj["count_q1"] = g.count_q1;
                gj["count_q2"] = g.count_q2;
                gj["ratio"] = g.ratio ? json(round6(*g.ratio)) : json(nullptr);
                gj["expected"] = round6(g.expected);
                gj["within_tolerance"] = g.within_tolerance;
                payload["growth"] = gj;
            }
        }
    } catch (const Diagnosed& e) {
        json env{{"schema", kSchemaId}, {"command", command}, {"status", "error"}};
        json ep{{"kind", to_string(e.error.kind())}, {"message", e.error.what()}};
        if (e.error.has_position()) {
            ep["line"] = e.error.line();
            ep["column"] = e.error.column();
        }
        env["payload"] = ep;
        env["diagnostics"] = e.diagnostic.empty() ? json::array() : json::array({e.diagnostic});
        if (format == "json") out << env.dump(2) << "\n";
        err << "error: " << e.error.what() << "\n";
        if (!e.diagnostic.empty()) err << e.diagnostic << "\n";
        return exit_code(e.error.kind());
    } catch (const Error& e) {
        json env{{"schema", kSchemaId}, {"command", command}, {"status", "error"}};
        env["payload"] = json{{"kind", to_string(e.kind())}, {"message", e.what()}};
        env["diagnostics"] = json::array();
        if (format == "json") out << env.dump(2) << "\n";
        err << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }

    if (format == "json") {
        json env{{"schema", kSchemaId}, {"command", command}, {"status", "ok"}};
        env["payload"] = payload;
        env["diagnostics"] = json::array();
        out << env.dump(2) << "\n";
    } else {
        out << render_plain(command, payload);
    }
    return kOk;
}

}  // namespace disckit::cli
