#include "harmonia/cli.hpp"

#include "harmonia/dunkl.hpp"
#include "harmonia/kz.hpp"
#include "harmonia/snspecial.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

namespace harmonia {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> exponents(Mono m, int n) {
    std::vector<int> e;
    for (int i = 0; i < n; ++i) e.push_back(static_cast<int>(mono::exp(m, i)));
    return e;
}

Mono mono_of(const std::vector<int>& e) {
    Mono m = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0 || e[i] > 255) throw std::invalid_argument("PolyDocument: exponent out of range");
        m += mono::unit(static_cast<int>(i)) * static_cast<unsigned>(e[i]);
    }
    return m;
}

std::string coord_string(const Cyclo& c, int order) {
    Cyclo x = c.order() == 0 ? Cyclo::rational_in(order, c.rational_part()) : c;
    std::string s = "[";
    for (std::size_t i = 0; i < x.coords().size(); ++i) {
        if (i) s += ',';
        s += x.coords()[i].to_string();
    }
    return s + "]";
}

json poly_json_list(const std::vector<PolyDocument>& docs) {
    json a = json::array();
    for (const auto& d : docs) a.push_back(d.to_json());
    return a;
}

void write_output(const std::string& path, const json& j, std::ostream& out) {
    const std::string text = j.dump(2) + "\n";
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

template <class F>
std::shared_ptr<const Group<F>> share(const Group<F>& g) {
    return std::make_shared<const Group<F>>(g);
}

template <class F>
PolyDocument document_for(const Group<F>& g, const Poly<F>& p) {
    if constexpr (std::is_same_v<F, Rational>) {
        return make_document(p, g.ambient_names());
    } else {
        return make_document(p, g.ambient_names(), g.field_order);
    }
}

// ----- subcommands -----

template <class F>
json group_info(const Group<F>& g) {
    json j;
    j["name"] = g.name;
    j["order"] = g.order;
    j["rank"] = g.work.dim;
    j["ambient_dim"] = g.ambient.dim;
    j["reflections"] = g.num_reflections();
    j["degrees"] = g.ambient.degrees;
    j["essential_degrees"] = g.work.degrees;
    j["field"] = g.field_order == 0 ? json{{"kind", "rational"}} : json{{"kind", "cyclotomic"}, {"order", g.field_order}};
    json rc = json::array();
    for (std::size_t a = 0; a < g.num_reflection_classes(); ++a) rc.push_back({{"id", a}, {"size", g.class_sizes[a]}});
    j["reflection_classes"] = rc;
    json cls = json::array();
    for (const auto& c : g.classes) cls.push_back({{"name", c.name}, {"size", c.size}});
    j["classes"] = cls;
    return j;
}

template <class F>
int cmd_poincare(const Group<F>& g, const std::string& mtext, const std::string& format, std::ostream& out) {
    CharacterTable t = character_table(g);
    auto m = parse_multiplicity(mtext, t.num_reflection_classes());
    PoincarePoly total = poincare_Hm_total(t, m);
    if (format == "csv") {
        out << "irrep,dim,P_H0,P_Hm\n";
        for (std::size_t j = 0; j < t.irreps.size(); ++j)
            out << '"' << t.irreps[j].name << "\"," << t.irreps[j].dim << ",\"" << poincare_H0(t, j).to_string() << "\",\""
                << poincare_Hm(t, m, j).to_string() << "\"\n";
        out << "total,," << '"' << classical_poincare(g.work.degrees).to_string() << "\",\"" << total.to_string() << "\"\n";
        return kExitOk;
    }
    json j;
    j["group"] = g.name;
    j["m"] = m;
    j["total"] = total.to_string();
    j["total_coefficients"] = total.c;
    j["top_degree"] = top_degree(t, m);
    json irr = json::array();
    for (std::size_t k = 0; k < t.irreps.size(); ++k) {
        std::vector<long> dm;
        for (std::size_t a = 0; a < t.num_reflection_classes(); ++a) dm.push_back(d_minus(t, k, a));
        irr.push_back({{"name", t.irreps[k].name},
                       {"dim", t.irreps[k].dim},
                       {"P_H0", poincare_H0(t, k).to_string()},
                       {"P_Hm", poincare_Hm(t, m, k).to_string()},
                       {"pi_m", t.irreps[pi_m(t, m, k)].name},
                       {"d_minus", dm}});
    }
    j["irreps"] = irr;
    out << j.dump(2) << "\n";
    return kExitOk;
}

template <class F>
int cmd_harmonics(const Group<F>& g, const std::string& mtext, const std::string& method, const std::string& path,
                  std::ostream& out) {
    auto gp = share(g);
    auto m = parse_multiplicity(mtext, g.num_reflection_classes());
    DunklContext<F> ctx(gp, m);
    GradedBasis<F> basis;
    if (method == "direct" || method == "both") basis = construct_Hm_direct(ctx);
    if (method == "kz" || method == "both") {
        KZSystem<F> kz(std::make_shared<const Harmonics<F>>(gp), m);
        GradedBasis<F> viakz = construct_Hm_kz(kz, method == "both" ? &basis : nullptr);
        if (method == "kz") basis = std::move(viakz);
    }
    std::vector<PolyDocument> docs;
    for (const auto& e : basis.entries) {
        PolyDocument d = document_for(g, g.pull_back(e.poly));
        json labels{{"provenance", method == "both" ? "direct,kz" : e.provenance}};
        if (e.filtration) labels["filtration"] = *e.filtration;
        if (!e.irrep.empty()) labels["irrep"] = e.irrep;
        d.metadata = {{"group", g.name}, {"m", m}, {"degree", e.degree}, {"labels", labels}};
        docs.push_back(std::move(d));
    }
    write_output(path, poly_json_list(docs), out);
    return kExitOk;
}

std::vector<PolyDocument> read_documents(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    json j;
    try {
        j = json::parse(f);
    } catch (const json::exception& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }
    std::vector<PolyDocument> docs;
    try {
        if (j.is_array())
            for (const auto& x : j) docs.push_back(PolyDocument::from_json(x));
        else
            docs.push_back(PolyDocument::from_json(j));
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed document: ") + e.what());
    }
    return docs;
}

template <class F>
int cmd_verify(const Group<F>& g, const std::string& mtext, const std::string& path, std::ostream& out) {
    auto m = parse_multiplicity(mtext, g.num_reflection_classes());
    DunklContext<F> ctx(share(g), m);
    auto docs = read_documents(path);
    json report = json::array();
    bool all = true;
    for (std::size_t i = 0; i < docs.size(); ++i) {
        if (static_cast<int>(docs[i].vars.size()) != g.ambient.dim)
            throw UsageError("document " + std::to_string(i) + " has " + std::to_string(docs[i].vars.size()) +
                             " variables; " + g.name + " needs " + std::to_string(g.ambient.dim));
        Certificate c = ctx.verify_ambient(document_poly<F>(docs[i]));
        all = all && c.harmonic;
        json checks = json::array();
        for (const auto& r : c.checks)
            checks.push_back({{"degree", r.degree}, {"required", r.required}, {"achieved", r.achieved}});
        json tested = json::array(), failures = json::array();
        for (const auto& [dir, d] : c.tested) tested.push_back({dir, d});
        for (const auto& [dir, d] : c.failures) failures.push_back({dir, d});
        report.push_back({{"index", i},
                          {"harmonic", c.harmonic},
                          {"dmax", c.dmax},
                          {"rank_checks", checks},
                          {"tested", tested},
                          {"failures", failures}});
    }
    out << json{{"group", g.name}, {"m", m}, {"results", report}}.dump(2) << "\n";
    return all ? kExitOk : kExitFailure;
}

int cmd_lowest(int n, long m, const std::string& path, std::ostream& out) {
    LowestBasis b = lowest_harmonics(n, m);
    auto L = leading_matrix(b);
    std::vector<PolyDocument> docs;
    for (std::size_t k = 0; k < b.polys.size(); ++k) {
        PolyDocument d = make_document(b.polys[k], default_names(n));
        d.metadata = {{"group", "A" + std::to_string(n - 1)},
                      {"m", std::vector<long>{m}},
                      {"degree", n * m + 1},
                      {"labels", {{"j", k + 2}, {"leading_coefficient", L[k][k].to_string()}}}};
        docs.push_back(std::move(d));
    }
    write_output(path, poly_json_list(docs), out);
    return kExitOk;
}

int cmd_plancherel(int n, std::size_t samples, std::uint64_t seed, bool exact, std::ostream& out) {
    out << std::setprecision(10);
    if (exact) {
        std::vector<std::pair<double, double>> law;
        out << "partition,weight,statistic\n";
        for (const auto& w : plancherel_exact(n)) {
            const double s = kerov_statistic(w.shape);
            law.emplace_back(s, w.weight.to_double());
            out << '"' << partition_label(w.shape) << "\"," << w.weight.to_string() << ',' << s << "\n";
        }
        out << "ks_distance=" << ks_distance_normal(law) << "\n";
        return kExitOk;
    }
    KerovSample s = kerov_statistic_sample(n, samples, seed, thread_count());
    out << "sample_index,partition,statistic\n";
    for (std::size_t i = 0; i < samples; ++i)
        out << i << ",\"" << partition_label(s.shapes[i]) << "\"," << s.statistics[i] << "\n";
    out << "ks_distance=" << s.ks << "\n";
    return kExitOk;
}

}  // namespace

// ----- PolyDocument -----

json PolyDocument::to_json() const {
    json terms_j = json::array();
    for (const auto& [e, c] : terms) terms_j.push_back({{"coef", c}, {"monomial", e}});
    json field = field_order == 0 ? json{{"kind", "rational"}} : json{{"kind", "cyclotomic"}, {"order", field_order}};
    return {{"vars", vars}, {"field", field}, {"terms", terms_j}, {"metadata", metadata}};
}

PolyDocument PolyDocument::from_json(const json& j) {
    PolyDocument d;
    d.vars = j.at("vars").get<std::vector<std::string>>();
    const auto& f = j.at("field");
    const std::string kind = f.at("kind").get<std::string>();
    if (kind == "cyclotomic") d.field_order = f.at("order").get<int>();
    else if (kind != "rational") throw std::invalid_argument("PolyDocument: unknown field kind '" + kind + "'");
    for (const auto& t : j.at("terms")) {
        auto e = t.at("monomial").get<std::vector<int>>();
        if (e.size() != d.vars.size()) throw std::invalid_argument("PolyDocument: monomial length differs from vars");
        d.terms.emplace_back(std::move(e), t.at("coef").get<std::string>());
    }
    if (j.contains("metadata")) d.metadata = j.at("metadata");
    return d;
}

PolyDocument make_document(const QPoly& p, std::vector<std::string> vars) {
    PolyDocument d;
    d.vars = std::move(vars);
    for (const auto& [m, c] : p.terms()) d.terms.emplace_back(exponents(m, p.nvars()), c.to_string());
    return d;
}

PolyDocument make_document(const Poly<Cyclo>& p, std::vector<std::string> vars, int field_order) {
    PolyDocument d;
    d.vars = std::move(vars);
    d.field_order = Cyclo::rational_in(field_order, Rational(1)).order();
    for (const auto& [m, c] : p.terms()) d.terms.emplace_back(exponents(m, p.nvars()), coord_string(c, d.field_order));
    return d;
}

template <>
Poly<Rational> document_poly<Rational>(const PolyDocument& d) {
    if (d.field_order != 0) throw std::invalid_argument("PolyDocument: cyclotomic coefficients for a rational group");
    std::vector<std::pair<Mono, Rational>> terms;
    for (const auto& [e, c] : d.terms) terms.emplace_back(mono_of(e), Rational::parse(c));
    return Poly<Rational>::from_terms(static_cast<int>(d.vars.size()), std::move(terms));
}

template <>
Poly<Cyclo> document_poly<Cyclo>(const PolyDocument& d) {
    std::vector<std::pair<Mono, Cyclo>> terms;
    for (const auto& [e, c] : d.terms)
        terms.emplace_back(mono_of(e), d.field_order == 0 ? Cyclo(Rational::parse(c))
                                                          : Cyclo::parse(c + "@" + std::to_string(d.field_order)));
    return Poly<Cyclo>::from_terms(static_cast<int>(d.vars.size()), std::move(terms));
}

std::vector<long> parse_multiplicity(const std::string& text, std::size_t classes) {
    std::vector<long> m;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            throw UsageError("multiplicity '" + text + "' is not a list of integers");
        }
        if (used != item.size() || v < 0) throw UsageError("multiplicity '" + text + "' must be nonnegative integers");
        m.push_back(v);
    }
    if (m.size() == 1) m.assign(classes, m[0]);
    if (m.size() != classes)
        throw UsageError("expected " + std::to_string(classes) + " multiplicities (one per reflection class), got " +
                         std::to_string(m.size()));
    return m;
}

unsigned thread_count() {
    if (const char* env = std::getenv("HARMONIA_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact m-harmonic polynomials of Coxeter groups"};
    app.require_subcommand(1);

    auto* group = app.add_subcommand("group", "Group data");
    auto* group_info_cmd = group->add_subcommand("info", "Summary of a group as JSON");
    group->require_subcommand(1);
    std::string name;
    group_info_cmd->add_option("name", name, "A<k>, I2(<N>), B2 or G2")->required();

    auto* poincare = app.add_subcommand("poincare", "Per-irrep and total Poincare polynomials of H_m");
    std::string pname, pm = "0", pformat = "json";
    poincare->add_option("name", pname)->required();
    poincare->add_option("--m", pm, "one multiplicity per reflection class, or one for all")->required();
    poincare->add_option("--format", pformat)->check(CLI::IsMember({"json", "csv"}));

    auto* harmonics = app.add_subcommand("harmonics", "Basis of H_m");
    std::string hname, hm, hmethod = "direct", hout;
    harmonics->add_option("name", hname)->required();
    harmonics->add_option("--m", hm)->required();
    harmonics->add_option("--method", hmethod)->check(CLI::IsMember({"direct", "kz", "both"}));
    harmonics->add_option("--out", hout, "output path (stdout when omitted)");

    auto* verify = app.add_subcommand("verify", "Certify m-harmonicity of polynomials");
    std::string vin, vgroup, vm;
    verify->add_option("--in", vin)->required();
    verify->add_option("--group", vgroup)->required();
    verify->add_option("--m", vm)->required();

    auto* lowest = app.add_subcommand("lowest", "Lowest-degree m-harmonics of S_n");
    int ln = 0;
    long lm = 0;
    std::string lout;
    lowest->add_option("--n", ln)->required();
    lowest->add_option("--m", lm)->required();
    lowest->add_option("--out", lout);

    auto* planch = app.add_subcommand("plancherel", "Kerov statistic under Plancherel measure");
    int qn = 0;
    std::size_t qsamples = 1000;
    std::uint64_t qseed = 0;
    bool qexact = false;
    planch->add_option("--n", qn)->required();
    planch->add_option("--samples", qsamples);
    planch->add_option("--seed", qseed);
    planch->add_flag("--exact", qexact, "exact Plancherel law instead of sampling (n <= 12)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    auto with_group = [&](const std::string& gname, auto&& fn) {
        AnyGroup g = build_group(gname);
        return std::visit([&](const auto& grp) { return fn(grp); }, g);
    };

    try {
        if (group_info_cmd->parsed())
            return with_group(name, [&](const auto& g) {
                out << group_info(g).dump(2) << "\n";
                return static_cast<int>(kExitOk);
            });
        if (poincare->parsed())
            return with_group(pname, [&](const auto& g) { return cmd_poincare(g, pm, pformat, out); });
        if (harmonics->parsed())
            return with_group(hname, [&](const auto& g) { return cmd_harmonics(g, hm, hmethod, hout, out); });
        if (verify->parsed())
            return with_group(vgroup, [&](const auto& g) { return cmd_verify(g, vm, vin, out); });
        if (lowest->parsed()) return cmd_lowest(ln, lm, lout, out);
        if (planch->parsed()) return cmd_plancherel(qn, qsamples, qseed, qexact, out);
    } catch (const UnsupportedGroup& e) {
        err << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "precondition: " << e.what() << "\n";
        return kExitFailure;
    } catch (const ConsistencyError& e) {
        err << "consistency failure: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace harmonia
