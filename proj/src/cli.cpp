#include "simpdelta/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "simpdelta/chain_complex.hpp"
#include "simpdelta/em_transform.hpp"
#include "simpdelta/errors.hpp"
#include "simpdelta/models.hpp"
#include "simpdelta/operations.hpp"
#include "simpdelta/relations.hpp"

namespace simpdelta {

unsigned effective_threads(unsigned requested) {
    unsigned n = requested ? requested : std::max(1U, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("SIMPDELTA_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(cap, &end, 10);
        if (end != cap && *end == '\0' && v >= 1) n = std::min(n, static_cast<unsigned>(v));
    }
    return n;
}

namespace {

struct RunConfig {
    std::string suite;
    int max_total = 8;
    int max_k = 4;
    std::uint64_t seed = 0;
    std::string format;
    std::string output;
    unsigned threads = 0;

    int q = 2;
    int i = 2;

    std::string model = "sphere";
    int n = 2;
    int max_degree = 5;
    int poly = 2;

    std::string transform = "D";
    int k = 0;
    std::string bidegree;
};

class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Writes to --output when given, else to out.
int emit(const RunConfig& cfg, const std::string& text, std::ostream& out, std::ostream& err) {
    if (cfg.output.empty()) {
        out << text;
        return kExitOk;
    }
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
        err << "cannot write " << cfg.output << "\n";
        return kExitConfig;
    }
    file << text;
    return kExitOk;
}

std::vector<std::string> suite_relations(const RunConfig& cfg) {
    std::vector<std::string> names;
    const bool all = cfg.suite == "all";
    if (all || cfg.suite == "simp")
        for (const char* r : {"simp0", "simp1", "simp2", "simp3", "simp4", "simp5",
                              "d0-intertwining"})
            names.emplace_back(r);
    if (all || cfg.suite == "chainmap") names.emplace_back("D-chain-map");
    if (all || cfg.suite == "dwyer")
        for (int k = 0; k <= cfg.max_k; ++k) names.push_back("dwyer-" + std::to_string(k));
    if (all || cfg.suite == "lemma3")
        for (int k = 1; k <= cfg.max_k; ++k) names.push_back("lemma3-" + std::to_string(k));
    return names;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.max_total < 1) throw ConfigError("--max-total must be >= 1");
    if (cfg.max_k < 0) throw ConfigError("--max-k must be >= 0");
    if ((cfg.suite == "dwyer" || cfg.suite == "lemma3" || cfg.suite == "all") &&
        2 * cfg.max_k > cfg.max_total)
        throw ConfigError("--max-k " + std::to_string(cfg.max_k) + " exceeds --max-total/2");

    const unsigned threads = effective_threads(cfg.threads);
    std::vector<RelationReport> reports;
    for (const auto& name : suite_relations(cfg)) {
        if (name == "d0-intertwining")
            reports.push_back(check_d0_intertwining(cfg.max_total));
        else
            reports.push_back(check_relation(name, cfg.max_total, threads));
    }
    if (cfg.suite == "simp" || cfg.suite == "all")
        reports.push_back(check_word_soundness(1000, cfg.seed));

    const bool passed =
        std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
    std::string text;
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["suite"] = cfg.suite;
        j["max_total"] = cfg.max_total;
        j["max_k"] = cfg.max_k;
        j["seed"] = cfg.seed;
        j["passed"] = passed;
        auto list = nlohmann::ordered_json::array();
        for (const auto& r : reports) list.push_back(nlohmann::ordered_json::parse(report_json(r)));
        j["relations"] = std::move(list);
        text = j.dump(2) + "\n";
    } else if (cfg.format == "csv") {
        std::ostringstream csv;
        csv << "relation,label,checks,passed,first_failure\n";
        for (const auto& r : reports)
            for (const auto& inst : r.instances)
                csv << r.name << ",\"" << inst.label << "\"," << inst.checked << ','
                    << (inst.passed ? "true" : "false") << ",\""
                    << (inst.first_failure ? inst.first_failure->where : "") << "\"\n";
        text = csv.str();
    } else {
        for (const auto& r : reports) text += report_text(r);
        text += passed ? "all relations hold\n" : "some relations FAILED\n";
    }
    const int rc = emit(cfg, text, out, err);
    if (rc != kExitOk) return rc;
    return passed ? kExitOk : kExitFailure;
}

int cmd_delta(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.q < 1 || cfg.q > 4) throw ConfigError("--q must be in 1..4");
    if (cfg.i < 1 || cfg.i > cfg.q) throw ConfigError("--i must be in 1..q");
    const DeltaReport r = delta_report(cfg.q, cfg.i);
    std::string text;
    if (cfg.format == "text") {
        std::ostringstream s;
        s << "delta_" << r.i << "(z), z the fundamental class of Sphere(" << r.q
          << "), degree " << r.q + r.i << ", " << r.delta.size() << " terms\n";
        for (const auto& m : r.delta.support()) {
            s << " ";
            for (const auto& f : m.factors) s << " (" << degeneracy_word(f).to_string() << ")z";
            s << "\n";
        }
        s << "is_cycle: " << (r.is_cycle ? "true" : "false") << "\n";
        if (r.homology_class_nonzero)
            s << "homology_class_nonzero: " << (*r.homology_class_nonzero ? "true" : "false")
              << "\n";
        s << "equals_theta: " << (r.equals_theta() ? "true" : "false") << "\n";
        if (r.warning) s << "warning: " << *r.warning << "\n";
        text = s.str();
    } else {
        text = delta_report_json(r) + "\n";
    }
    if (r.warning) err << "warning: " << *r.warning << "\n";
    const int rc = emit(cfg, text, out, err);
    if (rc != kExitOk) return rc;
    return r.equals_theta() ? kExitOk : kExitFailure;
}

SimplicialSetModel make_simplicial_model(const std::string& kind, int n, int max_degree) {
    if (kind == "sphere") return SimplicialSetModel::sphere(n, max_degree);
    if (kind == "delta") return SimplicialSetModel::delta(n, max_degree);
    if (kind == "boundary") return SimplicialSetModel::boundary_delta(n, max_degree);
    throw ConfigError("unknown model '" + kind + "'");
}

void check_model_bounds(const RunConfig& cfg) {
    if (cfg.max_degree < 1 || cfg.max_degree > 12) throw ConfigError("--max-degree must be in 1..12");
    if (cfg.n < 0 || cfg.n > 8) throw ConfigError("--n must be in 0..8");
    if (cfg.model == "algebra" && (cfg.poly < 2 || cfg.poly > 4))
        throw ConfigError("--poly must be in 2..4");
}

template <class M>
int homology_of(const M& model, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const ModelTables tables = tabulate(model, cfg.max_degree);
    const auto assoc = betti_table(associated_complex(tables));
    const auto norm = betti_table(normalized_complex(tables));
    bool agree = true;
    for (std::size_t k = 0; k < assoc.size(); ++k) agree &= assoc[k].betti == norm[k].betti;
    std::string text;
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["model"] = model.name();
        j["max_degree"] = cfg.max_degree;
        auto rows = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < assoc.size(); ++k)
            rows.push_back({{"degree", assoc[k].degree},
                            {"dim", assoc[k].dim},
                            {"rank_d", assoc[k].rank_d},
                            {"betti", assoc[k].betti},
                            {"dim_normalized", norm[k].dim},
                            {"rank_d_normalized", norm[k].rank_d},
                            {"betti_normalized", norm[k].betti},
                            {"agree", assoc[k].betti == norm[k].betti}});
        j["rows"] = std::move(rows);
        text = j.dump(2) + "\n";
    } else {
        text = betti_comparison_csv(assoc, norm);
    }
    const int rc = emit(cfg, text, out, err);
    if (rc != kExitOk) return rc;
    return agree ? kExitOk : kExitFailure;
}

int cmd_homology(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    check_model_bounds(cfg);
    if (cfg.model == "algebra") {
        const AlgebraModel a(SimplicialSetModel::sphere(cfg.n, cfg.max_degree), cfg.poly);
        return homology_of(a, cfg, out, err);
    }
    return homology_of(make_simplicial_model(cfg.model, cfg.n, cfg.max_degree), cfg, out, err);
}

int cmd_dump_model(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    check_model_bounds(cfg);
    if (cfg.model == "algebra") {
        const AlgebraModel a(SimplicialSetModel::sphere(cfg.n, cfg.max_degree), cfg.poly);
        return emit(cfg, model_json(tabulate(a, cfg.max_degree)) + "\n", out, err);
    }
    const auto m = make_simplicial_model(cfg.model, cfg.n, cfg.max_degree);
    return emit(cfg, model_json(tabulate(m, cfg.max_degree)) + "\n", out, err);
}

EMTransform named_transform(const std::string& name, int k) {
    if (name == "D") return shuffle_D();
    if (name == "Dk") return build_Dk(k);
    if (name == "Ak") return build_Ak(k);
    if (name == "phi") return phi(k);
    if (name == "delta") return diagonal_delta();
    if (name == "bd-left") return boundary_left();
    if (name == "bd-right") return boundary_right();
    if (name == "id") return identity_transform();
    throw ConfigError("unknown transform '" + name + "'");
}

int cmd_dump_transform(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.k < 0 || cfg.k > 8) throw ConfigError("--k must be in 0..8");
    if (cfg.max_total < 0 || cfg.max_total > 14) throw ConfigError("--max-total must be in 0..14");
    const EMTransform f = named_transform(cfg.transform, cfg.k);
    std::string text;
    if (!cfg.bidegree.empty()) {
        Bidegree b;
        char comma = 0;
        std::istringstream in(cfg.bidegree);
        if (!(in >> b.i >> comma >> b.j) || comma != ',' || !in.eof() || b.i < 0 || b.j < 0 ||
            b.i + b.j > 14)
            throw ConfigError("--bidegree expects I,J with 0 <= I,J and I+J <= 14");
        text = dump_transform_json(f, b) + "\n";
    } else {
        for (const Bidegree b : Window{cfg.max_total, 0}.bidegrees())
            text += dump_transform_json(f, b) + "\n";
    }
    return emit(cfg, text, out, err);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Higher Eilenberg-MacLane maps and homotopy operations over F2", "simpdelta"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "simpdelta 0.1.0");

    auto* verify = app.add_subcommand("verify", "Check relation suites");
    verify->add_option("suite", cfg.suite, "simp | dwyer | lemma3 | chainmap | all")
        ->required()
        ->check(CLI::IsMember({"simp", "dwyer", "lemma3", "chainmap", "all"}));
    verify->add_option("--max-total", cfg.max_total, "Largest total bidegree i+j")
        ->capture_default_str();
    verify->add_option("--max-k", cfg.max_k, "Largest k for dwyer / lemma3")->capture_default_str();

    auto* delta = app.add_subcommand("delta", "delta_i and theta_i of a sphere's fundamental class");
    delta->add_option("--q", cfg.q, "Degree of the fundamental class")->capture_default_str();
    delta->add_option("--i", cfg.i, "Operation index")->capture_default_str();

    auto* homology = app.add_subcommand("homology", "Betti tables of a model");
    auto* dump_model = app.add_subcommand("dump-model", "JSON basis and action tables");
    for (auto* sub : {homology, dump_model}) {
        sub->add_option("--model", cfg.model, "sphere | delta | boundary | algebra")
            ->check(CLI::IsMember({"sphere", "delta", "boundary", "algebra"}))
            ->capture_default_str();
        sub->add_option("--n", cfg.n, "Model dimension")->capture_default_str();
        sub->add_option("--max-degree", cfg.max_degree, "Truncation degree")->capture_default_str();
        sub->add_option("--poly", cfg.poly, "Polynomial truncation P (algebra)")
            ->capture_default_str();
    }

    auto* dump = app.add_subcommand("dump-transform", "JSON terms of an EM transform");
    dump->add_option("--name", cfg.transform, "D | Dk | Ak | phi | delta | bd-left | bd-right | id")
        ->capture_default_str();
    dump->add_option("--k", cfg.k, "Index for Dk, Ak, phi")->capture_default_str();
    dump->add_option("--bidegree", cfg.bidegree, "Single bidegree I,J");
    dump->add_option("--max-total", cfg.max_total, "Dump every bidegree up to this total")
        ->capture_default_str();

    for (auto* sub : {verify, delta, homology, dump_model, dump}) {
        sub->add_option("--format", cfg.format, "json | csv | text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--output,-o", cfg.output, "Write output to a file");
        sub->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
        sub->add_option("--seed", cfg.seed, "Seed for random sampling");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (verify->parsed()) {
            if (cfg.format.empty()) cfg.format = "text";
            return cmd_verify(cfg, out, err);
        }
        if (delta->parsed()) {
            if (cfg.format.empty()) cfg.format = "json";
            return cmd_delta(cfg, out, err);
        }
        if (homology->parsed()) {
            if (cfg.format.empty()) cfg.format = "csv";
            return cmd_homology(cfg, out, err);
        }
        if (dump_model->parsed()) return cmd_dump_model(cfg, out, err);
        if (dump->parsed()) return cmd_dump_transform(cfg, out, err);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const BadRange& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitConfig;
}

}  // namespace simpdelta
