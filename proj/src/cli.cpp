#include "dsmt/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"

#include "dsmt/errors.hpp"
#include "dsmt/io.hpp"
#include "dsmt/tables.hpp"

namespace dsmt::cli {

namespace {

struct Options {
    std::string format{"table"};

    int n{0};
    std::string model;
    std::string element;
    std::string rule;
    std::vector<std::string> bba_files;
    std::string bba;
    std::string out_file;
    std::string report_file;
    std::string targets;
    bool coefficients{false};
    bool check_axioms{false};
    bool decide{false};
    bool normalize{false};
    std::size_t samples{1000};
    std::uint64_t seed{1};
    std::size_t max_focal{5};
    std::string suite;
    std::string table;
};

std::shared_ptr<spdlog::logger> logger() {
    static const auto instance = [] {
        auto l = spdlog::stderr_logger_st("dsmt");
        l->set_pattern("[%l] %v");
        const char* level = std::getenv("DSMT_LOG_LEVEL");
        l->set_level(level ? spdlog::level::from_str(level) : spdlog::level::warn);
        return l;
    }();
    return instance;
}

std::string fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    return buf;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

std::string part_label(IndexSet s) {
    std::string out = "<";
    for (int i : indices_of(s)) out += std::to_string(i);
    return out + ">";
}

std::string parts_text(PartMask parts, int n) {
    std::string out;
    for (IndexSet s = 1; s < (IndexSet{1} << n); ++s) {
        if (!parts.contains_part(s)) continue;
        if (!out.empty()) out += ',';
        out += part_label(s);
    }
    return out.empty() ? "-" : out;
}

// --model accepts a JSON file, or "free"/"shafer" together with --n.
std::shared_ptr<const Model> resolve_model(const Options& o, bool required = true) {
    if (o.model == "free" || o.model == "shafer" || (o.model.empty() && o.n > 0)) {
        if (o.n <= 0) throw ValidationError("--model " + o.model + " needs --n");
        return std::make_shared<const Model>(o.model == "shafer" ? Model::shafer(o.n) : Model::free(o.n));
    }
    if (o.model.empty()) {
        if (required) throw ValidationError("a model is required (--model FILE)");
        return nullptr;
    }
    auto model = load_model_file(o.model);
    if (o.n > 0 && model->frame_size() != o.n) {
        throw ValidationError("--n " + std::to_string(o.n) + " disagrees with the model's frame size");
    }
    logger()->debug("loaded model: n={}, {} constraint(s), {} restricted elements", model->frame_size(),
                    model->constraints().size(), model->restricted().size());
    return model;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw ValidationError("cannot write " + path);
    f << text;
}

std::vector<Element> parse_targets(const Model& model, const std::string& list) {
    std::vector<Element> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        out.push_back(model.parse(item));
    }
    if (out.empty()) throw ValidationError("--targets names no elements");
    return out;
}

Json axioms_json(const AxiomReport& report) {
    Json doc = Json::array();
    for (const auto& c : report.checks) {
        doc.push_back({{"check", c.name}, {"passed", c.passed}, {"max_deviation", c.max_deviation}, {"cases", c.cases}});
    }
    return doc;
}

void print_axioms(std::ostream& out, const AxiomReport& report) {
    for (const auto& c : report.checks) {
        out << pad(c.name, 22) << (c.passed ? "pass" : "FAIL") << "  max deviation " << std::scientific
            << std::setprecision(3) << c.max_deviation << std::defaultfloat << "  (" << c.cases << " cases)\n";
    }
}

int cmd_lattice(const Options& o, std::ostream& out) {
    const auto model = resolve_model(o);
    const int n = model->frame_size();
    if (o.format == "json") {
        Json doc = model_to_json(*model);
        doc["kind"] = std::string(to_string(model->kind()));
        Json elements = Json::array();
        for (const auto& r : model->restricted()) {
            elements.push_back({{"index", r.index},
                                {"element", model->name(r.element)},
                                {"cardinality", r.residual.count()},
                                {"parts", parts_text(r.residual, n)}});
        }
        doc["elements"] = std::move(elements);
        Json empties = Json::array();
        for (const auto& e : model->empty_set_members()) empties.push_back(model->name(e));
        doc["empty_members"] = std::move(empties);
        out << doc.dump(2) << '\n';
        return kOk;
    }
    out << "n=" << n << ", " << to_string(model->kind()) << " model, " << model->restricted().size()
        << " elements\n";
    for (const auto& c : model->constraints()) {
        out << "constraint " << model->name(c) << " (" << to_string(classify_constraint(c, n)) << ")\n";
    }
    std::size_t width = 9;
    for (const auto& r : model->restricted()) width = std::max(width, model->name(r.element).size() + 2);
    out << pad("index", 7) << pad("element", width) << pad("C_M", 5) << "parts\n";
    for (const auto& r : model->restricted()) {
        out << pad(std::to_string(r.index), 7) << pad(model->name(r.element), width)
            << pad(std::to_string(r.residual.count()), 5) << parts_text(r.residual, n) << '\n';
    }
    if (!model->empty_set_members().empty()) {
        out << "forced empty:";
        for (const auto& e : model->empty_set_members()) out << ' ' << model->name(e);
        out << '\n';
    }
    return kOk;
}

int cmd_cardinality(const Options& o, std::ostream& out) {
    const auto model = resolve_model(o);
    const Element& e = model->parse(o.element);
    const int c = dsm_cardinality(e, *model);
    if (o.format == "json") {
        Json doc;
        doc["element"] = model->name(e);
        doc["cardinality"] = c;
        doc["empty"] = model->is_empty(e);
        doc["labels"] = indices_of(model->base().labels(e));
        out << doc.dump(2) << '\n';
    } else {
        out << "C_M(" << model->name(e) << ") = " << c << (model->is_empty(e) ? "  (empty under the model)" : "")
            << '\n';
    }
    return kOk;
}

int cmd_combine(const Options& o, std::ostream& out) {
    const Rule rule = parse_rule(o.rule);
    const auto model = resolve_model(o);
    BbaOptions options;
    options.strict = rule == Rule::dempster;
    options.normalize = o.normalize;
    std::vector<MassFunction> sources;
    for (const auto& file : o.bba_files) sources.push_back(load_bba_file(file, model, options));

    const FusionReport report = combine(rule, sources, model);
    logger()->info("{}: {} sources, {} tuples", to_string(rule), sources.size(), report.tuple_count);

    const Json bba = bba_to_json(report.combined);
    if (!o.out_file.empty()) write_text_file(o.out_file, bba.dump(2) + "\n");
    if (!o.report_file.empty()) write_text_file(o.report_file, report_to_json(report, rule).dump(2) + "\n");

    if (o.format == "json") {
        out << bba.dump(2) << '\n';
        return kOk;
    }
    const Model& m = report.combined.model();
    out << to_string(rule) << " combination of " << sources.size() << " sources\n";
    if (report.conflict_k12) out << "k12 = " << fixed(*report.conflict_k12) << '\n';
    for (const auto& f : report.combined.focal_elements()) {
        out << pad(m.name(f.element), 24) << fixed(f.mass) << '\n';
    }
    return kOk;
}

int cmd_pignistic(const Options& o, std::ostream& out, bool generalized) {
    const auto model = resolve_model(o);
    const MassFunction bba = load_bba_file(o.bba, model);
    const PignisticDist p = generalized ? gpt(bba) : classical_pt(bba);

    std::vector<RestrictedElement> targets;
    if (o.targets.empty()) {
        targets.assign(model->restricted().begin(), model->restricted().end());
    } else {
        for (const Element& e : parse_targets(*model, o.targets)) targets.push_back(model->class_of(e));
    }

    Json doc;
    if (o.format == "table") out << pad("index", 7) << pad("element", 24) << "P\n";
    Json probs = Json::array();
    for (const auto& t : targets) {
        const double v = p.at(t.index);
        if (o.format == "json") {
            probs.push_back({{"index", t.index}, {"element", model->name(t.element)}, {"probability", v}});
        } else {
            out << pad(std::to_string(t.index), 7) << pad(model->name(t.element), 24) << fixed(v) << '\n';
        }
    }
    doc["probabilities"] = std::move(probs);

    if (o.coefficients) {
        Json tables = Json::array();
        for (const auto& t : targets) {
            const auto table = gpt_coefficients(t.element, *model);
            Json rows = Json::array();
            if (o.format == "table") out << "\nP{" << model->name(t.element) << "} =\n";
            for (const auto& c : table.rows) {
                if (o.format == "json") {
                    rows.push_back({{"x", model->name(c.x.element)}, {"coefficient", c.text()}});
                } else {
                    out << "  (" << c.text() << ") m(" << model->name(c.x.element) << ")\n";
                }
            }
            tables.push_back({{"target", model->name(t.element)}, {"rows", std::move(rows)}});
        }
        doc["coefficients"] = std::move(tables);
    }

    int status = kOk;
    if (o.check_axioms) {
        const AxiomReport report = verify_axioms(p);
        if (!report.passed()) status = kDomain;
        if (o.format == "json") {
            doc["axioms"] = axioms_json(report);
        } else {
            out << '\n';
            print_axioms(out, report);
        }
    }

    if (o.decide) {
        const Decision d = decide(p);
        if (o.format == "json") {
            doc["decision"] = {{"element", model->name(d.choice.element)}, {"probability", d.probability}, {"tie", d.tie}};
        } else {
            out << "\ndecision: " << model->name(d.choice.element) << " (P = " << fixed(d.probability) << ")"
                << (d.tie ? " [tie]" : "") << '\n';
        }
    }
    if (o.format == "json") out << doc.dump(2) << '\n';
    return status;
}

AxiomReport sampled_axioms(const std::shared_ptr<const Model>& model, std::size_t samples, std::uint64_t seed,
                           std::size_t max_focal) {
    std::mt19937_64 rng(seed);
    AxiomReport worst;
    for (std::size_t i = 0; i < samples; ++i) {
        const AxiomReport r = verify_axioms(gpt(random_mass_function(model, rng, max_focal)));
        if (worst.checks.empty()) {
            worst = r;
            continue;
        }
        for (std::size_t c = 0; c < r.checks.size(); ++c) {
            auto& w = worst.checks[c];
            w.max_deviation = std::max(w.max_deviation, r.checks[c].max_deviation);
            w.passed = w.passed && r.checks[c].passed;
            w.cases += r.checks[c].cases;
        }
    }
    return worst;
}

int cmd_check_axioms(const Options& o, std::ostream& out) {
    const auto model = resolve_model(o);
    if (o.samples == 0) throw ValidationError("--samples must be positive");
    const AxiomReport report = sampled_axioms(model, o.samples, o.seed, o.max_focal);
    if (o.format == "json") {
        Json doc;
        doc["samples"] = o.samples;
        doc["seed"] = o.seed;
        doc["checks"] = axioms_json(report);
        doc["passed"] = report.passed();
        out << doc.dump(2) << '\n';
    } else {
        out << o.samples << " random bbas, seed " << o.seed << '\n';
        print_axioms(out, report);
    }
    return report.passed() ? kOk : kDomain;
}

int cmd_golden(const Options& o, std::ostream& out) {
    if (o.suite == "tables") {
        std::vector<std::string> ids = reference_table_ids();
        if (!o.table.empty()) ids = {o.table};
        bool all = true;
        Json results = Json::array();
        for (const auto& id : ids) {
            const TableCheck check = check_reference_table(id);
            all = all && check.passed();
            if (o.format == "json") {
                results.push_back({{"table", id},
                                   {"entries", check.entries},
                                   {"passed", check.passed()},
                                   {"mismatches", check.mismatches},
                                   {"notes", check.notes}});
                continue;
            }
            out << emit_table(id, *reference_model(id));
            out << (check.passed() ? "check: OK" : "check: MISMATCH") << " (" << check.entries << " entries)\n";
            for (const auto& m : check.mismatches) out << "  " << m << '\n';
            for (const auto& m : check.notes) out << "  note: " << m << '\n';
            out << '\n';
        }
        if (o.format == "json") out << results.dump(2) << '\n';
        return all ? kOk : kDomain;
    }
    if (o.suite == "axioms") {
        const std::vector<std::pair<std::string, std::shared_ptr<const Model>>> models = {
            {"free n=2", std::make_shared<const Model>(Model::free(2))},
            {"hybrid n=2", std::make_shared<const Model>(Model::build(2, std::vector<std::string>{"t2"}))},
            {"shafer n=2", std::make_shared<const Model>(Model::shafer(2))},
            {"free n=3", std::make_shared<const Model>(Model::free(3))},
            {"hybrid n=3", reference_model("2")},
            {"shafer n=3", std::make_shared<const Model>(Model::shafer(3))},
        };
        bool all = true;
        Json results = Json::array();
        for (const auto& [label, model] : models) {
            const AxiomReport report = sampled_axioms(model, o.samples, o.seed, o.max_focal);
            all = all && report.passed();
            if (o.format == "json") {
                results.push_back({{"model", label}, {"passed", report.passed()}, {"checks", axioms_json(report)}});
            } else {
                out << label << ": " << (report.passed() ? "OK" : "FAIL") << '\n';
                print_axioms(out, report);
            }
        }
        if (o.format == "json") out << results.dump(2) << '\n';
        return all ? kOk : kDomain;
    }
    throw ValidationError("unknown golden suite '" + o.suite + "'");
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Hyper-power sets, DSm combination rules and pignistic transformations"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json"}));

    auto* lattice = app.add_subcommand("lattice", "List the (restricted) hyper-power set");
    lattice->add_option("--n", o.n, "Frame size")->check(CLI::Range(1, kMaxFrameSize));
    lattice->add_option("--model", o.model, "Model file, or free|shafer with --n");

    auto* cardinality = app.add_subcommand("cardinality", "DSm cardinality of one element");
    cardinality->add_option("--model", o.model, "Model file")->required();
    cardinality->add_option("--n", o.n, "Frame size for --model free|shafer");
    cardinality->add_option("--element", o.element, "Element expression")->required();

    auto* combine_cmd = app.add_subcommand("combine", "Combine bba files");
    combine_cmd->add_option("--rule", o.rule, "dempster | dsm-classic | dsm-hybrid")
        ->required()
        ->check(CLI::IsMember({"dempster", "dsm-classic", "dsm-hybrid"}));
    combine_cmd->add_option("--model", o.model, "Model file")->required();
    combine_cmd->add_option("--n", o.n, "Frame size for --model free|shafer");
    combine_cmd->add_option("bba", o.bba_files, "bba files")->required()->expected(2, -1);
    combine_cmd->add_option("--out", o.out_file, "Write the combined bba JSON here");
    combine_cmd->add_option("--report", o.report_file, "Write a JSON report (k12, S1/S2/S3) here");
    combine_cmd->add_flag("--normalize", o.normalize, "Rescale input bbas to unit sum");

    auto add_pignistic = [&](const char* name, const char* help) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("--model", o.model, "Model file")->required();
        cmd->add_option("--n", o.n, "Frame size for --model free|shafer");
        cmd->add_option("--bba", o.bba, "bba file")->required();
        cmd->add_option("--targets", o.targets, "Comma-separated element expressions");
        cmd->add_flag("--coefficients", o.coefficients, "Print exact coefficients");
        cmd->add_flag("--check-axioms", o.check_axioms, "Verify the probability axioms");
        cmd->add_flag("--decide", o.decide, "Pick the most probable singleton");
        return cmd;
    };
    auto* gpt_cmd = add_pignistic("gpt", "Generalized pignistic transformation");
    auto* pt_cmd = add_pignistic("pt", "Classical pignistic transformation (Shafer's model)");

    auto* axioms = app.add_subcommand("check-axioms", "Probability axioms on random bbas");
    axioms->add_option("--model", o.model, "Model file")->required();
    axioms->add_option("--n", o.n, "Frame size for --model free|shafer");
    axioms->add_option("--samples", o.samples, "Number of random bbas");
    axioms->add_option("--seed", o.seed, "Random seed");
    axioms->add_option("--max-focal", o.max_focal, "Largest number of focal elements")->check(CLI::PositiveNumber);

    auto* golden = app.add_subcommand("golden", "Regenerate and diff the reference tables");
    golden->add_option("--suite", o.suite, "tables | axioms")->required()->check(CLI::IsMember({"tables", "axioms"}));
    golden->add_option("--table", o.table, "Only this table (1..9 or comparison)");
    golden->add_option("--samples", o.samples, "Random bbas per model (axioms suite)");
    golden->add_option("--seed", o.seed, "Random seed (axioms suite)");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (lattice->parsed()) {
            if (o.n == 0 && o.model.empty()) throw CLI::ValidationError("lattice needs --n or --model");
            return cmd_lattice(o, out);
        }
        if (cardinality->parsed()) return cmd_cardinality(o, out);
        if (combine_cmd->parsed()) return cmd_combine(o, out);
        if (gpt_cmd->parsed()) return cmd_pignistic(o, out, true);
        if (pt_cmd->parsed()) return cmd_pignistic(o, out, false);
        if (axioms->parsed()) return cmd_check_axioms(o, out);
        if (golden->parsed()) return cmd_golden(o, out);
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    }
    return kUsage;
}

} // namespace dsmt::cli
