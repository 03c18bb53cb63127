#include "dsmt/io.hpp"

#include <fstream>
#include <string>
#include <vector>

#include "dsmt/errors.hpp"

namespace dsmt {

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

std::shared_ptr<const Model> model_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
        throw ValidationError("model document needs an integer \"n\"");
    }
    std::vector<std::string> constraints;
    if (doc.contains("constraints")) {
        const Json& list = doc["constraints"];
        if (!list.is_array()) throw ValidationError("model \"constraints\" must be an array of expressions");
        for (const Json& c : list) {
            if (!c.is_string()) throw ValidationError("model constraints must be expression strings");
            constraints.push_back(c.get<std::string>());
        }
    }
    return std::make_shared<const Model>(Model::build(doc["n"].get<int>(), constraints));
}

std::shared_ptr<const Model> load_model_file(const std::filesystem::path& path) {
    try {
        return model_from_json(read_json_file(path));
    } catch (const ValidationError& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

Json model_to_json(const Model& model) {
    Json doc;
    doc["n"] = model.frame_size();
    doc["constraints"] = model.constraint_names();
    return doc;
}

MassFunction bba_from_json(const Json& doc, const std::filesystem::path& base_dir,
                           std::shared_ptr<const Model> model, BbaOptions options) {
    if (!doc.is_object() || !doc.contains("masses") || !doc["masses"].is_object()) {
        throw ValidationError("bba document needs a \"masses\" object");
    }
    if (doc.contains("model")) {
        const Json& ref = doc["model"];
        std::shared_ptr<const Model> own;
        if (ref.is_string()) {
            std::filesystem::path p = ref.get<std::string>();
            own = load_model_file(p.is_absolute() ? p : base_dir / p);
        } else if (ref.is_object()) {
            own = model_from_json(ref);
        } else {
            throw ValidationError("bba \"model\" must be a path or an inline model");
        }
        if (model && !model->equivalent(*own)) throw ValidationError("bba model differs from the requested model");
        if (!model) model = std::move(own);
    }
    if (!model) throw ValidationError("bba has no model");

    std::vector<std::pair<std::string, double>> entries;
    for (const auto& [key, value] : doc["masses"].items()) {
        if (!value.is_number()) throw ValidationError("mass of '" + key + "' is not a number");
        entries.emplace_back(key, value.get<double>());
    }
    return load_bba(std::move(model), entries, options);
}

MassFunction load_bba_file(const std::filesystem::path& path, std::shared_ptr<const Model> model,
                           BbaOptions options) {
    try {
        return bba_from_json(read_json_file(path), path.parent_path(), std::move(model), options);
    } catch (const ValidationError& e) {
        throw ValidationError(path.string() + ": " + e.what());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

Json bba_to_json(const MassFunction& m) {
    Json doc;
    doc["model"] = model_to_json(m.model());
    Json masses = Json::object();
    for (const auto& [index, mass] : m.masses()) masses[m.model().name(m.model().base()[index])] = mass;
    doc["masses"] = std::move(masses);
    return doc;
}

Json report_to_json(const FusionReport& report, Rule rule) {
    const Model& model = report.combined.model();
    Json doc;
    doc["rule"] = std::string(to_string(rule));
    doc["tuples"] = report.tuple_count;
    doc["routed_mass"] = report.routed_mass;
    if (report.conflict_k12) doc["k12"] = *report.conflict_k12;
    if (!report.s_breakdown.empty()) {
        Json rows = Json::array();
        for (const auto& [index, s] : report.s_breakdown) {
            rows.push_back({{"element", model.name(model.base()[index])}, {"S1", s.s1}, {"S2", s.s2}, {"S3", s.s3}});
        }
        doc["s_breakdown"] = std::move(rows);
    }
    doc["combined"] = bba_to_json(report.combined);
    return doc;
}

} // namespace dsmt
