#pragma once

#include <filesystem>
#include <memory>
#include <optional>

#include "json.hpp"

#include "dsmt/bba.hpp"
#include "dsmt/fusion.hpp"
#include "dsmt/pignistic.hpp"

namespace dsmt {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file. Throws ValidationError when the file is
/// missing or malformed.
Json read_json_file(const std::filesystem::path& path);

/// `{ "n": <int>, "constraints": ["<expr>", ...] }`.
std::shared_ptr<const Model> model_from_json(const Json& doc);
std::shared_ptr<const Model> load_model_file(const std::filesystem::path& path);
Json model_to_json(const Model& model);

/// `{ "model": "<path>" | {inline model}, "masses": { "<expr>": <mass>, ... } }`.
///
/// When `model` is given it is used instead of the document's own model;
/// a document model that disagrees with it is rejected. Relative model paths
/// resolve against `base_dir`.
MassFunction bba_from_json(const Json& doc, const std::filesystem::path& base_dir,
                           std::shared_ptr<const Model> model, BbaOptions options = {});
MassFunction load_bba_file(const std::filesystem::path& path, std::shared_ptr<const Model> model,
                           BbaOptions options = {});
/// Masses in lattice order under canonical names, with the model inline.
Json bba_to_json(const MassFunction& m);

Json report_to_json(const FusionReport& report, Rule rule);

} // namespace dsmt
