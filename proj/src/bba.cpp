#include "dsmt/bba.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dsmt/errors.hpp"

namespace dsmt {

const Element& canonical_key(const Model& model, const Element& e) {
    return model.is_empty(e) ? e : model.class_of(e).element;
}

MassFunction MassFunction::from_elements(std::shared_ptr<const Model> model,
                                         std::span<const std::pair<Element, double>> entries, BbaOptions options) {
    if (!model) throw ValidationError("bba has no model");
    std::map<std::size_t, double> masses;
    double sum = 0.0;
    for (const auto& [element, mass] : entries) {
        const std::string label = model->name(element);
        if (!std::isfinite(mass)) throw ValidationError("mass of " + label + " is not finite");
        if (mass < 0.0) throw ValidationError("negative mass on " + label);
        if (mass == 0.0) continue;
        if (element.parts.empty()) throw ValidationError("mass assigned to the empty set");
        if (options.strict && model->is_empty(element)) {
            throw ValidationError("mass assigned to " + label + ", which the model forces empty");
        }
        masses[canonical_key(*model, element).index] += mass;
        sum += mass;
    }
    if (options.normalize) {
        if (sum <= 0.0) throw ValidationError("cannot normalize a bba with zero total mass");
        for (auto& [index, mass] : masses) mass /= sum;
    } else if (std::abs(sum - 1.0) > options.tolerance) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "masses sum to " << sum << ", expected 1";
        throw ValidationError(msg.str());
    }
    return MassFunction{std::move(model), std::move(masses)};
}

double MassFunction::mass(const Element& e) const {
    const auto it = masses_.find(canonical_key(*model_, e).index);
    return it == masses_.end() ? 0.0 : it->second;
}

std::vector<FocalElement> MassFunction::focal_elements() const {
    std::vector<FocalElement> out;
    out.reserve(masses_.size());
    for (const auto& [index, mass] : masses_) {
        if (mass > 0.0) out.push_back({model_->base()[index], mass});
    }
    return out;
}

double MassFunction::total() const {
    double sum = 0.0;
    for (const auto& [index, mass] : masses_) sum += mass;
    return sum;
}

bool MassFunction::has_empty_mass() const {
    return std::any_of(masses_.begin(), masses_.end(), [this](const auto& entry) {
        return entry.second > 0.0 && model_->is_empty(model_->base()[entry.first]);
    });
}

MassFunction load_bba(std::shared_ptr<const Model> model, std::span<const std::pair<std::string, double>> entries,
                      BbaOptions options) {
    if (!model) throw ValidationError("bba has no model");
    std::vector<std::pair<Element, double>> resolved;
    resolved.reserve(entries.size());
    for (const auto& [text, mass] : entries) resolved.emplace_back(model->parse(text), mass);
    return MassFunction::from_elements(std::move(model), resolved, options);
}

MassFunction random_mass_function(std::shared_ptr<const Model> model, std::mt19937_64& rng, std::size_t max_focal) {
    const auto restricted = model->restricted();
    const std::size_t candidates = restricted.size() - 1;
    std::uniform_int_distribution<std::size_t> count_dist(1, std::max<std::size_t>(1, std::min(max_focal, candidates)));
    std::uniform_int_distribution<std::size_t> pick(1, candidates);
    std::exponential_distribution<double> weight(1.0);

    const std::size_t focal = count_dist(rng);
    std::vector<std::pair<Element, double>> entries;
    double sum = 0.0;
    for (std::size_t i = 0; i < focal; ++i) {
        const double w = weight(rng) + 1e-3;
        entries.emplace_back(restricted[pick(rng)].element, w);
        sum += w;
    }
    for (auto& entry : entries) entry.second /= sum;
    BbaOptions options;
    options.normalize = true;
    return MassFunction::from_elements(std::move(model), entries, options);
}

} // namespace dsmt
