#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dsmt/model.hpp"

namespace dsmt {

inline constexpr double kMassTolerance = 1e-9;

struct FocalElement {
    Element element;
    double mass;
};

struct BbaOptions {
    /// Reject mass on elements the model forces empty.
    bool strict{true};
    /// Rescale to unit sum instead of rejecting a bad total.
    bool normalize{false};
    double tolerance{kMassTolerance};
};

/// A generalized basic belief assignment over a model's hyper-power set.
///
/// Masses are keyed by free-lattice element. Non-empty elements are stored
/// under the representative of their restricted class, so syntactic variants
/// and elements the model identifies merge. Elements forced empty keep their
/// own identity because the hybrid rule routes them by their labels.
class MassFunction {
  public:
    /// Validates and canonicalizes. Throws ValidationError on mass on ∅,
    /// negative or non-finite masses, a total off by more than the tolerance,
    /// or (strict) mass on a model-empty element.
    static MassFunction from_elements(std::shared_ptr<const Model> model,
                                      std::span<const std::pair<Element, double>> entries, BbaOptions options = {});

    [[nodiscard]] const Model& model() const { return *model_; }
    [[nodiscard]] const std::shared_ptr<const Model>& model_ptr() const { return model_; }

    /// Mass of the class `e` belongs to; 0 when absent.
    [[nodiscard]] double mass(const Element& e) const;
    /// Sparse masses keyed by free-lattice index, zero entries dropped.
    [[nodiscard]] const std::map<std::size_t, double>& masses() const { return masses_; }
    /// Entries with positive mass in lattice order.
    [[nodiscard]] std::vector<FocalElement> focal_elements() const;
    [[nodiscard]] double total() const;
    /// True when some positive mass sits on a model-empty element.
    [[nodiscard]] bool has_empty_mass() const;

  private:
    MassFunction(std::shared_ptr<const Model> model, std::map<std::size_t, double> masses)
        : model_{std::move(model)}, masses_{std::move(masses)} {}

    std::shared_ptr<const Model> model_;
    std::map<std::size_t, double> masses_;
};

/// Canonical storage key for `e` under `model`.
const Element& canonical_key(const Model& model, const Element& e);

/// Resolves each expression against the model's lattice and validates.
MassFunction load_bba(std::shared_ptr<const Model> model, std::span<const std::pair<std::string, double>> entries,
                      BbaOptions options = {});

inline std::vector<FocalElement> focal_elements(const MassFunction& m) { return m.focal_elements(); }

/// Random valid bba with between 1 and max_focal focal elements drawn from the
/// model's non-empty restricted elements.
MassFunction random_mass_function(std::shared_ptr<const Model> model, std::mt19937_64& rng, std::size_t max_focal);

} // namespace dsmt
