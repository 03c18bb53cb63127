#pragma once

#include <boost/rational.hpp>

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dsmt/bba.hpp"

namespace dsmt {

using Fraction = boost::rational<long long>;

/// Probabilities over every element of a model's restricted hyper-power set.
class PignisticDist {
  public:
    /// `values` holds one probability per restricted element, in order.
    PignisticDist(std::shared_ptr<const Model> model, std::vector<double> values);

    [[nodiscard]] const Model& model() const { return *model_; }
    [[nodiscard]] std::span<const double> values() const { return values_; }
    /// P{e}, through e's restricted class; 0 for model-empty elements.
    [[nodiscard]] double probability(const Element& e) const { return values_[model_->class_of(e).index]; }
    [[nodiscard]] double at(std::size_t restricted_index) const { return values_.at(restricted_index); }

  private:
    std::shared_ptr<const Model> model_;
    std::vector<double> values_;
};

/// One term C_M(X∩A)/C_M(X) of the generalized transformation, kept as the
/// unreduced pair of part counts.
struct Coefficient {
    RestrictedElement x;
    int shared_parts;
    int parts;

    [[nodiscard]] Fraction value() const { return Fraction{shared_parts, parts}; }
    /// "shared/parts" without reduction, e.g. "2/4".
    [[nodiscard]] std::string text() const { return std::to_string(shared_parts) + "/" + std::to_string(parts); }
};

struct GptCoefficientTable {
    RestrictedElement target;
    /// One row per non-empty restricted element X, in restricted order.
    std::vector<Coefficient> rows;
};

/// Exact coefficients of P{a} over the model's restricted elements.
GptCoefficientTable gpt_coefficients(const Element& a, const Model& model);

/// Generalized pignistic transformation under the bba's own model. Throws
/// ValidationError if some mass sits on a zero-cardinality element.
PignisticDist gpt(const MassFunction& m);
/// Same, checking that `model` is the bba's model.
PignisticDist gpt(const MassFunction& m, const Model& model);

/// Classical pignistic transformation with set cardinalities. Requires
/// Shafer's model.
PignisticDist classical_pt(const MassFunction& m);

struct AxiomCheck {
    std::string name;
    bool passed;
    double max_deviation;
    std::size_t cases;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;

    [[nodiscard]] bool passed() const;
    [[nodiscard]] const AxiomCheck* find(std::string_view name) const;
};

/// Checks bounds, unity, additivity over disjoint pairs, monotonicity,
/// pairwise inclusion-exclusion and, for lattices of at most 64 elements,
/// three-way inclusion-exclusion over all triples.
AxiomReport verify_axioms(const PignisticDist& p, double tolerance = 1e-9);

struct Decision {
    RestrictedElement choice;
    double probability;
    bool tie;
    /// Restricted indices of every candidate sharing the maximum.
    std::vector<std::size_t> tied;
};

/// Candidate with maximal probability, ties broken by lowest restricted index.
/// Throws ValidationError for an empty candidate list.
Decision decide(const PignisticDist& p, std::span<const Element> candidates);
/// Decides among the singletons θ1..θn.
Decision decide(const PignisticDist& p);

} // namespace dsmt
