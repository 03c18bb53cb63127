#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dsmt/lattice.hpp"

namespace dsmt {

enum class ModelKind { free, shafer, hybrid };
enum class ConstraintKind { exclusivity, non_existential, hybrid };

std::string_view to_string(ModelKind kind);
std::string_view to_string(ConstraintKind kind);

/// Exclusivity for a single conjunction, non-existential for a union of
/// singletons, hybrid for anything mixing both operators.
ConstraintKind classify_constraint(const Element& e, int n);

/// An element of the hyper-power set as seen through a model: the parts that
/// survive the integrity constraints, plus the free-model element that
/// represents it (the smallest element with that residual).
struct RestrictedElement {
    std::size_t index{0};
    Element element;
    PartMask residual;
};

/// A free, Shafer or hybrid DSm model together with its restricted
/// hyper-power set.
///
/// Constraints act purely by suppressing Venn parts, so every inner
/// constraint B ⊆ A and every C ⊆ A∪B of two constraints is emptied without
/// symbolic reasoning.
class Model {
  public:
    /// Throws ParseError for bad expressions and ValidationError for ∅ or
    /// total-ignorance constraints.
    static Model build(std::shared_ptr<const FreeLattice> base, std::span<const std::string> constraint_exprs);
    static Model build(int n, std::span<const std::string> constraint_exprs);
    static Model free(int n);
    /// Every pairwise intersection θi∩θj constrained.
    static Model shafer(int n);

    [[nodiscard]] const FreeLattice& base() const { return *base_; }
    [[nodiscard]] const std::shared_ptr<const FreeLattice>& base_ptr() const { return base_; }
    [[nodiscard]] int frame_size() const { return base_->frame_size(); }
    [[nodiscard]] ModelKind kind() const { return kind_; }
    /// True when the surviving parts are exactly the n singleton parts.
    [[nodiscard]] bool is_shafer() const;

    [[nodiscard]] std::span<const Element> constraints() const { return constraints_; }
    [[nodiscard]] PartMask suppressed_parts() const { return suppressed_; }
    [[nodiscard]] PartMask residual(const Element& e) const { return e.parts.minus(suppressed_); }
    /// C_M(e): number of surviving parts.
    [[nodiscard]] int cardinality(const Element& e) const { return residual(e).count(); }
    [[nodiscard]] bool is_empty(const Element& e) const { return residual(e).empty(); }

    /// Restricted hyper-power set ordered by residual part count then bit
    /// pattern; entry 0 is ∅ and the last entry is the total ignorance.
    [[nodiscard]] std::span<const RestrictedElement> restricted() const { return restricted_; }
    /// Elements other than ∅ forced empty by the constraints.
    [[nodiscard]] std::span<const Element> empty_set_members() const { return empty_members_; }

    /// The restricted element a free element collapses to (entry 0 if empty).
    [[nodiscard]] const RestrictedElement& class_of(const Element& e) const { return at_residual(residual(e)); }
    [[nodiscard]] const RestrictedElement& at_residual(PartMask residual) const;
    [[nodiscard]] const RestrictedElement& total_ignorance() const { return restricted_.back(); }

    /// Parses against the base lattice.
    [[nodiscard]] const Element& parse(std::string_view text) const { return base_->parse(text); }
    [[nodiscard]] std::string name(const Element& e) const { return base_->name(e); }

    /// Canonical text of every constraint, suitable for re-serialization.
    [[nodiscard]] std::vector<std::string> constraint_names() const;

    /// Same frame and same suppressed parts.
    [[nodiscard]] bool equivalent(const Model& other) const {
        return frame_size() == other.frame_size() && suppressed_ == other.suppressed_;
    }

  private:
    Model() = default;

    std::shared_ptr<const FreeLattice> base_;
    std::vector<Element> constraints_;
    PartMask suppressed_;
    ModelKind kind_{ModelKind::free};
    std::vector<RestrictedElement> restricted_;
    std::vector<Element> empty_members_;
};

/// Number of Venn parts of `a` that survive the model.
inline int dsm_cardinality(const Element& a, const Model& m) { return m.cardinality(a); }

/// φ(A) == 0: the element is ∅ or was forced empty by the model.
inline bool is_empty_under(const Element& a, const Model& m) { return m.is_empty(a); }

} // namespace dsmt
