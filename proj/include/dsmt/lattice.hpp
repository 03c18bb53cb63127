#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dsmt/expression.hpp"
#include "dsmt/part_mask.hpp"

namespace dsmt {

/// Bit set over hypothesis indices: bit i-1 stands for θ_i.
using IndexSet = std::uint32_t;

/// A member of the hyper-power set, identified by its Venn parts.
struct Element {
    std::size_t index{0};
    PartMask parts;

    bool operator==(const Element& o) const { return parts == o.parts; }
};

/// Minimal index sets S whose intersections ∩_{i∈S} θ_i make up `parts`,
/// i.e. the minimal antichain of an up-set. Sorted lexicographically by
/// their ascending index lists.
std::vector<IndexSet> canonical_terms(PartMask parts, int n);

/// Union of the canonical terms (the singletons composing the element).
IndexSet labels_of(PartMask parts, int n);

/// Canonical disjunctive form: union over canonical terms of the
/// intersection of their hypotheses.
Expr canonical_expression(PartMask parts, int n);

/// True when `parts` is upward closed: S included and S ⊆ T implies T included.
bool is_up_set(PartMask parts, int n);

/// 1-based indices contained in an IndexSet, ascending.
std::vector<int> indices_of(IndexSet set);

/// The hyper-power set of a frame of size n under the free model.
///
/// Immutable after construction. Elements are ordered by part count, then by
/// raw bit pattern, so element 0 is always ∅ and the last is θ1∪…∪θn.
class FreeLattice {
  public:
    /// Builds D^Θ for 1 <= n <= 6; throws ValidationError otherwise.
    static FreeLattice generate(int n);

    [[nodiscard]] int frame_size() const { return n_; }
    [[nodiscard]] std::size_t size() const { return elements_.size(); }
    [[nodiscard]] std::span<const Element> elements() const { return elements_; }
    [[nodiscard]] const Element& operator[](std::size_t i) const { return elements_[i]; }

    [[nodiscard]] const Element& empty_element() const { return elements_.front(); }
    /// θ1∪…∪θn.
    [[nodiscard]] const Element& top() const { return elements_.back(); }
    /// θ_index, 1-based.
    [[nodiscard]] const Element& singleton(int index) const;

    [[nodiscard]] std::optional<Element> find(PartMask parts) const;
    /// Like find, but throws ValidationError if `parts` is not an element.
    [[nodiscard]] const Element& at(PartMask parts) const;

    [[nodiscard]] const Element& meet(const Element& a, const Element& b) const { return at(a.parts & b.parts); }
    [[nodiscard]] const Element& join(const Element& a, const Element& b) const { return at(a.parts | b.parts); }

    /// Resolves expression text to its element. Throws ParseError or
    /// ValidationError.
    [[nodiscard]] const Element& parse(std::string_view text) const;

    [[nodiscard]] Expr expression(const Element& e) const { return canonical_expression(e.parts, n_); }
    [[nodiscard]] std::string name(const Element& e) const { return to_string(expression(e)); }
    /// u(X): hypotheses appearing in the canonical form; empty for ∅.
    [[nodiscard]] IndexSet labels(const Element& e) const { return labels_of(e.parts, n_); }

  private:
    FreeLattice(int n, std::vector<Element> elements);

    int n_;
    std::vector<Element> elements_;
    // Offset of the first element with k parts, k = 0..2^n (one past the end at 2^n).
    std::vector<std::size_t> bucket_start_;
};

} // namespace dsmt
