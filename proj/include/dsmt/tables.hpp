#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dsmt/pignistic.hpp"

namespace dsmt {

/// Reference data for the three-hypothesis frame: cardinality tables for the
/// free, hybrid (only θ1∩θ2 non-empty) and Shafer models, the coefficient
/// matrices of the generalized pignistic transformation on the latter two,
/// and the coefficient comparison between (θ1∪θ3)∩θ2 and θ2 on the free
/// model. Fractions are stored as published, unreduced.
namespace reference {

struct CardinalityRow {
    int alpha;
    std::string_view expr;
    int cardinality;
};

/// Coefficients of P{α_target} against m(α_1), m(α_2), ... in order.
struct CoefficientColumn {
    int target;
    std::vector<std::string_view> coefficients;
};

struct ComparisonRow {
    int x;
    std::string_view lower;
    std::string_view upper;
};

std::span<const CardinalityRow> free_cardinalities();
std::span<const CardinalityRow> hybrid_cardinalities();
std::span<const CardinalityRow> shafer_cardinalities();
/// Table ids 4..9.
std::span<const CoefficientColumn> coefficient_columns(int table);
std::span<const ComparisonRow> comparison_rows();
/// Elements compared by comparison_rows(): lower ⊆ upper.
inline constexpr std::string_view kComparisonLower = "(t1vt3)^t2";
inline constexpr std::string_view kComparisonUpper = "t2";

/// Constraints of the hybrid model the tables use.
std::vector<std::string> hybrid_constraints();

} // namespace reference

/// "1".."9" and "comparison".
std::vector<std::string> reference_table_ids();

/// The model a reference table is defined on. Throws ValidationError for an
/// unknown id.
std::shared_ptr<const Model> reference_model(std::string_view id);

/// Parses "a/b" or an integer into an exact fraction.
Fraction parse_fraction(std::string_view text);

/// Renders a reference table computed from `model`. Byte-stable. Throws
/// ValidationError for an unknown id or when `model` is not the table's model.
std::string emit_table(std::string_view id, const Model& model);

struct TableCheck {
    std::string id;
    std::size_t entries{0};
    std::vector<std::string> mismatches;
    /// Computed entries the fixture does not list.
    std::vector<std::string> notes;

    [[nodiscard]] bool passed() const { return mismatches.empty() && entries > 0; }
};

/// Recomputes a reference table and diffs it against the embedded fixture.
TableCheck check_reference_table(std::string_view id);

} // namespace dsmt
