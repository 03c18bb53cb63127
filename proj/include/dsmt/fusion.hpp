#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string_view>

#include "dsmt/bba.hpp"

namespace dsmt {

enum class Rule { dempster, dsm_classic, dsm_hybrid };

std::string_view to_string(Rule rule);
/// Accepts "dempster", "dsm-classic", "dsm-hybrid"; throws ValidationError.
Rule parse_rule(std::string_view text);

/// Contributions of the three hybrid-rule terms to one output element.
struct SBreakdown {
    double s1{0.0};
    double s2{0.0};
    double s3{0.0};

    [[nodiscard]] double total() const { return s1 + s2 + s3; }
};

struct FusionReport {
    MassFunction combined;
    /// Degree of conflict of the last pairwise step (Dempster only).
    std::optional<double> conflict_k12;
    /// Keyed by free-lattice index of the receiving element (hybrid only).
    std::map<std::size_t, SBreakdown> s_breakdown;
    /// Number of focal tuples enumerated.
    std::size_t tuple_count{0};
    /// Sum of all tuple products routed to an output element.
    double routed_mass{0.0};
};

/// Degree of conflict: total product mass of focal pairs whose intersection
/// is empty under the shared model.
double conflict_degree(const MassFunction& m1, const MassFunction& m2);

/// Dempster's rule folded pairwise over the sources. Requires a Shafer model
/// and no mass on empty elements; throws DomainError under total conflict.
FusionReport dempster_combine(std::span<const MassFunction> sources);

/// Conjunctive k-ary tuple sum on the free model, unnormalized.
FusionReport dsm_classic_combine(std::span<const MassFunction> sources);

/// Hybrid DSm rule for `model`: S1 keeps non-empty intersections, S3 moves
/// tuples with an empty intersection to their union, S2 moves tuples made
/// only of empty elements to the union of their labels (or to the total
/// ignorance when that union is itself empty).
FusionReport dsm_hybrid_combine(std::span<const MassFunction> sources, std::shared_ptr<const Model> model);

/// Dispatches on `rule`; `model` is only used by the hybrid rule.
FusionReport combine(Rule rule, std::span<const MassFunction> sources, std::shared_ptr<const Model> model);

} // namespace dsmt
