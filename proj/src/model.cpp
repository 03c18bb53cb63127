#include "dsmt/model.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "dsmt/errors.hpp"

namespace dsmt {

namespace {

// Parts shared by at least two hypotheses.
PartMask multi_hypothesis_parts(int n) {
    PartMask out;
    const IndexSet top = IndexSet{1} << n;
    for (IndexSet s = 1; s < top; ++s) {
        if (std::popcount(s) >= 2) out |= PartMask::part(s);
    }
    return out;
}

} // namespace

std::string_view to_string(ModelKind kind) {
    switch (kind) {
    case ModelKind::free:
        return "free";
    case ModelKind::shafer:
        return "shafer";
    case ModelKind::hybrid:
        return "hybrid";
    }
    return "?";
}

std::string_view to_string(ConstraintKind kind) {
    switch (kind) {
    case ConstraintKind::exclusivity:
        return "exclusivity";
    case ConstraintKind::non_existential:
        return "non-existential";
    case ConstraintKind::hybrid:
        return "hybrid";
    }
    return "?";
}

ConstraintKind classify_constraint(const Element& e, int n) {
    const auto terms = canonical_terms(e.parts, n);
    const bool all_singletons =
        std::all_of(terms.begin(), terms.end(), [](IndexSet t) { return std::popcount(t) == 1; });
    if (all_singletons) return ConstraintKind::non_existential;
    if (terms.size() == 1) return ConstraintKind::exclusivity;
    return ConstraintKind::hybrid;
}

Model Model::build(std::shared_ptr<const FreeLattice> base, std::span<const std::string> constraint_exprs) {
    Model m;
    m.base_ = std::move(base);
    const FreeLattice& lattice = *m.base_;
    const int n = lattice.frame_size();
    const PartMask all = PartMask::all(n);

    for (const auto& text : constraint_exprs) {
        const Element& e = lattice.parse(text);
        if (e.parts.empty()) throw ValidationError("constraint '" + text + "' denotes the empty set");
        if (e.parts == all) {
            throw ValidationError("constraint '" + text + "' empties the total ignorance (degenerate model)");
        }
        if (std::find(m.constraints_.begin(), m.constraints_.end(), e) == m.constraints_.end()) {
            m.constraints_.push_back(e);
        }
        m.suppressed_ |= e.parts;
    }
    if (m.suppressed_ == all) throw ValidationError("constraints jointly empty the total ignorance (degenerate model)");
    std::sort(m.constraints_.begin(), m.constraints_.end(),
              [](const Element& a, const Element& b) { return a.index < b.index; });

    if (m.constraints_.empty()) {
        m.kind_ = ModelKind::free;
    } else if (m.suppressed_ == multi_hypothesis_parts(n)) {
        m.kind_ = ModelKind::shafer;
    } else {
        m.kind_ = ModelKind::hybrid;
    }

    // The first preimage of each residual in lattice order has the fewest
    // parts, and is the unique smallest one (the meet of all preimages).
    std::vector<RestrictedElement> classes;
    if (m.suppressed_.empty()) {
        classes.reserve(lattice.size());
        for (const Element& e : lattice.elements()) classes.push_back({0, e, e.parts});
    } else {
        std::unordered_map<std::uint64_t, std::size_t> seen;
        for (const Element& e : lattice.elements()) {
            const PartMask r = m.residual(e);
            if (r.empty() && e.index != 0) m.empty_members_.push_back(e);
            if (seen.emplace(r.bits(), classes.size()).second) classes.push_back({0, e, r});
        }
        std::sort(classes.begin(), classes.end(),
                  [](const RestrictedElement& a, const RestrictedElement& b) { return a.residual < b.residual; });
    }
    for (std::size_t i = 0; i < classes.size(); ++i) classes[i].index = i;
    m.restricted_ = std::move(classes);
    return m;
}

Model Model::build(int n, std::span<const std::string> constraint_exprs) {
    return build(std::make_shared<const FreeLattice>(FreeLattice::generate(n)), constraint_exprs);
}

Model Model::free(int n) { return build(n, {}); }

Model Model::shafer(int n) {
    std::vector<std::string> pairs;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) pairs.push_back("t" + std::to_string(i) + "^t" + std::to_string(j));
    }
    return build(n, pairs);
}

bool Model::is_shafer() const { return suppressed_ == multi_hypothesis_parts(frame_size()); }

const RestrictedElement& Model::at_residual(PartMask residual) const {
    const auto it = std::lower_bound(restricted_.begin(), restricted_.end(), residual,
                                     [](const RestrictedElement& e, PartMask r) { return e.residual < r; });
    if (it == restricted_.end() || it->residual != residual) {
        throw ValidationError("part set is not an element of the restricted hyper-power set");
    }
    return *it;
}

std::vector<std::string> Model::constraint_names() const {
    std::vector<std::string> out;
    out.reserve(constraints_.size());
    for (const Element& e : constraints_) out.push_back(name(e));
    return out;
}

} // namespace dsmt
