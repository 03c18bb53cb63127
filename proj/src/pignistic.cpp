#include "dsmt/pignistic.hpp"

#include <algorithm>
#include <cmath>

#include "dsmt/errors.hpp"

namespace dsmt {

namespace {

constexpr double kTieTolerance = 1e-12;

struct WeightedClass {
    PartMask residual;
    int parts;
    double mass;
};

std::vector<WeightedClass> weighted_classes(const MassFunction& m) {
    const Model& model = m.model();
    std::vector<WeightedClass> out;
    for (const auto& f : m.focal_elements()) {
        const PartMask r = model.residual(f.element);
        if (r.empty()) {
            throw ValidationError("mass on " + model.name(f.element) +
                                  ", which has zero DSm cardinality under the model");
        }
        out.push_back({r, r.count(), f.mass});
    }
    return out;
}

} // namespace

PignisticDist::PignisticDist(std::shared_ptr<const Model> model, std::vector<double> values)
    : model_{std::move(model)}, values_{std::move(values)} {
    if (!model_) throw ValidationError("distribution has no model");
    if (values_.size() != model_->restricted().size()) {
        throw ValidationError("distribution needs one value per restricted element");
    }
}

GptCoefficientTable gpt_coefficients(const Element& a, const Model& model) {
    GptCoefficientTable table{model.class_of(a), {}};
    const PartMask target = table.target.residual;
    for (const auto& x : model.restricted()) {
        if (x.index == 0) continue;
        table.rows.push_back({x, (x.residual & target).count(), x.residual.count()});
    }
    return table;
}

PignisticDist gpt(const MassFunction& m) {
    const Model& model = m.model();
    const auto classes = weighted_classes(m);
    std::vector<double> values;
    values.reserve(model.restricted().size());
    for (const auto& a : model.restricted()) {
        double p = 0.0;
        if (a.index != 0) {
            for (const auto& x : classes) {
                p += static_cast<double>((x.residual & a.residual).count()) / x.parts * x.mass;
            }
        }
        values.push_back(p);
    }
    return PignisticDist{m.model_ptr(), std::move(values)};
}

PignisticDist gpt(const MassFunction& m, const Model& model) {
    if (!m.model().equivalent(model)) throw ValidationError("bba is defined on a different model");
    return gpt(m);
}

PignisticDist classical_pt(const MassFunction& m) {
    const Model& model = m.model();
    if (!model.is_shafer()) throw ValidationError("the classical pignistic transformation requires Shafer's model");
    const int n = model.frame_size();

    // Under Shafer's model each restricted element is an ordinary subset of Θ.
    auto as_subset = [&](const Element& e) {
        IndexSet s = 0;
        for (int i = 1; i <= n; ++i) {
            if (!(e.parts & singleton_parts(n, i)).minus(model.suppressed_parts()).empty()) s |= IndexSet{1} << (i - 1);
        }
        return s;
    };

    std::vector<std::pair<IndexSet, double>> focal;
    for (const auto& f : m.focal_elements()) {
        const IndexSet s = as_subset(f.element);
        if (s == 0) throw ValidationError("mass on the empty set");
        focal.emplace_back(s, f.mass);
    }
    std::vector<double> values;
    for (const auto& a : model.restricted()) {
        const IndexSet sa = as_subset(a.element);
        double p = 0.0;
        if (sa != 0) {
            for (const auto& [sx, mass] : focal) {
                p += static_cast<double>(std::popcount(sx & sa)) / std::popcount(sx) * mass;
            }
        }
        values.push_back(p);
    }
    return PignisticDist{m.model_ptr(), std::move(values)};
}

bool AxiomReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck* AxiomReport::find(std::string_view name) const {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

AxiomReport verify_axioms(const PignisticDist& p, double tolerance) {
    const Model& model = p.model();
    const auto restricted = model.restricted();
    const std::size_t size = restricted.size();
    auto value = [&](PartMask residual) { return p.at(model.at_residual(residual).index); };

    AxiomCheck bounds{"bounds", true, 0.0, 0};
    AxiomCheck unity{"unity", true, 0.0, 2};
    AxiomCheck additivity{"additivity", true, 0.0, 0};
    AxiomCheck monotonicity{"monotonicity", true, 0.0, 0};
    AxiomCheck poincare{"poincare", true, 0.0, 0};
    AxiomCheck inclusion_exclusion{"inclusion-exclusion", true, 0.0, 0};

    for (std::size_t i = 0; i < size; ++i) {
        const double v = p.at(i);
        bounds.max_deviation = std::max({bounds.max_deviation, -v, v - 1.0});
        ++bounds.cases;
    }
    unity.max_deviation = std::max(std::abs(p.at(size - 1) - 1.0), std::abs(p.at(0)));

    for (std::size_t i = 0; i < size; ++i) {
        const PartMask a = restricted[i].residual;
        for (std::size_t j = 0; j < size; ++j) {
            const PartMask b = restricted[j].residual;
            const double pa = p.at(i), pb = p.at(j);
            if (i < j && (a & b).empty()) {
                additivity.max_deviation = std::max(additivity.max_deviation, std::abs(value(a | b) - pa - pb));
                ++additivity.cases;
            }
            if (a.subset_of(b)) {
                monotonicity.max_deviation = std::max(monotonicity.max_deviation, pa - pb);
                ++monotonicity.cases;
            }
            if (i <= j) {
                poincare.max_deviation =
                    std::max(poincare.max_deviation, std::abs(value(a | b) - pa - pb + value(a & b)));
                ++poincare.cases;
            }
        }
    }

    if (size <= 64) {
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = i; j < size; ++j) {
                for (std::size_t k = j; k < size; ++k) {
                    const PartMask a = restricted[i].residual, b = restricted[j].residual, c = restricted[k].residual;
                    const double expected = p.at(i) + p.at(j) + p.at(k) - value(a & b) - value(a & c) -
                                            value(b & c) + value(a & b & c);
                    inclusion_exclusion.max_deviation =
                        std::max(inclusion_exclusion.max_deviation, std::abs(value(a | b | c) - expected));
                    ++inclusion_exclusion.cases;
                }
            }
        }
    }

    AxiomReport report;
    for (AxiomCheck* c : {&bounds, &unity, &additivity, &monotonicity, &poincare, &inclusion_exclusion}) {
        c->max_deviation = std::max(c->max_deviation, 0.0);
        c->passed = c->max_deviation <= tolerance;
        report.checks.push_back(*c);
    }
    return report;
}

Decision decide(const PignisticDist& p, std::span<const Element> candidates) {
    if (candidates.empty()) throw ValidationError("no decision candidates");
    const Model& model = p.model();
    std::vector<std::size_t> indices;
    for (const Element& e : candidates) indices.push_back(model.class_of(e).index);
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());

    double best = -1.0;
    for (std::size_t i : indices) best = std::max(best, p.at(i));
    std::vector<std::size_t> tied;
    for (std::size_t i : indices) {
        if (best - p.at(i) <= kTieTolerance) tied.push_back(i);
    }
    const RestrictedElement& choice = model.restricted()[tied.front()];
    return Decision{choice, p.at(choice.index), tied.size() > 1, std::move(tied)};
}

Decision decide(const PignisticDist& p) {
    const Model& model = p.model();
    std::vector<Element> singletons;
    for (int i = 1; i <= model.frame_size(); ++i) singletons.push_back(model.base().singleton(i));
    return decide(p, singletons);
}

} // namespace dsmt
