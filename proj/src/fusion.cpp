#include "dsmt/fusion.hpp"

#include <vector>

#include "dsmt/errors.hpp"

namespace dsmt {

namespace {

constexpr double kContradictionEpsilon = 1e-12;

void require_sources(std::span<const MassFunction> sources) {
    if (sources.size() < 2) throw ValidationError("combination needs at least two sources");
}

void require_same_frame(std::span<const MassFunction> sources, int n) {
    for (const auto& s : sources) {
        if (s.model().frame_size() != n) throw ValidationError("sources are defined on different frames");
    }
}

// Calls visit(meet, join, product, tuple) for every tuple of focal elements,
// first source varying slowest.
template <typename Visitor>
std::size_t for_each_tuple(std::span<const MassFunction> sources, Visitor&& visit) {
    std::vector<std::vector<FocalElement>> focal;
    focal.reserve(sources.size());
    for (const auto& s : sources) {
        focal.push_back(s.focal_elements());
        if (focal.back().empty()) return 0;
    }
    const std::size_t k = focal.size();
    std::vector<std::size_t> cursor(k, 0);
    std::vector<Element> tuple(k);
    std::size_t count = 0;
    while (true) {
        PartMask meet = focal[0][cursor[0]].element.parts;
        PartMask join = meet;
        double product = 1.0;
        for (std::size_t i = 0; i < k; ++i) {
            const FocalElement& f = focal[i][cursor[i]];
            tuple[i] = f.element;
            meet &= f.element.parts;
            join |= f.element.parts;
            product *= f.mass;
        }
        visit(meet, join, product, std::span<const Element>(tuple));
        ++count;

        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (++cursor[pos] < focal[pos].size()) break;
            cursor[pos] = 0;
            if (pos == 0) return count;
        }
    }
}

std::vector<std::pair<Element, double>> to_entries(const Model& model, const std::map<std::size_t, double>& sums) {
    std::vector<std::pair<Element, double>> entries;
    entries.reserve(sums.size());
    for (const auto& [index, mass] : sums) entries.emplace_back(model.base()[index], mass);
    return entries;
}

FusionReport dempster_pair(const MassFunction& a, const MassFunction& b) {
    const Model& model = a.model();
    std::map<std::size_t, double> sums;
    double conflict = 0.0;
    const MassFunction pair[] = {a, b};
    const std::size_t tuples = for_each_tuple(pair, [&](PartMask meet, PartMask, double product, auto) {
        if (model.residual(Element{0, meet}).empty()) {
            conflict += product;
        } else {
            sums[model.class_of(Element{0, meet}).element.index] += product;
        }
    });
    if (1.0 - conflict <= kContradictionEpsilon) {
        throw DomainError("sources are in full contradiction (k12 = 1); Dempster's combination does not exist");
    }
    const double scale = 1.0 - conflict;
    for (auto& [index, mass] : sums) mass /= scale;
    const auto entries = to_entries(model, sums);
    FusionReport report{MassFunction::from_elements(a.model_ptr(), entries), conflict, {}, tuples, 0.0};
    report.routed_mass = report.combined.total();
    return report;
}

} // namespace

std::string_view to_string(Rule rule) {
    switch (rule) {
    case Rule::dempster:
        return "dempster";
    case Rule::dsm_classic:
        return "dsm-classic";
    case Rule::dsm_hybrid:
        return "dsm-hybrid";
    }
    return "?";
}

Rule parse_rule(std::string_view text) {
    if (text == "dempster") return Rule::dempster;
    if (text == "dsm-classic") return Rule::dsm_classic;
    if (text == "dsm-hybrid") return Rule::dsm_hybrid;
    throw ValidationError("unknown combination rule '" + std::string(text) + "'");
}

double conflict_degree(const MassFunction& m1, const MassFunction& m2) {
    if (!m1.model().equivalent(m2.model())) throw ValidationError("sources are defined on different models");
    const Model& model = m1.model();
    double conflict = 0.0;
    const MassFunction pair[] = {m1, m2};
    for_each_tuple(pair, [&](PartMask meet, PartMask, double product, auto) {
        if (model.residual(Element{0, meet}).empty()) conflict += product;
    });
    return conflict;
}

FusionReport dempster_combine(std::span<const MassFunction> sources) {
    require_sources(sources);
    const Model& model = sources.front().model();
    if (!model.is_shafer()) throw ValidationError("Dempster's rule requires Shafer's model");
    for (const auto& s : sources) {
        if (!s.model().equivalent(model)) throw ValidationError("sources are defined on different models");
        if (s.has_empty_mass()) throw ValidationError("Dempster's rule does not accept mass on empty elements");
    }
    FusionReport report = dempster_pair(sources[0], sources[1]);
    for (std::size_t i = 2; i < sources.size(); ++i) {
        FusionReport next = dempster_pair(report.combined, sources[i]);
        next.tuple_count += report.tuple_count;
        report = std::move(next);
    }
    return report;
}

FusionReport dsm_classic_combine(std::span<const MassFunction> sources) {
    require_sources(sources);
    const auto& model_ptr = sources.front().model_ptr();
    require_same_frame(sources, model_ptr->frame_size());
    for (const auto& s : sources) {
        if (!s.model().suppressed_parts().empty()) {
            throw ValidationError("the classic DSm rule requires the free model; use the hybrid rule");
        }
    }
    const FreeLattice& lattice = model_ptr->base();
    std::map<std::size_t, double> sums;
    double routed = 0.0;
    const std::size_t tuples = for_each_tuple(sources, [&](PartMask meet, PartMask, double product, auto) {
        sums[lattice.at(meet).index] += product;
        routed += product;
    });
    const auto entries = to_entries(*model_ptr, sums);
    return FusionReport{MassFunction::from_elements(model_ptr, entries), std::nullopt, {}, tuples, routed};
}

FusionReport dsm_hybrid_combine(std::span<const MassFunction> sources, std::shared_ptr<const Model> model) {
    require_sources(sources);
    if (!model) throw ValidationError("hybrid rule needs a model");
    const int n = model->frame_size();
    require_same_frame(sources, n);
    const FreeLattice& lattice = model->base();
    const std::size_t ignorance = model->total_ignorance().element.index;

    std::map<std::size_t, SBreakdown> breakdown;
    double routed = 0.0;
    const std::size_t tuples =
        for_each_tuple(sources, [&](PartMask meet, PartMask join, double product, std::span<const Element> tuple) {
            routed += product;
            if (!model->residual(Element{0, meet}).empty()) {
                breakdown[model->class_of(Element{0, meet}).element.index].s1 += product;
                return;
            }
            if (!model->residual(Element{0, join}).empty()) {
                breakdown[model->class_of(Element{0, join}).element.index].s3 += product;
                return;
            }
            IndexSet labels = 0;
            for (const Element& x : tuple) labels |= lattice.labels(x);
            PartMask u;
            for (int i : indices_of(labels)) u |= singleton_parts(n, i);
            const PartMask residual_u = model->residual(Element{0, u});
            const std::size_t target = residual_u.empty() ? ignorance : model->at_residual(residual_u).element.index;
            breakdown[target].s2 += product;
        });

    std::map<std::size_t, double> sums;
    for (const auto& [index, s] : breakdown) sums[index] = s.total();
    const auto entries = to_entries(*model, sums);
    return FusionReport{MassFunction::from_elements(model, entries), std::nullopt, std::move(breakdown), tuples,
                        routed};
}

FusionReport combine(Rule rule, std::span<const MassFunction> sources, std::shared_ptr<const Model> model) {
    switch (rule) {
    case Rule::dempster:
        return dempster_combine(sources);
    case Rule::dsm_classic:
        return dsm_classic_combine(sources);
    case Rule::dsm_hybrid:
        return dsm_hybrid_combine(sources, std::move(model));
    }
    throw ValidationError("unknown combination rule");
}

} // namespace dsmt
