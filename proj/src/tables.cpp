#include "dsmt/tables.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

#include "dsmt/errors.hpp"

namespace dsmt {

namespace reference {

namespace {

constexpr std::array<CardinalityRow, 19> kFree = {{
    {0, "empty", 0},
    {1, "t1^t2^t3", 1},
    {2, "t1^t2", 2},
    {3, "t1^t3", 2},
    {4, "t2^t3", 2},
    {5, "(t1vt2)^t3", 3},
    {6, "(t1vt3)^t2", 3},
    {7, "(t2vt3)^t1", 3},
    {8, "((t1^t2)vt3)^(t1vt2)", 4},
    {9, "t1", 4},
    {10, "t2", 4},
    {11, "t3", 4},
    {12, "(t1^t2)vt3", 5},
    {13, "(t1^t3)vt2", 5},
    {14, "(t2^t3)vt1", 5},
    {15, "t1vt2", 6},
    {16, "t1vt3", 6},
    {17, "t2vt3", 6},
    {18, "t1vt2vt3", 7},
}};

constexpr std::array<CardinalityRow, 9> kHybrid = {{
    {0, "empty", 0},
    {1, "t1^t2", 1},
    {2, "t3", 1},
    {3, "t1", 2},
    {4, "t2", 2},
    {5, "t1vt2", 3},
    {6, "t1vt3", 3},
    {7, "t2vt3", 3},
    {8, "t1vt2vt3", 4},
}};

constexpr std::array<CardinalityRow, 8> kShafer = {{
    {0, "empty", 0},
    {1, "t1", 1},
    {2, "t2", 1},
    {3, "t3", 1},
    {4, "t1vt2", 2},
    {5, "t1vt3", 2},
    {6, "t2vt3", 2},
    {7, "t1vt2vt3", 3},
}};

// Hybrid model, targets α1..α8 over X = α1..α8.
const std::vector<CoefficientColumn> kTable4 = {
    {1, {"1/1", "0/1", "1/2", "1/2", "1/3", "1/3", "1/3", "1/4"}},
    {2, {"0/1", "1/1", "0/2", "0/2", "0/3", "1/3", "1/3", "1/4"}},
    {3, {"1/1", "0/2", "2/2", "1/2", "2/3", "2/3", "1/3", "2/4"}},
};
const std::vector<CoefficientColumn> kTable5 = {
    {4, {"1/1", "0/1", "1/2", "2/2", "2/3", "1/3", "2/3", "2/4"}},
    {5, {"1/1", "0/1", "2/2", "2/2", "3/3", "2/3", "2/3", "3/4"}},
    {6, {"1/1", "1/1", "2/2", "1/2", "2/3", "3/3", "2/3", "3/4"}},
};
const std::vector<CoefficientColumn> kTable6 = {
    {7, {"1/1", "2/2", "1/2", "2/2", "2/3", "2/3", "3/3", "3/4"}},
    {8, {"1/1", "2/2", "2/2", "2/2", "3/3", "3/3", "3/3", "4/4"}},
};

// Shafer model, targets α1..α7 over X = α1..α7.
const std::vector<CoefficientColumn> kTable7 = {
    {1, {"1/1", "0/1", "0/1", "1/2", "1/2", "0/2", "1/3"}},
    {2, {"0/1", "1/1", "0/1", "1/2", "0/2", "1/2", "1/3"}},
    {3, {"0/1", "0/1", "1/1", "0/2", "1/2", "1/2", "1/3"}},
};
const std::vector<CoefficientColumn> kTable8 = {
    {4, {"1/1", "1/1", "0/1", "2/2", "1/2", "1/2", "2/3"}},
    {5, {"1/1", "0/1", "1/1", "1/2", "2/2", "1/2", "2/3"}},
    {6, {"0/1", "1/1", "1/1", "1/2", "1/2", "2/2", "2/3"}},
};
const std::vector<CoefficientColumn> kTable9 = {
    {7, {"1/1", "1/1", "1/1", "2/2", "2/2", "2/2", "3/3"}},
};

constexpr std::array<ComparisonRow, 18> kComparison = {{
    {1, "1", "1"},       {2, "1", "1"},       {3, "1/2", "1/2"},   {4, "1", "1"},       {5, "2/3", "2/3"},
    {6, "1", "1"},       {7, "2/3", "2/3"},   {8, "3/4", "3/4"},   {9, "2/4", "2/4"},   {10, "3/4", "1"},
    {11, "2/4", "2/4"},  {12, "3/5", "3/5"},  {13, "3/5", "4/5"},  {14, "3/5", "3/5"},  {15, "3/6", "4/6"},
    {16, "3/6", "3/6"},  {17, "3/6", "4/6"},  {18, "3/7", "4/7"},
}};

} // namespace

std::span<const CardinalityRow> free_cardinalities() { return kFree; }
std::span<const CardinalityRow> hybrid_cardinalities() { return kHybrid; }
std::span<const CardinalityRow> shafer_cardinalities() { return kShafer; }

std::span<const CoefficientColumn> coefficient_columns(int table) {
    switch (table) {
    case 4:
        return kTable4;
    case 5:
        return kTable5;
    case 6:
        return kTable6;
    case 7:
        return kTable7;
    case 8:
        return kTable8;
    case 9:
        return kTable9;
    default:
        throw ValidationError("no coefficient table " + std::to_string(table));
    }
}

std::span<const ComparisonRow> comparison_rows() { return kComparison; }

std::vector<std::string> hybrid_constraints() { return {"t1^t3", "t2^t3"}; }

} // namespace reference

namespace {

constexpr std::string_view kComparisonId = "comparison";

int table_number(std::string_view id) {
    if (id.size() == 1 && id[0] >= '1' && id[0] <= '9') return id[0] - '0';
    if (id == kComparisonId) return 0;
    throw ValidationError("unknown reference table '" + std::string(id) + "'");
}

enum class TableModel { free, hybrid, shafer };

TableModel model_of(int number) {
    switch (number) {
    case 0:
    case 1:
        return TableModel::free;
    case 2:
    case 4:
    case 5:
    case 6:
        return TableModel::hybrid;
    default:
        return TableModel::shafer;
    }
}

std::shared_ptr<const Model> build_model(TableModel kind) {
    switch (kind) {
    case TableModel::free:
        return std::make_shared<const Model>(Model::free(3));
    case TableModel::hybrid: {
        const auto constraints = reference::hybrid_constraints();
        return std::make_shared<const Model>(Model::build(3, constraints));
    }
    case TableModel::shafer:
        return std::make_shared<const Model>(Model::shafer(3));
    }
    return nullptr;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

std::string header(int number, const Model& model) {
    std::ostringstream out;
    out << "Table " << number << "  (n=" << model.frame_size() << ", " << to_string(model.kind()) << " model";
    const auto names = model.constraint_names();
    if (!names.empty()) {
        out << "; empty:";
        for (const auto& c : names) out << ' ' << c;
    }
    out << ")\n";
    return out.str();
}

std::size_t name_width(const Model& model) {
    std::size_t width = 7;
    for (const auto& r : model.restricted()) width = std::max(width, model.name(r.element).size() + 2);
    return width;
}

std::string alpha(std::size_t i) { return "a" + std::to_string(i); }

std::string emit_cardinalities(int number, const Model& model) {
    std::ostringstream out;
    out << header(number, model);
    const std::size_t width = name_width(model);
    out << pad("A", 5) << pad("element", width) << "C_M(A)\n";
    for (const auto& r : model.restricted()) {
        out << pad(alpha(r.index), 5) << pad(model.name(r.element), width) << r.residual.count() << '\n';
    }
    return out.str();
}

std::string emit_coefficients(int number, const Model& model) {
    const auto cards = model_of(number) == TableModel::hybrid ? reference::hybrid_cardinalities()
                                                                : reference::shafer_cardinalities();
    std::ostringstream out;
    out << header(number, model);
    const std::size_t width = name_width(model);
    std::vector<GptCoefficientTable> columns;
    for (const auto& col : reference::coefficient_columns(number)) {
        columns.push_back(gpt_coefficients(model.parse(cards[static_cast<std::size_t>(col.target)].expr), model));
    }
    out << pad("X", 5) << pad("element", width);
    for (const auto& c : columns) out << pad("P{" + alpha(c.target.index) + "}", 8);
    out << '\n';
    for (std::size_t row = 0; row < columns.front().rows.size(); ++row) {
        const RestrictedElement& x = columns.front().rows[row].x;
        out << pad(alpha(x.index), 5) << pad(model.name(x.element), width);
        for (const auto& c : columns) out << pad(c.rows[row].text(), 8);
        out << '\n';
    }
    return out.str();
}

std::string emit_comparison(const Model& model) {
    const Element& lower = model.parse(reference::kComparisonLower);
    const Element& upper = model.parse(reference::kComparisonUpper);
    const auto low = gpt_coefficients(lower, model);
    const auto up = gpt_coefficients(upper, model);
    std::ostringstream out;
    out << "Coefficient comparison  (n=3, free model; A = " << model.name(lower) << ", B = " << model.name(upper)
        << ")\n";
    const std::size_t width = name_width(model);
    out << pad("X", 5) << pad("element", width) << pad("C(X^A)/C(X)", 14) << pad("", 4) << "C(X^B)/C(X)\n";
    for (std::size_t row = 0; row < low.rows.size(); ++row) {
        const RestrictedElement& x = low.rows[row].x;
        const bool ordered = low.rows[row].value() <= up.rows[row].value();
        out << pad(alpha(x.index), 5) << pad(model.name(x.element), width) << pad(low.rows[row].text(), 14)
            << pad(ordered ? "<=" : ">", 4) << up.rows[row].text() << '\n';
    }
    return out.str();
}

void check_cardinalities(std::span<const reference::CardinalityRow> rows, const Model& model, bool ordered,
                         TableCheck& check) {
    if (model.restricted().size() != rows.size()) {
        check.mismatches.push_back("expected " + std::to_string(rows.size()) + " elements, found " +
                                   std::to_string(model.restricted().size()));
    }
    std::vector<std::size_t> seen;
    for (const auto& row : rows) {
        ++check.entries;
        const Element& e = model.parse(row.expr);
        const RestrictedElement& r = model.class_of(e);
        const std::string label = alpha(static_cast<std::size_t>(row.alpha)) + " = " + std::string(row.expr);
        if (r.residual.count() != row.cardinality) {
            check.mismatches.push_back(label + ": cardinality " + std::to_string(r.residual.count()) + ", expected " +
                                       std::to_string(row.cardinality));
        }
        if (ordered && !seen.empty() && r.index <= seen.back()) {
            check.mismatches.push_back(label + ": out of order (index " + std::to_string(r.index) + ")");
        }
        if (ordered && model.restricted().size() == rows.size() && r.index != static_cast<std::size_t>(row.alpha)) {
            check.mismatches.push_back(label + ": found at index " + std::to_string(r.index));
        }
        seen.push_back(r.index);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
        check.mismatches.push_back("reference rows name the same element twice");
    }
    for (const auto& r : model.restricted()) {
        if (!std::binary_search(seen.begin(), seen.end(), r.index)) {
            check.mismatches.push_back("unlisted element " + model.name(r.element) + " (C_M " +
                                       std::to_string(r.residual.count()) + ")");
        }
    }
}

void check_coefficients(int number, const Model& model, TableCheck& check) {
    const auto cards = model_of(number) == TableModel::hybrid ? reference::hybrid_cardinalities()
                                                                : reference::shafer_cardinalities();
    std::vector<std::size_t> listed;
    for (const auto& row : cards) listed.push_back(model.class_of(model.parse(row.expr)).index);
    std::sort(listed.begin(), listed.end());
    for (const auto& col : reference::coefficient_columns(number)) {
        const Element& target = model.parse(cards[static_cast<std::size_t>(col.target)].expr);
        const auto table = gpt_coefficients(target, model);
        const std::string label = "P{" + alpha(static_cast<std::size_t>(col.target)) + "}";
        for (std::size_t i = 0; i < col.coefficients.size(); ++i) {
            ++check.entries;
            const Element& x = model.parse(cards[i + 1].expr);
            const auto it = std::find_if(table.rows.begin(), table.rows.end(),
                                         [&](const Coefficient& c) { return c.x.element == model.class_of(x).element; });
            const Fraction expected = parse_fraction(col.coefficients[i]);
            if (it == table.rows.end() || it->value() != expected) {
                check.mismatches.push_back(label + " coefficient of m(" + alpha(i + 1) +
                                           "): " + (it == table.rows.end() ? "missing" : it->text()) + ", expected " +
                                           std::string(col.coefficients[i]));
            }
        }
        for (const auto& row : table.rows) {
            if (!std::binary_search(listed.begin(), listed.end(), row.x.index)) {
                check.notes.push_back(label + " has an extra term for unlisted " + model.name(row.x.element) + ": " +
                                      row.text());
            }
        }
    }
}

void check_comparison(const Model& model, TableCheck& check) {
    const Element& lower = model.parse(reference::kComparisonLower);
    const Element& upper = model.parse(reference::kComparisonUpper);
    const auto cards = reference::free_cardinalities();
    for (const auto& row : reference::comparison_rows()) {
        check.entries += 2;
        const Element& x = model.parse(cards[static_cast<std::size_t>(row.x)].expr);
        const Fraction low{model.cardinality(model.base().meet(x, lower)), model.cardinality(x)};
        const Fraction up{model.cardinality(model.base().meet(x, upper)), model.cardinality(x)};
        const std::string label = "X = " + alpha(static_cast<std::size_t>(row.x));
        if (low != parse_fraction(row.lower)) {
            check.mismatches.push_back(label + ": lower coefficient differs from " + std::string(row.lower));
        }
        if (up != parse_fraction(row.upper)) {
            check.mismatches.push_back(label + ": upper coefficient differs from " + std::string(row.upper));
        }
        if (!(low <= up)) check.mismatches.push_back(label + ": ordering violated");
    }
}

} // namespace

std::vector<std::string> reference_table_ids() {
    return {"1", "2", "3", "4", "5", "6", "7", "8", "9", std::string(kComparisonId)};
}

std::shared_ptr<const Model> reference_model(std::string_view id) { return build_model(model_of(table_number(id))); }

Fraction parse_fraction(std::string_view text) {
    const auto slash = text.find('/');
    auto to_int = [&](std::string_view part) {
        long long v = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc{} || ptr != part.data() + part.size()) {
            throw ValidationError("bad fraction '" + std::string(text) + "'");
        }
        return v;
    };
    if (slash == std::string_view::npos) return Fraction{to_int(text)};
    const long long den = to_int(text.substr(slash + 1));
    if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
    return Fraction{to_int(text.substr(0, slash)), den};
}

std::string emit_table(std::string_view id, const Model& model) {
    const int number = table_number(id);
    if (!reference_model(id)->equivalent(model)) {
        throw ValidationError("table " + std::string(id) + " is not defined for this model");
    }
    if (number == 0) return emit_comparison(model);
    if (number <= 3) return emit_cardinalities(number, model);
    return emit_coefficients(number, model);
}

TableCheck check_reference_table(std::string_view id) {
    const int number = table_number(id);
    const auto model = reference_model(id);
    TableCheck check{std::string(id), 0, {}, {}};
    switch (number) {
    case 0:
        check_comparison(*model, check);
        break;
    case 1:
        check_cardinalities(reference::free_cardinalities(), *model, false, check);
        break;
    case 2:
        check_cardinalities(reference::hybrid_cardinalities(), *model, true, check);
        break;
    case 3:
        check_cardinalities(reference::shafer_cardinalities(), *model, true, check);
        break;
    default:
        check_coefficients(number, *model, check);
        break;
    }
    return check;
}

} // namespace dsmt
