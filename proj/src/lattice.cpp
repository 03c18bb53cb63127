#include "dsmt/lattice.hpp"

#include <algorithm>

#include "dsmt/errors.hpp"

namespace dsmt {

namespace {

bool lex_less(IndexSet a, IndexSet b) {
    while (a != 0 && b != 0) {
        const int la = std::countr_zero(a), lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

// Up-sets over the non-empty subsets of {1..n}, i.e. the monotone Boolean
// functions vanishing at the empty input. Each one splits on θ_n into the
// restriction to subsets without n (an element A of the n-1 lattice) and the
// cofactor on subsets with n (an element B of the n-1 lattice, or the
// constant-true cofactor), with A ⊆ B. The element is A ∪ (θ_n ∩ B').
std::vector<std::uint64_t> enumerate_up_sets(int n) {
    if (n == 1) return {0b0, 0b1};
    const std::vector<std::uint64_t> lower = enumerate_up_sets(n - 1);
    const std::uint32_t half = 1u << (n - 1);

    // Cofactor masks over T ⊆ {1..n-1}, bit T (T = 0 allowed).
    std::vector<std::uint64_t> cofactors;
    cofactors.reserve(lower.size() + 1);
    for (std::uint64_t b : lower) cofactors.push_back(b << 1);
    cofactors.push_back(half == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << half) - 1);

    std::vector<std::uint64_t> result;
    for (std::uint64_t a : lower) {
        const std::uint64_t shifted = a << 1;
        for (std::uint64_t g : cofactors) {
            if ((shifted & ~g) == 0) result.push_back(a | (g << (half - 1)));
        }
    }
    return result;
}

} // namespace

std::vector<IndexSet> canonical_terms(PartMask parts, int n) {
    std::vector<IndexSet> terms;
    const IndexSet top = IndexSet{1} << n;
    for (IndexSet s = 1; s < top; ++s) {
        if (!parts.contains_part(s)) continue;
        bool minimal = true;
        for (IndexSet rest = s; rest != 0; rest &= rest - 1) {
            const IndexSet smaller = s & ~(rest & -rest);
            if (smaller != 0 && parts.contains_part(smaller)) {
                minimal = false;
                break;
            }
        }
        if (minimal) terms.push_back(s);
    }
    std::sort(terms.begin(), terms.end(), lex_less);
    return terms;
}

IndexSet labels_of(PartMask parts, int n) {
    IndexSet out = 0;
    for (IndexSet t : canonical_terms(parts, n)) out |= t;
    return out;
}

Expr canonical_expression(PartMask parts, int n) {
    const auto terms = canonical_terms(parts, n);
    if (terms.empty()) return Expr::empty_set();
    std::vector<Expr> disjuncts;
    for (IndexSet t : terms) {
        std::vector<Expr> atoms;
        for (int i : indices_of(t)) atoms.push_back(Expr::atom(i));
        disjuncts.push_back(atoms.size() == 1 ? std::move(atoms.front()) : Expr::meet(std::move(atoms)));
    }
    return disjuncts.size() == 1 ? std::move(disjuncts.front()) : Expr::join(std::move(disjuncts));
}

bool is_up_set(PartMask parts, int n) {
    const IndexSet top = IndexSet{1} << n;
    for (IndexSet s = 1; s < top; ++s) {
        if (!parts.contains_part(s)) continue;
        for (int i = 0; i < n; ++i) {
            if (!parts.contains_part(s | (IndexSet{1} << i))) return false;
        }
    }
    return true;
}

std::vector<int> indices_of(IndexSet set) {
    std::vector<int> out;
    for (int i = 0; set != 0; ++i, set >>= 1) {
        if (set & 1u) out.push_back(i + 1);
    }
    return out;
}

FreeLattice FreeLattice::generate(int n) {
    if (n < 1 || n > kMaxFrameSize) {
        throw ValidationError("frame size " + std::to_string(n) + " outside the supported range 1.." +
                              std::to_string(kMaxFrameSize));
    }
    std::vector<std::uint64_t> masks = enumerate_up_sets(n);
    std::sort(masks.begin(), masks.end(),
              [](std::uint64_t a, std::uint64_t b) { return PartMask{a} < PartMask{b}; });
    std::vector<Element> elements(masks.size());
    for (std::size_t i = 0; i < masks.size(); ++i) elements[i] = Element{i, PartMask{masks[i]}};
    return FreeLattice{n, std::move(elements)};
}

FreeLattice::FreeLattice(int n, std::vector<Element> elements) : n_{n}, elements_{std::move(elements)} {
    const int parts = (1 << n) - 1;
    bucket_start_.assign(static_cast<std::size_t>(parts) + 2, elements_.size());
    for (std::size_t i = elements_.size(); i-- > 0;) bucket_start_[elements_[i].parts.count()] = i;
    for (int k = parts; k >= 0; --k) bucket_start_[k] = std::min(bucket_start_[k], bucket_start_[k + 1]);
}

const Element& FreeLattice::singleton(int index) const {
    if (index < 1 || index > n_) throw ValidationError("no hypothesis t" + std::to_string(index));
    return at(singleton_parts(n_, index));
}

std::optional<Element> FreeLattice::find(PartMask parts) const {
    const int k = parts.count();
    if (k >= static_cast<int>(bucket_start_.size()) - 1) return std::nullopt;
    const auto first = elements_.begin() + static_cast<std::ptrdiff_t>(bucket_start_[k]);
    const auto last = elements_.begin() + static_cast<std::ptrdiff_t>(bucket_start_[k + 1]);
    const auto it = std::lower_bound(first, last, parts,
                                     [](const Element& e, PartMask p) { return e.parts.bits() < p.bits(); });
    if (it == last || it->parts != parts) return std::nullopt;
    return *it;
}

const Element& FreeLattice::at(PartMask parts) const {
    const auto found = find(parts);
    if (!found) throw ValidationError("part set is not an element of the hyper-power set");
    return elements_[found->index];
}

const Element& FreeLattice::parse(std::string_view text) const {
    return at(evaluate(parse_expression(text), n_));
}

} // namespace dsmt
