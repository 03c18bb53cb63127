#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's lattice, model, fusion or pignistic code.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oracle {

// ---------------------------------------------------------------------------
// Monotone Boolean functions as raw bit masks (bit S-1 for subset S).

inline bool upward_closed(std::uint64_t mask, int n) {
    const unsigned top = 1u << n;
    for (unsigned s = 1; s < top; ++s) {
        if (!((mask >> (s - 1)) & 1u)) continue;
        for (unsigned t = 1; t < top; ++t) {
            if ((s & t) == s && !((mask >> (t - 1)) & 1u)) return false;
        }
    }
    return true;
}

/// Every up-set of non-empty subsets, by exhaustive search over all part
/// families (n <= 4).
inline std::set<std::uint64_t> all_up_sets(int n) {
    const unsigned parts = (1u << n) - 1;
    std::set<std::uint64_t> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << parts); ++mask) {
        if (upward_closed(mask, n)) out.insert(mask);
    }
    return out;
}

inline std::uint64_t hypothesis_mask(int n, int i) {
    std::uint64_t m = 0;
    for (unsigned s = 1; s < (1u << n); ++s) {
        if (s & (1u << (i - 1))) m |= std::uint64_t{1} << (s - 1);
    }
    return m;
}

/// Fixpoint closure of {∅, θ1..θn} under pairwise AND / OR.
inline std::set<std::uint64_t> closure(int n) {
    std::set<std::uint64_t> current{0};
    for (int i = 1; i <= n; ++i) current.insert(hypothesis_mask(n, i));
    while (true) {
        std::set<std::uint64_t> next = current;
        for (auto a : current) {
            for (auto b : current) {
                next.insert(a & b);
                next.insert(a | b);
            }
        }
        if (next.size() == current.size()) return current;
        current = std::move(next);
    }
}

/// Labels of an up-set found by trying every antichain of index sets and
/// keeping the one that generates the mask.
inline unsigned antichain_labels(std::uint64_t mask, int n) {
    const unsigned parts = (1u << n) - 1;
    for (std::uint64_t family = 0; family < (std::uint64_t{1} << parts); ++family) {
        std::vector<unsigned> sets;
        for (unsigned s = 1; s <= parts; ++s) {
            if ((family >> (s - 1)) & 1u) sets.push_back(s);
        }
        bool antichain = true;
        for (unsigned a : sets) {
            for (unsigned b : sets) {
                if (a != b && (a & b) == a) antichain = false;
            }
        }
        if (!antichain) continue;
        std::uint64_t generated = 0;
        for (unsigned t = 1; t <= parts; ++t) {
            for (unsigned a : sets) {
                if ((a & t) == a) generated |= std::uint64_t{1} << (t - 1);
            }
        }
        if (generated == mask) {
            unsigned labels = 0;
            for (unsigned a : sets) labels |= a;
            return labels;
        }
    }
    throw std::logic_error("mask is not an up-set");
}

// ---------------------------------------------------------------------------
// Venn parts as digit strings ("1", "12", "123"), sets of them as elements.

using Parts = std::set<std::string>;

inline std::string part_name(unsigned s) {
    std::string out;
    for (int i = 0; i < 8; ++i) {
        if (s & (1u << i)) out += static_cast<char>('1' + i);
    }
    return out;
}

inline Parts all_parts(int n) {
    Parts out;
    for (unsigned s = 1; s < (1u << n); ++s) out.insert(part_name(s));
    return out;
}

inline Parts hypothesis_parts(int n, int i) {
    Parts out;
    for (const auto& p : all_parts(n)) {
        if (p.find(static_cast<char>('0' + i)) != std::string::npos) out.insert(p);
    }
    return out;
}

inline Parts intersect(const Parts& a, const Parts& b) {
    Parts out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

inline Parts unite(const Parts& a, const Parts& b) {
    Parts out = a;
    out.insert(b.begin(), b.end());
    return out;
}

inline Parts subtract(const Parts& a, const Parts& b) {
    Parts out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

/// Recursive-descent evaluator for the t1 ^ t2 v t3 grammar.
class Evaluator {
  public:
    Evaluator(std::string_view text, int n) : s_{text}, n_{n} {}

    Parts run() {
        Parts p = join();
        ws();
        if (i_ != s_.size()) throw std::invalid_argument("trailing input");
        return p;
    }

  private:
    Parts join() {
        Parts p = meet();
        while (eat('v')) p = unite(p, meet());
        return p;
    }
    Parts meet() {
        Parts p = atom();
        while (eat('^')) p = intersect(p, atom());
        return p;
    }
    Parts atom() {
        ws();
        if (eat('(')) {
            Parts p = join();
            if (!eat(')')) throw std::invalid_argument("missing )");
            return p;
        }
        if (s_.substr(i_, 5) == "empty") {
            i_ += 5;
            return {};
        }
        if (i_ < s_.size() && s_[i_] == 't') {
            ++i_;
            int k = 0;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) k = k * 10 + (s_[i_++] - '0');
            return hypothesis_parts(n_, k);
        }
        throw std::invalid_argument("bad token");
    }
    bool eat(char c) {
        ws();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    void ws() {
        while (i_ < s_.size() && s_[i_] == ' ') ++i_;
    }

    std::string_view s_;
    int n_;
    std::size_t i_{0};
};

inline Parts eval(std::string_view text, int n) { return Evaluator{text, n}.run(); }

/// Hypotheses composing X: digits of the parts that contain no smaller part
/// of X.
inline std::set<int> labels(const Parts& x) {
    std::set<int> out;
    for (const auto& p : x) {
        bool minimal = true;
        for (const auto& q : x) {
            if (q.size() < p.size() && std::includes(p.begin(), p.end(), q.begin(), q.end())) minimal = false;
        }
        if (minimal) {
            for (char c : p) out.insert(c - '0');
        }
    }
    return out;
}

using Bba = std::vector<std::pair<Parts, double>>;
/// Result keyed by the surviving parts of each receiving element.
using Combined = std::map<Parts, double>;

/// k-ary hybrid rule by brute-force tuple enumeration. `suppressed` are the
/// parts the model removes (empty for the free model, where this is the
/// classic rule).
inline Combined hybrid_rule(const std::vector<Bba>& sources, const Parts& suppressed, int n) {
    Combined out;
    const Parts top = subtract(all_parts(n), suppressed);
    std::vector<std::size_t> idx(sources.size(), 0);
    while (true) {
        Parts meet = all_parts(n), join;
        double product = 1.0;
        std::set<int> u;
        for (std::size_t s = 0; s < sources.size(); ++s) {
            const auto& [x, m] = sources[s][idx[s]];
            meet = intersect(meet, x);
            join = unite(join, x);
            product *= m;
            const auto l = labels(x);
            u.insert(l.begin(), l.end());
        }
        const Parts rm = subtract(meet, suppressed);
        const Parts rj = subtract(join, suppressed);
        if (!rm.empty()) {
            out[rm] += product;
        } else if (!rj.empty()) {
            out[rj] += product;
        } else {
            Parts up;
            for (int i : u) up = unite(up, hypothesis_parts(n, i));
            const Parts ru = subtract(up, suppressed);
            out[ru.empty() ? top : ru] += product;
        }
        std::size_t pos = sources.size();
        bool done = true;
        while (pos-- > 0) {
            if (++idx[pos] < sources[pos].size()) {
                done = false;
                break;
            }
            idx[pos] = 0;
        }
        if (done) return out;
    }
}

/// Dempster's rule on classical subsets of {1..n}.
inline std::map<std::set<int>, double> dempster(const std::vector<std::pair<std::set<int>, double>>& a,
                                                const std::vector<std::pair<std::set<int>, double>>& b,
                                                double* conflict = nullptr) {
    std::map<std::set<int>, double> out;
    double k = 0.0;
    for (const auto& [x, mx] : a) {
        for (const auto& [y, my] : b) {
            std::set<int> z;
            std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::inserter(z, z.end()));
            if (z.empty()) {
                k += mx * my;
            } else {
                out[z] += mx * my;
            }
        }
    }
    for (auto& [z, m] : out) m /= 1.0 - k;
    if (conflict) *conflict = k;
    return out;
}

} // namespace oracle
