#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "huffcensus/rational.hpp"

namespace huffcensus {

// The five equivalent views of one code equivalence class:
//
//   exponents  x_1 <= ... <= x_r   with sum t^-x_i = 1        (word lengths)
//   huffman    (a_0, ..., a_l)     leaves per level
//   degrees    (b_1, ..., b_l)     inner vertices per level, b_1 = 1
//   word       0/1 word with zero-run lengths c_i = b_{i+1} - 1
//   tree       per-height (inner, leaf) pairs of the canonical tree
//
// The trivial class (single leaf, r = 1) is a = (1), b = (), tree = [(0,1)];
// it has no proper word.

struct UnitFractionExponents {
    int t = 2;
    std::vector<long long> xs;
    auto operator<=>(const UnitFractionExponents&) const = default;
};

struct HuffmanSequence {
    int t = 2;
    std::vector<long long> a;
    auto operator<=>(const HuffmanSequence&) const = default;
};

struct BoundedDegreeSequence {
    int t = 2;
    std::vector<long long> b;
    auto operator<=>(const BoundedDegreeSequence&) const = default;
};

struct ProperWord {
    int t = 2;
    std::vector<std::uint8_t> bits;
    auto operator<=>(const ProperWord&) const = default;
};

struct CanonicalTree {
    struct Level {
        long long inner = 0;
        long long leaf = 0;
        auto operator<=>(const Level&) const = default;
    };
    int t = 2;
    std::vector<Level> levels;  // index = height, root at height 0
    auto operator<=>(const CanonicalTree&) const = default;
};

using Representation = std::variant<UnitFractionExponents, HuffmanSequence,
                                    BoundedDegreeSequence, ProperWord, CanonicalTree>;

enum class RepKind { exponents, huffman, degrees, word, tree };

inline const char* rep_kind_name(RepKind k) {
    switch (k) {
        case RepKind::exponents: return "exponents";
        case RepKind::huffman: return "huffman";
        case RepKind::degrees: return "degrees";
        case RepKind::word: return "word";
        case RepKind::tree: return "tree";
    }
    return "?";
}

struct Validation {
    bool ok = true;
    std::string violation;

    static Validation pass() { return {}; }
    static Validation fail(std::string why) { return {false, std::move(why)}; }
    explicit operator bool() const { return ok; }
};

inline Validation validate(const UnitFractionExponents& x) {
    if (x.t < 2) return Validation::fail("t must be >= 2");
    if (x.xs.empty()) return Validation::fail("empty exponent list");
    for (std::size_t i = 0; i < x.xs.size(); ++i) {
        if (x.xs[i] < 0) return Validation::fail("negative exponent");
        if (i > 0 && x.xs[i] < x.xs[i - 1]) return Validation::fail("exponents not nondecreasing");
    }
    // sum t^-x_i = 1, cleared by t^xr: sum t^(xr - x_i) must equal t^xr.
    long long xr = x.xs.back();
    BigInt sum = 0;
    for (long long xi : x.xs) sum += ipow(x.t, xr - xi);
    if (sum != ipow(x.t, xr))
        return Validation::fail("unit fractions sum to " + to_fraction_string(Rational(sum, ipow(x.t, xr))) + " != 1");
    return Validation::pass();
}

inline Validation validate(const HuffmanSequence& h) {
    if (h.t < 2) return Validation::fail("t must be >= 2");
    if (h.a.empty()) return Validation::fail("empty sequence");
    for (long long ai : h.a)
        if (ai < 0) return Validation::fail("negative entry");
    std::size_t l = h.a.size() - 1;
    if (l == 0) {
        if (h.a[0] != 1) return Validation::fail("length-1 sequence must be (1)");
        return Validation::pass();
    }
    if (h.a[l] == 0) return Validation::fail("a_l = 0");
    // Kraft equality, cleared by t^l.
    BigInt sum = 0;
    for (std::size_t i = 0; i <= l; ++i) sum += BigInt(h.a[i]) * ipow(h.t, static_cast<long long>(l - i));
    BigInt tl = ipow(h.t, static_cast<long long>(l));
    if (sum != tl)
        return Validation::fail("Kraft sum " + to_fraction_string(Rational(sum, tl)) + " != 1");
    if (h.a[l] % h.t != 0) return Validation::fail("a_l not divisible by t");
    BigInt r = 0;
    for (long long ai : h.a) r += ai;
    if ((r - 1) % (h.t - 1) != 0) return Validation::fail("leaf count r !≡ 1 (mod t-1)");
    return Validation::pass();
}

inline Validation validate(const BoundedDegreeSequence& d) {
    if (d.t < 2) return Validation::fail("t must be >= 2");
    if (d.b.empty()) return Validation::pass();  // trivial class
    if (d.b[0] != 1) return Validation::fail("b_1 != 1");
    for (std::size_t i = 0; i < d.b.size(); ++i) {
        if (d.b[i] < 1) return Validation::fail("b_" + std::to_string(i + 1) + " < 1");
        if (i > 0 && BigInt(d.b[i]) > BigInt(d.t) * d.b[i - 1])
            return Validation::fail("b_" + std::to_string(i + 1) + " > t*b_" + std::to_string(i));
    }
    return Validation::pass();
}

inline Validation validate(const ProperWord& w) {
    if (w.t < 2) return Validation::fail("t must be >= 2");
    for (auto b : w.bits)
        if (b > 1) return Validation::fail("non-binary symbol");
    if (w.bits.empty()) return Validation::pass();  // the one-level class b = (1)
    if (w.bits[0] != 1) return Validation::fail("c_0 != 0 (word must start with 1)");
    // zero-run lengths c_0, ..., c_{l-1}
    std::vector<long long> c{0};
    for (std::size_t i = 0; i < w.bits.size(); ++i) {
        if (w.bits[i] == 1)
            c.push_back(0);
        else
            ++c.back();
    }
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        if (BigInt(c[i + 1]) > BigInt(w.t) * c[i] + (w.t - 1))
            return Validation::fail("run c_" + std::to_string(i + 1) + " > t*c_" + std::to_string(i) + "+t-1");
    }
    return Validation::pass();
}

inline Validation validate(const CanonicalTree& tr) {
    if (tr.t < 2) return Validation::fail("t must be >= 2");
    if (tr.levels.empty()) return Validation::fail("empty tree");
    for (const auto& lv : tr.levels)
        if (lv.inner < 0 || lv.leaf < 0) return Validation::fail("negative level count");
    if (tr.levels[0].inner + tr.levels[0].leaf != 1) return Validation::fail("root level must hold exactly one vertex");
    std::size_t last = tr.levels.size() - 1;
    for (std::size_t h = 0; h < last; ++h) {
        if (tr.levels[h].inner == 0)
            return Validation::fail("inner vertices vanish before the deepest level");
        if (BigInt(tr.levels[h + 1].inner) + tr.levels[h + 1].leaf != BigInt(tr.t) * tr.levels[h].inner)
            return Validation::fail("level " + std::to_string(h + 1) + " does not hold t*inner_" + std::to_string(h) + " vertices");
    }
    if (tr.levels[last].inner != 0) return Validation::fail("deepest level has inner vertices");
    if (tr.levels[last].leaf == 0) return Validation::fail("deepest level has no leaves");
    return Validation::pass();
}

inline Validation validate(const Representation& rep) {
    return std::visit([](const auto& r) { return validate(r); }, rep);
}

namespace detail {
inline void require_valid(const Validation& v, const char* op) {
    if (!v) throw std::invalid_argument(std::string(op) + ": invalid input: " + v.violation);
}
}  // namespace detail

// b_1 = 1, b_i = t*b_{i-1} - a_{i-1}. Trivial (1) maps to the empty sequence.
inline BoundedDegreeSequence huffman_to_degrees(const HuffmanSequence& h) {
    detail::require_valid(validate(h), "huffman_to_degrees");
    BoundedDegreeSequence d{h.t, {}};
    std::size_t l = h.a.size() - 1;
    if (l == 0) return d;
    d.b.resize(l);
    d.b[0] = 1;
    for (std::size_t i = 1; i < l; ++i) d.b[i] = h.t * d.b[i - 1] - h.a[i];
    return d;
}

inline HuffmanSequence degrees_to_huffman(const BoundedDegreeSequence& d) {
    detail::require_valid(validate(d), "degrees_to_huffman");
    if (d.b.empty()) return HuffmanSequence{d.t, {1}};
    std::size_t l = d.b.size();
    HuffmanSequence h{d.t, std::vector<long long>(l + 1, 0)};
    for (std::size_t i = 1; i < l; ++i) h.a[i] = d.t * d.b[i - 1] - d.b[i];
    h.a[l] = d.t * d.b[l - 1];
    return h;
}

inline ProperWord degrees_to_word(const BoundedDegreeSequence& d) {
    detail::require_valid(validate(d), "degrees_to_word");
    if (d.b.empty())
        throw std::invalid_argument("degrees_to_word: the trivial class has no proper word");
    ProperWord w{d.t, {}};
    // 0^{c_0} 1 0^{c_1} 1 ... 1 0^{c_{l-1}} with c_i = b_{i+1} - 1; c_0 = 0.
    for (std::size_t i = 1; i < d.b.size(); ++i) {
        w.bits.push_back(1);
        w.bits.insert(w.bits.end(), static_cast<std::size_t>(d.b[i] - 1), 0);
    }
    return w;
}

inline BoundedDegreeSequence word_to_degrees(const ProperWord& w) {
    detail::require_valid(validate(w), "word_to_degrees");
    BoundedDegreeSequence d{w.t, {1}};
    for (auto bit : w.bits) {
        if (bit == 1)
            d.b.push_back(1);
        else
            ++d.b.back();
    }
    return d;
}

inline UnitFractionExponents huffman_to_exponents(const HuffmanSequence& h) {
    detail::require_valid(validate(h), "huffman_to_exponents");
    UnitFractionExponents x{h.t, {}};
    for (std::size_t i = 0; i < h.a.size(); ++i)
        x.xs.insert(x.xs.end(), static_cast<std::size_t>(h.a[i]), static_cast<long long>(i));
    return x;
}

inline HuffmanSequence exponents_to_huffman(const UnitFractionExponents& x) {
    detail::require_valid(validate(x), "exponents_to_huffman");
    HuffmanSequence h{x.t, std::vector<long long>(static_cast<std::size_t>(x.xs.back()) + 1, 0)};
    for (long long xi : x.xs) ++h.a[static_cast<std::size_t>(xi)];
    return h;
}

inline CanonicalTree huffman_to_tree(const HuffmanSequence& h) {
    BoundedDegreeSequence d = huffman_to_degrees(h);  // validates
    CanonicalTree tr{h.t, {}};
    std::size_t l = h.a.size() - 1;
    tr.levels.resize(l + 1);
    for (std::size_t hgt = 0; hgt <= l; ++hgt) {
        tr.levels[hgt].leaf = h.a[hgt];
        tr.levels[hgt].inner = (hgt < l) ? d.b[hgt] : 0;
    }
    return tr;
}

inline HuffmanSequence tree_to_huffman(const CanonicalTree& tr) {
    detail::require_valid(validate(tr), "tree_to_huffman");
    HuffmanSequence h{tr.t, {}};
    h.a.reserve(tr.levels.size());
    for (const auto& lv : tr.levels) h.a.push_back(lv.leaf);
    detail::require_valid(validate(h), "tree_to_huffman (result)");
    return h;
}

namespace detail {
inline std::string render_digit(int digit, int t) {
    if (t <= 36) {
        char c = digit < 10 ? static_cast<char>('0' + digit) : static_cast<char>('a' + digit - 10);
        return std::string(1, c);
    }
    return std::to_string(digit);
}
}  // namespace detail

// The canonical code: at each level the lexicographically smallest children
// are leaves, deeper subtrees hang off the largest digits. For t > 36 the
// digits of a word are separated by dots.
inline std::vector<std::string> tree_to_codewords(const CanonicalTree& tr) {
    detail::require_valid(validate(tr), "tree_to_codewords");
    std::vector<std::string> code;
    std::vector<std::string> frontier{""};  // prefixes of inner vertices at the current height
    const char* sep = tr.t <= 36 ? "" : ".";
    for (std::size_t h = 0; h < tr.levels.size(); ++h) {
        if (h == 0) {
            if (tr.levels[0].leaf == 1) code.push_back("");
            if (tr.levels[0].inner == 0) break;
            continue;
        }
        std::vector<std::string> children;
        children.reserve(frontier.size() * static_cast<std::size_t>(tr.t));
        for (const auto& p : frontier)
            for (int digit = 0; digit < tr.t; ++digit)
                children.push_back(p.empty() ? detail::render_digit(digit, tr.t)
                                             : p + sep + detail::render_digit(digit, tr.t));
        auto leaves = static_cast<std::size_t>(tr.levels[h].leaf);
        code.insert(code.end(), children.begin(), children.begin() + leaves);
        frontier.assign(children.begin() + leaves, children.end());
    }
    return code;
}

inline BoundedDegreeSequence to_degrees(const Representation& rep) {
    struct Visitor {
        BoundedDegreeSequence operator()(const BoundedDegreeSequence& d) const {
            detail::require_valid(validate(d), "to_degrees");
            return d;
        }
        BoundedDegreeSequence operator()(const HuffmanSequence& h) const { return huffman_to_degrees(h); }
        BoundedDegreeSequence operator()(const ProperWord& w) const { return word_to_degrees(w); }
        BoundedDegreeSequence operator()(const UnitFractionExponents& x) const {
            return huffman_to_degrees(exponents_to_huffman(x));
        }
        BoundedDegreeSequence operator()(const CanonicalTree& tr) const {
            return huffman_to_degrees(tree_to_huffman(tr));
        }
    };
    return std::visit(Visitor{}, rep);
}

inline Representation from_degrees(const BoundedDegreeSequence& d, RepKind kind) {
    switch (kind) {
        case RepKind::degrees: return d;
        case RepKind::huffman: return degrees_to_huffman(d);
        case RepKind::word: return degrees_to_word(d);
        case RepKind::exponents: return huffman_to_exponents(degrees_to_huffman(d));
        case RepKind::tree: return huffman_to_tree(degrees_to_huffman(d));
    }
    throw std::invalid_argument("from_degrees: unknown representation kind");
}

}  // namespace huffcensus
