#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include "huffcensus/counting.hpp"
#include "huffcensus/representations.hpp"

using namespace huffcensus;

namespace {
HuffmanSequence hs(int t, std::vector<long long> a) { return {t, std::move(a)}; }
BoundedDegreeSequence ds(int t, std::vector<long long> b) { return {t, std::move(b)}; }

ProperWord word_of(int t, const std::string& s) {
    ProperWord w{t, {}};
    for (char c : s) w.bits.push_back(c == '1' ? 1 : 0);
    return w;
}
}  // namespace

TEST_CASE("validators accept the worked f_2(5) classes") {
    CHECK(validate(hs(2, {0, 1, 1, 1, 2})).ok);
    CHECK(validate(hs(2, {0, 1, 0, 4})).ok);
    CHECK(validate(hs(2, {0, 0, 3, 2})).ok);
    CHECK(validate(ds(2, {1, 1, 1, 1})).ok);
    CHECK(validate(ds(2, {1, 1, 2})).ok);
    CHECK(validate(ds(2, {1, 2, 1})).ok);
    CHECK(validate(word_of(2, "111")).ok);
    CHECK(validate(word_of(2, "110")).ok);
    CHECK(validate(word_of(2, "101")).ok);
}

TEST_CASE("validators name violations") {
    auto v = validate(hs(2, {0, 1, 1}));
    CHECK_FALSE(v.ok);
    CHECK(v.violation.find("Kraft") != std::string::npos);
    CHECK(v.violation.find("3/4") != std::string::npos);

    auto v2 = validate(ds(2, {1, 3}));
    CHECK_FALSE(v2.ok);
    CHECK(v2.violation.find("b_2") != std::string::npos);

    CHECK_FALSE(validate(hs(3, {0, 1, 6, 0, 0})).ok);  // a_l = 0
    CHECK_FALSE(validate(ds(2, {2})).ok);              // b_1 != 1
    CHECK_FALSE(validate(word_of(2, "011")).ok);       // c_0 != 0
    CHECK_FALSE(validate(word_of(2, "10000")).ok);     // run too long for t=2
    CHECK(validate(hs(2, {1})).ok);                    // trivial class
    CHECK_FALSE(validate(hs(2, {2})).ok);
    CHECK_FALSE(validate(UnitFractionExponents{2, {1, 2}}).ok);
    CHECK(validate(UnitFractionExponents{2, {1, 2, 2}}).ok);
    CHECK_FALSE(validate(UnitFractionExponents{2, {2, 1, 1}}).ok);  // not sorted
}

TEST_CASE("huffman <-> degrees on the section-1.4 data") {
    CHECK(huffman_to_degrees(hs(2, {0, 1, 0, 4})).b == std::vector<long long>{1, 1, 2});
    CHECK(huffman_to_degrees(hs(2, {0, 0, 3, 2})).b == std::vector<long long>{1, 2, 1});
    CHECK(huffman_to_degrees(hs(2, {0, 1, 1, 1, 2})).b == std::vector<long long>{1, 1, 1, 1});
    CHECK(degrees_to_huffman(ds(2, {1, 1, 1, 1})).a == std::vector<long long>{0, 1, 1, 1, 2});
    CHECK(degrees_to_huffman(ds(2, {1, 2, 1})).a == std::vector<long long>{0, 0, 3, 2});
    CHECK(degrees_to_huffman(ds(3, {1})).a == std::vector<long long>{0, 3});
    CHECK_THROWS_AS(huffman_to_degrees(hs(3, {0, 1, 6, 0, 0})), std::invalid_argument);
    // trivial class round trip through the empty degree sequence
    CHECK(huffman_to_degrees(hs(2, {1})).b.empty());
    CHECK(degrees_to_huffman(ds(2, {})).a == std::vector<long long>{1});
}

TEST_CASE("degrees <-> proper words") {
    CHECK(degrees_to_word(ds(2, {1, 1, 2})) == word_of(2, "110"));
    CHECK(degrees_to_word(ds(2, {1, 2, 1})) == word_of(2, "101"));
    CHECK(degrees_to_word(ds(2, {1, 1, 1, 1})) == word_of(2, "111"));
    CHECK(degrees_to_word(ds(2, {1})).bits.empty());
    CHECK(word_to_degrees(word_of(2, "")).b == std::vector<long long>{1});
    CHECK(word_to_degrees(word_of(2, "101")).b == std::vector<long long>{1, 2, 1});
    CHECK_THROWS_AS(degrees_to_word(ds(2, {})), std::invalid_argument);
}

TEST_CASE("huffman <-> exponents") {
    CHECK(huffman_to_exponents(hs(2, {0, 1, 1, 1, 2})).xs ==
          std::vector<long long>{1, 2, 3, 4, 4});
    CHECK(exponents_to_huffman(UnitFractionExponents{2, {2, 2, 2, 3, 3}}).a ==
          std::vector<long long>{0, 0, 3, 2});
    CHECK(exponents_to_huffman(UnitFractionExponents{5, {0}}).a == std::vector<long long>{1});
}

TEST_CASE("huffman <-> tree") {
    // derived via inner_{h+1} + leaf_{h+1} = t * inner_h
    CanonicalTree tr = huffman_to_tree(hs(3, {0, 1, 5, 3}));
    std::vector<CanonicalTree::Level> expect{{1, 0}, {2, 1}, {1, 5}, {0, 3}};
    CHECK(tr.levels == expect);
    CHECK(tree_to_huffman(tr).a == std::vector<long long>{0, 1, 5, 3});

    CanonicalTree single = huffman_to_tree(hs(2, {1}));
    CHECK(single.levels == std::vector<CanonicalTree::Level>{{0, 1}});

    CanonicalTree chain = huffman_to_tree(hs(2, {0, 1, 1, 1, 2}));
    std::vector<CanonicalTree::Level> expect2{{1, 0}, {1, 1}, {1, 1}, {1, 1}, {0, 2}};
    CHECK(chain.levels == expect2);
}

TEST_CASE("canonical code words") {
    auto c1 = tree_to_codewords(huffman_to_tree(hs(2, {0, 1, 1, 1, 2})));
    CHECK(c1 == std::vector<std::string>{"0", "10", "110", "1110", "1111"});
    auto c3 = tree_to_codewords(huffman_to_tree(hs(2, {0, 0, 3, 2})));
    CHECK(c3 == std::vector<std::string>{"00", "01", "10", "110", "111"});
    auto star = tree_to_codewords(huffman_to_tree(hs(3, {0, 3})));
    CHECK(star == std::vector<std::string>{"0", "1", "2"});
    auto c2 = tree_to_codewords(huffman_to_tree(hs(2, {0, 1, 0, 4})));
    CHECK(c2 == std::vector<std::string>{"0", "100", "101", "110", "111"});
}

namespace {
bool prefix_free(const std::vector<std::string>& words) {
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j)
            if (i != j && words[j].size() >= words[i].size() &&
                words[j].compare(0, words[i].size(), words[i]) == 0)
                return false;
    return true;
}
}  // namespace

TEST_CASE("exhaustive round trips for t in {2,3,4}, n <= 10") {
    for (int t : {2, 3, 4}) {
        for (long long n = 0; n <= 10; ++n) {
            enumerate_degree_sequences(t, n, [&](const std::vector<long long>& bvec) {
                BoundedDegreeSequence b{t, bvec};
                REQUIRE(validate(b).ok);
                HuffmanSequence h = degrees_to_huffman(b);
                REQUIRE(validate(h).ok);
                REQUIRE(huffman_to_degrees(h) == b);
                UnitFractionExponents x = huffman_to_exponents(h);
                REQUIRE(validate(x).ok);
                REQUIRE(exponents_to_huffman(x) == h);
                CanonicalTree tr = huffman_to_tree(h);
                REQUIRE(validate(tr).ok);
                REQUIRE(tree_to_huffman(tr) == h);
                if (n >= 1) {
                    ProperWord w = degrees_to_word(b);
                    REQUIRE(validate(w).ok);
                    REQUIRE(word_to_degrees(w) == b);
                    REQUIRE(w.bits.size() + 1 == static_cast<std::size_t>(n));
                }
                // code words: prefix free, Kraft equality, lexicographic order
                auto words = tree_to_codewords(tr);
                long long r = 0;
                for (long long ai : h.a) r += ai;
                REQUIRE(words.size() == static_cast<std::size_t>(r));
                REQUIRE(prefix_free(words));
                REQUIRE(std::is_sorted(words.begin(), words.end()));
                Rational kraft = 0;
                for (const auto& wd : words)
                    kraft += Rational(BigInt(1), ipow(t, static_cast<long long>(wd.size())));
                REQUIRE(kraft == 1);
                for (std::size_t i = 1; i < words.size(); ++i)
                    REQUIRE(words[i - 1].size() <= words[i].size());
                return true;
            });
        }
    }
}
