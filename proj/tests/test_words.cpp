#include <doctest.h>

#include <random>

#include "bt1/error.hpp"
#include "bt1/words.hpp"
#include "oracles.hpp"

using namespace bt1;

TEST_CASE("parse_word indexes letters from the right") {
    const Word fv = parse_word("fv");
    CHECK(fv.length() == 2);
    CHECK(fv.u(1) == Letter::f);
    CHECK(fv.u(0) == Letter::v);

    const Word ffv = parse_word("ffv");
    CHECK(ffv.u(2) == Letter::f);
    CHECK(ffv.u(1) == Letter::f);
    CHECK(ffv.u(0) == Letter::v);
}

TEST_CASE("parse_word rejects bad input") {
    try {
        parse_word("xv");
        FAIL("expected BadCharacter");
    } catch (const BadCharacterError& e) {
        CHECK(e.code() == ErrorCode::BadCharacter);
        CHECK(e.position() == 0);
    }
    try {
        parse_word("ffvq");
        FAIL("expected BadCharacter");
    } catch (const BadCharacterError& e) {
        CHECK(e.position() == 3);
    }
    CHECK_THROWS_AS(parse_word(""), Error);
}

TEST_CASE("from_indexed is the inverse of u()") {
    const Word w = Word::from_indexed({Letter::v, Letter::f, Letter::f});
    CHECK(w.str() == "ffv");
}

TEST_CASE("rotation moves u_0 to the front") {
    CHECK(parse_word("ffv").rotate().str() == "vff");
    CHECK(parse_word("ffv").rotate(3).str() == "ffv");
    CHECK(parse_word("fv").power(3).str() == "fvfvfv");
}

TEST_CASE("complement") {
    CHECK(complement(parse_word("ffv")).str() == "vvf");
    CHECK(complement(parse_word("f")).str() == "v");
    CHECK(complement(parse_word("fvv")).str() == "vff");
    CHECK(complement(CyclicWord::parse("fvv")) == CyclicWord::parse("ffv"));
}

TEST_CASE("canonicalize picks the least rotation") {
    CHECK(canonicalize(parse_word("vf")).str() == "fv");
    CHECK(canonicalize(parse_word("fvv")).str() == "fvv");
    CHECK(canonicalize(parse_word("vvfv")).str() == "fvvv");
}

TEST_CASE("primitive_root") {
    auto r = primitive_root(parse_word("fvfv"));
    CHECK(r.root.str() == "fv");
    CHECK(r.exponent == 2);
    r = primitive_root(parse_word("ffv"));
    CHECK(r.root.str() == "ffv");
    CHECK(r.exponent == 1);
    r = primitive_root(parse_word("vvvv"));
    CHECK(r.root.str() == "v");
    CHECK(r.exponent == 4);
}

TEST_CASE("expand_to_primitive_multiset") {
    auto words = [](std::initializer_list<const char*> ws) {
        std::vector<Word> out;
        for (auto w : ws)
            out.push_back(parse_word(w));
        return out;
    };
    CHECK(expand_to_primitive_multiset(words({"vv", "ff", "fv"})).to_json() ==
          nlohmann::json({{"v", 2}, {"f", 2}, {"fv", 1}}));
    CHECK(expand_to_primitive_multiset(words({"ffv", "ffv", "fvv"})).to_json() ==
          nlohmann::json({{"ffv", 2}, {"fvv", 1}}));
    CHECK(expand_to_primitive_multiset(words({"fvfv"})).to_json() == nlohmann::json({{"fv", 2}}));
}

TEST_CASE("BT1Multiset arithmetic and JSON") {
    BT1Multiset a = BT1Multiset::parse(R"({"vf":2,"ffv":1})");
    CHECK(a.multiplicity("fv") == 2);
    CHECK(a.dimension() == 7);
    CHECK_THROWS_AS(BT1Multiset::parse(R"({"fvfv":1})"), Error);
    CHECK_THROWS_AS(BT1Multiset::parse(R"({"fv":0})"), Error);
    BT1Multiset b = BT1Multiset::parse(R"({"fv":1})");
    CHECK(a.contains(b));
    CHECK_FALSE(b.contains(a));
    a -= b;
    CHECK(a.multiplicity("fv") == 1);
    CHECK_THROWS_AS(b -= BT1Multiset::parse(R"({"f":1})"), Error);
    CHECK(BT1Multiset::from_json(a.to_json()) == a);
}

TEST_CASE("property: canonical form agrees with the naive least rotation") {
    for (const auto& s : oracle::all_words_up_to(10)) {
        const CyclicWord c = canonicalize(parse_word(s));
        CHECK(c.str() == oracle::least_rotation(s));
        CHECK(s.substr(least_rotation_offset(s)) + s.substr(0, least_rotation_offset(s)) == c.str());
    }
}

TEST_CASE("property: canonicalization is rotation invariant and idempotent") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const Word w = parse_word(oracle::random_word(rng, 24));
        const std::size_t k = rng() % (w.length() + 3);
        CHECK(canonicalize(w.rotate(k)) == canonicalize(w));
        CHECK(canonicalize(canonicalize(w).representative()) == canonicalize(w));
    }
}

TEST_CASE("property: two words give equal cyclic words iff they are rotations") {
    const auto words = oracle::all_words(6);
    for (const auto& a : words)
        for (const auto& b : words) {
            bool rot = false;
            for (std::size_t k = 0; k < a.size(); ++k)
                rot = rot || a.substr(k) + a.substr(0, k) == b;
            CHECK((CyclicWord::parse(a) == CyclicWord::parse(b)) == rot);
        }
}

TEST_CASE("property: primitive root matches the naive period and reassembles") {
    for (const auto& s : oracle::all_words_up_to(12)) {
        const auto [root, e] = primitive_root(parse_word(s));
        const auto [nroot, ne] = oracle::primitive_root(s);
        CHECK(root.str() == nroot);
        CHECK(e == ne);
        CHECK(root.power(e).str() == s);
        CHECK(is_primitive(parse_word(s)) == (ne == 1));
    }
}

TEST_CASE("property: complement is an involution and descends to cyclic words") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const Word w = parse_word(oracle::random_word(rng, 20));
        CHECK(complement(complement(w)) == w);
        CHECK(complement(CyclicWord(w)) == CyclicWord(complement(w)));
        CHECK(complement(CyclicWord(w.rotate(3))) == complement(CyclicWord(w)));
    }
}
