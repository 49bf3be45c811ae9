#pragma once

// Words on the two-letter alphabet {f,v}.
//
// INDEX ORDER: a word of length n is written u_{n-1} ... u_1 u_0, i.e. the
// leftmost character of the text is u_{n-1} and the rightmost is u_0. All
// parsing and rendering uses this order so that words transcribe verbatim
// from the mathematical literature. Use Word::u(j) for index-based access and
// never index the text directly unless you mean "character position".

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace bt1 {

enum class Letter : char { f = 'f', v = 'v' };

constexpr Letter swap_letter(Letter x) noexcept { return x == Letter::f ? Letter::v : Letter::f; }

class Word {
public:
    Word() = default;

    /// Parses text over {f,v}; throws EmptyWord or BadCharacter(position).
    static Word parse(std::string_view text);

    /// Builds the word u_{n-1} ... u_0 from letters given as u_0, u_1, ... .
    static Word from_indexed(const std::vector<Letter>& u);

    std::size_t length() const noexcept { return text_.size(); }
    bool empty() const noexcept { return text_.empty(); }

    /// The letter u_j, 0 <= j < length().
    Letter u(std::size_t j) const { return static_cast<Letter>(text_[text_.size() - 1 - j]); }

    const std::string& str() const noexcept { return text_; }

    /// The action of 1 in Z: u_{n-1}...u_0 -> u_0 u_{n-1} ... u_1, applied k times.
    Word rotate(std::size_t k = 1) const;

    /// Concatenation power w^e.
    Word power(std::size_t e) const;

    bool is_constant(Letter x) const noexcept;

    friend auto operator<=>(const Word&, const Word&) = default;
    friend bool operator==(const Word&, const Word&) = default;

private:
    explicit Word(std::string text) : text_(std::move(text)) {}

    std::string text_;
};

/// Rotation class of a word, stored by its lexicographically least rotation (f < v).
class CyclicWord {
public:
    explicit CyclicWord(const Word& w);

    /// Parses and canonicalizes.
    static CyclicWord parse(std::string_view text) { return CyclicWord(Word::parse(text)); }

    const Word& representative() const noexcept { return rep_; }
    const std::string& str() const noexcept { return rep_.str(); }
    std::size_t length() const noexcept { return rep_.length(); }

    friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;
    friend bool operator==(const CyclicWord&, const CyclicWord&) = default;

private:
    Word rep_;
};

Word parse_word(std::string_view text);
Word complement(const Word& w);
CyclicWord complement(const CyclicWord& w);
CyclicWord canonicalize(const Word& w);

/// Index (as character position) of the least rotation, O(n).
std::size_t least_rotation_offset(std::string_view s);

struct PrimitiveRoot {
    Word root;
    std::size_t exponent = 1;
};

PrimitiveRoot primitive_root(const Word& w);
bool is_primitive(const Word& w);

/// Counts of cyclic words, primitive or not (one entry per orbit before expansion).
using CyclicWordCounts = std::map<CyclicWord, std::uint64_t>;

/// Multiset of primitive cyclic words: the isomorphism invariant of a BT1 module.
class BT1Multiset {
public:
    using Map = std::map<CyclicWord, std::uint64_t>;

    BT1Multiset() = default;

    /// Adds `count` copies of a primitive cyclic word; throws NotPrimitive otherwise.
    void add(const CyclicWord& w, std::uint64_t count = 1);

    /// Adds w = w'^e as e*count copies of w'.
    void add_expanded(const Word& w, std::uint64_t count = 1);

    std::uint64_t multiplicity(const CyclicWord& w) const;
    std::uint64_t multiplicity(std::string_view word) const;

    bool empty() const noexcept { return entries_.empty(); }
    std::size_t distinct() const noexcept { return entries_.size(); }
    const Map& entries() const noexcept { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    /// Sum of length x multiplicity, i.e. the k-dimension of the module.
    std::uint64_t dimension() const;

    /// True when every key of `sub` occurs here with at least its multiplicity.
    bool contains(const BT1Multiset& sub) const;

    BT1Multiset& operator+=(const BT1Multiset& other);
    friend BT1Multiset operator+(BT1Multiset a, const BT1Multiset& b) { return a += b; }

    /// Removes multiplicity; throws OutOfRange when not contained.
    BT1Multiset& operator-=(const BT1Multiset& other);

    friend bool operator==(const BT1Multiset&, const BT1Multiset&) = default;

    nlohmann::json to_json() const;
    /// Accepts non-canonical rotations as keys; rejects non-primitive keys and zero counts.
    static BT1Multiset from_json(const nlohmann::json& j);
    static BT1Multiset parse(std::string_view json_text);

private:
    Map entries_;
};

BT1Multiset expand_to_primitive_multiset(const std::vector<Word>& orbit_words);
BT1Multiset expand(const CyclicWordCounts& per_orbit);

nlohmann::json to_json(const CyclicWordCounts& counts);

} // namespace bt1
