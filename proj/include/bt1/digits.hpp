#pragma once

// p-adic digit engine for d = p^l - 1. Multiplication by p on Z/dZ rotates the
// little-endian digit vector, which turns sector and word questions into
// digit scans.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bt1/words.hpp"

namespace bt1 {

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

/// p^l - 1, throwing Overflow past 2^62.
std::uint64_t mersenne_like(std::uint64_t p, std::uint64_t ell);

struct DigitVector {
    std::uint64_t p = 2;
    std::vector<std::uint32_t> digits; ///< a_0, a_1, ..., a_{l-1}

    std::uint64_t value() const;
};

/// Throws OutOfRange unless 0 < a < p^l - 1.
DigitVector digits_of(std::uint64_t a, std::uint64_t p, std::uint64_t ell);

enum class Sector { f, v, excluded };

/// Leading-digit rule: the first digit from a_{l-1} downwards that differs
/// from (p-1)/2 decides (smaller -> v, larger -> f). Accepts any residue.
Sector sector_of(std::uint64_t a, std::uint64_t p, std::uint64_t ell);
/// Reference rule: 2a < d -> v, 2a > d -> f.
Sector sector_archimedean(std::uint64_t a, std::uint64_t p, std::uint64_t ell);

/// Word of the orbit of a, read off rotated digit scans. Throws ExcludedResidue.
Word word_of_element(std::uint64_t a, std::uint64_t p, std::uint64_t ell);

/// Multiplicative order of p modulo d / gcd(d, a). Throws ExcludedResidue.
std::uint64_t orbit_size(std::uint64_t a, std::uint64_t p, std::uint64_t ell);
std::uint64_t orbit_size_by_iteration(std::uint64_t a, std::uint64_t p, std::uint64_t ell);

/// The digit recipe for a word: a_j = 0 where u_{l-1-j} = v and p-1 where it is f.
std::uint64_t digit_recipe(const Word& w, std::uint64_t p);

struct SearchOptions {
    std::uint64_t budget = kDefaultSearchBudget; ///< sector evaluations
};

/// An element a of S(p^len(w) - 1) with w_a = w exactly. Recipe output is
/// always re-verified; unverified candidates fall back to a scan of S.
/// Throws NotRealizable, DegreeOne, SearchExhausted, Overflow.
std::uint64_t element_for_word(const Word& w, std::uint64_t p, const SearchOptions& opts = {});

using Pair = std::pair<std::uint64_t, std::uint64_t>;

struct PairWitness {
    std::uint64_t d = 0;
    /// One orbit with word w, or e distinct orbits with word w' where w = w'^e.
    std::vector<Pair> pairs;
    /// Whether the first recipe candidate itself produced w.
    bool recipe_matched = false;
    std::string method;
    std::optional<Pair> recipe_pair;
    std::optional<std::string> recipe_word; ///< observed word of recipe_pair (if in T)

    nlohmann::json to_json() const;
};

/// Witnesses in T(p^len(w) - 1) whose orbits realize w (up to M(w'^e) = M(w')^e).
/// Throws NotRealizable (empty T, or constant words at p = 2), SearchExhausted.
PairWitness pair_for_word(const Word& w, std::uint64_t p, const SearchOptions& opts = {});

} // namespace bt1
