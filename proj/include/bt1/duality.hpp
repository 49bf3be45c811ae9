#pragma once

// Duality of BT1 modules is complementation of words (f <-> v).

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "bt1/words.hpp"

namespace bt1 {

BT1Multiset dual_multiset(const BT1Multiset& ms);
bool is_self_dual(const BT1Multiset& ms);

/// An indecomposable polarized summand: M(w) with w self-complementary, or
/// M(w) + M(w^c) with w < w^c. Polarizations are asserted to exist and be unique
/// up to isomorphism, never constructed.
struct PolarizedFactor {
    enum class Kind { SelfComplementary, ComplementPair };

    Kind kind = Kind::SelfComplementary;
    CyclicWord w{Word::parse("fv")};
    CyclicWord wc{Word::parse("fv")};
    std::uint64_t multiplicity = 1;

    /// Dimension of one copy: len(w), or 2 len(w) for a pair.
    std::uint64_t rank_exponent() const;
    nlohmann::json to_json() const;
    friend bool operator==(const PolarizedFactor&, const PolarizedFactor&) = default;
};

/// Throws NotSelfDual naming the first unmatched key.
std::vector<PolarizedFactor> polarized_factorization(const BT1Multiset& ms);

/// Reassembles a factor list into the multiset it describes.
BT1Multiset reassemble(const std::vector<PolarizedFactor>& factors);

/// {"factors":[...], "polarization":"asserted"}
nlohmann::json polarized_to_json(const std::vector<PolarizedFactor>& factors);
std::vector<PolarizedFactor> polarized_from_json(const nlohmann::json& j);

} // namespace bt1
