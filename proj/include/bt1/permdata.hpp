#pragma once

// Permutation data (S = S_f u S_v, pi): a finite labelled set split into two
// sectors with a permutation. Labels are opaque strings; internally every
// element is addressed by its position in the element list, and "least" always
// means "earliest in that list".

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "bt1/words.hpp"

namespace bt1 {

class PermutationData {
public:
    /// Throws NotABijection if pi is not a permutation of [0, n), ShapeMismatch on
    /// length disagreement, InvalidSpec on duplicate labels.
    PermutationData(std::vector<std::string> labels, std::vector<Letter> sector,
                    std::vector<std::size_t> pi);

    /// Convenience: labels as given, sector and pi keyed by label.
    static PermutationData from_maps(const std::vector<std::string>& labels,
                                     const std::unordered_map<std::string, Letter>& sector,
                                     const std::unordered_map<std::string, std::string>& pi);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    Letter sector(std::size_t i) const { return sector_[i]; }
    std::size_t pi(std::size_t i) const { return pi_[i]; }
    const std::vector<Letter>& sectors() const noexcept { return sector_; }
    const std::vector<std::size_t>& permutation() const noexcept { return pi_; }

    /// Position of a label; throws UnknownLabel.
    std::size_t index_of(const std::string& label) const;

    /// The same data with S_f and S_v exchanged (the dual data).
    PermutationData swapped_sectors() const;

    /// {"elements":[...], "sector":{label:"f"|"v"}, "pi":{label:label}}. Integer-looking
    /// labels are emitted as JSON numbers.
    nlohmann::json to_json() const;
    static PermutationData from_json(const nlohmann::json& j);

private:
    std::vector<std::string> labels_;
    std::vector<Letter> sector_;
    std::vector<std::size_t> pi_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Cyclically ordered orbit (a, pi(a), pi^2(a), ...) starting at its least member.
struct Orbit {
    std::vector<std::size_t> members;
    std::size_t size() const noexcept { return members.size(); }
};

std::vector<Orbit> orbits(const PermutationData& P);

/// w_a = u_{lambda-1} ... u_0 with u_j = sector(pi^j(a)).
Word word_of_orbit(const PermutationData& P, const std::string& label);
Word word_of_orbit(const PermutationData& P, std::size_t index);

struct OrbitWordMultisets {
    CyclicWordCounts per_orbit;
    BT1Multiset expanded;
};

OrbitWordMultisets orbit_word_multisets(const PermutationData& P);

/// Isomorphism of permutation data; complete invariant is the unexpanded
/// per-orbit multiset of cyclic words.
bool permdata_isomorphic(const PermutationData& P, const PermutationData& Q);

} // namespace bt1
