#pragma once

// Kraft's explicit BT1 modules M(w) and M(S) and their numerical invariants.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bt1/galois.hpp"
#include "bt1/permdata.hpp"
#include "bt1/semilinear.hpp"
#include "bt1/words.hpp"

namespace bt1 {

/// Basis e_a indexed by labels; F(e_a) = e_{succ(a)} when letter(a) = f, and
/// V(e_{succ(a)}) = e_a when letter(a) = v. All other basis images are zero.
class KraftModule {
public:
    KraftModule(std::uint64_t p, std::vector<std::string> labels, std::vector<std::size_t> successor,
                std::vector<Letter> letter);

    std::uint64_t p() const noexcept { return p_; }
    std::size_t dimension() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::size_t successor(std::size_t i) const { return successor_[i]; }
    Letter letter(std::size_t i) const { return letter_[i]; }

    nlohmann::json to_json() const;

private:
    std::uint64_t p_;
    std::vector<std::string> labels_;
    std::vector<std::size_t> successor_;
    std::vector<Letter> letter_;
};

/// Labels 0..n-1 (as strings), successor j -> j+1 mod n, letter(j) = u_j.
KraftModule module_from_word(std::uint64_t p, const Word& w);
KraftModule module_from_permdata(std::uint64_t p, const PermutationData& P);

/// 0/1 matrices of F (twist +1) and V (twist -1). Throws FieldMismatch.
std::pair<SemilinearMap, SemilinearMap> matrices_of(const KraftModule& M, const GaloisField& F);

/// Number of cyclic positions j with u_j = v and u_{j-1} = f.
std::uint64_t a_number(const Word& w);
std::uint64_t a_number(const BT1Multiset& ms);

/// Multiplicity of the word f (the etale part).
std::uint64_t p_rank(const BT1Multiset& ms);

bool module_isomorphic(const BT1Multiset& x, const BT1Multiset& y);

} // namespace bt1
