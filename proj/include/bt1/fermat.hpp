#pragma once

// Combinatorial presentations of J_d[p] (the quotient curve y^d = x(1-x)) and
// J_{F_d}[p] (the Fermat curve X^d + Y^d = 1), plus the two auxiliary curves
// used in characteristic 2.
//
// Residues are always compared through their least positive representative.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "bt1/permdata.hpp"
#include "bt1/words.hpp"

namespace bt1 {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;

struct FermatQuotient {
    std::uint64_t d = 0;
    friend bool operator==(const FermatQuotient&, const FermatQuotient&) = default;
};
struct Fermat {
    std::uint64_t d = 0;
    friend bool operator==(const Fermat&, const Fermat&) = default;
};
/// X_r: (x^2 - x)(z^r - 1) = 1, characteristic 2 only.
struct OrdinaryAS {
    std::uint64_t r = 0;
    friend bool operator==(const OrdinaryAS&, const OrdinaryAS&) = default;
};
/// Fiber product of X_r -> F_1 and F_d -> F_1, characteristic 2 only.
struct FiberProduct {
    std::uint64_t d = 0;
    std::uint64_t r = 0;
    friend bool operator==(const FiberProduct&, const FiberProduct&) = default;
};

struct CurveSpec {
    std::uint64_t p = 2;
    std::variant<FermatQuotient, Fermat, OrdinaryAS, FiberProduct> variant;

    std::string variant_name() const;
    /// {"variant":"fermat_quotient","d":8,"p":3}; fiber products carry "d" and "r".
    nlohmann::json to_json() const;
    static CurveSpec from_json(const nlohmann::json& j);

    friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

/// Throws NotPrime, NotCoprime, InvalidSpec.
void validate(const CurveSpec& c);

struct GenusReport {
    std::uint64_t value = 0;
    /// Only a lower bound is known (fiber products).
    bool lower_bound = false;
    nlohmann::json to_json() const;
    friend bool operator==(const GenusReport&, const GenusReport&) = default;
};

GenusReport genus_of(const CurveSpec& c);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

/// a in S(d): a != 0 and a != d/2 modulo d.
bool in_quotient_set(std::uint64_t d, std::uint64_t a);
/// (a,b) in T(d): a, b, a+b all nonzero modulo d.
bool in_fermat_set(std::uint64_t d, std::uint64_t a, std::uint64_t b);
/// v iff 0 < a < d/2, f iff d/2 < a < d. Throws ExcludedResidue outside S(d).
Letter quotient_sector(std::uint64_t d, std::uint64_t a);
/// v iff a + b < d, f iff a + b > d. Throws ExcludedResidue outside T(d).
Letter fermat_sector(std::uint64_t d, std::uint64_t a, std::uint64_t b);

/// Word of the orbit of a under multiplication by p on S(d).
Word quotient_orbit_word(std::uint64_t p, std::uint64_t d, std::uint64_t a);
/// Word of the orbit of (a,b) under (a,b) -> (pa,pb) on T(d).
Word fermat_orbit_word(std::uint64_t p, std::uint64_t d, std::uint64_t a, std::uint64_t b);

/// Throws NotCoprime, DegreeTooSmall (d < 3).
PermutationData quotient_perm_data(std::uint64_t p, std::uint64_t d);
PermutationData fermat_perm_data(std::uint64_t p, std::uint64_t d);

struct DecomposeOptions {
    std::uint64_t budget = kDefaultEnumerationBudget;
};

struct Decomposition {
    BT1Multiset expanded;
    CyclicWordCounts per_orbit;
    std::uint64_t num_orbits = 0;
    /// Containment only; the multiset is not the whole p-torsion.
    bool partial = false;
};

/// Streams orbits; throws BudgetExceeded when the index set is larger than the budget.
Decomposition decompose(const CurveSpec& c, const DecomposeOptions& opts = {});

/// Size of the index set the decomposition would enumerate.
std::uint64_t enumeration_size(const CurveSpec& c);

/// a -> a * (d_big / d_small), from S(d_small) into S(d_big). Throws NotDivisible, NotCoprime.
std::map<std::uint64_t, std::uint64_t> divisibility_embed(std::uint64_t p, std::uint64_t d_small,
                                                         std::uint64_t d_big);

} // namespace bt1
