#pragma once

// Target BT1 multiset -> explicit curve whose Jacobian p-torsion contains it,
// with per-factor witnesses that can be re-checked independently.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bt1/digits.hpp"
#include "bt1/duality.hpp"
#include "bt1/fermat.hpp"
#include "bt1/words.hpp"

namespace bt1 {

enum class Route { QuotientCd, FermatFd, FermatF8Special, FiberProductP2 };

std::string route_name(Route r);
Route route_from_name(const std::string& name);

struct Witness {
    enum class Kind { Element, Pairs, OrdinaryPart };

    Kind kind = Kind::Element;
    /// The summand this witness accounts for: root^exponent.
    std::string root;
    std::uint64_t exponent = 1;
    /// Element witnesses live in S(d) of a quotient curve.
    std::vector<std::uint64_t> elements;
    /// Pair witnesses live in T(d) of a Fermat curve (or the Fermat part of a fiber product).
    std::vector<Pair> pairs;
    std::vector<std::uint64_t> orbit_sizes;
    /// Ordinary part (Z/2)^f1 + (mu_2)^f2 inside J_{X_r}[2].
    std::uint64_t f1 = 0;
    std::uint64_t f2 = 0;
    /// Audit trail of the pair search, when one was run.
    std::optional<PairWitness> search;

    std::string factor() const;
    nlohmann::json to_json() const;
    static Witness from_json(const nlohmann::json& j);
};

struct RealizationPlan {
    std::uint64_t p = 2;
    BT1Multiset target;
    CurveSpec curve;
    Route route = Route::QuotientCd;
    std::vector<Witness> witnesses;
    GenusReport genus;
    /// Rank exponent l for an indecomposable (polarized) target; the genus must
    /// then satisfy genus <= (p^l - 2)/2.
    std::optional<std::uint64_t> genus_bound_exponent;
    std::optional<std::vector<PolarizedFactor>> polarized;

    nlohmann::json to_json() const;
    static RealizationPlan from_json(const nlohmann::json& j);
};

struct RealizeOptions {
    SearchOptions search;
};

/// Throws InvalidSpec (empty target), NotRealizable, SearchExhausted, Overflow.
RealizationPlan realize(std::uint64_t p, const BT1Multiset& target, const RealizeOptions& opts = {});

/// Throws NotSelfDual.
RealizationPlan realize_polarized(std::uint64_t p, const BT1Multiset& target, const RealizeOptions& opts = {});

enum class VerifyMode { Witness, Full };

struct VerificationReport {
    bool passed = false;
    VerifyMode requested = VerifyMode::Witness;
    /// Full mode is downgraded to witness mode when the curve exceeds the budget.
    bool full_checked = false;
    BT1Multiset witnessed;
    std::optional<BT1Multiset> decomposition;
    std::optional<bool> genus_bound_ok;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    nlohmann::json to_json() const;
};

VerificationReport verify_plan(const RealizationPlan& plan, VerifyMode mode,
                               const DecomposeOptions& decompose_opts = {});

/// The (p^l - 2)/2 genus bound as an exact comparison 2 g <= p^l - 2.
bool genus_within_bound(std::uint64_t genus, std::uint64_t p, std::uint64_t rank_exponent);

} // namespace bt1
