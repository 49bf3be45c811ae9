#include "bt1/realize.hpp"

#include <map>
#include <numeric>
#include <set>

#include "bt1/error.hpp"
#include "bt1/galois.hpp"

namespace bt1 {

namespace {
__extension__ typedef unsigned __int128 u128;
}

std::string route_name(Route r) {
    switch (r) {
    case Route::QuotientCd: return "quotient_cd";
    case Route::FermatFd: return "fermat_fd";
    case Route::FermatF8Special: return "fermat_f8_special";
    case Route::FiberProductP2: return "fiber_product_p2";
    }
    return "unknown";
}

Route route_from_name(const std::string& name) {
    for (Route r : {Route::QuotientCd, Route::FermatFd, Route::FermatF8Special, Route::FiberProductP2})
        if (route_name(r) == name)
            return r;
    throw Error(ErrorCode::ParseError, "unknown route '" + name + "'");
}

std::string Witness::factor() const {
    if (kind == Kind::OrdinaryPart)
        return "f^" + std::to_string(f1) + " v^" + std::to_string(f2);
    return Word::parse(root).power(exponent).str();
}

nlohmann::json Witness::to_json() const {
    nlohmann::json j;
    switch (kind) {
    case Kind::Element:
        j = {{"kind", "element"}, {"elements", elements}};
        break;
    case Kind::Pairs: {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [a, b] : pairs)
            arr.push_back({a, b});
        j = {{"kind", "pairs"}, {"pairs", arr}};
        break;
    }
    case Kind::OrdinaryPart:
        return {{"kind", "ordinary_part"}, {"f1", f1}, {"f2", f2}, {"factor", factor()}};
    }
    j["root"] = root;
    j["exponent"] = exponent;
    j["factor"] = factor();
    j["orbit_sizes"] = orbit_sizes;
    if (search)
        j["search"] = search->to_json();
    return j;
}

Witness Witness::from_json(const nlohmann::json& j) {
    try {
        Witness w;
        const auto kind = j.at("kind").get<std::string>();
        if (kind == "ordinary_part") {
            w.kind = Kind::OrdinaryPart;
            w.f1 = j.at("f1").get<std::uint64_t>();
            w.f2 = j.at("f2").get<std::uint64_t>();
            return w;
        }
        if (kind == "element") {
            w.kind = Kind::Element;
            w.elements = j.at("elements").get<std::vector<std::uint64_t>>();
        } else if (kind == "pairs") {
            w.kind = Kind::Pairs;
            for (const auto& ab : j.at("pairs"))
                w.pairs.emplace_back(ab.at(0).get<std::uint64_t>(), ab.at(1).get<std::uint64_t>());
        } else {
            throw Error(ErrorCode::ParseError, "unknown witness kind '" + kind + "'");
        }
        w.root = Word::parse(j.at("root").get<std::string>()).str();
        w.exponent = j.at("exponent").get<std::uint64_t>();
        w.orbit_sizes = j.at("orbit_sizes").get<std::vector<std::uint64_t>>();
        if (j.contains("search")) {
            const auto& s = j.at("search");
            PairWitness pw;
            pw.d = s.at("d").get<std::uint64_t>();
            for (const auto& ab : s.at("pairs"))
                pw.pairs.emplace_back(ab.at(0).get<std::uint64_t>(), ab.at(1).get<std::uint64_t>());
            pw.recipe_matched = s.at("recipe_matched").get<bool>();
            pw.method = s.at("method").get<std::string>();
            if (s.contains("recipe_pair"))
                pw.recipe_pair = Pair{s.at("recipe_pair").at(0).get<std::uint64_t>(),
                                      s.at("recipe_pair").at(1).get<std::uint64_t>()};
            if (s.contains("recipe_word"))
                pw.recipe_word = s.at("recipe_word").get<std::string>();
            w.search = std::move(pw);
        }
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

nlohmann::json RealizationPlan::to_json() const {
    nlohmann::json ws = nlohmann::json::array();
    for (const auto& w : witnesses)
        ws.push_back(w.to_json());
    nlohmann::json j = {{"p", p},           {"target", target.to_json()}, {"curve", curve.to_json()},
                        {"route", route_name(route)}, {"witnesses", ws},   {"genus", genus.to_json()}};
    if (genus_bound_exponent)
        j["genus_bound"] = {{"rank_exponent", *genus_bound_exponent}};
    if (polarized)
        j["polarized"] = polarized_to_json(*polarized);
    return j;
}

RealizationPlan RealizationPlan::from_json(const nlohmann::json& j) {
    try {
        RealizationPlan plan;
        plan.p = j.at("p").get<std::uint64_t>();
        plan.target = BT1Multiset::from_json(j.at("target"));
        plan.curve = CurveSpec::from_json(j.at("curve"));
        plan.route = route_from_name(j.at("route").get<std::string>());
        for (const auto& w : j.at("witnesses"))
            plan.witnesses.push_back(Witness::from_json(w));
        const auto& g = j.at("genus");
        if (g.contains("lower_bound"))
            plan.genus = {g.at("lower_bound").get<std::uint64_t>(), true};
        else
            plan.genus = {g.at("value").get<std::uint64_t>(), false};
        if (j.contains("genus_bound"))
            plan.genus_bound_exponent = j.at("genus_bound").at("rank_exponent").get<std::uint64_t>();
        if (j.contains("polarized"))
            plan.polarized = polarized_from_json(j.at("polarized"));
        return plan;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

bool genus_within_bound(std::uint64_t genus, std::uint64_t p, std::uint64_t rank_exponent) {
    u128 q = 1;
    for (std::uint64_t i = 0; i < rank_exponent; ++i) {
        q *= p;
        if (q > (static_cast<u128>(1) << 100))
            return true;
    }
    return 2 * static_cast<u128>(genus) + 2 <= q;
}

namespace {

struct Factor {
    CyclicWord root;
    std::uint64_t exponent;
    Word word() const { return root.representative().power(exponent); }
};

std::vector<Factor> factors_of(const BT1Multiset& target) {
    std::vector<Factor> out;
    for (const auto& [w, m] : target)
        out.push_back({w, m});
    return out;
}

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t g = std::gcd(a, b);
    if (a / g > (std::uint64_t{1} << 32) / b)
        throw Error(ErrorCode::Overflow, "lcm of factor lengths is too large");
    return a / g * b;
}

bool is_indecomposable(const BT1Multiset& target) {
    return target.distinct() == 1 && target.begin()->second == 1 && target.begin()->first.length() > 1;
}

void finish(RealizationPlan& plan) { plan.genus = genus_of(plan.curve); }

/// Element witnesses over C_d, one per factor, embedded from S(p^l_i - 1) into S(d).
RealizationPlan realize_quotient(std::uint64_t p, const BT1Multiset& target, const SearchOptions& opts) {
    RealizationPlan plan;
    plan.p = p;
    plan.target = target;
    plan.route = Route::QuotientCd;

    std::vector<std::pair<Factor, std::uint64_t>> elements;
    std::uint64_t ell = 1;
    for (const Factor& f : factors_of(target)) {
        const Word w = f.word();
        elements.emplace_back(f, element_for_word(w, p, opts));
        ell = checked_lcm(ell, w.length());
    }
    const std::uint64_t d = mersenne_like(p, ell);
    for (const auto& [f, a] : elements) {
        const std::uint64_t d_i = mersenne_like(p, f.word().length());
        Witness w;
        w.kind = Witness::Kind::Element;
        w.root = f.root.str();
        w.exponent = f.exponent;
        w.elements = {a * (d / d_i)};
        w.orbit_sizes = {f.word().length()};
        plan.witnesses.push_back(std::move(w));
    }
    plan.curve = CurveSpec{p, FermatQuotient{d}};
    finish(plan);
    return plan;
}

struct PairFactorWitness {
    Witness witness;
    std::uint64_t d;
    std::uint64_t ell;
};

PairFactorWitness pair_factor(std::uint64_t p, const Factor& f, const SearchOptions& opts) {
    Word w = f.word();
    // T(p - 1) is empty for p <= 3; use the squared word in T(p^2 - 1) instead.
    if (mersenne_like(p, w.length()) < 3)
        w = w.power(2);
    PairWitness pw = pair_for_word(w, p, opts);
    Witness out;
    out.kind = Witness::Kind::Pairs;
    out.root = f.root.str();
    out.exponent = f.exponent;
    out.pairs = pw.pairs;
    const std::uint64_t d = pw.d;
    out.search = std::move(pw);
    return {std::move(out), d, w.length()};
}

/// Pair witnesses over F_d; returns d (0 when there are no factors).
std::uint64_t place_pair_witnesses(std::uint64_t p, const BT1Multiset& part, const SearchOptions& opts,
                                   std::vector<Witness>& out) {
    std::vector<PairFactorWitness> found;
    std::uint64_t ell = 1;
    for (const Factor& f : factors_of(part)) {
        found.push_back(pair_factor(p, f, opts));
        ell = checked_lcm(ell, found.back().ell);
    }
    if (found.empty())
        return 0;
    const std::uint64_t d = mersenne_like(p, ell);
    for (auto& [w, d_i, l_i] : found) {
        const std::uint64_t k = d / d_i;
        for (auto& [a, b] : w.pairs) {
            a *= k;
            b *= k;
            w.orbit_sizes.push_back(fermat_orbit_word(p, d, a, b).length());
        }
        out.push_back(std::move(w));
    }
    return d;
}

RealizationPlan realize_fermat(std::uint64_t p, const BT1Multiset& target, const SearchOptions& opts) {
    RealizationPlan plan;
    plan.p = p;
    plan.target = target;
    const bool single_length_one =
        target.distinct() == 1 && target.begin()->second == 1 && target.begin()->first.length() == 1;
    plan.route = (p == 3 && single_length_one) ? Route::FermatF8Special : Route::FermatFd;
    const std::uint64_t d = place_pair_witnesses(p, target, opts, plan.witnesses);
    plan.curve = CurveSpec{p, Fermat{d}};
    finish(plan);
    return plan;
}

RealizationPlan realize_char2(const BT1Multiset& target, const SearchOptions& opts) {
    RealizationPlan plan;
    plan.p = 2;
    plan.target = target;
    const CyclicWord f = CyclicWord::parse("f"), v = CyclicWord::parse("v");
    const std::uint64_t f1 = target.multiplicity(f), f2 = target.multiplicity(v);
    BT1Multiset rest = target;
    BT1Multiset ordinary;
    ordinary.add(f, f1);
    ordinary.add(v, f2);
    rest -= ordinary;

    const std::uint64_t d = place_pair_witnesses(2, rest, opts, plan.witnesses);
    if (f1 + f2 == 0) {
        plan.route = Route::FermatFd;
        plan.curve = CurveSpec{2, Fermat{d}};
        finish(plan);
        return plan;
    }
    std::uint64_t r = std::max(f1, f2) + 1;
    if (r % 2 == 0)
        ++r;
    Witness w;
    w.kind = Witness::Kind::OrdinaryPart;
    w.f1 = f1;
    w.f2 = f2;
    plan.witnesses.push_back(std::move(w));
    plan.route = Route::FiberProductP2;
    if (d == 0)
        plan.curve = CurveSpec{2, OrdinaryAS{r}};
    else
        plan.curve = CurveSpec{2, FiberProduct{d, r}};
    finish(plan);
    return plan;
}

} // namespace

RealizationPlan realize(std::uint64_t p, const BT1Multiset& target, const RealizeOptions& opts) {
    if (!is_prime(p))
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (target.empty())
        throw Error(ErrorCode::InvalidSpec, "target multiset is empty");

    RealizationPlan plan;
    if (p > 3 || is_indecomposable(target))
        plan = realize_quotient(p, target, opts.search);
    else if (p == 3)
        plan = realize_fermat(p, target, opts.search);
    else
        plan = realize_char2(target, opts.search);
    if (is_indecomposable(target))
        plan.genus_bound_exponent = target.begin()->first.length();
    return plan;
}

RealizationPlan realize_polarized(std::uint64_t p, const BT1Multiset& target, const RealizeOptions& opts) {
    auto factors = polarized_factorization(target);
    if (factors.size() == 1 && factors.front().multiplicity == 1 &&
        factors.front().kind == PolarizedFactor::Kind::ComplementPair && factors.front().w.length() > 1) {
        // M(w) + M(w^c) with a in S(p^{l/2} - 1) realizing w and -a realizing w^c.
        const PolarizedFactor& pf = factors.front();
        const std::uint64_t a = element_for_word(pf.w.representative(), p, opts.search);
        const std::uint64_t d = mersenne_like(p, pf.w.length());
        RealizationPlan plan;
        plan.p = p;
        plan.target = target;
        plan.route = Route::QuotientCd;
        plan.curve = CurveSpec{p, FermatQuotient{d}};
        for (const auto& [cw, elem] : {std::pair{pf.w, a}, std::pair{pf.wc, d - a}}) {
            Witness w;
            w.kind = Witness::Kind::Element;
            w.root = cw.str();
            w.exponent = 1;
            w.elements = {elem};
            w.orbit_sizes = {cw.length()};
            plan.witnesses.push_back(std::move(w));
        }
        plan.genus = genus_of(plan.curve);
        plan.genus_bound_exponent = pf.rank_exponent();
        plan.polarized = std::move(factors);
        return plan;
    }
    RealizationPlan plan = realize(p, target, opts);
    plan.polarized = std::move(factors);
    return plan;
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j = {{"passed", passed},
                        {"mode", requested == VerifyMode::Full ? "full" : "witness"},
                        {"full_checked", full_checked},
                        {"witnessed", witnessed.to_json()},
                        {"failures", failures},
                        {"notes", notes}};
    if (decomposition)
        j["decomposition"] = decomposition->to_json();
    if (genus_bound_ok)
        j["genus_bound_ok"] = *genus_bound_ok;
    return j;
}

namespace {

std::optional<std::uint64_t> quotient_degree(const CurveSpec& c) {
    if (const auto* q = std::get_if<FermatQuotient>(&c.variant))
        return q->d;
    return std::nullopt;
}

std::optional<std::uint64_t> fermat_degree(const CurveSpec& c) {
    if (const auto* f = std::get_if<Fermat>(&c.variant))
        return f->d;
    if (const auto* fp = std::get_if<FiberProduct>(&c.variant))
        return fp->d;
    return std::nullopt;
}

std::optional<std::uint64_t> ordinary_r(const CurveSpec& c) {
    if (const auto* x = std::get_if<OrdinaryAS>(&c.variant))
        return x->r;
    if (const auto* fp = std::get_if<FiberProduct>(&c.variant))
        return fp->r;
    return std::nullopt;
}

std::uint64_t least_orbit_member(std::uint64_t p, std::uint64_t d, std::uint64_t a) {
    a %= d;
    std::uint64_t best = a;
    for (std::uint64_t x = mul_mod(p, a, d); x != a; x = mul_mod(p, x, d))
        best = std::min(best, x);
    return best;
}

Pair least_orbit_member(std::uint64_t p, std::uint64_t d, Pair ab) {
    ab = {ab.first % d, ab.second % d};
    Pair best = ab;
    for (Pair x{mul_mod(p, ab.first, d), mul_mod(p, ab.second, d)}; x != ab;
         x = {mul_mod(p, x.first, d), mul_mod(p, x.second, d)})
        best = std::min(best, x);
    return best;
}

} // namespace

VerificationReport verify_plan(const RealizationPlan& plan, VerifyMode mode, const DecomposeOptions& decompose_opts) {
    VerificationReport rep;
    rep.requested = mode;
    auto fail = [&rep](std::string msg) { rep.failures.push_back(std::move(msg)); };

    try {
        validate(plan.curve);
    } catch (const Error& e) {
        fail(std::string("invalid curve: ") + e.what());
        return rep;
    }
    if (plan.curve.p != plan.p)
        fail("curve characteristic differs from plan p");
    if (plan.target.empty())
        fail("empty target");
    if (genus_of(plan.curve) != plan.genus)
        fail("recorded genus differs from the genus of the curve");

    std::set<std::uint64_t> seen_elements;
    std::set<Pair> seen_pairs;
    bool ordinary_seen = false;
    for (const Witness& w : plan.witnesses) {
        BT1Multiset mine;
        switch (w.kind) {
        case Witness::Kind::Element: {
            const auto d = quotient_degree(plan.curve);
            if (!d) {
                fail("element witness on a curve without S(d)");
                continue;
            }
            if (w.orbit_sizes.size() != w.elements.size())
                fail("witness " + w.factor() + ": orbit size list length mismatch");
            for (std::size_t i = 0; i < w.elements.size(); ++i) {
                const std::uint64_t a = w.elements[i];
                if (!in_quotient_set(*d, a)) {
                    fail("witness " + w.factor() + ": " + std::to_string(a) + " not in S(" + std::to_string(*d) + ")");
                    continue;
                }
                if (!seen_elements.insert(least_orbit_member(plan.p, *d, a)).second)
                    fail("witness " + w.factor() + ": orbit of " + std::to_string(a) + " already used");
                const Word word = quotient_orbit_word(plan.p, *d, a);
                if (i < w.orbit_sizes.size() && w.orbit_sizes[i] != word.length())
                    fail("witness " + w.factor() + ": recorded orbit size disagrees");
                mine.add_expanded(word);
            }
            break;
        }
        case Witness::Kind::Pairs: {
            const auto d = fermat_degree(plan.curve);
            if (!d) {
                fail("pair witness on a curve without T(d)");
                continue;
            }
            if (w.orbit_sizes.size() != w.pairs.size())
                fail("witness " + w.factor() + ": orbit size list length mismatch");
            for (std::size_t i = 0; i < w.pairs.size(); ++i) {
                const auto [a, b] = w.pairs[i];
                const std::string name = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
                if (!in_fermat_set(*d, a, b)) {
                    fail("witness " + w.factor() + ": " + name + " not in T(" + std::to_string(*d) + ")");
                    continue;
                }
                if (!seen_pairs.insert(least_orbit_member(plan.p, *d, Pair{a, b})).second)
                    fail("witness " + w.factor() + ": orbit of " + name + " already used");
                const Word word = fermat_orbit_word(plan.p, *d, a, b);
                if (i < w.orbit_sizes.size() && w.orbit_sizes[i] != word.length())
                    fail("witness " + w.factor() + ": recorded orbit size disagrees");
                mine.add_expanded(word);
            }
            break;
        }
        case Witness::Kind::OrdinaryPart: {
            const auto r = ordinary_r(plan.curve);
            if (!r) {
                fail("ordinary-part witness on a curve without an X_r factor");
                continue;
            }
            if (ordinary_seen)
                fail("ordinary part witnessed twice");
            ordinary_seen = true;
            if (w.f1 > *r - 1 || w.f2 > *r - 1)
                fail("ordinary part f1=" + std::to_string(w.f1) + ", f2=" + std::to_string(w.f2) +
                     " exceeds r-1=" + std::to_string(*r - 1));
            mine.add(CyclicWord::parse("f"), *r - 1);
            mine.add(CyclicWord::parse("v"), *r - 1);
            BT1Multiset claim;
            claim.add(CyclicWord::parse("f"), w.f1);
            claim.add(CyclicWord::parse("v"), w.f2);
            if (!mine.contains(claim))
                fail("ordinary part does not contain its claim");
            rep.witnessed += mine;
            continue;
        }
        }
        BT1Multiset claim;
        try {
            claim.add(CyclicWord::parse(w.root), w.exponent);
        } catch (const Error& e) {
            fail("witness root: " + std::string(e.what()));
        }
        if (!mine.contains(claim))
            fail("witness " + w.factor() + ": orbit words expand to " + mine.to_json().dump() +
                 ", which does not contain " + claim.to_json().dump());
        rep.witnessed += mine;
    }
    if (!rep.witnessed.contains(plan.target))
        fail("witnessed " + rep.witnessed.to_json().dump() + " does not contain target " +
             plan.target.to_json().dump());

    if (plan.genus_bound_exponent) {
        rep.genus_bound_ok = genus_within_bound(plan.genus.value, plan.p, *plan.genus_bound_exponent);
        if (plan.genus.lower_bound || !*rep.genus_bound_ok) {
            rep.genus_bound_ok = false;
            fail("genus " + std::to_string(plan.genus.value) + " exceeds (p^" +
                 std::to_string(*plan.genus_bound_exponent) + " - 2)/2");
        }
    }

    if (mode == VerifyMode::Full) {
        const std::uint64_t size = enumeration_size(plan.curve);
        if (size > decompose_opts.budget) {
            rep.notes.push_back("full decomposition skipped: index set of " + std::to_string(size) +
                                " exceeds budget " + std::to_string(decompose_opts.budget) +
                                "; witness checks only");
        } else {
            const Decomposition dec = decompose(plan.curve, decompose_opts);
            rep.full_checked = true;
            if (!dec.expanded.contains(plan.target))
                fail("decomposition " + dec.expanded.to_json().dump() + " does not contain target");
            if (dec.partial)
                rep.notes.push_back("decomposition is partial (containment of known direct factors only)");
            rep.decomposition = dec.expanded;
        }
    }
    rep.passed = rep.failures.empty();
    return rep;
}

} // namespace bt1
