#include "bt1/fermat.hpp"

#include <numeric>

#include "bt1/error.hpp"
#include "bt1/galois.hpp"

namespace bt1 {

namespace {
__extension__ typedef unsigned __int128 u128;
}

std::string CurveSpec::variant_name() const {
    struct Visitor {
        std::string operator()(const FermatQuotient&) const { return "fermat_quotient"; }
        std::string operator()(const Fermat&) const { return "fermat"; }
        std::string operator()(const OrdinaryAS&) const { return "ordinary_as"; }
        std::string operator()(const FiberProduct&) const { return "fiber_product"; }
    };
    return std::visit(Visitor{}, variant);
}

nlohmann::json CurveSpec::to_json() const {
    nlohmann::json j = {{"variant", variant_name()}, {"p", p}};
    std::visit(
        [&j](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, FermatQuotient> || std::is_same_v<T, Fermat>) {
                j["d"] = v.d;
            } else if constexpr (std::is_same_v<T, OrdinaryAS>) {
                j["r"] = v.r;
            } else {
                j["d"] = v.d;
                j["r"] = v.r;
            }
        },
        variant);
    return j;
}

CurveSpec CurveSpec::from_json(const nlohmann::json& j) {
    try {
        CurveSpec c;
        c.p = j.at("p").get<std::uint64_t>();
        const auto name = j.at("variant").get<std::string>();
        if (name == "fermat_quotient")
            c.variant = FermatQuotient{j.at("d").get<std::uint64_t>()};
        else if (name == "fermat")
            c.variant = Fermat{j.at("d").get<std::uint64_t>()};
        else if (name == "ordinary_as")
            c.variant = OrdinaryAS{j.at("r").get<std::uint64_t>()};
        else if (name == "fiber_product")
            c.variant = FiberProduct{j.at("d").get<std::uint64_t>(), j.at("r").get<std::uint64_t>()};
        else
            throw Error(ErrorCode::ParseError, "unknown curve variant '" + name + "'");
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

namespace {

void require_coprime(std::uint64_t p, std::uint64_t d) {
    if (d == 0 || std::gcd(p, d) != 1)
        throw Error(ErrorCode::NotCoprime,
                    "d = " + std::to_string(d) + " is not coprime to p = " + std::to_string(p));
}

void require_ordinary_params(std::uint64_t p, std::uint64_t r) {
    if (p != 2)
        throw Error(ErrorCode::InvalidSpec, "X_r and fiber products are defined for p = 2 only");
    if (r % 2 == 0)
        throw Error(ErrorCode::InvalidSpec, "r must be odd, got " + std::to_string(r));
}

} // namespace

void validate(const CurveSpec& c) {
    if (!is_prime(c.p))
        throw Error(ErrorCode::NotPrime, std::to_string(c.p) + " is not prime");
    std::visit(
        [&c](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, FermatQuotient> || std::is_same_v<T, Fermat>) {
                require_coprime(c.p, v.d);
            } else if constexpr (std::is_same_v<T, OrdinaryAS>) {
                require_ordinary_params(c.p, v.r);
            } else {
                require_ordinary_params(c.p, v.r);
                require_coprime(c.p, v.d);
            }
        },
        c.variant);
}

nlohmann::json GenusReport::to_json() const {
    if (lower_bound)
        return {{"lower_bound", value}};
    return {{"value", value}};
}

namespace {

std::uint64_t fermat_genus(std::uint64_t d) { return d < 3 ? 0 : (d - 1) * (d - 2) / 2; }

} // namespace

GenusReport genus_of(const CurveSpec& c) {
    struct Visitor {
        GenusReport operator()(const FermatQuotient& q) const { return {q.d == 0 ? 0 : (q.d - 1) / 2, false}; }
        GenusReport operator()(const Fermat& f) const { return {fermat_genus(f.d), false}; }
        GenusReport operator()(const OrdinaryAS& x) const { return {x.r == 0 ? 0 : x.r - 1, false}; }
        GenusReport operator()(const FiberProduct& fp) const {
            return {fermat_genus(fp.d) + (fp.r == 0 ? 0 : fp.r - 1), true};
        }
    };
    return std::visit(Visitor{}, c.variant);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

bool in_quotient_set(std::uint64_t d, std::uint64_t a) {
    if (d == 0)
        return false;
    a %= d;
    return a != 0 && !(d % 2 == 0 && a == d / 2);
}

bool in_fermat_set(std::uint64_t d, std::uint64_t a, std::uint64_t b) {
    if (d == 0)
        return false;
    a %= d;
    b %= d;
    return a != 0 && b != 0 && (a + b) % d != 0;
}

Letter quotient_sector(std::uint64_t d, std::uint64_t a) {
    if (!in_quotient_set(d, a))
        throw Error(ErrorCode::ExcludedResidue, std::to_string(a) + " is not in S(" + std::to_string(d) + ")");
    a %= d;
    return 2 * a < d ? Letter::v : Letter::f;
}

Letter fermat_sector(std::uint64_t d, std::uint64_t a, std::uint64_t b) {
    if (!in_fermat_set(d, a, b))
        throw Error(ErrorCode::ExcludedResidue, "(" + std::to_string(a) + "," + std::to_string(b) +
                                                    ") is not in T(" + std::to_string(d) + ")");
    return (a % d) + (b % d) < d ? Letter::v : Letter::f;
}

Word quotient_orbit_word(std::uint64_t p, std::uint64_t d, std::uint64_t a) {
    a %= d == 0 ? 1 : d;
    std::vector<Letter> u{quotient_sector(d, a)};
    for (std::uint64_t x = mul_mod(p, a, d); x != a; x = mul_mod(p, x, d))
        u.push_back(quotient_sector(d, x));
    return Word::from_indexed(u);
}

Word fermat_orbit_word(std::uint64_t p, std::uint64_t d, std::uint64_t a, std::uint64_t b) {
    if (d != 0) {
        a %= d;
        b %= d;
    }
    std::vector<Letter> u{fermat_sector(d, a, b)};
    std::uint64_t x = mul_mod(p, a, d), y = mul_mod(p, b, d);
    while (x != a || y != b) {
        u.push_back(fermat_sector(d, x, y));
        x = mul_mod(p, x, d);
        y = mul_mod(p, y, d);
    }
    return Word::from_indexed(u);
}

namespace {

void require_perm_data_params(std::uint64_t p, std::uint64_t d) {
    require_coprime(p, d);
    if (d < 3)
        throw Error(ErrorCode::DegreeTooSmall, "d must be at least 3, got " + std::to_string(d));
}

} // namespace

PermutationData quotient_perm_data(std::uint64_t p, std::uint64_t d) {
    require_perm_data_params(p, d);
    std::vector<std::string> labels;
    std::vector<Letter> sector;
    std::vector<std::uint64_t> residues;
    std::vector<std::size_t> index_of(d, 0);
    for (std::uint64_t a = 1; a < d; ++a) {
        if (!in_quotient_set(d, a))
            continue;
        index_of[a] = residues.size();
        residues.push_back(a);
        labels.push_back(std::to_string(a));
        sector.push_back(quotient_sector(d, a));
    }
    std::vector<std::size_t> pi;
    for (std::uint64_t a : residues)
        pi.push_back(index_of[mul_mod(p, a, d)]);
    return PermutationData(std::move(labels), std::move(sector), std::move(pi));
}

PermutationData fermat_perm_data(std::uint64_t p, std::uint64_t d) {
    require_perm_data_params(p, d);
    std::vector<std::string> labels;
    std::vector<Letter> sector;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    std::vector<std::size_t> index_of(d * d, 0);
    for (std::uint64_t a = 1; a < d; ++a)
        for (std::uint64_t b = 1; b < d; ++b) {
            if (!in_fermat_set(d, a, b))
                continue;
            index_of[a * d + b] = pairs.size();
            pairs.emplace_back(a, b);
            labels.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
            sector.push_back(fermat_sector(d, a, b));
        }
    std::vector<std::size_t> pi;
    for (const auto& [a, b] : pairs)
        pi.push_back(index_of[mul_mod(p, a, d) * d + mul_mod(p, b, d)]);
    return PermutationData(std::move(labels), std::move(sector), std::move(pi));
}

std::uint64_t enumeration_size(const CurveSpec& c) {
    struct Visitor {
        std::uint64_t operator()(const FermatQuotient& q) const {
            if (q.d < 2)
                return 0;
            return q.d - 1 - (q.d % 2 == 0 ? 1 : 0);
        }
        std::uint64_t operator()(const Fermat& f) const { return f.d < 3 ? 0 : (f.d - 1) * (f.d - 2); }
        std::uint64_t operator()(const OrdinaryAS&) const { return 0; }
        std::uint64_t operator()(const FiberProduct& fp) const { return (*this)(Fermat{fp.d}); }
    };
    return std::visit(Visitor{}, c.variant);
}

namespace {

void decompose_quotient(std::uint64_t p, std::uint64_t d, Decomposition& out) {
    std::vector<bool> seen(d, false);
    std::vector<Letter> u;
    for (std::uint64_t a = 1; a < d; ++a) {
        if (seen[a] || !in_quotient_set(d, a))
            continue;
        u.clear();
        std::uint64_t x = a;
        do {
            seen[x] = true;
            u.push_back(2 * x < d ? Letter::v : Letter::f);
            x = mul_mod(p, x, d);
        } while (x != a);
        const Word w = Word::from_indexed(u);
        out.per_orbit[CyclicWord(w)] += 1;
        ++out.num_orbits;
    }
}

void decompose_fermat(std::uint64_t p, std::uint64_t d, Decomposition& out) {
    std::vector<bool> seen(d * d, false);
    std::vector<Letter> u;
    for (std::uint64_t a = 1; a < d; ++a)
        for (std::uint64_t b = 1; b < d; ++b) {
            if (seen[a * d + b] || !in_fermat_set(d, a, b))
                continue;
            u.clear();
            std::uint64_t x = a, y = b;
            do {
                seen[x * d + y] = true;
                u.push_back(x + y < d ? Letter::v : Letter::f);
                x = mul_mod(p, x, d);
                y = mul_mod(p, y, d);
            } while (x != a || y != b);
            const Word w = Word::from_indexed(u);
            out.per_orbit[CyclicWord(w)] += 1;
            ++out.num_orbits;
        }
}

} // namespace

Decomposition decompose(const CurveSpec& c, const DecomposeOptions& opts) {
    validate(c);
    const std::uint64_t size = enumeration_size(c);
    if (size > opts.budget)
        throw Error(ErrorCode::BudgetExceeded, "index set has " + std::to_string(size) +
                                                   " elements, budget is " + std::to_string(opts.budget));
    Decomposition out;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, FermatQuotient>) {
                decompose_quotient(c.p, v.d, out);
            } else if constexpr (std::is_same_v<T, Fermat>) {
                decompose_fermat(c.p, v.d, out);
            } else if constexpr (std::is_same_v<T, OrdinaryAS>) {
                // Ordinary: (Z/2 + mu_2)^{r-1}.
                if (v.r > 1) {
                    out.per_orbit[CyclicWord::parse("f")] += v.r - 1;
                    out.per_orbit[CyclicWord::parse("v")] += v.r - 1;
                    out.num_orbits = 2 * (v.r - 1);
                }
            } else {
                decompose_fermat(c.p, v.d, out);
                if (v.r > 1) {
                    out.per_orbit[CyclicWord::parse("f")] += v.r - 1;
                    out.per_orbit[CyclicWord::parse("v")] += v.r - 1;
                    out.num_orbits += 2 * (v.r - 1);
                }
                out.partial = true;
            }
        },
        c.variant);
    out.expanded = expand(out.per_orbit);
    return out;
}

std::map<std::uint64_t, std::uint64_t> divisibility_embed(std::uint64_t p, std::uint64_t d_small,
                                                         std::uint64_t d_big) {
    require_coprime(p, d_small);
    require_coprime(p, d_big);
    if (d_big % d_small != 0)
        throw Error(ErrorCode::NotDivisible,
                    std::to_string(d_small) + " does not divide " + std::to_string(d_big));
    const std::uint64_t k = d_big / d_small;
    std::map<std::uint64_t, std::uint64_t> out;
    for (std::uint64_t a = 1; a < d_small; ++a) {
        if (in_quotient_set(d_small, a))
            out.emplace(a, a * k);
    }
    return out;
}

} // namespace bt1
