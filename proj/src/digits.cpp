#include "bt1/digits.hpp"

#include <numeric>

#include "bt1/error.hpp"
#include "bt1/galois.hpp"
#include "bt1/fermat.hpp"

namespace bt1 {

std::uint64_t mersenne_like(std::uint64_t p, std::uint64_t ell) {
    if (ell == 0)
        throw Error(ErrorCode::OutOfRange, "digit length must be positive");
    std::uint64_t q = 1;
    for (std::uint64_t i = 0; i < ell; ++i) {
        if (q > (std::uint64_t{1} << 62) / p)
            throw Error(ErrorCode::Overflow,
                        std::to_string(p) + "^" + std::to_string(ell) + " exceeds the 64-bit range");
        q *= p;
    }
    return q - 1;
}

std::uint64_t DigitVector::value() const {
    std::uint64_t v = 0;
    for (std::size_t i = digits.size(); i-- > 0;)
        v = v * p + digits[i];
    return v;
}

namespace {

std::vector<std::uint32_t> raw_digits(std::uint64_t a, std::uint64_t p, std::uint64_t ell) {
    std::vector<std::uint32_t> out(ell, 0);
    for (std::uint64_t i = 0; i < ell; ++i) {
        out[i] = static_cast<std::uint32_t>(a % p);
        a /= p;
    }
    return out;
}

/// Letter decided by the first digit != (p-1)/2 scanning down from `start`,
/// wrapping from a_0 to a_{l-1}.
Sector scan_from(const std::vector<std::uint32_t>& digits, std::uint64_t p, std::size_t start) {
    const std::size_t ell = digits.size();
    for (std::size_t step = 0; step < ell; ++step) {
        const std::size_t i = (start + ell - step) % ell;
        const std::uint64_t twice = 2 * std::uint64_t{digits[i]};
        if (twice < p - 1)
            return Sector::v;
        if (twice > p - 1)
            return Sector::f;
    }
    return Sector::excluded;
}

void require_in_s(std::uint64_t a, std::uint64_t d) {
    if (!in_quotient_set(d, a))
        throw Error(ErrorCode::ExcludedResidue, std::to_string(a) + " is not in S(" + std::to_string(d) + ")");
}

} // namespace

DigitVector digits_of(std::uint64_t a, std::uint64_t p, std::uint64_t ell) {
    const std::uint64_t d = mersenne_like(p, ell);
    if (a == 0 || a >= d)
        throw Error(ErrorCode::OutOfRange,
                    "need 0 < a < " + std::to_string(d) + ", got " + std::to_string(a));
    return {p, raw_digits(a, p, ell)};
}

Sector sector_of(std::uint64_t a, std::uint64_t p, std::uint64_t ell) {
    const std::uint64_t d = mersenne_like(p, ell);
    a %= d;
    if (a == 0)
        return Sector::excluded;
    return scan_from(raw_digits(a, p, ell), p, ell - 1);
}

Sector sector_archimedean(std::uint64_t a, std::uint64_t p, std::uint64_t ell) {
    const std::uint64_t d = mersenne_like(p, ell);
    a %= d;
    if (a == 0 || 2 * a == d)
        return Sector::excluded;
    return 2 * a < d ? Sector::v : Sector::f;
}

std::uint64_t orbit_size(std::uint64_t a, std::uint64_t p, std::uint64_t ell) {
    const std::uint64_t d = mersenne_like(p, ell);
    require_in_s(a, d);
    const std::uint64_t n = d / std::gcd(d, a % d);
    std::uint64_t k = 1;
    for (std::uint64_t x = p % n; x != 1 % n; x = mul_mod(x, p, n))
        ++k;
    return k;
}

std::uint64_t orbit_size_by_iteration(std::uint64_t a, std::uint64_t p, std::uint64_t ell) {
    const std::uint64_t d = mersenne_like(p, ell);
    require_in_s(a, d);
    a %= d;
    std::uint64_t k = 1;
    for (std::uint64_t x = mul_mod(p, a, d); x != a; x = mul_mod(p, x, d))
        ++k;
    return k;
}

Word word_of_element(std::uint64_t a, std::uint64_t p, std::uint64_t ell) {
    const std::uint64_t d = mersenne_like(p, ell);
    require_in_s(a, d);
    const auto digits = raw_digits(a % d, p, ell);
    const std::uint64_t lambda = orbit_size(a, p, ell);
    std::vector<Letter> u(lambda);
    for (std::uint64_t j = 0; j < lambda; ++j) {
        // pi^j(a) has leading digit a_{l-1-j}.
        const Sector s = scan_from(digits, p, static_cast<std::size_t>((ell - 1 - j % ell) % ell));
        u[j] = s == Sector::v ? Letter::v : Letter::f;
    }
    return Word::from_indexed(u);
}

std::uint64_t digit_recipe(const Word& w, std::uint64_t p) {
    const std::string& text = w.str();
    std::uint64_t a = 0;
    for (std::size_t j = text.size(); j-- > 0;)
        a = a * p + (text[j] == 'f' ? p - 1 : 0); // a_j from u_{l-1-j} = text[j]
    return a;
}

namespace {

bool element_matches(std::uint64_t a, const Word& w, std::uint64_t p, std::uint64_t d) {
    return in_quotient_set(d, a) && word_of_element(a, p, w.length()) == w;
}

std::uint64_t scan_s_for_word(const Word& w, std::uint64_t p, std::uint64_t d, const SearchOptions& opts) {
    const std::uint64_t ell = w.length();
    std::uint64_t spent = 0;
    for (std::uint64_t a = 1; a < d; ++a) {
        if (!in_quotient_set(d, a))
            continue;
        spent += ell;
        if (spent > opts.budget)
            throw Error(ErrorCode::SearchExhausted, "scan of S(" + std::to_string(d) + ") for '" + w.str() +
                                                        "' exceeded " + std::to_string(opts.budget) +
                                                        " sector evaluations");
        if (word_of_element(a, p, ell) == w)
            return a;
    }
    throw Error(ErrorCode::NotRealizable,
                "no element of S(" + std::to_string(d) + ") has word '" + w.str() + "' (exhaustive scan)");
}

} // namespace

std::uint64_t element_for_word(const Word& w, std::uint64_t p, const SearchOptions& opts) {
    if (w.empty())
        throw Error(ErrorCode::EmptyWord, "element_for_word needs a nonempty word");
    if (!is_prime(p))
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    const std::uint64_t ell = w.length();
    const std::uint64_t d = mersenne_like(p, ell);
    const auto [root, exponent] = primitive_root(w);

    if (ell == 1 && p == 2)
        throw Error(ErrorCode::DegreeOne, "S(1) is empty; length-1 words at p = 2 need the fiber product");

    std::uint64_t candidate = 0;
    if (w.is_constant(Letter::v) || w.is_constant(Letter::f)) {
        if (p == 2)
            throw Error(ErrorCode::NotRealizable, "constant word '" + w.str() + "' does not occur in S(" +
                                                      std::to_string(d) + ") at p = 2");
        candidate = w.is_constant(Letter::v) ? 1 : d - 1;
    } else if (exponent == 1) {
        candidate = digit_recipe(w, p);
    } else {
        if (p == 2)
            throw Error(ErrorCode::NotRealizable,
                        "proper powers '" + w.str() + "' do not occur in S(" + std::to_string(d) + ") at p = 2");
        if (p == 3 && root.str().size() == 2)
            throw Error(ErrorCode::NotRealizable,
                        "(fv)^e with e > 1 does not occur in S(" + std::to_string(d) + ") at p = 3");
        // Recipe digits give the root word; one digit 0 -> 1 makes the element primitive.
        candidate = digit_recipe(w, p);
        std::uint64_t place = 1;
        for (std::uint64_t j = 0; j < ell; ++j, place *= p) {
            if ((candidate / place) % p == 0) {
                candidate += place;
                break;
            }
        }
    }

    if (element_matches(candidate, w, p, d))
        return candidate;
    if (ell == 1)
        throw Error(ErrorCode::NotRealizable, "S(" + std::to_string(d) + ") has no element with word '" +
                                                  w.str() + "' (p^l <= 3)");
    return scan_s_for_word(w, p, d, opts);
}

nlohmann::json PairWitness::to_json() const {
    nlohmann::json j = {{"d", d}, {"pairs", nlohmann::json::array()}, {"recipe_matched", recipe_matched},
                        {"method", method}};
    for (const auto& [a, b] : pairs)
        j["pairs"].push_back({a, b});
    if (recipe_pair)
        j["recipe_pair"] = {recipe_pair->first, recipe_pair->second};
    if (recipe_word)
        j["recipe_word"] = *recipe_word;
    return j;
}

namespace {

class PairSearch {
public:
    PairSearch(const Word& w, std::uint64_t p, std::uint64_t d, const SearchOptions& opts)
        : target_(w), p_(p), d_(d), opts_(opts) {
        const auto pr = primitive_root(w);
        root_ = CyclicWord(pr.root);
        exponent_ = pr.exponent;
    }

    /// Word of the orbit of (a,b), charged against the budget.
    Word orbit_word(std::uint64_t a, std::uint64_t b) {
        charge(target_.length());
        return fermat_orbit_word(p_, d_, a, b);
    }

    bool realizes(const Pair& ab) {
        return in_fermat_set(d_, ab.first, ab.second) &&
               CyclicWord(orbit_word(ab.first, ab.second)) == CyclicWord(target_);
    }

    /// e distinct orbits with word w' inside the copy of T(p^len(w') - 1) embedded
    /// in T(d) by scaling. Empty when that copy holds fewer than e of them.
    std::vector<Pair> scan_root_sublattice() {
        const std::uint64_t lambda = root_.length();
        const std::uint64_t d_small = mersenne_like(p_, lambda);
        if (exponent_ == 1 || d_small < 3)
            return {};
        const std::uint64_t k = d_ / d_small;
        std::vector<Pair> found;
        for (std::uint64_t a = 1; a < d_small && found.size() < exponent_; ++a)
            for (std::uint64_t b = 1; b < d_small && found.size() < exponent_; ++b) {
                if (!in_fermat_set(d_small, a, b) || !orbit_least(a, b, d_small))
                    continue;
                charge(lambda);
                if (CyclicWord(fermat_orbit_word(p_, d_small, a, b)) == root_)
                    found.emplace_back(a * k, b * k);
            }
        if (found.size() < exponent_)
            found.clear();
        return found;
    }

    /// Lexicographic scan of T; the first orbit with word w, or the first e orbits
    /// with word w', whichever completes first.
    std::vector<Pair> scan(std::string& method) {
        const CyclicWord want(target_);
        std::vector<Pair> partial;
        std::vector<Letter> u;
        for (std::uint64_t a = 1; a < d_; ++a)
            for (std::uint64_t b = 1; b < d_; ++b) {
                if (!in_fermat_set(d_, a, b))
                    continue;
                // Only the lexicographically least member of each orbit is examined.
                u.clear();
                bool least = true;
                std::uint64_t x = a, y = b;
                do {
                    charge(1);
                    if (x < a || (x == a && y < b)) {
                        least = false;
                        break;
                    }
                    u.push_back(x + y < d_ ? Letter::v : Letter::f);
                    x = mul_mod(p_, x, d_);
                    y = mul_mod(p_, y, d_);
                } while (x != a || y != b);
                if (!least)
                    continue;
                const CyclicWord got(Word::from_indexed(u));
                if (got == want) {
                    method = "scan_single_orbit";
                    return {{a, b}};
                }
                if (exponent_ > 1 && got == root_) {
                    partial.emplace_back(a, b);
                    if (partial.size() == exponent_) {
                        method = "scan_root_orbits";
                        return partial;
                    }
                }
            }
        std::string detail = "exhaustive scan of T(" + std::to_string(d_) + ") found no orbit with word '" +
                             target_.str() + "'";
        if (exponent_ > 1)
            detail += " and only " + std::to_string(partial.size()) + " of " + std::to_string(exponent_) +
                      " orbits with word '" + root_.str() + "'";
        throw Error(ErrorCode::NotRealizable, detail);
    }

private:
    bool orbit_least(std::uint64_t a, std::uint64_t b, std::uint64_t d) {
        std::uint64_t x = mul_mod(p_, a, d), y = mul_mod(p_, b, d);
        while (x != a || y != b) {
            charge(1);
            if (x < a || (x == a && y < b))
                return false;
            x = mul_mod(p_, x, d);
            y = mul_mod(p_, y, d);
        }
        return true;
    }

    void charge(std::uint64_t n) {
        spent_ += n;
        if (spent_ > opts_.budget)
            throw Error(ErrorCode::SearchExhausted, "search in T(" + std::to_string(d_) + ") for '" +
                                                        target_.str() + "' exceeded " +
                                                        std::to_string(opts_.budget) + " sector evaluations");
    }

    Word target_;
    CyclicWord root_{Word::parse("f")};
    std::uint64_t exponent_ = 1;
    std::uint64_t p_;
    std::uint64_t d_;
    SearchOptions opts_;
    std::uint64_t spent_ = 0;
};

} // namespace

PairWitness pair_for_word(const Word& w, std::uint64_t p, const SearchOptions& opts) {
    if (w.empty())
        throw Error(ErrorCode::EmptyWord, "pair_for_word needs a nonempty word");
    if (!is_prime(p))
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    const std::uint64_t ell = w.length();
    const std::uint64_t d = mersenne_like(p, ell);
    const bool constant = w.is_constant(Letter::f) || w.is_constant(Letter::v);
    if (p == 2 && constant)
        throw Error(ErrorCode::NotRealizable,
                    "constant words at p = 2 are handled by the ordinary curve X_r, not by T(d)");
    if (d < 3)
        throw Error(ErrorCode::NotRealizable, "T(" + std::to_string(d) + ") is empty (p^l <= 3)");

    PairWitness out;
    out.d = d;
    PairSearch search(w, p, d, opts);
    const auto pr = primitive_root(w);

    Pair recipe;
    if (constant) {
        recipe = w.is_constant(Letter::f) ? Pair{d - 1, d - 1} : Pair{1, 1};
        out.method = "recipe_constant";
    } else if (pr.exponent == 1) {
        const std::uint64_t a = element_for_word(w, p, opts);
        recipe = {a, a};
        out.method = "recipe_diagonal";
    } else {
        const std::uint64_t a = digit_recipe(w, p);
        recipe = {(a + 1) % d, (a + d - 1) % d};
        out.method = "recipe_shift";
    }
    out.recipe_pair = recipe;
    if (in_fermat_set(d, recipe.first, recipe.second))
        out.recipe_word = search.orbit_word(recipe.first, recipe.second).str();
    if (out.recipe_word && CyclicWord(Word::parse(*out.recipe_word)) == CyclicWord(w)) {
        out.recipe_matched = true;
        out.pairs = {recipe};
        return out;
    }

    if (pr.exponent > 1 && !constant) {
        const std::uint64_t a = digit_recipe(w, p);
        for (std::uint64_t t = p; t < d; t *= p) {
            const Pair cand{(a + t) % d, (a + d - t % d) % d};
            if (search.realizes(cand)) {
                out.method = "shift_t=" + std::to_string(t);
                out.pairs = {cand};
                return out;
            }
            if (t > d / p)
                break;
        }
    }
    if (auto sub = search.scan_root_sublattice(); !sub.empty()) {
        out.method = "sublattice_root_orbits";
        out.pairs = std::move(sub);
        return out;
    }
    out.pairs = search.scan(out.method);
    return out;
}

} // namespace bt1
