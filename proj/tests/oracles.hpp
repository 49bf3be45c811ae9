#pragma once

// Naive reference implementations used only by tests. Nothing here calls into
// the library except for container types.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline std::vector<std::string> all_words(std::size_t n) {
    std::vector<std::string> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::string s(n, 'f');
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1)
                s[i] = 'v';
        out.push_back(s);
    }
    return out;
}

inline std::vector<std::string> all_words_up_to(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t k = 1; k <= n; ++k)
        for (auto& w : all_words(k))
            out.push_back(w);
    return out;
}

inline std::string random_word(std::mt19937_64& rng, std::size_t max_len) {
    const std::size_t n = 1 + rng() % max_len;
    std::string s(n, 'f');
    for (auto& c : s)
        c = rng() & 1 ? 'v' : 'f';
    return s;
}

/// Smallest rotation by listing all of them.
inline std::string least_rotation(const std::string& s) {
    std::string best = s;
    for (std::size_t k = 1; k < s.size(); ++k)
        best = std::min(best, s.substr(k) + s.substr(0, k));
    return best;
}

/// (root, exponent) by trying every divisor of the length.
inline std::pair<std::string, std::size_t> primitive_root(const std::string& s) {
    for (std::size_t k = 1; k <= s.size(); ++k) {
        if (s.size() % k)
            continue;
        std::string rep;
        for (std::size_t i = 0; i < s.size() / k; ++i)
            rep += s.substr(0, k);
        if (rep == s)
            return {s.substr(0, k), s.size() / k};
    }
    return {s, 1};
}

/// Adds an orbit word (given as u_0, u_1, ...) to a canonical expanded multiset.
inline void add_orbit(std::map<std::string, std::uint64_t>& ms, const std::vector<char>& u) {
    std::string text(u.rbegin(), u.rend());
    const auto [root, e] = primitive_root(text);
    ms[least_rotation(root)] += e;
}

/// Orbits of multiplication by p on {a : 0 < a < d, 2a != d}.
inline std::map<std::string, std::uint64_t> quotient_decomposition(std::uint64_t p, std::uint64_t d) {
    std::map<std::string, std::uint64_t> ms;
    std::vector<bool> seen(d, false);
    for (std::uint64_t a = 1; a < d; ++a) {
        if (2 * a == d || seen[a])
            continue;
        std::vector<char> u;
        std::uint64_t x = a;
        do {
            seen[x] = true;
            u.push_back(2 * x < d ? 'v' : 'f');
            x = x * p % d;
        } while (x != a);
        add_orbit(ms, u);
    }
    return ms;
}

/// Orbits of (a,b) -> (pa,pb) on {(a,b) : a, b, a+b nonzero mod d}.
inline std::map<std::string, std::uint64_t> fermat_decomposition(std::uint64_t p, std::uint64_t d) {
    std::map<std::string, std::uint64_t> ms;
    std::vector<bool> seen(d * d, false);
    for (std::uint64_t a = 1; a < d; ++a)
        for (std::uint64_t b = 1; b < d; ++b) {
            if ((a + b) % d == 0 || seen[a * d + b])
                continue;
            std::vector<char> u;
            std::uint64_t x = a, y = b;
            do {
                seen[x * d + y] = true;
                u.push_back(x + y < d ? 'v' : 'f');
                x = x * p % d;
                y = y * p % d;
            } while (x != a || y != b);
            add_orbit(ms, u);
        }
    return ms;
}

inline std::uint64_t fermat_set_size(std::uint64_t d) {
    std::uint64_t n = 0;
    for (std::uint64_t a = 1; a < d; ++a)
        for (std::uint64_t b = 1; b < d; ++b)
            if ((a + b) % d != 0)
                ++n;
    return n;
}

/// Polynomial remainder mod p; coefficients low to high.
inline std::vector<std::uint64_t> poly_mod(std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& m,
                                           std::uint64_t p) {
    const std::size_t dm = m.size() - 1;
    std::uint64_t lead_inv = 1;
    for (std::uint64_t i = 1; i < p; ++i)
        if (m.back() * i % p == 1)
            lead_inv = i;
    while (a.size() > dm) {
        const std::uint64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] = (a[shift + i] + p * p - c * m[i] % p) % p;
        a.pop_back();
    }
    return a;
}

/// Irreducibility by trial division with every monic polynomial of degree 1..deg/2.
inline bool trial_division_irreducible(const std::vector<std::uint64_t>& f, std::uint64_t p) {
    const std::size_t deg = f.size() - 1;
    for (std::size_t k = 1; 2 * k <= deg; ++k) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < k; ++i)
            count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<std::uint64_t> g(k + 1);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < k; ++i) {
                g[i] = c % p;
                c /= p;
            }
            g[k] = 1;
            const auto r = poly_mod(f, g, p);
            if (std::all_of(r.begin(), r.end(), [](std::uint64_t x) { return x == 0; }))
                return false;
        }
    }
    return true;
}

/// Rank over GF(p) by plain Gaussian elimination on integers.
inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
    auto inv = [p](std::int64_t x) {
        for (std::int64_t i = 1; i < p; ++i)
            if (x * i % p == 1)
                return i;
        return std::int64_t{0};
    };
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && ((a[piv][c] % p) + p) % p == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(a[r], a[piv]);
        const std::int64_t s = inv(((a[r][c] % p) + p) % p);
        for (auto& x : a[r])
            x = ((x * s) % p + p) % p;
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r) {
                const std::int64_t f = ((a[i][c] % p) + p) % p;
                for (std::size_t j = 0; j < cols; ++j)
                    a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
            }
        ++r;
    }
    return r;
}

/// Permutation data as plain vectors for the bijection search.
struct RawPermData {
    std::vector<char> sector;
    std::vector<std::size_t> pi;
};

/// Searches for iota with sector'(iota x) = sector(x) and iota pi = pi' iota.
inline bool isomorphic_by_search(const RawPermData& P, const RawPermData& Q) {
    const std::size_t n = P.pi.size();
    if (Q.pi.size() != n)
        return false;
    std::vector<long> iota(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
        if (i == n)
            return true;
        if (iota[i] >= 0)
            return go(i + 1);
        for (std::size_t t = 0; t < n; ++t) {
            if (used[t])
                continue;
            // Assign the whole orbit of i starting at t; fail on any conflict.
            std::vector<std::size_t> assigned;
            bool ok = true;
            std::size_t x = i, y = t;
            do {
                if (iota[x] >= 0) {
                    ok = static_cast<std::size_t>(iota[x]) == y;
                    break;
                }
                if (used[y] || P.sector[x] != Q.sector[y]) {
                    ok = false;
                    break;
                }
                iota[x] = static_cast<long>(y);
                used[y] = true;
                assigned.push_back(x);
                x = P.pi[x];
                y = Q.pi[y];
            } while (true);
            if (ok && go(i + 1))
                return true;
            for (auto a : assigned) {
                used[static_cast<std::size_t>(iota[a])] = false;
                iota[a] = -1;
            }
        }
        return false;
    };
    return go(0);
}

inline RawPermData random_perm_data(std::mt19937_64& rng, std::size_t n) {
    RawPermData r;
    r.pi.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        r.pi[i] = i;
    std::shuffle(r.pi.begin(), r.pi.end(), rng);
    for (std::size_t i = 0; i < n; ++i)
        r.sector.push_back(rng() & 1 ? 'f' : 'v');
    return r;
}

/// Sector of a under the plain archimedean rule on Z/(p^l - 1).
inline char archimedean(std::uint64_t a, std::uint64_t d) { return 2 * a < d ? 'v' : (2 * a > d ? 'f' : 'x'); }

/// Cartier-Manin matrix of the plane Fermat curve x^d + y^d + z^d = 0 over GF(p):
/// rows and columns indexed by u = (u1,u2,u3), u_i >= 1, sum d; the entry (u,v) is
/// the coefficient of x^{p u1 - v1} y^{p u2 - v2} z^{p u3 - v3} in (x^d + y^d + z^d)^{p-1}.
inline std::vector<std::vector<std::int64_t>> fermat_cartier_manin(std::int64_t p, std::int64_t d) {
    std::vector<std::array<std::int64_t, 3>> idx;
    for (std::int64_t a = 1; a < d; ++a)
        for (std::int64_t b = 1; a + b < d; ++b)
            idx.push_back({a, b, d - a - b});
    // Multinomial (p-1)! / (i! j! k!) mod p for i + j + k = p - 1.
    auto fact = [](std::int64_t n) {
        std::int64_t r = 1;
        for (std::int64_t i = 2; i <= n; ++i)
            r *= i;
        return r;
    };
    auto coeff = [&](const std::array<std::int64_t, 3>& e) -> std::int64_t {
        std::int64_t k[3];
        for (int i = 0; i < 3; ++i) {
            if (e[i] < 0 || e[i] % d != 0)
                return 0;
            k[i] = e[i] / d;
        }
        if (k[0] + k[1] + k[2] != p - 1)
            return 0;
        return fact(p - 1) / (fact(k[0]) * fact(k[1]) * fact(k[2])) % p;
    };
    std::vector<std::vector<std::int64_t>> m(idx.size(), std::vector<std::int64_t>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < idx.size(); ++c)
            m[r][c] = coeff({p * idx[r][0] - idx[c][0], p * idx[r][1] - idx[c][1], p * idx[r][2] - idx[c][2]});
    return m;
}

inline std::vector<std::vector<std::int64_t>> mat_mul_mod(const std::vector<std::vector<std::int64_t>>& a,
                                                          const std::vector<std::vector<std::int64_t>>& b,
                                                          std::int64_t p) {
    const std::size_t n = a.size();
    std::vector<std::vector<std::int64_t>> c(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % p;
    return c;
}

/// p-rank of the Fermat curve: stable rank of its Cartier-Manin matrix (entries in GF(p)).
inline std::size_t fermat_p_rank(std::int64_t p, std::int64_t d) {
    auto m = fermat_cartier_manin(p, d);
    if (m.empty())
        return 0;
    auto power = m;
    for (std::size_t i = 1; i < m.size(); ++i)
        power = mat_mul_mod(power, m, p);
    return rank_mod_p(power, p);
}

/// a-number of the Fermat curve: genus minus the rank of its Cartier-Manin matrix.
inline std::size_t fermat_a_number(std::int64_t p, std::int64_t d) {
    const auto m = fermat_cartier_manin(p, d);
    return m.size() - rank_mod_p(m, p);
}

} // namespace oracle
