#include "bt1/galois.hpp"

#include <sstream>

#include "bt1/error.hpp"

namespace bt1 {

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0)
            return false;
    }
    return true;
}

namespace {

using Poly = std::vector<std::uint64_t>; // low to high

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t lead_inv = inv_mod(m.back(), p);
    while (a.size() > dm) {
        const std::uint64_t coef = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] = (a[shift + i] + (p - coef) * m[i]) % p;
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
    if (a.empty() || b.empty())
        return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(out), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
    Poly result{1};
    base = poly_mod(std::move(base), m, p);
    while (e) {
        if (e & 1)
            result = poly_mulmod(result, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

} // namespace

bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint64_t p) {
    const Poly f(monic.begin(), monic.end());
    const std::size_t m = f.size() - 1;
    if (m == 0)
        return false;
    if (m == 1)
        return true;
    // x^{p^k} mod f for k = 0..m.
    std::vector<Poly> frob(m + 1);
    frob[0] = Poly{0, 1};
    for (std::size_t k = 1; k <= m; ++k)
        frob[k] = poly_powmod(frob[k - 1], p, f, p);
    auto minus_x = [p](Poly a) {
        a.resize(std::max<std::size_t>(a.size(), 2), 0);
        a[1] = (a[1] + p - 1) % p;
        trim(a);
        return a;
    };
    if (!minus_x(frob[m]).empty())
        return false;
    for (std::size_t q = 2; q <= m; ++q) {
        if (m % q != 0 || !is_prime(q))
            continue;
        const Poly g = poly_gcd(f, minus_x(frob[m / q]), p);
        if (g.size() != 1)
            return false;
    }
    return true;
}

GaloisField GaloisField::make(std::uint64_t p, unsigned m) {
    if (!is_prime(p))
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (m < 1 || m > kMaxExtensionDegree)
        throw Error(ErrorCode::DegreeTooLarge, "extension degree must lie in [1, 8], got " + std::to_string(m));
    if (p > 65521)
        throw Error(ErrorCode::DegreeTooLarge, "characteristic too large for 32-bit coordinates");
    std::uint64_t order = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (order > (std::uint64_t{1} << 62) / p)
            throw Error(ErrorCode::DegreeTooLarge, "field order exceeds 2^62");
        order *= p;
    }

    GaloisField F;
    F.p_ = p;
    F.m_ = m;
    F.order_ = order;
    for (std::uint64_t code = 0; code < order; ++code) {
        std::vector<std::uint32_t> candidate(m + 1, 0);
        std::uint64_t rest = code;
        for (unsigned i = 0; i < m; ++i) {
            candidate[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        candidate[m] = 1;
        if (is_irreducible(candidate, p)) {
            F.modulus_ = std::move(candidate);
            break;
        }
    }

    // Frobenius is GF(p)-linear: column i holds the coordinates of (x^i)^p.
    const Poly mod(F.modulus_.begin(), F.modulus_.end());
    std::vector<std::uint32_t> sigma(m * m, 0);
    for (unsigned i = 0; i < m; ++i) {
        Poly xi(i + 1, 0);
        xi[i] = 1;
        const Poly img = poly_powmod(xi, p, mod, p);
        for (std::size_t r = 0; r < img.size(); ++r)
            sigma[r * m + i] = static_cast<std::uint32_t>(img[r]);
    }
    std::vector<std::uint32_t> ident(m * m, 0);
    for (unsigned i = 0; i < m; ++i)
        ident[i * m + i] = 1;
    F.frob_pow_.push_back(ident);
    for (unsigned k = 1; k < m; ++k) {
        const auto& prev = F.frob_pow_.back();
        std::vector<std::uint32_t> next(m * m, 0);
        for (unsigned r = 0; r < m; ++r)
            for (unsigned c = 0; c < m; ++c) {
                std::uint64_t acc = 0;
                for (unsigned t = 0; t < m; ++t)
                    acc = (acc + std::uint64_t{sigma[r * m + t]} * prev[t * m + c]) % p;
                next[r * m + c] = static_cast<std::uint32_t>(acc);
            }
        F.frob_pow_.push_back(std::move(next));
    }
    return F;
}

FieldElement GaloisField::one() const {
    FieldElement x;
    x.c[0] = 1;
    return x;
}

FieldElement GaloisField::from_uint(std::uint64_t n) const {
    FieldElement x;
    x.c[0] = static_cast<std::uint32_t>(n % p_);
    return x;
}

FieldElement GaloisField::from_index(std::uint64_t idx) const {
    FieldElement x;
    idx %= order_;
    for (unsigned i = 0; i < m_; ++i) {
        x.c[i] = static_cast<std::uint32_t>(idx % p_);
        idx /= p_;
    }
    return x;
}

std::uint64_t GaloisField::index(const FieldElement& x) const {
    std::uint64_t idx = 0;
    for (unsigned i = m_; i-- > 0;)
        idx = idx * p_ + x.c[i];
    return idx;
}

FieldElement GaloisField::add(const FieldElement& x, const FieldElement& y) const {
    FieldElement z;
    for (unsigned i = 0; i < m_; ++i)
        z.c[i] = static_cast<std::uint32_t>((std::uint64_t{x.c[i]} + y.c[i]) % p_);
    return z;
}

FieldElement GaloisField::neg(const FieldElement& x) const {
    FieldElement z;
    for (unsigned i = 0; i < m_; ++i)
        z.c[i] = x.c[i] == 0 ? 0 : static_cast<std::uint32_t>(p_ - x.c[i]);
    return z;
}

FieldElement GaloisField::sub(const FieldElement& x, const FieldElement& y) const { return add(x, neg(y)); }

FieldElement GaloisField::mul(const FieldElement& x, const FieldElement& y) const {
    std::array<std::uint64_t, 2 * kMaxExtensionDegree> prod{};
    for (unsigned i = 0; i < m_; ++i) {
        if (x.c[i] == 0)
            continue;
        for (unsigned j = 0; j < m_; ++j)
            prod[i + j] = (prod[i + j] + std::uint64_t{x.c[i]} * y.c[j]) % p_;
    }
    // Reduce by the monic modulus: x^m = -(c_0 + ... + c_{m-1} x^{m-1}).
    for (unsigned k = 2 * m_ - 1; k-- > m_;) {
        const std::uint64_t coef = prod[k];
        if (coef == 0)
            continue;
        prod[k] = 0;
        for (unsigned i = 0; i < m_; ++i)
            prod[k - m_ + i] = (prod[k - m_ + i] + (p_ - coef) * modulus_[i]) % p_;
    }
    FieldElement z;
    for (unsigned i = 0; i < m_; ++i)
        z.c[i] = static_cast<std::uint32_t>(prod[i]);
    return z;
}

FieldElement GaloisField::pow(FieldElement x, std::uint64_t e) const {
    FieldElement result = one();
    while (e) {
        if (e & 1)
            result = mul(result, x);
        x = mul(x, x);
        e >>= 1;
    }
    return result;
}

FieldElement GaloisField::inv(const FieldElement& x) const {
    if (is_zero(x))
        throw Error(ErrorCode::Singular, "zero has no inverse");
    return pow(x, order_ - 2);
}

FieldElement GaloisField::frobenius(const FieldElement& x, int t) const {
    const int mm = static_cast<int>(m_);
    const int k = ((t % mm) + mm) % mm;
    if (k == 0)
        return x;
    const auto& mat = frob_pow_[k];
    FieldElement z;
    for (unsigned r = 0; r < m_; ++r) {
        std::uint64_t acc = 0;
        for (unsigned c = 0; c < m_; ++c)
            acc = (acc + std::uint64_t{mat[r * m_ + c]} * x.c[c]) % p_;
        z.c[r] = static_cast<std::uint32_t>(acc);
    }
    return z;
}

std::string GaloisField::to_string(const FieldElement& x) const {
    std::ostringstream os;
    bool first = true;
    for (unsigned i = m_; i-- > 0;) {
        if (x.c[i] == 0)
            continue;
        if (!first)
            os << "+";
        first = false;
        if (i == 0 || x.c[i] != 1)
            os << x.c[i];
        if (i >= 1)
            os << "x";
        if (i >= 2)
            os << "^" << i;
    }
    if (first)
        os << "0";
    return os.str();
}

} // namespace bt1
