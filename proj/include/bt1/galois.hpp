#pragma once

// Exact arithmetic in GF(p^m) for small m, with the absolute Frobenius
// sigma: x -> x^p and its inverse.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace bt1 {

inline constexpr unsigned kMaxExtensionDegree = 8;

/// Polynomial-basis coordinates c_0 + c_1 x + ... + c_{m-1} x^{m-1}.
struct FieldElement {
    std::array<std::uint32_t, kMaxExtensionDegree> c{};
    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

bool is_prime(std::uint64_t n);

class GaloisField {
public:
    /// The lexicographically first monic irreducible of degree m over GF(p)
    /// (coefficients compared from x^{m-1} down to x^0). Throws NotPrime,
    /// DegreeTooLarge (m outside [1,8] or p^m too big for 64-bit indexing).
    static GaloisField make(std::uint64_t p, unsigned m);

    std::uint64_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return m_; }
    std::uint64_t order() const noexcept { return order_; }
    /// Monic modulus, m+1 coefficients from x^0 up to x^m.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    FieldElement zero() const { return {}; }
    FieldElement one() const;
    FieldElement from_uint(std::uint64_t n) const;
    /// Bijection [0, p^m) -> field, base-p digits as coordinates.
    FieldElement from_index(std::uint64_t idx) const;
    std::uint64_t index(const FieldElement& x) const;

    bool is_zero(const FieldElement& x) const { return x == FieldElement{}; }
    FieldElement add(const FieldElement& x, const FieldElement& y) const;
    FieldElement sub(const FieldElement& x, const FieldElement& y) const;
    FieldElement neg(const FieldElement& x) const;
    FieldElement mul(const FieldElement& x, const FieldElement& y) const;
    FieldElement pow(FieldElement x, std::uint64_t e) const;
    /// Throws Singular on zero.
    FieldElement inv(const FieldElement& x) const;
    /// sigma^t(x) = x^{p^t}; negative t applies the inverse Frobenius.
    FieldElement frobenius(const FieldElement& x, int t = 1) const;

    std::string to_string(const FieldElement& x) const;

    friend bool operator==(const GaloisField& a, const GaloisField& b) {
        return a.p_ == b.p_ && a.modulus_ == b.modulus_;
    }

private:
    GaloisField() = default;

    std::uint64_t p_ = 2;
    unsigned m_ = 1;
    std::uint64_t order_ = 2;
    std::vector<std::uint32_t> modulus_;
    // frob_pow_[k] is the GF(p)-matrix of sigma^k, row-major m x m.
    std::vector<std::vector<std::uint32_t>> frob_pow_;
};

/// Rabin irreducibility test for a monic polynomial (coefficients low to high).
bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint64_t p);

} // namespace bt1
