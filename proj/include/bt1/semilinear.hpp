#pragma once

// Dense linear algebra over GF(p^m) and sigma-semilinear maps. This is the
// independent check of the BT1 axioms on explicit F/V matrices.

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bt1/galois.hpp"

namespace bt1 {

using Vector = std::vector<FieldElement>;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n, const GaloisField& F);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    FieldElement& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const FieldElement& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Vector column(std::size_t c) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElement> a_;
};

Matrix multiply(const GaloisField& F, const Matrix& A, const Matrix& B);
Vector apply(const GaloisField& F, const Matrix& A, const Vector& x);
/// Entry-wise sigma^t.
Matrix frobenius(const GaloisField& F, const Matrix& A, int t);
Vector frobenius(const GaloisField& F, const Vector& x, int t);
bool is_zero(const GaloisField& F, const Matrix& A);

struct Echelon {
    Matrix rref;
    std::vector<std::size_t> pivots;
};

Echelon row_reduce(const GaloisField& F, Matrix A);
std::size_t rank(const GaloisField& F, const Matrix& A);
/// Basis of {x : A x = 0}, one vector per free column.
std::vector<Vector> null_space(const GaloisField& F, const Matrix& A);
/// Throws Singular.
Matrix inverse(const GaloisField& F, const Matrix& A);

/// Subspace of GF(p^m)^n held as the nonzero rows of a reduced echelon form.
class Subspace {
public:
    static Subspace span(const GaloisField& F, std::size_t ambient, const std::vector<Vector>& vectors);

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<Vector>& basis() const noexcept { return basis_; }

    bool contains(const GaloisField& F, const Vector& x) const;
    bool contains(const GaloisField& F, const Subspace& other) const;
    /// Containment plus equal dimension.
    bool equals(const GaloisField& F, const Subspace& other) const;

    Subspace sum(const GaloisField& F, const Subspace& other) const;
    std::size_t intersection_dim(const GaloisField& F, const Subspace& other) const;

private:
    std::size_t ambient_ = 0;
    std::vector<Vector> basis_;
};

/// x -> matrix * sigma^twist(x), coordinate-wise. twist = +1 for F, -1 for V.
struct SemilinearMap {
    Matrix matrix;
    int twist = 1;

    std::size_t dim() const noexcept { return matrix.rows(); }
    Vector operator()(const GaloisField& F, const Vector& x) const;
};

struct KernelImage {
    std::size_t rank = 0;
    Subspace kernel;
    Subspace image;
};

/// Throws ShapeMismatch for non-square matrices.
KernelImage kernel_image(const SemilinearMap& A, const GaloisField& F);

struct AxiomReport {
    bool ker_f_eq_im_v = false;
    bool ker_v_eq_im_f = false;
    bool fv_zero = false;
    bool vf_zero = false;
    std::size_t dim = 0;
    std::size_t rank_f = 0;
    std::size_t rank_v = 0;

    bool all_pass() const noexcept { return ker_f_eq_im_v && ker_v_eq_im_f && fv_zero && vf_zero; }
    nlohmann::json to_json() const;
    friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

AxiomReport verify_bt1_axioms(const SemilinearMap& Fm, const SemilinearMap& Vm, const GaloisField& F);

/// Change of basis x = P y: F' = P^-1 F sigma(P), V' = P^-1 V sigma^-1(P). Throws Singular.
std::pair<SemilinearMap, SemilinearMap> base_change(const SemilinearMap& Fm, const SemilinearMap& Vm,
                                                    const Matrix& P, const GaloisField& F);

/// dim(Ker Fm intersect Ker Vm).
std::size_t kernel_intersection_dim(const SemilinearMap& Fm, const SemilinearMap& Vm, const GaloisField& F);

/// Rank of the k-fold composite A o ... o A.
std::size_t iterated_rank(const SemilinearMap& A, std::size_t k, const GaloisField& F);

Matrix random_matrix(const GaloisField& F, std::size_t n, std::mt19937_64& rng);
Matrix random_invertible(const GaloisField& F, std::size_t n, std::mt19937_64& rng);

} // namespace bt1
