#include "bt1/semilinear.hpp"

#include "bt1/error.hpp"

namespace bt1 {

Matrix Matrix::identity(std::size_t n, const GaloisField& F) {
    Matrix I(n, n);
    for (std::size_t i = 0; i < n; ++i)
        I(i, i) = F.one();
    return I;
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

Matrix multiply(const GaloisField& F, const Matrix& A, const Matrix& B) {
    if (A.cols() != B.rows())
        throw Error(ErrorCode::ShapeMismatch, "matrix product dimensions disagree");
    Matrix C(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < A.cols(); ++k) {
            if (F.is_zero(A(i, k)))
                continue;
            for (std::size_t j = 0; j < B.cols(); ++j)
                C(i, j) = F.add(C(i, j), F.mul(A(i, k), B(k, j)));
        }
    return C;
}

Vector apply(const GaloisField& F, const Matrix& A, const Vector& x) {
    if (A.cols() != x.size())
        throw Error(ErrorCode::ShapeMismatch, "matrix-vector dimensions disagree");
    Vector y(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < A.cols(); ++k)
            y[i] = F.add(y[i], F.mul(A(i, k), x[k]));
    return y;
}

Matrix frobenius(const GaloisField& F, const Matrix& A, int t) {
    Matrix B(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            B(i, j) = F.frobenius(A(i, j), t);
    return B;
}

Vector frobenius(const GaloisField& F, const Vector& x, int t) {
    Vector y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        y[i] = F.frobenius(x[i], t);
    return y;
}

bool is_zero(const GaloisField& F, const Matrix& A) {
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (!F.is_zero(A(i, j)))
                return false;
    return true;
}

Echelon row_reduce(const GaloisField& F, Matrix A) {
    Echelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < A.cols() && row < A.rows(); ++col) {
        std::size_t piv = row;
        while (piv < A.rows() && F.is_zero(A(piv, col)))
            ++piv;
        if (piv == A.rows())
            continue;
        if (piv != row)
            for (std::size_t j = 0; j < A.cols(); ++j)
                std::swap(A(piv, j), A(row, j));
        const FieldElement s = F.inv(A(row, col));
        for (std::size_t j = col; j < A.cols(); ++j)
            A(row, j) = F.mul(A(row, j), s);
        for (std::size_t i = 0; i < A.rows(); ++i) {
            if (i == row || F.is_zero(A(i, col)))
                continue;
            const FieldElement factor = A(i, col);
            for (std::size_t j = col; j < A.cols(); ++j)
                A(i, j) = F.sub(A(i, j), F.mul(factor, A(row, j)));
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.rref = std::move(A);
    return out;
}

std::size_t rank(const GaloisField& F, const Matrix& A) { return row_reduce(F, A).pivots.size(); }

std::vector<Vector> null_space(const GaloisField& F, const Matrix& A) {
    const Echelon e = row_reduce(F, A);
    std::vector<bool> is_pivot(A.cols(), false);
    for (std::size_t c : e.pivots)
        is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < A.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector x(A.cols());
        x[free] = F.one();
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            x[e.pivots[r]] = F.neg(e.rref(r, free));
        basis.push_back(std::move(x));
    }
    return basis;
}

Matrix inverse(const GaloisField& F, const Matrix& A) {
    if (A.rows() != A.cols())
        throw Error(ErrorCode::ShapeMismatch, "only square matrices are invertible");
    const std::size_t n = A.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = A(i, j);
        aug(i, n + i) = F.one();
    }
    const Echelon e = row_reduce(F, aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
        throw Error(ErrorCode::Singular, "matrix is not invertible");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = e.rref(i, n + j);
    return inv;
}

Subspace Subspace::span(const GaloisField& F, std::size_t ambient, const std::vector<Vector>& vectors) {
    Matrix M(vectors.size(), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient)
            throw Error(ErrorCode::ShapeMismatch, "vector length differs from ambient dimension");
        for (std::size_t j = 0; j < ambient; ++j)
            M(i, j) = vectors[i][j];
    }
    const Echelon e = row_reduce(F, M);
    Subspace S;
    S.ambient_ = ambient;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        Vector row(ambient);
        for (std::size_t j = 0; j < ambient; ++j)
            row[j] = e.rref(r, j);
        S.basis_.push_back(std::move(row));
    }
    return S;
}

bool Subspace::contains(const GaloisField& F, const Vector& x) const {
    std::vector<Vector> all = basis_;
    all.push_back(x);
    return span(F, ambient_, all).dim() == dim();
}

bool Subspace::contains(const GaloisField& F, const Subspace& other) const {
    return sum(F, other).dim() == dim();
}

bool Subspace::equals(const GaloisField& F, const Subspace& other) const {
    return ambient_ == other.ambient_ && dim() == other.dim() && contains(F, other);
}

Subspace Subspace::sum(const GaloisField& F, const Subspace& other) const {
    if (ambient_ != other.ambient_)
        throw Error(ErrorCode::ShapeMismatch, "subspaces live in different ambient spaces");
    std::vector<Vector> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(F, ambient_, all);
}

std::size_t Subspace::intersection_dim(const GaloisField& F, const Subspace& other) const {
    return dim() + other.dim() - sum(F, other).dim();
}

Vector SemilinearMap::operator()(const GaloisField& F, const Vector& x) const {
    return apply(F, matrix, frobenius(F, x, twist));
}

KernelImage kernel_image(const SemilinearMap& A, const GaloisField& F) {
    const std::size_t n = A.matrix.rows();
    if (A.matrix.cols() != n)
        throw Error(ErrorCode::ShapeMismatch, "semilinear maps must be square");
    // sigma^twist is a bijection, so image = column space and kernel = sigma^-twist(null space).
    std::vector<Vector> ker;
    for (const Vector& v : null_space(F, A.matrix))
        ker.push_back(frobenius(F, v, -A.twist));
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < n; ++c)
        cols.push_back(A.matrix.column(c));
    KernelImage out{0, Subspace::span(F, n, ker), Subspace::span(F, n, cols)};
    out.rank = out.image.dim();
    return out;
}

nlohmann::json AxiomReport::to_json() const {
    return {{"kerF_eq_imV", ker_f_eq_im_v}, {"kerV_eq_imF", ker_v_eq_im_f}, {"FV_zero", fv_zero},
            {"VF_zero", vf_zero},           {"dim", dim},                   {"rank_F", rank_f},
            {"rank_V", rank_v},             {"bt1", all_pass()}};
}

AxiomReport verify_bt1_axioms(const SemilinearMap& Fm, const SemilinearMap& Vm, const GaloisField& F) {
    if (Fm.matrix.rows() != Vm.matrix.rows() || Fm.matrix.cols() != Vm.matrix.cols())
        throw Error(ErrorCode::ShapeMismatch, "F and V must act on the same space");
    const KernelImage kf = kernel_image(Fm, F);
    const KernelImage kv = kernel_image(Vm, F);
    AxiomReport r;
    r.dim = Fm.dim();
    r.rank_f = kf.rank;
    r.rank_v = kv.rank;
    r.ker_f_eq_im_v = kf.kernel.equals(F, kv.image);
    r.ker_v_eq_im_f = kv.kernel.equals(F, kf.image);
    // F(V(x)) = A_F sigma^{tF}(A_V) sigma^{tF+tV}(x); zero iff the matrix product vanishes.
    r.fv_zero = is_zero(F, multiply(F, Fm.matrix, frobenius(F, Vm.matrix, Fm.twist)));
    r.vf_zero = is_zero(F, multiply(F, Vm.matrix, frobenius(F, Fm.matrix, Vm.twist)));
    return r;
}

std::pair<SemilinearMap, SemilinearMap> base_change(const SemilinearMap& Fm, const SemilinearMap& Vm,
                                                    const Matrix& P, const GaloisField& F) {
    const Matrix Pinv = inverse(F, P);
    SemilinearMap f2{multiply(F, Pinv, multiply(F, Fm.matrix, frobenius(F, P, Fm.twist))), Fm.twist};
    SemilinearMap v2{multiply(F, Pinv, multiply(F, Vm.matrix, frobenius(F, P, Vm.twist))), Vm.twist};
    return {std::move(f2), std::move(v2)};
}

std::size_t kernel_intersection_dim(const SemilinearMap& Fm, const SemilinearMap& Vm, const GaloisField& F) {
    return kernel_image(Fm, F).kernel.intersection_dim(F, kernel_image(Vm, F).kernel);
}

std::size_t iterated_rank(const SemilinearMap& A, std::size_t k, const GaloisField& F) {
    const std::size_t n = A.matrix.rows();
    // A^k(x) = M sigma^t(M) ... sigma^{(k-1)t}(M) sigma^{kt}(x).
    Matrix prod = Matrix::identity(n, F);
    for (std::size_t i = 0; i < k; ++i)
        prod = multiply(F, prod, frobenius(F, A.matrix, static_cast<int>(i) * A.twist));
    return rank(F, prod);
}

Matrix random_matrix(const GaloisField& F, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, F.order() - 1);
    Matrix M(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            M(i, j) = F.from_index(dist(rng));
    return M;
}

Matrix random_invertible(const GaloisField& F, std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        Matrix M = random_matrix(F, n, rng);
        if (rank(F, M) == n)
            return M;
    }
}

} // namespace bt1
