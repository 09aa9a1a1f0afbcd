#include "eigenscheme/eigenideal.hpp"

#include <algorithm>

#include "eigenscheme/linalg.hpp"

namespace eigenscheme {

int EigenBlocks::dimension() const {
    int d = 0;
    for (const auto& b : blocks) d += b.size * b.multiplicity;
    return d;
}

void EigenBlocks::validate() const {
    if (blocks.empty()) throw ValidationError("eigenvalue " + to_string(lambda) + " has no blocks");
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        if (blocks[k].size < 1 || blocks[k].multiplicity < 1)
            throw ValidationError("block sizes and multiplicities must be positive");
        if (k > 0 && blocks[k].size >= blocks[k - 1].size)
            throw ValidationError("block sizes must be strictly decreasing");
    }
}

int JordanSpec::dimension() const {
    int d = 0;
    for (const auto& e : eigenvalues) d += e.dimension();
    return d;
}

void JordanSpec::validate() const {
    if (eigenvalues.empty()) throw ValidationError("empty Jordan spec");
    for (std::size_t a = 0; a < eigenvalues.size(); ++a) {
        eigenvalues[a].validate();
        for (std::size_t b = 0; b < a; ++b)
            if (eigenvalues[a].lambda == eigenvalues[b].lambda)
                throw ValidationError("eigenvalue " + to_string(eigenvalues[a].lambda) + " listed twice");
    }
}

JordanSpec JordanSpec::canonical() const {
    JordanSpec c = *this;
    std::sort(c.eigenvalues.begin(), c.eigenvalues.end(),
              [](const EigenBlocks& a, const EigenBlocks& b) { return a.lambda > b.lambda; });
    return c;
}

Ideal eigenscheme_ideal(const QMatrix& A, RingPtr ring) {
    if (A.rows() != A.cols()) throw DimensionError("eigenscheme ideal of a non-square matrix");
    const auto r = static_cast<std::size_t>(A.rows());
    if (r == 0) throw DimensionError("eigenscheme ideal of an empty matrix");
    if (!ring) ring = Ring::make(r);
    if (ring->nvars() != r) throw DimensionError("ring size differs from the matrix size");

    std::vector<Polynomial> x;
    std::vector<Polynomial> Ax;
    for (std::size_t i = 0; i < r; ++i) x.push_back(Polynomial::variable(ring, i));
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Term> terms;
        for (std::size_t j = 0; j < r; ++j)
            if (!is_zero(A(i, j))) terms.push_back(Term{A(i, j), Monomial::variable(r, j)});
        Ax.emplace_back(ring, std::move(terms));
    }
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) gens.push_back(Ax[i] * x[j] - Ax[j] * x[i]);
    return Ideal(ring, std::move(gens));
}

QMatrix jordan_block(const Rational& lambda, int size) {
    if (size < 1) throw ValidationError("Jordan block size must be positive");
    QMatrix J = QMatrix::Zero(size, size);
    for (int i = 0; i < size; ++i) {
        J(i, i) = lambda;
        if (i + 1 < size) J(i, i + 1) = 1;
    }
    return J;
}

QMatrix jordan_matrix(const EigenBlocks& blocks) {
    blocks.validate();
    QMatrix J(0, 0);
    for (const auto& b : blocks.blocks)
        for (int c = 0; c < b.multiplicity; ++c) J = direct_sum(J, jordan_block(blocks.lambda, b.size));
    return J;
}

QMatrix jordan_matrix(const JordanSpec& spec) {
    spec.validate();
    QMatrix J(0, 0);
    for (const auto& e : spec.eigenvalues) J = direct_sum(J, jordan_matrix(e));
    return J;
}

QMatrix direct_sum(const QMatrix& A, const QMatrix& B) {
    QMatrix S = QMatrix::Zero(A.rows() + B.rows(), A.cols() + B.cols());
    S.topLeftCorner(A.rows(), A.cols()) = A;
    S.bottomRightCorner(B.rows(), B.cols()) = B;
    return S;
}

Ideal transport(const Ideal& ideal, const QMatrix& C) {
    const auto& ring = ideal.ring();
    const std::size_t n = ring->nvars();
    if (C.rows() != static_cast<Eigen::Index>(n) || C.cols() != static_cast<Eigen::Index>(n))
        throw DimensionError("transport matrix size differs from the variable count");
    if (rank(C) != static_cast<Eigen::Index>(n)) throw InvalidArgument("transport matrix is singular");
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Term> terms;
        for (std::size_t j = 0; j < n; ++j)
            if (!is_zero(C(i, j))) terms.push_back(Term{C(i, j), Monomial::variable(n, j)});
        images.emplace_back(ring, std::move(terms));
    }
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(substitute(g, images));
    return Ideal(ring, std::move(gens));
}

}  // namespace eigenscheme
