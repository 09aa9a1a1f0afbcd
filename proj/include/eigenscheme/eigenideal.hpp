#pragma once

#include <vector>

#include "eigenscheme/groebner.hpp"
#include "eigenscheme/rational.hpp"

namespace eigenscheme {

/// k copies of a Jordan block of size r.
struct BlockRun {
    int size = 0;
    int multiplicity = 0;
    friend bool operator==(const BlockRun&, const BlockRun&) = default;
};

/// Jordan data of one eigenvalue; sizes strictly decreasing.
struct EigenBlocks {
    Rational lambda;
    std::vector<BlockRun> blocks;

    /// xi = sum of k_j * r_j
    int dimension() const;
    int ell() const { return static_cast<int>(blocks.size()); }
    void validate() const;
    friend bool operator==(const EigenBlocks&, const EigenBlocks&) = default;
};

struct JordanSpec {
    std::vector<EigenBlocks> eigenvalues;

    int dimension() const;
    void validate() const;
    /// Eigenvalues sorted in descending order, for comparisons that ignore
    /// the listing order.
    JordanSpec canonical() const;
    friend bool operator==(const JordanSpec&, const JordanSpec&) = default;
};

/// Generators (Ax)_i x_j - (Ax)_j x_i, i < j, in lexicographic (i, j)
/// order; zero minors are dropped. Uses Q[x1..xr] unless a ring is given.
Ideal eigenscheme_ideal(const QMatrix& A, RingPtr ring = nullptr);

QMatrix jordan_block(const Rational& lambda, int size);
QMatrix jordan_matrix(const EigenBlocks& blocks);
QMatrix jordan_matrix(const JordanSpec& spec);

QMatrix direct_sum(const QMatrix& A, const QMatrix& B);

/// Substitutes x -> C x, i.e. x_i -> sum_j C(i, j) x_j. With this convention
/// transport(I_B, C) = I_A whenever A = C^-1 B C, and
/// transport(transport(I, C), D) = transport(I, C * D).
Ideal transport(const Ideal& ideal, const QMatrix& C);

}  // namespace eigenscheme
