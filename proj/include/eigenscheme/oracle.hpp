#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "eigenscheme/eigenideal.hpp"
#include "eigenscheme/upoly.hpp"

namespace eigenscheme {

struct Eigenvalue {
    Rational lambda;
    int multiplicity = 0;
    friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
};

/// Coefficients of det(tI - A), ascending in t.
std::vector<Rational> characteristic_polynomial(const QMatrix& A);

/// Rational roots with multiplicity, largest first. Throws UnsupportedField
/// when they do not account for the full degree.
std::vector<Eigenvalue> rational_roots(const std::vector<Rational>& poly);
std::vector<Eigenvalue> rational_spectrum(const QMatrix& A);

/// rank((A - lambda I)^k) for k = 0..multiplicity, per eigenvalue.
struct RankProfile {
    Rational lambda;
    std::vector<Eigen::Index> ranks;
};
std::vector<RankProfile> rank_profiles(const QMatrix& A);

/// Eigenvalues largest first.
JordanSpec jordan_type_oracle(const QMatrix& A);

/// A = P J P^-1 with J = jordan_matrix(spec).
struct JordanBasis {
    JordanSpec spec;
    QMatrix P;
};
JordanBasis jordan_basis(const QMatrix& A);

/// Kernel bases of A - lambda I (resp. (A - lambda I)^r), one column per vector.
std::vector<std::pair<Rational, QMatrix>> eigenspaces(const QMatrix& A);
std::vector<std::pair<Rational, QMatrix>> generalized_eigenspaces(const QMatrix& A);

bool diagonalizable_oracle(const QMatrix& A);

/// Res_t(p, dp/dt) / lc for p(s, t) = det(tI - (B + sC)), as a polynomial in s.
UPoly pencil_discriminant(const QMatrix& B, const QMatrix& C);

/// Degree in s of the pencil discriminant; DegenerateSample if it vanishes.
int discriminant_degree(const QMatrix& B, const QMatrix& C);

/// r x r integer matrix with entries uniform in [-9, 9]. Entries are drawn
/// row-major from std::mt19937_64 by rejection sampling: a raw 64-bit draw v
/// is rejected when v >= 19 * floor(2^64 / 19), else the entry is v % 19 - 9.
QMatrix random_entry_matrix(int r, std::mt19937_64& rng);

/// Seeds std::mt19937_64 with `seed`, draws B then C, returns their pencil
/// discriminant degree. A degenerate draw raises DegenerateSample; callers
/// reseed explicitly.
int discriminant_degree_experiment(int r, std::uint64_t seed);

}  // namespace eigenscheme
