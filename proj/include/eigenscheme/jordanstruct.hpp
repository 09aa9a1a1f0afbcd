#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eigenscheme/eigenideal.hpp"

namespace eigenscheme {

/// (i1, i2, i3): block size class, copy, position in the block.
struct LambdaIndex {
    int i1 = 0;
    int i2 = 0;
    int i3 = 0;
    friend bool operator==(const LambdaIndex&, const LambdaIndex&) = default;
};

/// (1,1,1) is the largest element; a > b iff (a1,a2,a3) is lexicographically
/// smaller than (b1,b2,b3).
bool lambda_greater(const LambdaIndex& a, const LambdaIndex& b);

/// The index set of a single-eigenvalue Jordan matrix. Flat variable k
/// (0-based) is the k-th largest element, so x1 = x(1,1,1).
class LambdaSet {
public:
    explicit LambdaSet(const EigenBlocks& blocks);

    std::size_t size() const noexcept { return elements_.size(); }
    int ell() const noexcept { return static_cast<int>(r_.size()); }
    /// r_{i1}, k_{i1} with 1-based i1.
    int r(int i1) const { return r_.at(i1 - 1); }
    int k(int i1) const { return k_.at(i1 - 1); }

    const LambdaIndex& at(std::size_t flat) const { return elements_.at(flat); }
    const std::vector<LambdaIndex>& elements() const noexcept { return elements_; }
    bool contains(const LambdaIndex& i) const;
    std::size_t flat(const LambdaIndex& i) const;

    std::optional<LambdaIndex> plus(const LambdaIndex& i) const;
    std::optional<LambdaIndex> minus(const LambdaIndex& i) const;

    /// "x(i1,i2,i3)"
    static std::string name(const LambdaIndex& i);

private:
    std::vector<int> r_;
    std::vector<int> k_;
    std::vector<LambdaIndex> elements_;
};

enum class GammaClass { Gamma1, Gamma2, Gamma3, Gamma4, Zero };

std::string to_string(GammaClass c);

struct GammaPair {
    LambdaIndex i;
    LambdaIndex j;
    GammaClass cls;
    Polynomial minor;
};

/// Class of (i, j) and the (i, j)-minor of (J x | x). Requires i > j.
GammaPair gamma_classify(const LambdaSet& set, const RingPtr& ring, const LambdaIndex& i, const LambdaIndex& j);

/// Q[x1..xn] for the flat Lambda variables, grevlex.
RingPtr lambda_ring(const EigenBlocks& blocks);

/// H1 u H2 u H3 u H4; empty when r1 = 1.
std::vector<Polynomial> basis_H(const EigenBlocks& blocks);

/// G1 u G2, sorted canonically and flagged reduced (no reduction is run).
GroebnerBasis basis_G(const EigenBlocks& blocks);

/// Primary component of the decomposition with its closed-form data.
struct ComponentReport {
    Rational lambda;
    int j = 0;
    Ideal generators;
    Ideal radical;
    int dimension = 0;
    int degree = 0;
    /// H(t) = hilbert_r * C(t + hilbert_k - 1, t)
    int hilbert_r = 0;
    int hilbert_k = 0;
};

/// Lambda_{j,1} u Lambda_{j,2} and Theta_j, 1 <= j <= ell.
std::vector<LambdaIndex> lambda_j_union(const LambdaSet& set, int j);
std::vector<LambdaIndex> theta(const LambdaSet& set, int j);

std::vector<ComponentReport> components_single(const EigenBlocks& blocks);

/// G u G'_j, reduced and sorted.
GroebnerBasis component_gb(const EigenBlocks& blocks, int j);

struct CellularWitness {
    std::size_t variable = 0;
    bool nonzerodivisor = false;
    /// smallest N with x^N in q (0 for nonzerodivisors)
    int exponent = 0;
    /// exponent suggested by the radical argument: 1 for generators, 2 when
    /// 2 i3 >= r + 2, else floor((r - 2 i3 + 1) / (i3 - 1)); 0 if none applies
    int hint_exponent = 0;
};

/// Theta_j variables are marked nonzerodivisors, all others get the least
/// nilpotency exponent found by membership tests up to 2 r1.
std::vector<CellularWitness> cellular_witnesses(const EigenBlocks& blocks, int j);

/// Coefficient matrix of A[a,:]x y_b - B[b,:]y x_a in the basis x_i y_j, rows
/// and columns in row-major (a, b) order.
QMatrix phi_matrix(const QMatrix& A, const QMatrix& B);
bool splits(const QMatrix& A, const QMatrix& B);

/// Variables of eigenvalue i occupy a contiguous block in spec order.
std::vector<ComponentReport> decompose_general(const JordanSpec& spec);

/// Components of I_A for a matrix with rational spectrum: decompose_general
/// of the oracle's Jordan type, moved to A's coordinates with the inverse of
/// the oracle's Jordan basis.
std::vector<ComponentReport> decompose_matrix(const QMatrix& A);

/// Intersection of the components equals `ideal`.
bool decomposition_holds(const std::vector<ComponentReport>& components, const Ideal& ideal);

/// I_A compared with the intersection of the eigenspace ideals.
bool diagonalizable_via_ideal(const QMatrix& A);

}  // namespace eigenscheme
