#pragma once

#include <random>
#include <vector>

#include "eigenscheme/hilbert.hpp"
#include "eigenscheme/linalg.hpp"
#include "eigenscheme/oracle.hpp"

namespace testsupport {

using namespace eigenscheme;

inline Ideal ideal_of(const RingPtr& R, std::initializer_list<const char*> gens) {
    std::vector<Polynomial> g;
    for (const char* s : gens) g.push_back(parse_polynomial(s, R));
    return Ideal(R, std::move(g));
}

inline QMatrix matrix(int rows, int cols, std::initializer_list<long> entries) {
    QMatrix M(rows, cols);
    int k = 0;
    for (long v : entries) {
        M(k / cols, k % cols) = v;
        ++k;
    }
    return M;
}

// Strictly decreasing sizes from {1..max_r}, multiplicities 1..max_k, at
// most max_ell sizes, total at most max_total.
inline std::vector<std::vector<BlockRun>> block_lattice(int max_ell, int max_k, int max_r, int max_total) {
    std::vector<std::vector<BlockRun>> out;
    std::vector<BlockRun> cur;
    auto rec = [&](auto&& self, int below, int total) -> void {
        if (!cur.empty()) out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_ell) return;
        for (int r = std::min(below - 1, max_r); r >= 1; --r)
            for (int k = 1; k <= max_k; ++k) {
                if (total + r * k > max_total) continue;
                cur.push_back(BlockRun{r, k});
                self(self, r, total + r * k);
                cur.pop_back();
            }
    };
    rec(rec, max_r + 1, 0);
    return out;
}

inline int block_total(const std::vector<BlockRun>& b) {
    int t = 0;
    for (const auto& x : b) t += x.size * x.multiplicity;
    return t;
}

// Single-eigenvalue lattice {ell <= 3, k_j <= 3, r_j <= 5, size <= 10}.
inline std::vector<EigenBlocks> single_lattice() {
    std::vector<EigenBlocks> out;
    for (auto& b : block_lattice(3, 3, 5, 10)) out.push_back(EigenBlocks{0, b});
    return out;
}

// Two or three eigenvalues from (0, 1, -1), total size <= 9. Block lists are
// assigned in non-increasing lattice order, which skips specs that differ
// only by which eigenvalue carries which block list.
inline std::vector<JordanSpec> multi_lattice(int max_total = 9) {
    const auto blocks = block_lattice(3, 3, 5, max_total);
    const Rational lambdas[] = {0, 1, -1};
    std::vector<JordanSpec> out;
    const std::size_t n = blocks.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            const int ab = block_total(blocks[a]) + block_total(blocks[b]);
            if (ab > max_total) continue;
            out.push_back(JordanSpec{{EigenBlocks{lambdas[0], blocks[a]}, EigenBlocks{lambdas[1], blocks[b]}}});
            for (std::size_t c = b; c < n; ++c) {
                if (ab + block_total(blocks[c]) > max_total) continue;
                out.push_back(JordanSpec{{EigenBlocks{lambdas[0], blocks[a]}, EigenBlocks{lambdas[1], blocks[b]},
                                          EigenBlocks{lambdas[2], blocks[c]}}});
            }
        }
    return out;
}

inline JordanSpec random_spec(std::mt19937_64& rng, int max_total) {
    std::uniform_int_distribution<int> count(1, 3);
    std::uniform_int_distribution<int> lam(-3, 3);
    for (;;) {
        JordanSpec spec;
        const int n = count(rng);
        int budget = max_total;
        for (int e = 0; e < n && budget > 0; ++e) {
            Rational lambda;
            bool fresh = false;
            while (!fresh) {
                lambda = lam(rng);
                fresh = true;
                for (const auto& x : spec.eigenvalues) fresh = fresh && x.lambda != lambda;
            }
            EigenBlocks eb{lambda, {}};
            int below = std::min(5, budget) + 1;
            std::uniform_int_distribution<int> nsizes(1, 3);
            for (int s = nsizes(rng); s > 0 && below > 1 && budget > 0; --s) {
                std::uniform_int_distribution<int> rd(1, std::min(below - 1, budget));
                const int r = rd(rng);
                std::uniform_int_distribution<int> kd(1, std::max(1, std::min(3, budget / r)));
                const int k = kd(rng);
                eb.blocks.push_back(BlockRun{r, k});
                budget -= r * k;
                below = r;
            }
            if (!eb.blocks.empty()) spec.eigenvalues.push_back(std::move(eb));
        }
        if (!spec.eigenvalues.empty() && spec.dimension() <= max_total) return spec;
    }
}

// Product of elementary row operations with multipliers in [-2, 2] and a
// random row swap; determinant +-1 keeps coefficient growth small.
inline QMatrix random_unimodular(std::mt19937_64& rng, int n) {
    QMatrix C = QMatrix::Identity(n, n);
    if (n < 2) return C;
    std::uniform_int_distribution<int> idx(0, n - 1);
    std::uniform_int_distribution<int> mult(-2, 2);
    for (int step = 0; step < 2 * n; ++step) {
        const int i = idx(rng);
        const int j = idx(rng);
        if (i == j) continue;
        C.row(i) += Rational(mult(rng)) * C.row(j);
    }
    const int a = idx(rng);
    const int b = idx(rng);
    if (a != b) C.row(a).swap(C.row(b));
    return C;
}

// The (a, b) minor of (A x | x) expanded directly from the rows of A.
inline Polynomial direct_minor(const QMatrix& A, const RingPtr& R, std::size_t a, std::size_t b) {
    const std::size_t n = R->nvars();
    Polynomial Aa(R), Ab(R);
    for (std::size_t k = 0; k < n; ++k) {
        Aa = Aa + Polynomial::variable(R, k).scaled(A(a, k));
        Ab = Ab + Polynomial::variable(R, k).scaled(A(b, k));
    }
    return Aa * Polynomial::variable(R, b) - Ab * Polynomial::variable(R, a);
}

}  // namespace testsupport
