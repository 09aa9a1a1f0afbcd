#include "eigenscheme/oracle.hpp"

#include <algorithm>
#include <limits>

#include "eigenscheme/linalg.hpp"

namespace eigenscheme {

namespace {

constexpr unsigned long kTrialDivisionLimit = 10'000'000;

std::vector<Integer> divisors(Integer n) {
    n = abs(n);
    std::vector<Integer> small;
    std::vector<Integer> large;
    unsigned long steps = 0;
    for (Integer d = 1; d * d <= n; ++d) {
        if (++steps > kTrialDivisionLimit)
            throw GuardExceeded("coefficient too large for the rational-root search");
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Synthetic division by (t - root); the remainder must be zero.
std::vector<Rational> deflate(const std::vector<Rational>& p, const Rational& root) {
    const std::size_t n = p.size() - 1;
    std::vector<Rational> q(n);
    Rational carry = 0;
    for (std::size_t k = n; k-- > 0;) {
        carry = carry * root + p[k + 1];
        q[k] = carry;
    }
    return q;
}

Rational evaluate(const std::vector<Rational>& p, const Rational& t) {
    Rational v = 0;
    for (std::size_t k = p.size(); k-- > 0;) v = v * t + p[k];
    return v;
}

std::string poly_string(const std::vector<Rational>& p) {
    return UPoly(p).to_string('t');
}

QMatrix shifted(const QMatrix& A, const Rational& lambda) {
    QMatrix N = A;
    for (Eigen::Index i = 0; i < A.rows(); ++i) N(i, i) -= lambda;
    return N;
}

void require_square(const QMatrix& A) {
    if (A.rows() != A.cols()) throw DimensionError("matrix is not square");
}

}  // namespace

std::vector<Rational> characteristic_polynomial(const QMatrix& A) {
    require_square(A);
    return char_poly(A);
}

std::vector<Eigenvalue> rational_roots(const std::vector<Rational>& poly) {
    std::vector<Rational> p = poly;
    while (!p.empty() && is_zero(p.back())) p.pop_back();
    if (p.empty()) throw InvalidArgument("roots of the zero polynomial");
    std::vector<Eigenvalue> roots;
    auto add_root = [&](const Rational& r) {
        for (auto& e : roots)
            if (e.lambda == r) {
                ++e.multiplicity;
                return;
            }
        roots.push_back(Eigenvalue{r, 1});
    };
    while (p.size() > 1 && is_zero(p.front())) {
        p.erase(p.begin());
        add_root(0);
    }
    if (p.size() > 1) {
        Integer den = 1;
        for (const auto& c : p) den = lcm(den, Integer(c.get_den()));
        std::vector<Integer> ip;
        for (const auto& c : p) ip.push_back(Integer(c * den));
        const auto nums = divisors(ip.front());
        const auto dens = divisors(ip.back());
        std::vector<Rational> candidates;
        for (const auto& a : nums)
            for (const auto& b : dens) {
                Rational c(a, b);
                c.canonicalize();
                candidates.push_back(c);
                candidates.push_back(-c);
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto& c : candidates) {
            while (p.size() > 1 && is_zero(evaluate(p, c))) {
                p = deflate(p, c);
                add_root(c);
            }
        }
    }
    if (p.size() > 1) throw UnsupportedField("characteristic polynomial has the factor " + poly_string(p) +
                                             " without rational roots");
    std::sort(roots.begin(), roots.end(), [](const Eigenvalue& a, const Eigenvalue& b) { return a.lambda > b.lambda; });
    return roots;
}

std::vector<Eigenvalue> rational_spectrum(const QMatrix& A) { return rational_roots(characteristic_polynomial(A)); }

std::vector<RankProfile> rank_profiles(const QMatrix& A) {
    std::vector<RankProfile> out;
    for (const auto& e : rational_spectrum(A)) {
        RankProfile prof{e.lambda, {}};
        const QMatrix N = shifted(A, e.lambda);
        QMatrix power = QMatrix::Identity(A.rows(), A.cols());
        for (int k = 0; k <= e.multiplicity; ++k) {
            prof.ranks.push_back(rank(power));
            power = power * N;
        }
        out.push_back(std::move(prof));
    }
    return out;
}

JordanSpec jordan_type_oracle(const QMatrix& A) {
    JordanSpec spec;
    for (const auto& prof : rank_profiles(A)) {
        const auto& rk = prof.ranks;
        const int m = static_cast<int>(rk.size()) - 1;
        // at_least[s] = number of blocks of size >= s
        std::vector<Eigen::Index> at_least(m + 2, 0);
        for (int s = 1; s <= m; ++s) at_least[s] = rk[s - 1] - rk[s];
        EigenBlocks eb{prof.lambda, {}};
        for (int s = m; s >= 1; --s) {
            const auto exact = at_least[s] - at_least[s + 1];
            if (exact > 0) eb.blocks.push_back(BlockRun{s, static_cast<int>(exact)});
        }
        spec.eigenvalues.push_back(std::move(eb));
    }
    spec.validate();
    return spec;
}

JordanBasis jordan_basis(const QMatrix& A) {
    JordanBasis out{jordan_type_oracle(A), QMatrix(A.rows(), 0)};
    std::vector<QMatrix> columns;
    for (const auto& eb : out.spec.eigenvalues) {
        const QMatrix N = shifted(A, eb.lambda);
        const int top = eb.blocks.front().size;
        std::vector<QMatrix> powers{QMatrix::Identity(A.rows(), A.cols())};
        for (int k = 1; k <= top; ++k) powers.push_back(powers.back() * N);

        struct Chain {
            QVector v;
            int length;
        };
        std::vector<Chain> chains;
        for (const auto& run : eb.blocks) {
            const int s = run.size;
            const QMatrix ks = kernel(powers[s]);
            QMatrix span = kernel(powers[s - 1]);
            auto append = [&](const QVector& w) {
                QMatrix next(span.rows(), span.cols() + 1);
                next << span, w;
                span = std::move(next);
            };
            for (const auto& c : chains) append(powers[c.length - s] * c.v);
            int chosen = 0;
            for (Eigen::Index col = 0; col < ks.cols() && chosen < run.multiplicity; ++col) {
                const Eigen::Index before = rank(span);
                QMatrix trial(span.rows(), span.cols() + 1);
                trial << span, ks.col(col);
                if (rank(trial) == before) continue;
                span = std::move(trial);
                chains.push_back(Chain{ks.col(col), s});
                ++chosen;
            }
            if (chosen != run.multiplicity) throw InconsistencyError("Jordan chain construction failed");
        }
        for (const auto& c : chains) {
            QMatrix block(A.rows(), c.length);
            for (int k = 0; k < c.length; ++k) block.col(k) = powers[c.length - 1 - k] * c.v;
            columns.push_back(std::move(block));
        }
    }
    for (const auto& b : columns) {
        QMatrix next(A.rows(), out.P.cols() + b.cols());
        next << out.P, b;
        out.P = std::move(next);
    }
    return out;
}

std::vector<std::pair<Rational, QMatrix>> eigenspaces(const QMatrix& A) {
    std::vector<std::pair<Rational, QMatrix>> out;
    for (const auto& e : rational_spectrum(A)) out.emplace_back(e.lambda, kernel(shifted(A, e.lambda)));
    return out;
}

std::vector<std::pair<Rational, QMatrix>> generalized_eigenspaces(const QMatrix& A) {
    std::vector<std::pair<Rational, QMatrix>> out;
    for (const auto& e : rational_spectrum(A)) {
        const QMatrix N = shifted(A, e.lambda);
        QMatrix power = QMatrix::Identity(A.rows(), A.cols());
        for (Eigen::Index k = 0; k < A.rows(); ++k) power = power * N;
        out.emplace_back(e.lambda, kernel(power));
    }
    return out;
}

bool diagonalizable_oracle(const QMatrix& A) {
    Eigen::Index geometric = 0;
    for (const auto& [lambda, basis] : eigenspaces(A)) geometric += basis.cols();
    return geometric == A.rows();
}

UPoly pencil_discriminant(const QMatrix& B, const QMatrix& C) {
    require_square(B);
    if (B.rows() != C.rows() || B.cols() != C.cols()) throw DimensionError("pencil matrices differ in size");
    const Eigen::Index r = B.rows();
    if (r < 2) throw InvalidArgument("discriminant needs r >= 2");
    UMatrix M(r, r);
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < r; ++j) M(i, j) = UPoly(std::vector<Rational>{B(i, j), C(i, j)});
    const std::vector<UPoly> p = char_poly(M);
    std::vector<UPoly> dp;
    for (Eigen::Index k = 1; k <= r; ++k) dp.push_back(p[k] * UPoly(Rational(static_cast<long>(k))));

    // Sylvester matrix of p (degree r) and p' (degree r - 1), coefficients
    // listed from the top degree down.
    const Eigen::Index n = 2 * r - 1;
    UMatrix S = UMatrix::Constant(n, n, UPoly());
    for (Eigen::Index row = 0; row < r - 1; ++row)
        for (Eigen::Index k = 0; k <= r; ++k) S(row, row + k) = p[r - k];
    for (Eigen::Index row = 0; row < r; ++row)
        for (Eigen::Index k = 0; k <= r - 1; ++k) S(r - 1 + row, row + k) = dp[r - 1 - k];
    // p is monic, so the division by the leading coefficient is trivial.
    return bareiss_determinant(S);
}

int discriminant_degree(const QMatrix& B, const QMatrix& C) {
    const UPoly disc = pencil_discriminant(B, C);
    if (disc.is_zero()) throw DegenerateSample("pencil discriminant vanishes identically; draw another seed");
    return disc.degree();
}

QMatrix random_entry_matrix(int r, std::mt19937_64& rng) {
    constexpr std::uint64_t span = 19;
    constexpr std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / span * span;
    QMatrix M(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            std::uint64_t v = rng();
            while (v >= limit) v = rng();
            M(i, j) = static_cast<long>(v % span) - 9;
        }
    return M;
}

int discriminant_degree_experiment(int r, std::uint64_t seed) {
    if (r < 2) throw InvalidArgument("discriminant experiment needs r >= 2");
    std::mt19937_64 rng(seed);
    const QMatrix B = random_entry_matrix(r, rng);
    const QMatrix C = random_entry_matrix(r, rng);
    return discriminant_degree(B, C);
}

}  // namespace eigenscheme
