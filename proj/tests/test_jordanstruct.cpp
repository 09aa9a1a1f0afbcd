#include "doctest.h"

#include <algorithm>
#include <set>

#include "eigenscheme/errors.hpp"
#include "eigenscheme/jordanstruct.hpp"
#include "eigenscheme/linalg.hpp"
#include "eigenscheme/oracle.hpp"
#include "support.hpp"

using namespace eigenscheme;
using testsupport::ideal_of;
using testsupport::matrix;

namespace {

const EigenBlocks three_blocks{0, {{4, 1}, {3, 1}, {2, 1}}};

Polynomial var(const RingPtr& R, const LambdaSet& set, LambdaIndex i) { return Polynomial::variable(R, set.flat(i)); }

// Small slice of the lattice for the slower per-component checks.
std::vector<EigenBlocks> small_lattice() {
    std::vector<EigenBlocks> out;
    for (auto& b : testsupport::block_lattice(3, 2, 4, 7)) out.push_back(EigenBlocks{0, b});
    return out;
}

std::set<std::string> lead_set(const std::vector<Polynomial>& ps) {
    std::set<std::string> out;
    for (const auto& p : ps)
        if (!p.is_zero()) out.insert(Polynomial::monomial(p.ring(), p.leading_monomial()).to_string());
    return out;
}

}  // namespace

TEST_CASE("lambda order and flat indices") {
    const LambdaSet set(three_blocks);
    REQUIRE(set.size() == 9);
    CHECK(set.at(0) == LambdaIndex{1, 1, 1});
    CHECK(set.at(4) == LambdaIndex{2, 1, 1});
    CHECK(set.at(8) == LambdaIndex{3, 1, 2});
    for (std::size_t a = 0; a + 1 < set.size(); ++a) CHECK(lambda_greater(set.at(a), set.at(a + 1)));
    CHECK(set.plus({1, 1, 3}) == LambdaIndex{1, 1, 4});
    CHECK_FALSE(set.plus({1, 1, 4}).has_value());
    CHECK(set.minus({2, 1, 2}) == LambdaIndex{2, 1, 1});
    CHECK(LambdaSet::name({2, 1, 3}) == "x(2,1,3)");
}

TEST_CASE("gamma classification examples") {
    const LambdaSet set(three_blocks);
    const RingPtr R = lambda_ring(three_blocks);
    const GammaPair g1 = gamma_classify(set, R, {1, 1, 3}, {2, 1, 2});
    CHECK(g1.cls == GammaClass::Gamma1);
    CHECK(g1.minor ==
          var(R, set, {1, 1, 4}) * var(R, set, {2, 1, 2}) - var(R, set, {1, 1, 3}) * var(R, set, {2, 1, 3}));
    const GammaPair z = gamma_classify(set, R, {1, 1, 4}, {2, 1, 3});
    CHECK(z.cls == GammaClass::Zero);
    CHECK(z.minor.is_zero());
    CHECK(gamma_classify(set, R, {1, 1, 1}, {2, 1, 1}).cls == GammaClass::Gamma2);
    CHECK_THROWS_AS(gamma_classify(set, R, {2, 1, 1}, {1, 1, 1}), InvalidArgument);
    CHECK_THROWS_AS(gamma_classify(set, R, {1, 1, 1}, {1, 1, 1}), InvalidArgument);
}

TEST_CASE("gamma minors match the expanded determinant") {
    for (const auto& blocks : testsupport::single_lattice()) {
        if (blocks.dimension() > 8) continue;
        const LambdaSet set(blocks);
        const RingPtr R = lambda_ring(blocks);
        const QMatrix J = jordan_matrix(blocks);
        for (std::size_t a = 0; a < set.size(); ++a)
            for (std::size_t b = a + 1; b < set.size(); ++b) {
                const GammaPair g = gamma_classify(set, R, set.at(a), set.at(b));
                const Polynomial m = testsupport::direct_minor(J, R, a, b);
                CHECK((g.minor == m || g.minor == m.scaled(-1)));
                CHECK((g.cls == GammaClass::Zero) == m.is_zero());
                const bool i_end = set.at(a).i3 == set.r(set.at(a).i1);
                const bool j_end = set.at(b).i3 == set.r(set.at(b).i1);
                if (g.cls == GammaClass::Gamma3) CHECK((j_end && !i_end));
                if (g.cls == GammaClass::Gamma4) CHECK((i_end && !j_end));
                if (g.cls == GammaClass::Gamma3 || g.cls == GammaClass::Gamma4) CHECK(g.minor.size() == 1);
            }
    }
}

TEST_CASE("small closed-form bases") {
    const EigenBlocks two{7, {{2, 1}}};
    const GroebnerBasis G = basis_G(two);
    REQUIRE(G.elements.size() == 1);
    CHECK(G.elements[0].to_string() == "x2^2");
    CHECK(G.reduced);
    CHECK(basis_G(EigenBlocks{0, {{1, 5}}}).elements.empty());
    CHECK(basis_H(EigenBlocks{0, {{1, 5}}}).empty());
}

TEST_CASE("H and G generate I_lambda and G is the reduced basis") {
    for (const auto& blocks : small_lattice()) {
        const RingPtr R = lambda_ring(blocks);
        const Ideal I = eigenscheme_ideal(jordan_matrix(blocks), R);
        const GroebnerBasis G = basis_G(blocks);
        CHECK(ideal_equal(Ideal(R, basis_H(blocks)), I));
        CHECK(G == buchberger(I));
    }
    const RingPtr R = lambda_ring(three_blocks);
    CHECK(basis_G(three_blocks) == buchberger(eigenscheme_ideal(jordan_matrix(three_blocks), R)));
}

TEST_CASE("initial ideal is generated by the leading terms of the non-zero minors") {
    for (const auto& blocks : small_lattice()) {
        const LambdaSet set(blocks);
        const RingPtr R = lambda_ring(blocks);
        std::vector<Polynomial> minors;
        for (std::size_t a = 0; a < set.size(); ++a)
            for (std::size_t b = a + 1; b < set.size(); ++b) {
                const GammaPair g = gamma_classify(set, R, set.at(a), set.at(b));
                if (g.cls == GammaClass::Gamma1 || g.cls == GammaClass::Gamma2 || g.cls == GammaClass::Gamma3)
                    minors.push_back(Polynomial::monomial(R, g.minor.leading_monomial()));
            }
        std::vector<Polynomial> leads;
        for (const auto& p : basis_G(blocks).elements) leads.push_back(Polynomial::monomial(R, p.leading_monomial()));
        CHECK(ideal_equal(Ideal(R, minors), Ideal(R, leads)));
        CHECK(lead_set(minors) == lead_set(leads));
    }
}

TEST_CASE("components of the three-block example") {
    const LambdaSet set(three_blocks);
    const RingPtr R = lambda_ring(three_blocks);
    const Ideal I = eigenscheme_ideal(jordan_matrix(three_blocks), R);
    const auto comps = components_single(three_blocks);
    REQUIRE(comps.size() == 3);
    const Ideal extra[] = {
        ideal_of(R, {"x5", "x6", "x7", "x8", "x9"}),
        ideal_of(R, {"x4", "x8", "x9"}),
        ideal_of(R, {"x3", "x4", "x7"}),
    };
    for (int j = 0; j < 3; ++j) {
        CHECK(comps[j].j == j + 1);
        CHECK(ideal_equal(comps[j].generators, I + extra[j]));
        CHECK(component_gb(three_blocks, j + 1) == buchberger(I + extra[j]));
        CHECK(comps[j].degree == set.r(j + 1));
        CHECK(comps[j].dimension == j);
    }
    CHECK(ideal_equal(comps[1].radical, ideal_of(R, {"x2", "x3", "x4", "x6", "x7", "x8", "x9"})));
    CHECK(decomposition_holds(comps, I));
}

TEST_CASE("component bases and radicals over the small lattice") {
    for (const auto& blocks : small_lattice()) {
        const RingPtr R = lambda_ring(blocks);
        const Ideal I = eigenscheme_ideal(jordan_matrix(blocks), R);
        const auto comps = components_single(blocks);
        CHECK(comps.size() == blocks.blocks.size());
        CHECK(decomposition_holds(comps, I));
        for (const auto& c : comps) {
            const GroebnerBasis gb = component_gb(blocks, c.j);
            CHECK(gb == buchberger(c.generators));
            CHECK(contained(I, c.generators));
            // q is inside its radical, and every radical generator is nilpotent mod q
            CHECK(contained(c.generators, c.radical));
            for (const auto& h : c.radical.generators()) {
                bool nilpotent = false;
                Polynomial power = h;
                for (int e = 1; e <= 2 * blocks.blocks[0].size && !nilpotent; ++e) {
                    nilpotent = member(power, gb);
                    power = power * h;
                }
                CHECK(nilpotent);
            }
            for (const auto& h : c.radical.generators()) CHECK(h.total_degree() == 1);
        }
    }
}

TEST_CASE("cellular witnesses") {
    const EigenBlocks single{0, {{3, 1}}};
    const auto w = cellular_witnesses(single, 1);
    REQUIRE(w.size() == 3);
    CHECK(w[0].nonzerodivisor);
    CHECK_FALSE(w[1].nonzerodivisor);
    CHECK(w[1].exponent == 3);
    CHECK_FALSE(w[2].nonzerodivisor);
    CHECK(w[2].exponent == 2);

    for (const auto& wi : cellular_witnesses(EigenBlocks{0, {{1, 4}}}, 1)) CHECK(wi.nonzerodivisor);

    int candidates = 0;
    int mismatches = 0;
    for (const auto& blocks : small_lattice()) {
        const LambdaSet set(blocks);
        const RingPtr R = lambda_ring(blocks);
        for (int j = 1; j <= blocks.ell(); ++j) {
            const GroebnerBasis gb = component_gb(blocks, j);
            const Ideal q = gb.ideal();
            const auto th = theta(set, j);
            const auto gens = lambda_j_union(set, j);
            for (const auto& wi : cellular_witnesses(blocks, j)) {
                const LambdaIndex idx = set.at(wi.variable);
                const Polynomial x = Polynomial::variable(R, wi.variable);
                const bool in_theta = std::find(th.begin(), th.end(), idx) != th.end();
                CHECK(wi.nonzerodivisor == in_theta);
                if (wi.nonzerodivisor) {
                    CHECK(ideal_equal(colon_sat(q, x), q));
                    continue;
                }
                Polynomial p = Polynomial::constant(R, 1);
                for (int e = 1; e < wi.exponent; ++e) p = p * x;
                CHECK_FALSE(member(p, gb));
                CHECK(member(p * x, gb));
                if (std::find(gens.begin(), gens.end(), idx) != gens.end()) CHECK(wi.exponent == 1);
                if (wi.hint_exponent != 0) {
                    ++candidates;
                    mismatches += wi.hint_exponent != wi.exponent;
                }
            }
        }
    }
    MESSAGE("searched exponents differ from the candidate exponent in " << mismatches << " of " << candidates
                                                                        << " cases");
}

TEST_CASE("phi matrix of the direct-sum example") {
    const QMatrix A = matrix(2, 2, {-1, 4, -1, 3});
    const QMatrix B = matrix(2, 2, {-7, 9, -4, 5});
    const QMatrix phi = phi_matrix(A, B);
    CHECK(phi == matrix(4, 4, {6, -9, 4, 0, 4, -6, 0, 4, -1, 0, 10, -9, 0, -1, 4, -2}));
    CHECK(bareiss_determinant(phi) == 16);
    CHECK(splits(A, B));

    const QMatrix AB = direct_sum(A, B);
    const Ideal I = eigenscheme_ideal(AB);
    const auto& R = I.ring();
    const Ideal q1 = ideal_of(R, {"x1^2 - 4*x1*x2 + 4*x2^2", "x3", "x4"});
    const Ideal q2 = ideal_of(R, {"4*x3^2 - 12*x3*x4 + 9*x4^2", "x1", "x2"});
    CHECK(ideal_equal(I, intersect(q1, q2)));
}

TEST_CASE("phi rank criterion on Jordan blocks") {
    CHECK_FALSE(splits(jordan_block(2, 1), jordan_block(2, 1)));
    CHECK(phi_matrix(jordan_block(2, 1), jordan_block(2, 1)) == QMatrix::Zero(1, 1));
    const QMatrix A = jordan_matrix(EigenBlocks{3, {{2, 1}, {1, 1}}});
    const QMatrix B = jordan_block(-1, 2);
    const QMatrix phi = phi_matrix(A, B);
    CHECK(rank(phi) == 6);
    CHECK(bareiss_determinant(phi) == Rational(4 * 4 * 4 * 4 * 4 * 4));
    CHECK_FALSE(splits(jordan_block(1, 2), jordan_matrix(EigenBlocks{1, {{1, 2}}})));
}

TEST_CASE("general decomposition examples") {
    const JordanSpec diag{{EigenBlocks{1, {{1, 2}}}, EigenBlocks{2, {{1, 1}}}}};
    const auto comps = decompose_general(diag);
    REQUIRE(comps.size() == 2);
    const auto& R = comps[0].generators.ring();
    CHECK(ideal_equal(comps[0].generators, ideal_of(R, {"x3"})));
    CHECK(comps[0].dimension == 1);
    CHECK(comps[0].degree == 1);
    CHECK(ideal_equal(comps[1].generators, ideal_of(R, {"x1", "x2"})));
    CHECK(comps[1].dimension == 0);

    const JordanSpec two{{EigenBlocks{0, {{2, 1}}}, EigenBlocks{1, {{2, 1}}}}};
    const auto c2 = decompose_general(two);
    const auto& R2 = c2[0].generators.ring();
    CHECK(ideal_equal(c2[0].generators, ideal_of(R2, {"x2^2", "x3", "x4"})));
    CHECK(ideal_equal(c2[1].generators, ideal_of(R2, {"x4^2", "x1", "x2"})));
    CHECK(decomposition_holds(c2, eigenscheme_ideal(jordan_matrix(two), R2)));
}

TEST_CASE("decomposition of the diagonalizable three by three example") {
    const QMatrix A = matrix(3, 3, {4, 0, 1, 2, 3, 2, 1, 0, 4});
    const auto comps = decompose_matrix(A);
    const Ideal I = eigenscheme_ideal(A);
    const auto& R = I.ring();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].lambda == 5);
    CHECK(ideal_equal(comps[0].generators, ideal_of(R, {"x2-2*x3", "x1-x3"})));
    CHECK(ideal_equal(comps[1].generators, ideal_of(R, {"x1+x3"})));
    CHECK(decomposition_holds(comps, I));
}

TEST_CASE("single block ideal is the minors of the shifted two-row matrix") {
    for (int r = 2; r <= 6; ++r) {
        const EigenBlocks blocks{0, {{r, 1}}};
        const RingPtr R = lambda_ring(blocks);
        const Ideal I = eigenscheme_ideal(jordan_matrix(blocks), R);
        std::vector<Polynomial> all, curve;
        auto top = [&](int c) { return Polynomial::variable(R, c); };
        auto bottom = [&](int c) { return c + 1 < r ? Polynomial::variable(R, c + 1) : Polynomial(R); };
        for (int a = 0; a < r; ++a)
            for (int b = a + 1; b < r; ++b) {
                const Polynomial m = top(a) * bottom(b) - top(b) * bottom(a);
                all.push_back(m);
                if (b < r - 1) curve.push_back(m);
            }
        CHECK(ideal_equal(Ideal(R, all), I));
        for (const auto& m : curve) {
            const auto& gens = I.generators();
            const bool listed = std::any_of(gens.begin(), gens.end(),
                                            [&](const Polynomial& g) { return g == m || g == m.scaled(-1); });
            CHECK(listed);
        }
        const auto comps = components_single(blocks);
        REQUIRE(comps.size() == 1);
        CHECK(ideal_equal(comps[0].generators, I));
        CHECK(comps[0].dimension == 0);
        CHECK(comps[0].degree == r);
    }
}

TEST_CASE("p_i annihilates exactly the generalized eigenspace") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 15; ++trial) {
        const JordanSpec spec = testsupport::random_spec(rng, 7);
        if (spec.eigenvalues.size() < 2) continue;
        const QMatrix J = jordan_matrix(spec);
        const auto comps = decompose_general(spec);
        const auto gen = generalized_eigenspaces(J);
        const int n = spec.dimension();
        for (const auto& [lambda, V] : gen) {
            // degree-one part of the reduced basis of the lambda-primary part is p_i
            std::vector<Ideal> parts;
            for (const auto& c : comps)
                if (c.lambda == lambda) parts.push_back(c.generators);
            std::vector<std::vector<Rational>> rows;
            for (const auto& g : buchberger(intersect(parts)).elements) {
                if (g.total_degree() != 1) continue;
                std::vector<Rational> row(n, 0);
                for (const auto& t : g.terms())
                    for (int k = 0; k < n; ++k)
                        if (t.monomial[k] == 1) row[k] = t.coeff;
                rows.push_back(row);
            }
            QMatrix L(static_cast<Eigen::Index>(rows.size()), n);
            for (std::size_t a = 0; a < rows.size(); ++a)
                for (int k = 0; k < n; ++k) L(a, k) = rows[a][k];
            // L annihilates V and rank L + dim V = n
            CHECK((L * V).isZero());
            CHECK(rank(L) + V.cols() == n);
        }
    }
}

TEST_CASE("diagonalizability through the ideal") {
    CHECK(diagonalizable_via_ideal(matrix(3, 3, {4, 0, 1, 2, 3, 2, 1, 0, 4})));
    CHECK_FALSE(diagonalizable_via_ideal(matrix(3, 3, {2, 1, 1, 0, 1, 1, 0, 0, 1})));
    CHECK(diagonalizable_via_ideal(matrix(3, 3, {1, 0, 0, 0, -2, 0, 0, 0, 5})));
    CHECK(diagonalizable_via_ideal(QMatrix::Identity(3, 3)));
    CHECK_THROWS_AS(diagonalizable_via_ideal(matrix(2, 2, {0, -1, 1, 0})), UnsupportedField);
}
