#include "eigenscheme/jordanstruct.hpp"

#include <algorithm>
#include <tuple>

#include "eigenscheme/linalg.hpp"
#include "eigenscheme/oracle.hpp"

namespace eigenscheme {

bool lambda_greater(const LambdaIndex& a, const LambdaIndex& b) {
    return std::tie(a.i1, a.i2, a.i3) < std::tie(b.i1, b.i2, b.i3);
}

LambdaSet::LambdaSet(const EigenBlocks& blocks) {
    blocks.validate();
    for (const auto& b : blocks.blocks) {
        r_.push_back(b.size);
        k_.push_back(b.multiplicity);
    }
    for (int i1 = 1; i1 <= ell(); ++i1)
        for (int i2 = 1; i2 <= k(i1); ++i2)
            for (int i3 = 1; i3 <= r(i1); ++i3) elements_.push_back(LambdaIndex{i1, i2, i3});
}

bool LambdaSet::contains(const LambdaIndex& i) const {
    return i.i1 >= 1 && i.i1 <= ell() && i.i2 >= 1 && i.i2 <= k(i.i1) && i.i3 >= 1 && i.i3 <= r(i.i1);
}

std::size_t LambdaSet::flat(const LambdaIndex& i) const {
    if (!contains(i)) throw InvalidArgument("index " + name(i) + " is not in Lambda");
    std::size_t offset = 0;
    for (int a = 1; a < i.i1; ++a) offset += static_cast<std::size_t>(k(a) * r(a));
    return offset + static_cast<std::size_t>((i.i2 - 1) * r(i.i1) + (i.i3 - 1));
}

std::optional<LambdaIndex> LambdaSet::plus(const LambdaIndex& i) const {
    LambdaIndex p{i.i1, i.i2, i.i3 + 1};
    if (!contains(p)) return std::nullopt;
    return p;
}

std::optional<LambdaIndex> LambdaSet::minus(const LambdaIndex& i) const {
    LambdaIndex m{i.i1, i.i2, i.i3 - 1};
    if (!contains(m)) return std::nullopt;
    return m;
}

std::string LambdaSet::name(const LambdaIndex& i) {
    return "x(" + std::to_string(i.i1) + "," + std::to_string(i.i2) + "," + std::to_string(i.i3) + ")";
}

std::string to_string(GammaClass c) {
    switch (c) {
        case GammaClass::Gamma1: return "Gamma1";
        case GammaClass::Gamma2: return "Gamma2";
        case GammaClass::Gamma3: return "Gamma3";
        case GammaClass::Gamma4: return "Gamma4";
        case GammaClass::Zero: return "zero";
    }
    return "zero";
}

namespace {

Polynomial var(const LambdaSet& set, const RingPtr& ring, const LambdaIndex& i) {
    return Polynomial::variable(ring, set.flat(i));
}

Polynomial prod(const LambdaSet& set, const RingPtr& ring, const LambdaIndex& a, const LambdaIndex& b) {
    Monomial m = Monomial::variable(set.size(), set.flat(a)) * Monomial::variable(set.size(), set.flat(b));
    return Polynomial::monomial(ring, m);
}

std::vector<Polynomial> variables_of(const LambdaSet& set, const RingPtr& ring, const std::vector<LambdaIndex>& idx) {
    std::vector<Polynomial> out;
    for (const auto& i : idx) out.push_back(var(set, ring, i));
    return out;
}

std::vector<Polynomial> sorted_unique(const RingPtr& ring, std::vector<Polynomial> polys) {
    const auto& order = ring->order();
    std::sort(polys.begin(), polys.end(), [&](const Polynomial& a, const Polynomial& b) {
        auto c = order(a.leading_monomial(), b.leading_monomial());
        if (c != 0) return c < 0;
        return a.to_string() < b.to_string();
    });
    polys.erase(std::unique(polys.begin(), polys.end()), polys.end());
    return polys;
}

}  // namespace

GammaPair gamma_classify(const LambdaSet& set, const RingPtr& ring, const LambdaIndex& i, const LambdaIndex& j) {
    if (!set.contains(i) || !set.contains(j)) throw InvalidArgument("index outside Lambda");
    if (!lambda_greater(i, j)) throw InvalidArgument("gamma_classify needs i > j");
    const bool i_open = i.i3 < set.r(i.i1);
    const bool j_open = j.i3 < set.r(j.i1);
    GammaPair out{i, j, GammaClass::Zero, Polynomial(ring)};
    if (i_open && j_open) {
        out.cls = i.i3 + j.i3 >= set.r(j.i1) + 1 ? GammaClass::Gamma1 : GammaClass::Gamma2;
        out.minor = prod(set, ring, *set.plus(i), j) - prod(set, ring, i, *set.plus(j));
    } else if (i_open) {
        out.cls = GammaClass::Gamma3;
        out.minor = prod(set, ring, *set.plus(i), j);
    } else if (j_open) {
        out.cls = GammaClass::Gamma4;
        out.minor = -prod(set, ring, i, *set.plus(j));
    }
    return out;
}

RingPtr lambda_ring(const EigenBlocks& blocks) { return Ring::make(static_cast<std::size_t>(blocks.dimension())); }

std::vector<Polynomial> basis_H(const EigenBlocks& blocks) {
    const LambdaSet set(blocks);
    const RingPtr ring = lambda_ring(blocks);
    std::vector<Polynomial> H;
    for (std::size_t a = 0; a < set.size(); ++a)
        for (std::size_t b = a + 1; b < set.size(); ++b) {
            auto g = gamma_classify(set, ring, set.at(a), set.at(b));
            if (g.cls == GammaClass::Gamma4)
                H.push_back(-g.minor);
            else if (g.cls != GammaClass::Zero)
                H.push_back(g.minor);
        }
    return H;
}

GroebnerBasis basis_G(const EigenBlocks& blocks) {
    const LambdaSet set(blocks);
    const RingPtr ring = lambda_ring(blocks);
    std::vector<Polynomial> G;
    for (std::size_t a = 0; a < set.size(); ++a)
        for (std::size_t b = a + 1; b < set.size(); ++b) {
            const LambdaIndex& i = set.at(a);
            const LambdaIndex& j = set.at(b);
            switch (gamma_classify(set, ring, i, j).cls) {
                case GammaClass::Gamma1:
                case GammaClass::Gamma3:
                    G.push_back(prod(set, ring, *set.plus(i), j));
                    break;
                case GammaClass::Gamma2: {
                    const LambdaIndex istar{i.i1, i.i2, 1};
                    const LambdaIndex jstar{j.i1, j.i2, i.i3 + j.i3};
                    G.push_back(prod(set, ring, *set.plus(i), j) - prod(set, ring, istar, jstar));
                    break;
                }
                default:
                    break;
            }
        }
    return GroebnerBasis{ring, sorted_unique(ring, std::move(G)), true};
}

std::vector<LambdaIndex> lambda_j_union(const LambdaSet& set, int j) {
    if (j < 1 || j > set.ell()) throw InvalidArgument("component index out of range");
    std::vector<LambdaIndex> out;
    for (const auto& i : set.elements()) {
        const bool in_j1 = i.i1 <= j && i.i3 >= set.r(j) + 1;
        const bool in_j2 = i.i1 > j;
        if (in_j1 || in_j2) out.push_back(i);
    }
    return out;
}

std::vector<LambdaIndex> theta(const LambdaSet& set, int j) {
    if (j < 1 || j > set.ell()) throw InvalidArgument("component index out of range");
    std::vector<LambdaIndex> out;
    for (const auto& i : set.elements())
        if (i.i1 <= j && i.i3 == 1) out.push_back(i);
    return out;
}

GroebnerBasis component_gb(const EigenBlocks& blocks, int j) {
    const LambdaSet set(blocks);
    GroebnerBasis G = basis_G(blocks);
    std::vector<Polynomial> gens = G.elements;
    for (auto& v : variables_of(set, G.ring, lambda_j_union(set, j))) gens.push_back(std::move(v));
    return reduced_form(G.ring, std::move(gens));
}

std::vector<ComponentReport> components_single(const EigenBlocks& blocks) {
    const LambdaSet set(blocks);
    const RingPtr ring = lambda_ring(blocks);
    std::vector<ComponentReport> out;
    int ksum = 0;
    for (int j = 1; j <= set.ell(); ++j) {
        ksum += set.k(j);
        const auto th = theta(set, j);
        std::vector<LambdaIndex> outside;
        for (const auto& i : set.elements())
            if (std::find(th.begin(), th.end(), i) == th.end()) outside.push_back(i);
        ComponentReport rep{blocks.lambda,
                            j,
                            component_gb(blocks, j).ideal(),
                            Ideal(ring, variables_of(set, ring, outside)),
                            ksum - 1,
                            set.r(j),
                            set.r(j),
                            ksum};
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<CellularWitness> cellular_witnesses(const EigenBlocks& blocks, int j) {
    const LambdaSet set(blocks);
    const GroebnerBasis q = component_gb(blocks, j);
    const auto th = theta(set, j);
    const auto gens = lambda_j_union(set, j);
    const int cap = 2 * set.r(1);
    std::vector<CellularWitness> out;
    for (std::size_t v = 0; v < set.size(); ++v) {
        const LambdaIndex& i = set.at(v);
        CellularWitness w;
        w.variable = v;
        if (std::find(th.begin(), th.end(), i) != th.end()) {
            w.nonzerodivisor = true;
            out.push_back(w);
            continue;
        }
        const int r = set.r(i.i1);
        if (std::find(gens.begin(), gens.end(), i) != gens.end())
            w.hint_exponent = 1;
        else if (2 * i.i3 >= r + 2)
            w.hint_exponent = 2;
        else if (i.i3 >= 2)
            w.hint_exponent = (r - 2 * i.i3 + 1) / (i.i3 - 1);
        Monomial power(set.size());
        for (int e = 1; e <= cap; ++e) {
            power = power * Monomial::variable(set.size(), v);
            if (member(Polynomial::monomial(q.ring, power), q)) {
                w.exponent = e;
                break;
            }
        }
        if (w.exponent == 0)
            throw InconsistencyError("no power of " + LambdaSet::name(i) + " up to " + std::to_string(cap) +
                                     " lies in the component");
        out.push_back(w);
    }
    return out;
}

QMatrix phi_matrix(const QMatrix& A, const QMatrix& B) {
    if (A.rows() != A.cols() || B.rows() != B.cols()) throw DimensionError("phi_matrix needs square matrices");
    const Eigen::Index r = A.rows();
    const Eigen::Index s = B.rows();
    QMatrix Phi = QMatrix::Zero(r * s, r * s);
    for (Eigen::Index a = 0; a < r; ++a)
        for (Eigen::Index b = 0; b < s; ++b)
            for (Eigen::Index i = 0; i < r; ++i)
                for (Eigen::Index j = 0; j < s; ++j) {
                    Rational v = 0;
                    if (i == a && j == b)
                        v = A(a, a) - B(b, b);
                    else if (i == a)
                        v = -B(b, j);
                    else if (j == b)
                        v = A(a, i);
                    Phi(a * s + b, i * s + j) = v;
                }
    return Phi;
}

bool splits(const QMatrix& A, const QMatrix& B) { return rank(phi_matrix(A, B)) == A.rows() * B.rows(); }

std::vector<ComponentReport> decompose_general(const JordanSpec& spec) {
    spec.validate();
    const auto n = static_cast<std::size_t>(spec.dimension());
    const RingPtr ring = Ring::make(n);
    std::vector<ComponentReport> out;
    std::size_t offset = 0;
    for (const auto& eb : spec.eigenvalues) {
        const auto xi = static_cast<std::size_t>(eb.dimension());
        std::vector<std::size_t> index(xi);
        for (std::size_t k = 0; k < xi; ++k) index[k] = offset + k;
        std::vector<Polynomial> others;
        for (std::size_t v = 0; v < n; ++v)
            if (v < offset || v >= offset + xi) others.push_back(Polynomial::variable(ring, v));
        auto lift = [&](const Ideal& I) {
            std::vector<Polynomial> gens;
            for (const auto& g : I.generators()) gens.push_back(map_variables(g, ring, index));
            gens.insert(gens.end(), others.begin(), others.end());
            return Ideal(ring, std::move(gens));
        };
        for (auto& rep : components_single(eb)) {
            rep.generators = lift(rep.generators);
            rep.radical = lift(rep.radical);
            out.push_back(std::move(rep));
        }
        offset += xi;
    }
    return out;
}

std::vector<ComponentReport> decompose_matrix(const QMatrix& A) {
    const JordanBasis jb = jordan_basis(A);
    const QMatrix C = inverse(jb.P);
    auto reports = decompose_general(jb.spec);
    for (auto& rep : reports) {
        rep.generators = transport(rep.generators, C);
        rep.radical = transport(rep.radical, C);
    }
    return reports;
}

bool decomposition_holds(const std::vector<ComponentReport>& components, const Ideal& ideal) {
    std::vector<Ideal> parts;
    for (const auto& c : components) parts.push_back(c.generators);
    return ideal_equal(intersect(parts), ideal);
}

bool diagonalizable_via_ideal(const QMatrix& A) {
    const auto spectrum = rational_spectrum(A);
    const Ideal IA = eigenscheme_ideal(A);
    const RingPtr& ring = IA.ring();
    const auto n = static_cast<std::size_t>(A.rows());
    std::vector<Ideal> spaces;
    for (const auto& e : spectrum) {
        std::vector<Polynomial> forms;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Term> terms;
            for (std::size_t j = 0; j < n; ++j) {
                Rational c = A(i, j);
                if (i == j) c -= e.lambda;
                if (!is_zero(c)) terms.push_back(Term{c, Monomial::variable(n, j)});
            }
            forms.emplace_back(ring, std::move(terms));
        }
        spaces.emplace_back(ring, std::move(forms));
    }
    return ideal_equal(IA, intersect(spaces));
}

}  // namespace eigenscheme
