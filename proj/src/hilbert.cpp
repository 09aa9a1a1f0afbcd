#include "eigenscheme/hilbert.hpp"

#include <algorithm>

namespace eigenscheme {

HilbertSample staircase_count(const std::vector<Monomial>& leads, std::size_t nvars, int tmax) {
    if (tmax < 0) throw InvalidArgument("tmax must be non-negative");
    for (const auto& m : leads)
        if (m.size() != nvars) throw DimensionError("leading monomial of the wrong length");
    HilbertSample out;
    auto standard = [&](const Monomial& m) {
        return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
    };
    // Standard monomials of the current degree, each with its largest
    // variable index; children only append variables at or after it so every
    // monomial is produced once. Non-standard monomials have no standard
    // multiples, so pruning is exact.
    std::vector<std::pair<Monomial, std::size_t>> layer;
    if (standard(Monomial(nvars))) layer.emplace_back(Monomial(nvars), 0);
    out.values.push_back(static_cast<std::int64_t>(layer.size()));
    for (int t = 1; t <= tmax; ++t) {
        std::vector<std::pair<Monomial, std::size_t>> next;
        for (const auto& [m, last] : layer)
            for (std::size_t v = last; v < nvars; ++v) {
                Monomial child = m * Monomial::variable(nvars, v);
                if (standard(child)) next.emplace_back(std::move(child), v);
            }
        layer = std::move(next);
        out.values.push_back(static_cast<std::int64_t>(layer.size()));
    }
    return out;
}

HilbertSample hilbert_function(const Ideal& ideal, int tmax) {
    for (const auto& g : ideal.generators())
        if (!g.is_homogeneous()) throw ValidationError("Hilbert function of a non-homogeneous ideal");
    const GroebnerBasis gb = buchberger(ideal, MonomialOrder::grevlex());
    std::vector<Monomial> leads;
    for (const auto& g : gb.elements) leads.push_back(g.leading_monomial());
    return staircase_count(leads, ideal.ring()->nvars(), tmax);
}

Integer closed_form(const EigenBlocks& blocks, int j, int t) {
    blocks.validate();
    if (j < 1 || j > blocks.ell()) throw InvalidArgument("component index out of range");
    if (t < 0) throw InvalidArgument("t must be non-negative");
    int ksum = 0;
    for (int a = 0; a < j; ++a) ksum += blocks.blocks[a].multiplicity;
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(t + ksum - 1), static_cast<unsigned long>(t));
    return binom * blocks.blocks[j - 1].size;
}

DimDegree dim_degree(const HilbertSample& sample) {
    const int T = sample.tmax();
    if (T < 1) throw InsufficientSample("need at least two Hilbert values");
    std::vector<Integer> diff(sample.values.begin(), sample.values.end());
    if (diff[T] == 0 && diff[T - 1] == 0) return DimDegree{-1, 0};
    // diff holds the d-th differences; entry k is Delta^d H at t = k + d.
    for (int d = 0; d + 2 <= T; ++d) {
        std::vector<Integer> next;
        for (std::size_t k = 0; k + 1 < diff.size(); ++k) next.push_back(diff[k + 1] - diff[k]);
        // last d+3 values of H give two (d+1)-th differences
        const std::size_t n = next.size();
        if (n >= 2 && next[n - 1] == 0 && next[n - 2] == 0) {
            if (diff.back() <= 0) throw InsufficientSample("non-positive leading Hilbert coefficient");
            return DimDegree{d, diff.back()};
        }
        diff = std::move(next);
    }
    throw InsufficientSample("Hilbert sample is not polynomial on its tail up to t = " + std::to_string(T));
}

DimDegree dim_degree(const Ideal& ideal, int tmax) {
    for (int T = std::max(tmax, 4); T <= 16; T += 2) {
        const HilbertSample full = hilbert_function(ideal, T);
        HilbertSample shorter = full;
        shorter.values.pop_back();
        try {
            DimDegree a = dim_degree(full);
            DimDegree b = dim_degree(shorter);
            if (a == b) return a;
        } catch (const InsufficientSample&) {
        }
    }
    throw InsufficientSample("Hilbert function did not stabilize by t = 16");
}

ComponentReport measured(ComponentReport report, int tmax) {
    const DimDegree dd = dim_degree(report.generators, tmax);
    if (!dd.degree.fits_sint_p()) throw InconsistencyError("component degree out of range");
    report.dimension = dd.dimension;
    report.degree = static_cast<int>(dd.degree.get_si());
    return report;
}

JordanSpec reconstruct_jordan(const std::vector<ComponentReport>& reports, int expected_size) {
    JordanSpec spec;
    std::vector<std::vector<const ComponentReport*>> groups;
    for (const auto& rep : reports) {
        auto it = std::find_if(spec.eigenvalues.begin(), spec.eigenvalues.end(),
                               [&](const EigenBlocks& e) { return e.lambda == rep.lambda; });
        if (it == spec.eigenvalues.end()) {
            spec.eigenvalues.push_back(EigenBlocks{rep.lambda, {}});
            groups.emplace_back();
            groups.back().push_back(&rep);
        } else {
            groups[it - spec.eigenvalues.begin()].push_back(&rep);
        }
    }
    for (std::size_t g = 0; g < groups.size(); ++g) {
        auto& comps = groups[g];
        std::stable_sort(comps.begin(), comps.end(),
                         [](const ComponentReport* a, const ComponentReport* b) { return a->degree > b->degree; });
        int prev_dim = -1;
        for (std::size_t j = 0; j < comps.size(); ++j) {
            const auto& c = *comps[j];
            if (j > 0 && c.degree == comps[j - 1]->degree)
                throw InconsistencyError("two components of eigenvalue " + to_string(c.lambda) + " share degree " +
                                         std::to_string(c.degree));
            const int k = c.dimension - prev_dim;
            if (c.degree < 1 || k < 1)
                throw InconsistencyError("component data of eigenvalue " + to_string(c.lambda) +
                                         " is not triangular");
            spec.eigenvalues[g].blocks.push_back(BlockRun{c.degree, k});
            prev_dim = c.dimension;
        }
    }
    if (expected_size >= 0 && spec.dimension() != expected_size)
        throw InconsistencyError("reconstructed Jordan type has size " + std::to_string(spec.dimension()) +
                                 ", expected " + std::to_string(expected_size));
    spec.validate();
    return spec;
}

}  // namespace eigenscheme
