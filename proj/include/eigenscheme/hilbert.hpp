#pragma once

#include <cstdint>
#include <vector>

#include "eigenscheme/jordanstruct.hpp"

namespace eigenscheme {

/// H(0), ..., H(tmax) of R / I.
struct HilbertSample {
    std::vector<std::int64_t> values;
    int tmax() const { return static_cast<int>(values.size()) - 1; }
    friend bool operator==(const HilbertSample&, const HilbertSample&) = default;
};

/// Counts standard monomials of the monomial ideal generated by `leads`.
HilbertSample staircase_count(const std::vector<Monomial>& leads, std::size_t nvars, int tmax);

/// Staircase count of the grevlex initial ideal. I must be homogeneous.
HilbertSample hilbert_function(const Ideal& ideal, int tmax = 8);

/// r_j * C(t + k_1 + ... + k_j - 1, t)
Integer closed_form(const EigenBlocks& blocks, int j, int t);

struct DimDegree {
    int dimension = -1;
    Integer degree = 0;
    friend bool operator==(const DimDegree&, const DimDegree&) = default;
};

/// Smallest d whose (d+1)-th differences vanish on the last d+3 values;
/// degree = the (constant) d-th difference. An eventually zero sample gives
/// dimension -1 and degree 0.
DimDegree dim_degree(const HilbertSample& sample);

/// Samples up to tmax, raising it by 2 (cap 16) until the fit is found and
/// agrees with the fit on one fewer value.
DimDegree dim_degree(const Ideal& ideal, int tmax = 8);

/// Replaces a report's dimension and degree by values measured from the
/// Hilbert function of its generators.
ComponentReport measured(ComponentReport report, int tmax = 8);

/// Per eigenvalue (in first-appearance order): components by descending
/// degree, r_j = degree, k_1 = dim_1 + 1, k_j = dim_j - dim_{j-1}.
/// `expected_size` >= 0 also checks sum k_j r_j.
JordanSpec reconstruct_jordan(const std::vector<ComponentReport>& reports, int expected_size = -1);

}  // namespace eigenscheme
