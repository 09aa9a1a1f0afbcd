#include "eigenscheme/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace eigenscheme {

MonomialOrder MonomialOrder::block(std::size_t split, Kind first, Kind second, std::vector<std::size_t> ranking) {
    if (first == Kind::Block || second == Kind::Block) throw InvalidArgument("nested block orders are not supported");
    return MonomialOrder(Kind::Block, std::move(ranking), split, first, second);
}

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> ranking, std::size_t split, Kind first, Kind second)
    : kind_(kind), ranking_(std::move(ranking)), split_(split), first_(first), second_(second) {
    if (!ranking_.empty()) {
        std::vector<std::size_t> sorted = ranking_;
        std::sort(sorted.begin(), sorted.end());
        std::vector<std::size_t> iota(sorted.size());
        std::iota(iota.begin(), iota.end(), std::size_t{0});
        if (sorted != iota) throw InvalidArgument("variable ranking is not a permutation");
        // The identity ranking is stored as empty so equal orders compare equal.
        if (ranking_ == iota) ranking_.clear();
    }
}

std::strong_ordering MonomialOrder::compare_range(Kind kind, const Monomial& a, const Monomial& b, std::size_t lo,
                                                  std::size_t hi) const {
    if (kind == Kind::Lex) {
        for (std::size_t k = lo; k < hi; ++k) {
            const std::size_t v = var(k);
            if (a[v] != b[v]) return a[v] > b[v] ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        return std::strong_ordering::equal;
    }
    int da = 0;
    int db = 0;
    if (lo == 0 && hi == a.size()) {
        da = a.degree();
        db = b.degree();
    } else {
        for (std::size_t k = lo; k < hi; ++k) {
            da += a[var(k)];
            db += b[var(k)];
        }
    }
    if (da != db) return da > db ? std::strong_ordering::greater : std::strong_ordering::less;
    // Reverse lexicographic tie-break: the smaller exponent on the last
    // differing variable wins.
    for (std::size_t k = hi; k-- > lo;) {
        const std::size_t v = var(k);
        if (a[v] != b[v]) return a[v] < b[v] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) throw DimensionError("comparing monomials of different lengths");
    if (!ranking_.empty() && ranking_.size() != a.size())
        throw DimensionError("monomial order ranking does not match the variable count");
    const std::size_t n = a.size();
    switch (kind_) {
        case Kind::Grevlex:
        case Kind::Lex:
            return compare_range(kind_, a, b, 0, n);
        case Kind::Block: {
            const std::size_t s = std::min(split_, n);
            auto c = compare_range(first_, a, b, 0, s);
            if (c != std::strong_ordering::equal) return c;
            return compare_range(second_, a, b, s, n);
        }
    }
    return std::strong_ordering::equal;
}

}  // namespace eigenscheme
