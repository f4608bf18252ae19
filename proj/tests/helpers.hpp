#pragma once

#include "enumeration.hpp"
#include "pipeline.hpp"
#include "systems.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace testing {

using namespace prevariety;

// Supports with 2..max_terms distinct points, exponents in [0, max_exp].
inline PolynomialSystem random_poly_system(std::mt19937_64& gen, std::size_t dim, std::size_t polys,
                                           std::size_t max_terms, int max_exp = 2) {
    std::uniform_int_distribution<int> d(0, max_exp);
    PolynomialSystem sys;
    sys.dim = dim;
    sys.label = "random";
    for (std::size_t i = 0; i < dim; ++i) sys.names.push_back("x" + std::to_string(i));
    for (std::size_t p = 0; p < polys; ++p) {
        std::set<IntVector, bool (*)(const IntVector&, const IntVector&)> pts(
            [](const IntVector& a, const IntVector& b) { return lex_less(a, b); });
        const std::size_t terms = 2 + gen() % (max_terms - 1);
        while (pts.size() < terms) {
            IntVector v(dim);
            for (auto& x : v) x = d(gen);
            pts.insert(v);
        }
        sys.supports.push_back({dim, IntMatrix(pts.begin(), pts.end())});
    }
    return sys;
}

// Sorted closure keys of the output cones, duplicates kept.
inline std::vector<ClosureKey> output_keys(const std::vector<OutputCone>& cones) {
    std::vector<ClosureKey> keys;
    for (const auto& c : cones) keys.push_back(closure_key(c.cone));
    std::sort(keys.begin(), keys.end());
    return keys;
}

inline std::vector<ClosureKey> run_static(const std::vector<Fan>& fans) {
    CollectingSink sink;
    enumerate_static(fans, sink);
    return output_keys(sink.take());
}

inline std::vector<ClosureKey> run_dynamic(const std::vector<Fan>& fans, DynamicMode mode, bool tables,
                                           EnumerationStats* stats = nullptr) {
    CollectingSink sink;
    auto s = enumerate_dynamic(fans, sink, mode, tables);
    if (stats) *stats = s;
    return output_keys(sink.take());
}

// Number of vertices of the support minimizing <w,.>.
inline std::size_t minimizers(const IntMatrix& points, const IntVector& w) {
    std::vector<Integer> vals;
    for (const auto& v : points) vals.push_back(dot(w, v));
    const Integer m = *std::min_element(vals.begin(), vals.end());
    return static_cast<std::size_t>(std::count(vals.begin(), vals.end(), m));
}

}  // namespace testing
