#pragma once

#include "newton.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace prevariety {

struct PolynomialSystem {
    std::size_t dim = 0;
    std::vector<std::string> names;
    std::vector<Support> supports;
    std::string label;

    // Ignores the label.
    friend bool operator==(const PolynomialSystem& a, const PolynomialSystem& b) {
        return a.dim == b.dim && a.names == b.names && a.supports == b.supports;
    }
};

PolynomialSystem gen_cyclic(int n);
PolynomialSystem gen_nbody(int n);
PolynomialSystem gen_nvortex(int n);
PolynomialSystem gen_minors();

// Generator by name: cyclic, nbody, nvortex, minors (n ignored).
PolynomialSystem generate(std::string_view family, int n);

// Throws ParseError with the offending line number.
PolynomialSystem parse_system(std::string_view text);
std::string format_system(const PolynomialSystem& sys);

}  // namespace prevariety
