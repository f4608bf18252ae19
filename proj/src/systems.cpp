#include "systems.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace prevariety {

namespace {

using Monomial = std::vector<long long>;
using Laurent = std::map<Monomial, long long>;

Support make_support(std::size_t dim, IntMatrix points) {
    std::set<IntVector, decltype(&lex_less)> seen(&lex_less);
    Support s;
    s.dim = dim;
    for (auto& p : points) {
        if (seen.insert(p).second) s.points.push_back(std::move(p));
    }
    return s;
}

Support support_of(const Laurent& f) {
    IntMatrix points;
    for (const auto& [m, c] : f) {
        if (c == 0) continue;
        IntVector p;
        p.reserve(m.size());
        for (long long e : m) {
            if (e < 0) throw std::logic_error("cleared polynomial has a negative exponent");
            p.emplace_back(e);
        }
        points.push_back(std::move(p));
    }
    return make_support(f.empty() ? 0 : f.begin()->first.size(), std::move(points));
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            Monomial m(ma.size());
            for (std::size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
            r[m] += ca * cb;
        }
    }
    std::erase_if(r, [](const auto& t) { return t.second == 0; });
    return r;
}

Laurent& operator+=(Laurent& a, const Laurent& b) {
    for (const auto& [m, c] : b) a[m] += c;
    std::erase_if(a, [](const auto& t) { return t.second == 0; });
    return a;
}

Laurent monomial(std::size_t dim, std::size_t var, long long exp, long long coef = 1) {
    Monomial m(dim, 0);
    m[var] = exp;
    return Laurent{{m, coef}};
}

Laurent constant(std::size_t dim, long long c) {
    return Laurent{{Monomial(dim, 0), c}};
}

// Pairwise-distance equations for equal masses (e = 3) or vortices (e = 2):
// sum_k (x_ik^-e - 1)(x_jk^2 - x_ik^2 - x_ij^2) + (x_jk^-e - 1)(x_ik^2 - x_jk^2 - x_ij^2)
// with x_kk = 0 and (x_kk^-e - 1) = 0, times prod_{k != i} x_ik^e prod_{k != j} x_jk^e.
PolynomialSystem albouy_chenciner(int n, long long e, const std::string& family) {
    if (n < 3) throw std::invalid_argument(family + " needs n >= 3");
    const auto un = static_cast<std::size_t>(n);
    const std::size_t dim = un * (un - 1) / 2;
    std::vector<std::vector<std::size_t>> index(un, std::vector<std::size_t>(un, 0));
    PolynomialSystem sys;
    sys.dim = dim;
    for (std::size_t i = 0, v = 0; i < un; ++i) {
        for (std::size_t j = i + 1; j < un; ++j, ++v) {
            index[i][j] = index[j][i] = v;
            sys.names.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
        }
    }
    // Squared distance x_ab^2 as a polynomial; zero when a == b.
    auto sq = [&](std::size_t a, std::size_t b) {
        return a == b ? Laurent{} : monomial(dim, index[a][b], 2);
    };
    auto singular = [&](std::size_t a, std::size_t b) {
        if (a == b) return Laurent{};
        Laurent f = monomial(dim, index[a][b], -e);
        f += constant(dim, -1);
        return f;
    };
    auto neg = [](Laurent f) {
        for (auto& t : f) t.second = -t.second;
        return f;
    };
    for (std::size_t i = 0; i < un; ++i) {
        for (std::size_t j = i + 1; j < un; ++j) {
            Laurent sum;
            for (std::size_t k = 0; k < un; ++k) {
                Laurent a = sq(j, k);
                a += neg(sq(i, k));
                a += neg(sq(i, j));
                Laurent b = sq(i, k);
                b += neg(sq(j, k));
                b += neg(sq(i, j));
                sum += singular(i, k) * a;
                sum += singular(j, k) * b;
            }
            Laurent clear = constant(dim, 1);
            for (std::size_t k = 0; k < un; ++k) {
                if (k != i) clear = clear * monomial(dim, index[i][k], e);
                if (k != j) clear = clear * monomial(dim, index[j][k], e);
            }
            sys.supports.push_back(support_of(sum * clear));
        }
    }
    sys.label = family + "-" + std::to_string(n);
    return sys;
}

std::vector<std::string> default_names(std::size_t dim) {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < dim; ++k) names.push_back("x" + std::to_string(k));
    return names;
}

}  // namespace

PolynomialSystem gen_cyclic(int n) {
    if (n < 2) throw std::invalid_argument("cyclic needs n >= 2");
    const auto un = static_cast<std::size_t>(n);
    PolynomialSystem sys;
    sys.dim = un;
    sys.names = default_names(un);
    for (std::size_t deg = 1; deg < un; ++deg) {
        IntMatrix points;
        for (std::size_t start = 0; start < un; ++start) {
            IntVector p = zero_vector(un);
            for (std::size_t k = 0; k < deg; ++k) p[(start + k) % un] = Integer(1);
            points.push_back(std::move(p));
        }
        sys.supports.push_back(make_support(un, std::move(points)));
    }
    IntVector ones(un, Integer(1));
    sys.supports.push_back(make_support(un, {ones, zero_vector(un)}));
    sys.label = "cyclic-" + std::to_string(n);
    return sys;
}

PolynomialSystem gen_nbody(int n) {
    return albouy_chenciner(n, 3, "nbody");
}

PolynomialSystem gen_nvortex(int n) {
    return albouy_chenciner(n, 2, "nvortex");
}

PolynomialSystem gen_minors() {
    constexpr std::size_t size = 5;
    constexpr std::size_t dim = size * size;
    PolynomialSystem sys;
    sys.dim = dim;
    for (std::size_t r = 0; r < size; ++r) {
        for (std::size_t c = 0; c < size; ++c) {
            sys.names.push_back("x" + std::to_string(r + 1) + "_" + std::to_string(c + 1));
        }
    }
    for (std::size_t skip_row = size; skip_row-- > 0;) {
        for (std::size_t skip_col = size; skip_col-- > 0;) {
            std::vector<std::size_t> rows, cols;
            for (std::size_t k = 0; k < size; ++k) {
                if (k != skip_row) rows.push_back(k);
                if (k != skip_col) cols.push_back(k);
            }
            IntMatrix points;
            std::vector<std::size_t> perm = {0, 1, 2, 3};
            do {
                IntVector p = zero_vector(dim);
                for (std::size_t k = 0; k < 4; ++k) p[rows[k] * size + cols[perm[k]]] = Integer(1);
                points.push_back(std::move(p));
            } while (std::next_permutation(perm.begin(), perm.end()));
            sys.supports.push_back(make_support(dim, std::move(points)));
        }
    }
    sys.label = "minors-4x4-of-5x5";
    return sys;
}

PolynomialSystem generate(std::string_view family, int n) {
    if (family == "cyclic") return gen_cyclic(n);
    if (family == "nbody") return gen_nbody(n);
    if (family == "nvortex") return gen_nvortex(n);
    if (family == "minors") return gen_minors();
    throw std::invalid_argument("unknown system family: " + std::string(family));
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class LineCursor {
public:
    LineCursor(std::string_view s, std::size_t line) : s_(s), line_(line) {}

    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_space();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_space();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    // Optionally signed decimal integer.
    Integer integer() {
        skip_space();
        const std::size_t begin = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) fail("expected an integer");
        std::string_view tok = s_.substr(begin, pos_ - begin);
        if (tok.front() == '+') tok.remove_prefix(1);
        return Integer(tok);
    }
    std::string_view identifier() {
        skip_space();
        const std::size_t begin = pos_;
        if (pos_ >= s_.size() || !is_ident_start(s_[pos_])) fail("expected a variable name");
        while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
        return s_.substr(begin, pos_ - begin);
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, msg); }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    std::size_t line_;
};

IntMatrix parse_tuples(LineCursor& cur, std::size_t dim) {
    IntMatrix points;
    while (!cur.done()) {
        cur.expect('(');
        IntVector p;
        if (!cur.accept(')')) {
            do {
                Integer e = cur.integer();
                if (e.sign() < 0) cur.fail("negative exponent");
                p.push_back(std::move(e));
            } while (cur.accept(','));
            cur.expect(')');
        }
        if (p.size() != dim) {
            cur.fail("exponent vector has " + std::to_string(p.size()) + " entries, expected " +
                     std::to_string(dim));
        }
        points.push_back(std::move(p));
    }
    return points;
}

IntMatrix parse_symbolic(LineCursor& cur, const std::vector<std::string>& names) {
    IntMatrix points;
    const std::size_t dim = names.size();
    bool first = true;
    while (!cur.done()) {
        // Coefficients and their signs do not affect the support.
        if (!cur.accept('-') && !cur.accept('+') && !first) {
            cur.fail("expected '+' or '-' between terms");
        }
        first = false;
        IntVector p = zero_vector(dim);
        bool zero = false;
        do {
            const char c = cur.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                if (cur.integer().is_zero()) zero = true;
                continue;
            }
            const std::string_view name = cur.identifier();
            const auto it = std::find(names.begin(), names.end(), name);
            if (it == names.end()) cur.fail("unknown variable '" + std::string(name) + "'");
            Integer e(1);
            if (cur.accept('^')) {
                e = cur.integer();
                if (e.sign() < 0) cur.fail("negative exponent");
            }
            p[static_cast<std::size_t>(it - names.begin())] += e;
        } while (cur.accept('*'));
        if (!zero) points.push_back(std::move(p));
    }
    return points;
}

}  // namespace

PolynomialSystem parse_system(std::string_view text) {
    PolynomialSystem sys;
    bool have_header = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) throw ParseError(line_no, "expected 'key: value'");
        const std::string_view key = trim(line.substr(0, colon));
        LineCursor cur(line.substr(colon + 1), line_no);
        if (key == "variables") {
            if (have_header) throw ParseError(line_no, "duplicate variables line");
            have_header = true;
            if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
                const Integer n = cur.integer();
                if (!cur.done()) cur.fail("trailing text after variable count");
                if (n.sign() <= 0 || !n.is_small() || n.small_value() > 1'000'000) {
                    cur.fail("variable count must be positive");
                }
                sys.dim = static_cast<std::size_t>(n.small_value());
                sys.names = default_names(sys.dim);
            } else {
                while (!cur.done()) {
                    std::string name(cur.identifier());
                    if (std::find(sys.names.begin(), sys.names.end(), name) != sys.names.end()) {
                        cur.fail("duplicate variable '" + name + "'");
                    }
                    sys.names.push_back(std::move(name));
                }
                if (sys.names.empty()) cur.fail("no variables");
                sys.dim = sys.names.size();
            }
        } else if (key == "poly") {
            if (!have_header) throw ParseError(line_no, "poly line before variables line");
            IntMatrix points = cur.peek() == '(' ? parse_tuples(cur, sys.dim)
                                                 : parse_symbolic(cur, sys.names);
            if (points.empty()) throw ParseError(line_no, "polynomial has an empty support");
            sys.supports.push_back(make_support(sys.dim, std::move(points)));
        } else {
            throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
        }
    }
    if (!have_header) throw ParseError(line_no, "missing variables line");
    if (sys.supports.empty()) throw ParseError(line_no, "no polynomials");
    sys.label = "input";
    return sys;
}

std::string format_system(const PolynomialSystem& sys) {
    std::ostringstream out;
    if (!sys.label.empty()) out << "# " << sys.label << '\n';
    out << "variables:";
    for (const auto& n : sys.names) out << ' ' << n;
    out << '\n';
    for (const auto& s : sys.supports) {
        out << "poly:";
        for (const auto& p : s.points) out << ' ' << format_vector(p);
        out << '\n';
    }
    return out.str();
}

}  // namespace prevariety
