#include "rwl/series.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "rwl/twocycles.hpp"

namespace rwl::series {

namespace {

// Dense (D+1)^3 accumulator for truncated arithmetic.
class DenseCube {
public:
    explicit DenseCube(int max_degree)
        : side_(max_degree + 1)
        , cells_(static_cast<std::size_t>(side_) * side_ * side_)
    {
    }

    mpz_class& at(const Exponent& e)
    {
        return cells_[(static_cast<std::size_t>(e[0]) * side_ + e[1]) * side_ + e[2]];
    }

    SignedPoly3 collect(int max_degree) const
    {
        SignedPoly3 out;
        for (int i = 0; i < side_; ++i) {
            for (int j = 0; i + j < side_; ++j) {
                for (int k = 0; i + j + k <= max_degree; ++k) {
                    const auto& c = cells_[(static_cast<std::size_t>(i) * side_ + j) * side_ + k];
                    if (c != 0) {
                        out.add_term({i, j, k}, c);
                    }
                }
            }
        }
        return out;
    }

private:
    int side_;
    std::vector<mpz_class> cells_;
};

class Parser {
public:
    explicit Parser(std::string_view text)
        : text_(text)
    {
    }

    SignedPoly3 parse()
    {
        SignedPoly3 p = expr();
        skip();
        if (pos_ != text_.size()) {
            fail("unexpected character");
        }
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek()
    {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    SignedPoly3 expr()
    {
        SignedPoly3 acc;
        bool negate = false;
        char c = peek();
        if (c == '+' || c == '-') {
            negate = (c == '-');
            ++pos_;
        }
        acc = term();
        if (negate) {
            acc = -acc;
        }
        for (c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            if (c == '+') {
                acc += term();
            } else {
                acc -= term();
            }
        }
        return acc;
    }

    static bool starts_factor(char c)
    {
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == 'z' || c == '(';
    }

    SignedPoly3 term()
    {
        SignedPoly3 acc = factor();
        while (starts_factor(peek())) {
            acc = acc * factor();
        }
        return acc;
    }

    SignedPoly3 factor()
    {
        SignedPoly3 base = primary();
        if (peek() == '^') {
            ++pos_;
            skip();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            if (start == pos_ || pos_ - start > 4) {
                fail("bad exponent");
            }
            base = base.pow(std::stoi(std::string(text_.substr(start, pos_ - start))));
        }
        return base;
    }

    SignedPoly3 primary()
    {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            return SignedPoly3::constant(mpz_class(std::string(text_.substr(start, pos_ - start))));
        }
        if (c == 'x' || c == 'y' || c == 'z') {
            ++pos_;
            Exponent e{0, 0, 0};
            e[c - 'x'] = 1;
            return SignedPoly3::monomial(1, e);
        }
        if (c == '(') {
            ++pos_;
            SignedPoly3 inner = expr();
            if (peek() != ')') {
                fail("expected ')'");
            }
            ++pos_;
            return inner;
        }
        fail(c == '\0' ? "unexpected end of input" : "unexpected character");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

SignedPoly3 linear(int c0, int cx, int cy, int cz)
{
    SignedPoly3 p;
    p.add_term({0, 0, 0}, c0);
    p.add_term({1, 0, 0}, cx);
    p.add_term({0, 1, 0}, cy);
    p.add_term({0, 0, 1}, cz);
    return p;
}

constexpr std::string_view kVerbatimF = R"(13+360y^4-96y+292y^2-456y^3-112y^5
+8(56y^3-100y^2+64y-15)(x^5+z^5)
-4(480y^5-2056y^4+3336y^3-2690y^2+1103y-185)xz
+4xz(672y^5-3544y^4+6756y^3-6238y^2+2885y-541)(x+z)
-8xz(160y^5-1304y^4+3204y^3-3520y^2+1864y-393)(x^2+z^2)
-8(384y^5-2592y^4+5960y^3-6436y^2+3418y-727)x^2z^2
-8xz(320y^4-1320y^3+1868y^2-1168y+281)(x^3+z^3)
+16x^2z^2(64y^5-752y^4+2360y^3-3140y^2+1955y-475)(x+z)
-16xz(80y^3-176y^2+138y-39)(x^4+z^4)
+64x^2z^2(32y^4-190y^3+345y^2-262y+74)(x^2+z^2)
+32(128y^4-696y^3+1244y^2-944y+267)x^3z^3
+64x^2z^2(16y^3-50y^2+50y-17)(x^3+z^3)
+128x^3z^3(32y^3-99y^2+98y-33)(x+z)
128x^3z^3(8y^2-12y+5)(x+z)^2
+(496y^5-1824y^4+2596y^3-1852y^2+675y-101)(x+z)
-4(200y^5-892y^4+1470y^3-1183y^2+479y-79)(x^2+z^2)
+4(112y^5-760y^4+1584y^3-1490y^2+679y-124)(x^3+z^3)
+4(224y^4-760y^3+900y^2-474y+97)(x^4+z^4))";

constexpr std::string_view kCorrectedF = R"(13+360y^4-96y+292y^2-456y^3-112y^5
+8(56y^3-100y^2+64y-15)(x^5+z^5)
-4(480y^5-2056y^4+3336y^3-2690y^2+1103y-185)xz
+4xz(672y^5-3544y^4+6756y^3-6238y^2+2885y-541)(x+z)
-8xz(160y^5-1304y^4+3204y^3-3520y^2+1864y-393)(x^2+z^2)
-8(384y^5-2592y^4+5960y^3-6436y^2+3418y-727)x^2z^2
-8xz(320y^4-1320y^3+1868y^2-1168y+281)(x^3+z^3)
+16x^2z^2(64y^5-752y^4+2360y^3-3140y^2+1955y-475)(x+z)
-16xz(80y^3-176y^2+138y-39)(x^4+z^4)
+64x^2z^2(32y^4-190y^3+345y^2-262y+74)(x^2+z^2)
+32(128y^4-696y^3+1244y^2-944y+267)x^3z^3
+64x^2z^2(16y^3-50y^2+50y-17)(x^3+z^3)
+128x^3z^3(32y^3-99y^2+98y-33)(x+z)
+128x^3z^3(8y^2-12y+5)(x+z)^2
+(496y^5-1824y^4+2596y^3-1852y^2+675y-101)(x+z)
-4(200y^5-892y^4+1470y^3-1183y^2+479y-79)(x^2+z^2)
+4(112y^5-760y^4+1584y^3-1490y^2+679y-124)(x^3+z^3)
+4(224y^4-760y^3+900y^2-474y+97)(x^4+z^4))";

} // namespace

int total_degree(const Exponent& e)
{
    return e[0] + e[1] + e[2];
}

bool DegLex::operator()(const Exponent& a, const Exponent& b) const
{
    int da = total_degree(a);
    int db = total_degree(b);
    if (da != db) {
        return da < db;
    }
    return a < b;
}

SignedPoly3 SignedPoly3::constant(const SignedCoefficient& c)
{
    return monomial(c, {0, 0, 0});
}

SignedPoly3 SignedPoly3::monomial(const SignedCoefficient& c, Exponent e)
{
    SignedPoly3 p;
    p.add_term(e, c);
    return p;
}

void SignedPoly3::add_term(Exponent e, const SignedCoefficient& c)
{
    if (e[0] < 0 || e[1] < 0 || e[2] < 0) {
        throw Error("negative exponent");
    }
    if (c == 0 || (truncation_ && total_degree(e) > *truncation_)) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

SignedCoefficient SignedPoly3::coefficient(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? SignedCoefficient(0) : it->second;
}

int SignedPoly3::degree() const
{
    return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first);
}

SignedPoly3 SignedPoly3::truncated(int max_degree) const
{
    SignedPoly3 out;
    out.truncation_ = max_degree;
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) > max_degree) {
            break;
        }
        out.terms_.emplace(e, c);
    }
    return out;
}

SignedPoly3 SignedPoly3::swap_xz() const
{
    SignedPoly3 out;
    out.truncation_ = truncation_;
    for (const auto& [e, c] : terms_) {
        out.terms_.emplace(Exponent{e[2], e[1], e[0]}, c);
    }
    return out;
}

SignedPoly3 SignedPoly3::operator-() const
{
    SignedPoly3 out = *this;
    for (auto& [e, c] : out.terms_) {
        c = -c;
    }
    return out;
}

SignedPoly3& SignedPoly3::operator+=(const SignedPoly3& other)
{
    for (const auto& [e, c] : other.terms_) {
        add_term(e, c);
    }
    return *this;
}

SignedPoly3& SignedPoly3::operator-=(const SignedPoly3& other)
{
    for (const auto& [e, c] : other.terms_) {
        add_term(e, -c);
    }
    return *this;
}

SignedPoly3 multiply(const SignedPoly3& a, const SignedPoly3& b, int max_degree)
{
    const int cap = std::min(max_degree, a.degree() + b.degree());
    if (a.is_zero() || b.is_zero() || cap < 0) {
        SignedPoly3 zero;
        zero.truncation_ = max_degree;
        return zero;
    }
    DenseCube acc(cap);
    for (const auto& [ea, ca] : a.terms_) {
        const int da = total_degree(ea);
        if (da > cap) {
            break;
        }
        for (const auto& [eb, cb] : b.terms_) {
            if (da + total_degree(eb) > cap) {
                break;
            }
            mpz_addmul(acc.at({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}).get_mpz_t(), ca.get_mpz_t(),
                       cb.get_mpz_t());
        }
    }
    SignedPoly3 out = acc.collect(cap);
    out.truncation_ = max_degree;
    return out;
}

SignedPoly3 operator*(const SignedPoly3& a, const SignedPoly3& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    SignedPoly3 out = multiply(a, b, a.degree() + b.degree());
    out.truncation_.reset();
    return out;
}

SignedPoly3 SignedPoly3::pow(int e) const
{
    if (e < 0) {
        throw Error("negative power");
    }
    SignedPoly3 r = constant(1);
    for (int i = 0; i < e; ++i) {
        r = r * *this;
    }
    return r;
}

std::string to_string(const SignedPoly3& p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool unit = (abs(c) == 1) && total_degree(e) > 0;
        if (c < 0) {
            out << (first ? "-" : " - ");
        } else if (!first) {
            out << " + ";
        }
        if (!unit) {
            out << mpz_class(abs(c)).get_str();
        }
        const char* names = "xyz";
        for (int v = 0; v < 3; ++v) {
            if (e[v] > 0) {
                out << names[v];
                if (e[v] > 1) {
                    out << '^' << e[v];
                }
            }
        }
        first = false;
    }
    return out.str();
}

SignedPoly3 parse_poly3(std::string_view text)
{
    return Parser(text).parse();
}

SignedPoly3 series_inverse(const SignedPoly3& p, int max_degree)
{
    if (p.coefficient({0, 0, 0}) != 1) {
        throw Error("denominator factor must have constant term 1");
    }
    if (max_degree < 0) {
        return SignedPoly3{}.truncated(max_degree);
    }
    // q = 1 - sum_{t != 0} p_t x^t q, filled in by increasing total degree.
    std::vector<std::pair<Exponent, SignedCoefficient>> tail;
    for (const auto& [e, c] : p.terms()) {
        if (total_degree(e) > 0 && total_degree(e) <= max_degree) {
            tail.emplace_back(e, c);
        }
    }
    DenseCube q(max_degree);
    q.at({0, 0, 0}) = 1;
    for (int d = 1; d <= max_degree; ++d) {
        for (int i = d; i >= 0; --i) {
            for (int j = d - i; j >= 0; --j) {
                const Exponent e{i, j, d - i - j};
                mpz_class& cell = q.at(e);
                for (const auto& [t, c] : tail) {
                    if (t[0] <= e[0] && t[1] <= e[1] && t[2] <= e[2]) {
                        mpz_submul(cell.get_mpz_t(), c.get_mpz_t(),
                                   q.at({e[0] - t[0], e[1] - t[1], e[2] - t[2]}).get_mpz_t());
                    }
                }
            }
        }
    }
    return q.collect(max_degree).truncated(max_degree);
}

SignedPoly3 expand_rational(const RationalGF& gf, int max_degree)
{
    if (max_degree < 0) {
        throw Error("degree bound must be nonnegative");
    }
    for (const auto& [factor, multiplicity] : gf.denominator_factors) {
        if (factor.coefficient({0, 0, 0}) != 1) {
            throw Error("denominator factor must have constant term 1");
        }
        if (multiplicity < 0) {
            throw Error("negative multiplicity");
        }
    }
    SignedPoly3 result = gf.numerator.truncated(max_degree);
    for (const auto& [factor, multiplicity] : gf.denominator_factors) {
        SignedPoly3 powered = SignedPoly3::constant(1);
        for (int i = 0; i < multiplicity; ++i) {
            powered = multiply(powered, factor, max_degree);
        }
        result = multiply(result, series_inverse(powered, max_degree), max_degree);
    }
    return result;
}

SignedCoefficient coefficient(const SignedPoly3& p, const Exponent& e)
{
    return p.coefficient(e);
}

std::string_view f_numerator_verbatim_text()
{
    return kVerbatimF;
}

std::string_view f_numerator_text()
{
    return kCorrectedF;
}

SignedPoly3 f_numerator()
{
    static const SignedPoly3 f = parse_poly3(kCorrectedF);
    return f;
}

RationalGF two_cycle_gf()
{
    RationalGF gf;
    gf.numerator = SignedPoly3::monomial(16, {2, 2, 2}) * f_numerator();
    gf.denominator_factors = {
        {linear(1, -2, 0, 0), 3},
        {linear(1, 0, -2, 0), 3},
        {linear(1, 0, 0, -2), 3},
        {linear(1, -2, -2, 0), 1},
        {linear(1, -2, 0, -2), 1},
        {linear(1, 0, -2, -2), 1},
        {linear(1, -1, -1, -1), 1},
    };
    return gf;
}

SignedPoly3 full_denominator()
{
    SignedPoly3 d = SignedPoly3::constant(1);
    for (const auto& [factor, multiplicity] : two_cycle_gf().denominator_factors) {
        d = d * factor.pow(multiplicity);
    }
    return d;
}

SignedPoly3 two_cycle_counts(int max_degree)
{
    SignedPoly3 g;
    for (int a1 = 2; a1 <= max_degree - 4; ++a1) {
        for (int a2 = 2; a1 + a2 <= max_degree - 2; ++a2) {
            for (int a3 = 2; a1 + a2 + a3 <= max_degree; ++a3) {
                g.add_term({a1, a2, a3}, twocycles::count_two_cycles(a1, a2, a3));
            }
        }
    }
    return g;
}

SignedPoly3 recover_numerator(int max_degree, int margin)
{
    if (margin < 1 || max_degree < 6 + margin) {
        throw Error("numerator recovery failed: degree bound too small");
    }
    SignedPoly3 product = multiply(two_cycle_counts(max_degree), full_denominator(), max_degree);
    SignedPoly3 f;
    for (const auto& [e, c] : product.terms()) {
        if (total_degree(e) > max_degree - margin) {
            throw Error("numerator recovery failed: nonzero terms at degree " + std::to_string(total_degree(e)));
        }
        if (e[0] < 2 || e[1] < 2 || e[2] < 2 || !mpz_divisible_ui_p(c.get_mpz_t(), 16)) {
            throw Error("numerator recovery failed: term not divisible by 16x^2y^2z^2");
        }
        f.add_term({e[0] - 2, e[1] - 2, e[2] - 2}, c / 16);
    }
    return f;
}

std::vector<TermDiff> diff(const SignedPoly3& expected, const SignedPoly3& actual)
{
    std::map<Exponent, TermDiff, DegLex> rows;
    for (const auto& [e, c] : expected.terms()) {
        rows[e] = {e, c, actual.coefficient(e)};
    }
    for (const auto& [e, c] : actual.terms()) {
        if (!rows.count(e)) {
            rows[e] = {e, expected.coefficient(e), c};
        }
    }
    std::vector<TermDiff> out;
    for (auto& [e, row] : rows) {
        if (row.expected != row.actual) {
            out.push_back(std::move(row));
        }
    }
    return out;
}

std::string to_csv(const SignedPoly3& p)
{
    std::ostringstream out;
    out << "a1,a2,a3,coefficient\n";
    for (const auto& [e, c] : p.terms()) {
        out << e[0] << ',' << e[1] << ',' << e[2] << ',' << c.get_str() << '\n';
    }
    return out.str();
}

} // namespace rwl::series
