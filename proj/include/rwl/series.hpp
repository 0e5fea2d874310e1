#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rwl/bigmath.hpp"

namespace rwl::series {

using Exponent = std::array<int, 3>;

int total_degree(const Exponent& e);

// Total degree first, then lexicographic.
struct DegLex {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

// Sparse polynomial in x, y, z with exact integer coefficients. Zero
// coefficients are never stored. An optional truncation bound drops every
// term of higher total degree.
class SignedPoly3 {
public:
    using Terms = std::map<Exponent, SignedCoefficient, DegLex>;

    SignedPoly3() = default;
    static SignedPoly3 constant(const SignedCoefficient& c);
    static SignedPoly3 monomial(const SignedCoefficient& c, Exponent e);

    void add_term(Exponent e, const SignedCoefficient& c);
    SignedCoefficient coefficient(const Exponent& e) const;

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const; // -1 for the zero polynomial
    std::optional<int> truncation() const { return truncation_; }

    SignedPoly3 truncated(int max_degree) const;
    SignedPoly3 swap_xz() const;

    SignedPoly3 operator-() const;
    SignedPoly3& operator+=(const SignedPoly3& other);
    SignedPoly3& operator-=(const SignedPoly3& other);
    friend SignedPoly3 operator+(SignedPoly3 a, const SignedPoly3& b) { return a += b; }
    friend SignedPoly3 operator-(SignedPoly3 a, const SignedPoly3& b) { return a -= b; }
    friend SignedPoly3 operator*(const SignedPoly3& a, const SignedPoly3& b);
    friend bool operator==(const SignedPoly3& a, const SignedPoly3& b) { return a.terms_ == b.terms_; }

    // Truncated product; the result carries the bound.
    friend SignedPoly3 multiply(const SignedPoly3& a, const SignedPoly3& b, int max_degree);

    SignedPoly3 pow(int e) const;

private:
    Terms terms_;
    std::optional<int> truncation_;
};

std::string to_string(const SignedPoly3& p);

// Integers, x, y, z, +, -, ^ (nonnegative integer exponents), parentheses and
// implicit multiplication by juxtaposition.
SignedPoly3 parse_poly3(std::string_view text);

struct RationalGF {
    SignedPoly3 numerator;
    // Each factor must have constant term 1.
    std::vector<std::pair<SignedPoly3, int>> denominator_factors;
};

// 1/p truncated at total degree D; p must have constant term 1.
SignedPoly3 series_inverse(const SignedPoly3& p, int max_degree);

SignedPoly3 expand_rational(const RationalGF& gf, int max_degree);

SignedCoefficient coefficient(const SignedPoly3& p, const Exponent& e);

// Numerator polynomial of the two-cycle generating function, with the one
// missing '+' of the printed form restored.
SignedPoly3 f_numerator();
// The printed text as it stands; juxtaposition turns the missing '+' into a
// product.
std::string_view f_numerator_verbatim_text();
std::string_view f_numerator_text();

// 16 x^2 y^2 z^2 f / ((1-2x)^3 (1-2y)^3 (1-2z)^3 (1-2x-2y)(1-2x-2z)(1-2y-2z)(1-x-y-z))
RationalGF two_cycle_gf();

SignedPoly3 full_denominator();

// sum count_two_cycles(a) x^a1 y^a2 z^a3 over a1+a2+a3 <= D.
SignedPoly3 two_cycle_counts(int max_degree);

// Counts times the full denominator, divided by 16 x^2 y^2 z^2. Throws
// "numerator recovery failed" unless the truncated product vanishes in its
// top `margin` degree layers and is divisible by 16 x^2 y^2 z^2.
SignedPoly3 recover_numerator(int max_degree, int margin = 2);

struct TermDiff {
    Exponent exponent;
    SignedCoefficient expected; // from recovery
    SignedCoefficient actual;   // from the transcription
};

std::vector<TermDiff> diff(const SignedPoly3& expected, const SignedPoly3& actual);

// Header "a1,a2,a3,coefficient", rows in DegLex order.
std::string to_csv(const SignedPoly3& p);

} // namespace rwl::series
