#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "arak/qfield.hpp"

namespace arak {

/// 2x2 rational matrix, column-major: {m00, m10, m01, m11}. Columns are
/// elements of F written over {1, omega}.
using Mat2 = std::array<mpq_class, 4>;

/// Fractional ideal of a real quadratic field. Stored in Hermite normal form:
/// columns (a, 0) and (b, c) with a, c > 0 and 0 <= b < a, so that
/// I = a*Z + (b + c*omega)*Z. HNF is canonical, so equality is matrix equality.
class FracIdeal {
public:
    const QuadField& field() const { return field_; }
    const Mat2& mat() const { return mat_; }
    FieldElem col(int j) const { return {mat_[2 * j], mat_[2 * j + 1]}; }
    std::array<FieldElem, 2> basis() const { return {col(0), col(1)}; }

    /// N(I) = |det| relative to O_F.
    mpq_class norm() const { return mat_[0] * mat_[3]; }

    /// Integer coordinates of e over the HNF basis, if e lies in I.
    std::optional<std::pair<mpz_class, mpz_class>> coordinates(const FieldElem& e) const;
    bool contains(const FieldElem& e) const { return coordinates(e).has_value(); }
    bool contains_one() const { return contains({1, 0}); }

    friend bool operator==(const FracIdeal& I, const FracIdeal& J) {
        return I.field_ == J.field_ && I.mat_ == J.mat_;
    }

private:
    friend FracIdeal hnf_span(const QuadField& field, const std::vector<FieldElem>& gens, bool check_module);
    QuadField field_;
    Mat2 mat_;
};

/// Z-span of gens in HNF. Throws Singular if the span has rank < 2 and, when
/// check_module is set, NotAnIdeal if the span is not omega-stable.
FracIdeal hnf_span(const QuadField& field, const std::vector<FieldElem>& gens, bool check_module = true);

/// Throws Singular (det = 0) or NotAnIdeal.
FracIdeal ideal_from_matrix(const QuadField& field, const Mat2& m);

FracIdeal unit_ideal(const QuadField& field);
/// O_F-ideal generated by the given elements.
FracIdeal ideal_generated_by(const QuadField& field, const std::vector<FieldElem>& gens);
FracIdeal scale(const FracIdeal& I, const mpq_class& q);
FracIdeal conjugate(const FracIdeal& I);
FracIdeal multiply(const FracIdeal& I, const FracIdeal& J);
/// I^{-1} = conj(I) / N(I).
FracIdeal ideal_inverse(const FracIdeal& I);

/// N(I)^{-1} <= C^2 sqrt(Delta_F), decided as N(I)^{-2} <= C^4 Delta_F.
bool norm_bound_check(const FracIdeal& I, const mpq_class& C);

struct PrimitivityEvidence {
    std::array<mpz_class, 4> coeffs;  // Z-basis of I^{-1} over {1, omega}, column-major
    mpz_class gcd_all;
};

/// Throws OneNotInIdeal when 1 is not in I.
std::pair<bool, PrimitivityEvidence> is_primitive_one(const FracIdeal& I);

/// gcd of the integer coordinates of elements of O_F over {1, omega}. Throws
/// OutOfRange when some coordinate is not integral.
mpz_class integer_content(const std::vector<FieldElem>& elems);

} // namespace arak
