#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "homlin/common.hpp"
#include "homlin/poset.hpp"

namespace homlin {

enum class ArrFamily {
    braid,                // x_i - x_j = 0 in R^n
    linial,               // x_i - x_j = 1 in R^n (affine)
    homogenized_linial,   // x_i - x_j = y_i over 1 <= i < j <= n+1 in R^(2n+2)
    typeB_homogenized,    // x_i +- x_j = y_i and x_i = y_i in R^(2n)
    dowling_homogenized,  // x_i - w^l x_j = y_i and x_i = y_i in C^(2n)
};
ArrFamily arr_family_from_string(const std::string& name);
std::string to_string(ArrFamily f);

/// Coefficient that is either an exact rational or rat * w^pow for the
/// distinguished root of unity w (rat is +-1 in every arrangement here).
struct SymCoef {
    Rat rat = 0;
    int omega_pow = -1; // < 0: plain rational
    static SymCoef rational(Rat r) { return SymCoef{std::move(r), -1}; }
    static SymCoef omega(int pow, int sign = 1) { return SymCoef{Rat(sign), pow}; }
    friend bool operator==(const SymCoef&, const SymCoef&) = default;
};

/// Hyperplane sum_i normal[i] x_i = constant with symbolic coefficients.
struct SymbolicHyperplane {
    std::vector<SymCoef> normal;
    SymCoef constant;
};

struct SymbolicArrangement {
    int dim = 0;
    int modulus = 1; // order of w occurring in the coefficients
    std::vector<SymbolicHyperplane> hyperplanes;
};

/// Build one of the named families; m is used only by dowling_homogenized.
SymbolicArrangement make_arrangement(ArrFamily family, int n, int m = 1);

/// One hyperplane per line: "c_1 ... c_d | c_0" with exact rationals "p/q"
/// and symbolic "w^l" (optionally "-w^l") coefficients.
std::string write_arrangement(const SymbolicArrangement& arr);
SymbolicArrangement parse_arrangement(std::istream& in, int modulus);

// ---------------------------------------------------------------------------
// Exact rational route
// ---------------------------------------------------------------------------

struct RationalHyperplane {
    std::vector<Rat> normal;
    Rat constant;
};

struct RationalArrangement {
    int dim = 0;
    std::vector<RationalHyperplane> hyperplanes;
};

/// ParameterError if a coefficient needs a root of unity of order >= 3.
RationalArrangement to_rational(const SymbolicArrangement& arr);

/// Affine flat in canonical form: the reduced row echelon system of its
/// defining equations (rows "a | c" meaning a.x = c).  Equal flats have
/// identical canonical rows.
struct AffineFlat {
    int dim = 0; // ambient dimension
    std::vector<std::vector<Rat>> rows;
    int codim() const { return static_cast<int>(rows.size()); }
    std::string key() const;
};

/// Intersection poset of a rational arrangement: all nonempty intersections
/// ordered by reverse inclusion, ambient space at the bottom, rank = codim.
/// hyperplane_flat[i] is the poset index of hyperplanes[i].
struct FlatPoset {
    std::vector<AffineFlat> elements;
    FinitePoset poset;
    std::vector<int> hyperplane_flat;
};

FlatPoset intersection_poset(const RationalArrangement& arr);

// ---------------------------------------------------------------------------
// Finite field route
// ---------------------------------------------------------------------------

/// Arithmetic in F_p for a small prime p.
struct PrimeField {
    uint32_t p;
    explicit PrimeField(uint32_t prime);
    uint32_t mul(uint32_t a, uint32_t b) const { return static_cast<uint64_t>(a) * b % p; }
    uint32_t add(uint32_t a, uint32_t b) const { return (a + b) % p; }
    uint32_t sub(uint32_t a, uint32_t b) const { return (a + p - b) % p; }
    uint32_t pow(uint32_t a, uint64_t e) const;
    uint32_t inv(uint32_t a) const;
    /// Element of multiplicative order exactly m (deterministic choice);
    /// nullopt when p != 1 (mod m).
    std::optional<uint32_t> root_of_unity(int m) const;
    uint32_t from_rat(const Rat& r) const;
};

struct ModArrangement {
    uint32_t p = 0;
    int dim = 0;
    // row layout: normal coefficients then the constant
    std::vector<std::vector<uint32_t>> rows;
};

/// Reduce the arrangement mod q, sending w to a chosen root of unity of
/// order modulus (ParameterError when q is unsuitable).
ModArrangement resolve_mod(const SymbolicArrangement& arr, uint32_t q);

/// #{p in F_q^d : p lies on no hyperplane}, by direct enumeration with the
/// last coordinate handled in one pass.  Guarded by max_points unless forced.
Int finite_field_count(const SymbolicArrangement& arr, uint32_t q,
                       double max_points = 2.5e8, bool force = false);

} // namespace homlin
