#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fermi/fock.hpp"

namespace fermi::omega {

enum class Family : std::uint8_t { X = 0, Y = 1, Z = 2 };

/// A formal variable: either an amplitude of the (3, 3) sector (id = basis
/// index) or an auxiliary form variable (family, spin, copy tag). Copy tags
/// keep the primed variable sets of a transvection distinct.
struct Symbol {
    enum class Kind : std::uint8_t { Amplitude, Auxiliary };
    Kind kind;
    std::uint8_t family = 0;  // auxiliary only
    std::uint8_t spin = 0;    // auxiliary only: 0 = up, 1 = down
    std::uint32_t id = 0;     // amplitude: basis index; auxiliary: copy tag
    auto operator<=>(const Symbol&) const = default;

    static Symbol amplitude(std::uint32_t basis_index) {
        return Symbol{Kind::Amplitude, 0, 0, basis_index};
    }
    static Symbol auxiliary(Family f, int spin, std::uint32_t copy) {
        return Symbol{Kind::Auxiliary, static_cast<std::uint8_t>(f),
                      static_cast<std::uint8_t>(spin), copy};
    }
};

using Monomial = std::map<Symbol, int>;  // symbol -> positive exponent

class SparsePolynomial {
public:
    SparsePolynomial() = default;
    static SparsePolynomial constant(Complex c);
    static SparsePolynomial variable(const Symbol& s);

    void add_term(const Monomial& m, Complex coeff);
    const std::map<Monomial, Complex>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t n_terms() const { return terms_.size(); }
    int degree() const;  // total degree; 0 for the zero polynomial

    SparsePolynomial operator+(const SparsePolynomial& other) const;
    SparsePolynomial operator-(const SparsePolynomial& other) const;
    SparsePolynomial operator*(const SparsePolynomial& other) const;
    SparsePolynomial scaled(Complex c) const;

    SparsePolynomial differentiate(const Symbol& s) const;
    /// Renames every auxiliary symbol of the family to the given copy tag.
    SparsePolynomial with_copy(Family f, std::uint32_t copy) const;
    bool has_auxiliary() const;

private:
    std::map<Monomial, Complex> terms_;
};

struct FormCollection {
    SparsePolynomial M;  // trilinear, families (x, y, z)
    SparsePolynomial m12, m13, m21, m23, m31, m32;  // linear
    std::shared_ptr<const Sector> sector;           // (3, 3)
};

/// The trilinear form over the single-occupancy amplitudes and the six linear
/// forms over the paired amplitudes (m21: m_{i,double,empty}, m31:
/// m_{i,empty,double}, m12: m_{double,j,empty}, m32: m_{empty,j,double},
/// m23: m_{empty,double,k}, m13: m_{double,empty,k}).
const FormCollection& forms();

/// Omega-process transvection of two forms in the given family: relabels the
/// family variables of a and b to disjoint copies, multiplies, applies
/// Omega_w = d2/dw'up dw''down - d2/dw''up dw'down, and substitutes back.
SparsePolynomial transvect(const SparsePolynomial& a, const SparsePolynomial& b, Family f);

enum class Base { M, m12, m13, m21, m23, m31, m32 };

struct FactorRef {
    Base base;
    std::string indices;  // one letter per slot; M slots are (x, y, z)
};

struct TransvectionRecipe {
    std::vector<FactorRef> factors;
    Complex coeff = 1.0;
};

/// Fully contracts the recipe. Every index letter must appear exactly twice,
/// on slots of the same family; a dangling letter is a domain error.
SparsePolynomial evaluate_recipe(const TransvectionRecipe& recipe);

enum class Named { I1, I2, IBC, IAC, IAB, IABC1, IABC2, IA1, IA2, IA2Alt, IAL };

const TransvectionRecipe& named_recipe(Named which);
const SparsePolynomial& named_polynomial(Named which);  // cached
std::string named_label(Named which);
std::vector<Named> all_named();

/// Substitutes the state's amplitudes; domain error on residual auxiliaries.
Complex evaluate_at(const SparsePolynomial& poly, const StateVector& state);

/// Fits poly = c * reference over random (3, 3) states; throws if the
/// reference vanishes on every sample or the ratio is inconsistent.
Complex proportionality_constant(const SparsePolynomial& poly,
                                 const std::function<Complex(const StateVector&)>& reference,
                                 int n_samples, std::uint64_t seed);

/// Numerical rank of the evaluation matrix of the polynomials at random states.
int rank_of_set(const std::vector<SparsePolynomial>& polys, int n_samples,
                std::uint64_t seed);

/// Each monomial must carry equal counts of the four occupation tags.
bool is_g815_admissible(const SparsePolynomial& poly);

/// Fixed enumeration of degree-16 recipes (4 trilinear + 12 linear factors).
std::vector<TransvectionRecipe> degree16_candidates();

/// True if every degree-16 candidate lies in the span of the 24 degree-16
/// products of the seven generators (least-squares residual below 1e-6).
bool degree16_probe(int n_samples, std::uint64_t seed);

}  // namespace fermi::omega
