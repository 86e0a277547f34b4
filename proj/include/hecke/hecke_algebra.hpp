#ifndef HECKE_HECKE_ALGEBRA_HPP
#define HECKE_HECKE_ALGEBRA_HPP

#include <optional>
#include <vector>

#include "hecke/module_space.hpp"

namespace hecke {

/// Element of the Hecke algebra in its canonical incarnation: a rational
/// valued function on the double-coset space, stored densely per block (the
/// value on a block is the constant value of the function on that whole
/// double coset).
class HeckeElement {
 public:
  HeckeElement() = default;
  explicit HeckeElement(const PairContext& ctx)
      : ctx_(&ctx), coeffs_(static_cast<size_t>(ctx.num_double_cosets())) {}

  static HeckeElement zero(const PairContext& ctx) { return HeckeElement(ctx); }
  /// The multiplicative unit: indicator of H with value 1.
  static HeckeElement unit(const PairContext& ctx);
  /// sigma_x as a function: (1/R(x)) * indicator of HxH.
  static HeckeElement sigma(const PairContext& ctx, int x);

  const PairContext& context() const { return *ctx_; }
  int size() const { return static_cast<int>(coeffs_.size()); }

  Rational& operator[](int block) { return coeffs_[static_cast<size_t>(block)]; }
  const Rational& operator[](int block) const { return coeffs_[static_cast<size_t>(block)]; }
  /// Value at an arbitrary group element (through its double coset).
  Rational at(int g) const { return coeffs_[static_cast<size_t>(ctx_->double_block(g))]; }

  const RationalVector& coeffs() const { return coeffs_; }

  bool is_zero() const { return vec_is_zero(coeffs_); }
  bool operator==(const HeckeElement& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const HeckeElement& o) const { return !(*this == o); }

  HeckeElement operator+(const HeckeElement& o) const;
  HeckeElement operator-(const HeckeElement& o) const;
  HeckeElement operator*(const Rational& s) const;

 private:
  const PairContext* ctx_ = nullptr;
  RationalVector coeffs_;
};

/// Operator -> function dictionary: f_a(t) = coefficient of delta_{Ht} in
/// a(delta_H). Throws ValidationError if the coefficients are not constant on
/// double cosets (the operator is then not in the Hecke algebra).
HeckeElement from_operator(const ModuleOperator& a);

/// Function -> operator dictionary: matrix[t][s] = f(t s^{-1}).
ModuleOperator to_operator(const HeckeElement& f);

/// Convolution (f*g)(t) = sum over right cosets Hs of f(t s^{-1}) g(s).
HeckeElement convolve(const HeckeElement& f, const HeckeElement& g);

/// {sigma_x : x a double-coset rep}; linear independence is verified by an
/// exact rank computation.
std::vector<HeckeElement> hecke_basis(const PairContext& ctx);

/// Delta-weighted involution f*(t) = Delta(t^{-1}) f(t^{-1}).
HeckeElement star(const HeckeElement& f);

/// Unweighted involution f#(t) = f(t^{-1}).
HeckeElement sharp(const HeckeElement& f);

/// A multiplicative map lambda: G -> F* with lambda(x)^2 = Delta(x), stored
/// per element; carries the induced algebra isomorphism (star) -> (sharp).
struct LambdaIso {
  RationalVector lambda;  // indexed by group element

  HeckeElement apply(const HeckeElement& f) const;
};

/// Validates lambda (multiplicative, squares to Delta) and checks the induced
/// map is bijective, multiplicative and intertwines star with sharp on the basis.
LambdaIso lambda_isomorphism(const PairContext& ctx, RationalVector lambda);

/// Positive-square-root auto-derivation of lambda; nullopt when some Delta(x)
/// has no rational square root or the roots fail multiplicativity.
std::optional<LambdaIso> derive_lambda(const PairContext& ctx);

}  // namespace hecke

#endif
