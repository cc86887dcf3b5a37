#pragma once

#include <vector>

#include "superstar/formal_geometry.hpp"
#include "superstar/poisson.hpp"
#include "superstar/polynomial.hpp"
#include "superstar/star_product.hpp"

namespace superstar {

// Block matrix [[A, B], [C, D]] with A: 2n x 2n, B: 2n x r, C: r x 2n,
// D: r x r. Entries are polynomials in the aux-odd pool (and, in principle,
// any variable of the signature); A and D entries must be even, B and C odd.
class SuperMatrix {
 public:
  using Block = std::vector<std::vector<SuperPolynomial>>;

  static SuperMatrix identity(SignaturePtr sig);
  static SuperMatrix zero(SignaturePtr sig);
  static SuperMatrix from_blocks(SignaturePtr sig, const Block& a, const Block& b,
                                 const Block& c, const Block& d);
  static SuperMatrix from_rational(SignaturePtr sig, const RationalMatrix& full);
  // Block-diagonal numeric member-style matrix.
  static SuperMatrix block_diagonal(SignaturePtr sig, const RationalMatrix& a,
                                    const RationalMatrix& d);

  const SignaturePtr& signature() const { return sig_; }
  int dim() const { return dim_; }
  int even_dim() const { return sig_->even_count(); }
  const SuperPolynomial& at(int row, int col) const;
  SuperPolynomial& at(int row, int col);

  Block block_a() const;
  Block block_b() const;
  Block block_c() const;
  Block block_d() const;

  bool satisfies_parity_discipline() const;
  void check_parity_discipline() const;
  bool is_block_diagonal() const;

  SuperMatrix operator*(const SuperMatrix& other) const;
  SuperMatrix operator+(const SuperMatrix& other) const;
  SuperMatrix operator-(const SuperMatrix& other) const;
  SuperMatrix operator*(const Rational& scalar) const;
  bool operator==(const SuperMatrix& other) const;

 private:
  SuperMatrix(SignaturePtr sig);

  SignaturePtr sig_;
  int dim_ = 0;
  std::vector<SuperPolynomial> entries_;  // row-major
};

// [[A^T, -C^T], [B^T, D^T]].
SuperMatrix super_transpose(const SuperMatrix& m);

// M^{sT} H M == H with H = [[Omega, 0], [0, G]].
bool is_sp_member(const PoissonContext& ctx, const SuperMatrix& m);
// X^{sT} H + H X == 0.
bool is_sp_lie_member(const PoissonContext& ctx, const SuperMatrix& x);

// Inverse by block elimination over the Grassmann coefficient ring: the
// numeric body must be invertible; the nilpotent part is removed with a
// terminating geometric series.
SuperMatrix inverse(const SuperMatrix& m);

// Linear change of variables z_j -> sum_i M_ij z_i (coefficient on the left).
// Throws MathError unless M is a member of Sp(2n|a,b).
SuperPolynomial act(const StarContext& ctx, const SuperMatrix& m, const SuperPolynomial& f);

// Derivation z_j -> sum_i X_ij z_i, the first-order part of act(I + tX, -).
FormalVectorField induced_vector_field(const SuperMatrix& x);

}  // namespace superstar
