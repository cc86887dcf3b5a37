#include "superstar/symplectic_linear.hpp"

#include <map>

#include "superstar/errors.hpp"

namespace superstar {

namespace {

RationalMatrix invert_rational(RationalMatrix m) {
  const std::size_t dim = m.size();
  RationalMatrix inv(dim, std::vector<Rational>(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pivot = col;
    while (pivot < dim && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == dim) throw MathError("numeric part of the matrix is singular");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = m[col][col];
    for (std::size_t j = 0; j < dim; ++j) {
      m[col][j] /= scale;
      inv[col][j] /= scale;
    }
    for (std::size_t row = 0; row < dim; ++row) {
      if (row == col || sgn(m[row][col]) == 0) continue;
      const Rational factor = m[row][col];
      for (std::size_t j = 0; j < dim; ++j) {
        m[row][j] -= factor * m[col][j];
        inv[row][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

SuperMatrix::SuperMatrix(SignaturePtr sig) : sig_(std::move(sig)) {
  if (!sig_) throw MathError("null signature");
  dim_ = sig_->generator_count();
  entries_.assign(static_cast<std::size_t>(dim_ * dim_), SuperPolynomial(sig_));
}

SuperMatrix SuperMatrix::zero(SignaturePtr sig) { return SuperMatrix(std::move(sig)); }

SuperMatrix SuperMatrix::identity(SignaturePtr sig) {
  SuperMatrix m(sig);
  for (int i = 0; i < m.dim_; ++i) m.at(i, i) = SuperPolynomial::constant(sig, 1);
  return m;
}

SuperMatrix SuperMatrix::from_blocks(SignaturePtr sig, const Block& a, const Block& b,
                                     const Block& c, const Block& d) {
  SuperMatrix m(sig);
  const auto even = static_cast<std::size_t>(sig->even_count());
  const auto odd = static_cast<std::size_t>(sig->r());
  auto place = [&](const Block& block, std::size_t rows, std::size_t cols, std::size_t row0,
                   std::size_t col0, const char* name) {
    // Empty blocks stand for zero.
    if (block.empty()) return;
    if (block.size() != rows) throw DimensionError(std::string("block ") + name + " has wrong row count");
    for (std::size_t i = 0; i < rows; ++i) {
      if (block[i].size() != cols) {
        throw DimensionError(std::string("block ") + name + " has wrong column count");
      }
      for (std::size_t j = 0; j < cols; ++j) {
        if (!same_signature(sig, block[i][j].signature())) throw SignatureMismatch();
        m.at(static_cast<int>(row0 + i), static_cast<int>(col0 + j)) = block[i][j];
      }
    }
  };
  place(a, even, even, 0, 0, "A");
  place(b, even, odd, 0, even, "B");
  place(c, odd, even, even, 0, "C");
  place(d, odd, odd, even, even, "D");
  return m;
}

SuperMatrix SuperMatrix::from_rational(SignaturePtr sig, const RationalMatrix& full) {
  SuperMatrix m(sig);
  if (full.size() != static_cast<std::size_t>(m.dim_)) throw DimensionError("wrong row count");
  for (int i = 0; i < m.dim_; ++i) {
    if (full[static_cast<std::size_t>(i)].size() != static_cast<std::size_t>(m.dim_)) {
      throw DimensionError("wrong column count");
    }
    for (int j = 0; j < m.dim_; ++j) {
      m.at(i, j) = SuperPolynomial::constant(sig, full[static_cast<std::size_t>(i)]
                                                      [static_cast<std::size_t>(j)]);
    }
  }
  return m;
}

SuperMatrix SuperMatrix::block_diagonal(SignaturePtr sig, const RationalMatrix& a,
                                        const RationalMatrix& d) {
  const auto even = static_cast<std::size_t>(sig->even_count());
  const auto dim = static_cast<std::size_t>(sig->generator_count());
  if (a.size() != even || d.size() != dim - even) throw DimensionError("block size mismatch");
  RationalMatrix full(dim, std::vector<Rational>(dim, 0));
  for (std::size_t i = 0; i < even; ++i) {
    if (a[i].size() != even) throw DimensionError("block A is not square");
    for (std::size_t j = 0; j < even; ++j) full[i][j] = a[i][j];
  }
  for (std::size_t i = 0; i < dim - even; ++i) {
    if (d[i].size() != dim - even) throw DimensionError("block D is not square");
    for (std::size_t j = 0; j < dim - even; ++j) full[even + i][even + j] = d[i][j];
  }
  return from_rational(std::move(sig), full);
}

const SuperPolynomial& SuperMatrix::at(int row, int col) const {
  return entries_[static_cast<std::size_t>(row * dim_ + col)];
}

SuperPolynomial& SuperMatrix::at(int row, int col) {
  return entries_[static_cast<std::size_t>(row * dim_ + col)];
}

namespace {

SuperMatrix::Block extract(const SuperMatrix& m, int row0, int rows, int col0, int cols) {
  SuperMatrix::Block block;
  for (int i = 0; i < rows; ++i) {
    block.emplace_back();
    for (int j = 0; j < cols; ++j) block.back().push_back(m.at(row0 + i, col0 + j));
  }
  return block;
}

}  // namespace

SuperMatrix::Block SuperMatrix::block_a() const { return extract(*this, 0, even_dim(), 0, even_dim()); }
SuperMatrix::Block SuperMatrix::block_b() const {
  return extract(*this, 0, even_dim(), even_dim(), dim_ - even_dim());
}
SuperMatrix::Block SuperMatrix::block_c() const {
  return extract(*this, even_dim(), dim_ - even_dim(), 0, even_dim());
}
SuperMatrix::Block SuperMatrix::block_d() const {
  return extract(*this, even_dim(), dim_ - even_dim(), even_dim(), dim_ - even_dim());
}

bool SuperMatrix::satisfies_parity_discipline() const {
  const int even = even_dim();
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      const auto& entry = at(i, j);
      if (entry.is_zero()) continue;
      const int expected = ((i < even) == (j < even)) ? 0 : 1;
      const auto par = entry.parity();
      if (!par || *par != expected) return false;
    }
  }
  return true;
}

void SuperMatrix::check_parity_discipline() const {
  if (!satisfies_parity_discipline()) {
    throw ParityError("supermatrix blocks violate the parity discipline");
  }
}

bool SuperMatrix::is_block_diagonal() const {
  const int even = even_dim();
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      if ((i < even) != (j < even) && !at(i, j).is_zero()) return false;
    }
  }
  return true;
}

SuperMatrix SuperMatrix::operator*(const SuperMatrix& other) const {
  if (!same_signature(sig_, other.sig_)) throw SignatureMismatch();
  SuperMatrix out(sig_);
  for (int i = 0; i < dim_; ++i) {
    for (int k = 0; k < dim_; ++k) {
      const auto& lhs = at(i, k);
      if (lhs.is_zero()) continue;
      for (int j = 0; j < dim_; ++j) {
        const auto& rhs = other.at(k, j);
        if (!rhs.is_zero()) out.at(i, j) += lhs * rhs;
      }
    }
  }
  return out;
}

SuperMatrix SuperMatrix::operator+(const SuperMatrix& other) const {
  if (!same_signature(sig_, other.sig_)) throw SignatureMismatch();
  SuperMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += other.entries_[i];
  return out;
}

SuperMatrix SuperMatrix::operator-(const SuperMatrix& other) const {
  return *this + other * Rational(-1);
}

SuperMatrix SuperMatrix::operator*(const Rational& scalar) const {
  SuperMatrix out = *this;
  for (auto& e : out.entries_) e *= scalar;
  return out;
}

bool SuperMatrix::operator==(const SuperMatrix& other) const {
  return same_signature(sig_, other.sig_) && entries_ == other.entries_;
}

SuperMatrix super_transpose(const SuperMatrix& m) {
  m.check_parity_discipline();
  const int even = m.even_dim();
  const int dim = m.dim();
  SuperMatrix out = SuperMatrix::zero(m.signature());
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      // Entry (i, j) of the result comes from (j, i); only the C block
      // (odd row, even column of the source) changes sign.
      const bool negate = j >= even && i < even;
      out.at(i, j) = negate ? -m.at(j, i) : m.at(j, i);
    }
  }
  return out;
}

namespace {

void check_context(const PoissonContext& ctx, const SuperMatrix& m) {
  if (!same_signature(ctx.signature(), m.signature())) {
    const auto& a = *ctx.signature();
    const auto& b = *m.signature();
    if (a.n != b.n || a.r() != b.r()) throw DimensionError("matrix dimensions do not match");
    throw SignatureMismatch();
  }
}

}  // namespace

bool is_sp_member(const PoissonContext& ctx, const SuperMatrix& m) {
  check_context(ctx, m);
  const auto h = SuperMatrix::from_rational(m.signature(), ctx.h());
  return super_transpose(m) * h * m == h;
}

bool is_sp_lie_member(const PoissonContext& ctx, const SuperMatrix& x) {
  check_context(ctx, x);
  const auto h = SuperMatrix::from_rational(x.signature(), ctx.h());
  const auto sum = super_transpose(x) * h + h * x;
  return sum == SuperMatrix::zero(x.signature());
}

SuperMatrix inverse(const SuperMatrix& m) {
  m.check_parity_discipline();
  const auto& sig = m.signature();
  const int dim = m.dim();
  const Monomial one = Monomial::one(*sig);
  RationalMatrix body(static_cast<std::size_t>(dim), std::vector<Rational>(dim, 0));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      body[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j).coefficient(one);
    }
  }
  const auto body_inv = SuperMatrix::from_rational(sig, invert_rational(body));
  const auto nilpotent = m - SuperMatrix::from_rational(sig, body);
  const auto step = body_inv * nilpotent * Rational(-1);

  const auto zero = SuperMatrix::zero(sig);
  SuperMatrix sum = SuperMatrix::identity(sig);
  SuperMatrix term = sum;
  // Products of more than (aux + r) odd generators vanish, so a nilpotent
  // Grassmann part dies within a bounded number of steps.
  const int limit = 2 * (sig->odd_count() + 1) + 2;
  for (int k = 0;; ++k) {
    term = term * step;
    if (term == zero) break;
    if (k > limit) throw MathError("non-numeric part of the matrix is not nilpotent");
    sum = sum + term;
  }
  return sum * body_inv;
}

SuperPolynomial act(const StarContext& ctx, const SuperMatrix& m, const SuperPolynomial& f) {
  if (!is_sp_member(ctx.poisson, m)) throw MathError("matrix is not a member of Sp(2n|a,b)");
  if (!same_signature(ctx.signature(), f.signature())) throw SignatureMismatch();
  const auto& sig = ctx.signature();
  const auto vars = generators(*sig);
  std::map<Variable, SuperPolynomial> images;
  for (std::size_t j = 0; j < vars.size(); ++j) {
    SuperPolynomial image(sig);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const auto& entry = m.at(static_cast<int>(i), static_cast<int>(j));
      if (!entry.is_zero()) image += entry * SuperPolynomial::variable(sig, vars[i]);
    }
    images.emplace(vars[j], std::move(image));
  }
  return substitute_linear(f, images);
}

FormalVectorField induced_vector_field(const SuperMatrix& x) {
  const auto& sig = x.signature();
  const auto vars = generators(*sig);
  std::vector<SuperPolynomial> images;
  for (std::size_t j = 0; j < vars.size(); ++j) {
    SuperPolynomial image(sig);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const auto& entry = x.at(static_cast<int>(i), static_cast<int>(j));
      if (!entry.is_zero()) image += entry * SuperPolynomial::variable(sig, vars[i]);
    }
    images.push_back(std::move(image));
  }
  return FormalVectorField(sig, std::move(images));
}

}  // namespace superstar
