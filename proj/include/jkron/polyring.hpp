#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "jkron/rational.hpp"

namespace jkron {

/// A root multiplicity or derivative order that may be infinite (the
/// polynomial under test vanishes identically).
class Multiplicity {
public:
  constexpr Multiplicity() = default;
  constexpr explicit Multiplicity(std::size_t v) : value_(v) {}
  static constexpr Multiplicity infinite() {
    Multiplicity m;
    m.value_ = kInf;
    return m;
  }

  constexpr bool is_infinite() const { return value_ == kInf; }
  constexpr std::size_t value() const { return value_; }
  /// True when the multiplicity is at least `n` (always true if infinite).
  constexpr bool at_least(std::size_t n) const { return value_ >= n; }

  constexpr auto operator<=>(const Multiplicity&) const = default;

private:
  static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::size_t value_ = 0;
};

inline std::string to_string(Multiplicity m) {
  return m.is_infinite() ? std::string("inf") : std::to_string(m.value());
}

// ---------------------------------------------------------------------------
// Univariate polynomials
// ---------------------------------------------------------------------------

/// Dense polynomial in w; coeffs()[i] is the coefficient of w^i. The highest
/// stored coefficient is nonzero; the zero polynomial has no coefficients.
class UnivariatePoly {
public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// c * w^power
  static UnivariatePoly monomial(Rational c, std::size_t power) {
    std::vector<Rational> v(power + 1, Rational(0));
    v[power] = std::move(c);
    return UnivariatePoly(std::move(v));
  }

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Rational operator()(const Rational& w) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * w + *it;
    return acc;
  }

  UnivariatePoly derivative() const {
    std::vector<Rational> v;
    for (std::size_t i = 1; i < c_.size(); ++i)
      v.push_back(c_[i] * Rational(static_cast<long>(i)));
    return UnivariatePoly(std::move(v));
  }

  friend UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] = a.coeff(i) + b.coeff(i);
    return UnivariatePoly(std::move(v));
  }
  friend UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b) {
    return a + b * Rational(-1);
  }
  friend UnivariatePoly operator*(const UnivariatePoly& a, const Rational& s) {
    std::vector<Rational> v = a.c_;
    for (auto& x : v)
      x *= s;
    return UnivariatePoly(std::move(v));
  }
  friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (a.is_zero() || b.is_zero())
      return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        v[i + j] += a.c_[i] * b.c_[j];
    return UnivariatePoly(std::move(v));
  }
  friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

private:
  void trim() {
    while (!c_.empty() && is_zero_(c_.back()))
      c_.pop_back();
  }
  static bool is_zero_(const Rational& r) { return sgn(r) == 0; }

  std::vector<Rational> c_;
};

/// Value at lam of the order-th Hasse derivative, sum_i C(i,order) f_i lam^(i-order).
inline Rational univariate_hasse_eval(const UnivariatePoly& f, std::size_t order, const Rational& lam) {
  Rational acc = 0;
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > order;)
    acc = acc * lam + c[i] * Rational(binomial(i, order));
  return acc;
}

/// Largest t with (w - lam)^t dividing g; infinite for g == 0.
inline Multiplicity root_multiplicity(const UnivariatePoly& g, const Rational& lam) {
  if (g.is_zero())
    return Multiplicity::infinite();
  // Repeated synthetic division by (w - lam).
  std::vector<Rational> c = g.coeffs();
  std::size_t t = 0;
  while (c.size() > 1) {
    std::vector<Rational> q(c.size() - 1);
    Rational carry = 0;
    for (std::size_t i = c.size(); i-- > 1;) {
      carry = carry * lam + c[i];
      q[i - 1] = carry;
    }
    Rational remainder = carry * lam + c[0];
    if (sgn(remainder) != 0)
      break;
    c = std::move(q);
    ++t;
  }
  return Multiplicity(t);
}

// ---------------------------------------------------------------------------
// Bivariate polynomials
// ---------------------------------------------------------------------------

/// Order of a bivariate Hasse derivative: beta in x, gamma in y.
struct Biindex {
  std::size_t beta = 0;
  std::size_t gamma = 0;
  std::size_t total() const { return beta + gamma; }
};

/// Dense grid of coefficients a_ij of x^i y^j (row index = x power). The grid
/// may carry zero border rows/columns; degree queries skip them.
class BivariatePoly {
public:
  BivariatePoly() : rows_(1), cols_(1), a_(1, Rational(0)) {}
  BivariatePoly(std::size_t rows, std::size_t cols)
      : rows_(std::max<std::size_t>(rows, 1)), cols_(std::max<std::size_t>(cols, 1)),
        a_(rows_ * cols_, Rational(0)) {}
  explicit BivariatePoly(const std::vector<std::vector<Rational>>& grid) : BivariatePoly() {
    std::size_t r = grid.size(), c = 0;
    for (const auto& row : grid)
      c = std::max(c, row.size());
    *this = BivariatePoly(r, c);
    for (std::size_t i = 0; i < grid.size(); ++i)
      for (std::size_t j = 0; j < grid[i].size(); ++j)
        at(i, j) = grid[i][j];
  }

  static BivariatePoly constant(const Rational& c) {
    BivariatePoly p;
    p.at(0, 0) = c;
    return p;
  }

  std::size_t grid_rows() const { return rows_; }
  std::size_t grid_cols() const { return cols_; }

  Rational coeff(std::size_t i, std::size_t j) const {
    return (i < rows_ && j < cols_) ? a_[i * cols_ + j] : Rational(0);
  }
  /// Mutable access; grows the grid when (i,j) is outside it.
  Rational& at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_)
      resize(std::max(rows_, i + 1), std::max(cols_, j + 1));
    return a_[i * cols_ + j];
  }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& r) { return sgn(r) == 0; });
  }
  bool is_constant() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((i || j) && sgn(a_[i * cols_ + j]) != 0)
          return false;
    return true;
  }
  /// Largest i + j with a nonzero coefficient; -1 for the zero polynomial.
  long total_degree() const {
    long d = -1;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn(a_[i * cols_ + j]) != 0)
          d = std::max(d, static_cast<long>(i + j));
    return d;
  }
  long degree_x() const {
    long d = -1;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn(a_[i * cols_ + j]) != 0)
          d = std::max(d, static_cast<long>(i));
    return d;
  }
  long degree_y() const { return swapped().degree_x(); }

  /// q(x,y) = p(y,x).
  BivariatePoly swapped() const {
    BivariatePoly q(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        q.at(j, i) = a_[i * cols_ + j];
    return q;
  }

  Rational operator()(const Rational& x, const Rational& y) const {
    Rational acc = 0;
    for (std::size_t i = rows_; i-- > 0;) {
      Rational row = 0;
      for (std::size_t j = cols_; j-- > 0;)
        row = row * y + a_[i * cols_ + j];
      acc = acc * x + row;
    }
    return acc;
  }

  friend BivariatePoly operator+(const BivariatePoly& p, const BivariatePoly& q) {
    BivariatePoly r(std::max(p.rows_, q.rows_), std::max(p.cols_, q.cols_));
    for (std::size_t i = 0; i < r.rows_; ++i)
      for (std::size_t j = 0; j < r.cols_; ++j)
        r.at(i, j) = p.coeff(i, j) + q.coeff(i, j);
    return r;
  }
  friend BivariatePoly operator*(const BivariatePoly& p, const Rational& s) {
    BivariatePoly r = p;
    for (auto& x : r.a_)
      x *= s;
    return r;
  }
  friend BivariatePoly operator-(const BivariatePoly& p, const BivariatePoly& q) {
    return p + q * Rational(-1);
  }
  friend BivariatePoly operator*(const BivariatePoly& p, const BivariatePoly& q) {
    BivariatePoly r(p.rows_ + q.rows_ - 1, p.cols_ + q.cols_ - 1);
    for (std::size_t i = 0; i < p.rows_; ++i)
      for (std::size_t j = 0; j < p.cols_; ++j) {
        const Rational& a = p.a_[i * p.cols_ + j];
        if (sgn(a) == 0)
          continue;
        for (std::size_t k = 0; k < q.rows_; ++k)
          for (std::size_t l = 0; l < q.cols_; ++l)
            r.a_[(i + k) * r.cols_ + (j + l)] += a * q.a_[k * q.cols_ + l];
      }
    return r;
  }
  /// Equality as polynomials (grid padding is irrelevant).
  friend bool operator==(const BivariatePoly& p, const BivariatePoly& q) {
    std::size_t r = std::max(p.rows_, q.rows_), c = std::max(p.cols_, q.cols_);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (p.coeff(i, j) != q.coeff(i, j))
          return false;
    return true;
  }

  /// Embeds f(x) (or f(y) when in_y is set).
  static BivariatePoly from_univariate(const UnivariatePoly& f, bool in_y = false) {
    BivariatePoly p;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
      (in_y ? p.at(0, i) : p.at(i, 0)) = f.coeffs()[i];
    return p;
  }

private:
  void resize(std::size_t rows, std::size_t cols) {
    std::vector<Rational> b(rows * cols, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        b[i * cols + j] = a_[i * cols_ + j];
    rows_ = rows;
    cols_ = cols;
    a_ = std::move(b);
  }

  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

/// Formal Hasse derivative: x^i y^j -> C(i,beta) C(j,gamma) x^(i-beta) y^(j-gamma).
inline BivariatePoly hasse_derivative(const BivariatePoly& p, Biindex idx) {
  if (idx.beta >= p.grid_rows() || idx.gamma >= p.grid_cols())
    return BivariatePoly();
  BivariatePoly r(p.grid_rows() - idx.beta, p.grid_cols() - idx.gamma);
  for (std::size_t i = idx.beta; i < p.grid_rows(); ++i)
    for (std::size_t j = idx.gamma; j < p.grid_cols(); ++j) {
      const Rational a = p.coeff(i, j);
      if (sgn(a) != 0)
        r.at(i - idx.beta, j - idx.gamma) = a * Rational(binomial(i, idx.beta) * binomial(j, idx.gamma));
    }
  return r;
}

/// All Hasse derivatives at (lam, mu) at once: entry (h,k) of the result is
/// the value of d^(h,k) p at (lam, mu), i.e. the coefficients of p(x+lam, y+mu).
inline BivariatePoly taylor_at(const BivariatePoly& p, const Rational& lam, const Rational& mu) {
  const std::size_t R = p.grid_rows(), C = p.grid_cols();
  std::vector<Rational> lam_pow(R, Rational(1)), mu_pow(C, Rational(1));
  for (std::size_t i = 1; i < R; ++i)
    lam_pow[i] = lam_pow[i - 1] * lam;
  for (std::size_t j = 1; j < C; ++j)
    mu_pow[j] = mu_pow[j - 1] * mu;
  BivariatePoly t(R, C);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) {
      const Rational a = p.coeff(i, j);
      if (sgn(a) == 0)
        continue;
      for (std::size_t h = 0; h <= i; ++h) {
        Rational ax = a * Rational(binomial(i, h)) * lam_pow[i - h];
        for (std::size_t k = 0; k <= j; ++k)
          t.at(h, k) += ax * Rational(binomial(j, k)) * mu_pow[j - k];
      }
    }
  return t;
}

inline Rational eval_bivariate(const BivariatePoly& p, const Rational& lam, const Rational& mu) {
  return p(lam, mu);
}

/// Smallest d >= 1 such that some Hasse derivative of total order d is
/// nonzero at (lam, mu).
inline std::size_t local_degree(const BivariatePoly& p, const Rational& lam, const Rational& mu) {
  if (p.is_constant())
    throw ConstantPolynomial();
  const BivariatePoly t = taylor_at(p, lam, mu);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < t.grid_rows(); ++i)
    for (std::size_t j = 0; j < t.grid_cols(); ++j)
      if ((i || j) && sgn(t.coeff(i, j)) != 0)
        best = std::min(best, i + j);
  return best;
}

/// Complete homogeneous symmetric polynomial sum_j x^j y^(d-j).
inline BivariatePoly h_poly(std::size_t d) {
  BivariatePoly h(d + 1, d + 1);
  for (std::size_t j = 0; j <= d; ++j)
    h.at(j, d - j) = 1;
  return h;
}

/// (f(x) - f(y)) / (x - y): the coefficient of x^a y^b is f_(a+b+1).
inline BivariatePoly bezout_quotient(const UnivariatePoly& f) {
  const auto& c = f.coeffs();
  if (c.size() < 2)
    return BivariatePoly();
  const std::size_t D = c.size() - 1; // result has total degree D-1
  BivariatePoly p(D, D);
  for (std::size_t a = 0; a < D; ++a)
    for (std::size_t b = 0; a + b < D; ++b)
      p.at(a, b) = c[a + b + 1];
  return p;
}

// ---------------------------------------------------------------------------
// Text format: univariate "c0,c1,..." lowest degree first; bivariate rows of
// the a_ij grid separated by ';', row index = x power.
// ---------------------------------------------------------------------------

namespace detail {
inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos)
      break;
    start = pos + 1;
  }
  return out;
}
} // namespace detail

inline UnivariatePoly parse_univariate(std::string_view text) {
  std::vector<Rational> c;
  for (auto part : detail::split(text, ','))
    c.push_back(parse_rational(part));
  return UnivariatePoly(std::move(c));
}

inline BivariatePoly parse_bivariate(std::string_view text) {
  std::vector<std::vector<Rational>> grid;
  for (auto row : detail::split(text, ';')) {
    std::vector<Rational> r;
    for (auto part : detail::split(row, ','))
      r.push_back(parse_rational(part));
    grid.push_back(std::move(r));
  }
  return BivariatePoly(grid);
}

inline std::string format_univariate(const UnivariatePoly& f) {
  if (f.is_zero())
    return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    os << (i ? "," : "") << to_string(f.coeffs()[i]);
  return os.str();
}

inline std::string format_bivariate(const BivariatePoly& p) {
  const long dx = std::max(p.degree_x(), 0L), dy = std::max(p.degree_y(), 0L);
  std::ostringstream os;
  for (long i = 0; i <= dx; ++i) {
    if (i)
      os << ';';
    for (long j = 0; j <= dy; ++j)
      os << (j ? "," : "") << to_string(p.coeff(i, j));
  }
  return os.str();
}

} // namespace jkron
