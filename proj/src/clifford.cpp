#include "superkit/clifford.hpp"

#include <sstream>

namespace superkit {

// ------------------------------------------------------------- RatMatrix

RatMatrix RatMatrix::inverse() const {
  if (rows_ != cols_)
    fail(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  std::size_t n = rows_;
  RatMatrix m = *this;
  RatMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col) == 0) ++piv;
    if (piv == n) fail(ErrorCode::NonInvertible, "singular matrix");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(m(piv, j), m(col, j));
      std::swap(inv(piv, j), inv(col, j));
    }
    Rational p = m(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0) continue;
      Rational f = m(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) -= f * m(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    fail(ErrorCode::DimensionMismatch, "matrix sizes differ");
  RatMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    fail(ErrorCode::DimensionMismatch, "matrix sizes differ");
  RatMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_)
    fail(ErrorCode::DimensionMismatch, "matrix product size mismatch");
  RatMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

RatMatrix operator*(const Rational& c, const RatMatrix& a) {
  RatMatrix r = a;
  for (auto& v : r.data_) v *= c;
  return r;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string to_string(const RatMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i ? "; " : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << " ";
      out << m(i, j).get_str();
    }
  }
  out << "]";
  return out.str();
}

// ---------------------------------------------------------- BilinearForm

BilinearForm::BilinearForm(RatMatrix b, int sigma)
    : b_(std::move(b)), sigma_(sigma) {
  if (b_.rows() != b_.cols())
    fail(ErrorCode::DimensionMismatch, "bilinear form must be square");
  if (sigma != 1 && sigma != -1)
    fail(ErrorCode::InvalidParameter, "relation sign must be +1 or -1");
  if (!(b_ == b_.transpose()))
    fail(ErrorCode::InvalidParameter, "bilinear form must be symmetric");
}

// ------------------------------------------------------- CliffordElement

CliffordElement CliffordElement::scalar(const Rational& c) {
  CliffordElement e;
  e.add_term({}, c);
  return e;
}

CliffordElement CliffordElement::generator(unsigned i) {
  CliffordElement e;
  e.add_term({i}, 1);
  return e;
}

CliffordElement CliffordElement::word(const Word& w, const Rational& c) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] >= w[i + 1])
      fail(ErrorCode::InvalidParameter,
           "basis words must be strictly increasing");
  CliffordElement e;
  e.add_term(w, c);
  return e;
}

unsigned CliffordElement::max_generator() const {
  unsigned m = 0;
  for (const auto& [w, c] : terms_)
    for (unsigned g : w) m = std::max(m, g + 1);
  return m;
}

void CliffordElement::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CliffordElement CliffordElement::operator-() const {
  CliffordElement r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

CliffordElement operator+(const CliffordElement& a, const CliffordElement& b) {
  CliffordElement r = a;
  for (const auto& [w, c] : b.terms_) r.add_term(w, c);
  return r;
}

CliffordElement operator-(const CliffordElement& a, const CliffordElement& b) {
  return a + (-b);
}

CliffordElement operator*(const Rational& c, const CliffordElement& a) {
  CliffordElement r;
  for (const auto& [w, coeff] : a.terms_) r.add_term(w, c * coeff);
  return r;
}

bool operator==(const CliffordElement& a, const CliffordElement& b) {
  return a.terms_ == b.terms_;
}

namespace {

// multiply a sorted word by one generator on the right:
//   w e_g with w = rest e_a:
//     a <  g : append
//     a == g : e_a e_g = sigma B(a,g)
//     a >  g : e_a e_g = -e_g e_a + sigma 2 B(a,g)
void word_times_gen(const CliffordElement::Word& w, unsigned g,
                    const BilinearForm& form, const Rational& coeff,
                    CliffordElement& out) {
  if (w.empty() || w.back() < g) {
    CliffordElement::Word nw = w;
    nw.push_back(g);
    out.add_term(nw, coeff);
    return;
  }
  unsigned a = w.back();
  CliffordElement::Word rest(w.begin(), w.end() - 1);
  if (a == g) {
    out.add_term(rest, coeff * form.sign() * form(a, g));
    return;
  }
  // -(rest e_g) e_a : every word of rest e_g stays below a, so appending a
  // keeps it sorted
  CliffordElement tmp;
  word_times_gen(rest, g, form, -coeff, tmp);
  for (const auto& [tw, tc] : tmp.terms()) {
    CliffordElement::Word nw = tw;
    nw.push_back(a);
    out.add_term(nw, tc);
  }
  out.add_term(rest, coeff * form.sign() * 2 * form(a, g));
}

}  // namespace

CliffordElement clifford_mul(const CliffordElement& a, const CliffordElement& b,
                             const BilinearForm& form) {
  if (a.max_generator() > form.dimension() ||
      b.max_generator() > form.dimension())
    fail(ErrorCode::DimensionMismatch,
         "element references a generator outside the form's dimension");
  CliffordElement result;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      CliffordElement cur;
      cur.add_term(wa, ca * cb);
      for (unsigned g : wb) {
        CliffordElement next;
        for (const auto& [w, c] : cur.terms())
          word_times_gen(w, g, form, c, next);
        cur = next;
      }
      result = result + cur;
    }
  }
  return result;
}

std::string to_string(const CliffordElement& e) {
  if (e.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    Rational ac = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (w.empty()) {
      out << ac.get_str();
    } else {
      if (ac != 1) out << ac.get_str() << "*";
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out << "*";
        out << "e" << (w[i] + 1);
      }
    }
  }
  return out.str();
}

}  // namespace superkit
