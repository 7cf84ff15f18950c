#pragma once

#include <map>
#include <string>
#include <vector>

#include "superkit/ratmatrix.hpp"

namespace superkit {

/// Symmetric bilinear form together with the relation sign sigma, fixing the
/// Clifford condition e_i e_j + e_j e_i = sigma * 2 B(e_i, e_j). The abstract
/// ideal of the quotient construction uses sigma = -1 (so e^2 = -B(e,e)),
/// while the space-time Clifford-Dirac relation uses sigma = +1; the form
/// carries the sign explicitly instead of privileging either convention.
class BilinearForm {
 public:
  BilinearForm(RatMatrix b, int sigma);

  std::size_t dimension() const { return b_.rows(); }
  int sign() const { return sigma_; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return b_(i, j);
  }

  static BilinearForm zero(std::size_t n, int sigma = -1) {
    return BilinearForm(RatMatrix(n, n), sigma);
  }

 private:
  RatMatrix b_;
  int sigma_;
};

/// Element of the Clifford algebra in the canonical basis of squarefree,
/// strictly increasing generator words (the empty word is the unit).
class CliffordElement {
 public:
  using Word = std::vector<unsigned>;
  using TermMap = std::map<Word, Rational>;

  CliffordElement() = default;

  static CliffordElement zero() { return {}; }
  static CliffordElement one() { return scalar(1); }
  static CliffordElement scalar(const Rational& c);
  static CliffordElement generator(unsigned i);
  static CliffordElement word(const Word& w, const Rational& c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned max_generator() const;

  CliffordElement operator-() const;
  friend CliffordElement operator+(const CliffordElement& a,
                                   const CliffordElement& b);
  friend CliffordElement operator-(const CliffordElement& a,
                                   const CliffordElement& b);
  friend CliffordElement operator*(const Rational& c, const CliffordElement& a);
  friend bool operator==(const CliffordElement& a, const CliffordElement& b);

  void add_term(const Word& w, const Rational& c);

 private:
  TermMap terms_;
};

/// Canonical-basis product subject to the Clifford condition of the form.
CliffordElement clifford_mul(const CliffordElement& a, const CliffordElement& b,
                             const BilinearForm& form);

std::string to_string(const CliffordElement& e);

}  // namespace superkit
