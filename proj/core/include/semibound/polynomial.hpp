#ifndef SEMIBOUND_POLYNOMIAL_HPP_
#define SEMIBOUND_POLYNOMIAL_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "semibound/matrix.hpp"

namespace semibound {

  // Dense univariate polynomial, coefficients from degree 0 upward with no
  // trailing zeros (the zero polynomial is empty).
  using Polynomial = std::vector<Rational>;

  std::size_t degree(Polynomial const& f);

  // Characteristic polynomial det(x I - m), monic, by Faddeev-LeVerrier.
  Polynomial characteristic_polynomial(QMatrix const& m);

  // The m-th cyclotomic polynomial, m >= 1.
  Polynomial cyclotomic(std::size_t m);

  // Quotient of f by g when g divides f exactly, otherwise nullopt.
  std::optional<Polynomial> divide_exact(Polynomial const& f, Polynomial const& g);

  QMatrix evaluate(Polynomial const& f, QMatrix const& m);

  // Irreducible factors over Q of a polynomial whose roots are 0 or roots of
  // unity, as (factor, multiplicity) pairs: x first, then cyclotomic
  // polynomials by increasing order. nullopt if f is not of that shape.
  std::optional<std::vector<std::pair<Polynomial, std::size_t>>>
  cyclotomic_factorization(Polynomial f);

}  // namespace semibound

#endif  // SEMIBOUND_POLYNOMIAL_HPP_
