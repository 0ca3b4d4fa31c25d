#include "semibound/structure.hpp"

#include <algorithm>
#include <map>

#include "semibound/linalg.hpp"

namespace semibound {

  bool Ideal::contains(index_type i) const {
    return std::binary_search(element_indices.begin(), element_indices.end(), i);
  }

  bool is_ideal(SemigroupTable const& s, std::span<index_type const> subset) {
    std::vector<bool> member(s.size(), false);
    for (auto i : subset) {
      member[i] = true;
    }
    for (auto i : subset) {
      for (std::size_t x = 0; x < s.size(); ++x) {
        if (!member[s.product(x, i)] || !member[s.product(i, x)]) {
          return false;
        }
      }
    }
    return true;
  }

  Ideal principal_ideal(SemigroupTable const& s, index_type x) {
    std::vector<bool> member(s.size(), false);
    // S^1 x, then S^1 x S^1.
    std::vector<index_type> left{x};
    member[x] = true;
    for (std::size_t a = 0; a < s.size(); ++a) {
      auto ax = s.product(a, x);
      if (!member[ax]) {
        member[ax] = true;
        left.push_back(ax);
      }
    }
    for (auto t : left) {
      for (std::size_t b = 0; b < s.size(); ++b) {
        member[s.product(t, b)] = true;
      }
    }
    Ideal ideal;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (member[i]) {
        ideal.element_indices.push_back(static_cast<index_type>(i));
      }
    }
    return ideal;
  }

  namespace {
    index_type require_zero(SemigroupTable const& s) {
      auto zero = s.zero_index();
      if (!zero) {
        throw Error(ErrorKind::no_zero, "semigroup does not contain the zero matrix");
      }
      return *zero;
    }

    // J-classes that are minimal among the nonzero J-classes.
    std::vector<std::size_t> zero_minimal_classes(SemigroupTable const& s,
                                                  GreenStructure const& green) {
      std::size_t const        zero_class = green.j_class_of[require_zero(s)];
      std::vector<std::size_t> result;
      for (std::size_t a = 0; a < green.j_classes.size(); ++a) {
        if (a == zero_class) {
          continue;
        }
        bool minimal = true;
        for (std::size_t b = 0; b < green.j_classes.size() && minimal; ++b) {
          if (b != a && b != zero_class && green.j_leq[b][a]) {
            minimal = false;
          }
        }
        if (minimal) {
          result.push_back(a);
        }
      }
      return result;
    }
  }  // namespace

  Ideal zero_minimal_ideal(SemigroupTable const& s, GreenStructure const& green) {
    index_type const zero    = require_zero(s);
    auto             classes = zero_minimal_classes(s, green);
    if (classes.empty()) {
      throw Error(ErrorKind::internal_contradiction, "semigroup has no nonzero element");
    }
    // Classes are numbered by smallest element, so the first candidate holds
    // the lowest index.
    Ideal ideal;
    ideal.element_indices = green.j_classes[classes.front()];
    ideal.element_indices.push_back(zero);
    std::sort(ideal.element_indices.begin(), ideal.element_indices.end());

    if (!is_ideal(s, ideal.element_indices)) {
      throw Error(ErrorKind::internal_contradiction, "minimal J-class plus zero is not an ideal");
    }
    for (auto x : ideal.element_indices) {
      if (x != zero && principal_ideal(s, x).element_indices != ideal.element_indices) {
        throw Error(ErrorKind::internal_contradiction,
                    "0-minimal candidate contains a proper nonzero ideal");
      }
    }
    return ideal;
  }

  Ideal zero_minimal_ideal(SemigroupTable const& s) {
    return zero_minimal_ideal(s, green_relations(s));
  }

  std::size_t count_zero_minimal_ideals(SemigroupTable const& s, GreenStructure const& green) {
    return zero_minimal_classes(s, green).size();
  }

  bool is_zero_simple(SemigroupTable const& s) {
    index_type const zero         = require_zero(s);
    bool             square_nonzero = false;
    for (std::size_t i = 0; i < s.size() && !square_nonzero; ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (s.product(i, j) != zero) {
          square_nonzero = true;
          break;
        }
      }
    }
    if (!square_nonzero) {
      return false;
    }
    for (std::size_t x = 0; x < s.size(); ++x) {
      if (x != zero && principal_ideal(s, static_cast<index_type>(x)).size() != s.size()) {
        return false;
      }
    }
    return true;
  }

  bool is_zero_simple(SemigroupTable const& s, Ideal const& ideal) {
    return is_zero_simple(subsemigroup(s, ideal.element_indices));
  }

  GGMReport faithfulness_on(SemigroupTable const& s, Ideal const& ideal) {
    GGMReport report;
    report.ideal = ideal;

    auto first_collision = [&](bool left) -> std::optional<std::pair<index_type, index_type>> {
      std::map<std::vector<index_type>, index_type> seen;
      for (std::size_t t = 0; t < s.size(); ++t) {
        std::vector<index_type> action;
        action.reserve(ideal.size());
        for (auto x : ideal.element_indices) {
          action.push_back(left ? s.product(t, x) : s.product(x, t));
        }
        auto [it, inserted] = seen.emplace(std::move(action), static_cast<index_type>(t));
        if (!inserted) {
          return std::pair{it->second, static_cast<index_type>(t)};
        }
      }
      return std::nullopt;
    };
    report.left_witness   = first_collision(true);
    report.right_witness  = first_collision(false);
    report.left_faithful  = !report.left_witness.has_value();
    report.right_faithful = !report.right_witness.has_value();
    return report;
  }

  GGMReport verify_ggm(SemigroupTable const& s, GreenStructure const& green) {
    GGMReport report           = faithfulness_on(s, zero_minimal_ideal(s, green));
    report.unique_zero_minimal = count_zero_minimal_ideals(s, green) == 1;
    return report;
  }

  GGMReport verify_ggm(SemigroupTable const& s) {
    return verify_ggm(s, green_relations(s));
  }

  std::optional<SpanCertificate> span_contains_identity(SemigroupTable const& s,
                                                        Ideal const&          ideal) {
    std::size_t const n = s.dimension();
    EchelonBasis      span(n * n);
    std::vector<index_type> independent;
    for (auto i : ideal.element_indices) {
      if (span.insert(s.element(i).flatten())) {
        independent.push_back(i);
      }
    }
    QMatrix a(n * n, independent.size());
    for (std::size_t k = 0; k < independent.size(); ++k) {
      auto const& m = s.element(independent[k]);
      for (std::size_t r = 0; r < n * n; ++r) {
        a(r, k) = m.entries()[r];
      }
    }
    auto c = solve_linear(a, QMatrix::identity(n).flatten());
    if (!c) {
      return std::nullopt;
    }
    SpanCertificate cert;
    for (std::size_t k = 0; k < independent.size(); ++k) {
      if ((*c)[k] != 0) {
        cert.support.push_back(independent[k]);
        cert.coefficients.push_back((*c)[k]);
      }
    }
    return cert;
  }

  bool check_span_certificate(SemigroupTable const& s, SpanCertificate const& cert) {
    if (cert.support.size() != cert.coefficients.size()) {
      return false;
    }
    QMatrix sum = QMatrix::zero(s.dimension());
    for (std::size_t k = 0; k < cert.support.size(); ++k) {
      sum = sum + cert.coefficients[k] * s.element(cert.support[k]);
    }
    return sum == QMatrix::identity(s.dimension());
  }

  std::pair<index_type, index_type> green_translation(SemigroupTable const&       s,
                                                      GreenStructure const&       green,
                                                      std::span<index_type const> h_class,
                                                      MaximalSubgroup const&      group) {
    if (h_class.empty() || !green.j_related(h_class.front(), group.identity_index)) {
      throw Error(ErrorKind::not_same_j_class, "H-class and group lie in different J-classes");
    }
    std::vector<index_type> source(h_class.begin(), h_class.end());
    std::sort(source.begin(), source.end());
    if (source == group.element_indices) {
      return {group.identity_index, group.identity_index};
    }
    if (source.size() != group.order()) {
      throw Error(ErrorKind::internal_contradiction,
                  "H-classes in one J-class have different sizes");
    }
    std::vector<bool> in_group(s.size(), false);
    for (auto g : group.element_indices) {
      in_group[g] = true;
    }
    std::vector<bool> hit(s.size(), false);
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = 0; b < s.size(); ++b) {
        std::fill(hit.begin(), hit.end(), false);
        bool ok = true;
        for (auto r : source) {
          auto image = s.product(s.product(a, r), b);
          if (!in_group[image] || hit[image]) {
            ok = false;
            break;
          }
          hit[image] = true;
        }
        if (ok) {
          return {static_cast<index_type>(a), static_cast<index_type>(b)};
        }
      }
    }
    throw Error(ErrorKind::internal_contradiction, "no translation between J-related H-classes");
  }

  bool check_separation(SemigroupTable const& s, Ideal const& ideal) {
    // Elements with the same sandwich table x s y over the ideal.
    std::map<std::vector<index_type>, index_type> seen;
    for (std::size_t t = 0; t < s.size(); ++t) {
      std::vector<index_type> sandwich;
      sandwich.reserve(ideal.size() * ideal.size());
      for (auto x : ideal.element_indices) {
        auto xt = s.product(x, t);
        for (auto y : ideal.element_indices) {
          sandwich.push_back(s.product(xt, y));
        }
      }
      if (!seen.emplace(std::move(sandwich), static_cast<index_type>(t)).second) {
        return false;
      }
    }
    return true;
  }

}  // namespace semibound
