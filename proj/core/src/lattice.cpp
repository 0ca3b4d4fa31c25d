#include "semibound/lattice.hpp"

#include <algorithm>

namespace semibound {

  namespace {
    // v -= q * w
    void axpy(ZVector& v, Integer const& q, ZVector const& w) {
      if (q == 0) {
        return;
      }
      for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] -= q * w[i];
      }
    }

    bool is_zero(ZVector const& v) {
      return std::all_of(v.begin(), v.end(), [](Integer const& x) { return x == 0; });
    }
  }  // namespace

  Lattice hnf_column(std::size_t ambient, std::span<ZVector const> vectors) {
    std::vector<ZVector> work;
    for (auto const& v : vectors) {
      if (v.size() != ambient) {
        throw Error(ErrorKind::dimension_mismatch, "lattice generator length");
      }
      if (!is_zero(v)) {
        work.push_back(v);
      }
    }

    // Eliminate bottom-up: after processing row i, at most one remaining
    // vector is nonzero in row i and it becomes the pivot for that row.
    std::vector<ZVector>     found;
    std::vector<std::size_t> found_rows;
    for (std::size_t row = ambient; row-- > 0 && !work.empty();) {
      while (true) {
        std::size_t best = work.size();
        std::size_t nonzero = 0;
        for (std::size_t k = 0; k < work.size(); ++k) {
          if (work[k][row] == 0) {
            continue;
          }
          ++nonzero;
          if (best == work.size() || abs(work[k][row]) < abs(work[best][row])) {
            best = k;
          }
        }
        if (nonzero == 0) {
          break;
        }
        if (nonzero == 1) {
          ZVector pivot = std::move(work[best]);
          work.erase(work.begin() + best);
          if (pivot[row] < 0) {
            for (auto& x : pivot) {
              x = -x;
            }
          }
          found.push_back(std::move(pivot));
          found_rows.push_back(row);
          break;
        }
        for (std::size_t k = 0; k < work.size(); ++k) {
          if (k == best || work[k][row] == 0) {
            continue;
          }
          Integer q;
          mpz_fdiv_q(q.get_mpz_t(), work[k][row].get_mpz_t(), work[best][row].get_mpz_t());
          axpy(work[k], q, work[best]);
        }
        std::erase_if(work, is_zero);
      }
    }

    std::reverse(found.begin(), found.end());
    std::reverse(found_rows.begin(), found_rows.end());

    // Reduce entries to the right of each pivot. Going from the last pivot to
    // the first never disturbs an already reduced row.
    for (std::size_t j = found.size(); j-- > 0;) {
      std::size_t const    p     = found_rows[j];
      Integer const& d = found[j][p];
      for (std::size_t k = j + 1; k < found.size(); ++k) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), found[k][p].get_mpz_t(), d.get_mpz_t());
        axpy(found[k], q, found[j]);
      }
    }
    return Lattice(ambient, std::move(found), std::move(found_rows));
  }

  ZMatrix Lattice::basis_matrix() const {
    return ZMatrix::from_columns(_ambient, _basis);
  }

  std::optional<ZVector> Lattice::coordinates(ZVector const& v) const {
    if (v.size() != _ambient) {
      throw Error(ErrorKind::dimension_mismatch, "vector length");
    }
    ZVector residual = v;
    ZVector coords(_basis.size());
    // Pivot rows are the last nonzero rows, so peel off from the top pivot.
    for (std::size_t j = _basis.size(); j-- > 0;) {
      std::size_t const p = _pivots[j];
      if (!mpz_divisible_p(residual[p].get_mpz_t(), _basis[j][p].get_mpz_t())) {
        return std::nullopt;
      }
      coords[j] = residual[p] / _basis[j][p];
      axpy(residual, coords[j], _basis[j]);
    }
    if (!is_zero(residual)) {
      return std::nullopt;
    }
    return coords;
  }

  Integer Lattice::index() const {
    if (rank() < _ambient) {
      return 0;
    }
    Integer idx = 1;
    for (std::size_t j = 0; j < _basis.size(); ++j) {
      idx *= _basis[j][_pivots[j]];
    }
    return idx;
  }

}  // namespace semibound
