#ifndef SEMIBOUND_CORPUS_HPP_
#define SEMIBOUND_CORPUS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "semibound/matrix.hpp"

namespace semibound {

  struct CorpusEntry {
    std::string          name;
    std::size_t          dimension = 0;
    std::vector<QMatrix> generators;
    // |S| after adjoining zero; nullopt for entries whose closure is infinite.
    std::optional<std::size_t> expected_size;
    bool                       expected_irreducible = true;
    // Whether closure under the default cap terminates.
    bool        finite = true;
    std::string notes;
    // Closure cap used when the corpus is run; smaller than the default for
    // entries whose closure is infinite.
    std::optional<std::size_t> cap;
  };

  // The shipped example semigroups, in a fixed order.
  std::vector<CorpusEntry> const& corpus();

  // nullopt if no entry has that name.
  std::optional<CorpusEntry> corpus_entry(std::string const& name);

  // Matrix of the permutation action of sigma (images of 0..n-1) on the
  // sum-zero sublattice of Z^n, in the basis e_i - e_{i+1}.
  QMatrix standard_representation(std::vector<std::size_t> const& sigma);

}  // namespace semibound

#endif  // SEMIBOUND_CORPUS_HPP_
