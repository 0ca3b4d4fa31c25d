#ifndef SEMIBOUND_PIPELINE_HPP_
#define SEMIBOUND_PIPELINE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semibound/arithmetic.hpp"
#include "semibound/green.hpp"
#include "semibound/invariant_subspaces.hpp"
#include "semibound/semigroup.hpp"
#include "semibound/structure.hpp"

namespace semibound {

  struct VerifyOptions {
    std::size_t                  cap = kDefaultCap;
    // Reduce modulo this prime instead of the one the parity rule picks.
    std::optional<unsigned long> prime_override;
  };

  enum class Outcome { checked, reducible, inconclusive };

  std::string_view to_string(Outcome o) noexcept;

  struct StageRecord {
    std::string name;
    std::string detail;
  };

  // Everything the bound check produced. Fields after `irreducibility` are
  // only filled when outcome == checked.
  struct BoundReport {
    Outcome     outcome = Outcome::inconclusive;
    std::size_t n       = 0;
    // |S| after adjoining zero.
    std::size_t size          = 0;
    bool        zero_adjoined = false;

    std::vector<QMatrix> elements;
    index_type           zero_index = 0;

    IrreducibilityVerdict irreducibility;

    std::optional<ConjugationCertificate> conjugation;
    GGMReport                             ggm;
    std::optional<SpanCertificate>        span;
    std::size_t                           ideal_size = 0;
    index_type                            idempotent = 0;
    MaximalSubgroup                       group{{}, 0};
    bool                                  aperiodic = false;

    unsigned long prescribed_prime = 0;
    unsigned long p                = 0;
    bool          prime_overridden = false;
    // p^(n^2)
    Integer bound;

    std::optional<AdaptedBasis> adapted;
    std::optional<ModpImage>    image;
    InjectivityVerdict          criterion;
    std::optional<TorsionReport> torsion;

    bool injective_mod_p = false;
    bool bound_holds     = false;

    std::vector<StageRecord> stage_log;
  };

  // Runs the whole chain on the semigroup generated by the given matrices:
  // closure, zero, irreducibility, integral lattice, 0-minimal ideal, GGM,
  // maximal subgroup, prime choice, adapted basis, reduction mod p, the
  // injectivity criterion and the torsion check.
  //
  // Reducible or undecided inputs return a report with the corresponding
  // outcome. Throws Error(cap_exceeded) for closures beyond options.cap and
  // Error(internal_contradiction) when a step that must succeed on an
  // irreducible finite semigroup fails.
  BoundReport verify_bound(std::span<QMatrix const> generators, VerifyOptions const& options = {});

  // p^(n^2) for the chosen prime.
  Integer bound_for(std::size_t n, unsigned long p);

}  // namespace semibound

#endif  // SEMIBOUND_PIPELINE_HPP_
