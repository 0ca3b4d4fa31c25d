#ifndef SEMIBOUND_TOOLS_REPORT_JSON_HPP_
#define SEMIBOUND_TOOLS_REPORT_JSON_HPP_

#include <string_view>
#include <vector>

#include <json.hpp>

#include "semibound/arithmetic.hpp"
#include "semibound/green.hpp"
#include "semibound/invariant_subspaces.hpp"
#include "semibound/pipeline.hpp"
#include "semibound/semigroup.hpp"
#include "semibound/structure.hpp"

namespace semibound::tools {

  using json = nlohmann::ordered_json;

  struct GeneratorInput {
    std::size_t          dimension = 0;
    std::vector<QMatrix> generators;
  };

  // { "dimension": n, "generators": [[["a/b", ...], ...], ...] }. Entries may
  // also be JSON integers. Throws Error(parse) on malformed documents and
  // Error(dimension_mismatch) on matrices of the wrong shape.
  GeneratorInput parse_generators(json const& doc);
  GeneratorInput parse_generators_text(std::string_view text);

  json to_json(QMatrix const& m);
  json to_json(ZMatrix const& m);
  json to_json(FpMatrix const& m);
  json to_json(QVector const& v);  // also polynomials, low degree first
  json to_json(ZVector const& v);
  json to_json(Lattice const& l);

  json to_json(SemigroupTable const& s);
  json to_json(GreenStructure const& g);
  json to_json(MaximalSubgroup const& g);
  json to_json(IrreducibilityVerdict const& v);
  json to_json(ConjugationCertificate const& c);
  json to_json(GGMReport const& r);
  json to_json(SpanCertificate const& c);
  json to_json(AdaptedBasis const& a);
  json to_json(ModpImage const& m);
  json to_json(InjectivityVerdict const& v);
  json to_json(TorsionReport const& t);
  json to_json(BoundReport const& r);

}  // namespace semibound::tools

#endif  // SEMIBOUND_TOOLS_REPORT_JSON_HPP_
