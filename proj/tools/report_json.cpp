#include "report_json.hpp"

#include <string>

namespace semibound::tools {

  namespace {
    Rational entry_from_json(json const& x) {
      if (x.is_string()) {
        return parse_rational(x.get<std::string>());
      }
      if (x.is_number_integer()) {
        return Rational(std::to_string(x.get<long long>()));
      }
      throw Error(ErrorKind::parse, "matrix entries must be strings \"a/b\" or integers");
    }

    template <typename T>
    json optional_to_json(std::optional<T> const& x) {
      return x ? to_json(*x) : json(nullptr);
    }

    json pair_to_json(std::optional<std::pair<index_type, index_type>> const& p) {
      if (!p) {
        return nullptr;
      }
      return json::array({p->first, p->second});
    }

    json partition_to_json(Partition const& p) {
      json out = json::array();
      for (auto const& c : p) {
        out.push_back(c);
      }
      return out;
    }

    json matrices_to_json(std::vector<ZMatrix> const& ms) {
      json out = json::array();
      for (auto const& m : ms) {
        out.push_back(to_json(m));
      }
      return out;
    }
  }  // namespace

  GeneratorInput parse_generators(json const& doc) {
    if (!doc.is_object() || !doc.contains("dimension") || !doc.contains("generators")) {
      throw Error(ErrorKind::parse, "expected an object with \"dimension\" and \"generators\"");
    }
    auto const& dim = doc["dimension"];
    if (!dim.is_number_integer() || dim.get<long long>() < 1) {
      throw Error(ErrorKind::parse, "\"dimension\" must be a positive integer");
    }
    GeneratorInput input;
    input.dimension = dim.get<std::size_t>();
    auto const& gens = doc["generators"];
    if (!gens.is_array() || gens.empty()) {
      throw Error(ErrorKind::parse, "\"generators\" must be a non-empty array");
    }
    std::size_t const n = input.dimension;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      auto const& g = gens[k];
      if (!g.is_array() || g.size() != n) {
        throw Error(ErrorKind::dimension_mismatch,
                    "generator " + std::to_string(k) + " does not have " + std::to_string(n) + " rows");
      }
      QMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        if (!g[i].is_array() || g[i].size() != n) {
          throw Error(ErrorKind::dimension_mismatch,
                      "generator " + std::to_string(k) + " row " + std::to_string(i)
                          + " does not have " + std::to_string(n) + " entries");
        }
        for (std::size_t j = 0; j < n; ++j) {
          m(i, j) = entry_from_json(g[i][j]);
        }
      }
      input.generators.push_back(std::move(m));
    }
    return input;
  }

  GeneratorInput parse_generators_text(std::string_view text) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (json::parse_error const& e) {
      throw Error(ErrorKind::parse, e.what());
    }
    return parse_generators(doc);
  }

  json to_json(QMatrix const& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) {
        row.push_back(to_string(m(i, j)));
      }
      out.push_back(std::move(row));
    }
    return out;
  }

  json to_json(ZMatrix const& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) {
        row.push_back(to_string(m(i, j)));
      }
      out.push_back(std::move(row));
    }
    return out;
  }

  json to_json(FpMatrix const& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.dim(); ++j) {
        row.push_back(m(i, j));
      }
      out.push_back(std::move(row));
    }
    return out;
  }

  json to_json(QVector const& v) {
    json out = json::array();
    for (auto const& x : v) {
      out.push_back(to_string(x));
    }
    return out;
  }

  json to_json(ZVector const& v) {
    json out = json::array();
    for (auto const& x : v) {
      out.push_back(to_string(x));
    }
    return out;
  }

  json to_json(Lattice const& l) {
    json basis = json::array();
    for (auto const& b : l.basis()) {
      basis.push_back(to_json(b));
    }
    return {{"ambient", l.ambient()},
            {"rank", l.rank()},
            {"basis", std::move(basis)},
            {"pivots", l.pivots()},
            {"index", to_string(l.index())}};
  }

  json to_json(SemigroupTable const& s) {
    json elements = json::array();
    for (auto const& m : s.elements()) {
      elements.push_back(to_json(m));
    }
    json table = json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < s.size(); ++j) {
        row.push_back(s.product(i, j));
      }
      table.push_back(std::move(row));
    }
    return {{"n", s.dimension()},
            {"size", s.size()},
            {"generator_indices", s.generator_indices()},
            {"zero_index", s.zero_index() ? json(*s.zero_index()) : json(nullptr)},
            {"elements", std::move(elements)},
            {"product", std::move(table)}};
  }

  json to_json(GreenStructure const& g) {
    return {{"r_classes", partition_to_json(g.r_classes)},
            {"l_classes", partition_to_json(g.l_classes)},
            {"j_classes", partition_to_json(g.j_classes)},
            {"h_classes", partition_to_json(g.h_classes)}};
  }

  json to_json(MaximalSubgroup const& g) {
    return {{"identity", g.identity_index}, {"order", g.order()}, {"elements", g.element_indices}};
  }

  json to_json(IrreducibilityVerdict const& v) {
    json subspace = json::array();
    for (auto const& w : v.subspace) {
      subspace.push_back(to_json(w));
    }
    json norton = nullptr;
    if (v.norton) {
      norton = {{"element", v.norton->element},
                {"factor", to_json(v.norton->factor)},
                {"kernel_vector", to_json(v.norton->kernel_vector)},
                {"dual_kernel_vector", to_json(v.norton->dual_kernel_vector)}};
    }
    return {{"verdict", to_string(v.verdict)},
            {"certificate", to_string(v.kind)},
            {"span_dim", v.span_dim},
            {"subspace", std::move(subspace)},
            {"norton", std::move(norton)}};
  }

  json to_json(ConjugationCertificate const& c) {
    return {{"denominator", to_string(c.denominator)},
            {"lattice", to_json(c.lattice)},
            {"basis", to_json(c.basis)},
            {"inverse", to_json(c.inverse)},
            {"conjugated", matrices_to_json(c.conjugated)}};
  }

  json to_json(GGMReport const& r) {
    return {{"ideal", r.ideal.element_indices},
            {"left_faithful", r.left_faithful},
            {"right_faithful", r.right_faithful},
            {"left_witness", pair_to_json(r.left_witness)},
            {"right_witness", pair_to_json(r.right_witness)},
            {"unique_zero_minimal", r.unique_zero_minimal}};
  }

  json to_json(SpanCertificate const& c) {
    return {{"support", c.support}, {"coefficients", to_json(c.coefficients)}};
  }

  json to_json(AdaptedBasis const& a) {
    return {{"rank", a.rank},
            {"u", to_json(a.u)},
            {"u_inverse", to_json(a.u_inverse)},
            {"idempotent_form", to_json(a.idempotent_form)},
            {"conjugated", matrices_to_json(a.conjugated)}};
  }

  json to_json(ModpImage const& m) {
    json images = json::array();
    for (auto const& x : m.images) {
      images.push_back(to_json(x));
    }
    return {{"p", m.p},
            {"distinct_count", m.distinct_count},
            {"injective", m.injective},
            {"zero_separated", m.zero_separated},
            {"images", std::move(images)}};
  }

  json to_json(InjectivityVerdict const& v) {
    return {{"zero_separated", v.zero_separated},
            {"injective_on_group", v.injective_on_group},
            {"criterion", v.criterion},
            {"injective", v.injective},
            {"agrees", v.agrees()}};
  }

  json to_json(TorsionReport const& t) {
    return {{"p", t.p},
            {"kernel_size", t.kernel_size},
            {"violations", t.violations},
            {"consistent", t.consistent()}};
  }

  json to_json(BoundReport const& r) {
    json elements = json::array();
    for (auto const& m : r.elements) {
      elements.push_back(to_json(m));
    }
    json log = json::array();
    for (auto const& stage : r.stage_log) {
      log.push_back({{"stage", stage.name}, {"detail", stage.detail}});
    }
    bool const checked = r.outcome == Outcome::checked;
    json       out     = {{"outcome", to_string(r.outcome)},
                          {"n", r.n},
                          {"size", r.size},
                          {"zero_adjoined", r.zero_adjoined},
                          {"zero_index", r.zero_index},
                          {"elements", std::move(elements)},
                          {"irreducibility", to_json(r.irreducibility)}};
    if (!checked) {
      out["stage_log"] = std::move(log);
      return out;
    }
    out["conjugation"]          = optional_to_json(r.conjugation);
    out["ggm"]                  = to_json(r.ggm);
    out["ideal_size"]           = r.ideal_size;
    out["span"]                 = optional_to_json(r.span);
    out["idempotent"]           = r.idempotent;
    out["group"]                = to_json(r.group);
    out["group_order"]          = r.group.order();
    out["aperiodic"]            = r.aperiodic;
    out["prescribed_prime"]     = r.prescribed_prime;
    out["p"]                    = r.p;
    out["prime_overridden"]     = r.prime_overridden;
    out["bound"]                = to_string(r.bound);
    out["adapted"]              = optional_to_json(r.adapted);
    out["image"]                = optional_to_json(r.image);
    out["criterion"]            = to_json(r.criterion);
    out["injectivity_criterion"] = r.criterion.criterion;
    out["torsion"]              = optional_to_json(r.torsion);
    out["injective_mod_p"]      = r.injective_mod_p;
    out["bound_holds"]          = r.bound_holds;
    out["stage_log"]            = std::move(log);
    return out;
  }

}  // namespace semibound::tools
