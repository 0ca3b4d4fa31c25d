#include "semibound/pipeline.hpp"

#include <algorithm>
#include <sstream>

namespace semibound {

  namespace {
    [[noreturn]] void contradiction(std::string const& what) {
      throw Error(ErrorKind::internal_contradiction, what);
    }

    template <typename... Parts>
    std::string cat(Parts const&... parts) {
      std::ostringstream out;
      (out << ... << parts);
      return out.str();
    }
  }  // namespace

  std::string_view to_string(Outcome o) noexcept {
    switch (o) {
      case Outcome::checked:
        return "checked";
      case Outcome::reducible:
        return "reducible";
      case Outcome::inconclusive:
        return "inconclusive";
    }
    return "";
  }

  Integer bound_for(std::size_t n, unsigned long p) {
    Integer b;
    mpz_ui_pow_ui(b.get_mpz_t(), p, static_cast<unsigned long>(n * n));
    return b;
  }

  BoundReport verify_bound(std::span<QMatrix const> generators, VerifyOptions const& options) {
    BoundReport report;
    auto        log = [&report](std::string name, std::string detail) {
      report.stage_log.push_back({std::move(name), std::move(detail)});
    };

    SemigroupTable const raw = closure(generators, options.cap);
    report.n                 = raw.dimension();
    log("closure", cat("|S| = ", raw.size(), " from ", raw.generator_indices().size(),
                       " generators"));

    SemigroupTable const s = adjoin_zero(raw);
    report.zero_adjoined   = !raw.zero_index().has_value();
    report.size            = s.size();
    report.elements        = s.elements();
    report.zero_index      = *s.zero_index();
    log("adjoin_zero", report.zero_adjoined ? "zero appended" : "zero already present");

    report.irreducibility = is_irreducible(s);
    switch (report.irreducibility.verdict) {
      case Verdict::reducible:
        if (!verify_invariant_subspace(s, report.irreducibility.subspace)) {
          contradiction("reducibility certificate does not verify");
        }
        report.outcome = Outcome::reducible;
        log("irreducibility",
            cat("reducible: invariant subspace of dimension ", report.irreducibility.subspace.size()));
        return report;
      case Verdict::inconclusive:
        report.outcome = Outcome::inconclusive;
        log("irreducibility", "inconclusive");
        return report;
      case Verdict::irreducible:
        if (report.irreducibility.norton
            && !verify_norton_witness(s, *report.irreducibility.norton)) {
          contradiction("Norton certificate does not verify");
        }
        log("irreducibility", cat("irreducible (", to_string(report.irreducibility.kind),
                                  "), span dimension ", report.irreducibility.span_dim));
        break;
    }

    report.conjugation = integralize(s);
    if (!verify_conjugation(s, *report.conjugation)) {
      contradiction("conjugation into M_n(Z) does not preserve the product table");
    }
    log("integralize", cat("lattice index ", report.conjugation->lattice.index(),
                           " in (1/", report.conjugation->denominator, ")Z^n"));

    GreenStructure const green = green_relations(s);
    if (!check_stability(s, green).stable) {
      contradiction("finite semigroup is not stable");
    }
    log("green", cat(green.j_classes.size(), " J-classes, ", green.h_classes.size(),
                     " H-classes, stable"));

    Ideal const ideal = zero_minimal_ideal(s, green);
    report.ideal_size = ideal.size();
    if (!is_zero_simple(s, ideal)) {
      contradiction("0-minimal ideal is not 0-simple");
    }
    report.ggm = verify_ggm(s, green);
    if (!report.ggm.is_ggm()) {
      contradiction("irreducible semigroup is not generalized group mapping");
    }
    if (!report.ggm.unique_zero_minimal) {
      contradiction("generalized group mapping semigroup has several 0-minimal ideals");
    }
    log("ggm", cat("0-minimal ideal of size ", ideal.size(), ", faithful on both sides"));

    report.span = span_contains_identity(s, ideal);
    if (!report.span || !check_span_certificate(s, *report.span)) {
      contradiction("identity is not in the span of the 0-minimal ideal");
    }
    log("span", cat("identity = combination of ", report.span->support.size(),
                    " ideal elements"));

    auto const ids = idempotents(s);
    auto const e   = std::find_if(ids.begin(), ids.end(), [&](index_type i) {
      return i != report.zero_index && ideal.contains(i);
    });
    if (e == ids.end()) {
      contradiction("0-minimal ideal has no nonzero idempotent");
    }
    report.idempotent = *e;
    report.group      = maximal_subgroup_at(s, green, *e);
    report.aperiodic  = is_aperiodic(s, green);
    // Every H-class of the J-class of e maps bijectively onto G by r -> arb.
    std::size_t translated = 0;
    for (auto h : green.j_classes[green.j_class_of[*e]]) {
      auto const& h_class = green.h_classes[green.h_class_of[h]];
      if (h_class.front() == h) {
        green_translation(s, green, h_class, report.group);
        ++translated;
      }
    }
    log("maximal_subgroup", cat("e = #", *e, ", |G| = ", report.group.order(),
                                report.aperiodic ? ", aperiodic" : "", ", ", translated,
                                " H-classes translated onto G"));

    report.prescribed_prime = choose_prime(report.group);
    report.p                = options.prime_override.value_or(report.prescribed_prime);
    report.prime_overridden = report.p != report.prescribed_prime;
    if (!is_prime(report.p)) {
      throw Error(ErrorKind::not_prime, std::to_string(report.p) + " is not prime");
    }
    report.bound = bound_for(report.n, report.p);
    log("prime", cat("p = ", report.p,
                     report.prime_overridden ? cat(" (override; parity rule gives ",
                                                   report.prescribed_prime, ")")
                                             : std::string(" (parity rule)")));

    auto const& integral = report.conjugation->conjugated;
    report.adapted       = adapt_idempotent_basis(integral, integral[*e]);
    log("adapted_basis", cat("rank(e) = ", report.adapted->rank));

    report.image = mod_p(s, report.adapted->conjugated, report.p, ideal);
    if (report.image->images[*e].is_zero()) {
      contradiction("reduction kills the idempotent");
    }
    if (!report.image->zero_separated) {
      contradiction("reduction does not separate zero from the 0-minimal ideal");
    }
    report.criterion = injectivity_criterion<FpMatrix>(s, ideal, report.group,
                                                       report.image->images);
    if (!report.criterion.agrees()) {
      contradiction("injectivity criterion disagrees with direct comparison");
    }
    report.injective_mod_p = report.image->injective;
    if (!report.prime_overridden && !report.injective_mod_p) {
      contradiction("reduction modulo the prescribed prime is not injective");
    }
    log("mod_p", cat(report.image->distinct_count, " distinct images of ", s.size(),
                     report.injective_mod_p ? ", injective" : ", not injective"));

    std::vector<ZMatrix> group_elements;
    for (auto g : report.group.element_indices) {
      group_elements.push_back(report.adapted->conjugated[g]);
    }
    auto const blocks = restrict_to_block(group_elements, report.adapted->rank);
    report.torsion    = minkowski_check(blocks, report.p);
    if (!report.torsion->consistent()) {
      contradiction("torsion in the congruence kernel");
    }
    log("minkowski", cat(report.torsion->kernel_size, " group elements in the kernel mod ",
                         report.p, ", no violations"));

    Integer const image_count(static_cast<unsigned long>(report.image->distinct_count));
    if (image_count > report.bound) {
      contradiction("more images than matrices over Z/p");
    }
    report.bound_holds = Integer(static_cast<unsigned long>(report.size)) <= report.bound;
    if (report.injective_mod_p && !report.bound_holds) {
      contradiction("injective reduction but |S| exceeds p^(n^2)");
    }
    report.outcome = Outcome::checked;
    log("bound", cat("|S| = ", report.size, report.bound_holds ? " <= " : " > ", report.p,
                     "^", report.n * report.n, " = ", report.bound));
    return report;
  }

}  // namespace semibound
