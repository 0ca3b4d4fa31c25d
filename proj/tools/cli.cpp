#include "cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "report_json.hpp"
#include "semibound/corpus.hpp"

namespace semibound::tools {

  namespace {
    struct Options {
      std::string                  input;
      std::string                  entry;
      std::size_t                  cap = kDefaultCap;
      std::optional<unsigned long> prime;
      std::string                  out_file;
      std::string                  format = "json";
    };

    struct Result {
      json        doc;
      std::string text;
      int         code = exit_ok;
    };

    GeneratorInput load_input(Options const& o) {
      if (!o.entry.empty()) {
        auto e = corpus_entry(o.entry);
        if (!e) {
          throw Error(ErrorKind::parse, "no corpus entry named " + o.entry);
        }
        return {e->dimension, e->generators};
      }
      if (o.input.empty()) {
        throw Error(ErrorKind::parse, "an input file or --entry is required");
      }
      std::ifstream in(o.input);
      if (!in) {
        throw Error(ErrorKind::parse, "cannot read " + o.input);
      }
      std::stringstream buffer;
      buffer << in.rdbuf();
      return parse_generators_text(buffer.str());
    }

    std::string matrix_text(QMatrix const& m) {
      return to_string(m);
    }

    int verdict_code(Verdict v) {
      switch (v) {
        case Verdict::irreducible:
          return exit_ok;
        case Verdict::reducible:
          return exit_reducible;
        case Verdict::inconclusive:
          return exit_inconclusive;
      }
      return exit_failure;
    }

    int report_code(BoundReport const& r) {
      switch (r.outcome) {
        case Outcome::reducible:
          return exit_reducible;
        case Outcome::inconclusive:
          return exit_inconclusive;
        case Outcome::checked:
          return r.bound_holds ? exit_ok : exit_failure;
      }
      return exit_failure;
    }

    std::string report_text(BoundReport const& r) {
      std::ostringstream t;
      t << "outcome: " << to_string(r.outcome) << "\n";
      t << "n: " << r.n << "\nsize: " << r.size << "\n";
      t << "irreducibility: " << to_string(r.irreducibility.verdict) << " ("
        << to_string(r.irreducibility.kind) << ")\n";
      if (r.outcome == Outcome::checked) {
        t << "group_order: " << r.group.order() << "\naperiodic: " << (r.aperiodic ? "true" : "false")
          << "\np: " << r.p << (r.prime_overridden ? " (override)" : "") << "\nbound: "
          << to_string(r.bound) << "\ninjective_mod_p: " << (r.injective_mod_p ? "true" : "false")
          << "\ninjectivity_criterion: " << (r.criterion.criterion ? "true" : "false")
          << "\nbound_holds: " << (r.bound_holds ? "true" : "false") << "\n";
      }
      for (auto const& stage : r.stage_log) {
        t << "  [" << stage.name << "] " << stage.detail << "\n";
      }
      return t.str();
    }

    Result cmd_closure(Options const& o) {
      auto const           input = load_input(o);
      SemigroupTable const s     = closure(input.generators, o.cap);
      std::ostringstream   t;
      t << "size: " << s.size() << "\n";
      for (std::size_t i = 0; i < s.size(); ++i) {
        t << "#" << i << " " << matrix_text(s.element(i)) << "\n";
      }
      return {to_json(s), t.str(), exit_ok};
    }

    Result cmd_green(Options const& o) {
      auto const           input = load_input(o);
      SemigroupTable const s     = adjoin_zero(closure(input.generators, o.cap));
      GreenStructure const g     = green_relations(s);
      auto const           ids   = idempotents(s);
      auto const           stab  = check_stability(s, g);

      json groups = json::array();
      for (auto e : ids) {
        groups.push_back(to_json(maximal_subgroup_at(s, g, e)));
      }
      json doc = {{"size", s.size()},
                  {"zero_index", *s.zero_index()},
                  {"green", to_json(g)},
                  {"idempotents", ids},
                  {"maximal_subgroups", std::move(groups)},
                  {"aperiodic", is_aperiodic(s, g)},
                  {"stable", stab.stable}};

      std::ostringstream t;
      t << "size: " << s.size() << "\nR-classes: " << g.r_classes.size()
        << "\nL-classes: " << g.l_classes.size() << "\nJ-classes: " << g.j_classes.size()
        << "\nH-classes: " << g.h_classes.size() << "\nidempotents: " << ids.size()
        << "\naperiodic: " << (is_aperiodic(s, g) ? "true" : "false")
        << "\nstable: " << (stab.stable ? "true" : "false") << "\n";
      return {std::move(doc), t.str(), exit_ok};
    }

    Result cmd_irreducible(Options const& o) {
      auto const           input = load_input(o);
      SemigroupTable const s     = adjoin_zero(closure(input.generators, o.cap));
      auto const           v     = is_irreducible(s);
      std::ostringstream   t;
      t << "verdict: " << to_string(v.verdict) << "\ncertificate: " << to_string(v.kind)
        << "\nspan_dim: " << v.span_dim << "\n";
      for (auto const& w : v.subspace) {
        t << "  subspace vector:";
        for (auto const& x : w) {
          t << " " << to_string(x);
        }
        t << "\n";
      }
      return {to_json(v), t.str(), verdict_code(v.verdict)};
    }

    Result cmd_integralize(Options const& o) {
      auto const           input = load_input(o);
      SemigroupTable const s     = closure(input.generators, o.cap);
      auto const           cert  = integralize(s);
      if (!verify_conjugation(s, cert)) {
        throw Error(ErrorKind::internal_contradiction, "conjugation does not verify");
      }
      json doc        = to_json(cert);
      doc["verified"] = true;
      std::ostringstream t;
      t << "denominator: " << to_string(cert.denominator)
        << "\nlattice index: " << to_string(cert.lattice.index())
        << "\nbasis: " << matrix_text(cert.basis) << "\n";
      for (std::size_t i = 0; i < cert.conjugated.size(); ++i) {
        t << "#" << i << " " << to_string(cert.conjugated[i]) << "\n";
      }
      return {std::move(doc), t.str(), exit_ok};
    }

    Result cmd_verify_bound(Options const& o) {
      auto const input = load_input(o);
      auto const r     = verify_bound(input.generators, {o.cap, o.prime});
      return {to_json(r), report_text(r), report_code(r)};
    }

    Result cmd_minkowski(Options const& o) {
      auto const input = load_input(o);
      auto const r     = verify_bound(input.generators, {o.cap, o.prime});
      if (r.outcome != Outcome::checked) {
        return {{{"outcome", to_string(r.outcome)}}, "outcome: " + std::string(to_string(r.outcome)) + "\n",
                report_code(r)};
      }
      std::vector<ZMatrix> group_elements;
      for (auto g : r.group.element_indices) {
        group_elements.push_back(r.adapted->conjugated[g]);
      }
      auto const blocks = restrict_to_block(group_elements, r.adapted->rank);
      json       mats   = json::array();
      for (auto const& b : blocks) {
        mats.push_back(to_json(b));
      }
      json doc = {{"group", to_json(r.group)},
                  {"rank", r.adapted->rank},
                  {"blocks", std::move(mats)},
                  {"torsion", to_json(*r.torsion)}};
      std::ostringstream t;
      t << "|G|: " << r.group.order() << "\nblock rank: " << r.adapted->rank << "\np: " << r.p
        << "\nkernel size: " << r.torsion->kernel_size
        << "\nviolations: " << r.torsion->violations.size() << "\n";
      return {std::move(doc), t.str(), r.torsion->consistent() ? exit_ok : exit_contradiction};
    }

    Result cmd_corpus_run(Options const& o) {
      json               entries = json::array();
      std::ostringstream t;
      bool               all_ok = true;
      for (auto const& entry : corpus()) {
        VerifyOptions opts{entry.cap ? std::min(*entry.cap, o.cap) : o.cap, o.prime};
        json          item = {{"name", entry.name},
                              {"dimension", entry.dimension},
                              {"expected_size", entry.expected_size ? json(*entry.expected_size) : json(nullptr)},
                              {"expected_irreducible", entry.expected_irreducible},
                              {"finite", entry.finite},
                              {"notes", entry.notes}};
        std::string status;
        bool        ok = false;
        try {
          auto const r   = verify_bound(entry.generators, opts);
          status         = to_string(r.outcome);
          bool const fit = !entry.expected_size || *entry.expected_size == r.size;
          if (entry.expected_irreducible) {
            ok = fit && r.outcome == Outcome::checked && r.bound_holds
                 && (o.prime || r.injective_mod_p);
          } else {
            ok = fit && r.outcome == Outcome::reducible;
          }
          item["status"] = status;
          item["report"] = to_json(r);
        } catch (Error const& e) {
          if (e.kind() != ErrorKind::cap_exceeded) {
            throw;
          }
          status          = "cap_exceeded";
          ok              = !entry.finite;
          item["status"]  = status;
          item["error"]   = e.what();
        }
        item["as_expected"] = ok;
        all_ok              = all_ok && ok;
        entries.push_back(std::move(item));
        t << entry.name << ": " << status << (ok ? "" : " (UNEXPECTED)") << "\n";
      }
      json doc = {{"entries", std::move(entries)}, {"all_as_expected", all_ok}};
      return {std::move(doc), t.str(), all_ok ? exit_ok : exit_contradiction};
    }

    int emit(Result const& r, Options const& o, std::ostream& out, std::ostream& err) {
      std::string body = o.format == "text" ? r.text : r.doc.dump(2) + "\n";
      if (o.out_file.empty()) {
        out << body;
      } else {
        std::ofstream file(o.out_file, std::ios::binary);
        if (!file || !(file << body)) {
          err << "cannot write " << o.out_file << "\n";
          return exit_failure;
        }
      }
      return r.code;
    }

    int error_code(ErrorKind kind) {
      switch (kind) {
        case ErrorKind::cap_exceeded:
          return exit_cap_exceeded;
        case ErrorKind::internal_contradiction:
          return exit_contradiction;
        default:
          return exit_failure;
      }
    }
  }  // namespace

  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of size bounds for finite irreducible rational matrix semigroups",
                 "semibound"};
    app.require_subcommand(1);

    Options                                  o;
    unsigned long                            prime = 0;
    std::function<Result(Options const&)>    action;

    auto add = [&](std::string const& name, std::string const& help, bool takes_input,
                   std::function<Result(Options const&)> fn) {
      CLI::App* sub = app.add_subcommand(name, help);
      if (takes_input) {
        sub->add_option("input", o.input, "JSON file with dimension and generators");
        sub->add_option("--entry", o.entry, "use a named corpus entry as input");
      }
      sub->add_option("--cap", o.cap, "maximum number of elements before giving up")
          ->check(CLI::PositiveNumber);
      sub->add_option("--prime", prime, "reduce modulo P instead of the prescribed prime");
      sub->add_option("--out", o.out_file, "write the result to FILE");
      sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
      sub->callback([&action, fn] { action = fn; });
      return sub;
    };

    add("closure", "enumerate the semigroup and its multiplication table", true, cmd_closure);
    add("green", "Green's relations, idempotents and maximal subgroups", true, cmd_green);
    add("irreducible", "decide irreducibility over Q with a certificate", true, cmd_irreducible);
    add("integralize", "conjugate into integer matrices via an invariant lattice", true,
        cmd_integralize);
    add("verify-bound", "run the full bound check and print the report", true, cmd_verify_bound);
    add("minkowski-check", "torsion check of the maximal subgroup modulo p", true, cmd_minkowski);
    CLI::App* corpus_cmd = app.add_subcommand("corpus", "shipped example semigroups");
    corpus_cmd->require_subcommand(1);
    CLI::App* run = corpus_cmd->add_subcommand("run", "verify every corpus entry");
    run->add_option("--cap", o.cap, "maximum number of elements before giving up")
        ->check(CLI::PositiveNumber);
    run->add_option("--prime", prime, "reduce modulo P instead of the prescribed prime");
    run->add_option("--out", o.out_file, "write the result to FILE");
    run->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    run->callback([&action] { action = cmd_corpus_run; });

    std::vector<char const*> argv{"semibound"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      // --help and --version exit 0; every usage error is exit_failure.
      return app.exit(e, out, err) == 0 ? exit_ok : exit_failure;
    }
    if (prime != 0) {
      o.prime = prime;
    }

    try {
      return emit(action(o), o, out, err);
    } catch (Error const& e) {
      json doc = {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
      emit({doc, std::string(e.what()) + "\n", error_code(e.kind())}, o, out, err);
      err << e.what() << "\n";
      return error_code(e.kind());
    }
  }

}  // namespace semibound::tools
