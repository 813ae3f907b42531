// Command-line front end. Exit codes: 0 success / all pass, 1 a check or
// decision failed, 2 usage, parse or domain errors.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ringlab/derivations.hpp"
#include "ringlab/error.hpp"
#include "ringlab/funcfield.hpp"
#include "ringlab/harness.hpp"
#include "ringlab/lattice.hpp"
#include "ringlab/predicates.hpp"
#include "ringlab/spec.hpp"
#include "ringlab/subset_expr.hpp"

using namespace ringlab;

namespace {

  std::string family_name(Family f) {
    switch (f) {
      case Family::zmod:
        return "Z";
      case Family::gf:
        return "GF";
      case Family::matrix:
        return "M";
      case Family::upper_tri:
        return "UT";
      case Family::product:
        return "prod";
      case Family::func_field:
        return "FF";
    }
    return "?";
  }

  std::string format_set(FiniteRing const& fr, ElemSet const& s) {
    std::string out = "add{";
    bool        first = true;
    for (auto g : s.spanning()) {
      if (g == 0) {
        continue;
      }
      out += first ? "" : ", ";
      out += fr.format(g);
      first = false;
    }
    return out + (first ? "0}" : "}");
  }

  std::string format_witness(FiniteRing const& fr, std::vector<Index> const& w) {
    std::string out;
    for (auto i : w) {
      out += (out.empty() ? "" : "; ") + fr.format(i);
    }
    return out;
  }

  int ring_info(std::string const& spec) {
    auto ring = build_ring(spec);
    std::cout << "ring           " << ring.id() << "\n"
              << "family         " << family_name(ring.family()) << "\n"
              << "characteristic " << ring.characteristic() << "\n"
              << "cardinality    "
              << (ring.cardinality() ? std::to_string(*ring.cardinality()) : "infinite") << "\n"
              << "enumerable     " << (ring.enumerable() ? "yes" : "no") << "\n";
    if (!ring.enumerable()) {
      return 0;
    }
    FiniteRing fr(ring);
    auto       cls = classify_ring(fr);
    auto       yn  = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "generators     " << fr.generators().size() << "\n"
              << "primeness      " << to_string(cls.primeness) << "\n"
              << "commutative    " << yn(cls.commutative) << "\n"
              << "reduced        " << yn(cls.reduced) << "\n"
              << "domain         " << yn(cls.domain) << "\n"
              << "regular        " << yn(cls.regular) << "\n"
              << "exceptional    " << yn(cls.exceptional) << "\n";
    for (auto [name, kind] : {std::pair{"|Id|", SpecialKind::Id}, std::pair{"|U| ", SpecialKind::U},
                              std::pair{"|N| ", SpecialKind::N}, std::pair{"|Z| ", SpecialKind::Z},
                              std::pair{"|E| ", SpecialKind::E}}) {
      std::cout << name << "           " << special_subset(fr, kind).size() << "\n";
    }
    return 0;
  }

  int set_cmd(std::string const& spec, std::string const& expr, bool list, bool size_only) {
    FiniteRing fr(build_ring(spec));
    auto       s = evaluate_subset(fr, expr);
    if (size_only) {
      std::cout << s.size() << "\n";
      return 0;
    }
    std::cout << "size " << s.size() << "\n";
    if (list) {
      for (auto i : s.members) {
        std::cout << fr.format(i) << "\n";
      }
    } else if (s.kind != ClosureKind::raw) {
      std::cout << format_set(fr, s) << "\n";
    }
    return 0;
  }

  int check_cmd(std::string const& kind, std::string const& spec, std::string const& expr,
                bool witness) {
    FiniteRing fr(build_ring(spec));
    auto       x = evaluate_subset(fr, expr);
    auto       v = kind == "xsemiprime" ? x_semiprime(fr, x) : x_prime(fr, x);
    std::cout << (v.holds ? "holds" : "fails");
    if (witness && !v.holds) {
      std::cout << "  witness: " << format_witness(fr, v.witness);
    }
    std::cout << "\n";
    return v.holds ? 0 : 1;
  }

  int derivation_cmd(std::string const& spec, std::string const& b_text, bool criterion,
                     bool oracle, std::string const& on) {
    auto ring = build_ring(spec);
    auto b    = evaluate(ring, b_text);
    if (!criterion && !oracle) {
      criterion = oracle = true;
    }
    if (!ring.enumerable()) {
      // only the criterion-level test is available on M(2,FF(2))
      if (oracle) {
        throw Error(ErrorCode::not_enumerable, ring.id() + " is not enumerable; no oracle");
      }
      auto t = translates_invertible(ring, b);
      std::cout << "criterion (b+β invertible for all β): " << to_string(t) << "\n";
      return t == Translates::yes ? 0 : 1;
    }
    FiniteRing fr(ring);
    auto       bi   = fr.index_of(b);
    bool       good = true;
    if (criterion) {
      bool c = thm21_criterion(fr, bi);
      std::cout << "criterion " << (c ? "true" : "false") << "\n";
      if (ring.family() == Family::matrix && ring.children()[0].is_field()) {
        std::cout << "determinant criterion " << (cor2_criterion(ring, b) ? "true" : "false")
                  << "\n";
      }
      good = good && c;
    }
    if (oracle) {
      auto target = on.empty() ? whole_ring(fr) : evaluate_subset(fr, on);
      auto v      = d_semiprime_oracle(fr, bi, target);
      std::cout << "oracle " << (v.holds ? "holds" : "fails");
      if (!v.holds) {
        std::cout << "  witness: " << format_witness(fr, v.witness);
      }
      std::cout << "\n";
      good = good && v.holds;
    }
    return good ? 0 : 1;
  }

  int verify_cmd(std::string const& id, std::string const& catalog_path,
                 std::string const& json_path, bool parallel, bool no_timing) {
    auto catalog = catalog_path.empty() ? default_catalog() : load_catalog(catalog_path);
    auto report  = id == "all" ? run_suite(catalog, parallel) : run_check(id, catalog);
    std::cout << to_table(report);
    if (!json_path.empty()) {
      std::ofstream out(json_path);
      if (!out) {
        throw Error(ErrorCode::parse, "cannot write " + json_path);
      }
      out << to_json(report, !no_timing);
    }
    return exit_code(report);
  }

  int lattice_cmd(std::string const& spec, std::string const& filter,
                  std::string const& classify) {
    FiniteRing fr(build_ring(spec));
    auto       f    = filter == "all" ? LatticeFilter::all : LatticeFilter::lie_ideals;
    auto       sets = enumerate_additive_subgroups(fr, f);
    std::cout << sets.size() << (f == LatticeFilter::all ? " additive subgroups" : " Lie ideals")
              << "\n";
    for (auto const& s : sets) {
      std::cout << s.size() << "  " << format_set(fr, s);
      if (!classify.empty()) {
        auto x = evaluate_subset(fr, classify, {{"L", s}});
        if (x.members.empty()) {
          std::cout << "  (empty)";
        } else {
          std::cout << "  semiprime=" << (x_semiprime(fr, x).holds ? "yes" : "no")
                    << " prime=" << (x_prime(fr, x).holds ? "yes" : "no");
        }
      }
      std::cout << "\n";
    }
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite ring laboratory for X-semiprime and X-prime rings"};
  app.require_subcommand(1);

  int code = 0;

  auto*       ring = app.add_subcommand("ring", "Ring information");
  auto*       info = ring->add_subcommand("info", "Print invariants of a ring");
  std::string spec;
  info->add_option("spec", spec, "Ring spec, e.g. M(2,GF(3))")->required();
  ring->require_subcommand(1);
  info->callback([&] { code = ring_info(spec); });

  auto*       set = app.add_subcommand("set", "Evaluate a subset expression");
  std::string expr;
  bool        list = false, size_only = false;
  set->add_option("spec", spec)->required();
  set->add_option("--expr", expr, "Subset expression")->required();
  set->add_flag("--list", list, "List every member");
  set->add_flag("--size", size_only, "Print only the size");
  set->callback([&] { code = set_cmd(spec, expr, list, size_only); });

  auto*       check = app.add_subcommand("check", "Decide X-semiprimeness or X-primeness");
  std::string kind;
  bool        witness = false;
  check->add_option("kind", kind)->required()->check(CLI::IsMember({"xsemiprime", "xprime"}));
  check->add_option("spec", spec)->required();
  check->add_option("--x", expr, "Subset expression for X")->required();
  check->add_flag("--witness", witness, "Print the canonical witness on failure");
  check->callback([&] { code = check_cmd(kind, spec, expr, witness); });

  auto*       deriv = app.add_subcommand("derivation", "Inner derivation ad_b");
  std::string b, on;
  bool        criterion = false, oracle = false;
  deriv->add_option("spec", spec)->required();
  deriv->add_option("--b", b, "Element b")->required();
  deriv->add_flag("--criterion", criterion, "Annihilator/determinant criterion only");
  deriv->add_flag("--oracle", oracle, "Brute-force d(A)-semiprime decision only");
  deriv->add_option("--on", on, "Subset A for d(A) (default R)");
  deriv->callback([&] { code = derivation_cmd(spec, b, criterion, oracle, on); });

  auto*       verify = app.add_subcommand("verify", "Run registry checks");
  std::string id, catalog, json;
  bool        parallel = false, no_timing = false;
  verify->add_option("check_id", id, "Check id or 'all'")->required();
  verify->add_option("--catalog", catalog, "Catalog file (JSON array or one spec per line)");
  verify->add_option("--json", json, "Write the JSON report here");
  verify->add_flag("--parallel", parallel, "Run checks on all hardware threads");
  verify->add_flag("--no-timing", no_timing, "Write null timings to the JSON report");
  verify->callback([&] {
    if (id != "all" && !is_registered(id)) {
      throw Error(ErrorCode::unknown_check, "unknown check id '" + id + "'");
    }
    code = verify_cmd(id, catalog, json, parallel, no_timing);
  });

  auto*       lattice = app.add_subcommand("lattice", "Enumerate additive subgroups or Lie ideals");
  std::string filter, classify;
  lattice->add_option("spec", spec)->required();
  lattice->add_option("--filter", filter)->required()->check(CLI::IsMember({"all", "lie"}));
  lattice->add_option("--classify-x", classify,
                      "Subset expression in L to decide for each member");
  lattice->callback([&] { code = lattice_cmd(spec, filter, classify); });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}
