#include "ringlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "harness_internal.hpp"
#include "ringlab/error.hpp"
#include "ringlab/lattice.hpp"
#include "ringlab/spec.hpp"

namespace ringlab {

  namespace detail {

    RingContext::RingContext(std::string const& spec) : ring_(build_ring(spec)) {}

    FiniteRing const& RingContext::fr() {
      std::call_once(fr_flag_, [&] { fr_ = std::make_unique<FiniteRing>(ring_); });
      return *fr_;
    }

    ElemSet const& RingContext::R() {
      return r_.get([&] { return whole_ring(fr()); });
    }
    ElemSet const& RingContext::Id() {
      return id_.get([&] { return special_subset(fr(), SpecialKind::Id); });
    }
    ElemSet const& RingContext::U() {
      return u_.get([&] { return special_subset(fr(), SpecialKind::U); });
    }
    ElemSet const& RingContext::N() {
      return n_.get([&] { return special_subset(fr(), SpecialKind::N); });
    }
    ElemSet const& RingContext::Z() {
      return z_.get([&] { return special_subset(fr(), SpecialKind::Z); });
    }
    ElemSet const& RingContext::E() {
      return e_.get([&] { return closure(fr(), Id().members, ClosureKind::additive); });
    }
    ElemSet const& RingContext::ER() {
      return er_.get([&] { return bracket_set(fr(), E(), R()); });
    }
    ElemSet const& RingContext::RR() {
      return rr_.get([&] { return bracket_set(fr(), R(), R()); });
    }

    PrimenessResult const& RingContext::primeness() {
      return primeness_.get([&] { return ringlab::primeness(fr()); });
    }

    RingClassification const& RingContext::cls() {
      return cls_.get([&] { return classify_ring(fr()); });
    }

    std::vector<Index> const& RingContext::central_idempotents() {
      return cidem_.get([&] {
        std::vector<Index> out;
        std::set_intersection(Id().members.begin(), Id().members.end(), Z().members.begin(),
                              Z().members.end(), std::back_inserter(out));
        return out;
      });
    }

    std::vector<Index> const& RingContext::components() {
      return components_.get([&] {
        auto const&        cidem = central_idempotents();
        std::vector<Index> out;
        for (auto f : cidem) {
          if (f == 0) {
            continue;
          }
          bool primitive = std::none_of(cidem.begin(), cidem.end(), [&](Index g) {
            return g != 0 && g != f && fr().mul(g, f) == g;
          });
          if (primitive) {
            out.push_back(f);
          }
        }
        return out;
      });
    }

    std::vector<ElemSet> const& RingContext::lie_ideals() {
      return lie_.get([&] {
        if (fr().size() <= kLatticeLimit) {
          return enumerate_additive_subgroups(fr(), LatticeFilter::lie_ideals);
        }
        std::vector<ElemSet> out;
        auto add = [&](ElemSet const& seed) {
          auto l = closure(fr(), seed, ClosureKind::lie);
          if (std::find(out.begin(), out.end(), l) == out.end()) {
            out.push_back(std::move(l));
          }
        };
        add(zero_set(fr()));
        add(Z());
        add(RR());
        add(ER());
        add(E());
        add(R());
        if (auto inst = three_component_instance(fr())) {
          add(*inst);
        }
        std::sort(out.begin(), out.end(), [](ElemSet const& a, ElemSet const& b) {
          return std::pair(a.size(), a.members) < std::pair(b.size(), b.members);
        });
        return out;
      });
    }

    bool RingContext::lie_lattice_complete() {
      return fr().size() <= kLatticeLimit;
    }

    std::vector<ElemSet> const& RingContext::noncentral_lie_ideals() {
      return noncentral_.get([&] {
        std::vector<ElemSet> out;
        for (auto const& l : lie_ideals()) {
          if (!is_subset(l, Z())) {
            out.push_back(l);
          }
        }
        return out;
      });
    }

    std::string RingContext::fmt(std::vector<Index> const& w) {
      std::string out;
      for (auto i : w) {
        if (!out.empty()) {
          out += "; ";
        }
        out += fmt(i);
      }
      return out;
    }

    std::string RingContext::describe(ElemSet const& s) {
      std::string out = "add{";
      bool        first = true;
      for (auto g : s.spanning()) {
        if (g == 0) {
          continue;
        }
        out += first ? "" : ",";
        out += fmt(g);
        first = false;
      }
      return out + (first ? "0}" : "}");
    }

    bool RingContext::suitable() {
      return suitable_.get([&] {
        auto const& f = fr();
        for (Index x = 0; x < f.size(); ++x) {
          auto               d = f.sub(x, f.mul(x, x));
          std::vector<Index> seed;
          for (auto g : f.generators()) {
            seed.push_back(f.mul(g, d));
          }
          auto rd = closure(f, seed, ClosureKind::additive);
          bool found = std::any_of(Id().members.begin(), Id().members.end(),
                                   [&](Index e) { return rd.contains(f.sub(e, x)); });
          if (!found) {
            return false;
          }
        }
        return true;
      });
    }

    std::vector<NamedSet> standard_sets(RingContext& ctx) {
      return {{"Id", ctx.Id()}, {"U", ctx.U()},     {"N", ctx.N()}, {"Z", ctx.Z()},
              {"E", ctx.E()},   {"[E,R]", ctx.ER()}, {"R", ctx.R()}, {"[R,R]", ctx.RR()}};
    }

    bool hypothesis(CheckResult& res, bool ok, std::string const& what) {
      if (!ok) {
        res.expect("hypothesis: " + what, false);
        res.skip("hypotheses unmet");
      }
      return ok;
    }

    std::optional<ElemSet> three_component_instance(FiniteRing const& fr) {
      if (fr.ring().id() != "prod(GF(2),M(2,GF(2)),M(2,GF(3)))") {
        return std::nullopt;
      }
      std::vector<Index> seed;
      for (auto text : {"(0, I, 0)", "(0, [[0,1],[1,0]], 0)", "(0, 0, e(1,2))",
                        "(0, 0, e(2,1))", "(0, 0, e(1,1) - e(2,2))"}) {
        seed.push_back(fr.index_of(evaluate(fr.ring(), text)));
      }
      return closure(fr, seed, ClosureKind::additive);
    }

    namespace {
      std::vector<CheckDef> const& definitions() {
        static std::vector<CheckDef> const defs = [] {
          auto all  = core_checks();
          auto more = semiprime_checks();
          all.insert(all.end(), more.begin(), more.end());
          std::sort(all.begin(), all.end(),
                    [](CheckDef const& a, CheckDef const& b) { return a.info.id < b.info.id; });
          return all;
        }();
        return defs;
      }

      CheckDef const& find_check(std::string const& id) {
        for (auto const& d : definitions()) {
          if (d.info.id == id) {
            return d;
          }
        }
        throw Error(ErrorCode::unknown_check, "unknown check id '" + id + "'");
      }

      CheckResult run_one(CheckDef const& def, RingContext& ctx) {
        CheckResult res;
        res.check_id = def.info.id;
        res.ring     = ctx.id();
        auto start   = std::chrono::steady_clock::now();
        try {
          if (def.needs_enumeration && !ctx.enumerable()) {
            res.skip("non-enumerable");
          } else {
            def.run(ctx, res);
          }
        } catch (Error const& e) {
          if (e.code() == ErrorCode::hypothesis) {
            hypothesis(res, false, e.what());
          } else if (e.code() == ErrorCode::too_large) {
            res.skip("too large");
          } else {
            res.expect(std::string("no exception: ") + e.what(), false);
          }
        } catch (std::exception const& e) {
          res.expect(std::string("no exception: ") + e.what(), false);
        }
        res.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now()
                                                            - start)
                     .count();
        return res;
      }

      struct Task {
        CheckDef const* def;
        RingContext*    ctx;         // null: instance ring missing from catalog
        std::string     ring_label;  // used when ctx is null
      };

      Report run(std::vector<CheckDef const*> const& defs,
                 std::vector<std::string> const& catalog, bool parallel) {
        Report report;
        std::map<std::string, std::unique_ptr<RingContext>> contexts;
        for (auto const& spec : catalog) {
          auto ctx = std::make_unique<RingContext>(spec);
          report.catalog.push_back(ctx->id());
          contexts.emplace(ctx->id(), std::move(ctx));
        }

        std::vector<Task> tasks;
        for (auto const* def : defs) {
          if (def->instance_ring) {
            auto id = build_ring(*def->instance_ring).id();
            auto it = contexts.find(id);
            tasks.push_back({def, it == contexts.end() ? nullptr : it->second.get(), id});
            continue;
          }
          for (auto const& [id, ctx] : contexts) {
            tasks.push_back({def, ctx.get(), id});
          }
        }

        report.results.resize(tasks.size());
        auto execute = [&](std::size_t k) {
          auto const& t = tasks[k];
          if (t.ctx) {
            report.results[k] = run_one(*t.def, *t.ctx);
          } else {
            CheckResult res;
            res.check_id = t.def->info.id;
            res.ring     = t.ring_label;
            res.skip("ring not in catalog");
            report.results[k] = std::move(res);
          }
        };

        unsigned workers = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1;
        if (workers == 1) {
          for (std::size_t k = 0; k < tasks.size(); ++k) {
            execute(k);
          }
        } else {
          std::atomic<std::size_t> next{0};
          std::vector<std::thread> pool;
          for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
              for (auto k = next++; k < tasks.size(); k = next++) {
                execute(k);
              }
            });
          }
          for (auto& th : pool) {
            th.join();
          }
        }

        std::stable_sort(report.results.begin(), report.results.end(),
                         [](CheckResult const& a, CheckResult const& b) {
                           return std::tie(a.check_id, a.ring) < std::tie(b.check_id, b.ring);
                         });
        return report;
      }
    }  // namespace

  }  // namespace detail

  std::vector<CheckInfo> const& registry() {
    static std::vector<CheckInfo> const infos = [] {
      std::vector<CheckInfo> out;
      for (auto const& d : detail::definitions()) {
        out.push_back(d.info);
      }
      return out;
    }();
    return infos;
  }

  bool is_registered(std::string const& check_id) {
    auto const& r = registry();
    return std::any_of(r.begin(), r.end(),
                       [&](CheckInfo const& c) { return c.id == check_id; });
  }

  std::vector<std::string> default_catalog() {
    return {"Z(4)",
            "Z(6)",
            "GF(2)",
            "GF(3)",
            "GF(4)",
            "GF(8)",
            "GF(9)",
            "M(2,GF(2))",
            "M(2,GF(3))",
            "M(2,GF(4))",
            "M(2,Z(4))",
            "M(3,GF(2))",
            "UT(2,GF(2))",
            "UT(2,GF(3))",
            "prod(M(2,GF(2)),GF(2))",
            "prod(GF(2),M(2,GF(2)),M(2,GF(3)))",
            "M(2,FF(2))"};
  }

  std::vector<std::string> load_catalog(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorCode::parse, "cannot read catalog file " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto text = buffer.str();

    std::vector<std::string> specs;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(text);
      } catch (nlohmann::json::exception const& e) {
        throw Error(ErrorCode::parse, "catalog " + path + ": " + e.what());
      }
      for (auto const& entry : doc) {
        if (!entry.is_string()) {
          throw Error(ErrorCode::parse, "catalog " + path + ": entries must be strings");
        }
        specs.push_back(entry.get<std::string>());
      }
    } else {
      std::istringstream lines(text);
      std::string        line;
      while (std::getline(lines, line)) {
        line = line.substr(0, line.find('#'));
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) {
          continue;
        }
        auto e = line.find_last_not_of(" \t\r");
        specs.push_back(line.substr(b, e - b + 1));
      }
    }
    std::vector<std::string> out;
    for (auto const& s : specs) {
      auto spec = parse_ring_spec(s);
      validate(spec);
      out.push_back(to_string(spec));
    }
    return out;
  }

  bool Report::any_failed() const {
    return std::any_of(results.begin(), results.end(),
                       [](CheckResult const& r) { return r.failed(); });
  }

  Report run_check(std::string const& check_id, std::vector<std::string> const& catalog) {
    return detail::run({&detail::find_check(check_id)}, catalog, false);
  }

  Report run_suite(std::vector<std::string> const& catalog, bool parallel) {
    std::vector<detail::CheckDef const*> defs;
    for (auto const& d : detail::definitions()) {
      defs.push_back(&d);
    }
    return detail::run(defs, catalog, parallel);
  }

  int exit_code(Report const& report) {
    return report.any_failed() ? 1 : 0;
  }

}  // namespace ringlab
