#include "ringlab/lattice.hpp"

#include <algorithm>
#include <unordered_set>

#include "ringlab/error.hpp"

namespace ringlab {

  namespace {
    struct MembersHash {
      std::size_t operator()(std::vector<Index> const& v) const noexcept {
        std::size_t h = v.size();
        for (auto x : v) {
          h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
      }
    };

    void sort_canonically(std::vector<ElemSet>& sets) {
      std::sort(sets.begin(), sets.end(), [](ElemSet const& a, ElemSet const& b) {
        if (a.size() != b.size()) {
          return a.size() < b.size();
        }
        return a.members < b.members;
      });
    }

    std::vector<ElemSet> all_subgroups(FiniteRing const& fr, std::size_t max_count) {
      if (fr.size() > 256) {
        throw Error(ErrorCode::too_large, "subgroup enumeration needs |R| <= 256");
      }
      std::vector<ElemSet> found{zero_set(fr)};
      found[0].kind = ClosureKind::additive;
      std::unordered_set<std::vector<Index>, MembersHash> seen{found[0].members};
      for (std::size_t i = 0; i < found.size(); ++i) {
        // one extension per coset of the current subgroup
        std::vector<char> covered(fr.size(), 0);
        for (auto m : found[i].members) {
          covered[m] = 1;
        }
        for (Index g = 1; g < fr.size(); ++g) {
          if (covered[g]) {
            continue;
          }
          for (auto m : found[i].members) {
            covered[fr.add(m, g)] = 1;
          }
          auto gens = found[i].spanning();
          gens.push_back(g);
          auto next = closure(fr, gens, ClosureKind::additive);
          if (seen.insert(next.members).second) {
            found.push_back(std::move(next));
            if (found.size() > max_count) {
              throw Error(ErrorCode::too_large, fr.ring().id() + " has more than "
                                                    + std::to_string(max_count)
                                                    + " additive subgroups");
            }
          }
        }
      }
      return found;
    }

    std::vector<ElemSet> lie_ideals(FiniteRing const& fr) {
      if (fr.size() > 6561) {
        throw Error(ErrorCode::too_large, "Lie ideal enumeration needs |R| <= 6561");
      }
      std::unordered_set<std::vector<Index>, MembersHash> seen;
      std::vector<ElemSet>                                 principal;
      for (Index x = 0; x < fr.size(); ++x) {
        auto l = closure(fr, std::vector<Index>{x}, ClosureKind::lie);
        if (seen.insert(l.members).second) {
          principal.push_back(std::move(l));
        }
      }
      std::vector<ElemSet> found = principal;
      for (std::size_t i = 0; i < found.size(); ++i) {
        for (auto const& p : principal) {
          if (is_subset(p, found[i])) {
            continue;
          }
          auto next = join(fr, found[i], p);
          next.kind = ClosureKind::lie;
          if (seen.insert(next.members).second) {
            found.push_back(std::move(next));
          }
        }
      }
      return found;
    }
  }  // namespace

  std::vector<ElemSet> enumerate_additive_subgroups(FiniteRing const& fr, LatticeFilter filter,
                                                    std::size_t max_count) {
    std::vector<ElemSet> out;
    if (filter == LatticeFilter::all) {
      out = all_subgroups(fr, max_count);
    } else {
      out = lie_ideals(fr);
      if (filter == LatticeFilter::noncentral_lie_ideals) {
        std::erase_if(out, [&](ElemSet const& l) { return set_predicates(fr, l).is_central; });
      }
    }
    sort_canonically(out);
    return out;
  }

}  // namespace ringlab
