#include "dar/families.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "dar/error.hpp"

namespace dar {

std::string to_string(const Element& e) {
  return (e.kind == Element::Kind::vertex ? "v" : "c") + std::to_string(e.id);
}

Element parse_element(const std::string& text) {
  require(!text.empty(), "empty element name");
  std::size_t start = 0;
  Element::Kind kind = Element::Kind::vertex;
  if (text[0] == 'v' || text[0] == 'c') {
    kind = text[0] == 'c' ? Element::Kind::colour : Element::Kind::vertex;
    start = 1;
  }
  require(start < text.size() && std::all_of(text.begin() + start, text.end(), ::isdigit) &&
              text.size() - start <= 9,
          "bad element '" + text + "' (expected v<id>, c<id> or an integer)");
  return {kind, std::stoi(text.substr(start))};
}

void SetFamily::normalise() {
  std::sort(universe.begin(), universe.end());
  require(std::adjacent_find(universe.begin(), universe.end()) == universe.end(), "universe repeats an element");
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    require(std::adjacent_find(s.begin(), s.end()) == s.end(), "a set repeats an element");
    for (const Element& e : s)
      require(std::binary_search(universe.begin(), universe.end(), e),
              "element " + to_string(e) + " is not in the universe");
  }
  if (groups.empty()) return;
  std::vector<int> seen(sets.size(), 0);
  for (const auto& g : groups)
    for (int id : g) {
      require(id >= 0 && id < static_cast<int>(sets.size()), "group refers to a missing set");
      ++seen[id];
    }
  require(std::all_of(seen.begin(), seen.end(), [](int n) { return n == 1; }),
          "groups must partition the sets");
}

SetFamily SetFamily::subfamily(const std::vector<int>& group_ids) const {
  SetFamily result;
  result.universe = universe;
  for (int g : group_ids) {
    require(g >= 0 && g < static_cast<int>(groups.size()), "no such group");
    std::vector<int> ids;
    for (int id : groups[g]) {
      ids.push_back(static_cast<int>(result.sets.size()));
      result.sets.push_back(sets[id]);
    }
    result.groups.push_back(std::move(ids));
  }
  return result;
}

std::vector<std::vector<int>> overlap_matrix(const SetFamily& f) {
  const std::size_t n = f.sets.size();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      std::vector<Element> common;
      std::set_intersection(f.sets[i].begin(), f.sets[i].end(), f.sets[j].begin(), f.sets[j].end(),
                            std::back_inserter(common));
      a[i][j] = a[j][i] = static_cast<int>(common.size());
    }
  return a;
}

CoveringSolution fractional_width_solution(const SetFamily& f) {
  require(!f.sets.empty(), "fractional width needs at least one set");
  for (const auto& s : f.sets) require(!s.empty(), "fractional width needs non-empty sets");
  return solve_symmetric_covering(overlap_matrix(f));
}

Rational fractional_width(const SetFamily& f) { return fractional_width_solution(f).value; }

SetFamily build_gadget_families(int k, int d, const EdgeColouring& c) {
  require(k >= 2 && d >= 1, "need k >= 2 and d >= 1");
  const Gadget gad = make_gadget(2 * k, d);
  require(is_proper(gad.graph, c), "families need a proper colouring of the gadget");
  SetFamily f;
  std::set<Element> universe;
  for (int i = 1; i <= k; ++i) {
    std::vector<int> group;
    for (int j = 1; j <= d; ++j) {
      std::vector<Element> triple{Element::colour(c.at(gad.into_parallel(i, j))),
                                  Element::vertex(gad.parallel(i, j)),
                                  Element::colour(c.at(gad.out_of_parallel(i, j)))};
      universe.insert(triple.begin(), triple.end());
      group.push_back(static_cast<int>(f.sets.size()));
      f.sets.push_back(std::move(triple));
    }
    f.groups.push_back(std::move(group));
  }
  f.universe.assign(universe.begin(), universe.end());
  f.normalise();
  for (const auto& s : f.sets) ensure(s.size() == 3, "gadget family set is not a triple");
  return f;
}

WidthCriterionReport width_criterion(int k, int d, const EdgeColouring& c) {
  require(k <= 20, "too many groups for subset enumeration");
  const SetFamily f = build_gadget_families(k, d, c);
  WidthCriterionReport report;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> ids;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) ids.push_back(i);
    const Rational w = fractional_width(f.subfamily(ids));
    if (!(w > static_cast<int>(ids.size()) - 1)) report.holds = false;
    report.widths.emplace_back(mask, w);
  }
  return report;
}

bool width_criterion_check(int k, int d, const EdgeColouring& c) { return width_criterion(k, d, c).holds; }

std::optional<std::vector<int>> disjoint_representatives(const SetFamily& f) {
  require(!f.groups.empty(), "disjoint representatives need groups");
  std::vector<int> chosen;
  std::multiset<Element> used;
  auto fits = [&](const std::vector<Element>& s) {
    return std::none_of(s.begin(), s.end(), [&](const Element& e) { return used.count(e) > 0; });
  };
  std::function<bool(std::size_t)> pick = [&](std::size_t g) {
    if (g == f.groups.size()) return true;
    for (int id : f.groups[g]) {
      const auto& s = f.sets[id];
      if (!fits(s)) continue;
      used.insert(s.begin(), s.end());
      chosen.push_back(id);
      if (pick(g + 1)) return true;
      chosen.pop_back();
      for (const Element& e : s) used.erase(used.find(e));
    }
    return false;
  };
  if (!pick(0)) return std::nullopt;
  return chosen;
}

Embedding decode_gadget_cycle(int k, int d, const EdgeColouring& c, const SetFamily& f,
                              const std::vector<int>& representatives) {
  const Gadget gad = make_gadget(2 * k, d);
  require(static_cast<int>(representatives.size()) == k, "need one representative per group");
  std::vector<Vertex> map(2 * k);
  for (int i = 1; i <= k; ++i) {
    const auto& s = f.sets.at(representatives[i - 1]);
    const auto v = std::find_if(s.begin(), s.end(), [](const Element& e) { return e.kind == Element::Kind::vertex; });
    require(v != s.end(), "representative has no vertex element");
    map[2 * (i - 1)] = gad.hub(i);
    map[2 * (i - 1) + 1] = v->id;
  }
  const Pattern cycle(cycle_graph(2 * k));
  Embedding e = make_embedding(gad.graph, c, cycle, std::move(map));
  ensure(is_rainbow_embedding(gad.graph, c, cycle, e), "disjoint representatives decode to a non-rainbow cycle");
  return e;
}

BollobasReport bollobas_check(const std::vector<std::pair<std::vector<int>, std::vector<int>>>& pairs) {
  BollobasReport report;
  report.n = static_cast<int>(pairs.size());
  auto as_set = [](const std::vector<int>& v) { return std::set<int>(v.begin(), v.end()); };
  std::vector<std::set<int>> as, bs;
  for (const auto& [a, b] : pairs) {
    as.push_back(as_set(a));
    bs.push_back(as_set(b));
  }
  auto fail = [&](std::string why) {
    report.conditions_hold = false;
    report.violation = std::move(why);
    return report;
  };
  if (!pairs.empty()) {
    report.a = static_cast<int>(as[0].size());
    report.b = static_cast<int>(bs[0].size());
  }
  report.bound = binomial(report.a + report.b, report.a);
  auto meets = [](const std::set<int>& x, const std::set<int>& y) {
    return std::any_of(x.begin(), x.end(), [&](int e) { return y.count(e) > 0; });
  };
  for (int i = 0; i < report.n; ++i) {
    if (as[i].size() != pairs[i].first.size() || bs[i].size() != pairs[i].second.size())
      return fail("pair " + std::to_string(i) + " repeats an element");
    if (static_cast<int>(as[i].size()) != report.a || static_cast<int>(bs[i].size()) != report.b)
      return fail("pair " + std::to_string(i) + " breaks uniform sizes");
    if (meets(as[i], bs[i])) return fail("A_" + std::to_string(i) + " meets B_" + std::to_string(i));
  }
  for (int i = 0; i < report.n; ++i)
    for (int j = 0; j < report.n; ++j)
      if (i != j && !meets(as[i], bs[j]))
        return fail("A_" + std::to_string(i) + " misses B_" + std::to_string(j));
  report.conditions_hold = true;
  ensure(report.n <= report.bound, "cross-intersecting family exceeds C(a+b, a)");
  return report;
}

}  // namespace dar
