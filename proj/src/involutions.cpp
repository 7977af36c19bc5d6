#include "gri/involutions.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>

#include "gri/error.hpp"

namespace gri {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

// Extends images of generators along the Cayley graph. `anti` selects
// (x g)^phi = g^phi x^phi instead of x^phi g^phi. Returns an empty map when
// the images are inconsistent.
ElementMap extend_from_generators(const FiniteGroup& g, const std::vector<int>& gens,
                                  const std::vector<int>& images, bool anti) {
  ElementMap phi(g.order(), -1);
  phi[g.identity()] = g.identity();
  std::vector<int> queue{g.identity()};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const int x = queue[q];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int y = g.mul(x, gens[i]);
      const int v = anti ? g.mul(images[i], phi[x]) : g.mul(phi[x], images[i]);
      if (phi[y] < 0) {
        phi[y] = v;
        queue.push_back(y);
      } else if (phi[y] != v) {
        return {};
      }
    }
  }
  if (static_cast<int>(queue.size()) != g.order()) return {};
  return phi;
}

bool is_bijection(const ElementMap& m) {
  std::vector<char> seen(m.size(), 0);
  for (int v : m) {
    if (v < 0 || v >= static_cast<int>(m.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

std::optional<std::string> involution_violation(const FiniteGroup& g, const ElementMap& map,
                                                bool require_involutive) {
  const int n = g.order();
  if (static_cast<int>(map.size()) != n) return "map has " + std::to_string(map.size()) + " entries, expected " + std::to_string(n);
  for (int x = 0; x < n; ++x) {
    if (map[x] < 0 || map[x] >= n) return "image of " + g.label(x) + " out of range";
  }
  std::vector<char> hit(n, 0);
  for (int x = 0; x < n; ++x) {
    if (hit[map[x]]) return "map is not injective at " + g.label(map[x]);
    hit[map[x]] = 1;
  }
  if (require_involutive) {
    for (int x = 0; x < n; ++x) {
      if (map[map[x]] != x) return "(" + g.label(x) + "*)* != " + g.label(x);
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (map[g.mul(x, y)] != g.mul(map[y], map[x])) {
        return "(" + g.label(x) + " " + g.label(y) + ")* != " + g.label(y) + "* " + g.label(x) + "*";
      }
  return std::nullopt;
}

GroupInvolution::GroupInvolution(GroupPtr group, ElementMap map) : GroupInvolution(std::move(group), std::move(map), true) {}

GroupInvolution::GroupInvolution(GroupPtr group, ElementMap map, bool require_involutive)
    : group_(std::move(group)), map_(std::move(map)) {
  if (auto why = involution_violation(*group_, map_, require_involutive)) {
    throw Error(ErrorCode::InvalidInvolution,
                std::string(require_involutive ? "not an involution of " : "not an anti-automorphism of ") +
                    group_->name() + ": " + *why);
  }
  for (int x = 0; x < static_cast<int>(map_.size()) && involutive_; ++x) involutive_ = map_[map_[x]] == x;
}

GroupInvolution GroupInvolution::anti_automorphism(GroupPtr group, ElementMap map) {
  return GroupInvolution(std::move(group), std::move(map), false);
}

bool GroupInvolution::is_inversion() const { return map_ == group_->inverses(); }

bool GroupInvolution::is_identity() const {
  for (int x = 0; x < static_cast<int>(map_.size()); ++x)
    if (map_[x] != x) return false;
  return true;
}

GroupInvolution inversion(const GroupPtr& g) { return GroupInvolution(g, g->inverses()); }

GroupInvolution canonical_involution(const GroupPtr& g, const StructureAnalysis& analysis) {
  if (!analysis.slc) throw Error(ErrorCode::NotSLC, g->name() + " is not an SLC group");
  const int s = analysis.slc->s;
  ElementMap map(g->order());
  for (int x = 0; x < g->order(); ++x) map[x] = analysis.is_central(x) ? x : g->mul(s, x);
  return GroupInvolution(g, std::move(map));
}

GroupInvolution canonical_involution(const GroupPtr& g) { return canonical_involution(g, analyze(*g)); }

GroupInvolution involution_from_assignment(const GroupPtr& g, std::string_view assignment,
                                           bool require_involutive) {
  const auto& named = g->generators();
  if (named.empty()) {
    throw Error(ErrorCode::InvalidInvolution, g->name() + " has no named generators to assign");
  }
  std::vector<int> gens, images;
  for (const auto& gen : named) {
    gens.push_back(gen.element);
    images.push_back(-1);
  }
  for (const auto& item : split(assignment, ',')) {
    if (trim(item).empty()) continue;
    const auto arrow = item.find("->");
    if (arrow == std::string::npos) {
      throw Error(ErrorCode::InvalidInvolution, "expected 'generator->word' in '" + item + "'");
    }
    const std::string lhs = trim(std::string_view(item).substr(0, arrow));
    const std::string rhs = trim(std::string_view(item).substr(arrow + 2));
    auto it = std::find_if(named.begin(), named.end(), [&](const NamedGenerator& n) { return n.name == lhs; });
    if (it == named.end()) {
      throw Error(ErrorCode::UnknownGenerator, "unknown generator '" + lhs + "' in involution assignment");
    }
    images[it - named.begin()] = g->element_from_text(rhs);
  }
  for (std::size_t i = 0; i < images.size(); ++i)
    if (images[i] < 0) images[i] = gens[i];
  ElementMap map = extend_from_generators(*g, gens, images, true);
  if (map.empty()) {
    throw Error(ErrorCode::InvalidInvolution,
                "assignment '" + std::string(assignment) + "' does not extend to an anti-automorphism of " + g->name());
  }
  if (!require_involutive) return GroupInvolution::anti_automorphism(g, std::move(map));
  return GroupInvolution(g, std::move(map));
}

Orientation::Orientation(GroupPtr group, Subgroup kernel) : group_(std::move(group)), kernel_(std::move(kernel)) {
  const int n = group_->order();
  if (kernel_.parent_order() != n || !is_subgroup(*group_, kernel_.members())) {
    throw Error(ErrorCode::InvalidOrientation, "orientation kernel is not a subgroup of " + group_->name());
  }
  if (kernel_.size() != n && 2 * kernel_.size() != n) {
    throw Error(ErrorCode::InvalidOrientation,
                "orientation kernel has index " + std::to_string(n / kernel_.size()) + ", expected 2");
  }
  sign_.resize(n);
  for (int x = 0; x < n; ++x) sign_[x] = kernel_.contains(x) ? 1 : -1;
}

Orientation Orientation::trivial(GroupPtr group) {
  std::vector<int> all(group->order());
  for (int x = 0; x < group->order(); ++x) all[x] = x;
  const int n = group->order();
  return Orientation(std::move(group), Subgroup(n, std::move(all)));
}

Orientation orientation_from_selector(const GroupPtr& g, std::string_view selector) {
  const std::string sel = trim(selector);
  if (sel.rfind("kernel=", 0) == 0) {
    std::vector<int> gens;
    for (const auto& tok : split(std::string_view(sel).substr(7), ',')) {
      if (tok.empty()) throw Error(ErrorCode::InvalidOrientation, "empty kernel generator in '" + sel + "'");
      gens.push_back(g->element_from_text(tok));
    }
    Subgroup kernel = subgroup_generated(*g, gens);
    if (2 * kernel.size() != g->order()) {
      throw Error(ErrorCode::InvalidOrientation, "subgroup generated by '" + sel.substr(7) + "' has order " +
                                                     std::to_string(kernel.size()) + ", not index 2 in " + g->name());
    }
    return Orientation(g, std::move(kernel));
  }
  int index = -1;
  const auto [ptr, ec] = std::from_chars(sel.data(), sel.data() + sel.size(), index);
  if (ec != std::errc() || ptr != sel.data() + sel.size()) {
    throw Error(ErrorCode::InvalidOrientation, "orientation selector must be 'kernel=<gens>' or an index, got '" + sel + "'");
  }
  auto all = orientations(g);
  if (index < 0 || index >= static_cast<int>(all.size())) {
    throw Error(ErrorCode::InvalidOrientation, "orientation index " + sel + " out of range (" + g->name() + " has " +
                                                   std::to_string(all.size()) + ")");
  }
  return all[index];
}

CompatibilityResult is_compatible(const GroupInvolution& inv, const Orientation& ori) {
  if (inv.group_ptr() != ori.group_ptr() && !inv.group().same_table(ori.group())) {
    throw Error(ErrorCode::MismatchedCarrier, "involution and orientation live on different groups");
  }
  for (int x = 0; x < inv.group().order(); ++x) {
    if (ori.sign(x) == -1 && ori.sign(inv(x)) == 1) return {false, x};
  }
  return {true, std::nullopt};
}

bool kernel_and_complement_invariant(const GroupInvolution& inv, const Orientation& ori) {
  for (int x = 0; x < inv.group().order(); ++x) {
    if (ori.kernel().contains(x) != ori.kernel().contains(inv(x))) return false;
  }
  return true;
}

OrientedInvolutionConfig::OrientedInvolutionConfig(GroupInvolution inv, Orientation ori, int inv_index, int ori_index)
    : involution(std::move(inv)),
      orientation(std::move(ori)),
      involution_index(inv_index),
      orientation_index(ori_index) {
  compatible = is_compatible(involution, orientation).compatible;
}

std::vector<int> greedy_generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  Subgroup current = subgroup_generated(g, gens);
  while (current.size() < g.order()) {
    int best = -1, best_size = 0;
    for (int x = 0; x < g.order(); ++x) {
      if (current.contains(x)) continue;
      gens.push_back(x);
      const int size = subgroup_generated(g, gens).size();
      gens.pop_back();
      if (size > best_size) {
        best = x;
        best_size = size;
      }
    }
    gens.push_back(best);
    current = subgroup_generated(g, gens);
  }
  return gens;
}

std::vector<ElementMap> automorphisms(const FiniteGroup& g) {
  const std::vector<int> gens = greedy_generating_set(g);
  std::vector<std::vector<int>> candidates;
  for (int s : gens) {
    std::vector<int> c;
    for (int x = 0; x < g.order(); ++x)
      if (g.element_order(x) == g.element_order(s)) c.push_back(x);
    candidates.push_back(std::move(c));
  }
  std::vector<ElementMap> out;
  std::vector<int> images(gens.size());
  std::function<void(std::size_t)> assign = [&](std::size_t k) {
    if (k == gens.size()) {
      ElementMap phi = extend_from_generators(g, gens, images, false);
      if (phi.empty() || !is_bijection(phi)) return;
      for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y)
          if (phi[g.mul(x, y)] != g.mul(phi[x], phi[y])) return;
      out.push_back(std::move(phi));
      return;
    }
    for (int c : candidates[k]) {
      images[k] = c;
      assign(k + 1);
    }
  };
  assign(0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<GroupInvolution> involutions(const GroupPtr& g) {
  std::vector<ElementMap> maps;
  for (const auto& phi : automorphisms(*g)) {
    bool order_two = true;
    for (int x = 0; x < g->order() && order_two; ++x) order_two = phi[phi[x]] == x;
    if (!order_two) continue;
    ElementMap star(g->order());
    for (int x = 0; x < g->order(); ++x) star[x] = phi[g->inv(x)];
    maps.push_back(std::move(star));
  }
  std::sort(maps.begin(), maps.end());
  std::vector<GroupInvolution> out;
  out.reserve(maps.size());
  for (auto& m : maps) out.emplace_back(g, std::move(m));
  return out;
}

std::vector<Orientation> orientations(const GroupPtr& g) {
  std::vector<Orientation> out;
  for (auto& k : index2_subgroups(*g)) out.emplace_back(g, std::move(k));
  return out;
}

std::string PairCountInterpretation::name() const {
  std::string s = include_trivial_orientation ? "all-orientations" : "nontrivial-orientations";
  s += include_inversion ? "/all-involutions" : "/non-inversion-involutions";
  s += compatible_only ? "/compatible" : "/any";
  return s;
}

long PairEnumeration::selected_count() const {
  for (const auto& i : interpretations) {
    if (i.include_trivial_orientation == kSelectedIncludesTrivialOrientation &&
        i.include_inversion == kSelectedIncludesInversion && i.compatible_only) {
      return i.count;
    }
  }
  return 0;
}

long PairEnumeration::compatible_count() const {
  return std::count_if(pairs.begin(), pairs.end(), [](const OrientedInvolutionConfig& c) { return c.compatible; });
}

PairEnumeration enumerate_compatible_pairs(const GroupPtr& g) {
  PairEnumeration out;
  const auto invs = involutions(g);
  const auto oris = orientations(g);
  out.involution_count = static_cast<int>(invs.size());
  out.orientation_count = static_cast<int>(oris.size());
  for (std::size_t i = 0; i < invs.size(); ++i)
    for (std::size_t k = 0; k < oris.size(); ++k)
      out.pairs.emplace_back(invs[i], oris[k], static_cast<int>(i), static_cast<int>(k));

  std::vector<Orientation> with_trivial{Orientation::trivial(g)};
  with_trivial.insert(with_trivial.end(), oris.begin(), oris.end());
  for (bool trivial : {false, true})
    for (bool inversion_too : {false, true})
      for (bool compatible_only : {false, true}) {
        PairCountInterpretation interp{trivial, inversion_too, compatible_only, 0};
        for (const auto& inv : invs) {
          if (!inversion_too && inv.is_inversion()) continue;
          for (const auto& ori : with_trivial) {
            if (!trivial && ori.is_trivial()) continue;
            if (compatible_only && !is_compatible(inv, ori).compatible) continue;
            ++interp.count;
          }
        }
        out.interpretations.push_back(interp);
      }
  return out;
}

}  // namespace gri
