#include "gri/catalog.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <utility>

#include "gri/error.hpp"

namespace gri {

namespace {

struct Entry {
  std::string name;
  std::function<FiniteGroup()> build;
  std::string presentation;
};

FiniteGroup alternating4() {
  // a = (0 1 2), b = (0 1)(2 3)
  return from_permutations("A4", {{1, 2, 0, 3}, {1, 0, 3, 2}}, {"a", "b"});
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = {
      {"C2", [] { return make_cyclic(2); }, "<a | a^2>"},
      {"C3", [] { return make_cyclic(3); }, "<a | a^3>"},
      {"C4", [] { return make_cyclic(4); }, "<a | a^4>"},
      {"C2xC2", [] { return direct_product(make_cyclic(2), make_cyclic(2)); }, "<a,b | a^2, b^2, a b = b a>"},
      {"C5", [] { return make_cyclic(5); }, "<a | a^5>"},
      {"C6", [] { return make_cyclic(6); }, "<a | a^6>"},
      {"S3", [] { return make_dihedral(3); }, "<a,b | a^3, b^2, b a = a^-1 b>"},
      {"C8", [] { return make_cyclic(8); }, "<a | a^8>"},
      {"C4xC2", [] { return direct_product(make_cyclic(4), make_cyclic(2)); }, "<a,b | a^4, b^2, a b = b a>"},
      {"C2xC2xC2",
       [] { return direct_product(direct_product(make_cyclic(2), make_cyclic(2)), make_cyclic(2)); },
       "<a,b,c | a^2, b^2, c^2, a b = b a, a c = c a, b c = c b>"},
      {"D4", [] { return make_dihedral(4); }, "<a,b | a^4, b^2, b a = a^-1 b>"},
      {"Q8", [] { return make_quaternion(2); }, "<i,j | i^4, i^2 j^-2, j^-1 i j i>"},
      {"C12", [] { return make_cyclic(12); }, "<a | a^12>"},
      {"D6", [] { return make_dihedral(6); }, "<a,b | a^6, b^2, b a = a^-1 b>"},
      {"A4", [] { return alternating4(); }, "<a,b | a^3, b^2, a b a b a b>"},
      {"D8", [] { return make_dihedral(8); }, "<a,b | a^8, b^2, b a = a^-1 b>"},
      {"Q16", [] { return make_quaternion(4); }, "<a,b | a^8, a^4 b^-2, b^-1 a b a>"},
      {"D4xC2", [] { return direct_product(make_dihedral(4), make_cyclic(2)); },
       "<a,b,c | a^4, b^2, c^2, b a = a^-1 b, a c = c a, b c = c b>"},
      {"Q8xC2", [] { return direct_product(make_quaternion(2), make_cyclic(2)); },
       "<i,j,a | i^4, i^2 j^-2, j^-1 i j i, a^2, i a = a i, j a = a j>"},
  };
  return list;
}

std::string canonical_name(std::string_view name) {
  if (name == "C2^2") return "C2xC2";
  if (name == "C2^3") return "C2xC2xC2";
  return std::string(name);
}

const Entry* find_entry(std::string_view name) {
  const std::string key = canonical_name(name);
  for (const auto& e : entries())
    if (e.name == key) return &e;
  return nullptr;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : entries()) out.push_back(e.name);
    return out;
  }();
  return names;
}

std::optional<GroupPtr> find_catalog_group(std::string_view name) {
  const Entry* entry = find_entry(name);
  if (!entry) return std::nullopt;
  static std::mutex mutex;
  static std::map<std::string, GroupPtr> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(entry->name);
  if (it == cache.end()) it = cache.emplace(entry->name, share(entry->build().renamed(entry->name))).first;
  return it->second;
}

GroupPtr catalog_group(std::string_view name) {
  if (auto g = find_catalog_group(name)) return *g;
  throw Error(ErrorCode::NotFound, "unknown catalog group '" + std::string(name) + "'");
}

std::string catalog_presentation(std::string_view name) {
  const Entry* entry = find_entry(name);
  if (!entry) throw Error(ErrorCode::NotFound, "unknown catalog group '" + std::string(name) + "'");
  return entry->presentation;
}

}  // namespace gri
