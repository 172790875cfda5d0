#include <algorithm>
#include <set>

#include "json.hpp"
#include "stallings/constructions.hpp"

namespace stallings {

using nlohmann::json;

std::string_view to_string(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::free: return "free";
    case ConstructionKind::amalgam: return "amalgam";
    case ConstructionKind::hnn: return "hnn";
  }
  return "?";
}

ConstructionKind parse_construction_kind(std::string_view text) {
  if (text == "free") return ConstructionKind::free;
  if (text == "amalgam") return ConstructionKind::amalgam;
  if (text == "hnn") return ConstructionKind::hnn;
  throw Error("unknown construction kind '" + std::string(text) + "' (expected free, amalgam or hnn)");
}

namespace {

// Tables of a pregroup under construction, indexed by carrier position.
struct Tables {
  std::vector<std::string> ids;
  Elem identity = 0;
  std::vector<Elem> inv;
  std::vector<Elem> prod;  // n x n, kNoElem outside D

  explicit Tables(std::vector<std::string> carrier)
      : ids(std::move(carrier)), inv(ids.size(), kNoElem), prod(ids.size() * ids.size(), kNoElem) {}

  void set_product(Elem x, Elem y, Elem z) {
    Elem& slot = prod[x * ids.size() + y];
    if (slot != kNoElem && slot != z)
      throw Error("construction: product of '" + ids[x] + "' and '" + ids[y] + "' is not well defined");
    slot = z;
  }

  void set_inverse(Elem x, Elem y) {
    if (inv[x] != kNoElem && inv[x] != y) throw Error("construction: inverse of '" + ids[x] + "' is not well defined");
    inv[x] = y;
  }

  Pregroup build() const {
    const auto n = static_cast<Elem>(ids.size());
    StructureData d;
    d.signature = pregroup_signature();
    d.carrier = ids;
    d.constants["1"] = ids[identity];
    auto& fi = d.functions["inv"];
    auto& D = d.relations["D"];
    auto& M = d.relations["M"];
    for (Elem x = 0; x < n; ++x) {
      if (inv[x] == kNoElem) throw Error("construction: '" + ids[x] + "' has no inverse");
      fi[{ids[x]}] = ids[inv[x]];
      for (Elem y = 0; y < n; ++y) {
        Elem z = prod[x * n + y];
        if (z == kNoElem) continue;
        D.push_back({ids[x], ids[y]});
        M.push_back({ids[x], ids[y], ids[z]});
      }
    }
    return Pregroup(FiniteStructure(d));
  }
};

void check_embedding(const FiniteGroup& c, const FiniteGroup& target, const std::vector<std::size_t>& map,
                     const std::string& what) {
  if (map.size() != c.size()) throw Error(what + ": embedding must list every element of C");
  std::set<std::size_t> seen;
  for (auto v : map) {
    if (v >= target.size()) throw Error(what + ": embedding leaves the group");
    if (!seen.insert(v).second) throw Error(what + ": embedding is not injective");
  }
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      if (map[c.mul(i, j)] != target.mul(map[i], map[j]))
        throw Error(what + ": embedding is not a homomorphism at (" + c.id(i) + "," + c.id(j) + ")");
}

void two_factor_classes(Construction& out, std::size_t a_size, const std::vector<Elem>& from_b) {
  out.classes.assign(out.letters.size(), {});
  for (std::size_t g = 0; g < a_size; ++g) out.classes[g].push_back({0, g, 0, 0});
  for (std::size_t g = 0; g < from_b.size(); ++g) out.classes[from_b[g]].push_back({1, g, 0, 0});
}

}  // namespace

Construction free_product_pregroup(const FiniteGroup& a, const FiniteGroup& b) {
  Construction out;
  out.kind = ConstructionKind::free;
  out.groups = {a, b};
  std::vector<std::string> ids = a.elements();
  std::vector<Elem> from_b(b.size());
  for (std::size_t g = 0; g < a.size(); ++g) {
    out.letters.push_back({0, g, 0, 0});
    out.sidecar["A:" + a.id(g)] = a.id(g);
  }
  for (std::size_t g = 0; g < b.size(); ++g) {
    if (g == b.identity()) {
      from_b[g] = static_cast<Elem>(a.identity());
    } else {
      if (std::find(ids.begin(), ids.end(), b.id(g)) != ids.end())
        throw Error("free product: element id '" + b.id(g) + "' occurs in both factors");
      from_b[g] = static_cast<Elem>(ids.size());
      ids.push_back(b.id(g));
      out.letters.push_back({1, g, 0, 0});
    }
    out.sidecar["B:" + b.id(g)] = ids[from_b[g]];
  }
  two_factor_classes(out, a.size(), from_b);
  Tables t(ids);
  t.identity = static_cast<Elem>(a.identity());
  for (std::size_t x = 0; x < a.size(); ++x) {
    t.set_inverse(static_cast<Elem>(x), static_cast<Elem>(a.inv(x)));
    for (std::size_t y = 0; y < a.size(); ++y)
      t.set_product(static_cast<Elem>(x), static_cast<Elem>(y), static_cast<Elem>(a.mul(x, y)));
  }
  for (std::size_t x = 0; x < b.size(); ++x) {
    t.set_inverse(from_b[x], from_b[b.inv(x)]);
    for (std::size_t y = 0; y < b.size(); ++y) t.set_product(from_b[x], from_b[y], from_b[b.mul(x, y)]);
  }
  out.result = std::make_shared<const SPregroup>(t.build());
  return out;
}

Construction amalgam_pregroup(const FiniteGroup& a, const FiniteGroup& b, const FiniteGroup& c,
                              const std::vector<std::size_t>& c_in_a, const std::vector<std::size_t>& c_in_b) {
  if (c.size() < 2) throw Error("amalgam: C is trivial; use the free product");
  check_embedding(c, a, c_in_a, "amalgam (C in A)");
  check_embedding(c, b, c_in_b, "amalgam (C in B)");
  Construction out;
  out.kind = ConstructionKind::amalgam;
  out.groups = {a, b, c};
  out.c_in_a = c_in_a;
  out.c_in_b = c_in_b;

  std::vector<std::string> ids = a.elements();
  for (std::size_t g = 0; g < a.size(); ++g) {
    out.letters.push_back({0, g, 0, 0});
    out.sidecar["A:" + a.id(g)] = a.id(g);
  }
  std::vector<Elem> from_b(b.size(), kNoElem);
  for (std::size_t k = 0; k < c.size(); ++k) from_b[c_in_b[k]] = static_cast<Elem>(c_in_a[k]);
  for (std::size_t g = 0; g < b.size(); ++g) {
    if (from_b[g] == kNoElem) {
      if (std::find(ids.begin(), ids.end(), b.id(g)) != ids.end())
        throw Error("amalgam: element id '" + b.id(g) + "' occurs in both factors outside C");
      from_b[g] = static_cast<Elem>(ids.size());
      ids.push_back(b.id(g));
      out.letters.push_back({1, g, 0, 0});
    }
    out.sidecar["B:" + b.id(g)] = ids[from_b[g]];
  }
  two_factor_classes(out, a.size(), from_b);
  Tables t(ids);
  t.identity = static_cast<Elem>(a.identity());
  for (std::size_t x = 0; x < a.size(); ++x) {
    t.set_inverse(static_cast<Elem>(x), static_cast<Elem>(a.inv(x)));
    for (std::size_t y = 0; y < a.size(); ++y)
      t.set_product(static_cast<Elem>(x), static_cast<Elem>(y), static_cast<Elem>(a.mul(x, y)));
  }
  for (std::size_t x = 0; x < b.size(); ++x) {
    t.set_inverse(from_b[x], from_b[b.inv(x)]);
    for (std::size_t y = 0; y < b.size(); ++y) t.set_product(from_b[x], from_b[y], from_b[b.mul(x, y)]);
  }
  std::vector<Elem> cs;
  for (auto g : c_in_a) cs.push_back(static_cast<Elem>(g));
  out.result = std::make_shared<const SPregroup>(attach_constants(t.build(), {{"C", cs}}));
  return out;
}

Construction hnn_pregroup(const HnnSpec& spec) {
  const auto& g = spec.g;
  const std::size_t n = g.size();
  if (spec.t.empty()) throw Error("hnn: empty stable letter name");
  if (!g.is_subgroup(spec.c1)) throw Error("hnn: C1 is not a subgroup");
  if (!g.is_subgroup(spec.c2)) throw Error("hnn: C2 is not a subgroup");
  if (spec.theta.size() != spec.c1.size() || spec.c1.size() != spec.c2.size())
    throw Error("hnn: theta must map C1 onto C2");
  std::vector<std::size_t> theta(n, n);  // G index -> image, n outside C1
  std::set<std::size_t> c1set(spec.c1.begin(), spec.c1.end());
  std::set<std::size_t> c2set(spec.c2.begin(), spec.c2.end());
  if (c1set.size() != spec.c1.size() || c2set.size() != spec.c2.size())
    throw Error("hnn: subgroup lists repeat an element");
  std::set<std::size_t> images;
  for (std::size_t i = 0; i < spec.c1.size(); ++i) {
    if (!c2set.count(spec.theta[i])) throw Error("hnn: theta leaves C2");
    if (!images.insert(spec.theta[i]).second) throw Error("hnn: theta is not injective");
    theta[spec.c1[i]] = spec.theta[i];
  }
  for (auto x : spec.c1)
    for (auto y : spec.c1)
      if (theta[g.mul(x, y)] != g.mul(theta[x], theta[y]))
        throw Error("hnn: theta is not a homomorphism at (" + g.id(x) + "," + g.id(y) + ")");

  Construction out;
  out.kind = ConstructionKind::hnn;
  out.groups = {g};
  out.c1 = spec.c1;
  out.c2 = spec.c2;
  out.theta = spec.theta;
  out.stable_letter = spec.t;

  // raw index = block * n + g with blocks G, t^-1 G, G t, t^-1 G t
  static constexpr int e0_of[4] = {0, 1, 0, 1};
  static constexpr int e1_of[4] = {0, 0, 1, 1};
  auto raw = [&](int e0, std::size_t h, int e1) { return static_cast<std::size_t>(e0 + 2 * e1) * n + h; };
  auto raw_name = [&](int e0, std::size_t h, int e1) {
    std::string s;
    bool one = h == g.identity();
    if (e0) s = spec.t + "i";
    if (!one || (!e0 && !e1)) s += (s.empty() ? "" : "_") + g.id(h);
    if (e1) s += (s.empty() ? "" : "_") + spec.t;
    return s;
  };

  std::vector<Elem> cls(4 * n, kNoElem);
  std::vector<std::string> ids;
  std::vector<std::vector<std::size_t>> reps;
  for (int b = 0; b < 4; ++b)
    for (std::size_t h = 0; h < n; ++h) {
      std::size_t r = static_cast<std::size_t>(b) * n + h;
      Elem e;
      if (b == 3 && theta[h] != n) {
        e = cls[raw(0, theta[h], 0)];
      } else {
        e = static_cast<Elem>(ids.size());
        ids.push_back(raw_name(e0_of[b], h, e1_of[b]));
        reps.emplace_back();
        out.letters.push_back({0, h, e0_of[b], e1_of[b]});
      }
      cls[r] = e;
      reps[e].push_back(r);
      out.classes.resize(ids.size());
      out.classes[e].push_back({0, h, e0_of[b], e1_of[b]});
      out.sidecar[raw_name(e0_of[b], h, e1_of[b])] = ids[e];
    }

  Tables t(ids);
  t.identity = cls[raw(0, g.identity(), 0)];
  for (Elem x = 0; x < ids.size(); ++x) {
    for (auto rx : reps[x]) {
      int b = static_cast<int>(rx / n);
      std::size_t h = rx % n;
      t.set_inverse(x, cls[raw(e1_of[b], g.inv(h), e0_of[b])]);
    }
    for (Elem y = 0; y < ids.size(); ++y)
      for (auto rx : reps[x])
        for (auto ry : reps[y]) {
          int bx = static_cast<int>(rx / n), by = static_cast<int>(ry / n);
          if (e1_of[bx] != e0_of[by]) continue;
          t.set_product(x, y, cls[raw(e0_of[bx], g.mul(rx % n, ry % n), e1_of[by])]);
        }
  }
  std::vector<Elem> k1, k2;
  for (auto h : spec.c1) k1.push_back(cls[raw(0, h, 0)]);
  for (auto h : spec.c2) k2.push_back(cls[raw(0, h, 0)]);
  out.result = std::make_shared<const SPregroup>(attach_constants(t.build(), {{"C1", k1}, {"C2", k2}}));
  return out;
}

namespace {

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw Error(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
  for (const auto& [k, v] : obj.items())
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
      throw Error(where + ": unknown key \"" + k + "\"");
}

std::string text_of(const json& j, const std::string& where) {
  if (!j.is_string()) throw Error(where + ": expected a string");
  return j.get<std::string>();
}

FiniteGroup group_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw Error(where + ": a group must be an object");
  if (j.contains("cyclic")) {
    reject_unknown(j, {"cyclic", "names"}, where);
    const auto& n = j.at("cyclic");
    if (!n.is_number_unsigned() || n.get<std::size_t>() == 0) throw Error(where + ": \"cyclic\" must be a positive integer");
    std::vector<std::string> names;
    if (j.contains("names")) {
      if (!j.at("names").is_array()) throw Error(where + ": \"names\" must be an array");
      for (const auto& s : j.at("names")) names.push_back(text_of(s, where + ".names"));
    }
    return FiniteGroup::cyclic(n.get<std::size_t>(), std::move(names));
  }
  reject_unknown(j, {"elements", "table"}, where);
  const auto& el = member(j, "elements", where);
  const auto& tb = member(j, "table", where);
  if (!el.is_array() || !tb.is_array()) throw Error(where + ": \"elements\" and \"table\" must be arrays");
  std::vector<std::string> elems;
  for (const auto& s : el) elems.push_back(text_of(s, where + ".elements"));
  std::vector<std::vector<std::size_t>> table;
  for (const auto& row : tb) {
    if (!row.is_array()) throw Error(where + ": table rows must be arrays");
    std::vector<std::size_t> r;
    for (const auto& cell : row) {
      auto id = text_of(cell, where + ".table");
      auto it = std::find(elems.begin(), elems.end(), id);
      if (it == elems.end()) throw Error(where + ": table mentions unknown element '" + id + "'");
      r.push_back(static_cast<std::size_t>(it - elems.begin()));
    }
    table.push_back(std::move(r));
  }
  return FiniteGroup(std::move(elems), std::move(table));
}

std::vector<std::size_t> embedding_from_json(const json& j, const FiniteGroup& c, const FiniteGroup& target,
                                             const std::string& where) {
  if (!j.is_object()) throw Error(where + ": embedding must be an object {c_id: id}");
  std::vector<std::size_t> out(c.size(), target.size());
  for (const auto& [k, v] : j.items()) out[c.index(k)] = target.index(text_of(v, where));
  for (std::size_t i = 0; i < c.size(); ++i)
    if (out[i] == target.size()) throw Error(where + ": no image for '" + c.id(i) + "'");
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

FiniteGroup parse_group(std::string_view json_text) { return group_from_json(parse_json(json_text), "group"); }

Construction construct_from_spec(std::string_view json_text, std::optional<ConstructionKind> expected) {
  json j = parse_json(json_text);
  if (!j.is_object()) throw Error("construction spec must be a JSON object");
  ConstructionKind kind;
  if (j.contains("kind")) {
    kind = parse_construction_kind(text_of(j.at("kind"), "spec.kind"));
    if (expected && *expected != kind)
      throw Error("spec is of kind '" + std::string(to_string(kind)) + "', not '" + std::string(to_string(*expected)) + "'");
  } else if (expected) {
    kind = *expected;
  } else {
    throw Error("spec: missing \"kind\"");
  }
  switch (kind) {
    case ConstructionKind::free: {
      reject_unknown(j, {"kind", "a", "b"}, "spec");
      return free_product_pregroup(group_from_json(member(j, "a", "spec"), "spec.a"),
                                   group_from_json(member(j, "b", "spec"), "spec.b"));
    }
    case ConstructionKind::amalgam: {
      reject_unknown(j, {"kind", "a", "b", "c", "c_in_a", "c_in_b"}, "spec");
      auto a = group_from_json(member(j, "a", "spec"), "spec.a");
      auto b = group_from_json(member(j, "b", "spec"), "spec.b");
      auto c = group_from_json(member(j, "c", "spec"), "spec.c");
      auto ea = embedding_from_json(member(j, "c_in_a", "spec"), c, a, "spec.c_in_a");
      auto eb = embedding_from_json(member(j, "c_in_b", "spec"), c, b, "spec.c_in_b");
      return amalgam_pregroup(a, b, c, ea, eb);
    }
    case ConstructionKind::hnn: {
      reject_unknown(j, {"kind", "g", "c1", "c2", "theta", "t"}, "spec");
      HnnSpec s{group_from_json(member(j, "g", "spec"), "spec.g"), {}, {}, {}, "t"};
      for (const char* key : {"c1", "c2"}) {
        const auto& arr = member(j, key, "spec");
        if (!arr.is_array()) throw Error(std::string("spec.") + key + ": expected an array of ids");
        auto& dst = std::string(key) == "c1" ? s.c1 : s.c2;
        for (const auto& id : arr) dst.push_back(s.g.index(text_of(id, std::string("spec.") + key)));
      }
      const auto& th = member(j, "theta", "spec");
      if (!th.is_object()) throw Error("spec.theta: expected an object {id: id}");
      for (auto h : s.c1) {
        if (!th.contains(s.g.id(h))) throw Error("spec.theta: no image for '" + s.g.id(h) + "'");
        s.theta.push_back(s.g.index(text_of(th.at(s.g.id(h)), "spec.theta")));
      }
      if (th.size() != s.c1.size()) throw Error("spec.theta: keys must be exactly the elements of c1");
      if (j.contains("t")) s.t = text_of(j.at("t"), "spec.t");
      return hnn_pregroup(s);
    }
  }
  throw Error("unreachable");
}

}  // namespace stallings
