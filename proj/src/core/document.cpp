#include "core/document.hpp"

namespace dainfty {

namespace {

constexpr int64_t kSafeMax = 9007199254740991LL;  // 2^53 - 1

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw DocumentError(path + ": " + what);
}

const json& expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  return j;
}

const json& expect_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

const json& field(const json& j, const char* key, const std::string& path) {
  expect_object(j, path);
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

std::string expect_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

long expect_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

Bidegree bidegree_from_json(const json& j, const std::string& path) {
  expect_array(j, path);
  if (j.size() != 2) fail(path, "bidegree must be a pair");
  return Bidegree{expect_int(j[0], path + "[0]"), expect_int(j[1], path + "[1]")};
}

json bidegree_to_json(const Bidegree& d) { return json::array({d.h, d.v}); }

Ring ring_from_json(const json& j, const std::string& path) {
  std::string kind = expect_string(field(j, "kind", path), path + ".kind");
  if (kind == "integers") return Ring::integers();
  if (kind == "mod_p") {
    long p = expect_int(field(j, "p", path), path + ".p");
    if (p < 2) fail(path + ".p", "modulus must be >= 2");
    try {
      return Ring::mod_p(static_cast<unsigned long>(p));
    } catch (const std::exception& ex) {
      fail(path + ".p", ex.what());
    }
  }
  fail(path + ".kind", "unknown ring kind '" + kind + "'");
}

json ring_to_json(const Ring& r) {
  json j;
  if (r.kind == Ring::Kind::integers) {
    j["kind"] = "integers";
  } else {
    j["kind"] = "mod_p";
    j["p"] = r.p;
  }
  return j;
}

BigradedBasis basis_from_json(const json& j, const std::string& path) {
  expect_array(j, path);
  BigradedBasis basis;
  for (size_t k = 0; k < j.size(); ++k) {
    std::string p = path + "[" + std::to_string(k) + "]";
    std::string name = expect_string(field(j[k], "name", p), p + ".name");
    if (name.empty()) fail(p + ".name", "empty basis name");
    Bidegree d = bidegree_from_json(field(j[k], "bidegree", p), p + ".bidegree");
    if (basis.has(name)) fail(p + ".name", "duplicate basis name '" + name + "'");
    basis.add(name, d);
  }
  return basis;
}

json basis_to_json(const BigradedBasis& basis) {
  json arr = json::array();
  for (int b = 0; b < basis.size(); ++b) {
    json item;
    item["name"] = basis.name(b);
    item["bidegree"] = bidegree_to_json(basis.degree(b));
    arr.push_back(std::move(item));
  }
  return arr;
}

TensorWord word_from_json(const json& j, const BigradedBasis& basis,
                          const std::string& path) {
  expect_array(j, path);
  if (j.empty()) fail(path, "empty tensor word");
  TensorWord w;
  for (size_t k = 0; k < j.size(); ++k) {
    std::string p = path + "[" + std::to_string(k) + "]";
    std::string name = expect_string(j[k], p);
    int idx = basis.index_of(name);
    if (idx < 0) fail(p, "unknown basis element '" + name + "'");
    w.push_back(idx);
  }
  return w;
}

json word_to_json(const TensorWord& w, const BigradedBasis& basis) {
  json arr = json::array();
  for (int32_t idx : w) arr.push_back(basis.name(idx));
  return arr;
}

LinComb lincomb_from_json(const json& j, const BigradedBasis& basis,
                          const Ring& ring, const std::string& path) {
  expect_array(j, path);
  LinComb out;
  for (size_t k = 0; k < j.size(); ++k) {
    std::string p = path + "[" + std::to_string(k) + "]";
    std::string name = expect_string(field(j[k], "element", p), p + ".element");
    int idx = basis.index_of(name);
    if (idx < 0) fail(p + ".element", "unknown basis element '" + name + "'");
    BigInt c = scalar_from_json(field(j[k], "coeff", p), p + ".coeff");
    out.add(TensorWord{idx}, c, ring);
  }
  return out;
}

json lincomb_to_json(const LinComb& lc, const BigradedBasis& basis) {
  json arr = json::array();
  for (const auto& [w, c] : lc.terms()) {
    json item;
    item["element"] = basis.name(w[0]);
    item["coeff"] = scalar_to_json(c);
    arr.push_back(std::move(item));
  }
  return arr;
}

Convention convention_from_json(const json& j, const std::string& path) {
  std::string tag = expect_string(j, path);
  if (tag == "sagave") return Convention::sagave;
  if (tag == "tilde") return Convention::tilde;
  fail(path, "unknown convention tag '" + tag + "'");
}

}  // namespace

json scalar_to_json(const BigInt& v) {
  if (v <= kSafeMax && v >= -kSafeMax) return json(v.convert_to<int64_t>());
  return json(v.str());
}

BigInt scalar_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return BigInt(j.get<int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      fail(path, "malformed integer string");
    }
  }
  fail(path, "expected an integer or integer string");
}

json family_to_json(const StructureFamily& fam) {
  json doc;
  doc["schema"] = "dainfty.structure";
  doc["ring"] = ring_to_json(fam.ring);
  doc["convention"] = fam.convention == Convention::tilde ? "tilde" : "sagave";
  doc["bounds"] = {{"max_horizontal", fam.max_horizontal},
                   {"max_arity", fam.max_arity}};
  doc["basis"] = basis_to_json(fam.basis);
  json maps = json::array();
  for (const auto& [ij, m] : fam.maps) {
    json entry;
    entry["i"] = ij.first;
    entry["j"] = ij.second;
    json entries = json::array();
    for (const auto& [w, val] : m.entries) {
      if (val.is_zero()) continue;
      json e;
      e["input"] = word_to_json(w, fam.basis);
      e["output"] = lincomb_to_json(val, fam.basis);
      entries.push_back(std::move(e));
    }
    entry["entries"] = std::move(entries);
    maps.push_back(std::move(entry));
  }
  doc["maps"] = std::move(maps);
  return doc;
}

StructureFamily family_from_json(const json& doc) {
  const std::string root = "$";
  expect_object(doc, root);
  if (doc.contains("schema")) {
    std::string s = expect_string(doc["schema"], root + ".schema");
    if (s != "dainfty.structure")
      fail(root + ".schema", "expected 'dainfty.structure', got '" + s + "'");
  }
  StructureFamily fam;
  fam.ring = ring_from_json(field(doc, "ring", root), root + ".ring");
  fam.convention =
      convention_from_json(field(doc, "convention", root), root + ".convention");
  const json& bounds = field(doc, "bounds", root);
  fam.max_horizontal = static_cast<int>(
      expect_int(field(bounds, "max_horizontal", root + ".bounds"),
                 root + ".bounds.max_horizontal"));
  fam.max_arity = static_cast<int>(
      expect_int(field(bounds, "max_arity", root + ".bounds"),
                 root + ".bounds.max_arity"));
  if (fam.max_horizontal < 0)
    fail(root + ".bounds.max_horizontal", "must be >= 0");
  if (fam.max_arity < 1) fail(root + ".bounds.max_arity", "must be >= 1");
  fam.basis = basis_from_json(field(doc, "basis", root), root + ".basis");

  const json& maps = expect_array(field(doc, "maps", root), root + ".maps");
  for (size_t k = 0; k < maps.size(); ++k) {
    std::string p = root + ".maps[" + std::to_string(k) + "]";
    int i = static_cast<int>(expect_int(field(maps[k], "i", p), p + ".i"));
    int j = static_cast<int>(expect_int(field(maps[k], "j", p), p + ".j"));
    if (i < 0) fail(p + ".i", "must be >= 0");
    if (j < 1) fail(p + ".j", "arity must be >= 1");
    if (i > fam.max_horizontal || j > fam.max_arity)
      fail(p, "map index beyond declared bounds");
    if (fam.maps.count({i, j})) fail(p, "duplicate map index");
    GradedMap m;
    m.arity = j;
    m.target_arity = 1;
    m.degree = fam.expected_degree(i, j);
    const json& entries =
        expect_array(field(maps[k], "entries", p), p + ".entries");
    for (size_t e = 0; e < entries.size(); ++e) {
      std::string pe = p + ".entries[" + std::to_string(e) + "]";
      TensorWord w = word_from_json(field(entries[e], "input", pe), fam.basis,
                                    pe + ".input");
      if (static_cast<int>(w.size()) != j)
        fail(pe + ".input", "input arity does not match j");
      LinComb val = lincomb_from_json(field(entries[e], "output", pe),
                                      fam.basis, fam.ring, pe + ".output");
      if (m.entries.count(w)) fail(pe + ".input", "duplicate input word");
      if (!val.is_zero()) m.entries[w] = std::move(val);
    }
    fam.maps[{i, j}] = std::move(m);
  }
  try {
    fam.validate();
  } catch (const std::exception& ex) {
    fail(root + ".maps", ex.what());
  }
  return fam;
}

bool is_representation_document(const json& doc) {
  return doc.is_object() && doc.contains("schema") &&
         doc["schema"].is_string() &&
         doc["schema"].get<std::string>() == "dainfty.representation";
}

json rep_to_json(const RepFamily& rep) {
  json doc;
  doc["schema"] = "dainfty.representation";
  json alg = family_to_json(rep.algebra);
  alg.erase("schema");
  doc["algebra"] = std::move(alg);
  doc["module_basis"] = basis_to_json(rep.module);
  json actions = json::array();
  for (const auto& [key, m] : rep.actions) {
    auto [i, j, slot] = key;
    json entry;
    entry["i"] = i;
    entry["j"] = j;
    entry["slot"] = slot;
    json entries = json::array();
    for (const auto& [w, val] : m.entries) {
      if (val.is_zero()) continue;
      json e;
      json input = json::array();
      for (size_t l = 0; l < w.size(); ++l) {
        if (static_cast<int>(l) == slot - 1)
          input.push_back(rep.module.name(w[l]));
        else
          input.push_back(rep.algebra.basis.name(w[l]));
      }
      e["input"] = std::move(input);
      e["output"] = lincomb_to_json(val, rep.module);
      entries.push_back(std::move(e));
    }
    entry["entries"] = std::move(entries);
    actions.push_back(std::move(entry));
  }
  doc["actions"] = std::move(actions);
  return doc;
}

RepFamily rep_from_json(const json& doc) {
  const std::string root = "$";
  expect_object(doc, root);
  if (!is_representation_document(doc))
    fail(root + ".schema", "expected 'dainfty.representation'");
  RepFamily rep;
  json alg = field(doc, "algebra", root);
  alg["schema"] = "dainfty.structure";
  rep.algebra = family_from_json(alg);
  rep.module = basis_from_json(field(doc, "module_basis", root),
                               root + ".module_basis");
  const json& actions =
      expect_array(field(doc, "actions", root), root + ".actions");
  for (size_t k = 0; k < actions.size(); ++k) {
    std::string p = root + ".actions[" + std::to_string(k) + "]";
    int i = static_cast<int>(expect_int(field(actions[k], "i", p), p + ".i"));
    int j = static_cast<int>(expect_int(field(actions[k], "j", p), p + ".j"));
    int slot =
        static_cast<int>(expect_int(field(actions[k], "slot", p), p + ".slot"));
    if (i < 0) fail(p + ".i", "must be >= 0");
    if (j < 1) fail(p + ".j", "arity must be >= 1");
    if (slot < 1 || slot > j) fail(p + ".slot", "slot must lie in 1..j");
    if (rep.actions.count({i, j, slot})) fail(p, "duplicate action index");
    GradedMap m;
    m.arity = j;
    m.target_arity = 1;
    m.degree = rep.algebra.expected_degree(i, j);
    const json& entries =
        expect_array(field(actions[k], "entries", p), p + ".entries");
    for (size_t e = 0; e < entries.size(); ++e) {
      std::string pe = p + ".entries[" + std::to_string(e) + "]";
      const json& input = expect_array(field(entries[e], "input", pe),
                                       pe + ".input");
      if (static_cast<int>(input.size()) != j)
        fail(pe + ".input", "input arity does not match j");
      TensorWord w;
      for (size_t l = 0; l < input.size(); ++l) {
        std::string pl = pe + ".input[" + std::to_string(l) + "]";
        std::string name = expect_string(input[l], pl);
        int idx = static_cast<int>(l) == slot - 1
                      ? rep.module.index_of(name)
                      : rep.algebra.basis.index_of(name);
        if (idx < 0) fail(pl, "unknown basis element '" + name + "'");
        w.push_back(idx);
      }
      LinComb val = lincomb_from_json(field(entries[e], "output", pe),
                                      rep.module, rep.algebra.ring,
                                      pe + ".output");
      if (m.entries.count(w)) fail(pe + ".input", "duplicate input word");
      if (!val.is_zero()) m.entries[w] = std::move(val);
    }
    rep.actions[{i, j, slot}] = std::move(m);
  }
  try {
    rep.validate();
  } catch (const std::exception& ex) {
    fail(root + ".actions", ex.what());
  }
  return rep;
}

namespace {

json relation_reports_to_json(const std::vector<RelationReport>& reports,
                              const BigradedBasis& basis) {
  json arr = json::array();
  for (const RelationReport& rep : reports) {
    json r;
    r["u"] = rep.u;
    r["v"] = rep.v;
    r["pass"] = rep.pass;
    r["failure_count"] = rep.failure_count;
    json fails = json::array();
    for (const auto& [input, residual] : rep.failures) {
      json f;
      f["input"] = word_to_json(input, basis);
      json res = json::array();
      for (const auto& [w, c] : residual.terms()) {
        json term;
        term["element"] = render_word(w, basis);
        term["coeff"] = scalar_to_json(c);
        res.push_back(std::move(term));
      }
      f["residual"] = std::move(res);
      fails.push_back(std::move(f));
    }
    r["failures"] = std::move(fails);
    arr.push_back(std::move(r));
  }
  return arr;
}

}  // namespace

json check_report(const StructureFamily& fam, const CheckResult& result,
                  const std::string& command, int u_max, int v_max) {
  json rep;
  rep["report_version"] = 1;
  rep["command"] = command;
  rep["convention"] = fam.convention == Convention::tilde ? "tilde" : "sagave";
  rep["pass"] = result.pass;
  if (u_max >= 0) rep["window"] = {{"u_max", u_max}, {"v_max", v_max}};
  rep["relations"] = relation_reports_to_json(result.reports, fam.basis);
  return rep;
}

json rep_check_report(const RepCoderivationFamily& F,
                      const RepCheckResult& result, int u_max, int arity_max) {
  json rep;
  rep["report_version"] = 1;
  rep["command"] = "check-rep";
  rep["pass"] = result.pass;
  rep["window"] = {{"u_max", u_max}, {"arity_max", arity_max}};
  json conds = json::array();
  for (const RepRelationReport& r : result.reports) {
    json c;
    c["condition"] = r.condition;
    c["index"] = r.index;
    c["pass"] = r.pass;
    c["failure_count"] = r.failure_count;
    json fails = json::array();
    for (const auto& [input, residual] : r.failures) {
      json f;
      json word = json::array();
      for (size_t l = 0; l < input.letters.size(); ++l) {
        if (static_cast<int>(l) == input.mpos - 1)
          word.push_back(F.smodule.name(input.letters[l]));
        else
          word.push_back(F.sbasis().name(input.letters[l]));
      }
      f["input"] = {{"word", std::move(word)}, {"slot", input.mpos}};
      json res = json::array();
      for (const auto& [label, c2] : residual) {
        json term;
        term["element"] = label;
        term["coeff"] = scalar_to_json(c2);
        res.push_back(std::move(term));
      }
      f["residual"] = std::move(res);
      fails.push_back(std::move(f));
    }
    c["failures"] = std::move(fails);
    conds.push_back(std::move(c));
  }
  rep["conditions"] = std::move(conds);
  return rep;
}

json bar_check_report(const StructureFamily& fam, const CheckResult& relations,
                      const CheckResult& twisted, int u_max, int v_max) {
  json rep;
  rep["report_version"] = 1;
  rep["command"] = "bar-check";
  rep["convention"] = fam.convention == Convention::tilde ? "tilde" : "sagave";
  rep["window"] = {{"u_max", u_max}, {"v_max", v_max}};
  rep["relation_check"] = {
      {"pass", relations.pass},
      {"relations", relation_reports_to_json(relations.reports, fam.basis)}};
  BigradedBasis sbasis =
      suspend_basis(fam.basis, SuspensionDirection::vertical, 1);
  rep["twisted_check"] = {
      {"pass", twisted.pass},
      {"relations", relation_reports_to_json(twisted.reports, sbasis)}};
  rep["equivalence_agrees"] = relations.pass == twisted.pass;
  rep["pass"] = relations.pass && twisted.pass;
  return rep;
}

json cooperad_report(CooperadKind kind, int u, int v,
                     const std::vector<DecompTerm>& terms) {
  json rep;
  rep["report_version"] = 1;
  rep["command"] = "cooperad";
  rep["kind"] = cooperad_kind_name(kind);
  rep["u"] = u;
  rep["v"] = v;
  json arr = json::array();
  for (const DecompTerm& t : terms) {
    json item;
    item["sign"] = t.sign;
    item["outer"] = json::array({t.i, t.j});
    json inners = json::array();
    for (const auto& [p, q] : t.inners) inners.push_back(json::array({p, q}));
    item["inners"] = std::move(inners);
    arr.push_back(std::move(item));
  }
  rep["terms"] = std::move(arr);
  return rep;
}

std::string cooperad_text(CooperadKind kind, int u, int v,
                          const std::vector<DecompTerm>& terms) {
  const char* g = cooperad_kind_name(kind);
  std::string out = "Delta(" + std::string(g) + "(" + std::to_string(u) + "," +
                    std::to_string(v) + ")) =\n";
  for (const DecompTerm& t : terms) {
    out += t.sign > 0 ? "  + " : "  - ";
    out += std::string(g) + "(" + std::to_string(t.i) + "," +
           std::to_string(t.j) + ") o [";
    for (size_t k = 0; k < t.inners.size(); ++k) {
      if (k) out += ", ";
      out += std::string(g) + "(" + std::to_string(t.inners[k].first) + "," +
             std::to_string(t.inners[k].second) + ")";
    }
    out += "]\n";
  }
  return out;
}

std::string check_report_text(const json& report) {
  std::string out;
  std::string cmd = report.value("command", "check");
  out += cmd + ": " + (report["pass"].get<bool>() ? "PASS" : "FAIL") + "\n";
  auto describe_relations = [&out](const json& relations, const char* indent) {
    for (const auto& r : relations) {
      if (r["pass"].get<bool>()) continue;
      out += indent;
      out += "window (u=" + std::to_string(r["u"].get<int>()) +
             ", v=" + std::to_string(r["v"].get<int>()) +
             "): " + std::to_string(r["failure_count"].get<long>()) +
             " failing input(s)\n";
      for (const auto& f : r["failures"]) {
        out += indent;
        out += "  input ";
        bool first = true;
        for (const auto& name : f["input"]) {
          if (!first) out += "(x)";
          first = false;
          out += name.get<std::string>();
        }
        out += "  residual ";
        first = true;
        for (const auto& term : f["residual"]) {
          if (!first) out += " ";
          first = false;
          BigInt c = scalar_from_json(term["coeff"], "$");
          out += (c > 0 ? "+" : "") + c.str() + "*" +
                 term["element"].get<std::string>();
        }
        out += "\n";
      }
    }
  };
  if (report.contains("relations"))
    describe_relations(report["relations"], "  ");
  if (report.contains("relation_check")) {
    out += "  relation check: " +
           std::string(report["relation_check"]["pass"].get<bool>() ? "PASS"
                                                                    : "FAIL") +
           "\n";
    describe_relations(report["relation_check"]["relations"], "    ");
    out += "  twisted check: " +
           std::string(report["twisted_check"]["pass"].get<bool>() ? "PASS"
                                                                   : "FAIL") +
           "\n";
    describe_relations(report["twisted_check"]["relations"], "    ");
    out += "  equivalence agrees: ";
    out += report["equivalence_agrees"].get<bool>() ? "yes" : "no";
    out += "\n";
  }
  if (report.contains("conditions")) {
    for (const auto& c : report["conditions"]) {
      out += "  " + c["condition"].get<std::string>() + "[" +
             std::to_string(c["index"].get<int>()) + "]: " +
             (c["pass"].get<bool>() ? "PASS" : "FAIL");
      if (!c["pass"].get<bool>())
        out += " (" + std::to_string(c["failure_count"].get<long>()) +
               " failing input(s))";
      out += "\n";
    }
  }
  return out;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace dainfty
