#include "json_io.hpp"

#include "indcalc/kindex.hpp"
#include "indcalc/programs.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace indcalc::io {

namespace {

std::string child(const std::string& at, const std::string& key) { return at + "/" + key; }
std::string child(const std::string& at, std::size_t i) { return at + "/" + std::to_string(i); }

const json& field(const json& j, const std::string& at, const char* key) {
  if (!j.is_object()) throw input_error(at.empty() ? "/" : at, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw input_error(at.empty() ? "/" : at, std::string("missing field \"") + key + "\"");
  return *it;
}

const json& array_at(const json& j, const std::string& at) {
  if (!j.is_array()) throw input_error(at, "expected an array");
  return j;
}

std::size_t small(const json& j, const std::string& at, std::size_t max) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw input_error(at, "expected a non-negative integer");
  auto v = j.get<std::uint64_t>();
  if (v > max) throw input_error(at, "value " + std::to_string(v) + " above the limit " + std::to_string(max));
  return static_cast<std::size_t>(v);
}

void check_version(const json& j, const std::string& at) {
  if (j.is_object() && j.contains("version") && j["version"] != format_version)
    throw input_error(child(at, "version"), "unsupported format version");
}

std::uint64_t u64_of(const json& j, const std::string& at) {
  Nat v = nat_of(j, at);
  if (v > Nat(UINT64_MAX)) throw input_error(at, "value does not fit 64 bits");
  return v.convert_to<std::uint64_t>();
}

FinFun finfun_of(const json& j, const std::string& at) {
  std::vector<std::uint64_t> v;
  const auto& a = array_at(j, at);
  for (std::size_t i = 0; i < a.size(); ++i) v.push_back(u64_of(a[i], child(at, i)));
  return FinFun(v);
}

json finfun_json(const FinFun& f) {
  json a = json::array();
  for (auto v : f.values()) a.push_back(v);
  return a;
}

Type2Oracle oracle_of(const json& j, const std::string& at) {
  if (j.contains("builtin")) {
    const auto& name = field(j, at, "builtin");
    if (name == "e2_selector") return e2_selector();
    if (name == "gandy") {
      std::size_t count = small(field(j, at, "count"), child(at, "count"), 64);
      std::vector<std::size_t> winners;
      const auto& w = array_at(field(j, at, "winners"), child(at, "winners"));
      for (std::size_t i = 0; i < w.size(); ++i) winners.push_back(small(w[i], child(child(at, "winners"), i), count));
      return gandy_oracle(count, winners);
    }
    throw input_error(child(at, "builtin"), "unknown builtin oracle");
  }
  std::size_t support = small(field(j, at, "support"), child(at, "support"), 8);
  const auto& t = array_at(field(j, at, "table"), child(at, "table"));
  std::size_t range = 0;
  if (j.contains("range")) {
    range = small(j["range"], child(at, "range"), 1u << 16);
  } else {
    // the table has range^support entries
    if (support == 0) {
      range = 1;
    } else {
      while (true) {
        std::size_t p = 1;
        for (std::size_t i = 0; i < support && p <= t.size(); ++i) p *= range + 1;
        if (p > t.size()) break;
        ++range;
      }
    }
  }
  std::size_t want = 1;
  for (std::size_t i = 0; i < support; ++i) want *= range;
  if (t.size() != want)
    throw input_error(child(at, "table"), "expected range^support = " + std::to_string(want) + " entries");
  std::vector<std::optional<Nat>> table;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].is_null()) table.emplace_back();
    else table.emplace_back(nat_of(t[i], child(child(at, "table"), i)));
  }
  return Type2Oracle(support, range, std::move(table));
}

json comp_json(const Comp& c) {
  json o;
  o["index"] = to_sexpr(c.e);
  json nums = json::array();
  for (const auto& x : c.env.nums) nums.push_back(nat_json(x));
  o["nums"] = nums;
  return o;
}

}  // namespace

json parse_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(origin + "@" + std::to_string(e.byte), e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error(path, "cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

Nat nat_of(const json& j, const std::string& at) {
  if (j.is_number_unsigned()) return Nat(j.get<std::uint64_t>());
  if (j.is_number_integer()) {
    auto v = j.get<std::int64_t>();
    if (v < 0) throw input_error(at, "negative number");
    return Nat(v);
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    bool hex = s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X');
    std::size_t from = hex ? 2 : 0;
    if (s.size() == from) throw input_error(at, "empty number");
    for (std::size_t i = from; i < s.size(); ++i)
      if (!(hex ? std::isxdigit(static_cast<unsigned char>(s[i])) : std::isdigit(static_cast<unsigned char>(s[i]))))
        throw input_error(at, "not a number: \"" + s + "\"");
    if (hex) return Nat(s);
    // a leading zero would read as octal
    std::size_t nz = s.find_first_not_of('0');
    return nz == std::string::npos ? Nat(0) : Nat(s.substr(nz));
  }
  throw input_error(at, "expected a natural number");
}

json nat_json(const Nat& x) {
  if (x <= Nat(UINT64_MAX)) return x.convert_to<std::uint64_t>();
  return x.str();
}

std::uint64_t mask_of(const json& j, const std::string& at) { return u64_of(j, at); }

StepFunctional step_functional_of(const json& j) {
  check_version(j, "");
  std::size_t n = small(field(j, "", "n"), "/n", 16);
  const auto& t = array_at(field(j, "", "table"), "/table");
  if (t.size() != (std::size_t{1} << n))
    throw input_error("/table", "expected 2^n = " + std::to_string(std::size_t{1} << n) + " entries");
  std::vector<std::optional<std::uint64_t>> table;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].is_null()) {
      table.emplace_back();
      continue;
    }
    auto m = mask_of(t[i], child("/table", i));
    if (n < 64 && (m >> n) != 0) throw input_error(child("/table", i), "mask outside the base");
    table.emplace_back(m);
  }
  return StepFunctional(n, std::move(table));
}

json step_functional_json(const StepFunctional& f) {
  json o;
  o["n"] = f.base_size();
  json t = json::array();
  for (const auto& v : f.tabulate()) {
    if (v) t.push_back(*v);
    else t.push_back(nullptr);
  }
  o["table"] = t;
  return o;
}

json ind_trace_json(const IndTrace& t) {
  json o;
  json stages = json::array();
  for (const auto& s : t.stages) stages.push_back(s.hex());
  o["stages"] = stages;
  o["closed"] = t.closed;
  if (t.closed) o["alpha"] = t.alpha();
  if (t.error_stage) o["error_stage"] = *t.error_stage;
  o["version"] = format_version;
  return o;
}

Env env_of(const json& j) {
  check_version(j, "");
  Env env;
  if (!j.is_object()) throw input_error("/", "expected an object");
  if (j.contains("oracles")) {
    const auto& a = array_at(j["oracles"], "/oracles");
    for (std::size_t i = 0; i < a.size(); ++i) env.oracles.push_back(oracle_of(a[i], child("/oracles", i)));
  }
  if (j.contains("funs")) {
    const auto& a = array_at(j["funs"], "/funs");
    for (std::size_t i = 0; i < a.size(); ++i) env.funs.push_back(finfun_of(a[i], child("/funs", i)));
  }
  if (j.contains("nums")) {
    const auto& a = array_at(j["nums"], "/nums");
    for (std::size_t i = 0; i < a.size(); ++i) env.nums.push_back(nat_of(a[i], child("/nums", i)));
  }
  if (j.contains("n")) env.n = small(j["n"], "/n", 16);
  return env;
}

Index index_of(const std::string& text) {
  try {
    return parse_sexpr(text);
  } catch (const std::invalid_argument& e) {
    throw input_error("index", e.what());
  }
}

json comp_result_json(const CompResult& r) {
  json o;
  if (r.ok()) {
    o["value"] = nat_json(r.value);
    return o;
  }
  o["error"] = outcome_name(r.kind);
  if (!r.site.empty()) o["site"] = r.site;
  if (r.kind == Outcome::partial_induction || r.kind == Outcome::totality_violation) o["stage"] = r.stage;
  return o;
}

json trace_json(const Trace& t) {
  json o;
  o["definite"] = t.definite;
  json frames = json::array();
  for (const auto& f : t.frames) {
    json fr = comp_json(f.comp);
    json left = json::array();
    for (const auto& [c, v] : f.left) {
      json l = comp_json(c);
      l["value"] = nat_json(v);
      left.push_back(l);
    }
    fr["left"] = left;
    if (f.local) fr["local"] = comp_result_json(*f.local);
    frames.push_back(fr);
  }
  o["frames"] = frames;
  return o;
}

json finorder_json(const FinOrder& o) {
  json out;
  json dom = json::array();
  for (auto x : o.domain.members()) dom.push_back(x);
  out["domain"] = dom;
  json pairs = json::array();
  for (const auto& [z, w] : o.pairs) pairs.push_back(json::array({z, w}));
  out["pairs"] = pairs;
  return out;
}

namespace {

json entry_json(const FinFun& f, const std::optional<Nat>& a) {
  json e;
  e["f"] = finfun_json(f);
  if (a) e["a"] = nat_json(*a);
  else e["a"] = "*";
  return e;
}

// D, the covering pairs of its order, entries, value
json chain_json(const std::vector<Nat>& chain, const std::map<Nat, std::pair<FinFun, std::optional<Nat>>>& entries,
                const std::optional<Nat>& value) {
  json o;
  json d = json::array();
  for (const auto& x : chain) d.push_back(nat_json(x));
  o["D"] = d;
  json order = json::array();
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) order.push_back(json::array({nat_json(chain[i]), nat_json(chain[i + 1])}));
  o["order"] = order;
  json es = json::object();
  for (const auto& x : chain) {
    const auto& [f, a] = entries.at(x);
    es[x.str()] = entry_json(f, a);
  }
  o["entries"] = es;
  o["value"] = value ? nat_json(*value) : json(nullptr);
  return o;
}

}  // namespace

json calc_json(const CalcString& s) {
  std::vector<Nat> chain;
  std::map<Nat, std::pair<FinFun, std::optional<Nat>>> entries;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& q = s.entries[i];
    if (!q.denotation) throw std::invalid_argument("calc_json: position " + std::to_string(i) + " has no denotation");
    chain.push_back(*q.denotation);
    entries[*q.denotation] = {q.query, q.answer};
  }
  json o = chain_json(chain, entries, s.value);
  json blocks = json::array();
  for (const auto& b : s.blocks) blocks.push_back(json::array({b.start, b.end, b.level}));
  o["blocks"] = blocks;
  o["version"] = format_version;
  return o;
}

json representation_json(const Representation& r) {
  json o = chain_json(r.chain, r.entries, r.value);
  o["version"] = format_version;
  return o;
}

Representation representation_of_json(const json& j) {
  check_version(j, "");
  Representation r;
  const auto& d = array_at(field(j, "", "D"), "/D");
  std::map<Nat, std::size_t> pos;
  std::vector<Nat> ds;
  for (std::size_t i = 0; i < d.size(); ++i) {
    Nat x = nat_of(d[i], child("/D", i));
    if (!pos.emplace(x, i).second) throw input_error(child("/D", i), "denotation listed twice");
    ds.push_back(x);
  }
  // the order has to be a chain on D; the covering pairs are enough
  std::vector<std::vector<std::size_t>> succ(ds.size());
  std::vector<std::size_t> indeg(ds.size(), 0);
  const auto& ord = array_at(field(j, "", "order"), "/order");
  for (std::size_t i = 0; i < ord.size(); ++i) {
    const std::string at = child("/order", i);
    if (!ord[i].is_array() || ord[i].size() != 2) throw input_error(at, "expected a pair [d, d']");
    Nat a = nat_of(ord[i][0], child(at, 0)), b = nat_of(ord[i][1], child(at, 1));
    auto ia = pos.find(a), ib = pos.find(b);
    if (ia == pos.end() || ib == pos.end()) throw input_error(at, "pair outside D");
    succ[ia->second].push_back(ib->second);
    ++indeg[ib->second];
  }
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < ds.size(); ++i)
    if (indeg[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    if (ready.size() > 1) throw input_error("/order", "not a linear order on D");
    std::size_t u = ready.back();
    ready.pop_back();
    r.chain.push_back(ds[u]);
    for (auto v : succ[u])
      if (--indeg[v] == 0) ready.push_back(v);
  }
  if (r.chain.size() != ds.size()) throw input_error("/order", "the order has a cycle");
  const auto& es = field(j, "", "entries");
  if (!es.is_object()) throw input_error("/entries", "expected an object");
  for (auto it = es.begin(); it != es.end(); ++it) {
    const std::string at = child("/entries", it.key());
    Nat key = nat_of(json(it.key()), at);
    if (!pos.count(key)) throw input_error(at, "denotation not in D");
    FinFun f = finfun_of(field(it.value(), at, "f"), child(at, "f"));
    const auto& a = field(it.value(), at, "a");
    std::optional<Nat> ans;
    if (!(a.is_string() && a.get<std::string>() == "*")) ans = nat_of(a, child(at, "a"));
    r.entries[key] = {f, ans};
  }
  for (std::size_t i = 0; i < ds.size(); ++i)
    if (!r.entries.count(ds[i])) throw input_error(child("/D", i), "no entry for this denotation");
  const auto& v = field(j, "", "value");
  if (!v.is_null()) r.value = nat_of(v, "/value");
  return r;
}

DepthOracle depth_oracle_of(const json& j) {
  check_version(j, "");
  std::size_t depth = small(field(j, "", "L"), "/L", 20);
  const auto& t = array_at(field(j, "", "table"), "/table");
  if (t.size() != (std::size_t{1} << depth))
    throw input_error("/table", "expected 2^L = " + std::to_string(std::size_t{1} << depth) + " entries");
  std::vector<std::size_t> table;
  for (std::size_t i = 0; i < t.size(); ++i) table.push_back(small(t[i], child("/table", i), depth));
  return DepthOracle(depth, std::move(table));
}

std::string bits_string(const Bits& b) {
  std::string s;
  for (bool x : b) s += x ? '1' : '0';
  return s;
}

}  // namespace indcalc::io
