#include "indcalc/kindex.hpp"

#include "indcalc/seqcode.hpp"

#include <cctype>
#include <map>
#include <mutex>

namespace indcalc {

const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::s1: return "S1";
    case Scheme::s2: return "S2";
    case Scheme::s3: return "S3";
    case Scheme::s4: return "S4";
    case Scheme::s6: return "S6";
    case Scheme::s7: return "S7";
    case Scheme::s8_2: return "S8.2";
    case Scheme::s8_3: return "S8.3";
    case Scheme::s8_3h: return "S8.3H";
    case Scheme::s9: return "S9";
    case Scheme::invalid: return "invalid";
  }
  return "?";
}

namespace {

std::mutex intern_mutex;
std::map<Nat, Index>& intern_table() {
  static std::map<Nat, Index> table;
  return table;
}

Index lookup(const Nat& code) {
  std::lock_guard<std::mutex> lock(intern_mutex);
  auto& t = intern_table();
  auto it = t.find(code);
  return it == t.end() ? nullptr : it->second;
}

Index remember(IndexNode node) {
  std::lock_guard<std::mutex> lock(intern_mutex);
  auto& t = intern_table();
  auto it = t.find(node.code);
  if (it != t.end()) return it->second;
  auto p = std::make_shared<const IndexNode>(std::move(node));
  t.emplace(p->code, p);
  return p;
}

Nat tau_code(const std::vector<std::size_t>& t) {
  std::vector<Nat> xs(t.begin(), t.end());
  return encode_seq(xs);
}

Index invalid(const Nat& code) {
  IndexNode n;
  n.code = code;
  return remember(std::move(n));
}

}  // namespace

Index parse_index(const Nat& code) {
  if (auto hit = lookup(code)) return hit;
  auto xs = decode_seq(code);
  if (!xs || xs->empty()) return invalid(code);
  const auto& v = *xs;
  IndexNode n;
  n.code = code;
  const Nat& tag = v[0];
  if (tag == 1 && v.size() == 1) n.scheme = Scheme::s1;
  else if (tag == 2 && v.size() == 2) { n.scheme = Scheme::s2; n.q = v[1]; }
  else if (tag == 3 && v.size() == 1) n.scheme = Scheme::s3;
  else if (tag == 4 && v.size() == 3) {
    n.scheme = Scheme::s4;
    n.e1 = parse_index(v[1]);
    n.e2 = parse_index(v[2]);
  } else if (tag == 6 && v.size() == 5) {
    for (int i = 0; i < 3; ++i) {
      auto t = decode_seq(v[2 + i]);
      if (!t) return invalid(code);
      for (const auto& x : *t) {
        auto k = to_index(x, max_decode_length);
        if (!k) return invalid(code);
        n.tau[i].push_back(*k);
      }
    }
    n.scheme = Scheme::s6;
    n.e1 = parse_index(v[1]);
  } else if (tag == 7 && v.size() == 1) n.scheme = Scheme::s7;
  else if (tag == 8 && v.size() == 3 && v[1] == 2) { n.scheme = Scheme::s8_2; n.e1 = parse_index(v[2]); }
  else if (tag == 8 && v.size() == 3 && v[1] == 3) { n.scheme = Scheme::s8_3; n.e1 = parse_index(v[2]); }
  else if (tag == 8 && v.size() == 4 && v[1] == 3 && v[2] == 1) { n.scheme = Scheme::s8_3h; n.e1 = parse_index(v[3]); }
  else if (tag == 9 && v.size() == 1) n.scheme = Scheme::s9;
  else return invalid(code);
  return remember(std::move(n));
}

Index s1() { return parse_index(encode_seq({1})); }
Index s2(const Nat& q) { return parse_index(encode_seq(std::vector<Nat>{2, q})); }
Index s3() { return parse_index(encode_seq({3})); }
Index s4(const Index& e1, const Index& e2) { return parse_index(encode_seq(std::vector<Nat>{4, e1->code, e2->code})); }
Index s6(const Index& e1, std::vector<std::size_t> t1, std::vector<std::size_t> t2, std::vector<std::size_t> t3) {
  return parse_index(encode_seq(std::vector<Nat>{6, e1->code, tau_code(t1), tau_code(t2), tau_code(t3)}));
}
Index s7() { return parse_index(encode_seq({7})); }
Index s8_2(const Index& d) { return parse_index(encode_seq(std::vector<Nat>{8, 2, d->code})); }
Index s8_3(const Index& d) { return parse_index(encode_seq(std::vector<Nat>{8, 3, d->code})); }
Index s8_3h(const Index& d) { return parse_index(encode_seq(std::vector<Nat>{8, 3, 1, d->code})); }
Index s9() { return parse_index(encode_seq({9})); }

namespace {

std::string list_sexpr(const std::vector<std::size_t>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? " " : "") + std::to_string(t[i]);
  return s + ")";
}

}  // namespace

std::string to_sexpr(const Index& e) {
  switch (e->scheme) {
    case Scheme::s1: return "(S1)";
    case Scheme::s2: return "(S2 " + e->q.str() + ")";
    case Scheme::s3: return "(S3)";
    case Scheme::s4: return "(S4 " + to_sexpr(e->e1) + " " + to_sexpr(e->e2) + ")";
    case Scheme::s6:
      return "(S6 " + to_sexpr(e->e1) + " " + list_sexpr(e->tau[0]) + " " + list_sexpr(e->tau[1]) + " " +
             list_sexpr(e->tau[2]) + ")";
    case Scheme::s7: return "(S7)";
    case Scheme::s8_2: return "(S8.2 " + to_sexpr(e->e1) + ")";
    case Scheme::s8_3: return "(S8.3 " + to_sexpr(e->e1) + ")";
    case Scheme::s8_3h: return "(S8.3H " + to_sexpr(e->e1) + ")";
    case Scheme::s9: return "(S9)";
    case Scheme::invalid: return e->code.str();
  }
  return "?";
}

namespace {

struct SexprReader {
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw sexpr_error("s-expression: " + what + " at offset " + std::to_string(pos));
  }
  std::string atom() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) && s[pos] != '(' && s[pos] != ')') ++pos;
    if (start == pos) fail("expected an atom");
    return s.substr(start, pos - start);
  }
  void expect(char c) {
    skip();
    if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  Nat number() {
    auto a = atom();
    if (!a.empty() && a[0] == '#') a = a.substr(1);
    for (char c : a)
      if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected a natural number, got '" + a + "'");
    return Nat(a);
  }
  std::vector<std::size_t> perm() {
    expect('(');
    std::vector<std::size_t> out;
    for (;;) {
      skip();
      if (pos < s.size() && s[pos] == ')') { ++pos; return out; }
      out.push_back(number().convert_to<std::size_t>());
    }
  }
  Index index() {
    skip();
    if (pos < s.size() && s[pos] != '(') return parse_index(number());
    expect('(');
    auto head = atom();
    Index out;
    if (head == "S1") out = s1();
    else if (head == "S2") out = s2(number());
    else if (head == "S3") out = s3();
    else if (head == "S4") { auto a = index(); auto b = index(); out = s4(a, b); }
    else if (head == "S6") {
      auto a = index();
      auto t1 = perm(), t2 = perm(), t3 = perm();
      out = s6(a, t1, t2, t3);
    } else if (head == "S7") out = s7();
    else if (head == "S8.2") out = s8_2(index());
    else if (head == "S8.3") out = s8_3(index());
    else if (head == "S8.3H") out = s8_3h(index());
    else if (head == "S9") out = s9();
    else fail("unknown scheme '" + head + "'");
    expect(')');
    return out;
  }
};

}  // namespace

Index parse_sexpr(const std::string& text) {
  SexprReader r{text};
  auto e = r.index();
  r.skip();
  if (r.pos != text.size()) r.fail("trailing input");
  return e;
}

std::size_t induction_depth(const Index& e) {
  std::size_t own = (e->scheme == Scheme::s8_3 || e->scheme == Scheme::s8_3h) ? 1 : 0;
  std::size_t sub = 0;
  if (e->e1) sub = std::max(sub, induction_depth(e->e1));
  if (e->e2) sub = std::max(sub, induction_depth(e->e2));
  return own + sub;
}

}  // namespace indcalc
