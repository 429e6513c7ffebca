#pragma once
#include "indcalc/nat.hpp"

#include <array>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace indcalc {

// S8_3H is the indexed type-3 shape <8,3,1,d>: the induction functional applied to
// the prewellordering translation of the inductive definition coded by d
enum class Scheme { s1, s2, s3, s4, s6, s7, s8_2, s8_3, s8_3h, s9, invalid };

const char* scheme_name(Scheme s);

struct IndexNode;
using Index = std::shared_ptr<const IndexNode>;

struct IndexNode {
  Scheme scheme = Scheme::invalid;
  Nat code;
  Nat q;          // S2
  Index e1, e2;   // S4: e1 e2; S6: e1; S8: d in e1
  std::array<std::vector<std::size_t>, 3> tau;  // S6
};

struct sexpr_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// canonical node for a code; equal codes give the same pointer
Index parse_index(const Nat& code);

Index s1();
Index s2(const Nat& q);
Index s3();
Index s4(const Index& e1, const Index& e2);
Index s6(const Index& e1, std::vector<std::size_t> t1, std::vector<std::size_t> t2, std::vector<std::size_t> t3);
Index s7();
Index s8_2(const Index& d);
Index s8_3(const Index& d);
Index s8_3h(const Index& d);
Index s9();

std::string to_sexpr(const Index& e);
// accepts (S1) (S2 q) (S3) (S4 e e) (S6 e (..) (..) (..)) (S7) (S8.2 d) (S8.3 d) (S8.3H d) (S9)
// and bare integers as codes
Index parse_sexpr(const std::string& text);

// number of S8.3 / S8.3H nodes on the deepest path
std::size_t induction_depth(const Index& e);

}  // namespace indcalc
