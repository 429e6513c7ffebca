#include "indcalc/rho.hpp"

#include "indcalc/fix.hpp"

#include <map>

namespace indcalc {

Index translate_p_to_t(const Index& e) {
  std::map<const IndexNode*, Index> done;
  auto rho = fix([&done](const auto& self, const Index& x) -> Index {
    if (auto it = done.find(x.get()); it != done.end()) return it->second;
    Index out;
    switch (x->scheme) {
      case Scheme::s4: out = s4(self(x->e1), self(x->e2)); break;
      case Scheme::s6: out = s6(self(x->e1), x->tau[0], x->tau[1], x->tau[2]); break;
      case Scheme::s8_2: out = s8_2(self(x->e1)); break;
      case Scheme::s8_3:
      case Scheme::s8_3h: out = s8_3h(self(x->e1)); break;
      // S9 reads its index at run time and stays as it is
      default: out = x; break;
    }
    done.emplace(x.get(), out);
    return out;
  });
  return rho(e);
}

}  // namespace indcalc
