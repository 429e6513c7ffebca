#pragma once
#include <type_traits>
#include <utility>

namespace indcalc {

// fix(f)(args...) = f(fix(f), args...)
template <class F>
struct fix_t {
  F f;
  template <class... A>
  decltype(auto) operator()(A&&... a) const {
    return f(*this, std::forward<A>(a)...);
  }
};

template <class F>
fix_t<std::decay_t<F>> fix(F&& f) {
  return {std::forward<F>(f)};
}

}  // namespace indcalc
