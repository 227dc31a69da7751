#ifndef CHORDAL_RING_HPP
#define CHORDAL_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "chordal/field.hpp"
#include "chordal/monomial.hpp"

namespace chordal {

// A polynomial ring: coefficient field, named variables, and the monomial
// order its polynomials are kept sorted under. Immutable and shared.
template <class F>
struct Ring {
  F field;
  int nvars;
  std::vector<std::string> names;
  MonomialOrder order;

  int var_index(const std::string& name) const {
    for (int i = 0; i < nvars; ++i)
      if (names[i] == name) return i;
    return -1;
  }
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

inline std::vector<std::string> standard_names(const std::string& prefix, int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

inline bool valid_var_name(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

template <class F>
RingPtr<F> make_ring(F field, std::vector<std::string> names,
                     MonomialOrder order = MonomialOrder::grevlex()) {
  if (static_cast<int>(names.size()) > kMaxVars)
    throw InvalidArgument("too many variables (limit " + std::to_string(kMaxVars) + ")");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!valid_var_name(names[i]))
      throw InvalidArgument("invalid variable name '" + names[i] + "'");
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw InvalidArgument("duplicate variable name '" + names[i] + "'");
  }
  if (order.kind == OrderKind::Elim &&
      (order.block <= 0 || order.block >= static_cast<int>(names.size())))
    throw InvalidArgument("elimination block must split the variables");
  int n = static_cast<int>(names.size());
  return std::make_shared<Ring<F>>(Ring<F>{std::move(field), n, std::move(names), order});
}

// Same ring up to the computational order attribute.
template <class F>
bool same_variables(const Ring<F>& a, const Ring<F>& b) {
  return a.field == b.field && a.names == b.names;
}

template <class F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  if (a == b) return true;
  return same_variables(*a, *b) && a->order == b->order;
}

template <class F>
RingPtr<F> with_order(const RingPtr<F>& r, MonomialOrder order) {
  if (r->order == order) return r;
  return make_ring(r->field, r->names, order);
}

}  // namespace chordal

#endif
