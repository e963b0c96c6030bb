#include "garside_kit/conjugacy.hpp"

#include <deque>
#include <set>

#include "garside_kit/errors.hpp"

namespace gk {

Simple initial_factor(const GarsideStructure& G, const GarsideElement& a) {
  if (a.factors.empty()) return G.identity();
  return G.tau_power(a.factors.front(), a.delta_power);
}

Simple final_factor(const GarsideStructure& G, const GarsideElement& a) {
  if (a.factors.empty()) return G.identity();
  return a.factors.back();
}

Simple preferred_prefix(const GarsideStructure& G, const GarsideElement& a) {
  if (a.factors.empty()) return G.identity();
  Simple pi = G.meet(initial_factor(G, a), G.right_complement(final_factor(G, a)));
  Simple alt = G.meet(initial_factor(G, a), initial_factor(G, inverse(G, a)));
  if (pi != alt) raise(ErrorCode::InternalError, "i(a) ^ d_R(t(a)) differs from i(a) ^ i(a^-1)");
  return pi;
}

GarsideElement cyclic_sliding(const GarsideStructure& G, const GarsideElement& a) {
  if (a.factors.empty()) return a;
  return conjugate(G, a, from_simple(G, preferred_prefix(G, a)));
}

bool in_sliding_circuits(const GarsideStructure& G, const GarsideElement& a) {
  std::set<GarsideElement> seen{a};
  GarsideElement x = a;
  for (;;) {
    x = cyclic_sliding(G, x);
    if (x == a) return true;
    if (!seen.insert(x).second) return false;
  }
}

namespace {

// Slide until the orbit repeats; returns the first repeated element and the
// accumulated conjugator.
std::pair<GarsideElement, GarsideElement> slide_into_circuit(const GarsideStructure& G, const GarsideElement& a) {
  std::map<GarsideElement, GarsideElement> seen;  // element -> conjugator from a
  GarsideElement x = a, c;
  while (!seen.count(x)) {
    seen.emplace(x, c);
    if (x.factors.empty()) break;
    GarsideElement pi = from_simple(G, preferred_prefix(G, x));
    x = conjugate(G, x, pi);
    c = multiply(G, c, pi);
  }
  return {x, seen.at(x)};
}

}  // namespace

SlidingCircuitSet sliding_circuits(const GarsideStructure& G, const GarsideElement& a, const Budgets& budgets) {
  SlidingCircuitSet out;
  out.start = a;
  std::tie(out.representative, out.to_representative) = slide_into_circuit(G, a);
  out.members.emplace(out.representative, GarsideElement{});
  std::deque<GarsideElement> queue{out.representative};
  while (!queue.empty()) {
    GarsideElement b = queue.front();
    queue.pop_front();
    const GarsideElement gb = out.members.at(b);
    for (Simple s = 0; s < G.num_simples(); ++s) {
      if (s == G.identity()) continue;
      GarsideElement sa = from_simple(G, s);
      GarsideElement c = conjugate(G, b, sa);
      if (out.members.count(c) || !in_sliding_circuits(G, c)) continue;
      if (out.members.size() >= budgets.sliding_circuits)
        raise(ErrorCode::BudgetExceeded, "sliding circuit set exceeded its budget");
      out.members.emplace(c, multiply(G, gb, sa));
      queue.push_back(c);
    }
  }
  return out;
}

ConjugacyResult conjugacy_test(const GarsideStructure& G, const GarsideElement& a, const GarsideElement& b,
                               const Budgets& budgets) {
  ConjugacyResult res;
  auto [b0, cb] = slide_into_circuit(G, b);
  SlidingCircuitSet sc = sliding_circuits(G, a, budgets);
  auto it = sc.members.find(b0);
  if (it == sc.members.end()) return res;
  // a0 = ca^-1 a ca, b0 = g0^-1 a0 g0, b0 = cb^-1 b cb  =>  g = ca g0 cb^-1.
  GarsideElement g = multiply(G, multiply(G, sc.to_representative, it->second), inverse(G, cb));
  if (conjugate(G, a, g) != b) raise(ErrorCode::InternalError, "conjugator failed verification");
  res.conjugate = true;
  res.witness = g;
  return res;
}

}  // namespace gk
