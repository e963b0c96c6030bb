#include "garside_kit/coxeter_engine.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

#include "garside_kit/errors.hpp"
#include "garside_kit/roots.hpp"

namespace gk {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace

FiniteCoxeterGroup::FiniteCoxeterGroup(const CoxeterGraph& g, std::size_t cap)
    : graph_(g), rank_(g.rank()) {
  if (!is_spherical(g)) raise(ErrorCode::NotSpherical, "the Coxeter group is infinite");
  if (rank_ > 64) raise(ErrorCode::BadParameter, "rank above 64 is not supported");
  auto rep = ReflectionRep::of(g);

  // All roots with their reflection permutations.
  std::vector<Root> roots = positive_roots(g);
  const std::size_t npos = roots.size();
  for (std::size_t i = 0; i < npos; ++i) roots.push_back(-roots[i]);
  std::map<Root, std::uint32_t> index;
  for (std::uint32_t i = 0; i < roots.size(); ++i) index.emplace(roots[i], i);
  std::vector<std::uint32_t> refl(rank_ * roots.size());
  for (Letter s = 0; s < rank_; ++s)
    for (std::uint32_t i = 0; i < roots.size(); ++i) {
      auto it = index.find(rep->reflect(s, roots[i]));
      if (it == index.end()) raise(ErrorCode::InternalError, "root system not closed under reflections");
      refl[s * roots.size() + i] = it->second;
    }

  // Breadth-first search on the images of the simple roots, multiplying on
  // the left; the search depth is the length.
  std::unordered_map<std::vector<std::uint32_t>, Id, VecHash> ids;
  std::vector<std::vector<std::uint32_t>> tuples;
  std::vector<std::uint32_t> id_tuple(rank_);
  for (Letter s = 0; s < rank_; ++s) id_tuple[s] = index.at(rep->simple_root(s));
  ids.emplace(id_tuple, 0);
  tuples.push_back(id_tuple);
  length_.push_back(0);
  for (Id w = 0; w < tuples.size(); ++w) {
    for (Letter s = 0; s < rank_; ++s) {
      std::vector<std::uint32_t> t(rank_);
      for (Letter i = 0; i < rank_; ++i) t[i] = refl[s * roots.size() + tuples[w][i]];
      auto [it, fresh] = ids.emplace(t, static_cast<Id>(tuples.size()));
      if (fresh) {
        if (tuples.size() >= cap)
          raise(ErrorCode::EnumerationBudgetExceeded,
                "group has more than " + std::to_string(cap) + " elements");
        tuples.push_back(std::move(t));
        length_.push_back(length_[w] + 1);
      }
      left_.push_back(it->second);
    }
  }
  const std::size_t n = tuples.size();
  tuples.clear();
  ids.clear();

  first_.assign(n, 0);
  ldes_.assign(n, 0);
  for (Id w = 0; w < n; ++w) {
    bool found = false;
    for (Letter s = 0; s < rank_; ++s)
      if (length_[left(w, s)] < length_[w]) {
        ldes_[w] |= std::uint64_t(1) << s;
        if (!found) first_[w] = s, found = true;
      }
  }
  inverse_.assign(n, 0);
  for (Id w = 0; w < n; ++w) {
    Id x = 0;
    for (Letter s : word(w)) x = left(x, s);
    inverse_[w] = x;
  }
  right_.assign(n * rank_, 0);
  rdes_.assign(n, 0);
  for (Id w = 0; w < n; ++w)
    for (Letter s = 0; s < rank_; ++s) {
      Id r = inverse_[left(inverse_[w], s)];
      right_[w * rank_ + s] = r;
      if (length_[r] < length_[w]) rdes_[w] |= std::uint64_t(1) << s;
    }
  for (Id w = 0; w < n; ++w)
    if (length_[w] > length_[w0_]) w0_ = w;
}

std::shared_ptr<const FiniteCoxeterGroup> FiniteCoxeterGroup::of(const CoxeterGraph& g, std::size_t cap) {
  static std::mutex mu;
  static std::unordered_map<std::string, std::shared_ptr<const FiniteCoxeterGroup>> cache;
  static std::unordered_map<std::string, std::size_t> too_big;  // largest cap that failed
  {
    std::lock_guard<std::mutex> lock(mu);
    auto tb = too_big.find(g.key());
    if (tb != too_big.end() && cap <= tb->second)
      raise(ErrorCode::EnumerationBudgetExceeded,
            "group has more than " + std::to_string(cap) + " elements");
    auto it = cache.find(g.key());
    if (it != cache.end()) {
      if (it->second->size() > cap)
        raise(ErrorCode::EnumerationBudgetExceeded,
              "group has more than " + std::to_string(cap) + " elements");
      return it->second;
    }
  }
  std::shared_ptr<const FiniteCoxeterGroup> grp;
  try {
    grp = std::make_shared<const FiniteCoxeterGroup>(g, cap);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::EnumerationBudgetExceeded) {
      std::lock_guard<std::mutex> lock(mu);
      auto& prev = too_big[g.key()];
      prev = std::max(prev, cap);
    }
    throw;
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(g.key(), grp).first->second;
}

FiniteCoxeterGroup::Id FiniteCoxeterGroup::multiply(Id a, Id b) const {
  for (Letter s : word(b)) a = right(a, s);
  return a;
}

FiniteCoxeterGroup::Id FiniteCoxeterGroup::id_of(const std::vector<Letter>& word) const {
  Id w = 0;
  for (Letter s : word) {
    if (s >= rank_) raise(ErrorCode::LetterNotInGraph, "letter out of range");
    w = right(w, s);
  }
  return w;
}

std::vector<Letter> FiniteCoxeterGroup::word(Id w) const {
  std::vector<Letter> out;
  out.reserve(length_[w]);
  while (w != 0) {
    Letter s = first_[w];
    out.push_back(s);
    w = left(w, s);
  }
  return out;
}

}  // namespace gk
