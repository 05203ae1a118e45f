#pragma once

// Unpruned reference enumeration: walks every operation table and checks the
// axioms with direct loops. Shares no code with the library's search.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace nrack::oracle {

struct Table {
  int n;
  int m;
  std::vector<int> values;

  int at(const std::vector<int>& args) const {
    int idx = 0;
    for (int a : args) idx = idx * m + a;
    return values[idx];
  }
};

inline void for_each_tuple(int m, int len, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> t(len, 0);
  for (;;) {
    fn(t);
    int i = len - 1;
    while (i >= 0 && ++t[i] == m) t[i--] = 0;
    if (i < 0) return;
  }
}

struct Flags {
  bool rack = false;
  bool weak_quandle = false;
  bool quandle = false;
  bool kei = false;
};

inline Flags axioms(const Table& t) {
  Flags f;
  bool ok = true;
  for_each_tuple(t.m, t.n - 1, [&](const std::vector<int>& a) {
    std::vector<int> hit(t.m, 0);
    for (int x = 0; x < t.m; ++x) {
      auto args = a;
      args.push_back(x);
      hit[t.at(args)]++;
    }
    if (std::count(hit.begin(), hit.end(), 1) != t.m) ok = false;
  });
  if (!ok) return f;
  for_each_tuple(t.m, t.n - 1, [&](const std::vector<int>& x) {
    if (!ok) return;
    for_each_tuple(t.m, t.n, [&](const std::vector<int>& y) {
      auto lhs_args = x;
      lhs_args.push_back(t.at(y));
      std::vector<int> rhs_args;
      for (int yi : y) {
        auto a = x;
        a.push_back(yi);
        rhs_args.push_back(t.at(a));
      }
      if (t.at(lhs_args) != t.at(rhs_args)) ok = false;
    });
  });
  if (!ok) return f;
  f.rack = true;
  f.weak_quandle = true;
  for (int x = 0; x < t.m; ++x)
    if (t.at(std::vector<int>(t.n, x)) != x) f.weak_quandle = false;
  f.quandle = f.weak_quandle;
  bool involutive = true;
  for_each_tuple(t.m, t.n, [&](const std::vector<int>& args) {
    const int y = args.back();
    if (std::find(args.begin(), args.end() - 1, y) != args.end() - 1 && t.at(args) != y) f.quandle = false;
    auto twice = args;
    twice.back() = t.at(args);
    if (t.at(twice) != y) involutive = false;
  });
  f.kei = f.quandle && involutive;
  return f;
}

inline bool isomorphic(const Table& a, const Table& b) {
  if (a.n != b.n || a.m != b.m) return false;
  std::vector<int> pi(a.m);
  std::iota(pi.begin(), pi.end(), 0);
  do {
    bool same = true;
    for_each_tuple(a.m, a.n, [&](const std::vector<int>& xs) {
      if (!same) return;
      std::vector<int> img;
      for (int x : xs) img.push_back(pi[x]);
      if (pi[a.at(xs)] != b.at(img)) same = false;
    });
    if (same) return true;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return false;
}

struct Census {
  std::uint64_t total = 0;
  std::vector<Table> classes;
};

/// Every table of arity n on m elements whose flags satisfy `keep`.
inline Census census(int n, int m, const std::function<bool(const Flags&)>& keep) {
  Census c;
  int entries = 1;
  for (int i = 0; i < n; ++i) entries *= m;
  for_each_tuple(m, entries, [&](const std::vector<int>& values) {
    Table t{n, m, values};
    if (!keep(axioms(t))) return;
    ++c.total;
    for (const auto& rep : c.classes)
      if (isomorphic(rep, t)) return;
    c.classes.push_back(t);
  });
  return c;
}

}  // namespace nrack::oracle
