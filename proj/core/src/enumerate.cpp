#include "nrack/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "nrack/error.hpp"

namespace nrack {

std::string filter_name(StructureFilter f) {
  switch (f) {
    case StructureFilter::NRack: return "nrack";
    case StructureFilter::WeakNQuandle: return "weak-n-quandle";
    case StructureFilter::NQuandle: return "n-quandle";
    case StructureFilter::NKei: return "n-kei";
  }
  return "?";
}

StructureFilter parse_filter(const std::string& name) {
  for (auto f : {StructureFilter::NRack, StructureFilter::WeakNQuandle, StructureFilter::NQuandle,
                 StructureFilter::NKei}) {
    if (filter_name(f) == name) return f;
  }
  throw InvalidArgument("unknown filter '" + name + "' (nrack, weak-n-quandle, n-quandle, n-kei)");
}

bool passes_filter(const Classification& c, StructureFilter f) {
  switch (f) {
    case StructureFilter::NRack: return c.is_nrack;
    case StructureFilter::WeakNQuandle: return c.is_weak_nquandle;
    case StructureFilter::NQuandle: return c.is_nquandle;
    case StructureFilter::NKei: return c.is_nkei;
  }
  return false;
}

FiniteNRack canonical_form(const FiniteNRack& r) {
  const auto m = static_cast<std::size_t>(r.size());
  if (m > 8) throw InvalidArgument("canonical form is limited to 8 elements");
  const auto n = static_cast<std::size_t>(r.arity());
  const auto table = r.table();
  std::vector<Element> best(table.begin(), table.end());
  std::vector<Element> candidate(table.size());
  Permutation pi(m);
  std::iota(pi.begin(), pi.end(), 0);
  Tuple xs(n);
  do {
    std::fill(xs.begin(), xs.end(), 0);
    std::size_t i = 0;
    do {
      std::size_t target = 0;
      for (auto x : xs) target = target * m + pi[x];
      candidate[target] = pi[table[i++]];
    } while (next_tuple(xs, static_cast<Element>(m)));
    if (candidate < best) best = candidate;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return FiniteNRack(r.arity(), r.size(), std::move(best));
}

namespace {

class TableSearch {
 public:
  TableSearch(int arity, int size, StructureFilter filter, std::uint64_t budget)
      : n_(arity), m_(size), filter_(filter), budget_(budget),
        entries_(checked_pow(size, arity)), table_(entries_, kUnset),
        row_used_(entries_ / size * size, 0), prefix_(arity - 1, 0) {}

  void run(EnumerationReport& report) {
    report_ = &report;
    extend(0);
  }

  std::set<std::vector<Element>> classes;

 private:
  static constexpr Element kUnset = ~Element{0};

  Element forced_value(std::size_t pos) {
    const auto y = static_cast<Element>(pos % m_);
    auto row = pos / m_;
    for (std::size_t i = prefix_.size(); i-- > 0;) {
      prefix_[i] = static_cast<Element>(row % m_);
      row /= m_;
    }
    const bool quandle_like = filter_ == StructureFilter::NQuandle || filter_ == StructureFilter::NKei;
    if (quandle_like && std::find(prefix_.begin(), prefix_.end(), y) != prefix_.end()) return y;
    if (filter_ != StructureFilter::NRack &&
        std::all_of(prefix_.begin(), prefix_.end(), [y](Element a) { return a == y; })) {
      return y;
    }
    return kUnset;
  }

  bool involution_ok(std::size_t row, std::size_t filled) const {
    const auto base = row * m_;
    for (std::size_t y = 0; base + y < filled && y < static_cast<std::size_t>(m_); ++y) {
      const auto v = table_[base + y];
      if (base + v < filled && table_[base + v] != y) return false;
    }
    return true;
  }

  // Every distributivity instance whose lookups are all assigned holds.
  bool distributivity_ok() const {
    Tuple xs(2 * n_ - 1, 0);
    const auto m = static_cast<std::size_t>(m_);
    do {
      std::size_t px = 0;
      for (int i = 0; i < n_ - 1; ++i) px = px * m + xs[i];
      std::size_t y_idx = 0;
      std::size_t rhs_idx = 0;
      bool defined = true;
      for (int i = 0; i < n_ && defined; ++i) {
        const auto y = xs[n_ - 1 + i];
        y_idx = y_idx * m + y;
        const auto v = table_[px * m + y];
        if (v == kUnset) defined = false;
        rhs_idx = rhs_idx * m + v;
      }
      if (!defined) continue;
      const auto inner = table_[y_idx];
      if (inner == kUnset) continue;
      const auto lhs = table_[px * m + inner];
      const auto rhs = table_[rhs_idx];
      if (lhs == kUnset || rhs == kUnset) continue;
      if (lhs != rhs) return false;
    } while (next_tuple(xs, static_cast<Element>(m_)));
    return true;
  }

  void extend(std::size_t pos) {
    if (pos == entries_) {
      record();
      return;
    }
    const auto row = pos / m_;
    const auto forced = forced_value(pos);
    for (Element v = 0; v < static_cast<Element>(m_); ++v) {
      if (forced != kUnset && v != forced) continue;
      auto& used = row_used_[row * m_ + v];
      if (used) continue;
      if (++report_->nodes_visited > budget_) {
        throw BudgetExceeded("enumeration visited more than " + std::to_string(budget_) +
                                 " search nodes",
                             report_->nodes_visited, budget_);
      }
      table_[pos] = v;
      used = 1;
      const bool kei = filter_ == StructureFilter::NKei;
      if ((!kei || involution_ok(row, pos + 1)) && distributivity_ok()) extend(pos + 1);
      used = 0;
      table_[pos] = kUnset;
    }
  }

  void record() {
    FiniteNRack r(n_, m_, table_);
    if (!passes_filter(classify(r), filter_)) return;
    ++report_->count_total;
    const auto canon = canonical_form(r);
    classes.emplace(canon.table().begin(), canon.table().end());
  }

  int n_;
  int m_;
  StructureFilter filter_;
  std::uint64_t budget_;
  std::size_t entries_;
  std::vector<Element> table_;
  std::vector<char> row_used_;
  Tuple prefix_;
  EnumerationReport* report_ = nullptr;
};

}  // namespace

EnumerationReport enumerate_nracks(int arity, int size, StructureFilter filter, std::uint64_t budget) {
  if (arity < 2) throw InvalidArgument("arity must be at least 2");
  if (size < 1 || size > 8) throw InvalidArgument("enumeration size must be in 1..8");
  EnumerationReport report;
  report.arity = arity;
  report.size = size;
  report.filter = filter;
  TableSearch search(arity, size, filter, budget);
  search.run(report);
  report.count_up_to_iso = search.classes.size();
  for (const auto& t : search.classes) report.representatives.emplace_back(arity, size, t);
  return report;
}

}  // namespace nrack
