#include "parmod/sparse.hpp"

#include "parmod/errors.hpp"

namespace parmod {

namespace {

// Dense scratch row reused per thread; entries are zero between uses.
struct Workspace {
  std::vector<Rational> values;

  void ensure(std::size_t cols) {
    if (values.size() < cols) values.resize(cols);
  }
};

Workspace& workspace(std::size_t cols) {
  thread_local Workspace ws;
  ws.ensure(cols);
  return ws;
}

}  // namespace

SparseEliminator::SparseEliminator(std::size_t cols) : cols_(cols), pivots_(cols) {}

bool SparseEliminator::insert(const SparseRow& row) {
  if (row.empty() || full()) return false;
  auto& work = workspace(cols_).values;
  for (const auto& [c, v] : row) {
    if (c >= cols_) throw DomainError("sparse row column out of range");
    work[c] += v;
  }

  std::size_t lead = cols_;
  for (std::size_t c = row.front().first; c < cols_; ++c) {
    if (work[c].is_zero()) continue;
    if (!pivots_[c]) {
      lead = c;
      break;
    }
    const Rational f = work[c];
    for (const auto& [pc, pv] : *pivots_[c]) work[pc] -= f * pv;
  }
  if (lead == cols_) return false;

  SparseRow stored;
  const Rational inv = work[lead].inverse();
  for (std::size_t c = lead; c < cols_; ++c) {
    if (work[c].is_zero()) continue;
    stored.emplace_back(static_cast<std::uint32_t>(c), work[c] * inv);
    work[c] = Rational();
  }
  pivots_[lead] = std::move(stored);
  ++rank_;
  return true;
}

SparseRow SparseEliminator::reduce(const SparseRow& row) const {
  SparseRow out;
  if (row.empty()) return out;
  auto& work = workspace(cols_).values;
  for (const auto& [c, v] : row) {
    if (c >= cols_) throw DomainError("sparse row column out of range");
    work[c] += v;
  }
  for (std::size_t c = row.front().first; c < cols_; ++c) {
    if (work[c].is_zero()) continue;
    if (pivots_[c]) {
      const Rational f = work[c];
      for (const auto& [pc, pv] : *pivots_[c]) work[pc] -= f * pv;
    } else {
      out.emplace_back(static_cast<std::uint32_t>(c), work[c]);
      work[c] = Rational();
    }
  }
  return out;
}

}  // namespace parmod
