#include "factor.hpp"

#include "infosel/inference.hpp"

#include <algorithm>
#include <limits>

namespace infosel::detail {

namespace {

// Upper bound on the odometer length of a single combine() call.
constexpr std::size_t kMaxCombineSteps = std::size_t{1} << 28;

std::vector<std::size_t> strides_of(std::span<const std::uint32_t> cards) {
  std::vector<std::size_t> strides(cards.size(), 1);
  for (std::size_t i = cards.size(); i-- > 1;) strides[i - 1] = strides[i] * cards[i];
  return strides;
}

std::size_t checked_product(std::span<const std::uint32_t> cards, std::size_t cap) {
  std::size_t total = 1;
  for (auto c : cards) {
    if (c != 0 && total > cap / c) return cap + 1;
    total *= c;
  }
  return total;
}

}  // namespace

Factor cpt_factor(const DiscreteNetwork& network, VarId child) {
  const Cpt& cpt = network.cpt(child);
  Factor f;
  f.vars = cpt.parents;
  f.vars.push_back(child);
  for (VarId v : f.vars) f.cards.push_back(network.cardinality(v));
  f.values = cpt.table;
  return f;
}

Factor reduce(const Factor& factor, const Assignment& evidence) {
  const auto strides = strides_of(factor.cards);
  std::size_t base = 0;
  Factor out;
  std::vector<std::size_t> free_strides;
  for (std::size_t i = 0; i < factor.vars.size(); ++i) {
    auto it = evidence.bindings().find(factor.vars[i]);
    if (it != evidence.bindings().end()) {
      base += strides[i] * it->second;
    } else {
      out.vars.push_back(factor.vars[i]);
      out.cards.push_back(factor.cards[i]);
      free_strides.push_back(strides[i]);
    }
  }
  if (out.vars.size() == factor.vars.size()) return factor;

  std::size_t total = 1;
  for (auto c : out.cards) total *= c;
  out.values.resize(total);
  std::vector<std::uint32_t> digit(out.vars.size(), 0);
  std::size_t src = base;
  for (std::size_t k = 0; k < total; ++k) {
    out.values[k] = factor.values[src];
    for (std::size_t d = out.vars.size(); d-- > 0;) {
      if (++digit[d] < out.cards[d]) {
        src += free_strides[d];
        break;
      }
      src -= free_strides[d] * (out.cards[d] - 1);
      digit[d] = 0;
    }
  }
  return out;
}

Factor combine(std::span<const Factor* const> factors, std::span<const VarId> keep,
               std::span<const std::uint32_t> keep_cards, std::size_t cell_cap) {
  std::vector<VarId> vars(keep.begin(), keep.end());
  std::vector<std::uint32_t> cards(keep_cards.begin(), keep_cards.end());
  for (const Factor* f : factors) {
    for (std::size_t i = 0; i < f->vars.size(); ++i) {
      if (std::find(vars.begin(), vars.end(), f->vars[i]) == vars.end()) {
        vars.push_back(f->vars[i]);
        cards.push_back(f->cards[i]);
      }
    }
  }

  const std::size_t out_cells = checked_product(keep_cards, cell_cap);
  if (out_cells > cell_cap)
    throw TooLarge("factor over " + std::to_string(keep.size()) + " variables exceeds " +
                   std::to_string(cell_cap) + " cells");
  const std::size_t steps = checked_product(cards, kMaxCombineSteps);
  if (steps > kMaxCombineSteps)
    throw TooLarge("variable elimination step over " + std::to_string(vars.size()) +
                   " variables is too expensive");

  const std::size_t nv = vars.size();
  const std::size_t nf = factors.size();
  // stride[f * nv + d]: step in factor f when union digit d increments.
  std::vector<std::size_t> stride(nf * nv, 0);
  for (std::size_t f = 0; f < nf; ++f) {
    const auto own = strides_of(factors[f]->cards);
    for (std::size_t i = 0; i < factors[f]->vars.size(); ++i) {
      const auto pos = static_cast<std::size_t>(
          std::find(vars.begin(), vars.end(), factors[f]->vars[i]) - vars.begin());
      stride[f * nv + pos] = own[i];
    }
  }
  std::vector<std::size_t> out_stride(nv, 0);
  {
    const auto own = strides_of(keep_cards);
    for (std::size_t i = 0; i < keep.size(); ++i) out_stride[i] = own[i];
  }

  Factor out;
  out.vars.assign(keep.begin(), keep.end());
  out.cards.assign(keep_cards.begin(), keep_cards.end());
  out.values.assign(out_cells, 0.0);

  std::vector<std::size_t> idx(nf, 0);
  std::vector<std::uint32_t> digit(nv, 0);
  std::size_t out_idx = 0;
  for (std::size_t step = 0; step < steps; ++step) {
    double p = 1.0;
    for (std::size_t f = 0; f < nf && p != 0.0; ++f) p *= factors[f]->values[idx[f]];
    out.values[out_idx] += p;
    for (std::size_t d = nv; d-- > 0;) {
      if (++digit[d] < cards[d]) {
        for (std::size_t f = 0; f < nf; ++f) idx[f] += stride[f * nv + d];
        out_idx += out_stride[d];
        break;
      }
      const std::size_t back = cards[d] - 1;
      for (std::size_t f = 0; f < nf; ++f) idx[f] -= stride[f * nv + d] * back;
      out_idx -= out_stride[d] * back;
      digit[d] = 0;
    }
  }
  return out;
}

Factor eliminate_to(std::vector<Factor> factors, std::span<const VarId> keep,
                    const DiscreteNetwork& network) {
  std::vector<VarId> eliminate;
  for (const auto& f : factors)
    for (VarId v : f.vars)
      if (std::find(keep.begin(), keep.end(), v) == keep.end()) eliminate.push_back(v);
  eliminate = make_set(std::move(eliminate));

  while (!eliminate.empty()) {
    std::size_t best = 0;
    std::size_t best_degree = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < eliminate.size(); ++i) {
      std::vector<VarId> neighbours;
      for (const auto& f : factors)
        if (std::find(f.vars.begin(), f.vars.end(), eliminate[i]) != f.vars.end())
          neighbours.insert(neighbours.end(), f.vars.begin(), f.vars.end());
      const std::size_t degree = make_set(std::move(neighbours)).size();
      if (degree < best_degree) {
        best_degree = degree;
        best = i;
      }
    }
    const VarId v = eliminate[best];
    eliminate.erase(eliminate.begin() + static_cast<std::ptrdiff_t>(best));

    std::vector<Factor> rest;
    std::vector<Factor> bucket;
    for (auto& f : factors) {
      if (std::find(f.vars.begin(), f.vars.end(), v) != f.vars.end())
        bucket.push_back(std::move(f));
      else
        rest.push_back(std::move(f));
    }
    std::vector<VarId> scope;
    for (const auto& f : bucket)
      for (VarId u : f.vars)
        if (u != v) scope.push_back(u);
    scope = make_set(std::move(scope));
    std::vector<std::uint32_t> scope_cards;
    for (VarId u : scope) scope_cards.push_back(network.cardinality(u));

    std::vector<const Factor*> ptrs;
    for (const auto& f : bucket) ptrs.push_back(&f);
    rest.push_back(combine(ptrs, scope, scope_cards, kMaxFactorCells));
    factors = std::move(rest);
  }

  std::vector<std::uint32_t> keep_cards;
  for (VarId v : keep) keep_cards.push_back(network.cardinality(v));
  std::vector<const Factor*> ptrs;
  for (const auto& f : factors) ptrs.push_back(&f);
  return combine(ptrs, keep, keep_cards, kMaxFactorCells);
}

}  // namespace infosel::detail
