#include "ginv/gamma_algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ginv {

namespace {

void check_index(const GammaData& g, std::size_t j, const char* op) {
  if (j >= g.size()) {
    throw std::out_of_range(std::string(op) + ": factor index " + std::to_string(j) +
                            " out of range (r = " + std::to_string(g.size()) + ")");
  }
}

void sorted_insert(std::vector<GaussianRat>& v, const GaussianRat& x) {
  v.insert(std::lower_bound(v.begin(), v.end(), x, lex_less), x);
}

bool erase_one(std::vector<GaussianRat>& v, const GaussianRat& x) {
  auto it = std::find(v.begin(), v.end(), x);
  if (it == v.end()) return false;
  v.erase(it);
  return true;
}

}  // namespace

void GammaData::validate() const {
  if (lambdas.size() != mus.size()) {
    throw std::invalid_argument("GammaData: lambda/mu length mismatch");
  }
  if (omega.tag().empty()) {
    throw std::invalid_argument("GammaData: omega tag must be nonempty");
  }
  for (std::size_t j = 0; j < lambdas.size(); ++j) {
    if (lambdas[j].sign() <= 0) {
      throw std::invalid_argument("GammaData: lambda must be positive at factor " +
                                  std::to_string(j));
    }
    if (mus[j].re().sign() < 0) {
      throw std::invalid_argument("GammaData: Re(mu) must be nonnegative at factor " +
                                  std::to_string(j));
    }
  }
}

RationalFactor::RationalFactor(int sign, PowerProduct kappa,
                               std::vector<GaussianRat> roots,
                               std::vector<GaussianRat> poles)
    : sign_(sign >= 0 ? 1 : -1), kappa_(std::move(kappa)) {
  std::sort(roots.begin(), roots.end(), lex_less);
  std::sort(poles.begin(), poles.end(), lex_less);
  // Multiset difference in both directions: common entries cancel.
  for (const auto& r : roots) {
    if (!erase_one(poles, r)) roots_.push_back(r);
  }
  poles_ = std::move(poles);
}

const RationalFactor& RationalFactor::one() {
  static const RationalFactor unit{};
  return unit;
}

void RationalFactor::scale(const Rat& rho) {
  if (rho.sign() <= 0) {
    throw std::invalid_argument("RationalFactor: scale factor must be positive");
  }
  kappa_ *= PowerProduct::from_rational(rho);
}

void RationalFactor::add_root(const GaussianRat& a) {
  if (!erase_one(poles_, a)) sorted_insert(roots_, a);
}

void RationalFactor::add_pole(const GaussianRat& b) {
  if (!erase_one(roots_, b)) sorted_insert(poles_, b);
}

DecoratedGamma expand(const DecoratedGamma& g, std::size_t j) {
  check_index(g.gamma, j, "expand");
  const GaussianRat& mu = g.gamma.mus[j];
  if (mu.re() < Rat(1)) {
    throw std::invalid_argument("expand: requires Re(mu) >= 1 at factor " +
                                std::to_string(j) + ", got " + mu.re().str());
  }
  DecoratedGamma out = g;
  const Rat& lambda = out.gamma.lambdas[j];
  // (lambda s + mu - 1) = lambda (s - (1 - mu)/lambda).
  out.rational.scale(lambda);
  out.rational.add_root((GaussianRat(Rat(1)) - mu) / GaussianRat(lambda));
  out.gamma.mus[j] -= GaussianRat(Rat(1));
  return out;
}

DecoratedGamma contract(const DecoratedGamma& g, std::size_t j) {
  check_index(g.gamma, j, "contract");
  DecoratedGamma out = g;
  const Rat& lambda = out.gamma.lambdas[j];
  // (lambda s + mu)^{-1} = lambda^{-1} (s - (-mu/lambda))^{-1}.
  out.rational.scale(lambda.inverse());
  out.rational.add_pole(-g.gamma.mus[j] / GaussianRat(lambda));
  out.gamma.mus[j] += GaussianRat(Rat(1));
  return out;
}

SplitResult split(const DecoratedGamma& g, std::size_t j, unsigned m) {
  check_index(g.gamma, j, "split");
  if (m < 1) throw std::invalid_argument("split: order must be >= 1");
  const Rat order(static_cast<long>(m));
  const Rat lambda = g.gamma.lambdas[j];
  const GaussianRat mu = g.gamma.mus[j];

  DecoratedGamma out = g;
  out.gamma.lambdas.erase(out.gamma.lambdas.begin() + static_cast<std::ptrdiff_t>(j));
  out.gamma.mus.erase(out.gamma.mus.begin() + static_cast<std::ptrdiff_t>(j));
  for (unsigned k = 0; k < m; ++k) {
    const Rat lk = lambda / order;
    const GaussianRat mk = (mu + GaussianRat(Rat(static_cast<long>(k)))) / GaussianRat(order);
    out.gamma.lambdas.insert(out.gamma.lambdas.begin() + static_cast<std::ptrdiff_t>(j + k), lk);
    out.gamma.mus.insert(out.gamma.mus.begin() + static_cast<std::ptrdiff_t>(j + k), mk);
  }
  // m^{lambda s} folds into Q^s; the constant c = m^{mu - 1/2} (2 pi)^{(1-m)/2}
  // leaves omega multiplied by conj(c)/c = m^{-2i Im(mu)}.
  out.gamma.q *= PowerProduct::from_rational(order).pow(lambda);
  const PhaseTwist update = phase_twist(order, Rat(-2) * mu.im());
  out.gamma.omega = out.gamma.omega.twisted(update);
  return {std::move(out), update};
}

SplitResult merge(const DecoratedGamma& g, const std::vector<std::size_t>& indices,
                  unsigned m) {
  if (m < 1) throw std::invalid_argument("merge: order must be >= 1");
  if (indices.size() != m) {
    throw std::invalid_argument("merge: expected " + std::to_string(m) +
                                " indices, got " + std::to_string(indices.size()));
  }
  std::vector<std::size_t> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("merge: duplicate factor index");
  }
  for (std::size_t j : sorted) check_index(g.gamma, j, "merge");

  const Rat order(static_cast<long>(m));
  const Rat lambda = g.gamma.lambdas[sorted.front()];
  std::vector<GaussianRat> selected;
  selected.reserve(m);
  for (std::size_t j : sorted) {
    if (g.gamma.lambdas[j] != lambda) {
      throw std::invalid_argument("merge: selected factors carry unequal lambdas");
    }
    selected.push_back(g.gamma.mus[j]);
  }
  std::sort(selected.begin(), selected.end(), lex_less);
  const GaussianRat mu0 = selected.front();
  const Rat step = Rat(1) / order;
  for (unsigned k = 0; k < m; ++k) {
    if (selected[k] != mu0 + GaussianRat(step * Rat(static_cast<long>(k)))) {
      throw std::invalid_argument(
          "merge: mus do not form the progression {mu, mu+1/m, ..., mu+(m-1)/m}");
    }
  }

  DecoratedGamma out = g;
  for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
    out.gamma.lambdas.erase(out.gamma.lambdas.begin() + static_cast<std::ptrdiff_t>(*it));
    out.gamma.mus.erase(out.gamma.mus.begin() + static_cast<std::ptrdiff_t>(*it));
  }
  const std::size_t at = sorted.front();
  out.gamma.lambdas.insert(out.gamma.lambdas.begin() + static_cast<std::ptrdiff_t>(at),
                           order * lambda);
  out.gamma.mus.insert(out.gamma.mus.begin() + static_cast<std::ptrdiff_t>(at),
                       GaussianRat(order) * mu0);
  out.gamma.q *= PowerProduct::from_rational(order).pow(-(order * lambda));
  const PhaseTwist update = phase_twist(order, Rat(2) * order * mu0.im());
  out.gamma.omega = out.gamma.omega.twisted(update);
  return {std::move(out), update};
}

ReduceResult reduce(const DecoratedGamma& g) {
  ReduceResult out{g, {}};
  for (std::size_t j = 0; j < out.value.gamma.size(); ++j) {
    while (out.value.gamma.mus[j].re() >= Rat(1)) {
      out.value = expand(out.value, j);
      out.trace.moves.push_back(ExpandMove{j});
    }
  }
  return out;
}

DecoratedGamma apply_move(const DecoratedGamma& g, const Move& move) {
  return std::visit(
      [&g](const auto& m) -> DecoratedGamma {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ExpandMove>) {
          return expand(g, m.index);
        } else if constexpr (std::is_same_v<T, ContractMove>) {
          return contract(g, m.index);
        } else if constexpr (std::is_same_v<T, SplitMove>) {
          return split(g, m.index, m.order).value;
        } else {
          return merge(g, m.indices, m.order).value;
        }
      },
      move);
}

DecoratedGamma apply_trace(const DecoratedGamma& g, const MoveTrace& trace) {
  DecoratedGamma current = g;
  for (std::size_t i = 0; i < trace.moves.size(); ++i) {
    try {
      current = apply_move(current, trace.moves[i]);
    } catch (const std::exception& e) {
      throw std::runtime_error("apply_trace: move " + std::to_string(i) + " failed: " +
                               e.what());
    }
  }
  return current;
}

}  // namespace ginv
