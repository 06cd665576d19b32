#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "ginv/power_product.hpp"
#include "ginv/rational.hpp"

namespace ginv {

/// The exact functional-equation data (omega, Q, lambda_j, mu_j) of a
/// gamma-factor Q^s prod Gamma(lambda_j s + mu_j) with lambda_j > 0 and
/// Re(mu_j) >= 0. r = 0 (bare Q^s) is permitted.
struct GammaData {
  UnitPhase omega{};
  PowerProduct q{};
  std::vector<Rat> lambdas{};
  std::vector<GaussianRat> mus{};

  std::size_t size() const { return lambdas.size(); }

  /// Throws std::invalid_argument on any violated data constraint.
  void validate() const;

  friend bool operator==(const GammaData&, const GammaData&) = default;
};

/// Rational decoration R(s) = kappa * prod (s - alpha_j) / prod (s - beta_j)
/// in auto-cancelled form: the root and pole multisets are disjoint and kept
/// sorted. kappa is a signed power product; moves only ever scale it by
/// positive rationals, so engine-built values keep the sign they start with.
class RationalFactor {
 public:
  RationalFactor() = default;
  RationalFactor(int sign, PowerProduct kappa, std::vector<GaussianRat> roots,
                 std::vector<GaussianRat> poles);

  static const RationalFactor& one();

  int sign() const { return sign_; }
  const PowerProduct& kappa() const { return kappa_; }
  const std::vector<GaussianRat>& roots() const { return roots_; }
  const std::vector<GaussianRat>& poles() const { return poles_; }

  bool is_constant() const { return roots_.empty() && poles_.empty(); }
  bool is_one() const { return sign_ > 0 && kappa_.is_one() && is_constant(); }

  /// kappa *= rho for positive rational rho.
  void scale(const Rat& rho);

  /// Insert a root, cancelling one equal pole instead when present.
  void add_root(const GaussianRat& a);
  /// Insert a pole, cancelling one equal root instead when present.
  void add_pole(const GaussianRat& b);

  friend bool operator==(const RationalFactor&, const RationalFactor&) = default;

 private:
  int sign_ = 1;
  PowerProduct kappa_{};
  std::vector<GaussianRat> roots_{};
  std::vector<GaussianRat> poles_{};
};

/// A decorated gamma-factor R(s) * gamma(s).
struct DecoratedGamma {
  RationalFactor rational{};
  GammaData gamma{};

  friend bool operator==(const DecoratedGamma&, const DecoratedGamma&) = default;
};

struct ExpandMove {
  std::size_t index;
  friend bool operator==(const ExpandMove&, const ExpandMove&) = default;
};
struct ContractMove {
  std::size_t index;
  friend bool operator==(const ContractMove&, const ContractMove&) = default;
};
struct SplitMove {
  std::size_t index;
  unsigned order;
  friend bool operator==(const SplitMove&, const SplitMove&) = default;
};
struct MergeMove {
  std::vector<std::size_t> indices;
  unsigned order;
  friend bool operator==(const MergeMove&, const MergeMove&) = default;
};

using Move = std::variant<ExpandMove, ContractMove, SplitMove, MergeMove>;

/// A replayable move sequence; indices refer to the factor list as it stands
/// when the move is reached.
struct MoveTrace {
  std::vector<Move> moves{};

  bool empty() const { return moves.empty(); }
  std::size_t size() const { return moves.size(); }

  friend bool operator==(const MoveTrace&, const MoveTrace&) = default;
};

/// Factorial formula, expanding direction:
/// Gamma(ls + u) = (ls + u - 1) Gamma(ls + u - 1). mu_j drops by 1, kappa
/// gains lambda_j, R gains the root (1 - mu_j)/lambda_j (computed from the
/// old mu_j). Requires Re(mu_j) >= 1 so the result stays admissible data.
DecoratedGamma expand(const DecoratedGamma& g, std::size_t j);

/// Factorial formula, contracting direction:
/// Gamma(ls + u) = (ls + u)^{-1} Gamma(ls + u + 1). mu_j rises by 1, kappa
/// loses lambda_j, R gains the pole -mu_j/lambda_j from the old mu_j.
DecoratedGamma contract(const DecoratedGamma& g, std::size_t j);

struct SplitResult {
  DecoratedGamma value;
  /// The phase multiplier conj(c)/c applied to omega by the move.
  PhaseTwist omega_update;
};

/// Legendre-Gauss multiplication formula of order m applied to factor j:
/// the factor becomes the m factors (lambda/m, (mu+k)/m) for k = 0..m-1,
/// inserted at position j in that order; Q gains m^lambda and omega gains
/// the twist m^{-2i Im(mu)}. m = 1 is the identity.
SplitResult split(const DecoratedGamma& g, std::size_t j, unsigned m);

/// Inverse of split: the selected factors must share one lambda and their
/// mus must form exactly {mu, mu + 1/m, ..., mu + (m-1)/m}. They are replaced
/// by (m lambda, m mu) at the smallest selected position; Q gains
/// m^{-m lambda} and omega gains the twist m^{+2i m Im(mu)}.
SplitResult merge(const DecoratedGamma& g, const std::vector<std::size_t>& indices,
                  unsigned m);

struct ReduceResult {
  DecoratedGamma value;
  MoveTrace trace;
};

/// Expands every factor until 0 <= Re(mu_j) < 1 throughout; each expand
/// lowers one Re(mu_j) by exactly 1, so the loop terminates. Idempotent.
ReduceResult reduce(const DecoratedGamma& g);

DecoratedGamma apply_move(const DecoratedGamma& g, const Move& move);

/// Left-to-right composition; the first failing move is reported with its
/// position in the trace.
DecoratedGamma apply_trace(const DecoratedGamma& g, const MoveTrace& trace);

}  // namespace ginv
