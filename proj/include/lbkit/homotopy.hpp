#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "lbkit/homology.hpp"

namespace lbkit {

class InvalidTrace : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GroupMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FingerMove {
  GroupElement element;
  friend bool operator==(const FingerMove&, const FingerMove&) = default;
};

struct WhitneyMove {
  GroupElement element;
  friend bool operator==(const WhitneyMove&, const WhitneyMove&) = default;
};

using HomotopyMove = std::variant<FingerMove, WhitneyMove>;

/// A double point curve of the track of a regular homotopy. Minima and
/// maxima are taken with respect to the time factor.
struct Cycle {
  bool crossed = false;
  GroupElement element;
  int minima = 0;
  int maxima = 0;
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Symbolic regular homotopy: the moves in order and the cycles of its track.
struct HomotopyTrace {
  AbelianGroup group;
  std::vector<HomotopyMove> moves;
  std::vector<Cycle> cycles;
  friend bool operator==(const HomotopyTrace&, const HomotopyTrace&) = default;
};

/// Parity of crossed-cycle multiplicity for every element of order 2.
struct CrossedClass {
  std::map<GroupElement, int> parity;
  bool is_zero() const;
  friend bool operator==(const CrossedClass&, const CrossedClass&) = default;
};

/// The fundamental group of every X_{p,q}.
AbelianGroup xpq_group();

HomotopyTrace empty_trace(const AbelianGroup& group);

/// The homotopy from Sigma_n to Sigma_{n+2}: one finger move and one Whitney
/// move along the generator, leaving a single crossed cycle.
HomotopyTrace rho(int n);

/// Throws GroupMismatch when the groups differ.
HomotopyTrace concat(const HomotopyTrace& a, const HomotopyTrace& b);

CrossedClass crossed_class(const HomotopyTrace& t);

/// Minima and maxima match the move counts and crossed elements have order
/// at most 2.
bool cycle_validate(const HomotopyTrace& t);

/// Both spheres admit a common dual, the homotopy is supported away from it,
/// and each order 2 element carries an even number of crossed cycles.
/// Throws InvalidTrace when cycle_validate fails.
bool lightbulb_check(const HomotopyTrace& t, bool common_dual, bool dual_disjoint_support);

/// rho(n) . rho(n+2) . ... with k factors.
HomotopyTrace rho_chain(int n, int k);

struct Relation {
  bool equivalent = false;
  bool homotopic = false;
  bool concordant = false;  // topologically
  bool isotopic = false;    // smoothly
  std::string equivalent_evidence;
  std::string homotopic_evidence;
  std::string concordant_evidence;
  std::string isotopic_evidence;
  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Relation between Sigma_i and Sigma_j in X_{p,q}.
Relation classify(int i, int j, bool closed);

}  // namespace lbkit
