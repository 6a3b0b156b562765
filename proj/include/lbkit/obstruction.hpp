#pragma once

#include <stdexcept>

#include "lbkit/covers.hpp"
#include "lbkit/diagrams.hpp"

namespace lbkit {

class NotHomotopic : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The surface of a hypothetical concordance cut along the boundary of
/// B_0 x I, recorded as tangles:
///  - `inner`, the sphere at t = 0 inside B_0,
///  - `outer`, the reverse mirror of the sphere at t = 1 inside B_0,
///  - four side tangles, one per co-core disk, each with a single
///    through-arc running from the inner end (top) to the outer end
///    (bottom) and any number of closed red and blue loops.
struct ConcordanceSlice {
  ColoredTangle inner;
  ColoredTangle outer;
  ColoredTangle plus_red;
  ColoredTangle plus_blue;
  ColoredTangle minus_red;
  ColoredTangle minus_blue;
};

/// Throws ColorMismatch when the boundaries of the pieces do not agree.
void validate(const ConcordanceSlice& s);

/// A side tangle that is just its through-arc.
ColoredTangle trivial_side(Color color, int orientation);

/// Slice of the model configuration between Sigma_i and Sigma_j: lifted
/// tangles at B_0 and trivial sides.
ConcordanceSlice model_slice(int i, int j);

/// The boundary link of the slice in the 3-sphere, as a closed braid.
BicoloredLink assemble_link(const ConcordanceSlice& s);

/// The closure of a side tangle (one through-arc) in its ball.
BicoloredLink closure_of_side(const ColoredTangle& side);

/// Bicolored linking of a side closure.
int side_linking(const ColoredTangle& side);

/// Contribution of the inner and outer tangles alone: the bicolored linking
/// of the slice with every side replaced by its through-arc.
int core_linking(const ConcordanceSlice& s);

/// lk of the four side closures plus the core contribution. Equals the
/// bicolored linking of assemble_link(s).
int eq1_evaluate(const ConcordanceSlice& s);

/// The same sum from explicit side values.
int eq1_from_values(int plus_red, int plus_blue, int minus_red, int minus_blue, int core);

/// Side closures agree pairwise across the two colors.
bool claim1_check(const ConcordanceSlice& s);

/// Blue sides are the red sides with colors exchanged (deck images), up to
/// component ids.
bool tau_symmetric(const ConcordanceSlice& s);

struct ClosedCaseData {
  ConcordanceSlice slice;
  BicoloredLink c_plus;
  BicoloredLink c_minus;
  int w_r_plus = 0;
  int w_r_minus = 0;
  int w_b_plus = 0;
  int w_b_minus = 0;
};

/// lambda+ + lambda- + w + lk(C+) + lk(C-) + core, where lambda are the side
/// sums and w the total color winding.
int eq2_evaluate(const ClosedCaseData& d);

bool claim2_check(const ClosedCaseData& d);

struct ObstructionReport {
  int parity = 0;
  int equation_value = 0;
  int lk_link = 0;  // bicolored linking of the assembled link, computed directly
  bool claim1 = true;
  bool claim2 = true;
};

/// Throws NotHomotopic when i and j have different parity.
ObstructionReport obstruction_report(int i, int j, bool closed);

/// Parity of the linking equation on the model slice; 1 obstructs a
/// concordance between Sigma_i and Sigma_j.
int concordance_obstruction(int i, int j, bool closed);

}  // namespace lbkit
