#pragma once

#include <memory>
#include <optional>
#include <string>

#include "dps.hpp"
#include "presentation.hpp"
#include "verdict.hpp"

namespace fillings {

// A pluggable decision procedure for "does w represent 1".
//
// Variants with an exact evaluation (exponent sums, the two matrix
// representations, free reduction) also expose a fingerprint: a canonical
// byte string per group element, used to canonicalize Cayley balls without
// quadratic oracle calls. Fingerprint equality coincides with oracle
// equality for these variants.
class WordOracle {
 public:
  enum class Kind { FreeReduction, ExponentSum, HeisenbergMatrix, BS12Matrix, DehnAlgorithm,
                    BoundedSearch };

  static WordOracle free_reduction(Presentation p);
  static WordOracle exponent_sum(Presentation p);
  static WordOracle heisenberg_matrix(Presentation p);
  static WordOracle bs12_matrix(Presentation p);
  // Caller vouches that p is a Dehn presentation.
  static WordOracle dehn_algorithm_oracle(Presentation p);
  static WordOracle bounded_search(Presentation p, SearchBudget budget);

  // Default oracle for a catalog preset (ExponentSum for z<m>, matrices for
  // h3/bs12, FreeReduction for f<m>, BoundedSearch otherwise).
  static WordOracle for_preset(const Presentation& p);
  static WordOracle by_name(const std::string& name, Presentation p, SearchBudget budget);

  Kind kind() const { return kind_; }
  const char* kind_name() const;
  const Presentation& presentation() const { return pres_; }

  // Words over a different alphabet are an error (AlphabetMismatch).
  Verdict is_trivial(const Word& w) const;

  bool has_fingerprint() const;
  std::string fingerprint(const Word& w) const;

 private:
  WordOracle(Kind k, Presentation p) : kind_(k), pres_(std::move(p)) {}
  void check_alphabet(const Word& w) const;

  Kind kind_;
  Presentation pres_;
  SearchBudget budget_{};
};

// Replay against an arbitrary notion of cell word; used to validate coarse
// filling witnesses, whose relator moves insert or delete any oracle-trivial
// word within the piece bound.
ReplayResult replay_generalized(const NullSequence& ns,
                                const std::function<bool(const Word&)>& is_cell,
                                ShiftPolicy shifts);

} // namespace fillings
