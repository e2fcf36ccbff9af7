#pragma once

#include <iosfwd>
#include <string>
#include <unordered_set>
#include <vector>

#include "words.hpp"

namespace fillings {

// A finite presentation <X | R>. Relators are stored verbatim: fattened
// presentations carry words like zZ whose free content is empty, and the
// Dehn proof system needs them as written.
struct Presentation {
  Alphabet alphabet;
  std::vector<Word> relators;
  std::string name; // optional catalog tag

  // B := max relator length (0 when R is empty).
  int max_relator_length() const;
  // K := 2|X| + 1, the base of the space-time bound.
  int space_time_base() const { return 2 * alphabet.size() + 1; }
};

// All cyclic conjugates of all relators and their inverses. Closed under
// rotation and inversion; this is the move table for relator application.
class RelatorClosure {
 public:
  static RelatorClosure of(const Presentation& p);

  const std::vector<Word>& words() const { return words_; }
  bool contains(const Word& w) const { return set_.count(w) != 0; }
  // Indices of closure words whose first letter is x (empty for unused x).
  const std::vector<int>& starting_with(Letter x) const;

 private:
  std::vector<Word> words_;
  std::unordered_set<Word, WordHash> set_;
  std::vector<std::vector<int>> by_first_; // indexed by 2*(index-1) + (x<0)
  std::vector<int> none_;
};

// Adds a spurious generator z with relators z, z^2, z^3, zz^-1, z^2z^-1 and
// [z,x] for every existing generator x. Fails if 'z' is already a generator.
Presentation fatten(const Presentation& p);

// Built-in catalog: f<m>, z<m>, bs12, h3, bridson, bg, ffl.
Presentation preset_presentation(const std::string& name);
bool is_known_preset(const std::string& name);
std::vector<std::string> preset_names();

// File format: `gens: a b c` then `rel: <word>` lines; '#' starts a comment.
Presentation parse_presentation(std::istream& in, const std::string& display_name);
Presentation load_presentation_file(const std::string& path);
std::string format_presentation(const Presentation& p);

} // namespace fillings
