#include "presentation.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace fillings {

int Presentation::max_relator_length() const {
  int b = 0;
  for (const Word& r : relators) b = std::max(b, r.size());
  return b;
}

RelatorClosure RelatorClosure::of(const Presentation& p) {
  RelatorClosure c;
  for (const Word& r : p.relators) {
    if (r.empty()) fail(ErrorCode::Parse, "empty relator");
    for (const Word& w : cyclic_conjugates(r)) c.set_.insert(w);
    for (const Word& w : cyclic_conjugates(invert(r))) c.set_.insert(w);
  }
  c.words_.assign(c.set_.begin(), c.set_.end());
  std::sort(c.words_.begin(), c.words_.end());
  c.by_first_.resize(static_cast<size_t>(2 * p.alphabet.size()));
  for (int i = 0; i < static_cast<int>(c.words_.size()); ++i) {
    Letter x = c.words_[static_cast<size_t>(i)][0];
    size_t slot = static_cast<size_t>(2 * (letter_index(x) - 1) + (x < 0 ? 1 : 0));
    c.by_first_[slot].push_back(i);
  }
  return c;
}

const std::vector<int>& RelatorClosure::starting_with(Letter x) const {
  size_t slot = static_cast<size_t>(2 * (letter_index(x) - 1) + (x < 0 ? 1 : 0));
  if (slot >= by_first_.size()) return none_;
  return by_first_[slot];
}

Presentation fatten(const Presentation& p) {
  for (int i = 1; i <= p.alphabet.size(); ++i)
    if (p.alphabet.symbol(i) == 'z')
      fail(ErrorCode::SymbolCollision, "presentation already has a generator 'z'");
  std::string symbols;
  for (int i = 1; i <= p.alphabet.size(); ++i) symbols.push_back(p.alphabet.symbol(i));
  symbols.push_back('z');
  Presentation q;
  q.alphabet = Alphabet(symbols);
  q.name = p.name.empty() ? "" : p.name + "+fat";
  // Old letters keep their codes; z is the new last generator.
  Letter z = static_cast<Letter>(q.alphabet.size());
  for (const Word& r : p.relators) q.relators.push_back(r);
  Word wz = letters({z});
  q.relators.push_back(wz);
  q.relators.push_back(power(wz, 2));
  q.relators.push_back(power(wz, 3));
  q.relators.push_back(concat(wz, invert(wz)));
  q.relators.push_back(concat(power(wz, 2), invert(wz)));
  for (Letter x = 1; x <= static_cast<Letter>(p.alphabet.size()); ++x)
    q.relators.push_back(commutator(wz, letters({x})));
  return q;
}

namespace {

bool parse_int_suffix(const std::string& s, size_t from, int& out) {
  if (from >= s.size()) return false;
  int v = 0;
  for (size_t i = from; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    v = v * 10 + (s[i] - '0');
    if (v > 26) return false;
  }
  out = v;
  return v >= 1;
}

Presentation make_free(int m) {
  Presentation p;
  p.alphabet = Alphabet::first_n(m);
  p.name = "f" + std::to_string(m);
  return p;
}

Presentation make_zm(int m) {
  Presentation p;
  p.alphabet = Alphabet::first_n(m);
  p.name = "z" + std::to_string(m);
  for (Letter i = 1; i <= static_cast<Letter>(m); ++i)
    for (Letter j = static_cast<Letter>(i + 1); j <= static_cast<Letter>(m); ++j)
      p.relators.push_back(commutator(letters({i}), letters({j})));
  return p;
}

Presentation make_from(const char* symbols, std::initializer_list<const char*> rels,
                       const char* name) {
  Presentation p;
  p.alphabet = Alphabet(symbols);
  p.name = name;
  for (const char* r : rels) p.relators.push_back(parse_word(p.alphabet, r));
  return p;
}

} // namespace

Presentation preset_presentation(const std::string& name) {
  int m = 0;
  if (!name.empty() && name[0] == 'f' && parse_int_suffix(name, 1, m)) return make_free(m);
  if (!name.empty() && name[0] == 'z' && parse_int_suffix(name, 1, m)) return make_zm(m);
  if (name == "bs12") return make_from("ab", {"BabAA"}, "bs12");
  if (name == "h3") return make_from("xyz", {"xyXYZ", "xzXZ", "yzYZ"}, "h3");
  if (name == "bridson") return make_from("xyst", {"xyXY", "TxtXX", "SysYY"}, "bridson");
  if (name == "bg") return make_from("ab", {"BAbaBabAA"}, "bg");
  // Generators t,u,v stand for the t, T, tau of the two-commutator family;
  // the text encoding reserves uppercase for inverses.
  if (name == "ffl") return make_from("abtuv", {"BabAA", "taTA", "vatVTA", "utUT", "vuVU"}, "ffl");
  fail(ErrorCode::UnknownPreset, "unknown preset '" + name + "'");
}

bool is_known_preset(const std::string& name) {
  try {
    preset_presentation(name);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<std::string> preset_names() {
  return {"f<m>", "z<m>", "bs12", "h3", "bridson", "bg", "ffl"};
}

Presentation parse_presentation(std::istream& in, const std::string& display_name) {
  Presentation p;
  bool have_gens = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "gens:") {
      if (have_gens) fail(ErrorCode::Parse, display_name + ": duplicate gens: line");
      std::string symbols, tok;
      while (ls >> tok) {
        if (tok.size() != 1)
          fail(ErrorCode::Parse, display_name + ":" + std::to_string(lineno) +
                                     ": generator symbols must be single characters");
        symbols += tok;
      }
      p.alphabet = Alphabet(symbols);
      have_gens = true;
    } else if (key == "rel:") {
      if (!have_gens)
        fail(ErrorCode::Parse, display_name + ":" + std::to_string(lineno) + ": rel: before gens:");
      std::string text;
      if (!(ls >> text))
        fail(ErrorCode::Parse, display_name + ":" + std::to_string(lineno) + ": missing relator");
      Word r = parse_word(p.alphabet, text);
      if (r.empty())
        fail(ErrorCode::Parse, display_name + ":" + std::to_string(lineno) + ": empty relator");
      p.relators.push_back(r);
    } else {
      fail(ErrorCode::Parse,
           display_name + ":" + std::to_string(lineno) + ": expected gens: or rel:");
    }
  }
  if (!have_gens) fail(ErrorCode::Parse, display_name + ": missing gens: line");
  return p;
}

Presentation load_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open presentation file '" + path + "'");
  return parse_presentation(in, path);
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "gens:";
  for (int i = 1; i <= p.alphabet.size(); ++i) out << ' ' << p.alphabet.symbol(i);
  out << '\n';
  for (const Word& r : p.relators) out << "rel: " << format_word(p.alphabet, r) << '\n';
  return out.str();
}

} // namespace fillings
